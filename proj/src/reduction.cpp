#include "impbase/reduction.hpp"

#include <map>
#include <numeric>

#include "impbase/errors.hpp"

namespace impbase {

namespace {

// Project every family member onto the kept elements and re-index the bits
// densely. The image of an intersection-closed family is intersection-closed.
ClosureSystem project_system(const ClosureSystem& system, ElementSet kept) {
    std::vector<std::string> labels;
    std::vector<int> new_index(system.universe_size(), -1);
    for (int e : kept) {
        new_index[static_cast<std::size_t>(e)] = static_cast<int>(labels.size());
        labels.push_back(system.universe().label(e));
    }
    std::vector<ElementSet> family;
    family.reserve(system.closed_family().size());
    for (ElementSet c : system.closed_family()) {
        ElementSet image;
        for (int e : c & kept) image.insert(new_index[static_cast<std::size_t>(e)]);
        family.push_back(image);
    }
    return ClosureSystem(Universe(labels), std::move(family));
}

} // namespace

ReductionMap::ReductionMap(Universe original, ElementSet removed_zero,
                           std::vector<int> representative, ElementSet dropped_nonstandard)
    : original_(std::move(original)),
      removed_zero_(removed_zero),
      representative_(std::move(representative)),
      dropped_nonstandard_(dropped_nonstandard) {
    new_index_.assign(original_.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < original_.size(); ++i) {
        int rep = representative_[i];
        if (rep == static_cast<int>(i) && !dropped_nonstandard_.contains(static_cast<int>(i))) {
            kept_.insert(static_cast<int>(i));
            new_index_[i] = next++;
        }
    }
}

ReductionMap ReductionMap::identity(const Universe& original) {
    std::vector<int> rep(original.size());
    std::iota(rep.begin(), rep.end(), 0);
    return ReductionMap(original, {}, std::move(rep), {});
}

bool ReductionMap::is_identity() const {
    return removed_zero_.empty() && dropped_nonstandard_.empty() &&
           kept_ == original_.full_set();
}

ElementSet ReductionMap::project(ElementSet original_set) const {
    ElementSet out;
    for (int e : original_set) {
        int rep = representative_[static_cast<std::size_t>(e)];
        if (rep < 0) continue;
        if (dropped_nonstandard_.contains(rep)) continue;
        out.insert(new_index_[static_cast<std::size_t>(rep)]);
    }
    return out;
}

bool is_reduced(const ClosureSystem& system) {
    const std::size_t n = system.universe_size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (system.singleton_closure(static_cast<int>(i)) ==
                system.singleton_closure(static_cast<int>(j)))
                return false;
    return true;
}

bool is_standard(const ClosureSystem& system) {
    if (!system.empty_closure().empty()) return false;
    for (std::size_t i = 0; i < system.universe_size(); ++i) {
        ElementSet rest = system.singleton_closure(static_cast<int>(i)) -
                          ElementSet::single(static_cast<int>(i));
        if (!system.is_closed(rest)) return false;
    }
    return true;
}

std::pair<ClosureSystem, ReductionMap> reduce_system(const ClosureSystem& system) {
    const std::size_t n = system.universe_size();
    const ElementSet zero = system.empty_closure();

    // Group the remaining elements by singleton closure with the zero part
    // stripped; the lowest index of each group represents it.
    std::map<std::uint64_t, int> rep_of_closure;
    std::vector<int> representative(n, -1);
    ElementSet kept;
    for (std::size_t i = 0; i < n; ++i) {
        int e = static_cast<int>(i);
        if (zero.contains(e)) continue;
        ElementSet tau = system.singleton_closure(e) - zero;
        auto [it, fresh] = rep_of_closure.emplace(tau.mask(), e);
        representative[i] = it->second;
        if (fresh) kept.insert(e);
    }

    ReductionMap map(system.universe(), zero, std::move(representative), {});
    if (map.is_identity()) return {system, std::move(map)};
    return {project_system(system, kept), std::move(map)};
}

std::pair<ClosureSystem, ReductionMap> standardize_system(const ClosureSystem& system) {
    if (!is_reduced(system))
        throw NotReducedError("standardize_system requires a reduced system");

    // Removing one element can break property (2) for another, so iterate
    // until every surviving singleton closure minus its element is closed.
    ClosureSystem current = system;
    std::vector<int> to_original(system.universe_size());
    std::iota(to_original.begin(), to_original.end(), 0);
    ElementSet dropped;

    for (;;) {
        ElementSet keep;
        for (std::size_t i = 0; i < current.universe_size(); ++i) {
            int e = static_cast<int>(i);
            ElementSet rest = current.singleton_closure(e) - ElementSet::single(e);
            if (current.is_closed(rest)) keep.insert(e);
        }
        if (keep == current.universe().full_set()) break;

        std::vector<int> next_to_original;
        for (int e : keep) next_to_original.push_back(to_original[static_cast<std::size_t>(e)]);
        for (int e : current.universe().full_set() - keep)
            dropped.insert(to_original[static_cast<std::size_t>(e)]);

        current = project_system(current, keep);
        to_original = std::move(next_to_original);
    }

    std::vector<int> representative(system.universe_size());
    std::iota(representative.begin(), representative.end(), 0);
    ReductionMap map(system.universe(), {}, std::move(representative), dropped);
    if (map.is_identity()) return {system, std::move(map)};
    return {std::move(current), std::move(map)};
}

namespace detail {

void require_reduced(const ClosureSystem& system, const char* operation) {
    if (!is_reduced(system))
        throw NotReducedError(std::string(operation) +
                              " requires a reduced system (two elements share a singleton closure)");
    if (!system.empty_closure().empty())
        throw NotReducedError(std::string(operation) +
                              " requires an empty zero closure (run reduce_system first)");
}

} // namespace detail

} // namespace impbase
