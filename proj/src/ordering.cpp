#include "impbase/bases.hpp"

#include <algorithm>

#include "impbase/algorithms.hpp"

namespace impbase {

namespace {

// Closure of every subset, indexed by mask.
std::vector<std::uint64_t> closure_table(const ClosureSystem& system, std::size_t cap) {
    const std::size_t n = system.universe_size();
    if (n > cap) throw CapExceededError(n, cap);
    std::vector<std::uint64_t> phi(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < phi.size(); ++mask)
        phi[mask] = system.closure(ElementSet::from_mask(mask)).mask();
    return phi;
}

} // namespace

bool is_ordered_direct(const Basis& basis, const ClosureSystem& system,
                       ElementSet* witness, std::size_t cap) {
    std::vector<std::uint64_t> phi = closure_table(system, cap);
    for (std::uint64_t mask = 0; mask < phi.size(); ++mask) {
        ElementSet x = ElementSet::from_mask(mask);
        if (ordered_iteration(basis, x).closure.mask() != phi[mask]) {
            if (witness != nullptr) *witness = x;
            return false;
        }
    }
    return true;
}

namespace {

struct OrderingSearch {
    std::vector<Implication> imps;
    std::vector<std::uint64_t> targets;   // closure per input mask
    std::vector<std::size_t> chosen;
    std::size_t m = 0;

    // One partial-closure slot per input subset, updated along the chosen
    // prefix. A prefix survives only if saturating every slot with all the
    // unchosen implications still reaches its target.
    bool feasible(const std::vector<std::uint64_t>& partial, std::uint64_t unused_mask) const {
        std::vector<const Implication*> rest;
        rest.reserve(m);
        for (std::size_t j = 0; j < m; ++j)
            if ((unused_mask >> j) & 1) rest.push_back(&imps[j]);

        for (std::uint64_t x = 0; x < partial.size(); ++x) {
            std::uint64_t cur = partial[x];
            if (cur == targets[x]) continue;
            bool grew = true;
            while (grew && cur != targets[x]) {
                grew = false;
                for (const Implication* imp : rest) {
                    if ((imp->premise.mask() & ~cur) == 0 &&
                        (imp->conclusion.mask() & ~cur) != 0) {
                        cur |= imp->conclusion.mask();
                        grew = true;
                    }
                }
            }
            if (cur != targets[x]) return false;
        }
        return true;
    }

    bool search(const std::vector<std::uint64_t>& partial, std::uint64_t unused_mask) {
        if (unused_mask == 0) {
            for (std::uint64_t x = 0; x < partial.size(); ++x)
                if (partial[x] != targets[x]) return false;
            return true;
        }
        if (!feasible(partial, unused_mask)) return false;

        for (std::size_t j = 0; j < m; ++j) {
            if (!((unused_mask >> j) & 1)) continue;
            std::vector<std::uint64_t> next(partial.size());
            for (std::uint64_t x = 0; x < partial.size(); ++x) {
                std::uint64_t cur = partial[x];
                if ((imps[j].premise.mask() & ~cur) == 0) cur |= imps[j].conclusion.mask();
                next[x] = cur;
            }
            chosen.push_back(j);
            if (search(next, unused_mask & ~(std::uint64_t{1} << j))) return true;
            chosen.pop_back();
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<std::size_t>> find_ordered_direct_ordering(
    const Basis& basis, const ClosureSystem& system,
    std::size_t search_cap, std::size_t cap) {
    if (basis.size() > search_cap) throw SearchCapError(basis.size(), search_cap);

    OrderingSearch s;
    s.imps = basis.implications;
    s.m = basis.size();
    s.targets = closure_table(system, cap);

    std::vector<std::uint64_t> partial(s.targets.size());
    for (std::uint64_t x = 0; x < partial.size(); ++x) partial[x] = x;

    std::uint64_t all = s.m == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << s.m) - 1);
    if (!s.search(partial, all)) return std::nullopt;
    return s.chosen;
}

} // namespace impbase
