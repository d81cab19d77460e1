#include "impbase/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "impbase/reduction.hpp"

namespace impbase {

namespace {

// Union of singleton closures over the members of y; << tests reduce to
// containment in this set.
ElementSet singleton_closure_union(const ClosureSystem& system, ElementSet y) {
    ElementSet out;
    for (int e : y) out |= system.singleton_closure(e);
    return out;
}

} // namespace

bool ll_refines(const ClosureSystem& system, ElementSet x, ElementSet y) {
    return x.subset_of(singleton_closure_union(system, y));
}

ElementSet class_minimum(const ClosureSystem& system, ElementSet x) {
    if (!is_reduced(system))
        throw NotReducedError("class_minimum requires a reduced system (the minimum may not be unique)");
    // Keep the elements maximal under the singleton-closure order: anything
    // inside another member's closure is redundant in its class.
    ElementSet out = x;
    for (int e : x) {
        for (int f : x) {
            if (e != f && ElementSet::single(e).subset_of(system.singleton_closure(f)) &&
                system.singleton_closure(e) != system.singleton_closure(f)) {
                out.erase(e);
                break;
            }
        }
    }
    return out;
}

std::vector<ElementSet> covers_of(const ClosureSystem& system, int x, std::size_t cap) {
    const std::size_t n = system.universe_size();
    if (n > cap) throw CapExceededError(n, cap);

    std::vector<ElementSet> out;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        ElementSet candidate = ElementSet::from_mask(mask);
        if (candidate.contains(x)) continue;
        if (!system.closure(candidate).contains(x)) continue;
        if (singleton_closure_union(system, candidate).contains(x)) continue;
        out.push_back(candidate);
    }
    return out;
}

namespace {

// Covers of x with no cover properly contained in them. Iterating masks in
// ascending cardinality lets the containment filter run against kept sets only.
std::vector<ElementSet> containment_minimal_covers(const ClosureSystem& system, int x,
                                                   std::size_t cap) {
    const std::size_t n = system.universe_size();
    if (n > cap) throw CapExceededError(n, cap);

    std::vector<std::uint64_t> masks;
    masks.reserve(std::size_t{1} << n);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m < limit; ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    std::vector<ElementSet> kept;
    for (std::uint64_t mask : masks) {
        ElementSet candidate = ElementSet::from_mask(mask);
        if (candidate.contains(x)) continue;
        bool dominated = false;
        for (ElementSet k : kept) {
            if (k.subset_of(candidate)) { dominated = true; break; }
        }
        if (dominated) continue;
        if (!system.closure(candidate).contains(x)) continue;
        if (singleton_closure_union(system, candidate).contains(x)) continue;
        kept.push_back(candidate);
    }
    return kept;
}

} // namespace

std::vector<ElementSet> minimal_covers(const ClosureSystem& system, int x, std::size_t cap) {
    // Any cover with Z << Y contains a containment-minimal cover Z* with
    // Z* << Y, so testing the minimality condition against the
    // containment-minimal covers decides it for all covers.
    std::vector<ElementSet> candidates = containment_minimal_covers(system, x, cap);
    std::vector<ElementSet> out;
    for (ElementSet y : candidates) {
        bool minimal = true;
        for (ElementSet z : candidates) {
            if (ll_refines(system, z, y) && !y.subset_of(z)) { minimal = false; break; }
        }
        if (minimal) out.push_back(y);
    }
    return out;
}

bool CoverTable::d_related(int x, int y) const {
    return std::find(d_pairs.begin(), d_pairs.end(), std::make_pair(x, y)) != d_pairs.end();
}

CoverTable build_cover_table(const ClosureSystem& system, std::size_t cap) {
    const std::size_t n = system.universe_size();
    CoverTable table;
    table.minimal.resize(n);
    table.minimized.resize(n);

    for (std::size_t i = 0; i < n; ++i) {
        int x = static_cast<int>(i);
        table.minimal[i] = minimal_covers(system, x, cap);

        // M*(x): members whose closure is containment-minimal among the
        // closures of M(x).
        std::vector<ElementSet> closures;
        closures.reserve(table.minimal[i].size());
        for (ElementSet y : table.minimal[i]) closures.push_back(system.closure(y));
        for (std::size_t a = 0; a < table.minimal[i].size(); ++a) {
            bool minimal = true;
            for (std::size_t b = 0; b < table.minimal[i].size(); ++b) {
                if (a != b && closures[b].subset_of(closures[a]) && closures[b] != closures[a]) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) table.minimized[i].push_back(table.minimal[i][a]);
        }

        ElementSet related;
        for (ElementSet y : table.minimal[i]) related |= y;
        for (int y : related) table.d_pairs.emplace_back(x, y);
    }
    return table;
}

bool ElementPoset::less(int a, int b) const {
    return std::find(order.begin(), order.end(), std::make_pair(b, a)) != order.end();
}

ElementPoset element_poset(const ClosureSystem& system) {
    const std::size_t n = system.universe_size();
    ElementPoset poset;

    std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
            if (s == t) continue;
            ElementSet cs = system.singleton_closure(static_cast<int>(s));
            ElementSet ct = system.singleton_closure(static_cast<int>(t));
            if (cs.subset_of(ct) && cs != ct) {
                below[s][t] = true;
                poset.order.emplace_back(static_cast<int>(t), static_cast<int>(s));
            }
        }
    }

    // Transitive reduction: keep t > s with nothing strictly between.
    for (auto [t, s] : poset.order) {
        bool direct = true;
        for (std::size_t z = 0; z < n; ++z) {
            if (below[static_cast<std::size_t>(s)][z] && below[z][static_cast<std::size_t>(t)]) {
                direct = false;
                break;
            }
        }
        if (direct) poset.covers.emplace_back(t, s);
    }

    // Smallest-first topological order, ties by ascending element index.
    std::vector<int> pending_below(n, 0);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
            if (below[s][t]) ++pending_below[t];
    std::vector<bool> used(n, false);
    while (poset.linear_extension.size() < n) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!used[i] && pending_below[i] == 0) {
                used[i] = true;
                poset.linear_extension.push_back(static_cast<int>(i));
                for (std::size_t t = 0; t < n; ++t)
                    if (below[i][t]) --pending_below[t];
                break;
            }
        }
    }

    std::sort(poset.order.begin(), poset.order.end());
    std::sort(poset.covers.begin(), poset.covers.end());
    return poset;
}

bool is_quasi_closed(const ClosureSystem& system, ElementSet x) {
    if (system.is_closed(x)) return false;
    for (ElementSet z : system.closed_family()) {
        if (x.subset_of(z)) continue;
        if (!system.is_closed(z & x)) return false;
    }
    return true;
}

ElementSet extreme_points(const ClosureSystem& system, ElementSet closed_x) {
    if (!system.is_closed(closed_x))
        throw std::invalid_argument("extreme_points expects a closed set");
    ElementSet out;
    for (int e : closed_x) {
        if (!system.closure(closed_x - ElementSet::single(e)).contains(e)) out.insert(e);
    }
    return out;
}

bool is_convex_geometry(const ClosureSystem& system) {
    const std::size_t n = system.universe_size();
    for (ElementSet c : system.closed_family()) {
        ElementSet outside = system.universe().full_set() - c;
        if (outside.count() < 2) continue;
        // phi(C + e) for each e outside C.
        std::vector<ElementSet> extended(n);
        for (int e : outside) extended[static_cast<std::size_t>(e)] =
            system.closure(c | ElementSet::single(e));
        for (int x : outside) {
            for (int y : outside) {
                if (x >= y) continue;
                if (extended[static_cast<std::size_t>(y)].contains(x) &&
                    extended[static_cast<std::size_t>(x)].contains(y))
                    return false;
            }
        }
    }
    return true;
}

} // namespace impbase
