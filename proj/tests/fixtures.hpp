#pragma once

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "impbase/closure_system.hpp"
#include "impbase/implication.hpp"

// Closure systems used across the test suites, plus small independent
// oracles the expected values were computed with.

namespace fixtures {

using impbase::Basis;
using impbase::BasisForm;
using impbase::ClosureSystem;
using impbase::ElementSet;
using impbase::Implication;
using impbase::Universe;

inline ElementSet parse_set(const Universe& u, const std::string& text) {
    std::istringstream iss(text);
    std::string tok;
    ElementSet out;
    while (iss >> tok) {
        if (tok == "{}") continue;
        auto idx = u.index_of(tok);
        if (!idx) throw std::runtime_error("fixture label '" + tok + "' missing");
        out.insert(*idx);
    }
    return out;
}

inline Implication parse_imp(const Universe& u, const std::string& lhs, const std::string& rhs) {
    return Implication(parse_set(u, lhs), parse_set(u, rhs));
}

inline ClosureSystem make_system(const Universe& u, const std::vector<std::string>& sets) {
    std::vector<ElementSet> family;
    for (const std::string& s : sets) family.push_back(parse_set(u, s));
    return ClosureSystem(u, std::move(family));
}

inline Basis make_basis(const Universe& u,
                        const std::vector<std::pair<std::string, std::string>>& imps,
                        BasisForm form = BasisForm::unit) {
    std::vector<Implication> out;
    for (const auto& [lhs, rhs] : imps) out.push_back(parse_imp(u, lhs, rhs));
    return Basis(u, std::move(out), form);
}

// The standard system of the pentagon lattice: three elements, b above a.
inline ClosureSystem pentagon() {
    Universe u({"a", "b", "c"});
    return make_system(u, {"{}", "a", "c", "a b", "a b c"});
}

// The same lattice represented on four elements; d spoils standardness.
inline ClosureSystem pentagon4() {
    Universe u({"a", "b", "c", "d"});
    return make_system(u, {"{}", "a", "c", "a b", "a b c d"});
}

// Five-element system whose dependence-relation basis has 14 implications
// and whose D-basis drops exactly four of them.
inline ClosureSystem sample5() {
    Universe u = Universe::numbered(5);
    return make_system(u, {"{}", "1", "2", "3", "4", "1 2", "1 3", "2 3 4", "4 5", "1 2 3 4 5"});
}

// Six-element system without D-cycles; the family lacks the empty set and
// relies on completion. Elements 1,2,4 sit at rank 0; 3,5 at 1; 6 at 2.
inline ClosureSystem acyclic6() {
    Universe u = Universe::numbered(6);
    return make_system(u, {"1", "1 2", "1 3", "4", "4 5", "1 3 4", "1 3 6", "1 2 3 6", "1 3 4 6",
                           "1 3 4 5 6", "1 2 3 4 5 6"});
}

// Four-element system defined by a basis with the D-cycle 2 D 3 D 2.
inline Basis cyclic4_basis() {
    Universe u = Universe::numbered(4);
    return make_basis(u, {{"1 3", "2"}, {"2 4", "3"}, {"1 4", "2"}, {"1 4", "3"}});
}

// Six-element system whose canonical basis admits no ordered direct
// permutation in aggregated form but does after unit expansion.
inline ClosureSystem hard6a() {
    Universe u = Universe::numbered(6);
    return make_system(u, {"{}", "1", "2", "3", "4", "6", "3 6", "2 6", "1 3", "2 4", "1 4",
                           "3 5", "2 3", "1 6", "1 3 5", "1 3 6", "2 3 6", "1 2 4 6", "2 3 4 5",
                           "1 2 3 4 5 6"});
}

// Six-element system whose canonical basis cannot be ordered in either form.
inline ClosureSystem hard6b() {
    Universe u = Universe::numbered(6);
    return make_system(u, {"{}", "1", "2", "3", "5", "6", "1 2", "1 3", "1 4", "1 6", "2 3",
                           "1 2 3", "1 2 4", "1 3 5", "2 5 6", "1 3 4 6", "1 2 3 4 5 6"});
}

// Five points in the plane: triangle a, b, c with d on the side ab and x
// inside both triangle abc and triangle dbc. Closed sets are the relatively
// convex subsets, written out by the two hull rules.
inline ClosureSystem planar5() {
    Universe u({"a", "b", "c", "d", "x"});
    std::vector<ElementSet> family;
    ElementSet d = parse_set(u, "d"), x = parse_set(u, "x");
    ElementSet ab = parse_set(u, "a b"), abc = parse_set(u, "a b c"), dbc = parse_set(u, "b c d");
    for (std::uint64_t mask = 0; mask < 32; ++mask) {
        ElementSet s = ElementSet::from_mask(mask);
        if (ab.subset_of(s) && !d.subset_of(s)) continue;
        if (abc.subset_of(s) && !x.subset_of(s)) continue;
        if (dbc.subset_of(s) && !x.subset_of(s)) continue;
        family.push_back(s);
    }
    return ClosureSystem(u, std::move(family));
}

// Smallest closed superset found by scanning for the popcount-minimal
// family member containing x, verified unique; an intersection-free route
// to the closure operator.
inline ElementSet oracle_phi(const ClosureSystem& system, ElementSet x) {
    const ElementSet* best = nullptr;
    for (const ElementSet& c : system.closed_family()) {
        if (!x.subset_of(c)) continue;
        if (best == nullptr || c.count() < best->count()) best = &c;
    }
    if (best == nullptr) throw std::runtime_error("no closed superset");
    for (const ElementSet& c : system.closed_family()) {
        if (x.subset_of(c) && !best->subset_of(c))
            throw std::runtime_error("minimal closed superset is not unique");
    }
    return *best;
}

// Saturation under a basis computed by repeated from-scratch sweeps against
// the previous round's set; independent of the library's traversals.
inline ElementSet oracle_saturate(const Basis& basis, ElementSet x) {
    ElementSet cur = x;
    for (;;) {
        ElementSet next = cur;
        for (const Implication& imp : basis.implications)
            if (imp.premise.subset_of(cur)) next |= imp.conclusion;
        if (next == cur) return cur;
        cur = next;
    }
}

// Multiset equality of implication lists.
inline bool same_implications(const Basis& lhs, const Basis& rhs) {
    auto key = [](const Implication& imp) {
        return std::make_pair(imp.premise.mask(), imp.conclusion.mask());
    };
    std::vector<std::pair<std::uint64_t, std::uint64_t>> a, b;
    for (const Implication& imp : lhs.implications) a.push_back(key(imp));
    for (const Implication& imp : rhs.implications) b.push_back(key(imp));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

// Random intersection-closed families for property tests, mirroring the
// measurement generator but universe-size agnostic.
inline ClosureSystem random_system(std::size_t n, std::mt19937_64& rng, int min_subsets = 3,
                                   int max_subsets = 8) {
    std::vector<ElementSet> family;
    family.push_back({});
    family.push_back(ElementSet::full(n));
    std::uniform_int_distribution<int> count_dist(min_subsets, max_subsets);
    std::uniform_int_distribution<std::uint64_t> mask_dist(0, ElementSet::full(n).mask());
    int k = count_dist(rng);
    for (int i = 0; i < k; ++i) {
        ElementSet s;
        do {
            s = ElementSet::from_mask(mask_dist(rng));
        } while (s.empty() || s == ElementSet::full(n));
        family.push_back(s);
    }
    return ClosureSystem(Universe::numbered(n), std::move(family));
}

} // namespace fixtures
