#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "impbase/element_set.hpp"

namespace impbase {

// An implication X -> Y over a fixed universe. The conclusion is kept
// disjoint from the premise: constructing X -> Y stores X -> Y \ X, so
// trivial implications collapse to an empty conclusion.
struct Implication {
    ElementSet premise;
    ElementSet conclusion;

    Implication() = default;
    Implication(ElementSet p, ElementSet c) : premise(p), conclusion(c - p) {}

    // Both sides singletons.
    bool binary() const { return premise.count() == 1 && conclusion.count() == 1; }

    bool operator==(const Implication&) const = default;
};

enum class BasisForm { unit, aggregated };

// An ordered list of implications over a universe. The list order is
// semantically significant: it is the order followed by ordered iteration.
struct Basis {
    Universe universe;
    std::vector<Implication> implications;
    BasisForm form = BasisForm::unit;

    Basis() = default;
    Basis(Universe u, std::vector<Implication> imps, BasisForm f = BasisForm::unit)
        : universe(std::move(u)), implications(std::move(imps)), form(f) {}

    std::size_t size() const { return implications.size(); }
    bool empty() const { return implications.empty(); }

    std::span<const Implication> span() const { return implications; }
};

// s = sum of |X|+|Y| over all implications; t = like s but counting each
// distinct set once per basis; m = implication count.
struct BasisSize {
    std::size_t s = 0;
    std::size_t t = 0;
    std::size_t m = 0;
};

BasisSize basis_size(const Basis& basis);

} // namespace impbase
