#pragma once

#include <utility>
#include <vector>

#include "impbase/closure_system.hpp"
#include "impbase/errors.hpp"

namespace impbase {

// X << Y: every element of X lies in the singleton closure of some element
// of Y. A quasi-order refining containment.
bool ll_refines(const ClosureSystem& system, ElementSet x, ElementSet y);

// The containment-minimum member of the <<-equivalence class of x: the
// elements of x maximal under the singleton-closure order. Unique only in
// reduced systems; throws NotReducedError otherwise.
ElementSet class_minimum(const ClosureSystem& system, ElementSet x);

// All covers of x: sets X with x in phi(X) but in no single member's
// closure. Enumerates all 2^n subsets.
std::vector<ElementSet> covers_of(const ClosureSystem& system, int x,
                                  std::size_t cap = kEnumerationCap);

// M(x): covers minimal in the << quasi-order and containment-minimal within
// their equivalence class (equivalently, for every cover Z, Z << Y implies
// Y subset of Z).
std::vector<ElementSet> minimal_covers(const ClosureSystem& system, int x,
                                       std::size_t cap = kEnumerationCap);

// Minimal covers, the subfamily with containment-minimal closures, and the
// induced relation on elements.
struct CoverTable {
    std::vector<std::vector<ElementSet>> minimal;   // M(x) per element
    std::vector<std::vector<ElementSet>> minimized; // M*(x) per element
    std::vector<std::pair<int, int>> d_pairs;       // (x, y): y occurs in some member of M(x)

    bool d_related(int x, int y) const;
};

CoverTable build_cover_table(const ClosureSystem& system, std::size_t cap = kEnumerationCap);

// The order on elements given by containment of singleton closures. Pairs
// are written (greater, lesser); covers is the transitive reduction; the
// linear extension lists elements smallest-first, ties by ascending index.
struct ElementPoset {
    std::vector<std::pair<int, int>> order;
    std::vector<std::pair<int, int>> covers;
    std::vector<int> linear_extension;

    bool less(int a, int b) const; // a strictly below b
};

ElementPoset element_poset(const ClosureSystem& system);

// X is strictly below its closure and meets every closed set in a closed
// set unless contained in it.
bool is_quasi_closed(const ClosureSystem& system, ElementSet x);

// Ex(X) = members of a closed X not in the closure of X minus themselves.
ElementSet extreme_points(const ClosureSystem& system, ElementSet closed_x);

// Anti-exchange: x in phi(C + y) with x outside C forbids y in phi(C + x),
// for all closed C and distinct x, y.
bool is_convex_geometry(const ClosureSystem& system);

} // namespace impbase
