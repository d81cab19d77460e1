#pragma once

#include <optional>
#include <vector>

#include "impbase/closure_system.hpp"
#include "impbase/errors.hpp"
#include "impbase/implication.hpp"

namespace impbase {

// Whether the set y is a model of the implication: the premise is not
// contained in y, or the conclusion is.
inline bool respects(ElementSet y, const Implication& imp) {
    return !imp.premise.subset_of(y) || imp.conclusion.subset_of(y);
}

// The closure system defined by a basis: closed sets are exactly the subsets
// respecting every implication. Enumerates all 2^n subsets.
ClosureSystem system_from_basis(const Basis& basis, std::size_t cap = kEnumerationCap);

// Whether the query implication holds in every model of the basis, i.e. its
// conclusion lies in the closure of its premise.
bool consequence_holds(const Basis& basis, const Implication& query);

// A Horn clause: a disjunction of negated literals plus at most one positive
// literal. Definite when the positive literal is present.
struct HornClause {
    ElementSet negatives;
    std::optional<int> positive;
};

// Turns a set of Horn clauses into a definite set: definite clauses pass
// through as implications; a non-definite clause over X becomes one
// implication X -> y for every y outside X (and nothing when X is the whole
// universe). The models of the result are the models of the input plus the
// full set.
Basis definite_completion(const std::vector<HornClause>& clauses, const Universe& universe);

} // namespace impbase
