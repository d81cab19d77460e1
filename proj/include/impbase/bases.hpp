#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "impbase/closure_system.hpp"
#include "impbase/errors.hpp"
#include "impbase/implication.hpp"
#include "impbase/structure.hpp"

namespace impbase {

// The dependence-relation basis (canonical direct unit basis): X -> y for
// every y in phi(X) \ X such that no proper subset of X already closes to
// contain y. Direct: one sweep in any order computes closures. Works for
// arbitrary systems; enumerates subsets.
Basis build_sigma_delta(const ClosureSystem& system, std::size_t cap = kEnumerationCap);

// The D-basis of a reduced system: all binary implications y -> x with
// x in phi(y) \ y, followed by X -> x for every minimal cover X of x.
// Ordered direct in any order that keeps the binary part first.
Basis build_d_basis(const ClosureSystem& system, std::size_t cap = kEnumerationCap);

// Extracts the D-basis from any direct unit basis of a reduced system by
// removing non-binary implications that do not represent minimal covers,
// deciding << through the basis's binary part only. The binary part is
// kept as given. Directness of the input is assumed, not checked.
Basis extract_d_basis(const Basis& direct_unit_basis);

// Whether every premise-singleton implication precedes every wider one.
bool order_is_valid_d(const Basis& basis);

// Replaces the binary part by its cover pairs only, ordered descending along
// a linear extension (all implications from the top element first, and so
// on down). Ordered single-element closures are unchanged. The non-binary
// part follows, untouched.
Basis optimize_binary(const Basis& basis, const ClosureSystem& system);

// A run list of implications, repetitions allowed, evaluated exactly like
// ordered iteration.
struct OrderedSequence {
    std::vector<Implication> steps;
};

// Shrinks a D-basis by dropping A -> x when A -> y and y -> x are present
// (and binary z -> x when z -> y and y -> x are), and builds the
// concatenated run list: ordered cover pairs, the surviving non-binary
// implications, then the replacement binary implications replayed in
// descending order. The run list computes closures in a single sweep and is
// never longer than the D-basis.
std::pair<Basis, OrderedSequence> build_d_plus(const Basis& d_basis, const ClosureSystem& system);

// A witness cycle in the relation of the cover table, or nothing when its
// digraph is acyclic.
std::optional<std::vector<int>> d_cycles(const CoverTable& table);

struct RankTable {
    std::vector<std::size_t> d_rank; // per element
};

// Stratifies elements: rank 0 for elements with no minimal cover, then the
// least k such that every minimal cover refines to a minimal cover inside
// the ranked part. Total exactly when the system has no D-cycles; throws
// DCycleError with a witness otherwise.
RankTable d_ranks(const ClosureSystem& system, const Basis& d_basis);

// The E-basis of a system without D-cycles: the binary part plus the covers
// with containment-minimal closures (M*), ordered binary-first and then by
// ascending maximal premise rank. A basis exactly for D-cycle-free systems;
// pass enforce_acyclic = false to build the implication set anyway.
Basis build_e_basis(const ClosureSystem& system, bool enforce_acyclic = true,
                    std::size_t cap = kEnumerationCap);

// The canonical basis: X -> phi(X) \ X for every quasi-closed X that is
// containment-minimal among quasi-closed sets with the same closure. No
// basis of the system has fewer implications. Enumerates subsets.
Basis build_dg_canonical(const ClosureSystem& system, std::size_t cap = kEnumerationCap);

// Splits every X -> Y into X -> y per element of Y, preserving order.
Basis unit_expansion(const Basis& basis);

// Merges implications with equal premises, keeping first-occurrence order.
Basis aggregate(const Basis& basis);

// Whether a single ordered sweep equals the closure operator on every
// subset. On failure *witness, when given, receives a failing input.
bool is_ordered_direct(const Basis& basis, const ClosureSystem& system,
                       ElementSet* witness = nullptr, std::size_t cap = kEnumerationCap);

// Searches for a permutation of the basis that makes it ordered direct, by
// backtracking over prefixes. A prefix dies when some subset's partial
// closure can no longer reach its target even if every remaining
// implication were applied to a fixpoint. Returns the permutation (indices
// into the input) or nothing when no order works.
std::optional<std::vector<std::size_t>> find_ordered_direct_ordering(
    const Basis& basis, const ClosureSystem& system,
    std::size_t search_cap = kOrderingSearchCap, std::size_t cap = kEnumerationCap);

// Indices of implications entailed by the rest of the basis. Diagnostic
// only: removing them can break ordered directness.
std::vector<std::size_t> redundant_implications(const Basis& basis);

} // namespace impbase
