#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "impbase/implication.hpp"

namespace impbase {

// All checks counters count one unit per implication attended, i.e. one
// premise-containment test (for forward chaining: one countdown decrement).

struct FolkloreResult {
    ElementSet closure;
    std::size_t passes = 0;
    std::size_t checks = 0;
};

// Repeated full passes over the list, growing the working set in place,
// until a pass adds nothing. The final confirming pass is counted, so any
// run that grows the input takes at least two passes.
FolkloreResult folklore_closure(const Basis& basis, ElementSet start);

struct SweepResult {
    ElementSet closure;
    std::size_t checks = 0;
};

// One pass attending each implication once, in list order, against the
// growing set (the ordered iteration rho). checks always equals the list
// length. Equals the closure operator exactly when the list is an ordered
// direct basis in this order.
SweepResult ordered_iteration(std::span<const Implication> steps, ElementSet start);
SweepResult ordered_iteration(const Basis& basis, ElementSet start);

// One unordered sweep applied against the untouched input (the map pi):
// start together with every conclusion whose premise lies inside start.
ElementSet pi_iteration(std::span<const Implication> steps, ElementSet start);

// Ordered iteration repeated until stable; equals the closure under the
// basis regardless of order.
ElementSet ordered_fixpoint(const Basis& basis, ElementSet start);

// Forward chaining working state: per-element clause lists, per-implication
// countdowns and consequents. Clause lists and consequents depend only on
// the basis, so a state can be reused across inputs; close() re-initializes
// only the countdowns and the working set.
class ForwardChainingState {
public:
    explicit ForwardChainingState(const Basis& basis);

    SweepResult close(ElementSet start);

private:
    std::vector<std::vector<int>> clause_list_; // element -> implications using it
    std::vector<ElementSet> consequent_;
    std::vector<int> premise_size_;
    std::vector<int> propositions_;
};

// Closure by forward chaining; O(s) work after setup. Pass a state built
// from the same basis to skip the setup on repeated runs.
SweepResult forward_chaining_closure(const Basis& basis, ElementSet start,
                                     ForwardChainingState* reuse = nullptr);

// Closure by repeatedly partitioning the pending implications into
// applicable and not, firing all applicable ones at once.
SweepResult wild_closure(const Basis& basis, ElementSet start);

} // namespace impbase
