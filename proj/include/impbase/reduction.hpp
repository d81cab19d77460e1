#pragma once

#include <utility>
#include <vector>

#include "impbase/closure_system.hpp"

namespace impbase {

// Records how a system was shrunk: the closure of the empty set that was
// stripped, the representative chosen for each surviving equivalence class
// of elements with equal singleton closure, and the elements removed by
// standardization. representative(i) is -1 for stripped elements and
// idempotent elsewhere. Indices refer to the original universe.
class ReductionMap {
public:
    ReductionMap(Universe original, ElementSet removed_zero,
                 std::vector<int> representative, ElementSet dropped_nonstandard);

    static ReductionMap identity(const Universe& original);

    const Universe& original() const { return original_; }
    ElementSet removed_zero() const { return removed_zero_; }
    ElementSet dropped_nonstandard() const { return dropped_nonstandard_; }

    int representative(int original_index) const {
        return representative_[static_cast<std::size_t>(original_index)];
    }

    // Elements that survive into the output system, in original order.
    ElementSet kept() const { return kept_; }

    // Index in the output universe of a kept original element.
    int new_index(int original_index) const {
        return new_index_[static_cast<std::size_t>(original_index)];
    }

    bool is_identity() const;

    // Image of an original-universe subset in the output universe: drops the
    // stripped elements and maps each survivor class to its representative.
    ElementSet project(ElementSet original_set) const;

private:
    Universe original_;
    ElementSet removed_zero_;
    std::vector<int> representative_;
    ElementSet dropped_nonstandard_;
    ElementSet kept_;
    std::vector<int> new_index_;
};

// Distinct elements have distinct singleton closures.
bool is_reduced(const ClosureSystem& system);

// Additionally the closure of the empty set is empty and every singleton
// closure minus its element is closed.
bool is_standard(const ClosureSystem& system);

// Strips the closure of the empty set, then merges elements with equal
// singleton closure down to their lowest-index representative. The closure
// lattice of the output is isomorphic to the input's.
std::pair<ClosureSystem, ReductionMap> reduce_system(const ClosureSystem& system);

// Removes elements whose singleton closure minus the element is not closed,
// iterated to a fixpoint. Requires a reduced input.
std::pair<ClosureSystem, ReductionMap> standardize_system(const ClosureSystem& system);

namespace detail {
// Shared guard for constructions that assume a reduced system with an empty
// zero closure; throws NotReducedError otherwise.
void require_reduced(const ClosureSystem& system, const char* operation);
} // namespace detail

} // namespace impbase
