#pragma once

#include <unordered_set>
#include <vector>

#include "impbase/element_set.hpp"

namespace impbase {

// A finite closure system: a universe together with an intersection-closed
// family of closed sets that contains the full set. The constructor completes
// an arbitrary family by adding all missing intersections and the full set
// (Moore completion); was_completed() reports whether anything was added.
//
// closure(x) is the intersection of all closed sets containing x, i.e. the
// closure operator phi whose fixpoints are exactly the family members.
class ClosureSystem {
public:
    ClosureSystem(Universe universe, std::vector<ElementSet> family);

    const Universe& universe() const { return universe_; }
    std::size_t universe_size() const { return universe_.size(); }

    // Sorted by (cardinality, mask); the first member is closure of the empty set.
    const std::vector<ElementSet>& closed_family() const { return family_; }

    bool was_completed() const { return completed_; }

    bool is_closed(ElementSet x) const { return member_masks_.contains(x.mask()); }

    ElementSet closure(ElementSet x) const;

    // Cached closure of {i}.
    ElementSet singleton_closure(int i) const { return singleton_closures_[static_cast<std::size_t>(i)]; }

    ElementSet empty_closure() const { return empty_closure_; }

    bool operator==(const ClosureSystem& o) const {
        return universe_ == o.universe_ && family_ == o.family_;
    }

private:
    Universe universe_;
    std::vector<ElementSet> family_;
    std::unordered_set<std::uint64_t> member_masks_;
    std::vector<ElementSet> singleton_closures_;
    ElementSet empty_closure_;
    bool completed_ = false;
};

// The closure operator of the system applied to x.
ElementSet phi_closure(const ClosureSystem& system, ElementSet x);

} // namespace impbase
