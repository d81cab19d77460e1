#include "impbase/closure_system.hpp"

#include <algorithm>

namespace impbase {

ClosureSystem::ClosureSystem(Universe universe, std::vector<ElementSet> family)
    : universe_(std::move(universe)) {
    const ElementSet full = universe_.full_set();

    std::unordered_set<std::uint64_t> seen;
    std::vector<ElementSet> work;
    for (ElementSet c : family) {
        if (seen.insert(c.mask()).second) work.push_back(c);
    }
    const std::size_t given = work.size();

    if (seen.insert(full.mask()).second) work.push_back(full);

    // Moore completion: close under pairwise intersection. Every new set is
    // intersected against everything accepted so far.
    for (std::size_t i = 0; i < work.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            ElementSet meet = work[i] & work[j];
            if (seen.insert(meet.mask()).second) work.push_back(meet);
        }
    }
    completed_ = work.size() > given;

    family_ = std::move(work);
    std::sort(family_.begin(), family_.end(), [](ElementSet a, ElementSet b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a.mask() < b.mask();
    });
    member_masks_ = std::move(seen);

    empty_closure_ = family_.front();
    singleton_closures_.reserve(universe_.size());
    for (std::size_t i = 0; i < universe_.size(); ++i)
        singleton_closures_.push_back(closure(ElementSet::single(static_cast<int>(i))));
}

ElementSet ClosureSystem::closure(ElementSet x) const {
    ElementSet result = universe_.full_set();
    for (ElementSet c : family_) {
        if (x.subset_of(c)) result &= c;
    }
    return result;
}

ElementSet phi_closure(const ClosureSystem& system, ElementSet x) {
    return system.closure(x);
}

} // namespace impbase
