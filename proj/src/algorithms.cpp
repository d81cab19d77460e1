#include "impbase/algorithms.hpp"

namespace impbase {

FolkloreResult folklore_closure(const Basis& basis, ElementSet start) {
    FolkloreResult r;
    r.closure = start;
    bool grew = true;
    while (grew) {
        grew = false;
        ++r.passes;
        for (const Implication& imp : basis.implications) {
            ++r.checks;
            if (imp.premise.subset_of(r.closure) && !imp.conclusion.subset_of(r.closure)) {
                r.closure |= imp.conclusion;
                grew = true;
            }
        }
    }
    return r;
}

SweepResult ordered_iteration(std::span<const Implication> steps, ElementSet start) {
    SweepResult r;
    r.closure = start;
    for (const Implication& imp : steps) {
        ++r.checks;
        if (imp.premise.subset_of(r.closure)) r.closure |= imp.conclusion;
    }
    return r;
}

SweepResult ordered_iteration(const Basis& basis, ElementSet start) {
    return ordered_iteration(basis.span(), start);
}

ElementSet pi_iteration(std::span<const Implication> steps, ElementSet start) {
    ElementSet out = start;
    for (const Implication& imp : steps) {
        if (imp.premise.subset_of(start)) out |= imp.conclusion;
    }
    return out;
}

ElementSet ordered_fixpoint(const Basis& basis, ElementSet start) {
    ElementSet cur = start;
    for (;;) {
        ElementSet next = ordered_iteration(basis, cur).closure;
        if (next == cur) return cur;
        cur = next;
    }
}

ForwardChainingState::ForwardChainingState(const Basis& basis) {
    const std::size_t m = basis.size();
    clause_list_.resize(basis.universe.size());
    consequent_.reserve(m);
    premise_size_.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        const Implication& imp = basis.implications[j];
        for (int i : imp.premise) clause_list_[static_cast<std::size_t>(i)].push_back(static_cast<int>(j));
        consequent_.push_back(imp.conclusion);
        premise_size_.push_back(static_cast<int>(imp.premise.count()));
    }
}

SweepResult ForwardChainingState::close(ElementSet start) {
    SweepResult r;
    propositions_ = premise_size_;
    ElementSet true_set = start;

    std::vector<int> queue = start.members();

    // Implications with empty premises fire before any element is processed.
    for (std::size_t j = 0; j < propositions_.size(); ++j) {
        if (propositions_[j] == 0 && !consequent_[j].subset_of(true_set)) {
            for (int e : consequent_[j] - true_set) queue.push_back(e);
            true_set |= consequent_[j];
        }
    }

    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int i = queue[qi];
        for (int j : clause_list_[static_cast<std::size_t>(i)]) {
            ++r.checks;
            if (--propositions_[static_cast<std::size_t>(j)] == 0) {
                ElementSet fresh = consequent_[static_cast<std::size_t>(j)] - true_set;
                for (int e : fresh) queue.push_back(e);
                true_set |= consequent_[static_cast<std::size_t>(j)];
            }
        }
    }

    r.closure = true_set;
    return r;
}

SweepResult forward_chaining_closure(const Basis& basis, ElementSet start,
                                     ForwardChainingState* reuse) {
    if (reuse != nullptr) return reuse->close(start);
    ForwardChainingState state(basis);
    return state.close(start);
}

SweepResult wild_closure(const Basis& basis, ElementSet start) {
    SweepResult r;
    r.closure = start;
    std::vector<const Implication*> pending;
    pending.reserve(basis.size());
    for (const Implication& imp : basis.implications) pending.push_back(&imp);

    for (;;) {
        std::vector<const Implication*> kept;
        kept.reserve(pending.size());
        ElementSet gained;
        bool fired = false;
        for (const Implication* imp : pending) {
            ++r.checks;
            if (imp->premise.subset_of(r.closure)) {
                gained |= imp->conclusion;
                fired = true;
            } else {
                kept.push_back(imp);
            }
        }
        if (!fired) break;
        r.closure |= gained;
        pending = std::move(kept);
        if (pending.empty()) break;
    }
    return r;
}

} // namespace impbase
