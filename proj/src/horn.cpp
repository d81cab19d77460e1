#include "impbase/horn.hpp"

#include <stdexcept>

#include "impbase/algorithms.hpp"

namespace impbase {

ClosureSystem system_from_basis(const Basis& basis, std::size_t cap) {
    const std::size_t n = basis.universe.size();
    if (n > cap) throw CapExceededError(n, cap);

    std::vector<ElementSet> family;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        ElementSet y = ElementSet::from_mask(mask);
        bool model = true;
        for (const Implication& imp : basis.implications) {
            if (!respects(y, imp)) { model = false; break; }
        }
        if (model) family.push_back(y);
    }
    return ClosureSystem(basis.universe, std::move(family));
}

bool consequence_holds(const Basis& basis, const Implication& query) {
    ElementSet closed = folklore_closure(basis, query.premise).closure;
    return query.conclusion.subset_of(closed);
}

Basis definite_completion(const std::vector<HornClause>& clauses, const Universe& universe) {
    const ElementSet full = universe.full_set();
    std::vector<Implication> out;
    for (const HornClause& clause : clauses) {
        if (!clause.negatives.subset_of(full))
            throw std::invalid_argument("clause literal outside the universe");
        if (clause.positive) {
            if (clause.negatives.contains(*clause.positive))
                throw std::invalid_argument("clause repeats a literal positively and negatively");
            out.emplace_back(clause.negatives, ElementSet::single(*clause.positive));
        } else {
            // Purely negative clause: one definite clause per missing element;
            // nothing when the clause already uses every literal.
            for (int y : full - clause.negatives)
                out.emplace_back(clause.negatives, ElementSet::single(y));
        }
    }
    return Basis(universe, std::move(out), BasisForm::unit);
}

} // namespace impbase
