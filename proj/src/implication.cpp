#include "impbase/implication.hpp"

#include <unordered_set>

namespace impbase {

BasisSize basis_size(const Basis& basis) {
    BasisSize out;
    out.m = basis.size();
    std::unordered_set<std::uint64_t> distinct;
    for (const Implication& imp : basis.implications) {
        out.s += imp.premise.count() + imp.conclusion.count();
        if (distinct.insert(imp.premise.mask()).second) out.t += imp.premise.count();
        if (distinct.insert(imp.conclusion.mask()).second) out.t += imp.conclusion.count();
    }
    return out;
}

} // namespace impbase
