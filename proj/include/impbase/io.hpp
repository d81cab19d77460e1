#pragma once

#include <iosfwd>
#include <string>

#include "impbase/closure_system.hpp"
#include "impbase/errors.hpp"
#include "impbase/implication.hpp"

namespace impbase {

// .imp: one implication per line, `LHS -> RHS`, whitespace-separated labels,
// `#` starts a comment, blank lines ignored, an empty side written as `{}`.
// The universe is the set of labels used, in natural order (numeric labels
// compare as numbers).
//
// .fam: one closed set per line, whitespace-separated labels, the empty set
// written as `{}`. The first non-comment line may be `universe: a b c ...`
// to fix the element set and order; otherwise the universe is the union of
// all lines, in natural order.

Basis read_imp(std::istream& in);
Basis read_imp_file(const std::string& path);
void write_imp(std::ostream& out, const Basis& basis);

ClosureSystem read_fam(std::istream& in);
ClosureSystem read_fam_file(const std::string& path);
void write_fam(std::ostream& out, const ClosureSystem& system);

// Re-index a basis onto another universe by matching labels; throws
// std::invalid_argument when a label is missing from the target.
Basis rebind(const Basis& basis, const Universe& target);

// Space-separated labels of the members, `{}` for the empty set.
std::string set_to_string(const Universe& universe, ElementSet s);
std::string implication_to_string(const Universe& universe, const Implication& imp);

} // namespace impbase
