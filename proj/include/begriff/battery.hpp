#pragma once

#include "begriff/ast.hpp"

#include <string>
#include <vector>

namespace begriff {

// The conservativity sentence battery: closed FOL sentences over {in, =}
// with variables x, y, quantifier depth <= 2. Matrices are literals and
// single binary connectives over two literals (->, <->, and encoded
// and/or); prefixes are AA, AE, EA, EE plus the one-variable A and E (which
// identify y with x). Enumeration order is fixed; creativity witnesses are
// reported as the first hit in this order.
std::vector<FormulaPtr> sentenceBattery();

// Deduplicate by truth vector over a caller-supplied evaluation, keeping the
// first representative of each class in battery order.
std::vector<FormulaPtr> dedupByTruthVector(const std::vector<FormulaPtr>& sentences,
                                           const std::function<std::vector<bool>(const FormulaPtr&)>& truthVector);

} // namespace begriff
