#pragma once

#include "begriff/ast.hpp"
#include "begriff/errors.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace begriff {

// A finite interpretation: carrier {0..size-1}, a membership table, an
// assignment for names (free variables and rank-0 constants), and tables for
// defined operation symbols. Identity is true equality on the carrier.
struct Model {
    int size = 0;
    std::vector<std::vector<bool>> membership; // membership[i][j] == (i in j)
    std::map<std::string, int> assignment;
    std::map<std::string, std::vector<int>> opTables; // flattened, row-major over argument tuples

    bool memb(int i, int j) const { return membership[i][j]; }
};

// Direct recursive evaluation. FOL-layer formulas only.
int evalTerm(const TermPtr& t, const Model& m, std::map<std::string, int>& env);
bool evalFormula(const FormulaPtr& f, const Model& m, std::map<std::string, int>& env);
bool satisfies(const Model& m, const FormulaPtr& f);

// Names the enumerator must assign: free object variables plus mentioned
// constants, in lexicographic order.
std::vector<std::string> namesToAssign(const std::vector<FormulaPtr>& axioms);

struct FindModelResult {
    std::optional<Model> model; // empty means NoneUpTo(maxSize)
    int maxSize = 0;
    long long interpretationsTried = 0;
};

// Enumerates carriers of size 1..maxSize; for each size, membership tables
// in lexicographic order of their row-major bit string (bit (0,0) first),
// then assignments in lexicographic name order, each value ascending.
// Returns the first satisfying interpretation.
FindModelResult findModel(const std::vector<FormulaPtr>& axioms, int maxSize);

} // namespace begriff
