#pragma once

#include "begriff/ast.hpp"
#include "begriff/errors.hpp"
#include "begriff/syntax.hpp"

#include <map>
#include <set>
#include <string>
#include <variant>

namespace begriff {

// A function expression with ordered placeholders %1 (and %2 for two-place
// abstracts). The body may be a term or a formula; placeholders occur as
// object variables named "%1"/"%2".
struct FunctionAbstract {
    std::vector<std::string> params; // {"%1"} or {"%1","%2"}
    Expr body;

    int arity() const { return static_cast<int>(params.size()); }
};

enum class Convention { Distinct, Free };

// One plan binding: a variable name (schema variable slots), a term, or a
// function abstract. Formula metavariables use a FunctionAbstract whose body
// is a formula.
using Binding = std::variant<std::string, TermPtr, FunctionAbstract>;

struct SubstitutionPlan {
    std::map<std::string, Binding> bindings;
    Convention convention = Convention::Distinct;
    // occurrence selector for schema (E2)'s designated replacements
    std::set<int> occurrences;
};

// Replace every free occurrence of x by t. Throws CaptureError if a free
// variable of t would be captured (no silent renaming).
FormulaPtr substituteVar(const FormulaPtr& f, const std::string& x, const TermPtr& t);
TermPtr substituteVar(const TermPtr& tm, const std::string& x, const TermPtr& t);

// Simultaneous variant for several variables at once.
FormulaPtr substituteVars(const FormulaPtr& f, const std::map<std::string, TermPtr>& m);

// Replace exactly the selected free occurrences of x (1-based, left to
// right) by y. Errors: selector out of range; capture at a selected
// occurrence.
FormulaPtr substituteOccurrences(const FormulaPtr& f, const std::string& x, const std::string& y,
                                 const std::set<int>& occurrences);

int countFreeOccurrences(const FormulaPtr& f, const std::string& x);

// Second-order substitution: replace every application fvar(t...) by the
// abstract with placeholders filled. Binders inside the abstract are renamed
// fresh when they would capture argument variables; capture of the
// abstract's own free variables by binders of f is an error.
FormulaPtr substituteFunction(const FormulaPtr& f, const std::string& fvar, const FunctionAbstract& abs);

// Fill an abstract's placeholders with arguments (used by schema
// instantiation as well as substituteFunction).
Expr fillAbstract(const FunctionAbstract& abs, const std::vector<TermPtr>& args);

} // namespace begriff
