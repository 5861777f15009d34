#pragma once

#include "begriff/ast.hpp"
#include "begriff/errors.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>

namespace begriff {

// Names the parser must resolve to something other than an object variable.
struct SymbolTable {
    std::set<std::string> constants;       // rank-0 defined symbols / abbreviations
    std::map<std::string, int> operations; // defined operation symbols with arity

    bool isConstant(const std::string& n) const { return constants.count(n) != 0; }
    std::optional<int> operationArity(const std::string& n) const {
        auto it = operations.find(n);
        if (it == operations.end()) return std::nullopt;
        return it->second;
    }
};

// Parse results carry either side of the term/formula divide; `ext v. ...`
// is a term, everything connective-headed is a formula.
using Expr = std::variant<TermPtr, FormulaPtr>;

FormulaPtr parseFormula(const std::string& text, Layer layer, const SymbolTable& symbols = {}, int fileId = -1);
TermPtr parseTerm(const std::string& text, Layer layer, const SymbolTable& symbols = {}, int fileId = -1);
Expr parseExpr(const std::string& text, Layer layer, const SymbolTable& symbols = {}, int fileId = -1);

enum class RenderStyle { Ascii, Unicode };

std::string render(const FormulaPtr& f, RenderStyle style = RenderStyle::Ascii);
std::string render(const TermPtr& t, RenderStyle style = RenderStyle::Ascii);

} // namespace begriff
