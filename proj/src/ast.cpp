#include "begriff/ast.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace begriff {

TermPtr mkVar(std::string name, SourceSpan sp) {
    auto t = std::make_shared<Term>(TermKind::Var);
    t->name = std::move(name);
    t->span = sp;
    return t;
}

TermPtr mkConst(std::string name, SourceSpan sp) {
    auto t = std::make_shared<Term>(TermKind::Const);
    t->name = std::move(name);
    t->span = sp;
    return t;
}

TermPtr mkFunApp(std::string head, std::vector<TermPtr> args, bool defined, SourceSpan sp) {
    auto t = std::make_shared<Term>(TermKind::FunApp);
    t->name = std::move(head);
    t->args = std::move(args);
    t->definedSymbol = defined;
    t->span = sp;
    return t;
}

TermPtr mkCourseOfValues(std::string boundVar, FormulaPtr body, SourceSpan sp) {
    auto t = std::make_shared<Term>(TermKind::CourseOfValues);
    t->name = std::move(boundVar);
    t->body = std::move(body);
    t->span = sp;
    return t;
}

TermPtr mkMemApp(TermPtr l, TermPtr r, SourceSpan sp) {
    auto t = std::make_shared<Term>(TermKind::MemApp);
    t->args = {std::move(l), std::move(r)};
    t->span = sp;
    return t;
}

TermPtr mkTruthObject(FormulaPtr f, SourceSpan sp) {
    auto t = std::make_shared<Term>(TermKind::TruthObject);
    t->body = std::move(f);
    t->span = sp;
    return t;
}

FormulaPtr mkAtom(Pred p, TermPtr l, TermPtr r, SourceSpan sp) {
    auto f = std::make_shared<Formula>(FormulaKind::Atom);
    f->pred = p;
    f->t1 = std::move(l);
    f->t2 = std::move(r);
    f->span = sp;
    return f;
}

FormulaPtr mkHorizontalT(TermPtr t, SourceSpan sp) {
    auto f = std::make_shared<Formula>(FormulaKind::Horizontal);
    f->t1 = std::move(t);
    f->span = sp;
    return f;
}

FormulaPtr mkHorizontalF(FormulaPtr inner, SourceSpan sp) {
    auto f = std::make_shared<Formula>(FormulaKind::Horizontal);
    f->f1 = std::move(inner);
    f->span = sp;
    return f;
}

FormulaPtr mkNot(FormulaPtr inner, SourceSpan sp) {
    auto f = std::make_shared<Formula>(FormulaKind::Not);
    f->f1 = std::move(inner);
    f->span = sp;
    return f;
}

FormulaPtr mkCond(FormulaPtr a, FormulaPtr c, SourceSpan sp) {
    auto f = std::make_shared<Formula>(FormulaKind::Cond);
    f->f1 = std::move(a);
    f->f2 = std::move(c);
    f->span = sp;
    return f;
}

FormulaPtr mkIff(FormulaPtr a, FormulaPtr b, SourceSpan sp) {
    auto f = std::make_shared<Formula>(FormulaKind::Iff);
    f->f1 = std::move(a);
    f->f2 = std::move(b);
    f->span = sp;
    return f;
}

static FormulaPtr mkBinder(FormulaKind k, std::string v, FormulaPtr body, SourceSpan sp) {
    auto f = std::make_shared<Formula>(k);
    f->var = std::move(v);
    f->f1 = std::move(body);
    f->span = sp;
    return f;
}

FormulaPtr mkForallObj(std::string v, FormulaPtr body, SourceSpan sp) { return mkBinder(FormulaKind::ForallObj, std::move(v), std::move(body), sp); }
FormulaPtr mkForallFun(std::string v, FormulaPtr body, SourceSpan sp) { return mkBinder(FormulaKind::ForallFun, std::move(v), std::move(body), sp); }
FormulaPtr mkExistsObj(std::string v, FormulaPtr body, SourceSpan sp) { return mkBinder(FormulaKind::ExistsObj, std::move(v), std::move(body), sp); }

FormulaPtr mkHole(std::string metavar, std::vector<TermPtr> args, SourceSpan sp) {
    auto f = std::make_shared<Formula>(FormulaKind::Hole);
    f->var = std::move(metavar);
    f->holeArgs = std::move(args);
    f->span = sp;
    return f;
}

// ---- alpha equality ------------------------------------------------------

namespace {

struct AlphaCtx {
    // bound-variable correspondences, innermost last
    std::vector<std::pair<std::string, std::string>> obj;
    std::vector<std::pair<std::string, std::string>> fun;

    bool objEq(const std::string& a, const std::string& b) const {
        for (auto it = obj.rbegin(); it != obj.rend(); ++it) {
            if (it->first == a || it->second == b) return it->first == a && it->second == b;
        }
        return a == b; // both free
    }
    bool funEq(const std::string& a, const std::string& b) const {
        for (auto it = fun.rbegin(); it != fun.rend(); ++it) {
            if (it->first == a || it->second == b) return it->first == a && it->second == b;
        }
        return a == b;
    }
};

bool alphaTerm(const TermPtr& a, const TermPtr& b, AlphaCtx& ctx);

bool alphaFormula(const FormulaPtr& a, const FormulaPtr& b, AlphaCtx& ctx) {
    if (a == b && ctx.obj.empty() && ctx.fun.empty()) return true;
    if (!a || !b) return a == b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
    case FormulaKind::Atom:
        return a->pred == b->pred && alphaTerm(a->t1, b->t1, ctx) && alphaTerm(a->t2, b->t2, ctx);
    case FormulaKind::Horizontal:
        if ((a->t1 != nullptr) != (b->t1 != nullptr)) return false;
        if (a->t1) return alphaTerm(a->t1, b->t1, ctx);
        return alphaFormula(a->f1, b->f1, ctx);
    case FormulaKind::Not:
        return alphaFormula(a->f1, b->f1, ctx);
    case FormulaKind::Cond:
    case FormulaKind::Iff:
        return alphaFormula(a->f1, b->f1, ctx) && alphaFormula(a->f2, b->f2, ctx);
    case FormulaKind::ForallObj:
    case FormulaKind::ExistsObj: {
        ctx.obj.emplace_back(a->var, b->var);
        bool ok = alphaFormula(a->f1, b->f1, ctx);
        ctx.obj.pop_back();
        return ok;
    }
    case FormulaKind::ForallFun: {
        ctx.fun.emplace_back(a->var, b->var);
        bool ok = alphaFormula(a->f1, b->f1, ctx);
        ctx.fun.pop_back();
        return ok;
    }
    case FormulaKind::Hole: {
        if (a->var != b->var || a->holeArgs.size() != b->holeArgs.size()) return false;
        for (size_t i = 0; i < a->holeArgs.size(); ++i)
            if (!alphaTerm(a->holeArgs[i], b->holeArgs[i], ctx)) return false;
        return true;
    }
    }
    return false;
}

bool alphaTerm(const TermPtr& a, const TermPtr& b, AlphaCtx& ctx) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
    case TermKind::Var:
        return ctx.objEq(a->name, b->name);
    case TermKind::Const:
        return a->name == b->name;
    case TermKind::FunApp: {
        if (a->args.size() != b->args.size()) return false;
        if (a->definedSymbol != b->definedSymbol) return false;
        if (a->definedSymbol ? (a->name != b->name) : !ctx.funEq(a->name, b->name)) return false;
        for (size_t i = 0; i < a->args.size(); ++i)
            if (!alphaTerm(a->args[i], b->args[i], ctx)) return false;
        return true;
    }
    case TermKind::CourseOfValues: {
        ctx.obj.emplace_back(a->name, b->name);
        bool ok = alphaFormula(a->body, b->body, ctx);
        ctx.obj.pop_back();
        return ok;
    }
    case TermKind::MemApp:
        return alphaTerm(a->args[0], b->args[0], ctx) && alphaTerm(a->args[1], b->args[1], ctx);
    case TermKind::TruthObject:
        return alphaFormula(a->body, b->body, ctx);
    }
    return false;
}

} // namespace

bool alphaEqual(const FormulaPtr& a, const FormulaPtr& b) {
    AlphaCtx ctx;
    return alphaFormula(a, b, ctx);
}

bool alphaEqual(const TermPtr& a, const TermPtr& b) {
    AlphaCtx ctx;
    return alphaTerm(a, b, ctx);
}

// ---- free variables ------------------------------------------------------

namespace {

void collect(const FormulaPtr& f, std::vector<std::string>& boundObj, std::vector<std::string>& boundFun, FreeVars& out);

void collect(const TermPtr& t, std::vector<std::string>& boundObj, std::vector<std::string>& boundFun, FreeVars& out) {
    if (!t) return;
    switch (t->kind) {
    case TermKind::Var:
        if (std::find(boundObj.begin(), boundObj.end(), t->name) == boundObj.end()) out.objects.insert(t->name);
        break;
    case TermKind::Const:
        break;
    case TermKind::FunApp:
        if (!t->definedSymbol && std::find(boundFun.begin(), boundFun.end(), t->name) == boundFun.end())
            out.functions.insert(t->name);
        for (const auto& a : t->args) collect(a, boundObj, boundFun, out);
        break;
    case TermKind::CourseOfValues:
        boundObj.push_back(t->name);
        collect(t->body, boundObj, boundFun, out);
        boundObj.pop_back();
        break;
    case TermKind::MemApp:
        collect(t->args[0], boundObj, boundFun, out);
        collect(t->args[1], boundObj, boundFun, out);
        break;
    case TermKind::TruthObject:
        collect(t->body, boundObj, boundFun, out);
        break;
    }
}

void collect(const FormulaPtr& f, std::vector<std::string>& boundObj, std::vector<std::string>& boundFun, FreeVars& out) {
    if (!f) return;
    switch (f->kind) {
    case FormulaKind::Atom:
        collect(f->t1, boundObj, boundFun, out);
        collect(f->t2, boundObj, boundFun, out);
        break;
    case FormulaKind::Horizontal:
        if (f->t1) collect(f->t1, boundObj, boundFun, out);
        else collect(f->f1, boundObj, boundFun, out);
        break;
    case FormulaKind::Not:
        collect(f->f1, boundObj, boundFun, out);
        break;
    case FormulaKind::Cond:
    case FormulaKind::Iff:
        collect(f->f1, boundObj, boundFun, out);
        collect(f->f2, boundObj, boundFun, out);
        break;
    case FormulaKind::ForallObj:
    case FormulaKind::ExistsObj:
        boundObj.push_back(f->var);
        collect(f->f1, boundObj, boundFun, out);
        boundObj.pop_back();
        break;
    case FormulaKind::ForallFun:
        boundFun.push_back(f->var);
        collect(f->f1, boundObj, boundFun, out);
        boundFun.pop_back();
        break;
    case FormulaKind::Hole:
        for (const auto& a : f->holeArgs) collect(a, boundObj, boundFun, out);
        break;
    }
}

} // namespace

std::set<std::string> FreeVars::merged() const {
    std::set<std::string> m = objects;
    m.insert(functions.begin(), functions.end());
    return m;
}

FreeVars freeVars(const FormulaPtr& f) {
    FreeVars out;
    std::vector<std::string> bo, bf;
    collect(f, bo, bf, out);
    return out;
}

FreeVars freeVars(const TermPtr& t) {
    FreeVars out;
    std::vector<std::string> bo, bf;
    collect(t, bo, bf, out);
    return out;
}

bool occursFreeObj(const FormulaPtr& f, const std::string& name) {
    return freeVars(f).objects.count(name) != 0;
}

// ---- normalization -------------------------------------------------------

TermPtr normalizeTerm(const TermPtr& t) {
    if (!t) return t;
    switch (t->kind) {
    case TermKind::Var:
    case TermKind::Const:
        return t;
    case TermKind::FunApp: {
        std::vector<TermPtr> args;
        args.reserve(t->args.size());
        for (const auto& a : t->args) args.push_back(normalizeTerm(a));
        return mkFunApp(t->name, std::move(args), t->definedSymbol, t->span);
    }
    case TermKind::CourseOfValues:
        return mkCourseOfValues(t->name, normalize(t->body), t->span);
    case TermKind::MemApp:
        return mkMemApp(normalizeTerm(t->args[0]), normalizeTerm(t->args[1]), t->span);
    case TermKind::TruthObject:
        return mkTruthObject(normalize(t->body), t->span);
    }
    return t;
}

FormulaPtr normalize(const FormulaPtr& f) {
    if (!f) return f;
    switch (f->kind) {
    case FormulaKind::Atom:
        return mkAtom(f->pred, normalizeTerm(f->t1), normalizeTerm(f->t2), f->span);
    case FormulaKind::Horizontal:
        // a horizontal over anything formula-valued is the formula itself
        if (f->f1) return normalize(f->f1);
        if (f->t1 && f->t1->kind == TermKind::TruthObject) return normalize(f->t1->body);
        return mkHorizontalT(normalizeTerm(f->t1), f->span);
    case FormulaKind::Not:
        return mkNot(normalize(f->f1), f->span);
    case FormulaKind::Cond:
        return mkCond(normalize(f->f1), normalize(f->f2), f->span);
    case FormulaKind::Iff:
        return mkIff(normalize(f->f1), normalize(f->f2), f->span);
    case FormulaKind::ForallObj:
        return mkForallObj(f->var, normalize(f->f1), f->span);
    case FormulaKind::ForallFun:
        return mkForallFun(f->var, normalize(f->f1), f->span);
    case FormulaKind::ExistsObj:
        return mkExistsObj(f->var, normalize(f->f1), f->span);
    case FormulaKind::Hole: {
        std::vector<TermPtr> args;
        for (const auto& a : f->holeArgs) args.push_back(normalizeTerm(a));
        return mkHole(f->var, std::move(args), f->span);
    }
    }
    return f;
}

static bool containsHoleTerm(const TermPtr& t) {
    if (!t) return false;
    if (t->body && containsHole(t->body)) return true;
    for (const auto& a : t->args)
        if (containsHoleTerm(a)) return true;
    return false;
}

bool containsHole(const FormulaPtr& f) {
    if (!f) return false;
    if (f->kind == FormulaKind::Hole) return true;
    if (containsHoleTerm(f->t1) || containsHoleTerm(f->t2)) return true;
    for (const auto& a : f->holeArgs)
        if (containsHoleTerm(a)) return true;
    return containsHole(f->f1) || containsHole(f->f2);
}

bool isClosed(const FormulaPtr& f) {
    auto fv = freeVars(f);
    return fv.objects.empty() && fv.functions.empty();
}

bool isClosedTerm(const TermPtr& t) {
    auto fv = freeVars(t);
    return fv.objects.empty() && fv.functions.empty();
}

bool mentionsSymbol(const TermPtr& t, const std::string& symbol) {
    if (!t) return false;
    switch (t->kind) {
    case TermKind::Var: return false;
    case TermKind::Const: return t->name == symbol;
    case TermKind::FunApp:
        if (t->definedSymbol && t->name == symbol) return true;
        for (const auto& a : t->args)
            if (mentionsSymbol(a, symbol)) return true;
        return false;
    case TermKind::CourseOfValues:
    case TermKind::TruthObject:
        return mentionsSymbol(t->body, symbol);
    case TermKind::MemApp:
        return mentionsSymbol(t->args[0], symbol) || mentionsSymbol(t->args[1], symbol);
    }
    return false;
}

bool mentionsSymbol(const FormulaPtr& f, const std::string& symbol) {
    if (!f) return false;
    if (mentionsSymbol(f->t1, symbol) || mentionsSymbol(f->t2, symbol)) return true;
    for (const auto& a : f->holeArgs)
        if (mentionsSymbol(a, symbol)) return true;
    return mentionsSymbol(f->f1, symbol) || mentionsSymbol(f->f2, symbol);
}

std::string freshName(const std::string& stem, const std::set<std::string>& avoid) {
    std::string name = stem;
    while (avoid.count(name)) name += "'";
    return name;
}

// ---- paths ---------------------------------------------------------------

Path Path::parse(const std::string& text) {
    Path p;
    if (text.empty() || text == "root") return p;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '.')) {
        int idx = std::stoi(part);
        if (idx < 1) throw std::out_of_range("path indices are 1-based: " + text);
        p.steps.push_back(idx);
    }
    return p;
}

std::string Path::str() const {
    if (steps.empty()) return "root";
    std::string s;
    for (size_t i = 0; i < steps.size(); ++i) {
        if (i) s += ".";
        s += std::to_string(steps[i]);
    }
    return s;
}

namespace {

TermPtr editTermAt(const TermPtr& t, const std::vector<int>& steps, size_t at, const FormulaEdit& onF, const TermEdit& onT);

FormulaPtr editFormulaAt(const FormulaPtr& f, const std::vector<int>& steps, size_t at, const FormulaEdit& onF, const TermEdit& onT) {
    if (!f) throw std::out_of_range("path walks off the formula");
    if (at == steps.size()) {
        if (!onF) throw std::out_of_range("path lands on a formula where a term was expected");
        return onF(f);
    }
    int i = steps[at];
    auto cf = std::make_shared<Formula>(*f);
    switch (f->kind) {
    case FormulaKind::Atom:
        if (i == 1) cf->t1 = editTermAt(f->t1, steps, at + 1, onF, onT);
        else if (i == 2) cf->t2 = editTermAt(f->t2, steps, at + 1, onF, onT);
        else throw std::out_of_range("atom has children 1 and 2");
        break;
    case FormulaKind::Horizontal:
        if (i != 1) throw std::out_of_range("horizontal has child 1");
        if (f->t1) cf->t1 = editTermAt(f->t1, steps, at + 1, onF, onT);
        else cf->f1 = editFormulaAt(f->f1, steps, at + 1, onF, onT);
        break;
    case FormulaKind::Not:
    case FormulaKind::ForallObj:
    case FormulaKind::ForallFun:
    case FormulaKind::ExistsObj:
        if (i != 1) throw std::out_of_range("unary node has child 1");
        cf->f1 = editFormulaAt(f->f1, steps, at + 1, onF, onT);
        break;
    case FormulaKind::Cond:
    case FormulaKind::Iff:
        if (i == 1) cf->f1 = editFormulaAt(f->f1, steps, at + 1, onF, onT);
        else if (i == 2) cf->f2 = editFormulaAt(f->f2, steps, at + 1, onF, onT);
        else throw std::out_of_range("binary node has children 1 and 2");
        break;
    case FormulaKind::Hole:
        if (i < 1 || static_cast<size_t>(i) > f->holeArgs.size()) throw std::out_of_range("hole argument index");
        cf->holeArgs[i - 1] = editTermAt(f->holeArgs[i - 1], steps, at + 1, onF, onT);
        break;
    }
    return cf;
}

TermPtr editTermAt(const TermPtr& t, const std::vector<int>& steps, size_t at, const FormulaEdit& onF, const TermEdit& onT) {
    if (!t) throw std::out_of_range("path walks off the term");
    if (at == steps.size()) {
        if (!onT) throw std::out_of_range("path lands on a term where a formula was expected");
        return onT(t);
    }
    int i = steps[at];
    auto ct = std::make_shared<Term>(*t);
    switch (t->kind) {
    case TermKind::Var:
    case TermKind::Const:
        throw std::out_of_range("leaf term has no children");
    case TermKind::FunApp:
    case TermKind::MemApp:
        if (i < 1 || static_cast<size_t>(i) > t->args.size()) throw std::out_of_range("term argument index");
        ct->args[i - 1] = editTermAt(t->args[i - 1], steps, at + 1, onF, onT);
        break;
    case TermKind::CourseOfValues:
    case TermKind::TruthObject:
        if (i != 1) throw std::out_of_range("binder term has child 1");
        ct->body = editFormulaAt(t->body, steps, at + 1, onF, onT);
        break;
    }
    return ct;
}

bool spansNestedTerm(const TermPtr& t, const SourceSpan& parent);

bool spansNestedFormula(const FormulaPtr& f, const SourceSpan& parent) {
    if (!f) return true;
    if (!parent.contains(f->span)) return false;
    bool ok = true;
    if (f->t1) ok = ok && spansNestedTerm(f->t1, f->span);
    if (f->t2) ok = ok && spansNestedTerm(f->t2, f->span);
    if (f->f1) ok = ok && spansNestedFormula(f->f1, f->span);
    if (f->f2) ok = ok && spansNestedFormula(f->f2, f->span);
    for (const auto& a : f->holeArgs) ok = ok && spansNestedTerm(a, f->span);
    return ok;
}

bool spansNestedTerm(const TermPtr& t, const SourceSpan& parent) {
    if (!t) return true;
    if (!parent.contains(t->span)) return false;
    bool ok = true;
    for (const auto& a : t->args) ok = ok && spansNestedTerm(a, t->span);
    if (t->body) ok = ok && spansNestedFormula(t->body, t->span);
    return ok;
}

} // namespace

FormulaPtr editAt(const FormulaPtr& root, const Path& path, const FormulaEdit& onFormula, const TermEdit& onTerm) {
    return editFormulaAt(root, path.steps, 0, onFormula, onTerm);
}

bool spansNested(const FormulaPtr& f) {
    if (!f) return true;
    return spansNestedFormula(f, f->span);
}

} // namespace begriff
