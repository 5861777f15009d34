#include "begriff/subst.hpp"

#include <algorithm>

namespace begriff {

namespace {

// Shared walker state for variable substitution. `renameOnCapture` selects
// between the two contracts: strict substitution raises CaptureError, the
// abstract-filling path alpha-renames the offending binder instead.
struct VarSubst {
    const std::map<std::string, TermPtr>& map;
    bool renameOnCapture;
    std::set<std::string> captureRisk;    // free object variables of replacements
    std::set<std::string> captureRiskFun; // free function variables of replacements

    TermPtr term(const TermPtr& t, std::vector<std::string>& bound, std::vector<std::string>& boundFun) {
        if (!t) return t;
        switch (t->kind) {
        case TermKind::Var: {
            if (std::find(bound.begin(), bound.end(), t->name) != bound.end()) return t;
            auto it = map.find(t->name);
            if (it == map.end()) return t;
            auto fv = freeVars(it->second);
            for (const auto& b : bound)
                if (fv.objects.count(b))
                    throw CaptureError("substituting for '" + t->name + "' would capture '" + b + "'", b, t->span);
            for (const auto& b : boundFun)
                if (fv.functions.count(b))
                    throw CaptureError("substituting for '" + t->name + "' would capture function variable '" + b + "'", b, t->span);
            return it->second;
        }
        case TermKind::Const:
            return t;
        case TermKind::FunApp: {
            std::vector<TermPtr> args;
            for (const auto& a : t->args) args.push_back(term(a, bound, boundFun));
            return mkFunApp(t->name, std::move(args), t->definedSymbol, t->span);
        }
        case TermKind::CourseOfValues: {
            auto [v, body] = enterObjBinder(t->name, t->body);
            bound.push_back(v);
            FormulaPtr nb = formula(body, bound, boundFun);
            bound.pop_back();
            return mkCourseOfValues(v, nb, t->span);
        }
        case TermKind::MemApp:
            return mkMemApp(term(t->args[0], bound, boundFun), term(t->args[1], bound, boundFun), t->span);
        case TermKind::TruthObject:
            return mkTruthObject(formula(t->body, bound, boundFun), t->span);
        }
        return t;
    }

    // Rename an object binder (rename mode only) when it would capture a
    // replacement variable about to be inserted below it.
    std::pair<std::string, FormulaPtr> enterObjBinder(const std::string& v0, const FormulaPtr& body0) {
        std::string v = v0;
        FormulaPtr body = body0;
        if (renameOnCapture && captureRisk.count(v) && anyMappedFreeIn(body)) {
            v = pickFresh(v, body);
            body = substituteVar(body, v0, mkVar(v));
        }
        return {v, body};
    }

    bool anyMappedFreeIn(const FormulaPtr& body) const {
        auto fv = freeVars(body);
        for (const auto& [k, _] : map)
            if (fv.objects.count(k)) return true;
        return false;
    }

    std::string pickFresh(const std::string& stem, const FormulaPtr& body) const {
        std::set<std::string> avoid = captureRisk;
        auto fv = freeVars(body);
        avoid.insert(fv.objects.begin(), fv.objects.end());
        for (const auto& [k, _] : map) avoid.insert(k);
        avoid.insert(stem);
        return freshName(stem, avoid);
    }

    FormulaPtr formula(const FormulaPtr& f, std::vector<std::string>& bound, std::vector<std::string>& boundFun) {
        if (!f) return f;
        switch (f->kind) {
        case FormulaKind::Atom:
            return mkAtom(f->pred, term(f->t1, bound, boundFun), term(f->t2, bound, boundFun), f->span);
        case FormulaKind::Horizontal:
            if (f->t1) return mkHorizontalT(term(f->t1, bound, boundFun), f->span);
            return mkHorizontalF(formula(f->f1, bound, boundFun), f->span);
        case FormulaKind::Not:
            return mkNot(formula(f->f1, bound, boundFun), f->span);
        case FormulaKind::Cond:
            return mkCond(formula(f->f1, bound, boundFun), formula(f->f2, bound, boundFun), f->span);
        case FormulaKind::Iff:
            return mkIff(formula(f->f1, bound, boundFun), formula(f->f2, bound, boundFun), f->span);
        case FormulaKind::ForallObj:
        case FormulaKind::ExistsObj: {
            auto [v, body] = enterObjBinder(f->var, f->f1);
            bound.push_back(v);
            FormulaPtr nb = formula(body, bound, boundFun);
            bound.pop_back();
            return f->kind == FormulaKind::ForallObj ? mkForallObj(v, nb, f->span) : mkExistsObj(v, nb, f->span);
        }
        case FormulaKind::ForallFun: {
            boundFun.push_back(f->var);
            FormulaPtr nb = formula(f->f1, bound, boundFun);
            boundFun.pop_back();
            return mkForallFun(f->var, nb, f->span);
        }
        case FormulaKind::Hole: {
            std::vector<TermPtr> args;
            for (const auto& a : f->holeArgs) args.push_back(term(a, bound, boundFun));
            return mkHole(f->var, std::move(args), f->span);
        }
        }
        return f;
    }
};

VarSubst makeVarSubst(const std::map<std::string, TermPtr>& m, bool rename) {
    VarSubst vs{m, rename, {}, {}};
    for (const auto& [_, t] : m) {
        auto fv = freeVars(t);
        vs.captureRisk.insert(fv.objects.begin(), fv.objects.end());
        vs.captureRiskFun.insert(fv.functions.begin(), fv.functions.end());
    }
    return vs;
}

FormulaPtr runVarSubst(const FormulaPtr& f, const std::map<std::string, TermPtr>& m, bool rename) {
    VarSubst vs = makeVarSubst(m, rename);
    std::vector<std::string> bound, boundFun;
    return vs.formula(f, bound, boundFun);
}

} // namespace

FormulaPtr substituteVar(const FormulaPtr& f, const std::string& x, const TermPtr& t) {
    std::map<std::string, TermPtr> m{{x, t}};
    return runVarSubst(f, m, false);
}

TermPtr substituteVar(const TermPtr& tm, const std::string& x, const TermPtr& t) {
    std::map<std::string, TermPtr> m{{x, t}};
    VarSubst vs = makeVarSubst(m, false);
    std::vector<std::string> bound, boundFun;
    return vs.term(tm, bound, boundFun);
}

FormulaPtr substituteVars(const FormulaPtr& f, const std::map<std::string, TermPtr>& m) {
    return runVarSubst(f, m, false);
}

// ---- occurrence-selective substitution ------------------------------------

namespace {

struct OccSubst {
    std::string x, y;
    const std::set<int>& selected;
    int counter = 0;

    TermPtr term(const TermPtr& t, std::vector<std::string>& bound) {
        if (!t) return t;
        switch (t->kind) {
        case TermKind::Var: {
            if (t->name != x) return t;
            if (std::find(bound.begin(), bound.end(), x) != bound.end()) return t;
            ++counter;
            if (!selected.count(counter)) return t;
            if (std::find(bound.begin(), bound.end(), y) != bound.end())
                throw CaptureError("'" + y + "' is not free for '" + x + "' at occurrence " + std::to_string(counter), y, t->span);
            return mkVar(y, t->span);
        }
        case TermKind::Const:
            return t;
        case TermKind::FunApp: {
            std::vector<TermPtr> args;
            for (const auto& a : t->args) args.push_back(term(a, bound));
            return mkFunApp(t->name, std::move(args), t->definedSymbol, t->span);
        }
        case TermKind::CourseOfValues: {
            bound.push_back(t->name);
            FormulaPtr nb = formula(t->body, bound);
            bound.pop_back();
            return mkCourseOfValues(t->name, nb, t->span);
        }
        case TermKind::MemApp: {
            TermPtr a = term(t->args[0], bound); // evaluation order carries the counter
            TermPtr b = term(t->args[1], bound);
            return mkMemApp(std::move(a), std::move(b), t->span);
        }
        case TermKind::TruthObject:
            return mkTruthObject(formula(t->body, bound), t->span);
        }
        return t;
    }

    FormulaPtr formula(const FormulaPtr& f, std::vector<std::string>& bound) {
        if (!f) return f;
        switch (f->kind) {
        case FormulaKind::Atom: {
            TermPtr a = term(f->t1, bound);
            TermPtr b = term(f->t2, bound);
            return mkAtom(f->pred, std::move(a), std::move(b), f->span);
        }
        case FormulaKind::Horizontal:
            if (f->t1) return mkHorizontalT(term(f->t1, bound), f->span);
            return mkHorizontalF(formula(f->f1, bound), f->span);
        case FormulaKind::Not:
            return mkNot(formula(f->f1, bound), f->span);
        case FormulaKind::Cond: {
            FormulaPtr a = formula(f->f1, bound);
            FormulaPtr b = formula(f->f2, bound);
            return mkCond(std::move(a), std::move(b), f->span);
        }
        case FormulaKind::Iff: {
            FormulaPtr a = formula(f->f1, bound);
            FormulaPtr b = formula(f->f2, bound);
            return mkIff(std::move(a), std::move(b), f->span);
        }
        case FormulaKind::ForallObj:
        case FormulaKind::ExistsObj: {
            bound.push_back(f->var);
            FormulaPtr nb = formula(f->f1, bound);
            bound.pop_back();
            return f->kind == FormulaKind::ForallObj ? mkForallObj(f->var, nb, f->span) : mkExistsObj(f->var, nb, f->span);
        }
        case FormulaKind::ForallFun:
            return mkForallFun(f->var, formula(f->f1, bound), f->span);
        case FormulaKind::Hole: {
            std::vector<TermPtr> args;
            for (const auto& a : f->holeArgs) args.push_back(term(a, bound));
            return mkHole(f->var, std::move(args), f->span);
        }
        }
        return f;
    }
};

} // namespace

int countFreeOccurrences(const FormulaPtr& f, const std::string& x) {
    static const std::set<int> none;
    OccSubst counterOnly{x, x, none};
    std::vector<std::string> bound;
    counterOnly.formula(f, bound);
    return counterOnly.counter;
}

FormulaPtr substituteOccurrences(const FormulaPtr& f, const std::string& x, const std::string& y,
                                 const std::set<int>& occurrences) {
    int total = countFreeOccurrences(f, x);
    for (int k : occurrences) {
        if (k < 1 || k > total)
            throw Error("occurrence selector " + std::to_string(k) + " out of range (free occurrences of '" + x +
                        "': " + std::to_string(total) + ")");
    }
    OccSubst os{x, y, occurrences};
    std::vector<std::string> bound;
    return os.formula(f, bound);
}

// ---- second-order substitution ---------------------------------------------

Expr fillAbstract(const FunctionAbstract& abs, const std::vector<TermPtr>& args) {
    if (args.size() != abs.params.size())
        throw ShapeMismatch("function abstract expects " + std::to_string(abs.params.size()) + " argument(s), got " +
                            std::to_string(args.size()));
    std::map<std::string, TermPtr> m;
    for (size_t i = 0; i < args.size(); ++i) m[abs.params[i]] = args[i];
    if (std::holds_alternative<FormulaPtr>(abs.body))
        return Expr{runVarSubst(std::get<FormulaPtr>(abs.body), m, /*rename=*/true)};
    VarSubst vs = makeVarSubst(m, /*rename=*/true);
    std::vector<std::string> bound, boundFun;
    return Expr{vs.term(std::get<TermPtr>(abs.body), bound, boundFun)};
}

namespace {

struct FunSubst {
    std::string fvar;
    const FunctionAbstract& abs;
    FreeVars absFree; // free variables of the abstract body, placeholders excluded

    void checkOuterCapture(const std::vector<std::string>& boundObj, const std::vector<std::string>& boundFun,
                           SourceSpan sp) const {
        for (const auto& b : boundObj)
            if (absFree.objects.count(b))
                throw CaptureError("abstract's free variable '" + b + "' would be captured", b, sp);
        for (const auto& b : boundFun)
            if (absFree.functions.count(b))
                throw CaptureError("abstract's free function variable '" + b + "' would be captured", b, sp);
    }

    TermPtr term(const TermPtr& t, std::vector<std::string>& bo, std::vector<std::string>& bf) {
        if (!t) return t;
        switch (t->kind) {
        case TermKind::Var:
        case TermKind::Const:
            return t;
        case TermKind::FunApp: {
            std::vector<TermPtr> args;
            for (const auto& a : t->args) args.push_back(term(a, bo, bf));
            bool isTarget = !t->definedSymbol && t->name == fvar &&
                            std::find(bf.begin(), bf.end(), fvar) == bf.end();
            if (!isTarget) return mkFunApp(t->name, std::move(args), t->definedSymbol, t->span);
            checkOuterCapture(bo, bf, t->span);
            Expr filled = fillAbstract(abs, args);
            if (std::holds_alternative<TermPtr>(filled)) return std::get<TermPtr>(filled);
            return mkTruthObject(std::get<FormulaPtr>(filled), t->span);
        }
        case TermKind::CourseOfValues: {
            bo.push_back(t->name);
            FormulaPtr nb = formula(t->body, bo, bf);
            bo.pop_back();
            return mkCourseOfValues(t->name, nb, t->span);
        }
        case TermKind::MemApp:
            return mkMemApp(term(t->args[0], bo, bf), term(t->args[1], bo, bf), t->span);
        case TermKind::TruthObject:
            return mkTruthObject(formula(t->body, bo, bf), t->span);
        }
        return t;
    }

    FormulaPtr formula(const FormulaPtr& f, std::vector<std::string>& bo, std::vector<std::string>& bf) {
        if (!f) return f;
        switch (f->kind) {
        case FormulaKind::Atom:
            return mkAtom(f->pred, term(f->t1, bo, bf), term(f->t2, bo, bf), f->span);
        case FormulaKind::Horizontal:
            if (f->t1) return mkHorizontalT(term(f->t1, bo, bf), f->span);
            return mkHorizontalF(formula(f->f1, bo, bf), f->span);
        case FormulaKind::Not:
            return mkNot(formula(f->f1, bo, bf), f->span);
        case FormulaKind::Cond:
            return mkCond(formula(f->f1, bo, bf), formula(f->f2, bo, bf), f->span);
        case FormulaKind::Iff:
            return mkIff(formula(f->f1, bo, bf), formula(f->f2, bo, bf), f->span);
        case FormulaKind::ForallObj:
        case FormulaKind::ExistsObj: {
            bo.push_back(f->var);
            FormulaPtr nb = formula(f->f1, bo, bf);
            bo.pop_back();
            return f->kind == FormulaKind::ForallObj ? mkForallObj(f->var, nb, f->span) : mkExistsObj(f->var, nb, f->span);
        }
        case FormulaKind::ForallFun: {
            bf.push_back(f->var);
            FormulaPtr nb = formula(f->f1, bo, bf);
            bf.pop_back();
            return mkForallFun(f->var, nb, f->span);
        }
        case FormulaKind::Hole: {
            std::vector<TermPtr> args;
            for (const auto& a : f->holeArgs) args.push_back(term(a, bo, bf));
            return mkHole(f->var, std::move(args), f->span);
        }
        }
        return f;
    }
};

} // namespace

FormulaPtr substituteFunction(const FormulaPtr& f, const std::string& fvar, const FunctionAbstract& abs) {
    FunSubst fs{fvar, abs, {}};
    if (std::holds_alternative<FormulaPtr>(abs.body)) fs.absFree = freeVars(std::get<FormulaPtr>(abs.body));
    else fs.absFree = freeVars(std::get<TermPtr>(abs.body));
    for (const auto& p : abs.params) fs.absFree.objects.erase(p);
    std::vector<std::string> bo, bf;
    return normalize(fs.formula(f, bo, bf));
}

} // namespace begriff
