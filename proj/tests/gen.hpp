#pragma once

// Deterministic random formula/term generators for the property suites.

#include "begriff/ast.hpp"

#include <random>
#include <string>
#include <vector>

namespace begriff::testgen {

inline const std::vector<std::string> kVars = {"x", "y", "z", "u", "w"};

struct Gen {
    std::mt19937 rng;
    Layer layer;

    explicit Gen(unsigned seed, Layer l = Layer::Fol) : rng(seed), layer(l) {}

    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

    std::string var() { return kVars[pick(static_cast<int>(kVars.size()))]; }

    TermPtr term(int depth) {
        if (layer == Layer::Fol || depth <= 0) return mkVar(var());
        switch (pick(5)) {
        case 0: return mkVar(var());
        case 1: return mkMemApp(term(depth - 1), term(depth - 1));
        case 2: return mkCourseOfValues(var(), formula(depth - 1));
        case 3: return mkTruthObject(formula(depth - 1));
        default: return mkFunApp("f", {term(depth - 1)});
        }
    }

    FormulaPtr atom() {
        if (layer == Layer::Fol)
            return pick(2) ? mkAtom(Pred::Membership, mkVar(var()), mkVar(var()))
                           : mkAtom(Pred::Identity, mkVar(var()), mkVar(var()));
        return pick(2) ? mkHorizontalT(mkMemApp(mkVar(var()), mkVar(var())))
                       : mkAtom(Pred::Identity, mkVar(var()), mkVar(var()));
    }

    FormulaPtr formula(int depth) {
        if (depth <= 0) return atom();
        int r = pick(layer == Layer::Fol ? 7 : 6);
        switch (r) {
        case 0: return atom();
        case 1: return mkNot(formula(depth - 1));
        case 2: return mkCond(formula(depth - 1), formula(depth - 1));
        case 3: return mkForallObj(var(), formula(depth - 1));
        case 4:
            return layer == Layer::Fol ? mkExistsObj(var(), formula(depth - 1))
                                       : mkForallFun("g", formula(depth - 1));
        case 5:
            return layer == Layer::Fol ? mkIff(formula(depth - 1), formula(depth - 1))
                                       : mkHorizontalT(term(depth - 1));
        default: return mkAtom(Pred::Membership, mkVar(var()), mkVar(var()));
        }
    }
};

// Independent capture detector used as the oracle for the substitution
// property suite: would substituting t for free x in f capture a free
// variable of t?
inline bool wouldCapture(const FormulaPtr& f, const std::string& x, const std::set<std::string>& tFree,
                         std::vector<std::string>& bound);

inline bool wouldCaptureTerm(const TermPtr& t, const std::string& x, const std::set<std::string>& tFree,
                             std::vector<std::string>& bound) {
    if (!t) return false;
    switch (t->kind) {
    case TermKind::Var: {
        if (t->name != x) return false;
        // only free occurrences of x count
        for (auto it = bound.rbegin(); it != bound.rend(); ++it)
            if (*it == x) return false;
        for (const auto& b : bound)
            if (tFree.count(b)) return true;
        return false;
    }
    case TermKind::Const: return false;
    case TermKind::FunApp: {
        for (const auto& a : t->args)
            if (wouldCaptureTerm(a, x, tFree, bound)) return true;
        return false;
    }
    case TermKind::CourseOfValues: {
        bound.push_back(t->name);
        bool r = wouldCapture(t->body, x, tFree, bound);
        bound.pop_back();
        return r;
    }
    case TermKind::MemApp:
        return wouldCaptureTerm(t->args[0], x, tFree, bound) || wouldCaptureTerm(t->args[1], x, tFree, bound);
    case TermKind::TruthObject:
        return wouldCapture(t->body, x, tFree, bound);
    }
    return false;
}

inline bool wouldCapture(const FormulaPtr& f, const std::string& x, const std::set<std::string>& tFree,
                         std::vector<std::string>& bound) {
    if (!f) return false;
    if (wouldCaptureTerm(f->t1, x, tFree, bound) || wouldCaptureTerm(f->t2, x, tFree, bound)) return true;
    for (const auto& a : f->holeArgs)
        if (wouldCaptureTerm(a, x, tFree, bound)) return true;
    bool binder = f->kind == FormulaKind::ForallObj || f->kind == FormulaKind::ExistsObj;
    if (binder) {
        bound.push_back(f->var);
        bool r = wouldCapture(f->f1, x, tFree, bound);
        bound.pop_back();
        return r;
    }
    return wouldCapture(f->f1, x, tFree, bound) || wouldCapture(f->f2, x, tFree, bound);
}

inline bool wouldCapture(const FormulaPtr& f, const std::string& x, const std::set<std::string>& tFree) {
    std::vector<std::string> bound;
    return wouldCapture(f, x, tFree, bound);
}

} // namespace begriff::testgen
