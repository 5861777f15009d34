#include "begriff/model.hpp"

#include <algorithm>
#include <set>

namespace begriff {

int evalTerm(const TermPtr& t, const Model& m, std::map<std::string, int>& env) {
    switch (t->kind) {
    case TermKind::Var:
    case TermKind::Const: {
        auto it = env.find(t->name);
        if (it != env.end()) return it->second;
        auto it2 = m.assignment.find(t->name);
        if (it2 != m.assignment.end()) return it2->second;
        throw Error("evaluation: no value for '" + t->name + "'");
    }
    case TermKind::FunApp: {
        auto it = m.opTables.find(t->name);
        if (it == m.opTables.end()) throw Error("evaluation: no table for operation '" + t->name + "'");
        long long idx = 0;
        for (const auto& a : t->args) idx = idx * m.size + evalTerm(a, m, env);
        return it->second.at(static_cast<size_t>(idx));
    }
    default:
        throw LayerMismatch("finite models interpret the FOL layer only");
    }
}

bool evalFormula(const FormulaPtr& f, const Model& m, std::map<std::string, int>& env) {
    switch (f->kind) {
    case FormulaKind::Atom: {
        int a = evalTerm(f->t1, m, env);
        int b = evalTerm(f->t2, m, env);
        return f->pred == Pred::Identity ? a == b : m.memb(a, b);
    }
    case FormulaKind::Not:
        return !evalFormula(f->f1, m, env);
    case FormulaKind::Cond:
        return !evalFormula(f->f1, m, env) || evalFormula(f->f2, m, env);
    case FormulaKind::Iff:
        return evalFormula(f->f1, m, env) == evalFormula(f->f2, m, env);
    case FormulaKind::ForallObj: {
        for (int v = 0; v < m.size; ++v) {
            auto saved = env.find(f->var) != env.end() ? std::optional<int>(env[f->var]) : std::nullopt;
            env[f->var] = v;
            bool ok = evalFormula(f->f1, m, env);
            if (saved) env[f->var] = *saved; else env.erase(f->var);
            if (!ok) return false;
        }
        return true;
    }
    case FormulaKind::ExistsObj: {
        for (int v = 0; v < m.size; ++v) {
            auto saved = env.find(f->var) != env.end() ? std::optional<int>(env[f->var]) : std::nullopt;
            env[f->var] = v;
            bool ok = evalFormula(f->f1, m, env);
            if (saved) env[f->var] = *saved; else env.erase(f->var);
            if (ok) return true;
        }
        return false;
    }
    default:
        throw LayerMismatch("finite models interpret the FOL layer only");
    }
}

bool satisfies(const Model& m, const FormulaPtr& f) {
    std::map<std::string, int> env;
    return evalFormula(f, m, env);
}

std::vector<std::string> namesToAssign(const std::vector<FormulaPtr>& axioms) {
    std::set<std::string> names;
    for (const auto& f : axioms) {
        auto fv = freeVars(f);
        names.insert(fv.objects.begin(), fv.objects.end());
        if (!fv.functions.empty())
            throw LayerMismatch("free function variables have no finite-model interpretation");
    }
    // constants mentioned anywhere get assigned too
    std::function<void(const TermPtr&)> scanT = [&](const TermPtr& t) {
        if (!t) return;
        if (t->kind == TermKind::Const) names.insert(t->name);
        for (const auto& a : t->args) scanT(a);
        if (t->body)
            throw LayerMismatch("finite models interpret the FOL layer only");
    };
    std::function<void(const FormulaPtr&)> scanF = [&](const FormulaPtr& f) {
        if (!f) return;
        scanT(f->t1);
        scanT(f->t2);
        scanF(f->f1);
        scanF(f->f2);
    };
    for (const auto& f : axioms) scanF(f);
    return {names.begin(), names.end()};
}

FindModelResult findModel(const std::vector<FormulaPtr>& axioms, int maxSize) {
    if (maxSize < 1) throw Error("maxSize must be positive");
    std::vector<std::string> names = namesToAssign(axioms);
    FindModelResult res;
    res.maxSize = maxSize;
    for (int k = 1; k <= maxSize; ++k) {
        int bits = k * k;
        if (bits > 30) throw Error("carrier too large for exhaustive enumeration");
        for (long long table = 0; table < (1LL << bits); ++table) {
            Model m;
            m.size = k;
            m.membership.assign(k, std::vector<bool>(k, false));
            // bit for pair (i,j) in row-major order; (0,0) is the most
            // significant so tables sort lexicographically by bit string
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    m.membership[i][j] = (table >> (bits - 1 - (i * k + j))) & 1;
            long long assignments = 1;
            for (size_t n = 0; n < names.size(); ++n) assignments *= k;
            for (long long an = 0; an < assignments; ++an) {
                // first name varies slowest: lexicographic over the tuple
                for (size_t n = 0; n < names.size(); ++n) {
                    long long div = 1;
                    for (size_t q = n + 1; q < names.size(); ++q) div *= k;
                    m.assignment[names[n]] = static_cast<int>((an / div) % k);
                }
                res.interpretationsTried++;
                bool ok = true;
                for (const auto& ax : axioms)
                    if (!satisfies(m, ax)) { ok = false; break; }
                if (ok) {
                    res.model = m;
                    return res;
                }
            }
        }
    }
    return res;
}

} // namespace begriff
