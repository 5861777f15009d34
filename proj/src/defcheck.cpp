#include "begriff/defcheck.hpp"

#include "begriff/battery.hpp"
#include "begriff/subst.hpp"
#include "begriff/syntax.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace begriff {

FormulaPtr uniqueExistence(const Definition& d) {
    std::set<std::string> avoid = freeVars(d.psi).objects;
    avoid.insert(d.y);
    for (const auto& x : d.xs) avoid.insert(x);
    std::string yp = freshName(d.y + "'", avoid);
    FormulaPtr psiYp = substituteVar(d.psi, d.y, mkVar(yp));
    FormulaPtr inner = mkForallObj(yp, mkCond(psiYp, mkAtom(Pred::Identity, mkVar(yp), mkVar(d.y))));
    return mkExistsObj(d.y, mkAnd(d.psi, inner));
}

FormulaPtr definitionalAxiom(const Definition& d) {
    TermPtr lhs;
    if (d.rank == 0) {
        lhs = mkConst(d.symbol);
    } else {
        std::vector<TermPtr> args;
        for (const auto& x : d.xs) args.push_back(mkVar(x));
        lhs = mkFunApp(d.symbol, std::move(args), /*defined=*/true);
    }
    FormulaPtr body = mkIff(mkAtom(Pred::Identity, lhs, mkVar(d.y)), d.psi);
    FormulaPtr out = mkForallObj(d.y, body);
    for (auto it = d.xs.rbegin(); it != d.xs.rend(); ++it) out = mkForallObj(*it, out);
    return out;
}

// ---- restrictions (i)-(iv) --------------------------------------------------

namespace {

void collectNonLogical(const TermPtr& t, std::set<std::string>& consts, std::set<std::string>& ops) {
    if (!t) return;
    if (t->kind == TermKind::Const) consts.insert(t->name);
    if (t->kind == TermKind::FunApp) ops.insert(t->name);
    for (const auto& a : t->args) collectNonLogical(a, consts, ops);
    if (t->body) throw LayerMismatch("definitions live in the FOL layer");
}

void collectNonLogical(const FormulaPtr& f, std::set<std::string>& consts, std::set<std::string>& ops) {
    if (!f) return;
    collectNonLogical(f->t1, consts, ops);
    collectNonLogical(f->t2, consts, ops);
    collectNonLogical(f->f1, consts, ops);
    collectNonLogical(f->f2, consts, ops);
}

} // namespace

DefReport checkDefinition(Theory& th, const Definition& d, const DefCheckOptions& opts) {
    if (th.layer() != Layer::Fol) throw LayerMismatch("check_definition requires a FOL theory");
    DefReport rep;
    rep.symbol = d.symbol;

    // (i) x1..xn, y are distinct variables
    {
        std::set<std::string> seen;
        bool ok = true;
        for (const auto& x : d.xs) ok = ok && seen.insert(x).second;
        ok = ok && seen.insert(d.y).second;
        rep.distinctVars = {ok, ok ? "" : "argument variables and y must be pairwise distinct"};
    }
    // (ii) psi has no free variables other than x1..xn, y
    {
        auto fv = freeVars(d.psi);
        std::set<std::string> allowed(d.xs.begin(), d.xs.end());
        allowed.insert(d.y);
        std::string extra;
        for (const auto& v : fv.objects)
            if (!allowed.count(v)) extra += (extra.empty() ? "" : ", ") + v;
        for (const auto& v : fv.functions) extra += (extra.empty() ? "" : ", ") + v;
        rep.freeVars = {extra.empty(), extra.empty() ? "" : "free variables beyond x1..xn, y: " + extra};
    }
    // (iii) only primitive and previously defined symbols
    {
        std::set<std::string> consts, ops;
        collectNonLogical(d.psi, consts, ops);
        SymbolTable st = th.symbols();
        std::string unknown;
        for (const auto& c : consts)
            if (!st.isConstant(c)) unknown += (unknown.empty() ? "" : ", ") + c;
        for (const auto& o : ops)
            if (!st.operationArity(o)) unknown += (unknown.empty() ? "" : ", ") + o;
        if (mentionsSymbol(d.psi, d.symbol)) unknown += (unknown.empty() ? "" : ", ") + d.symbol + " (itself)";
        rep.knownSymbols = {unknown.empty(), unknown.empty() ? "" : "symbols not in the theory: " + unknown};
    }
    // (iv) exists! y psi derivable: consult the store; optionally prove
    {
        FormulaPtr goal = uniqueExistence(d);
        bool present = th.storeContains(goal);
        std::string note;
        if (!present && opts.proveMissing) {
            // close over x1..xn and chain the theory's axioms as antecedents,
            // then detach them back off with mp so the store ends up holding
            // exists! y psi itself
            FormulaPtr target = goal;
            for (auto it = d.xs.rbegin(); it != d.xs.rend(); ++it) target = mkForallObj(*it, target);
            FormulaPtr impl = target;
            const auto& axioms = th.semanticAxioms();
            for (auto it = axioms.rbegin(); it != axioms.rend(); ++it) impl = mkCond(*it, impl);
            ProveResult pr = prove(impl, opts.proverLimits);
            if (pr.proved) {
                std::string cur = "uniq_" + d.symbol;
                th.fromTableau(cur, impl, pr.trace);
                int i = 0;
                for (const auto& ax : axioms) {
                    auto axId = th.findTheorem(ax);
                    if (!axId) throw Error("axiom missing from the store");
                    std::string next = "uniq_" + d.symbol + "_mp" + std::to_string(++i);
                    th.mp(next, cur, *axId);
                    cur = next;
                }
                for (const auto& x : d.xs) {
                    std::string next = "uniq_" + d.symbol + "_el" + std::to_string(++i);
                    th.rewrite(next, cur, "forall_elim", Path{}, mkVar(x));
                    cur = next;
                }
                present = th.storeContains(goal);
                note = "derived by the prover from the axioms";
            }
        }
        rep.uniqueness = {present, present ? note : "exists! y psi is not derivable from the store"};
        if (!present) {
            // is existence itself refutable?
            FormulaPtr noY = mkNot(mkExistsObj(d.y, d.psi));
            for (auto it = d.xs.rbegin(); it != d.xs.rend(); ++it) noY = mkForallObj(*it, noY);
            if (isClosed(noY)) {
                ProveResult pr = prove(noY, opts.proverLimits);
                rep.existenceRefuted = pr.proved;
            }
        }
    }

    if (opts.runConservativity && rep.distinctVars.pass && rep.freeVars.pass && rep.knownSymbols.pass)
        rep.conservativity = conservativityCheck(th, d, opts.maxModelSize, opts.timeBudget);
    return rep;
}

// ---- eliminability -----------------------------------------------------------

namespace {

bool isDefTerm(const TermPtr& t, const Definition& d) {
    if (d.rank == 0) return t->kind == TermKind::Const && t->name == d.symbol;
    return t->kind == TermKind::FunApp && t->definedSymbol && t->name == d.symbol &&
           static_cast<int>(t->args.size()) == d.rank;
}

// innermost-leftmost defined-symbol occurrence inside a term
TermPtr findDefTerm(const TermPtr& t, const Definition& d) {
    if (!t) return nullptr;
    for (const auto& a : t->args)
        if (auto hit = findDefTerm(a, d)) return hit;
    if (isDefTerm(t, d)) return t;
    return nullptr;
}

TermPtr replaceExact(const TermPtr& t, const TermPtr& target, const TermPtr& with) {
    if (t == target) return with;
    if (!t || t->args.empty()) return t;
    auto ct = std::make_shared<Term>(*t);
    for (auto& a : ct->args) a = replaceExact(a, target, with);
    return ct;
}

FormulaPtr eliminateOnce(const FormulaPtr& f, const Definition& d, bool& did) {
    if (!f || did) return f;
    switch (f->kind) {
    case FormulaKind::Atom: {
        TermPtr hit = findDefTerm(f->t1, d);
        if (!hit) hit = findDefTerm(f->t2, d);
        if (!hit) return f;
        did = true;
        std::set<std::string> avoid = freeVars(f).objects;
        auto pv = freeVars(d.psi);
        avoid.insert(pv.objects.begin(), pv.objects.end());
        std::string yst = freshName(d.y, avoid);
        // psi[x1..xn := args][y := fresh]
        std::map<std::string, TermPtr> m;
        for (size_t i = 0; i < d.xs.size(); ++i) m[d.xs[i]] = hit->args[i];
        m[d.y] = mkVar(yst);
        FormulaPtr psiInst = substituteVars(d.psi, m);
        FormulaPtr atomReplaced = mkAtom(f->pred, replaceExact(f->t1, hit, mkVar(yst)),
                                         replaceExact(f->t2, hit, mkVar(yst)), f->span);
        return mkExistsObj(yst, mkAnd(psiInst, atomReplaced));
    }
    case FormulaKind::Not:
        return mkNot(eliminateOnce(f->f1, d, did), f->span);
    case FormulaKind::Cond: {
        FormulaPtr a = eliminateOnce(f->f1, d, did);
        FormulaPtr b = eliminateOnce(f->f2, d, did);
        return mkCond(a, b, f->span);
    }
    case FormulaKind::Iff: {
        FormulaPtr a = eliminateOnce(f->f1, d, did);
        FormulaPtr b = eliminateOnce(f->f2, d, did);
        return mkIff(a, b, f->span);
    }
    case FormulaKind::ForallObj:
        return mkForallObj(f->var, eliminateOnce(f->f1, d, did), f->span);
    case FormulaKind::ExistsObj:
        return mkExistsObj(f->var, eliminateOnce(f->f1, d, did), f->span);
    default:
        throw LayerMismatch("eliminate applies to FOL formulas");
    }
}

} // namespace

FormulaPtr eliminate(const FormulaPtr& f, const Definition& d) {
    if (mentionsSymbol(d.psi, d.symbol))
        throw Error("defining formula mentions the defined symbol"); // impossible by invariant, asserted anyway
    FormulaPtr cur = f;
    int steps = 0;
    const int guard = 10000;
    while (true) {
        bool did = false;
        FormulaPtr next = eliminateOnce(cur, d, did);
        if (!did) break;
        cur = next;
        if (++steps > guard) throw Error("eliminate: rewrite did not terminate");
    }
    return cur;
}

// ---- conservativity -----------------------------------------------------------

std::vector<Model> allModelsOfSize(const std::vector<FormulaPtr>& axioms, int k) {
    int bits = k * k;
    long long total = 1LL << bits;
    unsigned chunks = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    long long per = (total + chunks - 1) / chunks;
    std::vector<std::future<std::vector<Model>>> futs;
    for (unsigned c = 0; c < chunks; ++c) {
        long long lo = c * per, hi = std::min(total, (c + 1) * per);
        if (lo >= hi) break;
        futs.push_back(std::async(std::launch::async, [&, lo, hi]() {
            std::vector<Model> found;
            for (long long table = lo; table < hi; ++table) {
                Model m;
                m.size = k;
                m.membership.assign(k, std::vector<bool>(k, false));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        m.membership[i][j] = (table >> (bits - 1 - (i * k + j))) & 1;
                bool ok = true;
                for (const auto& ax : axioms)
                    if (!satisfies(m, ax)) { ok = false; break; }
                if (ok) found.push_back(std::move(m));
            }
            return found;
        }));
    }
    std::vector<Model> out;
    for (auto& f : futs) {
        auto part = f.get();
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<Model> expansions(const Model& base, const Definition& d) {
    FormulaPtr ax = definitionalAxiom(d);
    std::vector<Model> out;
    int k = base.size;
    if (d.rank == 0) {
        for (int e = 0; e < k; ++e) {
            Model m = base;
            m.assignment[d.symbol] = e;
            if (satisfies(m, ax)) out.push_back(std::move(m));
        }
        return out;
    }
    if (d.rank > 2) throw Error("expansion enumeration supports rank <= 2");
    long long cells = 1;
    for (int i = 0; i < d.rank; ++i) cells *= k;
    long long tables = 1;
    for (long long i = 0; i < cells; ++i) tables *= k;
    for (long long tn = 0; tn < tables; ++tn) {
        Model m = base;
        std::vector<int> table(cells);
        long long rest = tn;
        for (long long c = cells - 1; c >= 0; --c) {
            table[static_cast<size_t>(c)] = static_cast<int>(rest % k);
            rest /= k;
        }
        m.opTables[d.symbol] = table;
        if (satisfies(m, ax)) out.push_back(std::move(m));
    }
    return out;
}

ConservativityResult conservativityCheck(const Theory& th, const Definition& d, int maxSize,
                                         std::chrono::milliseconds timeBudget) {
    if (maxSize < 1) throw Error("conservativity: size bound must be positive");
    auto start = std::chrono::steady_clock::now();
    auto expired = [&] { return std::chrono::steady_clock::now() - start > timeBudget; };

    ConservativityResult res;
    std::vector<Model> base;
    std::vector<Model> expandable;
    for (int k = 1; k <= maxSize; ++k) {
        if (expired()) {
            res.timedOut = true;
            break;
        }
        auto ms = allModelsOfSize(th.semanticAxioms(), k);
        int expandCount = 0;
        for (const auto& m : ms) {
            if (!expansions(m, d).empty()) {
                expandable.push_back(m);
                expandCount++;
            }
            base.push_back(m);
        }
        res.baseCount.push_back(static_cast<int>(ms.size()));
        res.expandableCount.push_back(expandCount);
        res.upTo = k;
    }

    auto truthOverBase = [&](const FormulaPtr& s) {
        std::vector<bool> tv;
        tv.reserve(base.size());
        for (const auto& m : base) tv.push_back(satisfies(m, s));
        return tv;
    };
    std::vector<FormulaPtr> battery = dedupByTruthVector(sentenceBattery(), truthOverBase);
    res.batterySize = static_cast<int>(battery.size());

    for (const auto& s : battery) {
        bool inAllExpanded = true;
        for (const auto& m : expandable)
            if (!satisfies(m, s)) { inAllExpanded = false; break; }
        if (!inAllExpanded) continue;
        for (const auto& m : base) {
            if (!satisfies(m, s)) {
                res.creative = true;
                res.witness = render(s);
                res.witnessSize = m.size;
                return res;
            }
        }
    }
    return res;
}

} // namespace begriff
