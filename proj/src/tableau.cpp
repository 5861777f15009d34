#include "begriff/tableau.hpp"

#include "begriff/subst.hpp"
#include "begriff/syntax.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace begriff {

namespace {

using nlohmann::json;

struct Entry {
    bool sign;
    FormulaPtr f;
    bool processed = false;               // for alpha/beta/delta rules
    std::set<std::string> gammaTried;     // instantiation terms already used (rendered)
};

using Branch = std::vector<Entry>;

std::string key(bool sign, const FormulaPtr& f) { return (sign ? "T " : "F ") + render(f); }

bool isLiteral(const FormulaPtr& f) { return f->kind == FormulaKind::Atom; }

bool isGamma(const Entry& e) {
    return (e.sign && e.f->kind == FormulaKind::ForallObj) || (!e.sign && e.f->kind == FormulaKind::ExistsObj);
}

bool isDelta(const Entry& e) {
    return (e.sign && e.f->kind == FormulaKind::ExistsObj) || (!e.sign && e.f->kind == FormulaKind::ForallObj);
}

// ---- ground terms and congruence ----------------------------------------

void subterms(const TermPtr& t, std::vector<TermPtr>& out) {
    out.push_back(t);
    for (const auto& a : t->args) subterms(a, out);
}

// Ground subterms occurring anywhere on the branch, including inside
// quantified bodies (terms mentioning a bound variable are skipped).
void groundTermsIn(const FormulaPtr& f, std::vector<std::string>& bound, std::vector<TermPtr>& out) {
    if (!f) return;
    auto grab = [&](const TermPtr& t) {
        if (!t) return;
        std::vector<TermPtr> subs;
        subterms(t, subs);
        for (const auto& s : subs) {
            auto fv = freeVars(s);
            bool groundHere = true;
            for (const auto& b : bound)
                if (fv.objects.count(b)) { groundHere = false; break; }
            if (groundHere) out.push_back(s);
        }
    };
    grab(f->t1);
    grab(f->t2);
    if (f->kind == FormulaKind::ForallObj || f->kind == FormulaKind::ExistsObj) {
        bound.push_back(f->var);
        groundTermsIn(f->f1, bound, out);
        bound.pop_back();
        return;
    }
    groundTermsIn(f->f1, bound, out);
    groundTermsIn(f->f2, bound, out);
}

std::vector<TermPtr> branchTerms(const Branch& branch) {
    std::vector<TermPtr> all;
    for (const auto& e : branch) {
        std::vector<std::string> bound;
        groundTermsIn(e.f, bound, all);
    }
    std::map<std::string, TermPtr> dedup;
    for (const auto& t : all) dedup.emplace(render(t), t);
    std::vector<TermPtr> out;
    for (const auto& [k, t] : dedup) out.push_back(t);
    std::stable_sort(out.begin(), out.end(), [](const TermPtr& a, const TermPtr& b) {
        std::string ra = render(a), rb = render(b);
        return ra.size() != rb.size() ? ra.size() < rb.size() : ra < rb;
    });
    return out;
}

// Union-find with congruence propagation over the branch's ground terms.
struct Congruence {
    std::vector<TermPtr> terms;
    std::map<std::string, int> id;
    std::vector<int> parent;

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }

    int index(const TermPtr& t) {
        auto it = id.find(render(t));
        return it == id.end() ? -1 : it->second;
    }

    explicit Congruence(const Branch& branch) {
        terms = branchTerms(branch);
        for (size_t i = 0; i < terms.size(); ++i) {
            id[render(terms[i])] = static_cast<int>(i);
            parent.push_back(static_cast<int>(i));
        }
        for (const auto& e : branch)
            if (e.sign && e.f->kind == FormulaKind::Atom && e.f->pred == Pred::Identity)
                unite(index(e.f->t1), index(e.f->t2));
        // congruence: equal arguments force equal applications
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < terms.size(); ++i) {
                for (size_t j = i + 1; j < terms.size(); ++j) {
                    const TermPtr& a = terms[i];
                    const TermPtr& b = terms[j];
                    if (a->kind != TermKind::FunApp || b->kind != TermKind::FunApp) continue;
                    if (a->name != b->name || a->args.size() != b->args.size()) continue;
                    if (find(static_cast<int>(i)) == find(static_cast<int>(j))) continue;
                    bool argsEq = true;
                    for (size_t k = 0; k < a->args.size(); ++k)
                        if (find(index(a->args[k])) != find(index(b->args[k]))) { argsEq = false; break; }
                    if (argsEq) {
                        unite(static_cast<int>(i), static_cast<int>(j));
                        changed = true;
                    }
                }
            }
        }
    }

    bool equal(const TermPtr& a, const TermPtr& b) {
        int ia = index(a), ib = index(b);
        if (ia < 0 || ib < 0) return false;
        return find(ia) == find(ib);
    }
};

struct ClosureInfo {
    std::string kind; // "pair" or "eq"
    std::string detail;
};

std::optional<ClosureInfo> closureOf(const Branch& branch) {
    // signed pair {T phi, F phi}, literal pairs modulo congruence
    for (size_t i = 0; i < branch.size(); ++i) {
        for (size_t j = 0; j < branch.size(); ++j) {
            if (branch[i].sign == branch[j].sign) continue;
            if (alphaEqual(branch[i].f, branch[j].f))
                return ClosureInfo{"pair", render(branch[i].f)};
        }
    }
    Congruence cc(branch);
    for (const auto& e : branch) {
        if (e.f->kind != FormulaKind::Atom) continue;
        if (!e.sign && e.f->pred == Pred::Identity && cc.equal(e.f->t1, e.f->t2))
            return ClosureInfo{"eq", render(e.f)};
    }
    for (const auto& a : branch) {
        if (!a.sign || a.f->kind != FormulaKind::Atom || a.f->pred != Pred::Membership) continue;
        for (const auto& b : branch) {
            if (b.sign || b.f->kind != FormulaKind::Atom || b.f->pred != Pred::Membership) continue;
            if (cc.equal(a.f->t1, b.f->t1) && cc.equal(a.f->t2, b.f->t2))
                return ClosureInfo{"pair", render(a.f) + " / " + render(b.f)};
        }
    }
    return std::nullopt;
}

// ---- rule decomposition ---------------------------------------------------

struct RuleOut {
    std::string rule;
    std::vector<std::vector<Entry>> childAdds;
    std::string term; // gamma/delta
};

std::set<std::string> namesInFormula(const FormulaPtr& f) {
    std::set<std::string> out;
    std::function<void(const TermPtr&)> st = [&](const TermPtr& t) {
        if (!t) return;
        out.insert(t->name);
        for (const auto& a : t->args) st(a);
        if (t->body) { /* FOL only: no binder terms */ }
    };
    std::function<void(const FormulaPtr&)> sf = [&](const FormulaPtr& g) {
        if (!g) return;
        if (!g->var.empty()) out.insert(g->var);
        st(g->t1);
        st(g->t2);
        sf(g->f1);
        sf(g->f2);
    };
    sf(f);
    return out;
}

struct Search {
    TableauLimits limits;
    TableauStats stats;
    int freshCounter = 0;
    int branchGammaCap = 0; // per-branch multiplicity, iteratively deepened
    std::set<std::string> reservedNames;
    bool exhausted = false;

    std::string freshConst(const Branch& branch) {
        std::set<std::string> used = reservedNames;
        for (const auto& e : branch) {
            auto ns = namesInFormula(e.f);
            used.insert(ns.begin(), ns.end());
        }
        std::string name;
        do {
            name = "c" + std::to_string(++freshCounter);
        } while (used.count(name));
        return name;
    }

    // Returns a closed subtree or nullopt (resource exhaustion / open).
    std::optional<json> expand(Branch branch, int depth, int gammasOnBranch) {
        stats.nodes++;
        stats.maxDepth = std::max(stats.maxDepth, depth);
        if (auto closed = closureOf(branch)) {
            json leaf;
            leaf["rule"] = "closed";
            leaf["closure"] = {{"kind", closed->kind}, {"detail", closed->detail}};
            return leaf;
        }
        if (depth >= limits.depth) {
            exhausted = true;
            return std::nullopt;
        }

        auto attempt = [&](size_t idx, const RuleOut& out) -> std::optional<json> {
            json node;
            node["rule"] = out.rule;
            node["principal"] = key(branch[idx].sign, branch[idx].f);
            if (!out.term.empty()) node["term"] = out.term;
            json children = json::array();
            for (const auto& adds : out.childAdds) {
                Branch child = branch;
                child[idx].processed = true;
                json addList = json::array();
                for (const auto& e : adds) {
                    bool dup = false;
                    for (const auto& ex : child)
                        if (ex.sign == e.sign && alphaEqual(ex.f, e.f)) { dup = true; break; }
                    if (!dup) child.push_back(e);
                    addList.push_back(key(e.sign, e.f));
                }
                auto sub = expand(std::move(child), depth + 1, gammasOnBranch);
                if (!sub) return std::nullopt;
                (*sub)["add"] = addList;
                children.push_back(*sub);
            }
            node["children"] = children;
            return node;
        };

        // alpha and delta rules first, in order of addition
        for (size_t i = 0; i < branch.size(); ++i) {
            const Entry& e = branch[i];
            if (e.processed || isLiteral(e.f) || isGamma(e)) continue;
            const FormulaPtr& f = e.f;
            RuleOut out;
            if (f->kind == FormulaKind::Not) {
                out = {"alpha", {{Entry{!e.sign, f->f1}}}, ""};
            } else if (f->kind == FormulaKind::Cond && !e.sign) {
                out = {"alpha", {{Entry{true, f->f1}, Entry{false, f->f2}}}, ""};
            } else if (f->kind == FormulaKind::Cond && e.sign) {
                out = {"beta", {{Entry{false, f->f1}}, {Entry{true, f->f2}}}, ""};
            } else if (f->kind == FormulaKind::Iff && e.sign) {
                out = {"beta", {{Entry{true, f->f1}, Entry{true, f->f2}}, {Entry{false, f->f1}, Entry{false, f->f2}}}, ""};
            } else if (f->kind == FormulaKind::Iff && !e.sign) {
                out = {"beta", {{Entry{true, f->f1}, Entry{false, f->f2}}, {Entry{false, f->f1}, Entry{true, f->f2}}}, ""};
            } else if (isDelta(e)) {
                std::string c = freshConst(branch);
                FormulaPtr inst = substituteVar(f->f1, f->var, mkVar(c));
                out = {"delta", {{Entry{e.sign, inst}}}, c};
            } else {
                continue;
            }
            return attempt(i, out);
        }

        // gamma with backtracking under a per-branch multiplicity cap: try
        // instantiation candidates in order (branch subterms, newest first;
        // a fresh constant as a last resort), abandoning any choice whose
        // subtree cannot be closed
        if (gammasOnBranch >= branchGammaCap) {
            exhausted = true;
            return std::nullopt;
        }
        std::vector<TermPtr> terms = branchTerms(branch);
        std::reverse(terms.begin(), terms.end()); // delta witnesses first
        std::vector<std::pair<size_t, TermPtr>> candidates;
        for (size_t i = 0; i < branch.size(); ++i) {
            const Entry& e = branch[i];
            if (!isGamma(e)) continue;
            for (const auto& t : terms) {
                if (e.gammaTried.count(render(t))) continue;
                FormulaPtr inst = substituteVar(e.f->f1, e.f->var, t);
                bool present = false;
                for (const auto& ex : branch)
                    if (ex.sign == e.sign && alphaEqual(ex.f, inst)) { present = true; break; }
                if (!present) candidates.emplace_back(i, t);
            }
        }
        for (size_t i = 0; i < branch.size(); ++i) {
            if (!isGamma(branch[i])) continue;
            candidates.emplace_back(i, mkVar(freshConst(branch)));
            break;
        }
        for (const auto& [i, pick] : candidates) {
            if (stats.gammaUsed >= limits.gammaInstantiations) {
                exhausted = true;
                return std::nullopt;
            }
            stats.gammaUsed++;
            Branch child = branch;
            child[i].gammaTried.insert(render(pick));
            const Entry& e = child[i];
            FormulaPtr inst = substituteVar(e.f->f1, e.f->var, pick);
            json node;
            node["rule"] = "gamma";
            node["principal"] = key(e.sign, e.f);
            node["term"] = render(pick);
            json addList = json::array({key(e.sign, inst)});
            bool dup = false;
            for (const auto& ex : child)
                if (ex.sign == e.sign && alphaEqual(ex.f, inst)) { dup = true; break; }
            if (!dup) child.push_back(Entry{e.sign, inst});
            auto sub = expand(std::move(child), depth + 1, gammasOnBranch + 1);
            if (!sub) continue; // backtrack to the next candidate
            (*sub)["add"] = addList;
            node["children"] = json::array({*sub});
            return node;
        }
        // open and saturated, or all candidates exhausted
        exhausted = true;
        return std::nullopt;
    }
};

} // namespace

namespace {

bool folOnly(const FormulaPtr& f) {
    if (!f) return true;
    switch (f->kind) {
    case FormulaKind::Horizontal:
    case FormulaKind::ForallFun:
        return false;
    default:
        break;
    }
    auto termOk = [](const TermPtr& t, auto&& self) -> bool {
        if (!t) return true;
        if (t->kind == TermKind::CourseOfValues || t->kind == TermKind::MemApp || t->kind == TermKind::TruthObject)
            return false;
        for (const auto& a : t->args)
            if (!self(a, self)) return false;
        return true;
    };
    if (!termOk(f->t1, termOk) || !termOk(f->t2, termOk)) return false;
    return folOnly(f->f1) && folOnly(f->f2);
}

} // namespace

ProveResult prove(const FormulaPtr& goal, const TableauLimits& limits) {
    if (!folOnly(goal)) throw LayerMismatch("prove expects a FOL-layer formula");
    if (!isClosed(goal)) throw Error("prove expects a closed formula");
    ProveResult res;
    // iterative deepening over the per-branch gamma multiplicity
    for (int cap = 1; cap <= std::max(1, limits.gammaInstantiations); ++cap) {
        Search s;
        s.limits = limits;
        s.branchGammaCap = cap;
        s.reservedNames = namesInFormula(goal);
        Branch root{Entry{false, normalize(goal)}};
        auto tree = s.expand(root, 0, 0);
        res.stats.maxDepth = std::max(res.stats.maxDepth, s.stats.maxDepth);
        res.stats.nodes += s.stats.nodes;
        res.stats.gammaUsed += s.stats.gammaUsed;
        if (tree) {
            (*tree)["add"] = json::array({key(false, normalize(goal))});
            json doc;
            doc["goal"] = render(goal);
            doc["root"] = *tree;
            res.proved = true;
            return res.trace = doc.dump(), res;
        }
        if (res.stats.gammaUsed >= limits.gammaInstantiations) break;
    }
    return res;
}

// ---- independent replay ----------------------------------------------------
//
// The checker shares no state with the search: it re-parses every formula in
// the trace, re-derives each rule's expected additions, and re-verifies leaf
// closure with a naive fixpoint congruence (not the union-find above).

namespace {

struct SF {
    bool sign;
    FormulaPtr f;
};

SF parseSigned(const std::string& s) {
    if (s.size() < 2 || (s[0] != 'T' && s[0] != 'F') || s[1] != ' ') throw Error("bad signed formula: " + s);
    return SF{s[0] == 'T', parseFormula(s.substr(2), Layer::Fol)};
}

void collectTerms(const TermPtr& t, std::vector<TermPtr>& out) {
    out.push_back(t);
    for (const auto& a : t->args) collectTerms(a, out);
}

// naive congruence fixpoint: pairwise matrix
struct NaiveCongruence {
    std::vector<TermPtr> terms;
    std::vector<std::vector<bool>> eq;

    explicit NaiveCongruence(const std::vector<SF>& branch) {
        std::map<std::string, TermPtr> dedup;
        for (const auto& e : branch) {
            if (e.f->kind != FormulaKind::Atom) continue;
            std::vector<TermPtr> ts;
            collectTerms(e.f->t1, ts);
            collectTerms(e.f->t2, ts);
            for (const auto& t : ts) dedup.emplace(render(t), t);
        }
        for (const auto& [k, t] : dedup) terms.push_back(t);
        size_t n = terms.size();
        eq.assign(n, std::vector<bool>(n, false));
        for (size_t i = 0; i < n; ++i) eq[i][i] = true;
        for (const auto& e : branch) {
            if (e.sign && e.f->kind == FormulaKind::Atom && e.f->pred == Pred::Identity) {
                int a = indexOf(e.f->t1), b = indexOf(e.f->t2);
                if (a >= 0 && b >= 0) eq[a][b] = eq[b][a] = true;
            }
        }
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    if (!eq[i][j]) {
                        bool derived = false;
                        for (size_t k = 0; k < n && !derived; ++k)
                            if (eq[i][k] && eq[k][j]) derived = true;
                        if (!derived && terms[i]->kind == TermKind::FunApp && terms[j]->kind == TermKind::FunApp &&
                            terms[i]->name == terms[j]->name && terms[i]->args.size() == terms[j]->args.size()) {
                            derived = true;
                            for (size_t k = 0; k < terms[i]->args.size(); ++k) {
                                int a = indexOf(terms[i]->args[k]), b = indexOf(terms[j]->args[k]);
                                if (a < 0 || b < 0 || !eq[a][b]) { derived = false; break; }
                            }
                        }
                        if (derived) {
                            eq[i][j] = eq[j][i] = true;
                            changed = true;
                        }
                    }
                }
        }
    }

    int indexOf(const TermPtr& t) const {
        std::string k = render(t);
        for (size_t i = 0; i < terms.size(); ++i)
            if (render(terms[i]) == k) return static_cast<int>(i);
        return -1;
    }

    bool equal(const TermPtr& a, const TermPtr& b) const {
        int i = indexOf(a), j = indexOf(b);
        return i >= 0 && j >= 0 && eq[i][j];
    }
};

bool branchClosed(const std::vector<SF>& branch) {
    for (const auto& a : branch)
        for (const auto& b : branch)
            if (a.sign && !b.sign && alphaEqual(a.f, b.f)) return true;
    NaiveCongruence cc(branch);
    for (const auto& e : branch)
        if (!e.sign && e.f->kind == FormulaKind::Atom && e.f->pred == Pred::Identity && cc.equal(e.f->t1, e.f->t2))
            return true;
    for (const auto& a : branch) {
        if (!(a.sign && a.f->kind == FormulaKind::Atom && a.f->pred == Pred::Membership)) continue;
        for (const auto& b : branch) {
            if (!(!b.sign && b.f->kind == FormulaKind::Atom && b.f->pred == Pred::Membership)) continue;
            if (cc.equal(a.f->t1, b.f->t1) && cc.equal(a.f->t2, b.f->t2)) return true;
        }
    }
    return false;
}

bool sameSF(const SF& a, const SF& b) { return a.sign == b.sign && alphaEqual(a.f, b.f); }

bool checkNode(const nlohmann::json& node, std::vector<SF> branch) {
    // append this node's additions
    for (const auto& addStr : node.at("add")) {
        SF sf = parseSigned(addStr.get<std::string>());
        bool dup = false;
        for (const auto& e : branch)
            if (sameSF(e, sf)) { dup = true; break; }
        if (!dup) branch.push_back(sf);
    }
    std::string rule = node.at("rule").get<std::string>();
    if (rule == "closed") return branchClosed(branch);

    SF principal = parseSigned(node.at("principal").get<std::string>());
    bool onBranch = false;
    for (const auto& e : branch)
        if (sameSF(e, principal)) { onBranch = true; break; }
    if (!onBranch) return false;

    // expected additions per child
    std::vector<std::vector<SF>> expected;
    const FormulaPtr& f = principal.f;
    if (rule == "alpha") {
        if (f->kind == FormulaKind::Not) expected = {{SF{!principal.sign, f->f1}}};
        else if (f->kind == FormulaKind::Cond && !principal.sign)
            expected = {{SF{true, f->f1}, SF{false, f->f2}}};
        else return false;
    } else if (rule == "beta") {
        if (f->kind == FormulaKind::Cond && principal.sign)
            expected = {{SF{false, f->f1}}, {SF{true, f->f2}}};
        else if (f->kind == FormulaKind::Iff && principal.sign)
            expected = {{SF{true, f->f1}, SF{true, f->f2}}, {SF{false, f->f1}, SF{false, f->f2}}};
        else if (f->kind == FormulaKind::Iff && !principal.sign)
            expected = {{SF{true, f->f1}, SF{false, f->f2}}, {SF{false, f->f1}, SF{true, f->f2}}};
        else return false;
    } else if (rule == "gamma" || rule == "delta") {
        bool gammaShape = (principal.sign && f->kind == FormulaKind::ForallObj) ||
                          (!principal.sign && f->kind == FormulaKind::ExistsObj);
        if ((rule == "gamma") != gammaShape) return false;
        TermPtr t = parseTerm(node.at("term").get<std::string>(), Layer::Fol);
        if (rule == "delta") {
            // eigenvariable: the constant must be new to the branch
            if (t->kind != TermKind::Var) return false;
            for (const auto& e : branch)
                if (freeVars(e.f).objects.count(t->name) || namesInFormula(e.f).count(t->name)) return false;
        }
        expected = {{SF{principal.sign, substituteVar(f->f1, f->var, t)}}};
    } else {
        return false;
    }

    const auto& children = node.at("children");
    if (children.size() != expected.size()) return false;
    for (size_t i = 0; i < expected.size(); ++i) {
        const auto& childAdd = children[static_cast<int>(i)].at("add");
        if (childAdd.size() != expected[i].size()) return false;
        for (size_t j = 0; j < expected[i].size(); ++j) {
            SF got = parseSigned(childAdd[static_cast<int>(j)].get<std::string>());
            if (!sameSF(got, expected[i][j])) return false;
        }
        if (!checkNode(children[static_cast<int>(i)], branch)) return false;
    }
    return true;
}

} // namespace

bool replayTableauTrace(const FormulaPtr& goal, const std::string& traceJson) {
    try {
        json doc = json::parse(traceJson);
        FormulaPtr traceGoal = parseFormula(doc.at("goal").get<std::string>(), Layer::Fol);
        if (!alphaEqual(normalize(traceGoal), normalize(goal))) return false;
        const json& root = doc.at("root");
        const auto& add = root.at("add");
        if (add.size() != 1) return false;
        SF first = parseSigned(add[0].get<std::string>());
        if (first.sign || !alphaEqual(first.f, normalize(goal))) return false;
        return checkNode(root, {});
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace begriff
