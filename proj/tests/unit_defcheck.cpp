#include <doctest.h>

#include "begriff/battery.hpp"
#include "begriff/defcheck.hpp"
#include "begriff/report.hpp"
#include "begriff/script.hpp"
#include "begriff/syntax.hpp"

using namespace begriff;

namespace {

FormulaPtr fol(const std::string& s, const SymbolTable& st = {}) { return parseFormula(s, Layer::Fol, st); }

std::shared_ptr<Theory> toyTheory() {
    auto th = std::make_shared<Theory>("toy", Layer::Fol, Mode::Classical);
    registerStandardSchemas(*th);
    th->postulate("ext", fol("all x. all y. ((all z. (z in x <-> z in y)) <-> x = y)"));
    th->postulate("empty_exists", fol("exists y. all x. ~(x in y)"));
    return th;
}

Definition emptyDef() {
    Definition d;
    d.symbol = "EMPTY";
    d.rank = 0;
    d.y = "y";
    d.psi = fol("all x. (x in y <-> ~(x = x))");
    return d;
}

Definition collapseDef() {
    Definition d;
    d.symbol = "C0";
    d.rank = 0;
    d.y = "y";
    d.psi = fol("y = y");
    return d;
}

// ---- independent brute-force enumerator (shares no code with defcheck) ----

struct ToyModel {
    int k;
    std::vector<bool> cell; // cell[i*k+j] == (i in j)
    bool in(int i, int j) const { return cell[i * k + j]; }
};

bool indepE1(const ToyModel& m) {
    for (int x = 0; x < m.k; ++x)
        for (int y = 0; y < m.k; ++y) {
            bool coext = true;
            for (int z = 0; z < m.k; ++z) coext = coext && (m.in(z, x) == m.in(z, y));
            if (coext != (x == y)) return false;
        }
    return true;
}

bool indepEmptyExists(const ToyModel& m) {
    for (int y = 0; y < m.k; ++y) {
        bool none = true;
        for (int x = 0; x < m.k; ++x) none = none && !m.in(x, y);
        if (none) return true;
    }
    return false;
}

void enumerate(int k, int cellIdx, ToyModel& m, std::vector<ToyModel>& out) {
    if (cellIdx == k * k) {
        if (indepE1(m) && indepEmptyExists(m)) out.push_back(m);
        return;
    }
    // false first keeps the row-major-bit-string order of the main build
    for (bool b : {false, true}) {
        m.cell[cellIdx] = b;
        enumerate(k, cellIdx + 1, m, out);
    }
}

std::vector<ToyModel> indepBaseModels(int k) {
    ToyModel m{k, std::vector<bool>(k * k, false)};
    std::vector<ToyModel> out;
    enumerate(k, 0, m, out);
    return out;
}

// expansion admissibility for a rank-0 definition with condition psi(e)
template <typename Psi>
bool indepExpandable(const ToyModel& m, Psi psi) {
    for (int e = 0; e < m.k; ++e) {
        bool ok = true;
        for (int y = 0; y < m.k; ++y) ok = ok && ((e == y) == psi(m, y));
        if (ok) return true;
    }
    return false;
}

bool psiEmpty(const ToyModel& m, int y) {
    for (int x = 0; x < m.k; ++x)
        if (m.in(x, y)) return false;
    return true;
}

bool psiTrivial(const ToyModel&, int) { return true; }

// independent battery evaluation over the five atoms
int atomVal(int a, const ToyModel& m, int vx, int vy) {
    switch (a) {
    case 0: return m.in(vx, vx);
    case 1: return m.in(vx, vy);
    case 2: return m.in(vy, vx);
    case 3: return m.in(vy, vy);
    default: return vx == vy;
    }
}

struct IndepSentence {
    // prefix: 0 AA, 1 AE, 2 EA, 3 EE, 4 A, 5 E
    int prefix;
    // matrix: literal (conn=-1) or conn in {0 imp,1 iff,2 and,3 or} over two literals
    int conn, a1, a2;
    bool p1, p2;

    bool evalMatrix(const ToyModel& m, int vx, int vy) const {
        bool v1 = atomVal(a1, m, vx, vy) != 0;
        if (!p1) v1 = !v1;
        if (conn < 0) return v1;
        bool v2 = atomVal(a2, m, vx, vy) != 0;
        if (!p2) v2 = !v2;
        switch (conn) {
        case 0: return !v1 || v2;
        case 1: return v1 == v2;
        case 2: return v1 && v2;
        default: return v1 || v2;
        }
    }

    bool eval(const ToyModel& m) const {
        if (prefix >= 4) {
            bool isAll = prefix == 4;
            for (int v = 0; v < m.k; ++v) {
                bool r = evalMatrix(m, v, v);
                if (isAll && !r) return false;
                if (!isAll && r) return true;
            }
            return isAll;
        }
        bool outerAll = prefix <= 1, innerAll = (prefix % 2) == 0;
        for (int vx = 0; vx < m.k; ++vx) {
            bool inner = innerAll;
            for (int vy = 0; vy < m.k; ++vy) {
                bool r = evalMatrix(m, vx, vy);
                if (innerAll && !r) { inner = false; break; }
                if (!innerAll && r) { inner = true; break; }
            }
            if (outerAll && !inner) return false;
            if (!outerAll && inner) return true;
        }
        return outerAll;
    }
};

std::vector<IndepSentence> indepBattery() {
    std::vector<IndepSentence> out;
    std::vector<std::pair<int, bool>> lits;
    for (int a = 0; a < 5; ++a) {
        lits.emplace_back(a, true);
        lits.emplace_back(a, false);
    }
    for (int p = 0; p < 6; ++p) {
        for (const auto& [a, pos] : lits) out.push_back({p, -1, a, 0, pos, true});
        for (int c = 0; c < 4; ++c)
            for (const auto& [a1, p1] : lits)
                for (const auto& [a2, p2] : lits) out.push_back({p, c, a1, a2, p1, p2});
    }
    return out;
}

template <typename Psi>
std::pair<std::string, std::string> indepConservativity(Psi psi, int maxSize) {
    std::vector<ToyModel> base, expandable;
    for (int k = 1; k <= maxSize; ++k)
        for (const auto& m : indepBaseModels(k)) {
            base.push_back(m);
            if (indepExpandable(m, psi)) expandable.push_back(m);
        }
    for (const auto& s : indepBattery()) {
        bool inAllExpanded = true;
        for (const auto& m : expandable)
            if (!s.eval(m)) { inAllExpanded = false; break; }
        if (!inAllExpanded) continue;
        for (const auto& m : base) {
            if (!s.eval(m)) {
                static const char* prefixes[] = {"AA", "AE", "EA", "EE", "A", "E"};
                static const char* atoms[] = {"xinx", "xiny", "yinx", "yiny", "xeqy"};
                std::string w = std::string(prefixes[s.prefix]) + ":" + (s.p1 ? "" : "~") + atoms[s.a1];
                if (s.conn >= 0) w += std::string(",c") + std::to_string(s.conn) + "," + (s.p2 ? "" : "~") + atoms[s.a2];
                return {"Creative", w};
            }
        }
    }
    return {"NonCreativeUpTo(" + std::to_string(maxSize) + ")", ""};
}

} // namespace

TEST_CASE("the uniqueness formula and the definitional axiom have the documented shapes") {
    Definition d = emptyDef();
    FormulaPtr ue = uniqueExistence(d);
    CHECK(alphaEqual(ue, fol("exists y. ((all x. (x in y <-> ~(x = x))) and "
                             "(all y'. ((all x. (x in y' <-> ~(x = x))) -> y' = y)))")));
    SymbolTable st;
    st.constants.insert("EMPTY");
    CHECK(alphaEqual(definitionalAxiom(d), fol("all y. (EMPTY = y <-> (all x. (x in y <-> ~(x = x))))", st)));
}

TEST_CASE("restrictions (i)-(iii) fail for the documented reasons") {
    auto th = toyTheory();
    DefCheckOptions opts;
    opts.runConservativity = false;

    Definition reused;
    reused.symbol = "P";
    reused.rank = 1;
    reused.xs = {"y"};
    reused.y = "y";
    reused.psi = fol("y = y");
    CHECK_FALSE(checkDefinition(*th, reused, opts).distinctVars.pass);

    Definition extra = emptyDef();
    extra.psi = fol("all x. (x in y <-> ~(x = w))");
    CHECK_FALSE(checkDefinition(*th, extra, opts).freeVars.pass);

    Definition unknown = emptyDef();
    SymbolTable st;
    st.constants.insert("MYSTERY");
    unknown.psi = fol("all x. (x in y <-> x = MYSTERY)", st);
    CHECK_FALSE(checkDefinition(*th, unknown, opts).knownSymbols.pass);
}

TEST_CASE("restriction (iv) consults the store, and the prover can discharge it") {
    auto th = toyTheory();
    DefCheckOptions opts;
    opts.runConservativity = false;
    DefReport bare = checkDefinition(*th, emptyDef(), opts);
    CHECK_FALSE(bare.uniqueness.pass);

    opts.proveMissing = true;
    DefReport proved = checkDefinition(*th, emptyDef(), opts);
    CHECK(proved.uniqueness.pass);
    CHECK(proved.allPass());
    // the store now holds exists! y psi itself, so a plain re-check passes
    opts.proveMissing = false;
    CHECK(checkDefinition(*th, emptyDef(), opts).uniqueness.pass);
}

TEST_CASE("the Russell definition fails (iv) and its existence is refuted") {
    auto th = toyTheory();
    Definition r;
    r.symbol = "R";
    r.rank = 0;
    r.y = "y";
    r.psi = fol("all x. (x in y <-> ~(x in x))");
    DefCheckOptions opts;
    opts.proveMissing = true;
    opts.runConservativity = false;
    DefReport rep = checkDefinition(*th, r, opts);
    CHECK_FALSE(rep.uniqueness.pass);
    CHECK(rep.existenceRefuted);
}

TEST_CASE("defcheck is a FOL-layer facility") {
    Theory frege("gga", Layer::Frege, Mode::Classical);
    CHECK_THROWS_AS(checkDefinition(frege, emptyDef(), {}), LayerMismatch);
}

TEST_CASE("eliminate rewrites the defined symbol away") {
    Definition d = emptyDef();
    SymbolTable st;
    st.constants.insert("EMPTY");
    FormulaPtr f = fol("EMPTY in a", st);
    FormulaPtr out = eliminate(f, d);
    CHECK(alphaEqual(out, fol("exists y. ((all x. (x in y <-> ~(x = x))) and (y in a))")));
    CHECK_FALSE(mentionsSymbol(out, "EMPTY"));
    // no occurrence: unchanged
    CHECK(alphaEqual(eliminate(fol("a in b"), d), fol("a in b")));
    // nested occurrence: doubly expanded, still symbol-free
    FormulaPtr nested = eliminate(fol("EMPTY in EMPTY", st), d);
    CHECK_FALSE(mentionsSymbol(nested, "EMPTY"));
    // the fresh variables are primed apart
    CHECK(render(nested).find("y'") != std::string::npos);
}

TEST_CASE("conservativity: frozen counts and verdicts, exact agreement with the independent enumerator") {
    auto th = toyTheory();

    ConservativityResult empty = conservativityCheck(*th, emptyDef(), 3);
    CHECK_FALSE(empty.creative);
    CHECK(empty.str() == "NonCreativeUpTo(3)");
    // frozen by the pre-build oracle: base models 1/6/126, all expandable
    CHECK(empty.baseCount == std::vector<int>{1, 6, 126});
    CHECK(empty.expandableCount == std::vector<int>{1, 6, 126});

    ConservativityResult collapse = conservativityCheck(*th, collapseDef(), 3);
    CHECK(collapse.creative);
    CHECK(collapse.expandableCount == std::vector<int>{1, 0, 0});
    REQUIRE(collapse.witness.has_value());
    // frozen witness: all x. all y. not (x in x), separating at size 2
    CHECK(*collapse.witness == "all x. all y. not x in x");
    CHECK(*collapse.witnessSize == 2);

    // the independently written enumerator agrees exactly
    auto [vEmpty, wEmpty] = indepConservativity(psiEmpty, 3);
    CHECK(vEmpty == empty.str());
    auto [vCol, wCol] = indepConservativity(psiTrivial, 3);
    CHECK(vCol == "Creative");
    CHECK(wCol == "AA:~xinx");
    for (int k = 1; k <= 3; ++k)
        CHECK(static_cast<int>(indepBaseModels(k).size()) == empty.baseCount[k - 1]);
}

TEST_CASE("monotonicity: non-creative at 3 implies non-creative at every smaller bound") {
    auto th = toyTheory();
    for (int n = 1; n <= 3; ++n) {
        ConservativityResult r = conservativityCheck(*th, emptyDef(), n);
        CHECK_FALSE(r.creative);
        CHECK(r.upTo == n);
    }
}

TEST_CASE("size bound zero is rejected") {
    auto th = toyTheory();
    CHECK_THROWS_AS(conservativityCheck(*th, emptyDef(), 0), Error);
}

TEST_CASE("the battery has the documented size before dedup") {
    CHECK(sentenceBattery().size() == 2460);
}

TEST_CASE("eliminability preserves truth pointwise in every expanded model up to size 3") {
    auto th = toyTheory();
    Definition d = emptyDef();
    SymbolTable st;
    st.constants.insert("EMPTY");
    std::vector<FormulaPtr> probes = {
        fol("EMPTY in a", st), fol("a in EMPTY", st), fol("EMPTY in EMPTY", st),
        fol("~(EMPTY in a)", st), fol("all x. (x in EMPTY -> x in a)", st),
        fol("exists x. (x in a and ~(x = EMPTY))", st)};
    for (int k = 1; k <= 3; ++k) {
        for (const auto& base : allModelsOfSize(th->semanticAxioms(), k)) {
            for (const auto& exp : expansions(base, d)) {
                for (const auto& p : probes) {
                    Model withA = exp;
                    for (int a = 0; a < k; ++a) {
                        withA.assignment["a"] = a;
                        CHECK(satisfies(withA, p) == satisfies(withA, eliminate(p, d)));
                    }
                }
            }
        }
    }
}

TEST_CASE("an exhausted time budget yields a partial verdict") {
    auto th = toyTheory();
    ConservativityResult r = conservativityCheck(*th, emptyDef(), 3, std::chrono::milliseconds{0});
    CHECK(r.timedOut);
    CHECK(r.upTo < 3);
    CHECK_FALSE(r.creative);
}

TEST_CASE("restriction (iii) accepts previously defined symbols") {
    auto th = toyTheory();
    th->defineOperation("EMPTY", 0); // registered by an earlier definition
    Definition d;
    d.symbol = "UNIV";
    d.rank = 0;
    d.y = "y";
    SymbolTable st = th->symbols();
    d.psi = fol("all x. (x in y <-> ~(x in EMPTY))", st);
    DefCheckOptions opts;
    opts.runConservativity = false;
    CHECK(checkDefinition(*th, d, opts).knownSymbols.pass);
}

TEST_CASE("definition reports round-trip through the machine format") {
    auto th = toyTheory();
    DefCheckOptions opts;
    opts.proveMissing = true;
    DefReport rep = checkDefinition(*th, emptyDef(), opts);
    OrderedJson j = defReportJson(rep);
    std::string once = dumpReport(j);
    CHECK(dumpReport(OrderedJson::parse(once)) == once);
    CHECK(j["all_pass"] == true);
}
