#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "begriff/subst.hpp"
#include "begriff/syntax.hpp"
#include "gen.hpp"

using namespace begriff;

namespace {

FormulaPtr fol(const std::string& s) { return parseFormula(s, Layer::Fol); }
FormulaPtr frg(const std::string& s) { return parseFormula(s, Layer::Frege); }

} // namespace

TEST_CASE("the conditional from the substitutivity derivation parses to the documented tree") {
    FormulaPtr f = fol("(x in y <-> ~(x in x)) -> ~(x = y)");
    REQUIRE(f->kind == FormulaKind::Cond);
    CHECK(f->f1->kind == FormulaKind::Iff);
    CHECK(f->f1->f1->kind == FormulaKind::Atom);
    CHECK(f->f1->f1->pred == Pred::Membership);
    CHECK(f->f1->f2->kind == FormulaKind::Not);
    CHECK(f->f2->kind == FormulaKind::Not);
    CHECK(f->f2->f1->pred == Pred::Identity);
}

TEST_CASE("quantified identity") {
    FormulaPtr f = fol("all x. x = x");
    REQUIRE(f->kind == FormulaKind::ForallObj);
    CHECK(f->var == "x");
    CHECK(f->f1->kind == FormulaKind::Atom);
    CHECK(f->f1->pred == Pred::Identity);
}

TEST_CASE("the value-range of the negated self-application parses as a term") {
    TermPtr t = parseTerm("ext e. not (e mem e)", Layer::Frege);
    REQUIRE(t->kind == TermKind::CourseOfValues);
    CHECK(t->name == "e");
    REQUIRE(t->body->kind == FormulaKind::Not);
    REQUIRE(t->body->f1->kind == FormulaKind::Horizontal);
    REQUIRE(t->body->f1->t1->kind == TermKind::MemApp);
}

TEST_CASE("layer separation is enforced at parse time") {
    CHECK_THROWS_AS(fol("a mem b"), ParseError);
    CHECK_THROWS_AS(fol("ext e. e mem e"), ParseError);
    CHECK_THROWS_AS(frg("x in y"), ParseError);
    CHECK_THROWS_AS(frg("x = y <-> y = x"), ParseError);
    CHECK_THROWS_AS(frg("exists y. y = y"), ParseError);
    CHECK_THROWS_AS(fol("allF g. g(x) = g(x)"), ParseError);
}

TEST_CASE("diagnostics carry spans and name the problem") {
    CHECK_THROWS_AS(fol("x in $"), ParseError);
    CHECK_THROWS_AS(fol("(x in y"), ParseError);
    CHECK_THROWS_AS(fol("f(x) = y"), ParseError); // unknown operation symbol in FOL
    try {
        fol("x in $");
        FAIL("expected a diagnostic");
    } catch (const ParseError& e) {
        CHECK(e.span.lo == 5);
    }
}

TEST_CASE("render examples") {
    CHECK(render(mkAtom(Pred::Identity, mkVar("a"), mkVar("a"))) == "a = a");
    FormulaPtr e1 = fol("all x. all y. ((all z. (z in x <-> z in y)) <-> x = y)");
    CHECK(render(parseFormula(render(e1), Layer::Fol)) == render(e1));
    CHECK(render(mkConst("V")) == "V");
}

TEST_CASE("unicode rendering parses back to the same tree") {
    FormulaPtr f = fol("(x in y <-> ~(x in x)) -> ~(x = y)");
    std::string u = render(f, RenderStyle::Unicode);
    CHECK(u.find("∈") != std::string::npos);
    CHECK(alphaEqual(parseFormula(u, Layer::Fol), f));

    FormulaPtr g = frg("not (allF g. ((ext u. g(u)) = w -> g(w)))");
    std::string ug = render(g, RenderStyle::Unicode);
    CHECK(alphaEqual(parseFormula(ug, Layer::Frege), g));
}

TEST_CASE("free variables") {
    CHECK(freeVars(fol("x in y")).merged() == std::set<std::string>{"x", "y"});
    CHECK(freeVars(parseTerm("ext e. (e mem a)", Layer::Frege)).merged() == std::set<std::string>{"a"});
    // the comprehension matrix for the Russell condition frees exactly x, y
    CHECK(freeVars(fol("x in y <-> ~(x in x)")).merged() == std::set<std::string>{"x", "y"});
    // function variables count
    CHECK(freeVars(frg("g(a) = g(b)")).merged() == std::set<std::string>{"a", "b", "g"});
    CHECK(freeVars(frg("allF g. g(a) = g(b)")).merged() == std::set<std::string>{"a", "b"});
}

TEST_CASE("structural equality is alpha for bound, literal for free") {
    CHECK(alphaEqual(fol("all x. x in a"), fol("all z. z in a")));
    CHECK_FALSE(alphaEqual(fol("all x. x in a"), fol("all x. x in b")));
    CHECK(alphaEqual(parseTerm("ext e. not (e mem e)", Layer::Frege),
                     parseTerm("ext w. not (w mem w)", Layer::Frege)));
    CHECK_FALSE(alphaEqual(fol("x = y"), fol("y = x")));
}

TEST_CASE("horizontal normalization is idempotent") {
    TermPtr t = parseTerm("a mem b", Layer::Frege);
    FormulaPtr once = normalize(mkHorizontalT(t));
    FormulaPtr twice = normalize(mkHorizontalF(mkHorizontalT(t)));
    CHECK(alphaEqual(once, twice));
    // over a formula the stroke disappears
    FormulaPtr f = frg("not (a mem b)");
    CHECK(alphaEqual(normalize(mkHorizontalF(f)), f));
    CHECK(alphaEqual(normalize(mkHorizontalT(mkTruthObject(f))), f));
}

TEST_CASE("span coverage: every node's span sits inside its parent's") {
    for (const char* s : {"(x in y <-> ~(x in x)) -> ~(x = y)", "exists y. all x. (x in y <-> ~(x in x))",
                          "all x. all y. ((all z. (z in x <-> z in y)) <-> x = y)"}) {
        CHECK(spansNested(fol(s)));
    }
    CHECK(spansNested(frg("(not (a mem a)) = (a mem (ext e. not (e mem e)))")));
}

TEST_CASE("round trip on random formulas, both layers and both styles") {
    for (unsigned seed = 0; seed < 200; ++seed) {
        testgen::Gen gf(seed, Layer::Fol);
        FormulaPtr f = normalize(gf.formula(4));
        CAPTURE(render(f));
        CHECK(alphaEqual(parseFormula(render(f), Layer::Fol), f));
        testgen::Gen gg(seed + 1000, Layer::Frege);
        FormulaPtr g = normalize(gg.formula(4));
        CAPTURE(render(g));
        CHECK(alphaEqual(parseFormula(render(g), Layer::Frege), g));
        std::string uni = render(g, RenderStyle::Unicode);
        CHECK(alphaEqual(parseFormula(uni, Layer::Frege), g));
    }
}

TEST_CASE("binder hygiene: alpha renaming leaves the free variables alone") {
    for (unsigned seed = 0; seed < 100; ++seed) {
        testgen::Gen g(seed, Layer::Fol);
        FormulaPtr body = g.formula(3);
        FormulaPtr f = mkForallObj("x", body);
        FormulaPtr renamed = mkForallObj("x9", substituteVar(body, "x", mkVar("x9")));
        CHECK(freeVars(f).merged() == freeVars(renamed).merged());
        CHECK(alphaEqual(f, renamed));
    }
}

TEST_CASE("and/or are parser sugar for the conditional encoding") {
    CHECK(alphaEqual(fol("x in y and y in x"), fol("~((x in y) -> ~(y in x))")));
    CHECK(alphaEqual(fol("x in y or y in x"), fol("~(x in y) -> y in x")));
    // render never emits the sugar, and the round trip still holds
    FormulaPtr f = fol("x in y and y in x");
    CHECK(render(f).find("and") == std::string::npos);
    CHECK(alphaEqual(parseFormula(render(f), Layer::Fol), f));
}
