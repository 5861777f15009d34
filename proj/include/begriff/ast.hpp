#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace begriff {

// The two formula layers. FOL is the set-theoretic language of section-1
// style derivations; Frege is the concept-script fragment (courses of
// values, the horizontal, gothic quantifiers, truth-value identity).
enum class Layer { Fol, Frege };

inline const char* layerName(Layer l) { return l == Layer::Fol ? "fol" : "frege"; }

struct SourceSpan {
    int file = -1;
    std::uint32_t lo = 0;
    std::uint32_t hi = 0;
    bool contains(const SourceSpan& inner) const { return lo <= inner.lo && inner.hi <= hi; }
};

class Term;
class Formula;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class TermKind {
    Var,            // object variable
    FunApp,         // function variable (Frege) or defined operation symbol (FOL) applied to terms
    CourseOfValues, // ext v. body: Frege's value-range binder
    Const,          // registered defined constant (rank-0 operation symbol, abbreviation)
    MemApp,         // a mem b, Frege's application sign; a Term (it denotes a truth value)
    TruthObject,    // a formula in term position (Frege identities between truth values)
};

enum class Pred { Membership, Identity };

enum class FormulaKind {
    Atom,       // t1 in t2 (FOL) or t1 = t2 (both layers)
    Horizontal, // the content stroke; argument is a term (or, pre-normalization, a formula)
    Not,
    Cond,       // right-associative conditional
    Iff,        // FOL only
    ForallObj,
    ForallFun,  // gothic second-order quantifier
    ExistsObj,  // FOL only
    Hole,       // schema metavariable, possibly applied to terms
};

class Term {
public:
    TermKind kind;
    std::string name;          // Var/Const/FunApp head/CourseOfValues bound variable
    std::vector<TermPtr> args; // FunApp arguments; MemApp has exactly two
    FormulaPtr body;           // CourseOfValues body, TruthObject payload
    bool definedSymbol = false; // FunApp: true when the head is a registered operation symbol
    SourceSpan span;

    Term(TermKind k) : kind(k) {}
};

class Formula {
public:
    FormulaKind kind;
    Pred pred = Pred::Membership; // Atom only
    TermPtr t1, t2;               // Atom sides; Horizontal term argument in t1
    FormulaPtr f1, f2;            // subformulas; Horizontal pre-normalization argument in f1
    std::string var;              // binder variable / hole metavariable
    std::vector<TermPtr> holeArgs;
    SourceSpan span;

    Formula(FormulaKind k) : kind(k) {}
};

// ---- constructors ------------------------------------------------------

TermPtr mkVar(std::string name, SourceSpan sp = {});
TermPtr mkConst(std::string name, SourceSpan sp = {});
TermPtr mkFunApp(std::string head, std::vector<TermPtr> args, bool defined = false, SourceSpan sp = {});
TermPtr mkCourseOfValues(std::string boundVar, FormulaPtr body, SourceSpan sp = {});
TermPtr mkMemApp(TermPtr l, TermPtr r, SourceSpan sp = {});
TermPtr mkTruthObject(FormulaPtr f, SourceSpan sp = {});

FormulaPtr mkAtom(Pred p, TermPtr l, TermPtr r, SourceSpan sp = {});
FormulaPtr mkHorizontalT(TermPtr t, SourceSpan sp = {});
FormulaPtr mkHorizontalF(FormulaPtr f, SourceSpan sp = {});
FormulaPtr mkNot(FormulaPtr f, SourceSpan sp = {});
FormulaPtr mkCond(FormulaPtr a, FormulaPtr c, SourceSpan sp = {});
FormulaPtr mkIff(FormulaPtr a, FormulaPtr b, SourceSpan sp = {});
FormulaPtr mkForallObj(std::string v, FormulaPtr body, SourceSpan sp = {});
FormulaPtr mkForallFun(std::string v, FormulaPtr body, SourceSpan sp = {});
FormulaPtr mkExistsObj(std::string v, FormulaPtr body, SourceSpan sp = {});
FormulaPtr mkHole(std::string metavar, std::vector<TermPtr> args = {}, SourceSpan sp = {});

// Encoded conjunction/disjunction: the formula language has no primitive
// 'and'/'or'; the parser desugars them this way.
inline FormulaPtr mkAnd(FormulaPtr a, FormulaPtr b) { return mkNot(mkCond(a, mkNot(b))); }
inline FormulaPtr mkOr(FormulaPtr a, FormulaPtr b) { return mkCond(mkNot(a), b); }

// ---- structural operations ---------------------------------------------

// Structural equality up to alpha-equivalence of bound variables; free
// variables compare literally.
bool alphaEqual(const FormulaPtr& a, const FormulaPtr& b);
bool alphaEqual(const TermPtr& a, const TermPtr& b);

// Free object variables and free function variables, by standard binder
// rules (ext binds its variable, allF binds its function name).
struct FreeVars {
    std::set<std::string> objects;
    std::set<std::string> functions;
    std::set<std::string> merged() const;
};
FreeVars freeVars(const FormulaPtr& f);
FreeVars freeVars(const TermPtr& t);

bool occursFreeObj(const FormulaPtr& f, const std::string& name);

// Horizontal-collapse normal form: a horizontal applied to anything already
// formula-valued is dropped. Idempotent.
FormulaPtr normalize(const FormulaPtr& f);
TermPtr normalizeTerm(const TermPtr& t);

bool containsHole(const FormulaPtr& f);

// True when no free object or function variables remain (after unfolding
// nothing; constants count as closed).
bool isClosed(const FormulaPtr& f);
bool isClosedTerm(const TermPtr& t);

// Occurrences of a defined symbol (constant or operation head) anywhere.
bool mentionsSymbol(const FormulaPtr& f, const std::string& symbol);
bool mentionsSymbol(const TermPtr& t, const std::string& symbol);

// Fresh-name generation appends primes to the stem until the name avoids
// the given set.
std::string freshName(const std::string& stem, const std::set<std::string>& avoid);

// ---- paths into formulas -----------------------------------------------
//
// A path is a dot-separated list of 1-based child indices from the root:
//   Cond: 1 antecedent, 2 consequent; Not/Horizontal: 1; Iff/Atom: 1, 2;
//   binders (all/exists/allF/ext): 1 = body; MemApp: 1, 2; FunApp: argument
//   index; TruthObject: 1. The empty path denotes the root.
struct Path {
    std::vector<int> steps;
    static Path parse(const std::string& text); // "root" or "1.2.1"
    std::string str() const;
};

// Replace the node at `path` using one of the two callbacks (whichever
// matches what lives there). Throws std::out_of_range for a bad path.
using FormulaEdit = std::function<FormulaPtr(const FormulaPtr&)>;
using TermEdit = std::function<TermPtr(const TermPtr&)>;
FormulaPtr editAt(const FormulaPtr& root, const Path& path, const FormulaEdit& onFormula, const TermEdit& onTerm);

// All spans in the tree are contained in their parent's span (used by the
// span-coverage property test).
bool spansNested(const FormulaPtr& f);

} // namespace begriff
