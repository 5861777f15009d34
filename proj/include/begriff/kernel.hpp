#pragma once

#include "begriff/ast.hpp"
#include "begriff/errors.hpp"
#include "begriff/subst.hpp"
#include "begriff/syntax.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace begriff {

enum class Mode { Classical, Guarded };

inline const char* modeName(Mode m) { return m == Mode::Classical ? "classical" : "guarded"; }

// A kernel-certified judgment. Only Theory constructs these.
struct Theorem {
    std::string id;
    FormulaPtr formula; // normalized, hole-free
    Mode mode;
};

struct ProofStep {
    std::string id;
    std::string rule;
    std::vector<std::string> premises;
    std::string detail; // plan / arguments as written, for the audit record
    std::string anchor; // optional equation label carried from the script
    FormulaPtr conclusion; // null for blocked or non-theorem steps
    SourceSpan span;
    bool blocked = false;
    std::string blockedBy; // id of the guard's source theorem
};

// One registered axiom schema. `instantiate` performs the slot filling and
// raises SideConditionViolation with the violated clause's name.
struct Schema {
    std::string id;
    Layer layer;
    std::string display;
    std::function<FormulaPtr(const SubstitutionPlan&, const class Theory&)> instantiate;
};

struct GuardEntry {
    TermPtr blocked;
    TermPtr blockedUnfolded;
    std::string sourceId;
};

class Theory {
public:
    Theory(std::string name, Layer layer, Mode mode);

    const std::string& name() const { return name_; }
    Layer layer() const { return layer_; }
    Mode mode() const { return mode_; }

    // ---- registration ----------------------------------------------------
    void registerSchema(Schema s);
    bool hasSchema(const std::string& id) const;
    const Schema& schema(const std::string& id) const;
    std::vector<std::string> schemaIds() const;

    // Abbreviation: a rank-0 defined constant naming a closed term.
    void defineConstant(const std::string& name, TermPtr definiens);
    const TermPtr* definiens(const std::string& name) const;

    // Defined symbol without a term definiens (introduced by a definition in
    // the theory-of-definition sense); arity 0 allowed.
    void declareConstant(const std::string& name);
    void defineOperation(const std::string& name, int arity);

    SymbolTable symbols() const;

    // Concrete axiom: certified into the store and listed among the
    // semantic axioms used by the model finder.
    const Theorem& postulate(const std::string& id, FormulaPtr axiom);
    const std::vector<FormulaPtr>& semanticAxioms() const { return semanticAxioms_; }

    // ---- store -----------------------------------------------------------
    const Theorem& theorem(const std::string& id) const;
    bool hasTheorem(const std::string& id) const;
    const std::vector<Theorem>& store() const { return store_; }
    const std::vector<ProofStep>& steps() const { return steps_; }

    // Alpha-equivalence lookup (defcheck's restriction (iv) consults this).
    bool storeContains(const FormulaPtr& f) const;
    std::optional<std::string> findTheorem(const FormulaPtr& f) const;

    // ---- inference -------------------------------------------------------
    const Theorem& axiom(const std::string& id, const std::string& schemaId, const SubstitutionPlan& plan);
    const Theorem& mp(const std::string& id, const std::string& impId, const std::string& minorId);
    const Theorem& ig(const std::string& id, const std::string& premiseId);
    const Theorem& instantiate(const std::string& id, const std::string& premiseId,
                               const std::map<std::string, TermPtr>& bindings);
    const Theorem& substFun(const std::string& id, const std::string& premiseId, const std::string& fvar,
                            const FunctionAbstract& abs);
    const Theorem& gothicElim(const std::string& id, const std::string& premiseId, const TermPtr& term);
    const Theorem& idSubst(const std::string& id, const std::string& targetId, const std::string& identityId,
                           const Path& path, bool reverse = false);
    const Theorem& foldConst(const std::string& id, const std::string& premiseId, const std::string& constName,
                             const Path& path);
    const Theorem& unfoldConst(const std::string& id, const std::string& premiseId, const Path& path);
    const Theorem& coref(const std::string& id, const std::string& premiseId, const std::string& constName);
    const Theorem& rewrite(const std::string& id, const std::string& premiseId, const std::string& ruleName,
                           const Path& path, const TermPtr& arg = nullptr);
    const Theorem& iffElim(const std::string& id, const std::string& premiseId, bool leftToRight);
    const Theorem& witness(const std::string& id, const std::string& premiseId, const std::string& freshVar);
    const Theorem& generalize(const std::string& id, const std::string& premiseId, const std::string& var);
    // Admission of a prover result; the trace is re-checked through the
    // independent closure checker on every replay.
    const Theorem& fromTableau(const std::string& id, FormulaPtr goal, const std::string& traceJson);

    // ---- the guarded regime ----------------------------------------------
    void registerGuard(const std::string& thmId);
    const std::vector<GuardEntry>& guards() const { return guards_; }
    // Returns the blocking theorem id when `t` matches a registered
    // distinctness fact (modulo abbreviation unfolding and alpha).
    std::optional<std::string> guardHit(const TermPtr& t) const;

    // Record a blocked instantiation attempt (script bookkeeping).
    void recordBlocked(const std::string& id, const std::string& rule, const std::vector<std::string>& premises,
                       const std::string& detail, const std::string& blockedBy, const std::string& anchor = "");

    // ---- consistency -----------------------------------------------------
    // Every {phi, not phi} pair in the store, as id pairs. Contradictory
    // stores stay inspectable; nothing halts.
    std::vector<std::pair<std::string, std::string>> inconsistencyPairs() const;

    TermPtr unfoldAll(const TermPtr& t) const;
    FormulaPtr unfoldAll(const FormulaPtr& f) const;

private:
    const Theorem& commit(ProofStep step, FormulaPtr conclusion);
    void requireNew(const std::string& id) const;
    void checkGuard(const TermPtr& t, const std::string& context) const;

    std::string name_;
    Layer layer_;
    Mode mode_;
    std::map<std::string, Schema> schemas_;
    std::map<std::string, TermPtr> constants_;
    std::set<std::string> declared_;
    std::map<std::string, int> operations_;
    std::vector<Theorem> store_;
    std::map<std::string, size_t> index_;
    std::vector<ProofStep> steps_;
    std::vector<GuardEntry> guards_;
    std::vector<FormulaPtr> semanticAxioms_;
};

// Registers the standard schemas for the given layer: (C), (E1), (E2) for
// FOL; (III), (IIIb), (IIIe), (V), (V'b), (V'c), (1), (77), (82) for the
// Frege layer.
void registerStandardSchemas(Theory& th);

} // namespace begriff
