#pragma once

#include "begriff/ast.hpp"
#include "begriff/kernel.hpp"
#include "begriff/model.hpp"
#include "begriff/tableau.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace begriff {

// A candidate definition O(x1..xn) = y <-> psi.
struct Definition {
    std::string symbol;
    int rank = 0;
    std::vector<std::string> xs; // x1..xn
    std::string y;
    FormulaPtr psi;
};

struct RestrictionVerdict {
    bool pass = false;
    std::string note;
};

struct ConservativityResult {
    bool creative = false;
    int upTo = 0; // completed sizes
    bool timedOut = false;
    std::optional<std::string> witness; // rendered creative sentence
    std::optional<int> witnessSize;     // size of the separating base model
    std::vector<int> baseCount;         // per size 1..upTo
    std::vector<int> expandableCount;
    int batterySize = 0; // after semantic dedup

    std::string str() const {
        if (creative) return "Creative";
        std::string s = "NonCreativeUpTo(" + std::to_string(upTo) + ")";
        if (timedOut) s += " [timed out]";
        return s;
    }
};

struct DefCheckOptions {
    bool proveMissing = false; // invoke the tableau when (iv) is not in the store
    TableauLimits proverLimits{24, 2000};
    int maxModelSize = 3;
    bool runConservativity = true;
    std::chrono::milliseconds timeBudget{30000};
};

struct DefReport {
    std::string symbol;
    RestrictionVerdict distinctVars;   // (i)
    RestrictionVerdict freeVars;       // (ii)
    RestrictionVerdict knownSymbols;   // (iii)
    RestrictionVerdict uniqueness;     // (iv)
    bool existenceRefuted = false;     // prover proved not exists y psi
    std::optional<std::string> eliminationWitness; // rendered expansion of a sample formula
    std::optional<ConservativityResult> conservativity;

    bool allPass() const { return distinctVars.pass && freeVars.pass && knownSymbols.pass && uniqueness.pass; }
};

// The uniqueness formula (iv) asks for: exists y (psi and all y' (psi[y'/y]
// -> y' = y)), conjunction encoded, y' primed fresh.
FormulaPtr uniqueExistence(const Definition& d);

// The definitional axiom: closure of O(x...) = y <-> psi over x1..xn, y.
FormulaPtr definitionalAxiom(const Definition& d);

DefReport checkDefinition(Theory& th, const Definition& d, const DefCheckOptions& opts = {});

// Rewrite every occurrence of the defined symbol away via psi, introducing a
// fresh quantified variable per occurrence. Requires restrictions (i)-(iii).
FormulaPtr eliminate(const FormulaPtr& f, const Definition& d);

ConservativityResult conservativityCheck(const Theory& th, const Definition& d, int maxSize,
                                         std::chrono::milliseconds timeBudget = std::chrono::milliseconds{30000});

// Enumerates every model of the given closed axioms at exactly size k, in
// table order. Parallelized over table ranges; order-independent merge.
std::vector<Model> allModelsOfSize(const std::vector<FormulaPtr>& axioms, int k);

// Interpretations of the defined symbol satisfying the definitional axiom in
// the given base model (rank 0: carrier elements; rank 1: argument tables).
std::vector<Model> expansions(const Model& base, const Definition& d);

} // namespace begriff
