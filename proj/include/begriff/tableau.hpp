#pragma once

#include "begriff/ast.hpp"
#include "begriff/errors.hpp"

#include <optional>
#include <string>
#include <vector>

namespace begriff {

struct TableauLimits {
    int depth = 12;
    int gammaInstantiations = 200;
};

struct TableauStats {
    int maxDepth = 0;
    int gammaUsed = 0;
    int nodes = 0;
};

// Result of a proof attempt: Proved carries a replayable closed-tableau
// trace (JSON); resource exhaustion yields Unknown, never "disproved".
struct ProveResult {
    bool proved = false;
    std::string trace; // JSON, empty unless proved
    TableauStats stats;
};

// Refutation tableau for closed FOL formulas with equality (congruence
// handled by explicit rules on branches, not by axiom schemas).
ProveResult prove(const FormulaPtr& goal, const TableauLimits& limits = {});

// Independent branch-closure checker: walks a trace, re-derives every rule
// application, and re-verifies each leaf's closure with a naive fixpoint
// congruence computation. Deliberately shares no code with the search.
bool replayTableauTrace(const FormulaPtr& goal, const std::string& traceJson);

} // namespace begriff
