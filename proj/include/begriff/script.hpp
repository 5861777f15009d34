#pragma once

#include "begriff/defcheck.hpp"
#include "begriff/kernel.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace begriff {

// One step line: `step <id>: <rule> [<premise ids>] <arguments> {attrs}`.
struct StepLine {
    std::string id;
    std::string rule;
    std::vector<std::string> premises;
    std::string schemaId;     // axiom
    SubstitutionPlan plan;    // axiom / inst / subst_fun bindings
    std::vector<std::string> viaNames; // named substitutions referenced
    std::string pathText;     // @ ...
    bool reverse = false;     // id_subst direction
    std::string constName;    // fold / coref
    std::string ruleName;     // rewrite
    std::string argName;      // witness/gen variable
    TermPtr argTerm;          // gothic / rewrite term argument
    // attributes
    bool expectBlocked = false;
    std::string expectCite;
    std::string anchor;
    int lineNo = 0;
};

struct DefDirective {
    std::string name;
    TermPtr definiens;
};

struct PostulateDirective {
    std::string id;
    FormulaPtr formula;
};

struct SubstDirective {
    std::string name;
    SubstitutionPlan plan;
};

using ScriptItem = std::variant<DefDirective, PostulateDirective, SubstDirective, Definition, StepLine>;

struct ParsedScript {
    std::string name;
    Layer layer = Layer::Fol;
    Mode defaultMode = Mode::Classical;
    std::vector<std::string> anchors;
    std::vector<ScriptItem> items;
    std::string sourcePath;
};

ParsedScript parseScript(const std::string& text, const std::string& sourcePath = "<memory>");

struct StepOutcome {
    std::string id;
    std::string rule;
    std::string status; // "certified", "blocked", "failed"
    std::string formula; // rendered conclusion when certified
    std::string anchor;
    std::string citing;  // guard source for blocked steps
    std::string message; // error text for failures / expectation notes
    bool asExpected = true;
};

struct ScriptResult {
    ParsedScript script;
    Mode modeUsed = Mode::Classical;
    std::vector<StepOutcome> outcomes;
    std::vector<std::pair<std::string, std::string>> inconsistencies;
    std::vector<Definition> definitions; // from `define` directives
    bool ok = true;
    long long elapsedMs = 0;
    std::shared_ptr<Theory> theory;
};

ScriptResult runScript(const ParsedScript& script, std::optional<Mode> modeOverride = std::nullopt);
ScriptResult runScriptText(const std::string& text, std::optional<Mode> modeOverride = std::nullopt,
                           const std::string& sourcePath = "<memory>");

// Builds the Theory (layer, schemas, defs, postulates) without running any
// steps; defcheck loads theory files this way.
std::shared_ptr<Theory> buildTheory(const ParsedScript& script, std::optional<Mode> modeOverride = std::nullopt);

} // namespace begriff
