#include "begriff/report.hpp"
#include "begriff/script.hpp"
#include "begriff/syntax.hpp"
#include "begriff/tableau.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace {

using namespace begriff;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(outPath, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot write '" + outPath + "'");
    out << text;
}

// Strip comments and join the remaining lines: `prove` files carry one
// formula, `models` files one axiom per line.
std::vector<std::string> formulaLines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        auto b = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(a, b - a + 1));
    }
    return out;
}

int runCheck(const std::vector<std::string>& files, const std::string& modeText, bool json, const std::string& outPath,
             bool failOnInconsistent) {
    std::optional<Mode> mode;
    if (modeText == "classical") mode = Mode::Classical;
    else if (modeText == "guarded") mode = Mode::Guarded;

    std::vector<ParsedScript> scripts;
    for (const auto& f : files) scripts.push_back(parseScript(readFile(f), f));

    // independent scripts check in parallel over isolated theories
    std::vector<std::future<ScriptResult>> futs;
    futs.reserve(scripts.size());
    for (const auto& s : scripts)
        futs.push_back(std::async(std::launch::async, [&s, mode] { return runScript(s, mode); }));

    bool ok = true;
    bool anyInconsistent = false;
    OrderedJson doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["command"] = "check";
    doc["inputs"] = files;
    doc["reports"] = OrderedJson::array();
    std::string text;
    for (auto& fut : futs) {
        ScriptResult r = fut.get();
        ok = ok && r.ok;
        anyInconsistent = anyInconsistent || !r.inconsistencies.empty();
        doc["reports"].push_back(scriptResultJson(r));
        text += scriptResultText(r);
    }
    doc["ok"] = ok;
    emit(json ? dumpReport(doc) : text, outPath);
    if (!ok) return kExitVerification;
    if (failOnInconsistent && anyInconsistent) return kExitVerification;
    return kExitOk;
}

int runProve(const std::string& file, int depth, int gammas, bool json, const std::string& outPath) {
    auto lines = formulaLines(readFile(file));
    std::string text;
    for (const auto& l : lines) text += (text.empty() ? "" : " ") + l;
    FormulaPtr goal = parseFormula(text, Layer::Fol);
    TableauLimits limits{depth, gammas};
    ProveResult pr = prove(goal, limits);
    bool replayOk = pr.proved && replayTableauTrace(goal, pr.trace);
    OrderedJson doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["command"] = "prove";
    doc["goal"] = render(goal);
    doc["result"] = pr.proved ? "Proved" : "Unknown";
    doc["depth_used"] = pr.stats.maxDepth;
    doc["gamma_instantiations"] = pr.stats.gammaUsed;
    if (pr.proved) {
        doc["replay"] = replayOk ? "ok" : "FAILED";
        doc["trace"] = OrderedJson::parse(pr.trace);
    }
    std::string human = "goal: " + render(goal) + "\nresult: " + (pr.proved ? "Proved" : "Unknown") +
                        "\ndepth: " + std::to_string(pr.stats.maxDepth) +
                        ", gamma instantiations: " + std::to_string(pr.stats.gammaUsed) + "\n" +
                        (pr.proved ? std::string("replay: ") + (replayOk ? "ok" : "FAILED") + "\n" : "");
    emit(json ? dumpReport(doc) : human, outPath);
    return pr.proved && replayOk ? kExitOk : kExitVerification;
}

int runModels(const std::string& file, int maxSize, bool json, const std::string& outPath) {
    auto lines = formulaLines(readFile(file));
    std::vector<FormulaPtr> axioms;
    for (const auto& l : lines) axioms.push_back(parseFormula(l, Layer::Fol));
    FindModelResult res = findModel(axioms, maxSize);
    OrderedJson doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["command"] = "models";
    doc["axioms"] = OrderedJson::array();
    for (const auto& a : axioms) doc["axioms"].push_back(render(a));
    std::string human;
    if (res.model) {
        const Model& m = *res.model;
        doc["result"] = "Model";
        doc["size"] = m.size;
        OrderedJson memb = OrderedJson::array();
        for (int i = 0; i < m.size; ++i)
            for (int j = 0; j < m.size; ++j)
                if (m.memb(i, j)) memb.push_back(OrderedJson::array({i, j}));
        doc["membership"] = memb;
        doc["assignment"] = m.assignment;
        human = "model of size " + std::to_string(m.size) + "\n";
        for (int i = 0; i < m.size; ++i)
            for (int j = 0; j < m.size; ++j)
                if (m.memb(i, j)) human += "  " + std::to_string(i) + " in " + std::to_string(j) + "\n";
        for (const auto& [k, v] : m.assignment) human += "  " + k + " := " + std::to_string(v) + "\n";
    } else {
        doc["result"] = "NoneUpTo";
        doc["max_size"] = maxSize;
        human = "no model up to size " + std::to_string(maxSize) + "\n";
    }
    emit(json ? dumpReport(doc) : human, outPath);
    return kExitOk;
}

int runDefs(const std::string& theoryFile, const std::string& defFile, int maxModelSize, bool proveMissing, bool json,
            const std::string& outPath) {
    ParsedScript theoryScript = parseScript(readFile(theoryFile), theoryFile);
    ScriptResult tr = runScript(theoryScript);
    if (!tr.ok) {
        emit("theory script failed; aborting\n" + scriptResultText(tr), outPath);
        return kExitVerification;
    }
    ParsedScript defScript = parseScript(readFile(defFile), defFile);
    ScriptResult dr = runScript(defScript);
    if (dr.definitions.empty()) {
        emit("no definitions in '" + defFile + "'\n", outPath);
        return kExitUsage;
    }
    DefCheckOptions opts;
    opts.maxModelSize = maxModelSize;
    opts.proveMissing = proveMissing;
    bool allOk = true;
    OrderedJson doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["command"] = "defs check";
    doc["theory"] = theoryFile;
    doc["definitions"] = OrderedJson::array();
    std::string human;
    for (const auto& d : dr.definitions) {
        DefReport rep = checkDefinition(*tr.theory, d, opts);
        allOk = allOk && rep.allPass();
        doc["definitions"].push_back(defReportJson(rep));
        human += defReportText(rep);
    }
    doc["all_pass"] = allOk;
    emit(json ? dumpReport(doc) : human, outPath);
    return allOk ? kExitOk : kExitVerification;
}

int runCorpus(bool json, const std::string& outPath) {
    auto entries = corpusManifest(corpusDir());
    OrderedJson doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["command"] = "corpus";
    doc["dir"] = corpusDir();
    doc["scripts"] = OrderedJson::array();
    std::string human = "corpus at " + corpusDir() + ":\n";
    for (const auto& e : entries) {
        OrderedJson j;
        j["name"] = e.name;
        j["file"] = e.file;
        if (!e.layer.empty()) j["layer"] = e.layer;
        if (!e.mode.empty()) j["mode"] = e.mode;
        j["anchors"] = e.anchors;
        doc["scripts"].push_back(j);
        human += "  " + e.name + " [" + e.layer + (e.mode.empty() ? "" : ", " + e.mode) + "]";
        for (const auto& a : e.anchors) human += "  " + a;
        human += "\n";
    }
    emit(json ? dumpReport(doc) : human, outPath);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"begriff: a proof-checking kernel for a concept-script fragment and a small set theory"};
    app.require_subcommand(1);

    std::string modeText = "classical", outPath;
    bool json = false, failOnInconsistent = false;

    auto* check = app.add_subcommand("check", "replay proof scripts through the kernel");
    std::vector<std::string> checkFiles;
    check->add_option("files", checkFiles, "proof scripts (.cs)")->required();
    check->add_option("--mode", modeText, "instantiation regime: classical|guarded")
        ->check(CLI::IsMember({"classical", "guarded", "script"}));
    check->add_flag("--json", json, "machine-readable report");
    check->add_option("--out", outPath, "write the report to a file");
    check->add_flag("--fail-on-inconsistent", failOnInconsistent, "exit 1 when contradictory pairs are found");

    auto* proveCmd = app.add_subcommand("prove", "tableau proof search for a closed FOL formula");
    std::string proveFile;
    int depth = 12, gammas = 200;
    proveCmd->add_option("file", proveFile, "formula file (.cs)")->required();
    proveCmd->add_option("--depth", depth, "tableau depth limit");
    proveCmd->add_option("--gammas", gammas, "gamma-instantiation budget");
    proveCmd->add_flag("--json", json, "machine-readable report");
    proveCmd->add_option("--out", outPath, "write the report to a file");

    auto* modelsCmd = app.add_subcommand("models", "finite-model search over the axioms in a file");
    std::string modelsFile;
    int maxSize = 3;
    modelsCmd->add_option("file", modelsFile, "axiom file (.cs), one formula per line")->required();
    modelsCmd->add_option("--max-size", maxSize, "largest carrier to try");
    modelsCmd->add_flag("--json", json, "machine-readable report");
    modelsCmd->add_option("--out", outPath, "write the report to a file");

    auto* defs = app.add_subcommand("defs", "theory-of-definition checks");
    auto* defsCheck = defs->add_subcommand("check", "check definitions against a theory");
    std::string theoryFile, defFile;
    int maxModelSize = 3;
    bool proveMissing = false;
    defsCheck->add_option("theory", theoryFile, "theory script (.cs)")->required();
    defsCheck->add_option("definition", defFile, "definition file (.cs)")->required();
    defsCheck->add_option("--max-model-size", maxModelSize, "conservativity size bound");
    defsCheck->add_flag("--prove", proveMissing, "attempt the uniqueness theorem with the tableau prover");
    defsCheck->add_flag("--json", json, "machine-readable report");
    defsCheck->add_option("--out", outPath, "write the report to a file");

    auto* corpusCmd = app.add_subcommand("corpus", "list the bundled scripts");
    corpusCmd->add_flag("--json", json, "machine-readable report");
    corpusCmd->add_option("--out", outPath, "write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (check->parsed()) return runCheck(checkFiles, modeText, json, outPath, failOnInconsistent);
        if (proveCmd->parsed()) return runProve(proveFile, depth, gammas, json, outPath);
        if (modelsCmd->parsed()) return runModels(modelsFile, maxSize, json, outPath);
        if (defs->parsed()) {
            if (!defsCheck->parsed()) {
                std::cerr << "defs: expected 'check'\n";
                return kExitUsage;
            }
            return runDefs(theoryFile, defFile, maxModelSize, proveMissing, json, outPath);
        }
        if (corpusCmd->parsed()) return runCorpus(json, outPath);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const begriff::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}
