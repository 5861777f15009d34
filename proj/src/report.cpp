#include "begriff/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef BEGRIFF_CORPUS_DEFAULT
#define BEGRIFF_CORPUS_DEFAULT "corpus"
#endif

namespace begriff {

OrderedJson scriptResultJson(const ScriptResult& r) {
    OrderedJson j;
    j["schema_version"] = kReportSchemaVersion;
    j["script"] = r.script.name;
    j["file"] = r.script.sourcePath;
    j["layer"] = layerName(r.script.layer);
    j["mode"] = modeName(r.modeUsed);
    j["ok"] = r.ok;
    j["steps"] = OrderedJson::array();
    for (const auto& oc : r.outcomes) {
        OrderedJson s;
        s["id"] = oc.id;
        s["rule"] = oc.rule;
        s["status"] = oc.status;
        if (!oc.anchor.empty()) s["anchor"] = oc.anchor;
        if (!oc.formula.empty()) s["formula"] = oc.formula;
        if (!oc.citing.empty()) s["citing"] = oc.citing;
        if (!oc.message.empty()) s["message"] = oc.message;
        if (!oc.asExpected) s["as_expected"] = false;
        j["steps"].push_back(s);
    }
    j["inconsistencies"] = OrderedJson::array();
    for (const auto& [a, b] : r.inconsistencies) j["inconsistencies"].push_back(OrderedJson::array({a, b}));
    j["elapsed_ms"] = r.elapsedMs;
    return j;
}

std::string scriptResultText(const ScriptResult& r) {
    std::ostringstream os;
    os << "== " << (r.script.name.empty() ? r.script.sourcePath : r.script.name) << " [" << layerName(r.script.layer)
       << ", " << modeName(r.modeUsed) << "] " << (r.ok ? "ok" : "FAILED") << "\n";
    for (const auto& oc : r.outcomes) {
        os << "  " << oc.id << ": " << oc.rule << " -> " << oc.status;
        if (!oc.anchor.empty()) os << "  " << oc.anchor;
        if (!oc.citing.empty()) os << "  citing " << oc.citing;
        if (!oc.formula.empty()) os << "\n      " << oc.formula;
        if (!oc.asExpected) os << "\n      !! " << oc.message;
        os << "\n";
    }
    if (r.inconsistencies.empty()) {
        os << "  consistency: no contradictory pairs\n";
    } else {
        os << "  consistency: contradictory pairs:";
        for (const auto& [a, b] : r.inconsistencies) os << " {" << a << ", " << b << "}";
        os << "\n";
    }
    os << "  elapsed: " << r.elapsedMs << " ms\n";
    return os.str();
}

OrderedJson defReportJson(const DefReport& r) {
    OrderedJson j;
    j["schema_version"] = kReportSchemaVersion;
    j["symbol"] = r.symbol;
    auto verdict = [](const RestrictionVerdict& v) {
        OrderedJson o;
        o["pass"] = v.pass;
        if (!v.note.empty()) o["note"] = v.note;
        return o;
    };
    j["restrictions"]["i_distinct_variables"] = verdict(r.distinctVars);
    j["restrictions"]["ii_free_variables"] = verdict(r.freeVars);
    j["restrictions"]["iii_known_symbols"] = verdict(r.knownSymbols);
    j["restrictions"]["iv_uniqueness"] = verdict(r.uniqueness);
    j["all_pass"] = r.allPass();
    if (r.existenceRefuted) j["existence_refuted"] = true;
    if (r.eliminationWitness) j["elimination_witness"] = *r.eliminationWitness;
    if (r.conservativity) {
        OrderedJson c;
        c["verdict"] = r.conservativity->str();
        c["up_to"] = r.conservativity->upTo;
        if (r.conservativity->witness) c["witness"] = *r.conservativity->witness;
        if (r.conservativity->witnessSize) c["witness_size"] = *r.conservativity->witnessSize;
        c["base_models_per_size"] = r.conservativity->baseCount;
        c["expandable_models_per_size"] = r.conservativity->expandableCount;
        c["battery_size"] = r.conservativity->batterySize;
        j["conservativity"] = c;
    }
    return j;
}

std::string defReportText(const DefReport& r) {
    std::ostringstream os;
    auto line = [&](const char* name, const RestrictionVerdict& v) {
        os << "  " << name << ": " << (v.pass ? "Pass" : "Fail");
        if (!v.note.empty()) os << "  (" << v.note << ")";
        os << "\n";
    };
    os << "definition " << r.symbol << ":\n";
    line("(i)   distinct variables", r.distinctVars);
    line("(ii)  free variables", r.freeVars);
    line("(iii) known symbols", r.knownSymbols);
    line("(iv)  uniqueness", r.uniqueness);
    if (r.existenceRefuted) os << "  existence refuted by the prover\n";
    if (r.conservativity) os << "  conservativity: " << r.conservativity->str()
                             << (r.conservativity->witness ? "  witness: " + *r.conservativity->witness : "") << "\n";
    os << "  overall: " << (r.allPass() ? "proper definition" : "rejected") << "\n";
    return os.str();
}

std::string dumpReport(const OrderedJson& j) { return j.dump(2) + "\n"; }

std::string corpusDir() {
    if (const char* env = std::getenv("BEGRIFF_CORPUS_DIR")) return env;
    return BEGRIFF_CORPUS_DEFAULT;
}

std::vector<CorpusEntry> corpusManifest(const std::string& dir) {
    std::vector<CorpusEntry> out;
    namespace fs = std::filesystem;
    if (!fs::exists(dir)) return out;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".cs") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& p : files) {
        CorpusEntry entry;
        entry.file = p.string();
        entry.name = p.stem().string();
        std::ifstream in(p);
        std::string line;
        while (std::getline(in, line)) {
            auto pos = line.find("#!");
            if (pos != 0) continue;
            std::string body = line.substr(2);
            auto colon = body.find(':');
            if (colon == std::string::npos) continue;
            auto trim = [](std::string s) {
                size_t a = s.find_first_not_of(" \t\r");
                size_t b = s.find_last_not_of(" \t\r");
                return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
            };
            std::string k = trim(body.substr(0, colon));
            std::string v = trim(body.substr(colon + 1));
            if (k == "name") entry.name = v;
            else if (k == "layer") entry.layer = v;
            else if (k == "mode") entry.mode = v;
            else if (k == "anchor") entry.anchors.push_back(v);
        }
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace begriff
