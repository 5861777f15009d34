#pragma once

#include "begriff/defcheck.hpp"
#include "begriff/script.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace begriff {

// Machine reports use insertion-ordered JSON so that serialize -> parse ->
// serialize is byte-identical.
using OrderedJson = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

OrderedJson scriptResultJson(const ScriptResult& r);
std::string scriptResultText(const ScriptResult& r);

OrderedJson defReportJson(const DefReport& r);
std::string defReportText(const DefReport& r);

std::string dumpReport(const OrderedJson& j);

// Corpus discovery: the bundled scripts directory, overridable with the
// BEGRIFF_CORPUS_DIR environment variable.
std::string corpusDir();

struct CorpusEntry {
    std::string file; // absolute path
    std::string name;
    std::string layer;
    std::string mode;
    std::vector<std::string> anchors;
};

std::vector<CorpusEntry> corpusManifest(const std::string& dir);

} // namespace begriff
