#include "begriff/report.hpp"
#include "begriff/script.hpp"
#include "begriff/syntax.hpp"
#include "begriff/tableau.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace begriff;

namespace {

Layer layerOf(const std::string& s) { return s == "frege" ? Layer::Frege : Layer::Fol; }

std::optional<Mode> modeOf(const std::string& s) {
    if (s == "classical") return Mode::Classical;
    if (s == "guarded") return Mode::Guarded;
    return std::nullopt;
}

py::object jsonToPy(const OrderedJson& j) {
    py::module_ jsonMod = py::module_::import("json");
    return jsonMod.attr("loads")(j.dump());
}

} // namespace

PYBIND11_MODULE(_begriff, m) {
    m.doc() = "proof-checking kernel for a concept-script fragment and a small set theory";

    m.def(
        "parse",
        [](const std::string& text, const std::string& layer) {
            FormulaPtr f = parseFormula(text, layerOf(layer));
            py::dict d;
            d["ascii"] = render(f, RenderStyle::Ascii);
            d["unicode"] = render(f, RenderStyle::Unicode);
            auto fv = freeVars(f);
            d["free_vars"] = fv.merged();
            return d;
        },
        py::arg("text"), py::arg("layer") = "fol",
        "Parse a formula; returns its canonical renderings and free variables.");

    m.def(
        "roundtrip",
        [](const std::string& text, const std::string& layer) {
            Layer l = layerOf(layer);
            FormulaPtr f = parseFormula(text, l);
            return alphaEqual(f, parseFormula(render(f), l));
        },
        py::arg("text"), py::arg("layer") = "fol");

    m.def(
        "run_script",
        [](const std::string& text, const std::string& mode, const std::string& path) {
            ScriptResult r = runScriptText(text, modeOf(mode), path);
            return jsonToPy(scriptResultJson(r));
        },
        py::arg("text"), py::arg("mode") = "script", py::arg("path") = "<python>",
        "Replay a proof script; mode is 'classical', 'guarded', or 'script' (use the script's header).");

    m.def(
        "prove",
        [](const std::string& formula, int depth, int gammas) {
            FormulaPtr goal = parseFormula(formula, Layer::Fol);
            ProveResult pr = begriff::prove(goal, TableauLimits{depth, gammas});
            py::dict d;
            d["proved"] = pr.proved;
            d["depth"] = pr.stats.maxDepth;
            d["gamma_instantiations"] = pr.stats.gammaUsed;
            if (pr.proved) {
                d["trace"] = pr.trace;
                d["replay_ok"] = replayTableauTrace(goal, pr.trace);
            }
            return d;
        },
        py::arg("formula"), py::arg("depth") = 12, py::arg("gammas") = 200);

    m.def(
        "find_model",
        [](const std::vector<std::string>& axioms, int maxSize) {
            std::vector<FormulaPtr> fs;
            for (const auto& a : axioms) fs.push_back(parseFormula(a, Layer::Fol));
            FindModelResult res = findModel(fs, maxSize);
            py::dict d;
            d["found"] = res.model.has_value();
            if (res.model) {
                d["size"] = res.model->size;
                std::vector<std::pair<int, int>> memb;
                for (int i = 0; i < res.model->size; ++i)
                    for (int j = 0; j < res.model->size; ++j)
                        if (res.model->memb(i, j)) memb.emplace_back(i, j);
                d["membership"] = memb;
                d["assignment"] = res.model->assignment;
            } else {
                d["max_size"] = maxSize;
            }
            return d;
        },
        py::arg("axioms"), py::arg("max_size") = 3);

    m.def(
        "check_definition",
        [](const std::string& theoryText, const std::string& defText, int maxModelSize, bool proveMissing) {
            ScriptResult tr = runScriptText(theoryText);
            if (!tr.ok) throw std::runtime_error("theory script failed");
            ScriptResult dr = runScriptText(defText);
            if (dr.definitions.empty()) throw std::runtime_error("no definition in the definition text");
            DefCheckOptions opts;
            opts.maxModelSize = maxModelSize;
            opts.proveMissing = proveMissing;
            DefReport rep = checkDefinition(*tr.theory, dr.definitions.front(), opts);
            return jsonToPy(defReportJson(rep));
        },
        py::arg("theory"), py::arg("definition"), py::arg("max_model_size") = 3, py::arg("prove") = false);

    m.def("corpus_dir", [] { return corpusDir(); });

    m.def(
        "corpus_manifest",
        [](const std::string& dir) {
            py::list out;
            for (const auto& e : corpusManifest(dir.empty() ? corpusDir() : dir)) {
                py::dict d;
                d["name"] = e.name;
                d["file"] = e.file;
                d["layer"] = e.layer;
                d["mode"] = e.mode;
                d["anchors"] = e.anchors;
                out.append(d);
            }
            return out;
        },
        py::arg("dir") = "");
}
