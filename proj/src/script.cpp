#include "begriff/script.hpp"

#include "begriff/syntax.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace begriff {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> splitTop(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '{') depth++;
        if (c == ')' || c == '}') depth--;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty() || !out.empty()) out.push_back(cur);
    return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ParseError("script line " + std::to_string(line) + ": " + msg);
}

std::set<int> parseSelector(const std::string& text, int line) {
    std::set<int> out;
    std::string inner = trim(text);
    if (inner.size() < 2 || inner.front() != '{' || inner.back() != '}') fail(line, "occurrence selector needs {..}");
    inner = inner.substr(1, inner.size() - 2);
    for (const auto& part : splitTop(inner, ',')) {
        std::string p = trim(part);
        if (p.empty()) continue;
        out.insert(std::stoi(p));
    }
    return out;
}

// One binding: `x := term`, `f(%) := body`, `phi := formula occ {..}`.
void parseBinding(const std::string& text, Layer layer, const SymbolTable& symbols, SubstitutionPlan& plan, int line) {
    std::string t = trim(text);
    if (t.empty()) return;
    size_t assign = t.find(":=");
    if (assign == std::string::npos) fail(line, "binding needs ':=' in '" + t + "'");
    std::string lhs = trim(t.substr(0, assign));
    std::string rhs = trim(t.substr(assign + 2));

    // occurrence selector suffix
    size_t occPos = rhs.rfind(" occ ");
    if (occPos != std::string::npos && rhs.find('{', occPos) != std::string::npos && rhs.back() == '}') {
        plan.occurrences = parseSelector(rhs.substr(occPos + 5), line);
        rhs = trim(rhs.substr(0, occPos));
    }

    size_t paren = lhs.find('(');
    if (paren != std::string::npos) {
        // function abstract slot: name(%), name(%1, %2)
        std::string name = trim(lhs.substr(0, paren));
        std::string params = lhs.substr(paren);
        FunctionAbstract abs;
        if (params.find("%2") != std::string::npos) abs.params = {"%1", "%2"};
        else abs.params = {"%1"};
        abs.body = parseExpr(rhs, layer, symbols);
        plan.bindings[name] = abs;
        return;
    }
    if (lhs == "phi") {
        // zero-place formula metavariable (E2 style)
        FunctionAbstract abs;
        abs.body = Expr{parseFormula(rhs, layer, symbols)};
        plan.bindings[lhs] = abs;
        return;
    }
    Expr e = parseExpr(rhs, layer, symbols);
    if (std::holds_alternative<TermPtr>(e)) {
        TermPtr tm = std::get<TermPtr>(e);
        plan.bindings[lhs] = tm;
    } else {
        plan.bindings[lhs] = mkTruthObject(std::get<FormulaPtr>(e));
    }
}

SubstitutionPlan parsePlan(std::string text, Layer layer, const SymbolTable& symbols, int line) {
    SubstitutionPlan plan;
    text = trim(text);
    // convention suffix
    auto stripSuffix = [&](const std::string& suffix, Convention conv) {
        if (text.size() >= suffix.size() && text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0) {
            text = trim(text.substr(0, text.size() - suffix.size()));
            plan.convention = conv;
        }
    };
    stripSuffix("conv free", Convention::Free);
    stripSuffix("conv distinct", Convention::Distinct);
    for (const auto& part : splitTop(text, ';')) parseBinding(part, layer, symbols, plan, line);
    return plan;
}

void parseAttrs(const std::string& text, StepLine& step, int line) {
    std::string inner = trim(text);
    if (inner.empty()) return;
    if (inner.front() != '{' || inner.back() != '}') fail(line, "attributes need {..}");
    inner = inner.substr(1, inner.size() - 2);
    for (const auto& part : splitTop(inner, ',')) {
        std::string p = trim(part);
        if (p.empty()) continue;
        size_t colon = p.find(':');
        if (colon == std::string::npos) fail(line, "attribute needs 'key: value'");
        std::string k = trim(p.substr(0, colon));
        std::string v = trim(p.substr(colon + 1));
        if (k == "expect" && v == "blocked") step.expectBlocked = true;
        else if (k == "cite") step.expectCite = v;
        else if (k == "anchor") step.anchor = v;
        else fail(line, "unknown attribute '" + k + "'");
    }
}

StepLine parseStep(const std::string& line, int lineNo, Layer layer, const SymbolTable& symbols) {
    StepLine s;
    s.lineNo = lineNo;
    std::string rest = trim(line.substr(4)); // past "step"
    size_t colon = rest.find(':');
    if (colon == std::string::npos) fail(lineNo, "step needs 'step <id>: <rule> ...'");
    s.id = trim(rest.substr(0, colon));
    rest = trim(rest.substr(colon + 1));

    // attributes block at the end
    size_t brace = rest.rfind('{');
    if (brace != std::string::npos && rest.back() == '}') {
        parseAttrs(rest.substr(brace), s, lineNo);
        rest = trim(rest.substr(0, brace));
    }

    std::istringstream ss(rest);
    ss >> s.rule;
    std::string tail;
    std::getline(ss, tail);
    tail = trim(tail);

    // premise list [a b ...]
    if (!tail.empty() && tail.front() == '[') {
        size_t close = tail.find(']');
        if (close == std::string::npos) fail(lineNo, "unclosed premise list");
        std::istringstream ps(tail.substr(1, close - 1));
        std::string p;
        while (ps >> p) s.premises.push_back(p);
        tail = trim(tail.substr(close + 1));
    }

    auto takeWord = [&]() {
        std::istringstream ws(tail);
        std::string w;
        ws >> w;
        std::string remainder;
        std::getline(ws, remainder);
        tail = trim(remainder);
        return w;
    };

    if (s.rule == "axiom" || s.rule == "schema") {
        s.rule = "axiom";
        s.schemaId = takeWord();
        if (s.schemaId.empty()) fail(lineNo, "axiom needs a schema id");
    } else if (s.rule == "rewrite") {
        s.ruleName = takeWord();
        if (s.ruleName.empty()) fail(lineNo, "rewrite needs a rule name");
    } else if (s.rule == "fold" || s.rule == "coref") {
        s.constName = takeWord();
        if (s.constName.empty()) fail(lineNo, "rule needs a constant name");
    } else if (s.rule == "witness") {
        std::string kw = takeWord();
        if (kw != "as") fail(lineNo, "witness needs 'as <name>'");
        s.argName = takeWord();
    } else if (s.rule == "gen") {
        std::string kw = takeWord();
        if (kw != "over") fail(lineNo, "gen needs 'over <name>'");
        s.argName = takeWord();
    }

    // path: @ root | @ 1.2
    size_t at = tail.find('@');
    if (at != std::string::npos) {
        std::string after = trim(tail.substr(at + 1));
        std::istringstream as(after);
        std::string p;
        as >> p;
        s.pathText = p;
        std::string remainder;
        std::getline(as, remainder);
        tail = trim(tail.substr(0, at)) + " " + trim(remainder);
        tail = trim(tail);
    }

    if (tail.size() >= 3 && tail.compare(tail.size() - 3, 3, "rev") == 0) {
        s.reverse = true;
        tail = trim(tail.substr(0, tail.size() - 3));
    }

    // via <name>(, <name>)* and/or with <bindings>
    while (!tail.empty()) {
        if (tail.rfind("via ", 0) == 0) {
            std::string rest2 = tail.substr(4);
            size_t withPos = rest2.find(" with ");
            std::string names = withPos == std::string::npos ? rest2 : rest2.substr(0, withPos);
            tail = withPos == std::string::npos ? "" : trim(rest2.substr(withPos + 1));
            for (const auto& n : splitTop(names, ','))
                if (!trim(n).empty()) s.viaNames.push_back(trim(n));
        } else if (tail.rfind("with ", 0) == 0) {
            SubstitutionPlan plan = parsePlan(tail.substr(5), layer, symbols, lineNo);
            for (auto& [k, v] : plan.bindings) s.plan.bindings[k] = v;
            if (!plan.occurrences.empty()) s.plan.occurrences = plan.occurrences;
            s.plan.convention = plan.convention;
            tail = "";
        } else {
            fail(lineNo, "unexpected trailing text '" + tail + "'");
        }
    }

    // rules taking a term argument pull it out of the plan ('t' slot)
    if (s.rule == "gothic" || s.rule == "rewrite" || s.rule == "inst") {
        auto it = s.plan.bindings.find("t");
        if (it != s.plan.bindings.end() && (s.rule == "gothic" || s.rule == "rewrite")) {
            if (auto* tp = std::get_if<TermPtr>(&it->second)) s.argTerm = *tp;
            s.plan.bindings.erase(it);
        }
    }
    return s;
}

} // namespace

ParsedScript parseScript(const std::string& text, const std::string& sourcePath) {
    ParsedScript out;
    out.sourcePath = sourcePath;
    // first pass: headers decide the layer before any formula parses
    std::istringstream hs(text);
    std::string line;
    while (std::getline(hs, line)) {
        std::string t = trim(line);
        if (t.rfind("#!", 0) != 0) continue;
        std::string body = trim(t.substr(2));
        size_t colon = body.find(':');
        if (colon == std::string::npos) continue;
        std::string k = trim(body.substr(0, colon));
        std::string v = trim(body.substr(colon + 1));
        if (k == "name") out.name = v;
        else if (k == "layer") out.layer = (v == "frege") ? Layer::Frege : Layer::Fol;
        else if (k == "mode") out.defaultMode = (v == "guarded") ? Mode::Guarded : Mode::Classical;
        else if (k == "anchor") out.anchors.push_back(v);
    }

    SymbolTable symbols; // grows as def/define directives appear
    std::istringstream ss(text);
    int lineNo = 0;
    while (std::getline(ss, line)) {
        lineNo++;
        std::string t = trim(line);
        if (t.empty() || t.rfind("#!", 0) == 0) continue;
        if (t[0] == '#') continue;
        size_t hash = t.find(" #");
        if (hash != std::string::npos) t = trim(t.substr(0, hash));

        if (t.rfind("def ", 0) == 0) {
            std::string rest = t.substr(4);
            size_t assign = rest.find(":=");
            if (assign == std::string::npos) fail(lineNo, "def needs ':='");
            DefDirective d;
            d.name = trim(rest.substr(0, assign));
            d.definiens = parseTerm(trim(rest.substr(assign + 2)), out.layer, symbols);
            symbols.constants.insert(d.name);
            out.items.push_back(d);
        } else if (t.rfind("postulate ", 0) == 0) {
            std::string rest = t.substr(10);
            size_t colon = rest.find(':');
            if (colon == std::string::npos) fail(lineNo, "postulate needs 'postulate <id>: <formula>'");
            PostulateDirective p;
            p.id = trim(rest.substr(0, colon));
            p.formula = parseFormula(trim(rest.substr(colon + 1)), out.layer, symbols);
            out.items.push_back(p);
        } else if (t.rfind("define ", 0) == 0) {
            // define SYMBOL rank N vars x1 .. y : psi
            std::string rest = t.substr(7);
            size_t colon = rest.find(':');
            if (colon == std::string::npos) fail(lineNo, "define needs ': <psi>'");
            std::string head = trim(rest.substr(0, colon));
            std::string psiText = trim(rest.substr(colon + 1));
            std::istringstream hs2(head);
            Definition d;
            std::string kw;
            hs2 >> d.symbol >> kw >> d.rank;
            if (kw != "rank") fail(lineNo, "define needs 'rank <n>'");
            hs2 >> kw;
            if (kw != "vars") fail(lineNo, "define needs 'vars x1 .. y'");
            std::string v;
            std::vector<std::string> vars;
            while (hs2 >> v) vars.push_back(v);
            if (vars.empty()) fail(lineNo, "define needs at least the y variable");
            d.y = vars.back();
            vars.pop_back();
            d.xs = vars;
            if (static_cast<int>(d.xs.size()) != d.rank) fail(lineNo, "rank does not match the variable count");
            d.psi = parseFormula(psiText, out.layer, symbols);
            out.items.push_back(d);
            if (d.rank == 0) symbols.constants.insert(d.symbol);
            else symbols.operations[d.symbol] = d.rank;
        } else if (t.rfind("subst ", 0) == 0) {
            std::string rest = t.substr(6);
            size_t colon = rest.find(':');
            if (colon == std::string::npos) fail(lineNo, "subst needs 'subst <name>: <bindings>'");
            SubstDirective sd;
            sd.name = trim(rest.substr(0, colon));
            sd.plan = parsePlan(trim(rest.substr(colon + 1)), out.layer, symbols, lineNo);
            out.items.push_back(sd);
        } else if (t.rfind("step ", 0) == 0) {
            out.items.push_back(parseStep(t, lineNo, out.layer, symbols));
        } else {
            fail(lineNo, "unrecognized directive: '" + t + "'");
        }
    }
    return out;
}

// ---- execution ---------------------------------------------------------------

std::shared_ptr<Theory> buildTheory(const ParsedScript& script, std::optional<Mode> modeOverride) {
    Mode mode = modeOverride.value_or(script.defaultMode);
    auto th = std::make_shared<Theory>(script.name.empty() ? script.sourcePath : script.name, script.layer, mode);
    registerStandardSchemas(*th);
    for (const auto& item : script.items) {
        if (const auto* d = std::get_if<DefDirective>(&item)) th->defineConstant(d->name, d->definiens);
        else if (const auto* p = std::get_if<PostulateDirective>(&item)) th->postulate(p->id, p->formula);
        else if (const auto* def = std::get_if<Definition>(&item)) th->defineOperation(def->symbol, def->rank);
    }
    return th;
}

namespace {

std::map<std::string, TermPtr> termBindings(const SubstitutionPlan& plan) {
    std::map<std::string, TermPtr> out;
    for (const auto& [k, v] : plan.bindings) {
        if (const auto* t = std::get_if<TermPtr>(&v)) out[k] = *t;
        else if (const auto* s = std::get_if<std::string>(&v)) out[k] = mkVar(*s);
        else throw Error("binding '" + k + "' must be a term here");
    }
    return out;
}

} // namespace

ScriptResult runScript(const ParsedScript& script, std::optional<Mode> modeOverride) {
    auto t0 = std::chrono::steady_clock::now();
    ScriptResult res;
    res.script = script;
    res.modeUsed = modeOverride.value_or(script.defaultMode);
    auto th = std::make_shared<Theory>(script.name.empty() ? script.sourcePath : script.name, script.layer,
                                       res.modeUsed);
    res.theory = th;
    registerStandardSchemas(*th);

    std::map<std::string, SubstitutionPlan> namedSubsts;

    for (const auto& item : script.items) {
        if (const auto* d = std::get_if<DefDirective>(&item)) {
            th->defineConstant(d->name, d->definiens);
            continue;
        }
        if (const auto* p = std::get_if<PostulateDirective>(&item)) {
            th->postulate(p->id, p->formula);
            StepOutcome oc;
            oc.id = p->id;
            oc.rule = "postulate";
            oc.status = "certified";
            oc.formula = render(p->formula);
            res.outcomes.push_back(oc);
            continue;
        }
        if (const auto* def = std::get_if<Definition>(&item)) {
            res.definitions.push_back(*def);
            th->defineOperation(def->symbol, def->rank);
            continue;
        }
        if (const auto* sd = std::get_if<SubstDirective>(&item)) {
            namedSubsts[sd->name] = sd->plan;
            continue;
        }
        const StepLine& s = std::get<StepLine>(item);
        StepOutcome oc;
        oc.id = s.id;
        oc.rule = s.rule;
        oc.anchor = s.anchor;

        // merge named substitutions into the plan
        SubstitutionPlan plan = s.plan;

        auto premise = [&](size_t i) -> const std::string& {
            if (i >= s.premises.size()) throw Error("step '" + s.id + "' is missing premise " + std::to_string(i + 1));
            return s.premises[i];
        };

        try {
            for (const auto& vn : s.viaNames) {
                auto it = namedSubsts.find(vn);
                if (it == namedSubsts.end()) throw Error("unknown substitution '" + vn + "'");
                for (const auto& [k, v] : it->second.bindings) plan.bindings[k] = v;
                if (!it->second.occurrences.empty()) plan.occurrences = it->second.occurrences;
            }
            const Theorem* thm = nullptr;
            if (s.rule == "axiom") {
                thm = &th->axiom(s.id, s.schemaId, plan);
            } else if (s.rule == "mp") {
                thm = &th->mp(s.id, premise(0), premise(1));
            } else if (s.rule == "ig") {
                thm = &th->ig(s.id, premise(0));
            } else if (s.rule == "inst") {
                thm = &th->instantiate(s.id, premise(0), termBindings(plan));
            } else if (s.rule == "subst_fun") {
                // each abstract binding applies in slot-name order
                const Theorem* cur = nullptr;
                std::string curId = premise(0);
                int sub = 0;
                for (const auto& [k, v] : plan.bindings) {
                    const auto* abs = std::get_if<FunctionAbstract>(&v);
                    if (!abs) throw Error("subst_fun binding '" + k + "' must be a function abstract");
                    std::string nextId = (sub + 1 == static_cast<int>(plan.bindings.size())) ? s.id
                                                                                             : s.id + "_" + std::to_string(sub);
                    cur = &th->substFun(nextId, curId, k, *abs);
                    curId = nextId;
                    sub++;
                }
                if (!cur) throw Error("subst_fun needs at least one abstract binding");
                thm = cur;
            } else if (s.rule == "gothic") {
                if (!s.argTerm) throw Error("gothic needs 'with t := <term>'");
                thm = &th->gothicElim(s.id, premise(0), s.argTerm);
            } else if (s.rule == "id_subst") {
                thm = &th->idSubst(s.id, premise(0), premise(1), Path::parse(s.pathText), s.reverse);
            } else if (s.rule == "fold") {
                thm = &th->foldConst(s.id, premise(0), s.constName, Path::parse(s.pathText));
            } else if (s.rule == "unfold") {
                thm = &th->unfoldConst(s.id, premise(0), Path::parse(s.pathText));
            } else if (s.rule == "coref") {
                thm = &th->coref(s.id, premise(0), s.constName);
            } else if (s.rule == "rewrite") {
                thm = &th->rewrite(s.id, premise(0), s.ruleName, Path::parse(s.pathText), s.argTerm);
            } else if (s.rule == "iff_lr") {
                thm = &th->iffElim(s.id, premise(0), true);
            } else if (s.rule == "iff_rl") {
                thm = &th->iffElim(s.id, premise(0), false);
            } else if (s.rule == "witness") {
                thm = &th->witness(s.id, premise(0), s.argName);
            } else if (s.rule == "gen") {
                thm = &th->generalize(s.id, premise(0), s.argName);
            } else if (s.rule == "guard") {
                // a guarded-regime directive; classical replays pass it by
                if (res.modeUsed == Mode::Guarded) {
                    th->registerGuard(premise(0));
                    oc.message = "guard registered from " + premise(0);
                } else {
                    oc.message = "skipped under the classical regime";
                }
                oc.status = "certified";
                res.outcomes.push_back(oc);
                continue;
            } else {
                throw Error("unknown rule '" + s.rule + "'");
            }
            oc.status = "certified";
            oc.formula = render(thm->formula);
            if (s.expectBlocked && res.modeUsed == Mode::Guarded) {
                oc.asExpected = false;
                oc.message = "expected GuardBlocked, but the step certified";
                res.ok = false;
            }
        } catch (const GuardBlocked& gb) {
            oc.status = "blocked";
            oc.citing = gb.blockingTheorem;
            oc.message = gb.what();
            th->recordBlocked(s.id, s.rule, s.premises, "", gb.blockingTheorem, s.anchor);
            if (!s.expectBlocked) {
                oc.asExpected = false;
                res.ok = false;
            } else if (!s.expectCite.empty() && s.expectCite != gb.blockingTheorem) {
                oc.asExpected = false;
                oc.message = "blocked citing " + gb.blockingTheorem + ", expected " + s.expectCite;
                res.ok = false;
            }
        } catch (const std::exception& e) {
            oc.status = "failed";
            oc.message = e.what();
            oc.asExpected = false;
            res.ok = false;
        }
        res.outcomes.push_back(oc);
    }

    res.inconsistencies = th->inconsistencyPairs();
    res.elapsedMs =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

ScriptResult runScriptText(const std::string& text, std::optional<Mode> modeOverride, const std::string& sourcePath) {
    return runScript(parseScript(text, sourcePath), modeOverride);
}

} // namespace begriff
