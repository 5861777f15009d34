#include "begriff/kernel.hpp"

#include "begriff/tableau.hpp"

#include <algorithm>

namespace begriff {

Theory::Theory(std::string name, Layer layer, Mode mode) : name_(std::move(name)), layer_(layer), mode_(mode) {}

void Theory::registerSchema(Schema s) {
    if (schemas_.count(s.id)) throw Error("schema '" + s.id + "' already registered");
    schemas_.emplace(s.id, std::move(s));
}

bool Theory::hasSchema(const std::string& id) const { return schemas_.count(id) != 0; }

const Schema& Theory::schema(const std::string& id) const {
    auto it = schemas_.find(id);
    if (it == schemas_.end()) throw Error("unknown schema '" + id + "'");
    return it->second;
}

std::vector<std::string> Theory::schemaIds() const {
    std::vector<std::string> ids;
    for (const auto& [k, _] : schemas_) ids.push_back(k);
    return ids;
}

void Theory::defineConstant(const std::string& name, TermPtr definiens) {
    if (!isClosedTerm(definiens)) throw Error("definiens of '" + name + "' must be closed");
    constants_[name] = std::move(definiens);
}

const TermPtr* Theory::definiens(const std::string& name) const {
    auto it = constants_.find(name);
    return it == constants_.end() ? nullptr : &it->second;
}

void Theory::declareConstant(const std::string& name) { declared_.insert(name); }

void Theory::defineOperation(const std::string& name, int arity) {
    if (arity == 0) declared_.insert(name);
    else operations_[name] = arity;
}

SymbolTable Theory::symbols() const {
    SymbolTable st;
    for (const auto& [k, _] : constants_) st.constants.insert(k);
    st.constants.insert(declared_.begin(), declared_.end());
    st.operations = operations_;
    return st;
}

const Theorem& Theory::postulate(const std::string& id, FormulaPtr axiom) {
    requireNew(id);
    semanticAxioms_.push_back(axiom);
    ProofStep step;
    step.id = id;
    step.rule = "postulate";
    return commit(std::move(step), std::move(axiom));
}

const Theorem& Theory::theorem(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw Error("unknown theorem '" + id + "'");
    return store_[it->second];
}

bool Theory::hasTheorem(const std::string& id) const { return index_.count(id) != 0; }

bool Theory::storeContains(const FormulaPtr& f) const { return findTheorem(f).has_value(); }

std::optional<std::string> Theory::findTheorem(const FormulaPtr& f) const {
    FormulaPtr n = normalize(f);
    for (const auto& t : store_)
        if (alphaEqual(t.formula, n)) return t.id;
    return std::nullopt;
}

void Theory::requireNew(const std::string& id) const {
    if (index_.count(id)) throw Error("step id '" + id + "' already used");
}

const Theorem& Theory::commit(ProofStep step, FormulaPtr conclusion) {
    conclusion = normalize(conclusion);
    if (containsHole(conclusion))
        throw Error("step '" + step.id + "': schema metavariable left undischarged");
    step.conclusion = conclusion;
    steps_.push_back(step);
    store_.push_back(Theorem{step.id, conclusion, mode_});
    index_[step.id] = store_.size() - 1;
    return store_.back();
}

void Theory::recordBlocked(const std::string& id, const std::string& rule, const std::vector<std::string>& premises,
                           const std::string& detail, const std::string& blockedBy, const std::string& anchor) {
    ProofStep step;
    step.id = id;
    step.rule = rule;
    step.premises = premises;
    step.detail = detail;
    step.anchor = anchor;
    step.blocked = true;
    step.blockedBy = blockedBy;
    steps_.push_back(std::move(step));
}

// ---- the guarded regime ----------------------------------------------------

TermPtr Theory::unfoldAll(const TermPtr& t) const {
    if (!t) return t;
    switch (t->kind) {
    case TermKind::Var:
        return t;
    case TermKind::Const: {
        const TermPtr* d = definiens(t->name);
        if (!d) return t;
        return unfoldAll(*d);
    }
    case TermKind::FunApp: {
        std::vector<TermPtr> args;
        for (const auto& a : t->args) args.push_back(unfoldAll(a));
        return mkFunApp(t->name, std::move(args), t->definedSymbol, t->span);
    }
    case TermKind::CourseOfValues:
        return mkCourseOfValues(t->name, unfoldAll(t->body), t->span);
    case TermKind::MemApp:
        return mkMemApp(unfoldAll(t->args[0]), unfoldAll(t->args[1]), t->span);
    case TermKind::TruthObject:
        return mkTruthObject(unfoldAll(t->body), t->span);
    }
    return t;
}

FormulaPtr Theory::unfoldAll(const FormulaPtr& f) const {
    if (!f) return f;
    auto cf = std::make_shared<Formula>(*f);
    if (f->t1) cf->t1 = unfoldAll(f->t1);
    if (f->t2) cf->t2 = unfoldAll(f->t2);
    if (f->f1) cf->f1 = unfoldAll(f->f1);
    if (f->f2) cf->f2 = unfoldAll(f->f2);
    for (auto& a : cf->holeArgs) a = unfoldAll(a);
    return cf;
}

void Theory::registerGuard(const std::string& thmId) {
    if (mode_ != Mode::Guarded) throw Error("register_guard requires guarded mode");
    const Theorem& thm = theorem(thmId);
    FormulaPtr f = thm.formula;
    if (f->kind != FormulaKind::Not || !f->f1 || f->f1->kind != FormulaKind::Atom || f->f1->pred != Pred::Identity)
        throw ShapeMismatch("guard source must have shape not (a = T)");
    TermPtr lhs = f->f1->t1, rhs = f->f1->t2;
    TermPtr rhsU = unfoldAll(rhs);
    if (rhsU->kind != TermKind::CourseOfValues || !isClosedTerm(rhsU))
        throw ShapeMismatch("guarded term must be a closed course-of-values term");
    bool lhsVar = lhs->kind == TermKind::Var;
    if (!lhsVar && !isClosedTerm(lhs))
        throw ShapeMismatch("guard source must have a free variable or a closed term on the left");
    guards_.push_back(GuardEntry{rhs, rhsU, thmId});
}

std::optional<std::string> Theory::guardHit(const TermPtr& t) const {
    TermPtr u = unfoldAll(t);
    for (const auto& g : guards_)
        if (alphaEqual(u, g.blockedUnfolded)) return g.sourceId;
    return std::nullopt;
}

void Theory::checkGuard(const TermPtr& t, const std::string& context) const {
    if (mode_ != Mode::Guarded) return;
    if (auto hit = guardHit(t))
        throw GuardBlocked(context + ": the term is certified distinct from every variable it would instantiate (" +
                               *hit + ")",
                           *hit);
}

// ---- rules -----------------------------------------------------------------

const Theorem& Theory::axiom(const std::string& id, const std::string& schemaId, const SubstitutionPlan& plan) {
    requireNew(id);
    const Schema& s = schema(schemaId);
    if (s.layer != layer_)
        throw LayerMismatch("schema '" + schemaId + "' belongs to the " + std::string(layerName(s.layer)) + " layer");
    FormulaPtr f = s.instantiate(plan, *this);
    ProofStep step;
    step.id = id;
    step.rule = "axiom";
    step.detail = schemaId;
    return commit(std::move(step), f);
}

const Theorem& Theory::mp(const std::string& id, const std::string& impId, const std::string& minorId) {
    requireNew(id);
    const Theorem& imp = theorem(impId);
    const Theorem& minor = theorem(minorId);
    if (imp.formula->kind != FormulaKind::Cond) throw ShapeMismatch("mp: first premise is not a conditional");
    if (!alphaEqual(imp.formula->f1, minor.formula))
        throw ShapeMismatch("mp: minor premise does not match the antecedent");
    ProofStep step;
    step.id = id;
    step.rule = "mp";
    step.premises = {impId, minorId};
    return commit(std::move(step), imp.formula->f2);
}

const Theorem& Theory::ig(const std::string& id, const std::string& premiseId) {
    requireNew(id);
    const Theorem& p = theorem(premiseId);
    const FormulaPtr& f = p.formula;
    if (f->kind != FormulaKind::Cond || f->f2->kind != FormulaKind::Not || !alphaEqual(f->f1, f->f2->f1))
        throw ShapeMismatch("ig: premise must have shape A -> not A");
    ProofStep step;
    step.id = id;
    step.rule = "ig";
    step.premises = {premiseId};
    return commit(std::move(step), f->f2);
}

const Theorem& Theory::instantiate(const std::string& id, const std::string& premiseId,
                                   const std::map<std::string, TermPtr>& bindings) {
    requireNew(id);
    const Theorem& p = theorem(premiseId);
    auto fv = freeVars(p.formula);
    std::map<std::string, TermPtr> live;
    for (const auto& [v, t] : bindings) {
        if (!fv.objects.count(v)) continue; // not free: vacuous
        checkGuard(t, "instantiating '" + v + "'");
        live[v] = t;
    }
    FormulaPtr f = live.empty() ? p.formula : substituteVars(p.formula, live);
    ProofStep step;
    step.id = id;
    step.rule = "inst";
    step.premises = {premiseId};
    return commit(std::move(step), f);
}

const Theorem& Theory::substFun(const std::string& id, const std::string& premiseId, const std::string& fvar,
                                const FunctionAbstract& abs) {
    requireNew(id);
    const Theorem& p = theorem(premiseId);
    FormulaPtr f = substituteFunction(p.formula, fvar, abs);
    ProofStep step;
    step.id = id;
    step.rule = "subst_fun";
    step.premises = {premiseId};
    step.detail = fvar;
    return commit(std::move(step), f);
}

const Theorem& Theory::gothicElim(const std::string& id, const std::string& premiseId, const TermPtr& term) {
    requireNew(id);
    const Theorem& p = theorem(premiseId);
    checkGuard(term, "gothic instantiation");
    const FormulaPtr& f = p.formula;
    FormulaPtr out;
    auto elim = [&](const FormulaPtr& q) -> FormulaPtr {
        if (q->kind != FormulaKind::ForallObj) throw ShapeMismatch("gothic: no universal to instantiate");
        return substituteVar(q->f1, q->var, term);
    };
    if (f->kind == FormulaKind::ForallObj) {
        out = elim(f);
    } else if (f->kind == FormulaKind::Atom && f->pred == Pred::Identity && f->t2->kind == TermKind::TruthObject &&
               f->t2->body->kind == FormulaKind::ForallObj) {
        out = mkAtom(Pred::Identity, f->t1, mkTruthObject(elim(f->t2->body)), f->span);
    } else if (f->kind == FormulaKind::Atom && f->pred == Pred::Identity && f->t1->kind == TermKind::TruthObject &&
               f->t1->body->kind == FormulaKind::ForallObj) {
        out = mkAtom(Pred::Identity, mkTruthObject(elim(f->t1->body)), f->t2, f->span);
    } else {
        throw ShapeMismatch("gothic: premise is neither universal nor an identity with a universal side");
    }
    ProofStep step;
    step.id = id;
    step.rule = "gothic";
    step.premises = {premiseId};
    return commit(std::move(step), out);
}

const Theorem& Theory::idSubst(const std::string& id, const std::string& targetId, const std::string& identityId,
                               const Path& path, bool reverse) {
    requireNew(id);
    const Theorem& target = theorem(targetId);
    const Theorem& ident = theorem(identityId);
    const FormulaPtr& idf = ident.formula;
    if (idf->kind != FormulaKind::Atom || idf->pred != Pred::Identity)
        throw ShapeMismatch("id_subst: second premise is not an identity");
    TermPtr what = reverse ? idf->t1 : idf->t2;
    TermPtr with = reverse ? idf->t2 : idf->t1;
    FormulaPtr out = editAt(
        target.formula, path,
        [&](const FormulaPtr& node) -> FormulaPtr {
            if (what->kind != TermKind::TruthObject || !alphaEqual(node, what->body))
                throw ShapeMismatch("id_subst: formula at " + path.str() + " does not match the identity side");
            if (with->kind == TermKind::TruthObject) return with->body;
            return mkHorizontalT(with);
        },
        [&](const TermPtr& node) -> TermPtr {
            if (!alphaEqual(node, what))
                throw ShapeMismatch("id_subst: term at " + path.str() + " does not match the identity side");
            return with;
        });
    ProofStep step;
    step.id = id;
    step.rule = "id_subst";
    step.premises = {targetId, identityId};
    step.detail = path.str();
    return commit(std::move(step), out);
}

const Theorem& Theory::foldConst(const std::string& id, const std::string& premiseId, const std::string& constName,
                                 const Path& path) {
    requireNew(id);
    const Theorem& p = theorem(premiseId);
    const TermPtr* d = definiens(constName);
    if (!d) throw Error("fold: '" + constName + "' is not a defined constant");
    FormulaPtr out = editAt(p.formula, path, nullptr, [&](const TermPtr& node) -> TermPtr {
        if (!alphaEqual(node, *d)) throw ShapeMismatch("fold: term at " + path.str() + " is not the definiens of " + constName);
        return mkConst(constName);
    });
    ProofStep step;
    step.id = id;
    step.rule = "fold";
    step.premises = {premiseId};
    step.detail = constName + " @ " + path.str();
    return commit(std::move(step), out);
}

const Theorem& Theory::unfoldConst(const std::string& id, const std::string& premiseId, const Path& path) {
    requireNew(id);
    const Theorem& p = theorem(premiseId);
    FormulaPtr out = editAt(p.formula, path, nullptr, [&](const TermPtr& node) -> TermPtr {
        if (node->kind != TermKind::Const) throw ShapeMismatch("unfold: node at " + path.str() + " is not a constant");
        const TermPtr* d = definiens(node->name);
        if (!d) throw Error("unfold: no definiens for '" + node->name + "'");
        return *d;
    });
    ProofStep step;
    step.id = id;
    step.rule = "unfold";
    step.premises = {premiseId};
    step.detail = path.str();
    return commit(std::move(step), out);
}

const Theorem& Theory::coref(const std::string& id, const std::string& premiseId, const std::string& constName) {
    requireNew(id);
    const Theorem& p = theorem(premiseId);
    const TermPtr* d = definiens(constName);
    if (!d) throw Error("coref: '" + constName + "' is not a defined constant");
    const FormulaPtr& f = p.formula;
    if (f->kind != FormulaKind::Atom || f->pred != Pred::Identity || f->t1->kind != TermKind::TruthObject ||
        f->t1->body->kind != FormulaKind::Atom || f->t1->body->pred != Pred::Identity)
        throw ShapeMismatch("coref: premise must have shape (A = B) = C");
    const FormulaPtr inner = f->t1->body;
    if (!alphaEqual(unfoldAll(inner->t1), unfoldAll(*d)))
        throw ShapeMismatch("coref: left side of the inner identity is not the definiens of " + constName);
    FormulaPtr out =
        mkAtom(Pred::Identity, mkTruthObject(mkAtom(Pred::Identity, inner->t1, mkConst(constName), inner->span)), f->t2, f->span);
    ProofStep step;
    step.id = id;
    step.rule = "coref";
    step.premises = {premiseId};
    step.detail = constName;
    return commit(std::move(step), out);
}

const Theorem& Theory::rewrite(const std::string& id, const std::string& premiseId, const std::string& ruleName,
                               const Path& path, const TermPtr& arg) {
    requireNew(id);
    const Theorem& p = theorem(premiseId);
    if (ruleName == "forall_elim" && arg) checkGuard(arg, "forall_elim");
    auto apply = [&](const FormulaPtr& f) -> FormulaPtr {
        if (ruleName == "contrapose") {
            if (f->kind != FormulaKind::Cond) throw ShapeMismatch("contrapose expects a conditional");
            return mkCond(mkNot(f->f2), mkNot(f->f1), f->span);
        }
        if (ruleName == "iff_comm") {
            if (f->kind != FormulaKind::Iff) throw ShapeMismatch("iff_comm expects a biconditional");
            return mkIff(f->f2, f->f1, f->span);
        }
        if (ruleName == "neg_iff_shift") {
            if (f->kind != FormulaKind::Not || f->f1->kind != FormulaKind::Iff)
                throw ShapeMismatch("neg_iff_shift expects a negated biconditional");
            return mkIff(f->f1->f1, mkNot(f->f1->f2), f->span);
        }
        if (ruleName == "symm") {
            if (f->kind != FormulaKind::Atom || f->pred != Pred::Identity)
                throw ShapeMismatch("symm expects an identity");
            return mkAtom(Pred::Identity, f->t2, f->t1, f->span);
        }
        if (ruleName == "cancel_neg_id") {
            if (f->kind != FormulaKind::Not || f->f1->kind != FormulaKind::Atom || f->f1->pred != Pred::Identity ||
                f->f1->t1->kind != TermKind::TruthObject || f->f1->t1->body->kind != FormulaKind::Not)
                throw ShapeMismatch("cancel_neg_id expects not ((not A) = B)");
            FormulaPtr inner = f->f1->t1->body->f1; // A
            TermPtr lhs;
            if (inner->kind == FormulaKind::Horizontal && inner->t1) lhs = inner->t1;
            else lhs = mkTruthObject(inner);
            return mkAtom(Pred::Identity, lhs, f->f1->t2, f->span);
        }
        if (ruleName == "forall_elim") {
            if (!arg) throw MissingBinding("forall_elim needs a term argument");
            if (f->kind != FormulaKind::ForallObj) throw ShapeMismatch("forall_elim expects a universal");
            return substituteVar(f->f1, f->var, arg);
        }
        throw Error("unknown rewrite rule '" + ruleName + "'");
    };
    FormulaPtr out = editAt(p.formula, path, apply, nullptr);
    ProofStep step;
    step.id = id;
    step.rule = "rewrite";
    step.premises = {premiseId};
    step.detail = ruleName + " @ " + path.str();
    return commit(std::move(step), out);
}

const Theorem& Theory::iffElim(const std::string& id, const std::string& premiseId, bool leftToRight) {
    requireNew(id);
    const Theorem& p = theorem(premiseId);
    if (p.formula->kind != FormulaKind::Iff) throw ShapeMismatch("iff elimination expects a biconditional");
    FormulaPtr out = leftToRight ? mkCond(p.formula->f1, p.formula->f2) : mkCond(p.formula->f2, p.formula->f1);
    ProofStep step;
    step.id = id;
    step.rule = leftToRight ? "iff_lr" : "iff_rl";
    step.premises = {premiseId};
    return commit(std::move(step), out);
}

const Theorem& Theory::witness(const std::string& id, const std::string& premiseId, const std::string& freshVar) {
    requireNew(id);
    const Theorem& p = theorem(premiseId);
    if (p.formula->kind != FormulaKind::ExistsObj) throw ShapeMismatch("witness expects an existential");
    if (occursFreeObj(p.formula->f1, freshVar))
        throw Error("witness variable '" + freshVar + "' occurs in the body");
    for (const auto& t : store_)
        if (occursFreeObj(t.formula, freshVar))
            throw Error("witness variable '" + freshVar + "' already occurs free in " + t.id);
    FormulaPtr out = substituteVar(p.formula->f1, p.formula->var, mkVar(freshVar));
    ProofStep step;
    step.id = id;
    step.rule = "witness";
    step.premises = {premiseId};
    step.detail = freshVar;
    return commit(std::move(step), out);
}

const Theorem& Theory::generalize(const std::string& id, const std::string& premiseId, const std::string& var) {
    requireNew(id);
    const Theorem& p = theorem(premiseId);
    ProofStep step;
    step.id = id;
    step.rule = "gen";
    step.premises = {premiseId};
    step.detail = var;
    return commit(std::move(step), mkForallObj(var, p.formula));
}

const Theorem& Theory::fromTableau(const std::string& id, FormulaPtr goal, const std::string& traceJson) {
    requireNew(id);
    if (layer_ != Layer::Fol) throw LayerMismatch("from_tableau applies to FOL theories");
    if (!replayTableauTrace(goal, traceJson))
        throw Error("from_tableau: trace does not replay through the closure checker");
    ProofStep step;
    step.id = id;
    step.rule = "from_tableau";
    step.detail = traceJson;
    return commit(std::move(step), std::move(goal));
}

std::vector<std::pair<std::string, std::string>> Theory::inconsistencyPairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (size_t i = 0; i < store_.size(); ++i) {
        for (size_t j = i + 1; j < store_.size(); ++j) {
            const FormulaPtr& a = store_[i].formula;
            const FormulaPtr& b = store_[j].formula;
            bool clash = (b->kind == FormulaKind::Not && alphaEqual(a, b->f1)) ||
                         (a->kind == FormulaKind::Not && alphaEqual(a->f1, b));
            if (clash) out.emplace_back(store_[i].id, store_[j].id);
        }
    }
    return out;
}

// ---- standard schemas -------------------------------------------------------

namespace {

std::string varBinding(const SubstitutionPlan& plan, const std::string& slot, const std::string& fallback) {
    auto it = plan.bindings.find(slot);
    if (it == plan.bindings.end()) return fallback;
    if (auto* s = std::get_if<std::string>(&it->second)) return *s;
    if (auto* t = std::get_if<TermPtr>(&it->second)) {
        if ((*t)->kind == TermKind::Var) return (*t)->name;
    }
    throw SideConditionViolation("variable-slot", "slot '" + slot + "' must be bound to a variable");
}

const FunctionAbstract& absBinding(const SubstitutionPlan& plan, const std::string& slot) {
    auto it = plan.bindings.find(slot);
    if (it == plan.bindings.end()) throw MissingBinding("schema needs a binding for '" + slot + "'");
    if (auto* a = std::get_if<FunctionAbstract>(&it->second)) return *a;
    throw SideConditionViolation("abstract-slot", "slot '" + slot + "' must be bound to a function abstract");
}

void requireDistinct(const SubstitutionPlan& plan, std::initializer_list<std::string> names) {
    if (plan.convention != Convention::Distinct) return;
    std::vector<std::string> seen;
    for (const auto& n : names) {
        if (std::find(seen.begin(), seen.end(), n) != seen.end())
            throw SideConditionViolation("distinct-variables",
                                         "the tacit convention is in force: different variables stand for "
                                         "different variables ('" +
                                             n + "' is bound twice)");
        seen.push_back(n);
    }
}

// Frege-layer propositions are registered as bodies over canonical free
// variables; plans substitute abstracts for the function variables first,
// then instantiate term slots simultaneously (guard-filtered).
Schema fregeProposition(std::string id, const std::string& bodyText, std::vector<std::string> funSlots,
                        std::vector<std::string> termSlots) {
    FormulaPtr body = normalize(parseFormula(bodyText, Layer::Frege));
    std::string display = bodyText;
    return Schema{
        std::move(id), Layer::Frege, std::move(display),
        [body, funSlots, termSlots](const SubstitutionPlan& plan, const Theory& th) -> FormulaPtr {
            FormulaPtr f = body;
            for (const auto& slot : funSlots) {
                auto it = plan.bindings.find(slot);
                if (it == plan.bindings.end()) continue;
                f = substituteFunction(f, slot, absBinding(plan, slot));
            }
            std::map<std::string, TermPtr> terms;
            for (const auto& slot : termSlots) {
                auto it = plan.bindings.find(slot);
                if (it == plan.bindings.end()) continue;
                if (auto* t = std::get_if<TermPtr>(&it->second)) terms[slot] = *t;
                else if (auto* s = std::get_if<std::string>(&it->second)) terms[slot] = mkVar(*s);
                else throw SideConditionViolation("term-slot", "slot '" + slot + "' must be bound to a term");
            }
            if (!terms.empty()) {
                if (th.mode() == Mode::Guarded) {
                    for (const auto& [v, t] : terms)
                        if (auto hit = th.guardHit(t))
                            throw GuardBlocked("axiom instantiation of '" + v + "' is blocked by " + *hit, *hit);
                }
                f = substituteVars(f, terms);
            }
            return f;
        }};
}

} // namespace

void registerStandardSchemas(Theory& th) {
    if (th.layer() == Layer::Fol) {
        th.registerSchema(Schema{
            "C", Layer::Fol, "all z1...zn. exists y. all x. (x in y <-> phi(x))",
            [](const SubstitutionPlan& plan, const Theory&) -> FormulaPtr {
                std::string x = varBinding(plan, "x", "x");
                std::string y = varBinding(plan, "y", "y");
                requireDistinct(plan, {x, y});
                const FunctionAbstract& phi = absBinding(plan, "phi");
                if (phi.arity() != 1 || !std::holds_alternative<FormulaPtr>(phi.body))
                    throw SideConditionViolation("phi-shape", "(C): phi must be a one-place formula abstract");
                Expr filled = fillAbstract(phi, {mkVar(x)});
                FormulaPtr phix = std::get<FormulaPtr>(filled);
                auto fv = freeVars(phix);
                if (fv.objects.count(y))
                    throw SideConditionViolation("y-not-free-in-phi", "(C): y is not a free variable of phi(x)");
                FormulaPtr body = mkExistsObj(
                    y, mkForallObj(x, mkIff(mkAtom(Pred::Membership, mkVar(x), mkVar(y)), phix)));
                std::vector<std::string> zs(fv.objects.begin(), fv.objects.end());
                zs.erase(std::remove(zs.begin(), zs.end(), x), zs.end());
                std::sort(zs.rbegin(), zs.rend()); // closure in ascending order outermost-first
                for (const auto& z : zs) body = mkForallObj(z, body);
                return body;
            }});
        th.registerSchema(Schema{
            "E1", Layer::Fol, "(all z. (z in x <-> z in y)) <-> x = y",
            [](const SubstitutionPlan& plan, const Theory&) -> FormulaPtr {
                std::string x = varBinding(plan, "x", "x");
                std::string y = varBinding(plan, "y", "y");
                std::string z = varBinding(plan, "z", "z");
                requireDistinct(plan, {x, y, z});
                // textual slot filling: metavariables stand for variables
                return mkIff(mkForallObj(z, mkIff(mkAtom(Pred::Membership, mkVar(z), mkVar(x)),
                                                  mkAtom(Pred::Membership, mkVar(z), mkVar(y)))),
                             mkAtom(Pred::Identity, mkVar(x), mkVar(y)));
            }});
        th.registerSchema(Schema{
            "E2", Layer::Fol, "x = y -> (phi(x,x) <-> phi(x,y))",
            [](const SubstitutionPlan& plan, const Theory&) -> FormulaPtr {
                std::string x = varBinding(plan, "x", "x");
                std::string y = varBinding(plan, "y", "y");
                requireDistinct(plan, {x, y});
                const FunctionAbstract& phi = absBinding(plan, "phi");
                if (phi.arity() != 0 || !std::holds_alternative<FormulaPtr>(phi.body))
                    throw SideConditionViolation("phi-shape", "(E2): phi is the formula phi(x,x) itself");
                FormulaPtr phixx = std::get<FormulaPtr>(phi.body);
                FormulaPtr phixy;
                try {
                    phixy = substituteOccurrences(phixx, x, y, plan.occurrences);
                } catch (const CaptureError& e) {
                    throw SideConditionViolation(
                        "free-for", "(E2): y must be free for x in all occurrences of x which it replaces");
                }
                return mkCond(mkAtom(Pred::Identity, mkVar(x), mkVar(y)), mkIff(phixx, phixy));
            }});
        return;
    }

    // Frege layer
    th.registerSchema(fregeProposition("IIIe", "a = a", {}, {"a"}));
    th.registerSchema(fregeProposition("IIIb", "not g(a) -> (g(b) -> not (a = b))", {"g"}, {"a", "b"}));
    th.registerSchema(fregeProposition("III", "f((a = b)) -> f((allF g. (g(b) -> g(a))))", {"f"}, {"a", "b"}));
    th.registerSchema(fregeProposition("1", "f(a) = (a mem (ext e. f(e)))", {"f"}, {"a"}));
    th.registerSchema(fregeProposition("77", "F(f(a)) -> F(a mem (ext e. f(e)))", {"F", "f"}, {"a"}));
    th.registerSchema(fregeProposition("82", "F(a mem (ext e. f(e))) -> F(f(a))", {"F", "f"}, {"a"}));
    th.registerSchema(fregeProposition("V", "((ext e. g(e)) = (ext u. f(u))) = (all w. (g(w) = f(w)))", {"g", "f"}, {}));
    th.registerSchema(fregeProposition(
        "Vpb", "((ext e. f(e)) = (ext u. g(u))) -> ((not (a = (ext e. f(e)))) -> (f(a) = g(a)))", {"f", "g"}, {"a"}));
    th.registerSchema(fregeProposition(
        "Vpc", "((ext e. f(e)) = (ext u. g(u))) -> ((not (a = (ext u. g(u)))) -> (f(a) = g(a)))", {"f", "g"}, {"a"}));
}

} // namespace begriff
