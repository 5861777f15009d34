#include "begriff/battery.hpp"

#include <map>

namespace begriff {

namespace {

FormulaPtr atomByIndex(int a) {
    auto x = [] { return mkVar("x"); };
    auto y = [] { return mkVar("y"); };
    switch (a) {
    case 0: return mkAtom(Pred::Membership, x(), x());
    case 1: return mkAtom(Pred::Membership, x(), y());
    case 2: return mkAtom(Pred::Membership, y(), x());
    case 3: return mkAtom(Pred::Membership, y(), y());
    default: return mkAtom(Pred::Identity, x(), y());
    }
}

std::vector<FormulaPtr> literals() {
    std::vector<FormulaPtr> out;
    for (int a = 0; a < 5; ++a) {
        out.push_back(atomByIndex(a));
        out.push_back(mkNot(atomByIndex(a)));
    }
    return out;
}

std::vector<FormulaPtr> matrices() {
    std::vector<FormulaPtr> lits = literals();
    std::vector<FormulaPtr> out = lits;
    const int kImp = 0, kIff = 1, kAnd = 2, kOr = 3;
    for (int c = kImp; c <= kOr; ++c) {
        for (const auto& l1 : lits) {
            for (const auto& l2 : lits) {
                switch (c) {
                case kImp: out.push_back(mkCond(l1, l2)); break;
                case kIff: out.push_back(mkIff(l1, l2)); break;
                case kAnd: out.push_back(mkAnd(l1, l2)); break;
                default: out.push_back(mkOr(l1, l2)); break;
                }
            }
        }
    }
    return out;
}

FormulaPtr renameYtoX(const FormulaPtr& f) {
    // matrices are quantifier-free over free x, y; textual rename suffices
    if (!f) return f;
    auto cf = std::make_shared<Formula>(*f);
    auto fixTerm = [](const TermPtr& t) -> TermPtr {
        if (t && t->kind == TermKind::Var && t->name == "y") return mkVar("x");
        return t;
    };
    cf->t1 = fixTerm(f->t1);
    cf->t2 = fixTerm(f->t2);
    cf->f1 = renameYtoX(f->f1);
    cf->f2 = renameYtoX(f->f2);
    return cf;
}

} // namespace

std::vector<FormulaPtr> sentenceBattery() {
    static const std::vector<std::string> prefixes = {"AA", "AE", "EA", "EE", "A", "E"};
    std::vector<FormulaPtr> ms = matrices();
    std::vector<FormulaPtr> out;
    out.reserve(prefixes.size() * ms.size());
    for (const auto& p : prefixes) {
        for (const auto& m : ms) {
            if (p.size() == 1) {
                FormulaPtr body = renameYtoX(m);
                out.push_back(p == "A" ? mkForallObj("x", body) : mkExistsObj("x", body));
            } else {
                FormulaPtr inner = p[1] == 'A' ? mkForallObj("y", m) : mkExistsObj("y", m);
                out.push_back(p[0] == 'A' ? mkForallObj("x", inner) : mkExistsObj("x", inner));
            }
        }
    }
    return out;
}

std::vector<FormulaPtr> dedupByTruthVector(const std::vector<FormulaPtr>& sentences,
                                           const std::function<std::vector<bool>(const FormulaPtr&)>& truthVector) {
    std::map<std::vector<bool>, bool> seen;
    std::vector<FormulaPtr> out;
    for (const auto& s : sentences) {
        auto tv = truthVector(s);
        if (seen.emplace(std::move(tv), true).second) out.push_back(s);
    }
    return out;
}

} // namespace begriff
