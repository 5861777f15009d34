#include "begriff/syntax.hpp"

#include <sstream>

namespace begriff {

namespace {

// Precedence levels: 1 binder, 2 iff, 3 cond, 4 not, 5 binary atom / mem,
// 6 primary. A child whose level is below the required minimum gets parens.
struct Renderer {
    RenderStyle style;

    std::string kw(const char* ascii, const char* uni) const {
        return style == RenderStyle::Ascii ? ascii : uni;
    }

    static std::string frakturize(const std::string& name) {
        std::string out;
        for (char c : name) {
            if (c >= 'a' && c <= 'z') {
                unsigned cp = 0x1D51E + (c - 'a');
                out += static_cast<char>(0xF0);
                out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
                out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
                out += static_cast<char>(0x80 | (cp & 0x3F));
            } else {
                out += c;
            }
        }
        return out;
    }

    std::string wrap(const std::string& s, int prec, int need) const {
        return prec < need ? "(" + s + ")" : s;
    }

    std::string formula(const FormulaPtr& f, int need) const {
        int prec;
        std::string s = formulaRaw(f, prec);
        return wrap(s, prec, need);
    }

    std::string term(const TermPtr& t, int need) const {
        int prec;
        std::string s = termRaw(t, prec);
        return wrap(s, prec, need);
    }

    std::string formulaRaw(const FormulaPtr& f, int& prec) const {
        switch (f->kind) {
        case FormulaKind::Atom: {
            prec = 5;
            const char* opA = f->pred == Pred::Membership ? " in " : " = ";
            const char* opU = f->pred == Pred::Membership ? " ∈ " : " = ";
            return term(f->t1, 6) + kw(opA, opU) + term(f->t2, 6);
        }
        case FormulaKind::Horizontal:
            if (f->f1) {
                // pre-normalization only; the horizontal over a formula
                // renders explicitly so the shape survives a round trip
                prec = 4;
                return kw("horiz ", "— ") + formula(f->f1, 6);
            }
            return termRaw(f->t1, prec); // implicit horizontal
        case FormulaKind::Not:
            prec = 4;
            return kw("not ", "¬") + formula(f->f1, 5);
        case FormulaKind::Cond:
            prec = 3;
            return formula(f->f1, 4) + kw(" -> ", " → ") + formula(f->f2, 3);
        case FormulaKind::Iff:
            prec = 2;
            return formula(f->f1, 3) + kw(" <-> ", " ↔ ") + formula(f->f2, 3);
        case FormulaKind::ForallObj:
            prec = 1;
            return kw("all ", "∀") + f->var + ". " + formula(f->f1, 1);
        case FormulaKind::ExistsObj:
            prec = 1;
            return kw("exists ", "∃") + f->var + ". " + formula(f->f1, 1);
        case FormulaKind::ForallFun:
            prec = 1;
            return kw("allF ", "∀") + (style == RenderStyle::Ascii ? f->var : frakturize(f->var)) + ". " + formula(f->f1, 1);
        case FormulaKind::Hole: {
            prec = 6;
            std::string s = "?" + f->var;
            if (!f->holeArgs.empty()) {
                s += "(";
                for (size_t i = 0; i < f->holeArgs.size(); ++i) {
                    if (i) s += ", ";
                    s += term(f->holeArgs[i], 1);
                }
                s += ")";
            }
            return s;
        }
        }
        prec = 6;
        return "?";
    }

    std::string termRaw(const TermPtr& t, int& prec) const {
        switch (t->kind) {
        case TermKind::Var:
        case TermKind::Const:
            prec = 6;
            return t->name;
        case TermKind::FunApp: {
            prec = 6;
            std::string head = t->name;
            std::string s = head + "(";
            for (size_t i = 0; i < t->args.size(); ++i) {
                if (i) s += ", ";
                s += term(t->args[i], 1);
            }
            return s + ")";
        }
        case TermKind::CourseOfValues:
            prec = 1;
            return kw("ext ", "ὲ") + t->name + ". " + formula(t->body, 1);
        case TermKind::MemApp:
            prec = 5;
            return term(t->args[0], 6) + kw(" mem ", " ⌢ ") + term(t->args[1], 6);
        case TermKind::TruthObject: {
            prec = 6;
            const FormulaPtr& b = t->body;
            if (b->kind == FormulaKind::Horizontal && b->t1)
                return "(" + kw("horiz ", "— ") + term(b->t1, 6) + ")";
            return "(" + formula(b, 1) + ")";
        }
        }
        prec = 6;
        return "?";
    }
};

} // namespace

std::string render(const FormulaPtr& f, RenderStyle style) {
    Renderer r{style};
    return r.formula(f, 1);
}

std::string render(const TermPtr& t, RenderStyle style) {
    Renderer r{style};
    return r.term(t, 1);
}

} // namespace begriff
