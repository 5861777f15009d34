#include "begriff/syntax.hpp"

#include <cctype>
#include <cstring>

namespace begriff {

namespace {

enum class Tok {
    End, Ident, Placeholder,
    LParen, RParen, Dot, Comma,
    Arrow, DArrow, Eq,
    KwAll, KwExists, KwAllF, KwExt, KwNot, KwHoriz, KwIn, KwMem, KwAnd, KwOr,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    SourceSpan span;
    bool fraktur = false; // identifier written in fraktur (second-order binder names)
};

// Unicode aliases accepted by the lexer so that unicode-rendered output
// parses back to the same tree.
struct UnicodeAlias {
    const char* utf8;
    Tok kind;
};
const UnicodeAlias kAliases[] = {
    {"∈", Tok::KwIn},     // ∈
    {"∀", Tok::KwAll},    // ∀
    {"∃", Tok::KwExists}, // ∃
    {"¬", Tok::KwNot},    // ¬
    {"→", Tok::Arrow},    // →
    {"↔", Tok::DArrow},   // ↔
    {"⌢", Tok::KwMem},    // ⌢ (frown)
    {"—", Tok::KwHoriz},  // — (em dash as the horizontal)
    {"ὲ", Tok::KwExt},    // ὲ
};

bool frakturToAscii(const std::string& s, size_t pos, char& out, size_t& len) {
    // Mathematical fraktur small letters U+1D51E..U+1D537, 4-byte UTF-8.
    const unsigned char* p = reinterpret_cast<const unsigned char*>(s.data()) + pos;
    if (pos + 4 > s.size()) return false;
    if (p[0] != 0xF0 || p[1] != 0x9D || p[2] != 0x94) return false;
    if (p[3] < 0x9E || p[3] > 0xB7) return false;
    out = static_cast<char>('a' + (p[3] - 0x9E));
    len = 4;
    return true;
}

class Lexer {
public:
    Lexer(const std::string& text, int fileId) : text_(text), file_(fileId) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    const std::string& text_;
    int file_;
    size_t pos_ = 0;
    Token tok_;

    void advance() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') { // line comment
                while (pos_ < text_.size() && text_[pos_] != '\n') pos_++;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) { pos_++; continue; }
            break;
        }
        SourceSpan sp{file_, static_cast<std::uint32_t>(pos_), static_cast<std::uint32_t>(pos_)};
        if (pos_ >= text_.size()) {
            tok_ = {Tok::End, "", sp};
            return;
        }
        auto emit = [&](Tok k, size_t len, std::string txt = "") {
            sp.hi = static_cast<std::uint32_t>(pos_ + len);
            tok_ = {k, txt.empty() ? text_.substr(pos_, len) : std::move(txt), sp};
            pos_ += len;
        };
        char c = text_[pos_];
        switch (c) {
        case '(': emit(Tok::LParen, 1); return;
        case ')': emit(Tok::RParen, 1); return;
        case '.': emit(Tok::Dot, 1); return;
        case ',': emit(Tok::Comma, 1); return;
        case '=': emit(Tok::Eq, 1); return;
        case '~': emit(Tok::KwNot, 1); return;
        case '-':
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') { emit(Tok::Arrow, 2); return; }
            throw ParseError("stray '-'", sp);
        case '<':
            if (pos_ + 2 < text_.size() && text_[pos_ + 1] == '-' && text_[pos_ + 2] == '>') { emit(Tok::DArrow, 3); return; }
            throw ParseError("stray '<'", sp);
        case '%': {
            size_t len = 1;
            std::string name = "%1";
            if (pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                name = std::string("%") + text_[pos_ + 1];
                len = 2;
            }
            emit(Tok::Placeholder, len, name);
            return;
        }
        default: break;
        }
        for (const auto& alias : kAliases) {
            size_t n = std::strlen(alias.utf8);
            if (text_.compare(pos_, n, alias.utf8) == 0) {
                emit(alias.kind, n);
                return;
            }
        }
        // identifiers (fraktur letters fold to their ascii counterparts)
        {
            std::string name;
            bool sawFraktur = false;
            size_t start = pos_, scan = pos_;
            while (scan < text_.size()) {
                char out;
                size_t len;
                char ch = text_[scan];
                if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
                    name += ch;
                    scan += 1;
                } else if (ch == '\'' && !name.empty()) {
                    name += ch;
                    scan += 1;
                } else if (frakturToAscii(text_, scan, out, len)) {
                    name += out;
                    sawFraktur = true;
                    scan += len;
                } else {
                    break;
                }
            }
            if (name.empty()) throw ParseError("lexical error: unexpected byte", sp);
            pos_ = start;
            Tok k = Tok::Ident;
            if (name == "all") k = Tok::KwAll;
            else if (name == "exists") k = Tok::KwExists;
            else if (name == "allF") k = Tok::KwAllF;
            else if (name == "ext") k = Tok::KwExt;
            else if (name == "not") k = Tok::KwNot;
            else if (name == "horiz") k = Tok::KwHoriz;
            else if (name == "in") k = Tok::KwIn;
            else if (name == "mem") k = Tok::KwMem;
            else if (name == "and") k = Tok::KwAnd;
            else if (name == "or") k = Tok::KwOr;
            emit(k, scan - start, name);
            tok_.fraktur = sawFraktur;
        }
    }
};

SourceSpan join(SourceSpan a, SourceSpan b) {
    SourceSpan s = a;
    s.lo = std::min(a.lo, b.lo);
    s.hi = std::max(a.hi, b.hi);
    return s;
}

class Parser {
public:
    Parser(const std::string& text, Layer layer, const SymbolTable& symbols, int fileId)
        : lex_(text, fileId), layer_(layer), symbols_(symbols) {}

    Expr parseTop() {
        Expr e = parseIff();
        expect(Tok::End, "trailing input after formula");
        return e;
    }

private:
    Lexer lex_;
    Layer layer_;
    const SymbolTable& symbols_;

    [[noreturn]] void fail(const std::string& msg, SourceSpan sp) { throw ParseError(msg, sp); }

    Token expect(Tok k, const std::string& what) {
        if (lex_.peek().kind != k) fail("expected " + what + ", got '" + lex_.peek().text + "'", lex_.peek().span);
        return lex_.next();
    }

    bool accept(Tok k) {
        if (lex_.peek().kind == k) {
            lex_.next();
            return true;
        }
        return false;
    }

    FormulaPtr asFormula(Expr e) {
        if (std::holds_alternative<FormulaPtr>(e)) return std::get<FormulaPtr>(e);
        TermPtr t = std::get<TermPtr>(e);
        return mkHorizontalT(t, t->span); // implicit horizontal
    }

    TermPtr asTerm(Expr e, SourceSpan at) {
        if (std::holds_alternative<TermPtr>(e)) return std::get<TermPtr>(e);
        FormulaPtr f = std::get<FormulaPtr>(e);
        if (layer_ == Layer::Fol) fail("formula in term position is Frege-layer syntax", at);
        return mkTruthObject(f, f->span);
    }

    Expr parseIff() {
        Expr l = parseCond();
        while (lex_.peek().kind == Tok::DArrow) {
            Token op = lex_.next();
            if (layer_ == Layer::Frege) fail("'<->' is FOL-layer syntax; Frege biconditionals are truth-value identities", op.span);
            FormulaPtr lf = asFormula(l);
            FormulaPtr rf = asFormula(parseCond());
            l = mkIff(lf, rf, join(lf->span, rf->span));
        }
        return l;
    }

    Expr parseCond() {
        Expr l = parseOr();
        if (lex_.peek().kind == Tok::Arrow) {
            lex_.next();
            FormulaPtr lf = asFormula(l);
            FormulaPtr rf = asFormula(parseCond()); // right-associative
            return mkCond(lf, rf, join(lf->span, rf->span));
        }
        return l;
    }

    static FormulaPtr withSpan(const FormulaPtr& f, SourceSpan sp) {
        auto c = std::make_shared<Formula>(*f);
        c->span = sp;
        return c;
    }

    Expr parseOr() {
        Expr l = parseAnd();
        while (lex_.peek().kind == Tok::KwOr) {
            lex_.next();
            FormulaPtr lf = asFormula(l);
            FormulaPtr rf = asFormula(parseAnd());
            l = withSpan(mkOr(lf, rf), join(lf->span, rf->span));
        }
        return l;
    }

    Expr parseAnd() {
        Expr l = parseUnary();
        while (lex_.peek().kind == Tok::KwAnd) {
            lex_.next();
            FormulaPtr lf = asFormula(l);
            FormulaPtr rf = asFormula(parseUnary());
            l = withSpan(mkAnd(lf, rf), join(lf->span, rf->span));
        }
        return l;
    }

    Expr parseUnary() {
        Token t = lex_.peek();
        if (t.kind == Tok::KwNot) {
            lex_.next();
            FormulaPtr inner = asFormula(parseUnary());
            return mkNot(inner, join(t.span, inner->span));
        }
        if (t.kind == Tok::KwHoriz) {
            if (layer_ == Layer::Fol) fail("'horiz' is Frege-layer syntax", t.span);
            lex_.next();
            Expr inner = parseOperand();
            if (std::holds_alternative<FormulaPtr>(inner)) return inner; // — over a formula is that formula
            TermPtr it = std::get<TermPtr>(inner);
            if (it->kind == TermKind::TruthObject) return it->body;
            return Expr{FormulaPtr(mkHorizontalT(it, join(t.span, it->span)))};
        }
        return parseAtomLevel();
    }

    Expr parseAtomLevel() {
        Token start = lex_.peek();
        Expr l = parseOperand();
        Tok k = lex_.peek().kind;
        if (k == Tok::KwIn || k == Tok::Eq || k == Tok::KwMem) {
            Token op = lex_.next();
            Expr r = parseOperand();
            Tok after = lex_.peek().kind;
            if (after == Tok::KwIn || after == Tok::Eq || after == Tok::KwMem)
                fail("chained 'in'/'='/'mem' needs parentheses", lex_.peek().span);
            if (k == Tok::KwIn) {
                if (layer_ == Layer::Frege) fail("'in' is FOL-layer syntax; use 'mem'", op.span);
                TermPtr lt = asTerm(l, start.span), rt = asTerm(r, op.span);
                return Expr{FormulaPtr(mkAtom(Pred::Membership, lt, rt, join(lt->span, rt->span)))};
            }
            if (k == Tok::Eq) {
                TermPtr lt = asTerm(l, start.span), rt = asTerm(r, op.span);
                return Expr{FormulaPtr(mkAtom(Pred::Identity, lt, rt, join(lt->span, rt->span)))};
            }
            if (layer_ == Layer::Fol) fail("'mem' is Frege-layer syntax; use 'in'", op.span);
            TermPtr lt = asTerm(l, start.span), rt = asTerm(r, op.span);
            return Expr{TermPtr(mkMemApp(lt, rt, join(lt->span, rt->span)))};
        }
        return l;
    }

    Expr parseOperand() {
        Token t = lex_.peek();
        switch (t.kind) {
        case Tok::LParen: {
            lex_.next();
            Expr inner = parseIff();
            Token close = expect(Tok::RParen, "')'");
            // widen the span to include the parentheses
            if (std::holds_alternative<TermPtr>(inner)) {
                auto ct = std::make_shared<Term>(*std::get<TermPtr>(inner));
                ct->span = join(t.span, close.span);
                return Expr{TermPtr(ct)};
            }
            auto cf = std::make_shared<Formula>(*std::get<FormulaPtr>(inner));
            cf->span = join(t.span, close.span);
            return Expr{FormulaPtr(cf)};
        }
        case Tok::KwAll:
        case Tok::KwExists: {
            lex_.next();
            if (t.kind == Tok::KwExists && layer_ == Layer::Frege)
                fail("'exists' is FOL-layer syntax", t.span);
            Token v = expect(Tok::Ident, "bound variable");
            expect(Tok::Dot, "'.'");
            FormulaPtr body = asFormula(parseIff());
            FormulaPtr f;
            if (t.kind == Tok::KwAll && v.fraktur) // ∀𝔤 is the second-order quantifier
                f = mkForallFun(v.text, body, join(t.span, body->span));
            else if (t.kind == Tok::KwAll)
                f = mkForallObj(v.text, body, join(t.span, body->span));
            else
                f = mkExistsObj(v.text, body, join(t.span, body->span));
            return Expr{f};
        }
        case Tok::KwAllF: {
            if (layer_ == Layer::Fol) fail("'allF' is Frege-layer syntax", t.span);
            lex_.next();
            Token v = expect(Tok::Ident, "bound function variable");
            expect(Tok::Dot, "'.'");
            FormulaPtr body = asFormula(parseIff());
            return Expr{FormulaPtr(mkForallFun(v.text, body, join(t.span, body->span)))};
        }
        case Tok::KwExt: {
            if (layer_ == Layer::Fol) fail("'ext' is Frege-layer syntax", t.span);
            lex_.next();
            Token v = expect(Tok::Ident, "bound variable");
            expect(Tok::Dot, "'.'");
            FormulaPtr body = asFormula(parseIff());
            return Expr{TermPtr(mkCourseOfValues(v.text, body, join(t.span, body->span)))};
        }
        case Tok::Placeholder: {
            lex_.next();
            return Expr{TermPtr(mkVar(t.text, t.span))};
        }
        case Tok::Ident: {
            lex_.next();
            if (lex_.peek().kind == Tok::LParen) {
                lex_.next();
                std::vector<TermPtr> args;
                if (lex_.peek().kind != Tok::RParen) {
                    args.push_back(asTerm(parseIff(), lex_.peek().span));
                    while (accept(Tok::Comma)) args.push_back(asTerm(parseIff(), lex_.peek().span));
                }
                Token close = expect(Tok::RParen, "')'");
                bool defined = false;
                if (auto arity = symbols_.operationArity(t.text)) {
                    defined = true;
                    if (*arity != static_cast<int>(args.size()))
                        fail("operation '" + t.text + "' expects " + std::to_string(*arity) + " arguments", t.span);
                } else if (layer_ == Layer::Fol) {
                    fail("unknown symbol '" + t.text + "'", t.span);
                }
                return Expr{TermPtr(mkFunApp(t.text, std::move(args), defined, join(t.span, close.span)))};
            }
            if (symbols_.isConstant(t.text)) return Expr{TermPtr(mkConst(t.text, t.span))};
            return Expr{TermPtr(mkVar(t.text, t.span))};
        }
        default:
            fail("expected a term or formula, got '" + t.text + "'", t.span);
        }
    }
};

} // namespace

Expr parseExpr(const std::string& text, Layer layer, const SymbolTable& symbols, int fileId) {
    Parser p(text, layer, symbols, fileId);
    return p.parseTop();
}

FormulaPtr parseFormula(const std::string& text, Layer layer, const SymbolTable& symbols, int fileId) {
    Expr e = parseExpr(text, layer, symbols, fileId);
    if (std::holds_alternative<FormulaPtr>(e)) return std::get<FormulaPtr>(e);
    TermPtr t = std::get<TermPtr>(e);
    return mkHorizontalT(t, t->span);
}

TermPtr parseTerm(const std::string& text, Layer layer, const SymbolTable& symbols, int fileId) {
    Expr e = parseExpr(text, layer, symbols, fileId);
    if (std::holds_alternative<TermPtr>(e)) return std::get<TermPtr>(e);
    FormulaPtr f = std::get<FormulaPtr>(e);
    if (layer == Layer::Fol) throw ParseError("expected a term", f->span);
    return mkTruthObject(f, f->span);
}

} // namespace begriff
