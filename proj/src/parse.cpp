#include "crossprod/parse.hpp"

#include <cctype>

namespace crossprod {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& cur() const { return cur_; }

    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        size_t start = i_;
        if (i_ >= s_.size()) {
            cur_ = {Tok::End, "", start};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            // A '/' directly between digit runs is part of a rational literal.
            if (j < s_.size() && s_[j] == '/' && j + 1 < s_.size() &&
                std::isdigit(static_cast<unsigned char>(s_[j + 1]))) {
                ++j;
                while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            }
            cur_ = {Tok::Number, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            cur_ = {Tok::Ident, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
            case '+': cur_ = {Tok::Plus, "+", start}; return;
            case '-': cur_ = {Tok::Minus, "-", start}; return;
            case '*': cur_ = {Tok::Star, "*", start}; return;
            case '^': cur_ = {Tok::Caret, "^", start}; return;
            case '(': cur_ = {Tok::LParen, "(", start}; return;
            case ')': cur_ = {Tok::RParen, ")", start}; return;
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

private:
    const std::string& s_;
    size_t i_ = 0;
    Token cur_{Tok::End, "", 0};
};

// One generic recursive-descent evaluator; atoms are resolved by the context.
template <typename Value, typename Ops>
class ExprParser {
public:
    ExprParser(const std::string& text, const Ops& ops) : lex_(text), ops_(ops) {}

    Value parse() {
        Value v = expr();
        if (lex_.cur().kind != Tok::End)
            throw ParseError("trailing input '" + lex_.cur().text + "'", lex_.cur().pos);
        return v;
    }

private:
    Value expr() {
        bool negate = false;
        if (lex_.cur().kind == Tok::Minus) {
            negate = true;
            lex_.advance();
        }
        Value v = term();
        if (negate) v = ops_.neg(v);
        while (lex_.cur().kind == Tok::Plus || lex_.cur().kind == Tok::Minus) {
            bool minus = lex_.cur().kind == Tok::Minus;
            lex_.advance();
            Value w = term();
            v = minus ? ops_.sub(v, w) : ops_.add(v, w);
        }
        return v;
    }

    Value term() {
        Value v = factor();
        while (lex_.cur().kind == Tok::Star) {
            lex_.advance();
            v = ops_.mul(v, factor());
        }
        return v;
    }

    Value factor() {
        Value v = atom();
        if (lex_.cur().kind == Tok::Caret) {
            size_t pos = lex_.cur().pos;
            lex_.advance();
            if (lex_.cur().kind != Tok::Number || lex_.cur().text.find('/') != std::string::npos)
                throw ParseError("exponent must be a nonnegative integer", pos);
            int k = std::stoi(lex_.cur().text);
            lex_.advance();
            v = ops_.pow(v, k);
        }
        return v;
    }

    Value atom() {
        const Token& t = lex_.cur();
        switch (t.kind) {
            case Tok::Number: {
                Value v = ops_.number(Rational::from_string(t.text));
                lex_.advance();
                return v;
            }
            case Tok::Ident: {
                Value v = ops_.ident(t.text, t.pos);
                lex_.advance();
                return v;
            }
            case Tok::LParen: {
                lex_.advance();
                Value v = expr();
                if (lex_.cur().kind != Tok::RParen)
                    throw ParseError("expected ')'", lex_.cur().pos);
                lex_.advance();
                return v;
            }
            case Tok::Minus: {
                lex_.advance();
                return ops_.neg(atom());
            }
            default:
                throw ParseError("expected a term", t.pos);
        }
    }

    Lexer lex_;
    const Ops& ops_;
};

struct PolyOps {
    const BaseDomain& base;

    CommPoly number(const Rational& r) const { return CommPoly::constant(base.num_vars(), r); }
    CommPoly ident(const std::string& name, size_t pos) const {
        for (int v = 0; v < base.num_vars(); ++v) {
            if (base.var_names[static_cast<size_t>(v)] == name)
                return CommPoly::variable(base.num_vars(), v);
        }
        throw ParseError("unknown variable '" + name + "'", pos);
    }
    CommPoly add(const CommPoly& a, const CommPoly& b) const { return crossprod::add(a, b); }
    CommPoly sub(const CommPoly& a, const CommPoly& b) const { return crossprod::sub(a, b); }
    CommPoly neg(const CommPoly& a) const { return crossprod::neg(a); }
    CommPoly mul(const CommPoly& a, const CommPoly& b) const {
        return crossprod::mul(a, b, base.quot());
    }
    CommPoly pow(const CommPoly& a, int k) const {
        CommPoly r = CommPoly::constant(base.num_vars(), Rational(1));
        for (int t = 0; t < k; ++t) r = crossprod::mul(r, a, base.quot());
        return r;
    }
};

struct ElementOps {
    const AlgebraPresentation& pres;

    CrossedElement number(const Rational& r) const {
        return CrossedElement::from_coeff(pres, CommPoly::constant(pres.num_vars(), r));
    }
    CrossedElement ident(const std::string& name, size_t pos) const {
        for (int v = 0; v < pres.num_vars(); ++v) {
            if (pres.base.var_names[static_cast<size_t>(v)] == name)
                return CrossedElement::from_coeff(pres,
                                                  CommPoly::variable(pres.num_vars(), v));
        }
        for (int g = 0; g < pres.num_generators(); ++g) {
            if (pres.lie.generator_names[static_cast<size_t>(g)] == name)
                return CrossedElement::generator(pres, g);
        }
        for (int g = 0; g < pres.num_generators(); ++g) {
            if (AlgebraPresentation::canonical_gen_name(g) == name)
                return CrossedElement::generator(pres, g);
        }
        throw ParseError("unknown variable or generator '" + name + "'", pos);
    }
    CrossedElement add(const CrossedElement& a, const CrossedElement& b) const {
        return ce_add(a, b);
    }
    CrossedElement sub(const CrossedElement& a, const CrossedElement& b) const {
        return ce_sub(a, b);
    }
    CrossedElement neg(const CrossedElement& a) const { return ce_neg(a); }
    CrossedElement mul(const CrossedElement& a, const CrossedElement& b) const {
        return multiply(pres, a, b);
    }
    CrossedElement pow(const CrossedElement& a, int k) const { return ce_pow(pres, a, k); }
};

}  // namespace

CommPoly parse_poly(const std::string& text, const BaseDomain& base) {
    PolyOps ops{base};
    CommPoly p = ExprParser<CommPoly, PolyOps>(text, ops).parse();
    if (base.quot()) p = reduce(p, *base.quot());
    return p;
}

CrossedElement parse_element(const std::string& text, const AlgebraPresentation& pres) {
    ElementOps ops{pres};
    return ExprParser<CrossedElement, ElementOps>(text, ops).parse();
}

}  // namespace crossprod
