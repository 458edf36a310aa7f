#include "qmx/expr.hpp"

#include <cctype>
#include <cstdint>

namespace qmx {

namespace {

struct Token {
    enum class Type { Integer, Q, QPower, Gen, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Type type = Type::End;
    std::size_t pos = 0;
    mpz_class value;         // Integer
    std::int64_t q_exp = 0;  // QPower: the (negative) exponent baked into the token
    int gen_row = 0, gen_col = 0;
};

class Lexer {
public:
    Lexer(std::string_view text, int n) : text_(text), n_(n) { advance(); }

    const Token& peek() const { return current_; }
    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        current_ = Token{};
        current_.pos = i_;
        if (i_ >= text_.size()) {
            current_.type = Token::Type::End;
            return;
        }
        char c = text_[i_];
        switch (c) {
            case '+': current_.type = Token::Type::Plus; ++i_; return;
            case '-': current_.type = Token::Type::Minus; ++i_; return;
            case '*': current_.type = Token::Type::Star; ++i_; return;
            case '/': current_.type = Token::Type::Slash; ++i_; return;
            case '^': current_.type = Token::Type::Caret; ++i_; return;
            case '(': current_.type = Token::Type::LParen; ++i_; return;
            case ')': current_.type = Token::Type::RParen; ++i_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            current_.type = Token::Type::Integer;
            current_.value = lex_integer();
            return;
        }
        if (c == 'q') {
            ++i_;
            // negative exponents are a lexer-level token and exist only on q
            if (i_ + 1 < text_.size() && text_[i_] == '^' && text_[i_ + 1] == '-') {
                std::size_t digits = i_ + 2;
                if (digits < text_.size() && std::isdigit(static_cast<unsigned char>(text_[digits]))) {
                    i_ += 2;
                    mpz_class k = lex_integer();
                    if (!k.fits_slong_p()) throw ParseError(current_.pos, "q exponent too large");
                    current_.type = Token::Type::QPower;
                    current_.q_exp = -k.get_si();
                    return;
                }
            }
            current_.type = Token::Type::Q;
            return;
        }
        if (c == 'Z') {
            lex_generator();
            return;
        }
        throw ParseError(i_, std::string("unexpected character '") + c + "'");
    }

    mpz_class lex_integer() {
        std::size_t start = i_;
        while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
        return mpz_class(std::string(text_.substr(start, i_ - start)));
    }

    void lex_generator() {
        std::size_t start = i_;
        ++i_;  // 'Z'
        expect_char('[');
        int row = lex_index();
        expect_char(',');
        int col = lex_index();
        expect_char(']');
        if (row < 1 || row > n_ || col < 1 || col > n_)
            throw ParseError(start, "generator index out of range for n=" + std::to_string(n_));
        current_.type = Token::Type::Gen;
        current_.gen_row = row;
        current_.gen_col = col;
    }

    void expect_char(char c) {
        if (i_ >= text_.size() || text_[i_] != c)
            throw ParseError(i_, std::string("expected '") + c + "'");
        ++i_;
    }

    int lex_index() {
        if (i_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[i_])))
            throw ParseError(i_, "expected a generator index");
        mpz_class v = lex_integer();
        if (!v.fits_sint_p()) throw ParseError(i_, "generator index too large");
        return v.get_si();
    }

    std::string_view text_;
    int n_;
    std::size_t i_ = 0;
    Token current_;
};

class Parser {
public:
    Parser(std::string_view text, int n) : lex_(text, n) {}

    Expr parse() {
        Expr e = parse_sum();
        if (lex_.peek().type != Token::Type::End)
            throw ParseError(lex_.peek().pos, "unexpected trailing input");
        return e;
    }

private:
    Expr parse_sum() {
        Expr lhs = parse_product();
        for (;;) {
            auto t = lex_.peek().type;
            if (t != Token::Type::Plus && t != Token::Type::Minus) return lhs;
            lex_.take();
            Expr node;
            node.kind = t == Token::Type::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
            node.kids.push_back(std::move(lhs));
            node.kids.push_back(parse_product());
            lhs = std::move(node);
        }
    }

    Expr parse_product() {
        Expr lhs = parse_factor();
        while (lex_.peek().type == Token::Type::Star) {
            lex_.take();
            Expr node;
            node.kind = Expr::Kind::Mul;
            node.kids.push_back(std::move(lhs));
            node.kids.push_back(parse_factor());
            lhs = std::move(node);
        }
        return lhs;
    }

    Expr parse_factor() {
        if (lex_.peek().type == Token::Type::Minus) {
            lex_.take();
            Expr node;
            node.kind = Expr::Kind::Neg;
            node.kids.push_back(parse_factor());
            return node;
        }
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_primary();
        while (lex_.peek().type == Token::Type::Caret) {
            Token caret = lex_.take();
            Token exp = lex_.peek();
            if (exp.type == Token::Type::Minus)
                throw ParseError(exp.pos, "negative exponents are only allowed on q");
            if (exp.type != Token::Type::Integer)
                throw ParseError(caret.pos, "exponent must be a natural number");
            lex_.take();
            if (!exp.value.fits_uint_p()) throw ParseError(exp.pos, "exponent too large");
            Expr node;
            node.kind = Expr::Kind::Pow;
            node.exponent = static_cast<unsigned>(exp.value.get_ui());
            node.kids.push_back(std::move(base));
            base = std::move(node);
        }
        return base;
    }

    Expr parse_primary() {
        Token t = lex_.take();
        Expr node;
        switch (t.type) {
            case Token::Type::Integer: {
                node.kind = Expr::Kind::Scalar;
                mpz_class num = t.value;
                if (lex_.peek().type == Token::Type::Slash) {
                    lex_.take();
                    Token den = lex_.take();
                    if (den.type != Token::Type::Integer)
                        throw ParseError(den.pos, "expected a denominator");
                    if (den.value == 0) throw ParseError(den.pos, "zero denominator");
                    node.scalar = LaurentPoly::constant(Rational(num, den.value));
                } else {
                    node.scalar = LaurentPoly::constant(Rational(num));
                }
                return node;
            }
            case Token::Type::Q:
                node.kind = Expr::Kind::Scalar;
                node.scalar = LaurentPoly::q();
                return node;
            case Token::Type::QPower:
                node.kind = Expr::Kind::Scalar;
                node.scalar = LaurentPoly::q_power(t.q_exp);
                return node;
            case Token::Type::Gen:
                node.kind = Expr::Kind::Gen;
                node.gen = Generator{t.gen_row, t.gen_col};
                return node;
            case Token::Type::LParen: {
                Expr inner = parse_sum();
                Token close = lex_.take();
                if (close.type != Token::Type::RParen) throw ParseError(close.pos, "expected ')'");
                return inner;
            }
            default:
                throw ParseError(t.pos, "expected a value");
        }
    }

    Lexer lex_;
};

}  // namespace

Expr parse_expr(std::string_view text, int n) { return Parser(text, n).parse(); }

NCPoly eval_expr(const Expr& e, const QMode& mode) {
    switch (e.kind) {
        case Expr::Kind::Scalar: return NCPoly::scalar(e.scalar.eval(mode));
        case Expr::Kind::Gen: return NCPoly::generator(e.gen);
        case Expr::Kind::Add: return eval_expr(e.kids[0], mode) + eval_expr(e.kids[1], mode);
        case Expr::Kind::Sub: return eval_expr(e.kids[0], mode) - eval_expr(e.kids[1], mode);
        case Expr::Kind::Mul: return eval_expr(e.kids[0], mode) * eval_expr(e.kids[1], mode);
        case Expr::Kind::Neg: return -eval_expr(e.kids[0], mode);
        case Expr::Kind::Pow: {
            NCPoly base = eval_expr(e.kids[0], mode);
            NCPoly acc = NCPoly::one();
            for (unsigned k = 0; k < e.exponent; ++k) acc = acc * base;
            return acc;
        }
    }
    throw std::logic_error("eval_expr: bad node");
}

}  // namespace qmx
