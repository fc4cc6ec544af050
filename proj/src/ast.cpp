#include "aut2/ast.hpp"

namespace aut2 {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Semi, End };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    Token tok_{};

    void advance() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                       text_[pos_] == '\n' || text_[pos_] == '\r'))
            ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            tok_ = {Tok::End, start, ""};
            return;
        }
        const char c = text_[pos_];
        if (c >= '0' && c <= '9') {
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
            tok_ = {Tok::Number, start, std::string(text_.substr(start, pos_ - start))};
            return;
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            while (pos_ < text_.size() &&
                   ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
                    (text_[pos_] >= 'A' && text_[pos_] <= 'Z') ||
                    (text_[pos_] >= '0' && text_[pos_] <= '9') || text_[pos_] == '_'))
                ++pos_;
            tok_ = {Tok::Ident, start, std::string(text_.substr(start, pos_ - start))};
            return;
        }
        ++pos_;
        switch (c) {
            case '+': tok_ = {Tok::Plus, start, "+"}; return;
            case '-': tok_ = {Tok::Minus, start, "-"}; return;
            case '*': tok_ = {Tok::Star, start, "*"}; return;
            case '/': tok_ = {Tok::Slash, start, "/"}; return;
            case '^': tok_ = {Tok::Caret, start, "^"}; return;
            case '(': tok_ = {Tok::LParen, start, "("}; return;
            case ')': tok_ = {Tok::RParen, start, ")"}; return;
            case ';': tok_ = {Tok::Semi, start, ";"}; return;
            default:
                throw ParseError(start, std::string("unexpected character '") + c + "'");
        }
    }
};

AstPtr make_node(AstNode n) { return std::make_shared<const AstNode>(std::move(n)); }

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    AstPtr expression() {
        AstPtr left = term();
        for (;;) {
            const Tok k = lex_.peek().kind;
            if (k != Tok::Plus && k != Tok::Minus) return left;
            const Token op = lex_.take();
            AstPtr right = term();
            AstNode n;
            n.kind = (op.kind == Tok::Plus) ? AstKind::Add : AstKind::Sub;
            n.offset = op.offset;
            n.a = std::move(left);
            n.b = std::move(right);
            left = make_node(std::move(n));
        }
    }

    void expect_end() const {
        if (lex_.peek().kind != Tok::End)
            throw ParseError(lex_.peek().offset, "unexpected trailing input",
                             {"end of input"});
    }

    bool at_semicolon() const { return lex_.peek().kind == Tok::Semi; }
    void take_semicolon() { lex_.take(); }
    std::size_t offset() const { return lex_.peek().offset; }

private:
    Lexer lex_;

    AstPtr term() {
        AstPtr left = unary();
        while (lex_.peek().kind == Tok::Star) {
            const Token op = lex_.take();
            AstPtr right = unary();
            AstNode n;
            n.kind = AstKind::Mul;
            n.offset = op.offset;
            n.a = std::move(left);
            n.b = std::move(right);
            left = make_node(std::move(n));
        }
        return left;
    }

    AstPtr unary() {
        if (lex_.peek().kind == Tok::Minus) {
            const Token op = lex_.take();
            AstNode n;
            n.kind = AstKind::Neg;
            n.offset = op.offset;
            n.a = unary();
            return make_node(std::move(n));
        }
        return power();
    }

    AstPtr power() {
        AstPtr base = atom();
        if (lex_.peek().kind != Tok::Caret) return base;
        const Token op = lex_.take();
        const Token e = lex_.take();
        if (e.kind != Tok::Number)
            throw ParseError(e.offset, "exponent must be a nonnegative integer literal",
                             {"integer"});
        if (e.text.size() > 18) throw ParseError(e.offset, "exponent literal too large");
        AstNode n;
        n.kind = AstKind::Pow;
        n.offset = op.offset;
        n.a = std::move(base);
        n.exponent = std::stoll(e.text);
        return make_node(std::move(n));
    }

    AstPtr atom() {
        const Token t = lex_.take();
        switch (t.kind) {
            case Tok::Number: {
                AstNode n;
                n.kind = AstKind::Number;
                n.offset = t.offset;
                n.num = t.text;
                if (lex_.peek().kind == Tok::Slash) {
                    lex_.take();
                    const Token d = lex_.take();
                    if (d.kind != Tok::Number)
                        throw ParseError(d.offset, "denominator must be an integer literal",
                                         {"integer"});
                    n.den = d.text;
                }
                return make_node(std::move(n));
            }
            case Tok::Ident: {
                AstNode n;
                n.offset = t.offset;
                if (t.text == "x1")
                    n.kind = AstKind::Var1;
                else if (t.text == "x2")
                    n.kind = AstKind::Var2;
                else if (t.text == "t")
                    n.kind = AstKind::VarT;
                else
                    throw ParseError(t.offset, "unknown symbol '" + t.text + "'",
                                     {"x1", "x2", "t"});
                return make_node(std::move(n));
            }
            case Tok::LParen: {
                AstPtr inner = expression();
                const Token close = lex_.take();
                if (close.kind != Tok::RParen)
                    throw ParseError(close.offset, "unbalanced parenthesis", {")"});
                return inner;
            }
            default:
                throw ParseError(t.offset, "expected an operand",
                                 {"number", "x1", "x2", "t", "("});
        }
    }
};

}  // namespace

AstPtr parse_expression_text(std::string_view text) {
    Parser p(text);
    AstPtr e = p.expression();
    p.expect_end();
    return e;
}

std::pair<AstPtr, AstPtr> parse_pair_text(std::string_view text) {
    Parser p(text);
    AstPtr first = p.expression();
    if (!p.at_semicolon())
        throw ParseError(p.offset(), "expected ';' between the two components", {";"});
    p.take_semicolon();
    AstPtr second = p.expression();
    p.expect_end();
    return {std::move(first), std::move(second)};
}

}  // namespace aut2
