#include "multisine/expr.hpp"

#include <cctype>
#include <map>
#include <set>

#include "multisine/bd_adamchik.hpp"
#include "multisine/constants.hpp"
#include "multisine/errors.hpp"
#include "multisine/identity.hpp"
#include "multisine/kurokawa.hpp"
#include "multisine/polylog.hpp"

namespace multisine {

namespace {

const std::set<std::string>& known_constants() {
    static const std::set<std::string> c = {"pi",      "e",        "log2",
                                            "catalan", "zeta3",    "glaisher",
                                            "zetaprime_neg1",      "euler_gamma"};
    return c;
}

const std::map<std::string, int>& known_functions() {
    static const std::map<std::string, int> f = {
        {"exp", 1},        {"log", 1},      {"sqrt", 1},          {"sin", 1},
        {"pow", 2},        {"zeta", 1},     {"eta", 1},           {"S", 2},
        {"S2", 1},         {"S3", 1},       {"C3", 1},            {"cl2", 1},
        {"li2", 1},        {"li3", 1},      {"ti2", 1},           {"chi2", 1},
        {"barnesGratio", 1},                {"D", 1},             {"Dratio", 1},
        {"E", 1},          {"gammaAlpha", 2},                     {"holcombeProduct", 0},
        {"shiftedAdamchik", 0},             {"ktCatalanOdd", 0},  {"ktCatalanEven", 0},
        {"ktZeta3", 0},    {"msLimit", 0}};
    return f;
}

struct Token {
    enum class Kind { number, ident, op, lparen, rparen, comma, end };
    Kind kind;
    std::string text;
    std::size_t offset;
};

class Lexer {
  public:
    explicit Lexer(std::string_view s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::size_t start = pos_;
        if (pos_ >= s_.size()) {
            tok_ = {Token::Kind::end, "", start};
            return;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '.') {
                ++pos_;
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    throw parse_error("digits expected after decimal point", pos_);
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
            tok_ = {Token::Kind::number, std::string(s_.substr(start, pos_ - start)), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            tok_ = {Token::Kind::ident, std::string(s_.substr(start, pos_ - start)), start};
            return;
        }
        ++pos_;
        switch (c) {
            case '+': case '-': case '*': case '/': case '^':
                tok_ = {Token::Kind::op, std::string(1, c), start};
                return;
            case '(': tok_ = {Token::Kind::lparen, "(", start}; return;
            case ')': tok_ = {Token::Kind::rparen, ")", start}; return;
            case ',': tok_ = {Token::Kind::comma, ",", start}; return;
            default:
                throw parse_error(std::string("unexpected character `") + c + "`", start);
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    Token tok_{Token::Kind::end, "", 0};
};

class Parser {
  public:
    explicit Parser(std::string_view s) : lex_(s) {}

    ExprPtr run() {
        ExprPtr e = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::end)
            throw parse_error("unexpected trailing input `" + t.text + "`", t.offset);
        return e;
    }

  private:
    bool at_op(const char* which) const {
        if (lex_.peek().kind != Token::Kind::op) return false;
        return std::string_view(which).find(lex_.peek().text[0]) != std::string_view::npos;
    }

    static ExprPtr make(Expr::Kind k, std::size_t off, std::string text = {}, char op = 0,
                        std::vector<ExprPtr> kids = {}) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->offset = off;
        e->text = std::move(text);
        e->op = op;
        e->children = std::move(kids);
        return e;
    }

    ExprPtr expr() {
        ExprPtr left = term();
        while (at_op("+-")) {
            Token t = lex_.take();
            ExprPtr right = term();
            left = make(Expr::Kind::binary, t.offset, {}, t.text[0], {left, right});
        }
        return left;
    }

    ExprPtr term() {
        ExprPtr left = factor();
        while (at_op("*/")) {
            Token t = lex_.take();
            ExprPtr right = factor();
            left = make(Expr::Kind::binary, t.offset, {}, t.text[0], {left, right});
        }
        return left;
    }

    // factor := ('-')? power  -- unary minus binds looser than ^
    ExprPtr factor() {
        if (at_op("-")) {
            Token t = lex_.take();
            return make(Expr::Kind::negate, t.offset, {}, 0, {power()});
        }
        return power();
    }

    // power := atom ('^' factor)?  -- right-associative via factor
    ExprPtr power() {
        ExprPtr base = atom();
        if (at_op("^")) {
            Token t = lex_.take();
            ExprPtr expo = factor();
            return make(Expr::Kind::binary, t.offset, {}, '^', {base, expo});
        }
        return base;
    }

    ExprPtr atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::number:
                return make(Expr::Kind::number, t.offset, t.text);
            case Token::Kind::lparen: {
                ExprPtr e = expr();
                expect_rparen();
                return e;
            }
            case Token::Kind::ident: {
                if (lex_.peek().kind == Token::Kind::lparen) {
                    auto it = known_functions().find(t.text);
                    if (it == known_functions().end())
                        throw parse_error("unknown function `" + t.text + "`", t.offset);
                    lex_.take();  // (
                    std::vector<ExprPtr> args;
                    if (lex_.peek().kind != Token::Kind::rparen) {
                        args.push_back(expr());
                        while (lex_.peek().kind == Token::Kind::comma) {
                            lex_.take();
                            args.push_back(expr());
                        }
                    }
                    expect_rparen();
                    if (static_cast<int>(args.size()) != it->second)
                        throw parse_error("`" + t.text + "` expects " +
                                              std::to_string(it->second) + " argument(s), got " +
                                              std::to_string(args.size()),
                                          t.offset);
                    return make(Expr::Kind::call, t.offset, t.text, 0, std::move(args));
                }
                if (!known_constants().count(t.text))
                    throw parse_error("unknown constant `" + t.text + "`", t.offset);
                return make(Expr::Kind::constant, t.offset, t.text);
            }
            case Token::Kind::end:
                throw parse_error("unexpected end of input", t.offset);
            default:
                throw parse_error("unexpected token `" + t.text + "`", t.offset);
        }
    }

    void expect_rparen() {
        Token t = lex_.take();
        if (t.kind != Token::Kind::rparen)
            throw parse_error("expected `)`, got `" + (t.text.empty() ? "end" : t.text) + "`",
                              t.offset);
    }

    Lexer lex_;
};

int precedence(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::binary:
            if (e.op == '^') return 4;
            if (e.op == '*' || e.op == '/') return 2;
            return 1;  // + -
        case Expr::Kind::negate:
            return 3;
        default:
            return 5;
    }
}

void print(const Expr& e, std::string& out) {
    auto child = [&](const Expr& c, bool need_parens) {
        if (need_parens) out += '(';
        print(c, out);
        if (need_parens) out += ')';
    };
    switch (e.kind) {
        case Expr::Kind::number:
        case Expr::Kind::constant:
            out += e.text;
            break;
        case Expr::Kind::negate:
            out += '-';
            child(*e.children[0], precedence(*e.children[0]) < 3);
            break;
        case Expr::Kind::binary: {
            const Expr& l = *e.children[0];
            const Expr& r = *e.children[1];
            const int p = precedence(e);
            if (e.op == '^') {
                // left operand of ^ must be an atom; right reassociates
                child(l, precedence(l) < 5);
                out += '^';
                child(r, precedence(r) < 3);
            } else {
                child(l, precedence(l) < p);
                out += ' ';
                out += e.op;
                out += ' ';
                // keep right-leaning trees right-leaning when reparsed
                child(r, precedence(r) <= p);
            }
            break;
        }
        case Expr::Kind::call: {
            out += e.text;
            out += '(';
            for (size_t i = 0; i < e.children.size(); ++i) {
                if (i) out += ", ";
                print(*e.children[i], out);
            }
            out += ')';
            break;
        }
    }
}

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

std::string to_string(const Expr& e) {
    std::string out;
    print(e, out);
    return out;
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.text != b.text || a.op != b.op ||
        a.children.size() != b.children.size())
        return false;
    for (size_t i = 0; i < a.children.size(); ++i)
        if (!structurally_equal(*a.children[i], *b.children[i])) return false;
    return true;
}

namespace {

HPReal eval_call(const Expr& e, Precision prec) {
    const std::string& f = e.text;
    auto arg = [&](size_t i) { return evaluate(*e.children[i], prec); };

    if (f == "exp") return exp(arg(0));
    if (f == "log") return log(arg(0));
    if (f == "sqrt") return sqrt(arg(0));
    if (f == "sin") return sin(arg(0));
    if (f == "pow") return pow(arg(0), arg(1));
    if (f == "zeta") return zeta(arg(0), prec);
    if (f == "eta") return eta(arg(0), prec);
    if (f == "S") {
        HPReal r = arg(0);
        if (!r.is_integer()) throw domain_error("S: the order must be an integer");
        return s_r(static_cast<int>(r.to_long()), arg(1), prec);
    }
    if (f == "S2") return s_r(2, arg(0), prec);
    if (f == "S3") return s_r(3, arg(0), prec);
    if (f == "C3") return c3(arg(0), prec);
    if (f == "cl2") return cl2(arg(0), prec);
    if (f == "li2") return li2(arg(0), prec);
    if (f == "li3") return li3(arg(0), prec);
    if (f == "ti2") return ti2(arg(0), prec);
    if (f == "chi2") return chi2(arg(0), prec);
    if (f == "barnesGratio") return barnes_g_ratio(arg(0), prec);
    if (f == "D") return d_func(arg(0), prec);
    if (f == "Dratio") return d_ratio(arg(0), prec);
    if (f == "E") return e_func(arg(0), prec);
    if (f == "gammaAlpha") return gamma_alpha(arg(0), arg(1), prec);
    if (f == "holcombeProduct") return holcombe_product(prec);
    if (f == "shiftedAdamchik") return adamchik_shifted_product(prec);
    if (f == "ktCatalanOdd") return kachi_tzermias_catalan(Parity::odd, prec);
    if (f == "ktCatalanEven") return kachi_tzermias_catalan(Parity::even, prec);
    if (f == "ktZeta3") return kachi_tzermias_zeta3(prec).value;
    if (f == "msLimit") return ms_limit(prec).value;
    throw domain_error("evaluate: unknown function `" + f + "`");
}

}  // namespace

HPReal evaluate(const Expr& e, Precision prec) {
    switch (e.kind) {
        case Expr::Kind::number:
            return HPReal(e.text, prec);
        case Expr::Kind::constant: {
            const std::string name = e.text == "zetaprime_neg1" ? "zeta_prime_neg1" : e.text;
            return constant(name, prec);
        }
        case Expr::Kind::negate:
            return -evaluate(*e.children[0], prec);
        case Expr::Kind::binary: {
            HPReal l = evaluate(*e.children[0], prec);
            HPReal r = evaluate(*e.children[1], prec);
            try {
                switch (e.op) {
                    case '+': return l + r;
                    case '-': return l - r;
                    case '*': return l * r;
                    case '/': return l / r;
                    case '^': return pow(l, r);
                }
            } catch (const eval_error&) {
                throw;
            } catch (const error& err) {
                throw eval_error(err.what(), to_string(e), e.offset);
            }
            throw domain_error("evaluate: unknown operator");
        }
        case Expr::Kind::call:
            try {
                return eval_call(e, prec);
            } catch (const eval_error&) {
                throw;
            } catch (const error& err) {
                throw eval_error(err.what(), to_string(e), e.offset);
            }
    }
    throw domain_error("evaluate: malformed AST");
}

}  // namespace multisine
