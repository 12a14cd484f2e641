#include "bosonorder/expr.hpp"

#include "bosonorder/errors.hpp"

#include <cctype>
#include <limits>

namespace bosonorder::expr {

std::string to_string(TokenKind kind) {
    switch (kind) {
        case TokenKind::annihilate: return "'a'";
        case TokenKind::create: return "'ad'";
        case TokenKind::integer: return "integer";
        case TokenKind::rational: return "rational";
        case TokenKind::caret: return "'^'";
        case TokenKind::plus: return "'+'";
        case TokenKind::minus: return "'-'";
        case TokenKind::star: return "'*'";
        case TokenKind::lparen: return "'('";
        case TokenKind::rparen: return "')'";
        case TokenKind::end: return "end of input";
    }
    return "?";
}

namespace {

constexpr std::string_view kDagger = "\xE2\x80\xA0";  // U+2020

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (is_digit(c)) {
            while (i < src.size() && is_digit(src[i])) ++i;
            TokenKind kind = TokenKind::integer;
            if (i + 1 < src.size() && (src[i] == '/' || src[i] == '.') && is_digit(src[i + 1])) {
                ++i;
                while (i < src.size() && is_digit(src[i])) ++i;
                kind = TokenKind::rational;
            }
            out.push_back({kind, std::string(src.substr(start, i - start)), start});
            continue;
        }
        if (is_alpha(c)) {
            while (i < src.size() && is_alpha(src[i])) ++i;
            const std::string_view word = src.substr(start, i - start);
            if (word == "a") {
                if (src.substr(i).starts_with("^dag")) {
                    i += 4;
                    out.push_back({TokenKind::create, std::string(src.substr(start, i - start)), start});
                } else if (src.substr(i).starts_with(kDagger)) {
                    i += kDagger.size();
                    out.push_back({TokenKind::create, std::string(src.substr(start, i - start)), start});
                } else {
                    out.push_back({TokenKind::annihilate, "a", start});
                }
                continue;
            }
            if (word == "ad") {
                out.push_back({TokenKind::create, "ad", start});
                continue;
            }
            throw ParseError("unknown identifier '" + std::string(word) + "'", start);
        }
        TokenKind kind;
        switch (c) {
            case '^': kind = TokenKind::caret; break;
            case '+': kind = TokenKind::plus; break;
            case '-': kind = TokenKind::minus; break;
            case '*': kind = TokenKind::star; break;
            case '(': kind = TokenKind::lparen; break;
            case ')': kind = TokenKind::rparen; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({kind, std::string(1, c), start});
        ++i;
    }
    out.push_back({TokenKind::end, "", src.size()});
    return out;
}

Ast Ast::make_scalar(ExactRat value) {
    Ast a;
    a.kind = Kind::scalar;
    a.scalar = std::move(value);
    return a;
}

Ast Ast::make_atom(Generator g) {
    Ast a;
    a.kind = Kind::atom;
    a.atom = g;
    return a;
}

Ast Ast::make_power(Ast base, unsigned exponent) {
    Ast a;
    a.kind = Kind::power;
    a.exponent = exponent;
    a.children.push_back(std::move(base));
    return a;
}

Ast Ast::make_product(std::vector<Ast> factors) {
    if (factors.size() == 1) return std::move(factors.front());
    Ast a;
    a.kind = Kind::product;
    a.children = std::move(factors);
    return a;
}

Ast Ast::make_sum(std::vector<Ast> terms) {
    if (terms.size() == 1) return std::move(terms.front());
    Ast a;
    a.kind = Kind::sum;
    a.children = std::move(terms);
    return a;
}

namespace {

class Parser {
public:
    Parser(const std::vector<Token>& tokens, std::size_t source_size)
        : tokens_(tokens), source_size_(source_size) {
        if (tokens_.empty() || tokens_.back().kind != TokenKind::end)
            throw ParseError("token stream must end with END", 0);
    }

    Ast parse_all() {
        Ast result = parse_sum();
        if (peek().kind != TokenKind::end) fail("unexpected " + to_string(peek().kind) + ", expected '+', '-' or end of input");
        return result;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const std::string& message) const {
        // Errors at end of input point at the last source byte.
        std::size_t at = peek().position;
        if (source_size_ > 0 && at >= source_size_) at = source_size_ - 1;
        throw ParseError(message, at);
    }

    static bool starts_factor(TokenKind k) {
        return k == TokenKind::integer || k == TokenKind::rational || k == TokenKind::annihilate ||
               k == TokenKind::create || k == TokenKind::lparen;
    }

    static Ast negate(Ast term) { return Ast::make_product({Ast::make_scalar(-1), std::move(term)}); }

    Ast parse_sum() {
        std::vector<Ast> terms;
        bool negative = false;
        if (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus)
            negative = advance().kind == TokenKind::minus;
        Ast first = parse_product();
        terms.push_back(negative ? negate(std::move(first)) : std::move(first));
        while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
            const bool minus = advance().kind == TokenKind::minus;
            Ast term = parse_product();
            terms.push_back(minus ? negate(std::move(term)) : std::move(term));
        }
        return Ast::make_sum(std::move(terms));
    }

    Ast parse_product() {
        std::vector<Ast> factors;
        factors.push_back(parse_factor());
        for (;;) {
            if (peek().kind == TokenKind::star) {
                advance();
                factors.push_back(parse_factor());
            } else if (starts_factor(peek().kind)) {
                factors.push_back(parse_factor());
            } else {
                break;
            }
        }
        return Ast::make_product(std::move(factors));
    }

    Ast parse_factor() {
        Ast base = parse_primary();
        if (peek().kind != TokenKind::caret) return base;
        advance();
        if (peek().kind == TokenKind::minus) fail("negative exponents are not supported");
        if (peek().kind != TokenKind::integer) fail("expected integer after '^'");
        const Token& tok = peek();
        unsigned long value = 0;
        try {
            value = std::stoul(tok.text);
        } catch (const std::exception&) {
            fail("exponent out of range");
        }
        if (value > std::numeric_limits<unsigned>::max()) fail("exponent out of range");
        advance();
        return Ast::make_power(std::move(base), static_cast<unsigned>(value));
    }

    Ast parse_primary() {
        const Token& tok = peek();
        switch (tok.kind) {
            case TokenKind::integer:
            case TokenKind::rational:
                advance();
                return Ast::make_scalar(parse_rat(tok.text));
            case TokenKind::annihilate:
                advance();
                return Ast::make_atom(Generator::annihilate);
            case TokenKind::create:
                advance();
                return Ast::make_atom(Generator::create);
            case TokenKind::lparen: {
                advance();
                Ast inner = parse_sum();
                if (peek().kind != TokenKind::rparen) fail("unexpected " + to_string(peek().kind) + ", expected ')'");
                advance();
                return inner;
            }
            default:
                fail("unexpected " + to_string(tok.kind) + ", expected one of: scalar, 'a', 'ad', '('");
        }
    }

    const std::vector<Token>& tokens_;
    std::size_t source_size_;
    std::size_t pos_ = 0;
};

}  // namespace

Ast parse(const std::vector<Token>& tokens) {
    const std::size_t size = tokens.empty() ? 0 : tokens.back().position;
    return Parser(tokens, size).parse_all();
}

Ast parse(std::string_view src) { return parse(tokenize(src)); }

namespace {

using Terms = std::vector<WeightedWord>;

Terms multiply(const Terms& lhs, const Terms& rhs, std::size_t cap) {
    if (lhs.size() * rhs.size() > kMaxLoweredTerms)
        throw ResourceError("expression expands to more than " + std::to_string(kMaxLoweredTerms) + " terms");
    Terms out;
    out.reserve(lhs.size() * rhs.size());
    for (const auto& x : lhs) {
        for (const auto& y : rhs) {
            if (x.word.size() + y.word.size() > cap)
                throw ResourceError("expanded word exceeds the cap of " + std::to_string(cap) + " letters");
            WeightedWord w{x.coefficient * y.coefficient, x.word};
            w.word.letters.insert(w.word.letters.end(), y.word.letters.begin(), y.word.letters.end());
            out.push_back(std::move(w));
        }
    }
    return out;
}

Terms unit() { return {WeightedWord{1, {}}}; }

}  // namespace

std::vector<WeightedWord> lower(const Ast& ast, std::size_t cap) {
    switch (ast.kind) {
        case Ast::Kind::scalar: return {WeightedWord{ast.scalar, {}}};
        case Ast::Kind::atom: {
            if (cap < 1) throw ResourceError("word cap is zero");
            return {WeightedWord{1, OperatorWord{{ast.atom}}}};
        }
        case Ast::Kind::product: {
            Terms acc = unit();
            for (const auto& f : ast.children) acc = multiply(acc, lower(f, cap), cap);
            return acc;
        }
        case Ast::Kind::power: {
            const Terms base = lower(ast.children.front(), cap);
            Terms acc = unit();
            for (unsigned e = 0; e < ast.exponent; ++e) acc = multiply(acc, base, cap);
            return acc;
        }
        case Ast::Kind::sum: {
            Terms acc;
            for (const auto& t : ast.children) {
                Terms part = lower(t, cap);
                if (acc.size() + part.size() > kMaxLoweredTerms)
                    throw ResourceError("expression expands to more than " + std::to_string(kMaxLoweredTerms) +
                                        " terms");
                acc.insert(acc.end(), part.begin(), part.end());
            }
            return acc;
        }
    }
    return {};
}

std::string format_terms(const std::vector<WeightedWord>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        const bool negative = t.coefficient < 0;
        if (i == 0)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += ExactRat(abs(t.coefficient)).get_str();
        for (Generator g : t.word.letters) out += ' ' + to_string(g);
    }
    return out;
}

}  // namespace bosonorder::expr
