#include "bosonorder/boson.hpp"
#include "bosonorder/errors.hpp"
#include "bosonorder/expr.hpp"

#include <doctest.h>

#include <random>

using namespace bosonorder;
using namespace bosonorder::expr;

namespace {

std::vector<TokenKind> kinds(std::string_view src) {
    std::vector<TokenKind> out;
    for (const auto& t : tokenize(src)) out.push_back(t.kind);
    return out;
}

std::size_t error_position(std::string_view src) {
    try {
        lower(parse(src));
    } catch (const ParseError& e) {
        return e.position();
    }
    FAIL("expected a parse error for " << src);
    return 0;
}

// Random surface syntax over the full grammar.
std::string random_expr(std::mt19937& rng, int depth) {
    auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    auto factor = [&]() -> std::string {
        std::string base;
        switch (depth > 0 ? pick(6) : pick(4)) {
            case 0: base = "a"; break;
            case 1: base = pick(2) ? "ad" : "a^dag"; break;
            case 2: base = std::to_string(pick(5) + 1) + (pick(3) == 0 ? "/" + std::to_string(pick(4) + 2) : ""); break;
            case 3: base = "a\xE2\x80\xA0"; break;
            default: base = "(" + random_expr(rng, depth - 1) + ")"; break;
        }
        if (pick(3) == 0) base += "^" + std::to_string(pick(3));
        return base;
    };
    std::string out;
    const int terms = pick(3) + 1;
    for (int t = 0; t < terms; ++t) {
        if (t > 0) out += pick(2) ? " + " : " - ";
        const int factors = pick(3) + 1;
        for (int f = 0; f < factors; ++f) {
            if (f > 0) out += pick(4) == 0 ? " * " : " ";
            out += factor();
        }
    }
    return out;
}

}  // namespace

TEST_CASE("tokenizer") {
    using K = TokenKind;
    CHECK(kinds("ad^2 a") == std::vector<K>{K::create, K::caret, K::integer, K::annihilate, K::end});
    CHECK(kinds("(ad a)^3") == std::vector<K>{K::lparen, K::create, K::annihilate, K::rparen, K::caret, K::integer, K::end});
    CHECK(kinds("a^dag a\xE2\x80\xA0 ad") == std::vector<K>{K::create, K::create, K::create, K::end});
    CHECK(kinds("3/4 0.5 * - +") == std::vector<K>{K::rational, K::rational, K::star, K::minus, K::plus, K::end});
    CHECK(kinds("") == std::vector<K>{K::end});

    const auto toks = tokenize("  ad  a^2 ");
    for (std::size_t i = 1; i < toks.size(); ++i) CHECK(toks[i].position > toks[i - 1].position);
    CHECK(toks[0].position == 2);
    CHECK(toks[0].text == "ad");

    try {
        tokenize("a $ a");
        FAIL("expected a lex error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(tokenize("adx"), ParseError);
    CHECK_THROWS_AS(tokenize("b"), ParseError);
}

TEST_CASE("parser structure") {
    const Ast p = parse("ad^2 a");
    REQUIRE(p.kind == Ast::Kind::product);
    REQUIRE(p.children.size() == 2);
    CHECK(p.children[0] == Ast::make_power(Ast::make_atom(Generator::create), 2));
    CHECK(p.children[1] == Ast::make_atom(Generator::annihilate));

    const Ast s = parse("(ad a)^2 + 3 a");
    REQUIRE(s.kind == Ast::Kind::sum);
    REQUIRE(s.children.size() == 2);
    CHECK(s.children[0] ==
          Ast::make_power(Ast::make_product({Ast::make_atom(Generator::create), Ast::make_atom(Generator::annihilate)}), 2));
    CHECK(s.children[1] == Ast::make_product({Ast::make_scalar(3), Ast::make_atom(Generator::annihilate)}));

    CHECK(parse("a * ad") == parse("a ad"));
    CHECK(parse("((a))") == parse("a"));
}

TEST_CASE("parse errors carry positions inside the text") {
    CHECK(error_position("ad ^") == 3);
    CHECK(error_position("ad ^ -1") == 5);
    CHECK(error_position("(a ad") == 4);
    CHECK(error_position("a )") == 2);
    CHECK(error_position("+") == 0);
    CHECK(error_position("a ^ a") == 4);
    CHECK_THROWS_AS(parse(""), ParseError);
    try {
        parse("ad ^");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("expected integer after '^'") != std::string::npos);
    }

    std::mt19937 rng(3);
    const std::string alphabet = "a d^()+-*123/ .";
    for (int i = 0; i < 300; ++i) {
        std::string src;
        const int len = std::uniform_int_distribution<int>(1, 12)(rng);
        for (int j = 0; j < len; ++j) src += alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
        try {
            lower(parse(src));
        } catch (const ParseError& e) {
            CAPTURE(src);
            CHECK(e.position() < src.size());
        } catch (const ResourceError&) {
        }
    }
}

TEST_CASE("lowering") {
    auto word = [](const std::string& letters) {
        OperatorWord w;
        for (char c : letters) w.letters.push_back(c == 'd' ? Generator::create : Generator::annihilate);
        return w;
    };
    CHECK(lower(parse("(ad a)^2")) == std::vector<WeightedWord>{{1, word("dada")}});
    CHECK(lower(parse("ad^3 a^2")) == std::vector<WeightedWord>{{1, word("dddaa")}});
    CHECK(lower(parse("2 ad a - ad a")) == std::vector<WeightedWord>{{2, word("da")}, {-1, word("da")}});
    CHECK(lower(parse("a^0")) == std::vector<WeightedWord>{{1, word("")}});
    CHECK(lower(parse("1/2 a 4")) == std::vector<WeightedWord>{{2, word("a")}});
    CHECK(lower(parse("-(a + ad)")) == std::vector<WeightedWord>{{-1, word("a")}, {-1, word("d")}});
    CHECK(normal_order_terms(lower(parse("2 ad a - ad a"))) == NormalPolynomial::monomial(1, 1));

    CHECK_THROWS_AS(lower(parse("a^30")), ResourceError);
    CHECK_NOTHROW(lower(parse("a^30"), 30));
    CHECK_THROWS_AS(lower(parse("(a + ad)^20"), 64), ResourceError);
}

TEST_CASE("round trip over random expressions") {
    std::mt19937 rng(1234);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        const std::string src = random_expr(rng, 2);
        CAPTURE(src);
        std::vector<WeightedWord> terms;
        try {
            terms = lower(parse(src));
        } catch (const ResourceError&) {
            continue;
        }
        const std::string printed = format_terms(terms);
        CAPTURE(printed);
        CHECK(lower(parse(printed)) == terms);
        // the normal form is unchanged as well
        CHECK(normal_order_terms(lower(parse(printed)), kNoWordCap) == normal_order_terms(terms, kNoWordCap));
        ++checked;
    }
    CHECK(checked >= 190);
}

TEST_CASE("parsed powers match the Stirling fast path") {
    for (unsigned r = 1; r <= 3; ++r)
        for (unsigned s = 1; s <= 3; ++s)
            for (unsigned n = 0; n <= 3; ++n) {
                const std::string src = "((ad)^" + std::to_string(r) + " a^" + std::to_string(s) + ")^" + std::to_string(n);
                CAPTURE(src);
                const auto terms = lower(parse(src));
                REQUIRE(terms.size() == 1);
                CHECK(normal_order_word(terms.front().word) == normal_order_power(OrderSignature(r, s), n));
            }
}

TEST_CASE("token kind names") {
    CHECK(to_string(TokenKind::caret) == "'^'");
    CHECK_FALSE(to_string(TokenKind::end).empty());
}
