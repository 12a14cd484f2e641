#include "bosonorder/boson.hpp"
#include "bosonorder/errors.hpp"
#include "bosonorder/stirling.hpp"

#include <doctest.h>

#include <random>

using namespace bosonorder;

namespace {

// Action on polynomials in x with ad = x and a = d/dx. Index = power of x.
using Poly = std::vector<ExactRat>;

Poly apply_word(const OperatorWord& w, Poly p) {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        Poly next;
        if (*it == Generator::create) {
            next.assign(p.size() + 1, 0);
            for (std::size_t i = 0; i < p.size(); ++i) next[i + 1] = p[i];
        } else {
            next.assign(p.empty() ? 0 : p.size() - 1, 0);
            for (std::size_t i = 1; i < p.size(); ++i) next[i - 1] = p[i] * static_cast<unsigned long>(i);
        }
        p = std::move(next);
    }
    return p;
}

Poly apply_normal(const NormalPolynomial& np, const Poly& p) {
    Poly out;
    for (const auto& [m, c] : np.terms()) {
        OperatorWord w;
        w.letters.assign(m.creations, Generator::create);
        w.letters.insert(w.letters.end(), m.annihilations, Generator::annihilate);
        Poly t = apply_word(w, p);
        if (out.size() < t.size()) out.resize(t.size(), 0);
        for (std::size_t i = 0; i < t.size(); ++i) out[i] += c * t[i];
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

Poly trimmed(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Poly x_power(unsigned m) {
    Poly p(m + 1, 0);
    p[m] = 1;
    return p;
}

OperatorWord word(const std::string& letters) {
    OperatorWord w;
    for (char c : letters) w.letters.push_back(c == 'd' ? Generator::create : Generator::annihilate);
    return w;
}

}  // namespace

TEST_CASE("basic reorderings") {
    CHECK(normal_order_word(word("ad")).to_string() == "1 + ad a");
    CHECK(normal_order_word(word("da")).to_string() == "ad a");
    CHECK(normal_order_word(word("")).to_string() == "1");
    CHECK(normal_order_word(word("aadd")).to_string() == "2 + 4 ad a + ad^2 a^2");
    // (a ad)^2 = 1 + 3 ad a + ad^2 a^2
    CHECK(normal_order_word(word("adad")).to_string() == "1 + 3 ad a + ad^2 a^2");
    CHECK(NormalPolynomial().to_string() == "0");
}

TEST_CASE("rewrite oracle agrees with the polynomial representation on random words") {
    std::mt19937 rng(20261016);
    std::uniform_int_distribution<int> len(0, 10), bit(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        OperatorWord w;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) w.letters.push_back(bit(rng) ? Generator::create : Generator::annihilate);
        const NormalPolynomial np = normal_order_word(w);
        CAPTURE(w.to_string());
        for (unsigned m = 0; m <= w.size(); ++m) CHECK(apply_normal(np, x_power(m)) == trimmed(apply_word(w, x_power(m))));
    }
}

TEST_CASE("Stirling layout matches the rewrite oracle") {
    for (unsigned r = 1; r <= 3; ++r)
        for (unsigned s = 1; s <= 3; ++s)
            for (unsigned n = 0; n <= 4; ++n) {
                const OrderSignature sig(r, s);
                CAPTURE(sig.to_string());
                CAPTURE(n);
                CHECK(normal_order_power(sig, n) == normal_order_word(word_from_power(sig, n)));
                CHECK(antinormal_power(sig, n) == normal_order_word(antinormal_word(sig, n)));
            }
}

TEST_CASE("coefficients of the normal form are the Stirling numbers") {
    const OrderSignature sig(3, 2);
    const NormalPolynomial p = normal_order_power(sig, 3);
    for (unsigned k = 2; k <= 6; ++k) CHECK(p.coefficient(3 + k, k) == ExactRat(stirling(sig, 3, k)));
    CHECK(p.terms().size() == 5);
}

TEST_CASE("products and adjoints") {
    const NormalPolynomial a = NormalPolynomial::monomial(0, 1);
    const NormalPolynomial ad = NormalPolynomial::monomial(1, 0);
    CHECK(a * ad - ad * a == NormalPolynomial::identity());
    CHECK(a.adjoint() == ad);

    // (XY)^dag = Y^dag X^dag for arbitrary normal polynomials
    NormalPolynomial x = NormalPolynomial::monomial(2, 1, 3) + NormalPolynomial::monomial(0, 2, ExactRat(-1, 2));
    NormalPolynomial y = NormalPolynomial::monomial(1, 3) + NormalPolynomial::identity();
    CHECK((x * y).adjoint() == y.adjoint() * x.adjoint());

    // word-level adjoint is reflected in the normal form
    const OperatorWord w = word("aadaddd");
    CHECK(normal_order_word(w).adjoint() == normal_order_word(w.adjoint()));

    NormalPolynomial z = x;
    z -= x;
    CHECK(z.is_zero());
    CHECK((x * ExactRat(0)).is_zero());
}

TEST_CASE("word cap") {
    CHECK_THROWS_AS(normal_order_word(word(std::string(25, 'a'))), ResourceError);
    CHECK_NOTHROW(normal_order_word(word(std::string(25, 'a')), 25));
    CHECK_THROWS_AS(word_from_power(OrderSignature(3, 3), 5), ResourceError);
    CHECK_THROWS_AS(antinormal_word(OrderSignature(3, 3), 5, 10), ResourceError);
    CHECK_NOTHROW(word_from_power(OrderSignature(3, 3), 5, kNoWordCap));
}

TEST_CASE("weighted sums") {
    const std::vector<WeightedWord> terms = {{ExactRat(2), word("ad")}, {ExactRat(-2), word("da")}};
    CHECK(normal_order_terms(terms) == NormalPolynomial::monomial(0, 0, 2));
    const NormalPolynomial p = NormalPolynomial::monomial(2, 1, ExactRat(3, 4)) + NormalPolynomial::identity();
    CHECK(normal_order_terms(p.to_words()) == p);
}

TEST_CASE("coherent-state expectations") {
    for (unsigned r = 1; r <= 3; ++r)
        for (unsigned s = 1; s <= 3; ++s)
            for (unsigned n = 1; n <= 5; ++n) {
                const OrderSignature sig(r, s);
                ExactInt b = 0;
                for (long k = 0; k <= static_cast<long>(n * 3); ++k) b += stirling(sig, n, k);
                CHECK(coherent_expectation(normal_order_power(sig, n), ExactRat(1)) == ExactRat(b));
            }

    std::mt19937 rng(7);
    std::normal_distribution<double> g;
    for (int i = 0; i < 50; ++i) {
        const std::complex<double> z(g(rng), g(rng));
        const auto one = coherent_expectation(NormalPolynomial::identity(), CoherentPoint{z});
        CHECK(one.real() == 1.0);
        CHECK(one.imag() == 0.0);
        const auto number = coherent_expectation(NormalPolynomial::monomial(1, 1), CoherentPoint{z});
        CHECK(number.real() == doctest::Approx(std::norm(z)));
        CHECK(number.imag() == doctest::Approx(0.0));
    }
    const auto v = coherent_expectation(NormalPolynomial::monomial(0, 2), CoherentPoint{{0.0, 1.0}});
    CHECK(v.real() == doctest::Approx(-1.0));
    CHECK(coherent_expectation(NormalPolynomial::monomial(2, 1), ExactRat(1, 2)) == ExactRat(1, 8));
}

TEST_CASE("Taylor re-expansion") {
    const OrderSignature sig(1, 1);
    // f(X) = X^2 around 0 with X = ad a
    TaylorSpec square{0, {0, 0, 1}};
    CHECK(taylor_normal_order(square, sig) == normal_order_power(sig, 2));
    CHECK(square.cutoff() == 2);

    // (X - 1)^2 expanded around center 1 equals X^2 - 2X + 1
    TaylorSpec shifted{1, {0, 0, 1}};
    const NormalPolynomial expected =
        normal_order_power(sig, 2) - normal_order_power(sig, 1) * ExactRat(2) + NormalPolynomial::identity();
    CHECK(taylor_normal_order(shifted, sig) == expected);
    CHECK(taylor_normal_order(TaylorSpec{}, sig).is_zero());
}

TEST_CASE("operator words") {
    const OperatorWord w = word("dda");
    CHECK(w.to_string() == "ad ad a");
    CHECK(w.adjoint().to_string() == "ad a a");
    CHECK(word_from_power(OrderSignature(2, 1), 2) == word("ddadda"));
    CHECK(antinormal_word(OrderSignature(2, 1), 2) == word("addadd"));
    CHECK(to_string(Generator::create) == "ad");
}
