#include "bosonorder/errors.hpp"
#include "bosonorder/stirling.hpp"
#include "golden.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace bosonorder;

TEST_CASE("order signature") {
    CHECK_THROWS_AS(OrderSignature(0, 1), DomainError);
    CHECK_THROWS_AS(OrderSignature(2, 0), DomainError);
    const OrderSignature sig(1, 3);
    CHECK_FALSE(sig.is_canonical());
    CHECK(sig.canonical() == OrderSignature(3, 1));
    CHECK(sig.min_exponent() == 1);
    CHECK(OrderSignature(2, 2).is_diagonal());
}

TEST_CASE("published triangles, all algorithms") {
    for (const auto& g : golden::table()) {
        const OrderSignature sig(g.r, g.s);
        for (auto algo : {StirlingAlgorithm::finite_sum, StirlingAlgorithm::operator_form}) {
            const StirlingTriangle tri = stirling_triangle(sig, 6, algo);
            for (unsigned n = 1; n <= 6; ++n) {
                CAPTURE(g.r);
                CAPTURE(g.s);
                CAPTURE(n);
                const auto& row = tri.row(n);
                REQUIRE(row.size() == g.rows[n - 1].size());
                for (std::size_t i = 0; i < row.size(); ++i) CHECK(row[i] == g.rows[n - 1][i]);
                CHECK(tri.row_sum(n) == g.sums[n - 1]);
            }
        }
    }
    CHECK(stirling(OrderSignature(3, 2), 6, 8) == 682200);  // seventh entry of the row, k starts at 2
}

TEST_CASE("triangles agree with the monomial-action oracle") {
    for (unsigned r = 1; r <= 4; ++r)
        for (unsigned s = 1; s <= r; ++s)
            for (unsigned n = 1; n <= 6; ++n) {
                const auto row = oracle::stirling_row(r, s, n);
                for (unsigned k = 0; k < row.size(); ++k) {
                    CAPTURE(r);
                    CAPTURE(s);
                    CAPTURE(n);
                    CAPTURE(k);
                    CHECK(stirling_sum(OrderSignature(r, s), n, k) == row[k]);
                    CHECK(stirling_operator(OrderSignature(r, s), n, k) == row[k]);
                }
            }
}

TEST_CASE("entries outside the support are zero") {
    const OrderSignature sig(3, 2);
    CHECK(stirling(sig, 3, 1) == 0);
    CHECK(stirling(sig, 3, 7) == 0);
    CHECK(stirling(sig, 3, -1) == 0);
    CHECK(stirling(sig, 0, 0) == 1);
    CHECK(stirling(sig, 0, 2) == 0);
    CHECK(stirling_triangle(sig, 4).at(4, 20) == 0);
}

TEST_CASE("diagonal recurrence and diagonal sum") {
    for (unsigned r = 1; r <= 3; ++r) {
        const StirlingTriangle rec = stirling_diag_recurrence(r, 6);
        CHECK(rec == stirling_triangle(OrderSignature(r, r), 6, StirlingAlgorithm::finite_sum));
        CHECK(rec == stirling_triangle(OrderSignature(r, r), 6, StirlingAlgorithm::diagonal_sum));
        for (unsigned n = 1; n <= 6; ++n)
            for (long k = r; k <= static_cast<long>(n * r); ++k)
                CHECK(stirling_diag_sum(r, n, k) == rec.at(n, k));
    }
    CHECK_THROWS_AS(stirling_triangle(OrderSignature(2, 1), 3, StirlingAlgorithm::diagonal_recurrence), DomainError);
}

TEST_CASE("symmetry in r and s") {
    for (unsigned r = 1; r <= 4; ++r)
        for (unsigned s = 1; s <= 4; ++s)
            for (unsigned n = 1; n <= 6; ++n)
                for (long k = 0; k <= static_cast<long>(n * 4); ++k)
                    CHECK(stirling(OrderSignature(r, s), n, k) == stirling(OrderSignature(s, r), n, k));
}

TEST_CASE("anti-Stirling numbers are a shifted row") {
    for (unsigned r = 1; r <= 4; ++r)
        for (unsigned s = 1; s <= 4; ++s)
            for (unsigned n = 1; n <= 5; ++n)
                for (long k = 0; k <= static_cast<long>(n * 4); ++k) {
                    const long lo = std::min(r, s);
                    CHECK(anti_stirling(OrderSignature(r, s), n, k) == stirling(OrderSignature(r, s), n + 1, k + lo));
                }
    // [a ad]^2 = 2 + 4 ad a + ... per the shift S(1,1)(3,k+1) = 1,3,1
    CHECK(anti_stirling(OrderSignature(1, 1), 2, 0) == 1);
    CHECK(anti_stirling(OrderSignature(1, 1), 2, 1) == 3);
    CHECK(anti_stirling(OrderSignature(1, 1), 2, 2) == 1);
}

TEST_CASE("classical and Lah numbers") {
    // classical: alternating sum (1/k!) sum_j (-1)^{k-j} C(k,j) j^n
    for (unsigned n = 1; n <= 10; ++n)
        for (unsigned k = 1; k <= n; ++k) {
            mpz_class acc = 0;
            for (unsigned j = 0; j <= k; ++j) {
                mpz_class p;
                mpz_ui_pow_ui(p.get_mpz_t(), j, n);
                acc += ((k - j) % 2 ? -1 : 1) * oracle::binomial(k, j) * p;
            }
            CHECK(stirling_classical(n, k) == acc / oracle::factorial(k));
            CHECK(stirling_classical(n, k) == stirling(OrderSignature(1, 1), n, k));
        }
    for (unsigned n = 1; n <= 20; ++n)
        for (unsigned k = 1; k <= n; ++k) {
            const mpz_class expected = oracle::factorial(n) / oracle::factorial(k) * oracle::binomial(n - 1, k - 1);
            CHECK(lah(n, k) == expected);
            CHECK(stirling(OrderSignature(2, 1), n, k) == expected);
        }
}

TEST_CASE("triangle validation") {
    CHECK_THROWS(StirlingTriangle(OrderSignature(1, 1), {{1}, {1}}));
    CHECK_THROWS(StirlingTriangle(OrderSignature(1, 1), {{1}, {1, 0}}));
    const StirlingTriangle t = stirling_triangle(OrderSignature(1, 1), 3);
    CHECK_THROWS(t.row(4));
    CHECK_THROWS(t.row(0));
}
