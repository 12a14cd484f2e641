#include "bosonorder/bell.hpp"
#include "bosonorder/errors.hpp"
#include "bosonorder/genfun.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace bosonorder;

TEST_CASE("diagonal egf extraction gives the Stirling columns") {
    for (unsigned r = 1; r <= 2; ++r)
        for (long k = r; k <= 6; ++k) {
            const EgfExtraction e = egf_diag(r, k, 8);
            const auto scaled = e.scaled();
            REQUIRE(scaled.size() == 9);
            CHECK(scaled[0] == 0);
            for (unsigned n = 1; n <= 8; ++n) {
                const auto row = oracle::stirling_row(r, r, n);
                const mpz_class expected = static_cast<std::size_t>(k) < row.size() ? row[k] : mpz_class(0);
                CAPTURE(r);
                CAPTURE(k);
                CAPTURE(n);
                CHECK(scaled[n] == expected);
            }
        }
    CHECK_THROWS_AS(egf_diag(2, 1, 4), DomainError);
}

TEST_CASE("(r,1) egf extraction gives the Stirling columns") {
    for (unsigned r = 2; r <= 3; ++r)
        for (long k = 1; k <= 4; ++k) {
            const auto scaled = egf_r1(r, k, 8).scaled();
            for (unsigned n = 1; n <= 8; ++n) {
                const auto row = oracle::stirling_row(r, 1, n);
                const mpz_class expected = static_cast<std::size_t>(k) < row.size() ? row[k] : mpz_class(0);
                CHECK(scaled[n] == expected);
            }
        }
    CHECK_THROWS_AS(egf_r1(1, 2, 4), DomainError);
    CHECK_THROWS_AS(egf_r1(2, 0, 4), DomainError);
}

TEST_CASE("coherent double sum reproduces the classical Bell egf") {
    for (double lambda : {-0.5, -0.3, -0.1, 0.0, 0.1, 0.3, 0.5}) {
        CAPTURE(lambda);
        const double reference = std::exp(std::expm1(lambda));
        CHECK(egf_classical_numeric(lambda).value == doctest::Approx(reference).epsilon(1e-15));
        CHECK(egf_bell_diag_numeric(1, lambda, 1e-13).value == doctest::Approx(reference).epsilon(1e-9));
    }
}

TEST_CASE("diagonal r = 2 egf against the Bell partial sum") {
    const double numeric = egf_bell_diag_numeric(2, 0.05, 1e-10).value;
    CHECK(std::fabs(numeric - bell_egf_partial_sum(2, 2, 0.05, 20)) <= 1e-8 * numeric);
}

TEST_CASE("Bell egf partial sums") {
    CHECK(bell_egf_partial_sum(1, 1, 0.0, 5) == 1.0);
    // 1 + l + 2 l^2/2 + 5 l^3/6
    const double l = 0.1;
    CHECK(bell_egf_partial_sum(1, 1, l, 3) == doctest::Approx(1 + l + l * l + 5 * l * l * l / 6));
}

TEST_CASE("Laguerre and Kummer forms of B(2,1)") {
    for (unsigned n = 1; n <= 8; ++n) {
        const LaguerreBellCheck c = laguerre_bell_check(n);
        CHECK(c.exact == oracle::bell(2, 1, n));
        CHECK(c.laguerre == ExactRat(c.exact));
        CHECK(c.laguerre_matches);
        CHECK(c.kummer_matches);
        CHECK_FALSE(c.laguerre_with_e_matches);
    }
    CHECK_THROWS_AS(laguerre_bell_check(0), DomainError);
}

TEST_CASE("Kummer form of B(2r,r)") {
    for (unsigned r = 1; r <= 2; ++r)
        for (unsigned n = 1; n <= 4; ++n)
            CHECK(kummer_bell_check(r, n, 1e-12).value == doctest::Approx(oracle::bell(2 * r, r, n).get_d()).epsilon(1e-8));
}

TEST_CASE("1F2 pair for B(3,1)") {
    for (unsigned n = 1; n <= 4; ++n)
        CHECK(b31_check(n, 1e-12).value == doctest::Approx(oracle::bell(3, 1, n).get_d()).epsilon(1e-6));
}

TEST_CASE("hypergeometric generating function of B(3,2)") {
    for (double lambda : {0.1, 0.25}) {
        const Hgf32Readings h = hgf_32(lambda, 1e-10);
        CHECK(std::fabs(h.series.value.value - h.bell_sum_dobinski.value) <= 1e-6);
        CHECK(h.bell_sum_convention.value - h.bell_sum_dobinski.value == doctest::Approx(2 * std::exp(-1.0)));
        CHECK(h.bell_terms > 12);
    }
    const Hgf32Readings zero = hgf_32(0.0, 1e-10);
    CHECK(zero.series.value.value == doctest::Approx(1 - 2 * std::exp(-1.0)).epsilon(1e-12));
    CHECK(zero.bell_sum_convention.value == 1.0);
    CHECK(zero.normalization_offset == doctest::Approx(2 * std::exp(-1.0)));
    CHECK_THROWS_AS(hgf_32(1.0, 1e-10), DomainError);
}
