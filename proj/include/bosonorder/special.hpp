#pragma once

#include "bosonorder/exact.hpp"

#include <cstddef>
#include <span>

namespace bosonorder {

// A floating-point result with the relative error it is certified to.
// Only numeric evaluators produce these; they never feed exact code.
struct Approx {
    double value = 0.0;
    double tol = 0.0;
};

inline constexpr std::size_t kDefaultTermCap = 200000;

// Accumulates the terms of an infinite series and decides when to stop.
//
// Stop after term t_k once at least `min_terms` terms were taken, the ratio
// rho = |t_k| / |t_{k-1}| is below 1, and the geometric tail bound is under
// half the requested relative tolerance:
//   rho < 1/2:        |t_k|               < tol |S| / 2
//   1/2 <= rho < 1:   |t_k| rho / (1-rho) < tol |S| / 2
// The bound assumes the term ratio does not increase past this point, which
// holds for the factorially decaying and hypergeometric series used here.
class SeriesAccumulator {
public:
    SeriesAccumulator(double tol, std::size_t min_terms, std::size_t max_terms = kDefaultTermCap);

    // Returns true when the tail certificate holds. Throws ConvergenceError if
    // the term cap is reached first.
    bool add(long double term);

    long double sum() const noexcept { return sum_; }
    std::size_t terms() const noexcept { return count_; }
    double tol() const noexcept { return tol_; }

private:
    double tol_;
    std::size_t min_terms_;
    std::size_t max_terms_;
    std::size_t count_ = 0;
    long double sum_ = 0.0L;
    long double prev_abs_ = -1.0L;
};

// Truncated generalized hypergeometric series pFq(a; b; x).
// DomainError if a lower parameter is a non-positive integer; DivergenceError
// where a non-terminating series diverges (p > q+1, or p = q+1 with |x| >= 1).
Approx pfq_truncated(std::span<const double> a, std::span<const double> b, double x, double tol,
                     std::size_t min_terms = 16);
Approx pfq_truncated(std::span<const ExactRat> a, std::span<const ExactRat> b, const ExactRat& x,
                     double tol, std::size_t min_terms = 16);

// Associated Laguerre polynomial L_m^(alpha)(y), exactly:
//   sum_{i=0}^{m} C(m+alpha, m-i) (-y)^i / i!
ExactRat laguerre_assoc(unsigned m, long alpha, const ExactRat& y);

// ln Gamma(y) for y > 0 (Lanczos, g = 7); exact log-factorials at small integers.
double log_gamma(double y);

}  // namespace bosonorder
