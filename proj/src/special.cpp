#include "bosonorder/special.hpp"

#include "bosonorder/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace bosonorder {

SeriesAccumulator::SeriesAccumulator(double tol, std::size_t min_terms, std::size_t max_terms)
    : tol_(tol), min_terms_(min_terms), max_terms_(max_terms) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
}

bool SeriesAccumulator::add(long double term) {
    sum_ += term;
    ++count_;
    const long double magnitude = std::fabs(term);
    bool done = false;
    if (count_ >= min_terms_ && prev_abs_ >= 0.0L) {
        long double ratio;
        if (prev_abs_ == 0.0L)
            ratio = magnitude == 0.0L ? 0.0L : HUGE_VALL;
        else
            ratio = magnitude / prev_abs_;
        if (ratio < 1.0L) {
            const long double tail = ratio < 0.5L ? magnitude : magnitude * ratio / (1.0L - ratio);
            done = tail == 0.0L || tail < static_cast<long double>(tol_) * std::fabs(sum_) / 2.0L;
        }
    }
    prev_abs_ = magnitude;
    if (!done && count_ >= max_terms_)
        throw ConvergenceError("series did not reach relative tolerance within " +
                               std::to_string(max_terms_) + " terms");
    return done;
}

namespace {

bool is_non_positive_integer(double v) { return v <= 0.0 && std::floor(v) == v; }

}  // namespace

Approx pfq_truncated(std::span<const double> a, std::span<const double> b, double x, double tol,
                     std::size_t min_terms) {
    for (double bj : b)
        if (is_non_positive_integer(bj)) throw DomainError("pFq: lower parameter is a non-positive integer");
    bool terminating = false;
    for (double ai : a) terminating = terminating || is_non_positive_integer(ai);
    if (!terminating && x != 0.0) {
        if (a.size() > b.size() + 1) throw DivergenceError("pFq: series diverges for p > q + 1");
        if (a.size() == b.size() + 1 && std::fabs(x) >= 1.0)
            throw DivergenceError("pFq: series diverges for |x| >= 1");
    }

    SeriesAccumulator acc(tol, min_terms);
    long double term = 1.0L;
    for (std::size_t m = 0;; ++m) {
        if (acc.add(term)) break;
        if (term == 0.0L && terminating) break;
        long double ratio = static_cast<long double>(x) / static_cast<long double>(m + 1);
        for (double ai : a) ratio *= static_cast<long double>(ai) + m;
        for (double bj : b) ratio /= static_cast<long double>(bj) + m;
        term *= ratio;
    }
    return {static_cast<double>(acc.sum()), tol};
}

Approx pfq_truncated(std::span<const ExactRat> a, std::span<const ExactRat> b, const ExactRat& x,
                     double tol, std::size_t min_terms) {
    std::vector<double> ad, bd;
    for (const auto& v : a) ad.push_back(v.get_d());
    for (const auto& v : b) bd.push_back(v.get_d());
    return pfq_truncated(ad, bd, x.get_d(), tol, min_terms);
}

ExactRat laguerre_assoc(unsigned m, long alpha, const ExactRat& y) {
    const ExactInt top = ExactInt(static_cast<long>(m)) + alpha;
    ExactRat sum = 0;
    ExactRat power = 1;  // (-y)^i / i!
    for (unsigned i = 0; i <= m; ++i) {
        sum += ExactRat(binomial_signed(top, m - i)) * power;
        power *= -y;
        power /= i + 1;
    }
    return sum;
}

double log_gamma(double y) {
    if (!(y > 0.0)) throw DomainError("log_gamma: argument must be positive");
    if (y == std::floor(y) && y <= 19.0) {
        double f = 1.0;  // (y-1)! is exact in double up to 18!
        for (int i = 2; i < static_cast<int>(y); ++i) f *= i;
        return std::log(f);
    }
    if (y < 0.5) return std::log(std::numbers::pi / std::fabs(std::sin(std::numbers::pi * y))) - log_gamma(1.0 - y);

    static constexpr double g = 7.0;
    static constexpr std::array<double, 9> c = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    const double x = y - 1.0;
    double series = c[0];
    for (std::size_t i = 1; i < c.size(); ++i) series += c[i] / (x + static_cast<double>(i));
    const double t = x + g + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (x + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace bosonorder
