#include "bosonorder/genfun.hpp"

#include "bosonorder/bell.hpp"
#include "bosonorder/errors.hpp"
#include "bosonorder/exact_series.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace bosonorder {

std::vector<ExactInt> EgfExtraction::scaled() const {
    std::vector<ExactInt> out;
    out.reserve(coefficients.size());
    for (unsigned n = 0; n < coefficients.size(); ++n) {
        const ExactRat v = coefficients[n] * ExactRat(factorial(n));
        if (!is_integer(v))
            throw ConsistencyError("n! times egf coefficient " + std::to_string(n) + " is not an integer");
        out.push_back(v.get_num());
    }
    return out;
}

EgfExtraction egf_diag(unsigned r, long k, unsigned order) {
    if (r < 1) throw DomainError("egf_diag requires r >= 1");
    if (k < static_cast<long>(r)) throw DomainError("egf_diag requires k >= r");
    const auto kk = static_cast<unsigned>(k);
    ExactSeries sum(order);
    const ExactSeries one = ExactSeries::constant(1, order);
    for (unsigned p = r; p <= kk; ++p) {
        const ExactRat rate(falling_factorial(ExactInt(p), r));
        const ExactSeries bracket = series_exp(ExactSeries::linear(rate, order)) - one;
        sum += bracket * ExactRat(ExactInt(sign_power(p) * binomial(kk, p)));
    }
    sum *= make_rat(sign_power(k), factorial(kk));
    return {k, order, sum.coefficients()};
}

EgfExtraction egf_r1(unsigned r, long k, unsigned order) {
    if (r < 2) throw DomainError("egf_r1 requires r >= 2");
    if (k < 1) throw DomainError("egf_r1 requires k >= 1");
    const auto kk = static_cast<unsigned>(k);
    ExactSeries base = ExactSeries::constant(1, order);
    base += ExactSeries::linear(-ExactRat(r - 1), order);
    const ExactSeries bracket =
        series_binomial_pow(base, make_rat(-1, r - 1)) - ExactSeries::constant(1, order);
    ExactSeries result = bracket.pow(kk);
    result *= make_rat(1, factorial(kk));
    return {k, order, result.coefficients()};
}

Approx egf_bell_diag_numeric(unsigned r, double lambda, double tol) {
    if (r < 1) throw DomainError("egf_bell_diag_numeric requires r >= 1");
    constexpr std::size_t kMaxOuterTerms = 400;
    SeriesAccumulator acc(tol, r + 16, kMaxOuterTerms);
    if (acc.add(1.0L)) return {1.0, tol};
    for (unsigned k = r;; ++k) {
        // inner sum with 1/k! folded in: (-1)^{k-p} expm1(lambda p^{(r)}) / (p! (k-p)!)
        long double inner = 0.0L;
        for (unsigned p = r; p <= k; ++p) {
            long double rate = 1.0L;
            for (unsigned i = 0; i < r; ++i) rate *= static_cast<long double>(p - i);
            const long double weight = std::exp(-static_cast<long double>(log_gamma(p + 1.0)) -
                                                static_cast<long double>(log_gamma(k - p + 1.0)));
            const long double term = std::expm1(static_cast<long double>(lambda) * rate) * weight;
            inner += ((k - p) % 2 == 0) ? term : -term;
        }
        if (!std::isfinite(inner))
            throw ConvergenceError("diagonal egf double sum overflowed before meeting the tolerance");
        if (acc.add(inner)) break;
    }
    return {static_cast<double>(acc.sum()), tol};
}

Approx egf_classical_numeric(double lambda) {
    return {std::exp(std::expm1(lambda)), 4 * std::numeric_limits<double>::epsilon()};
}

double bell_egf_partial_sum(unsigned r, unsigned s, double lambda, unsigned n_max) {
    const std::vector<ExactInt> b = bell_sequence(OrderSignature(r, s), n_max);
    long double sum = 0.0L;
    long double power = 1.0L;
    for (unsigned n = 0; n <= n_max; ++n) {
        sum += static_cast<long double>(make_rat(b[n], factorial(n)).get_d()) * power;
        power *= lambda;
    }
    return static_cast<double>(sum);
}

namespace {

bool relative_match(double value, const ExactInt& exact, double tol) {
    const double reference = exact.get_d();
    return std::fabs(value - reference) <= tol * std::fabs(reference);
}

}  // namespace

LaguerreBellCheck laguerre_bell_check(unsigned n, double tol) {
    if (n < 1) throw DomainError("laguerre_bell_check requires n >= 1");
    LaguerreBellCheck out;
    out.n = n;
    out.exact = bell(OrderSignature(2, 1), n);

    const std::array<double, 1> a{n + 1.0};
    const std::array<double, 1> b{2.0};
    const Approx f = pfq_truncated(a, b, 1.0, tol / 2);
    out.kummer = {factorial(n).get_d() * std::exp(-1.0) * f.value, tol};

    out.laguerre = ExactRat(factorial(n - 1)) * laguerre_assoc(n - 1, 1, -1);
    out.laguerre_with_e = out.laguerre.get_d() * std::exp(-1.0);

    out.kummer_matches = relative_match(out.kummer.value, out.exact, tol);
    out.laguerre_matches = out.laguerre == ExactRat(out.exact);
    out.laguerre_with_e_matches = relative_match(out.laguerre_with_e, out.exact, tol);
    return out;
}

Approx kummer_bell_check(unsigned r, unsigned n, double tol) {
    if (r < 1 || n < 1) throw DomainError("kummer_bell_check requires r >= 1 and n >= 1");
    const std::array<double, 1> a{static_cast<double>(r) * n + 1.0};
    const std::array<double, 1> b{r + 1.0};
    const Approx f = pfq_truncated(a, b, 1.0, tol / 2);
    const double prefactor = make_rat(factorial(r * n), factorial(r)).get_d() * std::exp(-1.0);
    return {prefactor * f.value, tol};
}

Approx b31_check(unsigned n, double tol) {
    if (n < 1) throw DomainError("b31_check requires n >= 1");
    const std::array<double, 1> a1{n + 0.5};
    const std::array<double, 2> b1{0.5, 1.5};
    const std::array<double, 1> a2{n + 1.0};
    const std::array<double, 2> b2{1.5, 2.0};
    const Approx f1 = pfq_truncated(a1, b1, 0.25, tol / 4);
    const Approx f2 = pfq_truncated(a2, b2, 0.25, tol / 4);
    const double gamma_ratio = std::exp(log_gamma(n + 0.5)) / std::sqrt(std::numbers::pi);
    const double value =
        std::ldexp(1.0, static_cast<int>(n) - 1) * std::exp(-1.0) * (2.0 * gamma_ratio * f1.value + factorial(n).get_d() * f2.value);
    return {value, tol};
}

Hgf32Readings hgf_32(double lambda, double tol) {
    if (!(std::fabs(lambda) < 1.0)) throw DomainError("hgf_32 requires |lambda| < 1");
    Hgf32Readings out;
    const double inv_e = std::exp(-1.0);

    // inner 2F1 to tol/4, outer sum to tol/4
    SeriesAccumulator outer(tol / 4, 16);
    for (unsigned k = 0;; ++k) {
        const std::array<double, 2> a{k + 2.0, k + 1.0};
        const std::array<double, 1> b{1.0};
        const Approx f = pfq_truncated(a, b, lambda, tol / 4);
        const long double term = f.value * std::exp(-static_cast<long double>(log_gamma(k + 3.0)));
        if (outer.add(term)) break;
    }
    out.series = {lambda, {static_cast<double>(outer.sum() * inv_e), tol}};

    // exact B_{3,2}(n), extended by doubling until the partial sum settles
    const OrderSignature sig(3, 2);
    for (unsigned n_max = 32;; n_max *= 2) {
        if (n_max > 2048) throw ConvergenceError("hgf_32 Bell-ratio sum did not converge");
        const std::vector<ExactInt> b = bell_sequence(sig, n_max);
        SeriesAccumulator acc(tol / 2, 16, n_max + 1);
        bool done = false;
        long double power = 1.0L;
        ExactInt nf = 1;
        try {
            for (unsigned n = 0; n <= n_max && !done; ++n) {
                if (n > 0) nf *= n;
                const double ratio = make_rat(b[n], nf * nf).get_d();
                done = acc.add(static_cast<long double>(ratio) * power);
                power *= lambda;
            }
        } catch (const ConvergenceError&) {
            continue;
        }
        if (!done) continue;
        out.bell_terms = acc.terms();
        out.bell_sum_convention = {static_cast<double>(acc.sum()), tol};
        const double dobinski_zero = 1.0 - 2.0 * inv_e;  // (e - 2)/e
        out.bell_sum_dobinski = {static_cast<double>(acc.sum() - 1.0L + dobinski_zero), tol};
        out.normalization_offset = 2.0 * inv_e;
        break;
    }
    return out;
}

}  // namespace bosonorder
