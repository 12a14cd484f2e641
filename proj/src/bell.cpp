#include "bosonorder/bell.hpp"

#include "bosonorder/errors.hpp"
#include "bosonorder/exact_series.hpp"

#include <cmath>

namespace bosonorder {

ExactInt bell(const OrderSignature& sig, unsigned n) {
    if (n == 0) return 1;
    const OrderSignature c = sig.canonical();
    ExactInt sum = 0;
    for (long k = c.s; k <= static_cast<long>(n * c.s); ++k) sum += stirling(c, n, k);
    return sum;
}

ExactRat bell_poly(const OrderSignature& sig, unsigned n, const ExactRat& t) {
    if (n < 1) throw DomainError("bell_poly requires n >= 1");
    const OrderSignature c = sig.canonical();
    ExactRat sum = 0;
    for (unsigned k = c.s; k <= n * c.s; ++k) sum += ExactRat(stirling(c, n, k)) * pow(t, k);
    return sum;
}

ExactInt anti_bell(const OrderSignature& sig, unsigned n) {
    if (n < 1) throw DomainError("anti_bell requires n >= 1");
    return bell(sig, n + 1);
}

std::vector<ExactInt> bell_sequence(const OrderSignature& sig, unsigned n_max) {
    const OrderSignature c = sig.canonical();
    const unsigned len = n_max * c.s;
    std::vector<ExactInt> out{ExactInt(1)};
    if (n_max == 0) return out;

    // derangements d_m = m d_{m-1} + (-1)^m
    std::vector<ExactInt> derangement(len + 1);
    derangement[0] = 1;
    for (unsigned m = 1; m <= len; ++m) derangement[m] = m * derangement[m - 1] + sign_power(m);

    // product[p] = prod_{j=1}^{n} (p + (j-1)(r-s))^{(s)}, extended one factor per row
    std::vector<ExactInt> product(len + 1, ExactInt(1));
    for (unsigned n = 1; n <= n_max; ++n) {
        const unsigned width = n * c.s;
        for (unsigned p = 0; p <= len; ++p)
            if (product[p] != 0)
                product[p] *= falling_factorial(ExactInt(static_cast<unsigned long>(p + (n - 1) * (c.r - c.s))), c.s);
        ExactInt sum = 0;
        for (unsigned p = c.s; p <= width; ++p) sum += binomial(width, p) * product[p] * derangement[width - p];
        const ExactInt wf = factorial(width);
        if (!mpz_divisible_p(sum.get_mpz_t(), wf.get_mpz_t()))
            throw ConsistencyError("collapsed row sum not divisible by (n s)!");
        ExactInt b;
        mpz_divexact(b.get_mpz_t(), sum.get_mpz_t(), wf.get_mpz_t());
        out.push_back(std::move(b));
    }
    return out;
}

namespace {

ExactInt shifted_falling_product(const OrderSignature& sig, unsigned n, const ExactInt& x) {
    ExactInt prod = 1;
    for (unsigned j = 1; j <= n && prod != 0; ++j) prod *= falling_factorial(x + (j - 1) * (sig.r - sig.s), sig.s);
    return prod;
}

}  // namespace

IdentityReport dobinski_series_identity(const OrderSignature& sig, unsigned n, unsigned order) {
    if (!sig.is_canonical()) throw DomainError("dobinski_series_identity requires r >= s");
    if (n < 1) throw DomainError("dobinski_series_identity requires n >= 1");
    if (order < n * sig.s) throw DomainError("dobinski_series_identity requires order >= n s");

    // Left side; terms k < s vanish (the j = 1 factor is k^{(s)} = 0) and the
    // sum is taken from k = s.
    std::vector<ExactRat> lhs(order + 1, ExactRat(0));
    for (unsigned k = sig.s; k <= order; ++k)
        lhs[k] = make_rat(shifted_falling_product(sig, n, ExactInt(k)), factorial(k));

    std::vector<ExactRat> row(order + 1, ExactRat(0));
    for (unsigned k = sig.s; k <= n * sig.s; ++k) row[k] = ExactRat(stirling(sig, n, k));
    const ExactSeries rhs = series_exp(ExactSeries::linear(1, order)) * ExactSeries(row, order);

    IdentityReport report;
    for (unsigned k = 0; k <= order; ++k) {
        if (lhs[k] != rhs[k]) {
            report.holds = false;
            report.first_mismatch = k;
            report.detail = "t^" + std::to_string(k) + ": series side " + to_string(lhs[k]) +
                            ", e^t times row polynomial " + to_string(rhs[k]);
            return report;
        }
    }
    report.detail = "coefficients agree through t^" + std::to_string(order);
    return report;
}

Approx dobinski_bell_numeric(const OrderSignature& sig, unsigned n, double tol, DobinskiForm form) {
    if (!sig.is_canonical()) throw DomainError("dobinski_bell_numeric requires r >= s");
    if (n < 1) throw DomainError("dobinski_bell_numeric requires n >= 1");
    if (form == DobinskiForm::automatic)
        form = sig.is_diagonal() ? DobinskiForm::factorial_ratio : DobinskiForm::falling_product;
    if (form == DobinskiForm::power && !(sig.r == 1 && sig.s == 1))
        throw DomainError("the power form is the r = s = 1 case");
    if ((form == DobinskiForm::factorial_ratio || form == DobinskiForm::rising_product) && !sig.is_diagonal())
        throw DomainError("this Dobinski form requires r == s");

    const unsigned r = sig.r;
    // Each term is formed exactly and rounded once.
    auto term = [&](unsigned k) -> ExactRat {
        switch (form) {
            case DobinskiForm::power: {
                ExactInt p;
                mpz_ui_pow_ui(p.get_mpz_t(), k, n);
                return make_rat(p, factorial(k));
            }
            case DobinskiForm::falling_product:
                if (k < sig.s) return 0;
                return make_rat(shifted_falling_product(sig, n, ExactInt(k)), factorial(k));
            case DobinskiForm::factorial_ratio: {
                ExactInt ratio = factorial(k + r) / factorial(k);
                ExactInt p;
                mpz_pow_ui(p.get_mpz_t(), ratio.get_mpz_t(), n - 1);
                return make_rat(p, factorial(k));
            }
            case DobinskiForm::rising_product: {
                ExactInt rising = 1;
                for (unsigned i = 0; i < r; ++i) rising *= k + i;
                ExactInt p;
                mpz_pow_ui(p.get_mpz_t(), rising.get_mpz_t(), n);
                return make_rat(p, factorial(k + r - 1));
            }
            case DobinskiForm::automatic: break;
        }
        return 0;
    };

    SeriesAccumulator acc(tol, static_cast<std::size_t>(n) * sig.s + 16);
    for (unsigned k = 0;; ++k)
        if (acc.add(static_cast<long double>(term(k).get_d()))) break;
    return {static_cast<double>(acc.sum() * std::exp(-1.0L)), tol};
}

Approx gamma_form_bell_numeric(const OrderSignature& sig, unsigned n, double tol) {
    if (!(sig.r > sig.s)) throw DomainError("the gamma form is only defined for r > s");
    if (n < 1) throw DomainError("gamma_form_bell_numeric requires n >= 1");
    const double d = static_cast<double>(sig.r - sig.s);
    SeriesAccumulator acc(tol, static_cast<std::size_t>(n) * sig.s + 16);
    for (unsigned k = 0;; ++k) {
        double log_term = -log_gamma(k + 1.0);
        for (unsigned j = 1; j <= sig.s; ++j) {
            const double shift = (k + j) / d;
            log_term += log_gamma(n + shift) - log_gamma(1.0 + shift);
        }
        if (acc.add(std::exp(static_cast<long double>(log_term)))) break;
    }
    const long double prefactor =
        std::pow(static_cast<long double>(d), static_cast<long double>(sig.s) * (n - 1)) * std::exp(-1.0L);
    return {static_cast<double>(prefactor * acc.sum()), tol};
}

ExactInt bell22_from_classical(unsigned n) {
    if (n < 1) throw DomainError("bell22_from_classical requires n >= 1");
    const std::vector<ExactInt> classical = bell_sequence(OrderSignature(1, 1), 2 * n - 1);
    ExactInt sum = 0;
    for (unsigned k = 0; k < n; ++k) sum += binomial(n - 1, k) * classical[n + k];
    return sum;
}

IdentityReport connection_identity_check(const OrderSignature& sig, unsigned n) {
    if (!sig.is_canonical()) throw DomainError("connection_identity_check requires r >= s");
    if (n < 1) throw DomainError("connection_identity_check requires n >= 1");
    std::vector<ExactInt> row;
    for (unsigned k = 0; k <= n * sig.s; ++k) row.push_back(stirling(sig, n, k));
    IdentityReport report;
    // both sides have degree n s, so n s + 1 points decide the identity
    for (unsigned x = 0; x <= n * sig.s; ++x) {
        const ExactInt xv(x);
        const ExactInt lhs = shifted_falling_product(sig, n, xv);
        ExactInt rhs = 0;
        for (unsigned k = 0; k < row.size(); ++k)
            if (row[k] != 0) rhs += row[k] * falling_factorial(xv, k);
        if (lhs != rhs) {
            report.holds = false;
            report.first_mismatch = x;
            report.detail = "x = " + std::to_string(x) + ": product " + to_string(lhs) + ", expansion " +
                            to_string(rhs);
            return report;
        }
    }
    report.detail = "agree at x = 0.." + std::to_string(n * sig.s);
    return report;
}

}  // namespace bosonorder
