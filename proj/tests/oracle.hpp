#pragma once

// Independent reference values for the unit tests. Nothing here calls into the
// library; coefficients come from the action of (x^r D^s)^n on monomials.

#include <gmpxx.h>

#include <vector>

namespace oracle {

// prod_{j<n} (m + j(r-s))^{(s)}: the eigenvalue of (x^r D^s)^n on x^m,
// with the shift x^{n(r-s)} stripped.
inline mpz_class power_action(unsigned r, unsigned s, unsigned n, long m) {
    mpz_class out = 1;
    for (unsigned j = 0; j < n; ++j) {
        const long base = m + static_cast<long>(j) * (static_cast<long>(r) - static_cast<long>(s));
        for (unsigned i = 0; i < s; ++i) out *= base - static_cast<long>(i);
    }
    return out;
}

// S(n,k) for k = 0..n*s from forward differences at 0 (Newton series in m^{(k)}).
inline std::vector<mpz_class> stirling_row(unsigned r, unsigned s, unsigned n) {
    const unsigned top = n * s;
    std::vector<mpz_class> diff(top + 1);
    for (unsigned m = 0; m <= top; ++m) diff[m] = power_action(r, s, n, m);
    std::vector<mpz_class> row(top + 1);
    mpz_class fact = 1;
    for (unsigned k = 0; k <= top; ++k) {
        if (k > 0) fact *= k;
        row[k] = diff[0] / fact;
        for (unsigned m = 0; m + k < top; ++m) diff[m] = diff[m + 1] - diff[m];
    }
    return row;
}

inline mpz_class bell(unsigned r, unsigned s, unsigned n) {
    if (n == 0) return 1;
    mpz_class sum = 0;
    for (const auto& v : stirling_row(r, s, n)) sum += v;
    return sum;
}

inline mpz_class factorial(unsigned n) {
    mpz_class f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline mpz_class binomial(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace oracle
