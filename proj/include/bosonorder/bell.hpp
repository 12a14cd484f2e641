#pragma once

#include "bosonorder/exact.hpp"
#include "bosonorder/special.hpp"
#include "bosonorder/stirling.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bosonorder {

// Outcome of an exact identity check.
struct IdentityReport {
    bool holds = true;
    // Index (power of t, or evaluation point) of the first disagreement.
    std::optional<long> first_mismatch;
    std::string detail;
};

// Row sum sum_k S_{r,s}(n, k); 1 for n = 0.
ExactInt bell(const OrderSignature& sig, unsigned n);

// sum_k S_{r,s}(n, k) t^k, exactly. n >= 1.
ExactRat bell_poly(const OrderSignature& sig, unsigned n, const ExactRat& t);

// B_{r,s}(n+1); r >= s.
ExactInt anti_bell(const OrderSignature& sig, unsigned n);

// B_{r,s}(0..n_max) with the row sums collapsed in closed form:
//   B(n) = (1/(n s)!) sum_p C(n s, p) P_n(p) d_{n s - p}
// where P_n(p) is the shifted falling product and d_m the derangement numbers.
// Linear in the row length, so usable far beyond the triangle sizes.
std::vector<ExactInt> bell_sequence(const OrderSignature& sig, unsigned n_max);

// Checks the exact power-series identity
//   sum_{k>=s} (1/k!) prod_j (k+(j-1)(r-s))^{(s)} t^k = e^t sum_k S(n,k) t^k
// coefficient by coefficient through t^order. r >= s, order >= n s.
IdentityReport dobinski_series_identity(const OrderSignature& sig, unsigned n, unsigned order);

// Term shapes for the numeric Dobinski sums (all are the same series, reindexed).
enum class DobinskiForm {
    automatic,        // falling_product for r > s, factorial_ratio for r = s
    power,            // (1/e) sum k^n / k!, r = s = 1 only
    falling_product,  // (1/e) sum_{k>=s} (1/k!) prod_j (k+(j-1)(r-s))^{(s)}
    factorial_ratio,  // (1/e) sum_{k>=0} (1/k!) [(k+r)!/k!]^{n-1}, r = s
    rising_product,   // (1/e) sum_{k>=0} [k(k+1)...(k+r-1)]^n / (k+r-1)!, r = s
};

// Truncated Dobinski-type sum for B_{r,s}(n), r >= s, n >= 1.
Approx dobinski_bell_numeric(const OrderSignature& sig, unsigned n, double tol,
                             DobinskiForm form = DobinskiForm::automatic);

// (r-s)^{s(n-1)}/e sum_k (1/k!) prod_{j=1}^{s} Gamma(n + (k+j)/(r-s)) / Gamma(1 + (k+j)/(r-s)),
// Gamma ratios through log_gamma. Only defined for r > s.
Approx gamma_form_bell_numeric(const OrderSignature& sig, unsigned n, double tol);

// sum_{k=0}^{n-1} C(n-1, k) B_{1,1}(n+k), which equals B_{2,2}(n).
ExactInt bell22_from_classical(unsigned n);

// Checks prod_j (x+(j-1)(r-s))^{(s)} = sum_k S(n,k) x^{(k)} at x = 0..n s.
IdentityReport connection_identity_check(const OrderSignature& sig, unsigned n);

}  // namespace bosonorder
