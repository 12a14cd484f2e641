#pragma once

#include "bosonorder/exact.hpp"
#include "bosonorder/special.hpp"

#include <cstddef>
#include <vector>

namespace bosonorder {

// Coefficients of x^n, n = 0..order, of an exponential generating function in
// n for fixed column k.
struct EgfExtraction {
    long k = 0;
    unsigned order = 0;
    std::vector<ExactRat> coefficients;

    // n! * coefficients[n]; ConsistencyError if any of them is not an integer.
    std::vector<ExactInt> scaled() const;
};

// ((-1)^k / k!) sum_{p=r}^{k} (-1)^p C(k,p) (exp(x p^{(r)}) - 1); the n! scaled
// coefficients are S_{r,r}(n, k). Requires k >= r.
EgfExtraction egf_diag(unsigned r, long k, unsigned order);

// (1/k!) [(1 - (r-1) x)^{-1/(r-1)} - 1]^k; the n! scaled coefficients are
// S_{r,1}(n, k). Requires r >= 2, k >= 1.
EgfExtraction egf_r1(unsigned r, long k, unsigned order);

// <z| exp(lambda (a^dag)^r a^r) |z> at |z| = 1 as the double sum
//   1 + sum_{k>=r} ((-1)^k / k!) sum_{p=r}^{k} (-1)^p C(k,p) (exp(lambda p^{(r)}) - 1)
// with the outer sum truncated by the series stopping rule. For r >= 2 and
// lambda > 0 the outer sum is only asymptotic; the rule stops near its
// smallest terms.
Approx egf_bell_diag_numeric(unsigned r, double lambda, double tol);

// exp(exp(lambda) - 1).
Approx egf_classical_numeric(double lambda);

// sum_{n=0}^{n_max} B_{r,s}(n) lambda^n / n!, with exact Bell numbers.
double bell_egf_partial_sum(unsigned r, unsigned s, double lambda, unsigned n_max);

// B_{2,1}(n) through the Kummer function and through the Laguerre polynomial.
struct LaguerreBellCheck {
    unsigned n = 0;
    ExactInt exact;              // row sum of the (2,1) triangle
    Approx kummer;               // (n!/e) 1F1(n+1; 2; 1)
    ExactRat laguerre;           // (n-1)! L_{n-1}^{(1)}(-1), no 1/e factor
    double laguerre_with_e = 0;  // the same value divided by e
    bool kummer_matches = false;
    bool laguerre_matches = false;
    bool laguerre_with_e_matches = false;
};
LaguerreBellCheck laguerre_bell_check(unsigned n, double tol = 1e-12);

// (rn)! / (e r!) 1F1(rn+1; r+1; 1), which equals B_{2r,r}(n).
Approx kummer_bell_check(unsigned r, unsigned n, double tol);

// B_{3,1}(n) as the two-term 1F2 combination at argument 1/4.
Approx b31_check(unsigned n, double tol);

struct HgfValue {
    double lambda = 0;
    Approx value;
};

// Hypergeometric generating function of B_{3,2}: sum_n [B(n)/n!] lambda^n / n!.
// Both evaluation routes are reported because they differ in the n = 0 term:
// the hypergeometric sum carries the Dobinski value (e-2)/e there, while the
// convention B(0) = 1 contributes 1.
struct Hgf32Readings {
    // (1/e) sum_k 2F1(k+2, k+1; 1; lambda) / (k+2)!
    HgfValue series;
    // partial egf of the ratios with B(0) = 1
    Approx bell_sum_convention;
    // the same partial sum with the n = 0 term replaced by (e-2)/e
    Approx bell_sum_dobinski;
    std::size_t bell_terms = 0;
    // bell_sum_convention - bell_sum_dobinski = 2/e
    double normalization_offset = 0;
};
// DomainError for |lambda| >= 1.
Hgf32Readings hgf_32(double lambda, double tol);

}  // namespace bosonorder
