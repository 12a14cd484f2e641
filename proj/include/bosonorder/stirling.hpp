#pragma once

#include "bosonorder/exact.hpp"

#include <string>
#include <vector>

namespace bosonorder {

// Exponents (r, s) of the operator (a^dag)^r a^s defining a problem family.
struct OrderSignature {
    unsigned r = 1;
    unsigned s = 1;

    OrderSignature() = default;
    OrderSignature(unsigned creations, unsigned annihilations);

    // The orientation with r >= s; the coefficient family is symmetric in (r, s).
    OrderSignature canonical() const noexcept;
    bool is_canonical() const noexcept { return r >= s; }
    bool is_diagonal() const noexcept { return r == s; }
    // Smallest k with a non-zero coefficient, i.e. min(r, s).
    unsigned min_exponent() const noexcept { return r < s ? r : s; }

    friend bool operator==(const OrderSignature&, const OrderSignature&) = default;
    std::string to_string() const;
};

// Generalized Stirling numbers S_{r,s}(n, k) for 1 <= n <= n_max, stored in the
// canonical orientation. Row n holds k = s .. n s (s = min exponent).
class StirlingTriangle {
public:
    StirlingTriangle(OrderSignature signature, std::vector<std::vector<ExactInt>> rows);

    const OrderSignature& signature() const noexcept { return sig_; }
    unsigned n_max() const noexcept { return static_cast<unsigned>(rows_.size()); }

    // Entries of row n, k ascending from k_min(); n in [1, n_max].
    const std::vector<ExactInt>& row(unsigned n) const;
    unsigned k_min() const noexcept { return sig_.s; }
    unsigned k_max(unsigned n) const noexcept { return n * sig_.s; }

    // S(n, k) with zeros outside the support and S(0, 0) = 1.
    ExactInt at(unsigned n, long k) const;
    ExactInt row_sum(unsigned n) const;

    friend bool operator==(const StirlingTriangle&, const StirlingTriangle&) = default;

private:
    OrderSignature sig_;
    std::vector<std::vector<ExactInt>> rows_;
};

enum class StirlingAlgorithm { finite_sum, operator_form, diagonal_recurrence, diagonal_sum };

// Alternating finite-difference sum:
//   ((-1)^k / k!) sum_{p=s}^{k} (-1)^p C(k,p) prod_{j=1}^{n} (p + (j-1)(r-s))^{(s)}
// Requires r >= s >= 1, n >= 1; zero for k outside [s, n s].
ExactInt stirling_sum(const OrderSignature& sig, unsigned n, long k);

// Applies P -> x^r d^s P / dx^s n times to (1-x)^k minus its first s terms,
// evaluates at x = 1 and scales by (-1)^k / k!. Same contract as stirling_sum.
ExactInt stirling_operator(const OrderSignature& sig, unsigned n, long k);

// Diagonal triangle (r, r) built only from S(1, r) = 1 and the three-term-style
// recurrence S(n+1, k) = sum_{p=0}^{r} C(k+p-r, p) r^{(p)} S(n, k+p-r).
StirlingTriangle stirling_diag_recurrence(unsigned r, unsigned n_max);

// ((-1)^k / k!) sum_{p=r}^{k} (-1)^p C(k,p) (p^{(r)})^n.
ExactInt stirling_diag_sum(unsigned r, unsigned n, long k);

// Dispatcher for any orientation and n >= 0. r < s is answered from (s, r).
ExactInt stirling(const OrderSignature& sig, unsigned n, long k);

// Classical alternating sum for S(n, k): ((-1)^k / k!) sum_{p=1}^{k} (-1)^p C(k,p) p^n.
ExactInt stirling_classical(unsigned n, long k);

// Unsigned Lah numbers n!/k! C(n-1, k-1), 1 <= k <= n.
ExactInt lah(unsigned n, unsigned k);

// Coefficient of (a^dag)^k a^k in the normal form of [a^s (a^dag)^r]^n, after the
// common (a^dag)^{n(r-s)} factor, computed through S(n+1, k+s). Zero outside [0, n s].
ExactInt anti_stirling(const OrderSignature& sig, unsigned n, long k);

StirlingTriangle stirling_triangle(const OrderSignature& sig, unsigned n_max,
                                   StirlingAlgorithm algorithm = StirlingAlgorithm::finite_sum);

}  // namespace bosonorder
