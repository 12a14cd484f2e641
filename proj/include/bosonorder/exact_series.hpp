#pragma once

#include "bosonorder/exact.hpp"

#include <cstddef>
#include <vector>

namespace bosonorder {

// Formal power series truncated after x^order, exact rational coefficients.
// Every operation is exact through `order` and drops higher terms. Binary
// operations on series of different orders yield the smaller order.
class ExactSeries {
public:
    explicit ExactSeries(std::size_t order);
    ExactSeries(std::vector<ExactRat> coefficients, std::size_t order);

    // c + 0 x + ...
    static ExactSeries constant(const ExactRat& c, std::size_t order);
    // c x
    static ExactSeries linear(const ExactRat& c, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<ExactRat>& coefficients() const noexcept { return coeffs_; }
    const ExactRat& operator[](std::size_t n) const { return coeffs_.at(n); }

    ExactSeries& operator+=(const ExactSeries& other);
    ExactSeries& operator-=(const ExactSeries& other);
    ExactSeries& operator*=(const ExactRat& scalar);

    friend ExactSeries operator+(ExactSeries lhs, const ExactSeries& rhs) { return lhs += rhs; }
    friend ExactSeries operator-(ExactSeries lhs, const ExactSeries& rhs) { return lhs -= rhs; }
    friend ExactSeries operator*(ExactSeries lhs, const ExactRat& scalar) { return lhs *= scalar; }
    friend ExactSeries operator*(const ExactSeries& lhs, const ExactSeries& rhs);
    friend bool operator==(const ExactSeries&, const ExactSeries&) = default;

    ExactSeries pow(unsigned exponent) const;

private:
    void truncate_to(std::size_t order);

    std::vector<ExactRat> coeffs_;
};

// exp(u) for u with zero constant term; DomainError otherwise.
ExactSeries series_exp(const ExactSeries& u);

// u^alpha by the generalized binomial series, for u with constant term 1;
// DomainError otherwise.
ExactSeries series_binomial_pow(const ExactSeries& u, const ExactRat& alpha);

}  // namespace bosonorder
