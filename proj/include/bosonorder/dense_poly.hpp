#pragma once

#include "bosonorder/exact.hpp"

#include <string>
#include <vector>

namespace bosonorder {

// Univariate polynomial with exact rational coefficients; index = power of x.
// The coefficient list never ends in a zero, so the zero polynomial is empty
// and has degree -1.
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(std::vector<ExactRat> coefficients);

    static DensePoly monomial(const ExactRat& coefficient, unsigned power);
    // (c0 + c1 x)^k
    static DensePoly binomial_power(const ExactRat& c0, const ExactRat& c1, unsigned k);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<ExactRat>& coefficients() const noexcept { return coeffs_; }
    ExactRat coefficient(unsigned power) const;

    ExactRat evaluate(const ExactRat& x) const;

    // d^order/dx^order
    DensePoly derivative(unsigned order = 1) const;
    // x^power * p(x)
    DensePoly shifted(unsigned power) const;

    DensePoly& operator+=(const DensePoly& other);
    DensePoly& operator-=(const DensePoly& other);
    DensePoly& operator*=(const ExactRat& scalar);

    friend DensePoly operator+(DensePoly lhs, const DensePoly& rhs) { return lhs += rhs; }
    friend DensePoly operator-(DensePoly lhs, const DensePoly& rhs) { return lhs -= rhs; }
    friend DensePoly operator*(DensePoly lhs, const ExactRat& scalar) { return lhs *= scalar; }
    friend DensePoly operator*(const DensePoly& lhs, const DensePoly& rhs);
    friend bool operator==(const DensePoly&, const DensePoly&) = default;

    std::string to_string() const;

private:
    void trim();

    std::vector<ExactRat> coeffs_;
};

}  // namespace bosonorder
