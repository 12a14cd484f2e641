#include "bosonorder/exact_series.hpp"

#include "bosonorder/errors.hpp"

#include <algorithm>

namespace bosonorder {

ExactSeries::ExactSeries(std::size_t order) : coeffs_(order + 1, ExactRat(0)) {}

ExactSeries::ExactSeries(std::vector<ExactRat> coefficients, std::size_t order)
    : coeffs_(std::move(coefficients)) {
    coeffs_.resize(order + 1, ExactRat(0));
}

ExactSeries ExactSeries::constant(const ExactRat& c, std::size_t order) {
    ExactSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

ExactSeries ExactSeries::linear(const ExactRat& c, std::size_t order) {
    ExactSeries s(order);
    if (order >= 1) s.coeffs_[1] = c;
    return s;
}

void ExactSeries::truncate_to(std::size_t order) {
    if (order < this->order()) coeffs_.resize(order + 1);
}

ExactSeries& ExactSeries::operator+=(const ExactSeries& other) {
    truncate_to(other.order());
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
    return *this;
}

ExactSeries& ExactSeries::operator-=(const ExactSeries& other) {
    truncate_to(other.order());
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
    return *this;
}

ExactSeries& ExactSeries::operator*=(const ExactRat& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

ExactSeries operator*(const ExactSeries& lhs, const ExactSeries& rhs) {
    const std::size_t order = std::min(lhs.order(), rhs.order());
    ExactSeries out(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= order; ++j) out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return out;
}

ExactSeries ExactSeries::pow(unsigned exponent) const {
    ExactSeries result = constant(1, order());
    ExactSeries base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

ExactSeries series_exp(const ExactSeries& u) {
    if (u[0] != 0) throw DomainError("series_exp: constant term must be zero");
    // f = exp(u) satisfies f' = u' f, i.e. n f_n = sum_{k=1}^{n} k u_k f_{n-k}.
    const std::size_t order = u.order();
    std::vector<ExactRat> f(order + 1);
    f[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        ExactRat acc = 0;
        for (std::size_t k = 1; k <= n; ++k)
            if (u[k] != 0) acc += ExactRat(static_cast<unsigned long>(k)) * u[k] * f[n - k];
        f[n] = acc / ExactRat(static_cast<unsigned long>(n));
    }
    return ExactSeries(std::move(f), order);
}

ExactSeries series_binomial_pow(const ExactSeries& u, const ExactRat& alpha) {
    if (u[0] != 1) throw DomainError("series_binomial_pow: constant term must be one");
    // f = u^alpha satisfies u f' = alpha u' f; with u_0 = 1,
    // n f_n = sum_{k=1}^{n} (alpha k - (n - k)) u_k f_{n-k}.
    const std::size_t order = u.order();
    std::vector<ExactRat> f(order + 1);
    f[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        ExactRat acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (u[k] == 0) continue;
            ExactRat weight = alpha * ExactRat(static_cast<unsigned long>(k)) -
                              ExactRat(static_cast<unsigned long>(n - k));
            acc += weight * u[k] * f[n - k];
        }
        f[n] = acc / ExactRat(static_cast<unsigned long>(n));
    }
    return ExactSeries(std::move(f), order);
}

}  // namespace bosonorder
