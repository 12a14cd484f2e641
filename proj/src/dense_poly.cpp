#include "bosonorder/dense_poly.hpp"

#include <sstream>

namespace bosonorder {

DensePoly::DensePoly(std::vector<ExactRat> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

DensePoly DensePoly::monomial(const ExactRat& coefficient, unsigned power) {
    std::vector<ExactRat> c(power + 1);
    c[power] = coefficient;
    return DensePoly(std::move(c));
}

DensePoly DensePoly::binomial_power(const ExactRat& c0, const ExactRat& c1, unsigned k) {
    std::vector<ExactRat> c(k + 1);
    for (unsigned p = 0; p <= k; ++p)
        c[p] = ExactRat(binomial(k, p)) * pow(c0, k - p) * pow(c1, p);
    return DensePoly(std::move(c));
}

ExactRat DensePoly::coefficient(unsigned power) const {
    return power < coeffs_.size() ? coeffs_[power] : ExactRat(0);
}

ExactRat DensePoly::evaluate(const ExactRat& x) const {
    ExactRat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

DensePoly DensePoly::derivative(unsigned order) const {
    if (order == 0) return *this;
    if (coeffs_.size() <= order) return {};
    std::vector<ExactRat> c(coeffs_.size() - order);
    for (std::size_t p = order; p < coeffs_.size(); ++p)
        c[p - order] = coeffs_[p] * ExactRat(falling_factorial(ExactInt(static_cast<unsigned long>(p)), order));
    return DensePoly(std::move(c));
}

DensePoly DensePoly::shifted(unsigned power) const {
    if (is_zero()) return {};
    std::vector<ExactRat> c(power, ExactRat(0));
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return DensePoly(std::move(c));
}

DensePoly& DensePoly::operator+=(const DensePoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

DensePoly& DensePoly::operator-=(const DensePoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

DensePoly& DensePoly::operator*=(const ExactRat& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
}

DensePoly operator*(const DensePoly& lhs, const DensePoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<ExactRat> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return DensePoly(std::move(c));
}

std::string DensePoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t p = 0; p < coeffs_.size(); ++p) {
        if (coeffs_[p] == 0) continue;
        if (!first) out << " + ";
        first = false;
        out << coeffs_[p].get_str();
        if (p == 1) out << "*x";
        if (p > 1) out << "*x^" << p;
    }
    return out.str();
}

void DensePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace bosonorder
