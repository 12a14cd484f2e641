#include "bosonorder/stirling.hpp"

#include "bosonorder/dense_poly.hpp"
#include "bosonorder/errors.hpp"

#include <stdexcept>

namespace bosonorder {

OrderSignature::OrderSignature(unsigned creations, unsigned annihilations)
    : r(creations), s(annihilations) {
    if (r < 1 || s < 1) throw DomainError("order signature requires r >= 1 and s >= 1");
}

OrderSignature OrderSignature::canonical() const noexcept {
    OrderSignature c = *this;
    if (c.r < c.s) std::swap(c.r, c.s);
    return c;
}

std::string OrderSignature::to_string() const {
    return "(" + std::to_string(r) + "," + std::to_string(s) + ")";
}

StirlingTriangle::StirlingTriangle(OrderSignature signature, std::vector<std::vector<ExactInt>> rows)
    : sig_(signature.canonical()), rows_(std::move(rows)) {
    for (unsigned n = 1; n <= rows_.size(); ++n) {
        const auto& row = rows_[n - 1];
        if (row.size() != (n - 1) * sig_.s + 1)
            throw ConsistencyError("triangle row " + std::to_string(n) + " has wrong length");
        for (const auto& v : row)
            if (v <= 0) throw ConsistencyError("triangle entry is not a positive integer");
    }
}

const std::vector<ExactInt>& StirlingTriangle::row(unsigned n) const {
    if (n < 1 || n > rows_.size()) throw std::out_of_range("triangle row out of range");
    return rows_[n - 1];
}

ExactInt StirlingTriangle::at(unsigned n, long k) const {
    if (n == 0) return k == 0 ? 1 : 0;
    if (k < static_cast<long>(k_min()) || k > static_cast<long>(k_max(n))) return 0;
    return row(n)[static_cast<std::size_t>(k) - k_min()];
}

ExactInt StirlingTriangle::row_sum(unsigned n) const {
    if (n == 0) return 1;
    ExactInt sum = 0;
    for (const auto& v : row(n)) sum += v;
    return sum;
}

namespace {

void require_canonical(const OrderSignature& sig, const char* what) {
    if (!sig.is_canonical()) throw DomainError(std::string(what) + " requires r >= s");
}

bool in_support(const OrderSignature& sig, unsigned n, long k) {
    return k >= static_cast<long>(sig.s) && k <= static_cast<long>(n) * sig.s;
}

// Divides by k! last and insists the division is exact.
ExactInt divide_by_factorial(const ExactInt& numerator, unsigned k) {
    const ExactInt kf = factorial(k);
    if (!mpz_divisible_p(numerator.get_mpz_t(), kf.get_mpz_t()))
        throw ConsistencyError("alternating sum not divisible by " + std::to_string(k) + "!");
    ExactInt q;
    mpz_divexact(q.get_mpz_t(), numerator.get_mpz_t(), kf.get_mpz_t());
    return q;
}

ExactInt shifted_falling_product(const OrderSignature& sig, unsigned n, unsigned p) {
    ExactInt prod = 1;
    for (unsigned j = 1; j <= n && prod != 0; ++j)
        prod *= falling_factorial(ExactInt(static_cast<unsigned long>(p + (j - 1) * (sig.r - sig.s))), sig.s);
    return prod;
}

}  // namespace

ExactInt stirling_sum(const OrderSignature& sig, unsigned n, long k) {
    require_canonical(sig, "stirling_sum");
    if (n < 1) throw DomainError("stirling_sum requires n >= 1");
    if (!in_support(sig, n, k)) return 0;
    const auto kk = static_cast<unsigned>(k);
    ExactInt sum = 0;
    for (unsigned p = sig.s; p <= kk; ++p)
        sum += sign_power(p) * binomial(kk, p) * shifted_falling_product(sig, n, p);
    return sign_power(k) * divide_by_factorial(sum, kk);
}

ExactInt stirling_operator(const OrderSignature& sig, unsigned n, long k) {
    require_canonical(sig, "stirling_operator");
    if (n < 1) throw DomainError("stirling_operator requires n >= 1");
    if (!in_support(sig, n, k)) return 0;
    const auto kk = static_cast<unsigned>(k);
    // (1 - x)^k with its monomials below x^s removed
    DensePoly poly = DensePoly::binomial_power(1, -1, kk);
    for (unsigned p = 0; p < sig.s; ++p)
        poly -= DensePoly::monomial(ExactRat(binomial(kk, p) * sign_power(p)), p);
    for (unsigned step = 0; step < n; ++step) poly = poly.derivative(sig.s).shifted(sig.r);
    const ExactRat at_one = poly.evaluate(1);
    if (!is_integer(at_one)) throw ConsistencyError("operator form produced a non-integer");
    return sign_power(k) * divide_by_factorial(at_one.get_num(), kk);
}

StirlingTriangle stirling_diag_recurrence(unsigned r, unsigned n_max) {
    if (r < 1) throw DomainError("stirling_diag_recurrence requires r >= 1");
    // rows[n-1][k - r], k = r .. n r
    std::vector<std::vector<ExactInt>> rows;
    if (n_max == 0) return StirlingTriangle(OrderSignature(r, r), {});
    rows.push_back({ExactInt(1)});
    auto prev_at = [&](unsigned n, long k) -> ExactInt {
        if (k < static_cast<long>(r) || k > static_cast<long>(n * r)) return 0;
        return rows[n - 1][static_cast<std::size_t>(k) - r];
    };
    std::vector<ExactInt> falling_r(r + 1);
    for (unsigned p = 0; p <= r; ++p) falling_r[p] = falling_factorial(ExactInt(r), p);
    for (unsigned n = 1; n < n_max; ++n) {
        std::vector<ExactInt> next;
        for (long k = r; k <= static_cast<long>((n + 1) * r); ++k) {
            ExactInt v = 0;
            for (unsigned p = 0; p <= r; ++p) {
                const long index = k + static_cast<long>(p) - static_cast<long>(r);
                if (index < 0) continue;
                v += binomial(static_cast<unsigned>(index), p) * falling_r[p] * prev_at(n, index);
            }
            next.push_back(std::move(v));
        }
        rows.push_back(std::move(next));
    }
    return StirlingTriangle(OrderSignature(r, r), std::move(rows));
}

ExactInt stirling_diag_sum(unsigned r, unsigned n, long k) {
    if (r < 1) throw DomainError("stirling_diag_sum requires r >= 1");
    if (n < 1) throw DomainError("stirling_diag_sum requires n >= 1");
    if (k < static_cast<long>(r) || k > static_cast<long>(n) * r) return 0;
    const auto kk = static_cast<unsigned>(k);
    ExactInt sum = 0;
    for (unsigned p = r; p <= kk; ++p) {
        ExactInt term;
        const ExactInt base = falling_factorial(ExactInt(p), r);
        mpz_pow_ui(term.get_mpz_t(), base.get_mpz_t(), n);
        sum += sign_power(p) * binomial(kk, p) * term;
    }
    return sign_power(k) * divide_by_factorial(sum, kk);
}

ExactInt stirling(const OrderSignature& sig, unsigned n, long k) {
    if (n == 0) return k == 0 ? 1 : 0;
    return stirling_sum(sig.canonical(), n, k);
}

ExactInt stirling_classical(unsigned n, long k) {
    if (n == 0) return k == 0 ? 1 : 0;
    if (k < 1 || k > static_cast<long>(n)) return 0;
    const auto kk = static_cast<unsigned>(k);
    ExactInt sum = 0;
    for (unsigned p = 1; p <= kk; ++p) {
        ExactInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), p, n);
        sum += sign_power(p) * binomial(kk, p) * power;
    }
    return sign_power(k) * divide_by_factorial(sum, kk);
}

ExactInt lah(unsigned n, unsigned k) {
    if (k < 1 || k > n) throw DomainError("lah requires 1 <= k <= n");
    return factorial(n) / factorial(k) * binomial(n - 1, k - 1);
}

ExactInt anti_stirling(const OrderSignature& sig, unsigned n, long k) {
    const OrderSignature c = sig.canonical();
    if (n < 1) throw DomainError("anti_stirling requires n >= 1");
    if (k < 0 || k > static_cast<long>(n) * c.s) return 0;
    return stirling_sum(c, n + 1, k + c.s);
}

StirlingTriangle stirling_triangle(const OrderSignature& sig, unsigned n_max, StirlingAlgorithm algorithm) {
    const OrderSignature c = sig.canonical();
    if (algorithm == StirlingAlgorithm::diagonal_recurrence) {
        if (!c.is_diagonal()) throw DomainError("the diagonal recurrence requires r == s");
        return stirling_diag_recurrence(c.r, n_max);
    }
    if (algorithm == StirlingAlgorithm::diagonal_sum && !c.is_diagonal())
        throw DomainError("the diagonal sum requires r == s");
    std::vector<std::vector<ExactInt>> rows;
    for (unsigned n = 1; n <= n_max; ++n) {
        std::vector<ExactInt> row;
        for (long k = c.s; k <= static_cast<long>(n * c.s); ++k) {
            switch (algorithm) {
                case StirlingAlgorithm::finite_sum: row.push_back(stirling_sum(c, n, k)); break;
                case StirlingAlgorithm::operator_form: row.push_back(stirling_operator(c, n, k)); break;
                case StirlingAlgorithm::diagonal_sum: row.push_back(stirling_diag_sum(c.r, n, k)); break;
                case StirlingAlgorithm::diagonal_recurrence: break;
            }
        }
        rows.push_back(std::move(row));
    }
    return StirlingTriangle(c, std::move(rows));
}

}  // namespace bosonorder
