#include "bosonorder/exact.hpp"

#include "bosonorder/errors.hpp"

#include <cctype>

namespace bosonorder {

ExactRat make_rat(const ExactInt& numerator, const ExactInt& denominator) {
    if (denominator == 0) throw DomainError("zero denominator");
    ExactRat q(numerator, denominator);
    q.canonicalize();
    return q;
}

ExactRat parse_rat(const std::string& text) {
    if (text.empty()) throw DomainError("empty rational literal");
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    std::size_t int_end = digits(i);
    ExactRat value;
    if (int_end < text.size() && text[int_end] == '/') {
        std::size_t den_end = digits(int_end + 1);
        if (int_end == i || den_end == int_end + 1 || den_end != text.size())
            throw DomainError("malformed rational literal '" + text + "'");
        value = make_rat(ExactInt(text.substr(i, int_end - i)),
                         ExactInt(text.substr(int_end + 1)));
    } else if (int_end < text.size() && text[int_end] == '.') {
        std::size_t frac_end = digits(int_end + 1);
        if ((int_end == i && frac_end == int_end + 1) || frac_end != text.size())
            throw DomainError("malformed decimal literal '" + text + "'");
        std::string whole = text.substr(i, int_end - i);
        std::string frac = text.substr(int_end + 1);
        ExactInt scale = 1;
        for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
        ExactInt num = ExactInt(whole.empty() ? "0" : whole) * scale +
                       ExactInt(frac.empty() ? "0" : frac);
        value = make_rat(num, scale);
    } else {
        if (int_end == i || int_end != text.size())
            throw DomainError("malformed integer literal '" + text + "'");
        value = ExactRat(ExactInt(text.substr(i)));
    }
    return negative ? ExactRat(-value) : value;
}

std::string to_string(const ExactInt& value) { return value.get_str(); }

std::string to_string(const ExactRat& value) { return value.get_str(); }

ExactInt falling_factorial(const ExactInt& m, unsigned s) {
    ExactInt result = 1;
    for (unsigned i = 0; i < s; ++i) {
        result *= m - i;
        if (result == 0) break;
    }
    return result;
}

ExactInt factorial(unsigned n) {
    ExactInt result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

ExactInt binomial(unsigned n, long k) {
    if (k < 0 || k > static_cast<long>(n)) return 0;
    ExactInt result;
    mpz_bin_uiui(result.get_mpz_t(), n, static_cast<unsigned long>(k));
    return result;
}

ExactInt binomial_signed(const ExactInt& top, unsigned k) {
    ExactInt result;
    mpz_bin_ui(result.get_mpz_t(), top.get_mpz_t(), k);
    return result;
}

ExactRat binomial_rat(const ExactRat& alpha, unsigned k) {
    ExactRat result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= alpha - i;
        result /= i + 1;
    }
    return result;
}

ExactRat pow(const ExactRat& base, unsigned exponent) {
    ExactInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    // already coprime, so no canonicalization needed
    ExactRat result;
    mpq_set_num(result.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(result.get_mpq_t(), den.get_mpz_t());
    return result;
}

bool is_integer(const ExactRat& value) { return value.get_den() == 1; }

}  // namespace bosonorder
