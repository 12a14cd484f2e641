#pragma once

#include "bosonorder/exact.hpp"
#include "bosonorder/stirling.hpp"

#include <complex>
#include <cstddef>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace bosonorder {

enum class Generator : unsigned char { annihilate, create };

// A product of a and a^dag read left to right; the empty word is the identity.
struct OperatorWord {
    std::vector<Generator> letters;

    std::size_t size() const noexcept { return letters.size(); }
    bool empty() const noexcept { return letters.empty(); }

    // Hermitian conjugate: reversed, with a <-> a^dag.
    OperatorWord adjoint() const;
    std::string to_string() const;

    friend bool operator==(const OperatorWord&, const OperatorWord&) = default;
    friend auto operator<=>(const OperatorWord&, const OperatorWord&) = default;
};

struct WeightedWord {
    ExactRat coefficient;
    OperatorWord word;

    friend bool operator==(const WeightedWord&, const WeightedWord&) = default;
};

// (a^dag)^creations a^annihilations
struct Monomial {
    unsigned creations = 0;
    unsigned annihilations = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Normally ordered operator sum_{(i,j)} c_ij (a^dag)^i a^j. Zero coefficients
// are never stored.
class NormalPolynomial {
public:
    using TermMap = std::map<Monomial, ExactRat>;

    NormalPolynomial() = default;

    static NormalPolynomial identity();
    static NormalPolynomial monomial(unsigned creations, unsigned annihilations,
                                     const ExactRat& coefficient = 1);

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    ExactRat coefficient(unsigned creations, unsigned annihilations) const;

    void add_term(const Monomial& m, const ExactRat& coefficient);

    NormalPolynomial& operator+=(const NormalPolynomial& other);
    NormalPolynomial& operator-=(const NormalPolynomial& other);
    NormalPolynomial& operator*=(const ExactRat& scalar);

    friend NormalPolynomial operator+(NormalPolynomial lhs, const NormalPolynomial& rhs) { return lhs += rhs; }
    friend NormalPolynomial operator-(NormalPolynomial lhs, const NormalPolynomial& rhs) { return lhs -= rhs; }
    friend NormalPolynomial operator*(NormalPolynomial lhs, const ExactRat& scalar) { return lhs *= scalar; }
    // Operator product; the cross terms a^j (a^dag)^k are re-ordered by the
    // rewriting oracle.
    friend NormalPolynomial operator*(const NormalPolynomial& lhs, const NormalPolynomial& rhs);
    friend bool operator==(const NormalPolynomial&, const NormalPolynomial&) = default;

    NormalPolynomial adjoint() const;

    // Each term as its operator word (a^dag)^i a^j.
    std::vector<WeightedWord> to_words() const;

    // "ad a + 3 ad^2 a^2"; "0" for the zero operator.
    std::string to_string() const;

private:
    TermMap terms_;
};

inline constexpr std::size_t kDefaultWordCap = 24;
inline constexpr std::size_t kNoWordCap = std::numeric_limits<std::size_t>::max();

// Brute-force normal ordering by rewriting the leftmost a a^dag pair into
// a^dag a + 1 until no such pair remains. ResourceError for words longer than cap.
NormalPolynomial normal_order_word(const OperatorWord& word, std::size_t cap = kDefaultWordCap);
NormalPolynomial normal_order_terms(std::span<const WeightedWord> terms, std::size_t cap = kDefaultWordCap);

// n blocks of r creations followed by s annihilations. ResourceError past cap.
OperatorWord word_from_power(const OrderSignature& sig, unsigned n, std::size_t cap = kDefaultWordCap);
// n blocks of s annihilations followed by r creations.
OperatorWord antinormal_word(const OrderSignature& sig, unsigned n, std::size_t cap = kDefaultWordCap);

// Normal form of [(a^dag)^r a^s]^n from the Stirling coefficients.
NormalPolynomial normal_order_power(const OrderSignature& sig, unsigned n);

// Normal form of [a^s (a^dag)^r]^n from the anti-Stirling coefficients.
// For r < s this is the adjoint of the (s, r) case.
NormalPolynomial antinormal_power(const OrderSignature& sig, unsigned n);

// Taylor data of F around center: coefficients[k] = F^{(k)}(center)/k!, k = 0..cutoff.
struct TaylorSpec {
    ExactRat center = 0;
    std::vector<ExactRat> coefficients;

    unsigned cutoff() const noexcept {
        return coefficients.empty() ? 0 : static_cast<unsigned>(coefficients.size() - 1);
    }
};

// N{ sum_k c_k [(a^dag)^r a^s - center]^k }, each power re-expanded binomially
// into normal_order_power terms. Exact for polynomial F; otherwise a truncation
// at the stated cutoff.
NormalPolynomial taylor_normal_order(const TaylorSpec& spec, const OrderSignature& sig);

struct CoherentPoint {
    std::complex<double> z;
};

// <z| p |z> = sum c_ij conj(z)^i z^j, in double precision.
std::complex<double> coherent_expectation(const NormalPolynomial& p, const CoherentPoint& pt);
// Exact value at a real rational z.
ExactRat coherent_expectation(const NormalPolynomial& p, const ExactRat& z);

std::string to_string(Generator g);

}  // namespace bosonorder
