#include "bosonorder/boson.hpp"

#include "bosonorder/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <tuple>

namespace bosonorder {

std::string to_string(Generator g) { return g == Generator::create ? "ad" : "a"; }

OperatorWord OperatorWord::adjoint() const {
    OperatorWord out;
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        out.letters.push_back(*it == Generator::create ? Generator::annihilate : Generator::create);
    return out;
}

std::string OperatorWord::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i > 0) out += ' ';
        out += bosonorder::to_string(letters[i]);
    }
    return out;
}

NormalPolynomial NormalPolynomial::identity() { return monomial(0, 0); }

NormalPolynomial NormalPolynomial::monomial(unsigned creations, unsigned annihilations,
                                            const ExactRat& coefficient) {
    NormalPolynomial p;
    p.add_term({creations, annihilations}, coefficient);
    return p;
}

ExactRat NormalPolynomial::coefficient(unsigned creations, unsigned annihilations) const {
    auto it = terms_.find({creations, annihilations});
    return it == terms_.end() ? ExactRat(0) : it->second;
}

void NormalPolynomial::add_term(const Monomial& m, const ExactRat& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

NormalPolynomial& NormalPolynomial::operator+=(const NormalPolynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

NormalPolynomial& NormalPolynomial::operator-=(const NormalPolynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

NormalPolynomial& NormalPolynomial::operator*=(const ExactRat& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

NormalPolynomial operator*(const NormalPolynomial& lhs, const NormalPolynomial& rhs) {
    // (a^dag)^i a^j (a^dag)^k a^l = (a^dag)^i N{a^j (a^dag)^k} a^l
    std::map<std::pair<unsigned, unsigned>, NormalPolynomial> cross;
    NormalPolynomial out;
    for (const auto& [m1, c1] : lhs.terms()) {
        for (const auto& [m2, c2] : rhs.terms()) {
            const auto key = std::make_pair(m1.annihilations, m2.creations);
            auto it = cross.find(key);
            if (it == cross.end()) {
                OperatorWord w;
                w.letters.assign(m1.annihilations, Generator::annihilate);
                w.letters.insert(w.letters.end(), m2.creations, Generator::create);
                it = cross.emplace(key, normal_order_word(w, kNoWordCap)).first;
            }
            const ExactRat c = c1 * c2;
            for (const auto& [m, cm] : it->second.terms())
                out.add_term({m1.creations + m.creations, m.annihilations + m2.annihilations}, c * cm);
        }
    }
    return out;
}

NormalPolynomial NormalPolynomial::adjoint() const {
    NormalPolynomial out;
    for (const auto& [m, c] : terms_) out.add_term({m.annihilations, m.creations}, c);
    return out;
}

std::vector<WeightedWord> NormalPolynomial::to_words() const {
    std::vector<WeightedWord> out;
    for (const auto& [m, c] : terms_) {
        OperatorWord w;
        w.letters.assign(m.creations, Generator::create);
        w.letters.insert(w.letters.end(), m.annihilations, Generator::annihilate);
        out.push_back({c, std::move(w)});
    }
    return out;
}

namespace {

std::string power_string(const char* base, unsigned exponent) {
    if (exponent == 1) return base;
    return std::string(base) + "^" + std::to_string(exponent);
}

}  // namespace

std::string NormalPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const ExactRat magnitude = abs(c);
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        std::vector<std::string> parts;
        const bool unit_operator = m.creations == 0 && m.annihilations == 0;
        if (magnitude != 1 || unit_operator) parts.push_back(magnitude.get_str());
        if (m.creations > 0) parts.push_back(power_string("ad", m.creations));
        if (m.annihilations > 0) parts.push_back(power_string("a", m.annihilations));
        for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? " " : "") << parts[i];
    }
    return out.str();
}

namespace {

// Worklist key. Both rewrites strictly decrease (length, inversions), so
// popping the largest key guarantees every contribution to a word has been
// merged before that word is expanded.
struct WordKey {
    std::size_t length;
    std::size_t inversions;
    std::string letters;  // 'a' annihilate, 'd' create

    friend auto operator<=>(const WordKey&, const WordKey&) = default;
};

std::size_t count_inversions(const std::string& letters) {
    std::size_t annihilators_seen = 0, inversions = 0;
    for (char c : letters) {
        if (c == 'a')
            ++annihilators_seen;
        else
            inversions += annihilators_seen;
    }
    return inversions;
}

WordKey make_key(std::string letters) {
    WordKey key{letters.size(), count_inversions(letters), std::move(letters)};
    return key;
}

}  // namespace

NormalPolynomial normal_order_terms(std::span<const WeightedWord> terms, std::size_t cap) {
    std::map<WordKey, ExactRat, std::greater<>> work;
    for (const auto& t : terms) {
        if (t.word.size() > cap)
            throw ResourceError("operator word of length " + std::to_string(t.word.size()) +
                                " exceeds the rewrite cap of " + std::to_string(cap));
        std::string letters;
        for (Generator g : t.word.letters) letters += g == Generator::create ? 'd' : 'a';
        work[make_key(std::move(letters))] += t.coefficient;
    }

    NormalPolynomial out;
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        const WordKey& key = node.key();
        const ExactRat& coefficient = node.mapped();
        if (coefficient == 0) continue;
        if (key.inversions == 0) {
            const auto creations = static_cast<unsigned>(std::count(key.letters.begin(), key.letters.end(), 'd'));
            out.add_term({creations, static_cast<unsigned>(key.length) - creations}, coefficient);
            continue;
        }
        const std::size_t i = key.letters.find("ad");
        std::string swapped = key.letters;
        swapped[i] = 'd';
        swapped[i + 1] = 'a';
        work[WordKey{key.length, key.inversions - 1, std::move(swapped)}] += coefficient;
        std::string contracted = key.letters;
        contracted.erase(i, 2);
        work[make_key(std::move(contracted))] += coefficient;
    }
    return out;
}

NormalPolynomial normal_order_word(const OperatorWord& word, std::size_t cap) {
    const WeightedWord single{1, word};
    return normal_order_terms(std::span(&single, 1), cap);
}

namespace {

OperatorWord repeated_blocks(Generator first, unsigned first_count, Generator second, unsigned second_count,
                             unsigned n, std::size_t cap) {
    const std::size_t length = static_cast<std::size_t>(n) * (first_count + second_count);
    if (length > cap)
        throw ResourceError("word of length " + std::to_string(length) + " exceeds the cap of " +
                            std::to_string(cap));
    OperatorWord w;
    w.letters.reserve(length);
    for (unsigned b = 0; b < n; ++b) {
        w.letters.insert(w.letters.end(), first_count, first);
        w.letters.insert(w.letters.end(), second_count, second);
    }
    return w;
}

}  // namespace

OperatorWord word_from_power(const OrderSignature& sig, unsigned n, std::size_t cap) {
    return repeated_blocks(Generator::create, sig.r, Generator::annihilate, sig.s, n, cap);
}

OperatorWord antinormal_word(const OrderSignature& sig, unsigned n, std::size_t cap) {
    return repeated_blocks(Generator::annihilate, sig.s, Generator::create, sig.r, n, cap);
}

NormalPolynomial normal_order_power(const OrderSignature& sig, unsigned n) {
    if (n == 0) return NormalPolynomial::identity();
    const OrderSignature c = sig.canonical();
    NormalPolynomial out;
    for (unsigned k = c.s; k <= n * c.s; ++k) {
        const ExactRat coefficient(stirling_sum(c, n, k));
        if (sig.r >= sig.s)
            out.add_term({n * (sig.r - sig.s) + k, k}, coefficient);
        else
            out.add_term({k, k + n * (sig.s - sig.r)}, coefficient);
    }
    return out;
}

NormalPolynomial antinormal_power(const OrderSignature& sig, unsigned n) {
    if (n == 0) return NormalPolynomial::identity();
    if (!sig.is_canonical()) return antinormal_power(sig.canonical(), n).adjoint();
    NormalPolynomial out;
    for (unsigned k = 0; k <= n * sig.s; ++k)
        out.add_term({n * (sig.r - sig.s) + k, k}, ExactRat(anti_stirling(sig, n, k)));
    return out;
}

NormalPolynomial taylor_normal_order(const TaylorSpec& spec, const OrderSignature& sig) {
    const unsigned cutoff = spec.cutoff();
    std::vector<NormalPolynomial> powers;
    for (unsigned m = 0; m <= cutoff; ++m) powers.push_back(normal_order_power(sig, m));

    NormalPolynomial out;
    for (unsigned k = 0; k < spec.coefficients.size(); ++k) {
        if (spec.coefficients[k] == 0) continue;
        if (spec.center == 0) {
            out += powers[k] * spec.coefficients[k];
            continue;
        }
        // [X - x0]^k = sum_m C(k,m) (-x0)^{k-m} X^m
        for (unsigned m = 0; m <= k; ++m) {
            const ExactRat weight = spec.coefficients[k] * ExactRat(binomial(k, m)) * pow(ExactRat(-spec.center), k - m);
            out += powers[m] * weight;
        }
    }
    return out;
}

std::complex<double> coherent_expectation(const NormalPolynomial& p, const CoherentPoint& pt) {
    std::complex<double> sum = 0.0;
    const std::complex<double> zbar = std::conj(pt.z);
    for (const auto& [m, c] : p.terms()) {
        std::complex<double> term = c.get_d();
        for (unsigned i = 0; i < m.creations; ++i) term *= zbar;
        for (unsigned j = 0; j < m.annihilations; ++j) term *= pt.z;
        sum += term;
    }
    return sum;
}

ExactRat coherent_expectation(const NormalPolynomial& p, const ExactRat& z) {
    ExactRat sum = 0;
    for (const auto& [m, c] : p.terms()) sum += c * pow(z, m.creations + m.annihilations);
    return sum;
}

}  // namespace bosonorder
