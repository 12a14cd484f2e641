#pragma once

#include "bosonorder/boson.hpp"
#include "bosonorder/exact.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace bosonorder::expr {

// Surface syntax for boson operator expressions:
//
//   sum     := ['+'|'-'] product (('+'|'-') product)*
//   product := factor ('*'? factor)*
//   factor  := (scalar | atom | '(' sum ')') ('^' INT)?
//   atom    := 'a' | 'ad' | 'a^dag' | 'a†'
//   scalar  := INT | INT '/' INT | INT '.' INT
//
// Juxtaposition is the (non-commutative) operator product.

enum class TokenKind { annihilate, create, integer, rational, caret, plus, minus, star, lparen, rparen, end };

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t position;  // byte offset into the source
};

// Throws ParseError with the byte offset of the first unrecognized input.
std::vector<Token> tokenize(std::string_view src);

struct Ast {
    enum class Kind { sum, product, power, atom, scalar };

    Kind kind = Kind::scalar;
    std::vector<Ast> children;  // sum terms, product factors, or the power base
    unsigned exponent = 0;
    Generator atom = Generator::annihilate;
    ExactRat scalar = 1;

    static Ast make_scalar(ExactRat value);
    static Ast make_atom(Generator g);
    static Ast make_power(Ast base, unsigned exponent);
    static Ast make_product(std::vector<Ast> factors);
    static Ast make_sum(std::vector<Ast> terms);

    friend bool operator==(const Ast&, const Ast&) = default;
};

// Throws ParseError naming the position and what was expected.
Ast parse(const std::vector<Token>& tokens);
Ast parse(std::string_view src);

inline constexpr std::size_t kMaxLoweredTerms = 1u << 16;

// Distributes sums and scalars and expands powers into weighted words, keeping
// the operator order. Terms are not merged. ResourceError when a word exceeds
// `cap` letters or the expansion exceeds kMaxLoweredTerms terms.
std::vector<WeightedWord> lower(const Ast& ast, std::size_t cap = kDefaultWordCap);

// Prints a term list in the surface syntax so that lower(parse(text)) gives the
// same list back.
std::string format_terms(const std::vector<WeightedWord>& terms);

std::string to_string(TokenKind kind);

}  // namespace bosonorder::expr
