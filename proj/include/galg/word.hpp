#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "galg/group.hpp"

namespace galg {

/// Ambient free object for words: F_n when `constants` is null, otherwise the
/// free product G * F_n with G = *constants.
struct WordContext {
  std::size_t nvars = 1;
  GroupPtr constants;

  static WordContext free(std::size_t nvars);
  static WordContext with_constants(std::size_t nvars, GroupPtr group);

  bool coefficient_mode() const noexcept { return constants != nullptr; }
  bool operator==(const WordContext& other) const noexcept {
    return nvars == other.nvars && same_group(constants, other.constants);
  }
};

enum class LetterKind : std::uint8_t { variable, constant };

/// One syllable of a word. Variables use 0-based indices (x1 is index 0) and a
/// nonzero exponent; constants carry the element index and exponent 1.
struct Letter {
  LetterKind kind = LetterKind::variable;
  std::uint32_t index = 0;
  std::int64_t exponent = 1;

  auto operator<=>(const Letter&) const = default;
};

/// A freely reduced word. Adjacent syllables never share kind and index, and
/// adjacent constants are always multiplied out in G.
class Word {
 public:
  explicit Word(WordContext context) : context_(std::move(context)) {}

  /// x_{index+1}^exponent
  static Word variable(const WordContext& context, std::size_t index, std::int64_t exponent = 1);
  static Word constant(const WordContext& context, Elem element);
  /// Free reduction of an arbitrary letter sequence; constant letters may carry
  /// any exponent here.
  static Word reduce(const WordContext& context, std::span<const Letter> raw);

  const WordContext& context() const noexcept { return context_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  /// Sum of |exponent| over variable syllables plus the number of constants.
  std::size_t length() const noexcept;
  bool has_constants() const noexcept;

  Word inverse() const;
  Word pow(std::int64_t k) const;
  Word operator*(const Word& rhs) const;

  /// Canonical text in the word grammar; the empty word prints as `1`.
  std::string to_string() const;

  bool operator==(const Word& other) const noexcept { return letters_ == other.letters_; }
  bool operator<(const Word& other) const noexcept { return letters_ < other.letters_; }

 private:
  void push(Letter letter);

  WordContext context_;
  std::vector<Letter> letters_;
};

/// [a,b] = a^-1 b^-1 a b
Word commutator(const Word& a, const Word& b);

/// Parses the word grammar
///
///     word := term ('*'? term)*
///     term := atom ('^' integer)?
///     atom := 'x' digits | 'g' digits | '[' word ',' word ']' | '(' word ')' | '1'
///
/// Throws ParseError with the 0-based character position.
Word parse_word(std::string_view text, const WordContext& context);

/// Evaluates `word` at `tuple` in `group`. Constants map through
/// `constant_image` when given (an embedding of the coefficient group into
/// `group`), otherwise `group` must be the coefficient group itself.
Elem evaluate(const Word& word, std::span<const Elem> tuple, const FiniteGroup& group,
              std::span<const Elem> constant_image = {});

/// p ~ q, kept together with its normal form p q^-1.
struct Equation {
  Word left;
  Word right;
  Word normalized;

  Equation(Word lhs, Word rhs);
  explicit Equation(Word lhs);
  std::string to_string() const;
};

/// `<word> [= <word>]`; a missing right side means `= 1`.
Equation parse_equation(std::string_view text, const WordContext& context);

/// Endomorphism of the ambient free object: x_i -> images[i], constants fixed.
struct EndoSpec {
  WordContext context;
  std::vector<Word> images;

  EndoSpec(WordContext ctx, std::vector<Word> imgs);
  static EndoSpec identity(const WordContext& context);
  std::string to_string() const;
};

Word substitute(const Word& word, const EndoSpec& endo);

/// Left-normed commutators [x_i1, x_i2, ..., x_iw] with i1 < i2 and
/// i1 <= i3 <= ... <= iw, in lexicographic order of the index sequence.
std::vector<Word> basic_commutators(std::size_t weight, const WordContext& context);

/// Visits every reduced variable-only word of length <= maxlen in
/// length-then-lexicographic order (x1 < x1^-1 < x2 < ...). Stops early when
/// the visitor returns false.
void for_each_word(const WordContext& context, std::size_t maxlen,
                   const std::function<bool(const Word&)>& visit);
std::vector<Word> enumerate_words(const WordContext& context, std::size_t maxlen);

/// Number of reduced words of length <= maxlen over n variables:
/// 1 + sum_{k=1..maxlen} 2n (2n-1)^(k-1).
std::uint64_t count_words(std::size_t nvars, std::size_t maxlen);

}  // namespace galg
