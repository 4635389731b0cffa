#include "galg/word.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "galg/error.hpp"

namespace galg {

namespace {

// Guards against words blown up by large exponents on long subwords.
constexpr std::size_t kMaxWordSyllables = 1'000'000;

}  // namespace

WordContext WordContext::free(std::size_t nvars) {
  if (nvars == 0) throw InputError("word context needs at least one variable");
  return WordContext{nvars, nullptr};
}

WordContext WordContext::with_constants(std::size_t nvars, GroupPtr group) {
  if (nvars == 0) throw InputError("word context needs at least one variable");
  if (!group) throw InputError("coefficient mode needs a constant group");
  return WordContext{nvars, std::move(group)};
}

void Word::push(Letter letter) {
  if (letter.kind == LetterKind::variable) {
    if (letter.exponent == 0) return;
  } else {
    const FiniteGroup& g = *context_.constants;
    letter.index = g.pow(letter.index, letter.exponent);
    letter.exponent = 1;
    if (letter.index == g.identity()) return;
  }
  if (!letters_.empty() && letters_.back().kind == letter.kind && letters_.back().index == letter.index &&
      letter.kind == LetterKind::variable) {
    letters_.back().exponent += letter.exponent;
    if (letters_.back().exponent == 0) letters_.pop_back();
    return;
  }
  if (!letters_.empty() && letters_.back().kind == LetterKind::constant &&
      letter.kind == LetterKind::constant) {
    const FiniteGroup& g = *context_.constants;
    letters_.back().index = g.mul(letters_.back().index, letter.index);
    if (letters_.back().index == g.identity()) letters_.pop_back();
    return;
  }
  letters_.push_back(letter);
  if (letters_.size() > kMaxWordSyllables) throw InputError("word too long");
}

Word Word::variable(const WordContext& context, std::size_t index, std::int64_t exponent) {
  if (index >= context.nvars)
    throw InputError("variable x" + std::to_string(index + 1) + " exceeds arity " +
                     std::to_string(context.nvars));
  Word w(context);
  w.push({LetterKind::variable, static_cast<std::uint32_t>(index), exponent});
  return w;
}

Word Word::constant(const WordContext& context, Elem element) {
  if (!context.coefficient_mode()) throw InputError("constant used without coefficient mode");
  if (element >= context.constants->order())
    throw InputError("constant g" + std::to_string(element) + " out of range for group of order " +
                     std::to_string(context.constants->order()));
  Word w(context);
  w.push({LetterKind::constant, element, 1});
  return w;
}

Word Word::reduce(const WordContext& context, std::span<const Letter> raw) {
  Word w(context);
  for (const Letter& l : raw) {
    if (l.kind == LetterKind::variable && l.index >= context.nvars)
      throw InputError("variable index out of range");
    if (l.kind == LetterKind::constant &&
        (!context.coefficient_mode() || l.index >= context.constants->order()))
      throw InputError("constant letter outside coefficient group");
    w.push(l);
  }
  return w;
}

std::size_t Word::length() const noexcept {
  std::size_t n = 0;
  for (const Letter& l : letters_)
    n += l.kind == LetterKind::variable ? static_cast<std::size_t>(std::llabs(l.exponent)) : 1;
  return n;
}

bool Word::has_constants() const noexcept {
  for (const Letter& l : letters_)
    if (l.kind == LetterKind::constant) return true;
  return false;
}

Word Word::inverse() const {
  Word w(context_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    Letter l = *it;
    if (l.kind == LetterKind::variable)
      l.exponent = -l.exponent;
    else
      l.index = context_.constants->inv(l.index);
    w.letters_.push_back(l);
  }
  return w;
}

Word Word::operator*(const Word& rhs) const {
  Word w = *this;
  for (const Letter& l : rhs.letters_) w.push(l);
  return w;
}

Word Word::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  if (letters_.size() == 1 && letters_[0].kind == LetterKind::variable) {
    Word w(context_);
    w.push({LetterKind::variable, letters_[0].index, letters_[0].exponent * k});
    return w;
  }
  if (!letters_.empty() && static_cast<std::uint64_t>(k) * letters_.size() > kMaxWordSyllables)
    throw InputError("word power too long");
  Word result(context_);
  Word base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += '*';
    const Letter& l = letters_[i];
    if (l.kind == LetterKind::variable) {
      out += 'x' + std::to_string(l.index + 1);
      if (l.exponent != 1) out += '^' + std::to_string(l.exponent);
    } else {
      out += 'g' + std::to_string(l.index);
    }
  }
  return out;
}

Word commutator(const Word& a, const Word& b) {
  return a.inverse() * b.inverse() * a * b;
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, const WordContext& context, std::size_t offset)
      : text_(text), context_(context), offset_(offset) {}

  Word parse() {
    Word w = word();
    skip_space();
    if (pos_ != text_.size()) throw error("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  ParseError error(const std::string& message) const { return ParseError(message, offset_ + pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_term_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == 'x' || c == 'g' || c == '[' || c == '(' || c == '1';
  }

  Word word() {
    Word w = term();
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        w = w * term();
      } else if (at_term_start()) {
        w = w * term();
      } else {
        return w;
      }
    }
  }

  Word term() {
    Word base = atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      return base.pow(integer());
    }
    return base;
  }

  std::int64_t integer() {
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    std::uint64_t value = digits("exponent");
    if (value > 1'000'000'000) throw error("exponent too large");
    return negative ? -static_cast<std::int64_t>(value) : static_cast<std::int64_t>(value);
  }

  std::uint64_t digits(const char* what) {
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (end == text_.data() + start) throw error(std::string("expected digits for ") + what);
    if (ec != std::errc()) throw error(std::string(what) + " out of range");
    pos_ = static_cast<std::size_t>(end - text_.data());
    return value;
  }

  Word atom() {
    skip_space();
    if (pos_ >= text_.size()) throw error("expected a term");
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      const std::uint64_t i = digits("variable index");
      if (i == 0 || i > context_.nvars) {
        pos_ = start;
        throw error("variable x" + std::to_string(i) + " outside x1..x" + std::to_string(context_.nvars));
      }
      return Word::variable(context_, static_cast<std::size_t>(i - 1));
    }
    if (c == 'g') {
      ++pos_;
      const std::uint64_t g = digits("constant index");
      if (!context_.coefficient_mode()) {
        pos_ = start;
        throw error("constant g" + std::to_string(g) + " used without coefficient mode");
      }
      if (g >= context_.constants->order()) {
        pos_ = start;
        throw error("constant g" + std::to_string(g) + " out of range for group of order " +
                    std::to_string(context_.constants->order()));
      }
      return Word::constant(context_, static_cast<Elem>(g));
    }
    if (c == '1') {
      ++pos_;
      return Word(context_);
    }
    if (c == '[') {
      ++pos_;
      Word a = word();
      expect(',');
      Word b = word();
      expect(']');
      return commutator(a, b);
    }
    if (c == '(') {
      ++pos_;
      Word a = word();
      expect(')');
      return a;
    }
    throw error("unexpected character '" + std::string(1, c) + "'");
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) throw error(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view text_;
  const WordContext& context_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const WordContext& context) {
  return WordParser(text, context, 0).parse();
}

Elem evaluate(const Word& word, std::span<const Elem> tuple, const FiniteGroup& group,
              std::span<const Elem> constant_image) {
  const WordContext& ctx = word.context();
  if (tuple.size() != ctx.nvars)
    throw InputError("tuple length " + std::to_string(tuple.size()) + " does not match arity " +
                     std::to_string(ctx.nvars));
  if (word.has_constants()) {
    if (constant_image.empty()) {
      if (ctx.constants.get() != &group && !(*ctx.constants == group))
        throw InputError("word constants do not belong to the evaluation group");
    } else if (constant_image.size() != ctx.constants->order()) {
      throw InputError("constant embedding has the wrong size");
    }
  }
  Elem acc = group.identity();
  for (const Letter& l : word.letters()) {
    Elem v;
    if (l.kind == LetterKind::variable)
      v = group.pow(tuple[l.index], l.exponent);
    else
      v = constant_image.empty() ? l.index : constant_image[l.index];
    acc = group.mul(acc, v);
  }
  return acc;
}

Equation::Equation(Word lhs, Word rhs)
    : left(std::move(lhs)), right(std::move(rhs)), normalized(left * right.inverse()) {
  if (!(left.context() == right.context())) throw InputError("equation sides use different contexts");
}

Equation::Equation(Word lhs) : Equation(lhs, Word(lhs.context())) {}

std::string Equation::to_string() const {
  if (right.empty()) return left.to_string();
  return left.to_string() + " = " + right.to_string();
}

Equation parse_equation(std::string_view text, const WordContext& context) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) return Equation(parse_word(text, context));
  if (text.find('=', eq + 1) != std::string_view::npos)
    throw ParseError("more than one '=' in equation", text.find('=', eq + 1));
  Word lhs = WordParser(text.substr(0, eq), context, 0).parse();
  Word rhs = WordParser(text.substr(eq + 1), context, eq + 1).parse();
  return Equation(std::move(lhs), std::move(rhs));
}

EndoSpec::EndoSpec(WordContext ctx, std::vector<Word> imgs) : context(std::move(ctx)), images(std::move(imgs)) {
  if (images.size() != context.nvars)
    throw InputError("endomorphism needs " + std::to_string(context.nvars) + " images, got " +
                     std::to_string(images.size()));
  for (const Word& w : images)
    if (!(w.context() == context)) throw InputError("endomorphism image in a different context");
}

EndoSpec EndoSpec::identity(const WordContext& context) {
  std::vector<Word> images;
  for (std::size_t i = 0; i < context.nvars; ++i) images.push_back(Word::variable(context, i));
  return EndoSpec(context, std::move(images));
}

std::string EndoSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) out += ", ";
    out += "x" + std::to_string(i + 1) + " -> " + images[i].to_string();
  }
  return out;
}

Word substitute(const Word& word, const EndoSpec& endo) {
  if (!(word.context() == endo.context)) throw InputError("substitution across different contexts");
  Word result(word.context());
  for (const Letter& l : word.letters()) {
    if (l.kind == LetterKind::variable)
      result = result * endo.images[l.index].pow(l.exponent);
    else
      result = result * Word::constant(word.context(), l.index);
  }
  return result;
}

std::vector<Word> basic_commutators(std::size_t weight, const WordContext& context) {
  if (weight < 2) throw InputError("basic commutators need weight >= 2");
  std::vector<Word> out;
  const std::size_t n = context.nvars;
  // i3..iw are nondecreasing and >= i1
  std::function<void(std::size_t, std::size_t, const Word&)> extend = [&](std::size_t lo, std::size_t left,
                                                                           const Word& w) {
    if (left == 0) {
      out.push_back(w);
      return;
    }
    for (std::size_t i = lo; i < n; ++i) extend(i, left - 1, commutator(w, Word::variable(context, i)));
  };
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t i2 = i1 + 1; i2 < n; ++i2)
      extend(i1, weight - 2, commutator(Word::variable(context, i1), Word::variable(context, i2)));
  return out;
}

void for_each_word(const WordContext& context, std::size_t maxlen,
                   const std::function<bool(const Word&)>& visit) {
  const std::size_t alphabet = 2 * context.nvars;
  std::vector<std::size_t> seq;
  bool stop = false;

  auto to_word = [&]() {
    std::vector<Letter> raw;
    raw.reserve(seq.size());
    for (std::size_t a : seq)
      raw.push_back({LetterKind::variable, static_cast<std::uint32_t>(a / 2), a % 2 ? -1 : 1});
    return Word::reduce(context, raw);
  };

  std::function<void(std::size_t)> grow = [&](std::size_t remaining) {
    if (stop) return;
    if (remaining == 0) {
      if (!visit(to_word())) stop = true;
      return;
    }
    for (std::size_t a = 0; a < alphabet && !stop; ++a) {
      if (!seq.empty() && (seq.back() ^ 1) == a) continue;
      seq.push_back(a);
      grow(remaining - 1);
      seq.pop_back();
    }
  };
  for (std::size_t len = 0; len <= maxlen && !stop; ++len) grow(len);
}

std::vector<Word> enumerate_words(const WordContext& context, std::size_t maxlen) {
  std::vector<Word> out;
  for_each_word(context, maxlen, [&](const Word& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

std::uint64_t count_words(std::size_t nvars, std::size_t maxlen) {
  std::uint64_t total = 1, layer = 2 * nvars;
  for (std::size_t k = 1; k <= maxlen; ++k) {
    total += layer;
    layer *= 2 * nvars - 1;
  }
  return total;
}

}  // namespace galg
