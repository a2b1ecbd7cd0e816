#include <algorithm>
#include <cctype>
#include <optional>
#include <string>

#include "foliate/polyalg.hpp"

namespace foliate {
namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const VariableNames& names)
      : text_(text), names_(names), nvars_(names.size()) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, 1, static_cast<int>(pos_) + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_factor() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const unsigned char c = static_cast<unsigned char>(text_[pos_]);
    return std::isalnum(c) || c == '_' || c == '(';
  }

  Polynomial expression() {
    Polynomial acc(nvars_);
    bool negate = false;
    if (peek('+') || peek('-')) negate = text_[pos_++] == '-';
    Polynomial t = term();
    acc += negate ? -t : t;
    while (peek('+') || peek('-')) {
      const bool minus = text_[pos_++] == '-';
      Polynomial next = term();
      if (minus) {
        acc -= next;
      } else {
        acc += next;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  unsigned exponent() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) fail("exponent too large");
    return static_cast<unsigned>(std::stoul(digits));
  }

  Polynomial factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const unsigned char c = static_cast<unsigned char>(text_[pos_]);
    Polynomial base(nvars_);
    std::optional<Monomial> fused_prefix;
    if (c == '(') {
      ++pos_;
      base = expression();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
    } else if (std::isdigit(c)) {
      base = Polynomial::constant(nvars_, number());
    } else if (std::isalpha(c) || c == '_') {
      // A fused identifier like `xy` becomes x*y; a trailing power binds to its last variable.
      auto vars = identifier();
      Monomial prefix(nvars_);
      for (std::size_t i = 0; i + 1 < vars.size(); ++i) prefix *= Monomial::variable(nvars_, vars[i]);
      fused_prefix = prefix;
      base = Polynomial::variable(nvars_, vars.back());
    } else {
      fail("unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
    }
    if (peek('^')) {
      ++pos_;
      base = base.pow(exponent());
    }
    if (fused_prefix) base = base.mul_term(1, *fused_prefix);
    return base;
  }

  Rational number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string num(text_.substr(start, pos_ - start));
    const std::size_t save = pos_;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_space();
      const std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (dstart == pos_) fail("expected an integer denominator after '/'");
      std::string den(text_.substr(dstart, pos_ - dstart));
      const mpz_class d(den);
      if (d == 0) fail("zero denominator");
      Rational q(mpz_class(num), d);
      q.canonicalize();
      return q;
    }
    pos_ = save;
    return Rational(mpz_class(num));
  }

  std::vector<std::size_t> identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view word = text_.substr(start, pos_ - start);
    std::vector<std::size_t> out;
    if (!split(word, out)) {
      pos_ = start;
      fail("unknown variable '" + std::string(word) + "'");
    }
    return out;
  }

  // Splits a word into declared variable names, preferring the longest match at each step.
  bool split(std::string_view word, std::vector<std::size_t>& out) const {
    if (word.empty()) return true;
    std::vector<std::size_t> order(names_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return names_[a].size() > names_[b].size(); });
    for (std::size_t idx : order) {
      const std::string& name = names_[idx];
      if (!name.empty() && word.substr(0, name.size()) == name) {
        out.push_back(idx);
        if (split(word.substr(name.size()), out)) return true;
        out.pop_back();
      }
    }
    return false;
  }

  std::string_view text_;
  const VariableNames& names_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VariableNames& names) {
  return PolyParser(text, names).parse();
}

}  // namespace foliate
