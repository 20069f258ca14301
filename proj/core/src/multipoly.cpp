// SPDX-License-Identifier: Apache-2.0
#include <polygap/errors.hpp>
#include <polygap/multipoly.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace polygap {

namespace {

constexpr std::array<const char*, kVarCount> kVarNames{"a", "b", "c", "d", "e", "f", "x1", "x2", "x3", "x4", "x5"};

unsigned degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

}  // namespace

const char* var_name(Var var) { return kVarNames[static_cast<std::size_t>(var)]; }

Var parse_var(std::string_view name) {
  std::string key(name);
  key.erase(std::remove(key.begin(), key.end(), '_'), key.end());
  for (std::size_t k = 0; k < kVarCount; ++k) {
    if (key == kVarNames[k]) return static_cast<Var>(k);
  }
  throw UsageError("unknown variable '" + std::string(name) + "'");
}

bool GradedLexLess::operator()(const Exponents& lhs, const Exponents& rhs) const {
  const unsigned dl = degree(lhs);
  const unsigned dr = degree(rhs);
  if (dl != dr) return dl < dr;
  return lhs < rhs;
}

MultiPoly::MultiPoly(const Rational& constant) { add_term(Exponents{}, constant); }

MultiPoly MultiPoly::variable(Var var) {
  Exponents e{};
  e[static_cast<std::size_t>(var)] = 1;
  MultiPoly p;
  p.add_term(e, Rational(1));
  return p;
}

void MultiPoly::add_term(const Exponents& monomial, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MultiPoly::constant_term() const { return coefficient(Exponents{}); }

Rational MultiPoly::coefficient(const Exponents& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPoly::total_degree() const { return terms_.empty() ? 0 : degree(terms_.rbegin()->first); }

bool MultiPoly::uses(Var var) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const auto& term) { return term.first[static_cast<std::size_t>(var)] > 0; });
}

bool MultiPoly::all_coefficients_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& term) { return term.second >= 0; });
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [monomial, coefficient] : other.terms_) add_term(monomial, coefficient);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [monomial, coefficient] : other.terms_) add_term(monomial, Rational(-coefficient));
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  MultiPoly product;
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) {
      Exponents m;
      for (std::size_t k = 0; k < kVarCount; ++k) m[k] = static_cast<std::uint8_t>(ml[k] + mr[k]);
      product.add_term(m, Rational(cl * cr));
    }
  }
  return product;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly operator-(const MultiPoly& p) { return p.scaled(Rational(-1)); }

MultiPoly MultiPoly::scaled(const Rational& factor) const {
  MultiPoly out;
  for (const auto& [monomial, coefficient] : terms_) out.add_term(monomial, Rational(coefficient * factor));
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(const std::map<Var, MultiPoly>& replacements) const {
  MultiPoly out;
  for (const auto& [monomial, coefficient] : terms_) {
    MultiPoly term(coefficient);
    Exponents kept{};
    for (std::size_t k = 0; k < kVarCount; ++k) {
      if (monomial[k] == 0) continue;
      auto it = replacements.find(static_cast<Var>(k));
      if (it == replacements.end()) {
        kept[k] = monomial[k];
      } else {
        term *= it->second.pow(monomial[k]);
      }
    }
    MultiPoly rest;
    rest.add_term(kept, Rational(1));
    out += term * rest;
  }
  return out;
}

Rational MultiPoly::eval(const std::map<Var, Rational>& point) const {
  Rational total(0);
  for (const auto& [monomial, coefficient] : terms_) {
    Rational value = coefficient;
    for (std::size_t k = 0; k < kVarCount; ++k) {
      if (monomial[k] == 0) continue;
      auto it = point.find(static_cast<Var>(k));
      if (it == point.end()) throw UsageError(std::string("no value for variable '") + kVarNames[k] + "'");
      for (unsigned p = 0; p < monomial[k]; ++p) value *= it->second;
    }
    total += value;
  }
  return total;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [monomial, coefficient] : terms_) {
    const bool negative = coefficient < 0;
    const Rational magnitude = negative ? Rational(-coefficient) : coefficient;
    if (first) {
      out << (negative ? "-" : "");
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::string factors;
    for (std::size_t k = 0; k < kVarCount; ++k) {
      if (monomial[k] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += kVarNames[k];
      if (monomial[k] > 1) factors += '^' + std::to_string(monomial[k]);
    }
    if (factors.empty()) {
      out << polygap::to_string(magnitude);
    } else if (magnitude == 1) {
      out << factors;
    } else {
      out << polygap::to_string(magnitude) << '*' << factors;
    }
  }
  return out.str();
}

MultiPoly sym_wedge(const SymVec2& p, const SymVec2& q) { return p.u * q.v - p.v * q.u; }

// --- parser ---------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, const PolyEnvironment& env) : text_(text), env_(env) {}

  MultiPoly parse() {
    MultiPoly result = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw UsageError("cannot parse polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                     ": " + message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor(char ch) const {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '(';
  }

  MultiPoly expression() {
    MultiPoly value = signed_term();
    while (true) {
      const char ch = peek();
      if (ch == '+') {
        ++pos_;
        value += signed_term();
      } else if (ch == '-') {
        ++pos_;
        value -= signed_term();
      } else {
        return value;
      }
    }
  }

  MultiPoly signed_term() {
    if (peek() == '-') {
      ++pos_;
      return -signed_term();
    }
    if (peek() == '+') {
      ++pos_;
      return signed_term();
    }
    return term();
  }

  MultiPoly term() {
    MultiPoly value = power();
    while (true) {
      const char ch = peek();
      if (ch == '*') {
        ++pos_;
        value *= power();
      } else if (ch == '/') {
        ++pos_;
        const MultiPoly divisor = power();
        if (divisor.total_degree() != 0 || divisor.is_zero()) fail("division only by a nonzero constant");
        value = value.scaled(Rational(1 / divisor.constant_term()));
      } else if (starts_factor(ch)) {
        value *= power();
      } else {
        return value;
      }
    }
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an integer exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MultiPoly atom() {
    const char ch = peek();
    if (ch == '(') {
      ++pos_;
      MultiPoly inner = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return number();
    if (std::isalpha(static_cast<unsigned char>(ch))) return identifier();
    fail(ch == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, ch) + "'");
  }

  MultiPoly number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return MultiPoly(parse_rational(text_.substr(start, pos_ - start)));
  }

  // Uppercase names are a letter run looked up in the environment. Lowercase
  // letters are single variables so that "ab^2" is a*b^2; a numeric suffix
  // ("_1" or "1") belongs to the letter before it.
  MultiPoly identifier() {
    const std::size_t start = pos_;
    const bool upper = std::isupper(static_cast<unsigned char>(text_[pos_]));
    if (upper) {
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    } else {
      ++pos_;
    }
    const std::string letters(text_.substr(start, pos_ - start));
    std::string suffix;
    std::size_t probe = pos_;
    if (probe < text_.size() && text_[probe] == '_') ++probe;
    const std::size_t digits_start = probe;
    while (probe < text_.size() && std::isdigit(static_cast<unsigned char>(text_[probe]))) ++probe;
    if (probe > digits_start) {
      suffix = std::string(text_.substr(digits_start, probe - digits_start));
      pos_ = probe;
    }

    if (upper) {
      auto it = env_.find(letters + suffix);
      if (it == env_.end()) fail("unknown symbol '" + letters + suffix + "'");
      return it->second;
    }
    const std::string name = letters + suffix;
    try {
      return MultiPoly::variable(parse_var(name));
    } catch (const UsageError&) {
      fail("unknown variable '" + name + "'");
    }
  }

  std::string_view text_;
  const PolyEnvironment& env_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const PolyEnvironment& env) { return Parser(text, env).parse(); }

}  // namespace polygap
