#include "chordbracket/laurent.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace chordbracket {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw OverflowError("Laurent coefficient overflow in addition");
  return out;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw OverflowError("Laurent coefficient overflow in multiplication");
  return out;
}

} // namespace checked

namespace {

int checked_exp_add(int a, int b) {
  int out;
  if (__builtin_add_overflow(a, b, &out))
    throw OverflowError("Laurent exponent overflow");
  return out;
}

} // namespace

LaurentPoly::LaurentPoly(Coefficient constant) {
  if (constant != 0)
    terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(Coefficient coeff, Exponent exp) {
  LaurentPoly p;
  if (coeff != 0)
    p.terms_.emplace(exp, coeff);
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<Exponent, Coefficient>> &terms) {
  LaurentPoly p;
  for (const auto &[exp, coeff] : terms)
    p.add_term(exp, coeff);
  return p;
}

LaurentPoly::Coefficient LaurentPoly::coefficient(Exponent exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPoly::Exponent LaurentPoly::min_degree() const {
  if (terms_.empty())
    throw std::domain_error("min_degree of the zero polynomial");
  return terms_.begin()->first;
}

LaurentPoly::Exponent LaurentPoly::max_degree() const {
  if (terms_.empty())
    throw std::domain_error("max_degree of the zero polynomial");
  return terms_.rbegin()->first;
}

std::optional<int> LaurentPoly::span() const {
  if (terms_.empty())
    return std::nullopt;
  return terms_.rbegin()->first - terms_.begin()->first;
}

LaurentPoly LaurentPoly::mirror() const {
  LaurentPoly out;
  for (const auto &[exp, coeff] : terms_)
    out.terms_.emplace_hint(out.terms_.begin(), -exp, coeff);
  return out;
}

void LaurentPoly::add_term(Exponent exp, Coefficient coeff) {
  if (coeff == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(exp, coeff);
  if (inserted)
    return;
  it->second = checked::add(it->second, coeff);
  if (it->second == 0)
    terms_.erase(it);
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &rhs) {
  for (const auto &[exp, coeff] : rhs.terms_)
    add_term(exp, coeff);
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &rhs) {
  for (const auto &[exp, coeff] : rhs.terms_) {
    if (coeff == INT64_MIN)
      throw OverflowError("Laurent coefficient overflow in negation");
    add_term(exp, -coeff);
  }
  return *this;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly operator*(const LaurentPoly &lhs, const LaurentPoly &rhs) {
  LaurentPoly out;
  for (const auto &[e1, c1] : lhs.terms_)
    for (const auto &[e2, c2] : rhs.terms_)
      out.add_term(checked_exp_add(e1, e2), checked::mul(c1, c2));
  return out;
}

LaurentPoly operator-(const LaurentPoly &p) {
  LaurentPoly out;
  return out -= p;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [exp, coeff] = *it;
    const bool negative = coeff < 0;
    // Magnitude as unsigned so INT64_MIN prints correctly.
    const std::uint64_t magnitude =
        negative ? std::uint64_t(0) - std::uint64_t(coeff) : std::uint64_t(coeff);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;

    if (exp == 0) {
      os << magnitude;
      continue;
    }
    if (magnitude != 1)
      os << magnitude;
    os << 'A';
    if (exp != 1)
      os << '^' << exp;
  }
  return os.str();
}

std::string LaurentPoly::to_json() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first)
      os << ',';
    first = false;
    os << '[' << it->first << ',' << it->second << ']';
  }
  os << ']';
  return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string &text) {
  std::string s;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const auto ch = static_cast<unsigned char>(text[k]);
    if (!std::isspace(ch)) {
      s.push_back(text[k]);
      continue;
    }
    // Whitespace may separate tokens but never split a number.
    if (!s.empty() && std::isdigit(static_cast<unsigned char>(s.back()))) {
      std::size_t next = k;
      while (next < text.size() && std::isspace(static_cast<unsigned char>(text[next])))
        ++next;
      if (next < text.size() && std::isdigit(static_cast<unsigned char>(text[next])))
        throw std::invalid_argument("cannot parse polynomial '" + text + "': split number");
    }
  }
  if (s.empty())
    throw std::invalid_argument("empty polynomial text");
  if (s == "0")
    return {};

  LaurentPoly out;
  std::size_t pos = 0;
  auto fail = [&](const char *what) {
    throw std::invalid_argument("cannot parse polynomial '" + text + "': " + what);
  };
  auto read_int = [&](bool allow_sign) -> std::int64_t {
    std::size_t start = pos;
    if (allow_sign && pos < s.size() && (s[pos] == '-' || s[pos] == '+'))
      ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == digits)
      fail("expected digits");
    try {
      return std::stoll(s.substr(start, pos - start));
    } catch (const std::out_of_range &) {
      throw OverflowError("polynomial literal out of int64 range");
    }
  };

  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-' between terms");
    }
    first = false;

    std::int64_t coeff = 1;
    bool has_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = read_int(false);
      has_coeff = true;
    }
    int exp = 0;
    if (pos < s.size() && s[pos] == 'A') {
      ++pos;
      exp = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        const auto e = read_int(true);
        if (e < INT32_MIN || e > INT32_MAX)
          throw OverflowError("polynomial exponent out of range");
        exp = static_cast<int>(e);
      }
    } else if (!has_coeff) {
      fail("expected coefficient or 'A'");
    }
    out.add_term(exp, checked::mul(sign, coeff));
  }
  return out;
}

std::ostream &operator<<(std::ostream &os, const LaurentPoly &p) { return os << p.to_string(); }

LaurentPoly delta_pow(int k) {
  if (k < 0)
    throw std::domain_error("delta_pow requires k >= 0");
  const LaurentPoly delta = LaurentPoly::from_terms({{2, -1}, {-2, -1}});
  LaurentPoly out(1);
  for (int i = 0; i < k; ++i)
    out *= delta;
  return out;
}

LaurentPoly neg_a_pow(int k) {
  // (-A)^k = (-1)^k A^k, also for negative k.
  return LaurentPoly::monomial((k % 2 == 0) ? 1 : -1, k);
}

} // namespace chordbracket
