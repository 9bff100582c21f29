#include "crossdrop/laurent.hpp"

#include <cctype>

#include "crossdrop/errors.hpp"

namespace crossdrop {

LaurentPoly LaurentPoly::monomial(const BigInt& c, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(
    const std::vector<std::pair<int, BigInt>>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(int exponent, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::max_degree() const {
  if (is_zero()) throw DomainError("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

int LaurentPoly::min_degree() const {
  if (is_zero()) throw DomainError("degree of the zero polynomial");
  return terms_.begin()->first;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  if (k == 0) throw DomainError("substitute_power with k = 0");
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e * k, c);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = constant(1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [e1, c1] : lhs.terms_) {
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly operator-(const LaurentPoly& p) {
  LaurentPoly out = p;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::string LaurentPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (e == 0) {
      out += magnitude.str();
      continue;
    }
    if (magnitude != 1) out += magnitude.str();
    out += var;
    out += '^';
    out += std::to_string(e);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::string_view var)
      : text_(text), var_(var) {}

  LaurentPoly run() {
    LaurentPoly p;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      first = false;
      auto [exponent, coeff] = term();
      p += LaurentPoly::monomial(coeff * sign, exponent);
      skip_space();
    }
    return p;
  }

 private:
  std::pair<int, BigInt> term() {
    BigInt coeff = 1;
    bool have_digits = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = BigInt(digits());
      have_digits = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (!starts_with_var()) fail("expected variable after '*'");
      }
    }
    if (!starts_with_var()) {
      if (!have_digits) fail("expected a term");
      return {0, coeff};
    }
    pos_ += var_.size();
    skip_space();
    int exponent = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      int sign = 1;
      if (!at_end() && (peek() == '-' || peek() == '+')) {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      }
      const std::string d = digits();
      exponent = sign * std::stoi(d);
    }
    return {exponent, coeff};
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  bool starts_with_var() const {
    return text_.substr(pos_, var_.size()) == var_;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(0, "polynomial '" + std::string(text_) + "' at offset " +
                            std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::string_view var_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, std::string_view var) {
  PolyParser parser(text, var);
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  if (trimmed == "0") return {};
  return parser.run();
}

DegreeInfo degree_info(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("degree_info of the zero polynomial");
  const int hi = p.max_degree();
  const int lo = p.min_degree();
  return {hi, lo, hi - lo, p.coeff(hi), p.coeff(lo)};
}

namespace poly {

LaurentPoly loop_weight() { return -A(2) - A(-2); }

}  // namespace poly

}  // namespace crossdrop
