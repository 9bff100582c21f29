#pragma once

// Sparse Laurent polynomials in one variable with arbitrary-precision integer
// coefficients. Every polynomial invariant in the library is a LaurentPoly.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crossdrop {

using BigInt = boost::multiprecision::cpp_int;

class LaurentPoly {
 public:
  using TermMap = std::map<int, BigInt>;

  LaurentPoly() = default;

  static LaurentPoly constant(const BigInt& c) { return monomial(c, 0); }
  static LaurentPoly monomial(const BigInt& c, int exponent);
  /// Builds from (exponent, coefficient) pairs; repeated exponents are summed.
  static LaurentPoly from_terms(
      const std::vector<std::pair<int, BigInt>>& terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Coefficient at `exponent`, zero when absent.
  BigInt coeff(int exponent) const;

  /// Degree queries throw DomainError on the zero polynomial.
  int max_degree() const;
  int min_degree() const;
  int span() const { return max_degree() - min_degree(); }

  /// Multiplication by the monomial x^k.
  LaurentPoly shifted(int k) const;
  /// Substitutes x -> x^k (k may be negative, must be nonzero).
  LaurentPoly substitute_power(int k) const;
  /// p(x^-1).
  LaurentPoly mirrored() const { return substitute_power(-1); }
  LaurentPoly pow(unsigned n) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
    return lhs += rhs;
  }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
    return lhs -= rhs;
  }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator-(const LaurentPoly& p);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Canonical text: ascending exponents, e.g. "-A^-4 - A^4", "A^-4 + 2 + A^4".
  std::string to_string(std::string_view var = "A") const;
  /// Inverse of to_string. Also accepts "2*A^3", a bare "A", and stray spaces.
  static LaurentPoly parse(std::string_view text, std::string_view var = "A");

 private:
  void add_term(int exponent, const BigInt& c);

  TermMap terms_;
};

struct DegreeInfo {
  int max_deg;
  int min_deg;
  int span;
  BigInt leading;   // coefficient at max_deg
  BigInt trailing;  // coefficient at min_deg
};

/// Throws DomainError for the zero polynomial.
DegreeInfo degree_info(const LaurentPoly& p);

namespace poly {

/// The variable itself.
inline LaurentPoly var() { return LaurentPoly::monomial(1, 1); }
inline LaurentPoly A(int k = 1) { return LaurentPoly::monomial(1, k); }
/// Circle weight d = -A^2 - A^-2.
LaurentPoly loop_weight();

}  // namespace poly

}  // namespace crossdrop
