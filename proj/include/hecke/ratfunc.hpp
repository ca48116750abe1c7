#pragma once

#include <map>
#include <ostream>
#include <string>

#include "hecke/laurent.hpp"

namespace hecke {

/// num / den, never reduced. The denominator is kept as a product of
/// normalized factors so that sums only pay for the lcm of the factor lists.
/// Equality is decided by cross-multiplication against that lcm.
class RatFunc {
 public:
  using Factors = std::map<LaurentPoly, int>;

  RatFunc() = default;
  RatFunc(const Rational& c) : num_(c) {}  // NOLINT
  RatFunc(long c) : num_(c) {}             // NOLINT
  RatFunc(const Monomial& m) : num_(m) {}  // NOLINT
  RatFunc(const LaurentPoly& p) : num_(p) {}  // NOLINT
  // throws Error(Arithmetic) when den is zero
  static RatFunc fraction(const LaurentPoly& num, const LaurentPoly& den);

  bool is_zero() const { return num_.is_zero(); }
  const LaurentPoly& num() const { return num_; }
  const Factors& den_factors() const { return den_; }
  LaurentPoly den() const;  // expanded product

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc inverse() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b);

  std::string to_string() const;

 private:
  LaurentPoly num_;
  Factors den_;
};

/// Value at q = eps after substituting rational values for the places. Common
/// powers of (q - eps) are cancelled first, so removable singularities are
/// fine; a genuine pole raises Error(SingularEvaluation).
Rational ratfunc_eval_q(const RatFunc& f, int eps, const std::map<PlaceSymbol, Rational>& place_values);

inline std::ostream& operator<<(std::ostream& os, const RatFunc& x) { return os << x.to_string(); }

}  // namespace hecke
