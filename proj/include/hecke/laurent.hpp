#pragma once

#include <gmpxx.h>

#include <map>
#include <ostream>
#include <string>

#include "hecke/monomial.hpp"

namespace hecke {

using Rational = mpq_class;

/// Finite sum of rational multiples of sign-free monomials in q and the places.
class LaurentPoly {
 public:
  using Terms = std::map<Monomial, Rational>;  // keys have sign +1, values nonzero

  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT: constants convert implicitly
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}
  LaurentPoly(const Monomial& m);  // sign folds into the coefficient
  LaurentPoly(const Rational& c, const Monomial& m);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // single term?
  bool is_monomial() const { return terms_.size() == 1; }

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& b);
  LaurentPoly& operator-=(const LaurentPoly& b);
  LaurentPoly times(const Rational& c, const Monomial& m) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

  // Splits p = c * m * p_hat where p_hat has all minimal exponents 0 and its
  // largest term has coefficient 1. p must be nonzero.
  struct Normalized;
  Normalized normalized() const;

  // Substitute rational values for places, keep q: returns exponent -> coeff.
  std::map<int, Rational> in_q(const std::map<PlaceSymbol, Rational>& place_values) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& key, const Rational& c);
  Terms terms_;
};

struct LaurentPoly::Normalized {
  Rational scalar;
  Monomial shift;
  LaurentPoly primitive;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& x) { return os << x.to_string(); }

}  // namespace hecke
