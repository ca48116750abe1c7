#pragma once

#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

using PlaceSymbol = int;  // formal place gamma_id, id >= 1

/// sign * prod(gamma_i^e_i) * q^k. Never zero, always invertible.
class Monomial {
 public:
  using PlaceExps = std::vector<std::pair<PlaceSymbol, int>>;  // sorted, no zero exponents

  Monomial() = default;
  Monomial(int sign, int q_exp, PlaceExps places = {});

  static Monomial q_power(int e) { return Monomial(1, e); }
  static Monomial place(PlaceSymbol id, int e = 1) { return Monomial(1, 0, {{id, e}}); }

  int sign() const { return sign_; }
  int q_exp() const { return q_; }
  const PlaceExps& places() const { return places_; }
  int place_exp(PlaceSymbol id) const;

  bool is_one() const { return sign_ == 1 && q_ == 0 && places_.empty(); }
  // sign +1 and no places: a bare power of q
  bool is_pure_q() const { return sign_ == 1 && places_.empty(); }

  Monomial inverse() const;
  Monomial pow(int e) const;
  Monomial with_sign(int s) const { return Monomial(s, q_, places_); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inverse(); }
  Monomial& operator*=(const Monomial& b) { return *this = *this * b; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // canonical order: sign, then place exponents, then q exponent
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  // e.g. "-g1^2*q^-3", "1", "q"
  std::string to_string() const;

 private:
  int sign_ = 1;
  int q_ = 0;
  PlaceExps places_;
};

Monomial mono_mul(const Monomial& a, const Monomial& b);

/// a == q^s * b exactly.
bool mono_q_shift_eq(const Monomial& a, const Monomial& b, int s);

/// Replace each listed place by its image and recombine exponents.
Monomial mono_substitute(const Monomial& a, const std::map<PlaceSymbol, Monomial>& subs);

// Places gamma and gamma' are the same place class iff gamma/gamma' is an even
// power of q. The representative keeps sign and places and reduces q mod 2.
Monomial place_class(const Monomial& a);
// (a.q - class.q)/2, i.e. the classical content of a relative to its class
int classical_offset(const Monomial& a);

inline std::ostream& operator<<(std::ostream& os, const Monomial& x) { return os << x.to_string(); }

}  // namespace hecke
