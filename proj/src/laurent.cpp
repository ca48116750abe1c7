#include "hecke/laurent.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>

#include "hecke/errors.hpp"

namespace hecke {

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

LaurentPoly::LaurentPoly(const Monomial& m) : LaurentPoly(Rational(1), m) {}

LaurentPoly::LaurentPoly(const Rational& c, const Monomial& m) {
  if (c != 0) terms_.emplace(m.with_sign(1), m.sign() * c);
}

void LaurentPoly::add_term(const Monomial& key, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& b) {
  for (const auto& [k, c] : b.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& b) {
  for (const auto& [k, c] : b.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  return r += b;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  return r -= b;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka * kb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::times(const Rational& c, const Monomial& m) const {
  LaurentPoly r;
  if (c == 0) return r;
  Rational s = c * m.sign();
  Monomial key = m.with_sign(1);
  for (const auto& [k, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), k * key, x * s);
  return r;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const auto& x, const auto& y) {
        if (auto c = x.first <=> y.first; c != 0) return c < 0;
        return x.second < y.second;
      });
}

LaurentPoly::Normalized LaurentPoly::normalized() const {
  if (terms_.empty()) throw Error(ErrorKind::Arithmetic, "normalizing the zero polynomial");
  int qmin = INT_MAX;
  std::map<PlaceSymbol, int> pmin;
  for (const auto& [k, c] : terms_) {
    qmin = std::min(qmin, k.q_exp());
    for (auto [id, e] : k.places()) pmin.try_emplace(id, 0);
  }
  for (auto& [id, lo] : pmin) {
    lo = terms_.begin()->first.place_exp(id);
    for (const auto& [k, c] : terms_) lo = std::min(lo, k.place_exp(id));
  }
  Monomial::PlaceExps pe(pmin.begin(), pmin.end());
  Monomial shift(1, qmin, pe);
  Normalized n;
  n.shift = shift;
  // pick the scalar after shifting: the term order is not shift invariant
  LaurentPoly shifted = times(Rational(1), shift.inverse());
  n.scalar = shifted.terms_.rbegin()->second;
  n.primitive = shifted.times(Rational(1) / n.scalar, Monomial());
  return n;
}

std::map<int, Rational> LaurentPoly::in_q(const std::map<PlaceSymbol, Rational>& vals) const {
  std::map<int, Rational> out;
  for (const auto& [k, c] : terms_) {
    Rational v = c;
    for (auto [id, e] : k.places()) {
      auto it = vals.find(id);
      if (it == vals.end())
        throw Error(ErrorKind::Arithmetic, "no value given for place g" + std::to_string(id));
      if (it->second == 0) throw Error(ErrorKind::Arithmetic, "place value is zero");
      Rational base = e > 0 ? it->second : Rational(1) / it->second;
      for (int t = 0; t < std::abs(e); ++t) v *= base;
    }
    auto& slot = out[k.q_exp()];
    slot += v;
    if (slot == 0) out.erase(k.q_exp());
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    Rational a = abs(c);
    std::string sign = c < 0 ? "-" : "+";
    if (s.empty())
      s = c < 0 ? "-" : "";
    else
      s += " " + sign + " ";
    if (k.is_one()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += k.to_string();
    }
  }
  return s;
}

}  // namespace hecke
