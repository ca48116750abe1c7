#include "hecke/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace hecke {

namespace {

void normalize(Monomial::PlaceExps& p) {
  std::sort(p.begin(), p.end());
  Monomial::PlaceExps out;
  for (auto [id, e] : p) {
    if (!out.empty() && out.back().first == id)
      out.back().second += e;
    else
      out.emplace_back(id, e);
    if (out.back().second == 0) out.pop_back();
  }
  p.swap(out);
}

}  // namespace

Monomial::Monomial(int sign, int q_exp, PlaceExps places)
    : sign_(sign), q_(q_exp), places_(std::move(places)) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("monomial sign must be +1 or -1");
  normalize(places_);
}

int Monomial::place_exp(PlaceSymbol id) const {
  for (auto [p, e] : places_)
    if (p == id) return e;
  return 0;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int e) const {
  Monomial r;
  r.sign_ = (e % 2 == 0) ? 1 : sign_;
  r.q_ = q_ * e;
  if (e != 0)
    for (auto [id, x] : places_) r.places_.emplace_back(id, x * e);
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.sign_ = a.sign_ * b.sign_;
  r.q_ = a.q_ + b.q_;
  // merge of two sorted lists
  auto i = a.places_.begin(), j = b.places_.begin();
  while (i != a.places_.end() || j != b.places_.end()) {
    if (j == b.places_.end() || (i != a.places_.end() && i->first < j->first)) {
      r.places_.push_back(*i++);
    } else if (i == a.places_.end() || j->first < i->first) {
      r.places_.push_back(*j++);
    } else {
      int e = i->second + j->second;
      if (e != 0) r.places_.emplace_back(i->first, e);
      ++i, ++j;
    }
  }
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.sign_ <=> b.sign_; c != 0) return c;
  if (auto c = a.places_ <=> b.places_; c != 0) return c;
  return a.q_ <=> b.q_;
}

std::string Monomial::to_string() const {
  std::string s;
  auto factor = [&](const std::string& base, int e) {
    if (!s.empty() && s != "-") s += "*";
    s += base;
    if (e != 1) s += "^" + std::to_string(e);
  };
  if (sign_ < 0) s = "-";
  for (auto [id, e] : places_) factor("g" + std::to_string(id), e);
  if (q_ != 0) factor("q", q_);
  if (s.empty()) return "1";
  if (s == "-") return "-1";
  return s;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) { return a * b; }

bool mono_q_shift_eq(const Monomial& a, const Monomial& b, int s) {
  return a.sign() == b.sign() && a.places() == b.places() && a.q_exp() == b.q_exp() + s;
}

Monomial mono_substitute(const Monomial& a, const std::map<PlaceSymbol, Monomial>& subs) {
  Monomial r(a.sign(), a.q_exp());
  for (auto [id, e] : a.places()) {
    auto it = subs.find(id);
    r *= (it == subs.end()) ? Monomial::place(id, e) : it->second.pow(e);
  }
  return r;
}

Monomial place_class(const Monomial& a) {
  int par = ((a.q_exp() % 2) + 2) % 2;
  return Monomial(a.sign(), par, a.places());
}

int classical_offset(const Monomial& a) {
  return (a.q_exp() - place_class(a).q_exp()) / 2;
}

}  // namespace hecke
