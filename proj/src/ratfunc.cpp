#include "hecke/ratfunc.hpp"

#include <algorithm>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

LaurentPoly expand(const RatFunc::Factors& f) {
  LaurentPoly p(1);
  for (const auto& [fac, e] : f)
    for (int i = 0; i < e; ++i) p = p * fac;
  return p;
}

// factors of `big` not accounted for by `small` (big is a multiple of small)
LaurentPoly cofactor(const RatFunc::Factors& big, const RatFunc::Factors& small) {
  LaurentPoly p(1);
  for (const auto& [fac, e] : big) {
    auto it = small.find(fac);
    int have = it == small.end() ? 0 : it->second;
    for (int i = have; i < e; ++i) p = p * fac;
  }
  return p;
}

RatFunc::Factors lcm(const RatFunc::Factors& a, const RatFunc::Factors& b) {
  RatFunc::Factors r = a;
  for (const auto& [fac, e] : b) {
    int& slot = r[fac];
    slot = std::max(slot, e);
  }
  return r;
}

}  // namespace

RatFunc RatFunc::fraction(const LaurentPoly& num, const LaurentPoly& den) {
  return RatFunc(num) / RatFunc(den);
}

LaurentPoly RatFunc::den() const { return expand(den_); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RatFunc r;
  if (a.den_ == b.den_) {
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
  } else {
    r.den_ = lcm(a.den_, b.den_);
    r.num_ = a.num_ * cofactor(r.den_, a.den_) + b.num_ * cofactor(r.den_, b.den_);
  }
  if (r.num_.is_zero()) r.den_.clear();
  return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  RatFunc r;
  if (a.is_zero() || b.is_zero()) return r;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_;
  for (const auto& [fac, e] : b.den_) r.den_[fac] += e;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorKind::Arithmetic, "division by zero rational function");
  auto n = num_.normalized();
  RatFunc r;
  r.num_ = expand(den_).times(Rational(1) / n.scalar, n.shift.inverse());
  if (!n.primitive.is_monomial()) r.den_[n.primitive] = 1;
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return (a - b).is_zero();
}

std::string RatFunc::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::string s = "(" + num_.to_string() + ")/";
  for (const auto& [fac, e] : den_) {
    s += "(" + fac.to_string() + ")";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

namespace {

// polynomial coefficients (lowest degree first) of q^-min * p
std::vector<Rational> to_dense(const std::map<int, Rational>& p) {
  std::vector<Rational> c;
  if (p.empty()) return c;
  int lo = p.begin()->first, hi = p.rbegin()->first;
  c.assign(hi - lo + 1, Rational(0));
  for (const auto& [e, x] : p) c[e - lo] = x;
  return c;
}

Rational eval_dense(const std::vector<Rational>& c, const Rational& x) {
  Rational v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

// strip factors (q - x) while p(x) == 0; returns multiplicity
int strip_root(std::vector<Rational>& c, const Rational& x) {
  int m = 0;
  while (!c.empty() && eval_dense(c, x) == 0) {
    // synthetic division
    std::vector<Rational> out(c.size() - 1);
    Rational carry = 0;
    for (std::size_t i = c.size(); i-- > 1;) {
      carry = carry * x + c[i];
      out[i - 1] = carry;
    }
    c.swap(out);
    ++m;
  }
  return m;
}

}  // namespace

Rational ratfunc_eval_q(const RatFunc& f, int eps, const std::map<PlaceSymbol, Rational>& vals) {
  if (eps != 1 && eps != -1) throw Error(ErrorKind::Arithmetic, "eps must be +1 or -1");
  if (f.is_zero()) return 0;
  Rational x = eps;
  auto num = to_dense(f.num().in_q(vals));
  if (num.empty()) return 0;  // vanishes identically after substitution
  int order = strip_root(num, x);
  Rational value = eval_dense(num, x);
  // q^-lo shift contributes eps^-lo; fold it in after
  auto num_map = f.num().in_q(vals);
  int shift = num_map.begin()->first;
  for (const auto& [fac, e] : f.den_factors()) {
    auto m = fac.in_q(vals);
    auto d = to_dense(m);
    if (d.empty()) throw Error(ErrorKind::SingularEvaluation, "denominator vanishes identically");
    int o = strip_root(d, x);
    order -= o * e;
    Rational dv = eval_dense(d, x);
    for (int i = 0; i < e; ++i) value /= dv;
    shift -= m.begin()->first * e;
  }
  if (order < 0) throw Error(ErrorKind::SingularEvaluation, "pole at q = " + std::to_string(eps));
  if (order > 0) return 0;
  if (shift % 2 != 0) value *= eps;
  return value;
}

}  // namespace hecke
