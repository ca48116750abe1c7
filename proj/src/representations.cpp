#include "hecke/representations.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

const Monomial kQ = Monomial::q_power(1);

std::vector<VLabel> generators(const NewLabelling& lab) {
  return {lab.order.begin() + 1, lab.order.end()};
}

std::string gname(const NewLabelling& lab, const VLabel& i) { return "g_" + lab.name(i); }
std::string xname(const NewLabelling& lab, const VLabel& j) { return "X_" + lab.name(j); }

int member_index(const Orbit& orbit, const ContentSeq& S) {
  int s = orbit.index_of(S);
  if (s < 0) throw Error(ErrorKind::Arithmetic, "orbit is not closed: " + S.to_string() + " is missing");
  return s;
}

template <class M>
void add_braid(RelationReport& rep, const std::string& name, const M& a, const M& b, int m) {
  if (m == 2)
    rep.add(name, a * b, b * a);
  else
    rep.add(name, a * b * a, b * a * b);
}

}  // namespace

std::pair<RatFunc, RatFunc> seminormal_coefficients(const Monomial& ci, const Monomial& cp) {
  LaurentPoly q(kQ), qi(kQ.inverse()), c(ci), p(cp);
  LaurentPoly den = c - p;
  if (den.is_zero()) throw Error(ErrorKind::Arithmetic, "equal contents " + ci.to_string() + " on an edge");
  return {RatFunc::fraction((q - qi) * c, den), RatFunc::fraction(q * c - qi * p, den)};
}

SeminormalRep build_rep(const Orbit& orbit) {
  if (orbit.members.empty()) throw Error(ErrorKind::NotAdmissible, "empty orbit");
  SeminormalRep rep;
  rep.lab = orbit.members.front().labelling_ptr();
  rep.orbit = orbit;
  const NewLabelling& lab = *rep.lab;
  for (const auto& m : orbit.members)
    if (!triplet_from_seq(m))
      throw Error(ErrorKind::NotAdmissible, "orbit member " + m.to_string() + " is not a tableau");
  int n = rep.dim();
  for (const auto& j : lab.order) {
    std::vector<RatFunc> d;
    for (const auto& m : orbit.members) d.emplace_back(m[j]);
    rep.x[j] = SymMatrix::diagonal(d);
  }
  for (const auto& i : generators(lab)) {
    int pos = lab.position(i);
    SymMatrix g(n, n);
    for (int t = 0; t < n; ++t) {
      const ContentSeq& T = orbit.members[t];
      auto [a, b] = seminormal_coefficients(T.at(pos), T.at(lab.pred_position(pos)));
      g(t, t) = a;
      if (auto r = trunc_reflect_at(pos, T)) g(member_index(orbit, *r), t) = b;
    }
    rep.g[i] = std::move(g);
  }
  return rep;
}

bool RelationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.ok; });
}

std::vector<RelationCheck> RelationReport::failures() const {
  std::vector<RelationCheck> f;
  for (const auto& c : checks)
    if (!c.ok) f.push_back(c);
  return f;
}

void RelationReport::add(std::string name, const SymMatrix& lhs, const SymMatrix& rhs) {
  auto d = first_difference(lhs, rhs);
  checks.push_back({std::move(name), !d, d});
}

void RelationReport::add(std::string name, const QMatrix& lhs, const QMatrix& rhs) {
  auto d = first_difference(lhs, rhs);
  checks.push_back({std::move(name), !d, d});
}

void RelationReport::finish() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const RelationCheck& a, const RelationCheck& b) { return a.name < b.name; });
}

RelationReport verify_relations(const SeminormalRep& rep) {
  const NewLabelling& lab = *rep.lab;
  int n = rep.dim();
  RelationReport out;
  auto gens = generators(lab);
  SymMatrix one = SymMatrix::identity(n);
  RatFunc qq = RatFunc(kQ) - RatFunc(kQ.inverse());

  for (const auto& i : gens) {
    const SymMatrix& g = rep.g.at(i);
    out.add("quadratic " + gname(lab, i), g * g, qq * g + one);
  }
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      add_braid(out, "braid " + gname(lab, gens[a]) + " " + gname(lab, gens[b]), rep.g.at(gens[a]),
                rep.g.at(gens[b]), lab.coxeter_order(gens[a], gens[b]));
  for (std::size_t a = 0; a < lab.order.size(); ++a)
    for (std::size_t b = a + 1; b < lab.order.size(); ++b) {
      const auto &x = rep.x.at(lab.order[a]), &y = rep.x.at(lab.order[b]);
      out.add("commute " + xname(lab, lab.order[a]) + " " + xname(lab, lab.order[b]), x * y, y * x);
    }

  // g_i X_j - X^{r_i delta_j} g_i = (q - q^-1)(X_j - X^{r_i delta_j}) / (1 - X_pred(i) X_i^-1)
  for (const auto& i : gens) {
    int pos = lab.position(i), pp = lab.pred_position(pos);
    const SymMatrix& g = rep.g.at(i);
    std::vector<ContentSeq> moved;
    for (const auto& T : rep.orbit.members) moved.push_back(reflect_at(pos, T));
    for (const auto& j : lab.order) {
      std::vector<RatFunc> xr, rhs;
      for (int t = 0; t < n; ++t) {
        const ContentSeq& T = rep.orbit.members[t];
        Monomial cj = T[j], cr = moved[t][j], ci = T.at(pos), cp = T.at(pp);
        LaurentPoly den = LaurentPoly(ci) - LaurentPoly(cp);
        if (den.is_zero())
          throw Error(ErrorKind::Arithmetic, "1 - X_pred X_i^-1 vanishes on " + T.to_string());
        xr.emplace_back(cr);
        rhs.push_back(qq * RatFunc::fraction((LaurentPoly(cj) - LaurentPoly(cr)) * LaurentPoly(ci), den));
      }
      SymMatrix Xr = SymMatrix::diagonal(xr);
      out.add("cross " + gname(lab, i) + " " + xname(lab, j), g * rep.x.at(j) - Xr * g,
              SymMatrix::diagonal(rhs));
    }
    out.add("spot " + gname(lab, i) + " " + xname(lab, lab.order[pp]) + " " + gname(lab, i),
            g * rep.x.at(lab.order[pp]) * g, rep.x.at(i));
  }
  out.finish();
  return out;
}

RelationReport verify_branch_subalgebras(const SeminormalRep& rep) {
  const NewLabelling& lab = *rep.lab;
  RelationReport out;
  // (sigma_1..sigma_n, Y_0..Y_n) for each branch
  std::vector<std::pair<std::string, std::vector<VLabel>>> branches;
  std::vector<VLabel> b1{VLabel::zero()}, b2{VLabel::zero(), VLabel::plain(1)}, b3{VLabel::zero()};
  for (int a = 1; a <= lab.l; ++a) b1.push_back(VLabel::plain(a));
  for (int b = 2; b <= lab.lp; ++b) b2.push_back(VLabel::under(b));
  for (int a = 1; a <= lab.k; ++a) b3.push_back(VLabel::plain(a));
  for (int c = lab.k + 1; c <= lab.lpp && lab.R.family != Family::A; ++c) b3.push_back(VLabel::dunder(c));
  branches = {{"branch1", b1}, {"branch2", b2}, {"branch3", b3}};

  RatFunc qq = RatFunc(kQ) - RatFunc(kQ.inverse());
  for (const auto& [tag, ys] : branches) {
    int N = int(ys.size()) - 1;
    if (N < 1) continue;
    auto sig = [&](int a) -> const SymMatrix& { return rep.g.at(ys[a]); };
    auto Y = [&](int a) -> const SymMatrix& { return rep.x.at(ys[a]); };
    auto nm = [&](const char* s, int a) { return std::string(s) + std::to_string(a); };
    SymMatrix one = SymMatrix::identity(rep.dim());
    for (int a = 1; a <= N; ++a) {
      out.add(tag + " quadratic " + nm("s", a), sig(a) * sig(a), qq * sig(a) + one);
      for (int b = a + 1; b <= N; ++b)
        add_braid(out, tag + " braid " + nm("s", a) + " " + nm("s", b), sig(a), sig(b), b == a + 1 ? 3 : 2);
      out.add(tag + " " + nm("s", a) + nm(" Y", a - 1) + nm(" s", a), sig(a) * Y(a - 1) * sig(a), Y(a));
      for (int j = 0; j <= N; ++j)
        if (j != a - 1 && j != a)
          out.add(tag + " commute " + nm("s", a) + nm(" Y", j), sig(a) * Y(j), Y(j) * sig(a));
    }
    for (int a = 0; a <= N; ++a)
      for (int b = a + 1; b <= N; ++b)
        out.add(tag + " commute " + nm("Y", a) + nm(" Y", b), Y(a) * Y(b), Y(b) * Y(a));
  }
  out.finish();
  return out;
}

std::vector<SymMatrix> idempotents(const SeminormalRep& rep) {
  const NewLabelling& lab = *rep.lab;
  const auto& mem = rep.orbit.members;
  int n = rep.dim();
  std::vector<SymMatrix> out;
  for (int t = 0; t < n; ++t) {
    std::vector<RatFunc> diag(n);
    for (int s = 0; s < n; ++s) {
      if (s != t && mem[s] == mem[t])
        throw Error(ErrorKind::DegenerateSeparation, "two basis vectors share all contents");
      // prod over j and T' with c_j(T') != c_j(T) of (c_j(T_s) - c_j(T')) / (c_j(T) - c_j(T'))
      RatFunc e(1);
      bool zero = false;
      for (const auto& j : lab.order) {
        for (const auto& other : mem) {
          if (other[j] == mem[t][j]) continue;
          LaurentPoly num = LaurentPoly(mem[s][j]) - LaurentPoly(other[j]);
          if (num.is_zero()) {
            zero = true;
            break;
          }
          LaurentPoly den = LaurentPoly(mem[t][j]) - LaurentPoly(other[j]);
          if (!(num == den)) e *= RatFunc::fraction(num, den);
        }
        if (zero) break;
      }
      diag[s] = zero ? RatFunc() : e;
    }
    out.push_back(SymMatrix::diagonal(diag));
  }
  return out;
}

SymMatrix central_element(const SeminormalRep& rep, const WeightData& wd) {
  std::vector<RatFunc> d;
  for (const auto& T : rep.orbit.members) d.emplace_back(delta_invariant(T, wd));
  return SymMatrix::diagonal(d);
}

Monomial delta_of_orbit(const SeminormalRep& rep, const WeightData& wd) {
  return delta_invariant(rep.orbit.members.front(), wd);
}

bool passes_to_quotient(const SeminormalRep& rep, const WeightData& wd) {
  return delta_of_orbit(rep, wd).is_one();
}

IrreducibilityEvidence irreducibility_evidence(const SeminormalRep& rep) {
  const NewLabelling& lab = *rep.lab;
  const auto& mem = rep.orbit.members;
  int n = rep.dim();
  IrreducibilityEvidence ev;
  ev.separated = std::set<ContentSeq>(mem.begin(), mem.end()).size() == mem.size();
  ev.offdiagonal_nonzero = true;
  std::vector<std::vector<int>> adj(n);
  for (const auto& i : generators(lab)) {
    int pos = lab.position(i);
    for (int t = 0; t < n; ++t)
      if (auto r = trunc_reflect_at(pos, mem[t])) {
        int s = member_index(rep.orbit, *r);
        adj[t].push_back(s), adj[s].push_back(t);
        if (rep.g.at(i)(s, t).is_zero()) ev.offdiagonal_nonzero = false;
      }
  }
  std::vector<bool> seen(n, false);
  std::queue<int> todo;
  todo.push(0), seen[0] = true;
  int reached = 1;
  while (!todo.empty()) {
    int t = todo.front();
    todo.pop();
    for (int s : adj[t])
      if (!seen[s]) seen[s] = true, ++reached, todo.push(s);
  }
  ev.connected = reached == n;
  return ev;
}

bool disjoint_spectra(const SeminormalRep& a, const SeminormalRep& b) {
  for (const auto& m : a.orbit.members)
    if (b.orbit.index_of(m) >= 0) return false;
  return true;
}

FiniteRep restrict_to_finite(const SeminormalRep& rep) {
  const NewLabelling& lab = *rep.lab;
  FiniteRep f{rep.lab, rep.orbit, rep.g, {}, is_level1(rep.orbit)};
  auto gens = generators(lab);
  SymMatrix one = SymMatrix::identity(rep.dim());
  RatFunc qq = RatFunc(kQ) - RatFunc(kQ.inverse());
  for (const auto& i : gens) f.relations.add("quadratic " + gname(lab, i), f.g.at(i) * f.g.at(i), qq * f.g.at(i) + one);
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      add_braid(f.relations, "braid " + gname(lab, gens[a]) + " " + gname(lab, gens[b]), f.g.at(gens[a]),
                f.g.at(gens[b]), lab.coxeter_order(gens[a], gens[b]));
  f.relations.finish();
  return f;
}

WeylRep classical_limit(const Orbit& orbit, int eps) {
  if (eps != 1 && eps != -1) throw Error(ErrorKind::Arithmetic, "eps must be 1 or -1");
  WeylRep w;
  w.lab = orbit.members.front().labelling_ptr();
  w.orbit = orbit;
  w.eps = eps;
  const NewLabelling& lab = *w.lab;
  int n = int(orbit.members.size());
  for (const auto& i : generators(lab)) {
    int pos = lab.position(i);
    QMatrix r(n, n);
    for (int t = 0; t < n; ++t) {
      const ContentSeq& T = orbit.members[t];
      const Monomial &ci = T.at(pos), &cp = T.at(lab.pred_position(pos));
      auto moved = trunc_reflect_at(pos, T);
      if (!(place_class(ci) == place_class(cp))) {
        Monomial ratio = cp / ci;
        if (ratio.places().empty()) {
          int value = ratio.sign() * (eps == -1 && ratio.q_exp() % 2 != 0 ? -1 : 1);
          if (value == 1)
            throw Error(ErrorKind::PlaceCollisionAtLimit, "places of " + ci.to_string() + " and " +
                                                              cp.to_string() + " collide at q = " +
                                                              std::to_string(eps));
        }
        if (!moved) throw Error(ErrorKind::Arithmetic, "edge between places truncated");
        r(member_index(orbit, *moved), t) = eps;
      } else {
        int d = classical_offset(ci) - classical_offset(cp);
        if (d == 0) throw Error(ErrorKind::Arithmetic, "equal contents in " + T.to_string());
        r(t, t) = Rational(eps, d);
        r(t, t).canonicalize();
        if (moved) {
          Rational c(eps * (d + 1), d);
          c.canonicalize();
          r(member_index(orbit, *moved), t) = c;
        }
      }
    }
    w.r[i] = std::move(r);
  }
  return w;
}

WeylRep classical_limit(const SeminormalRep& rep, int eps) { return classical_limit(rep.orbit, eps); }

std::map<VLabel, QMatrix> evaluate_at(const SeminormalRep& rep, int eps,
                                      const std::map<PlaceSymbol, Rational>& place_values) {
  std::map<VLabel, QMatrix> out;
  int n = rep.dim();
  for (const auto& [i, g] : rep.g) {
    QMatrix m(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (!g(a, b).is_zero()) m(a, b) = ratfunc_eval_q(g(a, b), eps, place_values);
    out[i] = std::move(m);
  }
  return out;
}

RelationReport verify_coxeter(const WeylRep& w) {
  const NewLabelling& lab = *w.lab;
  RelationReport out;
  auto gens = generators(lab);
  QMatrix one = QMatrix::identity(int(w.orbit.members.size()));
  for (const auto& i : gens) out.add("square r_" + lab.name(i), w.r.at(i) * w.r.at(i), one);
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      add_braid(out, "braid r_" + lab.name(gens[a]) + " r_" + lab.name(gens[b]), w.r.at(gens[a]),
                w.r.at(gens[b]), lab.coxeter_order(gens[a], gens[b]));
  out.finish();
  return out;
}

}  // namespace hecke
