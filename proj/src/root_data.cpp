#include "hecke/root_data.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>

#include "hecke/errors.hpp"

namespace hecke {

RootSystemType make_root_system(Family f, int rank) {
  bool ok = (f == Family::A && rank >= 1) || (f == Family::D && rank >= 4) ||
            (f == Family::E && rank >= 6 && rank <= 8);
  if (!ok)
    throw Error(ErrorKind::InvalidRootSystem,
                "no root system " + family_name(f) + std::to_string(rank));
  return {f, rank};
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::E: return "E";
  }
  return "?";
}

std::vector<std::pair<int, int>> standard_edges(const RootSystemType& R) {
  std::vector<std::pair<int, int>> e;
  int n = R.rank;
  switch (R.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
      break;
    case Family::D:
      e = {{1, 3}, {2, 3}};
      for (int i = 3; i < n; ++i) e.emplace_back(i, i + 1);
      break;
    case Family::E:
      e = {{1, 3}, {2, 4}};
      for (int i = 3; i < n; ++i) e.emplace_back(i, i + 1);
      break;
  }
  return e;
}

namespace {

using Adj = std::vector<std::vector<int>>;

// Walk from `start` away from `from` until an extremity or a trivalent vertex.
std::vector<int> arm(const Adj& g, int from, int start) {
  std::vector<int> path{start};
  int prev = from, cur = start;
  while (g[cur].size() == 2) {
    int next = g[cur][0] == prev ? g[cur][1] : g[cur][0];
    prev = cur;
    cur = next;
    path.push_back(cur);
  }
  return path;
}

// longer arm first; equal lengths go by the smaller first vertex
void sort_arms(std::vector<std::vector<int>>& arms) {
  std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
}

std::vector<int> path_between(const Adj& g, int a, int b) {
  std::vector<int> parent(g.size(), 0);
  std::queue<int> todo;
  todo.push(a);
  parent[a] = a;
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop();
    for (int y : g[x])
      if (!parent[y]) parent[y] = x, todo.push(y);
  }
  std::vector<int> p{b};
  while (p.back() != a) p.push_back(parent[p.back()]);
  std::reverse(p.begin(), p.end());
  return p;
}

}  // namespace

LabellingPtr build_labelling(const RootSystemType& R, int v) {
  make_root_system(R.family, R.rank);
  int n = R.rank;
  if (v < 1 || v > n)
    throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(v) + " is not in " +
                                              family_name(R.family) + std::to_string(n));
  Adj g(n + 1);
  for (auto [a, b] : standard_edges(R)) g[a].push_back(b), g[b].push_back(a);
  for (auto& nb : g) std::sort(nb.begin(), nb.end());
  int t = 0;
  for (int x = 1; x <= n; ++x)
    if (g[x].size() == 3) t = x;

  std::vector<int> plain{v}, under, dunder;
  int k = 0;
  if (t == 0 || t == v) {
    std::vector<std::vector<int>> arms;
    for (int u : g[v]) arms.push_back(arm(g, v, u));
    sort_arms(arms);
    if (arms.size() > 0) plain.insert(plain.end(), arms[0].begin(), arms[0].end());
    if (arms.size() > 1) under = arms[1];
    if (arms.size() > 2) dunder = arms[2];
    k = t == 0 ? int(plain.size()) : 1;
  } else {
    plain = path_between(g, v, t);
    k = int(plain.size());
    std::vector<std::vector<int>> arms;
    for (int u : g[t])
      if (u != plain[k - 2]) arms.push_back(arm(g, t, u));
    sort_arms(arms);
    plain.insert(plain.end(), arms[0].begin(), arms[0].end());
    dunder = arms[1];
    for (int u : g[v])
      if (u != plain[1]) under = arm(g, v, u);
  }

  auto lab = std::make_shared<NewLabelling>();
  lab->R = R;
  lab->v = v;
  lab->l = int(plain.size());
  lab->lp = 1 + int(under.size());
  lab->k = k;
  lab->lpp = t == 0 ? lab->l : k + int(dunder.size());

  lab->order.push_back(VLabel::zero());
  for (int a = 1; a <= lab->l; ++a) lab->order.push_back(VLabel::plain(a));
  for (int b = 2; b <= lab->lp; ++b) lab->order.push_back(VLabel::under(b));
  for (int c = k + 1; t != 0 && c <= lab->lpp; ++c) lab->order.push_back(VLabel::dunder(c));
  for (int a = 1; a <= lab->l; ++a) lab->to_standard[VLabel::plain(a)] = plain[a - 1];
  for (int b = 2; b <= lab->lp; ++b) lab->to_standard[VLabel::under(b)] = under[b - 2];
  for (int c = k + 1; t != 0 && c <= lab->lpp; ++c)
    lab->to_standard[VLabel::dunder(c)] = dunder[c - k - 1];
  for (auto& [j, s] : lab->to_standard) lab->from_standard[s] = j;

  int m = lab->size();
  for (int p = 0; p < m; ++p) lab->pos_[lab->order[p]] = p;
  lab->pred_pos_.assign(m, 0);
  for (int p = 1; p < m; ++p) lab->pred_pos_[p] = lab->position(hecke::pred(*lab, lab->order[p]));
  lab->adj_.assign(m, std::vector<bool>(m, false));
  for (auto [a, b] : standard_edges(R)) {
    int pa = lab->position(lab->from_standard[a]), pb = lab->position(lab->from_standard[b]);
    lab->adj_[pa][pb] = lab->adj_[pb][pa] = true;
  }
  auto deltas = delta_basis(*lab);
  lab->pair_delta_.assign(m, std::vector<int>(m, 0));
  for (int i = 1; i < m; ++i)
    for (int j = 0; j < m; ++j) lab->pair_delta_[i][j] = cartan_pairing(*lab, lab->order[i], deltas[j]);
  return lab;
}

int NewLabelling::position(const VLabel& j) const {
  auto it = pos_.find(j);
  if (it == pos_.end()) throw Error(ErrorKind::IndexOutOfRange, "label not in this labelling");
  return it->second;
}

VLabel pred(const NewLabelling& lab, const VLabel& j) {
  switch (j.branch) {
    case Branch::zero:
      throw Error(ErrorKind::IndexOutOfRange, "the zero label has no predecessor");
    case Branch::plain:
      return j.index == 1 ? VLabel::zero() : VLabel::plain(j.index - 1);
    case Branch::under:
      return j.index == 2 ? VLabel::plain(1) : VLabel::under(j.index - 1);
    case Branch::dunder:
      return j.index == lab.k + 1 ? VLabel::plain(lab.k) : VLabel::dunder(j.index - 1);
  }
  return VLabel::zero();
}

VLabel NewLabelling::pred(const VLabel& j) const { return hecke::pred(*this, j); }

int coxeter_order(const NewLabelling& lab, const VLabel& i, const VLabel& j) {
  if (i == j) return 1;
  return lab.adjacent(lab.position(i), lab.position(j)) ? 3 : 2;
}

int NewLabelling::coxeter_order(const VLabel& i, const VLabel& j) const {
  return hecke::coxeter_order(*this, i, j);
}

std::string NewLabelling::name(const VLabel& j) const {
  switch (j.branch) {
    case Branch::zero: return "0";
    case Branch::plain: return std::to_string(j.index);
    case Branch::under: return std::to_string(j.index) + "_";
    case Branch::dunder: return std::to_string(j.index) + "__";
  }
  return "?";
}

VLabel NewLabelling::parse_name(const std::string& s) const {
  std::size_t digits = 0;
  while (digits < s.size() && std::isdigit(static_cast<unsigned char>(s[digits]))) ++digits;
  if (digits == 0) throw Error(ErrorKind::Parse, "bad vertex label '" + s + "'");
  int idx = std::stoi(s.substr(0, digits));
  std::string tail = s.substr(digits);
  VLabel j;
  if (tail.empty())
    j = idx == 0 ? VLabel::zero() : VLabel::plain(idx);
  else if (tail == "_")
    j = VLabel::under(idx);
  else if (tail == "__")
    j = VLabel::dunder(idx);
  else
    throw Error(ErrorKind::Parse, "bad vertex label '" + s + "'");
  if (!pos_.count(j)) throw Error(ErrorKind::Parse, "label '" + s + "' does not exist here");
  return j;
}

int cartan_pairing(const NewLabelling& lab, const VLabel& i, const LatticeVec& x) {
  int pi = lab.position(i);
  if (pi == 0) throw Error(ErrorKind::IndexOutOfRange, "no coroot for the zero label");
  long s = (i == VLabel::plain(1)) ? -x[0] : 0;
  for (int p = 1; p < lab.size(); ++p) {
    if (p == pi)
      s += 2 * x[p];
    else if (lab.adjacent(pi, p))
      s -= x[p];
  }
  return int(s);
}

std::vector<LatticeVec> delta_basis(const NewLabelling& lab) {
  int m = lab.size();
  std::vector<LatticeVec> d(m, LatticeVec(m, 0));
  d[0][0] = 1;
  // order lists every predecessor before its successors
  for (int p = 1; p < m; ++p) {
    d[p] = d[lab.position(pred(lab, lab.order[p]))];
    d[p][p] += 1;
  }
  return d;
}

WeightData weight_data(const NewLabelling& lab) {
  int n = lab.size() - 1;
  // augmented Cartan system C x = e_{plain 1}, unknowns indexed by position-1
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      a[i][j] = i == j ? 2 : (lab.adjacent(i + 1, j + 1) ? -1 : 0);
    a[i][n] = lab.order[i + 1] == VLabel::plain(1) ? 1 : 0;
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[piv], a[c]);
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[c][c];
      for (int j = c; j <= n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<mpq_class> x(n);
  mpz_class den = 1;
  for (int i = 0; i < n; ++i) {
    x[i] = a[i][n] / a[i][i];
    den = lcm(den, mpz_class(x[i].get_den()));
  }
  WeightData wd;
  wd.n0 = den.get_si();
  for (int i = 0; i < n; ++i) {
    mpq_class v = x[i] * den;
    wd.n[lab.order[i + 1]] = mpz_class(v.get_num()).get_si();
  }
  for (int p = 0; p <= n; ++p) {
    VLabel j = lab.order[p];
    long kap = p == 0 ? wd.n0 : wd.n[j];
    for (int q = 1; q <= n; ++q)
      if (lab.pred_position(q) == p) kap -= wd.n[lab.order[q]];
    wd.kappa[j] = kap;
  }
  return wd;
}

}  // namespace hecke
