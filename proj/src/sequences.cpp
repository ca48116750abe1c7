#include "hecke/sequences.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "hecke/errors.hpp"

namespace hecke {

ContentSeq::ContentSeq(LabellingPtr lab, std::vector<Monomial> entries)
    : lab_(std::move(lab)), e_(std::move(entries)) {
  if (int(e_.size()) != lab_->size())
    throw Error(ErrorKind::IndexOutOfRange, "sequence length does not match the labelling");
}

std::string ContentSeq::to_string() const {
  std::string s = "(";
  for (int p = 0; p < lab_->size(); ++p) {
    if (p) s += ", ";
    s += lab_->name(lab_->order[p]) + ": " + e_[p].to_string();
  }
  return s + ")";
}

// c_j(r_i S) = s_j * (s_i / s_pred(i))^(-alpha_i^vee(delta_j)).
ContentSeq reflect_at(int pi, const ContentSeq& S) {
  const NewLabelling& lab = S.labelling();
  Monomial ratio = S.at(pi) / S.at(lab.pred_position(pi));
  std::vector<Monomial> out = S.entries();
  for (int j = 0; j < lab.size(); ++j) {
    int a = lab.pairing_delta(pi, j);
    if (a != 0) out[j] *= ratio.pow(-a);
  }
  return ContentSeq(S.labelling_ptr(), std::move(out));
}

ContentSeq reflect(const VLabel& i, const ContentSeq& S) {
  return reflect_at(S.labelling().position(i), S);
}

TruncResult trunc_reflect_at(int pi, const ContentSeq& S) {
  const Monomial& a = S.at(pi);
  const Monomial& b = S.at(S.labelling().pred_position(pi));
  if (mono_q_shift_eq(a, b, 2) || mono_q_shift_eq(a, b, -2)) return std::nullopt;
  return reflect_at(pi, S);
}

TruncResult trunc_reflect(const VLabel& i, const TruncResult& S) {
  if (!S) return std::nullopt;
  return trunc_reflect_at(S->labelling().position(i), *S);
}

TruncResult apply_word(const std::vector<VLabel>& word, const ContentSeq& S) {
  TruncResult r = S;
  for (const auto& i : word) r = trunc_reflect(i, r);
  return r;
}

int Orbit::index_of(const ContentSeq& S) const {
  auto it = std::lower_bound(members.begin(), members.end(), S);
  if (it == members.end() || !(*it == S)) return -1;
  return int(it - members.begin());
}

namespace {

struct Closure {
  std::vector<ContentSeq> found;  // discovery order
  std::vector<std::tuple<int, int, int>> edges;  // (from, generator position, to)
};

Closure close(const ContentSeq& S, int max_size) {
  if (max_size < 1) throw Error(ErrorKind::OrbitTooLarge, "max orbit size must be positive");
  Closure c;
  std::map<std::vector<Monomial>, int> seen;
  c.found.push_back(S);
  seen.emplace(S.entries(), 0);
  int m = S.labelling().size();
  for (std::size_t head = 0; head < c.found.size(); ++head) {
    for (int p = 1; p < m; ++p) {
      auto img = trunc_reflect_at(p, c.found[head]);
      if (!img) continue;
      auto [it, fresh] = seen.emplace(img->entries(), int(c.found.size()));
      if (fresh) {
        if (int(c.found.size()) >= max_size)
          throw Error(ErrorKind::OrbitTooLarge,
                      "orbit has more than " + std::to_string(max_size) + " members");
        c.found.push_back(*img);
      }
      c.edges.emplace_back(int(head), p, it->second);
    }
  }
  return c;
}

}  // namespace

Orbit enumerate_orbit(const ContentSeq& S, int max_size) {
  Closure c = close(S, max_size);
  std::vector<int> perm(c.found.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = int(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return c.found[a] < c.found[b]; });
  std::vector<int> rank(perm.size());
  Orbit o;
  for (std::size_t r = 0; r < perm.size(); ++r) {
    rank[perm[r]] = int(r);
    o.members.push_back(c.found[perm[r]]);
  }
  const NewLabelling& lab = S.labelling();
  for (auto [f, p, t] : c.edges) o.edges.push_back({rank[f], lab.order[p], rank[t]});
  std::sort(o.edges.begin(), o.edges.end(), [&](const Orbit::Edge& a, const Orbit::Edge& b) {
    return std::tuple(a.from, lab.position(a.gen), a.to) < std::tuple(b.from, lab.position(b.gen), b.to);
  });
  return o;
}

std::vector<ContentSeq> orbit_bfs_order(const ContentSeq& S, int max_size) {
  return close(S, max_size).found;
}

Substrings substrings(const ContentSeq& S) {
  const NewLabelling& lab = S.labelling();
  Substrings r;
  r.s1.push_back(S[VLabel::zero()]);
  for (int a = 1; a <= lab.l; ++a) r.s1.push_back(S[VLabel::plain(a)]);
  r.s2 = {S[VLabel::zero()], S[VLabel::plain(1)]};
  for (int b = 2; b <= lab.lp; ++b) r.s2.push_back(S[VLabel::under(b)]);
  r.s3.assign(r.s1.begin(), r.s1.begin() + lab.k + 1);
  if (lab.R.family != Family::A)
    for (int c = lab.k + 1; c <= lab.lpp; ++c) r.s3.push_back(S[VLabel::dunder(c)]);
  return r;
}

Monomial delta_invariant(const ContentSeq& S, const WeightData& wd) {
  Monomial d;
  for (const auto& [j, kap] : wd.kappa) d *= S[j].pow(int(kap));
  return d;
}

}  // namespace hecke
