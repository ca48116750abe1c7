#include <gtest/gtest.h>

#include <set>

#include "hecke/errors.hpp"
#include "seq_helpers.hpp"

using namespace hecke;
using namespace hecke::testing;

namespace {

// The Weyl action written branch by branch: swap s_i with s_pred(i), and at a
// ramification multiply the far part of the other branch(es) by s_i/s_pred(i).
ContentSeq reflect_by_branches(const VLabel& i, const ContentSeq& S) {
  const NewLabelling& lab = S.labelling();
  VLabel p = pred(lab, i);
  Monomial ratio = S[i] / S[p];
  std::vector<Monomial> e = S.entries();
  std::swap(e[lab.position(i)], e[lab.position(p)]);
  auto scale = [&](Branch b, int from, int to) {
    for (int x = from; x <= to; ++x) e[lab.position({b, x})] *= ratio;
  };
  bool typeA = lab.R.family == Family::A;
  // ramification at plain 1 (two or three branches leave it)
  if (i == VLabel::plain(2)) {
    scale(Branch::under, 2, lab.lp);
    if (!typeA && lab.k == 1) scale(Branch::dunder, 2, lab.lpp);
  } else if (i == VLabel::under(2)) {
    // everything on the plain side of vertex 1, dunder arm included
    scale(Branch::plain, 2, lab.l);
    if (!typeA) scale(Branch::dunder, lab.k + 1, lab.lpp);
  } else if (!typeA && lab.k == 1 && i == VLabel::dunder(2)) {
    scale(Branch::plain, 2, lab.l);
    scale(Branch::under, 2, lab.lp);
  }
  // ramification at plain k >= 2
  if (!typeA && lab.k >= 2) {
    if (i == VLabel::plain(lab.k + 1)) scale(Branch::dunder, lab.k + 1, lab.lpp);
    if (i == VLabel::dunder(lab.k + 1)) scale(Branch::plain, lab.k + 1, lab.l);
  }
  return ContentSeq(S.labelling_ptr(), e);
}

std::vector<LabellingPtr> sample_labellings() {
  std::vector<LabellingPtr> r;
  for (int n = 1; n <= 5; ++n)
    for (int v = 1; v <= n; ++v) r.push_back(build_labelling({Family::A, n}, v));
  for (int n = 4; n <= 7; ++n)
    for (int v = 1; v <= n; ++v) r.push_back(build_labelling({Family::D, n}, v));
  for (int n = 6; n <= 8; ++n)
    for (int v = 1; v <= n; ++v) r.push_back(build_labelling({Family::E, n}, v));
  return r;
}

std::vector<VLabel> word(const VLabel& i, const VLabel& j, int m) {
  std::vector<VLabel> w;
  for (int t = 0; t < m; ++t) w.push_back(t % 2 == 0 ? i : j);
  return w;
}

std::map<PlaceSymbol, Monomial> sub2(const Monomial& m) { return {{2, m}}; }

}  // namespace

TEST(Reflect, TypeAIsTransposition) {
  auto lab = build_labelling({Family::A, 4}, 1);
  Gen gen(1);
  for (int t = 0; t < 20; ++t) {
    auto S = random_seq(gen, lab);
    for (int a = 1; a <= 4; ++a) {
      auto R = reflect(VLabel::plain(a), S);
      auto e = S.entries();
      std::swap(e[a - 1], e[a]);
      EXPECT_EQ(R.entries(), e);
    }
  }
}

TEST(Reflect, A3VertexTwoExample) {
  auto S = a3_seed(g(2));
  auto R = reflect(VLabel::plain(2), S);
  auto expect = seq(S.labelling_ptr(),
                    {{"0", g(1)}, {"1", g(2)}, {"2", g(1) * q(-2)}, {"2_", g(1, -1) * g(2, 2) * q(2)}});
  EXPECT_EQ(R, expect);
}

TEST(Reflect, MatchesBranchFormulasProperty) {
  Gen gen(2);
  for (const auto& lab : sample_labellings()) {
    for (int t = 0; t < 10; ++t) {
      auto S = random_seq(gen, lab);
      for (int p = 1; p < lab->size(); ++p) {
        VLabel i = lab->order[p];
        EXPECT_EQ(reflect(i, S), reflect_by_branches(i, S))
            << family_name(lab->R.family) << lab->R.rank << " v=" << lab->v << " i=" << lab->name(i);
      }
    }
  }
}

TEST(Reflect, InvolutionProperty) {
  Gen gen(3);
  for (const auto& lab : sample_labellings())
    for (int t = 0; t < 5; ++t) {
      auto S = random_seq(gen, lab);
      for (int p = 1; p < lab->size(); ++p) EXPECT_EQ(reflect_at(p, reflect_at(p, S)), S);
    }
}

TEST(Reflect, RatioLemmaProperty) {
  Gen gen(4);
  for (const auto& lab : sample_labellings()) {
    auto S = random_seq(gen, lab);
    for (int pi = 1; pi < lab->size(); ++pi)
      for (int pj = 1; pj < lab->size(); ++pj) {
        if (pi == pj) continue;
        int ppi = lab->pred_position(pi), ppj = lab->pred_position(pj);
        auto Rj = reflect_at(pj, S);
        if (!lab->adjacent(pi, pj)) {
          EXPECT_EQ(Rj.at(pi) / Rj.at(ppi), S.at(pi) / S.at(ppi));
        } else {
          auto Ri = reflect_at(pi, S);
          EXPECT_EQ(Rj.at(pi) / Rj.at(ppi), Ri.at(pj) / Ri.at(ppj));
        }
      }
  }
}

TEST(TruncReflect, Examples) {
  auto lab = build_labelling({Family::A, 2}, 1);
  auto S = seq(lab, {{"0", g(1)}, {"1", g(1) * q(2)}, {"2", g(1) * q(8)}});
  EXPECT_FALSE(trunc_reflect(VLabel::plain(1), S));
  auto T = seq(lab, {{"0", g(1)}, {"1", g(1) * q(4)}, {"2", g(1) * q(8)}});
  auto r = trunc_reflect(VLabel::plain(1), T);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, reflect(VLabel::plain(1), T));
  EXPECT_FALSE(trunc_reflect(VLabel::plain(1), TruncResult{}));
}

TEST(ApplyWord, Examples) {
  auto S = a3_seed(g(2));
  EXPECT_EQ(apply_word({}, S), TruncResult(S));
  VLabel two = VLabel::plain(2);
  ASSERT_TRUE(trunc_reflect(two, S));
  EXPECT_EQ(apply_word({two, two}, S), TruncResult(S));
}

TEST(ApplyWord, TruncatedBraidRelationsProperty) {
  Gen gen(5);
  for (const auto& lab : sample_labellings()) {
    for (int t = 0; t < 15; ++t) {
      auto S = random_seq(gen, lab);
      for (int pi = 1; pi < lab->size(); ++pi)
        for (int pj = pi + 1; pj < lab->size(); ++pj) {
          VLabel i = lab->order[pi], j = lab->order[pj];
          int m = coxeter_order(*lab, i, j);
          EXPECT_EQ(apply_word(word(i, j, m), S), apply_word(word(j, i, m), S));
          if (m == 2) {
            bool both = trunc_reflect(i, S).has_value() && trunc_reflect(j, S).has_value();
            EXPECT_EQ(apply_word({i, j}, S).has_value(), both);
          }
        }
    }
  }
}

TEST(Orbit, A3VertexTwoCounts) {
  auto generic = a3_seed(g(2));
  EXPECT_EQ(enumerate_orbit(generic, 5000).members.size(), 12u);
  auto six = specialize(generic, sub2(neg(g(1))));
  EXPECT_EQ(enumerate_orbit(six, 5000).members.size(), 6u);
  auto three = specialize(generic, sub2(neg(g(1) * q(-2))));
  auto o = enumerate_orbit(three, 5000);
  ASSERT_EQ(o.members.size(), 3u);
  // the three members listed for a = -2
  auto lab = generic.labelling_ptr();
  Monomial m = neg(g(1) * q(-2));
  std::set<ContentSeq> expect{
      seq(lab, {{"0", g(1)}, {"1", g(1) * q(-2)}, {"2", m}, {"2_", m}}),
      seq(lab, {{"0", g(1)}, {"1", m}, {"2", g(1) * q(-2)}, {"2_", g(1) * q(-2)}}),
      seq(lab, {{"0", m}, {"1", g(1)}, {"2", g(1) * q(-2)}, {"2_", g(1) * q(-2)}})};
  EXPECT_EQ(std::set<ContentSeq>(o.members.begin(), o.members.end()), expect);
}

TEST(Orbit, TooLargeGuard) {
  try {
    enumerate_orbit(a3_seed(g(2)), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrbitTooLarge);
  }
}

TEST(Orbit, ClosedSortedAndConnected) {
  Gen gen(6);
  for (const auto& lab : sample_labellings()) {
    if (lab->size() > 7) continue;
    auto S = random_seq(gen, lab);
    auto o = enumerate_orbit(S, 50000);
    EXPECT_TRUE(std::is_sorted(o.members.begin(), o.members.end()));
    EXPECT_GE(o.index_of(S), 0);
    std::vector<std::vector<int>> adj(o.members.size());
    std::size_t nonzero = 0;
    for (std::size_t x = 0; x < o.members.size(); ++x)
      for (int p = 1; p < lab->size(); ++p) {
        auto img = trunc_reflect_at(p, o.members[x]);
        if (!img) continue;
        ++nonzero;
        int y = o.index_of(*img);
        ASSERT_GE(y, 0);
        adj[x].push_back(y);
      }
    EXPECT_EQ(nonzero, o.edges.size());
    std::vector<bool> seen(o.members.size());
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (!seen[y]) seen[y] = true, stack.push_back(y);
    }
    EXPECT_EQ(std::count(seen.begin(), seen.end(), true), long(o.members.size()));
  }
}

TEST(Orbit, BoundedByWeylGroupAndPartition) {
  Gen gen(7);
  struct Case { Family f; int n, v; long w; };
  for (auto c : {Case{Family::A, 3, 2, 24}, Case{Family::D, 4, 1, 192}, Case{Family::A, 4, 3, 120}}) {
    auto lab = build_labelling({c.f, c.n}, c.v);
    for (int t = 0; t < 10; ++t) {
      auto S = random_seq(gen, lab), T = random_seq(gen, lab);
      auto oS = enumerate_orbit(S, 100000), oT = enumerate_orbit(T, 100000);
      EXPECT_LE(long(oS.members.size()), c.w);
      bool meet = false;
      for (const auto& m : oT.members) meet = meet || oS.index_of(m) >= 0;
      if (meet) EXPECT_EQ(oS.members, oT.members);
      // any member regenerates the same orbit
      auto again = enumerate_orbit(oS.members.back(), 100000);
      EXPECT_EQ(again.members, oS.members);
    }
  }
}

TEST(Substrings, Examples) {
  auto a = build_labelling({Family::A, 3}, 1);
  auto S = seq(a, {{"0", g(1)}, {"1", q(1)}, {"2", q(2)}, {"3", q(3)}});
  auto s = substrings(S);
  EXPECT_EQ(s.s1, S.entries());
  EXPECT_EQ(s.s2, (std::vector<Monomial>{g(1), q(1)}));
  EXPECT_EQ(s.s3, s.s1);

  auto e = build_labelling({Family::E, 6}, 3);
  auto T = seq(e, {{"0", g(1)}, {"1", g(1) * q(2)}, {"2", g(1) * q(-2)}, {"3", g(1) * q(4)},
                   {"4", g(1)}, {"2_", g(1) * q(-2)}, {"3__", g(1) * q(4)}});
  auto t = substrings(T);
  EXPECT_EQ(t.s2, (std::vector<Monomial>{g(1), g(1) * q(2), g(1) * q(-2)}));

  auto d = build_labelling({Family::D, 5}, 1);
  auto U = seq(d, {{"0", q(10)}, {"1", q(11)}, {"2", q(12)}, {"3", q(13)}, {"4", q(14)}, {"3__", q(15)}});
  EXPECT_EQ(substrings(U).s3, (std::vector<Monomial>{q(10), q(11), q(12), q(15)}));
}

TEST(Delta, Examples) {
  auto lab = build_labelling({Family::A, 1}, 1);
  auto wd = weight_data(*lab);
  auto row = seq(lab, {{"0", g(1)}, {"1", g(1) * q(2)}});
  EXPECT_EQ(delta_invariant(row, wd), g(1, 2) * q(2));
  auto S = a3_seed(g(2));
  auto wd3 = weight_data(S.labelling());
  auto o = enumerate_orbit(S, 5000);
  std::set<Monomial> values;
  for (const auto& m : o.members) values.insert(delta_invariant(m, wd3));
  EXPECT_EQ(values.size(), 1u);
}

TEST(Delta, InvariantUnderReflectionProperty) {
  Gen gen(8);
  for (const auto& lab : sample_labellings()) {
    auto wd = weight_data(*lab);
    for (int t = 0; t < 5; ++t) {
      auto S = random_seq(gen, lab);
      for (int p = 1; p < lab->size(); ++p)
        EXPECT_EQ(delta_invariant(reflect_at(p, S), wd), delta_invariant(S, wd));
    }
  }
}
