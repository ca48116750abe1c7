#include <gtest/gtest.h>

#include "hecke/errors.hpp"
#include "hecke/json_io.hpp"
#include "seq_helpers.hpp"

using namespace hecke;
using namespace hecke::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Arithmetic;
}

}  // namespace

TEST(Json, MonomialText) {
  EXPECT_EQ(parse_monomial("-gamma1*q^-2"), neg(g(1) * q(-2)));
  EXPECT_EQ(parse_monomial("g1^2 * g3^-1 * q"), g(1, 2) * g(3, -1) * q(1));
  EXPECT_EQ(parse_monomial("1"), Monomial());
  EXPECT_EQ(parse_monomial("-1"), Monomial(-1, 0));
  EXPECT_EQ(parse_monomial("q^3*q^-1"), q(2));
  for (const char* bad : {"", "x", "g", "g0", "q^", "q^1.5", "g1**q", "gamma1^a"})
    EXPECT_EQ(kind_of([&] { parse_monomial(bad); }), ErrorKind::Parse) << bad;
}

TEST(Json, MonomialRoundTrip) {
  Gen gen(5);
  for (int t = 0; t < 300; ++t) {
    Monomial m = gen.monomial();
    EXPECT_EQ(monomial_from_json(to_json(m)), m);
    EXPECT_EQ(monomial_from_json(Json::parse(to_json(m).dump())), m);
  }
  EXPECT_EQ(monomial_from_json(Json{{"sign", -1}, {"q", 3}, {"places", {{"gamma2", 1}}}}), neg(g(2) * q(3)));
}

TEST(Json, RatFuncRoundTrip) {
  Gen gen(9);
  for (int t = 0; t < 200; ++t) {
    RatFunc f = gen.ratfunc();
    auto back = ratfunc_from_json(Json::parse(to_json(f).dump()));
    EXPECT_EQ(back, f);
    EXPECT_EQ(to_json(back).dump(), to_json(f).dump());
  }
  EXPECT_EQ(rational_from_json("6/-4"), Rational(-3, 2));
  EXPECT_EQ(kind_of([] { rational_from_json("1/x"); }), ErrorKind::Parse);
}

TEST(Json, SequenceAndOrbit) {
  auto S = d4_seed();
  EXPECT_EQ(to_json(S).dump(),
            R"({"type":"D","rank":4,"vertex":1,"entries":{"0":"g1*q^-2","1":"g1","2":"g1*q^4","3":"g1*q^6","3__":"g1*q^2"}})");
  EXPECT_EQ(seq_from_json(to_json(S)), S);
  auto o = enumerate_orbit(S, 5000);
  auto back = orbit_from_json(Json::parse(to_json(o).dump()), S.labelling_ptr());
  EXPECT_EQ(back.members, o.members);
  EXPECT_EQ(back.edges, o.edges);
  Json shuffled = to_json(o);
  std::swap(shuffled["members"][0], shuffled["members"][1]);
  EXPECT_EQ(kind_of([&] { orbit_from_json(shuffled, S.labelling_ptr()); }), ErrorKind::Parse);
}

TEST(Json, TableauRoundTrip) {
  auto t = triplet_from_seq(e6_seed());
  ASSERT_TRUE(t);
  auto back = triplet_from_json(Json::parse(to_json(*t).dump()));
  EXPECT_EQ(seq_of_triplet(back, e6_seed().labelling_ptr()), e6_seed());
}

TEST(Json, SeedWithSpecialization) {
  auto j = Json::parse(R"({
    "type": "A", "rank": 3, "vertex": 2,
    "places": {"gamma1": {}, "gamma2": {"expr": "-gamma1*q^-2"}},
    "entries": {"0": "gamma1", "1": "gamma1*q^-2", "2": "gamma2", "2_": "gamma2"}})");
  auto seed = parse_seed(j, std::nullopt, std::nullopt);
  EXPECT_EQ(seed.seq, specialize(a3_seed(g(2)), {{2, neg(g(1) * q(-2))}}));
  EXPECT_EQ(enumerate_orbit(seed.seq, 5000).members.size(), 3u);

  j["places"]["gamma1"] = Json{{"expr", "gamma2"}};
  j["places"]["gamma2"] = Json{{"expr", "gamma1"}};
  EXPECT_EQ(kind_of([&] { parse_seed(j, std::nullopt, std::nullopt); }), ErrorKind::Parse);

  auto undeclared = Json::parse(R"({"type":"A","rank":1,"vertex":1,"places":{"g1":{}},
                                    "entries":{"0":"g1","1":"g2"}})");
  EXPECT_EQ(kind_of([&] { parse_seed(undeclared, std::nullopt, std::nullopt); }), ErrorKind::Parse);
  auto missing = Json::parse(R"({"type":"A","rank":1,"vertex":1,"entries":{"0":"g1"}})");
  EXPECT_EQ(kind_of([&] { parse_seed(missing, std::nullopt, std::nullopt); }), ErrorKind::Parse);
  auto bad_vertex = Json::parse(R"({"type":"A","rank":1,"vertex":3,"entries":{"0":"g1"}})");
  EXPECT_EQ(kind_of([&] { parse_seed(bad_vertex, std::nullopt, std::nullopt); }), ErrorKind::InvalidVertex);
}

TEST(Json, SeedFromTableau) {
  // the D_5 tableau drawn as T1 and T3
  auto j = Json::parse(R"({"tableau": {
    "T1": {"components": [{"place": "g1", "nodes": [[1,3,2],[1,4,3],[2,1,0],[2,2,1],[2,3,4]]}]},
    "T3": {"components": [{"place": "g1", "nodes": [[1,3,2],[2,1,0],[2,2,1],[2,3,3]]}]}}})");
  auto seed = parse_seed(j, RootSystemType{Family::D, 5}, 1);
  auto lab = seed.lab;
  EXPECT_EQ(seed.seq, seq(lab, {{"0", g(1) * q(-2)}, {"1", g(1)}, {"2", g(1) * q(4)}, {"3", g(1) * q(6)},
                                {"4", g(1) * q(2)}, {"3__", g(1) * q(2)}}));
  // T3 that disagrees with T1 on 0..k
  j["tableau"]["T3"]["components"][0]["nodes"][0] = Json::array({1, 2, 2});
  EXPECT_EQ(kind_of([&] { parse_seed(j, RootSystemType{Family::D, 5}, 1); }), ErrorKind::NotATableau);
}

TEST(Json, RepRoundTrip) {
  auto rep = build_rep(enumerate_orbit(a3_seed(g(2)), 5000));
  auto text = to_json(rep).dump();
  auto back = rep_from_json(Json::parse(text));
  EXPECT_EQ(back.orbit.members, rep.orbit.members);
  for (const auto& [i, m] : rep.g) EXPECT_EQ(back.g.at(i), m);
  for (const auto& [i, m] : rep.x) EXPECT_EQ(back.x.at(i), m);
  EXPECT_EQ(to_json(back).dump(), text);
  EXPECT_TRUE(verify_relations(back).ok());

  auto report = to_json(verify_relations(back));
  EXPECT_TRUE(report["ok"].get<bool>());
  EXPECT_EQ(report["failed"].get<int>(), 0);
}

TEST(Json, WeylRepAndQMatrix) {
  auto w = classical_limit(enumerate_orbit(d4_level1_seed(), 5000), -1);
  auto j = to_json(w);
  EXPECT_EQ(j["eps"].get<int>(), -1);
  for (const auto& [i, m] : w.r) EXPECT_EQ(qmatrix_from_json(j["r"][w.lab->name(i)]), m);
}
