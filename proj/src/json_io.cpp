#include "hecke/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::Parse, msg); }

int parse_int(const std::string& s, const std::string& context) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    fail("bad integer '" + s + "' in " + context);
  }
  if (used != s.size()) fail("bad integer '" + s + "' in " + context);
  return v;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(std::string("wrong JSON type for ") + what);
  }
}

Family family_from(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "D") return Family::D;
  if (s == "E") return Family::E;
  throw Error(ErrorKind::InvalidRootSystem, "unknown family '" + s + "'");
}

}  // namespace

PlaceSymbol parse_place_name(const std::string& text) {
  std::string digits;
  if (text.rfind("gamma", 0) == 0)
    digits = text.substr(5);
  else if (text.rfind("g", 0) == 0)
    digits = text.substr(1);
  else
    fail("bad place name '" + text + "'");
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
    fail("bad place name '" + text + "'");
  int id = parse_int(digits, "place name");
  if (id < 1) fail("place ids start at 1");
  return id;
}

Monomial parse_monomial(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail("empty monomial");
  Monomial m;
  std::size_t at = 0;
  if (s[0] == '-') m = m.with_sign(-1), at = 1;
  while (true) {
    std::size_t star = s.find('*', at);
    std::string f = s.substr(at, star == std::string::npos ? std::string::npos : star - at);
    if (f.empty()) fail("bad monomial '" + text + "'");
    std::string base = f, exp = "1";
    if (auto hat = f.find('^'); hat != std::string::npos) base = f.substr(0, hat), exp = f.substr(hat + 1);
    int e = parse_int(exp, "monomial '" + text + "'");
    if (base == "q")
      m *= Monomial::q_power(e);
    else if (base == "1")
      ;
    else
      m *= Monomial::place(parse_place_name(base), e);
    if (star == std::string::npos) break;
    at = star + 1;
  }
  return m;
}

Json to_json(const Monomial& m) { return m.to_string(); }

Monomial monomial_from_json(const Json& j) {
  if (j.is_string()) return parse_monomial(j.get<std::string>());
  if (j.is_object()) {
    Monomial m = Monomial(j.value("sign", 1) < 0 ? -1 : 1, j.value("q", 0));
    if (j.contains("places"))
      for (const auto& [name, e] : j.at("places").items()) m *= Monomial::place(parse_place_name(name), get<int>(e, "place exponent"));
    return m;
  }
  fail("a monomial is a string or an object");
}

Json to_json(const Rational& r) { return r.get_str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail("a rational is a string like \"-3/4\"");
  Rational r;
  if (r.set_str(j.get<std::string>(), 10) != 0) fail("bad rational '" + j.get<std::string>() + "'");
  r.canonicalize();
  return r;
}

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) out.push_back(Json::array({to_json(c), to_json(m)}));
  return out;
}

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_array()) fail("a polynomial is a list of [coefficient, monomial]");
  LaurentPoly p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) fail("a polynomial term is [coefficient, monomial]");
    p += LaurentPoly(rational_from_json(t[0]), monomial_from_json(t[1]));
  }
  return p;
}

Json to_json(const RatFunc& f) {
  Json den = Json::array();
  for (const auto& [p, e] : f.den_factors()) den.push_back(Json::array({to_json(p), e}));
  return Json{{"num", to_json(f.num())}, {"den", den}};
}

RatFunc ratfunc_from_json(const Json& j) {
  RatFunc f(poly_from_json(field(j, "num")));
  for (const auto& d : field(j, "den")) {
    if (!d.is_array() || d.size() != 2) fail("a denominator factor is [polynomial, exponent]");
    LaurentPoly p = poly_from_json(d[0]);
    int e = get<int>(d[1], "factor exponent");
    if (e < 0) fail("negative factor exponent");
    for (int t = 0; t < e; ++t) f = f / RatFunc(p);
  }
  return f;
}

Json labelling_json(const NewLabelling& lab) {
  return Json{{"type", family_name(lab.R.family)}, {"rank", lab.R.rank}, {"vertex", lab.v}};
}

LabellingPtr labelling_from_json(const Json& j) {
  auto f = family_from(get<std::string>(field(j, "type"), "type"));
  return build_labelling(make_root_system(f, get<int>(field(j, "rank"), "rank")),
                         get<int>(field(j, "vertex"), "vertex"));
}

Json entries_json(const ContentSeq& S) {
  Json out = Json::object();
  const NewLabelling& lab = S.labelling();
  for (int p = 0; p < lab.size(); ++p) out[lab.name(lab.order[p])] = to_json(S.at(p));
  return out;
}

ContentSeq seq_from_entries(const Json& entries, const LabellingPtr& lab) {
  if (!entries.is_object()) fail("entries must be an object keyed by vertex label");
  std::vector<std::optional<Monomial>> e(lab->size());
  for (const auto& [name, v] : entries.items()) {
    int p = lab->position(lab->parse_name(name));
    if (e[p]) fail("label '" + name + "' given twice");
    e[p] = monomial_from_json(v);
  }
  std::vector<Monomial> out;
  for (int p = 0; p < lab->size(); ++p) {
    if (!e[p]) fail("no entry for label '" + lab->name(lab->order[p]) + "'");
    out.push_back(*e[p]);
  }
  return ContentSeq(lab, out);
}

Json to_json(const ContentSeq& S) {
  Json j = labelling_json(S.labelling());
  j["entries"] = entries_json(S);
  return j;
}

ContentSeq seq_from_json(const Json& j) { return seq_from_entries(field(j, "entries"), labelling_from_json(j)); }

Json to_json(const Tableau& T) {
  Json comps = Json::array();
  for (const auto& c : T.components) {
    Json nodes = Json::array();
    for (const auto& cell : c.cells) nodes.push_back(Json::array({cell.x, cell.y, cell.num}));
    comps.push_back(Json{{"place", to_json(c.place)}, {"nodes", nodes}});
  }
  return Json{{"components", comps}};
}

Tableau tableau_from_json(const Json& j) {
  Tableau T;
  for (const auto& c : field(j, "components")) {
    PlacedComponent pc{monomial_from_json(field(c, "place")), {}};
    for (const auto& n : field(c, "nodes")) {
      if (!n.is_array() || n.size() != 3) fail("a node is [row, column, number]");
      pc.cells.push_back({get<int>(n[0], "row"), get<int>(n[1], "column"), get<int>(n[2], "number")});
    }
    T.components.push_back(pc);
  }
  return T;
}

Json to_json(const TripletTableau& T) {
  return Json{{"T1", to_json(T.t1)}, {"T2", to_json(T.t2)}, {"T3", to_json(T.t3)}};
}

TripletTableau triplet_from_json(const Json& j) {
  TripletTableau T;
  T.t1 = tableau_from_json(field(j, "T1"));
  // T2 and T3 may be left out when they are determined by T1
  T.t2 = j.contains("T2") ? tableau_from_json(j.at("T2")) : restrict(T.t1, std::min(1, T.t1.size() - 1));
  T.t3 = j.contains("T3") ? tableau_from_json(j.at("T3")) : T.t1;
  return T;
}

ContentSeq seq_of_triplet(const TripletTableau& T, const LabellingPtr& lab) {
  for (const Tableau* t : {&T.t1, &T.t2, &T.t3})
    if (!is_standard(*t)) throw Error(ErrorKind::NotATableau, "tableau is not standard");
  if (T.t1.size() != lab->l + 1 || T.t2.size() != lab->lp + 1 || T.t3.size() != lab->lpp + 1)
    throw Error(ErrorKind::NotATableau, "tableau sizes do not match l+1, l'+1, l''+1");
  auto s1 = seq_of_tableau(T.t1), s2 = seq_of_tableau(T.t2), s3 = seq_of_tableau(T.t3);
  if (!std::equal(s2.begin(), s2.begin() + 2, s1.begin()) ||
      !std::equal(s3.begin(), s3.begin() + lab->k + 1, s1.begin()))
    throw Error(ErrorKind::NotATableau, "T1, T2, T3 disagree on their shared part");
  std::vector<Monomial> e(lab->size());
  for (int a = 0; a <= lab->l; ++a) e[lab->position(a == 0 ? VLabel::zero() : VLabel::plain(a))] = s1[a];
  for (int b = 2; b <= lab->lp; ++b) e[lab->position(VLabel::under(b))] = s2[b];
  for (int c = lab->k + 1; c <= lab->lpp && lab->R.family != Family::A; ++c)
    e[lab->position(VLabel::dunder(c))] = s3[c];
  return ContentSeq(lab, e);
}

Seed parse_seed(const Json& j, std::optional<RootSystemType> R, std::optional<int> vertex) {
  if (!j.is_object()) fail("seed must be a JSON object");
  if (!R) {
    if (!j.contains("type") || !j.contains("rank")) fail("root system not given by flags or seed");
    R = make_root_system(family_from(get<std::string>(j.at("type"), "type")), get<int>(j.at("rank"), "rank"));
  }
  if (!vertex) {
    if (!j.contains("vertex")) fail("vertex not given by flags or seed");
    vertex = get<int>(j.at("vertex"), "vertex");
  }
  LabellingPtr lab = build_labelling(*R, *vertex);
  std::map<PlaceSymbol, Monomial> subs;
  std::set<PlaceSymbol> declared;
  if (j.contains("places")) {
    for (const auto& [name, spec] : j.at("places").items()) {
      PlaceSymbol id = parse_place_name(name);
      declared.insert(id);
      if (spec.is_object() && spec.contains("expr")) subs[id] = monomial_from_json(spec.at("expr"));
    }
  }
  ContentSeq raw = j.contains("tableau") ? seq_of_triplet(triplet_from_json(j.at("tableau")), lab)
                                         : seq_from_entries(field(j, "entries"), lab);
  if (j.contains("places"))
    for (const auto& m : raw.entries())
      for (auto [id, e] : m.places())
        if (!declared.count(id)) fail("place g" + std::to_string(id) + " is used but not declared");
  // substitute until stable; a cycle never stabilizes
  std::vector<Monomial> e = raw.entries();
  for (std::size_t round = 0;; ++round) {
    std::vector<Monomial> next;
    for (const auto& m : e) next.push_back(mono_substitute(m, subs));
    if (next == e) break;
    if (round > subs.size()) fail("place specializations are cyclic");
    e = next;
  }
  return Seed{lab, ContentSeq(lab, e), subs};
}

Json to_json(const Orbit& o) {
  Json members = Json::array(), edges = Json::array();
  for (const auto& m : o.members) members.push_back(entries_json(m));
  for (const auto& e : o.edges) {
    const NewLabelling& lab = o.members.front().labelling();
    edges.push_back(Json{{"from", e.from}, {"gen", lab.name(e.gen)}, {"to", e.to}});
  }
  return Json{{"members", members}, {"edges", edges}};
}

Orbit orbit_from_json(const Json& j, const LabellingPtr& lab) {
  Orbit o;
  for (const auto& m : field(j, "members")) o.members.push_back(seq_from_entries(m, lab));
  for (std::size_t a = 1; a < o.members.size(); ++a)
    if (!(o.members[a - 1] < o.members[a])) fail("orbit members must be distinct and in canonical order");
  int n = int(o.members.size());
  if (j.contains("edges"))
    for (const auto& e : j.at("edges")) {
      Orbit::Edge edge{get<int>(field(e, "from"), "from"), lab->parse_name(get<std::string>(field(e, "gen"), "gen")),
                       get<int>(field(e, "to"), "to")};
      if (edge.from < 0 || edge.from >= n || edge.to < 0 || edge.to >= n) fail("edge index out of range");
      o.edges.push_back(edge);
    }
  return o;
}

Json to_json(const SymMatrix& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int k = 0; k < m.cols(); ++k)
      if (!m(i, k).is_zero()) entries.push_back(Json::array({i, k, to_json(m(i, k))}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

SymMatrix symmatrix_from_json(const Json& j) {
  SymMatrix m(get<int>(field(j, "rows"), "rows"), get<int>(field(j, "cols"), "cols"));
  for (const auto& e : field(j, "entries")) {
    if (!e.is_array() || e.size() != 3) fail("a matrix entry is [row, column, value]");
    int r = get<int>(e[0], "row"), c = get<int>(e[1], "column");
    if (r < 0 || r >= m.rows() || c < 0 || c >= m.cols()) fail("matrix entry out of range");
    m(r, c) = ratfunc_from_json(e[2]);
  }
  return m;
}

Json to_json(const QMatrix& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int k = 0; k < m.cols(); ++k)
      if (m(i, k) != 0) entries.push_back(Json::array({i, k, to_json(m(i, k))}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

QMatrix qmatrix_from_json(const Json& j) {
  QMatrix m(get<int>(field(j, "rows"), "rows"), get<int>(field(j, "cols"), "cols"));
  for (const auto& e : field(j, "entries")) {
    if (!e.is_array() || e.size() != 3) fail("a matrix entry is [row, column, value]");
    int r = get<int>(e[0], "row"), c = get<int>(e[1], "column");
    if (r < 0 || r >= m.rows() || c < 0 || c >= m.cols()) fail("matrix entry out of range");
    m(r, c) = rational_from_json(e[2]);
  }
  return m;
}

Json to_json(const SeminormalRep& rep) {
  Json j = labelling_json(*rep.lab);
  j["dim"] = rep.dim();
  j["orbit"] = to_json(rep.orbit);
  Json g = Json::object(), x = Json::object();
  for (const auto& lbl : rep.lab->order) {
    if (rep.g.count(lbl)) g[rep.lab->name(lbl)] = to_json(rep.g.at(lbl));
    x[rep.lab->name(lbl)] = to_json(rep.x.at(lbl));
  }
  j["g"] = g;
  j["x"] = x;
  return j;
}

SeminormalRep rep_from_json(const Json& j) {
  SeminormalRep rep;
  rep.lab = labelling_from_json(j);
  rep.orbit = orbit_from_json(field(j, "orbit"), rep.lab);
  int n = rep.dim();
  auto read = [&](const char* key, std::map<VLabel, SymMatrix>& into, bool with_zero) {
    for (const auto& [name, m] : field(j, key).items()) into[rep.lab->parse_name(name)] = symmatrix_from_json(m);
    for (const auto& lbl : rep.lab->order) {
      if (!with_zero && lbl == VLabel::zero()) continue;
      auto it = into.find(lbl);
      if (it == into.end()) fail(std::string("missing ") + key + " matrix for " + rep.lab->name(lbl));
      if (it->second.rows() != n || it->second.cols() != n) fail("matrix size does not match the orbit");
    }
  };
  read("g", rep.g, false);
  read("x", rep.x, true);
  if (rep.g.count(VLabel::zero())) fail("there is no generator g_0");
  return rep;
}

Json to_json(const RelationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e{{"name", c.name}, {"ok", c.ok}};
    e["where"] = c.where ? Json::array({c.where->first, c.where->second}) : Json(nullptr);
    checks.push_back(e);
  }
  return Json{{"ok", r.ok()}, {"failed", r.failures().size()}, {"checks", checks}};
}

Json to_json(const WeylRep& w) {
  Json r = Json::object();
  for (const auto& lbl : w.lab->order)
    if (w.r.count(lbl)) r[w.lab->name(lbl)] = to_json(w.r.at(lbl));
  Json j = labelling_json(*w.lab);
  j["eps"] = w.eps;
  j["r"] = r;
  return j;
}

}  // namespace hecke
