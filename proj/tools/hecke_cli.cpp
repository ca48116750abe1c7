// hecke_cli: labellings, orbits, seminormal representations and their checks.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hecke/errors.hpp"
#include "hecke/json_io.hpp"

using namespace hecke;
using hecke::Error;

namespace {

// Exit codes. Library errors occupy 10 + ErrorKind, in enum order.
constexpr int kUsage = 2;
constexpr int kIo = 21;
constexpr int kRelationsFailed = 30;

int exit_code(ErrorKind k) { return 10 + static_cast<int>(k); }

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a required argument is missing
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string type;
  int rank = 0;
  int vertex = 0;
  std::string seed;
  int max_orbit = 5000;
  std::optional<int> eps;
  std::string out;
  bool all = false;
};

Family family_of(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "D" || s == "d") return Family::D;
  if (s == "E" || s == "e") return Family::E;
  throw Error(ErrorKind::InvalidRootSystem, "unknown family '" + s + "'");
}

std::optional<RootSystemType> flag_system(const Config& cfg) {
  if (cfg.type.empty()) return std::nullopt;
  return make_root_system(family_of(cfg.type), cfg.rank);
}

std::optional<int> flag_vertex(const Config& cfg) {
  if (cfg.vertex == 0) return std::nullopt;
  return cfg.vertex;
}

Json read_json(const std::string& path) {
  if (path.empty()) throw UsageError("--seed is required");
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

Seed load_seed(const Config& cfg) { return parse_seed(read_json(cfg.seed), flag_system(cfg), flag_vertex(cfg)); }

// JSON goes to stdout, or to --out with the one line summary on stdout.
void emit(const Config& cfg, const Json& j, const std::string& summary) {
  if (cfg.out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw IoError("cannot write " + cfg.out);
  f << j.dump(2) << "\n";
  if (!f) throw IoError("write failed: " + cfg.out);
  std::cout << summary << "\n";
}

void emit_text(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw IoError("cannot write " + cfg.out);
  f << text;
}

Json witness_json(const std::optional<ContentSeq>& w) { return w ? entries_json(*w) : Json(nullptr); }

int cmd_label(const Config& cfg) {
  auto R = flag_system(cfg);
  if (!R || !flag_vertex(cfg)) throw UsageError("label needs a type, rank and vertex");
  auto lab = build_labelling(*R, cfg.vertex);
  std::ostringstream os;
  os << family_name(R->family) << R->rank << " v=" << lab->v << "\n";
  os << "l=" << lab->l << " l'=" << lab->lp << " l''=" << lab->lpp << " k=" << lab->k << "\n";
  os << "label  standard\n";
  for (const auto& j : lab->order) {
    std::string name = lab->name(j);
    os << name << std::string(7 - std::min<std::size_t>(name.size(), 6), ' ');
    auto it = lab->to_standard.find(j);
    if (it == lab->to_standard.end())
      os << "-\n";
    else
      os << it->second << "\n";
  }
  emit_text(cfg, os.str());
  return 0;
}

int cmd_orbit(const Config& cfg) {
  Seed seed = load_seed(cfg);
  Admissibility a = is_admissible(seed.seq, cfg.max_orbit);
  WeightData wd = weight_data(*seed.lab);
  Json j = labelling_json(*seed.lab);
  j["seed"] = entries_json(seed.seq);
  j["size"] = a.orbit.members.size();
  j["orbit"] = to_json(a.orbit);
  j["admissible"] = a.admissible;
  j["witness"] = witness_json(a.witness);
  j["level1"] = a.admissible ? Json(is_level1(a.orbit)) : Json(nullptr);
  j["level1_by_shapes"] = a.admissible ? Json(is_level1_by_shapes(a.orbit)) : Json(nullptr);
  j["delta"] = to_json(delta_invariant(seed.seq, wd));
  std::string summary = "orbit: " + std::to_string(a.orbit.members.size()) + " members, " +
                        (a.admissible ? "admissible" : "not admissible");
  if (a.admissible) summary += is_level1(a.orbit) ? ", level 1" : ", not level 1";
  emit(cfg, j, summary);
  return 0;
}

int cmd_admissible(const Config& cfg) {
  Seed seed = load_seed(cfg);
  Admissibility a = is_admissible(seed.seq, cfg.max_orbit);
  Json j = labelling_json(*seed.lab);
  j["admissible"] = a.admissible;
  j["size"] = a.orbit.members.size();
  j["witness"] = witness_json(a.witness);
  emit(cfg, j, a.admissible ? "admissible" : "not admissible: " + a.witness->to_string());
  return 0;
}

void add_classical(Json& j, const SeminormalRep& rep, int eps, bool& ok) {
  WeylRep w = classical_limit(rep, eps);
  RelationReport cox = verify_coxeter(w);
  j["weyl"] = to_json(w);
  j["coxeter"] = to_json(cox);
  ok = ok && cox.ok();
}

int cmd_rep(const Config& cfg) {
  Json input = read_json(cfg.seed);
  // a serialized rep is re-verified as given
  if (input.is_object() && input.contains("g")) {
    SeminormalRep rep = rep_from_json(input);
    RelationReport rel = verify_relations(rep);
    Json j = labelling_json(*rep.lab);
    j["relations"] = to_json(rel);
    emit(cfg, j, rel.ok() ? "relations: all pass" : "relations: " + std::to_string(rel.failures().size()) + " failed");
    return rel.ok() ? 0 : kRelationsFailed;
  }

  Seed seed = parse_seed(input, flag_system(cfg), flag_vertex(cfg));
  Orbit orbit = enumerate_orbit(seed.seq, cfg.max_orbit);
  SeminormalRep rep = build_rep(orbit);
  WeightData wd = weight_data(*rep.lab);
  RelationReport rel = verify_relations(rep);
  RelationReport branch = verify_branch_subalgebras(rep);
  IrreducibilityEvidence ev = irreducibility_evidence(rep);
  FiniteRep fin = restrict_to_finite(rep);

  Json j = to_json(rep);
  j["relations"] = to_json(rel);
  j["branch_relations"] = to_json(branch);
  j["irreducibility"] = Json{{"separated", ev.separated},
                             {"connected", ev.connected},
                             {"offdiagonal_nonzero", ev.offdiagonal_nonzero},
                             {"ok", ev.ok()}};
  j["delta"] = to_json(delta_of_orbit(rep, wd));
  j["passes_to_quotient"] = passes_to_quotient(rep, wd);
  j["level1"] = is_level1(rep.orbit);
  j["finite"] = Json{{"relations", to_json(fin.relations)}, {"irreducible_by_level1", fin.irreducible_by_level1}};
  bool ok = rel.ok() && branch.ok() && fin.relations.ok();
  if (cfg.eps) add_classical(j, rep, *cfg.eps, ok);

  std::string summary = "rep: dim " + std::to_string(rep.dim()) + ", relations " + (ok ? "pass" : "FAIL");
  emit(cfg, j, summary);
  return ok ? 0 : kRelationsFailed;
}

int cmd_classical(const Config& cfg) {
  if (!cfg.eps) throw UsageError("classical needs --eps 1 or --eps -1");
  Seed seed = load_seed(cfg);
  Orbit orbit = enumerate_orbit(seed.seq, cfg.max_orbit);
  WeylRep w = classical_limit(orbit, *cfg.eps);
  RelationReport cox = verify_coxeter(w);
  Json j = to_json(w);
  j["coxeter"] = to_json(cox);
  emit(cfg, j, std::string("classical: coxeter relations ") + (cox.ok() ? "pass" : "FAIL"));
  return cox.ok() ? 0 : kRelationsFailed;
}

int cmd_render(const Config& cfg) {
  Seed seed = load_seed(cfg);
  std::vector<ContentSeq> members{seed.seq};
  if (cfg.all) members = enumerate_orbit(seed.seq, cfg.max_orbit).members;
  std::ostringstream os;
  for (std::size_t m = 0; m < members.size(); ++m) {
    auto t = triplet_from_seq(members[m]);
    if (cfg.all) os << "# member " << m << "\n";
    if (!t) {
      if (!cfg.all) throw Error(ErrorKind::NotATableau, "seed is not a tableau: " + members[m].to_string());
      os << "(not a tableau) " << members[m].to_string() << "\n";
      continue;
    }
    os << render_ascii(*t, *seed.lab);
  }
  emit_text(cfg, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seminormal representations of affine Hecke algebras of type ADE"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;

  app.add_option("--type", cfg.type, "root system family: A, D or E");
  app.add_option("--rank", cfg.rank, "rank of the root system");
  app.add_option("--vertex", cfg.vertex, "marked vertex, standard labelling");
  app.add_option("--seed", cfg.seed, "seed JSON (tableau or sequence)");
  app.add_option("--max-orbit", cfg.max_orbit, "orbit size guard")->check(CLI::PositiveNumber);
  app.add_option("--eps", cfg.eps, "classical limit q = eps")->check(CLI::IsMember({-1, 1}));
  app.add_option("--out", cfg.out, "write the result here instead of stdout");

  auto* label = app.add_subcommand("label", "print the new labelling of (R, v)");
  label->add_option("type", cfg.type, "family");
  label->add_option("rank", cfg.rank, "rank");
  label->add_option("vertex", cfg.vertex, "vertex");
  auto* orbit = app.add_subcommand("orbit", "enumerate the truncated orbit of a seed");
  auto* admissible = app.add_subcommand("admissible", "decide admissibility of a seed");
  auto* rep = app.add_subcommand("rep", "build and verify the seminormal representation");
  auto* classical = app.add_subcommand("classical", "Weyl group representation at q = eps");
  auto* render = app.add_subcommand("render", "draw the tableaux of a seed");
  render->add_flag("--all", cfg.all, "draw every member of the orbit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*label) return cmd_label(cfg);
    if (*orbit) return cmd_orbit(cfg);
    if (*admissible) return cmd_admissible(cfg);
    if (*rep) return cmd_rep(cfg);
    if (*classical) return cmd_classical(cfg);
    if (*render) return cmd_render(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
