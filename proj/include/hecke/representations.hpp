#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/matrix.hpp"
#include "hecke/tableaux.hpp"

namespace hecke {

/// Seminormal matrices on the span of an admissible orbit. Basis vectors are
/// the orbit members in canonical order; g_i sends v_T to a v_T + b v_{r_i T}.
struct SeminormalRep {
  LabellingPtr lab;
  Orbit orbit;
  std::map<VLabel, SymMatrix> g;  // nonzero labels
  std::map<VLabel, SymMatrix> x;  // every label, zero included
  int dim() const { return int(orbit.members.size()); }
};

// throws Error(NotAdmissible) if a member is not a tableau of type (R, v)
SeminormalRep build_rep(const Orbit& orbit);

// coefficients of g_i on v_T: (diagonal, towards r_i T)
std::pair<RatFunc, RatFunc> seminormal_coefficients(const Monomial& ci, const Monomial& cp);

struct RelationCheck {
  std::string name;
  bool ok = true;
  std::optional<std::pair<int, int>> where;  // first differing entry
};

struct RelationReport {
  std::vector<RelationCheck> checks;  // sorted by name
  bool ok() const;
  std::vector<RelationCheck> failures() const;
  void add(std::string name, const SymMatrix& lhs, const SymMatrix& rhs);
  void add(std::string name, const QMatrix& lhs, const QMatrix& rhs);
  void finish();
};

/// Quadratic, braid and X-commutation relations, the uniform g/X cross
/// relation for every (i, j), and the spot check g_i X_pred(i) g_i = X_i.
RelationReport verify_relations(const SeminormalRep& rep);

/// The relations of affine GL carried by the three branch subalgebras.
RelationReport verify_branch_subalgebras(const SeminormalRep& rep);

/// E_T for each member, in basis order.
// throws Error(DegenerateSeparation) if two members share every content
std::vector<SymMatrix> idempotents(const SeminormalRep& rep);

SymMatrix central_element(const SeminormalRep& rep, const WeightData& wd);
Monomial delta_of_orbit(const SeminormalRep& rep, const WeightData& wd);
bool passes_to_quotient(const SeminormalRep& rep, const WeightData& wd);

struct IrreducibilityEvidence {
  bool separated = false;         // all content sequences distinct
  bool connected = false;         // through edges with r_i T nonzero
  bool offdiagonal_nonzero = false;
  bool ok() const { return separated && connected && offdiagonal_nonzero; }
};
IrreducibilityEvidence irreducibility_evidence(const SeminormalRep& rep);

// no member of one orbit shares its contents with a member of the other
bool disjoint_spectra(const SeminormalRep& a, const SeminormalRep& b);

struct FiniteRep {
  LabellingPtr lab;
  Orbit orbit;
  std::map<VLabel, SymMatrix> g;
  RelationReport relations;        // quadratic and braid only
  bool irreducible_by_level1 = false;
};
FiniteRep restrict_to_finite(const SeminormalRep& rep);

/// Weyl group representation at q = eps.
struct WeylRep {
  LabellingPtr lab;
  Orbit orbit;
  int eps = 1;
  std::map<VLabel, QMatrix> r;
};

/// From the closed formulas: eps v_{r_i T} across places, and
/// eps (v_T / d + (1 + 1/d) v_{r_i T}) with d the classical content gap
/// inside one place. Two places whose ratio is free of formal symbols must
/// not evaluate to 1 at q = eps.
// throws Error(PlaceCollisionAtLimit) otherwise
WeylRep classical_limit(const Orbit& orbit, int eps);
WeylRep classical_limit(const SeminormalRep& rep, int eps);

/// The g matrices evaluated at q = eps, places set to the given values.
std::map<VLabel, QMatrix> evaluate_at(const SeminormalRep& rep, int eps,
                                      const std::map<PlaceSymbol, Rational>& place_values);

/// r_i^2 = 1 and the braid relations.
RelationReport verify_coxeter(const WeylRep& w);

}  // namespace hecke
