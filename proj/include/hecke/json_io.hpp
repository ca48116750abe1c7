#pragma once

// JSON import/export. Monomials travel as strings like "-g1^2*q^-3";
// "gamma1" is accepted as a spelling of g1 on input.

#include <map>
#include <optional>
#include <string>

#include "json.hpp"

#include "hecke/representations.hpp"

namespace hecke {

using Json = nlohmann::ordered_json;

// All parse failures throw Error(Parse).
Monomial parse_monomial(const std::string& text);
PlaceSymbol parse_place_name(const std::string& text);

Json to_json(const Monomial& m);
Monomial monomial_from_json(const Json& j);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

Json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const Json& j);

Json labelling_json(const NewLabelling& lab);
LabellingPtr labelling_from_json(const Json& j);

// {"0": "g1", "1": "g1*q^2", ...} in basis order
Json entries_json(const ContentSeq& S);
ContentSeq seq_from_entries(const Json& entries, const LabellingPtr& lab);

Json to_json(const ContentSeq& S);  // labelling plus entries
ContentSeq seq_from_json(const Json& j);

Json to_json(const Tableau& T);
Tableau tableau_from_json(const Json& j);
Json to_json(const TripletTableau& T);
TripletTableau triplet_from_json(const Json& j);
// throws Error(NotATableau) unless the three tableaux are standard and agree on shared prefixes
ContentSeq seq_of_triplet(const TripletTableau& T, const LabellingPtr& lab);

/// A seed file: labelling (possibly from flags), declared places with
/// optional specializations, and either "entries" or a "tableau" triplet.
struct Seed {
  LabellingPtr lab;
  ContentSeq seq;
  std::map<PlaceSymbol, Monomial> specializations;
};
Seed parse_seed(const Json& j, std::optional<RootSystemType> R, std::optional<int> vertex);

Json to_json(const Orbit& o);
Orbit orbit_from_json(const Json& j, const LabellingPtr& lab);

Json to_json(const SymMatrix& m);
SymMatrix symmatrix_from_json(const Json& j);
Json to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const Json& j);

Json to_json(const SeminormalRep& rep);
SeminormalRep rep_from_json(const Json& j);

Json to_json(const RelationReport& r);
Json to_json(const WeylRep& w);

}  // namespace hecke
