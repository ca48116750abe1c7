#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "hecke/monomial.hpp"
#include "hecke/root_data.hpp"

namespace hecke {

/// A sequence in Seq_{R,v}: one Monomial per label, stored in the order of
/// the delta basis (lab->order).
class ContentSeq {
 public:
  ContentSeq(LabellingPtr lab, std::vector<Monomial> entries);

  const NewLabelling& labelling() const { return *lab_; }
  const LabellingPtr& labelling_ptr() const { return lab_; }
  const std::vector<Monomial>& entries() const { return e_; }
  const Monomial& at(int pos) const { return e_[pos]; }
  const Monomial& operator[](const VLabel& j) const { return e_[lab_->position(j)]; }

  friend bool operator==(const ContentSeq& a, const ContentSeq& b) { return a.e_ == b.e_; }
  friend auto operator<=>(const ContentSeq& a, const ContentSeq& b) { return a.e_ <=> b.e_; }

  std::string to_string() const;

 private:
  LabellingPtr lab_;
  std::vector<Monomial> e_;
};

/// nullopt plays the absorbing Zero.
using TruncResult = std::optional<ContentSeq>;

ContentSeq reflect(const VLabel& i, const ContentSeq& S);
ContentSeq reflect_at(int pos, const ContentSeq& S);
TruncResult trunc_reflect(const VLabel& i, const TruncResult& S);
TruncResult trunc_reflect_at(int pos, const ContentSeq& S);
// applied left to right
TruncResult apply_word(const std::vector<VLabel>& word, const ContentSeq& S);

struct Orbit {
  struct Edge {
    int from;
    VLabel gen;
    int to;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };
  std::vector<ContentSeq> members;  // sorted canonically
  std::vector<Edge> edges;
  int index_of(const ContentSeq& S) const;  // -1 when absent
};

// throws Error(OrbitTooLarge) once more than max_size members are found
Orbit enumerate_orbit(const ContentSeq& S, int max_size);

// Same closure, in breadth-first discovery order from S (generators in
// basis order). Used where "first offender" should mean "nearest to S".
std::vector<ContentSeq> orbit_bfs_order(const ContentSeq& S, int max_size);

struct Substrings {
  std::vector<Monomial> s1, s2, s3;
};
Substrings substrings(const ContentSeq& S);

Monomial delta_invariant(const ContentSeq& S, const WeightData& wd);

}  // namespace hecke
