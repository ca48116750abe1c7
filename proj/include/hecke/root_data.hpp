#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hecke {

enum class Family { A, D, E };

struct RootSystemType {
  Family family;
  int rank;
  friend bool operator==(const RootSystemType&, const RootSystemType&) = default;
};

// throws Error(InvalidRootSystem) unless A n>=1, D n>=4, E n in {6,7,8}
RootSystemType make_root_system(Family f, int rank);
std::string family_name(Family f);

/// Edges of the Dynkin diagram in the standard labelling 1..n.
std::vector<std::pair<int, int>> standard_edges(const RootSystemType& R);

enum class Branch { zero, plain, under, dunder };

struct VLabel {
  Branch branch = Branch::zero;
  int index = 0;
  static VLabel zero() { return {}; }
  static VLabel plain(int a) { return {Branch::plain, a}; }
  static VLabel under(int b) { return {Branch::under, b}; }
  static VLabel dunder(int c) { return {Branch::dunder, c}; }
  friend auto operator<=>(const VLabel&, const VLabel&) = default;
};

/// The relabelled vertex set attached to a marked vertex v.
///   plain 1..l     path from v (= plain 1) to an extremity, through the
///                  trivalent vertex (= plain k) when there is one
///   under 2..l'    the other arm at v (l' = 1 when v is an extremity)
///   dunder k+1..l''  the remaining arm at the trivalent vertex
/// Type A has no dunder branch and uses k = l'' = l.
struct NewLabelling {
  RootSystemType R;
  int v = 1;
  int l = 0, lp = 1, lpp = 0, k = 0;

  // Zero first, then plain, under, dunder: the order of the delta basis.
  std::vector<VLabel> order;
  std::map<VLabel, int> to_standard;
  std::map<int, VLabel> from_standard;

  int size() const { return int(order.size()); }  // |Vert| + 1
  int position(const VLabel& j) const;             // index into `order`
  VLabel pred(const VLabel& j) const;
  int pred_position(int pos) const { return pred_pos_[pos]; }

  int coxeter_order(const VLabel& i, const VLabel& j) const;
  bool adjacent(int pos_i, int pos_j) const { return adj_[pos_i][pos_j]; }

  // alpha_i^vee(delta_j), by position; row 0 unused
  int pairing_delta(int pos_i, int pos_j) const { return pair_delta_[pos_i][pos_j]; }

  std::string name(const VLabel& j) const;  // "0", "3", "2_", "3__"
  VLabel parse_name(const std::string& s) const;

  // filled by build_labelling
  std::vector<int> pred_pos_;
  std::vector<std::vector<bool>> adj_;
  std::vector<std::vector<int>> pair_delta_;
  std::map<VLabel, int> pos_;
};

using LabellingPtr = std::shared_ptr<const NewLabelling>;

// throws Error(InvalidVertex) when v is not a vertex of R
LabellingPtr build_labelling(const RootSystemType& R, int v);

VLabel pred(const NewLabelling& lab, const VLabel& j);
int coxeter_order(const NewLabelling& lab, const VLabel& i, const VLabel& j);

// A vector of L = Z eps + Q_R written in the basis (eps, alpha_{order[1]}, ...).
using LatticeVec = std::vector<long>;

int cartan_pairing(const NewLabelling& lab, const VLabel& i, const LatticeVec& x);
std::vector<LatticeVec> delta_basis(const NewLabelling& lab);

struct WeightData {
  long n0 = 1;
  std::map<VLabel, long> n;      // nonzero labels
  std::map<VLabel, long> kappa;  // all labels incl. zero
};

WeightData weight_data(const NewLabelling& lab);

}  // namespace hecke
