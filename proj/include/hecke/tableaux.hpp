#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hecke/sequences.hpp"

namespace hecke {

using Node = std::pair<int, int>;  // (row x, column y)

inline int classical_content(const Node& n) { return n.second - n.first; }

/// Rows and columns are intervals; over nonempty rows, top to bottom, both
/// row endpoints weakly decrease. This is exactly the translates of lambda/mu.
bool is_valid_skew(const std::set<Node>& nodes);

std::set<Node> top_left_nodes(const std::set<Node>& nodes);

struct Cell {
  int x, y, num;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// One skew diagram with its place, filled with numbers.
struct PlacedComponent {
  Monomial place;
  std::vector<Cell> cells;
  std::set<Node> nodes() const;
};

/// A filling of a placed skew diagram by 0..N-1. Two standard tableaux are
/// the same exactly when their content sequences agree.
struct Tableau {
  std::vector<PlacedComponent> components;
  int size() const;
};

std::vector<Monomial> seq_of_tableau(const Tableau& T);
bool is_standard(const Tableau& T);

/// The standard tableau with these contents, if there is one.
std::optional<Tableau> reconstruct(const std::vector<Monomial>& seq);

// keep numbers 0..m; throws Error(IndexOutOfRange) for m outside [0, size)
Tableau restrict(const Tableau& T, int m);

struct TripletTableau {
  Tableau t1, t2, t3;
};

std::optional<TripletTableau> triplet_from_seq(const ContentSeq& S);

struct Admissibility {
  bool admissible = true;
  std::optional<ContentSeq> witness;  // first failing member, breadth-first from the seed
  Orbit orbit;
};

// throws Error(NotATableau) when S itself is not a tableau of type (R, v)
Admissibility is_admissible(const ContentSeq& S, int max_size);

/// c_0 constant over the orbit.
bool is_level1(const Orbit& orbit);
/// Every member's three tableaux have a single top-left node.
bool is_level1_by_shapes(const Orbit& orbit);

std::string render_ascii(const Tableau& T, const std::string& title,
                         const std::function<std::string(int)>& label);
std::string render_ascii(const TripletTableau& T, const NewLabelling& lab);

}  // namespace hecke
