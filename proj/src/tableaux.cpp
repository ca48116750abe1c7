#include "hecke/tableaux.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

bool is_valid_skew(const std::set<Node>& nodes) {
  std::map<int, std::pair<int, int>> rows, cols;  // index -> (min, max)
  std::map<int, int> row_count, col_count;
  for (auto [x, y] : nodes) {
    auto& r = rows.try_emplace(x, y, y).first->second;
    r = {std::min(r.first, y), std::max(r.second, y)};
    auto& c = cols.try_emplace(y, x, x).first->second;
    c = {std::min(c.first, x), std::max(c.second, x)};
    ++row_count[x], ++col_count[y];
  }
  for (auto& [x, r] : rows)
    if (r.second - r.first + 1 != row_count[x]) return false;
  for (auto& [y, c] : cols)
    if (c.second - c.first + 1 != col_count[y]) return false;
  int left = INT_MAX, right = INT_MAX;
  for (auto& [x, r] : rows) {
    if (r.first > left || r.second > right) return false;
    left = r.first, right = r.second;
  }
  return true;
}

std::set<Node> top_left_nodes(const std::set<Node>& nodes) {
  std::set<Node> out;
  for (auto [x, y] : nodes)
    if (!nodes.count({x - 1, y}) && !nodes.count({x, y - 1})) out.insert({x, y});
  return out;
}

std::set<Node> PlacedComponent::nodes() const {
  std::set<Node> s;
  for (const auto& c : cells) s.insert({c.x, c.y});
  return s;
}

int Tableau::size() const {
  int n = 0;
  for (const auto& c : components) n += int(c.cells.size());
  return n;
}

std::vector<Monomial> seq_of_tableau(const Tableau& T) {
  int n = T.size();
  std::vector<Monomial> s(n);
  std::vector<bool> seen(n, false);
  for (const auto& comp : T.components)
    for (const auto& c : comp.cells) {
      if (c.num < 0 || c.num >= n || seen[c.num])
        throw Error(ErrorKind::NotATableau, "numbers of a tableau must be 0..N-1, each once");
      seen[c.num] = true;
      s[c.num] = comp.place * Monomial::q_power(2 * classical_content({c.x, c.y}));
    }
  return s;
}

bool is_standard(const Tableau& T) {
  try {
    seq_of_tableau(T);
  } catch (const Error&) {
    return false;
  }
  std::set<Monomial> classes;
  for (const auto& comp : T.components) {
    if (!classes.insert(place_class(comp.place)).second) return false;
    std::map<Node, int> num;
    for (const auto& c : comp.cells)
      if (!num.emplace(Node{c.x, c.y}, c.num).second) return false;
    if (!is_valid_skew(comp.nodes())) return false;
    for (auto [n, k] : num) {
      auto right = num.find({n.first, n.second + 1});
      auto below = num.find({n.first + 1, n.second});
      if (right != num.end() && right->second < k) return false;
      if (below != num.end() && below->second < k) return false;
    }
  }
  return true;
}

namespace {

// Connected pieces of one place class, each in its own coordinate frame;
// pieces only get a common frame when the tableau is laid out at the end.
struct Piece {
  std::map<Node, int> cells;
  std::map<int, Node> lowest;  // diagonal -> last (lowest) node on it
};

struct PlaceBuild {
  std::vector<Piece> pieces;
  std::map<int, int> piece_of_diag;
};

void add_cell(PlaceBuild& pb, int piece, Node at, int num) {
  Piece& p = pb.pieces[piece];
  p.cells[at] = num;
  p.lowest[classical_content(at)] = at;
  pb.piece_of_diag[classical_content(at)] = piece;
}

// move piece `from` by (t, t) into piece `into`
void merge(PlaceBuild& pb, int into, int from, int t) {
  Piece& src = pb.pieces[from];
  for (auto [n, k] : src.cells) add_cell(pb, into, {n.first + t, n.second + t}, k);
  src.cells.clear();
  src.lowest.clear();
}

// Stack pieces from lowest diagonals (south-west) to highest (north-east),
// each one strictly above and to the right of everything placed before.
PlacedComponent lay_out(const Monomial& place, const PlaceBuild& pb) {
  std::vector<const Piece*> order;
  for (const auto& p : pb.pieces)
    if (!p.cells.empty()) order.push_back(&p);
  std::sort(order.begin(), order.end(),
            [](const Piece* a, const Piece* b) { return a->lowest.begin()->first < b->lowest.begin()->first; });
  PlacedComponent out{place, {}};
  int top = 0;  // smallest row used so far
  bool first = true;
  for (const Piece* p : order) {
    int lo = INT_MAX, hi = INT_MIN;
    for (auto& [n, k] : p->cells) lo = std::min(lo, n.first), hi = std::max(hi, n.first);
    int t = first ? -lo : (top - 1) - hi;
    for (auto& [n, k] : p->cells) out.cells.push_back({n.first + t, n.second + t, k});
    top = lo + t;
    first = false;
  }
  int shift = INT_MAX;
  for (auto& c : out.cells) shift = std::min(shift, c.x);
  for (auto& c : out.cells) c.x += 1 - shift, c.y += 1 - shift;
  std::sort(out.cells.begin(), out.cells.end(),
            [](const Cell& a, const Cell& b) { return std::pair(a.x, a.y) < std::pair(b.x, b.y); });
  return out;
}

}  // namespace

std::optional<Tableau> reconstruct(const std::vector<Monomial>& seq) {
  std::map<Monomial, PlaceBuild> places;
  for (int num = 0; num < int(seq.size()); ++num) {
    PlaceBuild& pb = places[place_class(seq[num])];
    int d = classical_offset(seq[num]);
    auto find = [&](int diag) -> int {
      auto it = pb.piece_of_diag.find(diag);
      return it == pb.piece_of_diag.end() ? -1 : it->second;
    };
    int below = find(d - 1), above = find(d + 1);
    bool repeat = find(d) >= 0;
    if (below < 0 && above < 0) {
      // nothing adjacent: a new piece
      if (repeat) return std::nullopt;
      pb.pieces.emplace_back();
      add_cell(pb, int(pb.pieces.size()) - 1, {0, d}, num);
    } else if (above < 0) {
      // only d-1 present: go right of its lowest node
      if (repeat) return std::nullopt;
      Node i = pb.pieces[below].lowest.at(d - 1);
      add_cell(pb, below, {i.first, i.second + 1}, num);
    } else if (below < 0) {
      // only d+1 present: go under its lowest node
      if (repeat) return std::nullopt;
      Node j = pb.pieces[above].lowest.at(d + 1);
      add_cell(pb, above, {j.first + 1, j.second}, num);
    } else {
      // both present: fill the corner below j and right of i
      Node i = pb.pieces[below].lowest.at(d - 1);
      if (above != below) {
        Node j = pb.pieces[above].lowest.at(d + 1);
        merge(pb, below, above, (i.first - 1) - j.first);
      }
      Piece& p = pb.pieces[below];
      Node j = p.lowest.at(d + 1);
      Node corner{i.first, i.second + 1};
      if (j != Node{i.first - 1, i.second + 1} || p.cells.count(corner)) return std::nullopt;
      add_cell(pb, below, corner, num);
    }
  }
  Tableau T;
  for (const auto& [place, pb] : places) T.components.push_back(lay_out(place, pb));
  if (!is_standard(T) || seq_of_tableau(T) != seq) return std::nullopt;
  return T;
}

Tableau restrict(const Tableau& T, int m) {
  if (m < 0 || m >= T.size()) throw Error(ErrorKind::IndexOutOfRange, "restriction index out of range");
  Tableau r;
  for (const auto& comp : T.components) {
    PlacedComponent c{comp.place, {}};
    for (const auto& cell : comp.cells)
      if (cell.num <= m) c.cells.push_back(cell);
    if (!c.cells.empty()) r.components.push_back(c);
  }
  return r;
}

std::optional<TripletTableau> triplet_from_seq(const ContentSeq& S) {
  auto sub = substrings(S);
  auto t1 = reconstruct(sub.s1);
  if (!t1) return std::nullopt;
  auto t2 = reconstruct(sub.s2);
  if (!t2) return std::nullopt;
  auto t3 = reconstruct(sub.s3);
  if (!t3) return std::nullopt;
  return TripletTableau{*t1, *t2, *t3};
}

Admissibility is_admissible(const ContentSeq& S, int max_size) {
  if (!triplet_from_seq(S))
    throw Error(ErrorKind::NotATableau, "seed " + S.to_string() + " is not a tableau of this type");
  Admissibility a;
  a.orbit = enumerate_orbit(S, max_size);
  for (const auto& m : orbit_bfs_order(S, max_size))
    if (!triplet_from_seq(m)) {
      a.admissible = false;
      a.witness = m;
      break;
    }
  return a;
}

bool is_level1(const Orbit& orbit) {
  for (const auto& m : orbit.members)
    if (!(m.at(0) == orbit.members.front().at(0))) return false;
  return true;
}

bool is_level1_by_shapes(const Orbit& orbit) {
  auto single_corner = [](const Tableau& T) {
    std::size_t n = 0;
    for (const auto& c : T.components) n += top_left_nodes(c.nodes()).size();
    return n == 1;
  };
  for (const auto& m : orbit.members) {
    auto t = triplet_from_seq(m);
    if (!t) throw Error(ErrorKind::NotATableau, "orbit member " + m.to_string() + " is not a tableau");
    if (!single_corner(t->t1) || !single_corner(t->t2) || !single_corner(t->t3)) return false;
  }
  return true;
}

std::string render_ascii(const Tableau& T, const std::string& title,
                         const std::function<std::string(int)>& label) {
  std::ostringstream os;
  os << title << "\n";
  std::size_t w = 1;
  for (const auto& comp : T.components)
    for (const auto& c : comp.cells) w = std::max(w, label(c.num).size());
  for (const auto& comp : T.components) {
    os << "  place " << comp.place.to_string() << "\n";
    int x0 = INT_MAX, x1 = INT_MIN, y0 = INT_MAX, y1 = INT_MIN;
    std::map<Node, int> at;
    for (const auto& c : comp.cells) {
      at[{c.x, c.y}] = c.num;
      x0 = std::min(x0, c.x), x1 = std::max(x1, c.x);
      y0 = std::min(y0, c.y), y1 = std::max(y1, c.y);
    }
    for (int x = x0; x <= x1; ++x) {
      std::string line = "   ";
      for (int y = y0; y <= y1; ++y) {
        auto it = at.find({x, y});
        std::string s = it == at.end() ? "." : label(it->second);
        line += " " + std::string(w - s.size(), ' ') + s;
      }
      while (!line.empty() && (line.back() == '.' || line.back() == ' ')) line.pop_back();
      os << line << "\n";
    }
  }
  return os.str();
}

std::string render_ascii(const TripletTableau& T, const NewLabelling& lab) {
  std::string out = render_ascii(T.t1, "T1", [](int n) { return std::to_string(n); });
  if (lab.lp > 1)
    out += render_ascii(T.t2, "T2", [](int n) { return std::to_string(n) + (n >= 2 ? "_" : ""); });
  if (lab.lpp > lab.k)
    out += render_ascii(T.t3, "T3", [&](int n) { return std::to_string(n) + (n > lab.k ? "__" : ""); });
  return out;
}

}  // namespace hecke
