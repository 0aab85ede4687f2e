#pragma once

// Colored rooted forests viewed as finite posets whose Hasse diagram is a
// forest. Roots are maximal; order ideals are leafward (downward closed).
//
// Every vertex carries a stable index assigned at construction (source order
// for parsed forests). Canonical keys are computed eagerly, so a Forest is an
// immutable value that can be shared freely.

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace forestry {

using Color = std::string;
using VertexSet = boost::dynamic_bitset<>;

/// True iff `token` is a nonempty string over [A-Za-z0-9_] other than "0".
bool is_valid_color(std::string_view token);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class Forest {
 public:
  /// The empty forest.
  Forest();

  /// Builds a forest from per-vertex colors and parent indices (-1 marks a
  /// root). Vertex i keeps index i. Throws std::invalid_argument on cycles,
  /// out-of-range parents or invalid colors.
  Forest(std::vector<Color> colors, std::vector<int> parents);

  static Forest vertex(Color color);

  std::size_t size() const { return d_->colors.size(); }
  bool empty() const { return d_->colors.empty(); }
  bool is_connected() const { return d_->roots.size() == 1; }

  const Color& color(int v) const { return d_->colors.at(v); }
  int parent(int v) const { return d_->parents.at(v); }
  std::span<const int> children(int v) const { return d_->children.at(v); }
  std::span<const int> roots() const { return d_->roots; }
  const std::vector<Color>& colors() const { return d_->colors; }
  const std::vector<int>& parents() const { return d_->parents; }

  /// Canonical serialization; equal iff isomorphic as colored posets.
  const std::string& key() const { return d_->key; }
  /// Canonical key of the subtree hanging from `v`.
  const std::string& subtree_key(int v) const { return d_->vertex_keys.at(v); }

  /// True iff `u` lies weakly below `v` (u == v or v is an ancestor of u).
  bool below(int u, int v) const;

  /// Same vertex indices, colors and parents (labeled equality, not iso).
  friend bool operator==(const Forest& a, const Forest& b) {
    return a.d_ == b.d_ || (a.d_->colors == b.d_->colors && a.d_->parents == b.d_->parents);
  }

 private:
  struct Data {
    std::vector<Color> colors;
    std::vector<int> parents;
    std::vector<std::vector<int>> children;
    std::vector<int> roots;
    std::vector<std::string> vertex_keys;
    std::string key = "0";
  };
  static std::shared_ptr<const Data> build(std::vector<Color> colors, std::vector<int> parents);

  std::shared_ptr<const Data> d_;
};

/// A connected, nonempty forest.
class Tree : public Forest {
 public:
  /// Throws std::invalid_argument unless `f` has exactly one component.
  explicit Tree(Forest f);
  static Tree vertex(Color color) { return Tree(Forest::vertex(std::move(color))); }
  int root() const { return roots().front(); }
};

/// Induced sub-forest on a vertex set together with the map back to the
/// ambient indices (`origin[i]` is the ambient index of local vertex i).
/// Each vertex hangs from its nearest ancestor inside the set.
struct Subforest {
  Forest forest;
  std::vector<int> origin;
};

// ---------------------------------------------------------------- parsing

/// tree := color | color "(" tree ("," tree)* ")";
/// forest := "0" | tree ("+" tree)*. Whitespace is ignored and vertex
/// indices follow source (pre-)order.
Forest parse_forest(std::string_view text);
Tree parse_tree(std::string_view text);

// ---------------------------------------------------------- construction

Forest disjoint_union(const Forest& a, const Forest& b);
inline Forest operator+(const Forest& a, const Forest& b) { return disjoint_union(a, b); }

std::vector<Tree> components(const Forest& f);
Subforest induced(const Forest& f, const VertexSet& vertices);
Tree subtree(const Forest& f, int v);

/// Attaches the root of `scion` as a new child of vertex `v` of `stock`.
/// Stock vertices keep their indices; scion vertices are appended.
/// Throws std::out_of_range for an invalid vertex.
Forest graft(const Tree& scion, const Forest& stock, int v);
Tree graft(const Tree& scion, const Tree& stock, int v);

enum class LadderReading { RootToLeaf, LeafToRoot };

/// Chain whose colors are listed in the given reading direction.
Tree make_ladder(const std::vector<Color>& colors, LadderReading reading);
/// Colors of a chain in the given direction; nullopt if `f` is not a chain.
std::optional<std::vector<Color>> ladder_colors(const Forest& f, LadderReading reading);

// -------------------------------------------------------- canonical forms

std::string canonical_form(const Forest& f);
/// Canonical key of the sub-forest induced on `vertices`.
std::string subset_key(const Forest& f, const VertexSet& vertices);
/// Vertex indices listed in canonical pre-order; position i of the canonical
/// serialization's i-th vertex. This is the index permutation canonicalization
/// applies to the input labels.
std::vector<int> canonical_order(const Forest& f);

/// |Aut(f)| as a product of factorials of multiplicities of equal child
/// subtrees and equal components. Throws std::overflow_error past 2^64.
std::uint64_t aut_order(const Forest& f);

/// All color- and order-preserving bijections a -> b, each given as a vector
/// mapping a-index to b-index.
std::vector<std::vector<int>> isomorphisms(const Forest& a, const Forest& b);

// ----------------------------------------------------- ideals and cuts

struct IdealSplit {
  VertexSet ideal_vertices;
  Forest ideal;
  Forest complement;
};

/// Every downward-closed vertex subset exactly once, as bitsets.
std::vector<VertexSet> ideal_sets(const Forest& f);
std::vector<IdealSplit> order_ideals(const Forest& f);
bool is_ideal(const Forest& f, const VertexSet& vertices);

/// Split counts grouped by (ideal key, complement key).
using SplitProfile = std::map<std::pair<std::string, std::string>, std::uint64_t>;
SplitProfile split_profile(const Forest& f);

struct Cut {
  /// (lower vertex, upper vertex) for each cut edge.
  std::vector<std::pair<int, int>> edges;
  VertexSet lower_vertices;
  Forest lower;
  Tree upper;
};

std::vector<Cut> admissible_cuts(const Tree& t);

struct EdgeCut {
  int lower_vertex;
  Tree lower;
  Tree upper;
};

std::vector<EdgeCut> single_edge_cuts(const Tree& t);

/// n(t1, t2, s): edges e of s with P_e(s) ~ t1 and R_e(s) ~ t2.
std::size_t structure_constant(const Tree& t1, const Tree& t2, const Tree& s);

/// Canonical keys of all L \ I for ideals I within L; includes "0" and f.
std::set<std::string> convex_subposets(const Forest& f);

// ------------------------------------------------------------------- K0

using K0Class = std::map<Color, std::size_t>;

K0Class k0_class(const Forest& f);
K0Class operator+(const K0Class& a, const K0Class& b);

}  // namespace forestry
