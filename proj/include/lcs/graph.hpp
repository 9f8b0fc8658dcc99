#pragma once
// Multigraphs with arrows, ordered partitions (level structures), slope
// functions, and the slope submodular function zeta.
//
// Arrows are encoded as 2*edge + dir where dir 0 runs ends[0] -> ends[1];
// reversal is id ^ 1, so every edge carries exactly two arrows, loops
// included. Parallel edges get distinct arrows through their edge ids.

#include <string>
#include <vector>

#include "lcs/rat.hpp"
#include "lcs/setfn.hpp"

namespace lcs {

struct Edge {
  std::string id;
  int ends[2];
};

struct Multigraph {
  GroundSet vertices;
  std::vector<Edge> edges;
  std::vector<long> genus;  // per-vertex genus, >= 0

  int nv() const { return vertices.n(); }
  int ne() const { return static_cast<int>(edges.size()); }
  int narrows() const { return 2 * ne(); }
  int edge_index(const std::string& id) const;
};

// Build + validate in one step: endpoints given by vertex label.
Multigraph make_graph(const std::vector<std::string>& vertex_labels,
                      const std::vector<std::pair<std::string, std::pair<std::string, std::string>>>& edges,
                      const std::vector<long>& genus = {});

using Arrow = int;

inline Arrow arrow_rev(Arrow a) { return a ^ 1; }
inline int arrow_edge(Arrow a) { return a >> 1; }
inline int arrow_tail(const Multigraph& g, Arrow a) { return g.edges[a >> 1].ends[a & 1]; }
inline int arrow_head(const Multigraph& g, Arrow a) { return g.edges[a >> 1].ends[1 - (a & 1)]; }
// "e01:+" for the ends[0] -> ends[1] arrow, "e01:-" for its reversal.
std::string arrow_name(const Multigraph& g, Arrow a);
Arrow parse_arrow(const Multigraph& g, const std::string& name);

struct GraphInfo {
  bool connected;
  long genus;  // |E| - |V| + 1
};

// Throws on a disconnected graph or a negative genus entry.
GraphInfo validate(const Multigraph& g);

// |E| - |V| + 1 + sum of the vertex genera.
long total_genus(const Multigraph& g);

// Blocks listed bottom to top: block index = level, increasing upward.
struct OrderedPartition {
  std::vector<std::vector<int>> blocks;
  std::vector<int> level;  // per vertex, derived from blocks

  int num_levels() const { return static_cast<int>(blocks.size()); }
  bool trivial() const { return blocks.size() == 1; }
};

OrderedPartition make_partition(const Multigraph& g, const std::vector<std::vector<int>>& blocks);
OrderedPartition trivial_partition(const Multigraph& g);

// Fibers of h ordered by increasing value.
OrderedPartition level_from(const Multigraph& g, const std::vector<Q>& h);

// u -> v is upward when u sits strictly above v.
inline bool upward_for(const OrderedPartition& pi, const Multigraph& g, Arrow a) {
  return pi.level[arrow_tail(g, a)] > pi.level[arrow_head(g, a)];
}
inline bool horizontal_for(const OrderedPartition& pi, const Multigraph& g, Arrow a) {
  return pi.level[arrow_tail(g, a)] == pi.level[arrow_head(g, a)];
}

struct SlopeFn {
  std::vector<long> s;  // per arrow

  long operator()(Arrow a) const { return s[a]; }
  long& operator[](Arrow a) { return s[a]; }
};

// Throws unless s(a) + s(rev a) is 0 or -1 on every edge.
void check_slope_fn(const Multigraph& g, const SlopeFn& s);

// Floor slopes of a height function: s(a) = floor((h(tail) - h(head)) / l_e).
SlopeFn slope_from(const Multigraph& g, const std::vector<Q>& ell, const std::vector<Q>& h);

inline bool upward_for(const SlopeFn& s, Arrow a) { return s(arrow_rev(a)) < 0; }
inline bool horizontal_for(const SlopeFn& s, Arrow a) { return s(a) == 0 && s(arrow_rev(a)) == 0; }
inline bool integer_for(const SlopeFn& s, Arrow a) { return s(a) + s(arrow_rev(a)) == 0 && !horizontal_for(s, a); }

struct SlopeSets {
  std::vector<Arrow> a_up;        // arrows a with s(rev a) < 0
  std::vector<Arrow> a_down;      // their reversals
  std::vector<Arrow> a_int;       // integer upward arrows
  std::vector<int> e_int;         // integer vertical edges
  std::vector<Arrow> horizontal;  // s = 0 both ways
};

SlopeSets slope_sets(const Multigraph& g, const SlopeFn& s);

// Upward arrow sets agree: a is upward for s iff upward for pi.
bool is_slope_level_pair(const Multigraph& g, const SlopeFn& s, const OrderedPartition& pi);

// zeta_s(I) = #{upward arrows crossing into I} + sum of slopes on arrows
// leaving I. Submodular with range 0.
SetFn zeta(const Multigraph& g, const SlopeFn& s);

// Counting helpers shared by zeta and the eta assembly: arrows of the list
// with tail in `tails` and head in `heads`.
long count_arrows(const Multigraph& g, const std::vector<Arrow>& arrows, Subset tails, Subset heads);

}  // namespace lcs
