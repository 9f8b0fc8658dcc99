#pragma once
// Random-instance generators shared by the property tests. Everything is
// driven by the deterministic Rng so failures reproduce from the seed.

#include <string>
#include <vector>

#include "lcs/rng.hpp"
#include "lcs/setfn.hpp"

inline lcs::GroundSet make_ground(int n, const std::string& prefix = "u") {
  lcs::GroundSet g;
  for (int i = 0; i < n; ++i) g.labels.push_back(prefix + std::to_string(i));
  return g;
}

// Nonnegative submodular function: a sum of capped modular functions plus a
// concave function of cardinality. integer_valued switches all weights/caps
// to integers.
inline lcs::SetFn random_submodular(lcs::Rng& rng, const lcs::GroundSet& g,
                                    bool integer_valued = false,
                                    bool strictly_positive = false) {
  using namespace lcs;
  const int n = g.n();
  auto weight = [&](long lo, long hi) {
    long w = rng.next_long(lo, hi);
    return integer_valued ? Q(w) : qq(w, rng.next_long(1, 4));
  };
  SetFn f(g);
  const int terms = static_cast<int>(rng.next_long(1, 3));
  for (int t = 0; t < terms; ++t) {
    std::vector<Q> w(n);
    for (int i = 0; i < n; ++i) w[i] = weight(0, 6);
    Q cap = weight(1, 10);
    for (Subset s = 1; s <= f.full(); ++s) {
      Q acc = 0;
      for (int i = 0; i < n; ++i)
        if (s >> i & 1) acc += w[i];
      f.at(s) += acc < cap ? acc : cap;
    }
  }
  // Concave-of-cardinality term: increments 3, 2, 1, 1, ... keeps it integral.
  std::vector<Q> conc(n + 1, Q(0));
  Q inc = Q(rng.next_long(1, 3));
  for (int k = 1; k <= n; ++k) {
    conc[k] = conc[k - 1] + inc;
    if (inc > 1) inc -= 1;
  }
  if (rng.next_long(0, 1) || strictly_positive)
    for (lcs::Subset s = 1; s <= f.full(); ++s) f.at(s) += conc[lcs::popcount(s)];
  return f;
}

inline lcs::SetFn random_nonneg(lcs::Rng& rng, const lcs::GroundSet& g) {
  lcs::SetFn f(g);
  for (lcs::Subset s = 1; s <= f.full(); ++s) f.at(s) = lcs::qq(rng.next_long(0, 9), rng.next_long(1, 3));
  return f;
}

#include "lcs/graph.hpp"

// Random connected multigraph: a random spanning tree plus extra edges drawn
// uniformly (loops and parallel edges allowed).
inline lcs::Multigraph random_graph(lcs::Rng& rng, int nv, int extra_edges,
                                    long max_vertex_genus = 0) {
  std::vector<std::string> labels;
  for (int i = 0; i < nv; ++i) labels.push_back("u" + std::to_string(i));
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> edges;
  int eid = 0;
  auto add = [&](int a, int b) {
    edges.push_back({"e" + std::to_string(eid++), {labels[a], labels[b]}});
  };
  for (int v = 1; v < nv; ++v) add(static_cast<int>(rng.next_long(0, v - 1)), v);
  for (int k = 0; k < extra_edges; ++k)
    add(static_cast<int>(rng.next_long(0, nv - 1)), static_cast<int>(rng.next_long(0, nv - 1)));
  std::vector<long> genus(nv, 0);
  if (max_vertex_genus > 0)
    for (auto& gv : genus) gv = rng.next_long(0, max_vertex_genus);
  return lcs::make_graph(labels, edges, genus);
}

// Random ordered partition of the vertices into 1..max_levels blocks.
inline lcs::OrderedPartition random_partition(lcs::Rng& rng, const lcs::Multigraph& g,
                                              int max_levels = 4) {
  int nb = static_cast<int>(rng.next_long(1, std::min(max_levels, g.nv())));
  std::vector<std::vector<int>> blocks(nb);
  // Ensure each block nonempty: first nb vertices spread out, rest random.
  std::vector<int> perm(g.nv());
  for (int i = 0; i < g.nv(); ++i) perm[i] = i;
  for (int i = g.nv() - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.next_long(0, i)]);
  for (int i = 0; i < g.nv(); ++i)
    blocks[i < nb ? i : rng.next_long(0, nb - 1)].push_back(perm[i]);
  return lcs::make_partition(g, blocks);
}

// Random slope function: per edge either (0,0) or a pair (x, -x) / (x, -x-1).
inline lcs::SlopeFn random_slope_fn(lcs::Rng& rng, const lcs::Multigraph& g) {
  lcs::SlopeFn s;
  s.s.assign(g.narrows(), 0);
  for (int e = 0; e < g.ne(); ++e) {
    switch (rng.next_long(0, 2)) {
      case 0: break;  // horizontal
      case 1: {       // integer
        long x = rng.next_long(-3, 3);
        s.s[2 * e] = x;
        s.s[2 * e + 1] = -x;
        break;
      }
      default: {  // noninteger
        long x = rng.next_long(-3, 3);
        s.s[2 * e] = x;
        s.s[2 * e + 1] = -x - 1;
        break;
      }
    }
  }
  return s;
}

// Random slope function compatible with pi: upward arrows get slope k >= 0,
// integer only when k >= 1; horizontal edges are forced to (0,0).
inline lcs::SlopeFn random_pair_slopes(lcs::Rng& rng, const lcs::Multigraph& g,
                                       const lcs::OrderedPartition& pi, long max_up = 3) {
  lcs::SlopeFn s;
  s.s.assign(g.narrows(), 0);
  for (int e = 0; e < g.ne(); ++e) {
    lcs::Arrow a = 2 * e;
    if (lcs::horizontal_for(pi, g, a)) continue;
    if (!lcs::upward_for(pi, g, a)) a = lcs::arrow_rev(a);
    long k = rng.next_long(0, max_up);
    bool integer = k >= 1 && rng.next_long(0, 1) == 1;
    s.s[a] = k;
    s.s[lcs::arrow_rev(a)] = integer ? -k : -k - 1;
  }
  return s;
}
