#include "lcs/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lcs {

int Multigraph::edge_index(const std::string& id) const {
  for (int e = 0; e < ne(); ++e)
    if (edges[e].id == id) return e;
  throw std::invalid_argument("unknown edge id: " + id);
}

Multigraph make_graph(const std::vector<std::string>& vertex_labels,
                      const std::vector<std::pair<std::string, std::pair<std::string, std::string>>>& edges,
                      const std::vector<long>& genus) {
  Multigraph g;
  g.vertices.labels = vertex_labels;
  g.vertices.validate();
  for (const auto& [id, ends] : edges) {
    Edge e;
    e.id = id;
    e.ends[0] = g.vertices.index_of(ends.first);
    e.ends[1] = g.vertices.index_of(ends.second);
    for (const auto& other : g.edges)
      if (other.id == id) throw std::invalid_argument("duplicate edge id: " + id);
    g.edges.push_back(e);
  }
  g.genus = genus.empty() ? std::vector<long>(vertex_labels.size(), 0) : genus;
  if (static_cast<int>(g.genus.size()) != g.nv())
    throw std::invalid_argument("genus function size mismatch");
  validate(g);
  return g;
}

std::string arrow_name(const Multigraph& g, Arrow a) {
  return g.edges[a >> 1].id + ((a & 1) ? ":-" : ":+");
}

Arrow parse_arrow(const Multigraph& g, const std::string& name) {
  auto pos = name.rfind(':');
  if (pos == std::string::npos || pos + 2 != name.size() ||
      (name[pos + 1] != '+' && name[pos + 1] != '-'))
    throw std::invalid_argument("bad arrow name: " + name);
  int e = g.edge_index(name.substr(0, pos));
  return 2 * e + (name[pos + 1] == '-' ? 1 : 0);
}

GraphInfo validate(const Multigraph& g) {
  if (g.nv() == 0) throw std::invalid_argument("empty vertex set");
  for (long gv : g.genus)
    if (gv < 0) throw std::invalid_argument("negative vertex genus");
  std::vector<char> seen(g.nv(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& e : g.edges)
      for (int side = 0; side < 2; ++side)
        if (e.ends[side] == v && !seen[e.ends[1 - side]]) {
          seen[e.ends[1 - side]] = 1;
          stack.push_back(e.ends[1 - side]);
        }
  }
  for (char c : seen)
    if (!c) throw std::invalid_argument("disconnected graph");
  return GraphInfo{true, g.ne() - g.nv() + 1};
}

long total_genus(const Multigraph& g) {
  long acc = g.ne() - g.nv() + 1;
  for (long gv : g.genus) acc += gv;
  return acc;
}

OrderedPartition make_partition(const Multigraph& g, const std::vector<std::vector<int>>& blocks) {
  OrderedPartition pi;
  pi.blocks = blocks;
  pi.level.assign(g.nv(), -1);
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("empty partition block");
    for (int v : blocks[b]) {
      if (v < 0 || v >= g.nv()) throw std::invalid_argument("partition vertex out of range");
      if (pi.level[v] != -1) throw std::invalid_argument("partition blocks overlap");
      pi.level[v] = b;
    }
  }
  for (int lv : pi.level)
    if (lv == -1) throw std::invalid_argument("partition misses a vertex");
  return pi;
}

OrderedPartition trivial_partition(const Multigraph& g) {
  std::vector<int> all(g.nv());
  for (int v = 0; v < g.nv(); ++v) all[v] = v;
  return make_partition(g, {all});
}

OrderedPartition level_from(const Multigraph& g, const std::vector<Q>& h) {
  if (static_cast<int>(h.size()) != g.nv()) throw std::invalid_argument("height vector size mismatch");
  std::map<Q, std::vector<int>> fibers;
  for (int v = 0; v < g.nv(); ++v) fibers[h[v]].push_back(v);
  std::vector<std::vector<int>> blocks;
  for (auto& [val, vs] : fibers) blocks.push_back(vs);
  return make_partition(g, blocks);
}

void check_slope_fn(const Multigraph& g, const SlopeFn& s) {
  if (static_cast<int>(s.s.size()) != g.narrows())
    throw std::invalid_argument("slope function size mismatch");
  for (int e = 0; e < g.ne(); ++e) {
    long sum = s(2 * e) + s(2 * e + 1);
    if (sum != 0 && sum != -1)
      throw std::invalid_argument("slope pair sum out of range on edge " + g.edges[e].id);
  }
}

SlopeFn slope_from(const Multigraph& g, const std::vector<Q>& ell, const std::vector<Q>& h) {
  if (static_cast<int>(ell.size()) != g.ne()) throw std::invalid_argument("length vector size mismatch");
  if (static_cast<int>(h.size()) != g.nv()) throw std::invalid_argument("height vector size mismatch");
  for (const Q& l : ell)
    if (l <= 0) throw std::invalid_argument("edge lengths must be positive");
  SlopeFn s;
  s.s.resize(g.narrows());
  for (Arrow a = 0; a < g.narrows(); ++a) {
    Q diff = h[arrow_tail(g, a)] - h[arrow_head(g, a)];
    Z fl = floor_q(diff / ell[a >> 1]);
    s.s[a] = fl.get_si();
  }
  check_slope_fn(g, s);
  return s;
}

SlopeSets slope_sets(const Multigraph& g, const SlopeFn& s) {
  SlopeSets out;
  for (Arrow a = 0; a < g.narrows(); ++a) {
    if (upward_for(s, a)) {
      out.a_up.push_back(a);
      out.a_down.push_back(arrow_rev(a));
      if (integer_for(s, a)) out.a_int.push_back(a);
    }
    if (horizontal_for(s, a)) out.horizontal.push_back(a);
  }
  for (int e = 0; e < g.ne(); ++e)
    if (integer_for(s, 2 * e)) out.e_int.push_back(e);
  return out;
}

bool is_slope_level_pair(const Multigraph& g, const SlopeFn& s, const OrderedPartition& pi) {
  check_slope_fn(g, s);
  for (Arrow a = 0; a < g.narrows(); ++a)
    if (upward_for(s, a) != upward_for(pi, g, a)) return false;
  return true;
}

long count_arrows(const Multigraph& g, const std::vector<Arrow>& arrows, Subset tails, Subset heads) {
  long c = 0;
  for (Arrow a : arrows)
    if ((tails >> arrow_tail(g, a) & 1) && (heads >> arrow_head(g, a) & 1)) ++c;
  return c;
}

SetFn zeta(const Multigraph& g, const SlopeFn& s) {
  check_slope_fn(g, s);
  SetFn z(g.vertices);
  SlopeSets sets = slope_sets(g, s);
  Subset full = z.full();
  for (Subset I = 0; I <= full; ++I) {
    Subset comp = full & ~I;
    long acc = count_arrows(g, sets.a_up, comp, I);
    for (Arrow a = 0; a < g.narrows(); ++a)
      if ((I >> arrow_tail(g, a) & 1) && (comp >> arrow_head(g, a) & 1)) acc += s(a);
    z.at(I) = acc;
  }
  return z;
}

}  // namespace lcs
