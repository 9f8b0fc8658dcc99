#include "lcs/cones.hpp"

#include "lcs/residue.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace lcs {

namespace {

void require_pair(const Multigraph& g, const SlopeFn& s, const OrderedPartition& pi) {
  check_slope_fn(g, s);
  if (!is_slope_level_pair(g, s, pi))
    throw std::invalid_argument("slopes and partition do not form a pair");
}

std::string circuit_str(const Multigraph& g, const Circuit& z) {
  std::ostringstream os;
  for (std::size_t i = 0; i < z.size(); ++i) os << (i ? " " : "") << arrow_name(g, z[i]);
  return os.str();
}

void require_circuit(const Multigraph& g, const Circuit& z) {
  if (z.empty()) throw std::invalid_argument("empty circuit");
  std::vector<char> seen(g.nv(), 0);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] < 0 || z[i] >= g.narrows()) throw std::invalid_argument("arrow out of range");
    if (arrow_head(g, z[i]) != arrow_tail(g, z[(i + 1) % z.size()]))
      throw std::invalid_argument("arrows do not close up head to tail");
    int t = arrow_tail(g, z[i]);
    if (seen[t]) throw std::invalid_argument("repeated tail in circuit");
    seen[t] = 1;
  }
}

// Quotient vertices are indexed by level, so ghost spans read directly off
// the arrow ends. Returns (head level, tail level) per upward ghost.
std::vector<std::pair<int, int>> ghost_spans(const GhostModel& gm, const Circuit& z) {
  std::vector<std::pair<int, int>> spans;
  for (Arrow a : z)
    if (gm.edge_of[arrow_edge(a)] < 0)
      spans.push_back({arrow_head(gm.graph, a), arrow_tail(gm.graph, a)});
  return spans;
}

bool spans_overlap(std::pair<int, int> p, std::pair<int, int> q) {
  auto cross = [](std::pair<int, int> a, std::pair<int, int> b) {
    return a.second > b.second && b.second >= a.first && a.first > b.first;
  };
  return cross(p, q) || cross(q, p);
}

// Rotation starting at the smallest tail; tails are distinct, so unique.
Circuit rotate_canonical(const Multigraph& g, Circuit z) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < z.size(); ++i)
    if (arrow_tail(g, z[i]) < arrow_tail(g, z[best])) best = i;
  std::rotate(z.begin(), z.begin() + best, z.end());
  return z;
}

Circuit reverse_circuit(const Circuit& z) {
  Circuit r(z.rbegin(), z.rend());
  for (Arrow& a : r) a = arrow_rev(a);
  return r;
}

// Shared key for a circuit and its reversal, pairing the two inequalities
// that close into one equality.
Circuit unoriented_key(const Multigraph& g, const Circuit& z) {
  Circuit f = rotate_canonical(g, z);
  Circuit r = rotate_canonical(g, reverse_circuit(z));
  return std::min(f, r);
}

std::vector<Circuit> essential_of(const GhostModel& gm, const Multigraph& g, const SlopeFn& s,
                                  std::size_t cap) {
  std::vector<Circuit> out;
  for (Circuit& z : elementary_circuits(gm.graph, cap))
    if (is_essential(gm, g, s, z)) out.push_back(std::move(z));
  return out;
}

// max t subject to the cone rows, extra equalities, ell_e >= t, t <= 1.
// Homogeneity makes the optimum 0 or 1; tighten != nullptr additionally
// forces the listed inequality rows to hold with slack t.
LpResult positivity_lp(const ConeH& cone, const std::vector<const ConeRow*>& extra_eqs,
                       bool tighten) {
  const int ne = cone.nedges;
  Polyhedron p(ne + 1);
  auto lift = [&](const std::vector<Q>& coeffs, const Q& tcoef) {
    std::vector<Q> row(coeffs);
    row.push_back(tcoef);
    return row;
  };
  for (const ConeRow& r : cone.ineqs) p.add_ineq(lift(r.coeffs, tighten ? Q(1) : Q(0)), Q(0));
  for (const ConeRow& r : cone.eqs) p.add_eq(lift(r.coeffs, Q(0)), Q(0));
  for (const ConeRow* r : extra_eqs) p.add_eq(lift(r->coeffs, Q(0)), Q(0));
  for (int e = 0; e < ne; ++e) {
    std::vector<Q> row(ne + 1, Q(0));
    row[e] = -1;
    row[ne] = 1;
    p.add_ineq(row, Q(0));
  }
  std::vector<Q> tcap(ne + 1, Q(0));
  tcap[ne] = 1;
  p.add_ineq(tcap, Q(1));
  std::vector<Q> obj(ne + 1, Q(0));
  obj[ne] = 1;
  return lp_max(obj, p);
}

}  // namespace

long gint_genus(const Multigraph& g, const SlopeFn& s, const OrderedPartition& pi) {
  const int k = pi.num_levels();
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  long m = 0;
  for (int e = 0; e < g.ne(); ++e) {
    int lu = pi.level[g.edges[e].ends[0]], lv = pi.level[g.edges[e].ends[1]];
    if (lu == lv || !integer_for(s, 2 * e)) continue;
    ++m;
    parent[find(lu)] = find(lv);
  }
  long comps = 0;
  for (int v = 0; v < k; ++v)
    if (find(v) == v) ++comps;
  return m - k + comps;
}

bool is_essential(const GhostModel& gm, const Multigraph& g, const SlopeFn& s,
                  const Circuit& z) {
  (void)g;
  std::vector<std::pair<int, int>> spans;
  for (Arrow a : z) {
    int e = gm.edge_of[arrow_edge(a)];
    if (e < 0) {
      int tl = arrow_tail(gm.graph, a), hl = arrow_head(gm.graph, a);
      if (tl < hl) return false;  // downward ghost
      spans.push_back({hl, tl});
    } else if (s(2 * e + (a & 1)) == 0) {
      return false;  // zero-slope vertical arrow; its ghost replacement covers it
    }
  }
  for (std::size_t i = 0; i < spans.size(); ++i)
    for (std::size_t j = i + 1; j < spans.size(); ++j)
      if (spans_overlap(spans[i], spans[j])) return false;
  return true;
}

std::vector<Circuit> essential_circuits(const Multigraph& g, const SlopeFn& s,
                                        const OrderedPartition& pi, std::size_t cap) {
  require_pair(g, s, pi);
  GhostModel gm = ghost_graph(g, pi);
  return essential_of(gm, g, s, cap);
}

ConeRow circuit_row(const GhostModel& gm, const Multigraph& g, const SlopeFn& s,
                    const Circuit& z) {
  require_circuit(gm.graph, z);
  ConeRow row;
  row.coeffs.assign(g.ne(), Q(0));
  row.circuit = z;
  row.integer = true;
  for (Arrow a : z) {
    int e = gm.edge_of[arrow_edge(a)];
    if (e < 0) {
      if (arrow_tail(gm.graph, a) < arrow_head(gm.graph, a))
        throw std::invalid_argument("downward ghost has no finite inequality");
      row.integer = false;  // upward ghost, slope 0
      continue;
    }
    Arrow orig = 2 * e + (a & 1);
    row.coeffs[e] += s(orig);
    if (!integer_for(s, orig)) row.integer = false;
  }
  return row;
}

ConeH cone_hrep(const Multigraph& g, const SlopeFn& s, const OrderedPartition& pi,
                std::size_t cap) {
  require_pair(g, s, pi);
  GhostModel gm = ghost_graph(g, pi);
  ConeH cone;
  cone.nedges = g.ne();
  cone.pair = {s, pi};
  std::map<Circuit, ConeRow> integer_pairs;
  for (const Circuit& z : essential_of(gm, g, s, cap)) {
    ConeRow row = circuit_row(gm, g, s, z);
    if (!row.integer) {
      cone.ineqs.push_back(std::move(row));
      continue;
    }
    Circuit key = unoriented_key(gm.graph, z);
    auto it = integer_pairs.find(key);
    if (it == integer_pairs.end() || row.circuit < it->second.circuit)
      integer_pairs[std::move(key)] = std::move(row);
  }
  for (auto& [key, row] : integer_pairs) cone.eqs.push_back(std::move(row));
  return cone;
}

Polyhedron cone_polyhedron(const ConeH& cone) {
  Polyhedron p(cone.nedges);
  for (const ConeRow& r : cone.ineqs) p.add_ineq(r.coeffs, Q(0));
  for (const ConeRow& r : cone.eqs) p.add_eq(r.coeffs, Q(0));
  for (int e = 0; e < cone.nedges; ++e) {
    std::vector<Q> row(cone.nedges, Q(0));
    row[e] = -1;
    p.add_ineq(row, Q(0));
  }
  return p;
}

bool interior_membership(const ConeH& cone, const std::vector<Q>& ell) {
  if (static_cast<int>(ell.size()) != cone.nedges)
    throw std::invalid_argument("edge length count mismatch");
  for (const Q& l : ell)
    if (l <= 0) throw std::invalid_argument("edge lengths must be positive");
  auto dot = [&](const ConeRow& r) {
    Q acc = 0;
    for (int e = 0; e < cone.nedges; ++e) acc += r.coeffs[e] * ell[e];
    return acc;
  };
  for (const ConeRow& r : cone.ineqs)
    if (dot(r) >= 0) return false;
  for (const ConeRow& r : cone.eqs)
    if (dot(r) != 0) return false;
  return true;
}

bool cone_interior_nonempty(const ConeH& cone, std::vector<Q>* point) {
  LpResult res = positivity_lp(cone, {}, true);
  if (res.status != LpStatus::kOptimal) throw std::logic_error("positivity program not optimal");
  if (res.value <= 0) return false;
  if (point) point->assign(res.x.begin(), res.x.begin() + cone.nedges);
  return true;
}

bool interior_nonempty(const Multigraph& g, const SlopeFn& s, const OrderedPartition& pi,
                       std::vector<Q>* point, std::size_t cap) {
  return cone_interior_nonempty(cone_hrep(g, s, pi, cap), point);
}

namespace {

// Positivity slack of the cut C cap H_z; the circuit is active iff positive.
Q active_slack(const ConeH& cone, const ConeRow& zrow) {
  LpResult res = positivity_lp(cone, {&zrow}, false);
  if (res.status != LpStatus::kOptimal) throw std::logic_error("activeness program not optimal");
  return res.value;
}

}  // namespace

bool is_active(const Multigraph& g, const SlopeFn& s, const OrderedPartition& pi,
               const Circuit& z, Q* bound, std::size_t cap) {
  require_pair(g, s, pi);
  GhostModel gm = ghost_graph(g, pi);
  ConeRow zrow = circuit_row(gm, g, s, z);
  if (zrow.integer) {
    if (bound) *bound = 0;
    return false;
  }
  Q slack = active_slack(cone_hrep(g, s, pi, cap), zrow);
  if (bound) *bound = slack;
  return slack > 0;
}

SlopeLevelPair squash(const Multigraph& g, const SlopeFn& s, const OrderedPartition& pi,
                      const Circuit& z, std::size_t cap) {
  require_pair(g, s, pi);
  GhostModel gm = ghost_graph(g, pi);
  require_circuit(gm.graph, z);
  if (!is_essential(gm, g, s, z))
    throw std::invalid_argument("circuit is not essential for the pair: " +
                                circuit_str(gm.graph, z));
  ConeRow zrow = circuit_row(gm, g, s, z);
  if (zrow.integer)
    throw NotActiveError("circuit lies in the integer subgraph: " + circuit_str(gm.graph, z), z,
                         Q(0));
  Q slack = active_slack(cone_hrep(g, s, pi, cap), zrow);
  if (slack <= 0)
    throw NotActiveError("circuit is not active, positivity slack " + slack.get_str() + ": " +
                             circuit_str(gm.graph, z),
                         z, slack);

  const std::vector<std::pair<int, int>> spans = ghost_spans(gm, z);
  auto covered = [&](int x, int y) {  // tail level x, head level y
    for (auto [h, t] : spans)
      if (t >= x && y >= h) return true;
    return false;
  };

  // An active circuit never runs a ghost over a positive slope, and an
  // essential one never doubles back under its own ghosts.
  std::vector<char> in_z(g.narrows(), 0);
  for (Arrow a : z) {
    int e = gm.edge_of[arrow_edge(a)];
    if (e >= 0) in_z[2 * e + (a & 1)] = 1;
  }
  for (int e = 0; e < g.ne(); ++e) {
    int lu = pi.level[g.edges[e].ends[0]], lv = pi.level[g.edges[e].ends[1]];
    if (lu == lv) continue;
    for (Arrow a = 2 * e; a <= 2 * e + 1; ++a) {
      int x = pi.level[arrow_tail(g, a)], y = pi.level[arrow_head(g, a)];
      if (!covered(x, y)) continue;
      if (s(a) > 0)
        throw std::logic_error("covered arrow with positive slope: " + arrow_name(g, a));
      if (covered(y, x) && (in_z[a] || in_z[arrow_rev(a)]))
        throw std::logic_error("doubly covered arrow inside its own circuit: " +
                               arrow_name(g, a));
    }
  }

  SlopeFn s2 = s;
  for (Arrow a = 0; a < g.narrows(); ++a) {
    if (horizontal_for(pi, g, a)) continue;
    Arrow ab = arrow_rev(a);
    if (in_z[ab] && !integer_for(s, ab)) {
      s2[a] += 1;
      continue;
    }
    int x = pi.level[arrow_tail(g, a)], y = pi.level[arrow_head(g, a)];
    bool same_ghost = false;
    for (auto [h, t] : spans)
      if (t >= std::max(x, y) && std::min(x, y) >= h) same_ghost = true;
    if (same_ghost && s(ab) == 0) s2[a] += 1;
  }

  // Merge the level interval under each ghost.
  const int k = pi.num_levels();
  std::vector<int> root(k);
  std::iota(root.begin(), root.end(), 0);
  for (auto [h, t] : spans)
    for (int lv = h; lv <= t; ++lv) root[lv] = std::min(root[lv], h);
  for (int lv = 0; lv < k; ++lv) root[lv] = root[root[lv]];  // nested intervals
  std::vector<std::vector<int>> blocks;
  for (int lv = 0; lv < k; ++lv) {
    if (root[lv] == lv) blocks.emplace_back();
    blocks.back().insert(blocks.back().end(), pi.blocks[lv].begin(), pi.blocks[lv].end());
  }
  SlopeLevelPair out{std::move(s2), make_partition(g, blocks)};
  if (!is_slope_level_pair(g, out.s, out.pi))
    throw std::logic_error("squash left the slope-level invariant");
  // eta only grows under squashing, so base polytopes and their brick
  // containments persist along squash chains
  if (!eta(g, s, pi).leq(eta(g, out.s, out.pi)))
    throw std::logic_error("squash decreased eta");
  return out;
}

std::vector<Facet> facets(const Multigraph& g, const SlopeFn& s, const OrderedPartition& pi,
                          std::size_t cap) {
  ConeH cone = cone_hrep(g, s, pi, cap);
  if (!cone_interior_nonempty(cone))
    throw std::invalid_argument("cone has empty interior");
  const long dim = static_cast<long>(g.ne()) - gint_genus(g, s, pi);
  const Polyhedron base = cone_polyhedron(cone);

  std::vector<std::pair<Circuit, Polyhedron>> cuts;  // circuit, facet polyhedron
  for (const ConeRow& r : cone.ineqs) {
    if (active_slack(cone, r) <= 0) continue;
    Polyhedron face = base;
    face.add_eq(r.coeffs, Q(0));
    if (affine_dim(face) != dim - 1) continue;
    cuts.push_back({r.circuit, std::move(face)});
  }
  std::sort(cuts.begin(), cuts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Facet> out;
  std::vector<char> used(cuts.size(), 0);
  const long base_genus = gint_genus(g, s, pi);
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (used[i]) continue;
    Facet f;
    f.circuit = cuts[i].first;
    for (std::size_t j = i + 1; j < cuts.size(); ++j)
      if (!used[j] && poly_equal(cuts[i].second, cuts[j].second)) {
        used[j] = 1;
        f.alternatives.push_back(cuts[j].first);
      }
    f.pair = squash(g, s, pi, f.circuit, cap);
    if (gint_genus(g, f.pair.s, f.pair.pi) != base_genus + 1)
      throw std::logic_error("facet squash missed the genus increment");
    out.push_back(std::move(f));
  }
  return out;
}

long dimension(const Multigraph& g, const SlopeFn& s, const OrderedPartition& pi,
               std::size_t cap) {
  ConeH cone = cone_hrep(g, s, pi, cap);
  if (cone_interior_nonempty(cone)) return static_cast<long>(g.ne()) - gint_genus(g, s, pi);
  return affine_dim(cone_polyhedron(cone));
}

}  // namespace lcs
