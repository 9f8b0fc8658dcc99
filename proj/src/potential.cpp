#include "lcs/potential.hpp"

#include <algorithm>
#include <sstream>

namespace lcs {

namespace {

void require_lengths(const Multigraph& g, const std::vector<Q>& ell) {
  if (static_cast<int>(ell.size()) != g.ne())
    throw std::invalid_argument("edge length count mismatch");
  for (const Q& l : ell)
    if (l <= 0) throw std::invalid_argument("edge lengths must be positive");
}

std::string circuit_str(const Multigraph& g, const Circuit& z) {
  std::ostringstream os;
  for (std::size_t i = 0; i < z.size(); ++i) os << (i ? " " : "") << arrow_name(g, z[i]);
  return os.str();
}

}  // namespace

AdmissibleExtension admissible_extension(const Multigraph& g, const std::vector<Q>& ell,
                                         const std::vector<Q>& h) {
  require_lengths(g, ell);
  if (static_cast<int>(h.size()) != g.nv()) throw std::invalid_argument("height count mismatch");
  AdmissibleExtension ext{slope_from(g, ell, h), {}};
  ext.divisor.vertex.assign(g.nv(), 0);
  for (Arrow a = 0; a < g.narrows(); ++a) ext.divisor.vertex[arrow_tail(g, a)] += ext.slopes(a);
  for (int e = 0; e < g.ne(); ++e) {
    Arrow plus = 2 * e;
    Q diff = h[arrow_tail(g, plus)] - h[arrow_head(g, plus)];
    Q rem = diff - ell[e] * ext.slopes(plus);  // Euclidean remainder, 0 <= rem < l_e
    if (rem != 0) ext.divisor.interior.push_back({arrow_rev(plus), rem});
  }
  return ext;
}

namespace {

// Finite stand-in for -infinity: so negative that no pair or circuit
// through such an arrow can ever reach zero.
Q inf_substitute(const Multigraph& g, const ArrowWeights& x) {
  Q total = 0;
  for (Arrow a = 0; a < g.narrows(); ++a)
    if (x.finite(a)) total += abs(x.value[a]);
  return -(total + 1) * (g.narrows() + 1);
}

}  // namespace

std::vector<Q> subintegrability(const Multigraph& g, const ArrowWeights& x) {
  const int n = g.narrows();
  if (static_cast<int>(x.value.size()) != n) throw std::invalid_argument("weight count mismatch");

  for (int e = 0; e < g.ne(); ++e) {
    Arrow a = 2 * e;
    if (!x.finite(a) || !x.finite(a + 1)) continue;
    Q pair = x.value[a] + x.value[a + 1];
    if (pair > 0)
      throw GuardViolation("positive weight pair on " + arrow_name(g, a), a);
  }

  std::vector<Circuit> circuits = elementary_circuits(g);
  std::vector<char> zero_circuit_arrow(n, 0);
  Q min_neg = 0;  // smallest |negative sum| seen, 0 = none yet
  auto note_neg = [&](const Q& sum) {
    Q mag = -sum;
    if (min_neg == 0 || mag < min_neg) min_neg = mag;
  };

  for (const Circuit& z : circuits) {
    bool finite = true;
    Q sum = 0;
    for (Arrow a : z) {
      if (!x.finite(a)) {
        finite = false;
        break;
      }
      sum += x.value[a];
    }
    if (!finite) continue;
    if (sum > 0)
      throw GuardViolation("positive circuit " + circuit_str(g, z), z);
    if (sum == 0) {
      for (Arrow a : z) zero_circuit_arrow[a] = 1;
    } else {
      note_neg(sum);
    }
  }

  // Tight set: arrows whose inequality must close exactly.
  std::vector<char> tight(n, 0);
  for (int e = 0; e < g.ne(); ++e) {
    Arrow a = 2 * e;
    bool pair_tight =
        x.finite(a) && x.finite(a + 1) && x.value[a] + x.value[a + 1] == 0;
    if (x.finite(a) && x.finite(a + 1) && !pair_tight) note_neg(x.value[a] + x.value[a + 1]);
    tight[a] = pair_tight || zero_circuit_arrow[a];
    tight[a + 1] = pair_tight || zero_circuit_arrow[a + 1];
  }

  // Shift every slack arrow up by a uniform margin small enough to keep
  // all strict sums negative; any solution of the shifted system is then
  // tight exactly on the tight set.
  Q delta = min_neg == 0 ? Q(1) : min_neg / (n + 1);
  Q m_value = inf_substitute(g, x);
  std::vector<Q> w(n);
  for (Arrow a = 0; a < n; ++a) {
    w[a] = x.finite(a) ? x.value[a] : m_value;
    if (!tight[a]) w[a] += delta;
  }

  // Bellman-Ford on difference constraints h(head) <= h(tail) - w(a).
  std::vector<Q> h(g.nv(), Q(0));
  for (int round = 0; round < g.nv(); ++round) {
    bool changed = false;
    for (Arrow a = 0; a < n; ++a) {
      Q cand = h[arrow_tail(g, a)] - w[a];
      if (cand < h[arrow_head(g, a)]) {
        h[arrow_head(g, a)] = cand;
        changed = true;
      }
    }
    if (!changed) break;
    if (round == g.nv() - 1) throw std::logic_error("difference constraints kept relaxing");
  }

  Q low = h[0];
  for (const Q& v : h) low = std::min(low, v);
  for (Q& v : h) v -= low;
  return h;
}

GhostModel ghost_graph(const Multigraph& g, const OrderedPartition& pi) {
  GhostModel gm;
  gm.nlevels = pi.num_levels();
  std::vector<std::string> labels(gm.nlevels);
  for (int i = 0; i < gm.nlevels; ++i) labels[i] = "L" + std::to_string(i);
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> edges;
  for (int e = 0; e < g.ne(); ++e) {
    int lu = pi.level[g.edges[e].ends[0]], lv = pi.level[g.edges[e].ends[1]];
    if (lu == lv) continue;
    edges.push_back({g.edges[e].id, {labels[lu], labels[lv]}});
    gm.edge_of.push_back(e);
  }
  for (int i = 0; i < gm.nlevels; ++i)
    for (int j = i + 1; j < gm.nlevels; ++j) {
      edges.push_back({"ghost:" + std::to_string(i) + ":" + std::to_string(j),
                       {labels[i], labels[j]}});
      gm.edge_of.push_back(-1);
    }
  gm.graph = make_graph(labels, edges);
  return gm;
}

ArrowWeights ghost_weights(const GhostModel& gm, const Multigraph& g, const SlopeFn& s,
                           const std::vector<Q>& ell) {
  ArrowWeights x(gm.graph.narrows());
  for (Arrow a = 0; a < gm.graph.narrows(); ++a) {
    int e = gm.edge_of[arrow_edge(a)];
    if (e >= 0) {
      Arrow orig = 2 * e + (a & 1);
      x.set(a, ell[e] * s(orig));
    } else if (arrow_tail(gm.graph, a) > arrow_head(gm.graph, a)) {
      x.set(a, Q(0));  // upward ghost
    } else {
      x.set_inf(a);  // downward ghost
    }
  }
  return x;
}

std::vector<Q> ghost_lengths(const GhostModel& gm, const std::vector<Q>& ell) {
  std::vector<Q> out(gm.graph.ne(), Q(1));
  for (int e = 0; e < gm.graph.ne(); ++e)
    if (gm.edge_of[e] >= 0) out[e] = ell[gm.edge_of[e]];
  return out;
}

std::vector<Q> recover_level_function(const Multigraph& g, const std::vector<Q>& ell,
                                      const SlopeFn& s, const OrderedPartition& pi) {
  require_lengths(g, ell);
  check_slope_fn(g, s);
  if (!is_slope_level_pair(g, s, pi))
    throw std::invalid_argument("slopes and partition do not form a pair");

  GhostModel gm = ghost_graph(g, pi);
  ArrowWeights x = ghost_weights(gm, g, s, ell);

  // Compatibility of the lengths with the pair: over the ghost graph every
  // finite circuit sums <= 0, with zero exactly on all-integer circuits.
  auto arrow_integer = [&](Arrow a) {
    int e = gm.edge_of[arrow_edge(a)];
    return e >= 0 && integer_for(s, 2 * e + (a & 1));
  };
  for (const Circuit& z : elementary_circuits(gm.graph)) {
    bool finite = true, all_int = true;
    Q sum = 0;
    for (Arrow a : z) {
      if (!x.finite(a)) {
        finite = false;
        break;
      }
      sum += x.value[a];
      if (!arrow_integer(a)) all_int = false;
    }
    if (!finite) continue;
    if (sum > 0 || (sum == 0) != all_int)
      throw CompatibilityError("lengths not interior to the cone of the pair: circuit " +
                                   circuit_str(gm.graph, z),
                               z);
  }

  std::vector<Q> hq = subintegrability(gm.graph, x);
  std::vector<Q> h(g.nv());
  for (int v = 0; v < g.nv(); ++v) h[v] = hq[pi.level[v]];
  return h;
}

}  // namespace lcs
