#include "lcs/residue.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lcs {

ResidueSpace residue_space(const Multigraph& g, const OrderedPartition& pi) {
  validate(g);
  const int na = g.narrows();
  std::vector<std::vector<Q>> rows;
  ResidueSpace rs;
  rs.pi = pi;

  // Vanishing along downward arrows.
  for (Arrow a = 0; a < na; ++a)
    if (upward_for(pi, g, arrow_rev(a))) {
      std::vector<Q> row(na, Q(0));
      row[a] = 1;
      rows.push_back(row);
      ++rs.rows_r1;
    }

  // Local residue conditions: arrows with tail v sum to zero.
  for (int v = 0; v < g.nv(); ++v) {
    std::vector<Q> row(na, Q(0));
    for (Arrow a = 0; a < na; ++a)
      if (arrow_tail(g, a) == v) row[a] += 1;
    rows.push_back(row);
    ++rs.rows_r2;
  }

  // Rosenlicht conditions, one row per horizontal edge.
  for (int e = 0; e < g.ne(); ++e)
    if (horizontal_for(pi, g, 2 * e)) {
      std::vector<Q> row(na, Q(0));
      row[2 * e] += 1;
      row[2 * e + 1] += 1;
      rows.push_back(row);
      ++rs.rows_r3;
    }

  // Global residue conditions.
  for (int n = 1; n < pi.num_levels(); ++n) {
    // Components of the subgraph induced below level n.
    std::vector<int> comp(g.nv(), -1);
    int ncomp = 0;
    for (int v = 0; v < g.nv(); ++v)
      if (pi.level[v] < n && comp[v] == -1) {
        comp[v] = ncomp;
        std::vector<int> stack{v};
        while (!stack.empty()) {
          int u = stack.back();
          stack.pop_back();
          for (const auto& e : g.edges)
            for (int side = 0; side < 2; ++side)
              if (e.ends[side] == u && pi.level[e.ends[1 - side]] < n && comp[e.ends[1 - side]] == -1) {
                comp[e.ends[1 - side]] = ncomp;
                stack.push_back(e.ends[1 - side]);
              }
        }
        ++ncomp;
      }
    for (int c = 0; c < ncomp; ++c) {
      std::vector<Q> row(na, Q(0));
      bool any = false;
      for (Arrow a = 0; a < na; ++a)
        if (pi.level[arrow_tail(g, a)] == n && pi.level[arrow_head(g, a)] < n &&
            comp[arrow_head(g, a)] == c) {
          row[a] += 1;
          any = true;
        }
      if (any) {
        rows.push_back(row);
        ++rs.rows_r4;
      }
    }
  }

  Mat m(static_cast<int>(rows.size()), na);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < na; ++c) m.at(r, c) = rows[r][c];
  rs.basis = kernel_basis(m);
  return rs;
}

namespace {

std::vector<std::vector<int>> tail_columns(const Multigraph& g) {
  std::vector<std::vector<int>> cols(g.nv());
  for (Arrow a = 0; a < g.narrows(); ++a) cols[arrow_tail(g, a)].push_back(a);
  return cols;
}

SetFn gamma_impl(const Multigraph& g, const ResidueSpace& rs, bool parallel) {
  SetFn f(g.vertices);
  auto by_tail = tail_columns(g);
  const long full = f.full();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (long I = 1; I <= full; ++I) {
    std::vector<int> cols;
    for (int v = 0; v < g.nv(); ++v)
      if (I >> v & 1) cols.insert(cols.end(), by_tail[v].begin(), by_tail[v].end());
    f.at(static_cast<Subset>(I)) = rank_of_cols(rs.basis, cols);
  }
  return f;
}

}  // namespace

SetFn gamma(const Multigraph& g, const ResidueSpace& rs) { return gamma_impl(g, rs, true); }

SetFn gamma_serial(const Multigraph& g, const ResidueSpace& rs) { return gamma_impl(g, rs, false); }

SetFn gamma(const Multigraph& g, const OrderedPartition& pi) {
  return gamma(g, residue_space(g, pi));
}

SetFn genus_modular(const Multigraph& g) {
  std::vector<Q> pt(g.genus.begin(), g.genus.end());
  return SetFn::modular(g.vertices, pt);
}

namespace {

void require_pair(const Multigraph& g, const SlopeFn& s, const OrderedPartition& pi) {
  if (!is_slope_level_pair(g, s, pi))
    throw std::invalid_argument("slope function and partition do not form a slope-level pair");
}

}  // namespace

SetFn eta_hat(const Multigraph& g, const SlopeFn& s, const OrderedPartition& pi) {
  require_pair(g, s, pi);
  SetFn f = eta(g, s, pi);
  SlopeSets ss = slope_sets(g, s);
  for (Subset I = 1; I <= f.full(); ++I) f.at(I) += count_arrows(g, ss.a_int, I, I);
  return f;
}

SetFn eta(const Multigraph& g, const SlopeFn& s, const OrderedPartition& pi) {
  require_pair(g, s, pi);
  return gamma(g, pi) + genus_modular(g) + zeta(g, s);
}

bool eta_simple_by_gamma(const Multigraph& g, const SlopeFn& s, const OrderedPartition& pi) {
  require_pair(g, s, pi);
  if (g.nv() == 1) return true;
  SetFn gm = gamma(g, pi);
  SlopeSets ss = slope_sets(g, s);
  const Subset full = gm.full();
  const Q gg = g.ne() - g.nv() + 1;
  for (Subset I = 1; I < full; ++I) {
    if (!(I & 1)) continue;  // fix the side containing vertex 0
    Subset comp = full & ~I;
    if (gm(I) + gm(comp) > gg) continue;
    bool crossing = false;
    for (int e : ss.e_int) {
      bool in0 = I >> g.edges[e].ends[0] & 1, in1 = I >> g.edges[e].ends[1] & 1;
      if (in0 != in1) crossing = true;
    }
    if (!crossing) return false;
  }
  return true;
}

}  // namespace lcs
