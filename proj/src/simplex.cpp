#include "lcs/simplex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lcs {

void Polyhedron::add_ineq(const std::vector<Q>& row, const Q& rhs) {
  if (static_cast<int>(row.size()) != nvars) throw std::invalid_argument("row size mismatch");
  Mat next(A.rows + 1, nvars);
  next.a = A.a;
  next.a.insert(next.a.end(), row.begin(), row.end());
  A = next;
  b.push_back(rhs);
}

void Polyhedron::add_eq(const std::vector<Q>& row, const Q& rhs) {
  if (static_cast<int>(row.size()) != nvars) throw std::invalid_argument("row size mismatch");
  Mat next(C.rows + 1, nvars);
  next.a = C.a;
  next.a.insert(next.a.end(), row.begin(), row.end());
  C = next;
  d.push_back(rhs);
}

namespace {

// Full-tableau two-phase simplex with Bland's rule. Free variables are split
// into positive and negative parts.
class Tableau {
 public:
  Tableau(const Polyhedron& p) : nv_(p.nvars) {
    const int m1 = p.A.rows, m2 = p.C.rows;
    m_ = m1 + m2;
    slack_begin_ = 2 * nv_;
    art_begin_ = slack_begin_ + m1;
    // One artificial per row keeps the construction uniform; unused ones
    // simply never become basic.
    cols_ = art_begin_ + m_;
    t_ = Mat(m_, cols_ + 1);
    basis_.assign(m_, -1);
    for (int i = 0; i < m1; ++i) {
      for (int j = 0; j < nv_; ++j) {
        t_.at(i, 2 * j) = p.A.at(i, j);
        t_.at(i, 2 * j + 1) = -p.A.at(i, j);
      }
      t_.at(i, slack_begin_ + i) = 1;
      t_.at(i, cols_) = p.b[i];
    }
    for (int i = 0; i < m2; ++i) {
      for (int j = 0; j < nv_; ++j) {
        t_.at(m1 + i, 2 * j) = p.C.at(i, j);
        t_.at(m1 + i, 2 * j + 1) = -p.C.at(i, j);
      }
      t_.at(m1 + i, cols_) = p.d[i];
    }
    for (int r = 0; r < m_; ++r) {
      if (t_.at(r, cols_) < 0)
        for (int c = 0; c <= cols_; ++c) t_.at(r, c) = -t_.at(r, c);
      if (r < m1 && t_.at(r, slack_begin_ + r) == 1) {
        basis_[r] = slack_begin_ + r;
      } else {
        basis_[r] = art_begin_ + r;
        t_.at(r, art_begin_ + r) = 1;
      }
    }
  }

  // Returns false when the phase-1 optimum is nonzero (infeasible).
  bool phase1() {
    std::vector<Q> cost(cols_, Q(0));
    for (int c = art_begin_; c < cols_; ++c) cost[c] = -1;
    rebuild_objective(cost);
    run(cols_);  // artificials may leave but never re-enter via z-row signs
    if (zrhs_ != 0) return false;
    // Evict artificials still basic at zero; drop redundant rows.
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < art_begin_) continue;
      int c = 0;
      while (c < art_begin_ && t_.at(r, c) == 0) ++c;
      if (c < art_begin_) {
        pivot(r, c);
      } else {
        drop_row(r);
        --r;
      }
    }
    return true;
  }

  // Maximize; returns false on unboundedness.
  bool phase2(const std::vector<Q>& obj) {
    std::vector<Q> cost(cols_, Q(0));
    for (int j = 0; j < nv_; ++j) {
      cost[2 * j] = obj[j];
      cost[2 * j + 1] = -obj[j];
    }
    rebuild_objective(cost);
    return run(art_begin_);
  }

  Q objective() const { return zrhs_; }

  std::vector<Q> solution() const {
    std::vector<Q> split(cols_, Q(0));
    for (int r = 0; r < m_; ++r) split[basis_[r]] = t_.at(r, cols_);
    std::vector<Q> x(nv_);
    for (int j = 0; j < nv_; ++j) x[j] = split[2 * j] - split[2 * j + 1];
    return x;
  }

 private:
  void rebuild_objective(const std::vector<Q>& cost) {
    z_.assign(cols_, Q(0));
    zrhs_ = 0;
    for (int c = 0; c < cols_; ++c) z_[c] = -cost[c];
    for (int r = 0; r < m_; ++r) add_row_multiple_to_z(r, cost[basis_[r]]);
  }

  void add_row_multiple_to_z(int r, const Q& f) {
    if (f == 0) return;
    for (int c = 0; c < cols_; ++c) z_[c] += f * t_.at(r, c);
    zrhs_ += f * t_.at(r, cols_);
  }

  void pivot(int r, int c) {
    Q pv = t_.at(r, c);
    for (int j = 0; j <= cols_; ++j) t_.at(r, j) /= pv;
    for (int i = 0; i < m_; ++i) {
      if (i == r || t_.at(i, c) == 0) continue;
      Q f = t_.at(i, c);
      for (int j = 0; j <= cols_; ++j) t_.at(i, j) -= f * t_.at(r, j);
    }
    Q zf = z_[c];
    if (zf != 0) {
      for (int j = 0; j < cols_; ++j) z_[j] -= zf * t_.at(r, j);
      zrhs_ -= zf * t_.at(r, cols_);
    }
    basis_[r] = c;
  }

  // Bland: entering = smallest column with negative z entry (columns below
  // `limit` only), leaving = ratio test with smallest basic index on ties.
  bool run(int limit) {
    for (;;) {
      int enter = -1;
      for (int c = 0; c < limit; ++c)
        if (z_[c] < 0) {
          enter = c;
          break;
        }
      if (enter == -1) return true;
      int leave = -1;
      Q best;
      for (int r = 0; r < m_; ++r) {
        if (t_.at(r, enter) <= 0) continue;
        Q ratio = t_.at(r, cols_) / t_.at(r, enter);
        if (leave == -1 || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == -1) return false;
      pivot(leave, enter);
    }
  }

  void drop_row(int r) {
    for (int c = 0; c <= cols_; ++c) t_.at(r, c) = t_.at(m_ - 1, c);
    basis_[r] = basis_[m_ - 1];
    --m_;
    t_.rows = m_;
    t_.a.resize(static_cast<std::size_t>(m_) * (cols_ + 1));
    basis_.resize(m_);
  }

  int nv_, m_, cols_, slack_begin_, art_begin_;
  Mat t_;
  std::vector<int> basis_;
  std::vector<Q> z_;
  Q zrhs_ = 0;
};

}  // namespace

LpResult lp_max(const std::vector<Q>& c, const Polyhedron& p) {
  if (static_cast<int>(c.size()) != p.nvars) throw std::invalid_argument("objective size mismatch");
  Tableau tab(p);
  if (!tab.phase1()) return {LpStatus::kInfeasible, Q(0), {}};
  if (!tab.phase2(c)) return {LpStatus::kUnbounded, Q(0), {}};
  return {LpStatus::kOptimal, tab.objective(), tab.solution()};
}

bool feasible(const Polyhedron& p, std::vector<Q>* point) {
  LpResult r = lp_max(std::vector<Q>(p.nvars, Q(0)), p);
  if (r.status != LpStatus::kOptimal) return false;
  if (point) *point = r.x;
  return true;
}

bool implies_ineq(const Polyhedron& p, const std::vector<Q>& a, const Q& rhs) {
  LpResult r = lp_max(a, p);
  if (r.status == LpStatus::kInfeasible) return true;
  if (r.status == LpStatus::kUnbounded) return false;
  return r.value <= rhs;
}

bool implies_eq(const Polyhedron& p, const std::vector<Q>& a, const Q& rhs) {
  std::vector<Q> neg(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
  return implies_ineq(p, a, rhs) && implies_ineq(p, neg, -rhs);
}

namespace {

std::vector<Q> mat_row(const Mat& m, int r) {
  std::vector<Q> out(m.cols);
  for (int c = 0; c < m.cols; ++c) out[c] = m.at(r, c);
  return out;
}

}  // namespace

bool poly_subset(const Polyhedron& p, const Polyhedron& q) {
  if (p.nvars != q.nvars) throw std::invalid_argument("variable count mismatch");
  for (int i = 0; i < q.A.rows; ++i)
    if (!implies_ineq(p, mat_row(q.A, i), q.b[i])) return false;
  for (int i = 0; i < q.C.rows; ++i)
    if (!implies_eq(p, mat_row(q.C, i), q.d[i])) return false;
  return true;
}

bool poly_equal(const Polyhedron& p, const Polyhedron& q) {
  return poly_subset(p, q) && poly_subset(q, p);
}

std::vector<int> implicit_equalities(const Polyhedron& p) {
  std::vector<int> out;
  for (int i = 0; i < p.A.rows; ++i) {
    std::vector<Q> neg = mat_row(p.A, i);
    for (Q& x : neg) x = -x;
    LpResult r = lp_max(neg, p);
    if (r.status == LpStatus::kInfeasible) {
      out.push_back(i);  // empty set: every row is vacuously an equality
      continue;
    }
    if (r.status == LpStatus::kOptimal && r.value == -p.b[i]) out.push_back(i);
  }
  return out;
}

int affine_dim(const Polyhedron& p) {
  if (!feasible(p)) return -1;
  std::vector<int> impl = implicit_equalities(p);
  Mat stack(p.C.rows + static_cast<int>(impl.size()), p.nvars);
  for (int r = 0; r < p.C.rows; ++r)
    for (int c = 0; c < p.nvars; ++c) stack.at(r, c) = p.C.at(r, c);
  for (int k = 0; k < static_cast<int>(impl.size()); ++k)
    for (int c = 0; c < p.nvars; ++c) stack.at(p.C.rows + k, c) = p.A.at(impl[k], c);
  return p.nvars - rank_of(stack);
}

std::optional<std::vector<Q>> relative_interior_point(const Polyhedron& p) {
  if (!feasible(p)) return std::nullopt;
  std::vector<int> impl = implicit_equalities(p);
  std::vector<char> is_impl(p.A.rows, 0);
  for (int i : impl) is_impl[i] = 1;
  Polyhedron q(p.nvars + 1);  // (x, t)
  for (int i = 0; i < p.A.rows; ++i) {
    std::vector<Q> row = mat_row(p.A, i);
    row.push_back(is_impl[i] ? Q(0) : Q(1));
    if (is_impl[i])
      q.add_eq(row, p.b[i]);
    else
      q.add_ineq(row, p.b[i]);
  }
  for (int i = 0; i < p.C.rows; ++i) {
    std::vector<Q> row = mat_row(p.C, i);
    row.push_back(Q(0));
    q.add_eq(row, p.d[i]);
  }
  std::vector<Q> cap(p.nvars + 1, Q(0));
  cap[p.nvars] = 1;
  q.add_ineq(cap, Q(1));  // t <= 1 keeps the program bounded
  LpResult r = lp_max(cap, q);
  if (r.status != LpStatus::kOptimal || r.value <= 0)
    throw std::logic_error("relative interior evaded the slack program");
  r.x.pop_back();
  return r.x;
}

Polyhedron face_at(const Polyhedron& p, const std::vector<Q>& x) {
  Polyhedron f(p.nvars);
  f.C = p.C;
  f.d = p.d;
  for (int i = 0; i < p.A.rows; ++i) {
    Q acc = 0;
    for (int c = 0; c < p.nvars; ++c) acc += p.A.at(i, c) * x[c];
    if (acc == p.b[i])
      f.add_eq(mat_row(p.A, i), p.b[i]);
    else
      f.add_ineq(mat_row(p.A, i), p.b[i]);
  }
  return f;
}

std::vector<std::vector<Q>> enumerate_vertices(const Polyhedron& p) {
  std::vector<std::vector<Q>> out;
  const int need = p.nvars - rank_of(p.C);
  std::vector<int> pick;
  auto try_pick = [&]() {
    Mat stack(p.C.rows + need, p.nvars);
    std::vector<Q> rhs;
    for (int r = 0; r < p.C.rows; ++r)
      for (int c = 0; c < p.nvars; ++c) stack.at(r, c) = p.C.at(r, c);
    rhs.assign(p.d.begin(), p.d.end());
    for (int k = 0; k < need; ++k) {
      for (int c = 0; c < p.nvars; ++c) stack.at(p.C.rows + k, c) = p.A.at(pick[k], c);
      rhs.push_back(p.b[pick[k]]);
    }
    if (rank_of(stack) != p.nvars) return;
    auto sol = solve_linear(stack, rhs);
    if (!sol) return;
    for (int i = 0; i < p.A.rows; ++i) {
      Q acc = 0;
      for (int c = 0; c < p.nvars; ++c) acc += p.A.at(i, c) * (*sol)[c];
      if (acc > p.b[i]) return;
    }
    out.push_back(*sol);
  };
  // All subsets of inequality rows of the exact complementary size.
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(pick.size()) == need) {
      try_pick();
      return;
    }
    for (int i = from; i < p.A.rows; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  if (need == 0) {
    try_pick();
  } else {
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

int affine_rank_of_points(const std::vector<std::vector<Q>>& pts) {
  if (pts.empty()) return -1;
  Mat m(static_cast<int>(pts.size()) - 1, static_cast<int>(pts[0].size()));
  for (int r = 1; r < static_cast<int>(pts.size()); ++r)
    for (int c = 0; c < m.cols; ++c) m.at(r - 1, c) = pts[r][c] - pts[0][c];
  return rank_of(m);
}

// Star triangulation on vertex index sets; facets are cut out by the
// original inequality rows.
void triangulate(const Polyhedron& p, const std::vector<std::vector<Q>>& verts,
                 const std::vector<int>& face, int k,
                 std::vector<std::vector<int>>& simplices, std::vector<int>& chain) {
  if (k == 0) {
    chain.push_back(face[0]);
    simplices.push_back(chain);
    chain.pop_back();
    return;
  }
  int v0 = face[0];  // verts sorted lexicographically, so index 0 is lex-min
  std::set<std::vector<int>> seen;
  for (int i = 0; i < p.A.rows; ++i) {
    std::vector<int> sub;
    bool has_v0 = false;
    for (int vi : face) {
      Q acc = 0;
      for (int c = 0; c < p.nvars; ++c) acc += p.A.at(i, c) * verts[vi][c];
      if (acc == p.b[i]) {
        sub.push_back(vi);
        if (vi == v0) has_v0 = true;
      }
    }
    if (has_v0 || sub.empty() || !seen.insert(sub).second) continue;
    std::vector<std::vector<Q>> pts;
    for (int vi : sub) pts.push_back(verts[vi]);
    if (affine_rank_of_points(pts) != k - 1) continue;
    chain.push_back(v0);
    triangulate(p, verts, sub, k - 1, simplices, chain);
    chain.pop_back();
  }
}

}  // namespace

Q volume(const Polyhedron& p) {
  if (affine_dim(p) < p.nvars) return 0;
  std::vector<std::vector<Q>> verts = enumerate_vertices(p);
  std::vector<int> all(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) all[i] = static_cast<int>(i);
  std::vector<std::vector<int>> simplices;
  std::vector<int> chain;
  triangulate(p, verts, all, p.nvars, simplices, chain);
  Q total = 0;
  for (const auto& s : simplices) {
    Mat m(p.nvars, p.nvars);
    for (int r = 0; r < p.nvars; ++r)
      for (int c = 0; c < p.nvars; ++c) m.at(r, c) = verts[s[r + 1]][c] - verts[s[0]][c];
    Q dv = det(m);
    total += dv < 0 ? Q(-dv) : dv;
  }
  Z fact = 1;
  for (int i = 2; i <= p.nvars; ++i) fact *= i;
  return total / Q(fact);
}

}  // namespace lcs
