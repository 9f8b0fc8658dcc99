#pragma once
// Exact rational linear programming (two-phase full-tableau simplex with
// Bland's rule) and the polyhedron predicates built on it: feasibility,
// implied rows, affine dimension, relative interior points, vertex
// enumeration, and exact volumes via star triangulation.

#include <optional>
#include <vector>

#include "lcs/matrix.hpp"
#include "lcs/rat.hpp"

namespace lcs {

enum class LpStatus { kInfeasible, kUnbounded, kOptimal };

struct LpResult {
  LpStatus status;
  Q value;            // meaningful for kOptimal
  std::vector<Q> x;  // primal solution for kOptimal
};

struct Polyhedron {
  int nvars = 0;
  Mat A;              // A x <= b
  std::vector<Q> b;
  Mat C;              // C x == d
  std::vector<Q> d;

  explicit Polyhedron(int n = 0) : nvars(n), A(0, n), C(0, n) {}

  void add_ineq(const std::vector<Q>& row, const Q& rhs);
  void add_eq(const std::vector<Q>& row, const Q& rhs);
};

// max c.x over the polyhedron; variables are free.
LpResult lp_max(const std::vector<Q>& c, const Polyhedron& p);

bool feasible(const Polyhedron& p, std::vector<Q>* point = nullptr);

// P subseteq {a.x <= rhs} / {a.x == rhs}; empty P implies everything.
bool implies_ineq(const Polyhedron& p, const std::vector<Q>& a, const Q& rhs);
bool implies_eq(const Polyhedron& p, const std::vector<Q>& a, const Q& rhs);

bool poly_subset(const Polyhedron& p, const Polyhedron& q);
bool poly_equal(const Polyhedron& p, const Polyhedron& q);

// Indexes of inequality rows that hold with equality on all of P.
std::vector<int> implicit_equalities(const Polyhedron& p);

// -1 for the empty set, else dim of the affine hull.
int affine_dim(const Polyhedron& p);

// A point strict on every non-implicit inequality row; nullopt when empty.
std::optional<std::vector<Q>> relative_interior_point(const Polyhedron& p);

// The face of p containing x in its relative interior: rows tight at x
// turned into equalities. x must lie in p.
Polyhedron face_at(const Polyhedron& p, const std::vector<Q>& x);

// All vertices, sorted lexicographically. Requires a pointed polyhedron;
// callers use it on polytopes only.
std::vector<std::vector<Q>> enumerate_vertices(const Polyhedron& p);

// Volume of the full-dimensional part: 0 whenever affine_dim < nvars.
// Requires boundedness.
Q volume(const Polyhedron& p);

}  // namespace lcs
