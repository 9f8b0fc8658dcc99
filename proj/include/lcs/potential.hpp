#pragma once

// Potential theory on metric graphs: admissible extensions of vertex
// functions and their divisors, the subintegrability solver on arrow
// weights, and level-function recovery from edge lengths through the
// ghost-graph construction.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcs/circuits.hpp"
#include "lcs/graph.hpp"
#include "lcs/rat.hpp"

namespace lcs {

// A unit of the divisor sitting in the open interior of an edge, at
// distance `dist` from the tail of `arrow`.
struct InteriorPoint {
  Arrow arrow;
  Q dist;
};

struct AdmissibleDivisor {
  std::vector<long> vertex;             // per vertex
  std::vector<InteriorPoint> interior;  // at most one per edge, value 1

  long degree() const {
    long d = static_cast<long>(interior.size());
    for (long v : vertex) d += v;
    return d;
  }
};

struct AdmissibleExtension {
  SlopeFn slopes;
  AdmissibleDivisor divisor;
};

// Slopes and divisor of the unique admissible extension of h. The vertex
// value at v is the sum of outgoing slopes; an edge carries an interior
// point exactly when its length does not divide the height difference.
AdmissibleExtension admissible_extension(const Multigraph& g, const std::vector<Q>& ell,
                                         const std::vector<Q>& h);

// Arrow weights with -infinity entries allowed (absorbing).
struct ArrowWeights {
  std::vector<Q> value;
  std::vector<char> neg_inf;

  explicit ArrowWeights(int narrows) : value(narrows, Q(0)), neg_inf(narrows, 0) {}
  void set(Arrow a, const Q& q) {
    value[a] = q;
    neg_inf[a] = 0;
  }
  void set_inf(Arrow a) {
    value[a] = 0;
    neg_inf[a] = 1;
  }
  bool finite(Arrow a) const { return !neg_inf[a]; }
};

// Precondition failure of the subintegrability solver: either an arrow
// pair with positive sum (circuit empty) or a circuit with positive sum.
struct GuardViolation : std::runtime_error {
  Arrow arrow = -1;
  Circuit circuit;

  GuardViolation(const std::string& what, Arrow a) : std::runtime_error(what), arrow(a) {}
  GuardViolation(const std::string& what, Circuit z)
      : std::runtime_error(what), circuit(std::move(z)) {}
};

// Returns h with x(a) <= h(tail) - h(head) for every arrow, tight exactly
// when x(a) + x(rev a) = 0 or a lies on a circuit of total weight zero;
// normalized so min h = 0.
std::vector<Q> subintegrability(const Multigraph& g, const ArrowWeights& x);

// Quotient of (G, pi) by its parts with horizontal edges dropped, plus one
// ghost edge for every pair of levels.  Vertex i of the quotient is level i
// (bottom to top); real edges keep their original ids.
struct GhostModel {
  Multigraph graph;
  std::vector<int> edge_of;  // quotient edge -> original edge, -1 on ghosts
  int nlevels = 0;

  bool is_ghost(int edge) const { return edge_of[edge] < 0; }
};

GhostModel ghost_graph(const Multigraph& g, const OrderedPartition& pi);

// Weights l_a s(a) on the quotient: 0 on upward ghost arrows, -infinity on
// downward ones.
ArrowWeights ghost_weights(const GhostModel& gm, const Multigraph& g, const SlopeFn& s,
                           const std::vector<Q>& ell);

// Edge lengths transported to the quotient, 1 on ghost edges.
std::vector<Q> ghost_lengths(const GhostModel& gm, const std::vector<Q>& ell);

// Lengths incompatible with the pair: a ghost-graph circuit whose weight
// sum has the wrong sign or the wrong tightness.
struct CompatibilityError : std::runtime_error {
  Circuit circuit;  // arrows of the ghost graph

  CompatibilityError(const std::string& what, Circuit z)
      : std::runtime_error(what), circuit(std::move(z)) {}
};

// Level function h with slope_from(ell, h) = s and level_from(h) = pi,
// for ell interior to the cone of the pair; min h = 0.
std::vector<Q> recover_level_function(const Multigraph& g, const std::vector<Q>& ell,
                                      const SlopeFn& s, const OrderedPartition& pi);

}  // namespace lcs
