#pragma once
// Bricks of the width-g simplex, permissible slope-level pairs, the fans the
// pairs of one brick cut on edge lengths, and the canonical fan obtained as
// their common refinement.
//
// A brick is the closure of one alcove of the arrangement {q(S) integral}
// inside the simplex {q >= 0, sum q = g}; it is recorded by the floor of
// q(S) on every subset together with a witness point. Fans are certified
// during construction: pairwise cone intersections are checked to be faces
// of both sides, and each chamber of the canonical fan must pick exactly one
// permissible pair per brick.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lcs/cones.hpp"
#include "lcs/graph.hpp"
#include "lcs/setfn.hpp"
#include "lcs/simplex.hpp"

namespace lcs {

Q subset_sum(const std::vector<Q>& q, Subset s);

struct Brick {
  GroundSet ground;
  long g = 0;
  std::vector<long> floors;  // per subset mask; 0 at the empty set, g at V
  std::vector<Q> witness;    // interior point when full_dim, else the defining point
  bool full_dim = false;

  long floor_of(Subset s) const { return floors[s]; }
  // ceil of the witness sum: floor + 1 on proper nonempty subsets of a
  // full-dimensional brick, floor on degenerate walls.
  long ceil_of(Subset s) const;
  // Floors on proper nonempty subsets in mask order, comma-joined.
  std::string key() const;
  // floor(S) <= q(S) <= ceil(S) for every S, sum q = g; degenerate walls
  // become equality rows.
  Polyhedron polytope() const;
};

// The brick containing beta. Throws when beta leaves the simplex. The result
// is flagged full-dimensional exactly when no proper nonempty subset-sum of
// beta is integral; otherwise the floors describe the cell cut by the walls
// through beta.
Brick brick_of(const GroundSet& ground, long g, const std::vector<Q>& beta);

// All full-dimensional bricks, deduplicated by floor table and sorted by it.
// BFS from the corner bricks, crossing one wall family {S, V \ S} at a time;
// every candidate table is accepted only with a positive interior margin
// certified by LP, and the optimizer doubles as the witness.
std::vector<Brick> enumerate_bricks(const GroundSet& ground, long g,
                                    std::size_t cap = 100000);

// ceil(beta(S)) <= chi(S) on every subset. chi must live on the brick's
// ground set with range g, else std::invalid_argument.
bool contains_brick(const SetFn& chi, const Brick& b);

// Exact (n-1)-volume of the projection dropping the last coordinate; the
// bricks of one simplex tile it, so these sum to g^(n-1)/(n-1)!.
Q brick_volume(const Brick& b);

struct PermissiblePair {
  SlopeLevelPair pair;
  SetFn eta;                        // positive and simple
  SetFn chi;                        // UpMin(eta); its polytope is P
  ConeH cone;                       // interior certified nonempty
  std::vector<std::string> bricks;  // keys of the bricks inside P
};

// 2 * (total genus + largest valence), loops counted twice.
long default_slope_bound(const Multigraph& g);

// All pairs (s, pi) whose eta is positive and simple, slopes bounded by
// `bound`; 0 picks the default bound and re-enumerates with bound + 1,
// doubling until the list stabilizes. Partitions run through level maps with
// 1, 2, ... levels, so the trivial pair (when permissible) comes first.
// Throws std::invalid_argument on total genus zero, std::runtime_error when
// the bound never stabilizes.
std::vector<PermissiblePair> enumerate_psl(const Multigraph& g, long bound = 0);

// Refill the brick-key lists of the pairs from the given bricks.
void assign_bricks(std::vector<PermissiblePair>& psl,
                   const std::vector<Brick>& bricks);

struct FanCone {
  Polyhedron poly;
  long dim = 0;
  std::vector<std::size_t> pairs;  // indices into the pair list
  // Per brick key: the unique pair of that brick whose cone contains this
  // chamber (canonical fan only).
  std::map<std::string, std::size_t> brick_pair;
};

struct Fan {
  int nedges = 0;
  std::vector<FanCone> cones;
  std::vector<std::vector<long>> incidence;  // affine dims of pairwise meets
  std::vector<std::size_t> maximal;
};

// The cones of the pairs whose polytope contains b, in pair order. Fails
// with std::logic_error when two cones meet outside a common face.
Fan fan_for_brick(const Multigraph& g, const std::vector<PermissiblePair>& psl,
                  const Brick& b);

// Common refinement of the brick fans: the full-dimensional chambers, each
// listing the pairs whose open cone contains it and, per brick, the unique
// pair of that brick at the chamber (std::logic_error when not unique).
Fan canonical_fan(const Multigraph& g, const std::vector<PermissiblePair>& psl,
                  const std::vector<Brick>& bricks);

// Indices of the pairs whose open cone contains ell (ell > 0 required).
std::vector<std::size_t> pairs_at(const std::vector<PermissiblePair>& psl,
                                  const std::vector<Q>& ell);

}  // namespace lcs
