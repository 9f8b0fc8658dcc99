#pragma once
// Slope-level cones of edge lengths: essential circuits of the ghost graph,
// exact H-representations, interior tests, the squashing process, facets,
// and the genus-based dimension count.
//
// Circuits here live on the ghost graph of the pair's partition; rebuild it
// with ghost_graph(g, pi) to interpret arrow ids (the construction is
// deterministic, so ids are stable).

#include <stdexcept>
#include <vector>

#include "lcs/circuits.hpp"
#include "lcs/graph.hpp"
#include "lcs/potential.hpp"
#include "lcs/simplex.hpp"

namespace lcs {

struct SlopeLevelPair {
  SlopeFn s;
  OrderedPartition pi;
};

// Genus (cycle rank) of the spanning subgraph of the level quotient that
// keeps the integer vertical edges; ghosts never belong to it.
long gint_genus(const Multigraph& g, const SlopeFn& s, const OrderedPartition& pi);

// A circuit survives when its ghost arrows are all upward and pairwise
// non-overlapping and it avoids zero-slope vertical arrows.
bool is_essential(const GhostModel& gm, const Multigraph& g, const SlopeFn& s,
                  const Circuit& z);

std::vector<Circuit> essential_circuits(const Multigraph& g, const SlopeFn& s,
                                        const OrderedPartition& pi,
                                        std::size_t cap = kDefaultCircuitCap);

struct ConeRow {
  std::vector<Q> coeffs;  // per edge of g; the row reads sum coeffs*ell <= 0
  Circuit circuit;        // source circuit in the ghost graph
  bool integer = false;   // circuit lies in the integer subgraph
};

// The inequality of one circuit: upward ghosts contribute nothing, real
// arrows their slope. Rejects circuits with downward ghosts.
ConeRow circuit_row(const GhostModel& gm, const Multigraph& g, const SlopeFn& s,
                    const Circuit& z);

struct ConeH {
  int nedges = 0;
  SlopeLevelPair pair;
  std::vector<ConeRow> ineqs;  // strict on the interior
  std::vector<ConeRow> eqs;    // one per reverse-pair of integer circuits
};

ConeH cone_hrep(const Multigraph& g, const SlopeFn& s, const OrderedPartition& pi,
                std::size_t cap = kDefaultCircuitCap);

// The cone as a polyhedron in R^E, orthant rows included.
Polyhedron cone_polyhedron(const ConeH& cone);

// ell > 0 lies in the open cone: strict on every inequality row, exact on
// every equality row.
bool interior_membership(const ConeH& cone, const std::vector<Q>& ell);

// Strict feasibility: maximize t subject to the rows tightened by t and
// ell_e >= t, t <= 1; the interior is nonempty iff the optimum is positive.
// On success a witness with margin t lands in *point when given.
bool cone_interior_nonempty(const ConeH& cone, std::vector<Q>* point = nullptr);
bool interior_nonempty(const Multigraph& g, const SlopeFn& s, const OrderedPartition& pi,
                       std::vector<Q>* point = nullptr,
                       std::size_t cap = kDefaultCircuitCap);

struct NotActiveError : std::runtime_error {
  Circuit circuit;
  Q bound;  // optimum of the positivity slack over the cut; <= 0 proves inactivity
  NotActiveError(const std::string& what, Circuit z, Q b)
      : std::runtime_error(what), circuit(std::move(z)), bound(std::move(b)) {}
};

// z is active when it leaves the integer subgraph and the cone meets its
// hyperplane in a strictly positive point; the LP optimum lands in *bound.
bool is_active(const Multigraph& g, const SlopeFn& s, const OrderedPartition& pi,
               const Circuit& z, Q* bound = nullptr,
               std::size_t cap = kDefaultCircuitCap);

// Squash (s,pi) relative to the essential active circuit z: slopes bump by
// one across z and under its ghosts, and the levels each ghost spans merge.
// Throws std::invalid_argument when z is not essential, NotActiveError (with
// the LP certificate) when it is not active.
SlopeLevelPair squash(const Multigraph& g, const SlopeFn& s, const OrderedPartition& pi,
                      const Circuit& z, std::size_t cap = kDefaultCircuitCap);

struct Facet {
  SlopeLevelPair pair;
  Circuit circuit;                    // smallest circuit cutting this facet
  std::vector<Circuit> alternatives;  // other circuits cutting the same one
};

// Facets of the cone meeting the open orthant, each realized by a single
// squash whose integer subgraph gains exactly one independent cycle.
// Requires a nonempty interior.
std::vector<Facet> facets(const Multigraph& g, const SlopeFn& s, const OrderedPartition& pi,
                          std::size_t cap = kDefaultCircuitCap);

// |E| - gint_genus when the interior is nonempty, else the affine dimension
// of the cone.
long dimension(const Multigraph& g, const SlopeFn& s, const OrderedPartition& pi,
               std::size_t cap = kDefaultCircuitCap);

}  // namespace lcs
