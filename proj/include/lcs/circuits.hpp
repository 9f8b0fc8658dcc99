#pragma once

// Elementary circuits of a multigraph: closed arrow walks with pairwise
// distinct tails, both orientations listed separately.  A loop arrow is a
// one-arrow circuit; two parallel edges bound a two-arrow circuit, but the
// back-and-forth walk on a single edge does not count.

#include <stdexcept>
#include <vector>

#include "lcs/graph.hpp"

namespace lcs {

using Circuit = std::vector<Arrow>;  // admissible order: head(a_i) = tail(a_{i+1})

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::size_t kDefaultCircuitCap = 1000000;

// Deterministic order: by smallest vertex on the circuit, then by the DFS
// order of arrow ids.  Throws CapExceeded past the cap.
std::vector<Circuit> elementary_circuits(const Multigraph& g,
                                         std::size_t cap = kDefaultCircuitCap);

}  // namespace lcs
