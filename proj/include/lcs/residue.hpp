#pragma once
// Residue spaces of level graphs: the kernel of the vanishing / local /
// Rosenlicht / global residue conditions inside Q^{arrows}, the associated
// projection-dimension function gamma, and the submodular functions eta_hat
// and eta built from gamma, the vertex genus, and zeta.

#include "lcs/graph.hpp"
#include "lcs/matrix.hpp"
#include "lcs/setfn.hpp"

namespace lcs {

struct ResidueSpace {
  OrderedPartition pi;
  Mat basis;  // RREF rows spanning the space, one column per arrow
  int rows_r1 = 0, rows_r2 = 0, rows_r3 = 0, rows_r4 = 0;

  int dim() const { return basis.rows; }
};

// Exact kernel of the stacked system. The global rows run over each level n
// and each connected component of the subgraph induced on the vertices
// strictly below n (horizontal edges included); only nonempty rows count.
ResidueSpace residue_space(const Multigraph& g, const OrderedPartition& pi);

// gamma(I) = rank of the basis columns at arrows with tail in I. The subset
// loop is OpenMP-parallel; the serial twin is the testing reference.
SetFn gamma(const Multigraph& g, const ResidueSpace& rs);
SetFn gamma_serial(const Multigraph& g, const ResidueSpace& rs);
SetFn gamma(const Multigraph& g, const OrderedPartition& pi);

// Modular set function of the vertex genus.
SetFn genus_modular(const Multigraph& g);

// eta_hat = gamma + genus + zeta + #(integer upward arrows inside I);
// submodular of range total_genus + |A^int|. Throws unless (s, pi) is a
// slope-level pair.
SetFn eta_hat(const Multigraph& g, const SlopeFn& s, const OrderedPartition& pi);

// eta = gamma + genus + zeta; submodular of range total_genus.
SetFn eta(const Multigraph& g, const SlopeFn& s, const OrderedPartition& pi);

// Simpleness of eta via the bipartition criterion: gamma(I) + gamma(I^c)
// exceeds |E|-|V|+1, or an integer vertical edge crosses.
bool eta_simple_by_gamma(const Multigraph& g, const SlopeFn& s, const OrderedPartition& pi);

}  // namespace lcs
