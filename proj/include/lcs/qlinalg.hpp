#pragma once
// Exact subspace calculus inside a direct sum of rational coordinate blocks:
// the projection-dimension function nu*, complete flags and flag cuts, and
// glue-hyperplane cuts. General position is never assumed; every random draw
// is certified against the UpMin identity it is supposed to realize and
// redrawn on failure (five attempts, then a hard error).

#include <map>
#include <stdexcept>
#include <vector>

#include "lcs/matrix.hpp"
#include "lcs/rng.hpp"
#include "lcs/setfn.hpp"

namespace lcs {

// Ambient space ⊕_v U_v with one contiguous coordinate block per part.
struct DecomposedSpace {
  GroundSet ground;
  std::vector<int> dims;

  int total() const;
  int offset(int v) const;
  // Ambient column indices of ⊕_{v∈I} U_v, ascending.
  std::vector<int> block_cols(Subset I) const;

  bool operator==(const DecomposedSpace&) const = default;
};

DecomposedSpace make_space(const GroundSet& ground, const std::vector<int>& dims);

// Rows of basis span the subspace and are kept in RREF with full row rank, so
// equality of subspaces is equality of the structs.
struct RationalSubspace {
  DecomposedSpace ambient;
  Mat basis;

  int dim() const { return basis.rows; }
  bool operator==(const RationalSubspace&) const = default;
};

RationalSubspace make_subspace(const DecomposedSpace& u, const Mat& rows);
RationalSubspace full_subspace(const DecomposedSpace& u);
RationalSubspace zero_subspace(const DecomposedSpace& u);

// nu*(I) = dim of the image of W in ⊕_{v∈I} U_v. Submodular, nondecreasing,
// nonnegative, of range dim W.
SetFn nu_star(const RationalSubspace& w);

// Complete flag U_I = F^0 ⊃ F^1 ⊃ ... ⊃ F^D = 0 in the block ⊕_{v∈I} U_v:
// F^i is spanned by the last D−i rows of the invertible basis. make_flag
// normalizes bottom-up (each row reduced against the rows below it and
// scaled), so equal flags store equal matrices.
struct Flag {
  Subset part = 0;
  Mat basis;

  Mat step(int i) const;  // F^i as an RREF row basis
};

Flag make_flag(const DecomposedSpace& u, Subset part, Mat basis);
Flag random_flag(Rng& rng, const DecomposedSpace& u, Subset part);

// One term of a cutting plan: intersect with proj_I^{-1}(F^e) where I is the
// flag's part. A plan encodes the multiset J that counts each part with
// multiplicity equal to the summed exponents.
struct FlagCut {
  Flag flag;
  int exponent = 0;
};

// Thrown when nu*_W + xi_J fails nonnegativity: the cut of W by flags in
// general position then has a vanishing block projection. Carries the exact
// intersection so callers can inspect which projections died.
struct ZeroProjectionError : std::runtime_error {
  Subset witness;        // subset where nu* + xi dips below zero
  RationalSubspace cut;  // the intersection, computed anyway

  ZeroProjectionError(Subset w, RationalSubspace c);
};

// Exact intersection W ∩ ⋂ proj_I^{-1}(F^{e_{I,r}}); no genericity is
// presumed, the flags are taken as given. For flags in general position the
// result has nu* = UpMin(nu*_W + xi_J) and codimension |J| in W.
RationalSubspace cut_by_flags(const RationalSubspace& w,
                              const std::vector<FlagCut>& plan);

// Draws one random flag per distinct subset in jays, carrying the full
// multiplicity as its exponent, and certifies the UpMin identity.
RationalSubspace cut_by_random_flags(const RationalSubspace& w,
                                     const std::vector<Subset>& jays, Rng& rng);

// Glue datum: a block subset J and, per part v of J, an optional wall — the
// kernel H_v of a nonzero functional on U_v. An absent or zero wall means
// H_v = U_v. The cut hyperplane of U_J is drawn through ⊕_v H_v.
struct Glue {
  Subset parts = 0;
  std::map<int, std::vector<Q>> walls;
};

// Cuts W by one general hyperplane of U_{J_i} through ⊕_v H_{i,v} per glue.
// First certifies the cutting hypothesis — every admissible sub-selection of
// walls realizes its own UpMin transform — then draws random functionals and
// certifies nu* of the result against UpMin(nu*_W + xi_J). A glue whose walls
// fill the whole block admits no hyperplane and is rejected.
RationalSubspace cut_by_glue_hyperplanes(const RationalSubspace& w,
                                         const std::vector<Glue>& glues,
                                         Rng& rng);

}  // namespace lcs
