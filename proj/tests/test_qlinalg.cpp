#include "lcs/qlinalg.hpp"

#include <map>
#include <vector>

#include "gen_util.hpp"
#include "lcs/rng.hpp"
#include "test_util.hpp"

using namespace lcs;

namespace {

DecomposedSpace space(const std::vector<int>& dims) {
  return make_space(make_ground(static_cast<int>(dims.size())), dims);
}

RationalSubspace span_of(const DecomposedSpace& u, const std::vector<std::vector<Q>>& rows) {
  Mat m(static_cast<int>(rows.size()), u.total());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
  return make_subspace(u, m);
}

RationalSubspace random_subspace(Rng& rng, const DecomposedSpace& u, int k) {
  Mat m(k, u.total());
  for (Q& x : m.a) x = rng.next_rat();
  return make_subspace(u, m);
}

// Row reduction written out independently of the library's elimination.
int plain_rank(std::vector<std::vector<Q>> rows) {
  if (rows.empty()) return 0;
  const std::size_t nc = rows[0].size();
  int rank = 0;
  for (std::size_t col = 0; col < nc && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[static_cast<std::size_t>(r)][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(piv)]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[static_cast<std::size_t>(r)][col] == 0) continue;
      Q f = rows[static_cast<std::size_t>(r)][col] / rows[static_cast<std::size_t>(rank)][col];
      for (std::size_t c = col; c < nc; ++c)
        rows[static_cast<std::size_t>(r)][c] -= f * rows[static_cast<std::size_t>(rank)][c];
    }
    ++rank;
  }
  return rank;
}

void check_nu_shape(const SetFn& f, int dim_w) {
  REQUIRE(f.is_submodular(), "nu* is submodular");
  REQUIRE(f.is_nondecreasing(), "nu* is nondecreasing");
  REQUIRE_EQ(f(0), Q(0), "nu* vanishes on the empty set");
  REQUIRE_EQ(f(f.full()), Q(dim_w), "nu* tops out at dim W");
}

bool in_span(const RationalSubspace& w, const std::vector<Q>& vec) {
  Mat one(1, w.ambient.total());
  for (std::size_t c = 0; c < vec.size(); ++c) one.at(0, static_cast<int>(c)) = vec[c];
  return rank_of(vstack(w.basis, one)) == w.dim();
}

void test_spaces() {
  DecomposedSpace u = space({2, 1, 3});
  REQUIRE_EQ(u.total(), 6, "total dimension");
  REQUIRE_EQ(u.offset(2), 3, "block offsets are prefix sums");
  std::vector<int> cols = u.block_cols(0b101);
  REQUIRE(cols == std::vector<int>({0, 1, 3, 4, 5}), "block columns of a two-part subset");

  REQUIRE_EQ(full_subspace(u).dim(), 6, "full subspace dimension");
  REQUIRE_EQ(zero_subspace(u).dim(), 0, "zero subspace dimension");

  RationalSubspace a = span_of(u, {{2, 0, 0, 0, 0, 0}, {2, 2, 0, 0, 0, 0}});
  RationalSubspace b = span_of(u, {{1, 1, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}});
  REQUIRE(a == b, "the RREF basis is a canonical form");

  REQUIRE_THROWS(make_space(make_ground(2), {1}), "dimension count must match the parts");
  REQUIRE_THROWS(make_space(make_ground(1), {-1}), "negative block dimension");
  test_done("decomposed spaces and subspaces");
}

void test_nu_star_examples() {
  DecomposedSpace u2 = space({1, 1});
  SetFn diag = nu_star(span_of(u2, {{1, 1}}));
  REQUIRE_EQ(diag(0b01), Q(1), "diagonal line projects onto the first block");
  REQUIRE_EQ(diag(0b10), Q(1), "diagonal line projects onto the second block");
  REQUIRE_EQ(diag(0b11), Q(1), "diagonal line is one-dimensional");
  check_nu_shape(diag, 1);

  DecomposedSpace u = space({2, 3});
  SetFn whole = nu_star(full_subspace(u));
  for (Subset i = 0; i <= whole.full(); ++i) {
    Q expect = (i & 1 ? 2 : 0) + (i & 2 ? 3 : 0);
    REQUIRE_EQ(whole(i), expect, "whole space has nu*(I) = sum of block dims");
  }
  check_nu_shape(nu_star(zero_subspace(u)), 0);

  DecomposedSpace u22 = space({2, 2});
  SetFn mixed = nu_star(span_of(u22, {{1, 0, 2, 0}, {0, 1, 0, 0}}));
  REQUIRE_EQ(mixed(0b01), Q(2), "full projection to the first block");
  REQUIRE_EQ(mixed(0b10), Q(1), "rank-one projection to the second block");
  REQUIRE_EQ(mixed(0b11), Q(2), "dimension of the span");
  test_done("nu* on the reference spaces");
}

void test_nu_star_random_oracle() {
  Rng rng(9125);
  for (int it = 0; it < 100; ++it) {
    int n = static_cast<int>(rng.next_long(1, 4));
    std::vector<int> dims;
    int total = 0;
    for (int i = 0; i < n; ++i) {
      int d = static_cast<int>(rng.next_long(0, std::min<long>(3, 10 - total)));
      dims.push_back(d);
      total += d;
    }
    DecomposedSpace u = space(dims);
    RationalSubspace w = random_subspace(rng, u, static_cast<int>(rng.next_long(0, total)));
    SetFn f = nu_star(w);
    check_nu_shape(f, w.dim());
    for (Subset i = 1; i <= f.full(); ++i) {
      std::vector<int> cols = u.block_cols(i);
      std::vector<std::vector<Q>> sel;
      for (int r = 0; r < w.basis.rows; ++r) {
        std::vector<Q> row;
        for (int c : cols) row.push_back(w.basis.at(r, c));
        sel.push_back(row);
      }
      REQUIRE_EQ(f(i), Q(plain_rank(sel)), "nu* matches the plain rank of the projected basis");
    }
  }
  test_done("nu* against an independent rank oracle");
}

void test_flags() {
  Rng rng(311);
  DecomposedSpace u = space({2, 2});
  Flag fl = random_flag(rng, u, 0b11);
  REQUIRE_EQ(fl.basis.rows, 4, "flag basis spans the whole block");

  Mat top = fl.step(0);
  REQUIRE_EQ(top.rows, 4, "step zero is the whole block");
  REQUIRE(top == full_subspace(u).basis, "step zero reduces to the identity");
  REQUIRE_EQ(fl.step(4).rows, 0, "the last step is zero");
  for (int i = 0; i < 4; ++i) {
    Mat big = fl.step(i), small = fl.step(i + 1);
    REQUIRE_EQ(big.rows, 4 - i, "complete flag drops one dimension per step");
    REQUIRE_EQ(rank_of(vstack(big, small)), 4 - i, "steps are nested");
  }

  // The normal form does not depend on the representing basis.
  Mat other = fl.basis;
  for (int c = 0; c < 4; ++c) {
    other.at(0, c) = other.at(0, c) * 7 + other.at(3, c) * 2;
    other.at(2, c) = other.at(2, c) - other.at(3, c);
  }
  REQUIRE(make_flag(u, 0b11, other).basis == fl.basis, "suffix-preserving changes normalize away");
  REQUIRE(make_flag(u, 0b11, fl.basis).basis == fl.basis, "normalization is idempotent");

  Mat sing(4, 4);
  sing.at(0, 0) = 1;
  REQUIRE_THROWS(make_flag(u, 0b11, sing), "singular bases are rejected");
  REQUIRE_THROWS(random_flag(rng, u, 0), "a flag needs a nonempty part");
  REQUIRE_EQ(random_flag(rng, u, 0b01).basis.rows, 2, "single-block flag");
  test_done("complete flags");
}

void test_cut_empty_plan() {
  Rng rng(62);
  DecomposedSpace u = space({2, 1, 2});
  RationalSubspace w = random_subspace(rng, u, 3);
  REQUIRE(cut_by_flags(w, {}) == w, "the empty plan returns W unchanged");
  test_done("empty cutting plan");
}

void test_cut_singleton() {
  Rng rng(4414);
  int zeroed = 0, cut_ok = 0;
  for (int it = 0; it < 100; ++it) {
    int n = static_cast<int>(rng.next_long(2, 4));
    std::vector<int> dims;
    int total = 0;
    for (int i = 0; i < n; ++i) {
      int d = static_cast<int>(rng.next_long(0, 3));
      dims.push_back(d);
      total += d;
    }
    if (total == 0) continue;
    DecomposedSpace u = space(dims);
    int v = static_cast<int>(rng.next_long(0, n - 1));
    while (dims[static_cast<std::size_t>(v)] == 0) v = (v + 1) % n;
    Subset J = Subset{1} << v;
    Mat gen(static_cast<int>(rng.next_long(1, total)), u.total());
    for (Q& x : gen.a) x = rng.next_rat();
    if (rng.next_long(0, 3) == 0)  // sometimes kill the chosen block outright
      for (int r = 0; r < gen.rows; ++r)
        for (int c : u.block_cols(J)) gen.at(r, c) = 0;
    RationalSubspace w = make_subspace(u, gen);
    SetFn phi = nu_star(w);
    std::vector<FlagCut> plan{{random_flag(rng, u, J), 1}};
    if (phi(J) == 0) {
      bool caught = false;
      try {
        cut_by_flags(w, plan);
      } catch (const ZeroProjectionError& e) {
        caught = true;
        REQUIRE_EQ(rank_of_cols(e.cut.basis, u.block_cols(J)), 0, "the dead block projection is reported");
      }
      REQUIRE(caught, "negative nu* + xi is rejected");
      ++zeroed;
      continue;
    }
    RationalSubspace cut = cut_by_flags(w, plan);
    SetFn up = (phi + xi_of(u.ground, J)).upmin();
    REQUIRE(nu_star(cut) == up, "a generic flag cut realizes the UpMin transform");
    REQUIRE_EQ(cut.dim(), w.dim() - 1, "codimension one for a single cut");
    REQUIRE(nu_star(cut_by_random_flags(w, {J}, rng)) == up, "the certified cut agrees");
    ++cut_ok;
  }
  REQUIRE(zeroed > 0 && cut_ok > 50, "both branches exercised");
  test_done("singleton flag cuts");
}

void test_cut_exponent_partitions() {
  Rng rng(905);
  DecomposedSpace u = space({2, 2});
  RationalSubspace w = full_subspace(u);
  SetFn phi = nu_star(w);

  // One flag with exponent two versus two flags with exponent one.
  SetFn two = phi + xi_of(u.ground, 0b11) + xi_of(u.ground, 0b11);
  RationalSubspace a = cut_by_flags(w, {{random_flag(rng, u, 0b11), 2}});
  RationalSubspace b =
      cut_by_flags(w, {{random_flag(rng, u, 0b11), 1}, {random_flag(rng, u, 0b11), 1}});
  REQUIRE(nu_star(a) == two.upmin(), "exponent two in one flag");
  REQUIRE(nu_star(b) == two.upmin(), "split exponents across two flags");
  REQUIRE_EQ(a.dim(), 2, "two conditions drop two dimensions");

  // Exhausting a block: F^2 = 0 in the first block kills its projection.
  RationalSubspace c = cut_by_flags(w, {{random_flag(rng, u, 0b01), 2}});
  SetFn expect = (phi + xi_of(u.ground, 0b01) + xi_of(u.ground, 0b01)).upmin();
  REQUIRE(nu_star(c) == expect, "a fully exhausted block");
  REQUIRE_EQ(rank_of_cols(c.basis, u.block_cols(0b01)), 0, "first block projection vanishes");
  REQUIRE_EQ(rank_of_cols(c.basis, u.block_cols(0b10)), 2, "second block untouched");
  test_done("exponent partitions");
}

void test_cut_violating_plan() {
  Rng rng(73);
  DecomposedSpace u = space({1, 1});
  RationalSubspace w = span_of(u, {{1, 1}});
  bool caught = false;
  try {
    cut_by_flags(w, {{random_flag(rng, u, 0b01), 1}, {random_flag(rng, u, 0b10), 1}});
  } catch (const ZeroProjectionError& e) {
    caught = true;
    REQUIRE_EQ(e.cut.dim(), 0, "the diagonal line is cut to zero");
    REQUIRE_EQ(rank_of_cols(e.cut.basis, u.block_cols(0b01)), 0, "first projection vanishes");
    REQUIRE_EQ(rank_of_cols(e.cut.basis, u.block_cols(0b10)), 0, "second projection vanishes");
  }
  REQUIRE(caught, "over-cutting the diagonal line is reported");
  test_done("violating plans");
}

void test_dichotomy() {
  Rng rng(3177);
  int realized = 0, vanished = 0;
  for (int it = 0; it < 100; ++it) {
    int n = static_cast<int>(rng.next_long(2, 3));
    std::vector<int> dims;
    int total = 0;
    for (int i = 0; i < n; ++i) {
      int d = static_cast<int>(rng.next_long(1, 3));
      dims.push_back(d);
      total += d;
    }
    DecomposedSpace u = space(dims);
    RationalSubspace w = random_subspace(rng, u, static_cast<int>(rng.next_long(1, total)));
    std::vector<Subset> jays;
    int m = static_cast<int>(rng.next_long(1, 3));
    for (int i = 0; i < m; ++i)
      jays.push_back(static_cast<Subset>(rng.next_long(1, (1 << n) - 1)));

    SetFn target = nu_star(w);
    for (Subset J : jays) target = target + xi_of(u.ground, J);
    bool nonneg = true;
    for (Subset i = 0; i <= target.full(); ++i) nonneg = nonneg && target(i) >= 0;

    try {
      RationalSubspace cut = cut_by_random_flags(w, jays, rng);
      REQUIRE(nonneg, "a successful cut implies nonnegativity");
      REQUIRE(nu_star(cut) == target.upmin(), "the certified cut realizes the UpMin transform");
      REQUIRE_EQ(cut.dim(), w.dim() - m, "codimension equals the multiset size");
      ++realized;
    } catch (const ZeroProjectionError& e) {
      REQUIRE(!nonneg, "rejection implies a negative value");
      REQUIRE(target(e.witness) < 0, "the witness subset is negative");
      bool dead = false;
      for (int v = 0; v < n; ++v)
        dead = dead || rank_of_cols(e.cut.basis, u.block_cols(Subset{1} << v)) == 0;
      REQUIRE(dead, "a generic over-cut loses a block projection");
      ++vanished;
    }
  }
  REQUIRE(realized > 20 && vanished > 20, "both sides of the dichotomy occur");
  test_done("realization dichotomy");
}

void test_glue_known() {
  Rng rng(8821);
  DecomposedSpace u = space({2, 2});
  RationalSubspace w = full_subspace(u);
  Glue gl{0b11, {{0, {Q(1), Q(0)}}, {1, {Q(1), Q(0)}}}};
  RationalSubspace cut = cut_by_glue_hyperplanes(w, {gl}, rng);
  REQUIRE_EQ(cut.dim(), 3, "one hyperplane drops one dimension");
  REQUIRE(nu_star(cut) == (nu_star(w) + xi_of(u.ground, 0b11)).upmin(), "one xi_J step");
  REQUIRE_EQ(nu_star(cut)(0b01), Q(2), "block projections stay full");
  REQUIRE(in_span(cut, {Q(0), Q(1), Q(0), Q(0)}), "the hyperplane contains the first wall");
  REQUIRE(in_span(cut, {Q(0), Q(0), Q(0), Q(1)}), "the hyperplane contains the second wall");

  // A zero-dimensional part carries no wall but may sit in the glued subset.
  DecomposedSpace u0 = space({0, 2});
  RationalSubspace cut0 =
      cut_by_glue_hyperplanes(full_subspace(u0), {Glue{0b11, {{1, {Q(2), Q(3)}}}}}, rng);
  REQUIRE_EQ(cut0.dim(), 1, "cutting the plane by one wall functional");
  REQUIRE(nu_star(cut0) == (nu_star(full_subspace(u0)) + xi_of(u0.ground, 0b11)).upmin(),
          "zero-dimensional parts are glued for free");
  test_done("glue hyperplanes on reference spaces");
}

void test_glue_empty() {
  Rng rng(15);
  DecomposedSpace u = space({1, 2});
  RationalSubspace w = random_subspace(rng, u, 2);
  REQUIRE(cut_by_glue_hyperplanes(w, {}, rng) == w, "no glues return W unchanged");
  test_done("empty glue collection");
}

void test_glue_degenerate() {
  Rng rng(99);
  DecomposedSpace u = space({1, 1});
  RationalSubspace w = full_subspace(u);
  REQUIRE_THROWS(cut_by_glue_hyperplanes(w, {Glue{0b11, {}}}, rng), "wall-less glue is degenerate");
  REQUIRE_THROWS(cut_by_glue_hyperplanes(w, {Glue{0b11, {{0, {Q(0)}}}}}, rng),
                 "zero walls do not span a hyperplane");
  REQUIRE_THROWS(cut_by_glue_hyperplanes(w, {Glue{0b01, {{1, {Q(1)}}}}}, rng),
                 "walls outside the glued subset are rejected");
  test_done("degenerate glues");
}

void test_glue_hypothesis_violation() {
  Rng rng(5150);
  DecomposedSpace u = space({2, 1});
  RationalSubspace w = span_of(u, {{1, 0, 1}, {0, 1, 0}});
  // The wall kernel in the first block contains the special direction (0,1),
  // so the sub-selection {u0} cuts to a line invisible from the second block.
  Glue gl{0b11, {{0, {Q(1), Q(0)}}, {1, {Q(1)}}}};
  bool caught = false;
  try {
    cut_by_glue_hyperplanes(w, {gl}, rng);
  } catch (const std::invalid_argument&) {
    caught = true;
  }
  REQUIRE(caught, "a wall through a special direction fails the hypothesis");

  // Rotating the wall off the special direction repairs the hypothesis.
  Glue good{0b11, {{0, {Q(1), Q(1)}}, {1, {Q(1)}}}};
  RationalSubspace cut = cut_by_glue_hyperplanes(w, {good}, rng);
  REQUIRE(nu_star(cut) == (nu_star(w) + xi_of(u.ground, 0b11)).upmin(), "the repaired glue cuts");
  test_done("glue hypothesis certification");
}

void test_glue_two_pairs() {
  Rng rng(640);
  DecomposedSpace u = space({2, 2, 2});
  RationalSubspace w = full_subspace(u);
  Glue g1{0b011, {{0, {Q(1), Q(0)}}, {1, {Q(1), Q(0)}}}};
  Glue g2{0b110, {{1, {Q(0), Q(1)}}, {2, {Q(1), Q(0)}}}};
  RationalSubspace cut = cut_by_glue_hyperplanes(w, {g1, g2}, rng);
  SetFn target = nu_star(w) + xi_of(u.ground, 0b011) + xi_of(u.ground, 0b110);
  REQUIRE_EQ(cut.dim(), 4, "two hyperplanes drop two dimensions");
  REQUIRE(nu_star(cut) == target.upmin(), "two overlapping glue pairs");
  REQUIRE_EQ(nu_star(cut)(0b010), Q(2), "the shared block keeps its projection");
  test_done("overlapping glue pairs");
}

void test_glue_random() {
  Rng rng(24712);
  int done = 0, attempts = 0, rejected = 0;
  while (done < 100 && attempts < 400) {
    ++attempts;
    int n = static_cast<int>(rng.next_long(2, 3));
    std::vector<int> dims;
    int total = 0;
    for (int i = 0; i < n; ++i) {
      int d = static_cast<int>(rng.next_long(1, 3));
      dims.push_back(d);
      total += d;
    }
    DecomposedSpace u = space(dims);
    RationalSubspace w = random_subspace(rng, u, static_cast<int>(rng.next_long(1, total)));
    int m = static_cast<int>(rng.next_long(1, 3));
    std::vector<Glue> glues;
    for (int i = 0; i < m; ++i) {
      Glue gl;
      gl.parts = static_cast<Subset>(rng.next_long(1, (1 << n) - 1));
      for (int v = 0; v < n; ++v) {
        if (!(gl.parts & (Subset{1} << v)) || rng.next_long(0, 3) == 0) continue;
        std::vector<Q> wall;
        for (int c = 0; c < dims[static_cast<std::size_t>(v)]; ++c) wall.push_back(rng.next_nonzero_rat());
        gl.walls[v] = wall;
      }
      if (gl.walls.empty()) {
        int v = 0;
        while (!(gl.parts & (Subset{1} << v))) ++v;
        std::vector<Q> wall;
        for (int c = 0; c < dims[static_cast<std::size_t>(v)]; ++c) wall.push_back(rng.next_nonzero_rat());
        gl.walls[v] = wall;
      }
      glues.push_back(gl);
    }
    SetFn target = nu_star(w);
    for (const Glue& gl : glues) target = target + xi_of(u.ground, gl.parts);
    try {
      RationalSubspace cut = cut_by_glue_hyperplanes(w, glues, rng);
      REQUIRE(nu_star(cut) == target.upmin(), "certified glue cuts realize the UpMin transform");
      check_nu_shape(nu_star(cut), cut.dim());
      ++done;
    } catch (const ZeroProjectionError&) {
      ++rejected;
    } catch (const std::invalid_argument&) {
      ++rejected;
    }
  }
  REQUIRE_EQ(done, 100, "one hundred certified random glue cuts");
  REQUIRE(attempts < 400, "valid instances are the common case");
  test_done("random glue instances");
}

}  // namespace

int main() {
  test_spaces();
  test_nu_star_examples();
  test_nu_star_random_oracle();
  test_flags();
  test_cut_empty_plan();
  test_cut_singleton();
  test_cut_exponent_partitions();
  test_cut_violating_plan();
  test_dichotomy();
  test_glue_known();
  test_glue_empty();
  test_glue_degenerate();
  test_glue_hypothesis_violation();
  test_glue_two_pairs();
  test_glue_random();
  return 0;
}
