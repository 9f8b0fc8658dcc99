#include "lcs/qlinalg.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

namespace lcs {

namespace {

void check_part(const GroundSet& g, Subset part) {
  if (part == 0) throw std::invalid_argument("flag part must be nonempty");
  if ((part & g.full()) != part)
    throw std::invalid_argument("part is not a subset of the ground set");
}

// Sum of xi_J over a multiset of subsets.
SetFn xi_total(const GroundSet& g, const std::map<Subset, int>& mult) {
  SetFn x(g);
  for (const auto& [J, m] : mult)
    for (Subset I = 1; I <= g.full(); ++I)
      if ((I & J) == J) x.at(I) -= m;
  return x;
}

// First subset where f is negative, or nullopt.
std::optional<Subset> negative_witness(const SetFn& f) {
  for (Subset I = 0; I <= f.full(); ++I)
    if (f(I) < 0) return I;
  return std::nullopt;
}

// Local rows on the columns of a block, widened to ambient coordinates.
Mat embed_rows(const DecomposedSpace& u, Subset part, const Mat& local) {
  std::vector<int> cols = u.block_cols(part);
  Mat out(local.rows, u.total());
  for (int r = 0; r < local.rows; ++r)
    for (int c = 0; c < local.cols; ++c) out.at(r, cols[static_cast<std::size_t>(c)]) = local.at(r, c);
  return out;
}

// W cut by the kernels of the given ambient functionals.
RationalSubspace intersect_rows(const RationalSubspace& w, const Mat& constraints) {
  if (constraints.rows == 0) return w;
  Mat m = mat_mul(w.basis, transpose(constraints));
  Mat combos = kernel_basis(transpose(m));  // rows y with y * basis in every kernel
  return RationalSubspace{w.ambient, row_space_rref(mat_mul(combos, w.basis))};
}

// Functionals vanishing exactly on F^e: the kernel of the suffix basis.
Mat flag_annihilator(const Flag& f, int e) {
  const int d = f.basis.rows;
  Mat suffix(d - e, d);
  for (int r = e; r < d; ++r)
    for (int c = 0; c < d; ++c) suffix.at(r - e, c) = f.basis.at(r, c);
  return kernel_basis(suffix);
}

void check_flag_cut(const DecomposedSpace& u, const FlagCut& fc) {
  check_part(u.ground, fc.flag.part);
  const int d = static_cast<int>(u.block_cols(fc.flag.part).size());
  if (fc.flag.basis.rows != d || fc.flag.basis.cols != d)
    throw std::invalid_argument("flag basis does not match its block");
  if (d > 0 && det(fc.flag.basis) == 0)
    throw std::invalid_argument("flag basis is singular");
  if (fc.exponent < 0 || fc.exponent > d)
    throw std::invalid_argument("flag exponent out of range");
}

Mat plan_constraints(const DecomposedSpace& u, const std::vector<FlagCut>& plan) {
  Mat rows(0, u.total());
  for (const FlagCut& fc : plan)
    if (fc.exponent > 0)
      rows = vstack(rows, embed_rows(u, fc.flag.part, flag_annihilator(fc.flag, fc.exponent)));
  return rows;
}

std::map<Subset, int> plan_multiset(const std::vector<FlagCut>& plan) {
  std::map<Subset, int> mult;
  for (const FlagCut& fc : plan)
    if (fc.exponent > 0) mult[fc.flag.part] += fc.exponent;
  return mult;
}

constexpr int kMaxDraws = 5;

}  // namespace

int DecomposedSpace::total() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

int DecomposedSpace::offset(int v) const {
  int t = 0;
  for (int i = 0; i < v; ++i) t += dims[static_cast<std::size_t>(i)];
  return t;
}

std::vector<int> DecomposedSpace::block_cols(Subset I) const {
  std::vector<int> cols;
  for (int v = 0; v < ground.n(); ++v)
    if (I & (Subset{1} << v)) {
      const int o = offset(v);
      for (int c = 0; c < dims[static_cast<std::size_t>(v)]; ++c) cols.push_back(o + c);
    }
  return cols;
}

DecomposedSpace make_space(const GroundSet& ground, const std::vector<int>& dims) {
  if (static_cast<int>(dims.size()) != ground.n())
    throw std::invalid_argument("one dimension per part is required");
  for (int d : dims)
    if (d < 0) throw std::invalid_argument("part dimensions must be nonnegative");
  return DecomposedSpace{ground, dims};
}

RationalSubspace make_subspace(const DecomposedSpace& u, const Mat& rows) {
  if (rows.cols != u.total() && rows.rows > 0)
    throw std::invalid_argument("subspace rows do not match the ambient space");
  Mat b = row_space_rref(rows);
  if (b.cols != u.total()) b = Mat(0, u.total());
  return RationalSubspace{u, b};
}

RationalSubspace full_subspace(const DecomposedSpace& u) {
  Mat b(u.total(), u.total());
  for (int i = 0; i < b.rows; ++i) b.at(i, i) = 1;
  return RationalSubspace{u, b};
}

RationalSubspace zero_subspace(const DecomposedSpace& u) {
  return RationalSubspace{u, Mat(0, u.total())};
}

SetFn nu_star(const RationalSubspace& w) {
  SetFn f(w.ambient.ground);
  for (Subset I = 1; I <= f.full(); ++I)
    f.at(I) = rank_of_cols(w.basis, w.ambient.block_cols(I));
  return f;
}

Mat Flag::step(int i) const {
  const int d = basis.rows;
  if (i < 0 || i > d) throw std::invalid_argument("flag step out of range");
  Mat rows(d - i, d);
  for (int r = i; r < d; ++r)
    for (int c = 0; c < d; ++c) rows.at(r - i, c) = basis.at(r, c);
  return row_space_rref(rows);
}

Flag make_flag(const DecomposedSpace& u, Subset part, Mat basis) {
  check_part(u.ground, part);
  const int d = static_cast<int>(u.block_cols(part).size());
  if (basis.rows != d || basis.cols != d)
    throw std::invalid_argument("flag basis must be square of the block dimension");
  if (d > 0 && det(basis) == 0) throw std::invalid_argument("flag basis is singular");

  // Bottom-up normal form. Only adding later rows into earlier ones is
  // allowed, which preserves every suffix span.
  std::vector<int> pivot(static_cast<std::size_t>(d), -1);
  for (int r = d - 1; r >= 0; --r) {
    for (int r2 = d - 1; r2 > r; --r2) {
      const Q c = basis.at(r, pivot[static_cast<std::size_t>(r2)]);
      if (c == 0) continue;
      for (int k = 0; k < d; ++k) basis.at(r, k) -= c * basis.at(r2, k);
    }
    int p = 0;
    while (basis.at(r, p) == 0) ++p;
    pivot[static_cast<std::size_t>(r)] = p;
    const Q lead = basis.at(r, p);
    for (int k = 0; k < d; ++k) basis.at(r, k) /= lead;
  }
  return Flag{part, basis};
}

Flag random_flag(Rng& rng, const DecomposedSpace& u, Subset part) {
  check_part(u.ground, part);
  const int d = static_cast<int>(u.block_cols(part).size());
  for (int attempt = 0; attempt < 32; ++attempt) {
    Mat b(d, d);
    for (Q& x : b.a) x = rng.next_rat();
    if (d == 0 || det(b) != 0) return make_flag(u, part, b);
  }
  throw std::runtime_error("could not draw an invertible flag basis");
}

ZeroProjectionError::ZeroProjectionError(Subset w, RationalSubspace c)
    : std::runtime_error("nu* + xi is negative at " +
                         c.ambient.ground.subset_key(w) +
                         "; a generic cut has a vanishing block projection"),
      witness(w),
      cut(std::move(c)) {}

RationalSubspace cut_by_flags(const RationalSubspace& w, const std::vector<FlagCut>& plan) {
  for (const FlagCut& fc : plan) check_flag_cut(w.ambient, fc);
  RationalSubspace cut = intersect_rows(w, plan_constraints(w.ambient, plan));
  const SetFn target = nu_star(w) + xi_total(w.ambient.ground, plan_multiset(plan));
  if (auto bad = negative_witness(target)) throw ZeroProjectionError(*bad, cut);
  return cut;
}

RationalSubspace cut_by_random_flags(const RationalSubspace& w, const std::vector<Subset>& jays, Rng& rng) {
  std::map<Subset, int> mult;
  for (Subset J : jays) {
    check_part(w.ambient.ground, J);
    ++mult[J];
  }
  auto draw_plan = [&] {
    std::vector<FlagCut> plan;
    for (const auto& [part, m] : mult) {
      // More copies than the block dimension always fails nonnegativity; the
      // reported cut clamps at F^D = 0, which deeper steps would equal anyway.
      const int d = static_cast<int>(w.ambient.block_cols(part).size());
      plan.push_back({random_flag(rng, w.ambient, part), std::min(m, d)});
    }
    return plan;
  };

  const SetFn target = nu_star(w) + xi_total(w.ambient.ground, mult);
  if (auto bad = negative_witness(target))
    throw ZeroProjectionError(*bad, intersect_rows(w, plan_constraints(w.ambient, draw_plan())));

  const SetFn up = target.upmin();
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    RationalSubspace cut = cut_by_flags(w, draw_plan());
    if (nu_star(cut) == up) return cut;
  }
  throw std::runtime_error("random flags failed general position five times");
}

RationalSubspace cut_by_glue_hyperplanes(const RationalSubspace& w, const std::vector<Glue>& glues, Rng& rng) {
  const DecomposedSpace& u = w.ambient;
  const GroundSet& g = u.ground;

  // Validate and normalize: keep only nonzero walls.
  std::vector<Glue> gs = glues;
  std::vector<std::pair<int, int>> verts;  // (glue index, vertex)
  for (std::size_t i = 0; i < gs.size(); ++i) {
    Glue& gl = gs[i];
    check_part(g, gl.parts);
    bool proper = false;
    for (auto it = gl.walls.begin(); it != gl.walls.end();) {
      const int v = it->first;
      if (!(gl.parts & (Subset{1} << v)))
        throw std::invalid_argument("glue wall on a vertex outside its subset");
      if (static_cast<int>(it->second.size()) != u.dims[static_cast<std::size_t>(v)])
        throw std::invalid_argument("glue wall length does not match its block");
      bool zero = true;
      for (const Q& x : it->second) zero = zero && x == 0;
      if (zero) {
        it = gl.walls.erase(it);
      } else {
        proper = true;
        ++it;
      }
    }
    if (!proper)
      throw std::invalid_argument("glue walls fill the whole block; no hyperplane contains them");
    for (int v = 0; v < g.n(); ++v)
      if (gl.parts & (Subset{1} << v)) verts.emplace_back(static_cast<int>(i), v);
  }
  if (verts.size() > 16) throw std::invalid_argument("too many glue vertices");

  const SetFn phi = nu_star(w);

  // The cutting hypothesis: every admissible selection of walls realizes the
  // UpMin transform of its own singleton sum.
  for (Subset sel = 0; sel < (Subset{1} << verts.size()); ++sel) {
    std::map<Subset, int> singles;
    for (std::size_t k = 0; k < verts.size(); ++k)
      if (sel & (Subset{1} << k)) ++singles[Subset{1} << verts[k].second];
    const SetFn target = phi + xi_total(g, singles);
    if (negative_witness(target)) continue;
    Mat rows(0, u.total());
    for (std::size_t k = 0; k < verts.size(); ++k)
      if (sel & (Subset{1} << k)) {
        const auto& [i, v] = verts[k];
        auto it = gs[static_cast<std::size_t>(i)].walls.find(v);
        if (it == gs[static_cast<std::size_t>(i)].walls.end()) continue;
        Mat local(1, static_cast<int>(it->second.size()));
        for (int c = 0; c < local.cols; ++c) local.at(0, c) = it->second[static_cast<std::size_t>(c)];
        rows = vstack(rows, embed_rows(u, Subset{1} << v, local));
      }
    if (nu_star(intersect_rows(w, rows)) != target.upmin())
      throw std::invalid_argument("glue walls fail the cutting hypothesis");
  }

  std::map<Subset, int> mult;
  for (const Glue& gl : gs) ++mult[gl.parts];
  const SetFn target = phi + xi_total(g, mult);

  auto draw_rows = [&] {
    Mat rows(static_cast<int>(gs.size()), u.total());
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (const auto& [v, wall] : gs[i].walls) {
        const Q c = rng.next_nonzero_rat();
        const int o = u.offset(v);
        for (std::size_t k = 0; k < wall.size(); ++k)
          rows.at(static_cast<int>(i), o + static_cast<int>(k)) += c * wall[k];
      }
    return rows;
  };

  if (auto bad = negative_witness(target))
    throw ZeroProjectionError(*bad, intersect_rows(w, draw_rows()));

  const SetFn up = target.upmin();
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    RationalSubspace cut = intersect_rows(w, draw_rows());
    if (nu_star(cut) == up) return cut;
  }
  throw std::runtime_error("glue hyperplanes failed general position five times");
}

}  // namespace lcs
