#include "lcs/bricks.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "lcs/residue.hpp"

namespace lcs {

namespace {

std::string floors_key(const std::vector<long>& floors, Subset full) {
  std::ostringstream os;
  for (Subset m = 1; m < full; ++m) {
    if (m > 1) os << ',';
    os << floors[m];
  }
  return os.str();
}

// Interior margin of the box described by a floor table: maximize t subject
// to floor(S) + t <= q(S) <= floor(S) + 1 - t on proper nonempty S and
// q(V) = g. A positive optimum certifies a full-dimensional alcove and the
// optimizer is an interior witness.
std::optional<Brick> validate_floor_table(const GroundSet& ground, long g,
                                          const std::vector<long>& floors) {
  int n = ground.n();
  Subset full = ground.full();
  Polyhedron p(n + 1);
  std::vector<Q> row(n + 1, Q(0));
  for (int i = 0; i < n; ++i) row[i] = 1;
  p.add_eq(row, Q(g));
  std::fill(row.begin(), row.end(), Q(0));
  row[n] = 1;
  p.add_ineq(row, Q(1));
  for (Subset m = 1; m < full; ++m) {
    std::vector<Q> lo(n + 1, Q(0)), hi(n + 1, Q(0));
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) {
        lo[i] = -1;
        hi[i] = 1;
      }
    lo[n] = 1;
    hi[n] = 1;
    p.add_ineq(lo, Q(-floors[m]));
    p.add_ineq(hi, Q(floors[m] + 1));
  }
  std::vector<Q> obj(n + 1, Q(0));
  obj[n] = 1;
  LpResult r = lp_max(obj, p);
  if (r.status != LpStatus::kOptimal || !(r.value > 0)) return std::nullopt;
  Brick b;
  b.ground = ground;
  b.g = g;
  b.floors = floors;
  b.witness.assign(r.x.begin(), r.x.begin() + n);
  b.full_dim = true;
  return b;
}

// Deterministic witness on the grid with denominator 2*lcm(1..n*g)+1; such
// grids are fine enough to stay inside the alcove in practice, and the
// rounding is verified before it replaces the solver's point.
void snap_witness(Brick& b) {
  int n = b.ground.n();
  if (n <= 1) return;
  Z den = 2 * lcm_upto(static_cast<unsigned long>(n * std::max(b.g, 1L))) + 1;
  std::vector<Q> w(n);
  Z acc = 0;
  for (int i = 0; i + 1 < n; ++i) {
    Z num = floor_q(b.witness[i] * Q(den) + qq(1, 2));
    w[i] = Q(num) / Q(den);
    acc += num;
  }
  w[n - 1] = Q(Z(b.g) * den - acc) / Q(den);
  if (w[n - 1] < 0) return;
  Subset full = b.ground.full();
  for (Subset m = 1; m < full; ++m) {
    Q s = subset_sum(w, m);
    if (is_integer(s) || floor_q(s) != b.floors[m]) return;
  }
  b.witness = std::move(w);
}

}  // namespace

Q subset_sum(const std::vector<Q>& q, Subset s) {
  Q r = 0;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (s >> i & 1) r += q[i];
  return r;
}

long Brick::ceil_of(Subset s) const {
  return static_cast<long>(ceil_q(subset_sum(witness, s)).get_si());
}

std::string Brick::key() const { return floors_key(floors, ground.full()); }

Polyhedron Brick::polytope() const {
  int n = ground.n();
  Polyhedron p(n);
  std::vector<Q> ones(n, Q(1));
  p.add_eq(ones, Q(g));
  Subset full = ground.full();
  for (Subset m = 1; m < full; ++m) {
    std::vector<Q> pos(n, Q(0)), neg(n, Q(0));
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) {
        pos[i] = 1;
        neg[i] = -1;
      }
    long lo = floors[m], hi = ceil_of(m);
    if (lo == hi) {
      p.add_eq(pos, Q(lo));
      continue;
    }
    p.add_ineq(pos, Q(hi));
    p.add_ineq(neg, Q(-lo));
  }
  return p;
}

Brick brick_of(const GroundSet& ground, long g, const std::vector<Q>& beta) {
  ground.validate();
  if (g < 0) throw std::invalid_argument("negative width");
  if (static_cast<int>(beta.size()) != ground.n())
    throw std::invalid_argument("point size does not match the ground set");
  Q total = 0;
  for (const Q& x : beta) {
    if (x < 0) throw std::invalid_argument("point has a negative coordinate");
    total += x;
  }
  if (total != g)
    throw std::invalid_argument("point coordinates do not sum to the width");
  Brick b;
  b.ground = ground;
  b.g = g;
  b.witness = beta;
  Subset full = ground.full();
  b.floors.assign(static_cast<std::size_t>(full) + 1, 0);
  b.full_dim = true;
  for (Subset m = 1; m <= full; ++m) {
    Q s = subset_sum(beta, m);
    b.floors[m] = static_cast<long>(floor_q(s).get_si());
    if (m != full && is_integer(s)) b.full_dim = false;
  }
  return b;
}

std::vector<Brick> enumerate_bricks(const GroundSet& ground, long g,
                                    std::size_t cap) {
  ground.validate();
  if (g < 1) throw std::invalid_argument("brick enumeration needs positive width");
  int n = ground.n();
  if (n > 12)
    throw std::invalid_argument("brick enumeration supports at most 12 labels");
  Subset full = ground.full();
  std::vector<Brick> out;
  std::set<std::string> seen;
  std::deque<std::vector<long>> queue;
  auto visit = [&](const std::vector<long>& fl) {
    if (!seen.insert(floors_key(fl, full)).second) return;
    auto b = validate_floor_table(ground, g, fl);
    if (!b) return;
    snap_witness(*b);
    out.push_back(std::move(*b));
    if (out.size() > cap)
      throw std::runtime_error("brick enumeration exceeded the cap");
    queue.push_back(fl);
  };
  for (int v = 0; v < n; ++v) {
    std::vector<long> fl(static_cast<std::size_t>(full) + 1, 0);
    fl[full] = g;
    for (Subset m = 1; m < full; ++m) fl[m] = (m >> v & 1) ? g - 1 : 0;
    visit(fl);
  }
  if (out.empty()) throw std::logic_error("no brick found from the corner seeds");
  // cross one wall family {S, V \ S} at a time; interior LPs accept or reject
  while (!queue.empty()) {
    std::vector<long> fl = std::move(queue.front());
    queue.pop_front();
    for (Subset m = 1; m < full; ++m) {
      Subset c = full & ~m;
      if (m > c) continue;
      for (int d : {1, -1}) {
        long nf = fl[m] + d;
        if (nf < 0 || nf > g - 1) continue;
        std::vector<long> fl2 = fl;
        fl2[m] = nf;
        fl2[c] = g - 1 - nf;
        visit(fl2);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Brick& a, const Brick& b) { return a.floors < b.floors; });
  return out;
}

bool contains_brick(const SetFn& chi, const Brick& b) {
  if (!(chi.ground() == b.ground))
    throw std::invalid_argument("ground set mismatch");
  if (chi.range() != b.g) throw std::invalid_argument("range mismatch");
  Subset full = b.ground.full();
  for (Subset m = 1; m < full; ++m)
    if (chi(m) < b.ceil_of(m)) return false;
  return true;
}

Q brick_volume(const Brick& b) {
  int n = b.ground.n();
  if (n == 1) return Q(1);
  int m = n - 1;
  Polyhedron p(m);
  Subset fullv = b.ground.full();
  Subset front = (Subset{1} << m) - 1;
  // substitute the last coordinate through q(V) = g: every bound of a subset
  // containing it becomes a bound on the complementary front subset
  for (Subset s = 1; s <= front; ++s) {
    std::vector<Q> pos(m, Q(0)), neg(m, Q(0));
    for (int i = 0; i < m; ++i)
      if (s >> i & 1) {
        pos[i] = 1;
        neg[i] = -1;
      }
    Subset comp = fullv & ~s;
    long lo = std::max(b.floors[s], b.g - b.ceil_of(comp));
    long hi = std::min(b.ceil_of(s), b.g - b.floors[comp]);
    if (lo == hi) {
      p.add_eq(pos, Q(lo));
      continue;
    }
    p.add_ineq(pos, Q(hi));
    p.add_ineq(neg, Q(-lo));
  }
  return volume(p);
}

namespace {

struct VEdge {
  int upper = 0, lower = 0;
  Arrow up_arrow = 0;
  std::vector<Subset> upper_side;  // masks with the upper end in, lower out
  std::vector<Subset> lower_side;  // the mirror masks
};

// One slope option of a vertical edge: up-slope k with the downward slope
// -k (integral crossing) or -k-1; deltas are the two crossing contributions
// to eta.
struct SlopeOption {
  long up = 0, down = 0, delta_upper = 0, delta_lower = 0;
};

void psl_for_partition(const Multigraph& g, const OrderedPartition& pi,
                       long bound, std::vector<PermissiblePair>& out) {
  Subset full = g.vertices.full();
  SetFn base = gamma(g, pi) + genus_modular(g);
  std::vector<long> baseL(static_cast<std::size_t>(full) + 1, 0);
  for (Subset m = 0; m <= full; ++m) baseL[m] = base(m).get_num().get_si();
  std::vector<VEdge> ve;
  for (int e = 0; e < g.ne(); ++e) {
    int a = g.edges[e].ends[0], b = g.edges[e].ends[1];
    if (pi.level[a] == pi.level[b]) continue;
    VEdge v;
    if (pi.level[a] > pi.level[b]) {
      v.upper = a;
      v.lower = b;
      v.up_arrow = 2 * e;
    } else {
      v.upper = b;
      v.lower = a;
      v.up_arrow = 2 * e + 1;
    }
    for (Subset m = 1; m <= full; ++m) {
      bool iu = m >> v.upper & 1, il = m >> v.lower & 1;
      if (iu && !il) v.upper_side.push_back(m);
      if (il && !iu) v.lower_side.push_back(m);
    }
    ve.push_back(std::move(v));
  }
  int nve = static_cast<int>(ve.size());
  // what the still-unassigned edges can add on each subset, at most
  std::vector<std::vector<long>> headroom(
      nve + 1, std::vector<long>(static_cast<std::size_t>(full) + 1, 0));
  for (int d = nve - 1; d >= 0; --d) {
    headroom[d] = headroom[d + 1];
    for (Subset m : ve[d].upper_side) headroom[d][m] += bound;
  }
  std::vector<SlopeOption> options;
  options.push_back({0, -1, 0, 0});
  for (long k = 1; k <= bound; ++k) options.push_back({k, -k, k, 1 - k});
  for (long k = 1; k + 1 <= bound; ++k) options.push_back({k, -k - 1, k, -k});
  std::vector<long> partial(static_cast<std::size_t>(full) + 1, 0);
  std::vector<const SlopeOption*> choice(nve, nullptr);

  auto record = [&]() {
    for (Subset m = 1; m <= full; ++m)
      if (baseL[m] + partial[m] < 1) return;
    for (Subset m = 1; m < full; ++m) {
      Subset c = full & ~m;
      if (m > c) continue;
      if (baseL[m] + partial[m] + baseL[c] + partial[c] <= baseL[full]) return;
    }
    PermissiblePair p;
    p.pair.s.s.assign(g.narrows(), 0);
    for (int i = 0; i < nve; ++i) {
      p.pair.s.s[ve[i].up_arrow] = choice[i]->up;
      p.pair.s.s[arrow_rev(ve[i].up_arrow)] = choice[i]->down;
    }
    p.pair.pi = pi;
    SetFn eta_fn(g.vertices);
    for (Subset m = 1; m <= full; ++m) eta_fn.at(m) = Q(baseL[m] + partial[m]);
    p.eta = std::move(eta_fn);
    p.chi = p.eta.upmin();
    p.cone = cone_hrep(g, p.pair.s, pi);
    if (!cone_interior_nonempty(p.cone))
      throw std::logic_error("permissible pair with an empty cone interior");
    out.push_back(std::move(p));
  };

  std::function<void(int)> rec = [&](int d) {
    if (d == nve) {
      record();
      return;
    }
    const VEdge& v = ve[d];
    for (const SlopeOption& opt : options) {
      choice[d] = &opt;
      for (Subset m : v.upper_side) partial[m] += opt.delta_upper;
      for (Subset m : v.lower_side) partial[m] += opt.delta_lower;
      bool open = true;
      for (Subset m = 1; m <= full && open; ++m)
        if (baseL[m] + partial[m] + headroom[d + 1][m] < 1) open = false;
      if (open) rec(d + 1);
      for (Subset m : v.upper_side) partial[m] -= opt.delta_upper;
      for (Subset m : v.lower_side) partial[m] -= opt.delta_lower;
    }
  };
  rec(0);
}

std::vector<OrderedPartition> all_partitions(const Multigraph& g) {
  int n = g.nv();
  std::vector<OrderedPartition> out;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> lev(n, 0);
    while (true) {
      std::vector<char> hit(k, 0);
      for (int l : lev) hit[l] = 1;
      if (std::find(hit.begin(), hit.end(), 0) == hit.end()) {
        std::vector<std::vector<int>> blocks(k);
        for (int v = 0; v < n; ++v) blocks[lev[v]].push_back(v);
        out.push_back(make_partition(g, blocks));
      }
      int p = 0;
      while (p < n && lev[p] == k - 1) lev[p++] = 0;
      if (p == n) break;
      ++lev[p];
    }
  }
  return out;
}

std::vector<PermissiblePair> psl_bounded(const Multigraph& g, long bound) {
  std::vector<PermissiblePair> out;
  for (const OrderedPartition& pi : all_partitions(g))
    psl_for_partition(g, pi, bound, out);
  return out;
}

using PairKey = std::pair<std::vector<int>, std::vector<long>>;

std::vector<PairKey> pair_keys(const std::vector<PermissiblePair>& psl) {
  std::vector<PairKey> keys;
  keys.reserve(psl.size());
  for (const PermissiblePair& p : psl) keys.push_back({p.pair.pi.level, p.pair.s.s});
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

long default_slope_bound(const Multigraph& g) {
  std::vector<long> val(g.nv(), 0);
  for (const Edge& e : g.edges) {
    ++val[e.ends[0]];
    ++val[e.ends[1]];
  }
  long mv = 0;
  for (long v : val) mv = std::max(mv, v);
  return 2 * (total_genus(g) + mv);
}

std::vector<PermissiblePair> enumerate_psl(const Multigraph& g, long bound) {
  validate(g);
  if (total_genus(g) < 1)
    throw std::invalid_argument("permissible pairs need positive total genus");
  std::vector<PermissiblePair> res;
  if (bound > 0) {
    res = psl_bounded(g, bound);
  } else {
    long b = default_slope_bound(g);
    res = psl_bounded(g, b);
    for (int round = 0;; ++round) {
      if (round > 6) throw std::runtime_error("slope bound did not stabilize");
      if (pair_keys(res) == pair_keys(psl_bounded(g, b + 1))) break;
      b *= 2;
      res = psl_bounded(g, b);
    }
  }
  assign_bricks(res, enumerate_bricks(g.vertices, total_genus(g)));
  return res;
}

void assign_bricks(std::vector<PermissiblePair>& psl,
                   const std::vector<Brick>& bricks) {
  for (PermissiblePair& p : psl) {
    p.bricks.clear();
    for (const Brick& b : bricks)
      if (contains_brick(p.chi, b)) p.bricks.push_back(b.key());
  }
}

namespace {

std::string halfspace_key(std::vector<Q> row, Q rhs, bool eq) {
  Q scale = 0;
  for (const Q& c : row)
    if (c != 0) {
      scale = eq ? c : Q(abs(c));
      break;
    }
  if (scale == 0 && rhs != 0) scale = eq ? rhs : Q(abs(rhs));
  if (scale != 0) {
    for (Q& c : row) c /= scale;
    rhs /= scale;
  }
  std::string k;
  for (const Q& c : row) {
    k += rat_str(c);
    k += ',';
  }
  k += '|';
  k += rat_str(rhs);
  return k;
}

// Concatenation of the two H-representations with duplicate rows dropped.
Polyhedron intersect_dedup(const Polyhedron& a, const Polyhedron& b) {
  Polyhedron r(a.nvars);
  std::set<std::string> seen_ineq, seen_eq;
  auto add = [&](const Polyhedron& p) {
    std::vector<Q> row(p.nvars);
    for (int i = 0; i < p.A.rows; ++i) {
      for (int j = 0; j < p.nvars; ++j) row[j] = p.A.at(i, j);
      if (seen_ineq.insert(halfspace_key(row, p.b[i], false)).second)
        r.add_ineq(row, p.b[i]);
    }
    for (int i = 0; i < p.C.rows; ++i) {
      for (int j = 0; j < p.nvars; ++j) row[j] = p.C.at(i, j);
      if (seen_eq.insert(halfspace_key(row, p.d[i], true)).second)
        r.add_eq(row, p.d[i]);
    }
  };
  add(a);
  add(b);
  return r;
}

// Affine dimension and a relative-interior point of a nonempty polyhedron
// from a single implicit-equality scan (cones through the origin are never
// empty here).
struct MeetInfo {
  long dim = 0;
  std::vector<Q> point;
};

MeetInfo meet_info(const Polyhedron& p) {
  std::vector<int> impl = implicit_equalities(p);
  std::vector<char> is_impl(p.A.rows, 0);
  for (int i : impl) is_impl[i] = 1;
  Mat stack(p.C.rows + static_cast<int>(impl.size()), p.nvars);
  for (int r = 0; r < p.C.rows; ++r)
    for (int c = 0; c < p.nvars; ++c) stack.at(r, c) = p.C.at(r, c);
  for (int k = 0; k < static_cast<int>(impl.size()); ++k)
    for (int c = 0; c < p.nvars; ++c)
      stack.at(p.C.rows + k, c) = p.A.at(impl[k], c);
  MeetInfo info;
  info.dim = p.nvars - rank_of(std::move(stack));
  Polyhedron q(p.nvars + 1);  // (x, t): strict slack on non-implicit rows
  std::vector<Q> row(p.nvars + 1, Q(0));
  for (int i = 0; i < p.A.rows; ++i) {
    for (int j = 0; j < p.nvars; ++j) row[j] = p.A.at(i, j);
    row[p.nvars] = is_impl[i] ? Q(0) : Q(1);
    if (is_impl[i])
      q.add_eq(row, p.b[i]);
    else
      q.add_ineq(row, p.b[i]);
  }
  for (int i = 0; i < p.C.rows; ++i) {
    for (int j = 0; j < p.nvars; ++j) row[j] = p.C.at(i, j);
    row[p.nvars] = 0;
    q.add_eq(row, p.d[i]);
  }
  std::fill(row.begin(), row.end(), Q(0));
  row[p.nvars] = 1;
  q.add_ineq(row, Q(1));
  LpResult r = lp_max(row, q);
  if (r.status != LpStatus::kOptimal || !(r.value > 0))
    throw std::logic_error("relative interior evaded the slack program");
  r.x.pop_back();
  info.point = std::move(r.x);
  return info;
}

// Drop inequality rows implied by the others; shrinks every later scan of
// the same polyhedron.
Polyhedron minimize_rows(const Polyhedron& p) {
  Polyhedron r(p.nvars);
  r.C = p.C;
  r.d = p.d;
  std::vector<char> keep(p.A.rows, 1);
  std::vector<Q> row(p.nvars);
  for (int i = 0; i < p.A.rows; ++i) {
    Polyhedron rest(p.nvars);
    rest.C = p.C;
    rest.d = p.d;
    for (int j = 0; j < p.A.rows; ++j) {
      if (j == i || !keep[j]) continue;
      for (int c = 0; c < p.nvars; ++c) row[c] = p.A.at(j, c);
      rest.add_ineq(row, p.b[j]);
    }
    for (int c = 0; c < p.nvars; ++c) row[c] = p.A.at(i, c);
    if (implies_ineq(rest, row, p.b[i])) keep[i] = 0;
  }
  for (int i = 0; i < p.A.rows; ++i) {
    if (!keep[i]) continue;
    for (int c = 0; c < p.nvars; ++c) row[c] = p.A.at(i, c);
    r.add_ineq(row, p.b[i]);
  }
  return r;
}

// One-LP interior probe of an inequality-only polyhedron: thicken every row
// by t and maximize it; a positive optimum certifies full dimension and the
// optimizer is an interior point.
std::optional<std::vector<Q>> interior_point(const Polyhedron& p) {
  Polyhedron q(p.nvars + 1);
  std::vector<Q> row(p.nvars + 1, Q(0));
  for (int i = 0; i < p.A.rows; ++i) {
    for (int j = 0; j < p.nvars; ++j) row[j] = p.A.at(i, j);
    row[p.nvars] = 1;
    q.add_ineq(row, p.b[i]);
  }
  std::fill(row.begin(), row.end(), Q(0));
  row[p.nvars] = 1;
  q.add_ineq(row, Q(1));
  LpResult r = lp_max(row, q);
  if (r.status != LpStatus::kOptimal || !(r.value > 0)) return std::nullopt;
  r.x.pop_back();
  return r.x;
}

bool full_dim_quick(const Polyhedron& p) {
  if (p.C.rows > 0) return affine_dim(p) == p.nvars;
  return interior_point(p).has_value();
}

// Incidence table, face certification of every pairwise intersection, and
// the maximal-cone list. The pairwise pass is independent per pair and runs
// in parallel; certification failures are collected and rethrown.
void finish_fan(Fan& fan) {
  const std::size_t k = fan.cones.size();
  fan.incidence.assign(k, std::vector<long>(k, 0));
  for (std::size_t i = 0; i < k; ++i) fan.incidence[i][i] = fan.cones[i].dim;
  std::vector<std::pair<std::size_t, std::size_t>> todo;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) todo.emplace_back(i, j);
  std::vector<long> dims(todo.size(), 0);
  std::vector<std::string> errors(todo.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long t = 0; t < static_cast<long>(todo.size()); ++t) {
    const auto& [i, j] = todo[t];
    try {
      Polyhedron x = intersect_dedup(fan.cones[i].poly, fan.cones[j].poly);
      MeetInfo info = meet_info(x);
      dims[t] = info.dim;
      // the minimal face of either side at a relative-interior point of the
      // intersection must be the intersection: the intersection lies inside
      // that face automatically (a row tight at such a point is tight
      // throughout), so each face only needs to land in the other cone
      if (!poly_subset(face_at(fan.cones[i].poly, info.point), fan.cones[j].poly) ||
          !poly_subset(face_at(fan.cones[j].poly, info.point), fan.cones[i].poly))
        throw std::logic_error("cones do not meet along a common face");
    } catch (const std::exception& e) {
      errors[t] = e.what();
    }
  }
  for (const std::string& e : errors)
    if (!e.empty()) throw std::logic_error(e);
  for (std::size_t t = 0; t < todo.size(); ++t)
    fan.incidence[todo[t].first][todo[t].second] =
        fan.incidence[todo[t].second][todo[t].first] = dims[t];
  // containment needs the meet to be the smaller cone, so the incidence
  // entry prunes almost every candidate pair
  fan.maximal.clear();
  for (std::size_t i = 0; i < k; ++i) {
    bool below = false;
    for (std::size_t j = 0; j < k && !below; ++j)
      below = j != i && fan.incidence[i][j] == fan.cones[i].dim &&
              poly_subset(fan.cones[i].poly, fan.cones[j].poly) &&
              !poly_subset(fan.cones[j].poly, fan.cones[i].poly);
    if (!below) fan.maximal.push_back(i);
  }
}

}  // namespace

Fan fan_for_brick(const Multigraph& g, const std::vector<PermissiblePair>& psl,
                  const Brick& b) {
  if (!b.full_dim) throw std::invalid_argument("fan of a degenerate brick");
  Fan fan;
  fan.nedges = g.ne();
  for (std::size_t i = 0; i < psl.size(); ++i) {
    if (!contains_brick(psl[i].chi, b)) continue;
    FanCone fc;
    fc.poly = cone_polyhedron(psl[i].cone);
    fc.dim = affine_dim(fc.poly);
    fc.pairs = {i};
    fan.cones.push_back(std::move(fc));
  }
  if (fan.cones.empty())
    throw std::logic_error("no permissible pair contains the brick");
  finish_fan(fan);
  return fan;
}

Fan canonical_fan(const Multigraph& g, const std::vector<PermissiblePair>& psl,
                  const std::vector<Brick>& bricks) {
  if (bricks.empty()) throw std::invalid_argument("no bricks given");
  int ne = g.ne();
  std::vector<Polyhedron> cur;
  for (std::size_t f = 0; f < bricks.size(); ++f) {
    Fan fb = fan_for_brick(g, psl, bricks[f]);
    std::vector<Polyhedron> mx;
    for (std::size_t i : fb.maximal) mx.push_back(std::move(fb.cones[i].poly));
    if (f == 0) {
      cur = std::move(mx);
      continue;
    }
    std::vector<Polyhedron> next;
    for (const Polyhedron& c : cur)
      for (const Polyhedron& m : mx) {
        Polyhedron x = intersect_dedup(c, m);
        if (full_dim_quick(x)) next.push_back(std::move(x));
      }
    cur = std::move(next);
  }
  Fan fan;
  fan.nedges = ne;
  for (Polyhedron& c : cur) {
    Polyhedron slim = minimize_rows(c);
    bool dup = false;
    for (const FanCone& fc : fan.cones)
      if (poly_equal(slim, fc.poly)) {
        dup = true;
        break;
      }
    if (dup) continue;
    FanCone fc;
    fc.poly = std::move(slim);
    fc.dim = ne;
    fan.cones.push_back(std::move(fc));
  }
  for (FanCone& fc : fan.cones) {
    auto x = interior_point(fc.poly);
    if (!x) throw std::logic_error("chamber with empty interior");
    for (std::size_t i = 0; i < psl.size(); ++i)
      if (interior_membership(psl[i].cone, *x)) fc.pairs.push_back(i);
    for (const Brick& b : bricks) {
      std::size_t hit = 0;
      int count = 0;
      for (std::size_t i : fc.pairs)
        if (contains_brick(psl[i].chi, b)) {
          hit = i;
          ++count;
        }
      if (count != 1)
        throw std::logic_error("expected exactly one pair per brick on each chamber");
      fc.brick_pair[b.key()] = hit;
    }
  }
  finish_fan(fan);
  return fan;
}

std::vector<std::size_t> pairs_at(const std::vector<PermissiblePair>& psl,
                                  const std::vector<Q>& ell) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < psl.size(); ++i)
    if (interior_membership(psl[i].cone, ell)) out.push_back(i);
  return out;
}

}  // namespace lcs
