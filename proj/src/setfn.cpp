#include "lcs/setfn.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lcs {

int GroundSet::index_of(const std::string& label) const {
  for (int i = 0; i < n(); ++i)
    if (labels[i] == label) return i;
  return -1;
}

void GroundSet::validate() const {
  if (labels.empty() || labels.size() > 20)
    throw std::invalid_argument("ground set size must be in 1..20");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size())
    throw std::invalid_argument("ground set labels must be distinct");
}

std::string GroundSet::subset_key(Subset s) const {
  std::string key;
  for (int i = 0; i < n(); ++i) {
    if (!(s >> i & 1)) continue;
    if (!key.empty()) key += ',';
    key += labels[i];
  }
  return key;
}

Subset GroundSet::parse_subset(const std::string& key) const {
  Subset s = 0;
  std::stringstream ss(key);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty label in subset key");
    int i = index_of(item);
    if (i < 0) throw std::invalid_argument("unknown label: " + item);
    if (s >> i & 1) throw std::invalid_argument("repeated label: " + item);
    s |= Subset{1} << i;
  }
  return s;
}

SetFn::SetFn(GroundSet g) : ground_(std::move(g)) {
  ground_.validate();
  values_.assign(std::size_t{1} << ground_.n(), Q(0));
}

SetFn SetFn::modular(const GroundSet& g, const std::vector<Q>& point) {
  if (static_cast<int>(point.size()) != g.n())
    throw std::invalid_argument("modular: point size mismatch");
  SetFn f(g);
  for (Subset s = 1; s <= f.full(); ++s) {
    Q acc = 0;
    for (int i = 0; i < g.n(); ++i)
      if (s >> i & 1) acc += point[i];
    f.at(s) = acc;
  }
  return f;
}

bool SetFn::is_submodular() const {
  // Local characterization: f(I+a) + f(I+b) >= f(I+a+b) + f(I) for all I and
  // a != b outside I.
  const int nn = n();
  for (Subset i = 0; i <= full(); ++i)
    for (int a = 0; a < nn; ++a) {
      if (i >> a & 1) continue;
      for (int b = a + 1; b < nn; ++b) {
        if (i >> b & 1) continue;
        Subset ia = i | Subset{1} << a, ib = i | Subset{1} << b;
        if (values_[ia] + values_[ib] < values_[ia | ib] + values_[i]) return false;
      }
    }
  return true;
}

bool SetFn::is_supermodular() const {
  const int nn = n();
  for (Subset i = 0; i <= full(); ++i)
    for (int a = 0; a < nn; ++a) {
      if (i >> a & 1) continue;
      for (int b = a + 1; b < nn; ++b) {
        if (i >> b & 1) continue;
        Subset ia = i | Subset{1} << a, ib = i | Subset{1} << b;
        if (values_[ia] + values_[ib] > values_[ia | ib] + values_[i]) return false;
      }
    }
  return true;
}

bool SetFn::is_nondecreasing() const {
  for (Subset i = 0; i <= full(); ++i)
    for (int a = 0; a < n(); ++a) {
      if (i >> a & 1) continue;
      if (values_[i | Subset{1} << a] < values_[i]) return false;
    }
  return true;
}

bool SetFn::is_simple() const {
  if (n() == 1) return true;
  const Q& total = values_.back();
  for (Subset i = 1; i < full(); ++i) {
    Subset c = full() & ~i;
    if (i > c) continue;  // each bipartition once
    if (!(values_[i] + values_[c] > total)) return false;
  }
  return true;
}

SetFnProps SetFn::properties() const {
  SetFnProps p;
  p.submodular = is_submodular();
  p.supermodular = is_supermodular();
  p.nondecreasing = is_nondecreasing();
  p.nonnegative = true;
  p.positive = true;
  for (Subset i = 0; i <= full(); ++i) {
    if (values_[i] < 0) p.nonnegative = false;
    if (i != 0 && !(values_[i] > 0)) p.positive = false;
  }
  p.simple = is_simple();
  p.range = values_.back();
  return p;
}

SetFn SetFn::adjoint() const {
  SetFn r(ground_);
  const Q& total = values_.back();
  for (Subset i = 0; i <= full(); ++i) r.at(i) = total - values_[full() & ~i];
  return r;
}

SetFn SetFn::upmin() const {
  SetFn r = *this;
  for (int a = 0; a < n(); ++a) {
    const Subset bit = Subset{1} << a;
    for (Subset i = 0; i <= full(); ++i) {
      if (i & bit) continue;
      if (r.values_[i | bit] < r.values_[i]) r.values_[i] = r.values_[i | bit];
    }
  }
  return r;
}

SetFn SetFn::upmin_naive() const {
  SetFn r(ground_);
  for (Subset i = 0; i <= full(); ++i) {
    Q best = values_[i];
    // Supersets of i: iterate over subsets of the complement.
    Subset comp = full() & ~i;
    for (Subset extra = comp;; extra = (extra - 1) & comp) {
      if (values_[i | extra] < best) best = values_[i | extra];
      if (extra == 0) break;
    }
    r.at(i) = best;
  }
  return r;
}

SetFn SetFn::downsum() const {
  SetFn r = *this;
  for (int a = 0; a < n(); ++a) {
    const Subset bit = Subset{1} << a;
    for (Subset i = 0; i <= full(); ++i)
      if (i & bit) r.values_[i] += r.values_[i & ~bit];
  }
  return r;
}

SetFn SetFn::operator+(const SetFn& o) const {
  if (!(ground_ == o.ground_)) throw std::invalid_argument("ground mismatch");
  SetFn r = *this;
  for (Subset i = 0; i <= full(); ++i) r.values_[i] += o.values_[i];
  return r;
}

SetFn SetFn::operator-(const SetFn& o) const {
  if (!(ground_ == o.ground_)) throw std::invalid_argument("ground mismatch");
  SetFn r = *this;
  for (Subset i = 0; i <= full(); ++i) r.values_[i] -= o.values_[i];
  return r;
}

bool SetFn::operator==(const SetFn& o) const {
  return ground_ == o.ground_ && values_ == o.values_;
}

bool SetFn::leq(const SetFn& o) const {
  if (!(ground_ == o.ground_)) throw std::invalid_argument("ground mismatch");
  for (Subset i = 0; i <= full(); ++i)
    if (values_[i] > o.values_[i]) return false;
  return true;
}

bool SetFn::difference_modular(const SetFn& f, const SetFn& g) {
  SetFn d = f - g;
  // Modular iff d(I) = sum of singleton values (d(empty) = 0 required).
  if (d(0) != 0) return false;
  for (Subset i = 0; i <= d.full(); ++i) {
    Q acc = 0;
    for (int a = 0; a < d.n(); ++a)
      if (i >> a & 1) acc += d(Subset{1} << a);
    if (d(i) != acc) return false;
  }
  return true;
}

SetFn xi_of(const GroundSet& g, Subset J) {
  if (J == 0) throw std::invalid_argument("xi of the empty set is rejected");
  SetFn f(g);
  for (Subset i = 0; i <= f.full(); ++i)
    if ((i & J) == J) f.at(i) = -1;
  return f;
}

SetFn characteristic(const GroundSet& g, Subset J) {
  // Indicator of the single subset J (so that -downsum of it equals xi_J).
  SetFn f(g);
  f.at(J) = 1;
  return f;
}

PolytopeH polytope_hrep(const SetFn& f) {
  if (!f.is_submodular()) throw std::invalid_argument("polytope_hrep needs a submodular function");
  PolytopeH p;
  p.ground = f.ground();
  const int nn = f.n();
  for (Subset s = 1; s < f.full(); ++s) {
    PolytopeH::Row row;
    row.coeff.assign(nn, Q(0));
    for (int i = 0; i < nn; ++i)
      if (s >> i & 1) row.coeff[i] = 1;
    row.rhs = f(s);
    p.ineqs.push_back(std::move(row));
  }
  PolytopeH::Row veq;
  veq.coeff.assign(nn, Q(1));
  veq.rhs = f(f.full());
  p.eqs.push_back(std::move(veq));
  return p;
}

bool polytope_contains(const PolytopeH& p, const std::vector<Q>& q) {
  if (static_cast<int>(q.size()) != p.ground.n())
    throw std::invalid_argument("point dimension mismatch");
  auto dot = [&](const PolytopeH::Row& r) {
    Q acc = 0;
    for (size_t i = 0; i < q.size(); ++i) acc += r.coeff[i] * q[i];
    return acc;
  };
  for (const auto& r : p.ineqs)
    if (dot(r) > r.rhs) return false;
  for (const auto& r : p.eqs)
    if (dot(r) != r.rhs) return false;
  return true;
}

}  // namespace lcs
