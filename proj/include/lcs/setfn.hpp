#pragma once
// Set-function calculus on a small ground set: submodularity, adjoints,
// UpMin/DownSum transforms, simpleness, base polytopes. Subsets are bitmasks
// over the ground ordering; tables are dense (n <= 20).

#include <cstdint>
#include <string>
#include <vector>

#include "lcs/rat.hpp"

namespace lcs {

using Subset = std::uint32_t;

struct GroundSet {
  std::vector<std::string> labels;  // pairwise distinct, 1 <= n <= 20

  int n() const { return static_cast<int>(labels.size()); }
  Subset full() const { return (Subset{1} << n()) - 1; }
  // -1 if absent.
  int index_of(const std::string& label) const;
  void validate() const;  // throws std::invalid_argument

  // Canonical subset key: labels in ground order, comma-joined; "" for the
  // empty set. parse accepts any order of known labels.
  std::string subset_key(Subset s) const;
  Subset parse_subset(const std::string& key) const;

  bool operator==(const GroundSet&) const = default;
};

struct SetFnProps {
  bool submodular = false, supermodular = false, nondecreasing = false;
  bool nonnegative = false, positive = false, simple = false;
  Q range;
};

class SetFn {
 public:
  SetFn() = default;
  explicit SetFn(GroundSet g);  // zero function
  static SetFn modular(const GroundSet& g, const std::vector<Q>& point);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.n(); }
  Subset full() const { return ground_.full(); }
  std::size_t table_size() const { return values_.size(); }

  const Q& operator()(Subset s) const { return values_[s]; }
  Q& at(Subset s) { return values_[s]; }

  SetFnProps properties() const;
  bool is_submodular() const;
  bool is_supermodular() const;
  bool is_nondecreasing() const;
  bool is_simple() const;  // vacuously true for n = 1

  SetFn adjoint() const;       // f*(I) = f(V) - f(complement of I)
  SetFn upmin() const;         // superset-min sweep, O(2^n n)
  SetFn upmin_naive() const;   // O(4^n) oracle kept for tests
  SetFn downsum() const;       // subset-sum transform
  Q range() const { return values_.back(); }

  SetFn operator+(const SetFn& o) const;
  SetFn operator-(const SetFn& o) const;
  bool operator==(const SetFn& o) const;
  bool leq(const SetFn& o) const;  // pointwise <=

  // True iff f - g is modular (determined by singleton increments from 0).
  static bool difference_modular(const SetFn& f, const SetFn& g);

 private:
  GroundSet ground_;
  std::vector<Q> values_;
};

// xi_J: 0 on subsets not containing J, -1 on supersets of J. J = empty is
// rejected (it would force a nonzero value on the empty set).
SetFn xi_of(const GroundSet& g, Subset J);

SetFn characteristic(const GroundSet& g, Subset J);  // indicator of the single subset J

struct PolytopeH {
  GroundSet ground;
  struct Row {
    std::vector<Q> coeff;  // length n
    Q rhs;
  };
  std::vector<Row> ineqs;  // coeff . q <= rhs
  std::vector<Row> eqs;    // coeff . q == rhs
};

// One inequality q(S) <= f(S) per proper nonempty S, the equality q(V) = f(V).
// Throws if f is not submodular.
PolytopeH polytope_hrep(const SetFn& f);

bool polytope_contains(const PolytopeH& p, const std::vector<Q>& q);

inline int popcount(Subset s) { return __builtin_popcount(s); }

}  // namespace lcs
