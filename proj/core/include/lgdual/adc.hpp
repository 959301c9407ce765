#pragma once

// Admissible denominators. ADC(R) is the set of n such that some rational in
// R has a denominator dividing n; AC(R) pulls it back along zeta.

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "lgdual/aspace.hpp"
#include "lgdual/rational.hpp"

namespace lgdual {

struct RatInterval {
  Rat lo;
  Rat hi;
  friend bool operator==(const RatInterval&, const RatInterval&) = default;
};

// Finite union of rational points and nondegenerate rational closed intervals.
class RatRegion {
 public:
  using Component = std::variant<Rat, RatInterval>;

  RatRegion() = default;

  static RatRegion point(const Rat& p);
  static RatRegion interval(const Rat& lo, const Rat& hi);

  // Degenerate intervals are stored as points; lo > hi throws InputError.
  RatRegion& add_point(const Rat& p);
  RatRegion& add_interval(const Rat& lo, const Rat& hi);
  RatRegion unite(const RatRegion& o) const;

  bool empty() const { return components_.empty(); }
  const std::vector<Component>& components() const { return components_; }
  bool contains(const Rat& r) const;

  friend bool operator==(const RatRegion&, const RatRegion&) = default;

 private:
  std::vector<Component> components_;
};

// Union of upsets M(d) = {n : d | n} or a cofinite set N \ F. The form is
// kept canonical: a cofinite part absorbs every upset, and upset generators
// form an antichain under divisibility.
class AdcSet {
 public:
  static AdcSet empty_set() { return AdcSet(); }
  // M(d) for d >= 1.
  static AdcSet multiples_of(const DivNat& d);
  // N \ F; F must not contain 0.
  static AdcSet cofinite(std::vector<Int> exclusions);

  AdcSet unite(const AdcSet& o) const;
  bool contains(const DivNat& n) const;

  bool contains_zero() const { return nonempty_; }
  bool is_cofinite() const { return cofinite_.has_value(); }
  // Sorted ascending; empty when is_cofinite().
  const std::vector<DivNat>& upsets() const { return upsets_; }
  // Sorted ascending; only meaningful when is_cofinite().
  const std::vector<Int>& exclusions() const;

  // Membership of two AdcSets agrees everywhere iff it agrees on
  // [0, comparison_bound]: past max(F) a cofinite part is constant and
  // upset membership is periodic in lcm of the generators.
  Int comparison_bound() const;

 private:
  std::vector<DivNat> upsets_;
  std::optional<std::vector<Int>> cofinite_;
  bool nonempty_ = false;
};

bool adc_equivalent(const AdcSet& a, const AdcSet& b);

// Membership in the intersection of several AdcSets.
bool adc_intersection_contains(std::span<const AdcSet> sets, const DivNat& n);

// Exclusion set of ADC([lo, hi]) for lo < hi: n >= 1 with ceil(n lo) > floor(n hi).
std::vector<Int> interval_exclusions(const Rat& lo, const Rat& hi);

// Does the lattice (1/n)Z meet [lo, hi]? n must be >= 1.
bool grid_meets(const Rat& lo, const Rat& hi, const Int& n);

AdcSet adc(const RatRegion& region);
bool adc_contains(const AdcSet& s, const DivNat& n);

// Membership decided straight from the region, without building an AdcSet.
bool region_admits(const RatRegion& region, const DivNat& n);

// ADC of the intersection of a nonempty family of closed intervals. The
// family must become lower directed once closed under intersections, i.e.
// no two members may be disjoint; PreconditionError otherwise.
AdcSet adc_intersect_intervals(std::span<const RatInterval> family);
// Every pairwise intersection contains a member of the family.
bool is_lower_directed(std::span<const RatInterval> family);

PointSet ac(const FinASpace& x, const RatRegion& region);
// AC of a single closed interval [lo, hi] (a point when lo = hi).
PointSet ac_interval(const FinASpace& x, const Rat& lo, const Rat& hi);

}  // namespace lgdual
