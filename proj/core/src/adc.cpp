#include "lgdual/adc.hpp"

#include <algorithm>

namespace lgdual {

namespace {

bool divides_int(const Int& d, const Int& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

Int lcm_int(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

RatRegion RatRegion::point(const Rat& p) { return RatRegion().add_point(p); }

RatRegion RatRegion::interval(const Rat& lo, const Rat& hi) {
  return RatRegion().add_interval(lo, hi);
}

RatRegion& RatRegion::add_point(const Rat& p) {
  components_.emplace_back(p);
  return *this;
}

RatRegion& RatRegion::add_interval(const Rat& lo, const Rat& hi) {
  if (hi < lo) throw InputError("interval with lo > hi: [" + lo.str() + ", " + hi.str() + "]");
  if (lo == hi)
    components_.emplace_back(lo);
  else
    components_.emplace_back(RatInterval{lo, hi});
  return *this;
}

RatRegion RatRegion::unite(const RatRegion& o) const {
  RatRegion r = *this;
  r.components_.insert(r.components_.end(), o.components_.begin(), o.components_.end());
  return r;
}

bool RatRegion::contains(const Rat& r) const {
  for (const auto& c : components_) {
    if (const auto* p = std::get_if<Rat>(&c)) {
      if (*p == r) return true;
    } else {
      const auto& iv = std::get<RatInterval>(c);
      if (iv.lo <= r && r <= iv.hi) return true;
    }
  }
  return false;
}

AdcSet AdcSet::multiples_of(const DivNat& d) {
  if (d.is_top()) throw InputError("M(0) is not an admissible upset generator");
  AdcSet s;
  s.upsets_.push_back(d);
  s.nonempty_ = true;
  return s;
}

AdcSet AdcSet::cofinite(std::vector<Int> exclusions) {
  std::sort(exclusions.begin(), exclusions.end());
  exclusions.erase(std::unique(exclusions.begin(), exclusions.end()), exclusions.end());
  if (!exclusions.empty() && exclusions.front() <= 0)
    throw InputError("cofinite exclusions must be positive");
  AdcSet s;
  s.cofinite_ = std::move(exclusions);
  s.nonempty_ = true;
  return s;
}

const std::vector<Int>& AdcSet::exclusions() const {
  static const std::vector<Int> kNone;
  return cofinite_ ? *cofinite_ : kNone;
}

AdcSet AdcSet::unite(const AdcSet& o) const {
  AdcSet r;
  r.nonempty_ = nonempty_ || o.nonempty_;
  std::vector<DivNat> gens = upsets_;
  gens.insert(gens.end(), o.upsets_.begin(), o.upsets_.end());

  if (cofinite_ || o.cofinite_) {
    // (N \ F1) ∪ (N \ F2) = N \ (F1 ∩ F2); then drop what the upsets cover.
    std::vector<Int> f;
    if (cofinite_ && o.cofinite_) {
      std::set_intersection(cofinite_->begin(), cofinite_->end(), o.cofinite_->begin(),
                            o.cofinite_->end(), std::back_inserter(f));
    } else {
      f = cofinite_ ? *cofinite_ : *o.cofinite_;
    }
    std::erase_if(f, [&](const Int& n) {
      return std::any_of(gens.begin(), gens.end(),
                         [&](const DivNat& d) { return divides_int(d.value(), n); });
    });
    r.cofinite_ = std::move(f);
    return r;
  }

  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const auto& g : gens) {
    bool redundant = std::any_of(r.upsets_.begin(), r.upsets_.end(),
                                 [&](const DivNat& d) { return divides(d, g); });
    if (!redundant) r.upsets_.push_back(g);
  }
  return r;
}

bool AdcSet::contains(const DivNat& n) const {
  if (n.is_top()) return nonempty_;
  if (cofinite_) return !std::binary_search(cofinite_->begin(), cofinite_->end(), n.value());
  return std::any_of(upsets_.begin(), upsets_.end(),
                     [&](const DivNat& d) { return divides(d, n); });
}

Int AdcSet::comparison_bound() const {
  Int bound = 1;
  if (cofinite_ && !cofinite_->empty()) bound = cofinite_->back();
  Int period = 1;
  for (const auto& d : upsets_) period = lcm_int(period, d.value());
  return bound + period;
}

bool adc_equivalent(const AdcSet& a, const AdcSet& b) {
  Int bound = std::max(a.comparison_bound(), b.comparison_bound());
  for (Int n = 0; n <= bound; ++n) {
    DivNat dn(n);
    if (a.contains(dn) != b.contains(dn)) return false;
  }
  return true;
}

bool adc_intersection_contains(std::span<const AdcSet> sets, const DivNat& n) {
  return std::all_of(sets.begin(), sets.end(), [&](const AdcSet& s) { return s.contains(n); });
}

bool grid_meets(const Rat& lo, const Rat& hi, const Int& n) {
  return (lo * Rat(n)).ceil() <= (hi * Rat(n)).floor();
}

std::vector<Int> interval_exclusions(const Rat& lo, const Rat& hi) {
  // Every n >= 1/(hi - lo) has a grid point inside.
  Int k = (Rat(1) / (hi - lo)).ceil();
  std::vector<Int> out;
  for (Int n = 1; n < k; ++n)
    if (!grid_meets(lo, hi, n)) out.push_back(n);
  return out;
}

AdcSet adc(const RatRegion& region) {
  AdcSet s = AdcSet::empty_set();
  for (const auto& c : region.components()) {
    if (const auto* p = std::get_if<Rat>(&c)) {
      s = s.unite(AdcSet::multiples_of(den_rat(*p)));
    } else {
      const auto& iv = std::get<RatInterval>(c);
      s = s.unite(AdcSet::cofinite(interval_exclusions(iv.lo, iv.hi)));
    }
  }
  return s;
}

bool adc_contains(const AdcSet& s, const DivNat& n) { return s.contains(n); }

bool region_admits(const RatRegion& region, const DivNat& n) {
  if (n.is_top()) return !region.empty();
  for (const auto& c : region.components()) {
    if (const auto* p = std::get_if<Rat>(&c)) {
      if (divides(den_rat(*p), n)) return true;
    } else {
      const auto& iv = std::get<RatInterval>(c);
      if (grid_meets(iv.lo, iv.hi, n.value())) return true;
    }
  }
  return false;
}

bool is_lower_directed(std::span<const RatInterval> family) {
  for (const auto& i : family) {
    for (const auto& j : family) {
      Rat lo = max(i.lo, j.lo);
      Rat hi = min(i.hi, j.hi);
      bool found = std::any_of(family.begin(), family.end(), [&](const RatInterval& k) {
        return k.lo <= k.hi && lo <= k.lo && k.hi <= hi;
      });
      if (!found) return false;
    }
  }
  return true;
}

AdcSet adc_intersect_intervals(std::span<const RatInterval> family) {
  if (family.empty())
    throw PreconditionError("nonempty family", "adc_intersect_intervals: empty family");
  for (const auto& iv : family)
    if (iv.hi < iv.lo) throw InputError("interval with lo > hi");
  // Closing the family under intersections makes it lower directed exactly
  // when no two members are disjoint.
  for (const auto& i : family) {
    for (const auto& j : family) {
      if (min(i.hi, j.hi) < max(i.lo, j.lo)) {
        throw PreconditionError("lower directed", "adc_intersect_intervals: [" + i.lo.str() + ", " +
                                                      i.hi.str() + "] and [" + j.lo.str() + ", " +
                                                      j.hi.str() + "] are disjoint");
      }
    }
  }
  Rat lo = family.front().lo;
  Rat hi = family.front().hi;
  for (const auto& iv : family) {
    lo = max(lo, iv.lo);
    hi = min(hi, iv.hi);
  }
  if (hi < lo) return AdcSet::empty_set();
  return adc(RatRegion::interval(lo, hi));
}

PointSet ac(const FinASpace& x, const RatRegion& region) {
  AdcSet s = adc(region);
  PointSet out = x.none();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (s.contains(x.zeta(i))) out.insert(i);
  return out;
}

PointSet ac_interval(const FinASpace& x, const Rat& lo, const Rat& hi) {
  return ac(x, RatRegion::interval(lo, hi));
}

}  // namespace lgdual
