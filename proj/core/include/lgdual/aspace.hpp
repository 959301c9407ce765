#pragma once

// Finite discrete a-spaces: a point set with a denominator function into the
// divisibility lattice. Every subset of a finite discrete space is clopen.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lgdual/rational.hpp"

namespace lgdual {

// Subset of a FinASpace, indexed by point position.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe, bool filled = false) : bits_(universe, filled) {}

  static PointSet singleton(std::size_t universe, std::size_t i) {
    PointSet s(universe);
    s.insert(i);
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  bool contains(std::size_t i) const { return bits_[i]; }
  void insert(std::size_t i) { bits_[i] = true; }
  void erase(std::size_t i) { bits_[i] = false; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<std::size_t> indices() const;

  PointSet operator|(const PointSet& o) const;
  PointSet operator&(const PointSet& o) const;
  PointSet operator-(const PointSet& o) const;
  PointSet complement() const;
  bool subset_of(const PointSet& o) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<bool> bits_;
};

class FinASpace {
 public:
  struct Point {
    std::string label;
    DivNat zeta;
  };

  FinASpace() = default;
  // Throws InputError on duplicate labels.
  explicit FinASpace(std::vector<Point> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<Point>& points() const { return points_; }
  const std::string& label(std::size_t i) const { return points_[i].label; }
  const DivNat& zeta(std::size_t i) const { return points_[i].zeta; }

  // Throws InputError for unknown labels.
  std::size_t index_of(const std::string& label) const;
  bool has_label(const std::string& label) const { return index_.count(label) != 0; }

  PointSet none() const { return PointSet(size()); }
  PointSet all() const { return PointSet(size(), true); }
  PointSet subset(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const PointSet& s) const;

  friend bool operator==(const FinASpace& a, const FinASpace& b);

 private:
  std::vector<Point> points_;
  std::map<std::string, std::size_t> index_;
};

// A map between finite a-spaces given by point indices.
struct AMapFin {
  FinASpace source;
  FinASpace target;
  std::vector<std::size_t> assignment;  // source index -> target index
};

// True iff zeta_target(f(x)) divides zeta_source(x) for every x. Continuity
// is vacuous on discrete carriers. Throws InputError if the assignment is
// not total or points outside the target.
bool check_amap(const AMapFin& f);

AMapFin identity_map(const FinASpace& x);
// g after f; requires f.target == g.source.
AMapFin compose(const AMapFin& f, const AMapFin& g);

// Cartesian product with zeta(x, y) = lcm(zeta(x), zeta(y)), the initial
// denominator making both projections a-maps. Labels are "(x,y)"; points
// are ordered with the first factor varying slowest.
FinASpace product(const FinASpace& x, const FinASpace& y);
AMapFin projection_first(const FinASpace& x, const FinASpace& y);
AMapFin projection_second(const FinASpace& x, const FinASpace& y);
// The induced map into the product; requires f and g with the same source.
AMapFin pairing(const AMapFin& f, const AMapFin& g);

struct SeparationWitness {
  std::size_t x = 0;
  std::size_t y = 0;
  PointSet u;
  PointSet v;
};

struct ANormalReport {
  bool n1 = true;
  bool n2 = true;
  bool n3_prime = true;
  std::string n1_reason;
  std::string n2_reason;
  std::vector<SeparationWitness> witnesses;  // one per pair x < y: U = {x}, V = X minus {x}
};

ANormalReport verify_anormal(const FinASpace& x);

enum class LeftoverPolicy {
  kNonzeroToU,  // default
  kNonzeroToV,
};

struct Separation {
  PointSet u;
  PointSet v;
};

// Opens U ⊇ A, V ⊇ B, disjoint, with zeta = 0 on everything outside U ∪ V.
// Leftover points with zeta != 0 go to the side picked by `policy`; leftover
// points with zeta = 0 go to neither. Throws PreconditionError if A ∩ B ≠ ∅.
Separation separate(const FinASpace& x, const PointSet& a, const PointSet& b,
                    LeftoverPolicy policy = LeftoverPolicy::kNonzeroToU);

}  // namespace lgdual
