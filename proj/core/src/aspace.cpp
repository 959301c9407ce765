#include "lgdual/aspace.hpp"

#include <algorithm>

namespace lgdual {

std::size_t PointSet::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<std::size_t> PointSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(i);
  return out;
}

PointSet PointSet::operator|(const PointSet& o) const {
  PointSet r(universe());
  for (std::size_t i = 0; i < universe(); ++i) r.bits_[i] = bits_[i] || o.bits_[i];
  return r;
}

PointSet PointSet::operator&(const PointSet& o) const {
  PointSet r(universe());
  for (std::size_t i = 0; i < universe(); ++i) r.bits_[i] = bits_[i] && o.bits_[i];
  return r;
}

PointSet PointSet::operator-(const PointSet& o) const {
  PointSet r(universe());
  for (std::size_t i = 0; i < universe(); ++i) r.bits_[i] = bits_[i] && !o.bits_[i];
  return r;
}

PointSet PointSet::complement() const {
  PointSet r(universe());
  for (std::size_t i = 0; i < universe(); ++i) r.bits_[i] = !bits_[i];
  return r;
}

bool PointSet::subset_of(const PointSet& o) const {
  for (std::size_t i = 0; i < universe(); ++i)
    if (bits_[i] && !o.bits_[i]) return false;
  return true;
}

FinASpace::FinASpace(std::vector<Point> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!index_.emplace(points_[i].label, i).second)
      throw InputError("duplicate point label \"" + points_[i].label + "\"");
  }
}

std::size_t FinASpace::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw InputError("unknown point label \"" + label + "\"");
  return it->second;
}

PointSet FinASpace::subset(const std::vector<std::string>& labels) const {
  PointSet s = none();
  for (const auto& l : labels) s.insert(index_of(l));
  return s;
}

std::vector<std::string> FinASpace::labels_of(const PointSet& s) const {
  std::vector<std::string> out;
  for (auto i : s.indices()) out.push_back(points_[i].label);
  return out;
}

bool operator==(const FinASpace& a, const FinASpace& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.points_[i].label != b.points_[i].label || a.points_[i].zeta != b.points_[i].zeta)
      return false;
  }
  return true;
}

bool check_amap(const AMapFin& f) {
  if (f.assignment.size() != f.source.size())
    throw InputError("a-map assignment is not total on the source");
  for (std::size_t i = 0; i < f.assignment.size(); ++i) {
    std::size_t j = f.assignment[i];
    if (j >= f.target.size()) throw InputError("a-map sends a point outside the target");
    if (!divides(f.target.zeta(j), f.source.zeta(i))) return false;
  }
  return true;
}

AMapFin identity_map(const FinASpace& x) {
  AMapFin f{x, x, {}};
  for (std::size_t i = 0; i < x.size(); ++i) f.assignment.push_back(i);
  return f;
}

AMapFin compose(const AMapFin& f, const AMapFin& g) {
  if (!(f.target == g.source)) throw InputError("compose: codomain and domain differ");
  AMapFin h{f.source, g.target, {}};
  for (auto j : f.assignment) h.assignment.push_back(g.assignment.at(j));
  return h;
}

FinASpace product(const FinASpace& x, const FinASpace& y) {
  std::vector<FinASpace::Point> pts;
  pts.reserve(x.size() * y.size());
  for (const auto& p : x.points())
    for (const auto& q : y.points())
      pts.push_back({"(" + p.label + "," + q.label + ")", lcm_div(p.zeta, q.zeta)});
  return FinASpace(std::move(pts));
}

AMapFin projection_first(const FinASpace& x, const FinASpace& y) {
  AMapFin f{product(x, y), x, {}};
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) f.assignment.push_back(i);
  return f;
}

AMapFin projection_second(const FinASpace& x, const FinASpace& y) {
  AMapFin f{product(x, y), y, {}};
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) f.assignment.push_back(j);
  return f;
}

AMapFin pairing(const AMapFin& f, const AMapFin& g) {
  if (!(f.source == g.source)) throw InputError("pairing: maps have different sources");
  AMapFin h{f.source, product(f.target, g.target), {}};
  for (std::size_t i = 0; i < f.source.size(); ++i)
    h.assignment.push_back(f.assignment.at(i) * g.target.size() + g.assignment.at(i));
  return h;
}

ANormalReport verify_anormal(const FinASpace& x) {
  ANormalReport r;
  r.n1_reason = "finite discrete carrier: compact Hausdorff";
  r.n2_reason = "discrete topology: every preimage zeta^-1[DIV(J)] is closed";
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      SeparationWitness w{i, j, PointSet::singleton(x.size(), i), x.all()};
      w.v.erase(i);
      r.witnesses.push_back(std::move(w));
    }
  }
  return r;
}

Separation separate(const FinASpace& x, const PointSet& a, const PointSet& b,
                    LeftoverPolicy policy) {
  PointSet overlap = a & b;
  if (!overlap.empty()) {
    throw PreconditionError("A∩B=∅", "separate: A and B share point \"" +
                                         x.label(overlap.indices().front()) + "\"");
  }
  Separation s{a, b};
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (a.contains(i) || b.contains(i) || x.zeta(i).is_top()) continue;
    if (policy == LeftoverPolicy::kNonzeroToU)
      s.u.insert(i);
    else
      s.v.insert(i);
  }
  return s;
}

}  // namespace lgdual
