#include "lgdual/draft.hpp"

#include <algorithm>

namespace lgdual {

namespace {

std::string pt(const FinASpace& x, std::size_t i) { return "\"" + x.label(i) + "\""; }

DraftDiagnostic fail(DraftCheck c, std::string msg, std::optional<Rat> r = std::nullopt,
                     std::optional<Rat> s = std::nullopt,
                     std::optional<std::size_t> point = std::nullopt) {
  DraftDiagnostic d;
  d.status = c;
  d.r = std::move(r);
  d.s = std::move(s);
  d.point = point;
  d.message = std::move(msg);
  return d;
}

Draft refine_unchecked(const Draft& d, const Rat& lambda, LeftoverPolicy policy) {
  if (d.levels.count(lambda) != 0) {
    throw PreconditionError("λ∉D", "refine_at: " + lambda.str() + " is already a level");
  }
  if (!(d.alpha < lambda && lambda < d.beta)) {
    throw PreconditionError("α<λ<β", "refine_at: " + lambda.str() + " lies outside (" +
                                         d.alpha.str() + ", " + d.beta.str() + ")");
  }
  auto above = d.levels.upper_bound(lambda);
  auto below = std::prev(above);
  const Rat& a = below->first;
  const Rat& b = above->first;
  const Level& la = below->second;
  const Level& lb = above->second;

  const FinASpace& x = d.space;
  PointSet middle = la.up & lb.down;
  PointSet set_a = la.down | (middle - ac_interval(x, lambda, b));
  PointSet set_b = lb.up | (middle - ac_interval(x, a, lambda));
  Separation sep = separate(x, set_a, set_b, policy);

  Draft out = d;
  out.levels.emplace(lambda, Level{sep.v.complement(), sep.u.complement()});
  return out;
}

}  // namespace

const char* to_string(DraftCheck c) {
  switch (c) {
    case DraftCheck::kValid: return "valid";
    case DraftCheck::kStructure: return "structure";
    case DraftCheck::kD1: return "D1";
    case DraftCheck::kD2: return "D2";
    case DraftCheck::kD3: return "D3";
    case DraftCheck::kD4: return "D4";
  }
  return "?";
}

DraftDiagnostic validate_draft(const Draft& d) {
  const FinASpace& x = d.space;
  if (d.beta < d.alpha) return fail(DraftCheck::kStructure, "alpha > beta");
  if (d.levels.count(d.alpha) == 0)
    return fail(DraftCheck::kStructure, "alpha " + d.alpha.str() + " is not a level");
  if (d.levels.count(d.beta) == 0)
    return fail(DraftCheck::kStructure, "beta " + d.beta.str() + " is not a level");
  for (const auto& [r, lv] : d.levels) {
    if (r < d.alpha || d.beta < r)
      return fail(DraftCheck::kStructure, "level " + r.str() + " lies outside [alpha, beta]", r);
    if (lv.down.universe() != x.size() || lv.up.universe() != x.size())
      return fail(DraftCheck::kStructure, "level " + r.str() + " has the wrong universe", r);
  }

  const PointSet all = x.all();
  const Level& at_alpha = d.levels.at(d.alpha);
  const Level& at_beta = d.levels.at(d.beta);
  if (!(at_alpha.up == all)) {
    auto i = (all - at_alpha.up).indices().front();
    return fail(DraftCheck::kD1, "D1 violated: point " + pt(x, i) + " missing from up(alpha)",
                d.alpha, std::nullopt, i);
  }
  if (!(at_beta.down == all)) {
    auto i = (all - at_beta.down).indices().front();
    return fail(DraftCheck::kD1, "D1 violated: point " + pt(x, i) + " missing from down(beta)",
                d.beta, std::nullopt, i);
  }

  for (const auto& [r, lv] : d.levels) {
    PointSet missing = all - (lv.down | lv.up);
    if (!missing.empty()) {
      auto i = missing.indices().front();
      return fail(DraftCheck::kD2,
                  "D2 violated at r=" + r.str() + ", point " + pt(x, i) + " in neither set", r,
                  std::nullopt, i);
    }
  }

  for (auto it = d.levels.begin(); it != d.levels.end(); ++it) {
    for (auto jt = std::next(it); jt != d.levels.end(); ++jt) {
      PointSet both = it->second.down & jt->second.up;
      if (!both.empty()) {
        auto i = both.indices().front();
        return fail(DraftCheck::kD3,
                    "D3 violated at r=" + it->first.str() + ", s=" + jt->first.str() +
                        ", point " + pt(x, i),
                    it->first, jt->first, i);
      }
    }
  }

  for (auto it = d.levels.begin(); it != d.levels.end(); ++it) {
    for (auto jt = it; jt != d.levels.end(); ++jt) {
      PointSet between = it->second.up & jt->second.down;
      PointSet bad = between - ac_interval(x, it->first, jt->first);
      if (!bad.empty()) {
        auto i = bad.indices().front();
        return fail(DraftCheck::kD4,
                    "D4 violated at r=" + it->first.str() + ", s=" + jt->first.str() +
                        ", point " + pt(x, i),
                    it->first, jt->first, i);
      }
    }
  }
  return {};
}

bool refines(const Draft& finer, const Draft& coarser) {
  if (!(finer.space == coarser.space) || finer.alpha != coarser.alpha ||
      finer.beta != coarser.beta)
    return false;
  for (const auto& [r, lv] : coarser.levels) {
    auto it = finer.levels.find(r);
    if (it == finer.levels.end() || !(it->second == lv)) return false;
  }
  return true;
}

Draft refine_at(const Draft& d, const Rat& lambda, LeftoverPolicy policy) {
  DraftDiagnostic diag = validate_draft(d);
  if (!diag.ok()) throw PreconditionError(to_string(diag.status), diag.message);
  return refine_unchecked(d, lambda, policy);
}

Draft refine_sequence(const Draft& d, const std::vector<Rat>& lambdas, LeftoverPolicy policy) {
  DraftDiagnostic diag = validate_draft(d);
  if (!diag.ok()) throw PreconditionError(to_string(diag.status), diag.message);
  Draft cur = d;
  for (const auto& lambda : lambdas) {
    if (cur.levels.count(lambda) != 0) continue;
    cur = refine_unchecked(cur, lambda, policy);
  }
  return cur;
}

bool is_amap_into(const RatFunction& f) {
  if (f.values.size() != f.space.size()) return false;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const Rat& v = f.values[i];
    if (v < f.lo || f.hi < v) return false;
    if (!divides(den_rat(v), f.space.zeta(i))) return false;
  }
  return true;
}

bool realises(const RatFunction& f, const Draft& d) {
  if (f.values.size() != d.space.size()) return false;
  for (const auto& [r, lv] : d.levels) {
    for (std::size_t i = 0; i < f.values.size(); ++i) {
      const Rat& v = f.values[i];
      if (lv.down.contains(i) && (v < d.alpha || r < v)) return false;
      if (lv.up.contains(i) && (v < r || d.beta < v)) return false;
    }
  }
  return true;
}

std::optional<Rat> admissible_value(const Rat& lo, const Rat& hi, const DivNat& zeta) {
  if (hi < lo) return std::nullopt;
  if (lo == hi) {
    if (divides(den_rat(lo), zeta)) return lo;
    return std::nullopt;
  }
  // Past k every grid (1/n)Z meets [lo, hi].
  Int k = (Rat(1) / (hi - lo)).ceil();
  auto at = [&](const Int& n) { return Rat((lo * Rat(n)).ceil(), n); };

  if (zeta.is_top()) {
    for (Int n = 1;; ++n)
      if (grid_meets(lo, hi, n)) return at(n);
  }
  const Int& z = zeta.value();
  for (Int n = 1; n < k && n <= z; ++n) {
    if (mpz_divisible_p(z.get_mpz_t(), n.get_mpz_t()) && grid_meets(lo, hi, n)) return at(n);
  }
  if (z < k) return std::nullopt;
  for (const auto& n : divisors(z))
    if (n >= k) return at(n);
  return std::nullopt;
}

RatFunction realize(const Draft& d) {
  DraftDiagnostic diag = validate_draft(d);
  if (!diag.ok()) throw PreconditionError(to_string(diag.status), diag.message);

  RatFunction f{d.space, {}, d.alpha, d.beta};
  f.values.reserve(d.space.size());
  for (std::size_t i = 0; i < d.space.size(); ++i) {
    Rat l = d.alpha;
    Rat u = d.beta;
    for (const auto& [r, lv] : d.levels) {
      if (lv.up.contains(i)) l = r;  // ascending, so the last hit is the max
    }
    for (auto it = d.levels.rbegin(); it != d.levels.rend(); ++it) {
      if (it->second.down.contains(i)) u = it->first;
    }
    auto v = admissible_value(l, u, d.space.zeta(i));
    if (!v) {
      // D4 guarantees a value; reaching this means the checks above are wrong.
      throw std::logic_error("realize: no admissible value at " + pt(d.space, i));
    }
    f.values.push_back(*v);
  }
  return f;
}

RatFunction urysohn(const FinASpace& x, const PointSet& a, const PointSet& b, const Rat& alpha,
                    const Rat& beta) {
  if (a.universe() != x.size() || b.universe() != x.size())
    throw InputError("urysohn: subsets do not match the space");
  if (beta < alpha) {
    throw PreconditionError("α≤β", "urysohn: alpha " + alpha.str() + " > beta " + beta.str());
  }
  PointSet overlap = a & b;
  if (!overlap.empty()) {
    throw PreconditionError("A∩B=∅", "urysohn: point " + pt(x, overlap.indices().front()) +
                                         " lies in both A and B");
  }
  PointSet bad = x.all() - ac_interval(x, alpha, beta);
  if (!bad.empty()) {
    throw PreconditionError("X⊆AC[α,β]", "urysohn: point " + pt(x, bad.indices().front()) +
                                             " is not in AC[" + alpha.str() + "," +
                                             beta.str() + "]");
  }
  bad = a - ac(x, RatRegion::point(alpha));
  if (!bad.empty()) {
    throw PreconditionError("A⊆AC{α}", "urysohn: point " + pt(x, bad.indices().front()) +
                                           " of A is not in AC{" + alpha.str() + "}");
  }
  bad = b - ac(x, RatRegion::point(beta));
  if (!bad.empty()) {
    throw PreconditionError("B⊆AC{β}", "urysohn: point " + pt(x, bad.indices().front()) +
                                           " of B is not in AC{" + beta.str() + "}");
  }

  Draft d{x, alpha, beta, {}};
  if (alpha == beta) {
    d.levels.emplace(alpha, Level{x.all(), x.all()});
  } else {
    d.levels.emplace(alpha, Level{a, x.all()});
    d.levels.emplace(beta, Level{x.all(), b});
  }
  return realize(d);
}

RatFunction separating_map(const FinASpace& x, std::size_t p, std::size_t q) {
  if (p == q) throw PreconditionError("x≠y", "separating_map: the two points coincide");
  return urysohn(x, PointSet::singleton(x.size(), p), PointSet::singleton(x.size(), q), Rat(0),
                 Rat(1));
}

RatFunction denominator_witness(const FinASpace& x, std::size_t p) {
  if (x.zeta(p).is_top()) {
    throw PreconditionError("ζ(x)≥1", "denominator_witness: zeta(" + x.label(p) +
                                          ") = 0 needs an irrational witness");
  }
  Rat lambda(Int(1), x.zeta(p).value());
  return urysohn(x, x.none(), PointSet::singleton(x.size(), p), Rat(0), lambda);
}

std::vector<RatFunction> embed(const FinASpace& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.zeta(i).is_top()) {
      throw PreconditionError("ζ≥1", "embed: point " + pt(x, i) + " has zeta = 0");
    }
  }
  std::vector<RatFunction> family;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) family.push_back(separating_map(x, i, j));
  for (std::size_t i = 0; i < x.size(); ++i) family.push_back(denominator_witness(x, i));
  return family;
}

}  // namespace lgdual
