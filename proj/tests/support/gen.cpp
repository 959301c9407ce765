#include "gen.hpp"

#include <cstring>
#include <set>

namespace lgdual::testgen {

std::uint64_t take_seed(int& argc, char** argv, std::uint64_t fallback) {
  std::uint64_t seed = fallback;
  int out = 1;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      seed = std::stoull(argv[++i]);
    } else if (arg.rfind("--seed=", 0) == 0) {
      seed = std::stoull(arg.substr(7));
    } else {
      argv[out++] = argv[i];
    }
  }
  argc = out;
  return seed;
}

std::uint64_t& global_seed() {
  static std::uint64_t seed = 20240917;
  return seed;
}

long Gen::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

bool Gen::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Rat Gen::rat(const Rat& lo, const Rat& hi, long max_den) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    long q = uniform(1, max_den);
    long p_lo = (lo * Rat(q)).ceil().get_si();
    long p_hi = (hi * Rat(q)).floor().get_si();
    if (p_lo > p_hi) continue;
    return Rat(Int(uniform(p_lo, p_hi)), Int(q));
  }
  return lo;
}

Rat Gen::rat_on_grid(const Rat& lo, const Rat& hi, long n) {
  std::set<Rat> found;
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    long p_lo = (lo * Rat(d)).ceil().get_si();
    long p_hi = (hi * Rat(d)).floor().get_si();
    for (long p = p_lo; p <= p_hi; ++p) found.insert(Rat(Int(p), Int(d)));
  }
  if (found.empty()) throw std::logic_error("rat_on_grid: no admissible value");
  std::vector<Rat> v(found.begin(), found.end());
  return pick(v);
}

RatInterval Gen::interval(const Rat& lo, const Rat& hi, long max_den) {
  Rat a = rat(lo, hi, max_den);
  Rat b = rat(lo, hi, max_den);
  return {min(a, b), max(a, b)};
}

RatRegion Gen::region(std::size_t max_components, long max_den) {
  RatRegion r;
  long k = uniform(0, static_cast<long>(max_components));
  for (long i = 0; i < k; ++i) {
    if (coin(0.4)) {
      r.add_point(rat(Rat(-1), Rat(2), max_den));
    } else {
      RatInterval iv = interval(Rat(-1), Rat(2), max_den);
      r.add_interval(iv.lo, iv.hi);
    }
  }
  return r;
}

FinASpace Gen::space(std::size_t min_points, std::size_t max_points, long max_zeta,
                     bool allow_zero) {
  long n = uniform(static_cast<long>(min_points), static_cast<long>(max_points));
  std::vector<FinASpace::Point> pts;
  for (long i = 0; i < n; ++i) {
    long z = uniform(allow_zero ? 0 : 1, max_zeta);
    pts.push_back({"x" + std::to_string(i), DivNat(static_cast<unsigned long>(z))});
  }
  return FinASpace(std::move(pts));
}

PointSet Gen::subset(const FinASpace& x) {
  PointSet s = x.none();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (coin()) s.insert(i);
  return s;
}

std::vector<Rat> Gen::amap_values(const FinASpace& x, const Rat& alpha, const Rat& beta) {
  std::vector<Rat> v;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.zeta(i).is_top()) {
      v.push_back(rat(alpha, beta, 12));
    } else {
      v.push_back(rat_on_grid(alpha, beta, x.zeta(i).value().get_si()));
    }
  }
  return v;
}

Draft Gen::valid_draft(std::size_t max_points, long max_zeta, std::size_t max_levels,
                       long level_den) {
  Rat alpha = rat(Rat(-1), Rat(1), level_den);
  Rat beta = alpha;
  while (beta <= alpha) beta = rat(alpha, alpha + Rat(2), level_den);

  long n = uniform(1, static_cast<long>(max_points));
  std::vector<FinASpace::Point> pts;
  for (long i = 0; i < n; ++i) {
    long z;
    do {
      z = uniform(0, max_zeta);
    } while (z != 0 && !grid_hits(alpha, beta, z));
    pts.push_back({"x" + std::to_string(i), DivNat(static_cast<unsigned long>(z))});
  }
  Draft d{FinASpace(std::move(pts)), alpha, beta, {}};

  std::set<Rat> levels{alpha, beta};
  long extra = uniform(0, static_cast<long>(max_levels) - 2);
  for (long i = 0; i < extra; ++i) {
    Rat r = rat(alpha, beta, level_den);
    levels.insert(r);
  }

  std::vector<Rat> f = amap_values(d.space, alpha, beta);
  for (const auto& r : levels) {
    Level lv{d.space.none(), d.space.none()};
    for (std::size_t i = 0; i < d.space.size(); ++i) {
      if (f[i] <= r) lv.down.insert(i);
      if (r <= f[i]) lv.up.insert(i);
    }
    d.levels.emplace(r, std::move(lv));
  }

  std::vector<Rat> keys(levels.begin(), levels.end());
  for (int attempt = 0; attempt < 4; ++attempt) {
    Draft trial = d;
    Level& lv = trial.levels.at(pick(keys));
    std::size_t i = static_cast<std::size_t>(uniform(0, n - 1));
    (coin() ? lv.down : lv.up).insert(i);
    if (validate_draft(trial).ok()) d = std::move(trial);
  }
  return d;
}

FnGroup Gen::sw_group(std::size_t max_points, std::size_t max_gens, long max_den) {
  for (;;) {
    long n = uniform(1, static_cast<long>(max_points));
    long k = uniform(n > 1 ? 1 : 0, static_cast<long>(max_gens));
    std::vector<FinASpace::Point> pts;
    for (long i = 0; i < n; ++i) pts.push_back({"x" + std::to_string(i), DivNat(1)});
    FnGroup g{FinASpace(pts), {}};
    for (long j = 0; j < k; ++j) {
      FnValues v;
      for (long i = 0; i < n; ++i) v.push_back(rat(Rat(-2), Rat(2), max_den));
      g.generators.push_back(std::move(v));
    }
    if (!separates(g)) continue;
    for (long i = 0; i < n; ++i) pts[i].zeta = value_group(g, static_cast<std::size_t>(i));
    g.space = FinASpace(std::move(pts));
    return g;
  }
}

FnValues Gen::target_in(const FnGroup& g, long bound) {
  FnValues t;
  for (std::size_t i = 0; i < g.space.size(); ++i) {
    long d = g.space.zeta(i).value().get_si();
    t.push_back(Rat(Int(uniform(-bound * d, bound * d)), Int(d)));
  }
  return t;
}

IntPwl Gen::affine(long max_coef) {
  return IntPwl::affine(Int(uniform(-max_coef, max_coef)), Int(uniform(-max_coef, max_coef)));
}

IntPwl Gen::pwl(long max_coef, int depth) {
  if (depth == 0) return affine(max_coef);
  static const std::vector<PwlOp> ops{PwlOp::kAdd, PwlOp::kSub, PwlOp::kJoin, PwlOp::kMeet};
  return pwl_combine(pwl(max_coef, depth - 1), pwl(max_coef, depth - 1), pick(ops));
}

bool grid_hits(const Rat& lo, const Rat& hi, long n) {
  long start = (lo * Rat(n)).floor().get_si() - 1;
  long stop = (hi * Rat(n)).ceil().get_si() + 1;
  for (long p = start; p <= stop; ++p) {
    Rat v{Int(p), Int(n)};
    if (lo <= v && v <= hi) return true;
  }
  return false;
}

}  // namespace lgdual::testgen
