#include "lgdual/lgroup.hpp"

#include <algorithm>
#include <numeric>

namespace lgdual {

namespace {

using Kind = GroupTerm::Kind;

GroupTerm node(Kind k, std::vector<GroupTerm> args) {
  GroupTerm t;
  t.kind = k;
  t.args = std::move(args);
  return t;
}

std::string atom(const GroupTerm& t) {
  if (t.kind == Kind::kAdd || t.kind == Kind::kSub) return "(" + render(t) + ")";
  return render(t);
}

Int lcm_int(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Sum of c_j * columns[j] as a term, generators first and the constant last.
// columns[0] is the unit.
GroupTerm affine_term(const std::vector<Int>& c) {
  // Terms |c_j| * g_j paired with the sign of c_j; the unit comes last.
  std::vector<std::pair<bool, GroupTerm>> parts;
  auto scaled = [](const Int& k, GroupTerm t) {
    return k == 1 ? t : GroupTerm::mul(k, std::move(t));
  };
  for (std::size_t j = 1; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    parts.emplace_back(c[j] < 0, scaled(abs(c[j]), GroupTerm::generator(j)));
  }
  if (c[0] != 0 || parts.empty()) parts.emplace_back(c[0] < 0, GroupTerm::constant(abs(c[0])));
  GroupTerm t = parts.front().first ? GroupTerm::neg(std::move(parts.front().second))
                                    : std::move(parts.front().second);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    auto& [negative, part] = parts[i];
    t = negative ? GroupTerm::sub(std::move(t), std::move(part))
                 : GroupTerm::add(std::move(t), std::move(part));
  }
  return t;
}

std::vector<FnValues> unit_and_generators(const FnGroup& g) {
  std::vector<FnValues> cols;
  cols.push_back(FnValues(g.space.size(), Rat(1)));
  for (const auto& gen : g.generators) cols.push_back(gen);
  return cols;
}

struct Element {
  GroupTerm term;
  FnValues values;
};

// An element m*g + q with value >= f(x) at x and <= f(y) at y.
Element one_sided(const FnGroup& g, const FnValues& f, std::size_t x, std::size_t y) {
  std::size_t idx = 0;
  while (g.generators[idx][x] == g.generators[idx][y]) ++idx;
  const FnValues& gen = g.generators[idx];

  const Rat& gx = gen[x];
  const Rat& gy = gen[y];
  Rat cut = simplest_between(min(gx, gy), max(gx, gy));
  Int b = cut.den();
  Rat bound_y = f[y] / (gy - cut);
  Rat bound_x = f[x] / (gx - cut);

  Int m = 0;
  if (gy < gx) {
    // m >= both bounds, a multiple of b, as small as possible in |m|.
    Rat bound = max(bound_y, bound_x);
    if (bound.sign() > 0) m = b * (bound / Rat(b)).ceil();
  } else {
    Rat bound = min(bound_y, bound_x);
    if (bound.sign() < 0) m = b * (bound / Rat(b)).floor();
  }
  Rat q_rat = -Rat(m) * cut;
  Int q = q_rat.num();  // integral: b divides m

  Element e;
  if (m == 0) {
    e.term = GroupTerm::constant(q);
  } else {
    GroupTerm scaled = m == 1 ? GroupTerm::generator(idx + 1)
                              : GroupTerm::mul(m, GroupTerm::generator(idx + 1));
    e.term = q == 0 ? scaled : GroupTerm::add(std::move(scaled), GroupTerm::constant(q));
  }
  e.values.reserve(gen.size());
  for (const auto& v : gen) e.values.push_back(Rat(m) * v + Rat(q));
  return e;
}

FnValues pointwise_meet(const FnValues& a, const FnValues& b) {
  FnValues r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = min(a[i], b[i]);
  return r;
}

Element join_of(const Element& a, const Element& b) {
  return {GroupTerm::join(a.term, b.term), pointwise_join(a.values, b.values)};
}

Element meet_of(const Element& a, const Element& b) {
  return {GroupTerm::meet(a.term, b.term), pointwise_meet(a.values, b.values)};
}

}  // namespace

GroupTerm GroupTerm::generator(std::size_t index) {
  GroupTerm t;
  t.kind = Kind::kGen;
  t.gen = index;
  return t;
}

GroupTerm GroupTerm::constant(const Int& c) {
  GroupTerm t;
  t.kind = Kind::kConst;
  t.value = c;
  return t;
}

GroupTerm GroupTerm::add(GroupTerm a, GroupTerm b) {
  return node(Kind::kAdd, {std::move(a), std::move(b)});
}
GroupTerm GroupTerm::sub(GroupTerm a, GroupTerm b) {
  return node(Kind::kSub, {std::move(a), std::move(b)});
}
GroupTerm GroupTerm::neg(GroupTerm a) { return node(Kind::kNeg, {std::move(a)}); }
GroupTerm GroupTerm::mul(const Int& n, GroupTerm a) {
  GroupTerm t = node(Kind::kMul, {std::move(a)});
  t.value = n;
  return t;
}
GroupTerm GroupTerm::join(GroupTerm a, GroupTerm b) {
  return node(Kind::kJoin, {std::move(a), std::move(b)});
}
GroupTerm GroupTerm::meet(GroupTerm a, GroupTerm b) {
  return node(Kind::kMeet, {std::move(a), std::move(b)});
}

std::size_t GroupTerm::size() const {
  std::size_t n = 1;
  for (const auto& a : args) n += a.size();
  return n;
}

std::string render(const GroupTerm& t) {
  switch (t.kind) {
    case Kind::kGen: return "g" + std::to_string(t.gen);
    case Kind::kConst: return t.value.get_str();
    case Kind::kNeg: return "-" + atom(t.args[0]);
    case Kind::kMul: return t.value.get_str() + "*" + atom(t.args[0]);
    case Kind::kAdd: return render(t.args[0]) + " + " + atom(t.args[1]);
    case Kind::kSub: return render(t.args[0]) + " - " + atom(t.args[1]);
    case Kind::kJoin: return "(" + atom(t.args[0]) + " ∨ " + atom(t.args[1]) + ")";
    case Kind::kMeet: return "(" + atom(t.args[0]) + " ∧ " + atom(t.args[1]) + ")";
  }
  return "?";
}

FnValues eval_term(const FnGroup& g, const GroupTerm& t) {
  const std::size_t n = g.space.size();
  switch (t.kind) {
    case Kind::kGen:
      if (t.gen < 1 || t.gen > g.generators.size()) {
        throw InputError("generator index g" + std::to_string(t.gen) + " out of range (1.." +
                         std::to_string(g.generators.size()) + ")");
      }
      return g.generators[t.gen - 1];
    case Kind::kConst: return FnValues(n, Rat(t.value));
    default: break;
  }
  std::vector<FnValues> a;
  for (const auto& arg : t.args) a.push_back(eval_term(g, arg));
  FnValues r(n);
  for (std::size_t i = 0; i < n; ++i) {
    switch (t.kind) {
      case Kind::kNeg: r[i] = -a[0][i]; break;
      case Kind::kMul: r[i] = Rat(t.value) * a[0][i]; break;
      case Kind::kAdd: r[i] = a[0][i] + a[1][i]; break;
      case Kind::kSub: r[i] = a[0][i] - a[1][i]; break;
      case Kind::kJoin: r[i] = max(a[0][i], a[1][i]); break;
      case Kind::kMeet: r[i] = min(a[0][i], a[1][i]); break;
      default: break;
    }
  }
  return r;
}

Rat seminorm(const FnValues& v) {
  if (v.empty()) throw PreconditionError("nonempty carrier", "seminorm: empty carrier");
  Rat best(0);
  for (const auto& x : v) best = max(best, abs(x));
  return best;
}

FnValues pointwise_sub(const FnValues& a, const FnValues& b) {
  FnValues r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

FnValues pointwise_join(const FnValues& a, const FnValues& b) {
  FnValues r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = max(a[i], b[i]);
  return r;
}

DivNat value_group_of(const std::vector<Rat>& values) {
  Int q = 1;
  for (const auto& v : values) q = lcm_int(q, v.den());
  Int g = q;  // the unit contributes q * 1
  for (const auto& v : values) {
    Int scaled = v.num() * (q / v.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
  }
  return DivNat(Int(q / g));
}

DivNat value_group(const FnGroup& g, std::size_t x) {
  std::vector<Rat> vals;
  vals.reserve(g.generators.size());
  for (const auto& gen : g.generators) vals.push_back(gen.at(x));
  return value_group_of(vals);
}

std::optional<std::pair<std::size_t, std::size_t>> unseparated_pair(const FnGroup& g) {
  for (std::size_t x = 0; x < g.space.size(); ++x) {
    for (std::size_t y = x + 1; y < g.space.size(); ++y) {
      bool split = std::any_of(g.generators.begin(), g.generators.end(),
                               [&](const FnValues& gen) { return gen[x] != gen[y]; });
      if (!split) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

bool separates(const FnGroup& g) { return !unseparated_pair(g).has_value(); }

MaxSpectrum max_of_group(const FnGroup& g) {
  if (auto pair = unseparated_pair(g)) {
    throw PreconditionError("separating", "max: generators do not separate \"" +
                                              g.space.label(pair->first) + "\" and \"" +
                                              g.space.label(pair->second) + "\"");
  }
  std::vector<FinASpace::Point> pts;
  MaxSpectrum m;
  for (std::size_t x = 0; x < g.space.size(); ++x) {
    pts.push_back({g.space.label(x), value_group(g, x)});
    m.correspondence.push_back(x);
  }
  m.space = FinASpace(std::move(pts));
  return m;
}

EtaReport eta_check(const FinASpace& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.zeta(i).is_top()) {
      throw PreconditionError("ζ≥1", "eta: zeta(\"" + x.label(i) +
                                         "\") = 0, the value group R is not finitely generated");
    }
  }
  EtaReport r;
  r.canonical.space = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    FnValues delta(x.size(), Rat(0));
    delta[i] = Rat(Int(1), x.zeta(i).value());
    r.canonical.generators.push_back(std::move(delta));
  }
  r.max = max_of_group(r.canonical);

  std::vector<std::size_t> sorted = r.max.correspondence;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> expected(x.size());
  std::iota(expected.begin(), expected.end(), 0);
  r.bijective = sorted == expected && r.max.space.size() == x.size();

  r.zeta_preserved = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (r.max.space.zeta(r.max.correspondence[i]) != x.zeta(i)) r.zeta_preserved = false;
  }
  return r;
}

SwReport sw_conditions(const FnGroup& g) {
  SwReport r;
  r.unseparated = unseparated_pair(g);
  r.separating = !r.unseparated;
  if (!r.separating) {
    r.message = "condition (1) fails: no generator separates \"" +
                g.space.label(r.unseparated->first) + "\" and \"" +
                g.space.label(r.unseparated->second) + "\"";
  }
  r.denominators = true;
  for (std::size_t x = 0; x < g.space.size(); ++x) {
    DivNat d = value_group(g, x);
    if (d != g.space.zeta(x)) {
      r.denominators = false;
      r.bad_point = x;
      if (r.message.empty()) {
        r.message = "condition (2) fails at \"" + g.space.label(x) + "\": zeta = " +
                    g.space.zeta(x).str() + " but the values have denominator " + d.str();
      }
      break;
    }
  }
  return r;
}

std::optional<std::vector<Int>> solve_integer_combination(const std::vector<FnValues>& columns,
                                                          const FnValues& rhs) {
  const std::size_t n = columns.size();
  const std::size_t m = rhs.size();

  // Integer rows.
  std::vector<std::vector<Int>> h(m, std::vector<Int>(n));
  std::vector<Int> b(m);
  for (std::size_t i = 0; i < m; ++i) {
    Int scale = rhs[i].den();
    for (std::size_t j = 0; j < n; ++j) scale = lcm_int(scale, columns[j].at(i).den());
    for (std::size_t j = 0; j < n; ++j) h[i][j] = (columns[j][i] * Rat(scale)).num();
    b[i] = (rhs[i] * Rat(scale)).num();
  }

  // Column echelon form H = A U with U unimodular.
  std::vector<std::vector<Int>> u(n, std::vector<Int>(n, 0));
  for (std::size_t j = 0; j < n; ++j) u[j][j] = 1;
  auto column_op = [&](std::size_t k, std::size_t j, const Int& s, const Int& t, const Int& p,
                       const Int& q) {
    // col_k <- s col_k + t col_j ; col_j <- p col_k + q col_j
    for (auto* mat : {&h, &u}) {
      for (auto& row : *mat) {
        Int ck = row[k];
        Int cj = row[j];
        row[k] = s * ck + t * cj;
        row[j] = p * ck + q * cj;
      }
    }
  };

  std::vector<std::optional<std::size_t>> pivot_of_row(m);
  std::size_t next = 0;
  for (std::size_t r = 0; r < m && next < n; ++r) {
    for (std::size_t j = next + 1; j < n; ++j) {
      if (h[r][j] == 0) continue;
      Int a = h[r][next];
      Int c = h[r][j];
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
      column_op(next, j, s, t, Int(-c / g), Int(a / g));
    }
    if (h[r][next] != 0) {
      if (h[r][next] < 0) column_op(next, next, Int(-1), Int(0), Int(-1), Int(0));
      pivot_of_row[r] = next++;
    }
  }

  std::vector<Int> y(n, 0);
  for (std::size_t r = 0; r < m; ++r) {
    Int s = b[r];
    for (std::size_t j = 0; j < n; ++j) s -= h[r][j] * y[j];
    if (pivot_of_row[r]) {
      std::size_t p = *pivot_of_row[r];
      // y[p] is still 0 here, so s already excludes the pivot term.
      if (!mpz_divisible_p(s.get_mpz_t(), h[r][p].get_mpz_t())) return std::nullopt;
      y[p] = s / h[r][p];
    } else if (s != 0) {
      return std::nullopt;
    }
  }

  std::vector<Int> c(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i] += u[i][j] * y[j];
  return c;
}

Approximation sw_approximate(const FnGroup& g, const FnValues& target, const Rat& eps) {
  if (eps.sign() <= 0) throw PreconditionError("ε>0", "approx: eps must be positive");
  const std::size_t n = g.space.size();
  if (target.size() != n) throw InputError("approx: target does not cover the carrier");
  SwReport sw = sw_conditions(g);
  if (!sw.ok()) throw PreconditionError(sw.separating ? "(2)" : "(1)", "approx: " + sw.message);
  for (std::size_t x = 0; x < n; ++x) {
    if (!divides(den_rat(target[x]), value_group(g, x))) {
      throw PreconditionError("target∈G_x", "approx: target(\"" + g.space.label(x) + "\") = " +
                                                target[x].str() + " is outside (1/" +
                                                value_group(g, x).str() + ")Z");
    }
  }

  Approximation out;
  std::vector<FnValues> cols = unit_and_generators(g);
  if (n == 0) {
    out.term = GroupTerm::constant(0);
    out.error = Rat(0);
    out.affine = true;
    return out;
  }
  if (auto c = solve_integer_combination(cols, target)) {
    out.term = affine_term(*c);
    out.affine = true;
  } else {
    // Exact at each point from one integer combination per point.
    std::vector<Element> h;
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<FnValues> row_cols;
      for (const auto& col : cols) row_cols.push_back({col[x]});
      auto c = solve_integer_combination(row_cols, {target[x]});
      if (!c) throw std::logic_error("approx: value-group membership without a combination");
      Element e{affine_term(*c), FnValues(n, Rat(0))};
      for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) e.values[i] += Rat((*c)[j]) * cols[j][i];
      h.push_back(std::move(e));
    }

    const FnValues& f = target;
    std::optional<Element> total;
    for (std::size_t x = 0; x < n; ++x) {
      std::optional<Element> below;  // equals f at x, <= f elsewhere
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x) continue;
        const Element& hx = h[x];
        const Element& ky = h[y];
        Element pair;
        if (hx.values[y] == f[y]) {
          pair = hx;
        } else if (ky.values[x] == f[x]) {
          pair = ky;
        } else if (ky.values[x] >= f[x] && hx.values[y] >= f[y]) {
          pair = meet_of(hx, ky);
        } else if (ky.values[x] <= f[x] && hx.values[y] <= f[y]) {
          pair = join_of(hx, ky);
        } else if (ky.values[x] <= f[x]) {
          pair = join_of(meet_of(hx, one_sided(g, f, x, y)), ky);
        } else {
          pair = join_of(meet_of(ky, one_sided(g, f, y, x)), hx);
        }
        below = below ? meet_of(*below, pair) : pair;
      }
      if (!below) below = h[x];
      total = total ? join_of(*total, *below) : *below;
    }
    out.term = total->term;
  }

  out.error = seminorm(pointwise_sub(eval_term(g, out.term), target));
  return out;
}

CompletenessReport completeness_check(const FnGroup& g) {
  for (std::size_t i = 0; i < g.space.size(); ++i) {
    if (g.space.zeta(i).is_top()) {
      throw PreconditionError("ζ≥1", "complete: zeta(\"" + g.space.label(i) +
                                         "\") = 0, completeness is not decidable from "
                                         "rational data");
    }
  }
  CompletenessReport r;
  auto pair = unseparated_pair(g);
  r.separating = !pair;
  if (pair) {
    r.message = "generators do not separate \"" + g.space.label(pair->first) + "\" and \"" +
                g.space.label(pair->second) + "\"";
    return r;
  }
  r.max = max_of_group(g);

  FnGroup on_max{r.max->space, g.generators};
  std::vector<DivNat> zetas;
  for (const auto& p : r.max->space.points()) zetas.push_back(p.zeta);
  Rat eps(Int(1), Int(2) * lcm_div(zetas).value());
  r.epsilon_iso = true;
  for (std::size_t x = 0; x < g.space.size(); ++x) {
    FnValues basis(g.space.size(), Rat(0));
    basis[x] = Rat(Int(1), r.max->space.zeta(x).value());
    Approximation a = sw_approximate(on_max, basis, eps);
    if (a.error.sign() != 0) r.epsilon_iso = false;
    r.basis_terms.push_back(std::move(a.term));
  }

  r.complete = r.epsilon_iso;
  for (std::size_t x = 0; x < g.space.size() && r.complete; ++x) {
    const DivNat& spectral = r.max->space.zeta(x);
    const DivNat& given = g.space.zeta(x);
    if (spectral == given) continue;
    r.complete = false;
    r.unreachable_point = x;
    if (divides(spectral, given)) {
      r.unreachable_value = Rat(Int(1), given.value());
      r.message = "1/" + given.str() + " at \"" + g.space.label(x) +
                  "\" is not reachable: the generated group has (1/" + spectral.str() +
                  ")Z there";
    } else {
      r.message = "generators are not a-maps at \"" + g.space.label(x) + "\": denominator " +
                  spectral.str() + " does not divide zeta = " + given.str();
    }
  }
  if (r.complete) r.message = "the generated group is C(X)";
  return r;
}

}  // namespace lgdual
