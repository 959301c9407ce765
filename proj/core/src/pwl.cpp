#include "lgdual/pwl.hpp"

#include <algorithm>
#include <set>

namespace lgdual {

namespace {

void check_range(const Rat& x) {
  if (x.sign() < 0 || Rat(1) < x)
    throw PreconditionError("0≤x≤1", "pwl: " + x.str() + " lies outside [0, 1]");
}

// Index of the piece covering x (left-closed; the last piece also owns 1).
std::size_t piece_index(const IntPwl& f, const Rat& x) {
  const auto& bp = f.breakpoints();
  auto it = std::upper_bound(bp.begin(), bp.end(), x);
  std::size_t i = static_cast<std::size_t>(it - bp.begin());
  if (i == 0) return 0;
  return std::min(i - 1, f.pieces().size() - 1);
}

AffinePiece pick(const AffinePiece& a, const AffinePiece& b, const Rat& mid, bool take_max) {
  bool a_wins = take_max ? b.at(mid) <= a.at(mid) : a.at(mid) <= b.at(mid);
  return a_wins ? a : b;
}

}  // namespace

IntPwl::IntPwl(std::vector<Rat> breakpoints, std::vector<AffinePiece> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breakpoints_.size() < 2) throw InputError("pwl: need at least the breakpoints 0 and 1");
  if (breakpoints_.front() != Rat(0) || breakpoints_.back() != Rat(1))
    throw InputError("pwl: breakpoints must start at 0 and end at 1");
  if (pieces_.size() + 1 != breakpoints_.size())
    throw InputError("pwl: expected one piece per gap between breakpoints");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i]))
      throw InputError("pwl: breakpoints must be strictly increasing");
  }
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    const Rat& x = breakpoints_[i];
    if (pieces_[i - 1].at(x) != pieces_[i].at(x))
      throw InputError("pwl: pieces disagree at breakpoint " + x.str());
  }
  canonicalize();
}

IntPwl IntPwl::affine(const Int& z1, const Int& z2) {
  IntPwl f;
  f.breakpoints_ = {Rat(0), Rat(1)};
  f.pieces_ = {AffinePiece{z1, z2}};
  return f;
}

void IntPwl::canonicalize() {
  std::vector<Rat> bp{breakpoints_.front()};
  std::vector<AffinePiece> pc{pieces_.front()};
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    if (pieces_[i] == pc.back()) continue;
    bp.push_back(breakpoints_[i]);
    pc.push_back(pieces_[i]);
  }
  bp.push_back(breakpoints_.back());
  breakpoints_ = std::move(bp);
  pieces_ = std::move(pc);
}

Rat pwl_eval(const IntPwl& f, const Rat& x) {
  check_range(x);
  return f.pieces()[piece_index(f, x)].at(x);
}

IntPwl pwl_negate(const IntPwl& f) {
  std::vector<AffinePiece> pc;
  for (const auto& p : f.pieces()) pc.push_back({Int(-p.z1), Int(-p.z2)});
  return IntPwl(f.breakpoints(), std::move(pc));
}

IntPwl pwl_combine(const IntPwl& f, const IntPwl& g, PwlOp op) {
  std::set<Rat> merged(f.breakpoints().begin(), f.breakpoints().end());
  merged.insert(g.breakpoints().begin(), g.breakpoints().end());
  std::vector<Rat> grid(merged.begin(), merged.end());

  std::vector<Rat> bp{grid.front()};
  std::vector<AffinePiece> pc;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const Rat& s = grid[i];
    const Rat& t = grid[i + 1];
    Rat mid = (s + t) / Rat(2);
    const AffinePiece& a = f.pieces()[piece_index(f, mid)];
    const AffinePiece& b = g.pieces()[piece_index(g, mid)];
    switch (op) {
      case PwlOp::kAdd: pc.push_back({Int(a.z1 + b.z1), Int(a.z2 + b.z2)}); break;
      case PwlOp::kSub: pc.push_back({Int(a.z1 - b.z1), Int(a.z2 - b.z2)}); break;
      case PwlOp::kJoin:
      case PwlOp::kMeet: {
        bool take_max = op == PwlOp::kJoin;
        if (a.z1 != b.z1) {
          // Lines cross at (b.z2 - a.z2) / (a.z1 - b.z1).
          Rat cross(Int(b.z2 - a.z2), Int(a.z1 - b.z1));
          if (s < cross && cross < t) {
            pc.push_back(pick(a, b, (s + cross) / Rat(2), take_max));
            bp.push_back(cross);
            pc.push_back(pick(a, b, (cross + t) / Rat(2), take_max));
            break;
          }
        }
        pc.push_back(pick(a, b, mid, take_max));
        break;
      }
    }
    bp.push_back(t);
  }
  return IntPwl(std::move(bp), std::move(pc));
}

Rat pwl_norm(const IntPwl& f) {
  Rat best(0);
  for (std::size_t i = 0; i < f.pieces().size(); ++i) {
    best = max(best, abs(f.pieces()[i].at(f.breakpoints()[i])));
    best = max(best, abs(f.pieces()[i].at(f.breakpoints()[i + 1])));
  }
  return best;
}

DivNat pwl_value_group(const std::vector<IntPwl>& fs, const Rat& x) {
  check_range(x);
  if (fs.empty()) return den_rat(x);
  std::vector<Rat> vals;
  for (const auto& f : fs) vals.push_back(pwl_eval(f, x));
  return value_group_of(vals);
}

AffinePiece unit_fraction_witness(const Rat& x) {
  // s p + t q = 1, so s (p/q) + t = 1/q.
  Int g, s, t;
  Int p = x.num();
  Int q = x.den();
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  return {s, t};
}

bool pwl_is_amap(const IntPwl& f, const std::vector<Rat>& samples) {
  return std::all_of(samples.begin(), samples.end(), [&](const Rat& x) {
    return divides(den_rat(pwl_eval(f, x)), den_rat(x));
  });
}

FnGroup pwl_sample(const std::vector<IntPwl>& fs, const std::vector<Rat>& points) {
  std::set<Rat> seen;
  std::vector<FinASpace::Point> pts;
  for (const auto& x : points) {
    check_range(x);
    if (!seen.insert(x).second)
      throw PreconditionError("distinct points", "pwl sample: duplicate point " + x.str());
    pts.push_back({x.str(), den_rat(x)});
  }
  FnGroup g;
  g.space = FinASpace(std::move(pts));
  for (const auto& f : fs) {
    FnValues vals;
    for (const auto& x : points) vals.push_back(pwl_eval(f, x));
    g.generators.push_back(std::move(vals));
  }
  return g;
}

}  // namespace lgdual
