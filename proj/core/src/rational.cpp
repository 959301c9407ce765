#include "lgdual/rational.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <optional>

namespace lgdual {

namespace {

Int parse_int(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw InputError("not a rational: \"" + std::string(whole) + "\"");
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return Int(s, 10);
}

// Simplest rational in the open interval (lo, hi), hi = nullopt meaning +inf,
// for 0 <= lo.
Rat simplest_nonneg(const Rat& lo, const std::optional<Rat>& hi) {
  Int fl = lo.floor();
  Rat next(fl + 1);
  if (!hi || next < *hi) return next;
  // (lo, hi) ⊆ [fl, fl + 1]: write x = fl + 1/y with y in (1/(hi-fl), 1/(lo-fl)).
  Rat base(fl);
  Rat y_lo = Rat(1) / (*hi - base);
  std::optional<Rat> y_hi;
  if (lo != base) y_hi = Rat(1) / (lo - base);
  return base + Rat(1) / simplest_nonneg(y_lo, y_hi);
}

}  // namespace

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text, text));
  Int num = parse_int(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw InputError("denominator must be unsigned: \"" + std::string(text) + "\"");
  }
  Int den = parse_int(den_text, text);
  if (den == 0) throw InputError("zero denominator: \"" + std::string(text) + "\"");
  return Rat(num, den);
}

Int Rat::floor() const {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Int Rat::ceil() const {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.q_ == 0) throw std::domain_error("division by zero rational");
  q_ /= o.q_;
  return *this;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }
Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

DivNat::DivNat(const Int& value) : v_(value) {
  if (v_ < 0) throw InputError("negative value for a natural number: " + v_.get_str());
}

DivNat DivNat::parse(std::string_view text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw InputError("not a natural number: \"" + std::string(text) + "\"");
  }
  return DivNat(Int(std::string(text), 10));
}

bool divides(const DivNat& a, const DivNat& b) {
  if (b.is_top()) return true;
  if (a.is_top()) return false;
  return mpz_divisible_p(b.value().get_mpz_t(), a.value().get_mpz_t()) != 0;
}

DivNat lcm_div(const DivNat& a, const DivNat& b) {
  if (a.is_top() || b.is_top()) return DivNat::top();
  Int r;
  mpz_lcm(r.get_mpz_t(), a.value().get_mpz_t(), b.value().get_mpz_t());
  return DivNat(r);
}

DivNat lcm_div(std::span<const DivNat> values) {
  DivNat acc = DivNat::bottom();
  for (const auto& v : values) {
    acc = lcm_div(acc, v);
    if (acc.is_top()) break;
  }
  return acc;
}

DivNat gcd_div(const DivNat& a, const DivNat& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.value().get_mpz_t(), b.value().get_mpz_t());
  return DivNat(r);
}

DivNat den_rat(const Rat& r) { return DivNat(r.den()); }

DivNat den_vec(std::span<const Rat> p) {
  DivNat acc = DivNat::bottom();
  for (const auto& r : p) acc = lcm_div(acc, den_rat(r));
  return acc;
}

DivSet DivSet::finite(std::vector<DivNat> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return DivSet(false, std::move(members));
}

bool DivSet::contains(const DivNat& n) const {
  if (all_) return true;
  return std::binary_search(members_.begin(), members_.end(), n);
}

std::vector<Int> divisors(const Int& n) {
  std::vector<Int> low, high;
  for (Int d = 1; d * d <= n; ++d) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      low.push_back(d);
      Int co = n / d;
      if (co != d) high.push_back(co);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

DivSet div_set(std::span<const DivNat> j) {
  std::vector<DivNat> out;
  for (const auto& m : j) {
    if (m.is_top()) return DivSet::everything();
    for (const auto& d : divisors(m.value())) out.emplace_back(d);
  }
  return DivSet::finite(std::move(out));
}

Rat simplest_between(const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw InputError("simplest_between: empty interval");
  if (lo.sign() < 0 && hi.sign() > 0) return Rat(0);
  if (hi.sign() <= 0) return -simplest_nonneg(-hi, -lo);
  return simplest_nonneg(lo, hi);
}

std::vector<Rat> stern_brocot_sequence(const Rat& alpha, const Rat& beta, std::size_t count) {
  std::vector<Rat> out;
  if (!(alpha < beta) || count == 0) return out;

  // Bounds are fractions p/q with q = 0 standing for -inf / +inf.
  struct Frac {
    Int p, q;
  };
  struct Node {
    Frac left, right;
  };
  auto below = [](const Frac& f, const Rat& r) {  // f < r
    if (f.q == 0) return f.p < 0;
    return Rat(f.p, f.q) < r;
  };
  auto above = [](const Frac& f, const Rat& r) {  // f > r
    if (f.q == 0) return f.p > 0;
    return r < Rat(f.p, f.q);
  };

  // The root 0 sits between -inf and +inf.
  if (alpha.sign() < 0 && beta.sign() > 0) out.push_back(Rat(0));
  std::deque<Node> queue;
  queue.push_back({{Int(-1), Int(0)}, {Int(0), Int(1)}});
  queue.push_back({{Int(0), Int(1)}, {Int(1), Int(0)}});
  while (!queue.empty() && out.size() < count) {
    Node n = queue.front();
    queue.pop_front();
    if (!below(n.left, beta) || !above(n.right, alpha)) continue;
    Frac mid{n.left.p + n.right.p, n.left.q + n.right.q};
    Rat value(mid.p, mid.q);
    if (alpha < value && value < beta) out.push_back(value);
    queue.push_back({n.left, mid});
    queue.push_back({mid, n.right});
  }
  return out;
}

}  // namespace lgdual
