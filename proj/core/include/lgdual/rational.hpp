#pragma once

// Exact rationals and the divisibility lattice on the naturals with 0 as top.

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "lgdual/errors.hpp"

namespace lgdual {

using Int = mpz_class;

// Always-reduced rational with positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rat(const Int& value) : q_(value) {}
  Rat(const Int& num, const Int& den);

  // Accepts "p" or "p/q" with optional leading '-'. Throws InputError.
  static Rat parse(std::string_view text);

  Int num() const { return Int(q_.get_num()); }
  Int den() const { return Int(q_.get_den()); }
  const mpq_class& raw() const { return q_; }

  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Int floor() const;
  Int ceil() const;

  // "p/q", or "p" when q = 1.
  std::string str() const;

  Rat operator-() const { return from_raw(-q_); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  static Rat from_raw(mpq_class q) {
    Rat r;
    r.q_ = std::move(q);
    return r;
  }
  mpq_class q_;
};

Rat abs(const Rat& r);
Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);

// A natural number ordered by divisibility. 0 is the top element.
class DivNat {
 public:
  DivNat() : v_(1) {}
  DivNat(unsigned long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  explicit DivNat(const Int& value);

  static DivNat top() { return DivNat(0UL); }
  static DivNat bottom() { return DivNat(1UL); }
  static DivNat parse(std::string_view text);

  const Int& value() const { return v_; }
  bool is_top() const { return v_ == 0; }
  bool fits_u64() const { return v_.fits_ulong_p(); }
  unsigned long to_ulong() const { return v_.get_ui(); }
  std::string str() const { return v_.get_str(); }

  friend bool operator==(const DivNat& a, const DivNat& b) { return a.v_ == b.v_; }
  // Numeric (not divisibility) order, so DivNat can key ordered containers.
  friend std::strong_ordering operator<=>(const DivNat& a, const DivNat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const DivNat& d) { return os << d.str(); }

 private:
  Int v_;
};

// a | b in the extended sense: everything divides 0, 0 divides only 0.
bool divides(const DivNat& a, const DivNat& b);

// Divisibility join. Empty input is 1; any 0 makes the result 0.
DivNat lcm_div(std::span<const DivNat> values);
DivNat lcm_div(const DivNat& a, const DivNat& b);
// Divisibility meet; gcd(a, 0) = a.
DivNat gcd_div(const DivNat& a, const DivNat& b);

DivNat den_rat(const Rat& r);
DivNat den_vec(std::span<const Rat> p);

// DIV(J): every n dividing some member of J. Infinite (everything) as soon as
// 0 belongs to J, so that case is kept symbolic.
class DivSet {
 public:
  static DivSet everything() { return DivSet(true, {}); }
  static DivSet finite(std::vector<DivNat> members);

  bool is_everything() const { return all_; }
  // Sorted ascending; empty when is_everything().
  const std::vector<DivNat>& members() const { return members_; }
  bool contains(const DivNat& n) const;

 private:
  DivSet(bool all, std::vector<DivNat> members) : all_(all), members_(std::move(members)) {}
  bool all_;
  std::vector<DivNat> members_;
};

DivSet div_set(std::span<const DivNat> j);

// Positive divisors of a nonzero n in increasing order (trial division).
std::vector<Int> divisors(const Int& n);

// First `count` rationals strictly inside (alpha, beta) in Stern–Brocot
// order (breadth first by tree depth, left to right).
std::vector<Rat> stern_brocot_sequence(const Rat& alpha, const Rat& beta, std::size_t count);

// Simplest rational strictly between lo and hi (lo < hi): the Stern–Brocot
// node of least depth in the open interval.
Rat simplest_between(const Rat& lo, const Rat& hi);

}  // namespace lgdual
