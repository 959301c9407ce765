#pragma once

// Continuous piecewise-affine functions on [0,1] whose pieces z1*x + z2 have
// integer coefficients, with exact lattice-group operations.

#include <vector>

#include "lgdual/lgroup.hpp"
#include "lgdual/rational.hpp"

namespace lgdual {

struct AffinePiece {
  Int z1;  // slope
  Int z2;  // intercept

  Rat at(const Rat& x) const { return Rat(z1) * x + Rat(z2); }
  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

class IntPwl {
 public:
  // Breakpoints must run strictly increasing from 0 to 1, with one piece per
  // gap and adjacent pieces agreeing at shared breakpoints. Throws
  // InputError otherwise. The result is canonical: adjacent equal pieces
  // are merged.
  IntPwl(std::vector<Rat> breakpoints, std::vector<AffinePiece> pieces);

  static IntPwl affine(const Int& z1, const Int& z2);
  static IntPwl identity() { return affine(1, 0); }
  static IntPwl constant(const Int& c) { return affine(0, c); }

  const std::vector<Rat>& breakpoints() const { return breakpoints_; }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }

  friend bool operator==(const IntPwl&, const IntPwl&) = default;

 private:
  IntPwl() = default;
  void canonicalize();

  std::vector<Rat> breakpoints_;
  std::vector<AffinePiece> pieces_;
};

enum class PwlOp { kAdd, kSub, kJoin, kMeet };

// Throws PreconditionError unless 0 <= x <= 1.
Rat pwl_eval(const IntPwl& f, const Rat& x);
IntPwl pwl_combine(const IntPwl& f, const IntPwl& g, PwlOp op);
IntPwl pwl_negate(const IntPwl& f);
// Sup norm over [0,1], attained at a breakpoint.
Rat pwl_norm(const IntPwl& f);

// Value group at a rational x: for the full group (fs empty) the group
// {z1 x + z2} is (1/den x)Z; otherwise the group generated by 1 and f(x).
DivNat pwl_value_group(const std::vector<IntPwl>& fs, const Rat& x);

// (z1, z2) with z1 * x + z2 = 1/den(x), from extended Euclid on (p, q).
AffinePiece unit_fraction_witness(const Rat& x);

// den f(x) divides den x at every sample.
bool pwl_is_amap(const IntPwl& f, const std::vector<Rat>& samples);

// Restrictions of fs to the sample points, on the a-space with
// zeta(x) = den x. Labels are the rationals' text. Throws
// PreconditionError on duplicate points.
FnGroup pwl_sample(const std::vector<IntPwl>& fs, const std::vector<Rat>& points);

}  // namespace lgdual
