#pragma once

// Finitely generated unital l-groups of rational-valued functions on a finite
// a-space. Elements are terms over the generators, evaluated pointwise.

#include <optional>
#include <string>
#include <vector>

#include "lgdual/aspace.hpp"
#include "lgdual/rational.hpp"

namespace lgdual {

using FnValues = std::vector<Rat>;  // by point index

struct FnGroup {
  FinASpace space;
  std::vector<FnValues> generators;  // the constant unit is implicit

  friend bool operator==(const FnGroup&, const FnGroup&) = default;
};

// Expression over generators g1..gk (1-based), integer constants, +, -, the
// integer multiple n*t, and the lattice operations join/meet.
struct GroupTerm {
  enum class Kind { kGen, kConst, kAdd, kSub, kNeg, kMul, kJoin, kMeet };

  Kind kind = Kind::kConst;
  std::size_t gen = 0;  // kGen: 1-based generator index
  Int value = 0;        // kConst: the constant; kMul: the multiplier
  std::vector<GroupTerm> args;

  static GroupTerm generator(std::size_t index);
  static GroupTerm constant(const Int& c);
  static GroupTerm add(GroupTerm a, GroupTerm b);
  static GroupTerm sub(GroupTerm a, GroupTerm b);
  static GroupTerm neg(GroupTerm a);
  static GroupTerm mul(const Int& n, GroupTerm a);
  static GroupTerm join(GroupTerm a, GroupTerm b);
  static GroupTerm meet(GroupTerm a, GroupTerm b);

  std::size_t size() const;

  friend bool operator==(const GroupTerm&, const GroupTerm&) = default;
};

// Infix rendering, e.g. "-g1 + 1", "((g1 ∧ 2) ∨ -g2)".
std::string render(const GroupTerm& t);

// Throws InputError when a generator index is out of range.
FnValues eval_term(const FnGroup& g, const GroupTerm& t);

// Sup norm. Throws PreconditionError on an empty carrier.
Rat seminorm(const FnValues& v);

FnValues pointwise_sub(const FnValues& a, const FnValues& b);
FnValues pointwise_join(const FnValues& a, const FnValues& b);

// d such that the subgroup of Q generated by 1 and the values c_i is (1/d)Z.
DivNat value_group_of(const std::vector<Rat>& values);
// Spectral denominator at point x: value group of the generators at x.
DivNat value_group(const FnGroup& g, std::size_t x);

// Some generator differs on each pair of distinct points.
bool separates(const FnGroup& g);
// First pair no generator separates, if any.
std::optional<std::pair<std::size_t, std::size_t>> unseparated_pair(const FnGroup& g);

struct MaxSpectrum {
  FinASpace space;                          // carrier labels, zeta' = value groups
  std::vector<std::size_t> correspondence;  // carrier point -> Max point
};

// Max(G) for a separating group: every unital l-homomorphism to R is an
// evaluation, so the carrier itself with the spectral denominator.
// Throws PreconditionError for non-separating groups.
MaxSpectrum max_of_group(const FnGroup& g);

struct EtaReport {
  FnGroup canonical;  // generators delta_x / zeta(x)
  MaxSpectrum max;
  bool bijective = false;
  bool zeta_preserved = false;
  bool ok() const { return bijective && zeta_preserved; }
};

// Checks that X -> Max(C(X)) is an isomorphism, C(X) being generated by the
// indicators delta_x / zeta(x). Rejects zeta = 0 points.
EtaReport eta_check(const FinASpace& x);

struct SwReport {
  bool separating = false;
  bool denominators = false;
  std::optional<std::pair<std::size_t, std::size_t>> unseparated;
  std::optional<std::size_t> bad_point;  // zeta(x) != value group at x
  std::string message;
  bool ok() const { return separating && denominators; }
};

// Separation plus zeta(x) = den of the value vector at x, for every x.
SwReport sw_conditions(const FnGroup& g);

struct Approximation {
  GroupTerm term;
  Rat error;
  bool affine = false;  // found by a single integer combination
};

// Term t with sup|t - target| <= eps. First tries an exact integer
// combination of the generators and 1; otherwise combines per-point exact
// elements and per-pair one-sided elements with joins and meets. Throws
// PreconditionError if sw_conditions fail, eps <= 0, or target(x) is
// outside the value group at some x.
Approximation sw_approximate(const FnGroup& g, const FnValues& target, const Rat& eps);

// Integer solution c of sum_j c_j * columns[j][i] = rhs[i] for every row i,
// or nullopt. Columns are rational; each row is scaled to integers first.
std::optional<std::vector<Int>> solve_integer_combination(const std::vector<FnValues>& columns,
                                                          const FnValues& rhs);

struct CompletenessReport {
  bool separating = false;
  std::optional<MaxSpectrum> max;
  // G -> C(Max G) is onto: each delta_x / zeta'(x) is reached exactly.
  bool epsilon_iso = false;
  // The generated group is all of C(X) for the supplied zeta.
  bool complete = false;
  std::optional<std::size_t> unreachable_point;
  std::optional<Rat> unreachable_value;
  std::vector<GroupTerm> basis_terms;  // witnesses for epsilon_iso
  std::string message;
};

// Rejects carriers with zeta = 0 points.
CompletenessReport completeness_check(const FnGroup& g);

}  // namespace lgdual
