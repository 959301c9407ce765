#pragma once

// [alpha, beta]-drafts on finite a-spaces: level sets with sublevel ("down")
// and superlevel ("up") point sets, their one-step refinement, and the
// rational realisation that turns a draft into a denominator-decreasing map.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lgdual/adc.hpp"
#include "lgdual/aspace.hpp"
#include "lgdual/rational.hpp"

namespace lgdual {

struct Level {
  PointSet down;
  PointSet up;
  friend bool operator==(const Level&, const Level&) = default;
};

struct Draft {
  FinASpace space;
  Rat alpha;
  Rat beta;
  std::map<Rat, Level> levels;  // D, ascending

  friend bool operator==(const Draft&, const Draft&) = default;
};

enum class DraftCheck {
  kValid,
  kStructure,  // endpoints missing, levels outside [alpha, beta], wrong universe
  kD1,
  kD2,
  kD3,
  kD4,
};

struct DraftDiagnostic {
  DraftCheck status = DraftCheck::kValid;
  std::optional<Rat> r;
  std::optional<Rat> s;
  std::optional<std::size_t> point;
  std::string message;

  bool ok() const { return status == DraftCheck::kValid; }
};

const char* to_string(DraftCheck c);

// Checks the structure, then D1..D4 in order, reporting the first violation.
DraftDiagnostic validate_draft(const Draft& d);

// True iff `finer` has every level of `coarser` with identical sets.
bool refines(const Draft& finer, const Draft& coarser);

// Adds level lambda strictly between its neighbours a < lambda < b. Uses
//   A = down(a) ∪ [(up(a) ∩ down(b)) \ AC[lambda, b]]
//   B = up(b)   ∪ [(up(a) ∩ down(b)) \ AC[a, lambda]]
// separated into U ⊇ A, V ⊇ B, and sets down(lambda) = X \ V,
// up(lambda) = X \ U. Throws PreconditionError if lambda is already a level,
// lies outside (alpha, beta), or the input draft is invalid.
Draft refine_at(const Draft& d, const Rat& lambda,
                LeftoverPolicy policy = LeftoverPolicy::kNonzeroToU);

// Folds refine_at, skipping lambdas that are already levels.
Draft refine_sequence(const Draft& d, const std::vector<Rat>& lambdas,
                      LeftoverPolicy policy = LeftoverPolicy::kNonzeroToU);

struct RatFunction {
  FinASpace space;
  std::vector<Rat> values;  // by point index
  Rat lo;
  Rat hi;

  friend bool operator==(const RatFunction&, const RatFunction&) = default;
};

// lo <= f <= hi and den f(x) | zeta(x) everywhere.
bool is_amap_into(const RatFunction& f);

// The realisation contract: f[down r] ⊆ [alpha, r] and f[up r] ⊆ [r, beta].
bool realises(const RatFunction& f, const Draft& d);

// Smallest-denominator, then smallest value, rational in [lo, hi] whose
// denominator divides zeta. std::nullopt when none exists.
std::optional<Rat> admissible_value(const Rat& lo, const Rat& hi, const DivNat& zeta);

// For each point pick a value between l(x) = max{r : x ∈ up r} and
// u(x) = min{r : x ∈ down r}. Throws PreconditionError on invalid drafts.
RatFunction realize(const Draft& d);

// The two-level draft down(alpha) = A, up(alpha) = X, down(beta) = X,
// up(beta) = B (a single level X/X when alpha = beta), realised.
// Preconditions: alpha <= beta, A ∩ B = ∅, X ⊆ AC[alpha,beta],
// A ⊆ AC{alpha}, B ⊆ AC{beta}; failures name the witnessing point.
RatFunction urysohn(const FinASpace& x, const PointSet& a, const PointSet& b, const Rat& alpha,
                    const Rat& beta);

// urysohn(X, {x}, {y}, 0, 1).
RatFunction separating_map(const FinASpace& x, std::size_t p, std::size_t q);

// urysohn(X, ∅, {x}, 0, 1/zeta(x)); den f(x) = zeta(x). Rejects zeta(x) = 0.
RatFunction denominator_witness(const FinASpace& x, std::size_t p);

// Separators for every pair x < y followed by a denominator witness for
// every point. Rejects spaces with a zeta = 0 point.
std::vector<RatFunction> embed(const FinASpace& x);

}  // namespace lgdual
