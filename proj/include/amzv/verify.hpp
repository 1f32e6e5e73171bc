#pragma once

// Theorem-by-theorem verification harness. Every check enumerates instances in
// a canonical order, evaluates them on a worker pool (one set of memoizing
// engines per worker) and merges the outcomes by instance index, so the report
// does not depend on the number of workers.

#include <cstdint>
#include <string>
#include <vector>

#include "amzv/coalgebra.hpp"
#include "amzv/rng.hpp"
#include "amzv/zeta.hpp"

namespace amzv {

/// Test-only structure corruptions; the CLI never sets these.
struct Faults {
  ProductFaults products;
  CoalgebraFaults coalgebra;
};

struct VerifyOptions {
  /// Worker threads; 0 means one per hardware thread.
  int jobs = 1;
  /// Rendered counterexamples kept per section (all failures are counted).
  int max_counterexamples = 5;
  Faults faults;
};

/// One identity checked over a family of instances.
struct Section {
  std::string theorem_id;
  int q = 0;
  /// Bound parameters, e.g. "w<=6" or "d<=3,w<=4,N=32,trials=100".
  std::string bound;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> counterexamples;
  double millis = 0;

  bool passed() const { return failures == 0; }
};

struct CheckReport {
  std::string suite;
  int q = 0;
  std::vector<Section> sections;

  bool passed() const;
  std::uint64_t instances() const;
  std::uint64_t failures() const;
  double millis() const;
  /// First section with the given id, or nullptr.
  const Section* find(const std::string& theorem_id) const;
};

/// Random element: 1 to max_terms terms, each a uniformly chosen basis word of
/// a uniformly chosen weight in [1, max_weight] with a uniform unit coefficient.
Element random_element(SplitMix64& rng, int max_weight, int max_terms, const FieldPtr& field);

/// Commutativity over basis-word pairs of total weight <= pair_bound and
/// associativity over triples of total weight <= triple_bound, for the diamond
/// and shuffle products, plus the triangle-product laws and horizontal-map
/// lemmas at the same bounds.
CheckReport check_algebra(const FieldPtr& field, int pair_bound, int triple_bound, const VerifyOptions& options = {});
inline CheckReport check_algebra(const FieldPtr& field, int max_total_weight, const VerifyOptions& options = {}) {
  return check_algebra(field, max_total_weight, max_total_weight, options);
}

/// Compatibility over pairs of total weight <= max_weight; coassociativity,
/// counit, grading, left-tensorand nonemptiness and the horizontal-map law on
/// words of weight <= max_weight; the diamond-coproduct lemma on pairs.
CheckReport check_coalgebra(const FieldPtr& field, int max_weight, const VerifyOptions& options = {});

/// Antipode axioms, weight preservation, S^2 = Id and S(u sha v) = S(u) sha S(v)
/// on words/pairs of weight <= max_weight; the dimension formula for weights
/// <= dimension_bound.
CheckReport check_hopf(const FieldPtr& field, int max_weight, int dimension_bound = 8, const VerifyOptions& options = {});

/// Closed depth-one coproduct against the weight recursion for n <= max_n, the
/// Delta^j_{1,n} table for n <= table_bound, and the full coproduct against
/// the recursion on MZV words of depth >= 2 and weight <= max_n.
CheckReport check_coproduct_oracle(const FieldPtr& field, int max_n, int table_bound = 12, const VerifyOptions& options = {});

struct ZetaCheckParams {
  int d_max = 3;
  int max_weight = 4;
  int max_terms = 3;
  /// Precision for S_{<d}.
  int prec = 32;
  /// Precision for zeta_A (which sums S_d up to d = zeta_prec).
  int zeta_prec = 20;
  int trials = 100;
  std::uint64_t seed = 1;
  /// Chen and twisted Chen: r + s <= chen_weight, d <= chen_d.
  int chen_weight = 6;
  int chen_d = 2;
  std::uint64_t budget = kDefaultBudget;
};

/// Shuffle-homomorphism property of S_{<d} and zeta_A on random element pairs,
/// Chen and twisted Chen, the character-twist law and the valuation bound.
CheckReport check_zeta_homomorphism(const FieldPtr& field, const ZetaCheckParams& params, const VerifyOptions& options = {});

/// Human-readable report, one line per section plus counterexamples.
std::string format_report_text(const CheckReport& report);
/// One tab-separated line per section: theorem_id q bound instances failures millis.
std::string format_report_machine(const CheckReport& report);

}  // namespace amzv
