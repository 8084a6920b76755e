#ifndef MATGEN_SUITES_HPP
#define MATGEN_SUITES_HPP

#include <map>
#include <string>

#include "matgen/classify.hpp"
#include "matgen/subspace.hpp"

namespace matgen {

/// GF(q) for a prime power q (exponent <= 3).
Field field_of_order(int q);

/// All subspaces of F^n in deterministic order (dimension, then echelon-basis
/// enumeration order).
std::vector<Subspace> enumerate_subspaces(Field f, int n, bool nontrivial_only);

struct SuiteOptions {
  int jobs = 1;
  bool full_scan = false; // audit: direct 6-family loop instead of extensions
  unsigned seed = 0;
  int trials = 200;
  long long stride = 1;
  std::size_t sample_cap = 4;
};

struct SuiteReport {
  std::string suite;
  std::string field;
  long long families_scanned = 0;
  long long independent_found = 0;
  long long pattern1_count = 0;
  long long pattern2_count = 0;
  long long violations = 0;
  int independence_number = -1;
  std::map<std::string, long long> extra;
  std::vector<std::string> witness_samples;
  std::vector<std::string> violation_samples;
  double elapsed_ms = 0;

  bool passed() const { return violations == 0; }
};

/// Exhaustive 5- and 6-element family scan of Sub(F_q^3), q in {2,3,4,5}:
/// independence vs. pattern equivalence, the 6-family bound, and the
/// independence number.
SuiteReport suite_indep_sub3(int q, const SuiteOptions& opts = {});

/// Lines of F_q^2: every 3 distinct lines independent, every 4-family
/// dependent; q in {3,4,5,7}.
SuiteReport suite_pgl2(int q, const SuiteOptions& opts = {});

/// 4 distinct lines of F_q^3 are independent iff not coplanar; q in {3,4,5}.
SuiteReport suite_four_lines(int q, const SuiteOptions& opts = {});

/// gl_independent vs m_independent agreement over Sub(F_q^3) 5-families
/// (valid for q > n); stride subsamples the scan deterministically.
SuiteReport suite_gl_vs_monoid(int q, const SuiteOptions& opts = {});

/// Randomized two-sided generation equivalence instances.
SuiteReport suite_laffey_random(const SuiteOptions& opts = {});

/// Randomized unital/non-unital agreement and base-change invariance.
SuiteReport suite_unital_random(const SuiteOptions& opts = {});

// --- dimension arithmetic ---

long long dim_Z(int n, int r);

struct DimReport {
  std::string which; // "2x3" | "3x5"
  bool has_alpha = false;
  Scalar alpha;
  int centralizer_dim = 0;
  long long dim_I = 0;
  long long dim_Z_val = 0;
};

/// Orbit-dimension arithmetic grounded in a computed centralizer: the
/// canonical triple of M_2.
DimReport dim_arith_report_2x3(Field f);
/// Same for the 5-tuple family in M_3 at the given parameter.
DimReport dim_arith_report_3x5(const Scalar& alpha);

/// d < r n^2 - max(dim_I, dim_Z): a locally redundant generating r-tuple is
/// guaranteed.
bool azumaya_bound_check(long long d, int n, int r, long long dim_I, long long dim_Z_val);

/// Fixed-value checks over the dimension arithmetic; violations counted.
SuiteReport suite_dims(Field f);

} // namespace matgen

#endif
