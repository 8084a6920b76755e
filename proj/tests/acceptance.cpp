// Acceptance suite: runs every shipped criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code is the failure count.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "matgen/classify.hpp"
#include "matgen/genset.hpp"
#include "matgen/independence.hpp"
#include "matgen/suites.hpp"

using namespace matgen;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<bool(std::string&)> run;
};

Matrix random_matrix(Field f, int n, std::mt19937_64& rng) {
  Matrix a(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = random_scalar(f, rng);
  return a;
}

Matrix random_invertible(Field f, int n, std::mt19937_64& rng) {
  for (;;) {
    Matrix g = random_matrix(f, n, rng);
    if (is_invertible(g)) return g;
  }
}

TransformRecord random_record(Field f, int n, int r, std::mt19937_64& rng) {
  TransformRecord t = TransformRecord::identity(f, n, r);
  std::vector<int> sigma(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) sigma[static_cast<std::size_t>(i)] = i;
  std::shuffle(sigma.begin(), sigma.end(), rng);
  t.then_permute(sigma);
  for (int i = 0; i < r; ++i) {
    Scalar scale = random_scalar(f, rng);
    if (scale.is_zero()) scale = Scalar::one(f);
    t.then_affine(i, scale, random_scalar(f, rng));
  }
  if (rng() % 2 == 0) t.then_transpose();
  t.then_conjugate(random_invertible(f, n, rng));
  return t;
}

bool criterion_canonical_family(std::string& detail) {
  for (Field f : {prime_field(2), prime_field(3), prime_field(7), rationals()}) {
    for (int n = 2; n <= 6; ++n) {
      auto s = canonical_irredundant(n, f);
      if (static_cast<int>(s.size()) != 2 * n - 1) {
        detail = "size mismatch at n=" + std::to_string(n);
        return false;
      }
      if (!generates(s, true) || !is_irredundant_generating(s)) {
        detail = "generation/irredundancy failed at n=" + std::to_string(n) + " over " +
                 f->to_string();
        return false;
      }
    }
  }
  return true;
}

bool criterion_extract_bound(std::string& detail) {
  std::mt19937_64 rng(1001);
  Field f5 = prime_field(5);
  int done = 0;
  while (done < 1000) {
    int n = 2 + done % 3;
    std::vector<Matrix> s;
    int cnt = 2 * n + 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < cnt; ++i) s.push_back(random_matrix(f5, n, rng));
    if (!generates(s, true)) continue;
    auto t = extract_irredundant(s);
    if (static_cast<int>(t.subset.size()) > 2 * n - 1 || !is_irredundant_generating(t.subset)) {
      detail = "bound or irredundancy broken at run " + std::to_string(done);
      return false;
    }
    ++done;
  }
  detail = "1000 runs";
  return true;
}

bool criterion_corner_completion(std::string& detail) {
  std::mt19937_64 rng(1002);
  Field f5 = prime_field(5);
  long long runs = 0;
  for (int n = 1; n <= 4; ++n)
    for (int p = 1; p <= n; ++p)
      for (int q = 1; q <= n; ++q) {
        int done = 0;
        while (done < 5) {
          std::vector<Matrix> s;
          int cnt = 2 * n + static_cast<int>(rng() % 3);
          for (int i = 0; i < cnt; ++i) s.push_back(random_matrix(f5, n, rng));
          std::vector<Matrix> all = corner_basis({p, q, n}, f5);
          all.insert(all.end(), s.begin(), s.end());
          if (!generates(f5, n, all, false)) continue;
          auto t = complete_from_corner({p, q, n}, s);
          std::vector<Matrix> verify = corner_basis({p, q, n}, f5);
          verify.insert(verify.end(), t.subset.begin(), t.subset.end());
          if (static_cast<int>(t.subset.size()) > 2 * n - p - q ||
              !generates(f5, n, verify, false)) {
            detail = "completion post-condition broken at (p,q,n)=(" + std::to_string(p) + "," +
                     std::to_string(q) + "," + std::to_string(n) + ")";
            return false;
          }
          ++done;
          ++runs;
        }
      }
  detail = std::to_string(runs) + " randomized completions over all shapes";
  return true;
}

bool criterion_laffey_counterexample(std::string& detail) {
  for (Field f : {prime_field(7), rationals()}) {
    std::vector<Matrix> gens = {
        embed_corner(mat_of(f, {{1, -1}, {0, 0}}), 3),
        embed_corner(mat_of(f, {{0, 0}, {-1, 1}}), 3),
        mat_of(f, {{0, 0, 0}, {0, 1, -1}, {0, 0, 0}}),
        mat_of(f, {{1, 0, 0}, {0, 1, 0}, {0, 1, 0}}),
        Matrix::identity(f, 3),
    };
    SpanBasis algebra = span_close(gens, false);
    Matrix query = embed_corner(mat_of(f, {{0, 0}, {0, -1}}), 3);
    if (algebra.contains(query)) {
      detail = "the excluded matrix slipped into the closure over " + f->to_string();
      return false;
    }
    Subspace line = Subspace::line(f, {Scalar::one(f), Scalar::one(f), Scalar::one(f)});
    for (const Matrix& b : algebra.basis())
      if (!stabilizes(b, line)) {
        detail = "a closure basis element moves the common eigenline";
        return false;
      }
  }
  return true;
}

bool criterion_sub3_exhaustive(std::string& detail) {
  SuiteOptions opts;
  opts.jobs = 4;
  SuiteReport r3 = suite_indep_sub3(3, opts);
  SuiteReport r4 = suite_indep_sub3(4, opts);
  bool ok = r3.passed() && r4.passed() && r3.independence_number == 5 &&
            r4.independence_number == 5 && r3.extra["six_families_independent"] == 0 &&
            r4.extra["six_families_independent"] == 0 &&
            r3.pattern1_count == r3.pattern2_count &&
            r3.pattern1_count + r3.pattern2_count == r3.independent_found &&
            r4.pattern1_count + r4.pattern2_count == r4.independent_found;
  detail = "q=3: " + std::to_string(r3.independent_found) + " independent, q=4: " +
           std::to_string(r4.independent_found) + " independent";
  return ok;
}

bool criterion_pgl2(std::string& detail) {
  SuiteReport r3 = suite_pgl2(3);
  SuiteReport r5 = suite_pgl2(5);
  detail = "q=3 and q=5";
  return r3.passed() && r5.passed() && r3.independence_number == 3 &&
         r5.independence_number == 3;
}

bool criterion_four_lines(std::string& detail) {
  SuiteReport r = suite_four_lines(3);
  detail = std::to_string(r.families_scanned) + " quadruples";
  return r.passed();
}

bool criterion_classification_round_trips(std::string& detail) {
  Field f7 = prime_field(7);
  std::mt19937_64 rng(1008);
  auto canon = canonical_triple_m2(f7);
  for (int trial = 0; trial < 200; ++trial) {
    TransformRecord t = TransformRecord::identity(f7, 2, 3);
    for (int i = 0; i < 3; ++i) {
      Scalar scale = random_scalar(f7, rng);
      if (scale.is_zero()) scale = Scalar::one(f7);
      t.then_affine(i, scale, random_scalar(f7, rng));
    }
    t.then_conjugate(random_invertible(f7, 2, rng));
    auto moved = apply_transform(canon, t);
    Classification2 c = classify_m2_triple(moved);
    if (apply_transform(moved, c.record) != canon) {
      detail = "classify2 missed the canonical triple at trial " + std::to_string(trial);
      return false;
    }
  }
  for (Field f : {prime_field(7), prime_field(11)}) {
    for (int trial = 0; trial < 100; ++trial) {
      Scalar alpha = random_scalar(f, rng);
      auto moved = apply_transform(s_alpha(alpha), random_record(f, 3, 5, rng));
      Classification3 c = classify_m3_quintuple(moved);
      if (apply_transform(moved, c.record) != s_alpha(c.alpha)) {
        detail = "classify3 record broken over " + f->to_string();
        return false;
      }
      bool seen = false;
      for (const Scalar& a : c.reachable)
        seen = seen || a == alpha || (!alpha.is_zero() && a == alpha.inverse());
      if (!seen) {
        detail = "seeded alpha unreachable over " + f->to_string() + " at trial " +
                 std::to_string(trial);
        return false;
      }
    }
  }
  if (!equivalent_m3(s_alpha(Scalar(f7, 3)), s_alpha(Scalar(f7, 5)))) {
    detail = "inverse pair 3 ~ 5 not confirmed";
    return false;
  }
  detail = "200 + 200 round trips, inverse pair confirmed";
  return true;
}

bool criterion_laffey_random(std::string& detail) {
  SuiteOptions opts;
  opts.trials = 200;
  opts.seed = 1009;
  SuiteReport r = suite_laffey_random(opts);
  detail = std::to_string(r.extra["true_instances"]) + " generating, " +
           std::to_string(r.extra["false_instances"]) + " non-generating";
  return r.passed() && r.extra["true_instances"] >= 30 && r.extra["false_instances"] >= 30;
}

bool criterion_unital_and_base_change(std::string& detail) {
  SuiteOptions opts;
  opts.trials = 500;
  opts.seed = 1010;
  SuiteReport r = suite_unital_random(opts);
  detail = std::to_string(r.families_scanned) + " random sets";
  return r.passed();
}

bool criterion_dimension_arithmetic(std::string& detail) {
  Field f7 = prime_field(7);
  DimReport d2 = dim_arith_report_2x3(f7);
  if (d2.dim_I != 9 || d2.centralizer_dim != 1) {
    detail = "2x3 arithmetic broken";
    return false;
  }
  for (long long a : {0, 2, 3}) {
    DimReport d3 = dim_arith_report_3x5(Scalar(f7, a));
    if (d3.dim_I != 19 || d3.centralizer_dim != 1) {
      detail = "3x5 arithmetic broken at alpha=" + std::to_string(a);
      return false;
    }
  }
  if (dim_Z(3, 5) != 37) {
    detail = "dim_Z(3,5) wrong";
    return false;
  }
  if (!azumaya_bound_check(7, 3, 5, 19, 37) || azumaya_bound_check(8, 3, 5, 19, 37)) {
    detail = "bound check thresholds wrong";
    return false;
  }
  return true;
}

} // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "canonical (2n-1)-set generates irredundantly, n=2..6, four fields", 5.0,
       criterion_canonical_family},
      {2, "greedy extraction honors the 2n-1 bound, 1000 runs over GF(5)", 60.0,
       criterion_extract_bound},
      {3, "corner completion bound and span equality, all shapes n<=4 over GF(5)", 60.0,
       criterion_corner_completion},
      {4, "counterexample algebra excludes the corner product, fixes (1,1,1)", 1.0,
       criterion_laffey_counterexample},
      {5, "exhaustive Sub(F^3) scan at q=3,4: independence number 5, patterns match", 600.0,
       criterion_sub3_exhaustive},
      {6, "line triples of F_q^2 independent, quadruples dependent, q=3,5", 30.0,
       criterion_pgl2},
      {7, "four lines of F_3^3 independent iff non-coplanar, exhaustive", 60.0,
       criterion_four_lines},
      {8, "classification round trips (M_2 and M_3) and the inverse pair", 300.0,
       criterion_classification_round_trips},
      {9, "two-sided generation equivalence, 200 instances with both outcomes", 120.0,
       criterion_laffey_random},
      {10, "unital/non-unital agreement and base-change invariance, 500 sets each", 60.0,
       criterion_unital_and_base_change},
      {11, "orbit-dimension arithmetic: 9, 19, 37 and the d=7/8 threshold", 1.0,
       criterion_dimension_arithmetic},
  };

  int failures = 0;
  for (Criterion& c : criteria) {
    auto start = Clock::now();
    bool ok = false;
    std::string detail;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    bool in_budget = secs < c.budget_s;
    bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("%s  criterion %2d: %s  [%.2fs < %.0fs]%s%s\n", pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), secs, c.budget_s, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
  }
  if (failures == 0)
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures;
}
