#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matgen/suites.hpp"

using namespace matgen;

TEST_CASE("field_of_order") {
  CHECK(field_of_order(7) == prime_field(7));
  CHECK(field_of_order(4) == extension_field(2, 2));
  CHECK(field_of_order(9) == extension_field(3, 2));
  CHECK(field_of_order(8) == extension_field(2, 3));
  CHECK_THROWS_AS(field_of_order(6), MatgenError);
  CHECK_THROWS_AS(field_of_order(16), MatgenError); // 2^4 exceeds the degree cap
}

TEST_CASE("enumerate_subspaces counts") {
  for (int q : {2, 3, 4}) {
    Field f = field_of_order(q);
    auto all = enumerate_subspaces(f, 3, false);
    CHECK(static_cast<int>(all.size()) == 2 + 2 * (q * q + q + 1));
    auto nontrivial = enumerate_subspaces(f, 3, true);
    CHECK(static_cast<int>(nontrivial.size()) == 2 * (q * q + q + 1));
    int lines = 0;
    for (const Subspace& s : nontrivial)
      if (s.dim() == 1) ++lines;
    CHECK(lines == q * q + q + 1);
    // all distinct
    for (std::size_t i = 0; i < nontrivial.size(); ++i)
      for (std::size_t j = i + 1; j < nontrivial.size(); ++j)
        CHECK(nontrivial[i] != nontrivial[j]);
  }
  auto plines = enumerate_subspaces(prime_field(5), 2, true);
  CHECK(plines.size() == 6);
}

TEST_CASE("suite_indep_sub3 at q = 2") {
  SuiteReport rep = suite_indep_sub3(2);
  CHECK(rep.passed());
  CHECK(rep.families_scanned == 2002); // C(14,5)
  CHECK(rep.extra["six_families_independent"] == 0);
  CHECK(rep.independence_number <= 5);
  MESSAGE("q=2 independence number: ", rep.independence_number,
          " independent 5-families: ", rep.independent_found);
}

TEST_CASE("suite_indep_sub3 at q = 3") {
  SuiteOptions opts;
  opts.jobs = 4;
  SuiteReport rep = suite_indep_sub3(3, opts);
  CHECK(rep.passed());
  CHECK(rep.independence_number == 5);
  CHECK(rep.families_scanned == 65780); // C(26,5)
  CHECK(rep.independent_found > 0);
  CHECK(rep.pattern1_count == rep.pattern2_count);
  CHECK(rep.pattern1_count + rep.pattern2_count == rep.independent_found);
  CHECK(rep.extra["six_families_independent"] == 0);
}

TEST_CASE("suite determinism across worker counts and full scan") {
  SuiteOptions serial, parallel;
  serial.jobs = 1;
  parallel.jobs = 3;
  SuiteReport a = suite_indep_sub3(2, serial);
  SuiteReport b = suite_indep_sub3(2, parallel);
  CHECK(a.families_scanned == b.families_scanned);
  CHECK(a.independent_found == b.independent_found);
  CHECK(a.pattern1_count == b.pattern1_count);
  CHECK(a.pattern2_count == b.pattern2_count);
  CHECK(a.violations == b.violations);
  CHECK(a.witness_samples == b.witness_samples);

  SuiteOptions audit;
  audit.full_scan = true;
  SuiteReport c = suite_indep_sub3(2, audit);
  CHECK(c.extra["six_families_checked"] == c.extra["six_families_covered"]);
  CHECK(c.extra["six_families_independent"] == a.extra["six_families_independent"]);
  CHECK(c.violations == a.violations);
}

TEST_CASE("suite_pgl2") {
  for (int q : {3, 5}) {
    SuiteReport rep = suite_pgl2(q);
    CHECK(rep.passed());
    CHECK(rep.independence_number == 3);
    long long lines = q + 1;
    CHECK(rep.extra["lines"] == lines);
  }
  CHECK_THROWS_AS(suite_pgl2(2), MatgenError);
}

TEST_CASE("suite_four_lines at q = 3") {
  SuiteReport rep = suite_four_lines(3);
  CHECK(rep.passed());
  CHECK(rep.extra["lines"] == 13);
  CHECK(rep.families_scanned == 715); // C(13,4)
  CHECK(rep.independent_found > 0);
}

TEST_CASE("suite_gl_vs_monoid subsampled at q = 5") {
  SuiteOptions opts;
  opts.stride = 971;
  SuiteReport rep = suite_gl_vs_monoid(5, opts);
  CHECK(rep.passed());
  CHECK(rep.families_scanned > 1000);
}

TEST_CASE("suite_laffey_random") {
  SuiteOptions opts;
  opts.trials = 60;
  SuiteReport rep = suite_laffey_random(opts);
  CHECK(rep.passed());
  CHECK(rep.extra["true_instances"] > 0);
  CHECK(rep.extra["false_instances"] > 0);
  CHECK(rep.extra["true_instances"] + rep.extra["false_instances"] == 60);
}

TEST_CASE("suite_unital_random") {
  SuiteOptions opts;
  opts.trials = 100;
  SuiteReport rep = suite_unital_random(opts);
  CHECK(rep.passed());
  CHECK(rep.families_scanned == 200);
}

TEST_CASE("dimension arithmetic") {
  CHECK(dim_Z(3, 5) == 37);
  CHECK(dim_Z(2, 3) == 10);
  for (int n = 2; n <= 5; ++n) CHECK(dim_Z(n, 2) == 2 * n * n - (n - 1));

  Field f7 = prime_field(7);
  DimReport d2 = dim_arith_report_2x3(f7);
  CHECK(d2.centralizer_dim == 1);
  CHECK(d2.dim_I == 9);
  for (long long a : {0, 2, 3}) {
    DimReport d3 = dim_arith_report_3x5(Scalar(f7, a));
    CHECK(d3.centralizer_dim == 1);
    CHECK(d3.dim_I == 19);
    CHECK(d3.dim_Z_val == 37);
  }

  CHECK(azumaya_bound_check(7, 3, 5, 19, 37));
  CHECK(!azumaya_bound_check(8, 3, 5, 19, 37));
  CHECK(azumaya_bound_check(0, 3, 5, 19, 37));

  SuiteReport rep = suite_dims(f7);
  CHECK(rep.passed());
}
