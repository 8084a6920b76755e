#include "matgen/suites.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <thread>

#include "matgen/genset.hpp"
#include "matgen/independence.hpp"

namespace matgen {

Field field_of_order(int q) {
  require(q >= 2, Err::UnsupportedField, "field order must be at least 2");
  int p = 2;
  while (q % p != 0) ++p;
  int k = 0, rest = q;
  while (rest % p == 0) { rest /= p; ++k; }
  require(rest == 1 && k <= 3, Err::UnsupportedField,
          "field order must be a prime power p^k with k <= 3");
  return k == 1 ? prime_field(p) : extension_field(p, k);
}

std::vector<Subspace> enumerate_subspaces(Field f, int n, bool nontrivial_only) {
  require(f->finite(), Err::InfiniteField, "cannot enumerate subspaces over the rationals");
  std::vector<Subspace> out;
  auto elems = enumerate_field(f);
  std::int64_t q = f->cardinality();
  for (int d = 0; d <= n; ++d) {
    if (nontrivial_only && (d == 0 || d == n)) continue;
    if (d == 0) {
      out.emplace_back(f, n);
      continue;
    }
    // pivot column subsets in lexicographic order
    std::vector<int> piv(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) piv[static_cast<std::size_t>(i)] = i;
    for (;;) {
      // free positions: to the right of each pivot, outside pivot columns
      std::vector<std::pair<int, int>> free_pos;
      for (int i = 0; i < d; ++i)
        for (int c = piv[static_cast<std::size_t>(i)] + 1; c < n; ++c)
          if (std::find(piv.begin(), piv.end(), c) == piv.end())
            free_pos.emplace_back(i, c);
      std::vector<std::int64_t> odo(free_pos.size(), 0);
      for (;;) {
        std::vector<Vec> rows(static_cast<std::size_t>(d),
                              Vec(static_cast<std::size_t>(n), Scalar::zero(f)));
        for (int i = 0; i < d; ++i)
          rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])] =
              Scalar::one(f);
        for (std::size_t t = 0; t < free_pos.size(); ++t)
          rows[static_cast<std::size_t>(free_pos[t].first)][static_cast<std::size_t>(free_pos[t].second)] =
              elems[static_cast<std::size_t>(odo[t])];
        out.push_back(Subspace::from_spanning(f, n, rows));
        // bump odometer
        std::size_t pos = 0;
        while (pos < odo.size() && ++odo[pos] == q) odo[pos++] = 0;
        if (pos == odo.size() && !odo.empty()) break;
        if (odo.empty()) break;
      }
      // next pivot subset
      int i = d - 1;
      while (i >= 0 && piv[static_cast<std::size_t>(i)] == n - d + i) --i;
      if (i < 0) break;
      ++piv[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < d; ++j)
        piv[static_cast<std::size_t>(j)] = piv[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string family_to_string(const std::vector<Subspace>& family) {
  std::ostringstream os;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i) os << " | ";
    os << family[i].to_string();
  }
  return os.str();
}

std::vector<Subspace> pick(const std::vector<Subspace>& subs, const std::vector<int>& idx) {
  std::vector<Subspace> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(subs[static_cast<std::size_t>(i)]);
  return out;
}

// all ascending k-index combinations of {0..n-1} starting at `first`
template <typename Fn>
void combinations_with_first(int n, int k, int first, Fn&& fn) {
  std::vector<int> c(static_cast<std::size_t>(k));
  c[0] = first;
  for (int i = 1; i < k; ++i) c[static_cast<std::size_t>(i)] = first + i;
  if (c.back() >= n) return;
  for (;;) {
    fn(c);
    int i = k - 1;
    while (i >= 1 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 1) return;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct Sample {
  std::vector<int> idx;
  std::string text;
  bool operator<(const Sample& o) const { return idx < o.idx; }
};

void keep_samples(std::vector<Sample>& samples, std::size_t cap) {
  std::sort(samples.begin(), samples.end());
  if (samples.size() > cap) samples.resize(cap);
}

} // namespace

SuiteReport suite_indep_sub3(int q, const SuiteOptions& opts) {
  require(q == 2 || q == 3 || q == 4 || q == 5, Err::UnsupportedField,
          "suite_indep_sub3 supports q in {2,3,4,5}");
  auto start = Clock::now();
  Field f = field_of_order(q);
  std::vector<Subspace> subs = enumerate_subspaces(f, 3, true);
  int n_subs = static_cast<int>(subs.size());
  int jobs = std::max(1, opts.jobs);

  SuiteReport rep;
  rep.suite = "indep-sub3";
  rep.field = f->to_string();

  struct Part {
    long long scanned = 0, independent = 0, p1 = 0, p2 = 0, violations = 0;
    std::vector<std::array<int, 5>> indep_families;
    std::vector<Sample> witness_samples, violation_samples;
  };
  std::vector<Part> parts(static_cast<std::size_t>(jobs));

  auto scan_family = [&](Part& part, const std::vector<int>& idx) {
    ++part.scanned;
    std::vector<Subspace> family = pick(subs, idx);
    bool indep = gl_independent(family).independent;
    PatternResult pat = pattern_classify(family);
    if (indep) {
      ++part.independent;
      part.indep_families.push_back({idx[0], idx[1], idx[2], idx[3], idx[4]});
      if (part.witness_samples.size() < opts.sample_cap)
        part.witness_samples.push_back({idx, family_to_string(family)});
    }
    if (pat.kind == PatternResult::Kind::Pattern1) ++part.p1;
    if (pat.kind == PatternResult::Kind::Pattern2) ++part.p2;
    bool mismatch = (q > 2) ? (indep != pat.matched()) : (indep && !pat.matched());
    if (mismatch) {
      ++part.violations;
      if (part.violation_samples.size() < opts.sample_cap)
        part.violation_samples.push_back({idx, "independence/pattern mismatch: " +
                                                   family_to_string(family)});
    }
  };

  {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w)
      threads.emplace_back([&, w] {
        for (int first = w; first + 4 < n_subs; first += jobs)
          combinations_with_first(n_subs, 5, first,
                                  [&](const std::vector<int>& idx) { scan_family(parts[static_cast<std::size_t>(w)], idx); });
      });
    for (auto& t : threads) t.join();
  }

  std::vector<std::array<int, 5>> indep_families;
  std::vector<Sample> witness_samples, violation_samples;
  for (Part& part : parts) {
    rep.families_scanned += part.scanned;
    rep.independent_found += part.independent;
    rep.pattern1_count += part.p1;
    rep.pattern2_count += part.p2;
    rep.violations += part.violations;
    indep_families.insert(indep_families.end(), part.indep_families.begin(),
                          part.indep_families.end());
    witness_samples.insert(witness_samples.end(), part.witness_samples.begin(),
                           part.witness_samples.end());
    violation_samples.insert(violation_samples.end(), part.violation_samples.begin(),
                             part.violation_samples.end());
  }
  std::sort(indep_families.begin(), indep_families.end());

  // 6-element phase: an independent 6-family restricts to an independent
  // 5-family on its 5 lowest members, so extending the found families covers
  // everything; --full-scan audits the direct loop
  long long six_checked = 0, six_independent = 0;
  std::vector<Sample> six_violations;
  if (opts.full_scan) {
    struct SixPart {
      long long checked = 0, indep = 0;
      std::vector<Sample> violations;
    };
    std::vector<SixPart> sparts(static_cast<std::size_t>(jobs));
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w)
      threads.emplace_back([&, w] {
        SixPart& part = sparts[static_cast<std::size_t>(w)];
        for (int first = w; first + 5 < n_subs; first += jobs)
          combinations_with_first(n_subs, 6, first, [&](const std::vector<int>& idx) {
            ++part.checked;
            if (gl_independent(pick(subs, idx)).independent) {
              ++part.indep;
              if (part.violations.size() < opts.sample_cap)
                part.violations.push_back({idx, "independent 6-family: " +
                                                    family_to_string(pick(subs, idx))});
            }
          });
      });
    for (auto& t : threads) t.join();
    for (SixPart& part : sparts) {
      six_checked += part.checked;
      six_independent += part.indep;
      six_violations.insert(six_violations.end(), part.violations.begin(), part.violations.end());
    }
  } else {
    struct SixPart {
      long long checked = 0, indep = 0;
      std::vector<Sample> violations;
    };
    std::vector<SixPart> sparts(static_cast<std::size_t>(jobs));
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w)
      threads.emplace_back([&, w] {
        SixPart& part = sparts[static_cast<std::size_t>(w)];
        for (std::size_t fi = static_cast<std::size_t>(w); fi < indep_families.size();
             fi += static_cast<std::size_t>(jobs)) {
          const auto& base = indep_families[fi];
          for (int extra = base[4] + 1; extra < n_subs; ++extra) {
            ++part.checked;
            std::vector<int> idx{base[0], base[1], base[2], base[3], base[4], extra};
            if (gl_independent(pick(subs, idx)).independent) {
              ++part.indep;
              if (part.violations.size() < opts.sample_cap)
                part.violations.push_back({idx, "independent 6-family: " +
                                                    family_to_string(pick(subs, idx))});
            }
          }
        }
      });
    for (auto& t : threads) t.join();
    for (SixPart& part : sparts) {
      six_checked += part.checked;
      six_independent += part.indep;
      six_violations.insert(six_violations.end(), part.violations.begin(), part.violations.end());
    }
  }
  rep.violations += six_independent;
  violation_samples.insert(violation_samples.end(), six_violations.begin(), six_violations.end());
  rep.extra["six_families_covered"] = binomial(n_subs, 6);
  rep.extra["six_families_checked"] = six_checked;
  rep.extra["six_families_independent"] = six_independent;
  rep.extra["subspaces"] = n_subs;

  if (six_independent > 0) {
    rep.independence_number = 6;
  } else if (rep.independent_found > 0) {
    rep.independence_number = 5;
  } else {
    // descend: largest k with an independent k-family
    for (int k = 4; k >= 1 && rep.independence_number < 0; --k) {
      bool found = false;
      for (int first = 0; first + k - 1 < n_subs && !found; ++first)
        combinations_with_first(n_subs, k, first, [&](const std::vector<int>& idx) {
          if (!found && gl_independent(pick(subs, idx)).independent) found = true;
        });
      if (found) rep.independence_number = k;
    }
  }

  keep_samples(witness_samples, opts.sample_cap);
  keep_samples(violation_samples, opts.sample_cap);
  for (const Sample& s : witness_samples) rep.witness_samples.push_back(s.text);
  for (const Sample& s : violation_samples) rep.violation_samples.push_back(s.text);
  rep.elapsed_ms = ms_since(start);
  return rep;
}

SuiteReport suite_pgl2(int q, const SuiteOptions& opts) {
  require(q == 3 || q == 4 || q == 5 || q == 7, Err::UnsupportedField,
          "suite_pgl2 supports q in {3,4,5,7}");
  auto start = Clock::now();
  Field f = field_of_order(q);
  std::vector<Subspace> lines = enumerate_subspaces(f, 2, true);
  int n_lines = static_cast<int>(lines.size());

  SuiteReport rep;
  rep.suite = "pgl2";
  rep.field = f->to_string();
  rep.extra["lines"] = n_lines;

  for (int first = 0; first + 2 < n_lines; ++first)
    combinations_with_first(n_lines, 3, first, [&](const std::vector<int>& idx) {
      ++rep.families_scanned;
      if (gl_independent(pick(lines, idx)).independent) {
        ++rep.independent_found;
      } else {
        ++rep.violations;
        if (rep.violation_samples.size() < opts.sample_cap)
          rep.violation_samples.push_back("dependent line triple: " +
                                          family_to_string(pick(lines, idx)));
      }
    });
  for (int first = 0; first + 3 < n_lines; ++first)
    combinations_with_first(n_lines, 4, first, [&](const std::vector<int>& idx) {
      ++rep.families_scanned;
      if (gl_independent(pick(lines, idx)).independent) {
        ++rep.violations;
        if (rep.violation_samples.size() < opts.sample_cap)
          rep.violation_samples.push_back("independent 4-family: " +
                                          family_to_string(pick(lines, idx)));
      }
    });
  rep.independence_number = rep.violations == 0 ? 3 : -1;
  rep.elapsed_ms = ms_since(start);
  return rep;
}

SuiteReport suite_four_lines(int q, const SuiteOptions& opts) {
  require(q == 3 || q == 4 || q == 5, Err::UnsupportedField,
          "suite_four_lines supports q in {3,4,5}");
  auto start = Clock::now();
  Field f = field_of_order(q);
  std::vector<Subspace> all = enumerate_subspaces(f, 3, true);
  std::vector<Subspace> lines;
  for (const Subspace& s : all)
    if (s.dim() == 1) lines.push_back(s);
  int n_lines = static_cast<int>(lines.size());

  SuiteReport rep;
  rep.suite = "four-lines";
  rep.field = f->to_string();
  rep.extra["lines"] = n_lines;

  for (int first = 0; first + 3 < n_lines; ++first)
    combinations_with_first(n_lines, 4, first, [&](const std::vector<int>& idx) {
      ++rep.families_scanned;
      std::vector<Subspace> family = pick(lines, idx);
      bool coplanar = sum(sum(family[0], family[1]), sum(family[2], family[3])).dim() <= 2;
      bool indep = gl_independent(family).independent;
      if (indep) ++rep.independent_found;
      if (indep == coplanar) {
        ++rep.violations;
        if (rep.violation_samples.size() < opts.sample_cap)
          rep.violation_samples.push_back("independence/coplanarity mismatch: " +
                                          family_to_string(family));
      }
    });
  rep.elapsed_ms = ms_since(start);
  return rep;
}

SuiteReport suite_gl_vs_monoid(int q, const SuiteOptions& opts) {
  require(q == 4 || q == 5, Err::UnsupportedField,
          "gl/monoid agreement needs |F| > 3; q in {4,5}");
  auto start = Clock::now();
  Field f = field_of_order(q);
  std::vector<Subspace> subs = enumerate_subspaces(f, 3, true);
  int n_subs = static_cast<int>(subs.size());
  long long stride = std::max<long long>(1, opts.stride);

  SuiteReport rep;
  rep.suite = "gl-vs-monoid";
  rep.field = f->to_string();
  rep.extra["stride"] = stride;

  long long counter = 0;
  for (int first = 0; first + 4 < n_subs; ++first)
    combinations_with_first(n_subs, 5, first, [&](const std::vector<int>& idx) {
      if (counter++ % stride != 0) return;
      ++rep.families_scanned;
      std::vector<Subspace> family = pick(subs, idx);
      bool gl = gl_independent(family).independent;
      bool mono = m_independent(family).independent;
      if (gl) ++rep.independent_found;
      if (gl != mono) {
        ++rep.violations;
        if (rep.violation_samples.size() < opts.sample_cap)
          rep.violation_samples.push_back("gl/monoid mismatch: " + family_to_string(family));
      }
    });
  rep.elapsed_ms = ms_since(start);
  return rep;
}

namespace {

Matrix random_dense(Field f, int n, std::mt19937_64& rng) {
  Matrix a(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = random_scalar(f, rng);
  return a;
}

Matrix random_sparse(Field f, int n, std::mt19937_64& rng) {
  Matrix a(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rng() % 3 == 0) a.at(i, j) = random_scalar(f, rng);
  return a;
}

} // namespace

SuiteReport suite_laffey_random(const SuiteOptions& opts) {
  auto start = Clock::now();
  Field f = prime_field(5);
  std::mt19937_64 rng(opts.seed);

  // desk-scale block shapes with n <= 4
  const std::vector<BlockShape> shapes = {
      {{{1, 1}}},         {{{2, 1}}},         {{{1, 2}}},         {{{3, 1}}},
      {{{1, 3}}},         {{{2, 2}}},         {{{4, 1}}},         {{{1, 4}}},
      {{{1, 1}, {1, 1}}}, {{{2, 1}, {1, 1}}}, {{{1, 2}, {1, 1}}}, {{{2, 1}, {2, 1}}},
      {{{2, 1}, {1, 2}}}, {{{1, 2}, {1, 2}}}, {{{3, 1}, {1, 1}}}, {{{1, 3}, {1, 1}}},
      {{{1, 1}, {1, 1}, {1, 1}}},             {{{2, 1}, {1, 1}, {1, 1}}},
  };
  std::vector<BlockShape> proper_shapes; // A is a proper subalgebra of M_n
  for (const BlockShape& s : shapes)
    if (!(s.t() == 1 && s.blocks[0].second == 1)) proper_shapes.push_back(s);

  SuiteReport rep;
  rep.suite = "laffey-random";
  rep.field = f->to_string();

  long long true_count = 0, false_count = 0;
  for (int trial = 0; trial < opts.trials; ++trial) {
    int mode = trial % 3;
    const BlockShape& shape = (mode == 1)
        ? proper_shapes[rng() % proper_shapes.size()]
        : shapes[rng() % shapes.size()];
    int n = shape.n();
    std::vector<Matrix> s;
    if (mode == 0) {
      int cnt = 2 + static_cast<int>(rng() % 2);
      for (int i = 0; i < cnt; ++i) s.push_back(random_dense(f, n, rng));
    } else if (mode == 1) {
      // members of the block algebra itself: generation must fail both ways
      auto basis = block_algebra_basis(shape, f);
      int cnt = 1 + static_cast<int>(rng() % 2);
      for (int i = 0; i < cnt; ++i) {
        Matrix a(f, n, n);
        for (const Matrix& b : basis) a = a + b.scaled(random_scalar(f, rng));
        s.push_back(std::move(a));
      }
    } else {
      int cnt = 1 + static_cast<int>(rng() % 2);
      for (int i = 0; i < cnt; ++i) s.push_back(random_sparse(f, n, rng));
    }
    ++rep.families_scanned;
    auto [lhs, rhs] = laffey_equiv_check(shape, s);
    (lhs ? true_count : false_count) += 1;
    if (lhs != rhs) {
      ++rep.violations;
      if (rep.violation_samples.size() < opts.sample_cap) {
        std::ostringstream os;
        os << "two-sided mismatch at trial " << trial;
        rep.violation_samples.push_back(os.str());
      }
    }
  }
  rep.extra["true_instances"] = true_count;
  rep.extra["false_instances"] = false_count;
  rep.elapsed_ms = ms_since(start);
  return rep;
}

SuiteReport suite_unital_random(const SuiteOptions& opts) {
  auto start = Clock::now();
  std::mt19937_64 rng(opts.seed);
  SuiteReport rep;
  rep.suite = "unital-random";
  rep.field = "gf:2 gf:3 gf:5 gf:7";

  const std::vector<std::int64_t> primes = {2, 3, 5, 7};
  for (int trial = 0; trial < opts.trials; ++trial) {
    Field f = prime_field(primes[rng() % primes.size()]);
    int n = 2 + static_cast<int>(rng() % 3);
    std::vector<Matrix> s;
    int cnt = 1 + static_cast<int>(rng() % (2 * static_cast<unsigned>(n)));
    for (int i = 0; i < cnt; ++i) s.push_back(random_dense(f, n, rng));
    ++rep.families_scanned;
    if (generates(s, true) != generates(s, false)) {
      ++rep.violations;
      if (rep.violation_samples.size() < opts.sample_cap)
        rep.violation_samples.push_back("unital/non-unital disagreement at trial " +
                                        std::to_string(trial));
    }
  }
  for (int trial = 0; trial < opts.trials; ++trial) {
    std::int64_t p = primes[rng() % primes.size()];
    Field fp = prime_field(p);
    Field fp2 = extension_field(p, 2);
    int n = 2 + static_cast<int>(rng() % 2);
    std::vector<Matrix> s, s2;
    int cnt = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < cnt; ++i) {
      Matrix a = random_dense(fp, n, rng);
      Matrix b(fp2, n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) b.at(r, c) = embed_scalar(a.at(r, c), fp2);
      s.push_back(std::move(a));
      s2.push_back(std::move(b));
    }
    ++rep.families_scanned;
    if (generates(s, true) != generates(s2, true)) {
      ++rep.violations;
      if (rep.violation_samples.size() < opts.sample_cap)
        rep.violation_samples.push_back("base-change disagreement at trial " +
                                        std::to_string(trial));
    }
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

long long dim_Z(int n, int r) {
  require(n >= 1 && r >= 1, Err::BadInput, "dim_Z needs positive n, r");
  return static_cast<long long>(r) * n * n - static_cast<long long>(r - 1) * (n - 1);
}

namespace {

int scalar_centralizer_dim(const std::vector<Matrix>& tuple) {
  SpanBasis c = centralizer(tuple);
  require(c.dim() >= 1, Err::Internal, "centralizer lost the identity");
  require(c.dim() == 1, Err::CentralizerTooBig,
          "centralizer dimension " + std::to_string(c.dim()) + " falsifies the orbit arithmetic");
  return c.dim();
}

} // namespace

DimReport dim_arith_report_2x3(Field f) {
  DimReport rep;
  rep.which = "2x3";
  rep.centralizer_dim = scalar_centralizer_dim(canonical_irredundant(2, f));
  // dim PGL_2 + 3 affine pairs - stabilizer 0
  rep.dim_I = 3 + 3 * 2 - 0;
  rep.dim_Z_val = dim_Z(2, 3);
  return rep;
}

DimReport dim_arith_report_3x5(const Scalar& alpha) {
  DimReport rep;
  rep.which = "3x5";
  rep.has_alpha = true;
  rep.alpha = alpha;
  rep.centralizer_dim = scalar_centralizer_dim(s_alpha(alpha));
  // dim PGL_3 + 5 affine pairs + the parameter line
  rep.dim_I = 8 + 5 * 2 + 1;
  rep.dim_Z_val = dim_Z(3, 5);
  return rep;
}

bool azumaya_bound_check(long long d, int n, int r, long long dim_I, long long dim_Z_val) {
  require(d >= 0 && n >= 1 && r >= 1 && dim_I >= 0 && dim_Z_val >= 0, Err::BadInput,
          "azumaya_bound_check needs nonnegative inputs");
  return d < static_cast<long long>(r) * n * n - std::max(dim_I, dim_Z_val);
}

SuiteReport suite_dims(Field f) {
  auto start = Clock::now();
  SuiteReport rep;
  rep.suite = "dims";
  rep.field = f->to_string();
  auto expect = [&](bool ok, const std::string& what) {
    ++rep.families_scanned;
    if (!ok) {
      ++rep.violations;
      rep.violation_samples.push_back(what);
    }
  };
  try {
    DimReport d2 = dim_arith_report_2x3(f);
    expect(d2.dim_I == 9 && d2.centralizer_dim == 1, "2x3 orbit arithmetic");
    expect(d2.dim_Z_val == 10, "dim_Z(2,3)");
    for (long long a : {0, 2, 3}) {
      DimReport d3 = dim_arith_report_3x5(Scalar(f, a));
      expect(d3.dim_I == 19 && d3.centralizer_dim == 1,
             "3x5 orbit arithmetic at alpha=" + std::to_string(a));
    }
    expect(dim_Z(3, 5) == 37, "dim_Z(3,5)");
    expect(azumaya_bound_check(7, 3, 5, 19, 37), "bound check at d=7");
    expect(!azumaya_bound_check(8, 3, 5, 19, 37), "bound check at d=8");
  } catch (const MatgenError& e) {
    ++rep.violations;
    rep.violation_samples.push_back(e.what());
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

} // namespace matgen
