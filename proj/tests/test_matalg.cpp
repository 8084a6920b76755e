#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "matgen/matalg.hpp"

using namespace matgen;

namespace {

Matrix random_matrix(Field f, int n, std::mt19937_64& rng) {
  Matrix a(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = random_scalar(f, rng);
  return a;
}

// the (2n-1)-element set from the canonical example, built inline
std::vector<Matrix> canonical_set(Field f, int n) {
  std::vector<Matrix> s;
  for (int i = 0; i + 1 < n; ++i)
    s.push_back(Matrix::unit(f, n, n, i, i) + Matrix::unit(f, n, n, i, i + 1));
  for (int i = 0; i + 1 < n; ++i)
    s.push_back(Matrix::unit(f, n, n, i + 1, i) + Matrix::unit(f, n, n, i + 1, i + 1));
  s.push_back(Matrix::unit(f, n, n, 0, 0));
  return s;
}

Matrix embed_matrix(const Matrix& a, Field target) {
  Matrix out(target, a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = embed_scalar(a.at(i, j), target);
  return out;
}

} // namespace

TEST_CASE("span_close dimensions") {
  Field f7 = prime_field(7);
  CHECK(span_close(canonical_set(f7, 3), false).dim() == 9);
  CHECK(span_close({Matrix::identity(f7, 3)}, false).dim() == 1);
  // e12 e21 = e11, e21 e12 = e22 -> all of M_2
  CHECK(span_close({Matrix::unit(f7, 2, 2, 0, 1), Matrix::unit(f7, 2, 2, 1, 0)}, false).dim() == 4);
}

TEST_CASE("span_close idempotence and flags") {
  std::mt19937_64 rng(3);
  Field f5 = prime_field(5);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    std::vector<Matrix> s;
    for (int i = 0; i < 2; ++i) s.push_back(random_matrix(f5, n, rng));
    SpanBasis span = span_close(s, false);
    CHECK(span.verify_flags());
    SpanBasis again = span_close(span.basis(), false);
    CHECK(again.dim() == span.dim());
    CHECK(again.echelon().basis() == span.echelon().basis());
  }
}

TEST_CASE("generates") {
  Field f7 = prime_field(7);
  for (int n = 2; n <= 5; ++n) CHECK(generates(canonical_set(f7, n), true));
  // dropping b loses generation
  auto s = canonical_set(f7, 3);
  s.pop_back();
  CHECK(!generates(s, true));
  CHECK(!generates(f7, 2, {}, true));
}

TEST_CASE("unital and non-unital generation agree (random)") {
  std::mt19937_64 rng(5);
  for (Field f : {prime_field(2), prime_field(5)}) {
    for (int trial = 0; trial < 60; ++trial) {
      int n = 2 + static_cast<int>(rng() % 2);
      std::vector<Matrix> s;
      int cnt = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < cnt; ++i) s.push_back(random_matrix(f, n, rng));
      CHECK(generates(s, true) == generates(s, false));
    }
  }
}

TEST_CASE("generation is stable under field extension (random)") {
  std::mt19937_64 rng(6);
  for (std::int64_t p : {2, 3, 5}) {
    Field fp = prime_field(p);
    Field fp2 = extension_field(p, 2);
    for (int trial = 0; trial < 40; ++trial) {
      int n = 2 + static_cast<int>(rng() % 2);
      std::vector<Matrix> s, s2;
      int cnt = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < cnt; ++i) {
        s.push_back(random_matrix(fp, n, rng));
        s2.push_back(embed_matrix(s.back(), fp2));
      }
      CHECK(generates(s, true) == generates(s2, true));
    }
  }
}

TEST_CASE("span dimension is conjugation equivariant") {
  std::mt19937_64 rng(8);
  Field f7 = prime_field(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    std::vector<Matrix> s;
    for (int i = 0; i < 2; ++i) s.push_back(random_matrix(f7, n, rng));
    Matrix g = random_matrix(f7, n, rng);
    if (!is_invertible(g)) continue;
    Matrix gi = *inverse(g);
    std::vector<Matrix> conj;
    for (const Matrix& a : s) conj.push_back(g * a * gi);
    CHECK(span_close(conj, false).dim() == span_close(s, false).dim());
  }
}

TEST_CASE("contains") {
  Field f7 = prime_field(7);
  SpanBasis si = span_close({Matrix::identity(f7, 2)}, false);
  CHECK(si.contains(Matrix::identity(f7, 2)));
  SpanBasis se = span_close({Matrix::unit(f7, 2, 2, 0, 0)}, false);
  CHECK(!se.contains(Matrix::unit(f7, 2, 2, 1, 1)));
}

// The five 3x3 matrices built from X1, X2, X11/X12, Y11/Y21, I. Their span
// closure misses the embedding of X12*Y21, and every element of the closure
// has (1,1,1)^t as an eigenvector.
TEST_CASE("laffey counterexample golden membership") {
  for (Field f : {prime_field(7), rationals()}) {
    Matrix x1 = mat_of(f, {{1, -1}, {0, 0}});
    Matrix x2 = mat_of(f, {{0, 0}, {-1, 1}});
    Matrix x11 = mat_of(f, {{0, 0}, {0, 1}});
    Matrix y11 = Matrix::identity(f, 2);
    std::vector<Matrix> gens = {
        embed_corner(x1, 3),
        embed_corner(x2, 3),
        mat_of(f, {{0, 0, 0}, {0, 1, -1}, {0, 0, 0}}),  // [X11 X12; 0 0]
        mat_of(f, {{1, 0, 0}, {0, 1, 0}, {0, 1, 0}}),   // [Y11 0; Y21 0]
        Matrix::identity(f, 3),
    };
    SpanBasis algebra = span_close(gens, false);
    // X12*Y21 = [[0,0],[0,-1]]
    Matrix query = embed_corner(mat_of(f, {{0, 0}, {0, -1}}), 3);
    CHECK(!algebra.contains(query));
    Vec ones{Scalar::one(f), Scalar::one(f), Scalar::one(f)};
    Subspace line = Subspace::line(f, ones);
    for (const Matrix& b : algebra.basis()) CHECK(stabilizes(b, line));
    CHECK(!stabilizes(query, line));
  }
}

TEST_CASE("centralizer") {
  Field f7 = prime_field(7);
  CHECK(centralizer({Matrix::identity(f7, 3)}).dim() == 9);
  CHECK(centralizer({Matrix::diagonal(f7, {Scalar(f7, 1), Scalar(f7, 2)})}).dim() == 2);
  // generating sets have scalar centralizer
  CHECK(centralizer(canonical_set(f7, 3)).dim() == 1);
  SpanBasis c = centralizer(canonical_set(f7, 2));
  CHECK(c.dim() == 1);
  CHECK(c.contains(Matrix::identity(f7, 2)));
}

TEST_CASE("common_invariant_subspace") {
  Field f7 = prime_field(7);
  SUBCASE("canonical n=2 minus b") {
    auto s = canonical_set(f7, 2);
    s.pop_back();
    InvariantSearch r = common_invariant_subspace(s);
    REQUIRE(r.found());
    CHECK(r.subspace == Subspace::line(f7, {Scalar(f7, 1), Scalar(f7, -1)}));
  }
  SUBCASE("full basis of M_2 is irreducible") {
    std::vector<Matrix> s;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) s.push_back(Matrix::unit(f7, 2, 2, i, j));
    CHECK(common_invariant_subspace(s).status == InvariantSearch::Status::Irreducible);
  }
  SUBCASE("upper triangular generators fix span{e1}") {
    std::vector<Matrix> s = {Matrix::unit(f7, 2, 2, 0, 0), Matrix::unit(f7, 2, 2, 0, 1),
                             Matrix::unit(f7, 2, 2, 1, 1)};
    InvariantSearch r = common_invariant_subspace(s);
    REQUIRE(r.found());
    CHECK(r.subspace == Subspace::line(f7, {Scalar(f7, 1), Scalar(f7, 0)}));
  }
}

TEST_CASE("common_invariant_subspace randomized contract") {
  std::mt19937_64 rng(10);
  for (Field f : {prime_field(3), prime_field(7)}) {
    for (int trial = 0; trial < 60; ++trial) {
      int n = 2 + static_cast<int>(rng() % 2);
      std::vector<Matrix> s;
      int cnt = 1 + static_cast<int>(rng() % 2);
      for (int i = 0; i < cnt; ++i) s.push_back(random_matrix(f, n, rng));
      InvariantSearch r = common_invariant_subspace(s);
      int algebra_dim = [&] {
        std::vector<Matrix> with_id = s;
        with_id.push_back(Matrix::identity(f, n));
        return span_close(with_id, false).dim();
      }();
      if (r.found()) {
        CHECK(r.subspace.dim() > 0);
        CHECK(r.subspace.dim() < n);
        for (const Matrix& a : s) CHECK(stabilizes(a, r.subspace));
        CHECK(algebra_dim < n * n);
      } else {
        CHECK(r.status == InvariantSearch::Status::Irreducible);
        // full algebra, or a proper irreducible one (field-image case);
        // the line scan is complete over finite fields either way
      }
      if (algebra_dim == n * n) CHECK(!r.found());
    }
  }
}

TEST_CASE("irreducible proper subalgebra over GF(2)") {
  // companion matrix of x^2+x+1 embeds GF(4); no invariant line exists even
  // though the algebra is a proper subspace of M_2
  Field f2 = prime_field(2);
  Matrix c = mat_of(f2, {{0, 1}, {1, 1}});
  InvariantSearch r = common_invariant_subspace({c});
  CHECK(r.status == InvariantSearch::Status::Irreducible);
  std::vector<Matrix> with_id = {c, Matrix::identity(f2, 2)};
  CHECK(span_close(with_id, false).dim() == 2);
}

TEST_CASE("is_triangularizable") {
  Field f7 = prime_field(7);
  SUBCASE("upper triangular pair") {
    std::vector<Matrix> s = {mat_of(f7, {{1, 2, 0}, {0, 3, 1}, {0, 0, 2}}),
                             mat_of(f7, {{0, 1, 1}, {0, 5, 0}, {0, 0, 5}})};
    CHECK(is_triangularizable(s));
  }
  SUBCASE("e12, e21 pair is not triangularizable") {
    CHECK(!is_triangularizable({Matrix::unit(f7, 2, 2, 0, 1), Matrix::unit(f7, 2, 2, 1, 0)}));
  }
  SUBCASE("single nilpotent Jordan block") {
    CHECK(is_triangularizable({mat_of(f7, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})}));
  }
  SUBCASE("non-split spectrum raises") {
    CHECK_THROWS_AS((void)is_triangularizable({mat_of(f7, {{0, -1}, {1, 0}})}), MatgenError);
  }
  SUBCASE("conjugated triangular family stays triangularizable") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
      Matrix g = random_matrix(f7, 3, rng);
      if (!is_invertible(g)) continue;
      Matrix gi = *inverse(g);
      std::vector<Matrix> s;
      for (int i = 0; i < 2; ++i) {
        Matrix t(f7, 3, 3);
        for (int r = 0; r < 3; ++r)
          for (int c = r; c < 3; ++c) t.at(r, c) = random_scalar(f7, rng);
        s.push_back(g * t * gi);
      }
      CHECK(is_triangularizable(s));
    }
  }
}
