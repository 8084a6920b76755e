#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "matgen/genset.hpp"
#include "matgen/independence.hpp"

using namespace matgen;

namespace {

Matrix random_matrix(Field f, int n, std::mt19937_64& rng) {
  Matrix a(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = random_scalar(f, rng);
  return a;
}

std::vector<Matrix> s_alpha_set(Field f, const Scalar& alpha) {
  return {
      mat_of(f, {{1, 1, 0}, {0, 0, 0}, {0, 0, 0}}),
      mat_of(f, {{0, 0, 0}, {1, 1, 0}, {0, 0, 0}}),
      mat_of(f, {{0, 0, 0}, {0, 1, 1}, {0, 0, 0}}),
      mat_of(f, {{0, 0, 0}, {0, 0, 0}, {0, 1, 1}}),
      Matrix::diagonal(f, {Scalar::one(f), Scalar::zero(f), alpha}),
  };
}

} // namespace

TEST_CASE("canonical_irredundant shape") {
  Field f7 = prime_field(7);
  CHECK_THROWS_AS(canonical_irredundant(1, f7), MatgenError);
  for (int n = 2; n <= 6; ++n)
    CHECK(canonical_irredundant(n, f7).size() == static_cast<std::size_t>(2 * n - 1));

  auto s2 = canonical_irredundant(2, f7);
  CHECK(s2[0] == mat_of(f7, {{1, 1}, {0, 0}}));
  CHECK(s2[1] == mat_of(f7, {{0, 0}, {1, 1}}));
  CHECK(s2[2] == mat_of(f7, {{1, 0}, {0, 0}}));

  // n = 3 canonical set equals the alpha = 0 member of the classification family
  auto s3 = canonical_irredundant(3, f7);
  auto s0 = s_alpha_set(f7, Scalar::zero(f7));
  for (const Matrix& m : s3)
    CHECK(std::find(s0.begin(), s0.end(), m) != s0.end());
}

TEST_CASE("canonical family generates irredundantly over several fields") {
  for (Field f : {prime_field(2), prime_field(3), prime_field(7), rationals()}) {
    for (int n = 2; n <= 5; ++n) {
      auto s = canonical_irredundant(n, f);
      CHECK(generates(s, true));
      CHECK(is_irredundant_generating(s));
    }
  }
}

TEST_CASE("is_irredundant_generating rejects padded sets") {
  Field f7 = prime_field(7);
  auto s = canonical_irredundant(3, f7);
  s.push_back(Matrix::unit(f7, 3, 3, 0, 0));
  CHECK(generates(s, true));
  CHECK(!is_irredundant_generating(s));
  CHECK(is_irredundant_generating(s_alpha_set(f7, Scalar(f7, 3))));
}

TEST_CASE("extract_irredundant") {
  Field f7 = prime_field(7);
  SUBCASE("all matrix units of M_2") {
    std::vector<Matrix> s;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) s.push_back(Matrix::unit(f7, 2, 2, i, j));
    auto t = extract_irredundant(s);
    CHECK(t.subset.size() <= 3);
    CHECK(is_irredundant_generating(t.subset));
  }
  SUBCASE("already irredundant input is returned whole") {
    auto s = canonical_irredundant(3, f7);
    auto t = extract_irredundant(s);
    CHECK(t.subset == s);
  }
  SUBCASE("identity is dropped") {
    std::vector<Matrix> s = canonical_irredundant(3, f7);
    s.insert(s.begin(), Matrix::identity(f7, 3));
    auto t = extract_irredundant(s);
    CHECK(t.subset == canonical_irredundant(3, f7));
  }
  SUBCASE("non generating input fails") {
    CHECK_THROWS_AS(extract_irredundant({Matrix::identity(f7, 2)}), MatgenError);
  }
}

TEST_CASE("extract_irredundant randomized bound") {
  std::mt19937_64 rng(51);
  Field f5 = prime_field(5);
  int done = 0;
  while (done < 60) {
    int n = 2 + done % 4; // sizes 2..5
    std::vector<Matrix> s;
    int cnt = 2 * n + 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < cnt; ++i) s.push_back(random_matrix(f5, n, rng));
    if (!generates(s, true)) continue;
    auto t = extract_irredundant(s);
    CHECK(static_cast<int>(t.subset.size()) <= 2 * n - 1);
    CHECK(is_irredundant_generating(t.subset));
    ++done;
  }
}

TEST_CASE("complete_from_corner spec cases") {
  Field f7 = prime_field(7);
  SUBCASE("full corner needs nothing") {
    auto t = complete_from_corner({3, 3, 3}, canonical_irredundant(3, f7));
    CHECK(t.subset.empty());
  }
  SUBCASE("scalar corner in M_2") {
    auto t = complete_from_corner({1, 1, 2}, canonical_irredundant(2, f7));
    CHECK(t.subset.size() <= 2);
  }
  SUBCASE("1x2 corner in M_3") {
    auto t = complete_from_corner({1, 2, 3}, canonical_irredundant(3, f7));
    CHECK(t.subset.size() <= 3);
  }
  SUBCASE("precondition enforced") {
    CHECK_THROWS_AS(complete_from_corner({1, 1, 2}, {Matrix::identity(f7, 2)}), MatgenError);
  }
}

TEST_CASE("complete_from_corner randomized over all shapes") {
  std::mt19937_64 rng(53);
  Field f5 = prime_field(5);
  for (int n = 1; n <= 4; ++n)
    for (int p = 1; p <= n; ++p)
      for (int q = 1; q <= n; ++q) {
        int done = 0;
        while (done < 4) {
          std::vector<Matrix> s;
          int cnt = 2 * n + static_cast<int>(rng() % 3);
          for (int i = 0; i < cnt; ++i) s.push_back(random_matrix(f5, n, rng));
          std::vector<Matrix> all = corner_basis({p, q, n}, f5);
          all.insert(all.end(), s.begin(), s.end());
          if (!generates(f5, n, all, false)) continue;
          auto t = complete_from_corner({p, q, n}, s);
          CHECK(static_cast<int>(t.subset.size()) <= 2 * n - p - q);
          std::vector<Matrix> verify = corner_basis({p, q, n}, f5);
          verify.insert(verify.end(), t.subset.begin(), t.subset.end());
          CHECK(generates(f5, n, verify, false));
          ++done;
        }
      }
}

TEST_CASE("witness_invariant_subspaces") {
  Field f7 = prime_field(7);
  SUBCASE("canonical pair of 2x2 generators gives three lines") {
    WitnessFamily w = witness_invariant_subspaces(canonical_irredundant(2, f7));
    REQUIRE(w.subspaces.size() == 3);
    for (const Subspace& v : w.subspaces) CHECK(v.dim() == 1);
    CHECK(gl_independent(w.subspaces).independent);
  }
  SUBCASE("s_alpha witnesses match a pattern") {
    WitnessFamily w = witness_invariant_subspaces(s_alpha_set(f7, Scalar(f7, 3)));
    REQUIRE(w.subspaces.size() == 5);
    CHECK(pattern_classify(w.subspaces).matched());
  }
  SUBCASE("redundant input is rejected") {
    std::vector<Matrix> s = canonical_irredundant(3, f7);
    s.push_back(Matrix::unit(f7, 3, 3, 0, 0));
    CHECK_THROWS_AS(witness_invariant_subspaces(s), MatgenError);
  }
}

TEST_CASE("hat_matrix") {
  Field f5 = prime_field(5);
  SUBCASE("single block, k = 1") {
    BlockShape shape{{{2, 1}}};
    Matrix x = mat_of(f5, {{0, 3}, {0, 0}});
    auto hats = hat_matrix(shape, x);
    REQUIRE(hats.size() == 1);
    CHECK(hats[0] == mat_of(f5, {{1}}));
    auto zero_hat = hat_matrix(shape, Matrix::zero(f5, 2, 2));
    REQUIRE(zero_hat.size() == 1);
    CHECK(zero_hat[0] == mat_of(f5, {{0}}));
  }
  SUBCASE("hand-applied construction for shape (1,2)+(1,1)") {
    BlockShape shape{{{1, 2}, {1, 1}}};
    Matrix x = Matrix::unit(f5, 3, 3, 0, 1) + Matrix::unit(f5, 3, 3, 1, 0);
    // cells of the 2x2 block are scalars 0,1,1,0; the first nonzero cell is
    // the basis, so the single coordinate matrix is [[0,1],[1,0]]; all other
    // blocks are zero
    auto hats = hat_matrix(shape, x);
    REQUIRE(hats.size() == 1);
    CHECK(hats[0] == mat_of(f5, {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}));
  }
  SUBCASE("hat of a block-scalar element lands in hat_algebra") {
    BlockShape shape{{{1, 2}, {1, 1}}};
    Matrix a = Matrix::diagonal(f5, {Scalar::one(f5), Scalar::one(f5), Scalar::zero(f5)});
    auto hats = hat_matrix(shape, a);
    REQUIRE(hats.size() == 1);
    auto algebra = hat_algebra(shape, f5);
    CHECK(std::find(algebra.begin(), algebra.end(), hats[0]) != algebra.end());
    CHECK(algebra.size() == 4);
  }
  SUBCASE("cap is enforced") {
    // two independent cells give two coordinate matrices for the single block
    BlockShape shape{{{2, 2}}};
    Matrix x = Matrix::unit(f5, 4, 4, 0, 0) + Matrix::unit(f5, 4, 4, 0, 3);
    CHECK(hat_matrix(shape, x).size() == 2);
    CHECK_THROWS_AS(hat_matrix(shape, x, 1), MatgenError);
  }
}

TEST_CASE("laffey_equiv_check") {
  Field f5 = prime_field(5);
  SUBCASE("scalar subalgebra transcription") {
    BlockShape shape{{{1, 3}}};
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Matrix> s;
      int cnt = 1 + static_cast<int>(rng() % 2);
      for (int i = 0; i < cnt; ++i) s.push_back(random_matrix(f5, 3, rng));
      auto [lhs, rhs] = laffey_equiv_check(shape, s);
      CHECK(lhs == rhs);
    }
  }
  SUBCASE("canonical set with a nontrivial shape") {
    BlockShape shape{{{1, 2}, {1, 1}}};
    auto [lhs, rhs] = laffey_equiv_check(shape, canonical_irredundant(3, f5));
    CHECK(lhs);
    CHECK(rhs);
  }
  SUBCASE("zero set fails on both sides") {
    BlockShape shape{{{1, 2}, {1, 1}}};
    auto [lhs, rhs] = laffey_equiv_check(shape, {Matrix::zero(f5, 3, 3)});
    CHECK(!lhs);
    CHECK(!rhs);
  }
  SUBCASE("randomized equivalence across shapes") {
    std::mt19937_64 rng(7);
    std::vector<BlockShape> shapes = {
        {{{1, 1}}}, {{{2, 1}}}, {{{1, 2}}}, {{{1, 3}}}, {{{1, 2}, {1, 1}}},
        {{{2, 1}, {1, 1}}}, {{{1, 1}, {1, 1}}}, {{{1, 2}, {1, 2}}}, {{{2, 1}, {1, 2}}},
    };
    for (const BlockShape& shape : shapes) {
      for (int trial = 0; trial < 8; ++trial) {
        int n = shape.n();
        std::vector<Matrix> s;
        int cnt = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < cnt; ++i) s.push_back(random_matrix(f5, n, rng));
        auto [lhs, rhs] = laffey_equiv_check(shape, s);
        CHECK(lhs == rhs);
      }
    }
  }
}
