#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "matgen/json_io.hpp"

using namespace matgen;

namespace {

Matrix random_matrix(Field f, int n, std::mt19937_64& rng) {
  Matrix a(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = random_scalar(f, rng);
  return a;
}

} // namespace

TEST_CASE("matrix round trip across fields") {
  std::mt19937_64 rng(2);
  for (Field f : {prime_field(7), extension_field(2, 2), extension_field(3, 2)}) {
    for (int trial = 0; trial < 20; ++trial) {
      Matrix a = random_matrix(f, 3, rng);
      CHECK(matrix_from_json(matrix_to_json(a)) == a);
    }
  }
  Field qq = rationals();
  Matrix r(qq, 2, 2);
  r.at(0, 0) = parse_scalar("-3/4", qq);
  r.at(1, 1) = parse_scalar("22/7", qq);
  CHECK(matrix_from_json(matrix_to_json(r)) == r);
}

TEST_CASE("matrix json validation") {
  CHECK_THROWS_AS(matrix_from_json(json{{"rows", json::array()}}), MatgenError);
  json j = matrix_to_json(Matrix::identity(prime_field(7), 2));
  CHECK_THROWS_AS(matrix_from_json(j, prime_field(5)), MatgenError); // field clash
  CHECK(matrix_from_json(j, prime_field(7)) == Matrix::identity(prime_field(7), 2));
  // field defaulting
  json bare = json::parse(R"({"rows": [["1","0"],["0","1"]]})");
  CHECK(matrix_from_json(bare, prime_field(3)) == Matrix::identity(prime_field(3), 2));
}

TEST_CASE("subspace round trip") {
  Field f5 = prime_field(5);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vec> rows;
    int cnt = static_cast<int>(rng() % 3);
    for (int i = 0; i < cnt; ++i) {
      Vec v;
      for (int j = 0; j < 4; ++j) v.push_back(random_scalar(f5, rng));
      rows.push_back(std::move(v));
    }
    Subspace s = Subspace::from_spanning(f5, 4, rows);
    CHECK(subspace_from_json(subspace_to_json(s)) == s);
  }
}

TEST_CASE("record round trip preserves the action") {
  Field f7 = prime_field(7);
  std::mt19937_64 rng(4);
  auto s = s_alpha(Scalar(f7, 3));
  for (int trial = 0; trial < 20; ++trial) {
    TransformRecord t = TransformRecord::identity(f7, 3, 5);
    std::vector<int> sigma{0, 1, 2, 3, 4};
    std::shuffle(sigma.begin(), sigma.end(), rng);
    t.then_permute(sigma);
    for (int i = 0; i < 5; ++i) {
      Scalar sc = random_scalar(f7, rng);
      if (sc.is_zero()) sc = Scalar::one(f7);
      t.then_affine(i, sc, random_scalar(f7, rng));
    }
    if (rng() % 2) t.then_transpose();
    for (;;) {
      Matrix g = random_matrix(f7, 3, rng);
      if (is_invertible(g)) { t.then_conjugate(g); break; }
    }
    TransformRecord back = record_from_json(record_to_json(t));
    CHECK(apply_transform(s, back) == apply_transform(s, t));
  }
}

TEST_CASE("shape round trip") {
  BlockShape shape{{{1, 2}, {2, 1}}};
  BlockShape back = shape_from_json(shape_to_json(shape));
  CHECK(back.blocks == shape.blocks);
  CHECK_THROWS_AS(shape_from_json(json{{"blocks", json::array()}}), MatgenError);
}

TEST_CASE("suite report timing toggle") {
  SuiteReport rep;
  rep.suite = "dims";
  rep.field = "gf:7";
  rep.elapsed_ms = 12.5;
  json with = suite_report_to_json(rep, true);
  json without = suite_report_to_json(rep, false);
  CHECK(with.contains("elapsed_ms"));
  CHECK(!without.contains("elapsed_ms"));
}
