#include "matgen/eigen.hpp"

namespace matgen {

EigenData eigen_data(const Matrix& a) {
  require(a.is_square(), Err::NotSquare, "eigen_data of a non-square matrix");
  Field f = a.field();
  int n = a.rows();
  EigenData out;
  int found = 0;
  for (const auto& [value, mult] : find_roots(char_poly(a), f)) {
    Matrix shifted = a - Matrix::identity(f, n).scaled(value);
    EigenPair pair{value, mult, Subspace::from_spanning(f, n, kernel(shifted))};
    found += mult;
    out.pairs.push_back(std::move(pair));
  }
  out.split = (found == n);
  return out;
}

Scalar eigenvalue_on(const Matrix& a, const Vec& v) {
  require(!vec_is_zero(v), Err::BadInput, "eigenvalue_on needs a nonzero vector");
  Vec av = a.apply(v);
  Field f = a.field();
  // lambda from the first nonzero coordinate of v, then verify a v = lambda v
  Scalar lambda = Scalar::zero(f);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) { lambda = av[i] / v[i]; break; }
  for (std::size_t i = 0; i < v.size(); ++i)
    require(av[i] == lambda * v[i], Err::BadInput, "vector is not an eigenvector");
  return lambda;
}

} // namespace matgen
