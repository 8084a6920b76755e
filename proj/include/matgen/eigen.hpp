#ifndef MATGEN_EIGEN_HPP
#define MATGEN_EIGEN_HPP

#include "matgen/matrix.hpp"
#include "matgen/subspace.hpp"

namespace matgen {

struct EigenPair {
  Scalar value;
  int alg_mult = 0;
  Subspace space; // kernel(a - value I)
};

struct EigenData {
  std::vector<EigenPair> pairs; // in canonical scalar order
  bool split = false;           // in-field algebraic multiplicities sum to n
};

EigenData eigen_data(const Matrix& a);

/// Eigenvalue of a on a known invariant line spanned by v; fails with
/// BadInput when v is not an eigenvector.
Scalar eigenvalue_on(const Matrix& a, const Vec& v);

} // namespace matgen

#endif
