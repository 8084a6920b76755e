#ifndef MATGEN_CLASSIFY_HPP
#define MATGEN_CLASSIFY_HPP

#include "matgen/genset.hpp"
#include "matgen/subspace.hpp"

namespace matgen {

struct AffinePair {
  Scalar scale; // nonzero
  Scalar shift;
};

/// An element of the classification group. Application order is fixed:
/// permute the tuple, then apply the per-position affine maps a -> scale*a +
/// shift*I, then transpose everything (optional), then conjugate everything.
struct TransformRecord {
  std::vector<int> perm;          // out[i] starts from in[perm[i]]
  std::vector<AffinePair> affine; // per output position
  bool transposed = false;
  Matrix conjugator;

  static TransformRecord identity(Field f, int n, int r);

  // Post-compose one more operation onto the record (the operation acts on
  // the current output tuple).
  void then_permute(const std::vector<int>& sigma);
  void then_affine(int pos, const Scalar& scale, const Scalar& shift);
  void then_transpose();
  void then_conjugate(const Matrix& g);
};

std::vector<Matrix> apply_transform(const std::vector<Matrix>& s, const TransformRecord& t);
TransformRecord inverse_record(const TransformRecord& t);

/// The one-parameter family of canonical 5-element irredundant generating
/// sets of M_3, with diag(1, 0, alpha) last.
std::vector<Matrix> s_alpha(const Scalar& alpha);

/// The canonical target triple for M_2.
std::vector<Matrix> canonical_triple_m2(Field f);

struct Classification2 {
  TransformRecord record;
  std::vector<Matrix> canonical;
};

/// Normalizes an irredundant generating triple of M_2 onto the canonical
/// triple, exactly.
Classification2 classify_m2_triple(const std::vector<Matrix>& triple);

struct Classification3 {
  TransformRecord record;        // first branch, lands on s_alpha(alpha)
  Scalar alpha;
  std::vector<Scalar> reachable; // alphas over all normalization branches
  std::vector<Subspace> witnesses;
};

/// Normalizes an irredundant generating 5-tuple of M_3 onto some s_alpha,
/// enumerating every admissible labeling/branch of the normalization.
Classification3 classify_m3_quintuple(const std::vector<Matrix>& s);

struct AlphaClass {
  Scalar base;
  std::vector<Scalar> candidates; // at most 6 values
  std::vector<Scalar> verified;   // subset of candidates, contains base and base^{-1}
};

/// Eigenvalue-matching candidates for S_alpha ~ S_beta, alpha not in {0,1}.
AlphaClass alpha_class(const Scalar& alpha);

/// Whether two 5-element irredundant generating sets are related by the
/// classification group: their reachable alpha sets intersect.
bool equivalent_m3(const std::vector<Matrix>& s, const std::vector<Matrix>& t);

/// Per-matrix multiset of in-field eigenvalue multiplicities, sorted; an
/// invariant of the group action used as a cheap pre-filter.
std::vector<std::vector<int>> eigen_multiset_invariant(const std::vector<Matrix>& s);

} // namespace matgen

#endif
