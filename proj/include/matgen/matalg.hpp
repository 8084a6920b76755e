#ifndef MATGEN_MATALG_HPP
#define MATGEN_MATALG_HPP

#include "matgen/matrix.hpp"
#include "matgen/subspace.hpp"

namespace matgen {

/// Echelonized basis of a linear subspace of M_n (matrices flattened to
/// n^2-vectors, row-major).
class SpanBasis {
public:
  SpanBasis(Field f, int n) : n_(n), ech_(f, n * n) {}

  Field field() const { return ech_.field(); }
  int n() const { return n_; }
  int dim() const { return ech_.dim(); }

  bool insert(const Matrix& a);
  bool contains(const Matrix& a) const;
  std::vector<Matrix> basis() const;
  const RowEchelon& echelon() const { return ech_; }

  bool closed_under_mult = false;
  bool contains_identity = false;

  /// Re-checks the flags against the actual span (products of basis pairs,
  /// membership of I).
  bool verify_flags() const;

private:
  int n_;
  RowEchelon ech_;
};

/// Smallest multiplication-closed subspace containing s (and I when unital).
SpanBasis span_close(Field f, int n, const std::vector<Matrix>& s, bool unital);
SpanBasis span_close(const std::vector<Matrix>& s, bool unital);

bool generates(Field f, int n, const std::vector<Matrix>& s, bool unital);
bool generates(const std::vector<Matrix>& s, bool unital = true);

/// Solution space of xa = ax for all a in s.
SpanBasis centralizer(const std::vector<Matrix>& s);

struct InvariantSearch {
  enum class Status { Found, Irreducible, Inconclusive };
  Status status = Status::Inconclusive;
  Subspace subspace; // proper nonzero, set when status == Found

  bool found() const { return status == Status::Found; }
};

/// Searches for a nonzero proper subspace invariant under every member of s.
/// Complete over finite fields (projective line scan fallback); heuristic over
/// the rationals, where exhausted heuristics yield Inconclusive.
InvariantSearch common_invariant_subspace(const std::vector<Matrix>& s, unsigned seed = 0);

/// Whether some full flag is invariant under every member of s. Throws
/// NotSplit when the search fails and some (possibly quotient) spectrum does
/// not split over the ground field.
bool is_triangularizable(const std::vector<Matrix>& s);

} // namespace matgen

#endif
