#ifndef MATGEN_SUBSPACE_HPP
#define MATGEN_SUBSPACE_HPP

#include <vector>

#include "matgen/matrix.hpp"

namespace matgen {

/// Subspace of F^n in canonical reduced-echelon basis. Equality of subspaces
/// is equality of canonical bases.
class Subspace {
public:
  Subspace() : f_(nullptr), n_(0) {}
  /// The zero subspace of F^n.
  Subspace(Field f, int n);
  static Subspace from_spanning(Field f, int n, const std::vector<Vec>& rows);
  static Subspace full(Field f, int n);
  static Subspace line(Field f, const Vec& v);

  Field field() const { return f_; }
  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& basis() const { return rows_; }

  bool contains_vector(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return dim() == n_; }

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  /// Deterministic total order: by dimension, then lexicographic on the
  /// canonical basis.
  bool less_than(const Subspace& o) const;

  std::string to_string() const;

private:
  Field f_;
  int n_;
  std::vector<Vec> rows_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
/// Orthogonal complement under the standard bilinear pairing <x,y> = sum x_i y_i.
Subspace perp(const Subspace& v);
/// Whether a V is invariant under a, i.e. a(V) is contained in V.
bool stabilizes(const Matrix& a, const Subspace& v);

/// Closure of the family under + and intersection. Throws CapExceeded when
/// more than `cap` subspaces get generated.
std::vector<Subspace> lattice_closure(const std::vector<Subspace>& family, int cap = 512);

} // namespace matgen

#endif
