#ifndef MATGEN_MATRIX_HPP
#define MATGEN_MATRIX_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "matgen/field.hpp"

namespace matgen {

using Vec = std::vector<Scalar>;

bool vec_is_zero(const Vec& v);

/// Dense exact matrix over a fixed field, row-major.
class Matrix {
public:
  Matrix() : f_(nullptr), m_(0), n_(0) {}
  Matrix(Field f, int m, int n);

  static Matrix identity(Field f, int n);
  static Matrix zero(Field f, int m, int n) { return Matrix(f, m, n); }
  /// e_{i,j} in M_{m x n} (0-based indices).
  static Matrix unit(Field f, int m, int n, int i, int j);
  static Matrix from_rows(Field f, const std::vector<Vec>& rows);
  static Matrix diagonal(Field f, const Vec& diag);

  Field field() const { return f_; }
  int rows() const { return m_; }
  int cols() const { return n_; }
  bool is_square() const { return m_ == n_; }

  const Scalar& at(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  Scalar& at(int i, int j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& c) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_scalar() const; // multiple of the identity (square only)

  Vec apply(const Vec& v) const; // matrix * column vector
  Vec row(int i) const;
  Vec col(int j) const;
  /// Row-major flattening to a vector of length m*n.
  Vec flatten() const;
  static Matrix unflatten(Field f, int m, int n, const Vec& v);

  std::string to_string() const;

private:
  Field f_;
  int m_, n_;
  std::vector<Scalar> e_;
};

/// Convenience builder from integer literals.
Matrix mat_of(Field f, std::initializer_list<std::initializer_list<long long>> rows);

Matrix transpose(const Matrix& a);
Matrix tensor(const Matrix& a, const Matrix& b);
/// Assembles a matrix from a grid of blocks with consistent shapes.
Matrix block_compose(const std::vector<std::vector<Matrix>>& grid);
/// Rows [r0, r1) and columns [c0, c1).
Matrix block_extract(const Matrix& a, int r0, int r1, int c0, int c1);
/// Places a p x q matrix in the upper-left corner of an n x n zero matrix.
Matrix embed_corner(const Matrix& a, int n);
Matrix direct_sum(const Matrix& a, const Matrix& b);

struct EchelonForm {
  Matrix rref;
  std::vector<int> pivots;
  int rank = 0;
};

EchelonForm rref(const Matrix& a);
int rank(const Matrix& a);
/// Echelonized basis of {x : a x = 0}.
std::vector<Vec> kernel(const Matrix& a);
/// One solution of a x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);
std::optional<Matrix> inverse(const Matrix& a);
Scalar det(const Matrix& a);
bool is_invertible(const Matrix& a);

/// Monic char. polynomial det(xI - a) by exact cofactor expansion (n <= 8).
Poly char_poly(const Matrix& a);

/// Incremental reduced-row-echelon basis of row vectors of fixed width.
class RowEchelon {
public:
  RowEchelon(Field f, int width) : f_(f), width_(width) {}

  /// Reduces v against the basis; inserts the residual if nonzero.
  /// Returns true when the dimension grew.
  bool insert(Vec v);
  bool contains(Vec v) const;
  /// Residual of v after reduction (zero iff contained).
  Vec reduce(Vec v) const;

  int dim() const { return static_cast<int>(rows_.size()); }
  int width() const { return width_; }
  Field field() const { return f_; }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

private:
  Field f_;
  int width_;
  std::vector<Vec> rows_;    // RREF rows ordered by pivot column
  std::vector<int> pivots_;
};

} // namespace matgen

#endif
