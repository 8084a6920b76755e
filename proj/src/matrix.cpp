#include "matgen/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace matgen {

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Matrix::Matrix(Field f, int m, int n) : f_(f), m_(m), n_(n) {
  require(m >= 1 && n >= 1, Err::BadSize, "matrix dimensions must be positive");
  e_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), Scalar::zero(f));
}

Matrix Matrix::identity(Field f, int n) {
  Matrix a(f, n, n);
  for (int i = 0; i < n; ++i) a.at(i, i) = Scalar::one(f);
  return a;
}

Matrix Matrix::unit(Field f, int m, int n, int i, int j) {
  Matrix a(f, m, n);
  a.at(i, j) = Scalar::one(f);
  return a;
}

Matrix Matrix::from_rows(Field f, const std::vector<Vec>& rows) {
  require(!rows.empty() && !rows.front().empty(), Err::BadSize, "from_rows needs a nonempty grid");
  Matrix a(f, static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < a.m_; ++i) {
    require(static_cast<int>(rows[static_cast<std::size_t>(i)].size()) == a.n_,
            Err::DimensionMismatch, "ragged rows");
    for (int j = 0; j < a.n_; ++j) a.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return a;
}

Matrix Matrix::diagonal(Field f, const Vec& d) {
  Matrix a(f, static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (int i = 0; i < a.m_; ++i) a.at(i, i) = d[static_cast<std::size_t>(i)];
  return a;
}

namespace {
void check_same_shape(const Matrix& a, const Matrix& b) {
  require(a.field() == b.field(), Err::FieldMismatch, "matrices over different fields");
  require(a.rows() == b.rows() && a.cols() == b.cols(), Err::DimensionMismatch,
          "matrix shapes differ");
}
} // namespace

Matrix Matrix::operator+(const Matrix& o) const {
  check_same_shape(*this, o);
  Matrix out = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] += o.e_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same_shape(*this, o);
  Matrix out = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] -= o.e_[i];
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& x : out.e_) x = -x;
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out = *this;
  for (auto& x : out.e_) x = x * c;
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require(f_ == o.f_, Err::FieldMismatch, "matrices over different fields");
  require(n_ == o.m_, Err::DimensionMismatch, "inner dimensions differ");
  Matrix out(f_, m_, o.n_);
  for (int i = 0; i < m_; ++i)
    for (int l = 0; l < n_; ++l) {
      const Scalar& ail = at(i, l);
      if (ail.is_zero()) continue;
      for (int j = 0; j < o.n_; ++j) out.at(i, j) += ail * o.at(l, j);
    }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return f_ == o.f_ && m_ == o.m_ && n_ == o.n_ && e_ == o.e_;
}

bool Matrix::is_zero() const {
  return vec_is_zero(e_);
}

bool Matrix::is_scalar() const {
  if (!is_square()) return false;
  const Scalar& d = at(0, 0);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (i == j && at(i, j) != d) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

Vec Matrix::apply(const Vec& v) const {
  require(static_cast<int>(v.size()) == n_, Err::DimensionMismatch, "vector length != cols");
  Vec out(static_cast<std::size_t>(m_), Scalar::zero(f_));
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
  return out;
}

Vec Matrix::row(int i) const {
  Vec out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) out.push_back(at(i, j));
  return out;
}

Vec Matrix::col(int j) const {
  Vec out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int i = 0; i < m_; ++i) out.push_back(at(i, j));
  return out;
}

Vec Matrix::flatten() const { return e_; }

Matrix Matrix::unflatten(Field f, int m, int n, const Vec& v) {
  require(static_cast<int>(v.size()) == m * n, Err::DimensionMismatch, "unflatten length mismatch");
  Matrix a(f, m, n);
  a.e_ = v;
  return a;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < m_; ++i) {
    os << (i == 0 ? "[" : " ") << "[";
    for (int j = 0; j < n_; ++j) {
      if (j) os << " ";
      os << at(i, j).to_string();
    }
    os << "]" << (i + 1 == m_ ? "]" : "\n");
  }
  return os.str();
}

Matrix mat_of(Field f, std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<Vec> grid;
  for (const auto& r : rows) {
    Vec row;
    for (long long v : r) row.push_back(Scalar(f, v));
    grid.push_back(std::move(row));
  }
  return Matrix::from_rows(f, grid);
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.field(), a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j);
  return out;
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  require(a.field() == b.field(), Err::FieldMismatch, "tensor over different fields");
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int u = 0; u < b.rows(); ++u)
        for (int v = 0; v < b.cols(); ++v)
          out.at(i * b.rows() + u, j * b.cols() + v) = a.at(i, j) * b.at(u, v);
    }
  return out;
}

Matrix block_compose(const std::vector<std::vector<Matrix>>& grid) {
  require(!grid.empty() && !grid.front().empty(), Err::BadSize, "empty block grid");
  Field f = grid[0][0].field();
  int total_rows = 0, total_cols = 0;
  for (const auto& row : grid) total_rows += row.front().rows();
  for (const auto& blk : grid.front()) total_cols += blk.cols();
  Matrix out(f, total_rows, total_cols);
  int r0 = 0;
  for (const auto& row : grid) {
    int c0 = 0;
    int h = row.front().rows();
    for (const auto& blk : row) {
      require(blk.rows() == h, Err::DimensionMismatch, "block row heights differ");
      for (int i = 0; i < blk.rows(); ++i)
        for (int j = 0; j < blk.cols(); ++j) out.at(r0 + i, c0 + j) = blk.at(i, j);
      c0 += blk.cols();
    }
    require(c0 == total_cols, Err::DimensionMismatch, "block row widths differ");
    r0 += h;
  }
  return out;
}

Matrix block_extract(const Matrix& a, int r0, int r1, int c0, int c1) {
  require(0 <= r0 && r0 < r1 && r1 <= a.rows() && 0 <= c0 && c0 < c1 && c1 <= a.cols(),
          Err::DimensionMismatch, "block range out of bounds");
  Matrix out(a.field(), r1 - r0, c1 - c0);
  for (int i = r0; i < r1; ++i)
    for (int j = c0; j < c1; ++j) out.at(i - r0, j - c0) = a.at(i, j);
  return out;
}

Matrix embed_corner(const Matrix& a, int n) {
  require(a.rows() <= n && a.cols() <= n, Err::DimensionMismatch, "corner larger than ambient");
  Matrix out(a.field(), n, n);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

EchelonForm rref(const Matrix& a) {
  EchelonForm out;
  Matrix w = a;
  int m = a.rows(), n = a.cols();
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    // first nonzero entry scanning top to bottom
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (!w.at(i, c).is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(r, j));
    Scalar inv = w.at(r, c).inverse();
    for (int j = c; j < n; ++j) w.at(r, j) = w.at(r, j) * inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || w.at(i, c).is_zero()) continue;
      Scalar factor = w.at(i, c);
      for (int j = c; j < n; ++j) w.at(i, j) -= factor * w.at(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rref = std::move(w);
  out.rank = r;
  return out;
}

int rank(const Matrix& a) { return rref(a).rank; }

std::vector<Vec> kernel(const Matrix& a) {
  EchelonForm ef = rref(a);
  Field f = a.field();
  int n = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : ef.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  RowEchelon basis(f, n);
  for (int j = 0; j < n; ++j) {
    if (is_pivot[static_cast<std::size_t>(j)]) continue;
    Vec v(static_cast<std::size_t>(n), Scalar::zero(f));
    v[static_cast<std::size_t>(j)] = Scalar::one(f);
    for (int r = 0; r < ef.rank; ++r)
      v[static_cast<std::size_t>(ef.pivots[static_cast<std::size_t>(r)])] = -ef.rref.at(r, j);
    basis.insert(std::move(v));
  }
  return basis.basis();
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  require(static_cast<int>(b.size()) == a.rows(), Err::DimensionMismatch, "rhs length != rows");
  Field f = a.field();
  Matrix aug(f, a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[static_cast<std::size_t>(i)];
  }
  EchelonForm ef = rref(aug);
  for (int c : ef.pivots)
    if (c == a.cols()) return std::nullopt;
  Vec x(static_cast<std::size_t>(a.cols()), Scalar::zero(f));
  for (int r = 0; r < ef.rank; ++r)
    x[static_cast<std::size_t>(ef.pivots[static_cast<std::size_t>(r)])] = ef.rref.at(r, a.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  require(a.is_square(), Err::NotSquare, "inverse of a non-square matrix");
  int n = a.rows();
  Field f = a.field();
  Matrix aug(f, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = Scalar::one(f);
  }
  EchelonForm ef = rref(aug);
  if (ef.rank < n || ef.pivots[static_cast<std::size_t>(n - 1)] >= n) return std::nullopt;
  return block_extract(ef.rref, 0, n, n, 2 * n);
}

Scalar det(const Matrix& a) {
  require(a.is_square(), Err::NotSquare, "determinant of a non-square matrix");
  Matrix w = a;
  Field f = a.field();
  int n = a.rows();
  Scalar d = Scalar::one(f);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!w.at(i, c).is_zero()) { piv = i; break; }
    if (piv < 0) return Scalar::zero(f);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(c, j));
      d = -d;
    }
    d = d * w.at(c, c);
    Scalar inv = w.at(c, c).inverse();
    for (int i = c + 1; i < n; ++i) {
      if (w.at(i, c).is_zero()) continue;
      Scalar factor = w.at(i, c) * inv;
      for (int j = c; j < n; ++j) w.at(i, j) -= factor * w.at(c, j);
    }
  }
  return d;
}

bool is_invertible(const Matrix& a) {
  return a.is_square() && !det(a).is_zero();
}

namespace {

Poly poly_matrix_det(const std::vector<std::vector<Poly>>& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (poly_degree(m[0][j]) < 0) continue;
    std::vector<std::vector<Poly>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(std::move(row));
    }
    Poly term = poly_mul(m[0][j], poly_matrix_det(minor));
    acc = (j % 2 == 0) ? poly_add(acc, term) : poly_sub(acc, term);
  }
  return acc;
}

} // namespace

Poly char_poly(const Matrix& a) {
  require(a.is_square(), Err::NotSquare, "char_poly of a non-square matrix");
  require(a.rows() <= 8, Err::BadSize, "char_poly limited to n <= 8");
  Field f = a.field();
  int n = a.rows();
  std::vector<std::vector<Poly>> m(static_cast<std::size_t>(n),
                                   std::vector<Poly>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly e{-a.at(i, j)};
      if (i == j) e.push_back(Scalar::one(f));
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = poly_trim(std::move(e));
    }
  Poly p = poly_matrix_det(m);
  // pad the zero coefficients back so the result is a dense monic degree-n list
  Poly out(static_cast<std::size_t>(n) + 1, Scalar::zero(f));
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i];
  return out;
}

bool RowEchelon::insert(Vec v) {
  require(static_cast<int>(v.size()) == width_, Err::DimensionMismatch, "row width mismatch");
  v = reduce(std::move(v));
  int lead = -1;
  for (int j = 0; j < width_; ++j)
    if (!v[static_cast<std::size_t>(j)].is_zero()) { lead = j; break; }
  if (lead < 0) return false;
  Scalar inv = v[static_cast<std::size_t>(lead)].inverse();
  for (auto& x : v) x = x * inv;
  // clear the new pivot column from existing rows
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Scalar c = rows_[r][static_cast<std::size_t>(lead)];
    if (c.is_zero()) continue;
    for (int j = 0; j < width_; ++j)
      rows_[r][static_cast<std::size_t>(j)] -= c * v[static_cast<std::size_t>(j)];
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), lead);
  std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, lead);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
  return true;
}

Vec RowEchelon::reduce(Vec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Scalar c = v[static_cast<std::size_t>(pivots_[r])];
    if (c.is_zero()) continue;
    for (int j = pivots_[r]; j < width_; ++j)
      v[static_cast<std::size_t>(j)] -= c * rows_[r][static_cast<std::size_t>(j)];
  }
  return v;
}

bool RowEchelon::contains(Vec v) const { return vec_is_zero(reduce(std::move(v))); }

} // namespace matgen
