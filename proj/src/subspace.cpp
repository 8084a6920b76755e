#include "matgen/subspace.hpp"

#include <algorithm>
#include <sstream>

namespace matgen {

Subspace::Subspace(Field f, int n) : f_(f), n_(n) {
  require(n >= 1, Err::BadSize, "ambient dimension must be positive");
}

Subspace Subspace::from_spanning(Field f, int n, const std::vector<Vec>& rows) {
  Subspace s(f, n);
  RowEchelon ech(f, n);
  for (const Vec& r : rows) {
    require(static_cast<int>(r.size()) == n, Err::AmbientMismatch, "spanning row width mismatch");
    ech.insert(r);
  }
  s.rows_ = ech.basis();
  return s;
}

Subspace Subspace::full(Field f, int n) {
  std::vector<Vec> rows;
  for (int i = 0; i < n; ++i) rows.push_back(Matrix::identity(f, n).row(i));
  return from_spanning(f, n, rows);
}

Subspace Subspace::line(Field f, const Vec& v) {
  require(!vec_is_zero(v), Err::BadInput, "line needs a nonzero vector");
  return from_spanning(f, static_cast<int>(v.size()), {v});
}

bool Subspace::contains_vector(const Vec& v) const {
  require(static_cast<int>(v.size()) == n_, Err::AmbientMismatch, "vector length mismatch");
  RowEchelon ech(f_, n_);
  for (const Vec& r : rows_) ech.insert(r);
  return ech.contains(v);
}

bool Subspace::contains(const Subspace& other) const {
  require(f_ == other.f_ && n_ == other.n_, Err::AmbientMismatch, "different ambient spaces");
  if (other.dim() > dim()) return false;
  RowEchelon ech(f_, n_);
  for (const Vec& r : rows_) ech.insert(r);
  for (const Vec& r : other.rows_)
    if (!ech.contains(r)) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return f_ == o.f_ && n_ == o.n_ && rows_ == o.rows_;
}

bool Subspace::less_than(const Subspace& o) const {
  require(f_ == o.f_ && n_ == o.n_, Err::AmbientMismatch, "different ambient spaces");
  if (dim() != o.dim()) return dim() < o.dim();
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (rows_[i][j] != o.rows_[i][j]) return rows_[i][j].less_than(o.rows_[i][j]);
    }
  return false;
}

std::string Subspace::to_string() const {
  if (rows_.empty()) return "span{}";
  std::ostringstream os;
  os << "span{";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) os << ", ";
    os << "(";
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) os << ",";
      os << rows_[i][j].to_string();
    }
    os << ")";
  }
  os << "}";
  return os.str();
}

Subspace sum(const Subspace& u, const Subspace& v) {
  require(u.field() == v.field() && u.ambient() == v.ambient(), Err::AmbientMismatch,
          "sum over different ambient spaces");
  std::vector<Vec> rows = u.basis();
  rows.insert(rows.end(), v.basis().begin(), v.basis().end());
  return Subspace::from_spanning(u.field(), u.ambient(), rows);
}

Subspace perp(const Subspace& v) {
  Field f = v.field();
  int n = v.ambient();
  if (v.is_zero()) return Subspace::full(f, n);
  Matrix b = Matrix::from_rows(f, v.basis());
  return Subspace::from_spanning(f, n, kernel(b));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  return perp(sum(perp(u), perp(v)));
}

bool stabilizes(const Matrix& a, const Subspace& v) {
  require(a.field() == v.field() && a.is_square() && a.rows() == v.ambient(),
          Err::AmbientMismatch, "matrix/subspace ambient mismatch");
  for (const Vec& b : v.basis())
    if (!v.contains_vector(a.apply(b))) return false;
  return true;
}

std::vector<Subspace> lattice_closure(const std::vector<Subspace>& family, int cap) {
  if (family.empty()) return {};
  Field f = family.front().field();
  int n = family.front().ambient();
  auto cmp = [](const Subspace& a, const Subspace& b) { return a.less_than(b); };
  std::vector<Subspace> all;
  for (const Subspace& s : family) {
    require(s.field() == f && s.ambient() == n, Err::AmbientMismatch,
            "family members in different ambient spaces");
    all.push_back(s);
  }
  std::sort(all.begin(), all.end(), cmp);
  all.erase(std::unique(all.begin(), all.end()), all.end());

  std::vector<Subspace> fresh = all;
  while (!fresh.empty()) {
    std::vector<Subspace> next;
    const std::vector<Subspace> snapshot = all; // `all` mutates below
    for (const Subspace& a : fresh)
      for (const Subspace& b : snapshot) {
        for (Subspace c : {sum(a, b), intersect(a, b)}) {
          if (!std::binary_search(all.begin(), all.end(), c, cmp)) {
            all.insert(std::lower_bound(all.begin(), all.end(), c, cmp), c);
            next.push_back(std::move(c));
            require(static_cast<int>(all.size()) <= cap, Err::CapExceeded,
                    "lattice closure exceeded cap of " + std::to_string(cap));
          }
        }
      }
    fresh = std::move(next);
  }
  return all;
}

} // namespace matgen
