#include "matgen/matalg.hpp"

#include <deque>

#include "matgen/eigen.hpp"

namespace matgen {

namespace {

void check_square_family(const std::vector<Matrix>& s, Field f, int n) {
  for (const Matrix& a : s) {
    require(a.field() == f, Err::FieldMismatch, "family members over different fields");
    require(a.is_square() && a.rows() == n, Err::DimensionMismatch,
            "family members must be n x n");
  }
}

} // namespace

bool SpanBasis::insert(const Matrix& a) {
  require(a.is_square() && a.rows() == n_, Err::DimensionMismatch, "span basis dimension mismatch");
  return ech_.insert(a.flatten());
}

bool SpanBasis::contains(const Matrix& a) const {
  require(a.field() == field(), Err::FieldMismatch, "membership over different field");
  require(a.is_square() && a.rows() == n_, Err::DimensionMismatch, "membership dimension mismatch");
  return ech_.contains(a.flatten());
}

std::vector<Matrix> SpanBasis::basis() const {
  std::vector<Matrix> out;
  out.reserve(ech_.basis().size());
  for (const Vec& r : ech_.basis()) out.push_back(Matrix::unflatten(field(), n_, n_, r));
  return out;
}

bool SpanBasis::verify_flags() const {
  bool id_ok = contains(Matrix::identity(field(), n_)) == contains_identity;
  if (!closed_under_mult) return id_ok;
  auto b = basis();
  for (const Matrix& x : b)
    for (const Matrix& y : b)
      if (!contains(x * y)) return false;
  return id_ok;
}

SpanBasis span_close(Field f, int n, const std::vector<Matrix>& s, bool unital) {
  check_square_family(s, f, n);
  SpanBasis span(f, n);
  // generators whose pairwise products have been queued
  std::vector<Matrix> gens;
  std::deque<Matrix> work(s.begin(), s.end());
  if (unital) work.push_front(Matrix::identity(f, n));
  while (!work.empty()) {
    Matrix m = std::move(work.front());
    work.pop_front();
    if (!span.insert(m)) continue;
    gens.push_back(m);
    for (const Matrix& g : gens) {
      if (span.dim() == n * n) break;
      work.push_back(m * g);
      work.push_back(g * m);
    }
    if (span.dim() == n * n) break;
  }
  span.closed_under_mult = true;
  span.contains_identity = span.contains(Matrix::identity(f, n));
  return span;
}

SpanBasis span_close(const std::vector<Matrix>& s, bool unital) {
  require(!s.empty(), Err::BadInput, "span_close of an empty family needs explicit dimensions");
  return span_close(s.front().field(), s.front().rows(), s, unital);
}

bool generates(Field f, int n, const std::vector<Matrix>& s, bool unital) {
  return span_close(f, n, s, unital).dim() == n * n;
}

bool generates(const std::vector<Matrix>& s, bool unital) {
  require(!s.empty(), Err::BadInput, "generates of an empty family needs explicit dimensions");
  return generates(s.front().field(), s.front().rows(), s, unital);
}

SpanBasis centralizer(const std::vector<Matrix>& s) {
  require(!s.empty(), Err::BadInput, "centralizer of an empty family");
  Field f = s.front().field();
  int n = s.front().rows();
  check_square_family(s, f, n);
  // linear system (xa - ax)_{ij} = 0 in the n^2 entries of x
  Matrix system(f, static_cast<int>(s.size()) * n * n, n * n);
  int eq = 0;
  for (const Matrix& a : s) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        for (int c = 0; c < n; ++c) system.at(eq, i * n + c) += a.at(c, j);
        for (int r = 0; r < n; ++r) system.at(eq, r * n + j) -= a.at(i, r);
        ++eq;
      }
  }
  SpanBasis out(f, n);
  for (const Vec& v : kernel(system)) out.insert(Matrix::unflatten(f, n, n, v));
  out.closed_under_mult = true;
  out.contains_identity = true;
  return out;
}

namespace {

// span of {b*v : b in basis}, as a subspace of F^n
Subspace cyclic_module(const std::vector<Matrix>& algebra_basis, Field f, int n, const Vec& v) {
  std::vector<Vec> rows;
  rows.reserve(algebra_basis.size());
  for (const Matrix& b : algebra_basis) rows.push_back(b.apply(v));
  return Subspace::from_spanning(f, n, rows);
}

// All lines of F^n via normalized representatives: first nonzero coord is 1.
std::vector<Vec> all_line_representatives(Field f, int n) {
  std::vector<Vec> out;
  auto elems = enumerate_field(f);
  std::int64_t q = f->cardinality();
  for (int lead = n - 1; lead >= 0; --lead) {
    std::int64_t tail = 1;
    for (int i = lead + 1; i < n; ++i) tail *= q;
    for (std::int64_t idx = 0; idx < tail; ++idx) {
      Vec v(static_cast<std::size_t>(n), Scalar::zero(f));
      v[static_cast<std::size_t>(lead)] = Scalar::one(f);
      std::int64_t t = idx;
      for (int i = n - 1; i > lead; --i) {
        v[static_cast<std::size_t>(i)] = elems[static_cast<std::size_t>(t % q)];
        t /= q;
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<Vec> candidate_vectors(const std::vector<Matrix>& s, Field f, int n, unsigned seed) {
  std::vector<Vec> cand;
  for (int i = 0; i < n; ++i) cand.push_back(Matrix::identity(f, n).row(i));
  for (const Matrix& a : s)
    for (const EigenPair& p : eigen_data(a).pairs)
      for (const Vec& row : p.space.basis()) cand.push_back(row);
  if (f->finite()) {
    auto lines = all_line_representatives(f, n);
    cand.insert(cand.end(), lines.begin(), lines.end());
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-4, 4);
    for (int t = 0; t < 64; ++t) {
      Vec v;
      for (int i = 0; i < n; ++i) v.push_back(Scalar(f, dist(rng)));
      if (!vec_is_zero(v)) cand.push_back(std::move(v));
    }
  }
  return cand;
}

} // namespace

InvariantSearch common_invariant_subspace(const std::vector<Matrix>& s, unsigned seed) {
  require(!s.empty(), Err::BadInput, "invariant subspace search over an empty family");
  Field f = s.front().field();
  int n = s.front().rows();
  check_square_family(s, f, n);

  InvariantSearch out;
  std::vector<Matrix> with_id = s;
  with_id.push_back(Matrix::identity(f, n));
  SpanBasis algebra = span_close(f, n, with_id, false);
  if (algebra.dim() == n * n) {
    out.status = InvariantSearch::Status::Irreducible;
    return out;
  }
  auto basis = algebra.basis();
  for (const Vec& v : candidate_vectors(s, f, n, seed)) {
    if (vec_is_zero(v)) continue;
    Subspace w = cyclic_module(basis, f, n, v);
    if (w.dim() > 0 && w.dim() < n) {
      out.status = InvariantSearch::Status::Found;
      out.subspace = std::move(w);
      return out;
    }
  }
  // transpose side: a^t-invariant W gives an S-invariant perp(W)
  std::vector<Matrix> st;
  st.reserve(s.size());
  for (const Matrix& a : s) st.push_back(transpose(a));
  std::vector<Matrix> st_id = st;
  st_id.push_back(Matrix::identity(f, n));
  auto t_basis = span_close(f, n, st_id, false).basis();
  for (const Vec& v : candidate_vectors(st, f, n, seed + 1)) {
    if (vec_is_zero(v)) continue;
    Subspace w = cyclic_module(t_basis, f, n, v);
    if (w.dim() > 0 && w.dim() < n) {
      out.status = InvariantSearch::Status::Found;
      out.subspace = perp(w);
      return out;
    }
  }
  // Over a finite field the line scan was complete: the module is irreducible
  // even if the algebra is proper (division-algebra image).
  out.status = f->finite() ? InvariantSearch::Status::Irreducible
                           : InvariantSearch::Status::Inconclusive;
  return out;
}

namespace {

// common eigenvector of all mats (m x m), or empty; sets saw_nonsplit
Vec find_common_eigenvector(const std::vector<Matrix>& mats, Field f, int m, bool& saw_nonsplit) {
  for (const Matrix& a : mats)
    if (!eigen_data(a).split) saw_nonsplit = true;
  if (mats.empty()) return Matrix::identity(f, m).row(0);
  if (f->finite()) {
    for (const Vec& v : all_line_representatives(f, m)) {
      bool ok = true;
      for (const Matrix& a : mats) {
        Vec av = a.apply(v);
        // av must be proportional to v
        Subspace line = Subspace::line(f, v);
        if (!line.contains_vector(av)) { ok = false; break; }
      }
      if (ok) return v;
    }
    return {};
  }
  // rationals: intersect eigenspaces across members
  std::vector<Subspace> spaces{Subspace::full(f, m)};
  for (const Matrix& a : mats) {
    std::vector<Subspace> next;
    for (const EigenPair& p : eigen_data(a).pairs)
      for (const Subspace& e : spaces) {
        Subspace w = intersect(e, p.space);
        if (w.dim() > 0) next.push_back(std::move(w));
      }
    spaces = std::move(next);
    if (spaces.empty()) return {};
  }
  return spaces.front().basis().front();
}

} // namespace

bool is_triangularizable(const std::vector<Matrix>& s) {
  require(!s.empty(), Err::BadInput, "triangularizability of an empty family");
  Field f = s.front().field();
  int n = s.front().rows();
  check_square_family(s, f, n);

  std::vector<Matrix> mats = s;
  bool saw_nonsplit = false;
  for (int m = n; m > 1; --m) {
    Vec v = find_common_eigenvector(mats, f, m, saw_nonsplit);
    if (v.empty()) {
      require(!saw_nonsplit, Err::NotSplit,
              "no common eigenvector and some spectrum does not split");
      return false;
    }
    // complete v to a basis and pass to the quotient
    int lead = 0;
    while (v[static_cast<std::size_t>(lead)].is_zero()) ++lead;
    Matrix p(f, m, m);
    for (int i = 0; i < m; ++i) p.at(i, 0) = v[static_cast<std::size_t>(i)];
    int c = 1;
    for (int j = 0; j < m; ++j) {
      if (j == lead) continue;
      p.at(j, c++) = Scalar::one(f);
    }
    Matrix pinv = *inverse(p);
    std::vector<Matrix> next;
    next.reserve(mats.size());
    for (const Matrix& a : mats) next.push_back(block_extract(pinv * a * p, 1, m, 1, m));
    mats = std::move(next);
  }
  return true;
}

} // namespace matgen
