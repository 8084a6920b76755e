#include "matgen/genset.hpp"

#include <algorithm>

#include "matgen/independence.hpp"

namespace matgen {

std::vector<Matrix> canonical_irredundant(int n, Field f) {
  require(n >= 2, Err::BadSize, "canonical set needs n >= 2");
  std::vector<Matrix> s;
  for (int i = 0; i + 1 < n; ++i)
    s.push_back(Matrix::unit(f, n, n, i, i) + Matrix::unit(f, n, n, i, i + 1));
  for (int i = 0; i + 1 < n; ++i)
    s.push_back(Matrix::unit(f, n, n, i + 1, i) + Matrix::unit(f, n, n, i + 1, i + 1));
  s.push_back(Matrix::unit(f, n, n, 0, 0));
  return s;
}

namespace {

std::vector<Matrix> dedupe(const std::vector<Matrix>& s) {
  std::vector<Matrix> out;
  for (const Matrix& a : s)
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  return out;
}

void check_square_set(const std::vector<Matrix>& s) {
  require(!s.empty(), Err::BadInput, "empty matrix set");
  Field f = s.front().field();
  int n = s.front().rows();
  for (const Matrix& a : s) {
    require(a.field() == f, Err::FieldMismatch, "set members over different fields");
    require(a.is_square() && a.rows() == n, Err::DimensionMismatch, "set members must be n x n");
  }
}

} // namespace

bool is_irredundant_generating(const std::vector<Matrix>& s_in) {
  check_square_set(s_in);
  std::vector<Matrix> s = dedupe(s_in);
  if (!generates(s, true)) return false;
  // a repeated entry is removable, so the input cannot be irredundant
  if (s.size() < s_in.size()) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<Matrix> rest;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i) rest.push_back(s[j]);
    if (generates(s.front().field(), s.front().rows(), rest, true)) return false;
  }
  return true;
}

SubsetSelection extract_irredundant(const std::vector<Matrix>& s) {
  check_square_set(s);
  Field f = s.front().field();
  int n = s.front().rows();
  require(generates(s, true), Err::NotGenerating, "input does not generate M_n");

  std::vector<int> kept(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) kept[i] = static_cast<int>(i);
  // one greedy pass: an element kept here stays necessary for every subset of
  // the survivors, so the result is irredundant
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<Matrix> rest;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) rest.push_back(s[static_cast<std::size_t>(kept[j])]);
    if (generates(f, n, rest, true)) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  SubsetSelection out;
  out.indices = kept;
  for (int i : kept) out.subset.push_back(s[static_cast<std::size_t>(i)]);
  require(static_cast<int>(out.subset.size()) <= 2 * n - 1, Err::Internal,
          "irredundant subset exceeds the 2n-1 bound");
  require(is_irredundant_generating(out.subset), Err::Internal,
          "greedy extraction produced a redundant set");
  return out;
}

std::vector<Matrix> corner_basis(const CornerShape& shape, Field f) {
  require(1 <= shape.p && shape.p <= shape.n && 1 <= shape.q && shape.q <= shape.n,
          Err::BadSize, "corner shape out of range");
  std::vector<Matrix> out;
  for (int i = 0; i < shape.p; ++i)
    for (int j = 0; j < shape.q; ++j) out.push_back(Matrix::unit(f, shape.n, shape.n, i, j));
  return out;
}

namespace {

// a has a nonzero entry in rows < q, columns >= q (i.e. a outside L_{q,n-q})
bool outside_block_lower(const Matrix& a, int q) {
  for (int i = 0; i < q; ++i)
    for (int j = q; j < a.cols(); ++j)
      if (!a.at(i, j).is_zero()) return true;
  return false;
}

// a has a nonzero entry in rows >= p, columns < p (outside U_{p,n-p})
bool outside_block_upper(const Matrix& a, int p) {
  for (int i = p; i < a.rows(); ++i)
    for (int j = 0; j < p; ++j)
      if (!a.at(i, j).is_zero()) return true;
  return false;
}

// invertible matrix whose first column is v, completed greedily by standard
// basis vectors
Matrix complete_to_basis(Field f, const Vec& v) {
  int m = static_cast<int>(v.size());
  RowEchelon ech(f, m);
  ech.insert(v);
  std::vector<Vec> cols{v};
  for (int i = 0; i < m && static_cast<int>(cols.size()) < m; ++i) {
    Vec e(static_cast<std::size_t>(m), Scalar::zero(f));
    e[static_cast<std::size_t>(i)] = Scalar::one(f);
    if (ech.insert(e)) cols.push_back(std::move(e));
  }
  Matrix k(f, m, m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) k.at(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  return k;
}

std::vector<int> complete_rec(int p, int q, int n, const std::vector<Matrix>& s) {
  Field f = s.empty() ? nullptr : s.front().field();
  if (p == n && q == n) return {};
  if (p > q) {
    std::vector<Matrix> st;
    st.reserve(s.size());
    for (const Matrix& a : s) st.push_back(transpose(a));
    return complete_rec(q, p, n, st); // indices survive transposition
  }
  if (q < n) {
    int pick = -1;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (outside_block_lower(s[i], q)) { pick = static_cast<int>(i); break; }
    require(pick >= 0, Err::Internal, "no element outside the block algebra (precondition broken)");
    const Matrix& a = s[static_cast<std::size_t>(pick)];
    // v = the q..n-1 tail of the first row of a with a nonzero tail
    Vec v;
    for (int i = 0; i < q && v.empty(); ++i) {
      Vec tail;
      bool nonzero = false;
      for (int j = q; j < n; ++j) {
        tail.push_back(a.at(i, j));
        nonzero = nonzero || !a.at(i, j).is_zero();
      }
      if (nonzero) v = std::move(tail);
    }
    // x = I_q + Q^{-1} with v Q = e_1^t; taking K with first column v^t gives
    // Q = (K^t)^{-1}, hence Q^{-1} = K^t
    Matrix k = complete_to_basis(f, v);
    Matrix x = direct_sum(Matrix::identity(f, q), transpose(k));
    Matrix xi = *inverse(x);
    std::vector<Matrix> conj;
    conj.reserve(s.size());
    for (const Matrix& m : s) conj.push_back(x * m * xi);
    std::vector<int> t = complete_rec(p, q + 1, n, conj);
    if (std::find(t.begin(), t.end(), pick) == t.end()) t.push_back(pick);
    std::sort(t.begin(), t.end());
    return t;
  }
  // q == n, p < n
  int pick = -1;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (outside_block_upper(s[i], p)) { pick = static_cast<int>(i); break; }
  require(pick >= 0, Err::Internal, "no element outside the block algebra (precondition broken)");
  const Matrix& a = s[static_cast<std::size_t>(pick)];
  Vec v;
  for (int j = 0; j < p && v.empty(); ++j) {
    Vec tail;
    bool nonzero = false;
    for (int i = p; i < n; ++i) {
      tail.push_back(a.at(i, j));
      nonzero = nonzero || !a.at(i, j).is_zero();
    }
    if (nonzero) v = std::move(tail);
  }
  // x = I_p + P with P v = e_1; P = K^{-1} for K with first column v
  Matrix k = complete_to_basis(f, v);
  Matrix x = direct_sum(Matrix::identity(f, p), *inverse(k));
  Matrix xi = *inverse(x);
  std::vector<Matrix> conj;
  conj.reserve(s.size());
  for (const Matrix& m : s) conj.push_back(x * m * xi);
  std::vector<int> t = complete_rec(p + 1, n, n, conj);
  if (std::find(t.begin(), t.end(), pick) == t.end()) t.push_back(pick);
  std::sort(t.begin(), t.end());
  return t;
}

} // namespace

SubsetSelection complete_from_corner(const CornerShape& shape, const std::vector<Matrix>& s) {
  require(1 <= shape.p && shape.p <= shape.n && 1 <= shape.q && shape.q <= shape.n,
          Err::BadSize, "corner shape out of range");
  Field f = nullptr;
  if (!s.empty()) {
    check_square_set(s);
    f = s.front().field();
    require(s.front().rows() == shape.n, Err::DimensionMismatch, "set members must be n x n");
  } else {
    require(shape.p == shape.n && shape.q == shape.n, Err::NotGenerating,
            "empty set cannot complete a proper corner");
    f = prime_field(2); // unused
  }
  std::vector<Matrix> seed = s.empty() ? std::vector<Matrix>{} : corner_basis(shape, f);
  if (!s.empty()) {
    std::vector<Matrix> all = seed;
    all.insert(all.end(), s.begin(), s.end());
    require(generates(f, shape.n, all, false), Err::NotGenerating,
            "corner plus set does not generate M_n");
  }

  SubsetSelection out;
  out.indices = complete_rec(shape.p, shape.q, shape.n, s);
  for (int i : out.indices) out.subset.push_back(s[static_cast<std::size_t>(i)]);

  require(static_cast<int>(out.subset.size()) <= 2 * shape.n - shape.p - shape.q, Err::Internal,
          "corner completion exceeds the 2n-p-q bound");
  if (!s.empty()) {
    std::vector<Matrix> verify = corner_basis(shape, f);
    verify.insert(verify.end(), out.subset.begin(), out.subset.end());
    require(generates(f, shape.n, verify, false), Err::Internal,
            "corner completion lost generation");
  }
  return out;
}

WitnessFamily witness_invariant_subspaces(const std::vector<Matrix>& s) {
  check_square_set(s);
  Field f = s.front().field();
  int n = s.front().rows();
  require(is_irredundant_generating(s), Err::NotIrredundant,
          "witness family needs an irredundant generating set");

  WitnessFamily out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<Matrix> rest;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i) rest.push_back(s[j]);
    InvariantSearch r = common_invariant_subspace(rest);
    if (r.status == InvariantSearch::Status::Inconclusive)
      fail(Err::Inconclusive, "invariant-subspace heuristics exhausted over the rationals");
    require(r.found(), Err::NotSplit,
            "no invariant subspace for a co-member algebra; the field is too small");
    // any invariant subspace of the co-member algebra is automatically moved
    // by the remaining generator
    require(!stabilizes(s[i], r.subspace), Err::Internal, "witness subspace not moved");
    out.subspaces.push_back(std::move(r.subspace));
  }
  for (std::size_t i = 0; i < out.subspaces.size(); ++i)
    for (std::size_t j = i + 1; j < out.subspaces.size(); ++j)
      require(out.subspaces[i] != out.subspaces[j], Err::Internal, "witness subspaces collide");
  // monoid independence holds by construction; the invertible version needs
  // enough field elements for the scalar-shift repair
  require(m_independent(out.subspaces).independent, Err::Internal,
          "witness family is not monoid-independent");
  if (!f->finite() || f->cardinality() > n)
    require(gl_independent(out.subspaces).independent, Err::Internal,
            "witness family is not GL-independent");
  return out;
}

int BlockShape::n() const {
  int total = 0;
  for (auto [r, k] : blocks) total += r * k;
  return total;
}

int BlockShape::g() const {
  int total = 0;
  for (auto [r, k] : blocks) total += k;
  return total;
}

void BlockShape::validate() const {
  require(!blocks.empty(), Err::BadSize, "block shape needs at least one block");
  for (auto [r, k] : blocks)
    require(r >= 1 && k >= 1, Err::BadSize, "block parameters must be positive");
}

std::vector<Matrix> block_algebra_basis(const BlockShape& shape, Field f) {
  shape.validate();
  int n = shape.n();
  std::vector<Matrix> out;
  int offset = 0;
  for (auto [r, k] : shape.blocks) {
    for (int c = 0; c < r; ++c)
      for (int d = 0; d < r; ++d) {
        Matrix m(f, n, n);
        for (int u = 0; u < k; ++u) m.at(offset + u * r + c, offset + u * r + d) = Scalar::one(f);
        out.push_back(std::move(m));
      }
    offset += r * k;
  }
  return out;
}

std::vector<Matrix> hat_algebra(const BlockShape& shape, Field f) {
  shape.validate();
  int t = shape.t();
  std::vector<Matrix> out;
  for (int mask = 0; mask < (1 << t); ++mask) {
    Matrix m(f, shape.g(), shape.g());
    int offset = 0;
    for (int i = 0; i < t; ++i) {
      int k = shape.blocks[static_cast<std::size_t>(i)].second;
      if (mask & (1 << i))
        for (int u = 0; u < k; ++u) m.at(offset + u, offset + u) = Scalar::one(f);
      offset += k;
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Matrix> hat_matrix(const BlockShape& shape, const Matrix& x, std::size_t cap) {
  shape.validate();
  int n = shape.n();
  require(x.is_square() && x.rows() == n, Err::DimensionMismatch,
          "matrix size does not match the block shape");
  Field f = x.field();
  int t = shape.t();

  std::vector<int> row_offsets(static_cast<std::size_t>(t) + 1, 0);
  for (int i = 0; i < t; ++i)
    row_offsets[static_cast<std::size_t>(i + 1)] =
        row_offsets[static_cast<std::size_t>(i)] +
        shape.blocks[static_cast<std::size_t>(i)].first * shape.blocks[static_cast<std::size_t>(i)].second;

  // choices[i][j] = coordinate matrices for block (i,j)
  std::vector<std::vector<std::vector<Matrix>>> choices(
      static_cast<std::size_t>(t), std::vector<std::vector<Matrix>>(static_cast<std::size_t>(t)));
  std::size_t total = 1;
  for (int i = 0; i < t; ++i) {
    auto [ri, ki] = shape.blocks[static_cast<std::size_t>(i)];
    for (int j = 0; j < t; ++j) {
      auto [rj, kj] = shape.blocks[static_cast<std::size_t>(j)];
      // cells of the (i,j) block, row-major in (u,v)
      std::vector<Matrix> cells;
      cells.reserve(static_cast<std::size_t>(ki) * static_cast<std::size_t>(kj));
      for (int u = 0; u < ki; ++u)
        for (int v = 0; v < kj; ++v)
          cells.push_back(block_extract(x, row_offsets[static_cast<std::size_t>(i)] + u * ri,
                                        row_offsets[static_cast<std::size_t>(i)] + (u + 1) * ri,
                                        row_offsets[static_cast<std::size_t>(j)] + v * rj,
                                        row_offsets[static_cast<std::size_t>(j)] + (v + 1) * rj));
      // greedy echelon scan picks the cell basis
      RowEchelon ech(f, ri * rj);
      std::vector<Matrix> basis;
      for (const Matrix& c : cells)
        if (ech.insert(c.flatten())) basis.push_back(c);
      auto& slot = choices[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (basis.empty()) {
        slot.push_back(Matrix::zero(f, ki, kj));
      } else {
        // coordinates of every cell in the chosen basis
        int q = static_cast<int>(basis.size());
        Matrix system(f, ri * rj, q);
        for (int l = 0; l < q; ++l) {
          Vec flat = basis[static_cast<std::size_t>(l)].flatten();
          for (int r = 0; r < ri * rj; ++r) system.at(r, l) = flat[static_cast<std::size_t>(r)];
        }
        std::vector<Matrix> coords(static_cast<std::size_t>(q), Matrix::zero(f, ki, kj));
        for (int u = 0; u < ki; ++u)
          for (int v = 0; v < kj; ++v) {
            auto mu = solve(system, cells[static_cast<std::size_t>(u * kj + v)].flatten());
            require(mu.has_value(), Err::Internal, "cell outside its own span");
            for (int l = 0; l < q; ++l)
              coords[static_cast<std::size_t>(l)].at(u, v) = (*mu)[static_cast<std::size_t>(l)];
          }
        for (const Matrix& m : coords)
          if (std::find(slot.begin(), slot.end(), m) == slot.end()) slot.push_back(m);
      }
      total *= slot.size();
      require(total <= cap, Err::CapExceeded,
              "hat assembly count exceeds cap of " + std::to_string(cap));
    }
  }

  // all assemblies, varying the last block fastest
  std::vector<Matrix> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(t) * static_cast<std::size_t>(t), 0);
  for (;;) {
    std::vector<std::vector<Matrix>> grid(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j)
        grid[static_cast<std::size_t>(i)].push_back(
            choices[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                   [pick[static_cast<std::size_t>(i * t + j)]]);
    out.push_back(block_compose(grid));
    int pos = t * t - 1;
    while (pos >= 0) {
      auto& idx = pick[static_cast<std::size_t>(pos)];
      if (++idx < choices[static_cast<std::size_t>(pos / t)][static_cast<std::size_t>(pos % t)].size()) break;
      idx = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

std::pair<bool, bool> laffey_equiv_check(const BlockShape& shape, const std::vector<Matrix>& s,
                                         std::size_t cap) {
  shape.validate();
  int n = shape.n(), g = shape.g();
  Field f = nullptr;
  for (const Matrix& a : s) {
    require(a.is_square() && a.rows() == n, Err::DimensionMismatch,
            "set members do not match the block shape");
    f = a.field();
  }
  require(f != nullptr, Err::BadInput, "laffey_equiv_check needs a nonempty set");

  std::vector<Matrix> lhs_gens = block_algebra_basis(shape, f);
  lhs_gens.insert(lhs_gens.end(), s.begin(), s.end());
  bool lhs = generates(f, n, lhs_gens, false);

  std::vector<Matrix> rhs_gens = hat_algebra(shape, f);
  for (const Matrix& x : s) {
    auto hats = hat_matrix(shape, x, cap);
    rhs_gens.insert(rhs_gens.end(), hats.begin(), hats.end());
  }
  bool rhs = generates(f, g, rhs_gens, false);
  return {lhs, rhs};
}

} // namespace matgen
