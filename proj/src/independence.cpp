#include "matgen/independence.hpp"

#include <algorithm>

namespace matgen {

namespace {

void check_family(const std::vector<Subspace>& family, Field f, int n) {
  for (const Subspace& v : family)
    require(v.field() == f && v.ambient() == n, Err::AmbientMismatch,
            "family members in different ambient spaces");
}

// Linear conditions on a in M_n expressing a(U) inside U: one row per
// (perp vector w, basis vector u) pair, coefficients w_r * u_c on a_{rc}.
void append_stabilizer_rows(std::vector<Vec>& rows, const Subspace& u, Field f, int n) {
  if (u.is_zero() || u.is_full()) return;
  Subspace cond = perp(u);
  for (const Vec& w : cond.basis())
    for (const Vec& b : u.basis()) {
      Vec row(static_cast<std::size_t>(n * n), Scalar::zero(f));
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          row[static_cast<std::size_t>(r * n + c)] =
              w[static_cast<std::size_t>(r)] * b[static_cast<std::size_t>(c)];
      rows.push_back(std::move(row));
    }
}

} // namespace

SpanBasis stabilizer_algebra(Field f, int n, const std::vector<Subspace>& family) {
  check_family(family, f, n);
  std::vector<Vec> rows;
  for (const Subspace& u : family) append_stabilizer_rows(rows, u, f, n);
  SpanBasis out(f, n);
  if (rows.empty()) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.insert(Matrix::unit(f, n, n, i, j));
  } else {
    Matrix system = Matrix::from_rows(f, rows);
    for (const Vec& v : kernel(system)) out.insert(Matrix::unflatten(f, n, n, v));
  }
  out.closed_under_mult = true;
  out.contains_identity = true;
  return out;
}

SpanBasis stabilizer_algebra(const std::vector<Subspace>& family) {
  require(!family.empty(), Err::BadInput, "empty family needs explicit ambient dimensions");
  return stabilizer_algebra(family.front().field(), family.front().ambient(), family);
}

namespace {

struct WitnessSearch {
  bool found = false;
  Matrix witness;
  bool invertible = false;
};

// First basis element of the stabilizer algebra moving v; by linearity the
// whole algebra stabilizes v iff every basis element does.
std::optional<Matrix> basis_mover(const SpanBasis& stab, const Subspace& v) {
  for (const Matrix& w : stab.basis())
    if (!stabilizes(w, v)) return w;
  return std::nullopt;
}

WitnessSearch invertible_mover(const SpanBasis& stab, const Subspace& v) {
  WitnessSearch out;
  Field f = stab.field();
  int n = stab.n();
  auto w = basis_mover(stab, v);
  if (!w) return out;
  bool small_field = f->finite() && f->cardinality() <= n;
  if (!small_field) {
    // w + alpha I is invertible for some alpha avoiding the <= n eigenvalues
    // of -w, and it moves v exactly when w does.
    Matrix id = Matrix::identity(f, n);
    for (std::int64_t i = 0;; ++i) {
      if (f->finite() && i >= f->cardinality()) break;
      Scalar alpha = f->finite() ? Scalar::from_index(f, i) : Scalar(f, i);
      Matrix cand = *w + id.scaled(alpha);
      if (is_invertible(cand)) {
        out.found = true;
        out.witness = cand;
        out.invertible = true;
        return out;
      }
    }
    fail(Err::Internal, "no invertible shift of a mover found");
  }
  // tiny field: exhaust the stabilizer algebra for an invertible mover
  auto basis = stab.basis();
  int d = static_cast<int>(basis.size());
  std::int64_t q = f->cardinality();
  std::int64_t total = 1;
  for (int i = 0; i < d; ++i) total *= q;
  for (std::int64_t idx = 1; idx < total; ++idx) {
    Matrix cand(f, n, n);
    std::int64_t t = idx;
    for (int i = 0; i < d; ++i) {
      std::int64_t c = t % q;
      t /= q;
      if (c != 0) cand = cand + basis[static_cast<std::size_t>(i)].scaled(Scalar::from_index(f, c));
    }
    if (!stabilizes(cand, v) && is_invertible(cand)) {
      out.found = true;
      out.witness = cand;
      out.invertible = true;
      return out;
    }
  }
  return out;
}

IndepResult independent_impl(const std::vector<Subspace>& family, bool need_invertible) {
  IndepResult out;
  if (family.empty()) {
    out.independent = true;
    return out;
  }
  Field f = family.front().field();
  int n = family.front().ambient();
  check_family(family, f, n);
  // trivial members or duplicates make the family dependent outright
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].is_zero() || family[i].is_full()) return out;
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (family[i] == family[j]) return out;
  }
  IndepWitness witness;
  for (std::size_t i = 0; i < family.size(); ++i) {
    std::vector<Subspace> others;
    for (std::size_t j = 0; j < family.size(); ++j)
      if (j != i) others.push_back(family[j]);
    SpanBasis stab = stabilizer_algebra(f, n, others);
    if (need_invertible) {
      WitnessSearch ws = invertible_mover(stab, family[i]);
      if (!ws.found) return out;
      witness.movers.push_back(ws.witness);
      witness.invertible.push_back(true);
    } else {
      auto w = basis_mover(stab, family[i]);
      if (!w) return out;
      witness.movers.push_back(*w);
      witness.invertible.push_back(is_invertible(*w));
    }
  }
  out.independent = true;
  out.witness = std::move(witness);
  return out;
}

} // namespace

IndepResult gl_independent(const std::vector<Subspace>& family) {
  return independent_impl(family, true);
}

IndepResult m_independent(const std::vector<Subspace>& family) {
  return independent_impl(family, false);
}

PatternResult pattern_classify(const std::vector<Subspace>& family) {
  PatternResult out;
  require(family.size() == 5, Err::BadInput, "pattern_classify needs exactly 5 subspaces");
  Field f = family.front().field();
  check_family(family, f, 3);

  std::vector<int> lines, planes;
  for (int i = 0; i < 5; ++i) {
    if (family[static_cast<std::size_t>(i)].dim() == 1) lines.push_back(i);
    if (family[static_cast<std::size_t>(i)].dim() == 2) planes.push_back(i);
  }
  auto member = [&](int i) -> const Subspace& { return family[static_cast<std::size_t>(i)]; };

  if (lines.size() == 3 && planes.size() == 2) {
    std::sort(lines.begin(), lines.end());
    std::sort(planes.begin(), planes.end());
    std::vector<int> lp = lines;
    do {
      std::vector<int> pp = planes;
      do {
        const Subspace &l1 = member(lp[0]), &l2 = member(lp[1]), &l3 = member(lp[2]);
        const Subspace &p1 = member(pp[0]), &p2 = member(pp[1]);
        bool ok = p1.contains(l1) && p2.contains(l2) && sum(sum(l1, l2), l3).is_full() &&
                  !p2.contains(l1) && !p1.contains(l2) && !p1.contains(l3) && !p2.contains(l3);
        if (ok) {
          out.kind = PatternResult::Kind::Pattern1;
          out.roles = {lp[0], lp[1], lp[2], pp[0], pp[1]};
          return out;
        }
      } while (std::next_permutation(pp.begin(), pp.end()));
    } while (std::next_permutation(lp.begin(), lp.end()));
  } else if (lines.size() == 2 && planes.size() == 3) {
    std::sort(lines.begin(), lines.end());
    std::sort(planes.begin(), planes.end());
    std::vector<int> lp = lines;
    do {
      std::vector<int> pp = planes;
      do {
        const Subspace &l1 = member(lp[0]), &l2 = member(lp[1]);
        const Subspace &p1 = member(pp[0]), &p2 = member(pp[1]), &p3 = member(pp[2]);
        bool ok = p1.contains(l1) && p2.contains(l2) &&
                  intersect(intersect(p1, p2), p3).is_zero() && !p2.contains(l1) &&
                  !p3.contains(l1) && !p1.contains(l2) && !p3.contains(l2);
        if (ok) {
          out.kind = PatternResult::Kind::Pattern2;
          out.roles = {lp[0], lp[1], pp[0], pp[1], pp[2]};
          return out;
        }
      } while (std::next_permutation(pp.begin(), pp.end()));
    } while (std::next_permutation(lp.begin(), lp.end()));
  }
  return out;
}

} // namespace matgen
