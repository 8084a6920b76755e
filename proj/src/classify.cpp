#include "matgen/classify.hpp"

#include <algorithm>

#include "matgen/eigen.hpp"
#include "matgen/independence.hpp"

namespace matgen {

TransformRecord TransformRecord::identity(Field f, int n, int r) {
  TransformRecord t;
  t.perm.resize(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) t.perm[static_cast<std::size_t>(i)] = i;
  t.affine.assign(static_cast<std::size_t>(r), AffinePair{Scalar::one(f), Scalar::zero(f)});
  t.conjugator = Matrix::identity(f, n);
  return t;
}

void TransformRecord::then_permute(const std::vector<int>& sigma) {
  require(sigma.size() == perm.size(), Err::BadInput, "permutation length mismatch");
  std::vector<int> new_perm(perm.size());
  std::vector<AffinePair> new_affine(affine.size(), affine.front());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    int s = sigma[i];
    require(s >= 0 && s < static_cast<int>(perm.size()), Err::BadInput, "bad permutation entry");
    new_perm[i] = perm[static_cast<std::size_t>(s)];
    new_affine[i] = affine[static_cast<std::size_t>(s)];
  }
  perm = std::move(new_perm);
  affine = std::move(new_affine);
}

void TransformRecord::then_affine(int pos, const Scalar& scale, const Scalar& shift) {
  require(!scale.is_zero(), Err::ZeroScale, "affine scale must be nonzero");
  AffinePair& p = affine[static_cast<std::size_t>(pos)];
  // scale*(old_scale*a + old_shift*I) + shift*I
  p.shift = scale * p.shift + shift;
  p.scale = scale * p.scale;
}

void TransformRecord::then_transpose() {
  transposed = !transposed;
  // transpose(g X g^{-1}) = (g^{-1})^t X^t g^t
  auto gi = inverse(conjugator);
  require(gi.has_value(), Err::SingularConjugator, "record conjugator is singular");
  conjugator = transpose(*gi);
}

void TransformRecord::then_conjugate(const Matrix& g) {
  require(is_invertible(g), Err::SingularConjugator, "conjugator must be invertible");
  conjugator = g * conjugator;
}

std::vector<Matrix> apply_transform(const std::vector<Matrix>& s, const TransformRecord& t) {
  require(t.perm.size() == s.size() && t.affine.size() == s.size(), Err::BadInput,
          "record arity does not match the tuple");
  require(is_invertible(t.conjugator), Err::SingularConjugator, "conjugator must be invertible");
  Field f = t.conjugator.field();
  int n = t.conjugator.rows();
  std::vector<bool> seen(s.size(), false);
  Matrix gi = *inverse(t.conjugator);
  Matrix id = Matrix::identity(f, n);
  std::vector<Matrix> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    int src = t.perm[i];
    require(!seen[static_cast<std::size_t>(src)], Err::BadInput, "perm is not a permutation");
    seen[static_cast<std::size_t>(src)] = true;
    const AffinePair& p = t.affine[i];
    require(!p.scale.is_zero(), Err::ZeroScale, "affine scale must be nonzero");
    Matrix a = s[static_cast<std::size_t>(src)].scaled(p.scale) + id.scaled(p.shift);
    if (t.transposed) a = transpose(a);
    out.push_back(t.conjugator * a * gi);
  }
  return out;
}

TransformRecord inverse_record(const TransformRecord& t) {
  Field f = t.conjugator.field();
  int n = t.conjugator.rows();
  int r = static_cast<int>(t.perm.size());
  TransformRecord inv = TransformRecord::identity(f, n, r);
  inv.then_conjugate(*inverse(t.conjugator));
  if (t.transposed) inv.then_transpose();
  // undo the affine map that fed position i, then send position i back
  std::vector<int> sigma_inv(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) sigma_inv[static_cast<std::size_t>(t.perm[static_cast<std::size_t>(i)])] = i;
  for (int i = 0; i < r; ++i) {
    const AffinePair& p = t.affine[static_cast<std::size_t>(i)];
    inv.then_affine(i, p.scale.inverse(), -(p.shift / p.scale));
  }
  inv.then_permute(sigma_inv);
  return inv;
}

std::vector<Matrix> s_alpha(const Scalar& alpha) {
  Field f = alpha.field();
  return {
      mat_of(f, {{1, 1, 0}, {0, 0, 0}, {0, 0, 0}}),
      mat_of(f, {{0, 0, 0}, {1, 1, 0}, {0, 0, 0}}),
      mat_of(f, {{0, 0, 0}, {0, 1, 1}, {0, 0, 0}}),
      mat_of(f, {{0, 0, 0}, {0, 0, 0}, {0, 1, 1}}),
      Matrix::diagonal(f, {Scalar::one(f), Scalar::zero(f), alpha}),
  };
}

std::vector<Matrix> canonical_triple_m2(Field f) {
  return {mat_of(f, {{1, 1}, {0, 0}}), mat_of(f, {{0, 0}, {1, 1}}), mat_of(f, {{1, 0}, {0, 0}})};
}

namespace {

Vec line_vector(const Subspace& s) {
  require(s.dim() == 1, Err::Internal, "expected a line");
  return s.basis().front();
}

// eigenvalue of a on a known invariant line; failures here mean the witness
// bookkeeping broke, not bad user input
Scalar eigen_on_line(const Matrix& a, const Vec& v) {
  try {
    return eigenvalue_on(a, v);
  } catch (const MatgenError&) {
    fail(Err::Internal, "expected eigenvector is not one");
  }
}

void apply_affine_inplace(Matrix& a, const Scalar& scale, const Scalar& shift) {
  a = a.scaled(scale) + Matrix::identity(a.field(), a.rows()).scaled(shift);
}

// normalization that sends the eigenvalue on `to_one` to 1 and the (equal)
// eigenvalues on the other invariant lines to 0
AffinePair normalizing_pair(const Matrix& a, const Vec& to_one, const Vec& to_zero) {
  Scalar lambda1 = eigen_on_line(a, to_one);
  Scalar lambda0 = eigen_on_line(a, to_zero);
  require(lambda1 != lambda0, Err::Internal, "degenerate eigenvalues on witness lines");
  Scalar scale = (lambda1 - lambda0).inverse();
  return AffinePair{scale, -(lambda0 * scale)};
}

} // namespace

Classification2 classify_m2_triple(const std::vector<Matrix>& triple) {
  require(triple.size() == 3, Err::BadInput, "classify_m2_triple needs exactly 3 matrices");
  Field f = triple.front().field();
  for (const Matrix& a : triple)
    require(a.field() == f && a.is_square() && a.rows() == 2, Err::DimensionMismatch,
            "classify_m2_triple needs 2 x 2 matrices over one field");
  require(is_irredundant_generating(triple), Err::NotIrredundant,
          "triple is not an irredundant generating set");

  WitnessFamily wf = witness_invariant_subspaces(triple);
  // V_1 -> F(0,1), V_2 -> F(1,0), V_3 -> F(1,-1)
  Vec v1 = line_vector(wf.subspaces[0]);
  Vec v2 = line_vector(wf.subspaces[1]);
  Vec v3 = line_vector(wf.subspaces[2]);
  Matrix basis(f, 2, 2);
  for (int i = 0; i < 2; ++i) {
    basis.at(i, 0) = v1[static_cast<std::size_t>(i)];
    basis.at(i, 1) = v2[static_cast<std::size_t>(i)];
  }
  auto coeffs = solve(basis, v3);
  require(coeffs.has_value() && !(*coeffs)[0].is_zero() && !(*coeffs)[1].is_zero(), Err::Internal,
          "witness lines are not in general position");
  // columns c1*v1, c2*v2 map to (0,-1) and (1,0), so v3 maps to (1,-1)
  Matrix scaled(f, 2, 2);
  for (int i = 0; i < 2; ++i) {
    scaled.at(i, 0) = v1[static_cast<std::size_t>(i)] * (*coeffs)[0];
    scaled.at(i, 1) = v2[static_cast<std::size_t>(i)] * (*coeffs)[1];
  }
  Matrix targets = mat_of(f, {{0, 1}, {-1, 0}});
  Matrix g = targets * *inverse(scaled);

  TransformRecord record = TransformRecord::identity(f, 2, 3);
  record.then_conjugate(g);
  Matrix gi = *inverse(g);
  std::vector<Matrix> work;
  for (const Matrix& a : triple) work.push_back(g * a * gi);

  Vec e1{Scalar::one(f), Scalar::zero(f)};
  Vec e2{Scalar::zero(f), Scalar::one(f)};
  Vec d{Scalar::one(f), -Scalar::one(f)};
  // position 0 fixes F e1 and F(1,-1); position 1 fixes F e2 and F(1,-1);
  // position 2 fixes both axes
  const std::array<std::pair<Vec, Vec>, 3> plan{{{e1, d}, {e2, d}, {e1, e2}}};
  for (int i = 0; i < 3; ++i) {
    AffinePair p = normalizing_pair(work[static_cast<std::size_t>(i)], plan[static_cast<std::size_t>(i)].first,
                                    plan[static_cast<std::size_t>(i)].second);
    record.then_affine(i, p.scale, p.shift);
    apply_affine_inplace(work[static_cast<std::size_t>(i)], p.scale, p.shift);
  }

  Classification2 out;
  out.canonical = canonical_triple_m2(f);
  require(work == out.canonical, Err::Internal, "normalization missed the canonical triple");
  require(apply_transform(triple, record) == out.canonical, Err::Internal,
          "record does not reproduce the normalization");
  out.record = std::move(record);
  return out;
}

namespace {

// all role assignments (L1, L2, L3, P1, P2) matching the line/plane pattern
std::vector<std::array<int, 5>> pattern1_labelings(const std::vector<Subspace>& family) {
  std::vector<std::array<int, 5>> out;
  std::vector<int> lines, planes;
  for (int i = 0; i < 5; ++i) {
    if (family[static_cast<std::size_t>(i)].dim() == 1) lines.push_back(i);
    if (family[static_cast<std::size_t>(i)].dim() == 2) planes.push_back(i);
  }
  if (lines.size() != 3 || planes.size() != 2) return out;
  std::sort(lines.begin(), lines.end());
  std::sort(planes.begin(), planes.end());
  std::vector<int> lp = lines;
  do {
    std::vector<int> pp = planes;
    do {
      const Subspace &l1 = family[static_cast<std::size_t>(lp[0])],
                     &l2 = family[static_cast<std::size_t>(lp[1])],
                     &l3 = family[static_cast<std::size_t>(lp[2])];
      const Subspace &p1 = family[static_cast<std::size_t>(pp[0])],
                     &p2 = family[static_cast<std::size_t>(pp[1])];
      if (p1.contains(l1) && p2.contains(l2) && sum(sum(l1, l2), l3).is_full() &&
          !p2.contains(l1) && !p1.contains(l2) && !p1.contains(l3) && !p2.contains(l3))
        out.push_back({lp[0], lp[1], lp[2], pp[0], pp[1]});
    } while (std::next_permutation(pp.begin(), pp.end()));
  } while (std::next_permutation(lp.begin(), lp.end()));
  return out;
}

struct Branch {
  TransformRecord record;
  Scalar alpha;
};

} // namespace

Classification3 classify_m3_quintuple(const std::vector<Matrix>& s) {
  require(s.size() == 5, Err::BadInput, "classify_m3_quintuple needs exactly 5 matrices");
  Field f = s.front().field();
  for (const Matrix& a : s)
    require(a.field() == f && a.is_square() && a.rows() == 3, Err::DimensionMismatch,
            "classify_m3_quintuple needs 3 x 3 matrices over one field");
  require(is_irredundant_generating(s), Err::NotIrredundant,
          "tuple is not an irredundant generating set");

  WitnessFamily wf = witness_invariant_subspaces(s);
  std::vector<Subspace> family = wf.subspaces;

  TransformRecord base = TransformRecord::identity(f, 3, 5);
  std::vector<Matrix> work = s;
  PatternResult pat = pattern_classify(family);
  if (pat.kind == PatternResult::Kind::Pattern2) {
    base.then_transpose();
    for (Matrix& a : work) a = transpose(a);
    for (Subspace& v : family) v = perp(v);
    pat = pattern_classify(family);
  }
  require(pat.kind == PatternResult::Kind::Pattern1, Err::InternalPatternFailure,
          "witness family matches no pattern");

  auto labelings = pattern1_labelings(family);
  require(!labelings.empty(), Err::InternalPatternFailure, "pattern labeling vanished");

  Vec e1{Scalar::one(f), Scalar::zero(f), Scalar::zero(f)};
  Vec e2{Scalar::zero(f), Scalar::one(f), Scalar::zero(f)};
  Vec e3{Scalar::zero(f), Scalar::zero(f), Scalar::one(f)};
  Vec ones{Scalar::one(f), Scalar::one(f), Scalar::one(f)};
  Matrix c1 = mat_of(f, {{1, 0, 0}, {0, 0, -1}, {0, 1, 0}});
  Matrix j = mat_of(f, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});

  std::vector<Branch> branches;
  for (const auto& roles : labelings) {
    // frame: L1 -> Fe1, L2 -> Fe2, P1 cap P2 -> Fe3, L3 -> F(1,1,1)
    Vec v1 = line_vector(family[static_cast<std::size_t>(roles[0])]);
    Vec v2 = line_vector(family[static_cast<std::size_t>(roles[1])]);
    Vec v3 = line_vector(family[static_cast<std::size_t>(roles[2])]);
    Vec v0 = line_vector(intersect(family[static_cast<std::size_t>(roles[3])],
                                   family[static_cast<std::size_t>(roles[4])]));
    Matrix basis(f, 3, 3);
    for (int i = 0; i < 3; ++i) {
      basis.at(i, 0) = v1[static_cast<std::size_t>(i)];
      basis.at(i, 1) = v2[static_cast<std::size_t>(i)];
      basis.at(i, 2) = v0[static_cast<std::size_t>(i)];
    }
    auto coeffs = solve(basis, v3);
    require(coeffs.has_value(), Err::Internal, "degenerate witness frame");
    for (const Scalar& c : *coeffs)
      require(!c.is_zero(), Err::Internal, "witness frame coefficients vanish");
    Matrix scaled(f, 3, 3);
    for (int i = 0; i < 3; ++i) {
      scaled.at(i, 0) = v1[static_cast<std::size_t>(i)] * (*coeffs)[0];
      scaled.at(i, 1) = v2[static_cast<std::size_t>(i)] * (*coeffs)[1];
      scaled.at(i, 2) = v0[static_cast<std::size_t>(i)] * (*coeffs)[2];
    }
    Matrix g = *inverse(scaled);

    TransformRecord rec = base;
    rec.then_conjugate(g);
    std::vector<Matrix> tup = work;
    Matrix gi = *inverse(g);
    for (Matrix& a : tup) a = g * a * gi;

    // tuple order: (member of P2, member of L1, member of L2, member of P1,
    // member of L3); after the axis swap below those land on the canonical
    // positions
    std::vector<int> sigma{roles[4], roles[0], roles[1], roles[3], roles[2]};
    rec.then_permute(sigma);
    std::vector<Matrix> ordered;
    for (int idx : sigma) ordered.push_back(tup[static_cast<std::size_t>(idx)]);

    // eigenvalue normalization per position (the matching equal pair is
    // forced by the invariant planes)
    const std::array<std::pair<Vec, Vec>, 4> plan{{
        {e1, e2},  // P2 witness: e2 and (1,1,1) share the eigenvalue
        {e3, e2},  // L1 witness
        {e3, e1},  // L2 witness
        {e2, e1},  // P1 witness
    }};
    for (int i = 0; i < 4; ++i) {
      Matrix& a = ordered[static_cast<std::size_t>(i)];
      AffinePair p = normalizing_pair(a, plan[static_cast<std::size_t>(i)].first,
                                      plan[static_cast<std::size_t>(i)].second);
      // the third invariant line must carry the same eigenvalue as the one
      // sent to zero
      require(eigen_on_line(a, ones) == eigen_on_line(a, plan[static_cast<std::size_t>(i)].second),
              Err::Internal, "eigenvalue coincidence broken");
      rec.then_affine(i, p.scale, p.shift);
      apply_affine_inplace(a, p.scale, p.shift);
    }
    require(ordered[4].is_scalar() == false, Err::Internal, "diagonal member is scalar");

    rec.then_conjugate(c1);
    Matrix c1i = *inverse(c1);
    for (Matrix& a : ordered) a = c1 * a * c1i;
    const Matrix& diag = ordered[4];
    require(diag.at(0, 1).is_zero() && diag.at(0, 2).is_zero() && diag.at(1, 0).is_zero() &&
                diag.at(1, 2).is_zero() && diag.at(2, 0).is_zero() && diag.at(2, 1).is_zero(),
            Err::Internal, "fifth member is not diagonal");
    Scalar d1 = diag.at(0, 0), d2 = diag.at(1, 1), d3 = diag.at(2, 2);

    auto finish = [&](TransformRecord r, const std::vector<Matrix>& tuple, const Scalar& top,
                      const Scalar& mid, const Scalar& bot) {
      // diag(top, mid, bot) -> diag(1, 0, (bot-mid)/(top-mid))
      Scalar scale = (top - mid).inverse();
      r.then_affine(4, scale, -(mid * scale));
      Scalar alpha = (bot - mid) * scale;
      std::vector<Matrix> final_tuple = tuple;
      apply_affine_inplace(final_tuple[4], scale, -(mid * scale));
      require(final_tuple == s_alpha(alpha), Err::Internal, "normalization missed s_alpha");
      require(apply_transform(s, r) == final_tuple, Err::Internal,
              "record does not reproduce the normalization");
      branches.push_back(Branch{std::move(r), alpha});
    };

    if (d1 != d2) finish(rec, ordered, d1, d2, d3);
    if (d3 != d2) {
      // swap the outer diagonal entries; the axis reversal also swaps the
      // first four members in pairs
      TransformRecord r = rec;
      r.then_conjugate(j);
      std::vector<Matrix> tup2 = ordered;
      for (Matrix& a : tup2) a = j * a * j;
      r.then_permute({3, 2, 1, 0, 4});
      std::vector<Matrix> swapped{tup2[3], tup2[2], tup2[1], tup2[0], tup2[4]};
      finish(std::move(r), swapped, d3, d2, d1);
    }
  }
  require(!branches.empty(), Err::Internal, "no normalization branch completed");

  Classification3 out;
  out.record = branches.front().record;
  out.alpha = branches.front().alpha;
  for (const Branch& b : branches) {
    bool seen = false;
    for (const Scalar& a : out.reachable) seen = seen || a == b.alpha;
    if (!seen) out.reachable.push_back(b.alpha);
  }
  std::sort(out.reachable.begin(), out.reachable.end(),
            [](const Scalar& a, const Scalar& b) { return a.less_than(b); });
  out.witnesses = std::move(wf.subspaces);
  return out;
}

AlphaClass alpha_class(const Scalar& alpha) {
  Field f = alpha.field();
  require(!alpha.is_zero() && !alpha.is_one(), Err::DegenerateAlpha,
          "alpha_class needs alpha outside {0,1}");
  AlphaClass out;
  out.base = alpha;
  Scalar one = Scalar::one(f), zero = Scalar::zero(f);
  // expressions x+y, y, alpha x + y as rows (coef_x, coef_y)
  const std::array<std::pair<Scalar, Scalar>, 3> expr{{{one, one}, {zero, one}, {alpha, one}}};
  auto add_candidate = [&](const Scalar& beta) {
    for (const Scalar& c : out.candidates)
      if (c == beta) return;
    out.candidates.push_back(beta);
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      int k = 3 - i - j;
      // e_i = 1, e_j = 0
      Matrix system(f, 2, 2);
      system.at(0, 0) = expr[static_cast<std::size_t>(i)].first;
      system.at(0, 1) = expr[static_cast<std::size_t>(i)].second;
      system.at(1, 0) = expr[static_cast<std::size_t>(j)].first;
      system.at(1, 1) = expr[static_cast<std::size_t>(j)].second;
      auto xy = solve(system, {one, zero});
      if (!xy.has_value() || (*xy)[0].is_zero()) continue;
      Scalar beta = expr[static_cast<std::size_t>(k)].first * (*xy)[0] +
                    expr[static_cast<std::size_t>(k)].second * (*xy)[1];
      add_candidate(beta);
    }
  std::sort(out.candidates.begin(), out.candidates.end(),
            [](const Scalar& a, const Scalar& b) { return a.less_than(b); });

  // always-equivalent pair, then candidates confirmed by an explicit
  // classification round trip
  auto add_verified = [&](const Scalar& beta) {
    for (const Scalar& c : out.verified)
      if (c == beta) return;
    out.verified.push_back(beta);
  };
  add_verified(alpha);
  add_verified(alpha.inverse());
  for (const Scalar& beta : out.candidates) {
    if (beta == alpha || beta == alpha.inverse()) continue;
    if (equivalent_m3(s_alpha(alpha), s_alpha(beta))) add_verified(beta);
  }
  std::sort(out.verified.begin(), out.verified.end(),
            [](const Scalar& a, const Scalar& b) { return a.less_than(b); });
  return out;
}

bool equivalent_m3(const std::vector<Matrix>& s, const std::vector<Matrix>& t) {
  if (eigen_multiset_invariant(s) != eigen_multiset_invariant(t)) return false;
  Classification3 cs = classify_m3_quintuple(s);
  Classification3 ct = classify_m3_quintuple(t);
  for (const Scalar& a : cs.reachable)
    for (const Scalar& b : ct.reachable)
      if (a == b) return true;
  return false;
}

std::vector<std::vector<int>> eigen_multiset_invariant(const std::vector<Matrix>& s) {
  std::vector<std::vector<int>> out;
  for (const Matrix& a : s) {
    std::vector<int> mults;
    for (const EigenPair& p : eigen_data(a).pairs) mults.push_back(p.alg_mult);
    std::sort(mults.begin(), mults.end(), std::greater<int>());
    out.push_back(std::move(mults));
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace matgen
