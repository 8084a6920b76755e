#ifndef MATGEN_INDEPENDENCE_HPP
#define MATGEN_INDEPENDENCE_HPP

#include <array>

#include "matgen/matalg.hpp"
#include "matgen/subspace.hpp"

namespace matgen {

/// Matrices mapping each member of the family into itself; always a unital
/// subalgebra of M_n.
SpanBasis stabilizer_algebra(Field f, int n, const std::vector<Subspace>& family);
SpanBasis stabilizer_algebra(const std::vector<Subspace>& family);

/// Per-member independence witnesses, parallel to the family.
struct IndepWitness {
  std::vector<Matrix> movers;   // stabilizes family - {V}, moves V
  std::vector<bool> invertible;
};

struct IndepResult {
  bool independent = false;
  IndepWitness witness; // populated when independent
};

/// GL-independence: every member admits an invertible witness. Witness repair
/// uses w + alpha*I when |F| > n; otherwise the stabilizer algebra is searched
/// exhaustively for an invertible mover.
IndepResult gl_independent(const std::vector<Subspace>& family);

/// Monoid variant: witnesses need not be invertible.
IndepResult m_independent(const std::vector<Subspace>& family);

/// The two shapes of maximal independent 5-families in Sub(F^3).
struct PatternResult {
  enum class Kind { None, Pattern1, Pattern2 };
  Kind kind = Kind::None;
  // Pattern1: indices of (L1, L2, L3, P1, P2) with L1 in P1, L2 in P2,
  //           L1+L2+L3 = F^3 and no other line inside either plane.
  // Pattern2: indices of (L1, L2, P1, P2, P3) with L1 in P1, L2 in P2,
  //           P1 cap P2 cap P3 = 0 and no other containments.
  std::array<int, 5> roles{-1, -1, -1, -1, -1};

  bool matched() const { return kind != Kind::None; }
};

PatternResult pattern_classify(const std::vector<Subspace>& family);

} // namespace matgen

#endif
