#ifndef MATGEN_GENSET_HPP
#define MATGEN_GENSET_HPP

#include "matgen/matalg.hpp"
#include "matgen/subspace.hpp"

namespace matgen {

/// The canonical irredundant generating set of size 2n-1:
/// a_i = e_{i,i} + e_{i,i+1}, a'_i = e_{i+1,i} + e_{i+1,i+1} (i = 1..n-1),
/// then b = e_{1,1}.
std::vector<Matrix> canonical_irredundant(int n, Field f);

/// Generates and no proper subset generates. Input treated as a set.
bool is_irredundant_generating(const std::vector<Matrix>& s);

struct SubsetSelection {
  std::vector<int> indices; // positions in the input, ascending
  std::vector<Matrix> subset;
};

/// Greedy pass in input order dropping every element whose removal keeps the
/// set generating. The result is an irredundant generating subset of size at
/// most 2n-1.
SubsetSelection extract_irredundant(const std::vector<Matrix>& s);

struct CornerShape {
  int p = 1, q = 1, n = 1;
};

/// Basis of the corner copy of M_{p x q} inside M_n.
std::vector<Matrix> corner_basis(const CornerShape& shape, Field f);

/// Given that M_{p x q} together with s generates M_n (non-unitally), selects
/// T inside s with |T| <= 2n-p-q such that M_{p x q} with T still generates.
SubsetSelection complete_from_corner(const CornerShape& shape, const std::vector<Matrix>& s);

/// Per-member invariant subspaces: V_i is invariant under every other member
/// and moved by member i; the family is independence-checked.
struct WitnessFamily {
  std::vector<Subspace> subspaces; // parallel to the input set
};

WitnessFamily witness_invariant_subspaces(const std::vector<Matrix>& s);

/// Block structure (M_{r_1})_{k_1} + ... + (M_{r_t})_{k_t} inside M_n.
struct BlockShape {
  std::vector<std::pair<int, int>> blocks; // (r_i, k_i)

  int t() const { return static_cast<int>(blocks.size()); }
  int n() const;
  int g() const; // sum of the k_i
  void validate() const;
};

/// Basis of the block-scalar subalgebra A inside M_n.
std::vector<Matrix> block_algebra_basis(const BlockShape& shape, Field f);

/// The transcription of x relative to the block subalgebra: all g x g
/// assemblies whose (i,j) block is one of the coordinate matrices of the
/// (i,j) block of x. Deterministic cell-basis choice (greedy echelon scan in
/// row-major cell order).
std::vector<Matrix> hat_matrix(const BlockShape& shape, const Matrix& x, std::size_t cap = 4096);

/// The transcription of the subalgebra itself: block-diagonal 0/I matrices.
std::vector<Matrix> hat_algebra(const BlockShape& shape, Field f);

/// lhs: S with A generates M_n; rhs: hat S with hat A generates M_g.
/// The two agree (Laffey); both are returned so callers can assert it.
std::pair<bool, bool> laffey_equiv_check(const BlockShape& shape, const std::vector<Matrix>& s,
                                         std::size_t cap = 4096);

} // namespace matgen

#endif
