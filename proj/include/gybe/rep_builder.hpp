#pragma once

#include "gybe/finder.hpp"

namespace gybe {

/// Basis of the braid representation space: all (n+1)-tuples over the S
/// alphabet in lexicographic order. Slot 0 is the leftmost tree label,
/// slots 1..n−1 the internal labels, slot n the boundary. For a certified
/// gYBE object every tuple is admissible, so the space is the full tensor
/// power d^(n+1).
struct TreeBasis {
  int d = 0;
  int n = 0;
  std::vector<std::string> alphabet;       // the certificate's S, in order
  std::vector<std::vector<int>> sequences; // digits into alphabet
};

TreeBasis tree_basis(const GybeCertificate& cert, int n);

/// The braid action on the internal label of the three-leaf tree with left
/// label i and boundary j: F⁻¹·D·F with D diagonal in the stored F row
/// channel order (simple X), or the monomial matrix built from braiding
/// scalars when X is a sum of invertible simples. Rows/columns are indexed
/// by internal labels in the stored F column order (simple X) or in S order
/// (monomial path).
ExactMatrix sector_matrix(const CategoryData& cat, const GybeCertificate& cert,
                          const std::string& i, const std::string& j);

/// R = P⁻¹·B·P with B the direct sum of sector blocks in lexicographic
/// (i, j) sector order (each block reindexed to S order) and P the
/// permutation from sector order to lexicographic tuple order.
struct AssembledR {
  int d = 0;
  std::vector<std::pair<std::string, std::string>> sector_order;
  std::vector<ExactMatrix> sector_blocks;  // indexed like sector_order
  ExactMatrix b;  // direct sum of the blocks
  ExactMatrix p;  // sector order → lexicographic order
  ExactMatrix r;  // the (d,3,1)-R-matrix in the lexicographic basis
};

AssembledR assemble_R(const CategoryData& cat, const GybeCertificate& cert);

/// Matrices for σ_1..σ_{n−1} on V^{⊗(n+1)}, V = C^d:
/// generator k = I^{⊗(k−1)} ⊗ R ⊗ I^{⊗(n−k−1)}.
struct BraidRep {
  int n = 0;
  int d = 0;
  std::vector<ExactMatrix> generators;
};

BraidRep braid_rep(const ExactMatrix& r, int d, int n);

Json braid_rep_to_json(const BraidRep& rep);

}  // namespace gybe
