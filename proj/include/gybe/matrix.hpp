#pragma once

#include <string>
#include <vector>

#include "gybe/cyclotomic.hpp"

namespace gybe {

/// Dense matrix over CycloScalar, row-major. Tensor factors are always
/// composed with the Kronecker product, so composite bases are ordered
/// lexicographically; any other ordering enters through explicit permutation
/// matrices. Instances are immutable in all library code paths after
/// construction and safe to share between threads.
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(int rows, int cols);

  static ExactMatrix identity(int n);
  /// Permutation matrix with P[i, image[i]] = 1.
  static ExactMatrix permutation(const std::vector<int>& image);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const CycloScalar& at(int i, int j) const { return e_[std::size_t(i) * cols_ + j]; }
  void set(int i, int j, CycloScalar v) { e_[std::size_t(i) * cols_ + j] = std::move(v); }

  /// lcm of the entry orders (1 for a rational matrix).
  int field_order() const;

  ExactMatrix transpose() const;
  ExactMatrix conjugate_transpose() const;
  /// Exact Gauss-Jordan inverse; throws naming the failing pivot stage, and
  /// verifies A·A⁻¹ = I before returning.
  ExactMatrix inverse() const;
  ExactMatrix scaled(const CycloScalar& s) const;
  ExactMatrix pow(long e) const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_unitary() const;
  /// Exact rank-deficiency test via elimination (no inverse built).
  bool is_singular() const;

  CycloScalar trace() const;

  /// Canonical byte key (entries promoted to the common order) for hashing.
  std::string key() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) {
    return !(a == b);
  }

 private:
  int rows_, cols_;
  std::vector<CycloScalar> e_;
};

/// Kronecker product; (A⊗B)[i·rB+k, j·cB+l] = A[i,j]·B[k,l].
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

/// Block-diagonal sum of square blocks; throws on an empty list.
ExactMatrix direct_sum(const std::vector<ExactMatrix>& blocks);

/// True iff Π(M − λI) over the given roots is exactly zero AND each
/// individual M − λI is singular, i.e. every listed root is genuinely an
/// eigenvalue and together they annihilate M.
bool annihilation_check(const ExactMatrix& m,
                        const std::vector<CycloScalar>& roots);

}  // namespace gybe
