#include "gybe/matrix.hpp"

#include <numeric>
#include <utility>

#include "gybe/error.hpp"
#include "gybe/limits.hpp"

namespace gybe {

namespace {

void check_entry_cap(std::size_t rows, std::size_t cols) {
  if (rows * cols > limits::matrix_entry_cap())
    fail("matrix with " + std::to_string(rows * cols) +
         " entries exceeds the configured cap " +
         std::to_string(limits::matrix_entry_cap()));
}

}  // namespace

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) fail("matrix dimensions must be positive");
  check_entry_cap(std::size_t(rows), std::size_t(cols));
  e_.assign(std::size_t(rows) * cols, CycloScalar());
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, CycloScalar(Rational(1)));
  return m;
}

ExactMatrix ExactMatrix::permutation(const std::vector<int>& image) {
  const int n = int(image.size());
  std::vector<bool> seen(n, false);
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (image[i] < 0 || image[i] >= n || seen[image[i]])
      fail("invalid permutation image");
    seen[image[i]] = true;
    m.set(i, image[i], CycloScalar(Rational(1)));
  }
  return m;
}

int ExactMatrix::field_order() const {
  long order = 1;
  for (const auto& s : e_) order = std::lcm(order, long(s.order()));
  if (order > limits::field_order_cap())
    fail("matrix entry orders exceed the configured cap");
  return int(order);
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.set(j, i, at(i, j));
  return m;
}

ExactMatrix ExactMatrix::conjugate_transpose() const {
  ExactMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.set(j, i, at(i, j).conjugate());
  return m;
}

ExactMatrix ExactMatrix::scaled(const CycloScalar& s) const {
  ExactMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) m.set(i, j, s * at(i, j));
  return m;
}

ExactMatrix ExactMatrix::pow(long e) const {
  if (!is_square()) fail("matrix power requires a square matrix");
  if (e < 0) return inverse().pow(-e);
  ExactMatrix acc = identity(rows_);
  ExactMatrix base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

ExactMatrix ExactMatrix::inverse() const {
  if (!is_square()) fail("inverse requires a square matrix");
  const int n = rows_;
  ExactMatrix a = *this;
  ExactMatrix inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0)
      fail("singular matrix: zero pivot at elimination stage " +
           std::to_string(col));
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a.e_[std::size_t(pivot) * n + j], a.e_[std::size_t(col) * n + j]);
        std::swap(inv.e_[std::size_t(pivot) * n + j],
                  inv.e_[std::size_t(col) * n + j]);
      }
    }
    const CycloScalar piv_inv = a.at(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      if (!a.at(col, j).is_zero()) a.set(col, j, piv_inv * a.at(col, j));
      if (!inv.at(col, j).is_zero()) inv.set(col, j, piv_inv * inv.at(col, j));
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      const CycloScalar f = a.at(r, col);
      for (int j = 0; j < n; ++j) {
        if (!a.at(col, j).is_zero())
          a.set(r, j, a.at(r, j) - f * a.at(col, j));
        if (!inv.at(col, j).is_zero())
          inv.set(r, j, inv.at(r, j) - f * inv.at(col, j));
      }
    }
  }
  if (!(*this * inv).is_identity())
    fail("internal error: inverse verification A*A^-1 = I failed");
  return inv;
}

bool ExactMatrix::is_singular() const {
  if (!is_square()) fail("singularity test requires a square matrix");
  const int n = rows_;
  ExactMatrix a = *this;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return true;
    if (pivot != col)
      for (int j = 0; j < n; ++j)
        std::swap(a.e_[std::size_t(pivot) * n + j], a.e_[std::size_t(col) * n + j]);
    const CycloScalar piv_inv = a.at(col, col).inverse();
    for (int r = col + 1; r < n; ++r) {
      if (a.at(r, col).is_zero()) continue;
      const CycloScalar f = a.at(r, col) * piv_inv;
      for (int j = col; j < n; ++j)
        if (!a.at(col, j).is_zero())
          a.set(r, j, a.at(r, j) - f * a.at(col, j));
    }
  }
  return false;
}

bool ExactMatrix::is_zero() const {
  for (const auto& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_identity() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

bool ExactMatrix::is_unitary() const {
  if (!is_square()) return false;
  return (*this * conjugate_transpose()).is_identity();
}

CycloScalar ExactMatrix::trace() const {
  if (!is_square()) fail("trace requires a square matrix");
  CycloScalar t;
  for (int i = 0; i < rows_; ++i) t = t + at(i, i);
  return t;
}

std::string ExactMatrix::key() const {
  const int order = field_order();
  std::string out = "m" + std::to_string(rows_) + "x" + std::to_string(cols_) + ":";
  for (const auto& s : e_) {
    if (s.is_zero()) {
      out += 'z';
      continue;
    }
    s.promoted(order).append_key(out);
  }
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_)
    fail("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
         std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
         std::to_string(b.cols_));
  check_entry_cap(std::size_t(a.rows_), std::size_t(b.cols_));
  ExactMatrix m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const CycloScalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const CycloScalar& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        m.set(i, j, m.at(i, j) + aik * bkj);
      }
    }
  }
  return m;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    fail("matrix sum shape mismatch");
  ExactMatrix m(a.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) m.set(i, j, a.at(i, j) + b.at(i, j));
  return m;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    fail("matrix difference shape mismatch");
  ExactMatrix m(a.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) m.set(i, j, a.at(i, j) - b.at(i, j));
  return m;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.e_.size(); ++i)
    if (a.e_[i] != b.e_[i]) return false;
  return true;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  check_entry_cap(std::size_t(a.rows()) * b.rows(),
                  std::size_t(a.cols()) * b.cols());
  ExactMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const CycloScalar& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) {
          const CycloScalar& bkl = b.at(k, l);
          if (bkl.is_zero()) continue;
          m.set(i * b.rows() + k, j * b.cols() + l, aij * bkl);
        }
    }
  return m;
}

ExactMatrix direct_sum(const std::vector<ExactMatrix>& blocks) {
  if (blocks.empty()) fail("direct_sum of an empty block list");
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.is_square()) fail("direct_sum blocks must be square");
    n += std::size_t(b.rows());
  }
  check_entry_cap(n, n);
  ExactMatrix m(int(n), int(n));
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j)
        if (!b.at(i, j).is_zero()) m.set(off + i, off + j, b.at(i, j));
    off += b.rows();
  }
  return m;
}

bool annihilation_check(const ExactMatrix& m,
                        const std::vector<CycloScalar>& roots) {
  if (!m.is_square()) fail("annihilation_check requires a square matrix");
  if (roots.empty()) fail("annihilation_check requires at least one root");
  const ExactMatrix id = ExactMatrix::identity(m.rows());
  ExactMatrix prod = id;
  for (const auto& r : roots) {
    const ExactMatrix shifted = m - id.scaled(r);
    if (!shifted.is_singular()) return false;
    prod = prod * shifted;
  }
  return prod.is_zero();
}

}  // namespace gybe
