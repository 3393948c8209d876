#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "torkit/gaussian.hpp"

namespace torkit {

using Vector = std::vector<GaussianRational>;

// Dense matrix over the Gaussian rationals. Value semantics throughout;
// 0-row and 0-column shapes are legal and behave as the empty map.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(std::vector<Vector> rows);
  static ExactMatrix from_columns(const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussianRational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const GaussianRational& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  ExactMatrix transpose() const;
  ExactMatrix conjugate() const;
  ExactMatrix conjugate_transpose() const { return conjugate().transpose(); }

  bool is_zero() const;
  bool is_integral() const;  // every entry a (real) integer
  bool is_hermitian() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const GaussianRational& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const GaussianRational& s) { return a *= s; }
  friend ExactMatrix operator*(const GaussianRational& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator-(ExactMatrix a) { return a *= GaussianRational(-1); }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend Vector operator*(const ExactMatrix& a, const Vector& v);

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> entries_;
};

// Row-reduced echelon form; appends the pivot column indices to *pivots when given.
ExactMatrix rref(ExactMatrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const ExactMatrix& m);

// Basis of the right null space {v : m v = 0}; empty iff m has full column rank.
std::vector<Vector> kernel_basis(const ExactMatrix& m);

GaussianRational determinant(const ExactMatrix& m);

// Throws std::domain_error when m is not square invertible.
ExactMatrix inverse(const ExactMatrix& m);

// One solution of a x = b (free coordinates set to 0), or nullopt when inconsistent.
std::optional<Vector> solve(const ExactMatrix& a, const Vector& b);

std::size_t span_rank(const std::vector<Vector>& vectors);

// True iff the two generating sets span the same subspace of ℚ(i)^n.
// Throws std::invalid_argument when vector dimensions disagree.
bool span_equal(const std::vector<Vector>& a, const std::vector<Vector>& b);

Vector vec_add(const Vector& a, const Vector& b);
Vector vec_sub(const Vector& a, const Vector& b);
Vector vec_scale(const GaussianRational& s, const Vector& v);
bool vec_is_zero(const Vector& v);

}  // namespace torkit
