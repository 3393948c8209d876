#include "torkit/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace torkit {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = GaussianRational(1);
  }
  return m;
}

ExactMatrix ExactMatrix::from_rows(std::vector<Vector> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  ExactMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) {
      throw std::invalid_argument("ragged rows in matrix construction");
    }
    for (std::size_t j = 0; j < c; ++j) {
      m.at(i, j) = std::move(rows[i][j]);
    }
  }
  return m;
}

ExactMatrix ExactMatrix::from_columns(const std::vector<Vector>& cols) {
  std::size_t c = cols.size();
  std::size_t r = c == 0 ? 0 : cols.front().size();
  ExactMatrix m(r, c);
  for (std::size_t j = 0; j < c; ++j) {
    if (cols[j].size() != r) {
      throw std::invalid_argument("ragged columns in matrix construction");
    }
    for (std::size_t i = 0; i < r; ++i) {
      m.at(i, j) = cols[j][i];
    }
  }
  return m;
}

Vector ExactMatrix::row(std::size_t r) const {
  Vector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    v[j] = at(r, j);
  }
  return v;
}

Vector ExactMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    v[i] = at(i, c);
  }
  return v;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      m.at(j, i) = at(i, j);
    }
  }
  return m;
}

ExactMatrix ExactMatrix::conjugate() const {
  ExactMatrix m = *this;
  for (auto& e : m.entries_) {
    e = e.conj();
  }
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) {
      return false;
    }
  }
  return true;
}

bool ExactMatrix::is_integral() const {
  for (const auto& e : entries_) {
    if (!e.is_integer()) {
      return false;
    }
  }
  return true;
}

bool ExactMatrix::is_hermitian() const {
  if (rows_ != cols_) {
    return false;
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i; j < cols_; ++j) {
      if (at(i, j) != at(j, i).conj()) {
        return false;
      }
    }
  }
  return true;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("matrix shape mismatch in addition");
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k] += o.entries_[k];
  }
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("matrix shape mismatch in subtraction");
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k] -= o.entries_[k];
  }
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const GaussianRational& s) {
  for (auto& e : entries_) {
    e *= s;
  }
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("matrix shape mismatch in product");
  }
  ExactMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussianRational& aik = a.at(i, k);
      if (aik.is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols_; ++j) {
        m.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return m;
}

Vector operator*(const ExactMatrix& a, const Vector& v) {
  if (a.cols_ != v.size()) {
    throw std::invalid_argument("matrix/vector shape mismatch");
  }
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) {
      out[i] += a.at(i, j) * v[j];
    }
  }
  return out;
}

std::string ExactMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : "; [");
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j != 0) {
        os << ", ";
      }
      os << at(i, j).str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

ExactMatrix rref(ExactMatrix m, std::vector<std::size_t>* pivots) {
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && m.at(p, c).is_zero()) {
      ++p;
    }
    if (p == m.rows()) {
      continue;
    }
    if (p != lead) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        std::swap(m.at(p, j), m.at(lead, j));
      }
    }
    GaussianRational inv = m.at(lead, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) {
      m.at(lead, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead || m.at(i, c).is_zero()) {
        continue;
      }
      GaussianRational f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        m.at(i, j) -= f * m.at(lead, j);
      }
    }
    if (pivots != nullptr) {
      pivots->push_back(c);
    }
    ++lead;
  }
  return m;
}

std::size_t rank(const ExactMatrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

std::vector<Vector> kernel_basis(const ExactMatrix& m) {
  std::vector<std::size_t> pivots;
  ExactMatrix r = rref(m, &pivots);
  std::vector<Vector> basis;
  std::size_t next_pivot = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    Vector v(m.cols());
    v[c] = GaussianRational(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      v[pivots[k]] = -r.at(k, c);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

GaussianRational determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("determinant of non-square matrix");
  }
  ExactMatrix a = m;
  std::size_t n = a.rows();
  GaussianRational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a.at(p, c).is_zero()) {
      ++p;
    }
    if (p == n) {
      return GaussianRational(0);
    }
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(p, j), a.at(c, j));
      }
      det = -det;
    }
    det *= a.at(c, c);
    GaussianRational inv = a.at(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a.at(i, c).is_zero()) {
        continue;
      }
      GaussianRational f = a.at(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) {
        a.at(i, j) -= f * a.at(c, j);
      }
    }
  }
  return det;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::domain_error("inverse of non-square matrix");
  }
  std::size_t n = m.rows();
  ExactMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      aug.at(i, j) = m.at(i, j);
    }
    aug.at(i, n + i) = GaussianRational(1);
  }
  std::vector<std::size_t> pivots;
  ExactMatrix r = rref(std::move(aug), &pivots);
  if (pivots.size() != n || (n > 0 && pivots.back() >= n)) {
    throw std::domain_error("matrix is singular");
  }
  ExactMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.at(i, j) = r.at(i, n + j);
    }
  }
  return out;
}

std::optional<Vector> solve(const ExactMatrix& a, const Vector& b) {
  if (a.rows() != b.size()) {
    throw std::invalid_argument("matrix/vector shape mismatch in solve");
  }
  ExactMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      aug.at(i, j) = a.at(i, j);
    }
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> pivots;
  ExactMatrix r = rref(std::move(aug), &pivots);
  if (!pivots.empty() && pivots.back() == a.cols()) {
    return std::nullopt;  // pivot in the augmented column: inconsistent
  }
  Vector x(a.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    x[pivots[k]] = r.at(k, a.cols());
  }
  return x;
}

std::size_t span_rank(const std::vector<Vector>& vectors) {
  if (vectors.empty()) {
    return 0;
  }
  return rank(ExactMatrix::from_rows(vectors));
}

bool span_equal(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  std::size_t dim = 0;
  bool have_dim = false;
  for (const auto* set : {&a, &b}) {
    for (const Vector& v : *set) {
      if (!have_dim) {
        dim = v.size();
        have_dim = true;
      } else if (v.size() != dim) {
        throw std::invalid_argument("span_equal: vector dimension mismatch");
      }
    }
  }
  std::vector<Vector> stacked = a;
  stacked.insert(stacked.end(), b.begin(), b.end());
  std::size_t ra = span_rank(a);
  std::size_t rb = span_rank(b);
  std::size_t rs = span_rank(stacked);
  return ra == rb && rb == rs;
}

Vector vec_add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("vector dimension mismatch");
  }
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] + b[i];
  }
  return out;
}

Vector vec_sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("vector dimension mismatch");
  }
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] - b[i];
  }
  return out;
}

Vector vec_scale(const GaussianRational& s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = s * v[i];
  }
  return out;
}

bool vec_is_zero(const Vector& v) {
  for (const auto& e : v) {
    if (!e.is_zero()) {
      return false;
    }
  }
  return true;
}

}  // namespace torkit
