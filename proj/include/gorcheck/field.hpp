// Dense matrices over a prime field Z/p with row reduction, kernels and
// quotient coordinates. Vectors are rows; matrices act on the right.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gorcheck::gf {

class Field {
 public:
  explicit Field(std::uint32_t p = 2) : p_(p) {
    if (p < 2) throw std::invalid_argument("prime must be at least 2");
    for (std::uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("modulus is not prime");
  }
  std::uint32_t prime() const { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero");
    std::uint32_t r = 1, b = a % p_, e = p_ - 2;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

 private:
  std::uint32_t p_;
};

using Vec = std::vector<std::uint32_t>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const { return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_), data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)); }

  bool is_zero() const {
    for (auto x : data_)
      if (x) return false;
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> data_;
};

inline Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in multiply");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto x = a(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
    }
  return c;
}

inline Vec apply(const Field& f, const Vec& v, const Matrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("dimension mismatch in apply");
  Vec out(m.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k]) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(v[k], m(k, j)));
  }
  return out;
}

/// Reduced row echelon form of a set of row vectors spanning a subspace.
struct Echelon {
  std::vector<Vec> rows;             // reduced, one per pivot
  std::vector<std::size_t> pivots;   // pivot column of each row
  std::size_t dim = 0;               // ambient dimension

  std::size_t rank() const { return rows.size(); }

  /// Reduces v modulo the span; the result vanishes on pivot columns.
  Vec reduce(const Field& f, Vec v) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto c = v[pivots[i]];
      if (!c) continue;
      for (std::size_t j = 0; j < dim; ++j) v[j] = f.sub(v[j], f.mul(c, rows[i][j]));
    }
    return v;
  }

  bool contains(const Field& f, const Vec& v) const {
    for (auto x : reduce(f, v))
      if (x) return false;
    return true;
  }

  /// Columns that are not pivots: coordinates of the quotient space.
  std::vector<std::size_t> free_columns() const {
    std::vector<bool> piv(dim, false);
    for (auto p : pivots) piv[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < dim; ++j)
      if (!piv[j]) out.push_back(j);
    return out;
  }
};

inline Echelon echelon(const Field& f, const std::vector<Vec>& vectors, std::size_t dim) {
  Echelon e;
  e.dim = dim;
  for (Vec v : vectors) {
    v = e.reduce(f, std::move(v));
    std::size_t p = 0;
    while (p < dim && !v[p]) ++p;
    if (p == dim) continue;
    const auto s = f.inv(v[p]);
    for (auto& x : v) x = f.mul(x, s);
    for (auto& r : e.rows) {
      const auto c = r[p];
      if (!c) continue;
      for (std::size_t j = 0; j < dim; ++j) r[j] = f.sub(r[j], f.mul(c, v[j]));
    }
    e.rows.push_back(std::move(v));
    e.pivots.push_back(p);
  }
  return e;
}

/// Basis of {x : x M = 0} (left kernel).
inline std::vector<Vec> left_kernel(const Field& f, const Matrix& m) {
  // Row reduce [M | I]; rows whose M-part vanishes give kernel vectors.
  const std::size_t n = m.rows(), c = m.cols();
  std::vector<Vec> aug;
  for (std::size_t i = 0; i < n; ++i) {
    Vec v(c + n, 0);
    for (std::size_t j = 0; j < c; ++j) v[j] = m(i, j);
    v[c + i] = 1;
    aug.push_back(std::move(v));
  }
  auto e = echelon(f, aug, c + n);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] < c) continue;
    out.emplace_back(e.rows[i].begin() + static_cast<std::ptrdiff_t>(c), e.rows[i].end());
  }
  return out;
}

/// Intersection of left kernels of several matrices with the same row count.
inline std::vector<Vec> common_left_kernel(const Field& f, std::size_t n, const std::vector<const Matrix*>& ms) {
  std::size_t total = 0;
  for (auto* m : ms) total += m->cols();
  Matrix big(n, total);
  std::size_t off = 0;
  for (auto* m : ms) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m->cols(); ++j) big(i, off + j) = (*m)(i, j);
    off += m->cols();
  }
  return left_kernel(f, big);
}

}  // namespace gorcheck::gf
