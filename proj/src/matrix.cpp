#include "algint/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace algint {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix::ExactMatrix(
    std::initializer_list<std::initializer_list<GaussScalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(std::span<const GaussScalar> entries) {
  ExactMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Vector ExactMatrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector ExactMatrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ExactMatrix ExactMatrix::conjugate() const {
  ExactMatrix t = *this;
  for (auto& x : t.data_) x = x.conj();
  return t;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const GaussScalar& x) { return x.is_zero(); });
}

bool ExactMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != GaussScalar(r == c ? 1 : 0)) return false;
  return true;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionError("matrix addition shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionError("matrix subtraction shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const GaussScalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  ExactMatrix p(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussScalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const GaussScalar& y = b(k, c);
        if (!y.is_zero()) p(r, c) += x * y;
      }
    }
  }
  return p;
}

Vector operator*(const ExactMatrix& a, std::span<const GaussScalar> v) {
  if (a.cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c)
      if (!a(r, c).is_zero() && !v[c].is_zero()) out[r] += a(r, c) * v[c];
  return out;
}

Vector left_multiply(std::span<const GaussScalar> v, const ExactMatrix& a) {
  if (a.rows() != v.size()) throw DimensionError("vector-matrix shape mismatch");
  Vector out(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (v[r].is_zero()) continue;
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!a(r, c).is_zero()) out[c] += v[r] * a(r, c);
  }
  return out;
}

std::string ExactMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<std::size_t> row_reduce(ExactMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < a.rows() && a(r, c).is_zero()) ++r;
    if (r == a.rows()) continue;
    if (r != pivot_row)
      for (std::size_t k = c; k < a.cols(); ++k) std::swap(a(r, k), a(pivot_row, k));

    GaussScalar inv = GaussScalar(1) / a(pivot_row, c);
    support.clear();
    for (std::size_t k = c; k < a.cols(); ++k) {
      if (a(pivot_row, k).is_zero()) continue;
      a(pivot_row, k) *= inv;
      support.push_back(k);
    }
    for (std::size_t other = 0; other < a.rows(); ++other) {
      if (other == pivot_row || a(other, c).is_zero()) continue;
      GaussScalar factor = a(other, c);
      for (std::size_t k : support) a(other, k) -= factor * a(pivot_row, k);
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return pivots;
}

namespace {

std::vector<Vector> nullspace_from_rref(const ExactMatrix& rref,
                                        const std::vector<std::size_t>& pivots,
                                        std::size_t unknowns) {
  std::vector<bool> is_pivot(unknowns, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < unknowns; ++free) {
    if (is_pivot[free]) continue;
    Vector v(unknowns);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rref(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

SolveResult solve_linear(const ExactMatrix& a, std::span<const GaussScalar> b) {
  if (a.rows() != b.size())
    throw DimensionError("solve_linear: right-hand side length " +
                         std::to_string(b.size()) + " does not match " +
                         std::to_string(a.rows()) + " rows");
  const std::size_t n = a.cols();
  ExactMatrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == n) return NoSolution{};

  Vector particular(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) particular[pivots[r]] = aug(r, n);
  if (pivots.size() == n) return UniqueSolution{std::move(particular)};
  return AffineSolution{std::move(particular), nullspace_from_rref(aug, pivots, n)};
}

std::optional<ExactMatrix> invert(const ExactMatrix& a) {
  if (!a.is_square()) throw DimensionError("invert: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return ExactMatrix(0, 0);
  ExactMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  ExactMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

std::vector<Vector> nullspace(const ExactMatrix& a) {
  ExactMatrix rref = a;
  auto pivots = row_reduce(rref);
  return nullspace_from_rref(rref, pivots, a.cols());
}

std::size_t rank(const ExactMatrix& a) {
  ExactMatrix rref = a;
  return row_reduce(rref).size();
}

}  // namespace algint
