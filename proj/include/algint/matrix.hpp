#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "algint/rational.hpp"

namespace algint {

/// Raised when operand shapes do not fit an operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Vector = std::vector<GaussScalar>;

/// Dense matrix over Q(i). Row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::initializer_list<std::initializer_list<GaussScalar>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(std::span<const GaussScalar> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  GaussScalar& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const GaussScalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  ExactMatrix transpose() const;
  /// Entrywise complex conjugate.
  ExactMatrix conjugate() const;

  bool is_zero() const;
  bool is_identity() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const GaussScalar& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) {
    return a += b;
  }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) {
    return a -= b;
  }
  friend ExactMatrix operator*(ExactMatrix a, const GaussScalar& s) {
    return a *= s;
  }
  friend ExactMatrix operator*(const GaussScalar& s, ExactMatrix a) {
    return a *= s;
  }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend Vector operator*(const ExactMatrix& a, std::span<const GaussScalar> v);

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussScalar> data_;
};

/// Row vector times matrix: (vᵀA)_c = Σ_r v_r A_rc.
Vector left_multiply(std::span<const GaussScalar> v, const ExactMatrix& a);

struct UniqueSolution {
  Vector value;
};
struct NoSolution {};
struct AffineSolution {
  Vector particular;
  std::vector<Vector> nullspace_basis;
};
using SolveResult = std::variant<UniqueSolution, NoSolution, AffineSolution>;

/// Exact solve of A·v = b. Free variables of the particular solution are zero.
SolveResult solve_linear(const ExactMatrix& a, std::span<const GaussScalar> b);

/// nullopt when A is singular.
std::optional<ExactMatrix> invert(const ExactMatrix& a);

/// Basis of {v : A·v = 0}, one vector per non-pivot column, that column set
/// to 1 and the other free columns set to 0.
std::vector<Vector> nullspace(const ExactMatrix& a);

std::size_t rank(const ExactMatrix& a);

/// Reduced row echelon form computed in place. Pivots are chosen as the first
/// nonzero entry scanning down each column, so the result is deterministic.
/// Returns the pivot column of each nonzero row.
std::vector<std::size_t> row_reduce(ExactMatrix& a);

}  // namespace algint
