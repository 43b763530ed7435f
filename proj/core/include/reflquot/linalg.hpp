#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "reflquot/rational.hpp"

namespace reflquot {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point of the ambient space V in exact coordinates.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t dim) : coords_(dim) {}
  explicit RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  RationalVector(std::initializer_list<Rational> coords) : coords_(coords) {}

  static RationalVector from_ints(std::span<const long> values);
  static RationalVector from_ints(std::initializer_list<long> values) {
    return from_ints(std::span<const long>(values.begin(), values.size()));
  }
  static RationalVector unit(std::size_t dim, std::size_t i);

  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;
  bool is_integral() const;

  RationalVector& operator+=(const RationalVector& o);
  RationalVector& operator-=(const RationalVector& o);
  RationalVector& operator*=(const Rational& s);
  RationalVector operator-() const;

  friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
  friend RationalVector operator*(const Rational& s, RationalVector v) { return v *= s; }

  friend bool operator==(const RationalVector&, const RationalVector&) = default;
  friend auto operator<=>(const RationalVector& a, const RationalVector& b) {
    return a.coords_ <=> b.coords_;
  }

  /// "(a,b,c)" with rationals as p/q.
  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

/// Standard dot product of coordinate vectors.
Rational dot(const RationalVector& u, const RationalVector& v);

struct RationalVectorHash {
  std::size_t operator()(const RationalVector& v) const noexcept;
};

/// Row-major dense matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors.
  static RationalMatrix from_columns(std::span<const RationalVector> columns, std::size_t dim);
  static RationalMatrix from_rows(std::span<const RationalVector> rows, std::size_t dim);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector column(std::size_t c) const;
  RationalMatrix transpose() const;
  bool is_integral() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalVector operator*(const RationalMatrix& a, const RationalVector& v);

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;
  friend auto operator<=>(const RationalMatrix& a, const RationalMatrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

  std::size_t hash() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RationalMatrixHash {
  std::size_t operator()(const RationalMatrix& m) const noexcept { return m.hash(); }
};

Rational determinant(RationalMatrix m);
std::size_t rank(RationalMatrix m);

/// Symmetric positive definite form on V given by its Gram matrix in ambient coordinates.
class BilinearForm {
 public:
  /// Throws std::invalid_argument unless gram is square, symmetric and positive definite.
  explicit BilinearForm(RationalMatrix gram);
  static BilinearForm standard(std::size_t dim);

  /// Leading-principal-minor test; does not require symmetry.
  static bool is_positive_definite(const RationalMatrix& gram);

  std::size_t dim() const { return gram_.rows(); }
  const RationalMatrix& gram() const { return gram_; }

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

 private:
  RationalMatrix gram_;
};

/// u^T * gram * v. Throws DimensionError on mismatch.
Rational inner(const BilinearForm& form, const RationalVector& u, const RationalVector& v);

struct UniqueSolution {
  RationalVector x;
};
struct NoSolution {};
struct NonUniqueSolution {
  RationalVector particular;
  std::vector<RationalVector> kernel;
};
using LinearSolveResult = std::variant<UniqueSolution, NoSolution, NonUniqueSolution>;

/// Exact Gaussian elimination for A x = b.
LinearSolveResult solve_linear(const RationalMatrix& a, const RationalVector& b);

/// Basis of {x : A x = 0} over Q.
std::vector<RationalVector> kernel_basis(const RationalMatrix& a);

/// Z-basis of the integer kernel {x in Z^n : A x = 0} for an integral matrix A.
std::vector<RationalVector> integer_kernel_basis(const RationalMatrix& a);

}  // namespace reflquot
