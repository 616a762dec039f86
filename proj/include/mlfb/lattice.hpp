#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "mlfb/errors.hpp"

namespace mlfb {

using Integer = mpz_class;

/// Dense vector of arbitrary-precision integers.
class IntVec {
 public:
  IntVec() = default;
  explicit IntVec(std::size_t n) : coords_(n) {}
  IntVec(std::initializer_list<long> values);
  explicit IntVec(std::vector<Integer> values) : coords_(std::move(values)) {}

  static IntVec zero(std::size_t n) { return IntVec(n); }
  static IntVec unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return coords_.size(); }
  bool empty() const noexcept { return coords_.empty(); }

  Integer& operator[](std::size_t i) { return coords_[i]; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }

  auto begin() noexcept { return coords_.begin(); }
  auto end() noexcept { return coords_.end(); }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  const std::vector<Integer>& coords() const noexcept { return coords_; }

  bool is_zero() const;

  IntVec& operator+=(const IntVec& other);
  IntVec& operator-=(const IntVec& other);
  IntVec& operator*=(const Integer& k);

  friend IntVec operator+(IntVec lhs, const IntVec& rhs) { return lhs += rhs; }
  friend IntVec operator-(IntVec lhs, const IntVec& rhs) { return lhs -= rhs; }
  friend IntVec operator*(IntVec v, const Integer& k) { return v *= k; }
  friend IntVec operator*(const Integer& k, IntVec v) { return v *= k; }
  IntVec operator-() const;

  friend bool operator==(const IntVec& a, const IntVec& b);
  friend bool operator!=(const IntVec& a, const IntVec& b) { return !(a == b); }
  /// Lexicographic order, shorter vectors first.
  friend bool operator<(const IntVec& a, const IntVec& b);

 private:
  std::vector<Integer> coords_;
};

std::ostream& operator<<(std::ostream& os, const IntVec& v);

Integer dot(const IntVec& a, const IntVec& b);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMat(std::initializer_list<std::initializer_list<long>> rows);

  static IntMat identity(std::size_t n);
  static IntMat from_rows(std::span<const IntVec> rows);
  static IntMat from_columns(std::span<const IntVec> cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;
  void set_col(std::size_t j, const IntVec& v);

  IntMat transpose() const;
  IntMat operator*(const IntMat& rhs) const;
  IntVec operator*(const IntVec& v) const;

  /// Row i of this matrix dotted with v, without materializing the row.
  Integer row_dot(std::size_t i, const IntVec& v) const;

  friend bool operator==(const IntMat& a, const IntMat& b);
  friend bool operator!=(const IntMat& a, const IntMat& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMat& m);

/// Determinant of a square matrix (fraction-free Bareiss elimination).
Integer determinant(const IntMat& m);

/// Exact inverse of a unimodular matrix; throws NotUnimodular otherwise.
IntMat unimodular_inverse(const IntMat& u);

/// Largest absolute value of any square subdeterminant.
Integer max_subdeterminant(const IntMat& m);

struct Bezout {
  Integer g;
  Integer s;
  Integer t;
};

/// g = s*x + t*y with g = gcd(x, y) >= 0.
Bezout extended_gcd(const Integer& x, const Integer& y);

struct HermiteForm {
  IntMat h;
  IntMat u;
};

/// Column Hermite normal form H = M * U with U unimodular.
///
/// H is in column echelon form: the pivot of column j sits strictly below the
/// pivot of column j-1, pivots are positive, entries left of a pivot are
/// reduced into [0, pivot) and entries right of a pivot are zero.
HermiteForm hnf(const IntMat& m);

/// Basis of {v in Z^n : a.v = 0} as the columns of an n x (n-1) matrix, in
/// column Hermite normal form. Requires a positive and coprime.
IntMat kernel_lattice_basis(const IntVec& a);

/// Signed maximal minors of an n x (n-1) matrix: entry i is (-1)^i times the
/// minor with row i deleted.
IntVec signed_maximal_minors(const IntMat& m);

/// Coordinatewise maximum.
IntVec max_vectors(std::span<const IntVec> vectors);

/// max(A v_1, ..., A v_r): right-hand side of the smallest P_A(b) containing
/// every point.
IntVec body_rhs(const IntMat& a, std::span<const IntVec> points);

/// Sign of the first nonzero coordinate; 0 for the zero vector.
int lex_sign(const IntVec& w);

/// A (d+1) x d integral matrix with a strictly positive left annihilator.
class SimplicialData {
 public:
  /// Derives the primitive annihilator y from A.
  explicit SimplicialData(IntMat a);
  /// Checks the supplied annihilator.
  SimplicialData(IntMat a, IntVec y);

  /// Frobenius setting: A = kernel_lattice_basis(a), y = a.
  static SimplicialData from_weights(const IntVec& a);

  std::size_t dim() const noexcept { return a_.cols(); }
  const IntMat& matrix() const noexcept { return a_; }
  const IntVec& annihilator() const noexcept { return y_; }
  IntVec row(std::size_t i) const { return a_.row(i); }

  IntVec image(const IntVec& z) const { return a_ * z; }

 private:
  void validate();

  IntMat a_;
  IntVec y_;
};

}  // namespace mlfb
