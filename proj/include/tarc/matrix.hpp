#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tarc/bigint.hpp"
#include "tarc/gf.hpp"
#include "tarc/poly.hpp"

namespace tarc::linalg {

using gf::Elem;
using gf::FieldPtr;

/// Row vector over a finite field.
using Vec = std::vector<Elem>;

/// Dense matrix over a finite field. Acts on row vectors from the right.
class Matrix
{
public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::vector<Vec> rows);

  static Matrix identity(FieldPtr field, std::size_t n);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Elem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Elem v) { data_[i * cols_ + j] = v; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<Vec> row_vectors() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix scaled(Elem c) const;
  Matrix pow(const BigInt& e) const;
  Matrix transpose() const;
  /// Throws std::domain_error if singular.
  Matrix inverse() const;
  bool operator==(const Matrix& o) const
  {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool is_identity() const;

  /// v * M for a row vector v.
  Vec apply(std::span<const Elem> v) const;

  std::size_t rank() const;

  /// Basis (as rows, in reduced row-echelon form) of {v : v M = 0}.
  Matrix left_kernel() const;

  /// Space-separated integer codes, one row per line.
  std::string to_text() const;
  static Matrix from_text(FieldPtr field, const std::string& text);

private:
  FieldPtr field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

/// Reduced row-echelon form of a list of vectors; zero rows dropped.
std::vector<Vec> rref(FieldPtr field, std::vector<Vec> rows);

/// Incrementally maintained row space in reduced echelon form.
class RowSpace
{
public:
  RowSpace(FieldPtr field, std::size_t dim);

  std::size_t dim() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduces v against the basis; returns the residue.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  /// Adds v if independent; returns whether the rank grew.
  bool insert(const Vec& v);

  /// Canonical RREF basis.
  std::vector<Vec> basis() const;

private:
  FieldPtr field_;
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

gf::Poly minimal_polynomial(const Matrix& m);

/// g(M) by Horner's rule.
Matrix evaluate(const gf::Poly& g, const Matrix& m);

bool is_zero_vector(std::span<const Elem> v);

} // namespace tarc::linalg
