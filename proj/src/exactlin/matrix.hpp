#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "exactlin/field.hpp"

namespace gobelin {

using Vector = std::vector<Scalar>;

// Dense row-major matrix over a FieldSpec.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec field, std::size_t n);
  // Entries given row by row as integers, reduced into the field.
  static Matrix from_ints(FieldSpec field, std::size_t rows, std::size_t cols,
                          std::initializer_list<long> entries);
  static Matrix from_columns(FieldSpec field, std::size_t rows, std::span<const Vector> columns);
  static Matrix from_rows(FieldSpec field, std::size_t cols, std::span<const Vector> rows);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_block(std::size_t row0, std::size_t col0, const Matrix& block);

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Scalar& s) const;
  Vector apply(const Vector& v) const;

  // Stack vertically / horizontally.
  static Matrix vstack(const Matrix& top, const Matrix& bottom);
  static Matrix hstack(const Matrix& left, const Matrix& right);

  bool is_zero() const;
  // Throws InputError unless every entry is canonical for the field.
  void check_entries() const;

  std::string to_string() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

void require_same_field(const FieldSpec& a, const FieldSpec& b, const char* context);

Vector zero_vector(std::size_t n);
bool is_zero(const Vector& v);
Vector add(const FieldSpec& f, const Vector& a, const Vector& b);
Vector sub(const FieldSpec& f, const Vector& a, const Vector& b);
Vector scale(const FieldSpec& f, const Scalar& s, const Vector& v);
Scalar dot(const FieldSpec& f, const Vector& a, const Vector& b);

}  // namespace gobelin
