#include "exactlin/matrix.hpp"

#include <sstream>

namespace gobelin {

void require_same_field(const FieldSpec& a, const FieldSpec& b, const char* context) {
  if (a != b) {
    throw Error(ErrorKind::Input,
                std::string(context) + ": field mismatch (" + a.name() + " vs " + b.name() + ")");
  }
}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_ints(FieldSpec field, std::size_t rows, std::size_t cols,
                         std::initializer_list<long> entries) {
  if (entries.size() != rows * cols) {
    throw Error(ErrorKind::Input, "from_ints: expected " + std::to_string(rows * cols) +
                                      " entries, got " + std::to_string(entries.size()));
  }
  Matrix m(field, rows, cols);
  std::size_t k = 0;
  for (long v : entries) m.data_[k++] = field.from_int(v);
  return m;
}

Matrix Matrix::from_columns(FieldSpec field, std::size_t rows, std::span<const Vector> columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorKind::Input, "from_columns: ragged input");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(FieldSpec field, std::size_t cols, std::span<const Vector> rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::Input, "from_rows: ragged input");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_block(std::size_t row0, std::size_t col0, const Matrix& block) {
  if (row0 + block.rows_ > rows_ || col0 + block.cols_ > cols_) {
    throw Error(ErrorKind::Input, "set_block: block out of range");
  }
  for (std::size_t r = 0; r < block.rows_; ++r) {
    for (std::size_t c = 0; c < block.cols_; ++c) (*this)(row0 + r, col0 + c) = block(r, c);
  }
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require_same_field(field_, rhs.field_, "matrix product");
  if (cols_ != rhs.rows_) {
    throw Error(ErrorKind::Input, "matrix product: " + std::to_string(rows_) + "x" +
                                      std::to_string(cols_) + " times " +
                                      std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  }
  Matrix out(field_, rows_, rhs.cols_);
  Scalar tmp;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Scalar& b = rhs(k, j);
        if (sgn(b) == 0) continue;
        tmp = a * b;
        out(i, j) += tmp;
      }
    }
  }
  if (!field_.is_rational()) {
    for (auto& v : out.data_) v = field_.reduce(v);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require_same_field(field_, rhs.field_, "matrix sum");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorKind::Input, "matrix sum: shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_.add(data_[k], rhs.data_[k]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  require_same_field(field_, rhs.field_, "matrix difference");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw Error(ErrorKind::Input, "matrix difference: shape mismatch");
  }
  Matrix out(field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_.sub(data_[k], rhs.data_[k]);
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_.mul(s, data_[k]);
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) {
    throw Error(ErrorKind::Input, "apply: vector of length " + std::to_string(v.size()) +
                                      " for " + std::to_string(cols_) + " columns");
  }
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar acc = 0;
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (sgn(a) == 0 || sgn(v[k]) == 0) continue;
      acc += a * v[k];
    }
    out[i] = field_.reduce(acc);
  }
  return out;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  require_same_field(top.field_, bottom.field_, "vstack");
  if (top.cols_ != bottom.cols_) throw Error(ErrorKind::Input, "vstack: column mismatch");
  Matrix out(top.field_, top.rows_ + bottom.rows_, top.cols_);
  out.set_block(0, 0, top);
  out.set_block(top.rows_, 0, bottom);
  return out;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
  require_same_field(left.field_, right.field_, "hstack");
  if (left.rows_ != right.rows_) throw Error(ErrorKind::Input, "hstack: row mismatch");
  Matrix out(left.field_, left.rows_, left.cols_ + right.cols_);
  out.set_block(0, 0, left);
  out.set_block(0, left.cols_, right);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

void Matrix::check_entries() const {
  for (const auto& v : data_) {
    if (!field_.is_canonical(v)) {
      throw Error(ErrorKind::Input, "entry " + v.get_str() + " does not belong to " + field_.name());
    }
  }
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : " ");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c).get_str();
    os << (r + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Vector add(const FieldSpec& f, const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::Input, "vector sum: length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vector sub(const FieldSpec& f, const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::Input, "vector difference: length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

Vector scale(const FieldSpec& f, const Scalar& s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.mul(s, v[i]);
  return out;
}

Scalar dot(const FieldSpec& f, const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::Input, "dot: length mismatch");
  Scalar acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0 || sgn(b[i]) == 0) continue;
    acc += a[i] * b[i];
  }
  return f.reduce(acc);
}

}  // namespace gobelin
