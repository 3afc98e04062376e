#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tpbound {

using Integer = mpz_class;
using Rational = mpq_class;

/// Always "num/den", including a "/1" for integers.
std::string to_string(const Rational& value);

/// Accepts "a", "a/b", "-a/b" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

/// 10^k as an exact rational; negative k gives 1/10^|k|.
Rational power_of_ten(int k);

/// Dense row-major matrix of exact rationals, 0-based indexing.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Matrix submatrix(const std::vector<std::size_t>& row_ids,
                   const std::vector<std::size_t>& col_ids) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact determinant by Gaussian elimination; the empty matrix has determinant 1.
Rational determinant(Matrix m);

/// Throws Error(ZeroDenominator) when singular.
Matrix inverse(const Matrix& m);

}  // namespace tpbound
