// Copyright 2026 The plift Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Dense matrices over a finite field and the Gaussian-elimination routines
// the code constructions rely on: rank, reduced row echelon form, kernels,
// row-space membership and equality.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "plift/gf.hpp"

namespace plift {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Elem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<Elem> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const Elem> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  // The first row fixes the column count of an empty matrix.
  void append_row(std::span<const Elem> r);

  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  Matrix transpose() const;

  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

// y += c * x.
void axpy(const FiniteField& F, Elem c, std::span<const Elem> x,
          std::span<Elem> y);

// Reduced row echelon form with zero rows dropped; pivot columns are written
// to `pivots` when given.
Matrix rref(const FiniteField& F, Matrix a,
            std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const FiniteField& F, Matrix a);

// Basis (as rows) of the right kernel {x : A x = 0}.
Matrix nullspace(const FiniteField& F, const Matrix& a);

Matrix multiply(const FiniteField& F, const Matrix& a, const Matrix& b);
// Row vector times matrix.
std::vector<Elem> vec_mul(const FiniteField& F, std::span<const Elem> x,
                          const Matrix& a);
// Matrix times column vector.
std::vector<Elem> mul_vec(const FiniteField& F, const Matrix& a,
                          std::span<const Elem> x);

// nullopt when singular.
std::optional<Matrix> inverse(const FiniteField& F, const Matrix& a);

// Row space kept in reduced echelon form for repeated membership queries.
class RowSpace {
 public:
  RowSpace(FieldPtr field, const Matrix& generators);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t length() const { return length_; }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Elem> v) const;
  bool contains_all(const Matrix& vs) const;
  bool operator==(const RowSpace& o) const;

 private:
  FieldPtr field_;
  std::size_t length_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

bool row_space_equal(const FieldPtr& F, const Matrix& a, const Matrix& b);

}  // namespace plift
