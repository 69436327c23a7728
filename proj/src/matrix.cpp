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


#include "plift/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace plift {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void Matrix::append_row(std::span<const Elem> r) {
  if (rows_ == 0 && data_.empty()) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = at(i, cols[j]);
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix out(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    std::copy_n(row(rows[i]).begin(), cols_, out.row(i).begin());
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

void axpy(const FiniteField& F, Elem c, std::span<const Elem> x,
          std::span<Elem> y) {
  if (c == 0) return;
  const std::size_t n = x.size();
  if (const Elem* mr = F.mul_row(c)) {
    if (F.xor_addition()) {
      for (std::size_t j = 0; j < n; ++j) y[j] ^= mr[x[j]];
    } else {
      for (std::size_t j = 0; j < n; ++j) y[j] = F.add(y[j], mr[x[j]]);
    }
    return;
  }
  for (std::size_t j = 0; j < n; ++j) y[j] = F.add(y[j], F.mul(c, x[j]));
}

namespace {

// Row reduction in place. Returns the pivot columns; the first
// pivots.size() rows of `a` hold the echelon rows afterwards.
std::vector<std::size_t> eliminate(const FiniteField& F, Matrix& a,
                                   bool reduced) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t cols = a.cols();
  for (std::size_t c = 0; c < cols && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a.at(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) std::swap_ranges(a.row(p).begin(), a.row(p).end(),
                                 a.row(r).begin());
    const Elem s = F.inv(a.at(r, c));
    auto pr = a.row(r).subspan(c);
    if (s != 1)
      for (auto& x : pr) x = F.mul(s, x);
    for (std::size_t i = reduced ? 0 : r + 1; i < a.rows(); ++i) {
      if (i == r) continue;
      const Elem f = a.at(i, c);
      if (f != 0) axpy(F, F.neg(f), pr, a.row(i).subspan(c));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix rref(const FiniteField& F, Matrix a, std::vector<std::size_t>* pivots) {
  auto piv = eliminate(F, a, true);
  std::vector<std::size_t> keep(piv.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  Matrix out = a.select_rows(keep);
  if (pivots) *pivots = std::move(piv);
  return out;
}

std::size_t rank(const FiniteField& F, Matrix a) {
  return eliminate(F, a, false).size();
}

Matrix nullspace(const FiniteField& F, const Matrix& a) {
  std::vector<std::size_t> pivots;
  Matrix r = rref(F, a, &pivots);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix out(0, n);
  std::vector<Elem> x(n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::fill(x.begin(), x.end(), 0);
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      x[pivots[i]] = F.neg(r.at(i, f));
    out.append_row(x);
  }
  return out;
}

Matrix multiply(const FiniteField& F, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      axpy(F, a.at(i, k), b.row(k), out.row(i));
  return out;
}

std::vector<Elem> vec_mul(const FiniteField& F, std::span<const Elem> x,
                          const Matrix& a) {
  if (x.size() != a.rows()) throw std::invalid_argument("shape mismatch");
  std::vector<Elem> out(a.cols(), 0);
  for (std::size_t k = 0; k < x.size(); ++k) axpy(F, x[k], a.row(k), out);
  return out;
}

std::vector<Elem> mul_vec(const FiniteField& F, const Matrix& a,
                          std::span<const Elem> x) {
  if (x.size() != a.cols()) throw std::invalid_argument("shape mismatch");
  std::vector<Elem> out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Elem s = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
      s = F.add(s, F.mul(a.at(i, j), x[j]));
    out[i] = s;
  }
  return out;
}

std::optional<Matrix> inverse(const FiniteField& F, const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix not square");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy_n(a.row(i).begin(), n, aug.row(i).begin());
    aug.at(i, n + i) = 1;
  }
  auto pivots = eliminate(F, aug, true);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    std::copy_n(aug.row(i).begin() + n, n, out.row(i).begin());
  return out;
}

RowSpace::RowSpace(FieldPtr field, const Matrix& generators)
    : field_(std::move(field)), length_(generators.cols()) {
  basis_ = rref(*field_, generators, &pivots_);
}

bool RowSpace::contains(std::span<const Elem> v) const {
  if (v.size() != length_) throw std::invalid_argument("length mismatch");
  std::vector<Elem> r(v.begin(), v.end());
  const FiniteField& F = *field_;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Elem c = r[pivots_[i]];
    if (c != 0) axpy(F, F.neg(c), basis_.row(i), r);
  }
  return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
}

bool RowSpace::contains_all(const Matrix& vs) const {
  for (std::size_t i = 0; i < vs.rows(); ++i)
    if (!contains(vs.row(i))) return false;
  return true;
}

bool RowSpace::operator==(const RowSpace& o) const {
  return length_ == o.length_ && pivots_ == o.pivots_ && basis_ == o.basis_;
}

bool row_space_equal(const FieldPtr& F, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) return false;
  return RowSpace(F, a) == RowSpace(F, b);
}

}  // namespace plift
