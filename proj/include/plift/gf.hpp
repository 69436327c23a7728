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

// Exact arithmetic in GF(p^t) and in extensions GF(q^m) over GF(q).
//
// An element is identified by its canonical index: the coefficient vector
// (c_0, ..., c_{t-1}) of its polynomial representative, read as the base-b
// integer sum c_i b^i where b is the order of the base field. Index order is
// the canonical enumeration order used everywhere else in the library
// (supports, primitive element search, message files).
//
// Log/antilog tables are built once at construction; the representation seen
// by callers is always the coefficient index.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace plift {

using Elem = std::uint32_t;

bool is_prime(std::int64_t n);

// Returns (p, t) with q = p^t, or nullopt when q is not a prime power.
std::optional<std::pair<int, int>> prime_power(std::int64_t q);

// Distinct prime factors, ascending.
std::vector<std::int64_t> prime_factors(std::int64_t n);

class PrimeField {
 public:
  explicit PrimeField(int p);

  int characteristic() const { return static_cast<int>(p_); }
  Elem order() const { return p_; }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem inv(Elem a) const;

  bool operator==(const PrimeField& other) const { return p_ == other.p_; }

 private:
  Elem p_;
};

// Field of order b^d built as Base[X] / (modulus), b = |Base|.
template <class Base>
class GaloisExtension {
 public:
  using BasePtr = std::shared_ptr<const Base>;

  // `modulus` is monic with degree+1 little-endian coefficients over Base.
  // Throws std::invalid_argument when it is not monic or is reducible.
  GaloisExtension(BasePtr base, std::vector<Elem> modulus);

  // First monic irreducible polynomial of the given degree, lower
  // coefficients enumerated as a little-endian base-b counter.
  static std::vector<Elem> first_irreducible(const Base& base, int degree);
  static bool is_irreducible(const Base& base, std::span<const Elem> poly);

  const Base& base() const { return *base_; }
  const BasePtr& base_ptr() const { return base_; }
  int characteristic() const { return base_->characteristic(); }
  int degree() const { return degree_; }
  Elem order() const { return order_; }
  const std::vector<Elem>& modulus() const { return modulus_; }

  // Smallest canonical index of multiplicative order order()-1.
  Elem primitive() const { return primitive_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const {
    if (xor_add_) return a ^ b;
    if (!add_table_.empty()) return add_table_[a * order_ + b];
    return digitwise(a, b, false);
  }
  Elem sub(Elem a, Elem b) const {
    if (xor_add_) return a ^ b;
    if (!add_table_.empty()) return add_table_[a * order_ + neg_table_[b]];
    return digitwise(a, b, true);
  }
  Elem neg(Elem a) const {
    if (xor_add_) return a;
    if (!neg_table_.empty()) return neg_table_[a];
    return digitwise(0, a, true);
  }
  Elem mul(Elem a, Elem b) const {
    if (!mul_table_.empty()) return mul_table_[a * order_ + b];
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  // Row c of the multiplication table, or nullptr when the field is too large
  // to tabulate.
  const Elem* mul_row(Elem c) const {
    return mul_table_.empty() ? nullptr : mul_table_.data() + c * order_;
  }
  bool xor_addition() const { return xor_add_; }

  // Throws std::domain_error for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  // 0^0 = 1; negative exponents require a != 0. Exponent is reduced modulo
  // order()-1 for nonzero a.
  Elem pow(Elem a, std::int64_t n) const;

  // Discrete log to the primitive base; a must be nonzero.
  int log(Elem a) const { return log_[a]; }
  Elem exp(std::int64_t n) const;

  std::vector<Elem> coordinates(Elem a) const;
  Elem from_coordinates(std::span<const Elem> coords) const;

  bool operator==(const GaloisExtension& other) const {
    return *base_ == *other.base_ && modulus_ == other.modulus_;
  }

 private:
  Elem digitwise(Elem a, Elem b, bool subtract) const;
  Elem slow_mul(Elem a, Elem b) const;
  Elem slow_pow(Elem a, std::uint64_t n) const;

  BasePtr base_;
  int degree_ = 0;
  Elem base_order_ = 0;
  Elem order_ = 0;
  std::vector<Elem> modulus_;
  Elem primitive_ = 1;
  bool xor_add_ = false;
  std::vector<Elem> exp_;
  std::vector<int> log_;
  std::vector<Elem> add_table_;
  std::vector<Elem> neg_table_;
  std::vector<Elem> mul_table_;
};

// GF(p^t) over its prime field.
class FiniteField : public GaloisExtension<PrimeField> {
 public:
  // Default modulus comes from a fixed table of irreducible polynomials (the
  // Conway polynomials for the small (p, t) pairs the library targets),
  // falling back to first_irreducible. Throws std::invalid_argument for
  // composite p, t < 1 or a bad modulus.
  FiniteField(int p, int t, std::optional<std::vector<int>> modulus = {});

  int prime() const { return characteristic(); }

  // Image of an integer in the prime subfield.
  Elem from_int(std::int64_t n) const;

  // "[c0,c1,...]" little-endian with t entries; prime fields (t = 1) print
  // the bare residue.
  std::string format(Elem a) const;
  // Accepts "[c0,...]" (missing high coefficients are zero) or a bare
  // canonical index. Throws std::invalid_argument.
  Elem parse(std::string_view text) const;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

FieldPtr make_field(int p, int t, std::optional<std::vector<int>> modulus = {});
// Field of order q with the default modulus; q must be a prime power.
FieldPtr make_field(std::int64_t q);

// Default modulus for (p, t); coefficients little-endian.
std::vector<int> default_modulus(int p, int t);

// Checked value type carrying its owner field. Arithmetic between elements of
// different fields throws std::invalid_argument.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);

  const FieldPtr& field() const { return field_; }
  Elem value() const { return value_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::int64_t n) const;

  bool operator==(const FieldElement& o) const;
  std::string to_string() const { return field_->format(value_); }

 private:
  void check_same(const FieldElement& o) const;

  FieldPtr field_;
  Elem value_;
};

using ExtensionField = GaloisExtension<FiniteField>;

// GF(q^m) over GF(q) with coordinates in the polynomial basis
// {1, X, ..., X^{m-1}} of its defining modulus. The coordinate map is
// GF(q)-linear and bijective by construction.
class ExtensionIso {
 public:
  ExtensionIso(FieldPtr base, int m);

  const FiniteField& base() const { return *base_; }
  const FieldPtr& base_ptr() const { return base_; }
  const ExtensionField& extension() const { return *ext_; }
  int dimension() const { return m_; }

  std::vector<Elem> to_vector(Elem a) const { return ext_->coordinates(a); }
  Elem from_vector(std::span<const Elem> v) const {
    return ext_->from_coordinates(v);
  }

 private:
  FieldPtr base_;
  int m_;
  std::shared_ptr<const ExtensionField> ext_;
};

}  // namespace plift
