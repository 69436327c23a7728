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


// Monomial evaluation codes: Reed-Solomon, Reed-Muller, their projective
// versions, and affine/projective lifted Reed-Solomon codes, together with
// encoding, line restriction, shortening/puncturing and automorphism actions.

#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plift/degrees.hpp"
#include "plift/geometry.hpp"
#include "plift/matrix.hpp"

namespace plift {

enum class CodeKind { kRS, kPRS, kRM, kPRM, kLift, kPLift };

std::string to_string(CodeKind kind);
// Case-insensitive; throws std::invalid_argument for unknown names.
CodeKind parse_code_kind(std::string_view name);
bool is_projective(CodeKind kind);

// A linear code given by a generator matrix over an ordered support.
struct LinearCode {
  std::shared_ptr<const Support> support;
  Matrix generator;

  const FieldPtr& field() const { return support->field_ptr(); }
  std::size_t length() const { return support->size(); }
  std::size_t dim() const { return rank(*field(), generator); }
  RowSpace row_space() const { return RowSpace(field(), generator); }
};

// Row-space equality; false when the supports differ in shape.
bool code_equal(const LinearCode& a, const LinearCode& b);
// Row space of b contained in row space of a.
bool code_contains(const LinearCode& a, const LinearCode& b);

// Matrix with rows ev(X^d) for d in `degrees` over `points` (0^0 = 1).
Matrix evaluate_monomials(const FiniteField& F,
                          const std::vector<Degree>& degrees,
                          const std::vector<Point>& points);

struct CodeDescriptor {
  CodeKind kind;
  int q, m, k;
  // Homogeneous degree for projective kinds.
  std::optional<int> v;
  std::size_t dim, length;
};

class MonomialCode {
 public:
  // Parameter ranges: RS 0 <= k <= q-1 and PRS 0 <= k <= q (both m = 1);
  // RM 0 <= k <= m(q-1); PRM 0 <= k <= m(q-1)+1; Lift 0 <= k <= q-2;
  // PLift 1 <= k <= q-1. Throws std::invalid_argument otherwise.
  MonomialCode(CodeKind kind, FieldPtr field, int m, int k);

  CodeKind kind() const { return kind_; }
  const FiniteField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int q() const { return static_cast<int>(field_->order()); }
  int m() const { return m_; }
  int k() const { return k_; }
  // Homogeneous degree of the monomials (projective kinds), else 0.
  int v() const { return degrees_.v; }

  const DegreeSet& degrees() const { return degrees_; }
  const Support& support() const { return *support_; }
  const std::shared_ptr<const Support>& support_ptr() const { return support_; }
  const Matrix& generator() const { return code_.generator; }
  const LinearCode& linear() const { return code_; }

  std::size_t dim() const { return degrees_.size(); }
  std::size_t length() const { return support_->size(); }
  CodeDescriptor descriptor() const;

  // msg * G; throws std::invalid_argument on length mismatch.
  std::vector<Elem> encode(std::span<const Elem> msg) const;

 private:
  CodeKind kind_;
  FieldPtr field_;
  int m_, k_;
  DegreeSet degrees_;
  std::shared_ptr<const Support> support_;
  LinearCode code_;
};

// ev_{P^1}(f o L) from c = ev_{P^m}(f), f homogeneous of degree v: reads the
// q+1 coordinates of c on L(P^1) and divides by the weight vector.
std::vector<Elem> restrict_to_line(const Support& pm, std::span<const Elem> c,
                                   const LineEmbedding& L, int v);

// Codewords of a PLift (or any projective) code vanishing on the hyperplane at
// infinity, restricted to the affine chart.
LinearCode shorten_at_infinity(const MonomialCode& c);
// Restriction of the code to the hyperplane at infinity, as a code over
// P^{m-1}. Requires m >= 2.
LinearCode puncture_to_infinity(const MonomialCode& c);

// ev_{P^m}(f o M) from c = ev_{P^m}(f) for homogeneous f of degree v.
// M is (m+1)x(m+1), acting on column vectors. Throws on singular M.
std::vector<Elem> apply_projective_action(const Support& pm, const Matrix& M,
                                          std::span<const Elem> c, int v);
// ev_{A^m}(f(Ax + b)) from c = ev_{A^m}(f). Throws on singular A.
std::vector<Elem> apply_affine_action(const Support& am, const Matrix& A,
                                      std::span<const Elem> b,
                                      std::span<const Elem> c);

// Uniform invertible n x n matrix by rejection.
Matrix random_invertible(const FiniteField& F, std::size_t n, Rng& rng);

}  // namespace plift
