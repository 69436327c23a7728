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


// Exponent-tuple calculus: p-adic order, A-/P-reduction and the degree sets
// of affine and projective lifted Reed-Solomon codes.
//
// Reduction of a single exponent (int_reduce) maps e to itself when
// e <= q-1 and otherwise to the representative of e mod (q-1) in [1, q-1];
// it is the exponent of x^e as a function on F_q.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "plift/geometry.hpp"

namespace plift {

using Degree = std::vector<int>;

struct DegreeSet {
  Space space = Space::kAffine;
  int q = 0, m = 0, k = 0;
  // Homogeneous degree of projective sets; 0 for affine ones.
  int v = 0;
  // Sorted lexicographically, no duplicates.
  std::vector<Degree> tuples;

  std::size_t size() const { return tuples.size(); }
  bool contains(std::span<const int> d) const;
  // Sorted JSON array of integer arrays.
  std::string to_json() const;
};

bool p_adic_leq(std::int64_t a, std::int64_t b, int p);
bool p_adic_leq(std::span<const int> a, std::span<const int> b, int p);

std::int64_t int_reduce(std::int64_t e, int q);
Degree a_reduce(std::span<const int> d, int q);
Degree p_reduce(std::span<const int> d, int q);
bool is_a_reduced(std::span<const int> d, int q);
bool is_p_reduced(std::span<const int> d, int q);

// One reduction step applied at a chosen coordinate (rho_j) or pair (tau_ij).
// Returns false and leaves d unchanged when the step does not apply.
bool apply_rho(Degree& d, int j, int q);
bool apply_tau(Degree& d, int i, int j, int q);

// v = k + (m-1)(q-1).
int projective_degree(int m, int k, int q);

// d in ADeg_q(m, k): d in B_inf(q-1) and int_reduce(|e|) <= k for every
// e <=_p d. Evaluated with a sum-set dynamic program over coordinates.
bool in_adeg(std::span<const int> d, int k, int q);

DegreeSet adeg(int m, int k, int q);
DegreeSet pdeg(int m, int k, int q);
// Same set through the non-recursive characterization, testing every
// e <=_p eta(d) explicitly. Used as a cross-check.
DegreeSet pdeg_direct(int m, int k, int q);

// Degree sets of the classical codes.
DegreeSet rs_degrees(int k, int q);
DegreeSet prs_degrees(int k, int q);
DegreeSet rm_degrees(int m, int k, int q);
DegreeSet prm_degrees(int m, int k, int q);

// Every A-reduced tuple of length m (affine) or every P-reduced tuple of
// weight v and length m+1 (projective), sorted.
std::vector<Degree> a_reduced_tuples(int m, int q);
std::vector<Degree> p_reduced_tuples(int m, int v, int q);

// Value of X^d at a point, with 0^0 = 1.
Elem monomial_value(const FiniteField& F, std::span<const int> d,
                    std::span<const Elem> x);

// Membership of the monomial X^d in Lift_q(m, k) (affine, d of length m) or
// PLift_q(m, k) (projective, d of length m+1, |d| = k + (m-1)(q-1)), decided
// from the definition: the restriction to every line must lie in RS_q(k)
// resp. PRS_q(k). Projective lines use one embedding each; with `exhaustive`
// every rank-2 embedding is tried instead (small q and m only).
bool monomial_membership_oracle(const FieldPtr& field, std::span<const int> d,
                                int k, Space space, bool exhaustive = false);

}  // namespace plift
