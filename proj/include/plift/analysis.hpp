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

// Structural checks on lifted codes: explicit information sets,
// quasi-cyclicity certificates, minimum-distance bounds and exact search,
// the duality with the point-line design of P^m, and rate tables.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plift/codes.hpp"

namespace plift {

// Points phi(omega), ..., phi(omega^count) of A^m, where omega is a primitive
// element of GF(q^m) and phi its coordinate map. With an rng, omega is a
// uniformly drawn primitive element and phi is composed with a uniformly
// drawn invertible matrix; otherwise the defaults of ExtensionIso are used.
// Requires count <= q^m - 1.
std::vector<Point> power_points(const FieldPtr& field, int m,
                                std::size_t count, Rng* rng = nullptr);

struct InformationSet {
  // Support positions, in construction order.
  std::vector<std::size_t> positions;
  std::size_t dim = 0;
  // Rank of the generator columns indexed by `positions`.
  std::size_t rank = 0;

  bool ok() const { return positions.size() == dim && rank == dim; }
};

// Affine codes (Lift with k <= q-2, RS with k <= q-2): the first dim powers
// of a primitive element. Projective codes (PLift, PRS with k <= q-1): on the
// chart of points (0:...:0:1:x_1:...:x_i) the first dim Lift_q(i, k-1) powers
// of a primitive element of GF(q^i), for i = 1..m, plus (0:...:0:1).
// Throws std::invalid_argument for other kinds or degrees.
InformationSet information_set(const MonomialCode& c, Rng* rng = nullptr);

struct QcCertificate {
  std::size_t n = 0;
  // gcd(n, q-1).
  std::size_t d = 0;
  // Vectors phi(omega^i beta^{dj}), block i = 0..d-1, j = 1..n/d, with
  // beta = omega^{q-1} for a primitive element omega of GF(q^{m+1}).
  std::vector<Point> representation;
  // u = twist[u] * standard form of u.
  std::vector<Elem> twist;
  // Support position of the standard form of each representation vector.
  std::vector<std::size_t> positions;
  // psi^d as a map on representation positions.
  std::vector<std::size_t> permutation;
  std::vector<std::vector<std::size_t>> cycles;

  // The vectors are pairwise projectively distinct.
  bool represents = false;
  // Evaluating the monomials on the representation gives twist^v * C.
  bool twisted_matches = false;
  // d disjoint cycles of length n/d whose orbits are the blocks.
  bool cycle_structure = false;
  // psi^d maps every generator row into the row space.
  bool invariant = false;

  bool ok() const {
    return represents && twisted_matches && cycle_structure && invariant;
  }
};

// nullopt when gcd(n/d, q-1) != 1. Accepts any projective monomial code.
std::optional<QcCertificate> qc_certificate(const MonomialCode& c);

struct DistanceReport {
  // q + 1 - k.
  int design_distance = 0;
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::optional<std::size_t> exact;
  // "gray" or "flats" when exact is set.
  std::string method;

  bool consistent() const {
    return lower <= upper && (!exact || (lower <= *exact && *exact <= upper));
  }
};

// Minimum weight over all nonzero codewords, visiting messages in a p-ary
// Gray-code order over the GF(p)-basis of the message space so each step is
// one row addition. Throws std::length_error beyond `limit` messages.
std::size_t min_distance_gray(const FiniteField& F, const Matrix& G,
                              std::uint64_t limit = std::uint64_t{1} << 26);

// Minimum weight through codewords vanishing on dim-1 independent
// coordinates; a minimum-weight codeword is determined up to scaling by such
// a set inside its zero set. Throws std::length_error beyond `limit` subsets.
std::size_t min_distance_flats(const FiniteField& F, const Matrix& G,
                               std::uint64_t limit = 4000000);

// Bounds for PLift and PRS codes; with `exact`, the true minimum distance by
// the Gray-code sweep when q^dim is small, else by the flats search.
DistanceReport distance_report(const MonomialCode& c, bool exact);

struct DualityReport {
  int q = 0, m = 0;
  std::size_t n = 0;
  std::size_t code_dim = 0;
  std::size_t dual_dim = 0;
  std::size_t incidence_rank = 0;
  // Row space of the incidence matrix equals the dual of PLift_q(m, q-1).
  bool equal = false;
  // m = 2 only: (p(p+1)/2)^t + 1 and p^{2t} + p^t - (p(p+1)/2)^t.
  std::optional<std::size_t> expected_rank;
  std::optional<std::size_t> expected_dim;

  bool ok() const {
    return equal && (!expected_rank || *expected_rank == incidence_rank) &&
           (!expected_dim || *expected_dim == code_dim);
  }
};

DualityReport design_dual_check(const FieldPtr& field, int m);

struct ShortenPunctureReport {
  bool shorten_equal = false;
  // Always true for m = 1, where there is nothing to puncture.
  bool puncture_equal = false;

  bool ok() const { return shorten_equal && puncture_equal; }
};

// shorten(PLift_q(m,k)) == Lift_q(m,k-1) and
// puncture(PLift_q(m,k)) == PLift_q(m-1,k) as codes.
ShortenPunctureReport shorten_puncture_check(const FieldPtr& field, int m,
                                             int k);

enum class RateMode { kLift, kRm, kBoth };

RateMode parse_rate_mode(std::string_view name);

struct RateRow {
  int k = 0;
  std::size_t n_A = 0, dim_A = 0;
  std::size_t n_P = 0, dim_P = 0;
  std::size_t dim_PRM = 0;
};

// Row k: dim_A = dim Lift_q(m, k-1), dim_P = dim PLift_q(m, k),
// dim_PRM = dim PRM_q(m, k). Default k range is max(1, q-8)..q-1. Dimensions
// not selected by `mode` are left at zero.
std::vector<RateRow> rate_table(int q, int m, RateMode mode = RateMode::kBoth,
                                std::optional<int> k_min = {},
                                std::optional<int> k_max = {});

// Header "k,n_A,dim_A,R_A,n_P,dim_P,R_P,dim_PRM,R_PRM", rates with three
// significant digits. Columns not selected by `mode` are left empty.
std::string rate_table_csv(const std::vector<RateRow>& rows,
                           RateMode mode = RateMode::kBoth);

}  // namespace plift
