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


// Independent reference computations for the test suites. Nothing here shares
// code paths with the library beyond the FiniteField element encoding.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "plift/degrees.hpp"
#include "plift/gf.hpp"
#include "plift/matrix.hpp"

namespace plift::oracle {

// Schoolbook product in GF(p)[X]/(modulus) on little-endian coefficient
// vectors; elements are canonical indices.
Elem poly_mul(int p, const std::vector<int>& modulus, Elem a, Elem b);

// Multiplicative order by repeated poly_mul.
std::uint64_t order(int p, const std::vector<int>& modulus, Elem a);

// ADeg_q(m, k) by explicit enumeration of every e <=_p d.
std::vector<Degree> adeg(int m, int k, int q);

// Nearest PRS_q(k) codewords within distance t of y on non-erased positions
// (erasures as nullopt), by enumerating every codeword. Returns the codeword
// when it is unique.
std::optional<std::vector<Elem>> prs_nearest(
    const FieldPtr& F, const std::vector<std::optional<Elem>>& y, int k,
    int t);

// Every codeword of the row space of G, via all q^dim messages.
std::vector<std::vector<Elem>> all_codewords(const FiniteField& F,
                                             const Matrix& G);

// Minimum nonzero weight by plain enumeration.
std::size_t min_distance(const FiniteField& F, const Matrix& G);

// Rank as log_q of the number of distinct codewords; tiny instances only.
std::size_t rank_by_count(const FiniteField& F, const Matrix& G);

}  // namespace plift::oracle
