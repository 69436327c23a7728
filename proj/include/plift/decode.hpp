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


// Error-and-erasure decoding of projective Reed-Solomon words, the query
// generator and local corrector for projective lifted codes, and a seeded
// Monte-Carlo harness measuring the corrector's success rate.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "plift/codes.hpp"
#include "plift/rng.hpp"

namespace plift {

// A received symbol; nullopt marks an erasure.
using Symbol = std::optional<Elem>;

// Decodes y (indexed by P^1 in support order) in PRS_q(k). With s non-erased
// positions the decoder corrects up to t = (s-k-1)/2 errors among them.
// Returns nullopt when no codeword lies within distance t. Throws
// std::invalid_argument when s < k+1 or the length is not q+1.
std::optional<std::vector<Elem>> prs_decode(const FieldPtr& field,
                                            std::span<const Symbol> y, int k);

struct CorrectionConfig {
  int s = 0;
  double delta = 0.0;
  std::uint64_t seed = 0;
  // Read the line through an embedding with all-ones weight vector.
  bool unit_weights = false;

  int t(int k) const { return (s - k - 1) / 2; }
};

// Throws std::invalid_argument unless k+1 <= s <= q.
void validate(const CorrectionConfig& cfg, const MonomialCode& code);

// Largest corruption fraction covered by the guarantee: (t+1) / (2s).
double delta_max(int s, int t);
// 1 - delta * s / (t+1).
double success_lower_bound(double delta, int s, int t);

// Support indices of the s points queried on L(P^1), where L(0:1) is the
// target P. P is included with probability s/n, n = |P^m|; the other queries
// form a uniform subset of the remaining q points of the line, listed in P^1
// order of L. Requires 1 <= s <= q.
std::vector<std::size_t> query_gen(const Support& pm, const LineEmbedding& L,
                                   int s, Rng& rng);

// Draws L through P and the query positions; returns the queried support
// indices.
std::vector<std::size_t> sample_queries(const Support& pm, std::size_t P, int s,
                                        Rng& rng);

using WordOracle = std::function<Symbol(std::size_t)>;

// Local correction of coordinate P of a word close to a PLift codeword.
// Reads exactly s coordinates through `read`; nullopt when the line decoder
// fails.
Symbol local_correct(const WordOracle& read, std::size_t P,
                     const MonomialCode& code, const CorrectionConfig& cfg,
                     Rng& rng);

// Replaces exactly floor(delta * n) uniformly chosen coordinates by uniform
// wrong symbols; returns the corrupted positions.
std::vector<std::size_t> corrupt(std::vector<Elem>& word, const FiniteField& F,
                                 double delta, Rng& rng);

struct ExperimentReport {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t wrong = 0;
  std::uint64_t erasures = 0;
  std::vector<std::uint64_t> histogram;

  double success_rate() const {
    return trials ? static_cast<double>(successes) / trials : 0.0;
  }
  // Combines two reports over the same code.
  void merge(const ExperimentReport& o);
};

// Each trial draws its randomness from substream(cfg.seed, trial): a uniform
// codeword, exactly floor(delta * n) corruptions and a uniform target.
ExperimentReport mc_experiment(const MonomialCode& code,
                               const CorrectionConfig& cfg,
                               std::uint64_t trials);

}  // namespace plift
