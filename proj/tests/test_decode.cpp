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


#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <set>

#include "oracles.hpp"
#include "plift/decode.hpp"

namespace plift {
namespace {

std::vector<Elem> prs_word(const MonomialCode& prs, Rng& rng) {
  std::vector<Elem> msg(prs.dim());
  for (auto& x : msg) x = uniform_below(rng, prs.field().order());
  return prs.encode(msg);
}

std::vector<Symbol> as_symbols(const std::vector<Elem>& c) {
  return {c.begin(), c.end()};
}

TEST(Decode, ExactCodeword) {
  auto F = make_field(8);
  Rng rng(1);
  for (int k = 0; k <= 7; ++k) {
    MonomialCode prs(CodeKind::kPRS, F, 1, k);
    for (int i = 0; i < 20; ++i) {
      const auto c = prs_word(prs, rng);
      EXPECT_EQ(prs_decode(F, as_symbols(c), k), c);
    }
  }
}

TEST(Decode, PureErasuresAtMinimumSupport) {
  auto F = make_field(7);
  Rng rng(2);
  for (int k = 0; k <= 6; ++k) {
    MonomialCode prs(CodeKind::kPRS, F, 1, k);
    for (int i = 0; i < 20; ++i) {
      const auto c = prs_word(prs, rng);
      auto y = as_symbols(c);
      std::vector<std::size_t> pos(8);
      std::iota(pos.begin(), pos.end(), 0);
      std::shuffle(pos.begin(), pos.end(), rng);
      for (int j = 0; j < 8 - (k + 1); ++j) y[pos[j]].reset();
      EXPECT_EQ(prs_decode(F, y, k), c);
    }
  }
}

TEST(Decode, SingleErrorAgreesWithBruteForce) {
  auto F = make_field(8);
  MonomialCode prs(CodeKind::kPRS, F, 1, 3);
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    const auto c = prs_word(prs, rng);
    auto y = as_symbols(c);
    y[8].reset();  // s = 8 non-erased positions, t = 2
    const std::size_t j = uniform_below(rng, 8);
    y[j] = F->add(*y[j], 1 + uniform_below(rng, 7));
    const auto got = prs_decode(F, y, 3);
    EXPECT_EQ(got, c);
    EXPECT_EQ(got, oracle::prs_nearest(F, y, 3, 2));
  }
}

TEST(Decode, ExhaustiveSmallFields) {
  for (int q : {3, 4, 5}) {
    auto F = make_field(q);
    Rng rng(q);
    for (int k = 0; k <= q - 1; ++k) {
      MonomialCode prs(CodeKind::kPRS, F, 1, k);
      const auto words = oracle::all_codewords(*F, prs.generator());
      for (const auto& c : words) {
        for (int rep = 0; rep < 4; ++rep) {
          const int s = k + 1 + static_cast<int>(uniform_below(rng, q - k + 1));
          const int t = (s - k - 1) / 2;
          std::vector<std::size_t> pos(q + 1);
          std::iota(pos.begin(), pos.end(), 0);
          std::shuffle(pos.begin(), pos.end(), rng);
          auto y = as_symbols(c);
          for (int j = s; j <= q; ++j) y[pos[j]].reset();
          const int errors = static_cast<int>(uniform_below(rng, t + 1));
          for (int j = 0; j < errors; ++j)
            y[pos[j]] = F->add(*y[pos[j]], 1 + uniform_below(rng, q - 1));
          ASSERT_EQ(prs_decode(F, y, k), c) << "q=" << q << " k=" << k;
        }
      }
    }
  }
}

TEST(Decode, RandomizedLargerFields) {
  for (int q : {7, 8, 9, 16}) {
    auto F = make_field(q);
    Rng rng(100 + q);
    for (int trial = 0; trial < 300; ++trial) {
      const int k = static_cast<int>(uniform_below(rng, q));
      MonomialCode prs(CodeKind::kPRS, F, 1, k);
      const auto c = prs_word(prs, rng);
      const int s = k + 1 + static_cast<int>(uniform_below(rng, q - k + 1));
      const int t = (s - k - 1) / 2;
      std::vector<std::size_t> pos(q + 1);
      std::iota(pos.begin(), pos.end(), 0);
      std::shuffle(pos.begin(), pos.end(), rng);
      auto y = as_symbols(c);
      for (int j = s; j <= q; ++j) y[pos[j]].reset();
      for (int j = 0; j < t; ++j)
        y[pos[j]] = F->add(*y[pos[j]], 1 + uniform_below(rng, q - 1));
      ASSERT_EQ(prs_decode(F, y, k), c);
    }
  }
}

TEST(Decode, ArbitraryWordsAgreeWithBruteForce) {
  for (int q : {4, 5, 7, 8}) {
    auto F = make_field(q);
    Rng rng(7 * q);
    for (int k = 0; k <= 3; ++k) {
      for (int trial = 0; trial < 150; ++trial) {
        std::vector<Symbol> y(q + 1);
        for (auto& x : y) x = uniform_below(rng, q);
        const int erase = static_cast<int>(uniform_below(rng, q - k + 1));
        for (int j = 0; j < erase; ++j) y[uniform_below(rng, q + 1)].reset();
        const int s = static_cast<int>(
            std::count_if(y.begin(), y.end(), [](const Symbol& x) { return x.has_value(); }));
        if (s < k + 1) continue;
        EXPECT_EQ(prs_decode(F, y, k), oracle::prs_nearest(F, y, k, (s - k - 1) / 2));
      }
    }
  }
}

TEST(Decode, Preconditions) {
  auto F = make_field(4);
  std::vector<Symbol> y(5);
  y[0] = 1;
  EXPECT_THROW(prs_decode(F, y, 1), std::invalid_argument);
  EXPECT_THROW(prs_decode(F, std::vector<Symbol>(4, Elem{0}), 1), std::invalid_argument);
  MonomialCode c(CodeKind::kPLift, F, 2, 3);
  Rng rng(0);
  const auto L = random_embedding_through(F, c.support().point(0), rng);
  EXPECT_THROW(query_gen(c.support(), L, 5, rng), std::invalid_argument);
  CorrectionConfig cfg;
  cfg.s = 3;
  EXPECT_THROW(validate(cfg, c), std::invalid_argument);
  cfg.s = 5;
  EXPECT_THROW(validate(cfg, c), std::invalid_argument);
  cfg.s = 4;
  EXPECT_NO_THROW(validate(cfg, c));
  EXPECT_THROW(mc_experiment(MonomialCode(CodeKind::kLift, F, 2, 2), cfg, 1),
               std::invalid_argument);
}

TEST(Decode, QueryGenShape) {
  auto F = make_field(4);
  Support pm(F, 2, Space::kProjective);
  Rng rng(5);
  for (int s = 1; s <= 4; ++s) {
    int with_p = 0;
    const int draws = 20000;
    for (int i = 0; i < draws; ++i) {
      const auto L = random_embedding_through(F, pm.point(7), rng);
      const auto S = query_gen(pm, L, s, rng);
      ASSERT_EQ(S.size(), static_cast<std::size_t>(s));
      const auto img = L.image(pm);
      for (auto x : S) ASSERT_NE(std::find(img.begin(), img.end(), x), img.end());
      ASSERT_EQ(std::set<std::size_t>(S.begin(), S.end()).size(), S.size());
      with_p += std::count(S.begin(), S.end(), std::size_t{7});
    }
    const double p = s / 21.0;
    const double sigma = std::sqrt(p * (1 - p) / draws);
    EXPECT_NEAR(with_p / static_cast<double>(draws), p, 4 * sigma);
  }
}

TEST(Decode, QueryFrequencyUniform) {
  auto F = make_field(3);
  Support pm(F, 2, Space::kProjective);
  Rng rng(12);
  std::vector<int> count(13, 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i)
    for (auto x : sample_queries(pm, 4, 2, rng)) ++count[x];
  const double p = 2.0 / 13;
  const double sigma = std::sqrt(p * (1 - p) / draws);
  for (int c : count) EXPECT_NEAR(c / static_cast<double>(draws), p, 3 * sigma);
}

TEST(Decode, SingleQueryChiSquare) {
  auto F = make_field(4);
  Support pm(F, 2, Space::kProjective);
  Rng rng(77);
  std::vector<double> count(pm.size(), 0);
  const int draws = 20000;
  for (int i = 0; i < draws; ++i) {
    const auto S = sample_queries(pm, 10, 3, rng);
    ++count[S[uniform_below(rng, S.size())]];
  }
  double chi2 = 0;
  const double e = static_cast<double>(draws) / pm.size();
  for (double c : count) chi2 += (c - e) * (c - e) / e;
  boost::math::chi_squared dist(pm.size() - 1);
  EXPECT_GT(boost::math::cdf(boost::math::complement(dist, chi2)), 1e-3);
}

TEST(Decode, LocalCorrectUncorrupted) {
  auto F = make_field(8);
  MonomialCode c(CodeKind::kPLift, F, 2, 5);
  Rng rng(4);
  std::vector<Elem> msg(c.dim());
  for (auto& x : msg) x = uniform_below(rng, 8);
  const auto word = c.encode(msg);
  for (int s : {6, 7, 8}) {
    CorrectionConfig cfg;
    cfg.s = s;
    for (std::size_t P = 0; P < c.length(); ++P) {
      int reads = 0;
      const WordOracle read = [&](std::size_t i) -> Symbol {
        ++reads;
        return word[i];
      };
      EXPECT_EQ(local_correct(read, P, c, cfg, rng), word[P]);
      EXPECT_EQ(reads, s);
    }
  }
}

TEST(Decode, UnitWeightShortcutMatchesGeneralPath) {
  for (int q : {4, 8}) {
    auto F = make_field(q);
    for (int m : {2, 3}) {
      const int k = q - 2;
      MonomialCode c(CodeKind::kPLift, F, m, k);
      Rng rng(31 + q + m);
      std::vector<Elem> msg(c.dim());
      for (auto& x : msg) x = uniform_below(rng, q);
      auto y = c.encode(msg);
      corrupt(y, *F, 0.2, rng);
      const WordOracle read = [&](std::size_t i) -> Symbol { return y[i]; };
      CorrectionConfig general;
      general.s = q;
      CorrectionConfig shortcut = general;
      shortcut.unit_weights = true;
      for (int trial = 0; trial < 300; ++trial) {
        const std::size_t P = uniform_below(rng, c.length());
        Rng a = substream(5, trial), b = substream(5, trial);
        EXPECT_EQ(local_correct(read, P, c, general, a),
                  local_correct(read, P, c, shortcut, b));
      }
    }
  }
}

TEST(Decode, CorruptCountsAndChangesSymbols) {
  auto F = make_field(4);
  Rng rng(8);
  std::vector<Elem> w(21, 2);
  const auto pos = corrupt(w, *F, 0.25, rng);
  EXPECT_EQ(pos.size(), 5u);
  int changed = 0;
  for (Elem x : w) changed += x != 2;
  EXPECT_EQ(changed, 5);
  EXPECT_THROW(corrupt(w, *F, 1.5, rng), std::invalid_argument);
}

TEST(Decode, ExperimentBookkeeping) {
  MonomialCode c(CodeKind::kPLift, make_field(8), 2, 5);
  CorrectionConfig cfg;
  cfg.s = 8;
  cfg.seed = 42;
  const auto rep = mc_experiment(c, cfg, 100);
  EXPECT_EQ(rep.trials, 100u);
  EXPECT_EQ(rep.successes, 100u);
  EXPECT_DOUBLE_EQ(rep.success_rate(), 1.0);
  std::uint64_t total = 0;
  for (auto h : rep.histogram) total += h;
  EXPECT_EQ(total, 800u);
  const auto again = mc_experiment(c, cfg, 100);
  EXPECT_EQ(again.histogram, rep.histogram);
  ExperimentReport merged = mc_experiment(c, cfg, 50);
  merged.merge(mc_experiment(c, cfg, 30));
  EXPECT_EQ(merged.trials, 80u);
  EXPECT_EQ(merged.successes, 80u);
  total = 0;
  for (auto h : merged.histogram) total += h;
  EXPECT_EQ(total, 640u);
}

TEST(Decode, ExperimentMeetsBound) {
  MonomialCode c(CodeKind::kPLift, make_field(8), 2, 5);
  CorrectionConfig cfg;
  cfg.s = 8;
  cfg.delta = 1.0 / 16;
  cfg.seed = 7;
  const std::uint64_t trials = 2000;
  const auto rep = mc_experiment(c, cfg, trials);
  EXPECT_EQ(rep.successes + rep.wrong + rep.erasures, trials);
  const int t = cfg.t(5);
  const double bound = success_lower_bound(cfg.delta, cfg.s, t);
  const double p = rep.success_rate();
  const double sigma = std::sqrt(p * (1 - p) / trials);
  EXPECT_GE(p, bound - 3 * sigma);
  EXPECT_DOUBLE_EQ(delta_max(8, 1), 2.0 / 16);
}

TEST(Decode, MinimalQueryRegime) {
  // s = k+1 leaves t = 0, so success is at least 1 - delta (k+1).
  MonomialCode c(CodeKind::kPLift, make_field(8), 2, 3);
  CorrectionConfig cfg;
  cfg.s = 4;
  cfg.delta = 1.0 / 16;
  cfg.seed = 21;
  const std::uint64_t trials = 4000;
  const double bound = 1 - cfg.delta * 4;
  EXPECT_DOUBLE_EQ(success_lower_bound(cfg.delta, cfg.s, cfg.t(3)), bound);
  const double p = mc_experiment(c, cfg, trials).success_rate();
  EXPECT_GE(p, bound - 3 * std::sqrt(bound * (1 - bound) / trials));
}

TEST(Decode, FullLineRegimeQ16) {
  // s = q, tau = (k+1)/q: success at least 1 - 2 delta / (1 - tau).
  MonomialCode c(CodeKind::kPLift, make_field(16), 2, 13);
  CorrectionConfig cfg;
  cfg.s = 16;
  cfg.delta = 1.0 / 64;
  cfg.seed = 1;
  const std::uint64_t trials = 10000;
  const double tau = 14.0 / 16;
  const double bound = 1 - 2 * cfg.delta / (1 - tau);
  EXPECT_GE(success_lower_bound(cfg.delta, cfg.s, cfg.t(13)), bound);
  const double p = mc_experiment(c, cfg, trials).success_rate();
  EXPECT_GE(p, bound - 3 * std::sqrt(bound * (1 - bound) / trials));
}

}  // namespace
}  // namespace plift
