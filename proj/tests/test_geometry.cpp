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
#include <map>
#include <set>

#include "plift/degrees.hpp"
#include "plift/geometry.hpp"

namespace plift {
namespace {

TEST(Geometry, Counts) {
  auto F3 = make_field(3);
  EXPECT_EQ(Support(F3, 2, Space::kProjective).size(), 13u);
  EXPECT_EQ(Support(F3, 1, Space::kProjective).size(), 4u);
  EXPECT_EQ(Support(make_field(4), 2, Space::kAffine).size(), 16u);
  EXPECT_EQ(theta(2, 3), 13u);
  EXPECT_EQ(theta(3, 4), 85u);
}

TEST(Geometry, WorkedPlaneListIsAPermutationOfTheSupport) {
  auto F3 = make_field(3);
  Support s(F3, 2, Space::kProjective);
  const std::vector<Point> listed = {
      {1, 1, 1}, {1, 1, 2}, {1, 1, 0}, {1, 2, 1}, {1, 2, 2}, {1, 2, 0}, {1, 0, 1},
      {1, 0, 2}, {1, 0, 0}, {0, 1, 1}, {0, 1, 2}, {0, 1, 0}, {0, 0, 1}};
  std::set<std::size_t> seen;
  for (const auto& p : listed) seen.insert(s.index_of(p));
  EXPECT_EQ(seen.size(), 13u);
}

TEST(Geometry, SupportOrder) {
  auto F3 = make_field(3);
  Support s(F3, 2, Space::kProjective);
  EXPECT_EQ(s.point(0), (Point{1, 0, 0}));
  EXPECT_EQ(s.point(1), (Point{1, 0, 1}));
  EXPECT_EQ(s.point(3), (Point{1, 1, 0}));
  EXPECT_EQ(s.point(9), (Point{0, 1, 0}));
  EXPECT_EQ(s.point(12), (Point{0, 0, 1}));
  Support a(F3, 2, Space::kAffine);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Point lifted{1};
    lifted.insert(lifted.end(), a.point(i).begin(), a.point(i).end());
    EXPECT_EQ(s.index_of(lifted), i);
  }
  Support line(F3, 1, Space::kProjective);
  const auto p1 = projective_line_points(*F3);
  for (std::size_t i = 0; i < p1.size(); ++i) EXPECT_EQ(line.point(i), p1[i]);
}

TEST(Geometry, IndexRoundTrip) {
  for (int q : {2, 3, 4, 5}) {
    auto F = make_field(q);
    for (int m : {1, 2, 3}) {
      for (Space sp : {Space::kAffine, Space::kProjective}) {
        Support s(F, m, sp);
        std::set<Point> distinct(s.points().begin(), s.points().end());
        EXPECT_EQ(distinct.size(), s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
          EXPECT_EQ(s.index_of(s.point(i)), i);
          EXPECT_EQ(s.parse(s.format(i)), i);
        }
      }
    }
  }
}

TEST(Geometry, Standardize) {
  auto F3 = make_field(3);
  auto [p, l] = standardize(*F3, Point{2, 1, 1});
  EXPECT_EQ(p, (Point{1, 2, 2}));
  EXPECT_EQ(l, 2u);
  std::tie(p, l) = standardize(*F3, Point{0, 2, 1});
  EXPECT_EQ(p, (Point{0, 1, 2}));
  EXPECT_EQ(l, 2u);
  std::tie(p, l) = standardize(*F3, Point{1, 0, 0});
  EXPECT_EQ(p, (Point{1, 0, 0}));
  EXPECT_EQ(l, 1u);
  EXPECT_THROW(standardize(*F3, Point{0, 0, 0}), std::invalid_argument);
  Support s(F3, 2, Space::kProjective);
  for (const auto& pt : s.points()) EXPECT_EQ(standardize(*F3, pt).first, pt);
}

TEST(Geometry, LinesThroughPartition) {
  struct Case {
    int q, m;
    std::size_t lines;
  };
  for (auto c : {Case{3, 2, 4}, Case{4, 3, 21}, Case{2, 3, 7}, Case{5, 2, 6}}) {
    auto F = make_field(c.q);
    Support s(F, c.m, Space::kProjective);
    for (std::size_t p : {std::size_t{0}, s.size() / 2, s.size() - 1}) {
      const auto lines = lines_through(s, p);
      ASSERT_EQ(lines.size(), c.lines);
      std::set<std::size_t> rest;
      std::size_t total = 0;
      for (const auto& line : lines) {
        EXPECT_EQ(line.size(), static_cast<std::size_t>(c.q) + 1);
        EXPECT_TRUE(std::binary_search(line.begin(), line.end(), p));
        for (auto x : line)
          if (x != p) {
            rest.insert(x);
            ++total;
          }
      }
      EXPECT_EQ(total, s.size() - 1);
      EXPECT_EQ(rest.size(), s.size() - 1);
    }
  }
}

TEST(Geometry, AllLinesCount) {
  // theta(m) theta(m-1) / (q+1) lines in P^m.
  auto F = make_field(3);
  Support s(F, 2, Space::kProjective);
  EXPECT_EQ(all_lines(s).size(), 13u);
  Support t(make_field(2), 3, Space::kProjective);
  EXPECT_EQ(all_lines(t).size(), 35u);
}

TEST(Geometry, WorkedEmbeddingExample) {
  auto F3 = make_field(3);
  Support s(F3, 2, Space::kProjective);
  LineEmbedding L(F3, {1, 0, 1}, {1, 1, 0});
  const auto p1 = projective_line_points(*F3);
  const auto img = L.image(s);
  const auto w = L.weight_vector(1);
  // The worked example lists P^1 as (1:1), (1:2), (1:0), (0:1) with weights (2, 2, 1, 1).
  const std::map<Point, Elem> expect_w = {
      {{1, 1}, 2}, {{1, 2}, 2}, {{1, 0}, 1}, {{0, 1}, 1}};
  const std::map<Point, Point> expect_img = {{{1, 1}, {1, 2, 2}},
                                             {{1, 2}, {0, 1, 2}},
                                             {{1, 0}, {1, 0, 1}},
                                             {{0, 1}, {1, 1, 0}}};
  for (std::size_t i = 0; i < p1.size(); ++i) {
    EXPECT_EQ(w[i], expect_w.at(p1[i]));
    EXPECT_EQ(s.point(img[i]), expect_img.at(p1[i]));
  }
  EXPECT_THROW(LineEmbedding(F3, {1, 0, 1}, {2, 0, 2}), std::invalid_argument);
  EXPECT_THROW(L.weight_vector(0), std::invalid_argument);
}

TEST(Geometry, StandardPreservingEmbeddingHasUnitWeights) {
  auto F = make_field(4);
  LineEmbedding L(F, {1, 0, 0}, {0, 1, 0});
  for (int v : {1, 2, 5})
    for (Elem x : L.weight_vector(v)) EXPECT_EQ(x, 1u);
}

TEST(Geometry, WeightVectorMakesRestrictionASubword) {
  auto F = make_field(4);
  Support s(F, 2, Space::kProjective);
  Rng rng(3);
  const auto p1 = projective_line_points(*F);
  for (int trial = 0; trial < 50; ++trial) {
    const int v = 1 + static_cast<int>(uniform_below(rng, 7));
    const auto monos = p_reduced_tuples(2, v, 4);
    std::vector<Elem> coef(monos.size());
    for (auto& c : coef) c = uniform_below(rng, 4);
    auto f = [&](const Point& x) {
      Elem r = 0;
      for (std::size_t i = 0; i < monos.size(); ++i)
        r = F->add(r, F->mul(coef[i], monomial_value(*F, monos[i], x)));
      return r;
    };
    const std::size_t P = uniform_below(rng, s.size());
    auto L = random_embedding_through(F, s.point(P), rng);
    const auto img = L.image(s);
    const auto w = L.weight_vector(v);
    EXPECT_EQ(img.back(), P);
    for (std::size_t i = 0; i < p1.size(); ++i)
      EXPECT_EQ(f(s.point(img[i])), F->mul(w[i], f(L.apply(p1[i][0], p1[i][1]))));
  }
}

TEST(Geometry, RandomEmbeddingCoversLinesUniformly) {
  auto F3 = make_field(3);
  Support s(F3, 2, Space::kProjective);
  const std::size_t P = 5;
  const auto lines = lines_through(s, P);
  std::map<std::vector<std::size_t>, int> counts;
  Rng rng(2024);
  const int draws = 20000;
  for (int i = 0; i < draws; ++i) {
    auto img = random_embedding_through(F3, s.point(P), rng).image(s);
    EXPECT_EQ(img.back(), P);
    std::sort(img.begin(), img.end());
    counts[img]++;
  }
  ASSERT_EQ(counts.size(), lines.size());
  double chi2 = 0;
  const double expect = static_cast<double>(draws) / lines.size();
  for (const auto& line : lines) {
    const double d = counts[line] - expect;
    chi2 += d * d / expect;
  }
  boost::math::chi_squared dist(lines.size() - 1);
  EXPECT_GT(boost::math::cdf(boost::math::complement(dist, chi2)), 1e-3);
}

TEST(Geometry, EmbeddingImageHasQPlusOnePoints) {
  auto F = make_field(5);
  Support s(F, 3, Space::kProjective);
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    auto L = random_embedding_through(F, s.point(uniform_below(rng, s.size())), rng);
    auto img = L.image(s);
    std::sort(img.begin(), img.end());
    EXPECT_EQ(std::unique(img.begin(), img.end()) - img.begin(), 6);
    const auto [a, b] = L.affine_part();
    EXPECT_EQ(a.size(), 3u);
    EXPECT_EQ(b.size(), 3u);
  }
}

}  // namespace
}  // namespace plift
