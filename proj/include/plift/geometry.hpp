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


// Affine and projective spaces over F_q, lines, and rank-2 line embeddings.
//
// Projective support order: points are grouped in charts by the position of
// their leading 1, chart (1:*:...:*) first and (0:...:0:1) last. Inside a
// chart the free coordinates are ordered lexicographically by element index,
// leftmost coordinate most significant. The first q^m projective positions
// therefore list the affine chart in the same order as the affine support,
// and the remaining positions list the hyperplane at infinity in the order
// of P^{m-1}.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "plift/gf.hpp"
#include "plift/rng.hpp"

namespace plift {

using Point = std::vector<Elem>;

enum class Space { kAffine, kProjective };

// theta(m, q) = |P^m(F_q)| = (q^{m+1} - 1) / (q - 1).
std::size_t theta(int m, std::size_t q);
std::size_t ipow(std::size_t base, int e);

// Scales a nonzero vector so that its leftmost nonzero entry is 1. Returns the
// standard representative and the scalar lambda with point = lambda * v.
// Throws std::invalid_argument for the zero vector.
std::pair<Point, Elem> standardize(const FiniteField& F,
                                   std::span<const Elem> v);

// True when a and b span a 2-dimensional subspace.
bool independent(const FiniteField& F, std::span<const Elem> a,
                 std::span<const Elem> b);

class Support {
 public:
  Support(FieldPtr field, int m, Space space);

  const FiniteField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int m() const { return m_; }
  Space space() const { return space_; }
  // Number of coordinates per point: m (affine) or m + 1 (projective).
  int arity() const { return space_ == Space::kAffine ? m_ : m_ + 1; }

  std::size_t size() const { return points_.size(); }
  const Point& point(std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

  // Position of a point given in standard form (projective) or as plain
  // coordinates (affine). Throws std::invalid_argument when the input is not
  // a point of this support.
  std::size_t index_of(std::span<const Elem> x) const;
  // Position of the point spanned by a nonzero vector (projective only).
  std::size_t index_of_vector(std::span<const Elem> v) const;

  std::string format(std::size_t i) const;
  // Parses "(a0:...:am)" in either element notation; projective input is
  // standardized.
  std::size_t parse(std::string_view text) const;

 private:
  FieldPtr field_;
  int m_;
  Space space_;
  std::vector<Point> points_;
};

// Lines through point index p, each as a sorted list of q + 1 point indices.
// Lines are listed in order of their smallest point other than p.
std::vector<std::vector<std::size_t>> lines_through(const Support& s,
                                                    std::size_t p);
// Every line of P^m, each sorted, in lexicographic order.
std::vector<std::vector<std::size_t>> all_lines(const Support& s);

// Rank-2 linear map L : F_q^2 -> F_q^{m+1}, stored by its columns
// a = L(1,0) and b = L(0,1).
class LineEmbedding {
 public:
  // Throws std::invalid_argument unless the columns are independent.
  LineEmbedding(FieldPtr field, Point a, Point b);

  const FiniteField& field() const { return *field_; }
  int m() const { return static_cast<int>(a_.size()) - 1; }
  const Point& col0() const { return a_; }
  const Point& col1() const { return b_; }

  // L(x0, x1) as a raw vector.
  Point apply(Elem x0, Elem x1) const;

  // Affine part L*: the columns with their first coordinate dropped.
  std::pair<Point, Point> affine_part() const;

  // For each point x of P^1 in support order, the scalar lambda_{L,x} with
  // standardize(L(x)) = lambda_{L,x} * L(x).
  std::vector<Elem> lambdas() const;
  // Support positions of standardize(L(x)), x in P^1 order.
  std::vector<std::size_t> image(const Support& pm) const;
  // Entries lambda_{L,x}^v, v >= 1.
  std::vector<Elem> weight_vector(int v) const;

 private:
  FieldPtr field_;
  Point a_, b_;
};

// Uniform element of Emb_P(m, P): second column equals the standard
// representative P, first column uniform outside span(P).
LineEmbedding random_embedding_through(const FieldPtr& field,
                                       std::span<const Elem> P, Rng& rng);

// P^1(F_q) in support order: (1:0), (1:1), ..., (1:q-1) by element index,
// then (0:1).
std::vector<Point> projective_line_points(const FiniteField& F);

}  // namespace plift
