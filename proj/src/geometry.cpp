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


#include "plift/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace plift {

std::size_t ipow(std::size_t base, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

std::size_t theta(int m, std::size_t q) {
  std::size_t s = 0;
  for (int i = 0; i <= m; ++i) s += ipow(q, i);
  return s;
}

std::pair<Point, Elem> standardize(const FiniteField& F,
                                   std::span<const Elem> v) {
  auto lead = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
  if (lead == v.end())
    throw std::invalid_argument("zero vector has no projective point");
  const Elem lambda = F.inv(*lead);
  Point p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = F.mul(lambda, v[i]);
  return {std::move(p), lambda};
}

bool independent(const FiniteField& F, std::span<const Elem> a,
                 std::span<const Elem> b) {
  auto lead = std::find_if(b.begin(), b.end(), [](Elem x) { return x != 0; });
  if (lead == b.end()) return false;
  const std::size_t j = lead - b.begin();
  const Elem c = F.div(a[j], b[j]);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != F.mul(c, b[i])) return true;
  return false;
}

Support::Support(FieldPtr field, int m, Space space)
    : field_(std::move(field)), m_(m), space_(space) {
  if (m < 1) throw std::invalid_argument("dimension m must be >= 1");
  const std::size_t q = field_->order();
  if (space == Space::kAffine) {
    const std::size_t n = ipow(q, m);
    points_.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
      Point p(m);
      std::size_t x = r;
      for (int j = m - 1; j >= 0; --j) {
        p[j] = static_cast<Elem>(x % q);
        x /= q;
      }
      points_.push_back(std::move(p));
    }
    return;
  }
  points_.reserve(theta(m, q));
  for (int lead = 0; lead <= m; ++lead) {
    const std::size_t chart = ipow(q, m - lead);
    for (std::size_t r = 0; r < chart; ++r) {
      Point p(m + 1, 0);
      p[lead] = 1;
      std::size_t x = r;
      for (int j = m; j > lead; --j) {
        p[j] = static_cast<Elem>(x % q);
        x /= q;
      }
      points_.push_back(std::move(p));
    }
  }
}

std::size_t Support::index_of(std::span<const Elem> x) const {
  const std::size_t q = field_->order();
  if (static_cast<int>(x.size()) != arity())
    throw std::invalid_argument("point has wrong number of coordinates");
  for (Elem c : x)
    if (c >= q) throw std::invalid_argument("coordinate out of range");
  if (space_ == Space::kAffine) {
    std::size_t r = 0;
    for (Elem c : x) r = r * q + c;
    return r;
  }
  int lead = 0;
  while (lead <= m_ && x[lead] == 0) ++lead;
  if (lead > m_ || x[lead] != 1)
    throw std::invalid_argument("point is not in standard form");
  std::size_t start = 0;
  for (int l = 0; l < lead; ++l) start += ipow(q, m_ - l);
  std::size_t r = 0;
  for (int j = lead + 1; j <= m_; ++j) r = r * q + x[j];
  return start + r;
}

std::size_t Support::index_of_vector(std::span<const Elem> v) const {
  if (space_ != Space::kProjective)
    throw std::invalid_argument("index_of_vector needs a projective support");
  return index_of(standardize(*field_, v).first);
}

std::string Support::format(std::size_t i) const {
  std::ostringstream os;
  os << '(';
  const Point& p = points_.at(i);
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j) os << ':';
    os << field_->format(p[j]);
  }
  os << ')';
  return os.str();
}

std::size_t Support::parse(std::string_view text) const {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw std::invalid_argument("malformed point '" + std::string(text) + "'");
  text = text.substr(1, text.size() - 2);
  Point p;
  while (true) {
    const auto colon = text.find(':');
    p.push_back(field_->parse(text.substr(0, colon)));
    if (colon == std::string_view::npos) break;
    text.remove_prefix(colon + 1);
  }
  if (space_ == Space::kProjective) {
    if (static_cast<int>(p.size()) != arity())
      throw std::invalid_argument("point has wrong number of coordinates");
    return index_of_vector(p);
  }
  return index_of(p);
}

std::vector<std::vector<std::size_t>> lines_through(const Support& s,
                                                    std::size_t p) {
  if (s.space() != Space::kProjective)
    throw std::invalid_argument("lines_through needs a projective support");
  const FiniteField& F = s.field();
  const std::size_t q = F.order();
  const Point& P = s.point(p);
  std::vector<bool> covered(s.size(), false);
  covered[p] = true;
  std::vector<std::vector<std::size_t>> lines;
  Point v(P.size());
  for (std::size_t qi = 0; qi < s.size(); ++qi) {
    if (covered[qi]) continue;
    const Point& Q = s.point(qi);
    std::vector<std::size_t> line{p};
    for (Elem a = 0; a < q; ++a) {
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = F.add(Q[j], F.mul(a, P[j]));
      const std::size_t idx = s.index_of_vector(v);
      covered[idx] = true;
      line.push_back(idx);
    }
    std::sort(line.begin(), line.end());
    lines.push_back(std::move(line));
  }
  return lines;
}

std::vector<std::vector<std::size_t>> all_lines(const Support& s) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t p = 0; p < s.size(); ++p)
    for (auto& line : lines_through(s, p))
      if (line.front() == p) out.push_back(std::move(line));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> projective_line_points(const FiniteField& F) {
  std::vector<Point> out;
  for (Elem x = 0; x < F.order(); ++x) out.push_back({1, x});
  out.push_back({0, 1});
  return out;
}

LineEmbedding::LineEmbedding(FieldPtr field, Point a, Point b)
    : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != b_.size() || a_.size() < 2)
    throw std::invalid_argument("embedding columns must have equal length >= 2");
  if (!independent(*field_, a_, b_))
    throw std::invalid_argument("embedding must have rank 2");
}

Point LineEmbedding::apply(Elem x0, Elem x1) const {
  const FiniteField& F = *field_;
  Point out(a_.size());
  for (std::size_t i = 0; i < a_.size(); ++i)
    out[i] = F.add(F.mul(x0, a_[i]), F.mul(x1, b_[i]));
  return out;
}

std::pair<Point, Point> LineEmbedding::affine_part() const {
  return {Point(a_.begin() + 1, a_.end()), Point(b_.begin() + 1, b_.end())};
}

std::vector<Elem> LineEmbedding::lambdas() const {
  std::vector<Elem> out;
  for (const auto& x : projective_line_points(*field_))
    out.push_back(standardize(*field_, apply(x[0], x[1])).second);
  return out;
}

std::vector<std::size_t> LineEmbedding::image(const Support& pm) const {
  std::vector<std::size_t> out;
  for (const auto& x : projective_line_points(*field_))
    out.push_back(pm.index_of_vector(apply(x[0], x[1])));
  return out;
}

std::vector<Elem> LineEmbedding::weight_vector(int v) const {
  if (v < 1) throw std::invalid_argument("weight degree must be >= 1");
  auto out = lambdas();
  for (auto& l : out) l = field_->pow(l, v);
  return out;
}

LineEmbedding random_embedding_through(const FieldPtr& field,
                                       std::span<const Elem> P, Rng& rng) {
  const FiniteField& F = *field;
  const std::size_t q = F.order();
  Point b(P.begin(), P.end());
  Point a(P.size());
  do {
    for (auto& x : a) x = static_cast<Elem>(uniform_below(rng, q));
  } while (!independent(F, a, b));
  return LineEmbedding(field, std::move(a), std::move(b));
}

}  // namespace plift
