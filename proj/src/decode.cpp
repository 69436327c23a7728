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


#include "plift/decode.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace plift {

namespace {

// Value at (1 : x) of sum_j c_j X^{D-j} Y^j.
Elem eval_affine(const FiniteField& F, std::span<const Elem> c, Elem x) {
  Elem r = 0;
  for (std::size_t j = c.size(); j-- > 0;) r = F.add(F.mul(r, x), c[j]);
  return r;
}

int degree_of(std::span<const Elem> p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d >= 0 && p[d] == 0) --d;
  return d;
}

// Long division; returns nullopt unless the remainder vanishes.
std::optional<std::vector<Elem>> exact_quotient(const FiniteField& F,
                                                std::vector<Elem> num,
                                                std::span<const Elem> den) {
  const int dd = degree_of(den);
  if (dd < 0) return std::nullopt;
  const int dn = degree_of(num);
  if (dn < dd) {
    if (dn >= 0) return std::nullopt;
    return std::vector<Elem>{};
  }
  std::vector<Elem> quo(dn - dd + 1, 0);
  const Elem lead_inv = F.inv(den[dd]);
  for (int i = dn; i >= dd; --i) {
    const Elem c = F.mul(num[i], lead_inv);
    quo[i - dd] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j)
      num[i - dd + j] = F.sub(num[i - dd + j], F.mul(c, den[j]));
  }
  if (degree_of(num) >= 0) return std::nullopt;
  return quo;
}

// Uniform size-`count` subset of {0, ..., n-1} by partial Fisher-Yates.
std::vector<std::size_t> uniform_subset(std::size_t n, std::size_t count,
                                        Rng& rng) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t i = 0; i < count; ++i)
    std::swap(pool[i], pool[i + uniform_below(rng, n - i)]);
  pool.resize(count);
  return pool;
}

// An embedding of the line through P (support index) whose weight vector is
// all ones, with the P^1 position of P.
std::pair<LineEmbedding, std::size_t> unit_embedding(
    const Support& pm, std::size_t P, std::span<const std::size_t> line) {
  const FieldPtr& field = pm.field_ptr();
  const FiniteField& F = *field;
  auto lead = [](const Point& x) {
    return std::find_if(x.begin(), x.end(), [](Elem c) { return c != 0; }) -
           x.begin();
  };
  const Point& p = pm.point(P);
  const auto ip = lead(p);
  const Point* best = nullptr;
  for (auto i : line) {
    if (i == P) continue;
    const Point& x = pm.point(i);
    if (lead(x) < ip && (!best || lead(x) < lead(*best))) best = &x;
  }
  if (best) return {LineEmbedding(field, *best, p), F.order()};
  const std::size_t other = line[0] == P ? line[1] : line[0];
  Point b = pm.point(other);
  const Elem c = b[ip];
  for (std::size_t j = 0; j < b.size(); ++j) b[j] = F.sub(b[j], F.mul(c, p[j]));
  return {LineEmbedding(field, p, standardize(F, b).first), 0};
}

}  // namespace

std::optional<std::vector<Elem>> prs_decode(const FieldPtr& field,
                                            std::span<const Symbol> y, int k) {
  const FiniteField& F = *field;
  const std::size_t q = F.order();
  if (y.size() != q + 1)
    throw std::invalid_argument("received word must have length q+1");
  if (k < 0 || static_cast<std::size_t>(k) > q)
    throw std::invalid_argument("k outside 0 <= k <= q");
  const int s = static_cast<int>(
      std::count_if(y.begin(), y.end(), [](const Symbol& x) { return x.has_value(); }));
  if (s < k + 1)
    throw std::invalid_argument("need at least k+1 = " + std::to_string(k + 1) +
                                " non-erased positions, got " + std::to_string(s));
  const int t = (s - k - 1) / 2;

  // Unknowns: E (degree t, t+1 coefficients) then N (degree k+t).
  const std::size_t ne = t + 1, nn = k + t + 1;
  Matrix A(0, ne + nn);
  std::vector<Elem> row(ne + nn);
  for (std::size_t i = 0; i <= q; ++i) {
    if (!y[i]) continue;
    const Elem r = *y[i];
    std::fill(row.begin(), row.end(), 0);
    if (i < q) {
      const Elem x = static_cast<Elem>(i);
      Elem xp = 1;
      for (std::size_t j = 0; j < nn; ++j) {
        if (j < ne) row[j] = F.neg(F.mul(r, xp));
        row[ne + j] = xp;
        xp = F.mul(xp, x);
      }
    } else {
      row[ne - 1] = F.neg(r);
      row[ne + nn - 1] = 1;
    }
    A.append_row(row);
  }
  const Matrix kernel = nullspace(F, A);
  if (kernel.rows() == 0) return std::nullopt;
  const auto sol = kernel.row(0);
  std::vector<Elem> e(sol.begin(), sol.begin() + ne);
  std::vector<Elem> n(sol.begin() + ne, sol.end());
  auto f = exact_quotient(F, std::move(n), e);
  if (!f || degree_of(*f) > k) return std::nullopt;
  f->resize(k + 1, 0);

  std::vector<Elem> c(q + 1);
  for (std::size_t i = 0; i < q; ++i) c[i] = eval_affine(F, *f, static_cast<Elem>(i));
  c[q] = (*f)[k];
  int dist = 0;
  for (std::size_t i = 0; i <= q; ++i)
    if (y[i] && *y[i] != c[i]) ++dist;
  if (dist > t) return std::nullopt;
  return c;
}

void validate(const CorrectionConfig& cfg, const MonomialCode& code) {
  if (code.kind() != CodeKind::kPLift && code.kind() != CodeKind::kPRM &&
      code.kind() != CodeKind::kPRS)
    throw std::invalid_argument("local correction needs a projective code");
  const int q = code.q();
  if (cfg.s < code.k() + 1 || cfg.s > q)
    throw std::invalid_argument("s = " + std::to_string(cfg.s) +
                                " outside k+1 <= s <= q (k = " +
                                std::to_string(code.k()) + ", q = " +
                                std::to_string(q) + ")");
  if (!(cfg.delta >= 0.0 && cfg.delta <= 1.0))
    throw std::invalid_argument("delta outside [0, 1]");
}

double delta_max(int s, int t) { return (t + 1.0) / (2.0 * s); }

double success_lower_bound(double delta, int s, int t) {
  return 1.0 - delta * s / (t + 1.0);
}

std::vector<std::size_t> query_gen(const Support& pm, const LineEmbedding& L,
                                   int s, Rng& rng) {
  const std::size_t q = pm.field().order();
  if (s < 1 || static_cast<std::size_t>(s) > q)
    throw std::invalid_argument("query count s = " + std::to_string(s) +
                                " outside 1 <= s <= q");
  const auto img = L.image(pm);
  const bool with_p = bernoulli(rng, s, pm.size());
  auto pos = uniform_subset(q, with_p ? s - 1 : s, rng);
  if (with_p) pos.push_back(q);
  std::sort(pos.begin(), pos.end());
  std::vector<std::size_t> out;
  for (auto i : pos) out.push_back(img[i]);
  return out;
}

std::vector<std::size_t> sample_queries(const Support& pm, std::size_t P, int s,
                                        Rng& rng) {
  const auto L = random_embedding_through(pm.field_ptr(), pm.point(P), rng);
  return query_gen(pm, L, s, rng);
}

Symbol local_correct(const WordOracle& read, std::size_t P,
                     const MonomialCode& code, const CorrectionConfig& cfg,
                     Rng& rng) {
  validate(cfg, code);
  const Support& pm = code.support();
  const FiniteField& F = code.field();
  const std::size_t q = F.order();
  const auto L = random_embedding_through(code.field_ptr(), pm.point(P), rng);
  const auto S = query_gen(pm, L, cfg.s, rng);
  auto img = L.image(pm);
  std::vector<Elem> w(q + 1, 1);
  std::size_t target = q;
  if (cfg.unit_weights) {
    const auto [U, at] = unit_embedding(pm, P, img);
    img = U.image(pm);
    target = at;
  } else if (code.v() > 0) {
    w = L.weight_vector(code.v());
  }
  std::vector<Symbol> y(q + 1);
  for (auto idx : S) {
    const std::size_t pos = std::find(img.begin(), img.end(), idx) - img.begin();
    if (auto r = read(idx)) y[pos] = F.div(*r, w[pos]);
  }
  const auto non_erased = std::count_if(y.begin(), y.end(),
                                        [](const Symbol& x) { return x.has_value(); });
  if (non_erased < code.k() + 1) return std::nullopt;
  const auto dec = prs_decode(code.field_ptr(), y, code.k());
  if (!dec) return std::nullopt;
  return (*dec)[target];
}

std::vector<std::size_t> corrupt(std::vector<Elem>& word, const FiniteField& F,
                                 double delta, Rng& rng) {
  if (!(delta >= 0.0 && delta <= 1.0))
    throw std::invalid_argument("delta outside [0, 1]");
  const auto count =
      static_cast<std::size_t>(std::floor(delta * static_cast<double>(word.size())));
  auto where = uniform_subset(word.size(), count, rng);
  const Elem q = F.order();
  for (auto i : where) {
    const Elem r = static_cast<Elem>(uniform_below(rng, q - 1));
    word[i] = r < word[i] ? r : r + 1;
  }
  return where;
}

void ExperimentReport::merge(const ExperimentReport& o) {
  trials += o.trials;
  successes += o.successes;
  wrong += o.wrong;
  erasures += o.erasures;
  if (histogram.size() < o.histogram.size()) histogram.resize(o.histogram.size(), 0);
  for (std::size_t i = 0; i < o.histogram.size(); ++i) histogram[i] += o.histogram[i];
}

ExperimentReport mc_experiment(const MonomialCode& code,
                               const CorrectionConfig& cfg,
                               std::uint64_t trials) {
  validate(cfg, code);
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const std::size_t n = code.length();
  const Elem q = code.field().order();
  ExperimentReport rep;
  rep.histogram.assign(n, 0);
  std::vector<Elem> msg(code.dim());
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Rng rng = substream(cfg.seed, trial);
    for (auto& x : msg) x = static_cast<Elem>(uniform_below(rng, q));
    const auto c = code.encode(msg);
    auto y = c;
    corrupt(y, code.field(), cfg.delta, rng);
    const std::size_t P = uniform_below(rng, n);
    const WordOracle read = [&](std::size_t i) -> Symbol {
      ++rep.histogram[i];
      return y[i];
    };
    const auto r = local_correct(read, P, code, cfg, rng);
    ++rep.trials;
    if (!r)
      ++rep.erasures;
    else if (*r == c[P])
      ++rep.successes;
    else
      ++rep.wrong;
  }
  return rep;
}

}  // namespace plift
