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


#include "plift/degrees.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace plift {

namespace {

int prime_of(int q) {
  const auto pt = prime_power(q);
  if (!pt) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return pt->first;
}

// All e with e <=_p d, ascending.
std::vector<int> submasks(int d, int p) {
  std::vector<int> out{0};
  int scale = 1;
  while (d > 0) {
    const int digit = d % p;
    const std::size_t n = out.size();
    for (int c = 1; c <= digit; ++c)
      for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] + c * scale);
    d /= p;
    scale *= p;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Residues mod (q-1) of the nonzero sums |e| over the coordinates seen so
// far. A nonzero sum s has int_reduce(s) = s mod (q-1), read as q-1 when the
// residue is 0.
struct Residues {
  std::vector<char> hit;

  explicit Residues(int q) : hit(q - 1, 0) {}

  Residues extend(const std::vector<int>& shadows, int q) const {
    const int r = q - 1;
    Residues out = *this;
    for (int e : shadows) {
      if (e == 0) continue;
      out.hit[e % r] = 1;
      for (int s = 0; s < r; ++s)
        if (hit[s]) out.hit[(s + e) % r] = 1;
    }
    return out;
  }

  bool within(int k, int q) const {
    for (int s = 0; s < q - 1; ++s)
      if (hit[s] && (s == 0 ? q - 1 : s) > k) return false;
    return true;
  }
};

void adeg_dfs(int m, int k, int q, const std::vector<std::vector<int>>& shadows,
              Degree& cur, const Residues& state, std::vector<Degree>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  for (int x = 0; x < q; ++x) {
    Residues next = state.extend(shadows[x], q);
    if (!next.within(k, q)) continue;
    cur.push_back(x);
    adeg_dfs(m, k, q, shadows, cur, next, out);
    cur.pop_back();
  }
}

void check_lift_k(int k, int q) {
  if (k < 0 || k > q - 2)
    throw std::invalid_argument("k = " + std::to_string(k) +
                                " outside 0 <= k <= q-2 for affine lifting");
}

void check_plift_k(int k, int q) {
  if (k < 1 || k > q - 1)
    throw std::invalid_argument("k = " + std::to_string(k) +
                                " outside 1 <= k <= q-1 for projective lifting");
}

void check_m(int m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
}

// Calls f on every vector of length len with entries in [0, q-1], in
// lexicographic order.
template <class F>
void for_each_box(int len, int q, F&& f) {
  Degree d(len, 0);
  while (true) {
    f(d);
    int i = len - 1;
    while (i >= 0 && ++d[i] == q) d[i--] = 0;
    if (i < 0) return;
  }
}

}  // namespace

bool DegreeSet::contains(std::span<const int> d) const {
  Degree key(d.begin(), d.end());
  return std::binary_search(tuples.begin(), tuples.end(), key);
}

std::string DegreeSet::to_json() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < tuples[i].size(); ++j) {
      if (j) os << ',';
      os << tuples[i][j];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

bool p_adic_leq(std::int64_t a, std::int64_t b, int p) {
  while (a > 0 || b > 0) {
    if (a % p > b % p) return false;
    a /= p;
    b /= p;
  }
  return true;
}

bool p_adic_leq(std::span<const int> a, std::span<const int> b, int p) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!p_adic_leq(a[i], b[i], p)) return false;
  return true;
}

std::int64_t int_reduce(std::int64_t e, int q) {
  if (e <= q - 1) return e;
  return (e - 1) % (q - 1) + 1;
}

Degree a_reduce(std::span<const int> d, int q) {
  Degree out(d.begin(), d.end());
  for (auto& x : out) x = static_cast<int>(int_reduce(x, q));
  return out;
}

Degree p_reduce(std::span<const int> d, int q) {
  Degree out(d.begin(), d.end());
  auto lead = std::find_if(out.begin(), out.end(), [](int x) { return x != 0; });
  if (lead == out.end()) return out;
  for (auto it = out.end() - 1; it != lead; --it) {
    const int r = static_cast<int>(int_reduce(*it, q));
    *lead += *it - r;
    *it = r;
  }
  return out;
}

bool is_a_reduced(std::span<const int> d, int q) {
  return std::all_of(d.begin(), d.end(),
                     [q](int x) { return x >= 0 && x <= q - 1; });
}

bool is_p_reduced(std::span<const int> d, int q) {
  auto lead = std::find_if(d.begin(), d.end(), [](int x) { return x != 0; });
  if (lead == d.end()) return true;
  return std::all_of(lead + 1, d.end(), [q](int x) { return x <= q - 1; });
}

bool apply_rho(Degree& d, int j, int q) {
  if (d[j] < q) return false;
  d[j] -= q - 1;
  return true;
}

bool apply_tau(Degree& d, int i, int j, int q) {
  if (!(i < j) || d[j] < q || d[i] < 1) return false;
  d[j] -= q - 1;
  d[i] += q - 1;
  return true;
}

int projective_degree(int m, int k, int q) { return k + (m - 1) * (q - 1); }

bool in_adeg(std::span<const int> d, int k, int q) {
  if (!is_a_reduced(d, q)) return false;
  const int p = prime_of(q);
  Residues state(q);
  for (int x : d) {
    state = state.extend(submasks(x, p), q);
    if (!state.within(k, q)) return false;
  }
  return true;
}

DegreeSet adeg(int m, int k, int q) {
  check_m(m);
  check_lift_k(k, q);
  const int p = prime_of(q);
  std::vector<std::vector<int>> shadows(q);
  for (int x = 0; x < q; ++x) shadows[x] = submasks(x, p);
  DegreeSet out{Space::kAffine, q, m, k, 0, {}};
  Degree cur;
  adeg_dfs(m, k, q, shadows, cur, Residues(q), out.tuples);
  return out;
}

DegreeSet pdeg(int m, int k, int q) {
  check_m(m);
  check_plift_k(k, q);
  const int v = projective_degree(m, k, q);
  DegreeSet out{Space::kProjective, q, m, k, v, {}};
  if (m == 1) {
    for (int j = 0; j <= k; ++j) out.tuples.push_back({k - j, j});
  } else {
    for (const auto& ds : adeg(m, k - 1, q).tuples) {
      const int w = std::accumulate(ds.begin(), ds.end(), 0);
      if (v - w < 1) throw std::logic_error("affine part exceeds projective degree");
      Degree d{v - w};
      d.insert(d.end(), ds.begin(), ds.end());
      out.tuples.push_back(std::move(d));
    }
    for (auto d : pdeg(m - 1, k, q).tuples) {
      auto lead = std::find_if(d.begin(), d.end(), [](int x) { return x != 0; });
      *lead += q - 1;
      d.insert(d.begin(), 0);
      out.tuples.push_back(std::move(d));
    }
  }
  std::sort(out.tuples.begin(), out.tuples.end());
  return out;
}

DegreeSet pdeg_direct(int m, int k, int q) {
  check_m(m);
  check_plift_k(k, q);
  const int p = prime_of(q);
  const int v = projective_degree(m, k, q);
  DegreeSet out{Space::kProjective, q, m, k, v, {}};
  for (int lead = 0; lead <= m; ++lead) {
    for_each_box(m - lead, q, [&](const Degree& eta) {
      const int w = std::accumulate(eta.begin(), eta.end(), 0);
      if (v - w < 1) return;
      // Enumerate every e <=_p eta.
      std::vector<std::vector<int>> sh;
      for (int x : eta) sh.push_back(submasks(x, p));
      std::vector<std::size_t> idx(eta.size(), 0);
      while (true) {
        int s = 0;
        for (std::size_t i = 0; i < eta.size(); ++i) s += sh[i][idx[i]];
        if (int_reduce(s, q) > k - 1) return;
        std::size_t i = 0;
        while (i < eta.size() && ++idx[i] == sh[i].size()) idx[i++] = 0;
        if (i == eta.size()) break;
      }
      Degree d(lead, 0);
      d.push_back(v - w);
      d.insert(d.end(), eta.begin(), eta.end());
      out.tuples.push_back(std::move(d));
    });
  }
  std::sort(out.tuples.begin(), out.tuples.end());
  return out;
}

std::vector<Degree> a_reduced_tuples(int m, int q) {
  std::vector<Degree> out;
  for_each_box(m, q, [&](const Degree& d) { out.push_back(d); });
  return out;
}

std::vector<Degree> p_reduced_tuples(int m, int v, int q) {
  std::vector<Degree> out;
  if (v == 0) {
    out.push_back(Degree(m + 1, 0));
    return out;
  }
  for (int lead = 0; lead <= m; ++lead) {
    for_each_box(m - lead, q, [&](const Degree& eta) {
      const int w = std::accumulate(eta.begin(), eta.end(), 0);
      if (v - w < 1) return;
      Degree d(lead, 0);
      d.push_back(v - w);
      d.insert(d.end(), eta.begin(), eta.end());
      out.push_back(std::move(d));
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

DegreeSet rs_degrees(int k, int q) {
  if (k < 0 || k > q - 1)
    throw std::invalid_argument("k outside 0 <= k <= q-1 for Reed-Solomon");
  DegreeSet out{Space::kAffine, q, 1, k, 0, {}};
  for (int j = 0; j <= k; ++j) out.tuples.push_back({j});
  return out;
}

DegreeSet prs_degrees(int k, int q) {
  if (k < 0 || k > q)
    throw std::invalid_argument("k outside 0 <= k <= q for projective Reed-Solomon");
  return {Space::kProjective, q, 1, k, k, p_reduced_tuples(1, k, q)};
}

DegreeSet rm_degrees(int m, int k, int q) {
  check_m(m);
  if (k < 0 || k > m * (q - 1))
    throw std::invalid_argument("k outside 0 <= k <= m(q-1) for Reed-Muller");
  DegreeSet out{Space::kAffine, q, m, k, 0, {}};
  for_each_box(m, q, [&](const Degree& d) {
    if (std::accumulate(d.begin(), d.end(), 0) <= k) out.tuples.push_back(d);
  });
  return out;
}

DegreeSet prm_degrees(int m, int k, int q) {
  check_m(m);
  if (k < 0 || k > m * (q - 1) + 1)
    throw std::invalid_argument(
        "k outside 0 <= k <= m(q-1)+1 for projective Reed-Muller");
  return {Space::kProjective, q, m, k, k, p_reduced_tuples(m, k, q)};
}

Elem monomial_value(const FiniteField& F, std::span<const int> d,
                    std::span<const Elem> x) {
  Elem r = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    if (x[i] == 0) return 0;
    r = F.mul(r, F.pow(x[i], d[i]));
  }
  return r;
}

namespace {

// Coefficients of the reduced univariate interpolant of values g(t), t in
// element order: c_j = -sum_t g(t) t^{q-1-j} for 1 <= j <= q-1, c_0 = g(0).
std::vector<Elem> interpolate(const FiniteField& F, std::span<const Elem> g) {
  const Elem q = F.order();
  std::vector<Elem> c(q, 0);
  c[0] = g[0];
  for (Elem j = 1; j < q; ++j) {
    Elem s = 0;
    for (Elem t = 0; t < q; ++t) s = F.add(s, F.mul(g[t], F.pow(t, q - 1 - j)));
    c[j] = F.neg(s);
  }
  return c;
}

bool in_rs(const FiniteField& F, std::span<const Elem> g, int k) {
  const auto c = interpolate(F, g);
  for (std::size_t j = k + 1; j < c.size(); ++j)
    if (c[j] != 0) return false;
  return true;
}

// w indexed by P^1 support order: (1:t) for t in element order, then (0:1).
bool in_prs(const FiniteField& F, std::span<const Elem> w, int k) {
  const Elem q = F.order();
  const auto c = interpolate(F, w.first(q));
  for (std::size_t j = k + 1; j < c.size(); ++j)
    if (c[j] != 0) return false;
  const Elem top = static_cast<Elem>(k) < q ? c[k] : 0;
  return w[q] == top;
}

bool line_ok(const FiniteField& F, std::span<const int> d, int k,
             const LineEmbedding& L) {
  std::vector<Elem> w;
  for (const auto& x : projective_line_points(F))
    w.push_back(monomial_value(F, d, L.apply(x[0], x[1])));
  return in_prs(F, w, k);
}

}  // namespace

bool monomial_membership_oracle(const FieldPtr& field, std::span<const int> d,
                                int k, Space space, bool exhaustive) {
  const FiniteField& F = *field;
  const Elem q = F.order();
  if (space == Space::kAffine) {
    const int m = static_cast<int>(d.size());
    // One direction per parallel class: the standard points of P^{m-1}.
    std::vector<Point> dirs{Point{1}};
    if (m > 1) dirs = Support(field, m - 1, Space::kProjective).points();
    std::vector<Elem> g(q);
    Point x(m);
    const Support am(field, m, Space::kAffine);
    for (const auto& a : am.points()) {
      for (const auto& b : dirs) {
        for (Elem t = 0; t < q; ++t) {
          for (int i = 0; i < m; ++i) x[i] = F.add(a[i], F.mul(t, b[i]));
          g[t] = monomial_value(F, d, x);
        }
        if (!in_rs(F, g, k)) return false;
      }
    }
    return true;
  }
  const int m = static_cast<int>(d.size()) - 1;
  Support pm(field, m, Space::kProjective);
  if (!exhaustive) {
    for (const auto& line : all_lines(pm)) {
      LineEmbedding L(field, pm.point(line[0]), pm.point(line[1]));
      if (!line_ok(F, d, k, L)) return false;
    }
    return true;
  }
  const auto vectors = Support(field, m + 1, Space::kAffine).points();
  for (const auto& a : vectors)
    for (const auto& b : vectors) {
      if (!independent(F, a, b)) continue;
      if (!line_ok(F, d, k, LineEmbedding(field, a, b))) return false;
    }
  return true;
}

}  // namespace plift
