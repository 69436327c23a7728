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

#include "plift/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace plift {
namespace {

// Uniform primitive element of the extension: exp(j) with gcd(j, Q-1) = 1.
Elem random_primitive(const ExtensionField& E, Rng& rng) {
  const std::uint64_t order = E.order() - 1;
  while (true) {
    const std::uint64_t j = uniform_below(rng, order);
    if (std::gcd(j, order) == 1) return E.exp(static_cast<std::int64_t>(j));
  }
}

std::size_t weight(std::span<const Elem> c) {
  return static_cast<std::size_t>(
      std::count_if(c.begin(), c.end(), [](Elem x) { return x != 0; }));
}

Matrix basis_rows(const FiniteField& F, const Matrix& G) {
  Matrix B = rref(F, G);
  if (B.empty()) throw std::invalid_argument("zero code has no minimum distance");
  return B;
}

}  // namespace

std::vector<Point> power_points(const FieldPtr& field, int m, std::size_t count,
                                Rng* rng) {
  const ExtensionIso iso(field, m);
  const ExtensionField& E = iso.extension();
  if (count > E.order() - 1)
    throw std::invalid_argument("more powers requested than nonzero elements");
  const Elem omega = rng ? random_primitive(E, *rng) : E.primitive();
  std::optional<Matrix> R;
  if (rng) R = random_invertible(*field, static_cast<std::size_t>(m), *rng);
  std::vector<Point> out;
  out.reserve(count);
  Elem x = 1;
  for (std::size_t j = 1; j <= count; ++j) {
    x = E.mul(x, omega);
    Point p = iso.to_vector(x);
    if (R) p = mul_vec(*field, *R, p);
    out.push_back(std::move(p));
  }
  return out;
}

InformationSet information_set(const MonomialCode& c, Rng* rng) {
  const int q = c.q();
  const int m = c.m();
  const int k = c.k();
  const auto& field = c.field_ptr();
  const Support& s = c.support();
  InformationSet out;
  out.dim = c.dim();
  switch (c.kind()) {
    case CodeKind::kLift:
    case CodeKind::kRS: {
      if (k > q - 2)
        throw std::invalid_argument("affine information sets require k <= q-2");
      for (const Point& p : power_points(field, m, c.dim(), rng))
        out.positions.push_back(s.index_of(p));
      break;
    }
    case CodeKind::kPLift:
    case CodeKind::kPRS: {
      if (k < 1 || k > q - 1)
        throw std::invalid_argument(
            "projective information sets require 1 <= k <= q-1");
      for (int i = m; i >= 1; --i) {
        const std::size_t count = adeg(i, k - 1, q).size();
        for (const Point& x : power_points(field, i, count, rng)) {
          Point p(m + 1, 0);
          p[m - i] = 1;
          std::copy(x.begin(), x.end(), p.begin() + (m - i) + 1);
          out.positions.push_back(s.index_of(p));
        }
      }
      Point last(m + 1, 0);
      last[m] = 1;
      out.positions.push_back(s.index_of(last));
      break;
    }
    default:
      throw std::invalid_argument("information sets are built for lifted codes");
  }
  out.rank = rank(c.field(), c.generator().select_columns(out.positions));
  return out;
}

std::optional<QcCertificate> qc_certificate(const MonomialCode& c) {
  if (!is_projective(c.kind()))
    throw std::invalid_argument("quasi-cyclicity is checked on projective codes");
  const FiniteField& F = c.field();
  const std::size_t q = F.order();
  const int m = c.m();
  QcCertificate out;
  out.n = theta(m, q);
  out.d = std::gcd(out.n, q - 1);
  const std::size_t len = out.n / out.d;
  if (std::gcd(len, q - 1) != 1) return std::nullopt;

  const ExtensionIso iso(c.field_ptr(), m + 1);
  const ExtensionField& E = iso.extension();
  const Elem omega = E.primitive();
  const Elem beta = E.pow(omega, static_cast<std::int64_t>(q - 1));
  const Elem step = E.pow(beta, static_cast<std::int64_t>(out.d));

  std::vector<Elem> elems;
  elems.reserve(out.n);
  for (std::size_t i = 0; i < out.d; ++i) {
    Elem x = E.pow(omega, static_cast<std::int64_t>(i));
    for (std::size_t j = 1; j <= len; ++j) {
      x = E.mul(x, step);
      elems.push_back(x);
    }
  }
  std::unordered_map<Elem, std::size_t> where;
  std::vector<bool> seen(c.length(), false);
  out.represents = true;
  for (std::size_t pos = 0; pos < elems.size(); ++pos) {
    where.emplace(elems[pos], pos);
    Point u = iso.to_vector(elems[pos]);
    auto [P, lambda] = standardize(F, u);
    const std::size_t idx = c.support().index_of(P);
    if (seen[idx]) out.represents = false;
    seen[idx] = true;
    out.representation.push_back(std::move(u));
    out.twist.push_back(F.inv(lambda));
    out.positions.push_back(idx);
  }

  out.permutation.resize(out.n);
  bool closed = true;
  for (std::size_t pos = 0; pos < out.n; ++pos) {
    auto it = where.find(E.mul(step, elems[pos]));
    if (it == where.end()) {
      closed = false;
      out.permutation[pos] = pos;
    } else {
      out.permutation[pos] = it->second;
    }
  }

  std::vector<bool> visited(out.n, false);
  for (std::size_t start = 0; start < out.n; ++start) {
    if (visited[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t x = start; !visited[x]; x = out.permutation[x]) {
      visited[x] = true;
      cycle.push_back(x);
    }
    out.cycles.push_back(std::move(cycle));
  }
  out.cycle_structure = closed && out.cycles.size() == out.d;
  for (std::size_t i = 0; out.cycle_structure && i < out.cycles.size(); ++i) {
    std::vector<std::size_t> orbit = out.cycles[i];
    std::sort(orbit.begin(), orbit.end());
    for (std::size_t j = 0; j < orbit.size(); ++j)
      if (orbit.size() != len || orbit[j] != i * len + j)
        out.cycle_structure = false;
  }

  if (!out.represents) return out;

  const auto& tuples = c.degrees().tuples;
  const Matrix& G = c.generator();
  Matrix twisted(tuples.size(), out.n);
  out.twisted_matches = true;
  for (std::size_t r = 0; r < tuples.size(); ++r) {
    for (std::size_t pos = 0; pos < out.n; ++pos) {
      const Elem val = monomial_value(F, tuples[r], out.representation[pos]);
      twisted.at(r, pos) = val;
      const Elem expect =
          F.mul(F.pow(out.twist[pos], c.v()), G.at(r, out.positions[pos]));
      if (val != expect) out.twisted_matches = false;
    }
  }
  Matrix moved(tuples.size(), out.n);
  for (std::size_t r = 0; r < tuples.size(); ++r)
    for (std::size_t pos = 0; pos < out.n; ++pos)
      moved.at(r, out.permutation[pos]) = twisted.at(r, pos);
  out.invariant = closed && RowSpace(c.field_ptr(), twisted).contains_all(moved);
  return out;
}

std::size_t min_distance_gray(const FiniteField& F, const Matrix& G,
                              std::uint64_t limit) {
  const Matrix B = basis_rows(F, G);
  const int p = F.prime();
  const int t = F.degree();
  const std::size_t digits = B.rows() * static_cast<std::size_t>(t);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < digits; ++i) {
    if (total > limit / static_cast<std::uint64_t>(p))
      throw std::length_error("message space too large for an exhaustive sweep");
    total *= static_cast<std::uint64_t>(p);
  }
  // Digit r*t + j of the message is the coefficient of X^j in the scalar of
  // row r; X^j has canonical index p^j.
  Matrix steps(digits, B.cols());
  for (std::size_t r = 0; r < B.rows(); ++r) {
    Elem xj = 1;
    for (int j = 0; j < t; ++j, xj *= static_cast<Elem>(p))
      for (std::size_t col = 0; col < B.cols(); ++col)
        steps.at(r * t + j, col) = F.mul(xj, B.at(r, col));
  }
  std::vector<Elem> word(B.cols(), 0);
  std::size_t w = 0;
  std::size_t best = B.cols() + 1;
  // Step s adds the basis vector of digit v_p(s); the words visited are all
  // p^digits messages, each once.
  for (std::uint64_t s = 1; s < total; ++s) {
    std::uint64_t x = s;
    std::size_t digit = 0;
    while (x % p == 0) {
      x /= p;
      ++digit;
    }
    const auto row = steps.row(digit);
    for (std::size_t col = 0; col < word.size(); ++col) {
      if (row[col] == 0) continue;
      const Elem before = word[col];
      word[col] = F.add(before, row[col]);
      if (before == 0) ++w;
      else if (word[col] == 0) --w;
    }
    if (w != 0 && w < best) best = w;
  }
  return best;
}

std::size_t min_distance_flats(const FiniteField& F, const Matrix& G,
                               std::uint64_t limit) {
  const Matrix B = basis_rows(F, G);
  const std::size_t dim = B.rows();
  const std::size_t n = B.cols();
  if (dim == 1) return weight(B.row(0));
  const std::size_t pick = dim - 1;
  double count = 1;
  for (std::size_t i = 0; i < pick; ++i)
    count = count * static_cast<double>(n - i) / static_cast<double>(i + 1);
  if (count > static_cast<double>(limit))
    throw std::length_error("too many coordinate subsets for the flats search");

  std::vector<std::size_t> cols(pick);
  std::iota(cols.begin(), cols.end(), 0);
  std::size_t best = n;
  while (true) {
    const Matrix kernel = nullspace(F, B.select_columns(cols).transpose());
    if (kernel.rows() == 1)
      best = std::min(best, weight(vec_mul(F, kernel.row(0), B)));
    std::size_t i = pick;
    while (i > 0 && cols[i - 1] == n - pick + i - 1) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < pick; ++j) cols[j] = cols[j - 1] + 1;
  }
  return best;
}

DistanceReport distance_report(const MonomialCode& c, bool exact) {
  if (c.kind() != CodeKind::kPLift && c.kind() != CodeKind::kPRS)
    throw std::invalid_argument("distance bounds apply to PLift and PRS codes");
  const std::size_t q = c.field().order();
  const int m = c.m();
  DistanceReport out;
  out.design_distance = static_cast<int>(q) + 1 - c.k();
  const std::size_t d = static_cast<std::size_t>(std::max(out.design_distance, 1));
  out.lower = (d - 1) * theta(m - 1, q) + 1;
  out.upper = theta(m, q) - ipow(q, m - 1) * (q + 1 - d);
  if (!exact) return out;
  const double log_messages = static_cast<double>(c.dim()) * std::log2(q);
  if (log_messages <= 26) {
    out.exact = min_distance_gray(c.field(), c.generator());
    out.method = "gray";
  } else {
    out.exact = min_distance_flats(c.field(), c.generator());
    out.method = "flats";
  }
  return out;
}

DualityReport design_dual_check(const FieldPtr& field, int m) {
  const int q = static_cast<int>(field->order());
  const MonomialCode code(CodeKind::kPLift, field, m, q - 1);
  const FiniteField& F = *field;
  DualityReport out;
  out.q = q;
  out.m = m;
  out.n = code.length();
  out.code_dim = code.dim();
  const auto lines = all_lines(code.support());
  Matrix H(lines.size(), out.n);
  for (std::size_t r = 0; r < lines.size(); ++r)
    for (std::size_t idx : lines[r]) H.at(r, idx) = 1;
  const Matrix dual = nullspace(F, code.generator());
  out.dual_dim = dual.rows();
  out.incidence_rank = rank(F, H);
  out.equal = row_space_equal(field, H, dual);
  if (m == 2) {
    const std::size_t p = static_cast<std::size_t>(F.prime());
    const int t = F.degree();
    const std::size_t tri = ipow(p * (p + 1) / 2, t);
    out.expected_rank = tri + 1;
    out.expected_dim = ipow(p, 2 * t) + ipow(p, t) - tri;
  }
  return out;
}

ShortenPunctureReport shorten_puncture_check(const FieldPtr& field, int m,
                                             int k) {
  const MonomialCode plift(CodeKind::kPLift, field, m, k);
  ShortenPunctureReport out;
  const MonomialCode lift(CodeKind::kLift, field, m, k - 1);
  out.shorten_equal = code_equal(shorten_at_infinity(plift), lift.linear());
  if (m == 1) {
    out.puncture_equal = true;
  } else {
    const MonomialCode lower(CodeKind::kPLift, field, m - 1, k);
    out.puncture_equal = code_equal(puncture_to_infinity(plift), lower.linear());
  }
  return out;
}

RateMode parse_rate_mode(std::string_view name) {
  if (name == "lift") return RateMode::kLift;
  if (name == "rm") return RateMode::kRm;
  if (name == "both") return RateMode::kBoth;
  throw std::invalid_argument("unknown rate mode: " + std::string(name));
}

std::vector<RateRow> rate_table(int q, int m, RateMode mode,
                                std::optional<int> k_min,
                                std::optional<int> k_max) {
  if (!prime_power(q)) throw std::invalid_argument("q must be a prime power");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  const int lo = k_min.value_or(std::max(1, q - 8));
  const int hi = k_max.value_or(q - 1);
  if (lo < 1 || hi > q - 1 || lo > hi)
    throw std::invalid_argument("rate table rows need 1 <= k_min <= k_max <= q-1");
  std::vector<RateRow> rows;
  for (int k = lo; k <= hi; ++k) {
    RateRow r;
    r.k = k;
    r.n_A = ipow(q, m);
    r.n_P = theta(m, q);
    if (mode != RateMode::kRm) {
      r.dim_A = adeg(m, k - 1, q).size();
      r.dim_P = pdeg(m, k, q).size();
    }
    if (mode != RateMode::kLift) r.dim_PRM = prm_degrees(m, k, q).size();
    rows.push_back(r);
  }
  return rows;
}

namespace {

std::string rate(std::size_t dim, std::size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g",
                static_cast<double>(dim) / static_cast<double>(n));
  return buf;
}

}  // namespace

std::string rate_table_csv(const std::vector<RateRow>& rows, RateMode mode) {
  std::ostringstream out;
  out << "k,n_A,dim_A,R_A,n_P,dim_P,R_P,dim_PRM,R_PRM\n";
  const bool lift = mode != RateMode::kRm;
  const bool rm = mode != RateMode::kLift;
  for (const RateRow& r : rows) {
    out << r.k << ',';
    if (lift)
      out << r.n_A << ',' << r.dim_A << ',' << rate(r.dim_A, r.n_A) << ',';
    else
      out << ",,,";
    out << r.n_P << ',';
    if (lift) out << r.dim_P << ',' << rate(r.dim_P, r.n_P) << ',';
    else out << ",,";
    if (rm) out << r.dim_PRM << ',' << rate(r.dim_PRM, r.n_P);
    else out << ',';
    out << '\n';
  }
  return out.str();
}

}  // namespace plift
