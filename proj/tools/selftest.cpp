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

#include "selftest.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "plift/analysis.hpp"
#include "plift/decode.hpp"

namespace plift::selftest {
namespace {

std::vector<Elem> random_codeword(const MonomialCode& c, Rng& rng) {
  std::vector<Elem> msg(c.dim());
  for (auto& x : msg) x = static_cast<Elem>(uniform_below(rng, c.q()));
  return c.encode(msg);
}

bool field_axioms() {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64}) {
    const FieldPtr F = make_field(q);
    const Elem w = F->primitive();
    Elem x = 1;
    for (int i = 1; i < q - 1; ++i) {
      x = F->mul(x, w);
      if (x == 1) return false;
    }
    for (Elem a = 0; a < F->order(); ++a) {
      if (F->add(a, F->neg(a)) != 0) return false;
      if (a != 0 && F->mul(a, F->inv(a)) != 1) return false;
      for (Elem b = 0; b < F->order(); b += 3) {
        const Elem c = static_cast<Elem>((a * 7 + b) % F->order());
        if (F->mul(a, F->add(b, c)) != F->add(F->mul(a, b), F->mul(a, c)))
          return false;
      }
    }
  }
  return true;
}

bool degree_sets_agree() {
  for (int q : {2, 3, 4, 5, 7, 8}) {
    for (int m = 1; m <= 3; ++m) {
      if (m == 3 && q > 5) continue;
      for (int k = 1; k <= q - 1; ++k)
        if (pdeg(m, k, q).tuples != pdeg_direct(m, k, q).tuples) return false;
    }
  }
  return true;
}

bool recursive_identities() {
  for (int q : {4, 8, 16}) {
    for (int m : {2, 3}) {
      for (int k = 1; k <= q - 1; ++k) {
        if (pdeg(m, k, q).size() != adeg(m, k - 1, q).size() + pdeg(m - 1, k, q).size())
          return false;
      }
    }
  }
  return true;
}

bool oracle_equivalence() {
  const FieldPtr F = make_field(4);
  for (int k = 1; k <= 3; ++k) {
    const auto P = pdeg(2, k, 4);
    for (const auto& d : p_reduced_tuples(2, P.v, 4))
      if (P.contains(d) != monomial_membership_oracle(F, d, k, Space::kProjective))
        return false;
    if (k > 2) continue;
    const auto A = adeg(2, k, 4);
    for (const auto& d : a_reduced_tuples(2, 4))
      if (A.contains(d) != monomial_membership_oracle(F, d, k, Space::kAffine))
        return false;
  }
  return true;
}

bool known_dimensions() {
  struct Row {
    int q, m, k;
    std::size_t a, p, prm;
  };
  for (const Row& r : {Row{4, 2, 3, 7, 11, 10}, Row{8, 2, 7, 37, 45, 36},
                       Row{4, 3, 3, 13, 24, 20}, Row{8, 3, 7, 139, 184, 120},
                       Row{16, 2, 8, 36, 45, 45}}) {
    const auto row = rate_table(r.q, r.m, RateMode::kBoth, r.k, r.k).at(0);
    if (row.dim_A != r.a || row.dim_P != r.p || row.dim_PRM != r.prm) return false;
  }
  return true;
}

bool closed_formula() {
  for (auto [p, t] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{2, 3},
                      std::pair{3, 1}, std::pair{2, 4}}) {
    const std::size_t q = ipow(p, t);
    const std::size_t tri = ipow(static_cast<std::size_t>(p * (p + 1) / 2), t);
    if (pdeg(2, static_cast<int>(q) - 1, static_cast<int>(q)).size() != q * q + q - tri)
      return false;
  }
  return true;
}

bool shorten_puncture() {
  for (int q : {3, 4})
    for (int m : {2, 3})
      for (int k = 1; k <= q - 1; ++k)
        if (!shorten_puncture_check(make_field(q), m, k).ok()) return false;
  return true;
}

bool automorphisms() {
  Rng rng(2024);
  for (auto [kind, q, m, k] : {std::tuple{CodeKind::kPLift, 4, 2, 3},
                               std::tuple{CodeKind::kPRM, 4, 2, 2}}) {
    const MonomialCode c(kind, make_field(q), m, k);
    const RowSpace rs = c.linear().row_space();
    for (int i = 0; i < 20; ++i) {
      const Matrix M = random_invertible(c.field(), m + 1, rng);
      if (!rs.contains(apply_projective_action(c.support(), M,
                                               random_codeword(c, rng), c.v())))
        return false;
    }
  }
  const MonomialCode rm(CodeKind::kRM, make_field(8), 2, 3);
  const RowSpace rs = rm.linear().row_space();
  for (int i = 0; i < 20; ++i) {
    const Matrix A = random_invertible(rm.field(), 2, rng);
    const std::vector<Elem> b{static_cast<Elem>(uniform_below(rng, 8)),
                              static_cast<Elem>(uniform_below(rng, 8))};
    if (!rs.contains(apply_affine_action(rm.support(), A, b, random_codeword(rm, rng))))
      return false;
  }
  return true;
}

bool information_sets() {
  Rng rng(7);
  for (int q : {3, 4, 5, 8}) {
    for (int m : {1, 2}) {
      for (int k = 1; k <= q - 1; ++k) {
        const MonomialCode p(CodeKind::kPLift, make_field(q), m, k);
        if (!information_set(p).ok() || !information_set(p, &rng).ok()) return false;
        if (k > q - 2) continue;
        const MonomialCode a(CodeKind::kLift, make_field(q), m, k);
        if (!information_set(a).ok() || !information_set(a, &rng).ok()) return false;
      }
    }
  }
  return true;
}

bool quasi_cyclicity() {
  for (auto [q, m, d] : {std::tuple{4, 2, 3}, std::tuple{3, 2, 1}, std::tuple{4, 3, 1}}) {
    for (int k = 1; k <= q - 1; ++k) {
      const auto cert = qc_certificate(MonomialCode(CodeKind::kPLift, make_field(q), m, k));
      if (!cert || !cert->ok() || cert->d != static_cast<std::size_t>(d)) return false;
    }
  }
  return true;
}

bool distances() {
  for (int q : {3, 4, 5}) {
    for (int k = 0; k <= q; ++k) {
      const auto r = distance_report(MonomialCode(CodeKind::kPRS, make_field(q), 1, k), true);
      if (!r.exact || *r.exact != static_cast<std::size_t>(q + 1 - k)) return false;
    }
  }
  for (auto [q, k] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{4, 2}}) {
    const auto r = distance_report(MonomialCode(CodeKind::kPLift, make_field(q), 2, k), true);
    if (!r.exact || !r.consistent()) return false;
  }
  return true;
}

bool design_duality() {
  for (auto [q, m] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{4, 2}, std::pair{2, 3}})
    if (!design_dual_check(make_field(q), m).ok()) return false;
  return true;
}

bool prs_decoding() {
  Rng rng(11);
  const FieldPtr F = make_field(8);
  for (int k = 0; k <= 6; ++k) {
    const MonomialCode c(CodeKind::kPRS, F, 1, k);
    for (int trial = 0; trial < 20; ++trial) {
      const auto cw = random_codeword(c, rng);
      std::vector<Symbol> y(cw.begin(), cw.end());
      const int erasures = static_cast<int>(uniform_below(rng, 9 - k));
      const int t = (9 - erasures - k - 1) / 2;
      std::vector<std::size_t> order(9);
      for (std::size_t i = 0; i < 9; ++i) order[i] = i;
      std::shuffle(order.begin(), order.end(), rng);
      for (int i = 0; i < erasures; ++i) y[order[i]] = std::nullopt;
      for (int i = 0; i < t; ++i) {
        const std::size_t pos = order[erasures + i];
        y[pos] = F->add(cw[pos], static_cast<Elem>(1 + uniform_below(rng, 7)));
      }
      const auto out = prs_decode(F, y, k);
      if (!out || *out != cw) return false;
    }
  }
  return true;
}

bool local_correction() {
  const MonomialCode c(CodeKind::kPLift, make_field(8), 2, 5);
  CorrectionConfig cfg;
  cfg.s = 8;
  cfg.seed = 5;
  if (mc_experiment(c, cfg, 200).successes != 200) return false;
  cfg.delta = delta_max(cfg.s, cfg.t(5));
  const std::uint64_t trials = 1000;
  const auto rep = mc_experiment(c, cfg, trials);
  const double bound = success_lower_bound(cfg.delta, cfg.s, cfg.t(5));
  const double p0 = std::clamp(bound, 0.0, 1.0);
  return rep.success_rate() >= bound - 3 * std::sqrt(p0 * (1 - p0) / trials);
}

bool smoothness() {
  const FieldPtr F = make_field(3);
  const Support pm(F, 2, Space::kProjective);
  Rng rng(13);
  const int draws = 20000;
  std::vector<double> count(pm.size(), 0);
  for (int i = 0; i < draws; ++i) {
    const auto S = sample_queries(pm, 4, 3, rng);
    ++count[S[uniform_below(rng, S.size())]];
  }
  const double e = static_cast<double>(draws) / pm.size();
  double chi2 = 0;
  for (double c : count) chi2 += (c - e) * (c - e) / e;
  const boost::math::chi_squared dist(static_cast<double>(pm.size() - 1));
  return boost::math::cdf(boost::math::complement(dist, chi2)) > 1e-3;
}

}  // namespace

std::vector<Check> suite() {
  return {
      {"gf.field_axioms", field_axioms},
      {"degrees.recursive_equals_direct", degree_sets_agree},
      {"degrees.recursive_identities", recursive_identities},
      {"degrees.oracle_equivalence", oracle_equivalence},
      {"degrees.known_dimensions", known_dimensions},
      {"degrees.closed_formula", closed_formula},
      {"codes.shorten_puncture", shorten_puncture},
      {"codes.automorphisms", automorphisms},
      {"decode.prs_errors_and_erasures", prs_decoding},
      {"decode.local_correction_bound", local_correction},
      {"decode.smoothness", smoothness},
      {"analysis.information_sets", information_sets},
      {"analysis.quasi_cyclicity", quasi_cyclicity},
      {"analysis.distance", distances},
      {"analysis.design_duality", design_duality},
  };
}

int run(std::ostream& out, const std::string& filter) {
  int failures = 0, ran = 0;
  for (const Check& c : suite()) {
    if (c.name.find(filter) == std::string::npos) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start).count();
    out << (ok ? "PASS " : "FAIL ") << c.name << " (" << std::fixed
        << std::setprecision(3) << secs << " s)";
    if (!error.empty()) out << ": " << error;
    out << '\n';
    failures += !ok;
  }
  out << ran - failures << "/" << ran << " checks passed\n";
  return failures;
}

}  // namespace plift::selftest
