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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit status when
// any criterion fails. Tolerances and time limits are fixed below.

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "plift/analysis.hpp"
#include "plift/decode.hpp"

namespace plift {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string frozen_table(int m, int q) {
  return read_file(std::string(PLIFT_TEST_DATA_DIR) + "/dims_m" +
                   std::to_string(m) + "_q" + std::to_string(q) + ".csv");
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::vector<Elem> random_codeword(const MonomialCode& c, Rng& rng) {
  std::vector<Elem> msg(c.dim());
  for (auto& x : msg) x = static_cast<Elem>(uniform_below(rng, c.q()));
  return c.encode(msg);
}

Outcome dimension_tables() {
  Outcome o;
  int matched = 0, required = 0;
  for (int m : {2, 3}) {
    for (int q : {4, 8, 16}) {
      ++required;
      if (rate_table_csv(rate_table(q, m)) == frozen_table(m, q)) ++matched;
      else o.detail += " mismatch m=" + std::to_string(m) + " q=" + std::to_string(q) + ";";
    }
  }
  o.pass = matched == required;
  int stretch = 0;
  for (int m : {2, 3})
    for (int q : {32, 64})
      stretch += rate_table_csv(rate_table(q, m)) == frozen_table(m, q);
  o.detail += std::to_string(matched) + "/" + std::to_string(required) +
              " tables byte-identical; stretch q=32,64: " + std::to_string(stretch) +
              "/4";
  return o;
}

Outcome closed_formula() {
  Outcome o;
  for (auto [p, t] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{2, 3},
                      std::pair{3, 1}, std::pair{2, 4}}) {
    const int q = static_cast<int>(ipow(p, t));
    const std::size_t tri = ipow(static_cast<std::size_t>(p * (p + 1) / 2), t);
    const std::size_t formula = ipow(p, 2 * t) + ipow(p, t) - tri;
    const MonomialCode c(CodeKind::kPLift, make_field(q), 2, q - 1);
    const std::size_t r = rank(c.field(), c.generator());
    o.pass = o.pass && c.dim() == formula && r == formula;
    o.detail += "q=" + std::to_string(q) + ":" + std::to_string(r) + "/" +
                std::to_string(formula) + " ";
  }
  return o;
}

Outcome recursive_identities() {
  Outcome o;
  int entries = 0;
  for (int m : {2, 3}) {
    for (int q : {4, 8, 16}) {
      for (const RateRow& row : rate_table(q, m, RateMode::kLift)) {
        const int k = row.k;
        const bool c4 = row.dim_P == pdeg(m - 1, k, q).size() + adeg(m, k - 1, q).size();
        std::size_t sum = 1;
        for (int j = 1; j <= m; ++j) sum += adeg(j, k - 1, q).size();
        const bool c5 = row.dim_P == sum;
        if (!c4 || !c5) {
          o.pass = false;
          o.detail += " fails at q=" + std::to_string(q) + " m=" + std::to_string(m) +
                      " k=" + std::to_string(k) + ";";
        }
        ++entries;
      }
    }
  }
  o.detail += std::to_string(entries) + " entries checked";
  return o;
}

Outcome shorten_puncture() {
  Outcome o;
  int cases = 0;
  for (int q : {4, 8})
    for (int m : {2, 3})
      for (int k = 1; k <= q - 1; ++k) {
        const auto r = shorten_puncture_check(make_field(q), m, k);
        ++cases;
        if (!r.ok()) {
          o.pass = false;
          o.detail += " fails at q=" + std::to_string(q) + " m=" + std::to_string(m) +
                      " k=" + std::to_string(k) + ";";
        }
      }
  o.detail += std::to_string(cases) + " (q,m,k) cases, both equalities";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t tuples = 0;
  for (int q : {4, 8, 9}) {
    const FieldPtr F = make_field(q);
    const auto affine = a_reduced_tuples(2, q);
    for (int k = 0; k <= q - 2; ++k) {
      const DegreeSet A = adeg(2, k, q);
      for (const Degree& d : affine) {
        ++tuples;
        if (A.contains(d) != monomial_membership_oracle(F, d, k, Space::kAffine)) {
          o.pass = false;
          o.detail += " adeg disagreement q=" + std::to_string(q) + ";";
        }
      }
    }
    for (int k = 1; k <= q - 1; ++k) {
      const DegreeSet P = pdeg(2, k, q);
      for (const Degree& d : p_reduced_tuples(2, P.v, q)) {
        ++tuples;
        if (P.contains(d) != monomial_membership_oracle(F, d, k, Space::kProjective)) {
          o.pass = false;
          o.detail += " pdeg disagreement q=" + std::to_string(q) + ";";
        }
      }
    }
  }
  o.detail += std::to_string(tuples) + " (tuple, k) pairs agree";
  return o;
}

Outcome local_correction() {
  Outcome o;
  const std::uint64_t trials = 10000;
  double worst = 1;
  int configs = 0;
  for (int k : {3, 5}) {
    const MonomialCode c(CodeKind::kPLift, make_field(8), 2, k);
    for (int s : {k + 1, 8}) {
      CorrectionConfig cfg;
      cfg.s = s;
      const int t = cfg.t(k);
      const double dmax = delta_max(s, t);
      for (double delta : {0.0, dmax / 2, dmax}) {
        cfg.delta = delta;
        cfg.seed = 1000 + static_cast<std::uint64_t>(configs);
        const double bound = success_lower_bound(delta, s, t);
        const double b = std::clamp(bound, 0.0, 1.0);
        const double sigma = std::sqrt(b * (1 - b) / static_cast<double>(trials));
        const double rate = mc_experiment(c, cfg, trials).success_rate();
        const double margin = rate - (bound - 3 * sigma);
        if (delta > 0) worst = std::min(worst, margin);
        if (margin < 0) {
          o.pass = false;
          o.detail += " k=" + std::to_string(k) + " s=" + std::to_string(s) +
                      " delta=" + fmt("%.4g", delta) + " rate=" + fmt("%.4f", rate) + ";";
        }
        ++configs;
      }
    }
  }
  o.detail += std::to_string(configs) + " configs x 10^4 trials, min margin over " +
              "bound-3sigma at delta>0: " + fmt("%.4f", worst);
  return o;
}

Outcome smoothness() {
  Outcome o;
  const int draws = 100000;
  double min_p = 1;
  for (int q : {3, 4}) {
    const FieldPtr F = make_field(q);
    const Support pm(F, 2, Space::kProjective);
    const std::size_t n = pm.size();
    for (int s : {2, q}) {
      Rng rng = substream(77, static_cast<std::uint64_t>(q * 10 + s));
      const std::size_t target = n / 2;
      std::vector<double> picked(n, 0);
      for (int i = 0; i < draws; ++i) {
        const auto S = sample_queries(pm, target, s, rng);
        ++picked[S[uniform_below(rng, S.size())]];
      }
      const double e = static_cast<double>(draws) / static_cast<double>(n);
      double chi2 = 0;
      for (double c : picked) chi2 += (c - e) * (c - e) / e;
      const boost::math::chi_squared dist(static_cast<double>(n - 1));
      const double p = boost::math::cdf(boost::math::complement(dist, chi2));
      min_p = std::min(min_p, p);
      if (!(p > 1e-3)) {
        o.pass = false;
        o.detail += " q=" + std::to_string(q) + " s=" + std::to_string(s) +
                    " p=" + fmt("%.3g", p) + ";";
      }
    }
  }
  o.detail += "q in {3,4}, s in {2,q}, 10^5 samples each, min p-value " + fmt("%.3g", min_p);
  return o;
}

Outcome automorphisms() {
  Outcome o;
  Rng rng = substream(8, 0);
  int checked = 0;
  for (auto [kind, q, m, k] : {std::tuple{CodeKind::kPLift, 4, 2, 3},
                               std::tuple{CodeKind::kPRM, 4, 2, 2}}) {
    const MonomialCode c(kind, make_field(q), m, k);
    const RowSpace rs = c.linear().row_space();
    for (int i = 0; i < 100; ++i, ++checked) {
      const Matrix M = random_invertible(c.field(), m + 1, rng);
      if (!rs.contains(apply_projective_action(c.support(), M, random_codeword(c, rng), c.v())))
        o.pass = false;
    }
  }
  const MonomialCode rm(CodeKind::kRM, make_field(8), 2, 3);
  const RowSpace rs = rm.linear().row_space();
  for (int i = 0; i < 100; ++i, ++checked) {
    const Matrix A = random_invertible(rm.field(), 2, rng);
    const std::vector<Elem> b{static_cast<Elem>(uniform_below(rng, 8)),
                              static_cast<Elem>(uniform_below(rng, 8))};
    if (!rs.contains(apply_affine_action(rm.support(), A, b, random_codeword(rm, rng))))
      o.pass = false;
  }
  o.detail = std::to_string(checked) + " transformed codewords checked";
  return o;
}

Outcome information_sets() {
  Outcome o;
  int sets = 0;
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    const FieldPtr F = make_field(q);
    for (int m = 1; m <= 3; ++m) {
      for (int k = 1; k <= q - 1; ++k) {
        Rng rng = substream(9, static_cast<std::uint64_t>(q * 100 + m * 10 + k));
        std::vector<CodeKind> kinds{CodeKind::kPLift};
        if (k <= q - 2) kinds.push_back(CodeKind::kLift);
        for (CodeKind kind : kinds) {
          const MonomialCode c(kind, F, m, k);
          bool ok = information_set(c).ok();
          for (int draw = 0; draw < 3; ++draw) ok = ok && information_set(c, &rng).ok();
          sets += 4;
          if (!ok) {
            o.pass = false;
            o.detail += " " + to_string(kind) + " q=" + std::to_string(q) + " m=" +
                        std::to_string(m) + " k=" + std::to_string(k) + ";";
          }
        }
      }
    }
  }
  o.detail += std::to_string(sets) + " sets (default + 3 random draws per code) full rank";
  return o;
}

Outcome quasi_cyclicity() {
  Outcome o;
  for (auto [q, m, d] : {std::tuple{4, 2, 3}, std::tuple{4, 3, 1}, std::tuple{16, 2, 3}}) {
    bool ok = true;
    for (int k = 1; k <= q - 1; ++k) {
      const auto cert = qc_certificate(MonomialCode(CodeKind::kPLift, make_field(q), m, k));
      ok = ok && cert && cert->ok() && cert->d == static_cast<std::size_t>(d) &&
           cert->cycles.size() == static_cast<std::size_t>(d);
    }
    o.pass = o.pass && ok;
    o.detail += "(q=" + std::to_string(q) + ",m=" + std::to_string(m) + ") index " +
                std::to_string(d) + (ok ? " ok" : " FAILED") + "; ";
  }
  return o;
}

Outcome distances() {
  Outcome o;
  const MonomialCode c(CodeKind::kPLift, make_field(4), 2, 3);
  const auto r = distance_report(c, true);
  o.pass = r.exact && r.method == "gray" && r.lower == 6 && r.upper == 9 && r.consistent();
  o.detail = "PLift_4(2,3) exact " + (r.exact ? std::to_string(*r.exact) : "none") +
             " in [" + std::to_string(r.lower) + "," + std::to_string(r.upper) + "]";
  int prs = 0;
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    for (int k = 0; k <= q; ++k) {
      const auto p = distance_report(MonomialCode(CodeKind::kPRS, make_field(q), 1, k), true);
      ++prs;
      if (!p.exact || *p.exact != static_cast<std::size_t>(q + 1 - k)) {
        o.pass = false;
        o.detail += " PRS_" + std::to_string(q) + "(" + std::to_string(k) + ") wrong;";
      }
    }
  }
  o.detail += "; " + std::to_string(prs) + " PRS codes with exact distance q+1-k";
  return o;
}

Outcome design_duality() {
  Outcome o;
  for (int q : {2, 3, 4}) {
    const auto r = design_dual_check(make_field(q), 2);
    o.pass = o.pass && r.ok();
    o.detail += "q=" + std::to_string(q) + " rank " + std::to_string(r.incidence_rank) +
                (r.ok() ? " ok" : " FAILED") + "; ";
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace plift

int main() {
  using namespace plift;
  const std::vector<Criterion> criteria{
      {1, "dimension tables", 120, dimension_tables},
      {2, "closed dimension formula", 60, closed_formula},
      {3, "recursive identities", 600, recursive_identities},
      {4, "shortening/puncturing", 300, shorten_puncture},
      {5, "degree-set oracle equivalence", 600, oracle_equivalence},
      {6, "local correction bound", 600, local_correction},
      {7, "perfect smoothness", 600, smoothness},
      {8, "automorphism invariance", 600, automorphisms},
      {9, "information sets", 1200, information_sets},
      {10, "quasi-cyclicity", 600, quasi_cyclicity},
      {11, "minimum distance", 600, distances},
      {12, "design duality", 600, design_duality},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool pass = o.pass && secs < c.limit_seconds;
    failures += !pass;
    std::printf("criterion %2d %-30s %s  %.2fs (limit %.0fs)  %s\n", c.id, c.name,
                pass ? "PASS" : "FAIL", secs, c.limit_seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
