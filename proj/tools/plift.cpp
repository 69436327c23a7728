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

// plift: command-line front end. Exit status 0 on success, 1 when a check
// fails, 2 on a usage error.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "plift/analysis.hpp"
#include "plift/io.hpp"
#include "selftest.hpp"

namespace plift {
namespace {

constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to `path`, or to stdout when empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return in;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json config_json(const CorrectionConfig& cfg) {
  Json j;
  j["s"] = cfg.s;
  j["delta"] = cfg.delta;
  j["seed"] = cfg.seed;
  j["unit_weights"] = cfg.unit_weights;
  return j;
}

struct TableOpts {
  std::vector<int> q;
  int m = 2;
  std::string mode = "both";
  std::optional<int> k_min, k_max;
  std::string format = "csv";
  std::string out;
};

int cmd_table(const TableOpts& o) {
  const RateMode mode = parse_rate_mode(o.mode);
  if (o.format == "json") {
    Json all = Json::object();
    for (int q : o.q) {
      Json rows = Json::array();
      for (const RateRow& r : rate_table(q, o.m, mode, o.k_min, o.k_max)) {
        Json row;
        row["k"] = r.k;
        row["n_A"] = r.n_A;
        row["dim_A"] = r.dim_A;
        row["n_P"] = r.n_P;
        row["dim_P"] = r.dim_P;
        row["dim_PRM"] = r.dim_PRM;
        rows.push_back(row);
      }
      all[std::to_string(q)] = rows;
    }
    emit(o.out, dump(all));
    return 0;
  }
  if (o.q.size() == 1) {
    emit(o.out, rate_table_csv(rate_table(o.q[0], o.m, mode, o.k_min, o.k_max), mode));
    return 0;
  }
  if (o.out.empty()) throw UsageError("several --q values need --out to name a directory");
  std::error_code ec;
  std::filesystem::create_directories(o.out, ec);
  if (!std::filesystem::is_directory(o.out))
    throw UsageError("--out is not a directory: " + o.out);
  for (int q : o.q) {
    const auto path = std::filesystem::path(o.out) /
                      ("table_m" + std::to_string(o.m) + "_q" + std::to_string(q) + ".csv");
    emit(path.string(), rate_table_csv(rate_table(q, o.m, mode, o.k_min, o.k_max), mode));
  }
  return 0;
}

struct CodeOpts {
  std::string kind = "PLift";
  int q = 0, m = 0, k = 0;
};

MonomialCode make_code(const CodeOpts& o) {
  if (!prime_power(o.q)) throw std::invalid_argument("q must be a prime power");
  return MonomialCode(parse_code_kind(o.kind), make_field(o.q), o.m, o.k);
}

int cmd_encode(const CodeOpts& c, const std::string& msg_path,
               std::optional<std::uint64_t> seed, const std::string& out) {
  const MonomialCode code = make_code(c);
  std::vector<Elem> msg;
  if (!msg_path.empty()) {
    auto in = open_input(msg_path);
    msg = read_elements(in, code.field());
  } else {
    Rng rng = substream(*seed, 0);
    msg.resize(code.dim());
    for (auto& x : msg) x = static_cast<Elem>(uniform_below(rng, code.q()));
  }
  const auto cw = code.encode(msg);
  std::ostringstream ss;
  write_word(ss, Word{code.descriptor(), {cw.begin(), cw.end()}}, code.field());
  emit(out, ss.str());
  return 0;
}

int cmd_corrupt(const std::string& in_path, double delta, std::uint64_t seed,
                bool erase, const std::string& out) {
  if (!(delta >= 0 && delta <= 1)) throw UsageError("delta must lie in [0, 1]");
  auto in = open_input(in_path);
  Word w = read_word(in);
  const FieldPtr F = make_field(w.descriptor.q);
  std::vector<Elem> word;
  for (const Symbol& s : w.symbols) {
    if (!s) throw UsageError("input word already has erasures");
    word.push_back(*s);
  }
  Rng rng = substream(seed, 0);
  const auto positions = corrupt(word, *F, delta, rng);
  for (std::size_t i = 0; i < word.size(); ++i) w.symbols[i] = word[i];
  if (erase)
    for (std::size_t p : positions) w.symbols[p] = std::nullopt;
  std::ostringstream ss;
  write_word(ss, w, *F);
  emit(out, ss.str());
  return 0;
}

std::size_t parse_point(const Support& s, const std::string& text) {
  if (!text.empty() && std::all_of(text.begin(), text.end(), ::isdigit)) {
    const std::size_t i = std::stoul(text);
    if (i >= s.size()) throw UsageError("point index out of range");
    return i;
  }
  return s.parse(text);
}

int cmd_local_correct(const std::string& in_path, const std::string& point,
                      const CorrectionConfig& cfg, const std::string& out) {
  auto in = open_input(in_path);
  const Word w = read_word(in);
  const MonomialCode code = code_from_descriptor(w.descriptor);
  validate(cfg, code);
  const std::size_t P = parse_point(code.support(), point);
  Json queries = Json::array();
  const WordOracle read = [&](std::size_t i) {
    Json q;
    q["index"] = i;
    q["point"] = code.support().format(i);
    q["value"] = w.symbols[i] ? Json(code.field().format(*w.symbols[i])) : Json();
    queries.push_back(q);
    return w.symbols[i];
  };
  Rng rng = substream(cfg.seed, 0);
  const Symbol result = local_correct(read, P, code, cfg, rng);
  Json j;
  j["descriptor"] = to_json(code.descriptor());
  j["config"] = config_json(cfg);
  j["index"] = P;
  j["point"] = code.support().format(P);
  j["symbol"] = result ? Json(code.field().format(*result)) : Json();
  j["queries"] = queries;
  emit(out, dump(j));
  return result ? 0 : kCheckFailed;
}

int cmd_experiment(const CodeOpts& c, const CorrectionConfig& cfg,
                   std::uint64_t trials, const std::string& out) {
  const MonomialCode code = make_code(c);
  validate(cfg, code);
  if (trials == 0) throw UsageError("trials must be positive");
  const ExperimentReport rep = mc_experiment(code, cfg, trials);
  const int t = cfg.t(code.k());
  const double bound = success_lower_bound(cfg.delta, cfg.s, t);
  const double p0 = std::clamp(bound, 0.0, 1.0);
  const double sigma = std::sqrt(p0 * (1 - p0) / static_cast<double>(trials));
  const bool meets = rep.success_rate() >= bound - 3 * sigma;
  Json j;
  j["descriptor"] = to_json(code.descriptor());
  j["config"] = config_json(cfg);
  j["t"] = t;
  j["delta_max"] = delta_max(cfg.s, t);
  j["lower_bound"] = bound;
  j["sigma"] = sigma;
  j["meets_bound"] = meets;
  j["report"] = to_json(rep);
  emit(out, dump(j));
  return meets ? 0 : kCheckFailed;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

struct AnalyzeOpts {
  int q = 0, m = 0, k = 0;
  std::string checks = "infoset,qc,distance,dual,shorten-puncture";
  bool exact = false;
  int draws = 0;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int cmd_analyze(const AnalyzeOpts& o) {
  const MonomialCode code = make_code(CodeOpts{"PLift", o.q, o.m, o.k});
  const FieldPtr& F = code.field_ptr();
  if (o.draws > 0 && !o.seed) throw UsageError("--draws needs --seed");
  Json j;
  j["descriptor"] = to_json(code.descriptor());
  bool ok = true;
  for (const std::string& check : split(o.checks, ',')) {
    if (check == "infoset") {
      Json r;
      const InformationSet s = information_set(code);
      r["plift"] = to_json(s, code.support());
      ok = ok && s.ok();
      if (o.k - 1 <= o.q - 2) {
        const MonomialCode lift(CodeKind::kLift, F, o.m, o.k - 1);
        const InformationSet a = information_set(lift);
        r["lift"] = to_json(a, lift.support());
        ok = ok && a.ok();
      }
      if (o.draws > 0) {
        Rng rng = substream(*o.seed, 0);
        Json draws = Json::array();
        for (int i = 0; i < o.draws; ++i) {
          const InformationSet d = information_set(code, &rng);
          draws.push_back(d.ok());
          ok = ok && d.ok();
        }
        r["random_draws_ok"] = draws;
      }
      j["infoset"] = r;
    } else if (check == "qc") {
      const auto cert = qc_certificate(code);
      Json r;
      r["applicable"] = cert.has_value();
      if (cert) {
        r["certificate"] = to_json(*cert);
        ok = ok && cert->ok();
      }
      j["qc"] = r;
    } else if (check == "distance") {
      const DistanceReport d = distance_report(code, o.exact);
      j["distance"] = to_json(d);
      ok = ok && d.consistent();
    } else if (check == "dual") {
      const DualityReport d = design_dual_check(F, o.m);
      j["dual"] = to_json(d);
      ok = ok && d.ok();
    } else if (check == "shorten-puncture") {
      const ShortenPunctureReport r = shorten_puncture_check(F, o.m, o.k);
      j["shorten_puncture"] = to_json(r);
      ok = ok && r.ok();
    } else {
      throw UsageError("unknown check: " + check);
    }
  }
  j["ok"] = ok;
  emit(o.out, dump(j));
  return ok ? 0 : kCheckFailed;
}

int cmd_export(const CodeOpts& c, const std::string& out) {
  emit(out, dump(generator_json(make_code(c))));
  return 0;
}

void add_code_options(CLI::App* sub, CodeOpts& c, bool with_kind) {
  if (with_kind)
    sub->add_option("--kind", c.kind, "RS, PRS, RM, PRM, Lift or PLift")
        ->capture_default_str();
  sub->add_option("--q", c.q, "field order")->required();
  sub->add_option("--m", c.m, "dimension")->required();
  sub->add_option("--k", c.k, "degree parameter")->required();
}

int run(int argc, char** argv) {
  CLI::App app{"Affine and projective lifted Reed-Solomon codes"};
  app.require_subcommand(1);
  int status = 0;

  TableOpts table;
  auto* t = app.add_subcommand("table", "dimension and rate table");
  t->add_option("--q", table.q, "field orders")->required();
  t->add_option("--m", table.m, "dimension")->capture_default_str();
  t->add_option("--mode", table.mode, "lift, rm or both")->capture_default_str();
  t->add_option("--k-min", table.k_min, "first row");
  t->add_option("--k-max", table.k_max, "last row");
  t->add_option("--format", table.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  t->add_option("--out", table.out, "output file or directory");
  t->callback([&] { status = cmd_table(table); });

  CodeOpts enc_code;
  std::string msg, enc_out;
  std::optional<std::uint64_t> enc_seed;
  auto* e = app.add_subcommand("encode", "encode a message file or a random message");
  add_code_options(e, enc_code, true);
  auto* msg_opt = e->add_option("--msg", msg, "message file, one element per line");
  auto* seed_opt = e->add_option("--seed", enc_seed, "seed for a random message");
  msg_opt->excludes(seed_opt);
  e->add_option("--out", enc_out, "word file");
  e->callback([&] {
    if (msg.empty() && !enc_seed) throw UsageError("encode needs --msg or --seed");
    status = cmd_encode(enc_code, msg, enc_seed, enc_out);
  });

  std::string cor_in, cor_out;
  double cor_delta = 0;
  std::uint64_t cor_seed = 0;
  bool erase = false;
  auto* c = app.add_subcommand("corrupt", "corrupt floor(delta n) symbols");
  c->add_option("--in", cor_in, "word file")->required();
  c->add_option("--delta", cor_delta, "corruption fraction")->required();
  c->add_option("--seed", cor_seed, "seed")->required();
  c->add_flag("--erase", erase, "mark corrupted symbols as erasures");
  c->add_option("--out", cor_out, "word file");
  c->callback([&] { status = cmd_corrupt(cor_in, cor_delta, cor_seed, erase, cor_out); });

  std::string lc_in, lc_point, lc_out;
  CorrectionConfig lc_cfg;
  auto* l = app.add_subcommand("local-correct", "locally correct one coordinate");
  l->add_option("--in", lc_in, "word file")->required();
  l->add_option("--point", lc_point, "\"(a:b:...)\" or support index")->required();
  l->add_option("--s", lc_cfg.s, "queries")->required();
  l->add_option("--seed", lc_cfg.seed, "seed")->required();
  l->add_flag("--unit-weights", lc_cfg.unit_weights, "read through an all-ones line");
  l->add_option("--out", lc_out, "JSON report");
  l->callback([&] { status = cmd_local_correct(lc_in, lc_point, lc_cfg, lc_out); });

  CodeOpts ex_code;
  CorrectionConfig ex_cfg;
  std::uint64_t trials = 0;
  std::string ex_out;
  auto* x = app.add_subcommand("experiment", "Monte-Carlo local correction");
  add_code_options(x, ex_code, true);
  x->add_option("--s", ex_cfg.s, "queries")->required();
  x->add_option("--delta", ex_cfg.delta, "corruption fraction")->required();
  x->add_option("--trials", trials, "trials")->required();
  x->add_option("--seed", ex_cfg.seed, "seed")->required();
  x->add_flag("--unit-weights", ex_cfg.unit_weights, "read through an all-ones line");
  x->add_option("--out", ex_out, "JSON report");
  x->callback([&] { status = cmd_experiment(ex_code, ex_cfg, trials, ex_out); });

  AnalyzeOpts an;
  auto* a = app.add_subcommand("analyze", "structural checks of PLift_q(m,k)");
  a->add_option("--q", an.q, "field order")->required();
  a->add_option("--m", an.m, "dimension")->required();
  a->add_option("--k", an.k, "degree parameter")->required();
  a->add_option("--checks", an.checks,
                "comma list of infoset, qc, distance, dual, shorten-puncture")
      ->capture_default_str();
  a->add_flag("--exact", an.exact, "exact minimum distance");
  a->add_option("--draws", an.draws, "random information-set draws");
  a->add_option("--seed", an.seed, "seed for random draws");
  a->add_option("--out", an.out, "JSON report");
  a->callback([&] { status = cmd_analyze(an); });

  std::string filter;
  auto* s = app.add_subcommand("selftest", "run the invariant suites");
  s->add_option("--filter", filter, "only checks whose name contains this");
  s->callback([&] { status = selftest::run(std::cout, filter) ? kCheckFailed : 0; });

  CodeOpts ex;
  std::string exp_out;
  auto* g = app.add_subcommand("export", "generator matrix as JSON");
  add_code_options(g, ex, true);
  g->add_option("--out", exp_out, "JSON file");
  g->callback([&] { status = cmd_export(ex, exp_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kUsage;
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsage;
  } catch (const std::length_error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsage;
  }
  return status;
}

}  // namespace
}  // namespace plift

int main(int argc, char** argv) { return plift::run(argc, argv); }
