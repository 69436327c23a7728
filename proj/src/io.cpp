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

#include "plift/io.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace plift {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T field_of(const Json& j, const char* key) {
  if (!j.contains(key))
    throw std::invalid_argument(std::string("descriptor lacks \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(std::string("descriptor field \"") + key +
                                "\" has the wrong type");
  }
}

}  // namespace

Json to_json(const CodeDescriptor& d) {
  Json j;
  j["kind"] = to_string(d.kind);
  j["q"] = d.q;
  j["m"] = d.m;
  j["k"] = d.k;
  if (d.v) j["v"] = *d.v;
  j["dim"] = d.dim;
  j["length"] = d.length;
  return j;
}

CodeDescriptor descriptor_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("descriptor must be a JSON object");
  CodeDescriptor d{};
  d.kind = parse_code_kind(field_of<std::string>(j, "kind"));
  d.q = field_of<int>(j, "q");
  d.m = field_of<int>(j, "m");
  d.k = field_of<int>(j, "k");
  if (j.contains("v")) d.v = field_of<int>(j, "v");
  d.dim = field_of<std::size_t>(j, "dim");
  d.length = field_of<std::size_t>(j, "length");
  return d;
}

MonomialCode code_from_descriptor(const CodeDescriptor& d) {
  MonomialCode c(d.kind, make_field(d.q), d.m, d.k);
  if (c.dim() != d.dim || c.length() != d.length || c.descriptor().v != d.v)
    throw std::invalid_argument("descriptor does not match the code it names");
  return c;
}

void write_word(std::ostream& out, const Word& w, const FiniteField& F) {
  out << to_json(w.descriptor).dump() << '\n';
  for (const Symbol& s : w.symbols) out << (s ? F.format(*s) : "?") << '\n';
}

Word read_word(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty word file");
  Word w;
  try {
    w.descriptor = descriptor_from_json(Json::parse(line));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad descriptor line: ") + e.what());
  }
  const FieldPtr F = make_field(w.descriptor.q);
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t == "?") w.symbols.emplace_back(std::nullopt);
    else w.symbols.emplace_back(F->parse(t));
  }
  if (w.symbols.size() != w.descriptor.length)
    throw std::invalid_argument("word has " + std::to_string(w.symbols.size()) +
                                " symbols, descriptor says " +
                                std::to_string(w.descriptor.length));
  return w;
}

std::vector<Elem> read_elements(std::istream& in, const FiniteField& F) {
  std::vector<Elem> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (!t.empty()) out.push_back(F.parse(t));
  }
  return out;
}

Json to_json(const ExperimentReport& r) {
  Json j;
  j["trials"] = r.trials;
  j["successes"] = r.successes;
  j["wrong"] = r.wrong;
  j["erasures"] = r.erasures;
  j["success_rate"] = r.success_rate();
  j["query_histogram"] = r.histogram;
  return j;
}

Json to_json(const InformationSet& s, const Support& support) {
  Json j;
  j["dim"] = s.dim;
  j["rank"] = s.rank;
  j["ok"] = s.ok();
  Json pts = Json::array();
  for (std::size_t p : s.positions) pts.push_back(support.format(p));
  j["points"] = pts;
  return j;
}

Json to_json(const QcCertificate& c) {
  Json j;
  j["n"] = c.n;
  j["d"] = c.d;
  j["represents"] = c.represents;
  j["twisted_matches"] = c.twisted_matches;
  j["cycle_structure"] = c.cycle_structure;
  j["invariant"] = c.invariant;
  j["ok"] = c.ok();
  j["twist"] = c.twist;
  j["positions"] = c.positions;
  j["cycles"] = c.cycles;
  return j;
}

Json to_json(const DistanceReport& r) {
  Json j;
  j["design_distance"] = r.design_distance;
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  if (r.exact) {
    j["exact"] = *r.exact;
    j["method"] = r.method;
  }
  j["consistent"] = r.consistent();
  return j;
}

Json to_json(const DualityReport& r) {
  Json j;
  j["q"] = r.q;
  j["m"] = r.m;
  j["n"] = r.n;
  j["code_dim"] = r.code_dim;
  j["dual_dim"] = r.dual_dim;
  j["incidence_rank"] = r.incidence_rank;
  j["equal"] = r.equal;
  if (r.expected_rank) j["expected_rank"] = *r.expected_rank;
  if (r.expected_dim) j["expected_dim"] = *r.expected_dim;
  j["ok"] = r.ok();
  return j;
}

Json to_json(const ShortenPunctureReport& r) {
  Json j;
  j["shorten_equal"] = r.shorten_equal;
  j["puncture_equal"] = r.puncture_equal;
  j["ok"] = r.ok();
  return j;
}

Json generator_json(const MonomialCode& c) {
  const FiniteField& F = c.field();
  Json j;
  j["descriptor"] = to_json(c.descriptor());
  Json pts = Json::array();
  for (std::size_t i = 0; i < c.length(); ++i) pts.push_back(c.support().format(i));
  j["support"] = pts;
  j["degrees"] = c.degrees().tuples;
  Json rows = Json::array();
  for (std::size_t r = 0; r < c.generator().rows(); ++r) {
    Json row = Json::array();
    for (Elem x : c.generator().row(r)) row.push_back(F.format(x));
    rows.push_back(row);
  }
  j["generator"] = rows;
  return j;
}

}  // namespace plift
