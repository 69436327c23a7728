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

// Text formats: word files (a JSON code descriptor on the first line, then
// one symbol per line with "?" for an erasure), message files, and JSON
// renderings of the experiment and analysis reports.

#pragma once

#include <iosfwd>
#include <vector>

#include <nlohmann/json.hpp>

#include "plift/analysis.hpp"
#include "plift/decode.hpp"

namespace plift {

using Json = nlohmann::ordered_json;

Json to_json(const CodeDescriptor& d);
// Throws std::invalid_argument on missing or malformed fields.
CodeDescriptor descriptor_from_json(const Json& j);

// The code a descriptor names, over the default field of order q. Throws
// std::invalid_argument when dim or length disagree with the construction.
MonomialCode code_from_descriptor(const CodeDescriptor& d);

struct Word {
  CodeDescriptor descriptor;
  std::vector<Symbol> symbols;
};

void write_word(std::ostream& out, const Word& w, const FiniteField& F);
// Throws std::invalid_argument on a bad header, a bad symbol or a symbol
// count different from the descriptor length.
Word read_word(std::istream& in);

// One element per line; blank lines are skipped.
std::vector<Elem> read_elements(std::istream& in, const FiniteField& F);

Json to_json(const ExperimentReport& r);
Json to_json(const InformationSet& s, const Support& support);
Json to_json(const QcCertificate& c);
Json to_json(const DistanceReport& r);
Json to_json(const DualityReport& r);
Json to_json(const ShortenPunctureReport& r);

// Descriptor, support points, degree tuples and generator rows, with
// elements in field notation.
Json generator_json(const MonomialCode& c);

}  // namespace plift
