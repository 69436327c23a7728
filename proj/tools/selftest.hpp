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

// Property suites behind `plift selftest`: one named check per invariant,
// each on instances small enough to finish in seconds.

#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace plift::selftest {

struct Check {
  std::string name;
  std::function<bool()> run;
};

std::vector<Check> suite();

// Runs every check whose name contains `filter`, printing one PASS/FAIL line
// per check and a summary. Returns the number of failures.
int run(std::ostream& out, const std::string& filter = "");

}  // namespace plift::selftest
