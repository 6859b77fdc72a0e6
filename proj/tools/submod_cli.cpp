// Copyright 2026 The Authors.
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

#include <iostream>
#include <string>
#include <vector>

#include "submod/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const submod::cli::Outcome outcome = submod::cli::run(args);
  std::cout << submod::cli::render(outcome);
  if (outcome.report.contains("error") && outcome.report["error"].is_object()) {
    std::cerr << "submod: " << outcome.report["error"]["code"].get<std::string>() << ": "
              << outcome.report["error"]["message"].get<std::string>() << "\n";
  }
  return outcome.exit_code;
}
