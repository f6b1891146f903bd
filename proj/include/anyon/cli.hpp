// Copyright 2026 The Anyon Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace anyon {

/** Parsed command line; see run_cli for the commands. */
struct RunConfig {
  std::string command;
  std::string ring;
  std::string ring_file;
  std::string table_file;
  int max_component_size = 45;
  int workers = 1;
  bool sign_enumeration = false;
  bool check = false;
  bool verbose = false;
  bool numeric = false;
  std::string anyon;
  std::string root;
  int strands = 3;
  std::string target_file;
  std::string generators_file;
  /** q of the quotient phase e^{i pi q}; empty for none. */
  std::string phase;
  int max_len = 11;
  double tol = 1e-2;
  std::vector<int> exponents{1, -1, 2, -2, 3, -3, 4, -4};
  std::size_t cap = 100000;
  std::string output;
  std::string cache_dir = ".anyon-cache";
  bool no_cache = false;
  int digits = 17;
};

/** Exit codes of run_cli. */
enum ExitCode { kExitOk = 0, kExitDomain = 1, kExitUnsolvable = 2, kExitIo = 3 };

/**
 * Entry point of the command-line tool. Commands: list-rings, solve, verify,
 * braid, gate order, gate weave. Results go to out, diagnostics to err.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace anyon
