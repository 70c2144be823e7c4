// Copyright 2026 The valfield Authors
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


#ifndef VALFIELD_TOOLS_COMMANDS_HPP
#define VALFIELD_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace valfield::cli {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed0f0a1d5ULL;

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

/// A key=value block, a blank line, then free text.
class Report {
 public:
  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, const char* value) { set(key, std::string(value)); }
  void set(const std::string& key, bool value) { set(key, value ? "true" : "false"); }
  template <class T>
  void set(const std::string& key, const T& value) {
    set(key, std::to_string(value));
  }
  void line(const std::string& text) { body_.push_back(text); }
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
  std::vector<std::string> body_;
};

/// Parameters shared by the verification suites.
struct SuiteOptions {
  std::string suite;
  std::int64_t p = 5;
  std::int64_t u = 2;
  std::string s = "5";
  std::string t = "2";
  std::int64_t precision = 2;
  std::int64_t digits = 16;
  std::int64_t trials = 0;  // 0: the suite's default
  std::uint64_t seed = kDefaultSeed;
  std::string tau = "both";
};

/// Runs one suite; fills the report and returns kPass or kFail. Throws
/// std::invalid_argument for an unknown suite or bad parameters.
int run_suite(const SuiteOptions& options, Report& report);

/// Names accepted by run_suite.
std::vector<std::string> suite_names();

/// Entry point shared by the binary and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace valfield::cli

#endif  // VALFIELD_TOOLS_COMMANDS_HPP
