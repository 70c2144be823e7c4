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


#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"

namespace valfield::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "valfield");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l)) {
    if (l == line) return true;
  }
  return false;
}

TEST(Expand, OneHalf) {
  const Result r = invoke({"expand", "1", "2", "--p", "5"});
  ASSERT_EQ(r.code, kPass) << r.err;
  EXPECT_TRUE(has_line(r.out, "digit_list=3,2,2,2,2,2,2,2,2,2"));
  EXPECT_TRUE(has_line(r.out, "preperiod=1"));
  EXPECT_TRUE(has_line(r.out, "period=1"));
  EXPECT_NE(r.out.find("\n\n1/2 = 3·5^0 + 2·5 + 2·5^2"), std::string::npos) << r.out;
  EXPECT_EQ(invoke({"expand", "1", "2", "--p", "5"}).out, r.out);
}

TEST(Expand, Errors) {
  EXPECT_EQ(invoke({"expand", "1", "0", "--p", "5"}).code, kUsage);
  EXPECT_EQ(invoke({"expand", "1", "2", "--p", "6"}).code, kUsage);
  EXPECT_EQ(invoke({"expand", "1"}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"--help"}).code, kPass);
}

TEST(Sqrt, Report) {
  Result r = invoke({"sqrt", "2", "--p", "5"});
  ASSERT_EQ(r.code, kPass);
  EXPECT_TRUE(has_line(r.out, "exists=false"));
  r = invoke({"sqrt", "6", "--p", "5", "--digits", "4"});
  EXPECT_TRUE(has_line(r.out, "exists=true"));
  EXPECT_TRUE(has_line(r.out, "witness=1,3,0,4@0(5)"));
}

TEST(Ext, Calculator) {
  Result r = invoke({"ext", "sqrtu*sqrtu", "--p", "5", "--u", "2", "--digits", "4"});
  ASSERT_EQ(r.code, kPass) << r.err;
  EXPECT_TRUE(has_line(r.out, "b=0@inf(5)")) << r.out;
  r = invoke({"ext", "1/(1+sqrtu)", "--digits", "4"});
  EXPECT_TRUE(has_line(r.out, "a=4,4,4,4@0(5)"));
  EXPECT_TRUE(has_line(r.out, "b=1,0,0,0@0(5)"));
  EXPECT_TRUE(has_line(r.out, "omega=0"));
  r = invoke({"ext", "5"});
  EXPECT_TRUE(has_line(r.out, "omega=1"));
  EXPECT_TRUE(has_line(r.out, "abs=5^(-1)"));
  EXPECT_EQ(invoke({"ext", "1/0"}).code, kUsage);
}

TEST(Quat, Calculator) {
  Result r = invoke({"quat", "1+i+j+k"});
  ASSERT_EQ(r.code, kPass) << r.err;
  EXPECT_TRUE(has_line(r.out, "norm=4"));
  EXPECT_TRUE(has_line(r.out, "abs=1"));
  EXPECT_TRUE(has_line(r.out, "inverse=1/4 - 1/4 i - 1/4 j - 1/4 k"));
  r = invoke({"quat", "conj(i)"});
  EXPECT_TRUE(has_line(r.out, "value=-i"));
  r = invoke({"quat", "i"});
  EXPECT_TRUE(has_line(r.out, "norm=-5"));
  EXPECT_TRUE(has_line(r.out, "abs=5^(-1/2)"));
  EXPECT_TRUE(has_line(r.out, "inverse=1/5 i"));
  r = invoke({"quat", "i j + j i"});
  EXPECT_TRUE(has_line(r.out, "value=0"));
}

TEST(Quat, Errors) {
  Result r = invoke({"quat", "inv(0)"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  r = invoke({"quat", "1+*i"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("at position 2"), std::string::npos) << r.err;
  r = invoke({"quat", "inv(1+i)", "--s", "1", "--t", "1"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("witness: 1 + i"), std::string::npos) << r.err;
  r = invoke({"quat", "1+i", "--s", "1", "--t", "1"});
  EXPECT_EQ(r.code, kPass);
  EXPECT_TRUE(has_line(r.out, "abs=undefined"));
  EXPECT_TRUE(has_line(r.out, "inverse=none"));
}

TEST(Laurent, Arithmetic) {
  Result r = invoke({"laurent", "1 + T + O(T^4)", "--p", "5", "--inverse"});
  ASSERT_EQ(r.code, kPass) << r.err;
  EXPECT_NE(r.out.find("value=1 + 4·T + 1·T^2 + 4·T^3 + O(T^4)"), std::string::npos) << r.out;
  EXPECT_EQ(invoke({"laurent", "1 + T", "--p", "5"}).code, kUsage);
}

TEST(Division, Verdicts) {
  Result r = invoke({"division", "--s", "5", "--t", "2", "--p", "5"});
  ASSERT_EQ(r.code, kPass) << r.err;
  EXPECT_TRUE(has_line(r.out, "verdict=division (criterion)"));
  r = invoke({"division", "--s", "5", "--t", "4", "--p", "5"});
  EXPECT_TRUE(has_line(r.out, "verdict=split (witness)"));
}

TEST(Model, MembershipReport) {
  Result r = invoke({"model", "--p", "5", "--u", "2", "-N", "1", "--tau", "tau2", "--monomial", "1"});
  ASSERT_EQ(r.code, kPass) << r.err;
  EXPECT_TRUE(has_line(r.out, "member=false"));
  EXPECT_TRUE(has_line(r.out, "witness_index=1"));
  r = invoke({"model", "-N", "1", "--tau", "tau1", "--monomial", "3"});
  EXPECT_TRUE(has_line(r.out, "member=true"));
  r = invoke({"model", "-N", "1"});
  EXPECT_NE(r.out.find("index=24 a=4 b=4 omega=0"), std::string::npos);
}

TEST(Verify, Suites) {
  for (const auto& [suite, extra] : std::vector<std::pair<std::string, std::vector<std::string>>>{
           {"strong-triangle", {"--trials", "500"}},
           {"min-formula", {"--trials", "1000"}},
           {"involution", {"--tau", "tau2", "-N", "2"}},
           {"product-formula", {"--trials", "200"}},
           {"density", {"-N", "1", "--trials", "5"}}}) {
    std::vector<std::string> args{"verify", suite};
    args.insert(args.end(), extra.begin(), extra.end());
    const Result r = invoke(args);
    EXPECT_EQ(r.code, kPass) << suite << "\n" << r.out << r.err;
    EXPECT_TRUE(has_line(r.out, "result=pass")) << suite;
    EXPECT_EQ(invoke(args).out, r.out) << suite << " is not reproducible";
  }
  EXPECT_EQ(invoke({"verify", "nope"}).code, kUsage);
  EXPECT_EQ(suite_names().size(), 5u);
}

}  // namespace
}  // namespace valfield::cli
