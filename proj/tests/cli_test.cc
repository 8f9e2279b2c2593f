// Copyright 2026 The Repression Lab Authors. All rights reserved.
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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

const std::string kCli = REPRESSION_CLI_PATH;
const std::string kConfigs = REPRESSION_CONFIG_DIR;

int Run(const std::string& args) {
  const int status = std::system((kCli + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string Capture(const std::string& args) {
  std::string out;
  FILE* pipe = popen((kCli + " " + args + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) return out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  return out;
}

std::string Cfg(const std::string& name) {
  return "--config " + kConfigs + "/" + name;
}

TEST_CASE("check exits 0 when the assumption holds and 2 when it fails") {
  CHECK(Run("check " + Cfg("p1.json")) == 0);
  CHECK(Run("check " + Cfg("p2.json")) == 0);
  CHECK(Run("check --assumption mild " + Cfg("p1_alphaB_0.5.json")) == 2);
}

TEST_CASE("solvers print their thresholds") {
  const std::string mild = Capture("solve-mild " + Cfg("p1.json"));
  CHECK(mild.find("\"c_tilde\": 0.355641105367") != std::string::npos);
  const std::string severe = Capture("solve-severe " + Cfg("p2.json"));
  CHECK(severe.find("\"c_tilde_B\": 0.228527199506") != std::string::npos);
  CHECK(Run("solve-mild " + Cfg("p2.json")) == 2);
}

TEST_CASE("bad configs and arguments exit 5") {
  CHECK(Run("solve-mild --config /nonexistent/cfg.json") == 5);
  CHECK(Run("solve-mild --bogus-flag") == 5);
  CHECK(Run("sweep " + Cfg("p1.json") + " --axis rho --start 0 --end 1") == 5);
}

TEST_CASE("raw estimates reproduce the mild example") {
  const std::string out = Capture(
      "estimate --q 0.65 --q-prime 0.457142857143 --p 0.415441918908 "
      "--p-R 0.6 --p-NN 0.244358894633");
  CHECK(out.find("\"total_hat\": 0.7710830242") != std::string::npos);
}

TEST_CASE("undefined estimates exit 3") {
  CHECK(Run("estimate --q 1 --q-prime 0.5 --p 0.4 --p-R 0.6 --p-NN 0.2") ==
        3);
}

TEST_CASE("sweep csv has one row per step") {
  const std::string out = Capture("sweep " + Cfg("p1.json") + " --steps 5");
  int lines = 0;
  for (char ch : out) lines += ch == '\n';
  CHECK(lines == 6);
  CHECK(out.rfind("axis_value,assumption_ok,c_tilde,", 0) == 0);
}

}  // namespace
