// Copyright 2026 The szego Authors
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


#include "szego/experiments.h"

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "szego/sections.h"

namespace szego {
namespace {

std::string csv(const Table& table) {
  std::ostringstream out;
  write_csv(table, out);
  return out.str();
}

TEST(ParseComplex, Forms) {
  EXPECT_EQ(parse_complex("1"), Complex(1.0, 0.0));
  EXPECT_EQ(parse_complex("-0.5"), Complex(-0.5, 0.0));
  EXPECT_EQ(parse_complex("0.3+0.2i"), Complex(0.3, 0.2));
  EXPECT_EQ(parse_complex("2i"), Complex(0.0, 2.0));
  EXPECT_EQ(parse_complex("-i"), Complex(0.0, -1.0));
  EXPECT_EQ(parse_complex("1e-3-4i"), Complex(1e-3, -4.0));
  EXPECT_THROW(parse_complex("abc"), ConfigError);
  EXPECT_THROW(parse_complex(""), ConfigError);
}

TEST(Config, Validation) {
  ExperimentConfig c;
  EXPECT_NO_THROW(c.validate());
  c.kmax = 0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = ExperimentConfig();
  c.nu = 0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = ExperimentConfig();
  c.point = "nowhere";
  EXPECT_THROW(c.validate(), ConfigError);
  c.point = "1,0,0,0";
  EXPECT_THROW(c.validate(), ConfigError);
  c.point = "1,0,0,1i";
  EXPECT_NO_THROW(c.validate());
  c = ExperimentConfig();
  c.kmin = 3;
  c.kmax = 11;
  c.kstep = 4;
  EXPECT_EQ(c.k_values(), (std::vector<int>{3, 7, 11}));
}

TEST(Config, PointPresets) {
  ExperimentConfig c;
  c.model = ModelSpace::P1xP1(4);
  c.point = "orthonormal-ZW";
  EXPECT_EQ(stabilizer(resolve_point(c)).order, 3);
  c.point = "parallel-ZW";
  EXPECT_EQ(stabilizer(resolve_point(c)).order, 5);
  c.point = "generic";
  EXPECT_EQ(stabilizer(resolve_point(c)).order, 1);
  c.model = ModelSpace::P1();
  c.point = "0.6,0.8i";
  EXPECT_NEAR(std::abs(resolve_point(c).z()(1) - Complex(0.0, 0.8)), 0.0, 1e-15);
}

TEST(Dim, ParityAndP1Rows) {
  ExperimentConfig c;
  c.model = ModelSpace::P1xP1(3);
  c.kmin = 2;
  c.kmax = 12;
  c.threads = 2;
  const Table t = run_dim(c);
  ASSERT_EQ(t.rows.size(), 11u);
  for (const ResultRow& row : t.rows) {
    if (row.k % 2 == 0) {
      EXPECT_EQ(row.exact, 0.0);
    }
  }
  c.model = ModelSpace::P1();
  c.nu = 3;
  for (const ResultRow& row : run_dim(c).rows) EXPECT_EQ(row.exact, 3.0 * row.k);
}

TEST(Csv, DeterministicWithConventionColumns) {
  ExperimentConfig c;
  c.kmin = 3;
  c.kmax = 9;
  c.threads = 3;
  const std::string a = csv(run_diag(c));
  c.threads = 1;
  const std::string b = csv(run_diag(c));
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("# tool: szego"), std::string::npos);
  EXPECT_NE(a.find("volume_norm,fiber_norm,bracket,branch"), std::string::npos);
  std::istringstream lines(a);
  std::string line;
  int data = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("diag,", 0) == 0) {
      ++data;
      EXPECT_NE(line.find("area-pi,1,thm,principal"), std::string::npos);
    }
  }
  EXPECT_EQ(data, 7);
}

TEST(Diag, P1RatioIsOne) {
  ExperimentConfig c;
  c.model = ModelSpace::P1();
  c.kmin = 1;
  c.kmax = 40;
  const Table t = run_diag(c);
  for (const ResultRow& row : t.rows) {
    ASSERT_TRUE(row.ratio.has_value());
    EXPECT_NEAR(*row.ratio, 1.0, 1e-12);
  }
  EXPECT_TRUE(t.check_passed);
}

TEST(NearDiag, ZeroColumnReducesToDiag) {
  ExperimentConfig c;
  c.kmin = 10;
  c.kmax = 10;
  const Table near = run_neardiag(c);
  const Table diag = run_diag(c);
  ASSERT_FALSE(near.rows.empty());
  bool found = false;
  for (const ResultRow& row : near.rows) {
    for (const auto& [key, value] : row.meta) {
      if (key == "v_norm" && std::stod(value) == 0.0) {
        found = true;
        EXPECT_NEAR(row.exact, diag.rows.front().exact, 1e-12 * diag.rows.front().exact);
      }
    }
  }
  EXPECT_TRUE(found);
  c.model = ModelSpace::P1xP1(4);
  c.point = "orthonormal-ZW";
  EXPECT_THROW(run_neardiag(c), ConfigError);
}

TEST(Oracle, BudgetGuard) {
  ExperimentConfig c;
  c.kmin = 100;
  c.kmax = 100;
  c.oracle_pairs = 1;
  EXPECT_THROW(run_oracle(c), BudgetExceeded);
}

TEST(Budget, TruncatesSweep) {
  ExperimentConfig c;
  c.model = ModelSpace::P1xP1(3);
  c.kmin = 1;
  c.kmax = 4001;
  c.kstep = 2;
  c.threads = 1;
  c.time_budget_seconds = 0.2;
  const Table t = run_diag(c);
  EXPECT_TRUE(t.truncated);
  EXPECT_LT(t.rows.size(), c.k_values().size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) EXPECT_EQ(t.rows[i].k, 1 + 2 * static_cast<int>(i));
}

}  // namespace
}  // namespace szego
