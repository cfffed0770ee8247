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

// szego: k-sweeps of equivariant Szego kernels on P^1 and P^1 x P^1.
//
// Exit codes: 0 success, 2 configuration error, 3 failed --assert check.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "szego/experiments.h"
#include "szego/kernels.h"
#include "szego/sections.h"
#include "szego/su2.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitCheck = 3;

struct Options {
  std::string model = "p1xp1";
  int r = 2;
  int nu = 1;
  int kmin = 1;
  int kmax = 20;
  int kstep = 1;
  std::string point = "generic";
  std::uint64_t seed = 1;
  double tol = 0.0;
  std::string fiber = "1";
  std::string bracket = "thm";
  std::string out;
  bool assert_check = false;
  double budget = 60.0;
  int threads = 0;
  int pairs = 20;
};

szego::ExperimentConfig to_config(const Options& o, bool tol_given) {
  szego::ExperimentConfig c;
  if (o.model == "p1") {
    c.model = szego::ModelSpace::P1();
  } else {
    if (o.r < 2) throw szego::ConfigError("--r must be >= 2");
    c.model = szego::ModelSpace::P1xP1(o.r);
  }
  c.nu = o.nu;
  c.kmin = o.kmin;
  c.kmax = o.kmax;
  c.kstep = o.kstep;
  c.point = o.point;
  c.seed = o.seed;
  if (tol_given) c.tol = o.tol;
  c.fiber = o.fiber == "inv2pi" ? szego::FiberNorm::kInverseTwoPi : szego::FiberNorm::kUnit;
  c.bracket = szego::parse_bracket(o.bracket);
  c.out = o.out;
  c.time_budget_seconds = o.budget;
  c.threads = o.threads;
  c.oracle_pairs = o.pairs;
  c.validate();
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant Szego kernel experiments on P^1 and P^1 x P^1", "szego"};
  app.set_version_flag("--version", szego::kVersion);
  app.require_subcommand(1);

  Options o;
  const std::map<std::string, std::function<szego::Table(const szego::ExperimentConfig&)>>
      runners{{"dim", szego::run_dim},
              {"diag", szego::run_diag},
              {"neardiag", szego::run_neardiag},
              {"decay", szego::run_decay},
              {"oracle", szego::run_oracle}};
  const std::map<std::string, std::string> blurbs{
      {"dim", "dimension of the isotype against the volume integral"},
      {"diag", "on-diagonal kernel against the central and non-central predictions"},
      {"neardiag", "near-diagonal Gaussian decay along transverse directions"},
      {"decay", "off-orbit decay and an on-orbit control"},
      {"oracle", "isotypic kernel against Haar-quadrature projection"}};

  for (const auto& [name, run] : runners) {
    CLI::App* sub = app.add_subcommand(name, blurbs.at(name));
    sub->add_option("--model", o.model, "model space")
        ->check(CLI::IsMember({"p1", "p1xp1"}))
        ->capture_default_str();
    sub->add_option("--r", o.r, "second factor degree on P^1 x P^1")->capture_default_str();
    sub->add_option("--nu", o.nu, "irreducible representation V_nu")->capture_default_str();
    sub->add_option("--kmin", o.kmin)->capture_default_str();
    sub->add_option("--kmax", o.kmax)->capture_default_str();
    sub->add_option("--kstep", o.kstep)->capture_default_str();
    sub->add_option("--point", o.point,
                    "generic, orthonormal-ZW, parallel-ZW or Z0,Z1,W0,W1")
        ->capture_default_str();
    sub->add_option("--seed", o.seed)->capture_default_str();
    sub->add_option("--tol", o.tol, "tolerance of the --assert check");
    sub->add_option("--fiber-norm", o.fiber, "fiber direction norm")
        ->check(CLI::IsMember({"1", "inv2pi"}))
        ->capture_default_str();
    sub->add_option("--bracket", o.bracket, "non-central prefactor convention")
        ->check(CLI::IsMember({"thm", "sec4"}))
        ->capture_default_str();
    sub->add_option("--out", o.out, "CSV path; standard output when omitted");
    sub->add_flag("--assert", o.assert_check, "exit 3 when the subcommand check fails");
    sub->add_option("--budget", o.budget, "seconds before the sweep is truncated")
        ->capture_default_str();
    sub->add_option("--threads", o.threads, "worker threads, 0 for all cores")
        ->capture_default_str();
    sub->add_option("--pairs", o.pairs, "random point pairs for oracle")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  const bool tol_given = chosen->count("--tol") > 0;
  if (chosen->count("--r") > 0 && o.model == "p1") {
    std::cerr << "szego: --r applies to --model p1xp1 only\n";
    return kExitConfig;
  }

  szego::Table table;
  try {
    const szego::ExperimentConfig config = to_config(o, tol_given);
    table = runners.at(name)(config);
  } catch (const szego::BudgetExceeded& e) {
    std::cerr << "szego: " << e.what() << "\n";
    return kExitConfig;
  } catch (const szego::QuadratureError& e) {
    std::cerr << "szego: " << e.what() << "\n";
    return kExitConfig;
  } catch (const szego::GeometryError& e) {
    std::cerr << "szego: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    // ConfigError and ModelMismatch derive from it.
    std::cerr << "szego: " << e.what() << "\n";
    return kExitConfig;
  }

  if (o.out.empty()) {
    szego::write_csv(table, std::cout);
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      std::cerr << "szego: cannot open " << o.out << "\n";
      return kExitConfig;
    }
    szego::write_csv(table, file);
  }
  std::cerr << name << ": " << (table.check_passed ? "check passed" : "check failed");
  if (!table.check_message.empty()) std::cerr << " (" << table.check_message << ")";
  std::cerr << "\n";
  if (o.assert_check && !table.check_passed) return kExitCheck;
  return kExitOk;
}
