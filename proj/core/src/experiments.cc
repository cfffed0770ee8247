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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "szego/kernels.h"

namespace szego {

namespace {

constexpr double kPi = std::numbers::pi;

// Transverse offset of the off-orbit partner in run_decay.
constexpr double kDecayOffset = 0.6;

// Chart magnitudes |v| sampled by run_neardiag.
constexpr std::array<double, 4> kNearDiagRadii = {0.5, 1.0, 1.5, 2.0};

std::string fmt_double(double v) {
  if (std::isnan(v)) return "NA";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt_complex(Complex c) {
  return fmt_double(c.real()) + (c.imag() < 0 ? "" : "+") + fmt_double(c.imag()) + "i";
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// Runs task(0..n-1) on a pool and returns the length of the completed prefix.
// No task starts after the deadline; rows are consumed in index order.
std::size_t run_ordered(std::size_t n, int threads, double budget_seconds,
                        const std::function<void(std::size_t)>& task) {
  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration<double>(budget_seconds);
  std::atomic<std::size_t> next{0};
  std::vector<char> done(n, 0);
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      if (std::chrono::steady_clock::now() > deadline) return;
      const std::size_t i = next++;
      if (i >= n) return;
      try {
        task(i);
        done[i] = 1;
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
        return;
      }
    }
  };
  unsigned count = threads > 0 ? static_cast<unsigned>(threads)
                               : std::max(1u, std::thread::hardware_concurrency());
  count = static_cast<unsigned>(std::min<std::size_t>(count, std::max<std::size_t>(n, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  std::size_t prefix = 0;
  while (prefix < n && done[prefix]) ++prefix;
  return prefix;
}

Table make_table(const std::string& experiment, const ExperimentConfig& config,
                 const BundlePoint* x) {
  Table t;
  t.experiment = experiment;
  t.header = {
      {"tool", kVersion},
      {"experiment", experiment},
      {"model", config.model.is_product() ? "p1xp1" : "p1"},
      {"r", std::to_string(config.model.r())},
      {"nu", std::to_string(config.nu)},
      {"kmin", std::to_string(config.kmin)},
      {"kmax", std::to_string(config.kmax)},
      {"kstep", std::to_string(config.kstep)},
      {"point", config.point},
      {"seed", std::to_string(config.seed)},
      {"tol", config.tol ? fmt_double(*config.tol) : "default"},
      {"volume_norm", "area(P1)=pi"},
      {"pairing", "-trace"},
      {"fiber_norm", to_string(config.fiber)},
      {"bracket", to_string(config.bracket)},
      {"branch", "principal"},
  };
  if (x != nullptr) {
    t.header.emplace_back("z", fmt_complex(x->z()(0)) + "," + fmt_complex(x->z()(1)));
    if (x->model().is_product()) {
      t.header.emplace_back("w", fmt_complex(x->w()(0)) + "," + fmt_complex(x->w()(1)));
    }
  }
  return t;
}

// Convention flags carried by every row.
void add_convention_columns(const ExperimentConfig& config, ResultRow& row) {
  row.meta.emplace_back("volume_norm", "area-pi");
  row.meta.emplace_back("fiber_norm", to_string(config.fiber));
  row.meta.emplace_back("bracket", to_string(config.bracket));
  row.meta.emplace_back("branch", "principal");
}

void set_ratio(ResultRow& row) {
  if (row.predicted && *row.predicted != 0.0) row.ratio = row.exact / *row.predicted;
}

double tolerance(const ExperimentConfig& config, double fallback) {
  return config.tol.value_or(fallback);
}

void finish(Table& t, std::size_t completed, std::size_t planned) {
  t.truncated = completed < planned;
  t.header.emplace_back("truncated", t.truncated ? "true" : "false");
}

BundlePoint random_point(const ModelSpace& model, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  auto spinor = [&] {
    return Vec2(Complex(gauss(rng), gauss(rng)), Complex(gauss(rng), gauss(rng)));
  };
  const Vec2 z = spinor();
  const Vec2 w = spinor();
  return BundlePoint(model, z, w);
}

TangentVector chart_direction(const BundlePoint& x) {
  if (!x.model().is_product()) {
    TangentVector v(1);
    v(0) = 1.0;
    return v;
  }
  const auto dirs = transverse_directions(x);
  if (dirs.empty()) throw ConfigError("point has no transverse direction");
  return dirs.front();
}

}  // namespace

void ExperimentConfig::validate() const {
  if (nu < 1) throw ConfigError("--nu must be >= 1");
  if (kmin < 1) throw ConfigError("--kmin must be >= 1");
  if (kmax < kmin) throw ConfigError("--kmax must be >= --kmin");
  if (kstep < 1) throw ConfigError("--kstep must be >= 1");
  if (tol && !(*tol > 0.0)) throw ConfigError("--tol must be positive");
  if (!(time_budget_seconds > 0.0)) throw ConfigError("--budget must be positive");
  if (threads < 0) throw ConfigError("--threads must be >= 0");
  if (oracle_pairs < 1) throw ConfigError("--pairs must be >= 1");
  resolve_point(*this);
}

std::vector<int> ExperimentConfig::k_values() const {
  std::vector<int> out;
  for (int k = kmin; k <= kmax; k += kstep) out.push_back(k);
  return out;
}

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  if (s.empty()) throw ConfigError("empty complex number");
  auto to_double = [&](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw ConfigError("cannot parse '" + text + "' as a complex number");
    }
    if (used != part.size()) throw ConfigError("cannot parse '" + text + "' as a complex number");
    return v;
  };
  if (s.back() != 'i' && s.back() != 'j') return {to_double(s), 0.0};
  s.pop_back();
  // Split before the last sign that is not part of an exponent.
  std::size_t split_at = std::string::npos;
  for (std::size_t p = s.size(); p-- > 1;) {
    if ((s[p] == '+' || s[p] == '-') && s[p - 1] != 'e' && s[p - 1] != 'E') {
      split_at = p;
      break;
    }
  }
  if (split_at == std::string::npos) return {0.0, to_double(s)};
  return {to_double(s.substr(0, split_at)), to_double(s.substr(split_at))};
}

BundlePoint resolve_point(const ExperimentConfig& config) {
  const ModelSpace& model = config.model;
  const std::string& p = config.point;
  if (p == "generic") {
    return BundlePoint(model, Vec2(0.8, Complex(0.2, 0.3)), Vec2(0.3, Complex(-0.5, 0.7)));
  }
  if (p == "orthonormal-ZW") return BundlePoint(model, Vec2(1.0, 0.0), Vec2(0.0, 1.0));
  if (p == "parallel-ZW") return BundlePoint(model, Vec2(1.0, 0.0), Vec2(1.0, 0.0));
  const auto parts = split(p, ',');
  if (parts.size() != 4 && !(parts.size() == 2 && !model.is_product())) {
    throw ConfigError("--point must be a preset (generic, orthonormal-ZW, parallel-ZW) "
                      "or Z0,Z1,W0,W1");
  }
  std::array<Complex, 4> c{1.0, 0.0, 1.0, 0.0};
  for (std::size_t i = 0; i < parts.size(); ++i) c[i] = parse_complex(trim(parts[i]));
  const Vec2 z(c[0], c[1]);
  const Vec2 w(c[2], c[3]);
  if (z.norm() == 0.0 || w.norm() == 0.0) throw ConfigError("--point spinors must be nonzero");
  return BundlePoint(model, z, w);
}

void write_csv(const Table& table, std::ostream& out) {
  for (const auto& [key, value] : table.header) out << "# " << key << ": " << value << "\n";
  out << "experiment,k,exact,predicted,ratio";
  if (!table.rows.empty()) {
    for (const auto& [key, value] : table.rows.front().meta) out << "," << key;
  }
  out << "\n";
  for (const ResultRow& row : table.rows) {
    out << row.experiment << "," << row.k << "," << fmt_double(row.exact) << ","
        << (row.predicted ? fmt_double(*row.predicted) : "NA") << ","
        << (row.ratio ? fmt_double(*row.ratio) : "NA");
    for (const auto& [key, value] : row.meta) out << "," << value;
    out << "\n";
  }
}

Table run_dim(const ExperimentConfig& config) {
  config.validate();
  const ModelSpace& model = config.model;
  const IrrepLabel nu(config.nu);
  const int d = model.complex_dim();
  Table t = make_table("dim", config, nullptr);

  // (2 lambda)^{-(d+1)} integrated over M; lambda = 1/2 on P^1.
  double integral = kPi;
  if (model.is_product()) {
    DimensionIntegralOptions opts;
    opts.seed = config.seed;
    opts.force = true;
    const IntegralEstimate est = dimension_limit_integral(model, opts);
    integral = est.value;
    t.header.emplace_back("integral", fmt_double(est.value));
    t.header.emplace_back("integral_se", fmt_double(est.standard_error));
    t.header.emplace_back("integral_gauss", fmt_double(est.gauss_value));
  } else {
    t.header.emplace_back("integral", fmt_double(integral));
  }

  const std::vector<int> ks = config.k_values();
  std::vector<ResultRow> rows(ks.size());
  const std::size_t done = run_ordered(ks.size(), config.threads, config.time_budget_seconds,
                                       [&](std::size_t i) {
    const int k = ks[i];
    const int n = k * nu.nu();
    const long long dim = dimension(k, nu, model);
    // The generic stabilizer is {+I, -I} for odd r: sum of f_{1-kn} over it.
    const double generic_factor =
        model.is_product() && model.r() % 2 == 1 ? (n % 2 == 1 ? 2.0 : 0.0) : 1.0;
    ResultRow row;
    row.experiment = "dim";
    row.k = k;
    row.exact = static_cast<double>(dim);
    row.predicted = generic_factor * integral * std::pow(n / kPi, d);
    set_ratio(row);
    row.meta.emplace_back("scaled", fmt_double(std::pow(kPi / n, d) * static_cast<double>(dim)));
    row.meta.emplace_back("integral", fmt_double(integral));
    row.meta.emplace_back("generic_factor", fmt_double(generic_factor));
    row.meta.emplace_back("levels", std::to_string(admissible_levels(k, nu, model).levels.size()));
    add_convention_columns(config, row);
    rows[i] = std::move(row);
  });
  rows.resize(done);
  t.rows = std::move(rows);
  finish(t, done, ks.size());

  const double tol = tolerance(config, 0.05);
  t.check_passed = !t.rows.empty();
  for (const ResultRow& row : t.rows) {
    if (!row.ratio && row.exact != 0.0) t.check_passed = false;
  }
  for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it) {
    if (it->ratio) {
      t.check_passed = t.check_passed && std::abs(*it->ratio - 1.0) <= tol;
      t.check_message = "last ratio " + fmt_double(*it->ratio) + ", tolerance " + fmt_double(tol);
      break;
    }
  }
  if (t.check_message.empty()) t.check_message = "every row vanishes";
  return t;
}

Table run_diag(const ExperimentConfig& config) {
  config.validate();
  const BundlePoint x = resolve_point(config);
  const IrrepLabel nu(config.nu);
  const int d = x.model().complex_dim();
  const double lambda = lambda_of(moment(x));
  const StabilizerInfo stab = stabilizer(x);
  Table t = make_table("diag", config, &x);
  t.header.emplace_back("lambda", fmt_double(lambda));
  t.header.emplace_back("stabilizer_order", std::to_string(stab.size()));

  const std::vector<int> ks = config.k_values();
  std::vector<ResultRow> rows(ks.size());
  std::vector<double> residual(ks.size());
  const std::size_t done = run_ordered(ks.size(), config.threads, config.time_budget_seconds,
                                       [&](std::size_t i) {
    const int k = ks[i];
    const double exact = equivariant_kernel(k, nu, x, x).value.real();
    const AsymptoticPrediction p = leading_diag(k, nu, x, config.bracket, config.fiber);
    const double norm = std::pow(2 * kPi * lambda / (k * nu.nu()), d);
    ResultRow row;
    row.experiment = "diag";
    row.k = k;
    row.exact = exact;
    row.predicted = p.total.real();
    set_ratio(row);
    residual[i] = (exact - p.central_sum()) * norm;
    row.meta.emplace_back("central", fmt_double(p.central_sum()));
    row.meta.emplace_back("noncentral", fmt_double(p.noncentral_sum()));
    row.meta.emplace_back("residual", fmt_double(exact - p.central_sum()));
    row.meta.emplace_back("residual_scaled", fmt_double(residual[i]));
    row.meta.emplace_back("noncentral_scaled", fmt_double(p.noncentral_sum() * norm));
    add_convention_columns(config, row);
    rows[i] = std::move(row);
  });
  rows.resize(done);
  residual.resize(done);
  t.rows = std::move(rows);
  finish(t, done, ks.size());

  if (stab.noncentral_representatives().empty()) {
    const double tol = tolerance(config, 0.05);
    t.check_passed = false;
    t.check_message = "no row with a nonzero prediction";
    for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it) {
      if (it->ratio) {
        t.check_passed = std::abs(*it->ratio - 1.0) <= tol;
        t.check_message = "last ratio " + fmt_double(*it->ratio) + ", tolerance " + fmt_double(tol);
        break;
      }
    }
  } else {
    // With a non-central stabilizer the residual must oscillate with the
    // period of the stabilizer in k nu (consecutive k only).
    const double period = dominant_period(residual);
    const double expected = static_cast<double>(stab.size()) / std::gcd(stab.size(), static_cast<std::size_t>(config.nu * config.kstep));
    t.check_passed = config.kstep == 1 && std::abs(period - expected) <= 0.25;
    t.check_message = "residual period " + fmt_double(period) + ", expected " + fmt_double(expected);
  }
  return t;
}

Table run_neardiag(const ExperimentConfig& config) {
  config.validate();
  const BundlePoint x = resolve_point(config);
  const IrrepLabel nu(config.nu);
  const StabilizerInfo stab = stabilizer(x);
  if (stab.size() != stab.central_angles.size()) {
    throw ConfigError("neardiag needs a point whose stabilizer is central");
  }
  const MomentValue phi = moment(x);
  const double rate = u0(nu, phi);
  const TangentVector dir = chart_direction(x);
  Table t = make_table("neardiag", config, &x);
  t.header.emplace_back("u0", fmt_double(rate));

  const std::vector<int> ks = config.k_values();
  std::vector<std::vector<ResultRow>> rows(ks.size());
  std::vector<double> fitted(ks.size(), std::numeric_limits<double>::quiet_NaN());
  const std::size_t done = run_ordered(ks.size(), config.threads, config.time_budget_seconds,
                                       [&](std::size_t i) {
    const int k = ks[i];
    const double p0 = equivariant_kernel(k, nu, x, x).value.real();
    const TangentVector zero = TangentVector::Zero(dir.size());
    std::vector<std::pair<double, double>> samples;  // (|v|^2 / 2, -log modulus ratio)
    std::vector<ResultRow> out;
    {
      ResultRow row;
      row.experiment = "neardiag";
      row.k = k;
      row.exact = p0;
      row.predicted = std::abs(leading_near_diag(k, nu, x, zero, zero));
      set_ratio(row);
      row.meta = {{"v_norm", "0"}, {"modulus_ratio", "1"}, {"gaussian", "1"}};
      out.push_back(std::move(row));
    }
    for (double s : kNearDiagRadii) {
      if (s > kChartRadius * std::sqrt(static_cast<double>(k))) continue;
      const TangentVector v = s * dir;
      // The geometric mean over +v and -v cancels the odd-order terms.
      const double plus = std::abs(equivariant_kernel(k, nu, hlc_chart(x, v, k), x).value);
      const double minus = std::abs(equivariant_kernel(k, nu, hlc_chart(x, -v, k), x).value);
      const double mean = std::sqrt(plus * minus);
      const double modulus = mean / p0;
      samples.emplace_back(0.5 * s * s, -std::log(modulus));
      ResultRow row;
      row.experiment = "neardiag";
      row.k = k;
      row.exact = mean;
      row.predicted = std::abs(leading_near_diag(k, nu, x, v, zero));
      set_ratio(row);
      row.meta = {{"v_norm", fmt_double(s)},
                  {"modulus_ratio", fmt_double(modulus)},
                  {"gaussian", fmt_double(std::exp(-rate * 0.5 * s * s))}};
      out.push_back(std::move(row));
    }
    // Least squares through the origin.
    double num = 0.0;
    double den = 0.0;
    for (const auto& [a, b] : samples) {
      num += a * b;
      den += a * a;
    }
    if (den > 0.0) fitted[i] = num / den;
    for (ResultRow& row : out) {
      row.meta.emplace_back("u0", fmt_double(rate));
      row.meta.emplace_back("fitted_rate", fmt_double(fitted[i]));
      add_convention_columns(config, row);
    }
    rows[i] = std::move(out);
  });
  for (std::size_t i = 0; i < done; ++i) {
    for (ResultRow& row : rows[i]) t.rows.push_back(std::move(row));
  }
  finish(t, done, ks.size());

  const double tol = tolerance(config, 0.05);
  t.check_passed = false;
  t.check_message = "no fitted rate";
  for (std::size_t i = done; i-- > 0;) {
    if (!std::isnan(fitted[i])) {
      const double rel = std::abs(fitted[i] / rate - 1.0);
      t.check_passed = rel <= tol;
      t.check_message = "fitted rate " + fmt_double(fitted[i]) + " vs u0 " + fmt_double(rate) +
                        ", relative error " + fmt_double(rel);
      break;
    }
  }
  return t;
}

Table run_decay(const ExperimentConfig& config) {
  config.validate();
  if (!config.model.is_product()) {
    throw ConfigError("decay needs the product model: SU(2) is transitive on S^3");
  }
  const BundlePoint x = resolve_point(config);
  const IrrepLabel nu(config.nu);
  const BundlePoint y = hlc_chart(x, kDecayOffset * chart_direction(x), 1.0);
  const BundlePoint control = act(GroupElement::MinusIdentity(), x);
  const HaarQuadrature grid = HaarQuadrature::Build(12);
  const double dist = dist_to_orbit(x, y, grid).distance;
  const double control_dist = dist_to_orbit(x, control, grid).distance;
  Table t = make_table("decay", config, &x);
  t.header.emplace_back("partner_offset", fmt_double(kDecayOffset));
  t.header.emplace_back("dist_to_orbit", fmt_double(dist));

  const std::vector<int> ks = config.k_values();
  std::vector<double> off(ks.size()), on(ks.size()), central(ks.size());
  const std::size_t done = run_ordered(ks.size(), config.threads, config.time_budget_seconds,
                                       [&](std::size_t i) {
    const int k = ks[i];
    off[i] = std::abs(equivariant_kernel(k, nu, x, y).value);
    on[i] = std::abs(equivariant_kernel(k, nu, x, control).value);
    central[i] = std::abs(leading_diag_central(k, nu, x));
  });
  std::vector<double> kd(ks.begin(), ks.begin() + static_cast<std::ptrdiff_t>(done));
  off.resize(done);
  on.resize(done);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double slope_off = done >= 5 ? decay_fit(kd, off) : nan;
  const double slope_on = done >= 5 ? decay_fit(kd, on) : nan;
  for (std::size_t i = 0; i < done; ++i) {
    ResultRow row;
    row.experiment = "decay";
    row.k = ks[i];
    row.exact = off[i];
    row.meta = {{"dist", fmt_double(dist)}, {"slope", fmt_double(slope_off)}};
    add_convention_columns(config, row);
    t.rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < done; ++i) {
    ResultRow row;
    row.experiment = "decay-control";
    row.k = ks[i];
    row.exact = on[i];
    row.predicted = central[i];
    set_ratio(row);
    row.meta = {{"dist", fmt_double(control_dist)}, {"slope", fmt_double(slope_on)}};
    add_convention_columns(config, row);
    t.rows.push_back(std::move(row));
  }
  finish(t, done, ks.size());

  const int dim = config.model.complex_dim();
  const double tol = tolerance(config, 0.5);
  t.check_passed = slope_off <= -3.0 && std::abs(slope_on - dim) <= tol;
  t.check_message = "off-orbit slope " + fmt_double(slope_off) + ", control slope " +
                    fmt_double(slope_on);
  return t;
}

Table run_oracle(const ExperimentConfig& config) {
  config.validate();
  const ModelSpace& model = config.model;
  const IrrepLabel nu(config.nu);
  for (int k : config.k_values()) {
    const int degree = required_quadrature_degree(k, nu, model);
    if (HaarQuadrature::NodeCount(degree) > HaarQuadrature::kDefaultNodeBudget) {
      throw BudgetExceeded("oracle at k = " + std::to_string(k) + " needs " +
                           std::to_string(HaarQuadrature::NodeCount(degree)) +
                           " quadrature nodes; lower --kmax");
    }
  }
  std::mt19937_64 rng(config.seed);
  std::vector<std::pair<BundlePoint, BundlePoint>> pairs;
  for (int i = 0; i < config.oracle_pairs; ++i) {
    BundlePoint a = random_point(model, rng);
    BundlePoint b = random_point(model, rng);
    pairs.emplace_back(a, b);
  }
  Table t = make_table("oracle", config, nullptr);
  t.header.emplace_back("pairs", std::to_string(config.oracle_pairs));

  const std::vector<int> ks = config.k_values();
  std::vector<ResultRow> rows(ks.size());
  std::vector<double> rel(ks.size()), abs_err(ks.size());
  const std::size_t done = run_ordered(ks.size(), config.threads, config.time_budget_seconds,
                                       [&](std::size_t i) {
    const int k = ks[i];
    const HaarQuadrature q = HaarQuadrature::Build(required_quadrature_degree(k, nu, model));
    double max_a = 0.0;
    double max_b = 0.0;
    for (const auto& [a, b] : pairs) {
      const Complex exact = equivariant_kernel(k, nu, a, b).value;
      const Complex quad = equivariant_kernel_quadrature(k, nu, a, b, q).value;
      const double scale = std::max(std::abs(exact), std::abs(quad));
      const double diff = std::abs(exact - quad);
      abs_err[i] = std::max(abs_err[i], diff);
      if (scale > 1e-10) rel[i] = std::max(rel[i], diff / scale);
      max_a = std::max(max_a, std::abs(exact));
      max_b = std::max(max_b, std::abs(quad));
    }
    ResultRow row;
    row.experiment = "oracle";
    row.k = k;
    row.exact = max_a;
    row.predicted = max_b;
    set_ratio(row);
    row.meta = {{"max_rel_discrepancy", fmt_double(rel[i])},
                {"max_abs_discrepancy", fmt_double(abs_err[i])},
                {"nodes", std::to_string(q.size())}};
    add_convention_columns(config, row);
    rows[i] = std::move(row);
  });
  rows.resize(done);
  t.rows = std::move(rows);
  finish(t, done, ks.size());

  const double tol = tolerance(config, 1e-8);
  double worst_rel = 0.0;
  double worst_abs = 0.0;
  for (std::size_t i = 0; i < done; ++i) {
    worst_rel = std::max(worst_rel, rel[i]);
    worst_abs = std::max(worst_abs, abs_err[i]);
  }
  t.check_passed = done > 0 && worst_rel <= tol && worst_abs <= std::max(1e-10, tol * 1e3);
  t.check_message = "max relative discrepancy " + fmt_double(worst_rel) +
                    ", max absolute " + fmt_double(worst_abs);
  return t;
}

}  // namespace szego
