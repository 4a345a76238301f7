// Copyright 2026 The cyclewalk authors
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

#include "cyclewalk/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "cyclewalk/bloch.hpp"
#include "cyclewalk/eigensystem.hpp"
#include "cyclewalk/io.hpp"
#include "cyclewalk/oracle.hpp"
#include "cyclewalk/spectrum.hpp"
#include "cyclewalk/walk.hpp"

namespace cyclewalk::cli {
namespace {

using io::JsonWriter;

struct Options {
  int sites = 2;
  Scalar r = 0.5;
  std::optional<Scalar> alpha;
  std::optional<int> alpha_n;
  Scalar beta = 0.0;
  bool hadamard = false;

  std::vector<Scalar> sweep_r;
  std::vector<Scalar> sweep_beta;

  std::optional<Scalar> gauge_s;
  Scalar gauge_omega = 0.0;

  int k = 0;
  int steps = 100;
  std::uint64_t seed = 1;
  // Initial-state weights: equal thirds of filler and the two protected
  // states by default.
  Scalar x0 = 0.5773502691896258, x1 = 0.5773502691896258,
         x2 = 0.5773502691896258;
  Scalar perturb_alpha = 0.0;

  int trials = 20;
  std::optional<int> verify_sites;
  Scalar inject_phase_error = 0.0;

  std::string format = "json";
  std::string out_path;
};

// Builds the coin for this invocation, optionally overriding the bias or
// the global phase (used by sweeps).
CoinParams make_params(const Options& opt, std::optional<Scalar> r_override = {},
                       std::optional<Scalar> beta_override = {}) {
  const Scalar r = r_override.value_or(opt.r);
  if (opt.hadamard) {
    if (opt.sites % 2 == 0) {
      return CoinParams::from_lattice(r, 3 * opt.sites / 2, kPi / 2,
                                      opt.sites);
    }
    return CoinParams(r, 3.0 * kPi / 2.0, kPi / 2.0, opt.sites);
  }
  const Scalar beta = beta_override.value_or(opt.beta);
  if (opt.alpha_n) {
    return CoinParams::from_lattice(r, *opt.alpha_n, beta, opt.sites);
  }
  if (!opt.alpha) {
    throw std::invalid_argument(
        "one of --alpha, --alpha-n or --hadamard is required");
  }
  return CoinParams(r, *opt.alpha, beta, opt.sites);
}

void add_coin_options(CLI::App* cmd, Options& opt, bool with_bias) {
  cmd->add_option("--n", opt.sites, "cycle size N")
      ->required()
      ->check(CLI::Range(2, 1 << 24));
  CLI::Option* r = nullptr;
  if (with_bias) {
    r = cmd->add_option("--r", opt.r, "coin bias r in [0, 1]")
            ->check(CLI::Range(0.0, 1.0));
  }
  auto* alpha =
      cmd->add_option("--alpha", opt.alpha, "coin phase alpha (radians)");
  auto* alpha_n = cmd->add_option(
      "--alpha-n", opt.alpha_n,
      "integer n selecting the lattice angle alpha = n*pi/N exactly");
  auto* beta =
      cmd->add_option("--beta", opt.beta, "global coin phase beta (radians)");
  auto* hadamard = cmd->add_flag(
      "--hadamard", opt.hadamard,
      "use the Hadamard coin (r = 1/2, alpha = 3*pi/2, beta = pi/2)");
  alpha->excludes(alpha_n);
  hadamard->excludes(alpha);
  hadamard->excludes(alpha_n);
  hadamard->excludes(beta);
  if (r) hadamard->excludes(r);
}

void add_output_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", opt.out_path,
                  "write results to this file instead of stdout");
}

void require_coin_choice(const Options& opt) {
  if (!opt.hadamard && !opt.alpha && !opt.alpha_n) {
    throw std::invalid_argument(
        "one of --alpha, --alpha-n or --hadamard is required");
  }
}

int emit(const Options& opt, std::ostream& out, std::ostream& err,
         const std::function<void(std::ostream&)>& writer) {
  if (opt.out_path.empty()) {
    writer(out);
    return kExitOk;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open output file '" << opt.out_path << "'\n";
    return kExitUsage;
  }
  writer(file);
  return file.good() ? kExitOk : kExitVerificationFailed;
}

// Standard envelope: {"version", "command", "params", "seed", "rng",
// "data"}.  `seed` is null for fully deterministic commands.
void write_envelope(std::ostream& os, const char* command,
                    std::optional<std::uint64_t> seed,
                    const std::function<void(JsonWriter&)>& params,
                    const std::function<void(JsonWriter&)>& data) {
  JsonWriter w(os);
  w.begin_object();
  w.key("version").value(io::kOutputVersion);
  w.key("command").value(std::string_view(command));
  w.key("params");
  w.begin_object();
  params(w);
  w.end_object();
  w.key("seed");
  if (seed) {
    w.value(*seed);
    w.key("rng").value(io::Rng::kAlgorithm);
  } else {
    w.null();
    w.key("rng").null();
  }
  w.key("data");
  data(w);
  w.end_object();
  os << '\n';
}

void write_coin_params(JsonWriter& w, const Options& opt,
                       const CoinParams& base) {
  w.key("n").value(base.sites);
  w.key("R");
  if (!opt.sweep_r.empty()) {
    w.null();
  } else {
    w.value(base.r);
  }
  w.key("alpha").value(base.alpha);
  w.key("alpha_n");
  if (base.alpha_index) {
    w.value(*base.alpha_index);
  } else {
    w.null();
  }
  w.key("beta");
  if (!opt.sweep_beta.empty()) {
    w.null();
  } else {
    w.value(base.beta);
  }
  w.key("hadamard").value(opt.hadamard);
  w.key("sweep_r");
  if (opt.sweep_r.empty()) {
    w.null();
  } else {
    w.begin_array();
    for (Scalar v : opt.sweep_r) w.value(v);
    w.end_array();
  }
  w.key("sweep_beta");
  if (opt.sweep_beta.empty()) {
    w.null();
  } else {
    w.begin_array();
    for (Scalar v : opt.sweep_beta) w.value(v);
    w.end_array();
  }
}

// ---------------------------------------------------------------------------
// spectrum

int cmd_spectrum(const Options& opt, std::ostream& out, std::ostream& err) {
  require_coin_choice(opt);
  const CoinParams base = make_params(opt);

  enum class Sweep { kNone, kBias, kBeta };
  const Sweep sweep = !opt.sweep_r.empty()
                          ? Sweep::kBias
                          : (!opt.sweep_beta.empty() ? Sweep::kBeta
                                                     : Sweep::kNone);
  struct Row {
    Scalar sweep_value;
    SpectralPoint point;
  };
  std::vector<Row> rows;
  const std::vector<Scalar> values =
      sweep == Sweep::kBias
          ? opt.sweep_r
          : (sweep == Sweep::kBeta ? opt.sweep_beta
                                   : std::vector<Scalar>{0.0});
  for (Scalar v : values) {
    const CoinParams params =
        sweep == Sweep::kBias
            ? make_params(opt, v, {})
            : (sweep == Sweep::kBeta ? make_params(opt, {}, v) : base);
    for (const SpectralPoint& p : full_spectrum(params)) {
      rows.push_back(Row{v, p});
    }
  }

  const char* sweep_key = sweep == Sweep::kBias ? "R" : "beta";
  return emit(opt, out, err, [&](std::ostream& os) {
    if (opt.format == "csv") {
      std::vector<std::string> header;
      if (sweep != Sweep::kNone) header.push_back(sweep_key);
      header.insert(header.end(), {"k", "z", "lambda", "partner_k"});
      os << io::csv_row(header);
      for (const Row& row : rows) {
        std::vector<std::string> cells;
        if (sweep != Sweep::kNone) {
          cells.push_back(io::format_double(row.sweep_value));
        }
        cells.push_back(std::to_string(row.point.k));
        cells.push_back(std::to_string(row.point.z));
        cells.push_back(io::format_double(row.point.lambda));
        cells.push_back(row.point.partner_k
                            ? std::to_string(*row.point.partner_k)
                            : std::string());
        os << io::csv_row(cells);
      }
      return;
    }
    write_envelope(
        os, "spectrum", std::nullopt,
        [&](JsonWriter& w) { write_coin_params(w, opt, base); },
        [&](JsonWriter& w) {
          w.begin_array();
          for (const Row& row : rows) {
            w.begin_object();
            if (sweep != Sweep::kNone) w.key(sweep_key).value(row.sweep_value);
            w.key("k").value(row.point.k);
            w.key("z").value(row.point.z);
            w.key("lambda").value(row.point.lambda);
            w.key("partner_k");
            if (row.point.partner_k) {
              w.value(*row.point.partner_k);
            } else {
              w.null();
            }
            w.end_object();
          }
          w.end_array();
        });
  });
}

// ---------------------------------------------------------------------------
// bloch

int cmd_bloch(const Options& opt, std::ostream& out, std::ostream& err) {
  require_coin_choice(opt);
  const CoinParams base = make_params(opt);

  std::vector<CoinParams> sweep;
  if (opt.sweep_r.empty()) {
    sweep.push_back(base);
  } else {
    for (Scalar v : opt.sweep_r) sweep.push_back(make_params(opt, v, {}));
  }
  GaugePolicy policy;
  policy.s1 = opt.gauge_s;
  policy.omega1 = opt.gauge_omega;
  const std::vector<TrajectoryPoint> points =
      trajectory(sweep, {}, {}, policy);

  return emit(opt, out, err, [&](std::ostream& os) {
    if (opt.format == "csv") {
      os << io::csv_row({"R", "alpha", "beta", "k", "z", "rx", "ry", "rz",
                         "r", "theta", "phi"});
      for (const TrajectoryPoint& p : points) {
        os << io::csv_row({io::format_double(p.params.r),
                           io::format_double(p.params.alpha),
                           io::format_double(p.params.beta),
                           std::to_string(p.k), std::to_string(p.z),
                           io::format_double(p.bloch.rx),
                           io::format_double(p.bloch.ry),
                           io::format_double(p.bloch.rz),
                           io::format_double(p.bloch.r),
                           io::format_double(p.bloch.theta),
                           io::format_double(p.bloch.phi)});
      }
      return;
    }
    write_envelope(
        os, "bloch", std::nullopt,
        [&](JsonWriter& w) {
          write_coin_params(w, opt, base);
          w.key("gauge_s");
          if (opt.gauge_s) {
            w.value(*opt.gauge_s);
          } else {
            w.null();  // equal-weight gauge
          }
          w.key("gauge_omega").value(opt.gauge_omega);
        },
        [&](JsonWriter& w) {
          w.begin_array();
          for (const TrajectoryPoint& p : points) {
            w.begin_object();
            w.key("R").value(p.params.r);
            w.key("alpha").value(p.params.alpha);
            w.key("beta").value(p.params.beta);
            w.key("k").value(p.k);
            w.key("z").value(p.z);
            w.key("rx").value(p.bloch.rx);
            w.key("ry").value(p.bloch.ry);
            w.key("rz").value(p.bloch.rz);
            w.key("r").value(p.bloch.r);
            w.key("theta").value(p.bloch.theta);
            w.key("phi").value(p.bloch.phi);
            w.key("on_axis").value(p.bloch.on_axis);
            w.end_object();
          }
          w.end_array();
        });
  });
}

// ---------------------------------------------------------------------------
// degeneracy

int cmd_degeneracy(const Options& opt, std::ostream& out, std::ostream& err) {
  require_coin_choice(opt);
  const CoinParams params = make_params(opt);
  const DegeneracyReport report = degeneracy_report(params);

  return emit(opt, out, err, [&](std::ostream& os) {
    if (opt.format == "csv") {
      os << io::csv_row({"is_degenerate", "n", "k", "kind", "partner_k"});
      const std::string flag = report.is_degenerate ? "true" : "false";
      const std::string n_cell =
          report.n ? std::to_string(*report.n) : std::string();
      for (int k = 0; k < params.sites; ++k) {
        std::string kind = "nondegenerate";
        std::string partner;
        if (report.is_degenerate) {
          if (const auto p = report.partner_of(k)) {
            kind = "paired";
            partner = std::to_string(*p);
          } else {
            kind = "unique";
          }
        }
        os << io::csv_row({flag, n_cell, std::to_string(k), kind, partner});
      }
      return;
    }
    write_envelope(
        os, "degeneracy", std::nullopt,
        [&](JsonWriter& w) { write_coin_params(w, opt, params); },
        [&](JsonWriter& w) {
          w.begin_object();
          w.key("is_degenerate").value(report.is_degenerate);
          w.key("n");
          if (report.n) {
            w.value(*report.n);
          } else {
            w.null();
          }
          w.key("pairs");
          w.begin_array();
          for (const auto& [a, b] : report.pairs) {
            w.begin_array();
            w.value(a);
            w.value(b);
            w.end_array();
          }
          w.end_array();
          w.key("unique_ks");
          w.begin_array();
          for (int u : report.unique_ks) w.value(u);
          w.end_array();
          w.end_object();
        });
  });
}

// ---------------------------------------------------------------------------
// protected

int cmd_protected(const Options& opt, std::ostream& out, std::ostream& err) {
  require_coin_choice(opt);
  // Protected eigenvectors do not depend on the bias, so build them at a
  // fixed reference bias; the simulation redraws the bias every step anyway.
  const Options ref = [&] {
    Options o = opt;
    o.r = 0.5;
    return o;
  }();
  const CoinParams params = make_params(ref);
  const DegeneracyReport report = degeneracy_report(params);
  if (!report.is_degenerate || report.unique_ks.empty()) {
    err << "error: this coin has no unique degenerate-lattice eigenvalues; "
           "pick alpha = n*pi/N with a self-conjugate wavenumber\n";
    return kExitUsage;
  }
  bool unique = false;
  for (int u : report.unique_ks) unique = unique || (u == opt.k);
  if (!unique) {
    err << "error: k=" << opt.k << " is not a unique wavenumber (unique:";
    for (int u : report.unique_ks) err << ' ' << u;
    err << ")\n";
    return kExitUsage;
  }
  const Scalar weight_norm =
      std::sqrt(opt.x0 * opt.x0 + opt.x1 * opt.x1 + opt.x2 * opt.x2);
  if (weight_norm == 0.0) {
    err << "error: at least one of --x0/--x1/--x2 must be nonzero\n";
    return kExitUsage;
  }

  const StateVector v1 =
      to_position(eigenvector_nondegenerate(params, opt.k, 1));
  const StateVector v2 =
      to_position(eigenvector_nondegenerate(params, opt.k, 2));

  io::Rng rng(opt.seed);
  // Haar-ish filler component, orthogonalized against the protected pair.
  StateVector filler = random_state(opt.sites, rng.gen);
  filler.amplitudes -= inner(v1, filler) * v1.amplitudes;
  filler.amplitudes -= inner(v2, filler) * v2.amplitudes;
  filler.amplitudes.normalize();

  StateVector psi{(opt.x0 * filler.amplitudes + opt.x1 * v1.amplitudes +
                   opt.x2 * v2.amplitudes) /
                      weight_norm,
                  Basis::kPosition};

  struct Row {
    int t;
    std::optional<Scalar> r;
    Scalar overlap1;
    Scalar overlap2;
  };
  std::vector<Row> rows;
  rows.push_back(Row{0, std::nullopt, std::abs(inner(v1, psi)),
                     std::abs(inner(v2, psi))});
  for (int t = 1; t <= opt.steps; ++t) {
    const Scalar r_t = rng.uniform01();
    Scalar alpha_t = params.alpha;
    if (opt.perturb_alpha != 0.0) {
      alpha_t += (2.0 * rng.uniform01() - 1.0) * opt.perturb_alpha;
    }
    const CoinParams step(r_t, alpha_t, params.beta, opt.sites);
    psi = apply_step(make_step_operator(step), psi);
    rows.push_back(Row{t, r_t, std::abs(inner(v1, psi)),
                       std::abs(inner(v2, psi))});
  }

  return emit(opt, out, err, [&](std::ostream& os) {
    if (opt.format == "csv") {
      os << io::csv_row({"t", "R", "overlap1", "overlap2"});
      for (const Row& row : rows) {
        os << io::csv_row({std::to_string(row.t),
                           row.r ? io::format_double(*row.r) : std::string(),
                           io::format_double(row.overlap1),
                           io::format_double(row.overlap2)});
      }
      return;
    }
    write_envelope(
        os, "protected", opt.seed,
        [&](JsonWriter& w) {
          write_coin_params(w, opt, params);
          w.key("k").value(opt.k);
          w.key("steps").value(opt.steps);
          w.key("x0").value(opt.x0);
          w.key("x1").value(opt.x1);
          w.key("x2").value(opt.x2);
          w.key("perturb_alpha").value(opt.perturb_alpha);
        },
        [&](JsonWriter& w) {
          w.begin_array();
          for (const Row& row : rows) {
            w.begin_object();
            w.key("t").value(row.t);
            w.key("R");
            if (row.r) {
              w.value(*row.r);
            } else {
              w.null();
            }
            w.key("overlap1").value(row.overlap1);
            w.key("overlap2").value(row.overlap2);
            w.end_object();
          }
          w.end_array();
        });
  });
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  io::Rng rng(opt.seed);

  struct Row {
    int trial;
    CoinParams params;
    Scalar max_mismatch;
    std::vector<SpectrumMismatch> mismatches;
  };
  std::vector<Row> rows;
  for (int trial = 0; trial < opt.trials; ++trial) {
    const int sites = opt.verify_sites
                          ? *opt.verify_sites
                          : 2 + static_cast<int>(rng.next() % 31);
    const Scalar r = rng.uniform01();
    const Scalar beta = rng.uniform01() * kTwoPi;
    // Every fourth trial pins alpha to the degenerate lattice so the
    // paired/unique bookkeeping is exercised too.
    CoinParams params = [&] {
      if (trial % 4 == 3) {
        const int n = static_cast<int>(rng.next() % (2 * sites));
        return CoinParams::from_lattice(r, n, beta, sites);
      }
      return CoinParams(r, rng.uniform01() * kTwoPi, beta, sites);
    }();

    std::vector<SpectralPoint> points = full_spectrum(params);
    if (opt.inject_phase_error != 0.0 && trial == 0) {
      points[0].lambda = wrap_pi(points[0].lambda + opt.inject_phase_error);
    }
    const OracleResult oracle = dense_eigendecompose(params);
    const SpectrumComparison cmp = compare_spectra(points, oracle);
    rows.push_back(Row{trial, params, cmp.max_mismatch, cmp.mismatches});
  }

  int failures = 0;
  Scalar worst = 0.0;
  for (const Row& row : rows) {
    if (!row.mismatches.empty()) ++failures;
    worst = std::max(worst, row.max_mismatch);
  }
  err << "verify: " << rows.size() << " trials, " << failures
      << " failures, worst phase distance " << io::format_double(worst)
      << '\n';

  const int status = emit(opt, out, err, [&](std::ostream& os) {
    if (opt.format == "csv") {
      os << io::csv_row({"trial", "n", "R", "alpha", "beta", "max_mismatch",
                         "pass", "mismatch_k", "mismatch_z"});
      for (const Row& row : rows) {
        const bool pass = row.mismatches.empty();
        os << io::csv_row(
            {std::to_string(row.trial), std::to_string(row.params.sites),
             io::format_double(row.params.r),
             io::format_double(row.params.alpha),
             io::format_double(row.params.beta),
             io::format_double(row.max_mismatch), pass ? "true" : "false",
             pass ? std::string() : std::to_string(row.mismatches[0].k),
             pass ? std::string() : std::to_string(row.mismatches[0].z)});
      }
      return;
    }
    write_envelope(
        os, "verify", opt.seed,
        [&](JsonWriter& w) {
          w.key("n");
          if (opt.verify_sites) {
            w.value(*opt.verify_sites);
          } else {
            w.null();
          }
          w.key("trials").value(opt.trials);
          w.key("inject_phase_error").value(opt.inject_phase_error);
        },
        [&](JsonWriter& w) {
          w.begin_array();
          for (const Row& row : rows) {
            w.begin_object();
            w.key("trial").value(row.trial);
            w.key("n").value(row.params.sites);
            w.key("R").value(row.params.r);
            w.key("alpha").value(row.params.alpha);
            w.key("beta").value(row.params.beta);
            w.key("max_mismatch").value(row.max_mismatch);
            w.key("pass").value(row.mismatches.empty());
            w.key("mismatches");
            w.begin_array();
            for (const SpectrumMismatch& m : row.mismatches) {
              w.begin_object();
              w.key("k").value(m.k);
              w.key("z").value(m.z);
              w.key("distance").value(m.distance);
              w.end_object();
            }
            w.end_array();
            w.end_object();
          }
          w.end_array();
        });
  });
  if (status != kExitOk) return status;
  return failures == 0 ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{
      "cyclewalk: closed-form spectra, eigenvectors and Bloch geometry of "
      "coined quantum walks on the N-cycle"};
  app.name("cyclewalk");
  app.require_subcommand(1);

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "eigenphases lambda(k, z) of the walk");
  add_coin_options(spectrum, opt, /*with_bias=*/true);
  add_output_options(spectrum, opt);
  auto* sr = spectrum
                 ->add_option("--sweep-r", opt.sweep_r,
                              "comma-separated bias values to sweep")
                 ->delimiter(',');
  auto* sb = spectrum
                 ->add_option("--sweep-beta", opt.sweep_beta,
                              "comma-separated beta values to sweep")
                 ->delimiter(',');
  sr->excludes(sb);

  CLI::App* bloch = app.add_subcommand(
      "bloch", "Bloch vectors of the eigenstates' reduced coin states");
  add_coin_options(bloch, opt, /*with_bias=*/true);
  add_output_options(bloch, opt);
  bloch
      ->add_option("--sweep-r", opt.sweep_r,
                   "comma-separated bias values to sweep")
      ->delimiter(',');
  bloch->add_option("--gauge-s", opt.gauge_s,
                    "fixed pair gauge amplitude s1 (default: equal weight)");
  bloch->add_option("--gauge-omega", opt.gauge_omega,
                    "pair gauge phase omega1 (radians)");

  CLI::App* degeneracy = app.add_subcommand(
      "degeneracy", "conjugate pairs and unique wavenumbers of the coin");
  add_coin_options(degeneracy, opt, /*with_bias=*/true);
  add_output_options(degeneracy, opt);

  CLI::App* protect = app.add_subcommand(
      "protected",
      "evolve under per-step random bias and trace the protected overlaps");
  add_coin_options(protect, opt, /*with_bias=*/false);
  add_output_options(protect, opt);
  protect->add_option("--k", opt.k, "unique wavenumber carrying the protected pair")
      ->required();
  protect->add_option("--steps", opt.steps, "number of walk steps")
      ->check(CLI::Range(1, 1 << 24));
  protect->add_option("--seed", opt.seed, "random seed");
  protect->add_option("--x0", opt.x0, "weight of the random filler component");
  protect->add_option("--x1", opt.x1, "weight of the band-1 protected state");
  protect->add_option("--x2", opt.x2, "weight of the band-2 protected state");
  protect->add_option(
      "--perturb-alpha", opt.perturb_alpha,
      "also jitter alpha by +/- this much per step (breaks protection)");

  CLI::App* verify = app.add_subcommand(
      "verify", "closed-form spectra vs dense diagonalization");
  verify->add_option("--n", opt.verify_sites, "cycle size (default: random per trial)")
      ->check(CLI::Range(2, kDefaultDenseSiteLimit));
  verify->add_option("--trials", opt.trials, "number of random trials")
      ->check(CLI::Range(1, 1 << 20));
  verify->add_option("--seed", opt.seed, "random seed");
  verify
      ->add_option("--inject-phase-error", opt.inject_phase_error,
                   "perturb one closed-form phase (self-test of the check)")
      ->group("");  // hidden
  add_output_options(verify, opt);

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("cyclewalk");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(opt, out, err);
    if (bloch->parsed()) return cmd_bloch(opt, out, err);
    if (degeneracy->parsed()) return cmd_degeneracy(opt, out, err);
    if (protect->parsed()) return cmd_protected(opt, out, err);
    if (verify->parsed()) return cmd_verify(opt, out, err);
    err << "error: no subcommand given\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
}

}  // namespace cyclewalk::cli
