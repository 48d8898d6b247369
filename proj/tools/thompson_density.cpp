// Copyright 2026 The thompson-density Authors
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


// thompson-density: command-line front end over the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "thompson/thompson.h"

namespace {

constexpr int kExitInvalidConfig = 3;
constexpr int kExitInternal = 4;

struct Options {
  std::int64_t n = -1, nmax = -1, k = -1, kmax = -1;
  std::string genset = "standard";
  std::string mode = "dp";
  double tol = 0;
  std::size_t trunc = 0;
  double cap = 0;
  unsigned threads = 1;
  int digits = 0;
  unsigned mn = 0;
  std::vector<std::string> checks;
  bool outer = false, perturb = false, list = false;
  std::string out;
  std::string format = "csv";
};

void add_options(CLI::App* sub, Options& o, const tf_run_config& defaults) {
  o.tol = defaults.tol;
  o.trunc = defaults.truncation;
  o.cap = defaults.cap;
  o.digits = defaults.digits;
  o.mn = defaults.mn;
  sub->add_option("--n", o.n, "Leaves (total forest size)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--nmax", o.nmax, "Sweep n = 1..nmax")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--k", o.k, "Height bound")->check(CLI::NonNegativeNumber);
  sub->add_option("--kmax", o.kmax, "Sweep k up to kmax")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--genset", o.genset,
                  "standard | symmetric | extended | custom:<w>,<w>,...");
  sub->add_option("--mode", o.mode, "Counting path")
      ->check(CLI::IsMember({"enumerate", "dp", "both"}));
  sub->add_option("--tol", o.tol, "Width of certified enclosures");
  sub->add_option("--trunc", o.trunc, "Series truncation degree");
  sub->add_option("--cap", o.cap, "Enumeration cardinality cap");
  sub->add_option("--threads", o.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  sub->add_option("--digits", o.digits, "Fractional digits in decimals");
  sub->add_option("--mn", o.mn, "group-verify: m, n range");
  sub->add_option("--check", o.checks,
                  "group-verify: extra relation \"lhs = rhs\" (repeatable)");
  sub->add_flag("--outer", o.outer, "density: exact outer boundary");
  sub->add_flag("--perturb", o.perturb, "embed-verify: perturbed action rule");
  sub->add_flag("--list", o.list, "embed-verify: list forests and elements");
  sub->add_option("--out", o.out, "Output file (default stdout)");
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
}

int emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return std::cout ? 0 : kExitInternal;
  }
  std::ofstream f(path, std::ios::binary);
  f << text;
  f.close();
  if (!f) {
    std::cerr << "error: cannot write " << path << '\n';
    return kExitInternal;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  tf_run_config defaults;
  tf_run_config_init(&defaults);

  CLI::App app{"Density and boundary computations for Thompson's group F",
               "thompson-density"};
  app.set_version_flag("--version", tf_version());
  app.require_subcommand(1);

  const std::map<std::string, std::string> descriptions{
      {"group-verify", "Verify presentations, the automorphism and commutators"},
      {"xi", "Certified roots xi_k and limit fractions"},
      {"density", "Exact statistics of B(n,k) for a generating set"},
      {"theorem1", "Certified B' density sweep and isolated-vertex checks"},
      {"theorem2", "Doubling-ratio sweep and exact outer boundaries"},
      {"embed-verify", "Check the embedding of B(n,k) into the Cayley graph"},
      {"enumerate", "List B(n,k) in canonical order"},
      {"isolated", "Exact counts of isolated vertices"},
  };
  Options opts;
  std::vector<std::pair<std::string, CLI::App*>> subs;
  for (const auto& [name, text] : descriptions) {
    CLI::App* sub = app.add_subcommand(name, text);
    add_options(sub, opts, defaults);
    subs.emplace_back(name, sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalidConfig;
  }

  std::string command;
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) command = name;
  }

  tf_run_config cfg = defaults;
  cfg.command = command.c_str();
  cfg.n = opts.n;
  cfg.nmax = opts.nmax;
  cfg.k = opts.k;
  cfg.kmax = opts.kmax;
  cfg.genset = opts.genset.c_str();
  cfg.mode = opts.mode == "enumerate" ? TF_MODE_ENUMERATE
             : opts.mode == "both"    ? TF_MODE_BOTH
                                      : TF_MODE_DP;
  cfg.tol = opts.tol;
  cfg.truncation = opts.trunc;
  cfg.cap = opts.cap;
  cfg.threads = opts.threads;
  cfg.digits = opts.digits;
  cfg.mn = opts.mn;
  std::vector<const char*> checks;
  for (const auto& c : opts.checks) checks.push_back(c.c_str());
  cfg.checks = checks.data();
  cfg.nchecks = checks.size();
  cfg.outer = opts.outer;
  cfg.perturb = opts.perturb;
  cfg.list = opts.list;

  tf_report* report = nullptr;
  if (tf_run(&cfg, &report) != TF_OK) {
    std::cerr << "error: " << tf_last_error() << '\n';
    return kExitInternal;
  }
  const int status = tf_report_status(report);
  if (status == kExitInvalidConfig) {
    std::cerr << "error: " << tf_report_message(report) << '\n';
    tf_report_free(report);
    return status;
  }

  int rc = status;
  char* text = nullptr;
  if (tf_report_render(report, opts.format.c_str(), &text) == TF_OK) {
    if (const int w = emit(text, opts.out)) rc = w;
    tf_string_free(text);
  } else {
    std::cerr << "error: " << tf_last_error() << '\n';
    rc = kExitInternal;
  }
  char* summary = nullptr;
  if (tf_report_render(report, "summary", &summary) == TF_OK) {
    std::cerr << summary;
    tf_string_free(summary);
  }
  tf_report_free(report);
  return rc;
}
