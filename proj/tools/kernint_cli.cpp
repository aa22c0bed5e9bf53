/*
 * Copyright (C) 2026 The kernint Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// kernint: verify kernel-integral identities along independent numerical paths.
//
//   kernint verify [--case NAME] [--tol X] [--json] [--level L] [--terms M]
//                  [--config FILE] [--jobs J]
//   kernint base --s "-1.5,0,1"
//   kernint asymptotic --case ex3 [--n-start 10] [--n-doublings 9]
//   kernint selftest
//
// Exit: 0 ok (category-B flags included), 1 category-A failure, 2 error.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kernint/report.hpp"
#include "kernint/verify.hpp"

namespace {

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw std::invalid_argument("bad number in list: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty value list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of kernel-integral identities"};
  app.require_subcommand(1);

  // Flags are applied after the config file, so they win.
  std::string config_path;
  std::optional<std::string> case_name;
  std::optional<double> tol;
  std::optional<int> level, terms, jobs;
  bool json = false;

  auto* verify = app.add_subcommand("verify", "Run the catalog (or one case) through every path");
  verify->add_option("--config", config_path, "key = value configuration file")
      ->check(CLI::ExistingFile);
  verify->add_option("--case", case_name, "case name, e.g. ex2@a=0.5");
  verify->add_option("--tol", tol, "category-A closed-form tolerance (relative)");
  verify->add_option("--level", level, "max quadrature level for the 1-D paths");
  verify->add_option("--terms", terms, "Taylor truncation order for the c-series");
  verify->add_option("--jobs", jobs, "cases evaluated concurrently");
  verify->add_flag("--json", json, "emit JSON");

  std::string s_list;
  auto* base = app.add_subcommand("base", "Monomial sweep against the Gamma-zeta closed form");
  base->add_option("--s", s_list, "comma-separated exponents > -2")->required();
  base->add_option("--config", config_path, "key = value configuration file")
      ->check(CLI::ExistingFile);
  base->add_flag("--json", json, "emit JSON");

  std::string rate_case;
  long n_start = 10;
  int n_doublings = 9;
  auto* asym = app.add_subcommand("asymptotic", "Convergence rate of the partial terms");
  asym->add_option("--case", rate_case, "case with a closed-form F")->required();
  asym->add_option("--n-start", n_start, "first N")->check(CLI::PositiveNumber);
  asym->add_option("--n-doublings", n_doublings, "number of doublings of N")
      ->check(CLI::Range(4, 24));
  asym->add_flag("--json", json, "emit JSON");

  auto* selftest = app.add_subcommand("selftest", "Quadrature and special-function spot checks");
  selftest->add_flag("--json", json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const auto fmt = [&] { return json ? kernint::Format::json : kernint::Format::text; };

  try {
    kernint::VerifyConfig cfg;
    if (!config_path.empty()) cfg = kernint::load_config_file(config_path, cfg);
    if (case_name) cfg.case_name = *case_name;
    if (tol) cfg.tol_a = *tol;
    if (level) cfg.level = *level;
    if (terms) cfg.terms = *terms;
    if (jobs) cfg.jobs = *jobs;
    if (json) cfg.json = true;
    json = cfg.json;
    kernint::validate(cfg);

    if (*verify) {
      const auto records = kernint::run_verify(cfg);
      std::cout << kernint::render(records, cfg, fmt());
      return kernint::exit_code(records);
    }
    if (*base) {
      const auto s = parse_list(s_list);
      const auto records = kernint::run_base_sweep(s, cfg);
      std::cout << kernint::render(records, cfg, fmt());
      return kernint::exit_code(records);
    }
    if (*asym) {
      const auto rec = kernint::run_asymptotic(rate_case, n_start, n_doublings);
      std::cout << kernint::render(rec, fmt());
      return rec.status == kernint::Status::pass ? 0 : 1;
    }
    if (*selftest) {
      const auto items = kernint::run_selftest();
      std::cout << kernint::render(items, fmt());
      for (const auto& it : items)
        if (!it.ok) return 1;
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "kernint: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
