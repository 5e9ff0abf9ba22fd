// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

#include "format.hpp"
#include "pslet.h"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using pslet_cli::Format;
using pslet_cli::Record;

constexpr int kExitRowError = 1;
constexpr int kExitUsage = 2;

struct SeriesFlags {
  int order = 10;
  unsigned digits = 50;
  std::string pade = "4,4";
};

void add_series_flags(CLI::App* app, SeriesFlags& f) {
  app->add_option("--order", f.order, "Number of series terms, E^(-2) upward")
      ->check(CLI::Range(2, 12));
  app->add_option("--digits", f.digits, "Working precision in decimal digits")
      ->check(CLI::Range(20u, 1000u));
  app->add_option("--pade", f.pade, "Selected Pade entry N,M");
}

pslet_options to_options(const SeriesFlags& f) {
  pslet_options o;
  pslet_options_init(&o);
  o.terms = f.order;
  o.digits = f.digits;
  int n = 0, m = 0;
  char tail = 0;
  if (std::sscanf(f.pade.c_str(), "%d,%d%c", &n, &m, &tail) != 2 || n < 0 || m < 0) {
    throw CLI::ValidationError("--pade", "expected N,M with non-negative integers");
  }
  o.pade_n = n;
  o.pade_m = m;
  return o;
}

int report_failure(int status) {
  std::cerr << "pslet: " << pslet_status_name(status) << ": " << pslet_last_error() << "\n";
  return status == PSLET_INVALID_CONFIG || status == PSLET_INVALID_ARGUMENT ? kExitUsage
                                                                            : kExitRowError;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << text;
}

std::vector<Record> collect(const pslet_table* t) {
  std::vector<Record> rows;
  for (size_t i = 0; i < pslet_table_size(t); ++i) {
    pslet_record r;
    pslet_table_record(t, i, &r);
    rows.push_back(pslet_cli::copy_record(r));
  }
  return rows;
}

// Keeps rows whose Z (dimensional) or alpha' (scaled) is listed.
int filter_rows(std::vector<Record>& rows, const std::vector<double>& only) {
  if (only.empty()) return 0;
  std::vector<Record> kept;
  for (double key : only) {
    bool found = false;
    for (const Record& r : rows) {
      const double k = r.raw.units == PSLET_UNITS_DIMENSIONAL ? r.raw.charge : r.raw.alpha_prime;
      if (std::abs(k - key) < 1e-12) {
        kept.push_back(r);
        found = true;
      }
    }
    if (!found) {
      std::cerr << "pslet: InvalidConfig: " << key << " is not a row of this table\n";
      return kExitUsage;
    }
  }
  rows = std::move(kept);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shifted large-l expansion eigenvalues for screened Coulomb potentials"};
  app.set_config("--config", "", "TOML or INI file supplying option values");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pslet_version()));

  std::string format_text = "human";
  std::string out_path;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "Output format")
        ->check(CLI::IsMember({"human", "csv", "json"}));
    sub->add_option("--out", out_path, "Write output to a file instead of stdout");
  };

  // solve
  CLI::App* solve = app.add_subcommand("solve", "Single-point solve");
  int l = 0, nr = 0;
  std::optional<int> charge;
  std::optional<double> alpha_prime;
  double alpha0 = 0.98;
  std::string units_text;
  SeriesFlags series;
  solve->add_option("--l", l, "Angular momentum")->required()->check(CLI::NonNegativeNumber);
  solve->add_option("--nr", nr, "Radial quantum number")->check(CLI::NonNegativeNumber);
  auto* z_opt = solve->add_option("--Z", charge, "Nuclear charge (dimensional units)")
                    ->check(CLI::PositiveNumber);
  auto* a_opt = solve->add_option("--alpha-prime", alpha_prime, "Scaled screening (scaled units)")
                    ->check(CLI::NonNegativeNumber);
  z_opt->excludes(a_opt);
  solve->add_option("--alpha0", alpha0, "Screening-rule prefactor");
  solve->add_option("--units", units_text, "Reported energy unit")
      ->check(CLI::IsMember({"hartree", "eV", "keV"}));
  add_series_flags(solve, series);
  add_output(solve);

  // table / compare
  std::string table_text;
  std::vector<double> only;
  double tolerance = 1e-6;
  int grid_points = 20000;
  int workers = 0;
  CLI::App* table = app.add_subcommand("table", "Reproduce a reference table");
  table->add_option("--id", table_text, "Table id")->required()->check(
      CLI::IsMember({"T1", "T2", "T3", "T4"}));
  table->add_option("--only", only, "Restrict output to these Z or alpha' values")
      ->delimiter(',');
  add_series_flags(table, series);
  add_output(table);

  CLI::App* compare = app.add_subcommand("compare", "Series versus direct integration");
  compare->add_option("--id", table_text, "Table id")->required()->check(
      CLI::IsMember({"T3", "T4"}));
  compare->add_option("--only", only, "Restrict output to these alpha' values")
      ->delimiter(',');
  compare->add_option("--tolerance", tolerance, "Pass threshold on |E[n,m] - E_oracle|");
  compare->add_option("--grid-points", grid_points, "Oracle grid size")
      ->check(CLI::Range(1000, 10000000));
  compare->add_option("--workers", workers, "Oracle worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  add_series_flags(compare, series);
  add_output(compare);

  // oracle
  CLI::App* oracle = app.add_subcommand("oracle", "Direct radial integration");
  double oracle_alpha = 0.0;
  oracle->add_option("--alpha-prime", oracle_alpha, "Scaled screening")
      ->required()
      ->check(CLI::NonNegativeNumber);
  oracle->add_option("--l", l, "Angular momentum")->required()->check(CLI::NonNegativeNumber);
  oracle->add_option("--nr", nr, "Radial quantum number")->check(CLI::NonNegativeNumber);
  oracle->add_option("--grid-points", grid_points, "Grid size")->check(CLI::Range(1000, 10000000));
  add_output(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    const Format format = pslet_cli::parse_format(format_text);

    if (solve->parsed()) {
      if (!charge && !alpha_prime) {
        std::cerr << "pslet: one of --Z or --alpha-prime is required\n";
        return kExitUsage;
      }
      pslet_problem p;
      pslet_problem_init(&p);
      p.l = l;
      p.n_r = nr;
      p.screening_alpha0 = alpha0;
      if (charge) {
        p.units = PSLET_UNITS_DIMENSIONAL;
        p.charge = *charge;
      } else {
        p.units = PSLET_UNITS_SCALED;
        p.alpha_prime = *alpha_prime;
      }
      int unit = charge ? PSLET_KEV : PSLET_HARTREE;
      if (units_text == "hartree") unit = PSLET_HARTREE;
      if (units_text == "eV") unit = PSLET_EV;
      if (units_text == "keV") unit = PSLET_KEV;

      const pslet_options opts = to_options(series);
      pslet_solution* s = nullptr;
      if (int st = pslet_solve(&p, &opts, &s); st != PSLET_OK) return report_failure(st);
      pslet_record r;
      const int st = pslet_solution_record(s, unit, &r);
      std::vector<Record> rows;
      if (st == PSLET_OK) rows.push_back(pslet_cli::copy_record(r));
      pslet_solution_free(s);
      if (st != PSLET_OK) return report_failure(st);
      emit(pslet_cli::render(rows, format), out_path);
      return 0;
    }

    if (table->parsed() || compare->parsed()) {
      pslet_run_config cfg;
      pslet_run_config_init(&cfg);
      if (int st = pslet_parse_table_id(table_text.c_str(), &cfg.table); st != PSLET_OK) {
        return report_failure(st);
      }
      cfg.solve = to_options(series);
      cfg.tolerance = tolerance;
      cfg.grid_points = grid_points;
      cfg.workers = workers;
      pslet_table* t = nullptr;
      const int st = compare->parsed() ? pslet_table_compare(&cfg, &t) : pslet_table_run(&cfg, &t);
      if (st != PSLET_OK) return report_failure(st);
      std::vector<Record> rows = collect(t);
      pslet_table_free(t);
      if (int rc = filter_rows(rows, only); rc != 0) return rc;
      emit(pslet_cli::render(rows, format, cfg.table), out_path);
      int rc = 0;
      for (const Record& r : rows) {
        if (!r.raw.has_pade) {
          std::cerr << "pslet: row l=" << r.raw.l << " Z=" << r.raw.charge
                    << " alpha'=" << r.raw.alpha_prime << ": " << r.error << "\n";
          rc = kExitRowError;
        }
      }
      return rc;
    }

    if (oracle->parsed()) {
      pslet_oracle_result* res = nullptr;
      if (int st = pslet_oracle_scaled(oracle_alpha, l, nr, grid_points, &res); st != PSLET_OK) {
        return report_failure(st);
      }
      pslet_cli::OracleRow row;
      row.alpha_prime = oracle_alpha;
      row.l = l;
      row.n_r = nr;
      row.grid_points = grid_points;
      pslet_oracle_summary_get(res, &row.summary);
      pslet_oracle_free(res);
      emit(pslet_cli::render(row, format), out_path);
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "pslet: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "pslet: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
