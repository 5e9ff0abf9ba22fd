// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pslet/oracle.hpp"
#include "pslet/solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pslet {

enum class EnergyUnit { Hartree, eV, keV };

/// Hartree-to-eV factor used for the published K- and L-shell tables.
inline constexpr double kHartreeEv = 27.196;

double convert_units(double hartree, EnergyUnit target);
const char* to_string(EnergyUnit unit) noexcept;

enum class TableId { T1, T2, T3, T4 };

const char* to_string(TableId id) noexcept;
TableId parse_table_id(const std::string& text);

/// One row of a reproduction table with its published selected-Pade value.
struct TableRow {
  UnitMode units = UnitMode::Scaled;
  int charge = 1;
  double alpha_prime = 0.0;
  int l = 0;
  /// Published value in the table's own unit (keV for T1/T2, hartree else).
  double reference = 0.0;
};

std::vector<TableRow> table_rows(TableId id);
EnergyUnit table_unit(TableId id);

struct EnergyRecord {
  UnitMode units = UnitMode::Scaled;
  int charge = 1;
  double alpha_prime = 0.0;
  int l = 0;
  int n_r = 0;

  double r0 = 0.0;
  double w = 0.0;
  double beta = 0.0;
  double lbar = 0.0;

  /// Energies in hartree.
  double partial_sum = 0.0;
  std::optional<double> pade_best;
  std::optional<double> pade_refinement;
  double uncertainty = 0.0;
  int agreement_digits = 0;
  bool low_confidence = false;

  EnergyUnit unit = EnergyUnit::Hartree;
  /// pade_best (or the partial sum) in `unit`.
  double converted = 0.0;
  std::optional<double> reference;

  std::optional<double> oracle;
  std::optional<double> oracle_difference;
  std::optional<int> oracle_agreement_digits;
  std::optional<bool> pass;

  /// Empty on success, otherwise the error name and message for this row.
  std::string error;
};

enum class Command { Solve, Table, Oracle, Compare };

struct RunConfig {
  Command command = Command::Table;
  TableId table = TableId::T3;
  SolveOptions solve{};
  /// Tolerance on |E_pade - E_oracle| for compare runs.
  double tolerance = 1e-6;
  int grid_points = 20000;
  /// Worker threads for the oracle stage; 0 picks hardware concurrency.
  int workers = 0;
};

/// Derived fields of a solved problem, converted to plain values.
EnergyRecord make_record(const ProblemSpec& spec, const Solution& solution, EnergyUnit unit);

/// One record per row in input order. Rows that fail carry `error` and the
/// remaining rows are still produced.
std::vector<EnergyRecord> run_table(const RunConfig& config);

/// run_table plus an independent oracle eigenvalue per row (scaled tables
/// only). Oracle failures are recorded on the row.
std::vector<EnergyRecord> compare_run(const RunConfig& config);

/// Times scaled_oracle widens r_max by 1.5 after GridInsufficient.
inline constexpr int kOracleGridRetries = 3;

/// Oracle eigenvalue for the scaled Yukawa problem on `points` log-spaced
/// points of the default grid sized from the leading-order energy.
OracleResult scaled_oracle(double alpha_prime, int l, int n_r, int points);

/// Leading significant digits on which two values agree.
int agreement_digits(double a, double b, int cap = 16);

}  // namespace pslet
