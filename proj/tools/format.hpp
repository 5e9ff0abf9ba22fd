// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pslet.h"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pslet_cli {

enum class Format { Human, Csv, Json };

Format parse_format(const std::string& text);

/// Fixed digit budget of csv and json output.
inline constexpr int kEmittedDigits = 15;

/// x rounded to kEmittedDigits significant digits.
double emitted(double x);

/// Owning copy of a pslet_record.
struct Record {
  pslet_record raw{};
  std::string error;
};

Record copy_record(const pslet_record& r);

struct OracleRow {
  double alpha_prime = 0.0;
  int l = 0;
  int n_r = 0;
  int grid_points = 0;
  pslet_oracle_summary summary{};
};

nlohmann::json to_json(const Record& r);
nlohmann::json to_json(const OracleRow& r);

std::vector<std::string> csv_header();
std::vector<std::string> csv_fields(const Record& r);
std::vector<std::string> oracle_csv_header();
std::vector<std::string> oracle_csv_fields(const OracleRow& r);

/// Decimal places used for energies in each table's human layout; a missing
/// table selects the single-solve layout.
int human_decimals(std::optional<int> table);

/// Renders records. `table` is the pslet_table_id of a table run.
std::string render(const std::vector<Record>& records, Format format,
                   std::optional<int> table = std::nullopt);
std::string render(const OracleRow& row, Format format);

}  // namespace pslet_cli
