// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

#include "format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace pslet_cli {

namespace {

std::string number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kEmittedDigits, x);
  return buf;
}

std::string fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

const char* unit_name(int unit) {
  switch (unit) {
    case PSLET_EV: return "eV";
    case PSLET_KEV: return "keV";
    default: return "hartree";
  }
}

nlohmann::json optional_number(bool present, double x) {
  return present ? nlohmann::json(emitted(x)) : nlohmann::json(nullptr);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_csv(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i != 0) line += ',';
    line += csv_escape(fields[i]);
  }
  return line + "\n";
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "human") return Format::Human;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + text + "'");
}

double emitted(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(number(x).c_str(), nullptr);
}

Record copy_record(const pslet_record& r) {
  Record out;
  out.raw = r;
  out.error = r.error != nullptr ? r.error : "";
  out.raw.error = nullptr;
  return out;
}

nlohmann::json to_json(const Record& rec) {
  const pslet_record& r = rec.raw;
  nlohmann::json j;
  j["units"] = r.units == PSLET_UNITS_DIMENSIONAL ? "dimensional" : "scaled";
  j["z"] = r.charge;
  j["alpha_prime"] = emitted(r.alpha_prime);
  j["l"] = r.l;
  j["n_r"] = r.n_r;
  j["r0"] = emitted(r.r0);
  j["w"] = emitted(r.w);
  j["beta"] = emitted(r.beta);
  j["lbar"] = emitted(r.lbar);
  j["partial_sum"] = emitted(r.partial_sum);
  j["pade_best"] = optional_number(r.has_pade, r.pade_best);
  j["pade_refinement"] = optional_number(r.has_refinement, r.pade_refinement);
  j["uncertainty"] = emitted(r.uncertainty);
  j["agreement_digits"] = r.agreement_digits;
  j["low_confidence"] = r.low_confidence != 0;
  j["unit"] = unit_name(r.unit);
  j["energy"] = emitted(r.converted);
  j["reference"] = optional_number(r.has_reference, r.reference);
  j["oracle"] = optional_number(r.has_oracle, r.oracle);
  j["oracle_difference"] = optional_number(r.has_oracle && r.has_pade, r.oracle_difference);
  j["oracle_agreement_digits"] =
      r.has_oracle && r.has_pade ? nlohmann::json(r.oracle_agreement_digits) : nullptr;
  j["pass"] = r.has_oracle ? nlohmann::json(r.pass != 0) : nullptr;
  j["error"] = rec.error;
  return j;
}

nlohmann::json to_json(const OracleRow& r) {
  nlohmann::json j;
  j["alpha_prime"] = emitted(r.alpha_prime);
  j["l"] = r.l;
  j["n_r"] = r.n_r;
  j["grid_points"] = r.grid_points;
  j["eigenvalue"] = emitted(r.summary.eigenvalue);
  j["nodes"] = r.summary.nodes;
  j["mismatch"] = emitted(r.summary.mismatch);
  j["iterations"] = r.summary.iterations;
  j["kinetic"] = emitted(r.summary.kinetic);
  j["tail_decay"] = emitted(r.summary.tail_decay);
  return j;
}

std::vector<std::string> csv_header() {
  return {"units",       "z",         "alpha_prime",     "l",
          "n_r",         "r0",        "w",               "beta",
          "lbar",        "partial_sum", "pade_best",     "pade_refinement",
          "uncertainty", "agreement_digits", "low_confidence", "unit",
          "energy",      "reference", "oracle",          "oracle_difference",
          "oracle_agreement_digits", "pass", "error"};
}

std::vector<std::string> csv_fields(const Record& rec) {
  const pslet_record& r = rec.raw;
  auto opt = [](bool present, double x) { return present ? number(x) : std::string(); };
  const bool compared = r.has_oracle && r.has_pade;
  return {r.units == PSLET_UNITS_DIMENSIONAL ? "dimensional" : "scaled",
          std::to_string(r.charge),
          number(r.alpha_prime),
          std::to_string(r.l),
          std::to_string(r.n_r),
          number(r.r0),
          number(r.w),
          number(r.beta),
          number(r.lbar),
          number(r.partial_sum),
          opt(r.has_pade, r.pade_best),
          opt(r.has_refinement, r.pade_refinement),
          number(r.uncertainty),
          std::to_string(r.agreement_digits),
          r.low_confidence ? "true" : "false",
          unit_name(r.unit),
          number(r.converted),
          opt(r.has_reference, r.reference),
          opt(r.has_oracle, r.oracle),
          opt(compared, r.oracle_difference),
          compared ? std::to_string(r.oracle_agreement_digits) : "",
          r.has_oracle ? (r.pass ? "true" : "false") : "",
          rec.error};
}

std::vector<std::string> oracle_csv_header() {
  return {"alpha_prime", "l",          "n_r",     "grid_points", "eigenvalue",
          "nodes",       "mismatch",   "iterations", "kinetic",  "tail_decay"};
}

std::vector<std::string> oracle_csv_fields(const OracleRow& r) {
  return {number(r.alpha_prime),          std::to_string(r.l),
          std::to_string(r.n_r),          std::to_string(r.grid_points),
          number(r.summary.eigenvalue),   std::to_string(r.summary.nodes),
          number(r.summary.mismatch),     std::to_string(r.summary.iterations),
          number(r.summary.kinetic),      number(r.summary.tail_decay)};
}

int human_decimals(std::optional<int> table) {
  if (!table) return 10;
  switch (*table) {
    case PSLET_T1: return 9;
    case PSLET_T2: return 8;
    case PSLET_T3: return 9;
    case PSLET_T4: return 15;
    default: return 10;
  }
}

std::string render(const std::vector<Record>& records, Format format, std::optional<int> table) {
  std::ostringstream os;
  if (format == Format::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Record& r : records) arr.push_back(to_json(r));
    os << arr.dump(2) << "\n";
    return os.str();
  }
  if (format == Format::Csv) {
    os << join_csv(csv_header());
    for (const Record& r : records) os << join_csv(csv_fields(r));
    return os.str();
  }

  const int d = human_decimals(table);
  const int width = d + 6;
  char line[512];
  if (table) {
    os << pslet_table_name(*table) << "  energies in "
       << unit_name(pslet_table_unit(*table)) << "\n";
  }
  const bool any_oracle = [&] {
    for (const Record& r : records) {
      if (r.raw.has_oracle) return true;
    }
    return false;
  }();
  std::snprintf(line, sizeof line, "%-8s %2s %*s %*s %10s %*s", "Z|a'", "l", width, "raw sum",
                width, "E[n,m]", "+/-", width, any_oracle ? "oracle" : "reference");
  os << line << "  flags\n";
  for (const Record& rec : records) {
    const pslet_record& r = rec.raw;
    const std::string key =
        r.units == PSLET_UNITS_DIMENSIONAL ? std::to_string(r.charge) : fixed(r.alpha_prime, 2);
    if (!rec.error.empty() && !r.has_pade) {
      std::snprintf(line, sizeof line, "%-8s %2d  error: %s", key.c_str(), r.l,
                    rec.error.c_str());
      os << line << "\n";
      continue;
    }
    const double raw = pslet_convert_units(r.partial_sum, r.unit);
    const double unc = pslet_convert_units(r.uncertainty, r.unit);
    const double third = any_oracle ? pslet_convert_units(r.oracle, r.unit) : r.reference;
    const bool has_third = any_oracle ? r.has_oracle != 0 : r.has_reference != 0;
    std::snprintf(line, sizeof line, "%-8s %2d %*s %*s %10.2e %*s", key.c_str(), r.l, width,
                  fixed(raw, d).c_str(), width, fixed(r.converted, d).c_str(), unc, width,
                  has_third ? fixed(third, d).c_str() : "-");
    os << line;
    std::string flags;
    if (r.low_confidence) flags += " low-confidence";
    if (r.has_oracle) flags += r.pass ? " pass" : " FAIL";
    if (!rec.error.empty()) flags += " " + rec.error;
    os << " " << flags << "\n";
  }
  return os.str();
}

std::string render(const OracleRow& row, Format format) {
  if (format == Format::Json) return to_json(row).dump(2) + "\n";
  if (format == Format::Csv) return join_csv(oracle_csv_header()) + join_csv(oracle_csv_fields(row));
  std::ostringstream os;
  os << "alpha' = " << fixed(row.alpha_prime, 4) << "  l = " << row.l << "  n_r = " << row.n_r
     << "  grid points = " << row.grid_points << "\n"
     << "E         = " << fixed(row.summary.eigenvalue, 12) << "\n"
     << "nodes     = " << row.summary.nodes << "\n"
     << "<T>       = " << fixed(row.summary.kinetic, 12) << "\n"
     << "mismatch  = " << number(row.summary.mismatch) << "\n";
  return os.str();
}

}  // namespace pslet_cli
