// Copyright 2026 The Railcap Authors
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

#include "railcap/reporting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "railcap/errors.hpp"
#include "railcap/stats.hpp"
#include "csv.hpp"

namespace railcap::report {

namespace {

using nlohmann::json;

std::string fmt6(double value) {
  if (value == 0.0) value = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

/// Everything one summary row needs, full precision. Built either from a
/// fresh ScenarioResult or parsed back from a stored meta file, so the
/// summary regenerated by `report` is byte-identical to the original.
struct SummaryRow {
  int seq = 0;
  std::string label;
  std::string regime;
  double demand_share = 0.0;
  double offered = 0.0;
  double transported = 0.0;
  double unserved_fraction = 0.0;
  double objective = 0.0;
  double link_util_mean = 0.0;
  double link_util_median = 0.0;
  double link_util_std = 0.0;
  double frac_links_full = 0.0;
  double frac_links_ge_090 = 0.0;
  double train_avg_util_mean = 0.0;
  double train_avg_util_median = 0.0;
  double train_max_util_mean = 0.0;
  double train_max_util_median = 0.0;
  double frac_trains_max_ge_090 = 0.0;
  int rounds = 0;
  int columns = 0;
  int unroutable_od_pairs = 0;
  bool round_budget_exhausted = false;
};

SummaryRow to_row(const ScenarioResult& r, int seq) {
  SummaryRow row;
  row.seq = seq;
  row.label = r.scenario.label;
  row.regime = to_string(r.scenario.regime);
  row.demand_share = r.scenario.demand_share;
  row.offered = r.offered_demand;
  row.transported = r.transported;
  row.unserved_fraction = r.unserved_fraction;
  row.objective = r.objective;
  row.link_util_mean = r.link_stats.mean;
  row.link_util_median = r.link_stats.median;
  row.link_util_std = r.link_stats.stddev;
  row.frac_links_full = r.link_stats.frac_full;
  row.frac_links_ge_090 = r.link_stats.frac_ge_090;
  row.train_avg_util_mean = r.train_stats.avg_mean;
  row.train_avg_util_median = r.train_stats.avg_median;
  row.train_max_util_mean = r.train_stats.max_mean;
  row.train_max_util_median = r.train_stats.max_median;
  row.frac_trains_max_ge_090 = r.train_stats.frac_max_ge_090;
  row.rounds = r.rounds;
  row.columns = r.columns;
  row.unroutable_od_pairs = r.unroutable_od_pairs;
  row.round_budget_exhausted = r.round_budget_exhausted;
  return row;
}

json to_json(const SummaryRow& row) {
  return json{{"seq", row.seq},
              {"label", row.label},
              {"regime", row.regime},
              {"demand_share", row.demand_share},
              {"offered", row.offered},
              {"transported", row.transported},
              {"unserved_fraction", row.unserved_fraction},
              {"objective", row.objective},
              {"link_util_mean", row.link_util_mean},
              {"link_util_median", row.link_util_median},
              {"link_util_std", row.link_util_std},
              {"frac_links_full", row.frac_links_full},
              {"frac_links_ge_090", row.frac_links_ge_090},
              {"train_avg_util_mean", row.train_avg_util_mean},
              {"train_avg_util_median", row.train_avg_util_median},
              {"train_max_util_mean", row.train_max_util_mean},
              {"train_max_util_median", row.train_max_util_median},
              {"frac_trains_max_ge_090", row.frac_trains_max_ge_090},
              {"rounds", row.rounds},
              {"columns", row.columns},
              {"unroutable_od_pairs", row.unroutable_od_pairs},
              {"round_budget_exhausted", row.round_budget_exhausted}};
}

SummaryRow from_json(const json& j) {
  SummaryRow row;
  row.seq = j.at("seq").get<int>();
  row.label = j.at("label").get<std::string>();
  row.regime = j.at("regime").get<std::string>();
  row.demand_share = j.at("demand_share").get<double>();
  row.offered = j.at("offered").get<double>();
  row.transported = j.at("transported").get<double>();
  row.unserved_fraction = j.at("unserved_fraction").get<double>();
  row.objective = j.at("objective").get<double>();
  row.link_util_mean = j.at("link_util_mean").get<double>();
  row.link_util_median = j.at("link_util_median").get<double>();
  row.link_util_std = j.at("link_util_std").get<double>();
  row.frac_links_full = j.at("frac_links_full").get<double>();
  row.frac_links_ge_090 = j.at("frac_links_ge_090").get<double>();
  row.train_avg_util_mean = j.at("train_avg_util_mean").get<double>();
  row.train_avg_util_median = j.at("train_avg_util_median").get<double>();
  row.train_max_util_mean = j.at("train_max_util_mean").get<double>();
  row.train_max_util_median = j.at("train_max_util_median").get<double>();
  row.frac_trains_max_ge_090 = j.at("frac_trains_max_ge_090").get<double>();
  row.rounds = j.at("rounds").get<int>();
  row.columns = j.at("columns").get<int>();
  row.unroutable_od_pairs = j.at("unroutable_od_pairs").get<int>();
  row.round_budget_exhausted = j.at("round_budget_exhausted").get<bool>();
  return row;
}

std::string row_to_csv(const SummaryRow& row) {
  std::ostringstream out;
  out << io_detail::csv_quote(row.label) << "," << row.regime << ","
      << fmt6(row.demand_share) << "," << fmt6(row.offered) << ","
      << fmt6(row.transported) << "," << fmt6(row.unserved_fraction) << ","
      << fmt6(row.objective) << "," << fmt6(row.link_util_mean) << ","
      << fmt6(row.link_util_median) << "," << fmt6(row.link_util_std) << ","
      << fmt6(row.frac_links_full) << "," << fmt6(row.frac_links_ge_090) << ","
      << fmt6(row.train_avg_util_mean) << "," << fmt6(row.train_avg_util_median)
      << "," << fmt6(row.train_max_util_mean) << ","
      << fmt6(row.train_max_util_median) << ","
      << fmt6(row.frac_trains_max_ge_090);
  return out.str();
}

void write_summary(const std::vector<SummaryRow>& rows,
                   const std::filesystem::path& out_dir, Format format) {
  if (format == Format::kCsv) {
    std::ofstream out(out_dir / "results.csv");
    out << kResultsHeader << "\n";
    for (const auto& row : rows) out << row_to_csv(row) << "\n";
  } else {
    json all = json::array();
    for (const auto& row : rows) all.push_back(to_json(row));
    std::ofstream out(out_dir / "results.json");
    out << all.dump(2) << "\n";
  }
}

}  // namespace

const char* const kResultsHeader =
    "label,regime,demand_share,offered,transported,unserved_fraction,objective,"
    "link_util_mean,link_util_median,link_util_std,frac_links_full,"
    "frac_links_ge_090,train_avg_util_mean,train_avg_util_median,"
    "train_max_util_mean,train_max_util_median,frac_trains_max_ge_090";

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::kCsv;
  if (text == "json") return Format::kJson;
  throw Error(ErrorKind::kConfig, "bad format '" + text + "' (expected csv|json)");
}

std::string results_csv_row(const ScenarioResult& r) {
  return row_to_csv(to_row(r, 0));
}

void write_sweep_outputs(const std::vector<ScenarioResult>& results,
                         const std::filesystem::path& out_dir, Format format) {
  std::filesystem::create_directories(out_dir);

  std::vector<SummaryRow> rows;
  rows.reserve(results.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    rows.push_back(to_row(r, static_cast<int>(i)));

    {
      std::ofstream out(out_dir / (r.scenario.label + "_links.csv"));
      out << "from,to,seat_capacity,load,utilization\n";
      for (const auto& arc : r.arcs) {
        out << io_detail::csv_quote(arc.from) << ","
            << io_detail::csv_quote(arc.to) << "," << arc.seat_capacity << ","
            << fmt6(arc.load) << "," << fmt6(arc.utilization) << "\n";
      }
    }
    {
      std::ofstream out(out_dir / (r.scenario.label + "_trains.csv"));
      out << "train_id,seats,avg_util,max_util,undefined\n";
      for (const auto& t : r.train_stats.per_train) {
        out << io_detail::csv_quote(t.train_id) << "," << t.seats << ","
            << fmt6(t.avg_util) << "," << fmt6(t.max_util) << ","
            << (t.defined ? 0 : 1) << "\n";
      }
    }
    {
      std::ofstream out(out_dir / (r.scenario.label + "_meta.json"));
      out << to_json(rows.back()).dump(2) << "\n";
    }
  }
  write_summary(rows, out_dir, format);
}

std::vector<std::string> regenerate_summary(const std::filesystem::path& out_dir,
                                            Format format) {
  namespace fs = std::filesystem;
  std::vector<SummaryRow> rows;
  std::vector<fs::path> meta_files;
  if (!fs::is_directory(out_dir)) {
    throw Error(ErrorKind::kConfig, out_dir.string() + " is not a directory");
  }
  for (const auto& entry : fs::directory_iterator(out_dir)) {
    const auto name = entry.path().filename().string();
    if (name.size() > 10 && name.ends_with("_meta.json")) {
      meta_files.push_back(entry.path());
    }
  }
  if (meta_files.empty()) {
    throw Error(ErrorKind::kInvalidInput,
                "no scenario meta files in " + out_dir.string());
  }
  for (const auto& path : meta_files) {
    std::ifstream in(path);
    json j;
    try {
      in >> j;
      rows.push_back(from_json(j));
    } catch (const json::exception& e) {
      throw Error(ErrorKind::kParse, path.string() + ": " + e.what());
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const SummaryRow& a, const SummaryRow& b) { return a.seq < b.seq; });

  // Cross-check the stored statistics against the 6-decimal detail files.
  std::vector<std::string> warnings;
  for (const auto& row : rows) {
    const auto links_path = out_dir / (row.label + "_links.csv");
    std::vector<double> utils;
    for (const auto& csv_row : io_detail::read_csv(
             links_path, {"from", "to", "seat_capacity", "load", "utilization"})) {
      utils.push_back(io_detail::parse_double(csv_row.values[4], links_path,
                                              csv_row.line, "utilization"));
    }
    const double mean = stats::mean(utils);
    if (std::abs(mean - row.link_util_mean) > 2e-5) {
      warnings.push_back(row.label + ": link_util_mean " +
                         fmt6(row.link_util_mean) + " vs detail " + fmt6(mean));
    }

    const auto trains_path = out_dir / (row.label + "_trains.csv");
    std::vector<double> maxs;
    for (const auto& csv_row : io_detail::read_csv(
             trains_path, {"train_id", "seats", "avg_util", "max_util",
                           "undefined"})) {
      if (csv_row.values[4] == "0") {
        maxs.push_back(io_detail::parse_double(csv_row.values[3], trains_path,
                                               csv_row.line, "max_util"));
      }
    }
    const double max_mean = stats::mean(maxs);
    if (std::abs(max_mean - row.train_max_util_mean) > 2e-5) {
      warnings.push_back(row.label + ": train_max_util_mean " +
                         fmt6(row.train_max_util_mean) + " vs detail " +
                         fmt6(max_mean));
    }
  }

  write_summary(rows, out_dir, format);
  return warnings;
}

std::string human_summary(const ScenarioResult& r) {
  std::ostringstream out;
  out << "scenario " << r.scenario.label << " (regime "
      << to_string(r.scenario.regime) << ", demand share "
      << fmt6(r.scenario.demand_share) << ")\n"
      << "  offered demand     " << fmt6(r.offered_demand) << " pax/h\n"
      << "  transported        " << fmt6(r.transported) << " pax/h\n"
      << "  unserved fraction  " << fmt6(r.unserved_fraction) << "\n"
      << "  objective          " << fmt6(r.objective) << "\n"
      << "  link util          mean " << fmt6(r.link_stats.mean) << ", median "
      << fmt6(r.link_stats.median) << ", std " << fmt6(r.link_stats.stddev)
      << ", full " << fmt6(r.link_stats.frac_full) << "\n"
      << "  train util (max)   mean " << fmt6(r.train_stats.max_mean)
      << ", median " << fmt6(r.train_stats.max_median) << ", >=0.9 "
      << fmt6(r.train_stats.frac_max_ge_090) << "\n"
      << "  solver             " << r.rounds << " round(s), " << r.columns
      << " column(s)";
  if (r.unroutable_od_pairs > 0) {
    out << ", " << r.unroutable_od_pairs << " unroutable OD pair(s)";
  }
  if (r.round_budget_exhausted) out << ", round budget exhausted";
  out << "\n";
  return out.str();
}

}  // namespace railcap::report
