// Copyright 2026 The clmetrics Authors.
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

#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "clmetrics/io.hpp"
#include "clmetrics/learners.hpp"
#include "clmetrics/random_baseline.hpp"
#include "clmetrics/random_tables.hpp"
#include "clmetrics/report.hpp"
#include "clmetrics/rescaled.hpp"

namespace clmetrics::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 2;
inline constexpr int kExitUsage = 64;

namespace detail {

inline void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw validation_error("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw validation_error("failed writing '" + path + "'");
}

inline std::string render_report(const MetricReport& report, const std::string& emit, bool percent_out) {
  return emit == "csv" ? emit_report_csv(report, percent_out) : emit_report_json(report);
}

inline std::string join_counts(std::span<const std::int64_t> counts) {
  std::string s;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(counts[i]);
  }
  return s;
}

}  // namespace detail

/// Entry point of the `clmetrics` command. Returns the process exit status:
/// 0 on success, 2 on data/validation errors, 64 on usage errors.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Continual-learning metrics: AA, AF and their rescaled forms RAA, RAF", "clmetrics"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "Compute the full metric report for an accuracy-matrix file");
  std::string compute_input;
  std::string compute_format;
  bool compute_percent = false;
  std::string compute_output;
  std::string compute_emit = "json";
  bool compute_percent_out = false;
  compute->add_option("--input", compute_input, "Matrix file (CSV or JSON)")->required();
  compute->add_option("--format", compute_format, "Input format (default: from extension)")
      ->check(CLI::IsMember({"csv", "json"}));
  compute->add_flag("--percent", compute_percent, "Input accuracies are percentages");
  compute->add_option("--output", compute_output, "Write the report here instead of stdout");
  compute->add_option("--emit", compute_emit, "Report format")->check(CLI::IsMember({"json", "csv"}));
  compute->add_flag("--percent-out", compute_percent_out, "CSV report: AA/AF/RAA/RAF in percent");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Generate a synthetic learner's matrix and its report");
  std::string learner;
  std::size_t sim_tasks = 0;
  std::vector<std::int64_t> sim_classes;
  std::optional<double> plasticity;
  std::optional<double> stability;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  std::string sim_output;
  std::string sim_matrix_out;
  std::string sim_emit = "json";
  bool sim_percent_out = false;
  simulate->add_option("--learner", learner, "Learner kind")
      ->required()
      ->check(CLI::IsMember({"random", "perfect", "worst", "parametric"}));
  simulate->add_option("--tasks", sim_tasks, "Number of tasks K")->required();
  simulate->add_option("--classes", sim_classes, "Classes per task: one count or a comma list")
      ->required()
      ->delimiter(',');
  simulate->add_option("--plasticity", plasticity, "Parametric: accuracy on the current task");
  simulate->add_option("--stability", stability, "Parametric: per-task retention factor");
  simulate->add_option("--samples", samples, "Random learner: Monte-Carlo samples per cell");
  simulate->add_option("--seed", seed, "Random learner: Monte-Carlo seed (required with --samples)");
  simulate->add_option("--output", sim_output, "Write the report here instead of stdout");
  simulate->add_option("--matrix-out", sim_matrix_out, "Also write the generated matrix (.csv or .json)");
  simulate->add_option("--emit", sim_emit, "Report format")->check(CLI::IsMember({"json", "csv"}));
  simulate->add_flag("--percent-out", sim_percent_out, "CSV report: AA/AF/RAA/RAF in percent");

  // coeffs
  auto* coeffs = app.add_subcommand("coeffs", "Emit the difficulty coefficients gamma and beta");
  std::size_t coeff_tasks = 0;
  std::vector<std::int64_t> coeff_classes;
  std::string coeff_format = "text";
  std::string coeff_output;
  coeffs->add_option("--tasks", coeff_tasks, "Number of tasks K")->required();
  coeffs->add_option("--classes", coeff_classes, "Classes per task: one count or a comma list")
      ->required()
      ->delimiter(',');
  coeffs->add_option("--format", coeff_format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  coeffs->add_option("--output", coeff_output, "Write here instead of stdout");

  // table
  auto* table = app.add_subcommand("table", "Print the random-classifier accuracy/forgetting tables");
  int which = 0;
  table->add_option("--which", which, "1: accuracy, 2: forgetting (default: both)")->check(CLI::IsMember({1, 2}));

  // validate
  auto* validate = app.add_subcommand("validate", "Parse a matrix file and summarize its schedule");
  std::string validate_input;
  std::string validate_format;
  bool validate_percent = false;
  validate->add_option("--input", validate_input, "Matrix file (CSV or JSON)")->required();
  validate->add_option("--format", validate_format, "Input format (default: from extension)")
      ->check(CLI::IsMember({"csv", "json"}));
  validate->add_flag("--percent", validate_percent, "Input accuracies are percentages");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const CLI::App* scope = &app;
    for (auto* sub : app.get_subcommands()) scope = sub;
    err << scope->help();
    return kExitUsage;
  }

  auto format_of = [](const std::string& name) -> std::optional<MatrixFormat> {
    if (name.empty()) return std::nullopt;
    return matrix_format_from_string(name);
  };

  try {
    if (compute->parsed()) {
      auto parsed = parse_matrix_file(compute_input, format_of(compute_format), compute_percent);
      auto source = parsed.source.value_or(ReportSource::from_file(compute_input));
      const auto report = compute_report(std::move(parsed.matrix), std::move(source), compute_percent);
      detail::write_output(detail::render_report(report, compute_emit, compute_percent_out), compute_output, out);
    } else if (simulate->parsed()) {
      const auto schedule = TaskSchedule::make(sim_tasks, sim_classes);
      LearnerSpec spec{learner_kind_from_string(learner), plasticity, stability};
      spec.validate();
      std::optional<AccuracyMatrix> matrix;
      std::optional<ReportSource> source;
      if (samples || seed) {
        if (spec.kind != LearnerKind::random) {
          throw validation_error("--samples/--seed apply only to the random learner");
        }
        if (!samples || !seed) throw validation_error("Monte-Carlo simulation needs both --samples and --seed");
        matrix = monte_carlo_random_classifier(schedule, *samples, *seed);
        source = ReportSource::from_monte_carlo(*samples, *seed);
      } else {
        matrix = generate(spec, schedule);
        source = ReportSource::from_learner(spec);
      }
      if (!sim_matrix_out.empty()) {
        const auto text = infer_matrix_format(sim_matrix_out) == MatrixFormat::json
                              ? emit_matrix_json(*matrix, source)
                              : emit_matrix_csv(*matrix);
        detail::write_output(text, sim_matrix_out, out);
      }
      const auto report = compute_report(std::move(*matrix), std::move(*source));
      detail::write_output(detail::render_report(report, sim_emit, sim_percent_out), sim_output, out);
    } else if (coeffs->parsed()) {
      const auto schedule = TaskSchedule::make(coeff_tasks, coeff_classes);
      const auto format = coeff_format == "csv"    ? CoefficientFormat::csv
                          : coeff_format == "json" ? CoefficientFormat::json
                                                   : CoefficientFormat::text;
      detail::write_output(emit_coefficients(schedule, difficulty_coefficients(schedule), format), coeff_output,
                           out);
    } else if (table->parsed()) {
      if (which == 0) {
        out << random_classifier_table(1) << "\n" << random_classifier_table(2);
      } else {
        out << random_classifier_table(which);
      }
    } else if (validate->parsed()) {
      const auto parsed = parse_matrix_file(validate_input, format_of(validate_format), validate_percent);
      const auto& schedule = parsed.matrix.schedule();
      out << "valid: " << schedule.num_tasks() << " tasks, classes=" << detail::join_counts(schedule.classes_per_task())
          << (schedule.is_uniform() ? " (uniform)" : " (non-uniform)") << ", total classes "
          << schedule.total_classes() << "\n";
    }
  } catch (const clmetrics::error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace clmetrics::cli
