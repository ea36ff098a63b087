// Copyright (c) 2026 kshv developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "kshv/geometry.hpp"
#include "kshv/inequalities.hpp"
#include "kshv/two_qubit.hpp"

namespace kshv {

// One simulated trial. Outcomes use the strictly dichotomic tie-break, so
// they are always +-1; lambda1 (lambda2) lies on the hemisphere of u (v).
struct EventRecord {
  std::int64_t trial_id = 0;
  std::string setting_label;
  UnitVector n_a;
  UnitVector n_b;
  UnitVector u;
  UnitVector v;
  UnitVector lambda1;
  UnitVector lambda2;
  int outcome_a = 0;
  int outcome_b = 0;
  double mass = 0.0;  // total mass of the distribution, for estimator scaling
};

struct OutcomeCounts {
  std::int64_t pp = 0;
  std::int64_t pm = 0;
  std::int64_t mp = 0;
  std::int64_t mm = 0;
  std::int64_t total() const { return pp + pm + mp + mm; }
};

struct RunSummary {
  std::string setting_label;
  std::int64_t n_trials = 0;
  OutcomeCounts counts;
  double correlation = 0.0;
  double std_error = 0.0;
  double mass = 0.0;
  std::uint64_t seed = 0;

  /// |correlation| can reach the mass, not just 1; anything above 1 is an
  /// out-of-physical-range diagnostic rather than an error.
  bool out_of_physical_range() const { return std::abs(correlation) > 1.0; }
};

// Simulates n_per_setting trials for every pair of the plan, in plan order.
// Each trial owns the RNG stream keyed by its global trial id, so the event
// stream is a pure function of (seed, plan, n) and in particular identical
// for any worker count. Throws if the distribution has zero mass or
// n_per_setting < 1.
std::vector<EventRecord> run_trials(const PolarizationDistribution& f,
                                    const SettingsPlan& plan,
                                    std::int64_t n_per_setting, std::uint64_t seed,
                                    int n_workers = 1);

// Importance-weighted estimator over one setting's records:
// correlation = mass * mean(A*B), std_error = mass * sigma / sqrt(n).
// Rejects an empty span or records with mixed setting labels.
RunSummary estimate_correlation(std::span<const EventRecord> records,
                                std::uint64_t seed = 0);

/// Splits records into per-setting blocks (in order of first appearance)
/// and summarizes each.
std::vector<RunSummary> summarize_by_setting(std::span<const EventRecord> records,
                                             std::uint64_t seed);

/// Header of the event CSV schema.
std::string events_csv_header();

// CSV persistence. Reals carry 17 significant digits, so write/read round
// trips are bit exact. Malformed rows are reported with their line number;
// outcomes other than +-1 are rejected.
void write_events(const std::filesystem::path& path,
                  std::span<const EventRecord> records);
std::vector<EventRecord> read_events(const std::filesystem::path& path);

/// JSON array of per-setting summaries.
std::string summaries_json(std::span<const RunSummary> summaries);
void write_summaries(const std::filesystem::path& path,
                     std::span<const RunSummary> summaries);

}  // namespace kshv
