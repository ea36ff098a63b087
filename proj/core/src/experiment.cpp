// Copyright (c) 2026 kshv developers.
// SPDX-License-Identifier: Apache-2.0
#include "kshv/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "kshv/single_qubit.hpp"

namespace kshv {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& field) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw std::runtime_error("bad real value '" + field + "'");
  }
  return v;
}

std::int64_t parse_int(const std::string& field) {
  std::int64_t v = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw std::runtime_error("bad integer value '" + field + "'");
  }
  return v;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(',', start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

nlohmann::ordered_json summary_to_json(const RunSummary& s) {
  return nlohmann::ordered_json{
      {"setting_label", s.setting_label},
      {"n_trials", s.n_trials},
      {"counts",
       {{"pp", s.counts.pp}, {"pm", s.counts.pm}, {"mp", s.counts.mp}, {"mm", s.counts.mm}}},
      {"correlation", s.correlation},
      {"std_error", s.std_error},
      {"mass", s.mass},
      {"seed", s.seed},
  };
}

}  // namespace

std::vector<EventRecord> run_trials(const PolarizationDistribution& f,
                                    const SettingsPlan& plan,
                                    std::int64_t n_per_setting, std::uint64_t seed,
                                    int n_workers) {
  if (plan.pairs.empty()) throw std::invalid_argument("run_trials: empty settings plan");
  if (n_per_setting < 1) throw std::invalid_argument("run_trials: need at least one trial");
  if (f.empty() || !(f.mass() > 0.0)) {
    throw std::invalid_argument("run_trials: distribution has zero mass");
  }
  if (n_workers < 1) throw std::invalid_argument("run_trials: n_workers must be >= 1");

  std::vector<double> cum;
  double acc = 0.0;
  for (const DistributionTerm& t : f.terms()) {
    acc += t.weight;
    cum.push_back(acc);
  }
  const double wsum = cum.back();
  const double mass = f.mass();

  const std::int64_t total = n_per_setting * static_cast<std::int64_t>(plan.pairs.size());
  std::vector<EventRecord> records(static_cast<std::size_t>(total));

  const auto simulate_range = [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t g = lo; g < hi; ++g) {
      const auto& pair = plan.pairs[static_cast<std::size_t>(g / n_per_setting)];
      // The stream key is the global trial id, so the record does not
      // depend on which worker produced it.
      RngStream rng(seed, static_cast<std::uint64_t>(g));
      const double xi = rng.uniform() * wsum;
      const auto it = std::upper_bound(cum.begin(), cum.end(), xi);
      const std::size_t k = std::min<std::size_t>(
          static_cast<std::size_t>(it - cum.begin()), cum.size() - 1);
      const DistributionTerm& term = f.terms()[k];
      const UnitVector u = sample_uniform_hemisphere(signed_axis(term.axis_u, term.sign_u), rng);
      const UnitVector v = sample_uniform_hemisphere(signed_axis(term.axis_v, term.sign_v), rng);
      const UnitVector l1 = sample_cosine_hemisphere(u, rng);
      const UnitVector l2 = sample_cosine_hemisphere(v, rng);
      EventRecord& rec = records[static_cast<std::size_t>(g)];
      rec.trial_id = g;
      rec.setting_label = pair.label;
      rec.n_a = pair.a;
      rec.n_b = pair.b;
      rec.u = u;
      rec.v = v;
      rec.lambda1 = l1;
      rec.lambda2 = l2;
      rec.outcome_a = outcome_dichotomic(pair.a, l1);
      rec.outcome_b = outcome_dichotomic(pair.b, l2);
      rec.mass = mass;
    }
  };

  const int workers = static_cast<int>(std::min<std::int64_t>(n_workers, total));
  if (workers <= 1) {
    simulate_range(0, total);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::int64_t base = total / workers;
    const std::int64_t extra = total % workers;
    std::int64_t lo = 0;
    for (int w = 0; w < workers; ++w) {
      const std::int64_t hi = lo + base + (w < extra ? 1 : 0);
      pool.emplace_back(simulate_range, lo, hi);
      lo = hi;
    }
    for (auto& t : pool) t.join();
  }
  return records;
}

RunSummary estimate_correlation(std::span<const EventRecord> records,
                                std::uint64_t seed) {
  if (records.empty()) {
    throw std::invalid_argument("estimate_correlation: no records");
  }
  RunSummary s;
  s.setting_label = records.front().setting_label;
  s.mass = records.front().mass;
  s.seed = seed;
  for (const EventRecord& r : records) {
    if (r.setting_label != s.setting_label) {
      throw std::invalid_argument("estimate_correlation: mixed settings in record set");
    }
    if (r.outcome_a == 1 && r.outcome_b == 1) ++s.counts.pp;
    else if (r.outcome_a == 1 && r.outcome_b == -1) ++s.counts.pm;
    else if (r.outcome_a == -1 && r.outcome_b == 1) ++s.counts.mp;
    else ++s.counts.mm;
  }
  const std::int64_t n = static_cast<std::int64_t>(records.size());
  s.n_trials = n;
  const double mean =
      static_cast<double>(s.counts.pp + s.counts.mm - s.counts.pm - s.counts.mp) /
      static_cast<double>(n);
  s.correlation = s.mass * mean;
  if (n > 1) {
    // Products are +-1, so the sample variance has a closed form.
    const double var = (1.0 - mean * mean) * (static_cast<double>(n) / static_cast<double>(n - 1));
    s.std_error = s.mass * std::sqrt(std::max(0.0, var) / static_cast<double>(n));
  }
  return s;
}

std::vector<RunSummary> summarize_by_setting(std::span<const EventRecord> records,
                                             std::uint64_t seed) {
  std::vector<RunSummary> out;
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= records.size(); ++i) {
    if (i == records.size() || records[i].setting_label != records[begin].setting_label) {
      out.push_back(estimate_correlation(records.subspan(begin, i - begin), seed));
      begin = i;
    }
  }
  return out;
}

std::string events_csv_header() {
  return "trial_id,setting_label,ax,ay,az,bx,by,bz,ux,uy,uz,vx,vy,vz,"
         "l1x,l1y,l1z,l2x,l2y,l2z,A,B,mass";
}

void write_events(const std::filesystem::path& path,
                  std::span<const EventRecord> records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_events: cannot open " + path.string());
  out << events_csv_header() << '\n';
  std::string line;
  for (const EventRecord& r : records) {
    line.clear();
    line += std::to_string(r.trial_id);
    line += ',';
    line += r.setting_label;
    for (const UnitVector* v : {&r.n_a, &r.n_b, &r.u, &r.v, &r.lambda1, &r.lambda2}) {
      line += ',';
      line += fmt_double(v->x());
      line += ',';
      line += fmt_double(v->y());
      line += ',';
      line += fmt_double(v->z());
    }
    line += ',';
    line += std::to_string(r.outcome_a);
    line += ',';
    line += std::to_string(r.outcome_b);
    line += ',';
    line += fmt_double(r.mass);
    line += '\n';
    out << line;
  }
  if (!out) throw std::runtime_error("write_events: write failed for " + path.string());
}

std::vector<EventRecord> read_events(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_events: cannot open " + path.string());
  std::vector<EventRecord> records;
  std::string line;
  std::int64_t line_no = 0;
  bool saw_header = false;
  const auto fail = [&path, &line_no](const std::string& what) -> std::runtime_error {
    return std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != events_csv_header()) throw fail("unexpected header");
      saw_header = true;
      continue;
    }
    const std::vector<std::string> fields = split_csv(line);
    if (fields.size() != 23) {
      throw fail("expected 23 fields, got " + std::to_string(fields.size()));
    }
    try {
      EventRecord r;
      r.trial_id = parse_int(fields[0]);
      r.setting_label = fields[1];
      const auto read_unit = [&fields](std::size_t at) {
        return UnitVector(parse_double(fields[at]), parse_double(fields[at + 1]),
                          parse_double(fields[at + 2]));
      };
      r.n_a = read_unit(2);
      r.n_b = read_unit(5);
      r.u = read_unit(8);
      r.v = read_unit(11);
      r.lambda1 = read_unit(14);
      r.lambda2 = read_unit(17);
      const std::int64_t a = parse_int(fields[20]);
      const std::int64_t b = parse_int(fields[21]);
      if ((a != 1 && a != -1) || (b != 1 && b != -1)) {
        throw std::runtime_error("outcomes must be -1 or 1");
      }
      r.outcome_a = static_cast<int>(a);
      r.outcome_b = static_cast<int>(b);
      r.mass = parse_double(fields[22]);
      if (dot(r.lambda1, r.u) < -1e-12 || dot(r.lambda2, r.v) < -1e-12) {
        throw std::runtime_error("hidden variable outside its polarization hemisphere");
      }
      records.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw fail(e.what());
    }
  }
  return records;
}

std::string summaries_json(std::span<const RunSummary> summaries) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const RunSummary& s : summaries) arr.push_back(summary_to_json(s));
  return arr.dump(2) + "\n";
}

void write_summaries(const std::filesystem::path& path,
                     std::span<const RunSummary> summaries) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_summaries: cannot open " + path.string());
  out << summaries_json(summaries);
  if (!out) throw std::runtime_error("write_summaries: write failed for " + path.string());
}

}  // namespace kshv
