#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hppk/drbg.hpp"
#include "hppk/params.hpp"

namespace hppk::bench {

struct OpStats {
  std::string op;
  std::size_t iters = 0;
  double median_ns = 0;
  double mean_ns = 0;
  double min_ns = 0;
  std::optional<double> median_cycles;  // time-stamp counter, x86 only

  bool outlier_contaminated() const { return median_ns > mean_ns; }
};

struct Report {
  std::string scheme;  // "HPPK-KEM" or "HPPK-DS"
  int level = 1;
  std::size_t m = 0;
  std::string config;  // e.g. "(32,1,1,2) rings=1"
  std::vector<OpStats> ops;

  const OpStats& op(const std::string& name) const;
};

struct Options {
  std::size_t iters = 1000;  // at least 100
  std::size_t warmup = 10;   // at least 10
  Seed seed{};
};

/// Times KeyGen, Encaps and Decaps. Each timed call runs once per sample on
/// a steady clock; stats are over the samples after warmup.
Report run_kem(const KemParams& params, const Options& options);
/// Times KeyGen, Sign and Verify over 32-byte messages.
Report run_ds(const DsParams& params, const Options& options);

/// Aligned text table. A trailing '*' on a row marks median > mean.
std::string format_table(const std::vector<Report>& reports, const std::string& note = {});
/// Columns: scheme,level,m,op,iters,median_ns,mean_ns,min_ns
std::string format_csv(const std::vector<Report>& reports);

/// Best effort; returns a human-readable note on what happened.
std::string pin_to_current_core();

}  // namespace hppk::bench
