#include "hppk/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>

#if defined(__x86_64__) || defined(__i386__)
#include <x86intrin.h>
#define HPPK_HAVE_TSC 1
#endif

#if defined(__linux__)
#include <sched.h>
#endif

#include "hppk/ds.hpp"
#include "hppk/error.hpp"
#include "hppk/kem.hpp"

namespace hppk::bench {

namespace {

OpStats measure(const std::string& name, const Options& opt, const std::function<void()>& body) {
  for (std::size_t i = 0; i < opt.warmup; ++i) body();

  std::vector<double> ns(opt.iters);
#ifdef HPPK_HAVE_TSC
  std::vector<double> cycles(opt.iters);
#endif
  for (std::size_t i = 0; i < opt.iters; ++i) {
#ifdef HPPK_HAVE_TSC
    const auto c0 = __rdtsc();
#endif
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
#ifdef HPPK_HAVE_TSC
    cycles[i] = static_cast<double>(__rdtsc() - c0);
#endif
    ns[i] = std::chrono::duration<double, std::nano>(t1 - t0).count();
  }

  auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
  };

  OpStats s;
  s.op = name;
  s.iters = opt.iters;
  s.median_ns = median(ns);
  s.mean_ns = std::accumulate(ns.begin(), ns.end(), 0.0) / static_cast<double>(ns.size());
  s.min_ns = *std::min_element(ns.begin(), ns.end());
#ifdef HPPK_HAVE_TSC
  s.median_cycles = median(cycles);
#endif
  return s;
}

void check_options(const Options& opt) {
  if (opt.iters < 100) throw Error(Errc::InvalidParams, "bench needs at least 100 iterations");
  if (opt.warmup < 10) throw Error(Errc::InvalidParams, "bench needs at least 10 warmup iterations");
}

// Keeps results observable so the timed calls are not optimized away.
volatile std::uint8_t g_sink = 0;

}  // namespace

const OpStats& Report::op(const std::string& name) const {
  for (const auto& s : ops) {
    if (s.op == name) return s;
  }
  throw Error(Errc::NotFound, "no '" + name + "' row in report");
}

Report run_kem(const KemParams& params, const Options& opt) {
  check_options(opt);
  Drbg g(opt.seed);
  Report r;
  r.scheme = "HPPK-KEM";
  r.level = level_number(params.level);
  r.m = params.m;
  r.config = "(" + std::to_string(params.prime_bits) + ",1,1," + std::to_string(params.m) +
             ") rings=" + std::to_string(params.rings);

  r.ops.push_back(measure("KeyGen", opt, [&] {
    const auto kp = kem::keygen(params, g);
    g_sink = g_sink + static_cast<std::uint8_t>(kp.pk.P.at(0, 0).bit_length());
  }));

  const auto kp = kem::keygen(params, g);
  kem::Ciphertext last;
  r.ops.push_back(measure("Encaps", opt, [&] {
    auto enc = kem::encapsulate(kp.pk, params, g);
    g_sink = g_sink + enc.ss[0];
    last = std::move(enc.ct);
  }));

  r.ops.push_back(measure("Decaps", opt, [&] {
    const auto ss = kem::decapsulate(kp.sk, params, last);
    g_sink = g_sink + ss[0];
  }));
  return r;
}

Report run_ds(const DsParams& params, const Options& opt) {
  check_options(opt);
  Drbg g(opt.seed);
  Report r;
  r.scheme = "HPPK-DS";
  r.level = level_number(params.level);
  r.m = params.m;
  r.config = "(" + std::to_string(params.prime_bits) + ",1,1," + std::to_string(params.m) +
             ") K=" + std::to_string(params.barrett_bits);

  r.ops.push_back(measure("KeyGen", opt, [&] {
    const auto kp = ds::keygen(params, g);
    g_sink = g_sink + static_cast<std::uint8_t>(kp.pk.s1.bit_length());
  }));

  const auto kp = ds::keygen(params, g);
  const auto msg = g.bytes(32);
  ds::Signature sig;
  r.ops.push_back(measure("Sign", opt, [&] { sig = ds::sign(kp.sk, params, msg); }));

  r.ops.push_back(measure("Verify", opt, [&] {
    if (!ds::verify(kp.pk, params, msg, sig)) throw Error(Errc::MalformedSignature, "benchmark signature rejected");
  }));
  return r;
}

std::string format_table(const std::vector<Report>& reports, const std::string& note) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-9s %-5s %-22s %-7s %7s %12s %12s %12s %12s\n", "scheme", "level",
                "config", "op", "iters", "median_ns", "mean_ns", "min_ns", "tsc_cycles");
  out += line;
  for (const auto& r : reports) {
    for (const auto& s : r.ops) {
      char cycles[32] = "n/a";
      if (s.median_cycles) std::snprintf(cycles, sizeof cycles, "%.0f", *s.median_cycles);
      std::snprintf(line, sizeof line, "%-9s %-5d %-22s %-7s %7zu %12.0f %12.0f %12.0f %12s%s\n",
                    r.scheme.c_str(), r.level, r.config.c_str(), s.op.c_str(), s.iters, s.median_ns,
                    s.mean_ns, s.min_ns, cycles, s.outlier_contaminated() ? " *" : "");
      out += line;
    }
  }
  bool any_flag = false;
  for (const auto& r : reports) {
    for (const auto& s : r.ops) any_flag = any_flag || s.outlier_contaminated();
  }
  if (any_flag) out += "* median exceeds mean: samples contaminated by outliers\n";
  if (!note.empty()) out += note + "\n";
  return out;
}

std::string format_csv(const std::vector<Report>& reports) {
  std::string out = "scheme,level,m,op,iters,median_ns,mean_ns,min_ns\n";
  char line[256];
  for (const auto& r : reports) {
    for (const auto& s : r.ops) {
      std::snprintf(line, sizeof line, "%s,%d,%zu,%s,%zu,%.1f,%.1f,%.1f\n", r.scheme.c_str(), r.level,
                    r.m, s.op.c_str(), s.iters, s.median_ns, s.mean_ns, s.min_ns);
      out += line;
    }
  }
  return out;
}

std::string pin_to_current_core() {
#if defined(__linux__)
  const int cpu = sched_getcpu();
  if (cpu >= 0) {
    cpu_set_t set;
    CPU_ZERO(&set);
    CPU_SET(cpu, &set);
    if (sched_setaffinity(0, sizeof set, &set) == 0) return "pinned to CPU " + std::to_string(cpu);
  }
  return "CPU pinning failed; running unpinned";
#else
  return "CPU pinning unsupported on this platform; running unpinned";
#endif
}

}  // namespace hppk::bench
