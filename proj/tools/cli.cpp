#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hppk/attacks.hpp"
#include "hppk/bench.hpp"
#include "hppk/codec.hpp"
#include "hppk/ds.hpp"
#include "hppk/error.hpp"
#include "hppk/hash.hpp"
#include "hppk/kat.hpp"
#include "hppk/kem.hpp"

namespace hppk::cli {

namespace {

namespace fs = std::filesystem;

// Plain failure with a message for the one-line diagnostic.
struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Usage("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
  const std::string s = read_text(path);
  return {s.begin(), s.end()};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Usage("cannot write " + path);
}

// Artifact file: one header line, then the hex of the raw codec bytes.
//   HPPK-KEM v1 level=1 m=2 rings=2 kind=pk
//   HPPK-DS v1 level=1 m=1 K=208 kind=sig
struct Artifact {
  std::string scheme;  // "HPPK-KEM" or "HPPK-DS"
  int level = 1;
  std::size_t m = 0;
  std::size_t extra = 0;  // rings (KEM) or K (DS)
  std::string kind;
  std::vector<std::uint8_t> bytes;

  KemParams kem() const { return kem_params(level_from_int(level), m, extra); }

  DsParams ds() const {
    const Level l = level_from_int(level);
    const std::size_t L = ds_params(l, m).ring_bits;
    if (extra <= L) throw Usage("K must exceed L");
    return ds_params(l, m, extra - L);
  }

  std::string header() const {
    std::string s = scheme + " v1 level=" + std::to_string(level) + " m=" + std::to_string(m);
    s += scheme == "HPPK-KEM" ? " rings=" : " K=";
    return s + std::to_string(extra) + " kind=" + kind;
  }
};

Artifact kem_artifact(const KemParams& params, const std::string& kind, std::vector<std::uint8_t> bytes) {
  return {"HPPK-KEM", level_number(params.level), params.m, params.rings, kind, std::move(bytes)};
}

Artifact ds_artifact(const DsParams& params, const std::string& kind, std::vector<std::uint8_t> bytes) {
  return {"HPPK-DS", level_number(params.level), params.m, params.barrett_bits, kind, std::move(bytes)};
}

void save(const std::string& path, const Artifact& a) { write_text(path, a.header() + "\n" + to_hex(a.bytes) + "\n"); }

Artifact load(const std::string& path, const std::string& scheme, const std::string& kind) {
  const std::string text = read_text(path);
  std::istringstream in(text);
  std::string head, body, extra_line;
  std::getline(in, head);
  std::getline(in, body);
  if (!body.empty() && body.back() == '\r') body.pop_back();
  while (std::getline(in, extra_line)) {
    if (extra_line.find_first_not_of(" \t\r") != std::string::npos) throw Usage(path + ": trailing data after hex");
  }

  std::istringstream h(head);
  Artifact a;
  std::string version;
  h >> a.scheme >> version;
  if (a.scheme != scheme || version != "v1") throw Usage(path + ": expected a " + scheme + " v1 file");
  std::map<std::string, std::string> kv;
  std::string tok;
  while (h >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw Usage(path + ": malformed header field '" + tok + "'");
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  auto num = [&](const char* key) -> std::size_t {
    const auto it = kv.find(key);
    if (it == kv.end()) throw Usage(path + ": header lacks " + key);
    try {
      std::size_t used = 0;
      const auto v = std::stoull(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument(key);
      return v;
    } catch (const std::logic_error&) {
      throw Usage(path + ": bad value for " + key);
    }
  };
  a.level = static_cast<int>(num("level"));
  a.m = num("m");
  a.extra = num(scheme == "HPPK-KEM" ? "rings" : "K");
  a.kind = kv.count("kind") ? kv["kind"] : "";
  if (a.kind != kind) throw Usage(path + ": expected kind=" + kind + ", found kind=" + a.kind);
  a.bytes = from_hex(body);
  return a;
}

void same_params(const Artifact& a, const Artifact& b) {
  if (a.level != b.level || a.m != b.m || a.extra != b.extra) {
    throw Usage(a.kind + " and " + b.kind + " files carry different parameter sets");
  }
}

Seed seed_or_random(const std::string& hex) { return hex.empty() ? Drbg::random_seed() : parse_seed(hex); }

std::string out_path(const std::string& dir, const std::string& name) {
  fs::create_directories(dir);
  return (fs::path(dir) / name).string();
}

struct Options {
  int level = 1;
  std::size_t m = 0;
  std::size_t rings = 2;
  std::size_t barrett = 64;
  std::string seed;
  std::string out;
  std::string pk, sk, ct, ss, msg, sig;
  std::string scheme = "kem";
  std::size_t count = 10;
  std::string in;
  std::size_t iters = 1000;
  std::size_t warmup = 10;
  std::string csv;
  bool pin = true;
  std::size_t toy_l = 0;
  std::uint64_t toy_p = 0;
  std::size_t trials = 1;
  unsigned threads = 0;
  std::string side = "first";
};

void add_level(CLI::App* c, Options& o) {
  c->add_option("--level", o.level, "Security level")->check(CLI::IsMember({1, 3, 5}))->capture_default_str();
}

void add_seed(CLI::App* c, Options& o) {
  c->add_option("--seed", o.seed, "64 hex digits; random when omitted");
}

// ---- kem ----

int kem_keygen(const Options& o, std::ostream& out) {
  const auto params = kem_params(level_from_int(o.level), o.m, o.rings);
  Drbg g(seed_or_random(o.seed));
  const auto kp = kem::keygen(params, g);
  save(out_path(o.out, "pk"), kem_artifact(params, "pk", codec::encode(kp.pk, params)));
  save(out_path(o.out, "sk"), kem_artifact(params, "sk", codec::encode(kp.sk, params)));
  out << "wrote " << o.out << "/pk and " << o.out << "/sk (" << params.describe() << ")\n";
  return 0;
}

int kem_encaps(const Options& o, std::ostream&) {
  const auto pk_file = load(o.pk, "HPPK-KEM", "pk");
  const auto params = pk_file.kem();
  const auto pk = codec::decode_kem_public_key(pk_file.bytes, params);
  Drbg g(seed_or_random(o.seed));
  const auto enc = kem::encapsulate(pk, params, g);
  save(o.ct, kem_artifact(params, "ct", codec::encode(enc.ct, params)));
  save(o.ss, kem_artifact(params, "ss", {enc.ss.begin(), enc.ss.end()}));
  return 0;
}

int kem_decaps(const Options& o, std::ostream&) {
  const auto sk_file = load(o.sk, "HPPK-KEM", "sk");
  const auto ct_file = load(o.ct, "HPPK-KEM", "ct");
  same_params(sk_file, ct_file);
  const auto params = sk_file.kem();
  const auto ss = kem::decapsulate(codec::decode_kem_private_key(sk_file.bytes, params), params,
                                   codec::decode_kem_ciphertext(ct_file.bytes, params));
  save(o.ss, kem_artifact(params, "ss", {ss.begin(), ss.end()}));
  return 0;
}

// ---- ds ----

int ds_keygen(const Options& o, std::ostream& out) {
  const auto params = ds_params(level_from_int(o.level), o.m == 0 ? 1 : o.m, o.barrett);
  Drbg g(seed_or_random(o.seed));
  const auto kp = ds::keygen(params, g);
  save(out_path(o.out, "pk"), ds_artifact(params, "pk", codec::encode(kp.pk, params)));
  save(out_path(o.out, "sk"), ds_artifact(params, "sk", codec::encode(kp.sk, params)));
  out << "wrote " << o.out << "/pk and " << o.out << "/sk (" << params.describe() << ")\n";
  return 0;
}

int ds_sign(const Options& o, std::ostream&) {
  const auto sk_file = load(o.sk, "HPPK-DS", "sk");
  const auto params = sk_file.ds();
  const auto sig = ds::sign(codec::decode_ds_private_key(sk_file.bytes, params), params, read_bytes(o.msg));
  save(o.sig, ds_artifact(params, "sig", codec::encode(sig, params)));
  return 0;
}

int ds_verify(const Options& o, std::ostream&) {
  const auto pk_file = load(o.pk, "HPPK-DS", "pk");
  const auto sig_file = load(o.sig, "HPPK-DS", "sig");
  same_params(pk_file, sig_file);
  const auto params = pk_file.ds();
  const bool ok = ds::verify(codec::decode_ds_public_key(pk_file.bytes, params), params, read_bytes(o.msg),
                             codec::decode_ds_signature(sig_file.bytes, params));
  return ok ? 0 : 1;
}

// ---- kat ----

int kat_gen(const Options& o, std::ostream& out) {
  kat::Header h;
  h.level = level_from_int(o.level);
  if (o.scheme == "kem") {
    h.scheme = kat::Scheme::Kem;
    h.m = o.m == 0 ? 2 : o.m;
    h.rings = o.rings;
    h.kem();  // validates
  } else {
    h.scheme = kat::Scheme::Ds;
    h.m = o.m == 0 ? 1 : o.m;
    h.barrett_bits = ds_params(h.level, h.m, o.barrett).barrett_bits;
  }
  if (o.seed.empty()) throw Usage("kat gen needs --seed");
  const auto file = kat::generate(h, o.count, parse_seed(o.seed));
  write_text(o.out, kat::write(file));
  out << "wrote " << file.records.size() << " records to " << o.out << "\n";
  return 0;
}

int kat_check(const Options& o, std::ostream& out) {
  const auto result = kat::check(kat::read(read_text(o.in)));
  for (const auto& f : result.failures) out << "FAIL " << f << "\n";
  out << result.records << " records, " << result.failures.size() << " failures\n";
  return result.ok() ? 0 : 1;
}

// ---- bench ----

int bench_cmd(const Options& o, std::ostream& out) {
  bench::Options bo;
  bo.iters = o.iters;
  bo.warmup = o.warmup;
  bo.seed = seed_or_random(o.seed);
  const std::string note = o.pin ? bench::pin_to_current_core() : "not pinned";
  const Level level = level_from_int(o.level);
  std::vector<bench::Report> reports;
  if (o.scheme == "kem") {
    reports.push_back(bench::run_kem(kem_params(level, o.m == 0 ? 2 : o.m, o.rings), bo));
  } else {
    reports.push_back(bench::run_ds(ds_params(level, o.m == 0 ? 1 : o.m, o.barrett), bo));
  }
  out << bench::format_table(reports, note);
  if (!o.csv.empty()) write_text(o.csv, bench::format_csv(reports));
  return 0;
}

// ---- attack ----

double elapsed(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

attacks::Side side_of(const std::string& s) { return s == "second" ? attacks::Side::Second : attacks::Side::First; }

int attack_kem_ring(const Options& o, std::ostream& out) {
  const auto params = toy_kem_params(o.toy_p, o.toy_l, o.m == 0 ? 2 : o.m, 2);
  Drbg g(seed_or_random(o.seed));
  const auto kp = kem::keygen(params, g);
  const auto side = side_of(o.side);
  const auto& ring = side == attacks::Side::First ? kp.sk.ring1 : kp.sk.ring2;
  const unsigned threads = o.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : o.threads;
  const auto t0 = std::chrono::steady_clock::now();
  const auto res = attacks::kem_ring_recovery(kp.pk, params, side, threads);
  const double secs = elapsed(t0);
  const attacks::RingCandidate truth{ring.R.to_u64(), ring.S.to_u64()};
  const bool found = std::binary_search(res.candidates.begin(), res.candidates.end(), truth);
  out << "kem-ring " << params.describe() << "\n"
      << "  true ring      R=" << truth.R << " S=" << truth.S << "\n"
      << "  candidates     " << res.candidates.size() << (found ? " (true ring included)" : " (true ring missing)")
      << "\n"
      << "  pairs tried    " << res.pairs_tried << " (2^(2L-1) = " << (1ull << (2 * o.toy_l - 1)) << ")\n"
      << "  moduli scanned " << res.moduli_scanned << "\n"
      << "  seconds        " << secs << " on " << threads << " threads\n";
  return 0;
}

int attack_ds_ring(const Options& o, std::ostream& out) {
  const auto params = toy_ds_params(o.toy_p, o.toy_l, o.toy_l + o.barrett, o.m == 0 ? 1 : o.m);
  Drbg g(seed_or_random(o.seed));
  const auto kp = ds::keygen(params, g);
  const auto side = side_of(o.side);
  const auto& ring = side == attacks::Side::First ? kp.sk.ring1 : kp.sk.ring2;
  const auto t0 = std::chrono::steady_clock::now();
  const auto res = attacks::ds_ring_recovery(kp.pk, params, side);
  const double secs = elapsed(t0);
  out << "ds-ring " << params.describe() << "\n"
      << "  true S         " << ring.S.to_string() << "\n"
      << "  recovered S    " << res.S << (Nat(res.S) == ring.S ? " (match)" : " (differs)") << "\n"
      << "  iterations     " << res.iterations << " (2^(L-1) = " << (1ull << (o.toy_l - 1)) << ")\n"
      << "  seconds        " << secs << "\n";
  return 0;
}

int attack_census(const Options& o, std::ostream& out) {
  const std::size_t m = o.m == 0 ? 2 : o.m;
  const auto params = toy_kem_params(o.toy_p, o.toy_l, m, 2);
  Drbg g(seed_or_random(o.seed));
  std::size_t unique = 0, multiple = 0;
  for (std::size_t t = 0; t < o.trials; ++t) {
    const auto kp = kem::keygen(params, g);
    const Nat x = uniform_below(g, params.p);
    std::vector<Nat> u(m);
    for (auto& uj : u) uj = uniform_below(g, params.p);
    const auto census = attacks::ciphertext_census(kp.pk, kem::encapsulate_segment(kp.pk, params, x, u), params);
    unique += census.exact_matches == 1;
    multiple += census.exact_matches > 1;
    if (o.trials == 1) {
      out << "census " << params.describe() << "\n"
          << "  tuples         " << census.tuples << "\n"
          << "  exact matches  " << census.exact_matches << "\n"
          << "  field matches  " << census.field_matches << "\n";
    }
  }
  if (o.trials > 1) {
    out << "census " << params.describe() << " over " << o.trials << " trials\n"
        << "  unique         " << unique << "\n"
        << "  multiple       " << multiple << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"HPPK key encapsulation and signatures", "hppk"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&)> action;
  auto bind = [&](CLI::App* c, int (*fn)(const Options&, std::ostream&)) {
    c->callback([&action, fn] { action = fn; });
  };

  auto* kem = app.add_subcommand("kem", "Key encapsulation")->require_subcommand(1);
  {
    auto* c = kem->add_subcommand("keygen", "Generate a key pair");
    add_level(c, o);
    c->add_option("--m", o.m, "Noise variables")->check(CLI::IsMember({2, 3}))->required();
    c->add_option("--rings", o.rings, "Hidden rings")->check(CLI::IsMember({1, 2}))->capture_default_str();
    add_seed(c, o);
    c->add_option("--out", o.out, "Output directory")->required();
    bind(c, kem_keygen);

    c = kem->add_subcommand("encaps", "Encapsulate a fresh secret");
    c->add_option("--pk", o.pk)->required();
    add_seed(c, o);
    c->add_option("--ct", o.ct)->required();
    c->add_option("--ss", o.ss)->required();
    bind(c, kem_encaps);

    c = kem->add_subcommand("decaps", "Recover the secret from a ciphertext");
    c->add_option("--sk", o.sk)->required();
    c->add_option("--ct", o.ct)->required();
    c->add_option("--ss", o.ss)->required();
    bind(c, kem_decaps);
  }

  auto* ds = app.add_subcommand("ds", "Digital signatures")->require_subcommand(1);
  {
    auto* c = ds->add_subcommand("keygen", "Generate a key pair");
    add_level(c, o);
    c->add_option("--m", o.m, "Noise variables (default 1)")->check(CLI::IsMember({1, 2}));
    c->add_option("--barrett", o.barrett, "K - L")->check(CLI::IsMember({32, 64}))->capture_default_str();
    add_seed(c, o);
    c->add_option("--out", o.out, "Output directory")->required();
    bind(c, ds_keygen);

    c = ds->add_subcommand("sign", "Sign a message file");
    c->add_option("--sk", o.sk)->required();
    c->add_option("--msg", o.msg)->required();
    c->add_option("--sig", o.sig)->required();
    bind(c, ds_sign);

    c = ds->add_subcommand("verify", "Exit 0 on accept, 1 on reject");
    c->add_option("--pk", o.pk)->required();
    c->add_option("--msg", o.msg)->required();
    c->add_option("--sig", o.sig)->required();
    bind(c, ds_verify);
  }

  auto* kat = app.add_subcommand("kat", "Known-answer transcripts")->require_subcommand(1);
  {
    auto* c = kat->add_subcommand("gen", "Generate a transcript");
    c->add_option("--scheme", o.scheme)->check(CLI::IsMember({"kem", "ds"}))->required();
    add_level(c, o);
    c->add_option("--m", o.m, "Noise variables (default 2 for kem, 1 for ds)");
    c->add_option("--rings", o.rings)->check(CLI::IsMember({1, 2}))->capture_default_str();
    c->add_option("--barrett", o.barrett, "K - L")->check(CLI::IsMember({32, 64}))->capture_default_str();
    c->add_option("--count", o.count)->capture_default_str();
    c->add_option("--seed", o.seed, "Master seed, 64 hex digits")->required();
    c->add_option("--out", o.out)->required();
    bind(c, kat_gen);

    c = kat->add_subcommand("check", "Regenerate and compare");
    c->add_option("--in", o.in)->required();
    bind(c, kat_check);
  }

  {
    auto* c = app.add_subcommand("bench", "Time KeyGen/Encaps/Decaps or KeyGen/Sign/Verify");
    c->add_option("--scheme", o.scheme)->check(CLI::IsMember({"kem", "ds"}))->capture_default_str();
    add_level(c, o);
    c->add_option("--m", o.m, "Noise variables (default 2 for kem, 1 for ds)");
    c->add_option("--rings", o.rings)->check(CLI::IsMember({1, 2}))->capture_default_str();
    c->add_option("--barrett", o.barrett, "K - L")->check(CLI::IsMember({32, 64}))->capture_default_str();
    c->add_option("--iters", o.iters)->check(CLI::Range(std::size_t{100}, std::size_t{1} << 30))->capture_default_str();
    c->add_option("--warmup", o.warmup)->check(CLI::Range(std::size_t{10}, std::size_t{1} << 30))->capture_default_str();
    add_seed(c, o);
    c->add_option("--csv", o.csv, "Also write CSV rows here");
    c->add_flag("--no-pin{false}", o.pin, "Do not pin to a core");
    bind(c, bench_cmd);
  }

  auto* attack = app.add_subcommand("attack", "Toy-scale key and secret recovery")->require_subcommand(1);
  {
    auto toy = [&](CLI::App* c) {
      c->add_option("--toy-l", o.toy_l, "Ring bits L")->required();
      c->add_option("--toy-p", o.toy_p, "Small prime p")->required();
      add_seed(c, o);
    };
    auto* c = attack->add_subcommand("kem-ring", "Enumerate (R, S) against a KEM public key");
    toy(c);
    c->add_option("--m", o.m)->check(CLI::IsMember({1, 2, 3}));
    c->add_option("--side", o.side)->check(CLI::IsMember({"first", "second"}))->capture_default_str();
    c->add_option("--threads", o.threads, "0 = all cores")->capture_default_str();
    bind(c, attack_kem_ring);

    c = attack->add_subcommand("ds-ring", "Recover S from the Barrett constants");
    toy(c);
    c->add_option("--m", o.m)->check(CLI::IsMember({1, 2}));
    c->add_option("--barrett", o.barrett, "K - L")->capture_default_str();
    c->add_option("--side", o.side)->check(CLI::IsMember({"first", "second"}))->capture_default_str();
    bind(c, attack_ds_ring);

    c = attack->add_subcommand("census", "Count noise tuples consistent with a ciphertext segment");
    toy(c);
    c->add_option("--m", o.m)->check(CLI::IsMember({1, 2, 3}));
    c->add_option("--trials", o.trials)->check(CLI::PositiveNumber)->capture_default_str();
    bind(c, attack_census);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "hppk: " << e.what() << "\n";
    return 2;
  }

  try {
    return action(o, out);
  } catch (const Error& e) {
    err << "hppk: " << e.what() << "\n";
  } catch (const Usage& e) {
    err << "hppk: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "hppk: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace hppk::cli
