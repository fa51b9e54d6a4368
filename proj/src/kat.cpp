#include "hppk/kat.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "hppk/codec.hpp"
#include "hppk/ds.hpp"
#include "hppk/error.hpp"
#include "hppk/hash.hpp"
#include "hppk/kem.hpp"

namespace hppk::kat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::uint64_t parse_u64(std::string_view s, std::size_t line) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) fail(line, "expected an unsigned integer, got '" + std::string(s) + "'");
  return v;
}

Header parse_header(std::string_view body, std::size_t line) {
  std::istringstream in{std::string(body)};
  std::string tag;
  in >> tag;
  Header h;
  if (tag == "HPPK-KEM") {
    h.scheme = Scheme::Kem;
  } else if (tag == "HPPK-DS") {
    h.scheme = Scheme::Ds;
  } else {
    fail(line, "unknown scheme tag '" + tag + "'");
  }
  std::map<std::string, std::uint64_t> attrs;
  std::string kv;
  while (in >> kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) fail(line, "malformed header attribute '" + kv + "'");
    attrs[kv.substr(0, eq)] = parse_u64(std::string_view(kv).substr(eq + 1), line);
  }
  auto need = [&](const char* key) {
    auto it = attrs.find(key);
    if (it == attrs.end()) fail(line, std::string("header is missing ") + key);
    return it->second;
  };
  try {
    h.level = level_from_int(static_cast<int>(need("level")));
  } catch (const Error& e) {
    fail(line, e.what());
  }
  h.m = need("m");
  if (h.scheme == Scheme::Kem) {
    h.rings = need("rings");
  } else {
    h.barrett_bits = need("K");
  }
  return h;
}

void append_field(std::string& out, const char* key, std::span<const std::uint8_t> bytes) {
  out += key;
  out += " = ";
  out += to_hex(bytes);
  out += '\n';
}

}  // namespace

KemParams Header::kem() const { return kem_params(level, m, rings); }

DsParams Header::ds() const {
  const std::size_t L = ds_params(level, m).ring_bits;
  if (barrett_bits <= L) throw Error(Errc::InvalidParams, "K must exceed L");
  return ds_params(level, m, barrett_bits - L);
}

std::string Header::line() const {
  std::string s = scheme == Scheme::Kem ? "# HPPK-KEM" : "# HPPK-DS";
  s += " level=" + std::to_string(level_number(level)) + " m=" + std::to_string(m);
  s += scheme == Scheme::Kem ? " rings=" + std::to_string(rings) : " K=" + std::to_string(barrett_bits);
  return s;
}

std::string write(const File& file) {
  std::string out = file.header.line() + "\n";
  for (const auto& r : file.records) {
    out += "\ncount = " + std::to_string(r.count) + "\n";
    append_field(out, "seed", r.seed);
    append_field(out, "pk", r.pk);
    append_field(out, "sk", r.sk);
    if (file.header.scheme == Scheme::Kem) {
      append_field(out, "ct", r.ct);
      append_field(out, "ss", r.ss);
    } else {
      append_field(out, "msg", r.msg);
      append_field(out, "sm", r.sm);
    }
  }
  return out;
}

File read(std::string_view text) {
  File file;
  bool have_header = false;
  bool in_record = false;
  std::vector<std::string> seen;
  std::size_t record_line = 0;

  auto close_record = [&](std::size_t line) {
    if (!in_record) return;
    const std::vector<std::string> need =
        file.header.scheme == Scheme::Kem
            ? std::vector<std::string>{"seed", "pk", "sk", "ct", "ss"}
            : std::vector<std::string>{"seed", "pk", "sk", "msg", "sm"};
    for (const auto& key : need) {
      if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
        fail(line, "record starting at line " + std::to_string(record_line) + " is missing '" + key + "'");
      }
    }
    in_record = false;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '#') {
      if (!have_header) {
        file.header = parse_header(trim(line.substr(1)), line_no);
        have_header = true;
      }
      continue;
    }
    if (!have_header) fail(line_no, "missing '# HPPK-...' header line");

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const auto value = trim(line.substr(eq + 1));

    if (key == "count") {
      close_record(line_no);
      file.records.emplace_back();
      file.records.back().count = parse_u64(value, line_no);
      in_record = true;
      record_line = line_no;
      seen.clear();
      continue;
    }
    if (!in_record) fail(line_no, "field '" + key + "' before any 'count ='");
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) fail(line_no, "duplicate field '" + key + "'");

    std::vector<std::uint8_t> bytes;
    try {
      bytes = from_hex(value);
    } catch (const Error& e) {
      fail(line_no, e.what());
    }
    Record& r = file.records.back();
    const bool kem = file.header.scheme == Scheme::Kem;
    if (key == "seed") {
      if (bytes.size() != r.seed.size()) fail(line_no, "seed must be 32 bytes");
      std::copy(bytes.begin(), bytes.end(), r.seed.begin());
    } else if (key == "pk") {
      r.pk = std::move(bytes);
    } else if (key == "sk") {
      r.sk = std::move(bytes);
    } else if (kem && key == "ct") {
      r.ct = std::move(bytes);
    } else if (kem && key == "ss") {
      r.ss = std::move(bytes);
    } else if (!kem && key == "msg") {
      r.msg = std::move(bytes);
    } else if (!kem && key == "sm") {
      r.sm = std::move(bytes);
    } else {
      fail(line_no, "unexpected field '" + key + "'");
    }
    seen.push_back(key);
  }
  if (!have_header) fail(line_no, "missing '# HPPK-...' header line");
  close_record(line_no);
  return file;
}

Record generate_record(const Header& header, std::uint64_t count, const Seed& seed) {
  Record r;
  r.count = count;
  r.seed = seed;
  Drbg g(seed);
  if (header.scheme == Scheme::Kem) {
    const KemParams params = header.kem();
    const auto kp = kem::keygen(params, g);
    const auto enc = kem::encapsulate(kp.pk, params, g);
    r.pk = codec::encode(kp.pk, params);
    r.sk = codec::encode(kp.sk, params);
    r.ct = codec::encode(enc.ct, params);
    r.ss.assign(enc.ss.begin(), enc.ss.end());
  } else {
    const DsParams params = header.ds();
    const auto kp = ds::keygen(params, g);
    r.msg = g.bytes(33 * (count + 1));
    r.pk = codec::encode(kp.pk, params);
    r.sk = codec::encode(kp.sk, params);
    r.sm = codec::encode(ds::sign(kp.sk, params, r.msg), params);
    r.sm.insert(r.sm.end(), r.msg.begin(), r.msg.end());
  }
  return r;
}

File generate(const Header& header, std::size_t count, const Seed& master) {
  File file{header, {}};
  Drbg seeds(master);
  file.records.reserve(count);
  for (std::size_t i = 0; i < count; ++i) file.records.push_back(generate_record(header, i, seeds.next_seed()));
  return file;
}

CheckResult check(const File& file) {
  CheckResult result;
  const bool kem_scheme = file.header.scheme == Scheme::Kem;
  for (const auto& r : file.records) {
    ++result.records;
    const std::string tag = "count " + std::to_string(r.count) + ": ";
    Record fresh;
    try {
      fresh = generate_record(file.header, r.count, r.seed);
    } catch (const Error& e) {
      result.failures.push_back(tag + e.what());
      continue;
    }
    auto compare = [&](const char* field, const auto& expected, const auto& actual) {
      if (expected != actual) result.failures.push_back(tag + field + " differs from regenerated value");
    };
    compare("pk", fresh.pk, r.pk);
    compare("sk", fresh.sk, r.sk);
    try {
      if (kem_scheme) {
        compare("ct", fresh.ct, r.ct);
        compare("ss", fresh.ss, r.ss);
        const KemParams params = file.header.kem();
        const auto ss = kem::decapsulate(codec::decode_kem_private_key(r.sk, params), params,
                                         codec::decode_kem_ciphertext(r.ct, params));
        if (!std::equal(ss.begin(), ss.end(), r.ss.begin(), r.ss.end())) {
          result.failures.push_back(tag + "decapsulated secret differs from ss");
        }
      } else {
        compare("msg", fresh.msg, r.msg);
        compare("sm", fresh.sm, r.sm);
        const DsParams params = file.header.ds();
        const std::size_t sig_len = codec::ds_sizes(params).signature;
        if (r.sm.size() < sig_len) {
          result.failures.push_back(tag + "sm shorter than a signature");
          continue;
        }
        const std::span<const std::uint8_t> sm(r.sm);
        const auto sig = codec::decode_ds_signature(sm.first(sig_len), params);
        if (!ds::verify(codec::decode_ds_public_key(r.pk, params), params, sm.subspan(sig_len), sig)) {
          result.failures.push_back(tag + "signature in sm does not verify");
        }
      }
    } catch (const Error& e) {
      result.failures.push_back(tag + e.what());
    }
  }
  return result;
}

}  // namespace hppk::kat
