#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hppk/drbg.hpp"
#include "hppk/params.hpp"

// Known-answer-test transcripts.
//
//   # HPPK-KEM level=1 m=2 rings=2        (or: # HPPK-DS level=1 m=1 K=208)
//
//   count = 0
//   seed = <64 hex>
//   pk = <hex>
//   sk = <hex>
//   ct = <hex>        (DS: msg = <hex>)
//   ss = <hex>        (DS: sm = <hex of signature || msg>)
//
// Each record's seed drives its own Drbg through keygen and then
// encapsulation (KEM) or message generation (DS), so a record can be
// regenerated in isolation.
namespace hppk::kat {

enum class Scheme { Kem, Ds };

struct Header {
  Scheme scheme = Scheme::Kem;
  Level level = Level::I;
  std::size_t m = 2;
  std::size_t rings = 2;         // KEM only
  std::size_t barrett_bits = 0;  // DS only (K)

  KemParams kem() const;
  DsParams ds() const;
  std::string line() const;

  friend bool operator==(const Header&, const Header&) = default;
};

struct Record {
  std::uint64_t count = 0;
  Seed seed{};
  std::vector<std::uint8_t> pk;
  std::vector<std::uint8_t> sk;
  std::vector<std::uint8_t> ct;   // KEM
  std::vector<std::uint8_t> ss;   // KEM
  std::vector<std::uint8_t> msg;  // DS
  std::vector<std::uint8_t> sm;   // DS

  friend bool operator==(const Record&, const Record&) = default;
};

struct File {
  Header header;
  std::vector<Record> records;

  friend bool operator==(const File&, const File&) = default;
};

std::string write(const File& file);
/// Throws ParseError carrying the 1-based line number.
File read(std::string_view text);

/// Record seeds are successive 32-byte draws from Drbg(master).
File generate(const Header& header, std::size_t count, const Seed& master);
Record generate_record(const Header& header, std::uint64_t count, const Seed& seed);

struct CheckResult {
  std::size_t records = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Regenerates every record from its seed and compares byte for byte; also
/// decapsulates ct (KEM) or verifies sm (DS) with the recorded keys.
CheckResult check(const File& file);

}  // namespace hppk::kat
