#include "hppk/hash.hpp"

#include <openssl/evp.h>

#include "hppk/error.hpp"

namespace hppk {

namespace {

const EVP_MD* evp_for(HashKind kind) {
  switch (kind) {
    case HashKind::Sha256: return EVP_sha256();
    case HashKind::Sha384: return EVP_sha384();
    case HashKind::Sha512: return EVP_sha512();
  }
  return nullptr;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::size_t digest_size(HashKind kind) {
  switch (kind) {
    case HashKind::Sha256: return 32;
    case HashKind::Sha384: return 48;
    case HashKind::Sha512: return 64;
  }
  return 0;
}

std::string_view hash_name(HashKind kind) {
  switch (kind) {
    case HashKind::Sha256: return "SHA-256";
    case HashKind::Sha384: return "SHA-384";
    case HashKind::Sha512: return "SHA-512";
  }
  return "?";
}

std::vector<std::uint8_t> digest(HashKind kind, std::span<const std::uint8_t> data) {
  std::vector<std::uint8_t> out(digest_size(kind));
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, evp_for(kind), nullptr) != 1 ||
      len != out.size()) {
    throw std::runtime_error("EVP_Digest failed");
  }
  return out;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 0xf]);
  }
  return s;
}

std::vector<std::uint8_t> from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw Error(Errc::ParseError, "hex string has odd length");
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int hi = hex_value(hex[2 * i]);
    const int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      throw Error(Errc::ParseError, "invalid hex digit at offset " + std::to_string(2 * i));
    }
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

}  // namespace hppk
