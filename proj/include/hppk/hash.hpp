#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hppk {

enum class HashKind { Sha256, Sha384, Sha512 };

std::size_t digest_size(HashKind kind);
std::string_view hash_name(HashKind kind);
std::vector<std::uint8_t> digest(HashKind kind, std::span<const std::uint8_t> data);

inline std::vector<std::uint8_t> sha256(std::span<const std::uint8_t> data) {
  return digest(HashKind::Sha256, data);
}

std::string to_hex(std::span<const std::uint8_t> bytes);
/// Accepts upper or lower case; throws ParseError on odd length or bad digits.
std::vector<std::uint8_t> from_hex(std::string_view hex);

}  // namespace hppk
