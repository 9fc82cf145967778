// Copyright 2026 disputesim contributors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "dsim/commitment.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace dsim {

namespace {

void put_u64_be(std::uint8_t* out, std::uint64_t value) {
  for (int i = 0; i < 8; ++i)
    out[i] = static_cast<std::uint8_t>(value >> (8 * (7 - i)));
}

}  // namespace

Hash32 sha256(std::span<const std::uint8_t> data) {
  Hash32 digest{};
  unsigned int written = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &written,
                 EVP_sha256(), nullptr) != 1 ||
      written != digest.size()) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  return digest;
}

Hash32 commit_digest(Decision decision, std::uint64_t block_number,
                     const Hash32& nonce, std::uint64_t validator_id) {
  std::array<std::uint8_t, 49> buffer{};
  buffer[0] = static_cast<std::uint8_t>(decision);
  put_u64_be(buffer.data() + 1, block_number);
  std::copy(nonce.begin(), nonce.end(), buffer.begin() + 9);
  put_u64_be(buffer.data() + 41, validator_id);
  return sha256(buffer);
}

std::string to_hex(const Hash32& hash) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (std::uint8_t byte : hash) {
    out.push_back(digits[byte >> 4]);
    out.push_back(digits[byte & 0x0f]);
  }
  return out;
}

}  // namespace dsim
