// Copyright 2026 disputesim contributors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

namespace dsim {

using Hash32 = std::array<std::uint8_t, 32>;

enum class Decision : std::uint8_t {
  NoChallenge = 0x00,
  Challenge = 0x01,
};

Hash32 sha256(std::span<const std::uint8_t> data);

// Commitment digest binding a challenge decision to its author:
//
//   SHA-256( decision (1 byte) || block_number (8 bytes, big-endian)
//            || nonce (32 bytes) || validator_id (8 bytes, big-endian) )
//
// The layout is part of the wire contract and must not change.
Hash32 commit_digest(Decision decision, std::uint64_t block_number,
                     const Hash32& nonce, std::uint64_t validator_id);

std::string to_hex(const Hash32& hash);

}  // namespace dsim
