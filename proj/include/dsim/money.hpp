// Copyright 2026 disputesim contributors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cmath>
#include <cstdint>

namespace dsim {

// Ledger money is integer base units so conservation can be asserted
// bit-exactly. Analytic quantities (costs, dispersions, expected values)
// are token-valued doubles; the two meet only when quantizing bids and
// when comparing simulated means against closed forms.
using Amount = std::int64_t;

inline constexpr Amount kUnitsPerToken = 1'000'000'000;

inline double to_tokens(Amount units) {
  return static_cast<double>(units) / static_cast<double>(kUnitsPerToken);
}

// Nearest-unit conversion, for config values expressed in tokens.
inline Amount tokens_to_units(double tokens) {
  return static_cast<Amount>(
      std::llround(tokens * static_cast<double>(kUnitsPerToken)));
}

// Floor conversion, for quantizing continuous valuations into bids.
inline Amount quantize_down(double tokens) {
  return static_cast<Amount>(
      std::floor(tokens * static_cast<double>(kUnitsPerToken)));
}

}  // namespace dsim
