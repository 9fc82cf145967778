// Copyright 2026 disputesim contributors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

namespace dsim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dsim
