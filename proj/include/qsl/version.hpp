/**
 * Copyright 2026, the qsearchlab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#pragma once

namespace qsl {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qsl
