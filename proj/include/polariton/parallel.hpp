// Copyright 2026 The polariton_lab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace polariton {

/// Worker thread cap: POLARITON_LAB_THREADS if set to a positive integer,
/// otherwise std::thread::hardware_concurrency() (at least 1).
[[nodiscard]] unsigned thread_count();

/// Calls body(i) for every i in [0, n). Work is split into contiguous chunks;
/// body must write only to slot i of its outputs, so results are identical
/// for any thread count. The first exception thrown by a worker is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace polariton
