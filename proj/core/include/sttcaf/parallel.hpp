// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sttc-af Authors

#pragma once

#include <cstddef>
#include <functional>

namespace sttcaf {

/// Worker count: STTC_AF_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
unsigned default_thread_count();

/// Runs body(i) for i in [0, count) on up to \p threads workers
/// (0 = default_thread_count()). Indices are handed out dynamically, so body
/// must not depend on execution order. The first exception thrown by any
/// worker is rethrown on the calling thread after all workers have joined.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  unsigned threads = 0);

}  // namespace sttcaf
