// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>

namespace holonomy {

/// Worker count: HOLONOMY_THREADS if set and positive, otherwise hardware concurrency.
std::size_t thread_count();

/// Runs body(i) for i in [0, n) across up to thread_count() threads in contiguous
/// blocks. body must only write state owned by index i. The exception thrown
/// by the lowest-indexed failing block is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace holonomy
