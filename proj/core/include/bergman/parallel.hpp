#pragma once

#include <functional>

namespace bergman {

/// Worker count used by matrix assembly and grid sweeps. Reads the
/// BERGMAN_WORKERS environment variable once per call; unset, empty or
/// invalid values fall back to std::thread::hardware_concurrency(),
/// clamped to at least 1.
int worker_count();

/// Runs fn(begin, end) over a partition of [0, n) on `workers` threads
/// (inline when workers <= 1 or n is small). Chunks are contiguous and
/// the partition depends only on n and the per-call chunking, never on
/// scheduling, so callers that write to disjoint ranges get results
/// that are byte-identical across worker counts.
void parallel_chunks(int n, int workers,
                     const std::function<void(int, int)>& fn);

}  // namespace bergman
