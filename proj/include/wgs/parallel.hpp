#pragma once

#include <functional>

namespace wgs {

/// Worker count after applying the WG_STOKES_THREADS cap. requested = 0 means
/// the hardware default.
int resolve_threads(int requested);

/// Runs fn(begin, end) on contiguous chunks of [0, n) across `threads`
/// workers. Chunking is static, so writes into preallocated per-index slots
/// are race-free and results do not depend on the worker count.
void parallel_for(int n, int threads, const std::function<void(int, int)>& fn);

}  // namespace wgs
