#pragma once

#include <cstddef>
#include <functional>

namespace isocay {

/// Worker cap used by every parallel loop in the library. Defaults to the
/// hardware concurrency; the CLI sets it from --threads.
std::size_t thread_count();
void set_thread_count(std::size_t n);

/// Runs body(chunk_begin, chunk_end, worker) over [0, n) split into
/// contiguous chunks. Results must be merged by the caller in chunk order
/// if determinism matters.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t, std::size_t)>& body,
                  std::size_t min_chunk = 1);

}  // namespace isocay
