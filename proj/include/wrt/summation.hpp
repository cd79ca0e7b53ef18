// Deterministic chunked summation of complex term streams.
//
// Terms are split into fixed-size chunks; each chunk partial is accumulated
// left to right with guard bits, and partials are combined in chunk order.
// The result is therefore independent of how many workers evaluate chunks.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "wrt/real.hpp"

namespace wrt {

inline constexpr std::size_t kSumChunkSize = 1u << 16;
inline constexpr mpfr_prec_t kSumGuardBits = 64;

Complex compensated_sum(const std::vector<Complex>& terms,
                        std::size_t chunk_size = kSumChunkSize);

// Parallel variant over an indexed generator: chunk c covers indices
// [c*chunk_size, min((c+1)*chunk_size, count)). 'fill' must write the
// chunk's partial sum (at accumulation precision) into 'out'.
// Partials are combined in chunk order regardless of worker count.
Complex chunked_parallel_sum(
    std::uint64_t count, std::size_t chunk_size, mpfr_prec_t result_prec,
    const std::function<void(std::uint64_t chunk_begin, std::uint64_t chunk_end, Complex& out)>& fill,
    unsigned threads);

unsigned default_thread_count();

}  // namespace wrt
