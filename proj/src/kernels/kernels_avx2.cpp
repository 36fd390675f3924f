// Copyright 2026 The geomech Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Compiled with -mavx2; nothing in this file may run unless the dispatcher
// has confirmed AVX2 support.

#include <cassert>

#include "geomech/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define GEOMECH_HAVE_AVX2_TU 1
#else
#define GEOMECH_HAVE_AVX2_TU 0
#endif

namespace geomech::kernels::avx2 {

#if GEOMECH_HAVE_AVX2_TU

namespace {

// Per-byte popcount via nibble lookup, then horizontal byte sums into four
// 64-bit lanes (Mula's method).
inline __m256i popcount_bytes_to_u64(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(
      0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
      0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                         _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i acc) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

}  // namespace

void or_into(std::span<Word> dst, std::span<const Word> src) {
  assert(dst.size() == src.size());
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
    const auto* s = reinterpret_cast<const __m256i*>(src.data() + i);
    _mm256_storeu_si256(d, _mm256_or_si256(_mm256_loadu_si256(d),
                                           _mm256_loadu_si256(s)));
  }
  for (; i < n; ++i) dst[i] |= src[i];
}

std::size_t popcount(std::span<const Word> words) {
  const std::size_t n = words.size();
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(words.data() + i));
    acc = _mm256_add_epi64(acc, popcount_bytes_to_u64(v));
  }
  std::size_t total = horizontal_sum(acc);
  return total + scalar::popcount(words.subspan(i));
}

std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) {
  assert(a.size() == b.size());
  const std::size_t n = a.size();
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i vb =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    acc = _mm256_add_epi64(acc,
                           popcount_bytes_to_u64(_mm256_and_si256(va, vb)));
  }
  std::size_t total = horizontal_sum(acc);
  return total + scalar::and_popcount(a.subspan(i), b.subspan(i));
}

#else

void or_into(std::span<Word> dst, std::span<const Word> src) {
  scalar::or_into(dst, src);
}
std::size_t popcount(std::span<const Word> words) {
  return scalar::popcount(words);
}
std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) {
  return scalar::and_popcount(a, b);
}

#endif

}  // namespace geomech::kernels::avx2
