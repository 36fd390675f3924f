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

#pragma once

// Word-parallel bitset kernels used by the reachability closure.
//
// Every kernel has a portable scalar reference in `kernels::scalar` and an
// AVX2 variant in `kernels::avx2`. The free functions in `kernels` dispatch
// to the best variant supported by the running CPU; the choice is made once
// on first use and can be pinned with `select_isa` or the GEOMECH_ISA
// environment variable ("scalar" or "avx2").

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace geomech::kernels {

using Word = std::uint64_t;

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

/// True when the running CPU can execute the given variant.
bool isa_supported(Isa isa);

/// The variant currently used by the dispatching entry points.
Isa active_isa();

/// Pins the dispatch target. Returns false (and changes nothing) when the
/// CPU does not support `isa`.
bool select_isa(Isa isa);

// dst |= src, element-wise. Spans must have equal length.
void or_into(std::span<Word> dst, std::span<const Word> src);

// Number of set bits across all words.
std::size_t popcount(std::span<const Word> words);

// popcount(a & b) without materializing the intersection.
std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b);

namespace scalar {
void or_into(std::span<Word> dst, std::span<const Word> src);
std::size_t popcount(std::span<const Word> words);
std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b);
}  // namespace scalar

namespace avx2 {
// Only callable when isa_supported(Isa::kAvx2); on builds without an x86
// target these forward to the scalar variants.
void or_into(std::span<Word> dst, std::span<const Word> src);
std::size_t popcount(std::span<const Word> words);
std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b);
}  // namespace avx2

}  // namespace geomech::kernels
