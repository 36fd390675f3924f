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

#include <atomic>
#include <cstdlib>
#include <string>

#include "geomech/kernels.hpp"

namespace geomech::kernels {

namespace {

struct Table {
  void (*or_into)(std::span<Word>, std::span<const Word>);
  std::size_t (*popcount)(std::span<const Word>);
  std::size_t (*and_popcount)(std::span<const Word>, std::span<const Word>);
};

constexpr Table kScalarTable{&scalar::or_into, &scalar::popcount,
                             &scalar::and_popcount};
constexpr Table kAvx2Table{&avx2::or_into, &avx2::popcount,
                           &avx2::and_popcount};

Isa detect() {
  if (const char* forced = std::getenv("GEOMECH_ISA")) {
    const std::string name(forced);
    if (name == "scalar") return Isa::kScalar;
    if (name == "avx2" && isa_supported(Isa::kAvx2)) return Isa::kAvx2;
  }
  return isa_supported(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

const Table& table() {
  return current().load(std::memory_order_relaxed) == Isa::kAvx2 ? kAvx2Table
                                                                 : kScalarTable;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  return isa == Isa::kAvx2 ? "avx2" : "scalar";
}

bool isa_supported(Isa isa) {
  if (isa == Isa::kScalar) return true;
#if (defined(__x86_64__) || defined(_M_X64)) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

bool select_isa(Isa isa) {
  if (!isa_supported(isa)) return false;
  current().store(isa, std::memory_order_relaxed);
  return true;
}

void or_into(std::span<Word> dst, std::span<const Word> src) {
  table().or_into(dst, src);
}

std::size_t popcount(std::span<const Word> words) {
  return table().popcount(words);
}

std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) {
  return table().and_popcount(a, b);
}

}  // namespace geomech::kernels
