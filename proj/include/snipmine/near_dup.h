// Copyright 2026 The Snipmine Authors.
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

#ifndef SNIPMINE_NEAR_DUP_H_
#define SNIPMINE_NEAR_DUP_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "snipmine/records.h"

namespace snipmine {

inline constexpr std::size_t kSignatureBits = 128;
inline constexpr double kNearDuplicateCosine = 0.9;

// 128-bit binary text fingerprint.
class Signature {
 public:
  Signature() = default;

  bool Test(std::size_t bit) const {
    return (words_[bit / 64] >> (bit % 64)) & 1u;
  }
  void Set(std::size_t bit);
  std::size_t popcount() const { return popcount_; }
  std::size_t CommonBits(const Signature& other) const;

  // 32 hex digits, bit 127 first.
  std::string ToHex() const;
  static Signature FromHex(std::string_view hex);

  bool operator==(const Signature& other) const {
    return words_ == other.words_;
  }

 private:
  std::array<std::uint64_t, 2> words_{};
  std::size_t popcount_ = 0;
};

// FNV-1a 64-bit; the n-gram hash behind Sign().
std::uint64_t StableHash(std::string_view bytes);

// SimHash over word 1-, 2- and 3-grams of the lowercased word tokens. Every
// n-gram occurrence (words joined by one space) is hashed with StableHash,
// expanded to 128 bits with two seeded SplitMix64 finalizers, and votes +1/-1
// on each bit; a bit is set iff its vote total is positive. Empty text gives
// the all-zero signature.
Signature Sign(std::string_view text);

// |a AND b| / sqrt(|a| * |b|); 0 when either signature is empty.
double Cosine(const Signature& a, const Signature& b);

// Greedy pass over signatures already in canonical order: an entry survives
// unless its cosine with an earlier survivor exceeds `threshold`.
std::vector<bool> GreedyDedup(std::span<const Signature> ordered,
                              double threshold = kNearDuplicateCosine);

// Near-duplicate removal within one target. Records are ordered by
// (source_doc_id, anchor position) before the greedy pass, so the result
// does not depend on input order.
std::vector<AnchorContextRecord> DedupGroup(
    std::span<const AnchorContextRecord> group,
    double threshold = kNearDuplicateCosine);

bool AnchorOrderLess(const AnchorContextRecord& a,
                     const AnchorContextRecord& b);

}  // namespace snipmine

#endif  // SNIPMINE_NEAR_DUP_H_
