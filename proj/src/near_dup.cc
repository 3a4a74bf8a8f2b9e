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

#include "snipmine/near_dup.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "snipmine/errors.h"
#include "snipmine/text_analysis.h"

namespace snipmine {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;
constexpr std::uint64_t kSeedLow = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kSeedHigh = 0xc2b2ae3d27d4eb4fULL;

std::uint64_t SplitMix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

void Signature::Set(std::size_t bit) {
  if (!Test(bit)) {
    words_[bit / 64] |= std::uint64_t{1} << (bit % 64);
    ++popcount_;
  }
}

std::size_t Signature::CommonBits(const Signature& other) const {
  return static_cast<std::size_t>(std::popcount(words_[0] & other.words_[0]) +
                                  std::popcount(words_[1] & other.words_[1]));
}

std::string Signature::ToHex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string hex;
  for (int w = 1; w >= 0; --w) {
    for (int shift = 60; shift >= 0; shift -= 4) {
      hex.push_back(kDigits[(words_[w] >> shift) & 0xF]);
    }
  }
  return hex;
}

Signature Signature::FromHex(std::string_view hex) {
  if (hex.size() != 32) throw ParseError("signature hex must have 32 digits");
  Signature sig;
  for (std::size_t i = 0; i < 32; ++i) {
    const char c = hex[i];
    int v = -1;
    if (c >= '0' && c <= '9') v = c - '0';
    if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    if (v < 0) throw ParseError("bad hex digit in signature");
    for (int b = 3; b >= 0; --b) {
      if ((v >> b) & 1) sig.Set((31 - i) * 4 + static_cast<std::size_t>(b));
    }
  }
  return sig;
}

std::uint64_t StableHash(std::string_view bytes) {
  std::uint64_t h = kFnvOffset;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= kFnvPrime;
  }
  return h;
}

Signature Sign(std::string_view text) {
  std::vector<std::string> words;
  for (const Token& token : WordTokens(text)) {
    words.push_back(ToLowerAscii(token.surface));
  }
  std::array<int, kSignatureBits> votes{};
  std::string gram;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t i = 0; i + n <= words.size(); ++i) {
      gram = words[i];
      for (std::size_t k = 1; k < n; ++k) {
        gram.push_back(' ');
        gram += words[i + k];
      }
      const std::uint64_t h = StableHash(gram);
      const std::uint64_t low = SplitMix64(h ^ kSeedLow);
      const std::uint64_t high = SplitMix64(h ^ kSeedHigh);
      for (std::size_t b = 0; b < 64; ++b) {
        votes[b] += ((low >> b) & 1u) ? 1 : -1;
        votes[64 + b] += ((high >> b) & 1u) ? 1 : -1;
      }
    }
  }
  Signature sig;
  for (std::size_t b = 0; b < kSignatureBits; ++b) {
    if (votes[b] > 0) sig.Set(b);
  }
  return sig;
}

double Cosine(const Signature& a, const Signature& b) {
  if (a.popcount() == 0 || b.popcount() == 0) return 0.0;
  return static_cast<double>(a.CommonBits(b)) /
         std::sqrt(static_cast<double>(a.popcount()) *
                   static_cast<double>(b.popcount()));
}

std::vector<bool> GreedyDedup(std::span<const Signature> ordered,
                              double threshold) {
  std::vector<bool> keep(ordered.size(), false);
  std::vector<std::size_t> survivors;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    const bool duplicate =
        std::any_of(survivors.begin(), survivors.end(), [&](std::size_t s) {
          return Cosine(ordered[i], ordered[s]) > threshold;
        });
    if (!duplicate) {
      keep[i] = true;
      survivors.push_back(i);
    }
  }
  return keep;
}

bool AnchorOrderLess(const AnchorContextRecord& a,
                     const AnchorContextRecord& b) {
  if (a.source_doc_id != b.source_doc_id) {
    return a.source_doc_id < b.source_doc_id;
  }
  if (a.page_anchor.start != b.page_anchor.start) {
    return a.page_anchor.start < b.page_anchor.start;
  }
  if (a.target_url != b.target_url) return a.target_url < b.target_url;
  return a.context < b.context;
}

std::vector<AnchorContextRecord> DedupGroup(
    std::span<const AnchorContextRecord> group, double threshold) {
  std::vector<std::size_t> order(group.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return AnchorOrderLess(group[a], group[b]);
  });
  std::vector<Signature> signatures;
  signatures.reserve(order.size());
  for (std::size_t i : order) signatures.push_back(Sign(group[i].context));
  const std::vector<bool> keep = GreedyDedup(signatures, threshold);
  std::vector<AnchorContextRecord> survivors;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (keep[k]) survivors.push_back(group[order[k]]);
  }
  return survivors;
}

}  // namespace snipmine
