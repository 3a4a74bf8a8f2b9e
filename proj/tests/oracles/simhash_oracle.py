#!/usr/bin/env python3
# Copyright 2026 The Snipmine Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Reference 128-bit text signature, written from the documented scheme.

Prints "<hex>\t<popcount>\t<text>" for each argument (or the built-in
fixture sentences). The golden values in near_dup_test.cc come from here.
ASCII input only: words are runs of [A-Za-z0-9] with inner apostrophes.
"""

import re
import sys

MASK = (1 << 64) - 1


def fnv1a64(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & MASK
    return h


def splitmix64(z: int) -> int:
    z = (z + 0x9E3779B97F4A7C15) & MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


def signature(text: str) -> int:
    words = [w.lower() for w in re.findall(r"[A-Za-z0-9]+(?:'[A-Za-z0-9]+)*",
                                            text)]
    votes = [0] * 128
    for n in (1, 2, 3):
        for i in range(len(words) - n + 1):
            h = fnv1a64(" ".join(words[i:i + n]).encode())
            bits = splitmix64(h ^ 0x9E3779B97F4A7C15) | (
                splitmix64(h ^ 0xC2B2AE3D27D4EB4F) << 64)
            for b in range(128):
                votes[b] += 1 if (bits >> b) & 1 else -1
    return sum(1 << b for b in range(128) if votes[b] > 0)


FIXTURES = [
    "The quick brown fox jumps over the lazy dog.",
    "Treasury of Humor is a collection of jokes and anecdotes.",
    "",
]

if __name__ == "__main__":
    for text in sys.argv[1:] or FIXTURES:
        sig = signature(text)
        print(f"{sig:032x}\t{bin(sig).count('1')}\t{text}")
    print(f"fnv1a64('hello')\t{fnv1a64(b'hello'):016x}")
