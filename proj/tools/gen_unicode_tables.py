#!/usr/bin/env python3
"""Regenerate include/fidqa/unicode_tables.h from python3's unicodedata.

Emits inclusive codepoint ranges for the punctuation categories
(Pc, Pd, Pe, Pf, Pi, Po, Ps) and the simple 1:1 lowercase mapping.
"""
import unicodedata

HEADER = """/*
 * Copyright (c) 2026, the fidqa authors.  All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Generated from Unicode {uni} (python3 unicodedata): inclusive codepoint
// ranges of the punctuation categories Pc, Pd, Pe, Pf, Pi, Po, Ps, and the
// simple (1:1) lowercase mapping. Multi-codepoint lowerings are excluded.
// Regenerate with tools/gen_unicode_tables.py.

#pragma once

#include <cstdint>

namespace fidqa::unicode {{

struct Range {{
    uint32_t lo;
    uint32_t hi;
}};

struct LowerPair {{
    uint32_t from;
    uint32_t to;
}};

inline constexpr Range kPunctRanges[] = {{
"""


def main():
    punct = [cp for cp in range(0x110000)
             if unicodedata.category(chr(cp)).startswith('P')]
    ranges = []
    start = prev = punct[0]
    for cp in punct[1:]:
        if cp == prev + 1:
            prev = cp
        else:
            ranges.append((start, prev))
            start = prev = cp
    ranges.append((start, prev))

    lower = []
    for cp in range(0x110000):
        lo = chr(cp).lower()
        if len(lo) == 1 and lo != chr(cp):
            lower.append((cp, ord(lo)))

    with open('include/fidqa/unicode_tables.h', 'w') as f:
        f.write(HEADER.format(uni=unicodedata.unidata_version))
        for i in range(0, len(ranges), 6):
            row = ranges[i:i + 6]
            f.write('    ' + ' '.join(f'{{0x{a:X}, 0x{b:X}}},' for a, b in row) + '\n')
        f.write('};\n\ninline constexpr int kNumPunctRanges = %d;\n\n'
                'inline constexpr LowerPair kLowerPairs[] = {\n' % len(ranges))
        for i in range(0, len(lower), 6):
            row = lower[i:i + 6]
            f.write('    ' + ' '.join(f'{{0x{a:X}, 0x{b:X}}},' for a, b in row) + '\n')
        f.write('};\n\ninline constexpr int kNumLowerPairs = %d;\n\n'
                '}  // namespace fidqa::unicode\n' % len(lower))


if __name__ == '__main__':
    main()
