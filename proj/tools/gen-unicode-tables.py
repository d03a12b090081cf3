#!/usr/bin/env python3
# Copyright 2026  The cstk Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
# THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
# KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
# WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
# MERCHANTABLITY OR NON-INFRINGEMENT.
# See the Apache 2 License for the specific language governing permissions and
# limitations under the License.
"""Regenerates src/corpus/unicode-tables.cc from Python's unicodedata.

Usage: tools/gen-unicode-tables.py > src/corpus/unicode-tables.cc
"""

import sys
import unicodedata

MAX_CP = 0x110000


def ranges(pred):
    out = []
    start = None
    for cp in range(MAX_CP):
        hit = pred(cp)
        if hit and start is None:
            start = cp
        elif not hit and start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, MAX_CP - 1))
    return out


def category(cp):
    return unicodedata.category(chr(cp))


def is_space(cp):
    return category(cp).startswith("Z") or chr(cp) in "\t\n\v\f\r\x1c\x1d\x1e\x1f\x85"


def is_removable(cp):
    if is_space(cp):
        return False
    cat = category(cp)
    # Punctuation, symbols, controls/format/unassigned/private use.
    return cat[0] in "PSC"


def latin_lower_pairs():
    pairs = []
    for cp in range(MAX_CP):
        ch = chr(cp)
        name = unicodedata.name(ch, "")
        if "LATIN" not in name or category(cp) != "Lu":
            continue
        low = ch.lower()
        if len(low) == 1 and low != ch:
            pairs.append((cp, ord(low)))
    return pairs


def emit_ranges(name, rs):
    print(f"const CodepointRange {name}[] = {{")
    for lo, hi in rs:
        print(f"    {{0x{lo:04X}, 0x{hi:04X}}},")
    print("};")
    print(f"const std::size_t {name}Size = sizeof({name}) / sizeof({name}[0]);")
    print()


def main():
    print("// corpus/unicode-tables.cc")
    print("//")
    print(f"// Generated by tools/gen-unicode-tables.py (Unicode {unicodedata.unidata_version}).")
    print("// Do not edit by hand.")
    print()
    print('#include "cstk/corpus/unicode-tables.h"')
    print()
    print("namespace cstk {")
    print("namespace unicode {")
    print()
    emit_ranges("kSpaceRanges", ranges(is_space))
    emit_ranges("kRemovableRanges", ranges(is_removable))
    print("const CaseMapping kLatinLower[] = {")
    for up, low in latin_lower_pairs():
        print(f"    {{0x{up:04X}, 0x{low:04X}}},")
    print("};")
    print("const std::size_t kLatinLowerSize = sizeof(kLatinLower) / sizeof(kLatinLower[0]);")
    print()
    print("}  // namespace unicode")
    print("}  // namespace cstk")


if __name__ == "__main__":
    sys.exit(main())
