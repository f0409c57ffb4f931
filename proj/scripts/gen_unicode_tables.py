#!/usr/bin/env python3
"""Generates include/parstem/detail/unicode_tables.hpp: sorted code point
ranges for the character classes the tokenizer and normalizer need
(punctuation/symbols, decimal digits, whitespace). Run from the repository
root after a Unicode data update:

    python3 scripts/gen_unicode_tables.py
"""

import os
import sys
import unicodedata


def ranges_for(predicate):
    out = []
    start = None
    for cp in range(0x110000):
        ok = predicate(cp)
        if ok and start is None:
            start = cp
        elif not ok and start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, 0x10FFFF))
    return out


def is_punct_or_symbol(cp):
    try:
        return unicodedata.category(chr(cp))[0] in "PS"
    except ValueError:
        return False


def is_decimal_digit(cp):
    return unicodedata.category(chr(cp)) == "Nd"


def is_white_space(cp):
    # White_Space = Zs|Zl|Zp plus the control characters below.
    if cp in (0x09, 0x0A, 0x0B, 0x0C, 0x0D, 0x85):
        return True
    return unicodedata.category(chr(cp))[0] == "Z"


def emit(f, name, ranges):
    f.write("inline constexpr CodepointRange %s[] = {\n" % name)
    for i in range(0, len(ranges), 4):
        row = ", ".join("{0x%04X, 0x%04X}" % r for r in ranges[i : i + 4])
        f.write("    %s,\n" % row)
    f.write("};\n\n")


def main():
    root = os.path.join(os.path.dirname(__file__), "..")
    path = os.path.join(root, "include", "parstem", "detail", "unicode_tables.hpp")
    os.makedirs(os.path.dirname(path), exist_ok=True)

    punct = ranges_for(is_punct_or_symbol)
    digit = ranges_for(is_decimal_digit)
    space = ranges_for(is_white_space)

    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(
            "// Generated by scripts/gen_unicode_tables.py (Unicode %s) -- do not edit.\n"
            "#pragma once\n\n"
            "#include <cstdint>\n\n"
            "namespace parstem::detail {\n\n"
            "struct CodepointRange {\n"
            "    char32_t lo;\n"
            "    char32_t hi;\n"
            "};\n\n" % unicodedata.unidata_version
        )
        emit(f, "kPunctOrSymbolRanges", punct)
        emit(f, "kDecimalDigitRanges", digit)
        emit(f, "kWhiteSpaceRanges", space)
        f.write("}  // namespace parstem::detail\n")

    print("punct/symbol ranges: %d, digit ranges: %d, space ranges: %d" % (len(punct), len(digit), len(space)), file=sys.stderr)


if __name__ == "__main__":
    main()
