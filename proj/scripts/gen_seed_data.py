#!/usr/bin/env python3
"""Writes the bundled seed lexicons (data/) and their embedded copies
(include/parstem/seed_data.hpp) from one source of truth, so the two can be
byte-compared in tests. Run from the repository root:

    python3 scripts/gen_seed_data.py
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "tests", "oracle"))
from oracle_common import normalize_word  # noqa: E402

# Irregular (Mokassar) plural -> singular, as published.
MOKASSAR = [
    ("آثار", "آثر"),
    ("اسامی", "اسم"),
    ("جزایر", "جزیره"),
    ("حوادث", "حادثه"),
    ("قوانین", "قانون"),
]

# Words that merely end in a plural-looking string and must not be stripped.
INTERVENING = [
    "ستون", "هدفون", "تلویزیون",
    "عین", "دین", "پایین",
    "اثبات", "ادات",
    "آبادان", "آبان", "خان",
]

HEADER_TEMPLATE = """\
// Generated by scripts/gen_seed_data.py -- do not edit by hand.
// Embedded copies of data/mokassar_seed.tsv and data/intervening_seed.txt;
// a unit test keeps the files and these constants byte-identical.
#pragma once

#include <string_view>

namespace parstem::seeds {{

inline constexpr std::string_view kMokassarTsv =
{mok};

inline constexpr std::string_view kInterveningText =
{intv};

}}  // namespace parstem::seeds
"""


def cpp_literal(text: str) -> str:
    lines = text.split("\n")
    parts = []
    for i, line in enumerate(lines):
        nl = "\\n" if i < len(lines) - 1 else ""
        if not line and not nl:
            continue
        parts.append('    "%s%s"' % (line.replace("\t", "\\t"), nl))
    return "\n".join(parts)


def main():
    root = os.path.join(os.path.dirname(__file__), "..")

    for plural, singular in MOKASSAR:
        assert normalize_word(plural) == plural, plural
        assert normalize_word(singular) == singular, singular
        assert plural != singular
    for word in INTERVENING:
        assert normalize_word(word) == word, word
    assert len(set(p for p, _ in MOKASSAR)) == len(MOKASSAR)
    assert len(set(INTERVENING)) == len(INTERVENING)

    mok_text = "# Mokassar lexicon: PLURAL<TAB>SINGULAR, one entry per line.\n"
    mok_text += "".join("%s\t%s\n" % (p, s) for p, s in MOKASSAR)
    intv_text = "# Intervening lexicon: one exempt word per line.\n"
    intv_text += "".join("%s\n" % w for w in INTERVENING)

    os.makedirs(os.path.join(root, "data"), exist_ok=True)
    with open(os.path.join(root, "data", "mokassar_seed.tsv"), "w", encoding="utf-8", newline="") as f:
        f.write(mok_text)
    with open(os.path.join(root, "data", "intervening_seed.txt"), "w", encoding="utf-8", newline="") as f:
        f.write(intv_text)

    header = HEADER_TEMPLATE.format(mok=cpp_literal(mok_text), intv=cpp_literal(intv_text))
    os.makedirs(os.path.join(root, "include", "parstem"), exist_ok=True)
    with open(os.path.join(root, "include", "parstem", "seed_data.hpp"), "w", encoding="utf-8", newline="") as f:
        f.write(header)

    print("mokassar entries: %d, intervening words: %d" % (len(MOKASSAR), len(INTERVENING)))


if __name__ == "__main__":
    main()
