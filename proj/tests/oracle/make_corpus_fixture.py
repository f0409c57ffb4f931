#!/usr/bin/env python3
"""Generates the frequency-test corpus (tests/fixtures/corpus_fa.txt) and
counts it line by line with the reference tokenizer, writing:

  tests/fixtures/corpus_fa_counts.tsv  -- "#total<TAB>N" then "word<TAB>count"
                                          sorted by count desc, then word asc
  tests/fixtures/corpus_fa_query.tsv   -- counts, sum, total and ratio for the
                                          five irregular plurals

The corpus is synthetic but deliberately messy: variant Arabic spellings,
tatweel stretching, short vowels, decomposed alef-madda, half-space joiners,
digits in both scripts, and mixed digit-letter runs.
"""

import os
import random
import sys

sys.path.insert(0, os.path.dirname(__file__))
from oracle_common import tokenize  # noqa: E402

QUERY_WORDS = ["آثار", "اسامی", "جزایر", "حوادث", "قوانین"]

# (surface form, weight). Several entries are denormalized spellings of the
# same word so that counting exercises normalization.
VOCAB = [
    ("قوانین", 30), ("قوانين", 8),              # Farsi yeh vs Arabic yeh
    ("آثار", 22), ("آثار", 5),            # precomposed vs decomposed madda
    ("اسامی", 18), ("اسامي", 4),
    ("جزایر", 9), ("حوادث", 14),
    ("قانون", 25), ("اثر", 12), ("اسم", 16), ("جزیره", 11), ("حادثه", 13),
    ("ستون", 17), ("هدفون", 6), ("تلویزیون", 15), ("عین", 9), ("دین", 19),
    ("پایین", 12), ("اثبات", 7), ("ادات", 3), ("آبادان", 8), ("آبان", 10), ("خان", 9),
    ("گل‌ها", 14), ("گلها", 6), ("کتاب‌ها", 12), ("گیاهان", 11),
    ("روحانیون", 5), ("مسلمین", 6), ("ملاحظات", 7), ("بزرگترین", 9), ("بهترین", 13),
    ("کتاب", 40), ("كتاب", 7), ("کـتاب", 4),     # keheh vs kaf, tatweel stretch
    ("کِتاب", 3),                                # kasra
    ("فوراً", 8), ("شدیداً", 4), ("تقریباً", 6),
    ("می‌رود", 10), ("می‌شود", 12), ("است", 45), ("بود", 30), ("شد", 22),
    ("ایران", 18), ("تهران", 14), ("زبان", 16), ("فارسی", 20), ("واژه", 9),
    ("متن", 11), ("خبر", 13), ("سال", 17), ("روز", 19), ("آب", 8), ("نان", 7),
    ("سیب", 5), ("مداد", 4), ("برف", 6), ("صبح", 9), ("درد", 5),
    ("علما", 4), ("مدارس", 6), ("کتب", 5), ("نشریات", 4),
    ("VOA", 3), ("news", 2),
    ("۱۳۹۴", 5), ("2016", 4), ("۴۵", 3),
    ("کتاب123", 3),                              # digit run splits off
    ("ـــ", 2),                                  # normalizes to nothing
]

PUNCT = ["،", ".", "؛", "؟", "!", ":", "«", "»", "(", ")", '"']


def main():
    fixtures = os.path.join(os.path.dirname(__file__), "..", "fixtures")
    os.makedirs(fixtures, exist_ok=True)

    rng = random.Random(20160417)
    words = [w for w, _ in VOCAB]
    weights = [k for _, k in VOCAB]

    lines = []
    for _ in range(1500):
        n = rng.randint(5, 11)
        picks = rng.choices(words, weights=weights, k=n)
        line = []
        for w in picks:
            line.append(w)
            if rng.random() < 0.18:
                line.append(rng.choice(PUNCT))
        sep = "  " if rng.random() < 0.05 else " "
        lines.append(sep.join(line))
    text = "\n".join(lines) + "\n"

    with open(os.path.join(fixtures, "corpus_fa.txt"), "w", encoding="utf-8", newline="") as f:
        f.write(text)

    counts = {}
    total = 0
    with open(os.path.join(fixtures, "corpus_fa.txt"), encoding="utf-8") as f:
        for line in f:
            for token in tokenize(line):
                counts[token] = counts.get(token, 0) + 1
                total += 1
    assert total >= 10000, total

    ordered = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    with open(os.path.join(fixtures, "corpus_fa_counts.tsv"), "w", encoding="utf-8", newline="") as f:
        f.write("#total\t%d\n" % total)
        for word, count in ordered:
            f.write("%s\t%d\n" % (word, count))

    qcounts = [(w, counts.get(w, 0)) for w in QUERY_WORDS]
    qsum = sum(c for _, c in qcounts)
    with open(os.path.join(fixtures, "corpus_fa_query.tsv"), "w", encoding="utf-8", newline="") as f:
        for word, count in qcounts:
            f.write("%s\t%d\n" % (word, count))
        f.write("#sum\t%d\n" % qsum)
        f.write("#total\t%d\n" % total)
        f.write("#ratio\t%.12f\n" % (qsum / total))

    print("lines: %d, tokens: %d, distinct: %d" % (len(lines), total, len(counts)))
    print("query:", " ".join("%s=%d" % q for q in qcounts), "sum=%d ratio=%.6f" % (qsum, qsum / total))


if __name__ == "__main__":
    main()
