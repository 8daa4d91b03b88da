#!/usr/bin/env python3
"""Emit a confusables table in the Unicode `confusables.txt` line format
from the `confusable_homoglyphs` PyPI package snapshot.

The package data is a bidirectional char -> confusables map built from the
official confusables.txt, so the emitted file recovers the same unordered
pairs (plus the sequence-target entries, kept so parsers exercise the
single-codepoint restriction).

    pip install --target /tmp/ch confusable_homoglyphs==3.2.0
    python3 tools/gen_confusables.py /tmp/ch > data/confusables.txt
"""

import json
import sys


def cps(s):
    return " ".join(f"{ord(c):04X}" for c in s)


def main():
    if len(sys.argv) != 2:
        sys.exit(__doc__)
    with open(f"{sys.argv[1]}/confusable_homoglyphs/confusables.json") as fh:
        data = json.load(fh)

    single = {}  # (min cp, max cp) -> (src char, dst char, dst name)
    seqs = set()  # (source char, target sequence, name)
    for key, vals in data.items():
        for v in vals:
            other = v["c"]
            if len(key) == 1 and len(other) == 1:
                a, b = ord(key), ord(other)
                if a == b:
                    continue
                pair = (min(a, b), max(a, b))
                if pair not in single or a > b:
                    # prefer the orientation mapping the higher codepoint
                    # to the lower one, as the official file usually does
                    single[pair] = (key, other, v["n"]) if a > b else (other, key, v["n"])
            elif len(key) > 1 and len(other) == 1:
                seqs.add((other, key, v["n"]))

    print("﻿# Confusables table, reconstructed from confusable_homoglyphs 3.2.0")
    print("# Format: source ; target ; type # comment")
    print("#")
    for (lo, hi), (src, dst, name) in sorted(single.items()):
        print(f"{cps(src)} ;\t{cps(dst)} ;\tMA\t# ( {src} → {dst} ) {name}")
    for src, seq, name in sorted(seqs):
        print(f"{cps(src)} ;\t{cps(seq)} ;\tMA\t# ( {src} → {seq} ) {name}")


if __name__ == "__main__":
    main()
