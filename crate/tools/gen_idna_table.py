#!/usr/bin/env python3
"""Emit an IDNA2008 derived-property table from the `idna` PyPI package data.

The output follows the published table format consumed by `load_pvalid`:

    0061..007A    ; PVALID     # LATIN SMALL LETTER A..LATIN SMALL LETTER Z
    00B7          ; CONTEXTO   # MIDDLE DOT

Install the package version whose Unicode version you want, e.g.:

    pip install --target /tmp/idna29 idna==2.9   # Unicode 12.1.0

then run:

    python3 tools/gen_idna_table.py /tmp/idna29 > data/idna2008-derived.txt
"""

import sys
import unicodedata


def ranges(packed):
    """idna stores ranges as (start << 32) | end_exclusive integers."""
    for r in packed:
        yield r >> 32, (r & 0xFFFFFFFF) - 1


def name(cp):
    try:
        return unicodedata.name(chr(cp))
    except ValueError:
        return "<unnamed>"


def main():
    if len(sys.argv) != 2:
        sys.exit(__doc__)
    sys.path.insert(0, sys.argv[1])
    import idna.idnadata as idnadata
    import idna

    entries = []
    for prop in ("PVALID", "CONTEXTJ", "CONTEXTO"):
        for start, end in ranges(idnadata.codepoint_classes[prop]):
            entries.append((start, end, prop))
    entries.sort()

    print(f"# IDNA2008 derived properties, generated from idna {idna.__version__}")
    print(f"# Unicode version: {idnadata.__version__}")
    print("# Format: codepoint-or-range ; property # comment")
    print("#")
    for start, end, prop in entries:
        if start == end:
            field = f"{start:04X}"
            comment = name(start)
        else:
            field = f"{start:04X}..{end:04X}"
            comment = f"{name(start)}..{name(end)}"
        print(f"{field:<14}; {prop:<10} # {comment}")


if __name__ == "__main__":
    main()
