#!/usr/bin/env python3
"""Regenerates src/nfc_pairs.inc from the Unicode character database.

Emits the primary canonical composition pairs (starter, combiner) -> composed,
sorted by (starter, combiner) for binary search.
"""

import sys
import unicodedata

pairs = []
for cp in range(0x110000):
    ch = chr(cp)
    decomp = unicodedata.decomposition(ch)
    if not decomp or decomp.startswith("<"):
        continue
    parts = decomp.split()
    if len(parts) != 2:
        continue
    a, b = (int(p, 16) for p in parts)
    # round-trip through NFC so composition exclusions drop out
    if unicodedata.normalize("NFC", chr(a) + chr(b)) == ch:
        pairs.append((a, b, cp))

pairs.sort()
out = sys.argv[1] if len(sys.argv) > 1 else "src/nfc_pairs.inc"
with open(out, "w") as f:
    f.write("// Generated by tools/gen_nfc_table.py. Do not edit.\n")
    f.write(f"// {len(pairs)} primary canonical composition pairs.\n")
    for a, b, c in pairs:
        f.write(f"{{0x{a:05X}, 0x{b:05X}, 0x{c:05X}}},\n")
print(f"wrote {len(pairs)} pairs to {out}")
