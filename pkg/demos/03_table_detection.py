"""Finding tables in plaintext: normalize lines to their shape, then
look for runs of mutually similar neighbors.

Run with:  python3 demos/03_table_detection.py
"""

from wsadist import (
    NormalizationMode,
    detect_tables,
    normalize_line,
    row_similarity,
    appendix_model,
)

DOCUMENT = """\
Quarterly report, prepared by the finance team.
All figures are unaudited and subject to revision.

Gamestonk banking\t2021\t234,012.50\t$11,121
Short sellers inc\t2020\t345,280.00\t
Dogecoin partners\t2023\t123,456.78\t$12,314

Questions should be directed to the usual address.
Numbers in the rightmost column are year-end balances.
""".splitlines()

# Step 1: normalization maps every line to its "shape": letters become
# a/A, digits become 9, punctuation and whitespace survive untouched.
print("normalized lines:")
for line in DOCUMENT:
    print(" ", repr(normalize_line(line.expandtabs(8), NormalizationMode.CASED)))
print()

# Step 2: adjacent table rows share a shape, so their ws-agnostic
# distance is small relative to how much ink they carry.
model = appendix_model()
a = normalize_line(DOCUMENT[3].expandtabs(8))
b = normalize_line(DOCUMENT[4].expandtabs(8))
print("similarity of the first two table rows:", round(row_similarity(a, b, model), 3))
print()

# Step 3: threshold the similarities and keep runs of at least
# min_rows lines.  Blank lines always break a run.
print("detected regions (start, end, mean similarity):")
for region in detect_tables(DOCUMENT):
    print(f"  lines {region.start_line}-{region.end_line}  score {region.score:.3f}")
    for k in range(region.start_line, region.end_line + 1):
        print("   |", DOCUMENT[k].expandtabs(8))
