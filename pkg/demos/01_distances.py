"""Why trailing whitespace distorts edit distances, and what the
ws-agnostic variant does about it.

Run with:  python3 demos/01_distances.py
"""

from wsadist import (
    levenshtein_standard,
    levenshtein_ws_agnostic,
    unit_model,
    ws_agnostic_naive,
)

model = unit_model()

# Two normalized table rows; the second row is missing its last cell.
row1 = "aaaa aaa  9 aa 9 aaaaaa  999  aa"
row2 = "aaaa aaa  9 aa 9 aaaaaa"

print("row 1:", repr(row1))
print("row 2:", repr(row2))
print()

# The classical distance charges one unit per missing trailing
# character, spaces included.
print("standard distance:   ", levenshtein_standard(row1, row2, model))

# A human reads both rows as if padded with endless whitespace, so the
# missing spaces should be free and only the visible characters count.
print("ws-agnostic distance:", levenshtein_ws_agnostic(row1, row2, model))

# The same number can be obtained by brute force: try every amount of
# trailing-space padding on both rows and keep the cheapest classical
# distance.  That is the reference oracle the fast path is tested
# against; it is far slower but easy to trust.
print("naive padded oracle: ", ws_agnostic_naive(row1, row2, model))
print()

# Trailing spaces themselves never cost anything.
print("'abc   ' vs 'abc':", levenshtein_ws_agnostic("abc   ", "abc", model))
# ...but interior whitespace still does.
print("'a b'    vs 'ab': ", levenshtein_ws_agnostic("a b", "ab", model))
