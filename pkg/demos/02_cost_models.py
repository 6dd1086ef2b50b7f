"""Configurable cost models: the unit model, the shipped graded preset,
and loading a custom model from JSON.

Run with:  python3 demos/02_cost_models.py
"""

from wsadist import (
    appendix_model,
    levenshtein_ws_agnostic,
    load_model,
    serialize_model,
    unit_model,
)

# The unit model: every edit costs 1.
unit = unit_model()
print("unit   replace('a', '9') =", unit.replace("a", "9"))

# The shipped preset grades replacements over the normalized alphabet
# {a, A, 9, (, ), ',', $, space}: case changes are cheap, letter/digit
# swaps dearer, and anything involving punctuation effectively
# forbidden (999) -- though still a legal edit, not an error.
graded = appendix_model()
print("graded replace('a', 'A') =", graded.replace("a", "A"))
print("graded replace('a', '9') =", graded.replace("a", "9"))
print("graded replace('(', ' ') =", graded.replace("(", " "))
print()

# The model changes the distances themselves.  Under unit costs a
# letter column and a digit column are 3 edits apart; under the graded
# model each swap costs 4, but deleting and re-inserting (1 + 1) is
# cheaper, so the optimal alignment changes shape too.
print("unit   'aaa' vs '999':", levenshtein_ws_agnostic("aaa", "999", unit))
print("graded 'aaa' vs '999':", levenshtein_ws_agnostic("aaa", "999", graded))
print()

# Models round-trip through a small JSON document, so a custom model is
# one file away.
doc = """
{
  "indel_default": 2,
  "indel": {" ": 1},
  "replace_default": 3,
  "replace": [{"a": "0", "b": "O", "cost": 1}],
  "whitespace_char": " "
}
"""
custom = load_model(doc)
print("custom 'O0' vs '00':", levenshtein_ws_agnostic("O0", "00", custom))
print()
print("serialized form of the custom model:")
print(serialize_model(custom))
