"""Property tests over the spec'd invariants of the distance and
detection layers."""

import pytest
from hypothesis import given, settings, strategies as st

from wsadist import (
    DetectConfig,
    appendix_model,
    detect_tables,
    levenshtein_standard,
    levenshtein_ws_agnostic,
    line_whitespace_cost,
    row_similarity,
    unit_model,
)

ALPHABET = "aA9(),$ "

UNIT = unit_model()
APPENDIX = appendix_model()

strings = st.text(alphabet=ALPHABET, max_size=24)
models = st.sampled_from([UNIT, APPENDIX])

common = settings(max_examples=500, deadline=None)


@common
@given(strings, strings, models)
def test_dominance(s1, s2, model):
    assert levenshtein_ws_agnostic(s1, s2, model) <= levenshtein_standard(s1, s2, model)


@common
@given(strings, models)
def test_identity_zero(s, model):
    assert levenshtein_ws_agnostic(s, s, model) == 0
    assert levenshtein_standard(s, s, model) == 0


@common
@given(strings, strings, models)
def test_symmetry_under_symmetric_models(s1, s2, model):
    assert model.symmetric
    assert levenshtein_ws_agnostic(s1, s2, model) == levenshtein_ws_agnostic(s2, s1, model)
    assert levenshtein_standard(s1, s2, model) == levenshtein_standard(s2, s1, model)


@common
@given(strings, strings, models)
def test_trailing_space_absorption(s1, s2, model):
    base = levenshtein_ws_agnostic(s1, s2, model)
    assert levenshtein_ws_agnostic(s1 + " ", s2, model) == base
    assert levenshtein_ws_agnostic(s1, s2 + " ", model) == base


@common
@given(strings, strings)
def test_unit_zero_characterization(s1, s2):
    d = levenshtein_ws_agnostic(s1, s2, UNIT)
    assert (d == 0) == (s1.rstrip(" ") == s2.rstrip(" "))


@common
@given(strings, strings, models)
def test_row_similarity_bounds(s1, s2, model):
    sim = row_similarity(s1, s2, model)
    assert 0.0 <= sim <= 1.0


@common
@given(strings, models)
def test_row_similarity_identical_is_one(s, model):
    assert row_similarity(s, s, model) == 1.0


documents = st.lists(st.text(alphabet=ALPHABET + "\t.x", max_size=30), max_size=20)
configs = st.builds(
    DetectConfig,
    threshold=st.floats(min_value=0.0, max_value=1.0),
    min_rows=st.integers(min_value=2, max_value=4),
)


@common
@given(documents, configs)
def test_detect_region_invariants(lines, config):
    regions = detect_tables(lines, config)
    prev_end = -1
    for r in regions:
        assert r.start_line <= r.end_line
        assert r.end_line - r.start_line + 1 >= config.min_rows
        assert r.start_line > prev_end  # disjoint and sorted
        assert 0.0 <= r.score <= 1.0
        assert r.end_line < len(lines)
        prev_end = r.end_line


@settings(max_examples=200, deadline=None)
@given(documents, st.floats(min_value=0.0, max_value=1.0), st.floats(min_value=0.0, max_value=1.0))
def test_detect_threshold_monotonicity(lines, t1, t2):
    lo, hi = sorted((t1, t2))
    loose = detect_tables(lines, DetectConfig(threshold=lo))
    strict = detect_tables(lines, DetectConfig(threshold=hi))
    for r in strict:
        assert any(
            q.start_line <= r.start_line and r.end_line <= q.end_line for q in loose
        ), r


@settings(max_examples=200, deadline=None)
@given(documents)
def test_detect_deterministic(lines):
    config = DetectConfig()
    assert detect_tables(lines, config) == detect_tables(lines, config)


def test_lines_outside_regions_do_not_interfere():
    table = ["aaaa  99", "aaaa  99", "aaaa  99"]
    tail_a = ["(((((((", "$,$,$,$"]
    tail_b = ["$,$,$,$", "((((((("]
    config = DetectConfig()
    regions_a = detect_tables(table + [""] + tail_a, config)
    regions_b = detect_tables(table + [""] + tail_b, config)
    assert [r for r in regions_a if r.end_line <= 2] == [
        r for r in regions_b if r.end_line <= 2
    ]


@pytest.mark.parametrize("model", [UNIT, APPENDIX])
def test_line_whitespace_cost_matches_empty_distance(model):
    for line in ["", "   ", "a9 A$", "((, ))"]:
        assert line_whitespace_cost(line, model) == levenshtein_ws_agnostic("", line, model)
