"""Weighted edit distances.

Two production paths, both O(len1*len2) time and two-row working space:

* ``levenshtein_standard``  -- the classical weighted DP.
* ``levenshtein_ws_agnostic`` -- the same lattice with cheaper
  transitions along its last row and last column, where the exhausted
  string is treated as continuing with unbounded imagined whitespace:
  a trailing space on the other string is consumed for free, and any
  other trailing character costs min(delete it, replace it with the
  whitespace character).

Two deliberately independent reference paths used for differential
testing:

* ``ws_agnostic_naive`` -- minimum of the classical distance over all
  trailing-space paddings of both inputs (pure Python, full matrix).
* ``ws_agnostic_recursive_unit`` -- memoized transcription of the
  four-case recurrence under unit costs (pure Python).

The hot kernel is JIT-compiled with numba when available and falls back
to the same code interpreted otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .cost_model import CostModel, unit_model

DEFAULT_MAX_CELLS = 1 << 26
DEFAULT_NAIVE_LIMIT = 512
DEFAULT_RECURSIVE_LIMIT = 64


class SizeLimitError(ValueError):
    """Inputs exceed the documented size limit of the chosen algorithm."""


class Algorithm(Enum):
    STANDARD = "standard"
    WS_AGNOSTIC = "ws-agnostic"
    NAIVE_ORACLE = "naive-oracle"
    RECURSIVE_REFERENCE = "recursive-reference"


@dataclass(frozen=True)
class DistanceResult:
    cost: int
    algorithm: Algorithm
    len1: int
    len2: int


def _dp_kernel(code1, code2, indel1, indel2, ws1, ws2, rep, ws_agnostic):
    """Two-row DP over the (n1+1) x (n2+1) lattice.

    code1/code2 are per-character indices into the dense ``rep`` cost
    table; indel1/indel2 per-character indel costs; ws1/ws2 the
    per-character costs against imagined whitespace (only consulted
    when ``ws_agnostic`` is true).  Requires n1 >= 1 and n2 >= 1.
    """
    n1 = code1.shape[0]
    n2 = code2.shape[0]
    prev = np.empty(n2 + 1, dtype=np.int64)
    cur = np.empty(n2 + 1, dtype=np.int64)
    prev[0] = 0
    for j in range(1, n2 + 1):
        prev[j] = prev[j - 1] + indel2[j - 1]
    for i in range(1, n1 + 1):
        cur[0] = prev[0] + indel1[i - 1]
        for j in range(1, n2 + 1):
            dcost = indel1[i - 1]
            if ws_agnostic and j == n2:
                dcost = ws1[i - 1]
            icost = indel2[j - 1]
            if ws_agnostic and i == n1:
                icost = ws2[j - 1]
            best = prev[j] + dcost
            cand = cur[j - 1] + icost
            if cand < best:
                best = cand
            cand = prev[j - 1] + rep[code1[i - 1], code2[j - 1]]
            if cand < best:
                best = cand
            cur[j] = best
        prev, cur = cur, prev
    return prev[n2]


try:  # pragma: no cover - exercised implicitly
    from numba import njit

    _dp_kernel = njit(cache=True)(_dp_kernel)
except ImportError:  # pragma: no cover
    pass


def _encode(s1: str, s2: str, model: CostModel):
    """Build the dense per-pair cost arrays consumed by the kernel."""
    alphabet = sorted(set(s1) | set(s2) | {model.whitespace_char})
    index = {c: k for k, c in enumerate(alphabet)}
    k = len(alphabet)
    rep = np.empty((k, k), dtype=np.int64)
    for a, ia in index.items():
        for b, ib in index.items():
            rep[ia, ib] = model.replace(a, b)
    indel = np.array([model.indel(c) for c in alphabet], dtype=np.int64)
    ws = np.array([model.whitespace_cost(c) for c in alphabet], dtype=np.int64)

    def arrays(s):
        codes = np.fromiter((index[c] for c in s), dtype=np.int64, count=len(s))
        return codes, indel[codes], ws[codes]

    code1, indel1, ws1 = arrays(s1)
    code2, indel2, ws2 = arrays(s2)
    return code1, code2, indel1, indel2, ws1, ws2, rep


def _check_cells(s1: str, s2: str, max_cells: int):
    if len(s1) * len(s2) > max_cells:
        raise SizeLimitError(
            f"{len(s1)} x {len(s2)} exceeds the {max_cells}-cell limit"
        )


def levenshtein_standard(
    s1: str, s2: str, model: CostModel | None = None, *, max_cells: int = DEFAULT_MAX_CELLS
) -> int:
    """Classical weighted Levenshtein distance."""
    model = model if model is not None else unit_model()
    _check_cells(s1, s2, max_cells)
    if not s1:
        return sum(model.indel(c) for c in s2)
    if not s2:
        return sum(model.indel(c) for c in s1)
    code1, code2, indel1, indel2, ws1, ws2, rep = _encode(s1, s2, model)
    return int(_dp_kernel(code1, code2, indel1, indel2, ws1, ws2, rep, False))


def levenshtein_ws_agnostic(
    s1: str, s2: str, model: CostModel | None = None, *, max_cells: int = DEFAULT_MAX_CELLS
) -> int:
    """Weighted Levenshtein distance with both strings treated as padded
    by infinite imagined trailing whitespace."""
    model = model if model is not None else unit_model()
    _check_cells(s1, s2, max_cells)
    # An empty string is already at the imagined-whitespace suffix, so
    # every character of the other string is charged its whitespace cost.
    if not s1:
        return sum(model.whitespace_cost(c) for c in s2)
    if not s2:
        return sum(model.whitespace_cost(c) for c in s1)
    code1, code2, indel1, indel2, ws1, ws2, rep = _encode(s1, s2, model)
    return int(_dp_kernel(code1, code2, indel1, indel2, ws1, ws2, rep, True))


def _full_matrix_standard(s1: str, s2: str, model: CostModel):
    """Full-matrix classical DP in plain Python, independent of the
    production kernel.  Returns the whole lattice."""
    n1, n2 = len(s1), len(s2)
    d = [[0] * (n2 + 1) for _ in range(n1 + 1)]
    for i in range(1, n1 + 1):
        d[i][0] = d[i - 1][0] + model.indel(s1[i - 1])
    for j in range(1, n2 + 1):
        d[0][j] = d[0][j - 1] + model.indel(s2[j - 1])
    for i in range(1, n1 + 1):
        row = d[i]
        above = d[i - 1]
        c1 = s1[i - 1]
        del_cost = model.indel(c1)
        for j in range(1, n2 + 1):
            c2 = s2[j - 1]
            row[j] = min(
                above[j] + del_cost,
                row[j - 1] + model.indel(c2),
                above[j - 1] + model.replace(c1, c2),
            )
    return d


def ws_agnostic_naive(
    s1: str,
    s2: str,
    model: CostModel | None = None,
    *,
    max_total_len: int = DEFAULT_NAIVE_LIMIT,
    pad_limit: int | None = None,
) -> int:
    """Reference oracle: min over paddings p, q in [0, pad_limit] of the
    classical distance between s1 + p spaces and s2 + q spaces.

    The classical DP value for (s1 + p spaces, s2 + q spaces) is the
    (len1+p, len2+q) cell of the lattice for the maximally padded pair,
    so one full matrix covers every padding.  pad_limit defaults to
    len1 + len2: no optimal alignment consumes more imagined whitespace
    than there are real characters.
    """
    model = model if model is not None else unit_model()
    if len(s1) + len(s2) > max_total_len:
        raise SizeLimitError(
            f"combined length {len(s1) + len(s2)} exceeds the oracle limit {max_total_len}"
        )
    pad = model.whitespace_char
    n = pad_limit if pad_limit is not None else len(s1) + len(s2)
    d = _full_matrix_standard(s1 + pad * n, s2 + pad * n, model)
    return min(
        d[i][j]
        for i in range(len(s1), len(s1) + n + 1)
        for j in range(len(s2), len(s2) + n + 1)
    )


def ws_agnostic_recursive_unit(
    s1: str, s2: str, *, max_len: int = DEFAULT_RECURSIVE_LIMIT
) -> int:
    """Reference oracle: the four-case recurrence under unit costs,
    memoized.  Index positions at or past the end of a string stand for
    the imagined-whitespace marker."""
    if len(s1) > max_len or len(s2) > max_len:
        raise SizeLimitError(f"inputs longer than {max_len} characters")
    n1, n2 = len(s1), len(s2)

    @lru_cache(maxsize=None)
    def lev(i: int, j: int) -> int:
        a = s1[i] if i < n1 else None
        b = s2[j] if j < n2 else None
        if a is None and b is None:
            return 0
        if a is not None and a == b:
            return lev(min(i + 1, n1), min(j + 1, n2))
        if a == " " and b is None:
            return lev(i + 1, j)
        if a is None and b == " ":
            return lev(i, j + 1)
        best = None
        for ni, nj in ((i, j + 1), (i + 1, j), (i + 1, j + 1)):
            ni, nj = min(ni, n1), min(nj, n2)
            if (ni, nj) == (i, j):
                # the marker's tail is itself; a self-transition can
                # never be part of a minimal script
                continue
            cand = lev(ni, nj)
            if best is None or cand < best:
                best = cand
        return 1 + best

    return lev(0, 0)


_DISPATCH = {
    Algorithm.STANDARD: levenshtein_standard,
    Algorithm.WS_AGNOSTIC: levenshtein_ws_agnostic,
    Algorithm.NAIVE_ORACLE: ws_agnostic_naive,
}


def distance(
    s1: str,
    s2: str,
    model: CostModel | None = None,
    algorithm: Algorithm = Algorithm.WS_AGNOSTIC,
) -> DistanceResult:
    """Convenience wrapper returning the cost together with provenance."""
    if algorithm is Algorithm.RECURSIVE_REFERENCE:
        cost = ws_agnostic_recursive_unit(s1, s2)
    else:
        cost = _DISPATCH[algorithm](s1, s2, model)
    return DistanceResult(cost=cost, algorithm=algorithm, len1=len(s1), len2=len(s2))
