"""Table-region detection in plaintext documents.

Adjacent lines of a table tend to share their layout, so after shape
normalization their trailing-whitespace-agnostic distance is small
relative to line weight.  Detection is adjacent-pair thresholding:
maximal runs of consecutive non-blank lines whose pairwise similarity
stays at or above a threshold, with a minimum run length.  Blank lines
are hard separators.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cost_model import CostModel, appendix_model
from .distance import levenshtein_ws_agnostic
from .normalizer import NormalizationMode, normalize_line


@dataclass(frozen=True)
class TableRegion:
    start_line: int  # 0-based, inclusive
    end_line: int    # 0-based, inclusive
    score: float     # mean adjacent-row similarity, in [0, 1]


@dataclass(frozen=True)
class DetectConfig:
    threshold: float = 0.5
    min_rows: int = 3
    mode: NormalizationMode = NormalizationMode.CASED
    model: CostModel = field(default_factory=appendix_model)
    tab_width: int = 8

    def __post_init__(self):
        if not 0.0 <= self.threshold <= 1.0:
            raise ValueError(f"threshold must be in [0, 1], got {self.threshold}")
        if self.min_rows < 2:
            raise ValueError(f"min_rows must be >= 2, got {self.min_rows}")
        if self.tab_width < 1:
            raise ValueError(f"tab_width must be >= 1, got {self.tab_width}")


def line_whitespace_cost(line: str, model: CostModel) -> int:
    """Cost of reconciling a whole line with pure imagined whitespace."""
    return sum(model.whitespace_cost(c) for c in line)


def row_similarity(line1: str, line2: str, model: CostModel | None = None) -> float:
    """Similarity in [0, 1]: 1 - d/D with d the ws-agnostic distance and
    D the heavier line's whitespace cost.  Two blank (or all-whitespace)
    lines are fully similar.  Clamped at 0: under cost models with
    effectively-forbidden replacements, d can exceed D.
    """
    model = model if model is not None else appendix_model()
    heavier = max(
        line_whitespace_cost(line1, model), line_whitespace_cost(line2, model)
    )
    if heavier == 0:
        return 1.0
    d = levenshtein_ws_agnostic(line1, line2, model)
    return max(0.0, 1.0 - d / heavier)


def _is_blank(line: str) -> bool:
    return not line.strip()


def detect_tables(lines, config: DetectConfig | None = None) -> list[TableRegion]:
    """Locate table regions in a document given as a sequence of lines.

    Lines are tab-expanded and normalized before comparison.  Returned
    regions are disjoint, sorted by start line, and each spans at least
    ``config.min_rows`` lines.
    """
    config = config if config is not None else DetectConfig()
    prepared = [
        normalize_line(line.expandtabs(config.tab_width), config.mode)
        for line in lines
    ]

    regions: list[TableRegion] = []
    block_start = None
    for idx in range(len(prepared) + 1):
        at_end = idx == len(prepared)
        if not at_end and not _is_blank(prepared[idx]):
            if block_start is None:
                block_start = idx
            continue
        if block_start is not None:
            regions.extend(
                _regions_in_block(prepared, block_start, idx - 1, config)
            )
            block_start = None
    return regions


def _regions_in_block(prepared, first, last, config) -> list[TableRegion]:
    """Threshold the adjacent similarities of one blank-free block."""
    sims = [
        row_similarity(prepared[i], prepared[i + 1], config.model)
        for i in range(first, last)
    ]
    regions = []
    run_start = None
    run_sims: list[float] = []
    for k in range(len(sims) + 1):
        if k < len(sims) and sims[k] >= config.threshold:
            if run_start is None:
                run_start = first + k
            run_sims.append(sims[k])
            continue
        if run_start is not None:
            end = first + k  # run covers lines run_start .. first+k
            if end - run_start + 1 >= config.min_rows:
                regions.append(
                    TableRegion(run_start, end, sum(run_sims) / len(run_sims))
                )
            run_start = None
            run_sims = []
    return regions
