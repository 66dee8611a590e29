"""Loading and standardization of multivariate time-series matrices.

Rows are variables (ROIs), columns are time points. Standardization makes
every row zero-mean with unit Euclidean norm, which is what keeps one
regularization weight usable across subjects.
"""

from __future__ import annotations

import csv
import math
import os
from dataclasses import dataclass, replace

import numpy as np

from .errors import DegenerateRowError, NonNumericCellError, RaggedRowsError

ZERO_NORM_TOL = 1e-12

_DELIMITERS = {"csv": ",", "tsv": "\t"}


@dataclass(frozen=True)
class TimeSeriesMatrix:
    """N x P real matrix: one row per variable, one column per time point."""

    data: np.ndarray
    subject_id: str = ""
    run_id: str = ""

    @property
    def n_rois(self) -> int:
        return self.data.shape[0]

    @property
    def n_timepoints(self) -> int:
        return self.data.shape[1]


def _row_is_numeric(cells: list[str]) -> bool:
    for cell in cells:
        try:
            float(cell)
        except ValueError:
            return False
    return True


def load_time_series(
    path: str,
    format: str = "auto",
    subject_id: str = "",
    run_id: str = "",
    transpose: bool = False,
) -> TimeSeriesMatrix:
    """Parse a CSV/TSV file into a raw (unnormalized) TimeSeriesMatrix.

    A single leading header row is skipped when any of its cells fails to
    parse as a number. Non-finite cells (NaN, inf) are rejected. With
    ``transpose`` the file is read column-major (columns = variables).
    """
    if format == "auto":
        format = "tsv" if os.path.splitext(path)[1].lower() == ".tsv" else "csv"
    if format not in _DELIMITERS:
        raise ValueError(f"unknown format {format!r}; expected 'csv' or 'tsv'")
    delimiter = _DELIMITERS[format]

    with open(path, newline="", encoding="utf-8") as fh:
        rows = [row for row in csv.reader(fh, delimiter=delimiter) if row]
    if rows and not _row_is_numeric(rows[0]):
        rows = rows[1:]
    if not rows:
        raise RaggedRowsError(path, 0, 1, 0)

    n_cols = len(rows[0])
    data = np.empty((len(rows), n_cols), dtype=np.float64)
    for i, row in enumerate(rows):
        if len(row) != n_cols:
            raise RaggedRowsError(path, i, n_cols, len(row))
        for j, cell in enumerate(row):
            try:
                value = float(cell)
            except ValueError:
                raise NonNumericCellError(path, i, j, cell) from None
            if not math.isfinite(value):
                raise NonNumericCellError(path, i, j, cell)
            data[i, j] = value

    if transpose:
        data = np.ascontiguousarray(data.T)
    return TimeSeriesMatrix(data=data, subject_id=subject_id, run_id=run_id)


def normalize_rows(F: TimeSeriesMatrix) -> TimeSeriesMatrix:
    """Demean every row and scale it to unit Euclidean norm.

    Constant rows are a hard error: dropping them would silently shift
    variable indexing for everything downstream.
    """
    data = F.data - F.data.mean(axis=1, keepdims=True)
    norms = np.linalg.norm(data, axis=1)
    degenerate = np.flatnonzero(norms <= ZERO_NORM_TOL)
    if degenerate.size:
        raise DegenerateRowError(int(degenerate[0]))
    return replace(F, data=data / norms[:, None])
