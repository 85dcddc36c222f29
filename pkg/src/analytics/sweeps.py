#src/analytics/sweeps.py
from __future__ import annotations

import pathlib
from dataclasses import dataclass
from typing import List, Union

import numpy as np
import pandas as pd

from src import config
from src.errors import AlphaOutOfRange, ParameterOutOfRange
from src.graphs.graph import Graph
from src.linalg.eigen import eigen_sym
from src.linalg.matrices import check_alpha, l_alpha_matrix

# Eigenvalues below this magnitude are written as 0.
ZERO_CUTOFF = 1e-12


@dataclass(frozen=True)
class SweepRow:
    alpha: float
    eigenvalues: List[float]  # descending, length n

    def to_dict(self) -> dict:
        out = {"alpha": self.alpha}
        for i, value in enumerate(self.eigenvalues, start=1):
            out[f"lambda_{i}"] = value
        return out


def sweep_columns(n: int) -> List[str]:
    return ["alpha"] + [f"lambda_{i}" for i in range(1, n + 1)]


def sweep_alphas(start: float, end: float, steps: int) -> List[float]:
    """
    `steps` evenly spaced alphas from start to end, strictly increasing.
    """
    if steps < 2:
        raise ParameterOutOfRange(f"sweep needs at least 2 steps, got {steps}")
    check_alpha(start)
    check_alpha(end)
    if not start < end:
        raise AlphaOutOfRange(f"alpha range must increase, got {start} .. {end}")
    return [round(float(a), 12) for a in np.linspace(start, end, steps)]


def _clean(value: float) -> float:
    return 0.0 if abs(value) < ZERO_CUTOFF else float(value)


def sweep_rows(g: Graph, start: float = 0.0, end: float = 1.0, steps: int = config.ALPHA_STEPS) -> List[SweepRow]:
    rows: List[SweepRow] = []
    for alpha in sweep_alphas(start, end, steps):
        values = eigen_sym(l_alpha_matrix(g, alpha)).values()
        rows.append(SweepRow(alpha=alpha, eigenvalues=[_clean(v) for v in values]))
    return rows


def alpha_sweep(g: Graph, start: float = 0.0, end: float = 1.0, steps: int = config.ALPHA_STEPS) -> pd.DataFrame:
    """
    L_alpha spectrum of g across an alpha grid.

    Returns:
        DataFrame with columns alpha, lambda_1..lambda_n, one row per grid
        point; each row's eigenvalues are sorted descending.
    """
    rows = sweep_rows(g, start, end, steps)
    return pd.DataFrame([r.to_dict() for r in rows], columns=sweep_columns(g.n))


def write_sweep_csv(
    df: pd.DataFrame,
    path: Union[str, pathlib.Path],
    digits: int = config.SIGNIFICANT_DIGITS,
) -> pathlib.Path:
    out = pathlib.Path(path)
    if out.parent and not out.parent.exists():
        out.parent.mkdir(parents=True, exist_ok=True)
    df.to_csv(out, index=False, float_format=f"%.{digits}g")
    return out
