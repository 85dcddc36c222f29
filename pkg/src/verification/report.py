# src/verification/report.py
import json
from typing import Any, Dict, List

import pandas as pd

from src.verification.cases import Status, VerificationReport

REPORT_COLUMNS = ["case", "theorem", "mode", "status", "alphas", "max_deviation", "notes"]


# ---------- Summary ----------


def summarize(reports: List[VerificationReport]) -> Dict[str, Any]:
    """Counts per status plus the overall verdict (ok iff no unexpected failure)."""
    counts = {status.value: 0 for status in Status}
    for report in reports:
        counts[report.status.value] += 1

    return {
        "total": len(reports),
        **counts,
        "ok": counts[Status.FAIL.value] == 0,
    }


# ---------- Tables ----------


def build_report_dataframe(reports: List[VerificationReport]) -> pd.DataFrame:
    """One row per case, in case order."""
    if not reports:
        return pd.DataFrame(columns=REPORT_COLUMNS)

    rows = [
        {
            "case": r.case.label,
            "theorem": r.case.theorem,
            "mode": r.case.mode.value,
            "status": r.status.value,
            "alphas": len(r.outcomes),
            "max_deviation": r.max_deviation,
            "notes": "; ".join(r.notes),
        }
        for r in reports
    ]
    return pd.DataFrame(rows, columns=REPORT_COLUMNS)


def theorem_summary(df: pd.DataFrame) -> pd.DataFrame:
    """Per-theorem status counts and worst deviation."""
    if df.empty:
        return pd.DataFrame(columns=["theorem", "cases", "max_deviation"])

    counts = (
        df.pivot_table(index="theorem", columns="status", values="case", aggfunc="count", fill_value=0)
        .reset_index()
    )
    counts.columns.name = None
    worst = df.groupby("theorem", sort=False)["max_deviation"].max().reset_index()
    cases = df.groupby("theorem", sort=False)["case"].count().rename("cases").reset_index()

    out = cases.merge(counts, on="theorem").merge(worst, on="theorem")
    order = {t: i for i, t in enumerate(df["theorem"].drop_duplicates())}
    return out.sort_values("theorem", key=lambda s: s.map(order)).reset_index(drop=True)


def render_table(reports: List[VerificationReport]) -> str:
    """Per-case table followed by the per-theorem summary."""
    df = build_report_dataframe(reports)
    if df.empty:
        return "(no cases)"
    shown = df.drop(columns=["notes"]).copy()
    shown["max_deviation"] = shown["max_deviation"].map(lambda d: f"{d:.2e}")

    per_theorem = theorem_summary(df)
    per_theorem["max_deviation"] = per_theorem["max_deviation"].map(lambda d: f"{d:.2e}")
    return f"{shown.to_string(index=False)}\n\nper theorem:\n{per_theorem.to_string(index=False)}"


# ---------- JSON ----------


def reports_to_dict(reports: List[VerificationReport]) -> Dict[str, Any]:
    return {
        "reports": [r.to_dict() for r in reports],
        "summary": summarize(reports),
    }


def reports_to_json(reports: List[VerificationReport], indent: int = 2) -> str:
    return json.dumps(reports_to_dict(reports), indent=indent)
