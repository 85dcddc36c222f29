# src/workflows/verify_workflow.py

from __future__ import annotations

from typing import Any, Dict, List, Optional, Tuple
from typing import TypedDict

from langgraph.graph import StateGraph, END

from src import config
from src.verification.cases import Status, VerificationCase, VerificationReport, run_case
from src.verification.corpus import default_corpus
from src.verification.report import summarize


# ---------------------------------------------------------------------------
# State definition
# ---------------------------------------------------------------------------


class VerifyState(TypedDict, total=False):
    """
    State used by the verification-suite LangGraph.
    """

    # Input
    cases: List[VerificationCase]        # corpus to run; default corpus when absent
    seed: int                            # seed for the default corpus

    # Output
    reports: List[VerificationReport]    # one per case, in case order
    summary: Dict[str, Any]              # counts per status + "ok"

    # Logging
    notes: List[str]


# ---------------------------------------------------------------------------
# Node implementations
# ---------------------------------------------------------------------------


def build_corpus_node(state: VerifyState) -> Dict[str, Any]:
    """
    Use the supplied cases, or build the default corpus from the seed.
    """
    notes = list(state.get("notes", []))

    if "cases" in state and state["cases"] is not None:
        cases = list(state["cases"])
        notes.append(f"build_corpus: using {len(cases)} supplied cases.")
    else:
        seed = state.get("seed", config.CORPUS_SEED)
        cases = default_corpus(seed)
        notes.append(f"build_corpus: default corpus with {len(cases)} cases (seed={seed}).")

    return {"cases": cases, "reports": [], "notes": notes}


def run_cases_node(state: VerifyState) -> Dict[str, Any]:
    """
    Run every case in order. Cases are independent; they run sequentially so
    reports come back in corpus order.
    """
    notes = list(state.get("notes", []))
    cases = state.get("cases", []) or []

    reports: List[VerificationReport] = []
    for case in cases:
        report = run_case(case)
        reports.append(report)
        if report.status in (Status.FAIL, Status.SKIPPED):
            notes.append(
                f"run_cases: {case.label} -> {report.status.value} "
                f"(max deviation {report.max_deviation:.2e})"
            )

    notes.append(f"run_cases: ran {len(reports)} cases.")
    return {"reports": reports, "notes": notes}


def summarize_node(state: VerifyState) -> Dict[str, Any]:
    """
    Count outcomes and record the verdict.
    """
    notes = list(state.get("notes", []))
    reports = state.get("reports", []) or []
    summary = summarize(reports)

    notes.append(
        "summarize: "
        f"pass={summary[Status.PASS.value]}, fail={summary[Status.FAIL.value]}, "
        f"skipped={summary[Status.SKIPPED.value]}, "
        f"expected-negative={summary[Status.EXPECTED_NEGATIVE.value]}, ok={summary['ok']}"
    )
    return {"summary": summary, "notes": notes}


# ---------------------------------------------------------------------------
# Conditional routing
# ---------------------------------------------------------------------------


def route_after_build(state: VerifyState) -> str:
    """
    Returns:
      - "empty" -> nothing to run; go straight to summarize.
      - "run"   -> run the cases.
    """
    return "run" if state.get("cases") else "empty"


# ---------------------------------------------------------------------------
# Graph builder
# ---------------------------------------------------------------------------


def build_verify_graph():
    """
    Build the verification-suite LangGraph.

    Flow:

        build_corpus ──(empty)──▶ summarize ──▶ END
              │
              └── run ──▶ run_cases ──▶ summarize
    """
    graph = StateGraph(VerifyState)

    graph.add_node("build_corpus", build_corpus_node)
    graph.add_node("run_cases", run_cases_node)
    graph.add_node("summarize", summarize_node)

    graph.set_entry_point("build_corpus")

    graph.add_conditional_edges(
        "build_corpus",
        route_after_build,
        {
            "run": "run_cases",
            "empty": "summarize",
        },
    )
    graph.add_edge("run_cases", "summarize")
    graph.add_edge("summarize", END)

    return graph.compile()


_verify_graph = build_verify_graph()


def run_suite(
    corpus: Optional[List[VerificationCase]] = None,
    *,
    seed: int = config.CORPUS_SEED,
    verbose: bool = False,
) -> Tuple[List[VerificationReport], Dict[str, Any], List[str]]:
    """
    Run a corpus (default corpus when None) through the workflow.

    Returns:
        (reports, summary, notes)
    """
    initial: Dict[str, Any] = {"seed": seed, "notes": []}
    if corpus is not None:
        initial["cases"] = list(corpus)

    final_state = _verify_graph.invoke(initial)
    notes = final_state.get("notes", [])

    if verbose:
        for note in notes:
            print(note)

    return final_state.get("reports", []), final_state.get("summary", {}), notes
