import json

import networkx as nx
import pytest

from src.errors import ConvergenceFailure, ParameterOutOfRange, SizeMismatch, UnknownTheorem
from src.graphs.families import make_named
from src.graphs.graph import Graph
from src.linalg.eigen import Spectrum, eigen_sym
from src.linalg.matrices import l_alpha_matrix
from src.theorems import basic
from src.theorems.basic import spec_complete
from src.theorems.dispatch import THEOREM_IDS
from src.verification.cases import (
    CheckMode,
    Status,
    VerificationCase,
    alpha_grid,
    compare_spectra,
    kronecker_identity_deviation,
    run_case,
)
from src.verification.corpus import coalescence_cases, default_corpus
from src.verification.report import (
    build_report_dataframe,
    render_table,
    reports_to_dict,
    reports_to_json,
    summarize,
    theorem_summary,
)


# ---------- grids / cases ----------


def test_alpha_grid():
    grid = alpha_grid()
    assert grid == [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0]
    assert alpha_grid(3, 0.5, 1.0) == [0.5, 0.75, 1.0]
    with pytest.raises(ParameterOutOfRange):
        alpha_grid(1)


def test_case_validation_and_defaults():
    case = VerificationCase("twins", {"g": "k4"})
    assert case.mode is CheckMode.MULTIPLICITY_LOWER_BOUND
    assert case.label == "twins[g=k4]"
    assert VerificationCase("union", {"g": "k3", "h": "k2"}).mode is CheckMode.FULL_SPECTRUM

    with pytest.raises(UnknownTheorem):
        VerificationCase("wheel", {})
    with pytest.raises(ParameterOutOfRange):
        VerificationCase("complete", {"n": 3}, tolerance=0.0)
    with pytest.raises(ValueError):
        VerificationCase("complete", {"n": 3}, alphas=[0.5, 1.5])


# ---------- comparisons ----------


def test_compare_spectra():
    one = Spectrum.from_pairs([(1.0, 2)])
    assert compare_spectra(one, one) == (True, 0.0)

    noisy = Spectrum.from_values([1 + 5e-9, 1 - 5e-9], tol=1e-12)
    passed, deviation = compare_spectra(one, noisy, 1e-8)
    assert passed and deviation == pytest.approx(5e-9, rel=1e-3)

    oracle = eigen_sym(l_alpha_matrix(make_named("complete", 5), 0.3))
    assert compare_spectra(spec_complete(5, 0.3), oracle, 1e-9)[0]

    with pytest.raises(SizeMismatch):
        compare_spectra(one, Spectrum.from_pairs([(1.0, 3)]))


def test_kronecker_identities_hold():
    for alpha in (0.0, 0.35, 1.0):
        assert kronecker_identity_deviation(make_named("path", 3), make_named("cycle", 4), alpha) <= 1e-12


# ---------- run_case ----------


def test_union_case_passes_everywhere():
    report = run_case(VerificationCase("union", {"g": "k3", "h": "k2"}))
    assert report.status is Status.PASS
    assert len(report.outcomes) == 11
    assert all(o.status is Status.PASS for o in report.outcomes)
    assert report.max_deviation <= 1e-8


def test_nonnegativity_case():
    report = run_case(
        VerificationCase("nonnegativity", {"g": "pine5,3"}, alphas=[0.0, 0.5, 0.75, 1.0], tolerance=1e-10)
    )
    assert report.status is Status.PASS
    assert report.outcomes[0].status is Status.SKIPPED
    assert [o.status for o in report.outcomes[1:]] == [Status.PASS] * 3


def test_nonnegativity_needs_connected_graph():
    report = run_case(VerificationCase("nonnegativity", {"g": "e3"}, alphas=[0.5]))
    assert report.status is Status.SKIPPED
    assert "NotConnected" in report.outcomes[0].detail


def test_bipartite_equivalence_on_odd_cycle_is_expected_negative():
    report = run_case(VerificationCase("bipartite-equiv", {"g": "c5"}, alphas=[0.0]))
    (outcome,) = report.outcomes
    assert outcome.status is Status.EXPECTED_NEGATIVE
    assert outcome.deviation > 1e-3
    assert report.status is Status.EXPECTED_NEGATIVE
    assert not report.unexpected_failure


@pytest.mark.parametrize("token", ["p5", "c6", "k3,2", "s5"])
def test_bipartite_equivalence_on_bipartite_graphs(token):
    report = run_case(VerificationCase("bipartite-equiv", {"g": token}, tolerance=1e-9))
    assert report.status is Status.PASS


def test_hypothesis_violation_is_skipped():
    report = run_case(VerificationCase("join-regular", {"g": "p3", "h": "p3"}))
    assert report.status is Status.SKIPPED
    assert all("NotRegular" in o.detail for o in report.outcomes)
    assert not report.unexpected_failure


def test_construction_error_is_skipped():
    report = run_case(VerificationCase("pineapple", {"p": 2, "q": 1}))
    assert report.status is Status.SKIPPED
    assert "ParameterOutOfRange" in report.outcomes[0].detail


def test_family_case_skips_alpha_one_and_keeps_notes():
    report = run_case(VerificationCase("pineapple", {"p": 3, "q": 1}))
    assert report.status is Status.PASS
    assert report.outcomes[-1].status is Status.SKIPPED
    assert any("pineapple polynomial" in note for note in report.notes)


@pytest.mark.parametrize(
    "case",
    [
        VerificationCase("twins", {"g": "pine5,3"}),
        VerificationCase("quotient", {"g": "h5,2"}),
        VerificationCase("quotient", {"g": "p4", "blocks": [[0, 3], [1, 2]]}),
        VerificationCase("join-lifted", {"g": "p3", "h": "p2"}),
        VerificationCase("strong-subset", {"g": "p3", "h": "c4"}),
        VerificationCase("coalescence", {"g": "c3", "u": 0, "h": "c3", "v": 0}, alphas=[0.0, 0.25, 0.5, 0.75], tolerance=1e-6),
        VerificationCase("splitting", {"g": "c5"}, tolerance=1e-6),
        VerificationCase("kronecker", {"g": "k3", "h": "p2"}, tolerance=1e-12),
        VerificationCase("core-satellite", {"c": 3, "s": 2, "eta": 3}),
    ],
    ids=lambda c: c.label,
)
def test_cases_pass(case):
    assert run_case(case).status is Status.PASS


@pytest.mark.parametrize(
    "case, reason",
    [
        (VerificationCase("h-graph", {"n": 4, "l": 4}), "ParameterOutOfRange"),
        (VerificationCase("complete-bipartite", {"p": 2, "q": 3}), "ParameterOutOfRange"),
        (VerificationCase("quotient", {"g": "p4", "blocks": [[0, 1], [1, 2, 3]]}), "ParameterOutOfRange"),
        (VerificationCase("quotient", {"g": "p4", "blocks": [[0, 1], [2, 3]]}), "NotEquitable"),
        (VerificationCase("direct-subset", {"g": "e3", "h": "c3"}), "NotConnected"),
    ],
    ids=lambda v: v.label if isinstance(v, VerificationCase) else v,
)
def test_bad_inputs_are_skipped_not_failed(case, reason):
    report = run_case(case)
    assert report.status is Status.SKIPPED
    assert all(reason in o.detail for o in report.outcomes)
    assert summarize([report])["ok"] is True


def test_wrong_closed_form_is_a_failure(monkeypatch):
    real = basic.spec_complete

    def short(n, alpha):
        return Spectrum.from_pairs(list(real(n, alpha).entries)[:-1])

    monkeypatch.setattr(basic, "spec_complete", short)
    report = run_case(VerificationCase("complete", {"n": 4}, alphas=[0.3]))

    (outcome,) = report.outcomes
    assert outcome.status is Status.FAIL
    assert outcome.detail.startswith("SizeMismatch")
    assert report.unexpected_failure
    assert summarize([report])["ok"] is False


def test_kernel_error_is_a_failure(monkeypatch):
    def diverge(matrix):
        raise ConvergenceFailure("no convergence")

    monkeypatch.setattr("src.verification.cases.eigen_sym", diverge)
    report = run_case(VerificationCase("complete", {"n": 3}, alphas=[0.0, 0.5]))
    assert [o.status for o in report.outcomes] == [Status.FAIL, Status.FAIL]
    assert all(o.detail == "ConvergenceFailure: no convergence" for o in report.outcomes)
    assert report.max_deviation == float("inf")


def test_mode_without_matching_result_is_a_failure():
    report = run_case(VerificationCase("complete", {"n": 3}, alphas=[0.5], mode=CheckMode.POLYNOMIAL_IDENTITY))
    assert report.status is Status.FAIL
    assert "does not produce a polynomial" in report.outcomes[0].detail


def _trees_and_even_cycles():
    for n in range(2, 11):
        for tree in nx.nonisomorphic_trees(n):
            yield Graph.from_networkx(tree)
    for n in range(4, 11, 2):
        yield make_named("cycle", n)


def test_bipartite_equivalence_on_small_trees_and_even_cycles():
    graphs = list(_trees_and_even_cycles())
    assert len(graphs) == 200 + 4
    for g in graphs:
        report = run_case(VerificationCase("bipartite-equiv", {"g": g}, tolerance=1e-9))
        assert report.status is Status.PASS, report.to_dict()


# ---------- corpus ----------


def test_default_corpus_covers_every_theorem():
    corpus = default_corpus()
    assert {case.theorem for case in corpus} == set(THEOREM_IDS)
    assert [c.label for c in corpus] == [c.label for c in default_corpus()]


def test_coalescence_cases_are_seeded():
    first = coalescence_cases(5, seed=9)
    assert len(first) == 5
    assert [c.label for c in first] == [c.label for c in coalescence_cases(5, seed=9)]
    assert all(c.mode is CheckMode.POLYNOMIAL_IDENTITY for c in first)


# ---------- reports ----------


def _sample_reports():
    return [
        run_case(VerificationCase("complete", {"n": 3})),
        run_case(VerificationCase("join-regular", {"g": "p3", "h": "p3"})),
        run_case(VerificationCase("bipartite-equiv", {"g": "c5"}, alphas=[0.0])),
    ]


def test_summary_counts():
    summary = summarize(_sample_reports())
    assert summary["total"] == 3
    assert (summary["pass"], summary["skipped"], summary["expected-negative"], summary["fail"]) == (1, 1, 1, 0)
    assert summary["ok"] is True
    assert summarize([]) == {"total": 0, "pass": 0, "fail": 0, "skipped": 0, "expected-negative": 0, "ok": True}


def test_report_tables():
    reports = _sample_reports()
    df = build_report_dataframe(reports)
    assert list(df["status"]) == ["pass", "skipped", "expected-negative"]
    per_theorem = theorem_summary(df)
    assert list(per_theorem["theorem"]) == ["complete", "join-regular", "bipartite-equiv"]
    table = render_table(reports)
    assert "complete[n=3]" in table
    assert table.splitlines()[len(reports) + 2] == "per theorem:"
    assert render_table([]) == "(no cases)"


def test_report_json():
    reports = _sample_reports()
    parsed = json.loads(reports_to_json(reports))
    assert parsed == json.loads(json.dumps(reports_to_dict(reports)))
    assert parsed["summary"]["ok"] is True
    assert parsed["reports"][1]["status"] == "skipped"
    assert parsed["reports"][0]["case"]["alphas"][-1] == 1.0
