"""
Tests for grids, the suite registry and the runner
"""
import pytest
from pydantic import ValidationError

from config.settings import settings
from src.algebra.uea import UElt
from src.models.context import Case
from src.models.results import CheckResult, Summary, Verdict
from src.quantum.closedform import compare
from src.quantum.compare import render_value
from src.quantum.twist import twisted_antipode, twisted_delta
from src.utils.errors import UsageError
from src.verify import GRIDS, SUITES, Grid, SuiteRunner, build_items, get_grid, run_all, run_suite
from src.verify.suites import _closed_form_generators

LIGHT_SUITES = [
    "lie-axioms",
    "enveloping-hopf",
    "factorial-identities",
    "twist-products",
    "coefficients",
    "noncocommutativity",
]


def test_every_identity_has_items(quick_grid):
    for name, suite in SUITES.items():
        items = build_items(name, quick_grid, seed=0)
        covered = {item.identity for item in items}
        assert set(suite.identities) <= covered, (name, set(suite.identities) - covered)
        assert all(item.suite == name for item in items)


def test_every_quantization_has_a_suite():
    for case in ("g", "e", "d", "h", "f", "df"):
        assert f"{case}-quantization" in SUITES
    for name in ("cocycle", "hopf", "sl2-restriction", "involution-transport"):
        assert name in SUITES


def test_unknown_names():
    with pytest.raises(UsageError):
        build_items("no-such-suite", GRIDS["quick"])
    with pytest.raises(UsageError):
        get_grid("huge")
    with pytest.raises(UsageError):
        SuiteRunner(GRIDS["quick"]).run_all(["lie-axioms", "no-such-suite"])


def test_grid_validation():
    with pytest.raises(ValidationError):
        Grid(name="bad", m_values=((0, 0),), n_values=((0, 0),), c_values=(0,), a_values=(0,))
    with pytest.raises(ValidationError):
        Grid(name="bad", m_values=((0, 0),), n_values=((1, 1),), c_values=(0,), a_values=(0,),
             order=settings.MAX_ORDER + 1)
    assert get_grid("quick", order=1).order == 1
    quick = get_grid("quick")
    assert quick.degrees_for((1, 1)) == list(quick.m_values)
    assert quick.degrees_for((0, 1)) == list(quick.m_values) + [(0, -1)]


@pytest.mark.parametrize("name", LIGHT_SUITES)
def test_light_suites_have_no_failures(name, quick_grid):
    results = run_suite(name, grid=quick_grid)
    assert results
    failures = [r for r in results if r.verdict is Verdict.FAIL]
    assert not failures, [f"{r.item}: {r.detail}" for r in failures]


def test_cocycle_suite_passes(quick_grid):
    results = run_suite("cocycle", grid=quick_grid)
    assert {r.verdict for r in results} == {Verdict.PASS}
    assert len(results) == 3 * len(quick_grid.contexts())


def test_order_zero_degenerates_to_the_undeformed_structure():
    results = run_suite("cocycle", grid=GRIDS["quick"], order=0)
    assert all(r.passed for r in results)


def test_runs_are_deterministic(quick_grid):
    first = [r.key() for r in run_suite("enveloping-hopf", grid=quick_grid, seed=7)]
    second = [r.key() for r in run_suite("enveloping-hopf", grid=quick_grid, seed=7)]
    assert first == second


def test_worker_pool_keeps_registry_order(quick_grid):
    serial = [r.key() for r in run_suite("coefficients", grid=quick_grid, workers=1)]
    parallel = [r.key() for r in run_suite("coefficients", grid=quick_grid, workers=2)]
    assert serial == parallel


def test_mutated_structure_constant_is_detected(mutated_exponent, quick_grid):
    results, summary = run_all(grid=quick_grid, names=["lie-axioms"])
    assert summary.counts[Verdict.FAIL.value] > 0
    assert summary.exit_code == 1


def test_summary_counts():
    results = [
        CheckResult(suite="a", item="x", verdict=Verdict.PASS),
        CheckResult(suite="a", item="y", verdict=Verdict.DISCREPANCY, detail="t^1"),
        CheckResult(suite="b", item="z", verdict=Verdict.FAIL, detail="t^0"),
    ]
    summary = Summary.from_results(results)
    assert summary.total == 3
    assert summary.counts == {"pass": 1, "fail": 1, "paper-discrepancy": 1}
    assert summary.per_suite["a"]["paper-discrepancy"] == 1
    assert [r.item for r in summary.failures] == ["z"]
    assert summary.exit_code == 1
    assert Summary.from_results(results[:2]).exit_code == 0


def test_adjoint_coefficients_match_the_printed_table(quick_grid):
    results = [r for r in run_suite("coefficients", grid=quick_grid) if r.item.startswith("rho-gamma")]
    assert results
    assert {r.verdict for r in results} == {Verdict.PASS}, [r.detail for r in results if not r.passed]


def test_discrepancies_carry_the_oracle_value(quick_grid):
    results = {r.item: r for r in run_suite("e-quantization", grid=quick_grid)}
    reports = []
    for ctx in quick_grid.contexts(cases=(Case.E,)):
        for g in _closed_form_generators(quick_grid, ctx.n):
            label = f"closed-form case=e n={ctx.n[0]},{ctx.n[1]} x={'1' if g is None else g}"
            reports.append((results[label], compare(ctx, g), ctx, g))

    found = [(result, report, ctx, g) for result, report, ctx, g in reports
             if result.verdict is Verdict.DISCREPANCY]
    assert found
    for result, report, ctx, g in found:
        assert result.oracle
        assert result.oracle == report.oracle
        element = UElt.gen(g) if g is not None else UElt.one()
        oracle = twisted_antipode(ctx, element) if report.map == "antipode" else twisted_delta(ctx, element)
        assert result.oracle == render_value(oracle)
        assert result.to_dict()["oracle"] == result.oracle
    for result, _, _, _ in reports:
        if result.passed:
            assert result.oracle is None


# Every displayed statement of the source, by what it asserts, with the
# (suite, identity) pairs that check it.
STATEMENT_MANIFEST = {
    "bracket table is a Lie bracket": [("lie-axioms", "antisymmetry"), ("lie-axioms", "jacobi")],
    "undeformed enveloping Hopf structure": [
        ("enveloping-hopf", i) for i in ("associativity", "coassociativity", "delta-multiplicative",
                                          "antipode-axiom", "antipode-antimultiplicative", "involution")],
    "rising and falling factorial products": [
        ("factorial-identities", i) for i in ("rising-split", "falling-split", "falling-as-rising")],
    "alternating factorial sums": [
        ("factorial-identities", "mixed-binomial"), ("factorial-identities", "falling-binomial")],
    "twist is a counital 2-cocycle": [("cocycle", i) for i in ("cocycle", "counit-left", "counit-right")],
    "twisted structure is a Hopf algebra": [("hopf", "hopf-axioms"), ("hopf", "hopf-multiplicativity")],
    "products and images of the twist families": [
        ("twist-products", i) for i in ("twist-times-inverse", "u-times-u-inv", "u-from-twist",
                                         "u-inv-from-inverse", "twist-inverse", "u-inverse",
                                         "delta-falling")],
    "commutation with E = g_n": [
        ("g-commutation", i) for i in ("l-past-falling", "l-past-rising", "E-past-falling", "adjoint-power",
                                        "d-central", "h-central", "derivation-power")],
    "inverse twist conjugation with E = g_n": [
        ("g-twist-conjugation", i) for i in ("left-leg-shift", "right-derivation", "right-central",
                                              "right-adjoint")],
    "antipode element conjugation with E = g_n": [
        ("g-u-conjugation", i) for i in ("u-shift", "u-derivation", "u-adjoint")],
    "commutation with E = e_n": [
        ("e-commutation", i) for i in ("l-past-falling", "l-past-rising", "E-past-falling", "d-power",
                                        "e-central", "f-past-power", "g-past-power", "h-past-power",
                                        "derivation-power")],
    "inverse twist conjugation with E = e_n": [
        ("e-twist-conjugation", i) for i in ("left-leg-shift", "right-derivation", "right-d", "right-e",
                                              "right-f", "right-g", "right-h")],
    "antipode element conjugation with E = e_n": [
        ("e-u-conjugation", i) for i in ("u-derivation", "u-d", "u-e", "u-f", "u-g", "u-h")],
    "commutation with T = d/2": [
        ("cartan-commutation", i) for i in ("y-past-falling", "y-past-rising", "E-past-falling", "d-power",
                                             "e-central", "f-past-power", "g-past-power", "h-past-power",
                                             "derivation-power")],
    "inverse twist conjugation with T = d/2": [
        ("cartan-twist-conjugation", i) for i in ("left-leg-shift", "right-derivation", "right-d", "right-e",
                                                   "right-f", "right-g", "right-h")],
    "antipode element conjugation with T = d/2": [
        ("cartan-u-conjugation", i) for i in ("u-derivation", "u-d", "u-e", "u-f", "u-g", "u-h")],
    "printed coefficient tables": [("coefficients", "rho-gamma"), ("coefficients", "eta-gamma-swap")],
    "closed forms of the three base quantizations": [
        ("g-quantization", "closed-form"), ("e-quantization", "closed-form"), ("d-quantization", "closed-form")],
    "closed forms of the three mirror quantizations": [
        ("h-quantization", "closed-form"), ("f-quantization", "closed-form"), ("df-quantization", "closed-form")],
    "mirror cases are involution images": [("involution-transport", "transport")],
    "restriction to elements without d1, d2": [
        ("sl2-restriction", "restricted-hopf"), ("sl2-restriction", "restricted-closure")],
    "quantizations are not cocommutative": [("noncocommutativity", "witness")],
}


def test_statement_manifest_is_covered():
    default = get_grid("default")
    built = {}
    for statement, pairs in STATEMENT_MANIFEST.items():
        assert pairs, statement
        for suite, identity in pairs:
            assert suite in SUITES, (statement, suite)
            assert identity in SUITES[suite].identities, (statement, suite, identity)
            if suite not in built:
                built[suite] = {item.identity for item in build_items(suite, default, seed=0)}
            assert identity in built[suite], (statement, suite, identity)


def test_every_registered_identity_is_in_the_manifest():
    claimed = {pair for pairs in STATEMENT_MANIFEST.values() for pair in pairs}
    registered = {(name, identity) for name, suite in SUITES.items() for identity in suite.identities}
    assert registered == claimed, (registered - claimed, claimed - registered)
