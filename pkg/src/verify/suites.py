"""
Registry of named check suites.

A suite expands a grid into items; each item evaluates one identity at one
parameter point and yields a verdict.  Items built from printed statements
report disagreements as paper-discrepancy, items that check internal
consistency report them as fail.
"""
import logging
import random
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from src.algebra.liealg import (
    D, D1, D2, Degree, GenId, Kind, LieElt, bracket, bracket_lin, gen,
    generators_in_window,
)
from src.algebra.uea import (
    PBWMono, UElt, antipode0, counit0, delta0, identity, mu, tau_u, tensor_apply,
)
from src.models.context import Case, TwistContext
from src.models.results import Mismatch, Source, Verdict
from src.quantum.closedform import compare, mirror_transport_check, eta, gamma, rho
from src.quantum.compare import compare_values
from src.quantum.twist import check_cocycle, check_hopf, noncocommutativity_witness, twisted_antipode, twisted_delta
from src.utils.errors import UsageError
from src.verify import identities as ids
from src.verify.grids import Grid

logger = logging.getLogger(__name__)

# (verdict, detail) or (verdict, detail, oracle rendering)
Outcome = Union[Tuple[Verdict, Optional[str]], Tuple[Verdict, Optional[str], Optional[str]]]


@dataclass(frozen=True)
class Item:
    """One identity at one parameter point"""
    suite: str
    identity: str
    label: str
    source: Source
    run: Callable[[], Outcome]


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    identities: Tuple[str, ...]
    build: Callable[[Grid, int], List[Item]]


SUITES: Dict[str, Suite] = {}


def register(name: str, description: str, identities: Sequence[str]):
    """Add a suite builder to the registry, keeping registration order"""
    def decorator(fn: Callable[[Grid, int], List[Item]]):
        SUITES[name] = Suite(name, description, tuple(identities), fn)
        return fn
    return decorator


def get_suite(name: str) -> Suite:
    try:
        return SUITES[name]
    except KeyError:
        raise UsageError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}") from None


def build_items(name: str, grid: Grid, seed: int = 0) -> List[Item]:
    """All items of a suite, in a deterministic order"""
    suite = get_suite(name)
    items = suite.build(grid, seed)
    logger.debug(f"Suite {name}: {len(items)} items on grid {grid.name}")
    return items


# -- item helpers -------------------------------------------------------

def _verdict(source: Source, mismatch: Optional[Mismatch]) -> Outcome:
    if mismatch is None:
        return Verdict.PASS, None
    failed = Verdict.DISCREPANCY if source is Source.PRINTED else Verdict.FAIL
    return failed, mismatch.describe(), mismatch.oracle


def _sides(builder, *args) -> Callable[[], Outcome]:
    """Item body comparing the two sides of a printed identity"""
    def run() -> Outcome:
        lhs, rhs = builder(*args)
        return _verdict(Source.PRINTED, compare_values(lhs, rhs, oracle=lhs))
    return run


def _fmt(value) -> str:
    return str(value)


def _pair(p: Degree) -> str:
    return f"{p[0]},{p[1]}"


def _where(ctx: TwistContext) -> str:
    return f"case={ctx.case.value} n={_pair(ctx.n)}"


class _Collector:
    """Accumulates items for one suite"""

    def __init__(self, suite: str, source: Source = Source.PRINTED):
        self.suite = suite
        self.source = source
        self.items: List[Item] = []

    def add(self, identity: str, label: str, run: Callable[[], Outcome], source: Source = None):
        text = f"{identity} {label}".strip()
        self.items.append(Item(self.suite, identity, text, source or self.source, run))

    def sides(self, identity: str, label: str, builder, *args):
        self.add(identity, label, _sides(builder, *args))


def _contexts(grid: Grid, case: Case) -> List[TwistContext]:
    return grid.contexts(cases=(case,))


def _graded(kinds: Iterable[Kind], degrees: Iterable[Degree]) -> List[GenId]:
    out = []
    for kind in kinds:
        for m in degrees:
            g = gen(kind, m)
            if g is not None:
                out.append(g)
    return out


def _all_generators(grid: Grid, n: Degree) -> List[GenId]:
    return [D1, D2, D] + _graded((Kind.E, Kind.F, Kind.G, Kind.H), grid.degrees_for(n))


def _factorial_shifts(col: _Collector, grid: Grid, ctx: TwistContext, gens: Sequence[GenId], prefix: str):
    where = _where(ctx)
    for g in gens:
        for c in grid.c_values:
            for kind in ("falling", "rising"):
                for i in range(grid.max_power + 1):
                    col.sides(f"{prefix}-past-{kind}", f"{where} y={g} c={_fmt(c)} i={i}",
                              ids.shift_past_factorial, ctx, g, c, i, kind)
    for c in grid.c_values:
        for i in range(grid.max_power + 1):
            col.sides("E-past-falling", f"{where} c={_fmt(c)} i={i}",
                      ids.shift_past_factorial, ctx, ctx.E, c, i, "falling")


def _derivation_powers(col: _Collector, grid: Grid, ctx: TwistContext):
    where = _where(ctx)
    for g in (D1, D2):
        for j in range(grid.max_power + 1):
            col.sides("derivation-power", f"{where} y={g} j={j}",
                      ids.weighted_power, ctx, g, ids.derivation_weight(ctx, g), j)


def _e_powers(col: _Collector, grid: Grid, ctx: TwistContext):
    """Commutation with E^j for E = e_n, shared by T = x.d and T = d/2"""
    where = _where(ctx)
    degrees = grid.degrees_for(ctx.n)
    for j in range(grid.max_power + 1):
        col.sides("d-power", f"{where} j={j}", ids.weighted_power, ctx, D, 2, j)
        for m in degrees:
            label = f"{where} m={_pair(m)} j={j}"
            col.sides("e-central", label, ids.weighted_power, ctx, GenId(Kind.E, *m), 0, j)
            col.sides("f-past-power", label, ids.f_past_power, ctx, m, j)
            if m != (0, 0):
                col.sides("g-past-power", label, ids.g_past_power, ctx, m, j)
                col.sides("h-past-power", label, ids.h_past_power, ctx, m, j)
    _derivation_powers(col, grid, ctx)


def _e_twist_conjugation(col: _Collector, grid: Grid, ctx: TwistContext):
    where = _where(ctx)
    degrees = grid.degrees_for(ctx.n)
    for c in grid.c_values:
        at = f"{where} c={_fmt(c)}"
        for g in _all_generators(grid, ctx.n):
            col.sides("left-leg-shift", f"{at} y={g}", ids.left_leg_shift, ctx, g, c)
        for g in (D1, D2):
            col.sides("right-derivation", f"{at} y={g}", ids.right_derivation, ctx, g, c)
        col.sides("right-d", at, ids.right_d, ctx, c)
        for m in degrees:
            label = f"{at} m={_pair(m)}"
            col.sides("right-e", label, ids.right_central, ctx, GenId(Kind.E, *m), c)
            col.sides("right-f", label, ids.right_f, ctx, m, c)
            if m != (0, 0):
                col.sides("right-g", label, ids.right_g, ctx, m, c)
                col.sides("right-h", label, ids.right_h, ctx, m, c)


def _e_u_conjugation(col: _Collector, grid: Grid, ctx: TwistContext):
    where = _where(ctx)
    degrees = grid.degrees_for(ctx.n)
    for c in grid.c_values:
        at = f"{where} c={_fmt(c)}"
        for g in (D1, D2):
            col.sides("u-derivation", f"{at} y={g}", ids.u_derivation, ctx, g, c)
        col.sides("u-d", at, ids.u_d, ctx, c)
        for m in degrees:
            label = f"{at} m={_pair(m)}"
            col.sides("u-e", label, ids.u_shift, ctx, GenId(Kind.E, *m), c)
            col.sides("u-f", label, ids.u_f, ctx, m, c)
            if m != (0, 0):
                col.sides("u-g", label, ids.u_g, ctx, m, c)
                col.sides("u-h", label, ids.u_h, ctx, m, c)


# -- the Lie algebra and its enveloping algebra ----------------------------

@register("lie-axioms", "Antisymmetry and Jacobi identity of the bracket table",
          ("antisymmetry", "jacobi"))
def _lie_axioms(grid: Grid, seed: int) -> List[Item]:
    col = _Collector("lie-axioms", Source.ORACLE)
    gens = generators_in_window(grid.lie_radius)

    def antisymmetry(a: GenId) -> Outcome:
        for b in gens:
            if bracket(a, b) != -bracket(b, a):
                return Verdict.FAIL, f"[{a}, {b}] = {bracket(a, b)} but [{b}, {a}] = {bracket(b, a)}"
        return Verdict.PASS, None

    def jacobi(index: int) -> Outcome:
        a = gens[index]
        A = LieElt.of(a)
        for jb in range(index + 1, len(gens)):
            B = LieElt.of(gens[jb])
            for jc in range(jb + 1, len(gens)):
                C = LieElt.of(gens[jc])
                total = (bracket_lin(A, bracket_lin(B, C)) + bracket_lin(B, bracket_lin(C, A))
                         + bracket_lin(C, bracket_lin(A, B)))
                if total:
                    return Verdict.FAIL, f"Jacobi fails on ({a}, {gens[jb]}, {gens[jc]}): {total}"
        return Verdict.PASS, None

    for index, a in enumerate(gens):
        col.add("antisymmetry", f"radius={grid.lie_radius} a={a}", lambda a=a: antisymmetry(a))
        col.add("jacobi", f"radius={grid.lie_radius} a={a}", lambda index=index: jacobi(index))
    return col.items


def _random_elements(rng: random.Random, count: int, radius: int = 1) -> List[UElt]:
    """Short products of window generators with q-power coefficients"""
    gens = generators_in_window(radius)
    out = []
    for _ in range(count):
        x = UElt.one()
        for _ in range(rng.randint(1, 2)):
            x = x * UElt.gen(rng.choice(gens))
        out.append(x.scale(rng.choice((1, -1, 2))) + UElt.gen(rng.choice(gens)))
    return out


@register("enveloping-hopf", "Associativity and the undeformed Hopf structure on random samples",
          ("associativity", "coassociativity", "delta-multiplicative", "antipode-axiom",
           "antipode-antimultiplicative", "involution"))
def _enveloping_hopf(grid: Grid, seed: int) -> List[Item]:
    col = _Collector("enveloping-hopf", Source.ORACLE)
    rng = random.Random(seed)
    count = max(grid.pair_samples, 1)
    samples = _random_elements(rng, 3 * count)
    triples = [tuple(samples[3 * k:3 * k + 3]) for k in range(count)]

    def oracle(lhs, rhs) -> Outcome:
        return _verdict(Source.ORACLE, compare_values(lhs, rhs))

    def involution(x: UElt, y: UElt) -> Outcome:
        found = compare_values(tau_u(tau_u(x)), x) or compare_values(tau_u(x * y), tau_u(x) * tau_u(y))
        return _verdict(Source.ORACLE, found)

    for k, (x, y, z) in enumerate(triples):
        label = f"seed={seed} sample={k}"
        col.add("associativity", label, lambda x=x, y=y, z=z: oracle((x * y) * z, x * (y * z)))
        col.add("coassociativity", label, lambda x=x: oracle(
            tensor_apply((delta0, identity), delta0(x)), tensor_apply((identity, delta0), delta0(x))))
        col.add("delta-multiplicative", label, lambda x=x, y=y: oracle(
            delta0(x * y), delta0(x) * delta0(y)))
        col.add("antipode-axiom", label, lambda x=x: oracle(
            mu(tensor_apply((antipode0, identity), delta0(x))), UElt.scalar(counit0(x))))
        col.add("antipode-antimultiplicative", label, lambda x=x, y=y: oracle(
            antipode0(x * y), antipode0(y) * antipode0(x)))
        col.add("involution", label, lambda x=x, y=y: involution(x, y))
    return col.items


# -- factorials and twist families ----------------------------------------

@register("factorial-identities", "Products and alternating sums of rising and falling factorials",
          ("rising-split", "falling-split", "falling-as-rising", "mixed-binomial", "falling-binomial"))
def _factorial_identities(grid: Grid, seed: int) -> List[Item]:
    col = _Collector("factorial-identities")
    x = TwistContext(case=Case.G, n=grid.n_values[0], order=0).T
    top = grid.max_factorial
    for a in grid.a_values:
        for r in range(top + 1):
            col.sides("falling-as-rising", f"a={_fmt(a)} r={r}", ids.falling_as_rising, x, a, r)
            for s in range(top + 1 - r):
                label = f"a={_fmt(a)} r={r} s={s}"
                col.sides("rising-split", label, ids.rising_split, x, a, r, s)
                col.sides("falling-split", label, ids.falling_split, x, a, r, s)
        for d in grid.a_values:
            for m in range(top + 1):
                label = f"a={_fmt(a)} d={_fmt(d)} m={m}"
                col.sides("mixed-binomial", label, ids.mixed_binomial, x, a, d, m)
                col.sides("falling-binomial", label, ids.falling_binomial, x, a, d, m)
    return col.items


@register("twist-products", "Products, inverses and antipode images of the four twist families",
          ("twist-times-inverse", "u-times-u-inv", "u-from-twist", "u-inv-from-inverse",
           "twist-inverse", "u-inverse", "delta-falling"))
def _twist_products(grid: Grid, seed: int) -> List[Item]:
    col = _Collector("twist-products")
    for ctx in grid.contexts():
        where = _where(ctx)
        for c in grid.c_values:
            at = f"{where} c={_fmt(c)}"
            for d in grid.c_values:
                col.sides("twist-times-inverse", f"{at} d={_fmt(d)}", ids.twist_times_inverse, ctx, c, d)
                col.sides("u-times-u-inv", f"{at} d={_fmt(d)}", ids.u_times_u_inv, ctx, c, d)
            col.sides("u-from-twist", at, ids.u_from_twist, ctx, c)
            col.sides("u-inv-from-inverse", at, ids.u_inv_from_inverse, ctx, c)
            col.sides("twist-inverse", at, ids.twist_inverse, ctx, c)
            col.sides("u-inverse", at, ids.u_inverse, ctx, c)
            for m in range(grid.max_factorial + 1):
                col.sides("delta-falling", f"{at} m={m}", ids.delta_falling, ctx, c, m)
    return col.items


def _missing_g0(y: Kind, m: Degree, i: int) -> bool:
    """g_0 is not a generator, so the adjoint action has nothing to return there"""
    return y is Kind.G and m == (0, 0) and i == 0


@register("coefficients", "Commutation coefficients from the adjoint action against the printed tables",
          ("rho-gamma", "eta-gamma-swap"))
def _coefficients(grid: Grid, seed: int) -> List[Item]:
    col = _Collector("coefficients")
    swap = {Kind.E: Kind.F, Kind.F: Kind.E, Kind.G: Kind.H, Kind.H: Kind.G}

    def table_check(n, m, left, right, skip=lambda y, m, i: False) -> Outcome:
        for y in (Kind.E, Kind.F, Kind.G, Kind.H):
            for i in range(grid.max_power + 1):
                if skip(y, m, i):
                    continue
                a, b = left(i, m, n, y), right(i, m, n, y)
                if a != b:
                    return Verdict.DISCREPANCY, f"y={y.symbol} i={i}: {a} != {b}"
        return Verdict.PASS, None

    for n in grid.n_values:
        for m in grid.degrees_for(n):
            label = f"n={_pair(n)} m={_pair(m)}"
            col.add("rho-gamma", label, lambda n=n, m=m: table_check(n, m, rho, gamma, _missing_g0))
            col.add("eta-gamma-swap", label, lambda n=n, m=m: table_check(
                n, m, eta, lambda i, m_, n_, y: gamma(i, m_, n_, swap[y])))
    return col.items


# -- T = x.d, E = g_n ---------------------------------------------------

@register("g-commutation", "Commutation with factorials of T and powers of E = g_n",
          ("l-past-falling", "l-past-rising", "E-past-falling", "adjoint-power",
           "d-central", "h-central", "derivation-power"))
def _g_commutation(grid: Grid, seed: int) -> List[Item]:
    col = _Collector("g-commutation")
    for ctx in _contexts(grid, Case.G):
        where = _where(ctx)
        degrees = grid.degrees_for(ctx.n)
        _factorial_shifts(col, grid, ctx, _all_generators(grid, ctx.n), "l")
        for j in range(grid.max_power + 1):
            col.sides("d-central", f"{where} j={j}", ids.weighted_power, ctx, D, 0, j)
            for m in degrees:
                label = f"{where} m={_pair(m)} j={j}"
                for y in (Kind.F, Kind.E, Kind.G):
                    if gen(y, m) is not None:
                        col.sides("adjoint-power", f"{label} y={y.symbol}", ids.adjoint_power, ctx, y, m, j)
                if m != (0, 0):
                    col.sides("h-central", label, ids.weighted_power, ctx, GenId(Kind.H, *m), 0, j)
        _derivation_powers(col, grid, ctx)
    return col.items


@register("g-twist-conjugation", "Moving generators through the inverse twist, E = g_n",
          ("left-leg-shift", "right-derivation", "right-central", "right-adjoint"))
def _g_twist_conjugation(grid: Grid, seed: int) -> List[Item]:
    col = _Collector("g-twist-conjugation")
    for ctx in _contexts(grid, Case.G):
        where = _where(ctx)
        degrees = grid.degrees_for(ctx.n)
        for c in grid.c_values:
            at = f"{where} c={_fmt(c)}"
            for g in _all_generators(grid, ctx.n):
                col.sides("left-leg-shift", f"{at} y={g}", ids.left_leg_shift, ctx, g, c)
            for g in (D1, D2):
                col.sides("right-derivation", f"{at} y={g}", ids.right_derivation, ctx, g, c)
            col.sides("right-central", f"{at} y=d", ids.right_central, ctx, D, c)
            for m in degrees:
                if m != (0, 0):
                    col.sides("right-central", f"{at} y=h[{_pair(m)}]",
                              ids.right_central, ctx, GenId(Kind.H, *m), c)
                for y in (Kind.F, Kind.E, Kind.G):
                    if gen(y, m) is not None:
                        col.sides("right-adjoint", f"{at} y={y.symbol} m={_pair(m)}",
                                  ids.right_adjoint, ctx, y, m, c)
    return col.items


@register("g-u-conjugation", "Moving generators through the inverse antipode element, E = g_n",
          ("u-shift", "u-derivation", "u-adjoint"))
def _g_u_conjugation(grid: Grid, seed: int) -> List[Item]:
    col = _Collector("g-u-conjugation")
    for ctx in _contexts(grid, Case.G):
        where = _where(ctx)
        degrees = grid.degrees_for(ctx.n)
        for c in grid.c_values:
            at = f"{where} c={_fmt(c)}"
            col.sides("u-shift", f"{at} y=d", ids.u_shift, ctx, D, c)
            for g in (D1, D2):
                col.sides("u-derivation", f"{at} y={g}", ids.u_derivation, ctx, g, c)
            for m in degrees:
                if m != (0, 0):
                    col.sides("u-shift", f"{at} y=h[{_pair(m)}]", ids.u_shift, ctx, GenId(Kind.H, *m), c)
                for y in (Kind.F, Kind.E, Kind.G):
                    if gen(y, m) is not None:
                        col.sides("u-adjoint", f"{at} y={y.symbol} m={_pair(m)}",
                                  ids.u_adjoint, ctx, y, m, c)
    return col.items


# -- T = x.d, E = e_n ---------------------------------------------------

_E_POWERS = ("d-power", "e-central", "f-past-power", "g-past-power", "h-past-power", "derivation-power")
_E_TWIST = ("left-leg-shift", "right-derivation", "right-d", "right-e", "right-f", "right-g", "right-h")
_E_U = ("u-derivation", "u-d", "u-e", "u-f", "u-g", "u-h")


@register("e-commutation", "Commutation with factorials of T and powers of E = e_n",
          ("l-past-falling", "l-past-rising", "E-past-falling") + _E_POWERS)
def _e_commutation(grid: Grid, seed: int) -> List[Item]:
    col = _Collector("e-commutation")
    for ctx in _contexts(grid, Case.E):
        _factorial_shifts(col, grid, ctx, _all_generators(grid, ctx.n), "l")
        _e_powers(col, grid, ctx)
    return col.items


@register("e-twist-conjugation", "Moving generators through the inverse twist, E = e_n", _E_TWIST)
def _e_twist(grid: Grid, seed: int) -> List[Item]:
    col = _Collector("e-twist-conjugation")
    for ctx in _contexts(grid, Case.E):
        _e_twist_conjugation(col, grid, ctx)
    return col.items


@register("e-u-conjugation", "Moving generators through the inverse antipode element, E = e_n", _E_U)
def _e_u(grid: Grid, seed: int) -> List[Item]:
    col = _Collector("e-u-conjugation")
    for ctx in _contexts(grid, Case.E):
        _e_u_conjugation(col, grid, ctx)
    return col.items


# -- T = d/2, E = e_n ---------------------------------------------------

@register("cartan-commutation", "Commutation with factorials of T = d/2 and powers of E = e_n",
          ("y-past-falling", "y-past-rising", "E-past-falling") + _E_POWERS)
def _cartan_commutation(grid: Grid, seed: int) -> List[Item]:
    col = _Collector("cartan-commutation")
    for ctx in _contexts(grid, Case.D):
        _factorial_shifts(col, grid, ctx, _all_generators(grid, ctx.n), "y")
        _e_powers(col, grid, ctx)
    return col.items


@register("cartan-twist-conjugation", "Moving generators through the inverse twist, T = d/2", _E_TWIST)
def _cartan_twist(grid: Grid, seed: int) -> List[Item]:
    col = _Collector("cartan-twist-conjugation")
    for ctx in _contexts(grid, Case.D):
        _e_twist_conjugation(col, grid, ctx)
    return col.items


@register("cartan-u-conjugation", "Moving generators through the inverse antipode element, T = d/2", _E_U)
def _cartan_u(grid: Grid, seed: int) -> List[Item]:
    col = _Collector("cartan-u-conjugation")
    for ctx in _contexts(grid, Case.D):
        _e_u_conjugation(col, grid, ctx)
    return col.items


# -- twists and twisted Hopf structures -----------------------------------

@register("cocycle", "Cocycle and counit conditions for the twist in every context",
          ("cocycle", "counit-left", "counit-right"))
def _cocycle_suite(grid: Grid, seed: int) -> List[Item]:
    col = _Collector("cocycle", Source.ORACLE)
    reports = {}

    def axiom(ctx: TwistContext, name: str) -> Outcome:
        if ctx not in reports:
            reports[ctx] = check_cocycle(ctx)
        for check in reports[ctx].checks:
            if check.axiom == name:
                return _verdict(Source.ORACLE, check.mismatch)
        raise UsageError(f"no {name} check in the cocycle report")

    for ctx in grid.contexts():
        for name in ("cocycle", "counit-left", "counit-right"):
            col.add(name, ctx.describe(), lambda ctx=ctx, name=name: axiom(ctx, name))
    return col.items


def _hopf_outcome(checks) -> Outcome:
    failed = [c for c in checks if not c.passed]
    if not failed:
        return Verdict.PASS, None
    first = failed[0]
    return Verdict.FAIL, f"{first.axiom} on {first.sample}: {first.mismatch.describe()}"


def _sample_pairs(rng: random.Random, gens: Sequence[GenId], count: int) -> List[Tuple[GenId, GenId]]:
    if not gens:
        return []
    return [(rng.choice(gens), rng.choice(gens)) for _ in range(count)]


@register("hopf", "Hopf axioms of the twisted structure on window generators",
          ("hopf-axioms", "hopf-multiplicativity"))
def _hopf(grid: Grid, seed: int) -> List[Item]:
    col = _Collector("hopf", Source.ORACLE)
    rng = random.Random(seed)
    gens = generators_in_window(grid.hopf_radius)
    for ctx in grid.contexts():
        where = ctx.describe()
        for g in gens:
            col.add("hopf-axioms", f"{where} x={g}",
                    lambda ctx=ctx, g=g: _hopf_outcome(check_hopf(ctx, [UElt.gen(g)])))
        for a, b in _sample_pairs(rng, gens, grid.pair_samples):
            col.add("hopf-multiplicativity", f"{where} x={a} y={b}",
                    lambda ctx=ctx, a=a, b=b: _hopf_outcome(
                        check_hopf(ctx, [], pairs=[(UElt.gen(a), UElt.gen(b))])))
    return col.items


def _has_degree_derivation(s) -> bool:
    for coeff in s.coeffs:
        for key in coeff.keys():
            legs = (key,) if isinstance(key, PBWMono) else key
            for leg in legs:
                if any(g.kind in (Kind.D1, Kind.D2) for g in leg):
                    return True
    return False


@register("sl2-restriction", "The T = +-d/2 quantizations restricted to elements without d1, d2",
          ("restricted-hopf", "restricted-closure"))
def _sl2_restriction(grid: Grid, seed: int) -> List[Item]:
    col = _Collector("sl2-restriction", Source.ORACLE)
    rng = random.Random(seed)
    gens = [g for g in generators_in_window(grid.hopf_radius) if g.kind not in (Kind.D1, Kind.D2)]

    def closure(ctx: TwistContext, g: GenId) -> Outcome:
        x = UElt.gen(g)
        for name, value in (("delta", twisted_delta(ctx, x)), ("antipode", twisted_antipode(ctx, x))):
            if _has_degree_derivation(value):
                return Verdict.FAIL, f"{name}({g}) involves d1 or d2"
        return Verdict.PASS, None

    for ctx in grid.contexts(cases=(Case.D, Case.DF)):
        where = ctx.describe()
        for g in gens:
            col.add("restricted-hopf", f"{where} x={g}",
                    lambda ctx=ctx, g=g: _hopf_outcome(check_hopf(ctx, [UElt.gen(g)])))
            col.add("restricted-closure", f"{where} x={g}", lambda ctx=ctx, g=g: closure(ctx, g))
        for a, b in _sample_pairs(rng, gens, grid.pair_samples):
            col.add("restricted-hopf", f"{where} x={a} y={b}",
                    lambda ctx=ctx, a=a, b=b: _hopf_outcome(
                        check_hopf(ctx, [], pairs=[(UElt.gen(a), UElt.gen(b))])))
    return col.items


@register("noncocommutativity", "Each quantization has a generator whose coproduct is not flip-invariant",
          ("witness",))
def _noncocommutativity(grid: Grid, seed: int) -> List[Item]:
    col = _Collector("noncocommutativity")

    def witness(ctx: TwistContext) -> Outcome:
        found = noncocommutativity_witness(ctx, generators_in_window(1))
        if found is None:
            return Verdict.DISCREPANCY, "every window generator has a flip-invariant coproduct mod t^2"
        logger.debug(f"[{ctx.describe()}] noncocommutative on {found}")
        return Verdict.PASS, None

    for ctx in grid.contexts():
        col.add("witness", _where(ctx), lambda ctx=ctx: witness(ctx))
    return col.items


# -- closed forms ---------------------------------------------------------

def _closed_form_generators(grid: Grid, n: Degree) -> List[Optional[GenId]]:
    return [None] + _all_generators(grid, n)


def _quantization(case: Case):
    def build(grid: Grid, seed: int) -> List[Item]:
        name = f"{case.value}-quantization"
        col = _Collector(name)

        def run(ctx: TwistContext, g: Optional[GenId]) -> Outcome:
            report = compare(ctx, g)
            if report.verdict is Verdict.PASS:
                return Verdict.PASS, None
            return report.verdict, report.describe(), report.oracle

        for ctx in _contexts(grid, case):
            for g in _closed_form_generators(grid, ctx.n):
                col.add("closed-form", f"{_where(ctx)} x={'1' if g is None else g}",
                        lambda ctx=ctx, g=g: run(ctx, g))
        return col.items
    return build


for _case in Case:
    register(f"{_case.value}-quantization",
             f"Printed coproduct and antipode for case {_case.value} against twist conjugation",
             ("closed-form",))(_quantization(_case))


@register("involution-transport", "Each mirror case is the involution image of its base case",
          ("transport",))
def _involution_transport(grid: Grid, seed: int) -> List[Item]:
    col = _Collector("involution-transport")

    def run(ctx: TwistContext, g: Optional[GenId]) -> Outcome:
        report = mirror_transport_check(ctx, ctx.mirrored(), g)
        if report.verdict is Verdict.PASS:
            return Verdict.PASS, None
        return report.verdict, report.describe()

    for ctx in grid.contexts(cases=(Case.G, Case.E, Case.D)):
        for g in _closed_form_generators(grid, ctx.n):
            col.add("transport", f"{_where(ctx)}->{ctx.case.mirror.value} x={'1' if g is None else g}",
                    lambda ctx=ctx, g=g: run(ctx, g))
    return col.items
