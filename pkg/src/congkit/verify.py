"""Reproduction suite: one row per published claim, checked against frozen constants.

``GOLDEN`` holds every hand-derived value the rows compare with (spans in
element order, lattice shapes, kernel classes, permutability verdicts). The
rows never derive these values from the code under test, so corrupting an
entry flips the corresponding row to FAIL.
"""

from __future__ import annotations

import copy
import random
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Sequence

from . import gf
from .algebra import (
    Ideal,
    SemigroupAlgebra,
    algebra_congruence_permutability_check,
    enumerate_ideals,
    full_ideal,
    ideal_closure,
    ideal_lattice,
    is_ideal,
    zero_ideal,
)
from .correspondence import (
    build_phi_context,
    check_all,
    check_circ_homomorphism,
    check_join_compatible_kernel,
    check_meet_homomorphism,
    f_of_alpha,
    kernel_classes,
    rho,
)
from .errors import GuardExceeded
from .gf import PrimeField
from .relations import BinaryRelation, Partition, compose, is_permutable, join
from .semigroup import CayleyTable, build, parse_family

DEFAULT_PRIMES = (2, 3, 5)

GOLDEN = {
    "semilattice2": {
        "family": "semilattice2",
        "dims": [0, 1, 1, 2],
        "J_e": [[1, 0]],
        "J_e_minus_f": [[1, -1]],
        # cover pairs by ideal name; "0" and "F" are the bottom and top
        "edges": [["0", "J_e"], ["0", "J_e_minus_f"], ["J_e", "F"], ["J_e_minus_f", "F"]],
        "kernel_classes": [["0", "J_e"], ["J_e_minus_f", "F"]],
    },
    "c4_f2": {
        "family": "cyclic:4",
        "prime": 2,
        "dims": [0, 1, 2, 3, 4],
        "dim1_generator": [1, 1, 1, 1],
        "alpha_c2": [["1", "a²"], ["a", "a³"]],
    },
    "c4_f3": {
        "family": "cyclic:4",
        "prime": 3,
        "I": [[1, 0, 1, 0], [0, 1, 0, 1]],
        "J": [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]],
        "join_of_rhos": [["1", "a²"], ["a", "a³"]],
    },
    "two_element_zero": {
        "families": ["right-zero:2", "left-zero:2"],
        "dims": [0, 1, 2],
        "J_e_minus_f": [[1, -1]],
        "kernel_classes": [[0], [1, 2]],
    },
    "band22": {
        "family": "rect-band:2,2",
        "dims": [0, 1, 2, 2, 3, 4],
        "meet_generator": [1, -1, -1, 1],
        "alpha_L": [["(a1,b1)", "(a1,b2)"], ["(a2,b1)", "(a2,b2)"]],
        "alpha_R": [["(a1,b1)", "(a2,b1)"], ["(a1,b2)", "(a2,b2)"]],
        "dim_F_omega": 3,
        "edges": [["0", "JL&JR"], ["JL&JR", "JL"], ["JL&JR", "JR"], ["JL", "Fw"], ["JR", "Fw"], ["Fw", "F"]],
        "kernel_classes": [["0", "JL&JR"], ["JL"], ["JR"], ["Fw", "F"]],
    },
    "permutable": {
        "cyclic:4": True,
        "semilattice2": True,
        "left-zero:2": True,
        "right-zero:2": True,
        "rect-band:2,2": True,
        "chain-semilattice:3": False,
        "rect-band:2,3": False,
        "rect-band:3,2": False,
    },
    "corollaries": {
        "chain_sizes": [1, 2, 3, 4],
        "semilattice_bound": 2,
        "band_sides": [1, 2, 3],
        "band_max_order": 6,
        "band_bound": 2,
    },
}

BUILTIN_CATALOG = (
    "semilattice2",
    "chain-semilattice:1", "chain-semilattice:2", "chain-semilattice:3", "chain-semilattice:4",
    "cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4",
    "left-zero:2", "left-zero:3", "right-zero:2", "right-zero:3",
    "rect-band:2,2",
)


@dataclass
class RowResult:
    number: int | str
    title: str
    passed: bool
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0
    skipped: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {str(self.number):>2}  {self.title}  ({self.seconds:.2f}s)"
        if self.skipped:
            text += f"  skipped: {', '.join(self.skipped)}"
        for msg in self.failures[:5]:
            text += f"\n        - {msg}"
        return text


class _Row:
    """Collects failure messages for one row."""

    def __init__(self):
        self.failures: list[str] = []
        self.skipped: list[str] = []

    def expect(self, ok, msg):
        if not ok:
            self.failures.append(msg)
        return ok


def algebra_for(family: str, p: int) -> SemigroupAlgebra:
    return SemigroupAlgebra(build(parse_family(family)), PrimeField(p))


def span_ideal(algebra: SemigroupAlgebra, rows) -> Ideal:
    return Ideal(algebra, gf.rref(rows, algebra.field, algebra.dim))


def named_partition(s: CayleyTable, classes) -> Partition:
    return Partition.from_classes(s.n, [[s.index(x) for x in block] for block in classes])


def _edge_set(ideals, edges):
    return {(ideals[a].space.basis, ideals[b].space.basis) for a, b in edges}


def _named_edges(named: dict[str, Ideal], pairs):
    return {(named[a].space.basis, named[b].space.basis) for a, b in pairs}


def _named_classes(ctx, named, classes):
    return sorted(sorted(ctx.index_of(named[x]) for x in block) for block in classes)


def row_semilattice(golden, primes) -> _Row:
    row, g = _Row(), golden["semilattice2"]
    for p in primes:
        algebra = algebra_for(g["family"], p)
        ctx = build_phi_context(algebra)
        ideals = ctx.ideals
        row.expect([i.dim for i in ideals] == g["dims"], f"p={p}: dims {[i.dim for i in ideals]}")
        named = {"0": zero_ideal(algebra), "F": full_ideal(algebra),
                 "J_e": span_ideal(algebra, g["J_e"]), "J_e_minus_f": span_ideal(algebra, g["J_e_minus_f"])}
        if set(i.space.basis for i in ideals) != set(v.space.basis for v in named.values()):
            row.expect(False, f"p={p}: ideal set differs from {{0}}, J_e, J_e-f, F[S]")
            continue
        row.expect(_edge_set(ideals, ideal_lattice(ideals)) == _named_edges(named, g["edges"]),
                   f"p={p}: lattice is not the diamond")
        row.expect(sorted(kernel_classes(ctx)) == _named_classes(ctx, named, g["kernel_classes"]),
                   f"p={p}: ker φ classes {kernel_classes(ctx)}")
    return row


def row_c4_f2(golden, primes) -> _Row:
    row, g = _Row(), golden["c4_f2"]
    algebra = algebra_for(g["family"], g["prime"])
    s = algebra.semigroup
    ideals = enumerate_ideals(algebra)
    row.expect([i.dim for i in ideals] == g["dims"], f"dims {[i.dim for i in ideals]}")
    row.expect(sorted(ideal_lattice(ideals)) == [(k, k + 1) for k in range(len(ideals) - 1)], "not a chain")
    if len(ideals) != 5:
        return row
    row.expect(ideals[1] == ideal_closure(algebra, [g["dim1_generator"]]), "dim-1 ideal is not Span(1+a+a²+a³)")
    alpha = named_partition(s, g["alpha_c2"])
    row.expect(ideals[2] == f_of_alpha(algebra, alpha), "dim-2 ideal is not F[α_C2]")
    row.expect(ideals[3] == f_of_alpha(algebra, Partition.universal(s.n)), "dim-3 ideal is not F[ω]")
    return row


def row_c4_f3(golden, primes) -> _Row:
    row, g = _Row(), golden["c4_f3"]
    algebra = algebra_for(g["family"], g["prime"])
    s = algebra.semigroup
    i_, j_ = span_ideal(algebra, g["I"]), span_ideal(algebra, g["J"])
    row.expect(is_ideal(algebra, i_.space) and is_ideal(algebra, j_.space), "I or J is not an ideal")
    expected_join = named_partition(s, g["join_of_rhos"])
    got_join = join(rho(i_), rho(j_))
    row.expect(got_join == expected_join, f"ρ_I ∨ ρ_J = {got_join.format(s.names)}")
    row.expect(rho(i_ + j_) == Partition.universal(s.n), "ρ_(I+J) is not ω")
    ctx = build_phi_context(algebra)
    report = check_join_compatible_kernel(ctx)
    row.expect(not report.verdict, "join compatibility unexpectedly holds")
    pair = sorted([i_.space.as_lists(), j_.space.as_lists()])
    hit = [w for w in report.witnesses if sorted([w["I"]["basis"], w["J"]["basis"]]) == pair]
    row.expect(len(hit) == 1, "the (I, J) pair is not among the witnesses")
    if hit:
        w = hit[0]
        row.expect(w["rho_sum"] == Partition.universal(s.n).format(s.names)
                   and w["join_of_rhos"] == expected_join.format(s.names), f"witness content {w}")
    row.expect(not check_circ_homomorphism(ctx).verdict, "∘-homomorphism unexpectedly holds")
    return row


def row_c4_f2_checks(golden, primes) -> _Row:
    row, g = _Row(), golden["c4_f2"]
    ctx = build_phi_context(algebra_for(g["family"], g["prime"]))
    row.expect(check_join_compatible_kernel(ctx).verdict, "join compatibility fails")
    row.expect(check_circ_homomorphism(ctx).verdict, "∘-homomorphism fails")
    return row


def row_two_element_zero(golden, primes) -> _Row:
    row, g = _Row(), golden["two_element_zero"]
    for family in g["families"]:
        for p in primes:
            algebra = algebra_for(family, p)
            ctx = build_phi_context(algebra)
            ideals = ctx.ideals
            tag = f"{family} p={p}"
            row.expect([i.dim for i in ideals] == g["dims"], f"{tag}: dims {[i.dim for i in ideals]}")
            if len(ideals) != 3:
                continue
            row.expect(ideals[1] == span_ideal(algebra, g["J_e_minus_f"]), f"{tag}: middle ideal is not J_e-f")
            row.expect(ideals[1] == f_of_alpha(algebra, Partition.universal(2)), f"{tag}: J_e-f != F[ω]")
            row.expect(sorted(ideal_lattice(ideals)) == [(0, 1), (1, 2)], f"{tag}: not a 3-chain")
            row.expect(kernel_classes(ctx) == g["kernel_classes"], f"{tag}: ker φ classes {kernel_classes(ctx)}")
            for report in check_all(ctx):
                row.expect(report.verdict, f"{tag}: {report.check_name} fails")
    return row


def row_band22(golden, primes) -> _Row:
    row, g = _Row(), golden["band22"]
    for p in primes:
        algebra = algebra_for(g["family"], p)
        s = algebra.semigroup
        ctx = build_phi_context(algebra)
        ideals = ctx.ideals
        row.expect([i.dim for i in ideals] == g["dims"], f"p={p}: dims {[i.dim for i in ideals]}")
        j_l = f_of_alpha(algebra, named_partition(s, g["alpha_L"]))
        j_r = f_of_alpha(algebra, named_partition(s, g["alpha_R"]))
        f_omega = f_of_alpha(algebra, Partition.universal(s.n))
        row.expect(f_omega.dim == g["dim_F_omega"], f"p={p}: dim F[ω] = {f_omega.dim}")
        dim1 = [i for i in ideals if i.dim == 1]
        generated = ideal_closure(algebra, [g["meet_generator"]])
        row.expect(dim1 == [j_l & j_r] and generated == j_l & j_r,
                   f"p={p}: dim-1 ideals {[i.basis for i in dim1]} vs J_L∩J_R and its generator")
        row.expect(j_l + j_r == f_omega, f"p={p}: J_L + J_R != F[ω]")
        named = {"0": zero_ideal(algebra), "F": full_ideal(algebra), "JL": j_l, "JR": j_r,
                 "JL&JR": j_l & j_r, "Fw": f_omega}
        if set(i.space.basis for i in ideals) != set(v.space.basis for v in named.values()):
            row.expect(False, f"p={p}: ideal set differs from the six named ideals")
            continue
        row.expect(_edge_set(ideals, ideal_lattice(ideals)) == _named_edges(named, g["edges"]),
                   f"p={p}: cover relation differs from the six-node figure")
        row.expect(sorted(kernel_classes(ctx)) == _named_classes(ctx, named, g["kernel_classes"]),
                   f"p={p}: ker φ classes {kernel_classes(ctx)}")
        for report in check_all(ctx):
            row.expect(report.verdict, f"p={p}: {report.check_name} fails")
    return row


def row_permutability(golden, primes) -> _Row:
    row = _Row()
    for family, expected in golden["permutable"].items():
        report = is_permutable(build(parse_family(family)))
        row.expect(report.verdict == expected, f"{family}: permutable={report.verdict}, expected {expected}")
        if not expected:
            row.expect(bool(report.witnesses), f"{family}: no witness")
    return row


def row_corollaries(golden, primes) -> _Row:
    row, g = _Row(), golden["corollaries"]
    cells = [(f"chain-semilattice:{n}", n <= g["semilattice_bound"]) for n in g["chain_sizes"]]
    cells += [(f"rect-band:{l},{r}", l <= g["band_bound"] and r <= g["band_bound"])
              for l in g["band_sides"] for r in g["band_sides"] if l * r <= g["band_max_order"]]
    for family, expected in cells:
        for p in primes:
            try:
                ctx = build_phi_context(algebra_for(family, p))
            except GuardExceeded:
                row.skipped.append(f"{family}@F{p}")
                continue
            report = check_circ_homomorphism(ctx)
            row.expect(report.verdict == expected, f"{family} p={p}: circ={report.verdict}, expected {expected}")
            if not report.details["permutable"]:
                row.expect(not report.verdict, f"{family} p={p}: non-permutable yet homomorphic")
    return row


def row_properties(golden, primes, catalog: Sequence[str] = BUILTIN_CATALOG) -> _Row:
    row = _Row()
    for family in catalog:
        for p in primes:
            algebra = algebra_for(family, p)
            ctx = build_phi_context(algebra)
            tag = f"{family} p={p}"
            # (a) ρ(F[α]) = α
            for alpha in ctx.congruences:
                row.expect(rho(f_of_alpha(algebra, alpha)) == alpha, f"(a) {tag}: ρ(F[α]) != α")
            # (b) meet homomorphism
            row.expect(check_meet_homomorphism(ctx).verdict, f"(b) {tag}")
            # (c) dimension formula; (f) θ_I∘θ_J = θ_{I+J} on the carrier
            small = p**algebra.dim <= 10**4
            for a, b in product(ctx.ideals, repeat=2):
                row.expect((a + b).dim + (a & b).dim == a.dim + b.dim, f"(c) {tag}")
                if small:
                    row.expect(algebra_congruence_permutability_check(algebra, a, b), f"(f) {tag}")
    # (d) subspace counts against Gaussian binomials
    for n in range(1, 5):
        for p in primes:
            count = sum(1 for _ in gf.enumerate_subspaces(n, PrimeField(p)))
            row.expect(count == gf.subspace_count(n, p), f"(d) n={n} p={p}: {count}")
    # (e) associativity of relation composition: exhaustive on n ≤ 2, sampled on n ≤ 6
    for n in (1, 2):
        rels = [BinaryRelation(n, rows) for rows in product(range(1 << n), repeat=n)]
        for a, b, c in product(rels, repeat=3):
            row.expect(compose(compose(a, b), c) == compose(a, compose(b, c)), f"(e) n={n}")
    rng = random.Random(0)
    for _ in range(500):
        n = rng.randint(3, 6)
        a, b, c = (BinaryRelation(n, tuple(rng.getrandbits(n) for _ in range(n))) for _ in range(3))
        row.expect(compose(compose(a, b), c) == compose(a, compose(b, c)), f"(e) n={n}")
    return row


def row_custom_table(s: CayleyTable, primes) -> _Row:
    """Universal claims on a user-supplied semigroup."""
    row = _Row()
    permutable = is_permutable(s).verdict
    for p in primes:
        algebra = SemigroupAlgebra(s, PrimeField(p))
        try:
            ctx = build_phi_context(algebra)
        except GuardExceeded:
            row.skipped.append(f"F{p}")
            continue
        for alpha in ctx.congruences:
            row.expect(rho(f_of_alpha(algebra, alpha)) == alpha, f"p={p}: ρ(F[α]) != α")
        row.expect(check_meet_homomorphism(ctx).verdict, f"p={p}: meet homomorphism fails")
        circ = check_circ_homomorphism(ctx).verdict
        if permutable:
            row.expect(circ == check_join_compatible_kernel(ctx).verdict, f"p={p}: ∘-homomorphism and ∨-compatibility disagree")
        else:
            row.expect(not circ, f"p={p}: non-permutable yet homomorphic")
    return row


ROWS: list[tuple[int, str, Callable]] = [
    (1, "two-element semilattice: ideals {0}, J_e, J_e-f, F[S] form a diamond", row_semilattice),
    (2, "F2[C4]: five ideals in a chain matching the figure", row_c4_f2),
    (3, "F3[C4]: ker φ not ∨-compatible, witness (I, J); φ not a ∘-homomorphism", row_c4_f3),
    (4, "F2[C4]: ∨-compatible and ∘-homomorphism", row_c4_f2_checks),
    (5, "F[RightZero(2)], F[LeftZero(2)]: 3-chain, ker φ classes, all checks", row_two_element_zero),
    (6, "F[2x2 band]: six ideals, figure, ker φ classes, all checks", row_band22),
    (7, "permutability by brute force", row_permutability),
    (8, "∘-homomorphism iff |S| <= 2 (chains) / |L|,|R| <= 2 (bands)", row_corollaries),
    (9, "property suites (a)-(f)", row_properties),
]


def merge_golden(overrides: dict | None) -> dict:
    golden = copy.deepcopy(GOLDEN)
    for key, value in (overrides or {}).items():
        if isinstance(value, dict) and isinstance(golden.get(key), dict):
            golden[key].update(value)
        else:
            golden[key] = value
    return golden


def run_row(number, title, fn, *args) -> RowResult:
    started = time.perf_counter()
    try:
        row = fn(*args)
    except Exception as exc:  # a crash is a failed row, reported rather than raised
        row = _Row()
        row.failures.append(f"{type(exc).__name__}: {exc}")
    return RowResult(number, title, not row.failures, row.failures, time.perf_counter() - started, row.skipped)


def run_rows(primes: Iterable[int] = DEFAULT_PRIMES, golden: dict | None = None,
             only: Iterable[int] | None = None, extra_table: CayleyTable | None = None) -> list[RowResult]:
    primes = tuple(primes)
    golden = golden if golden is not None else GOLDEN
    wanted = set(only) if only is not None else None
    results = [run_row(num, title, fn, golden, primes)
               for num, title, fn in ROWS if wanted is None or num in wanted]
    if extra_table is not None:
        results.append(run_row("T", f"custom table {extra_table.label}: universal claims",
                               row_custom_table, extra_table, primes))
    return results
