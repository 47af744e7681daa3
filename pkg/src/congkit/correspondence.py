"""The map J ↦ ρ_J from ideals of F_p[S] to congruences of S, its partial inverse
α ↦ F[α], and executable checks of how it interacts with ∧, ∨ and ∘.

Composition of algebra congruences is realized as θ_I ∘ θ_J = θ_{I+J}; see
:func:`congkit.algebra.algebra_congruence_permutability_check` for the
exhaustive confirmation of that identity.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Sequence

from . import gf
from .algebra import Ideal, SemigroupAlgebra, enumerate_ideals, full_ideal, zero_ideal
from .errors import InternalInvariant, NotACongruence
from .relations import (
    DEFAULT_CONGRUENCE_GUARD,
    Partition,
    as_relation,
    compose,
    congruence_violation,
    enumerate_congruences,
    is_congruence,
    is_permutable,
    join,
    meet,
)
from .reports import CheckReport
from .semigroup import quotient


def rho(j: Ideal) -> Partition:
    """s ρ_J t iff s - t ∈ J."""
    algebra = j.algebra
    n = algebra.dim
    labels = list(range(n))
    for t in range(n):
        for s in range(t):
            if labels[s] != s:
                continue
            diff = [0] * n
            diff[s] += 1
            diff[t] -= 1
            if gf.member(diff, j.space):
                labels[t] = s
                break
    alpha = Partition.from_labels(labels)
    if not is_congruence(algebra.semigroup, alpha):
        raise InternalInvariant(f"ρ of {j.to_dict()} is not a congruence")
    return alpha


def _differences(algebra: SemigroupAlgebra, alpha: Partition):
    rows = []
    for block in alpha.classes():
        for t in block[1:]:
            v = [0] * algebra.dim
            v[block[0]] = 1
            v[t] = algebra.p - 1
            rows.append(v)
    return rows


def f_of_alpha_span(algebra: SemigroupAlgebra, alpha: Partition) -> Ideal:
    """F[α] as the span of {s - t : s α t}."""
    witness = congruence_violation(algebra.semigroup, alpha)
    if witness is not None:
        raise NotACongruence(witness)
    return Ideal(algebra, gf.rref(_differences(algebra, alpha), algebra.field, algebra.dim))


def f_of_alpha_kernel(algebra: SemigroupAlgebra, alpha: Partition) -> Ideal:
    """F[α] as the kernel of the linear extension of S → S/α."""
    q = quotient(algebra.semigroup, alpha)
    # row k of the map's matrix: indicator of the preimage of class k
    matrix = [[int(alpha.class_of[s] == k) for s in range(algebra.dim)] for k in range(q.n)]
    return Ideal(algebra, gf.nullspace(matrix, algebra.field, algebra.dim))


def f_of_alpha(algebra: SemigroupAlgebra, alpha: Partition) -> Ideal:
    ideal = f_of_alpha_span(algebra, alpha)
    if ideal != f_of_alpha_kernel(algebra, alpha):
        raise InternalInvariant(f"span and kernel constructions of F[α] disagree for {alpha}")
    return ideal


@dataclass
class PhiContext:
    algebra: SemigroupAlgebra
    ideals: list[Ideal]
    congruences: list[Partition]
    phi: list[int]
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {ideal.space.basis: k for k, ideal in enumerate(self.ideals)}

    def index_of(self, ideal: Ideal) -> int:
        return self._index[ideal.space.basis]

    def rho_of(self, k: int) -> Partition:
        return self.congruences[self.phi[k]]

    @property
    def semigroup(self):
        return self.algebra.semigroup

    def describe_ideal(self, k: int) -> dict:
        d = self.ideals[k].to_dict()
        d["index"] = k
        return d

    def describe_partition(self, alpha: Partition) -> str:
        return alpha.format(self.semigroup.names)

    def summary(self) -> str:
        return (f"{self.algebra.label}: {len(self.ideals)} ideals, "
                f"{len(self.congruences)} congruences")


def build_phi_context(algebra: SemigroupAlgebra, subspace_guard: int | None = None,
                      congruence_guard: int = DEFAULT_CONGRUENCE_GUARD) -> PhiContext:
    congruences = enumerate_congruences(algebra.semigroup, congruence_guard)
    ideals = enumerate_ideals(algebra, subspace_guard)
    where = {c: k for k, c in enumerate(congruences)}
    phi = []
    for ideal in ideals:
        alpha = rho(ideal)
        if alpha not in where:
            raise InternalInvariant(f"ρ produced {alpha}, missing from the congruence list")
        phi.append(where[alpha])
    ctx = PhiContext(algebra, ideals, congruences, phi)
    n = algebra.dim
    if set(phi) != set(range(len(congruences))):
        raise InternalInvariant("φ is not surjective onto Con(S)")
    if ctx.rho_of(ctx.index_of(zero_ideal(algebra))) != Partition.identity(n):
        raise InternalInvariant("φ({0}) != ι")
    if ctx.rho_of(ctx.index_of(full_ideal(algebra))) != Partition.universal(n):
        raise InternalInvariant("φ(F[S]) != ω")
    return ctx


def kernel_classes(ctx: PhiContext) -> list[list[int]]:
    """Ideal indices grouped by ρ-image, in order of first appearance."""
    groups: dict[int, list[int]] = {}
    for k, image in enumerate(ctx.phi):
        groups.setdefault(image, []).append(k)
    return list(groups.values())


def _report(name, ctx, witnesses, started, details=None):
    return CheckReport(
        check_name=name,
        verdict=not witnesses,
        witnesses=witnesses,
        context_summary=ctx.summary(),
        semigroup=ctx.semigroup.label,
        prime=ctx.algebra.p,
        timing_ms=round((time.perf_counter() - started) * 1000, 3),
        details=details or {},
    )


def _pairs(ctx):
    return combinations_with_replacement(range(len(ctx.ideals)), 2)


def check_meet_homomorphism(ctx: PhiContext) -> CheckReport:
    """ρ(I ∩ J) = ρ(I) ∧ ρ(J) for all ideal pairs."""
    started = time.perf_counter()
    witnesses = []
    for i, j in _pairs(ctx):
        k = ctx.index_of(ctx.ideals[i] & ctx.ideals[j])
        lhs, rhs = ctx.rho_of(k), meet(ctx.rho_of(i), ctx.rho_of(j))
        if lhs != rhs:
            witnesses.append({
                "I": ctx.describe_ideal(i), "J": ctx.describe_ideal(j),
                "rho_meet": ctx.describe_partition(lhs), "meet_of_rhos": ctx.describe_partition(rhs),
            })
    return _report("meet_homomorphism", ctx, witnesses, started)


def check_join_compatible_kernel(ctx: PhiContext) -> CheckReport:
    """ρ(I + J) = ρ(I) ∨ ρ(J) for all ideal pairs; every failing pair is listed."""
    started = time.perf_counter()
    witnesses = []
    for i, j in _pairs(ctx):
        k = ctx.index_of(ctx.ideals[i] + ctx.ideals[j])
        lhs, rhs = ctx.rho_of(k), join(ctx.rho_of(i), ctx.rho_of(j))
        if lhs != rhs:
            witnesses.append({
                "I": ctx.describe_ideal(i), "J": ctx.describe_ideal(j),
                "rho_sum": ctx.describe_partition(lhs), "join_of_rhos": ctx.describe_partition(rhs),
            })
    return _report("join_compatible_kernel", ctx, witnesses, started)


def check_circ_homomorphism(ctx: PhiContext) -> CheckReport:
    """ρ(I + J) = ρ(I) ∘ ρ(J) as relations on S, for all ordered ideal pairs."""
    started = time.perf_counter()
    rels = [as_relation(c) for c in ctx.congruences]
    witnesses = []
    m = len(ctx.ideals)
    for i in range(m):
        for j in range(m):
            k = ctx.index_of(ctx.ideals[i] + ctx.ideals[j])
            lhs = rels[ctx.phi[k]]
            rhs = compose(rels[ctx.phi[i]], rels[ctx.phi[j]])
            if lhs != rhs:
                x, y = min(set(lhs.pairs()) ^ set(rhs.pairs()))
                names = ctx.semigroup.names
                witnesses.append({
                    "I": ctx.describe_ideal(i), "J": ctx.describe_ideal(j),
                    "rho_sum": ctx.describe_partition(ctx.rho_of(k)),
                    "rho_I": ctx.describe_partition(ctx.rho_of(i)),
                    "rho_J": ctx.describe_partition(ctx.rho_of(j)),
                    "pair": [names[x], names[y]],
                    "in_rho_sum": (x, y) in lhs,
                    "in_composite": (x, y) in rhs,
                })
    permutable = is_permutable(ctx.semigroup).verdict
    join_ok = check_join_compatible_kernel(ctx).verdict
    details = {"permutable": permutable, "join_compatible_kernel": join_ok}
    return _report("circ_homomorphism", ctx, witnesses, started, details)


def congruence_label(s, alpha: Partition) -> str:
    """Short name for a congruence: ι, ω, α_L / α_R for rectangular-band projections,
    α_{C_k} for the subgroup-coset congruence of a cyclic group, else its class list."""
    n = s.n
    if alpha == Partition.identity(n):
        return "ι"
    if alpha == Partition.universal(n):
        return "ω"
    if s.label.startswith("RectangularBand"):
        left = Partition.from_labels([name.split(",")[0] for name in s.names])
        right = Partition.from_labels([name.split(",")[1] for name in s.names])
        if alpha == left:
            return "α_L"
        if alpha == right:
            return "α_R"
    if s.label.startswith("CyclicGroup"):
        size = alpha.class_of.count(alpha.class_of[0])
        return f"α_C{size}"
    return alpha.format(s.names)


def ideal_labels(ctx: PhiContext) -> list[str]:
    """Display names in the style of hand-drawn lattice figures.

    Order of preference: {0} and F[S]; F[α] for congruence images; J_L, J_R
    for rectangular-band projection kernels; intersections of two named
    ideals; Span(v) for one-dimensional ideals; otherwise a dimension tag.
    """
    algebra, s = ctx.algebra, ctx.semigroup
    labels: list[str | None] = [None] * len(ctx.ideals)
    labels[ctx.index_of(zero_ideal(algebra))] = "{0}"
    labels[ctx.index_of(full_ideal(algebra))] = "F[S]"
    for alpha in ctx.congruences:
        k = ctx.index_of(f_of_alpha(algebra, alpha))
        if labels[k] is None:
            name = congruence_label(s, alpha)
            labels[k] = {"α_L": "J_L", "α_R": "J_R"}.get(name, f"F[{name}]")
    named = [k for k, lab in enumerate(labels) if lab not in (None, "{0}", "F[S]")]
    for a in named:
        for b in named:
            if a < b:
                k = ctx.index_of(ctx.ideals[a] & ctx.ideals[b])
                if labels[k] is None:
                    labels[k] = "∩".join(sorted((labels[a], labels[b])))
    for k, ideal in enumerate(ctx.ideals):
        if labels[k] is None:
            if ideal.dim == 1:
                labels[k] = f"Span({algebra.format(ideal.basis[0])})"
            else:
                labels[k] = f"I{k}(dim {ideal.dim})"
    return labels


def check_all(ctx: PhiContext) -> list[CheckReport]:
    return [check_meet_homomorphism(ctx), check_join_compatible_kernel(ctx), check_circ_homomorphism(ctx)]


def ideals_by_spans(ctx: PhiContext, spans: Sequence[Sequence[Sequence[int]]]) -> list[int]:
    """Indices of the ideals spanned by each generating set (which must already be ideals)."""
    return [ctx.index_of(Ideal(ctx.algebra, gf.rref(rows, ctx.algebra.field, ctx.algebra.dim))) for rows in spans]
