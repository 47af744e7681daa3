"""The semigroup algebra F_p[S] and its two-sided ideals."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from . import gf
from .errors import AlgebraMismatch, DimensionMismatch, GuardExceeded, InputError
from .gf import PrimeField, Subspace, Vector
from .relations import cover_relation
from .semigroup import CayleyTable

DEFAULT_CARRIER_GUARD = 10**4


@dataclass(frozen=True)
class SemigroupAlgebra:
    semigroup: CayleyTable
    field: PrimeField

    @property
    def dim(self) -> int:
        return self.semigroup.n

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def label(self) -> str:
        return f"{self.field}[{self.semigroup.label or 'S'}]"

    def basis_vector(self, i: int) -> Vector:
        return tuple(int(k == i) for k in range(self.dim))

    def zero(self) -> Vector:
        return (0,) * self.dim

    def element(self, coeffs: dict[str, int] | Sequence[int]) -> Vector:
        """Algebra element from a coordinate sequence or a {name: coefficient} map."""
        if isinstance(coeffs, dict):
            v = [0] * self.dim
            for name, c in coeffs.items():
                v[self.semigroup.index(name)] += c
            coeffs = v
        if len(coeffs) != self.dim:
            raise DimensionMismatch(f"{len(coeffs)} coordinates for an algebra of dimension {self.dim}")
        return self.field.vector(coeffs)

    @cached_property
    def left_maps(self) -> tuple[tuple[int, ...], ...]:
        # left_maps[s][i] = index of s·s_i
        return tuple(tuple(row) for row in self.semigroup.table)

    @cached_property
    def right_maps(self) -> tuple[tuple[int, ...], ...]:
        t = self.semigroup.table
        return tuple(tuple(t[i][s] for i in range(self.dim)) for s in range(self.dim))

    def left_mul(self, s: int, v: Sequence[int]) -> Vector:
        """s·v for a semigroup element s."""
        out = [0] * self.dim
        for i, c in enumerate(v):
            if c:
                out[self.left_maps[s][i]] += c
        return tuple(x % self.p for x in out)

    def right_mul(self, v: Sequence[int], s: int) -> Vector:
        out = [0] * self.dim
        for i, c in enumerate(v):
            if c:
                out[self.right_maps[s][i]] += c
        return tuple(x % self.p for x in out)

    def format(self, v: Sequence[int]) -> str:
        """Human-readable element, e.g. ``1+a+a²+a³`` or ``(a1,b1)-(a1,b2)``."""
        parts = []
        for c, name in zip(v, self.semigroup.names):
            c %= self.p
            if not c:
                continue
            if c == 1:
                parts.append(("+", name))
            elif c == self.p - 1:
                parts.append(("-", name))
            else:
                parts.append(("+", f"{c}{name}"))
        if not parts:
            return "0"
        text = "".join(sign + term for sign, term in parts)
        return text[1:] if text[0] == "+" else text


def _check_same(x, y, algebra):
    if len(x) != algebra.dim or len(y) != algebra.dim:
        raise AlgebraMismatch(f"elements must have {algebra.dim} coordinates")


def multiply(algebra: SemigroupAlgebra, x: Sequence[int], y: Sequence[int]) -> Vector:
    """Bilinear extension of the Cayley table."""
    _check_same(x, y, algebra)
    out = [0] * algebra.dim
    t = algebra.semigroup.table
    for i, a in enumerate(x):
        if a:
            row = t[i]
            for j, b in enumerate(y):
                if b:
                    out[row[j]] += a * b
    return tuple(c % algebra.p for c in out)


@dataclass(frozen=True)
class Ideal:
    algebra: SemigroupAlgebra
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self):
        return self.space.basis

    @property
    def sort_key(self):
        return self.space.sort_key

    def __contains__(self, v) -> bool:
        return gf.member(v, self.space)

    def __le__(self, other: Ideal) -> bool:
        return gf.is_subspace(self.space, other.space)

    def __add__(self, other: Ideal) -> Ideal:
        return Ideal(self.algebra, gf.sum_spaces(self.space, other.space))

    def __and__(self, other: Ideal) -> Ideal:
        return Ideal(self.algebra, gf.intersect(self.space, other.space))

    def to_dict(self) -> dict:
        return {"dim": self.dim, "basis": self.space.as_lists(),
                "span": [self.algebra.format(r) for r in self.basis]}


def ideal_violation(algebra: SemigroupAlgebra, u: Subspace):
    """First (s, basis_row, side, product) leaving ``u``, or None when u is a two-sided ideal."""
    if u.ambient_dim != algebra.dim:
        raise DimensionMismatch(f"subspace of F^{u.ambient_dim} in an algebra of dimension {algebra.dim}")
    p = algebra.p
    pivots, basis = u.pivots, u.basis
    for v in basis:
        support = [(i, c) for i, c in enumerate(v) if c]
        for side, maps in (("left", algebra.left_maps), ("right", algebra.right_maps)):
            for s in range(algebra.dim):
                m = maps[s]
                w = [0] * algebra.dim
                for i, c in support:
                    w[m[i]] += c
                # inline membership: clear pivot columns, then test for zero
                w = [x % p for x in w]
                for c, row in zip(pivots, basis):
                    f = w[c]
                    if f:
                        w = [(x - f * y) % p for x, y in zip(w, row)]
                if any(w):
                    product_ = algebra.left_mul(s, v) if side == "left" else algebra.right_mul(v, s)
                    return (s, v, side, product_)
    return None


def is_ideal(algebra: SemigroupAlgebra, u: Subspace) -> bool:
    return ideal_violation(algebra, u) is None


def ideal_closure(algebra: SemigroupAlgebra, generators: Iterable[Sequence[int]]) -> Ideal:
    """Smallest two-sided ideal containing the generators.

    Worklist closure: every vector that enlarges the span has its products
    with each s ∈ S queued on both sides. Multiplying by the basis S suffices
    since S spans F[S].
    """
    p, n = algebra.p, algebra.dim
    echelon: dict[int, list[int]] = {}  # pivot column -> row with leading 1
    queue = [list(g) for g in generators]
    for g in queue:
        if len(g) != n:
            raise DimensionMismatch(f"generator of length {len(g)} in an algebra of dimension {n}")
    while queue:
        w = [x % p for x in queue.pop()]
        for c in sorted(echelon):
            f = w[c]
            if f:
                row = echelon[c]
                w = [(x - f * y) % p for x, y in zip(w, row)]
        lead = next((c for c, x in enumerate(w) if x), None)
        if lead is None:
            continue
        inv = pow(w[lead], p - 2, p)
        echelon[lead] = [(x * inv) % p for x in w]
        if len(echelon) == n:
            break
        for t in range(n):
            queue.append(list(algebra.left_mul(t, w)))
            queue.append(list(algebra.right_mul(w, t)))
    return Ideal(algebra, gf.rref(echelon.values(), algebra.field, n))


def zero_ideal(algebra: SemigroupAlgebra) -> Ideal:
    return Ideal(algebra, gf.zero_space(algebra.field, algebra.dim))


def full_ideal(algebra: SemigroupAlgebra) -> Ideal:
    return Ideal(algebra, gf.full_space(algebra.field, algebra.dim))


def enumerate_ideals(algebra: SemigroupAlgebra, guard: int | None = None, method: str = "auto") -> list[Ideal]:
    """All two-sided ideals, sorted by (dimension, flattened basis).

    ``method="filter"`` runs every subspace through :func:`is_ideal`.
    ``method="closure"`` takes the principal ideal of every nonzero vector
    (up to scalars) and closes the set under sums; every ideal is the sum of
    the principal ideals of its elements, so both give the same list.
    ``"auto"`` filters when the subspace count is within ``guard`` and
    otherwise falls back to closure, which needs p**dim within the vector guard.
    """
    guard = gf.subspace_guard() if guard is None else guard
    n, field = algebra.dim, algebra.field
    if method == "auto":
        method = "filter" if gf.subspace_count(n, field.p) <= guard else "closure"
    if method == "filter":
        found = [Ideal(algebra, u) for u in gf.enumerate_subspaces(n, field, guard) if is_ideal(algebra, u)]
    elif method == "closure":
        found = _ideals_by_closure(algebra)
    else:
        raise InputError(f"unknown ideal enumeration method {method!r}")
    return sorted(found, key=lambda ideal: ideal.sort_key)


def _ideals_by_closure(algebra):
    n, field = algebra.dim, algebra.field
    if field.p**n > gf.DEFAULT_VECTOR_GUARD:
        raise GuardExceeded(f"vectors of {field}^{n}", field.p**n, gf.DEFAULT_VECTOR_GUARD)
    principal = {}
    for v in gf.all_vectors(n, field):
        lead = next((c for c in v if c), 0)
        if lead != 1:  # one representative per line
            continue
        ideal = ideal_closure(algebra, [v])
        principal.setdefault(ideal.space.basis, ideal)
    found = {zero_ideal(algebra).space.basis: zero_ideal(algebra)}
    found.update(principal)
    frontier = list(found.values())
    while frontier:
        new = []
        for a in frontier:
            for b in principal.values():
                c = a + b
                if c.space.basis not in found:
                    found[c.space.basis] = c
                    new.append(c)
        frontier = new
    return list(found.values())


def ideal_lattice(ideals: Sequence[Ideal]) -> list[tuple[int, int]]:
    """Hasse edges (i, j) of the inclusion order: ideals[i] ⊂ ideals[j], nothing in between."""
    return cover_relation(ideals, lambda a, b: a <= b)


def coset_labels(algebra: SemigroupAlgebra, u: Subspace) -> np.ndarray:
    """For every carrier vector (base-p integer encoding, first coordinate most significant)
    the encoding of its canonical representative modulo ``u``."""
    p, n = algebra.p, algebra.dim
    carrier = np.array(list(product(range(p), repeat=n)), dtype=np.int64).reshape(-1, n)
    reduced = carrier.copy()
    for c, row in zip(u.pivots, u.basis):
        reduced = (reduced - reduced[:, c : c + 1] * np.array(row, dtype=np.int64)) % p
    weights = p ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return reduced @ weights


def algebra_congruence_permutability_check(algebra: SemigroupAlgebra, i: Ideal, j: Ideal,
                                           guard: int = DEFAULT_CARRIER_GUARD) -> bool:
    """Exhaustively confirm θ_I ∘ θ_J = θ_{I+J} = θ_J ∘ θ_I on the finite carrier of F_p[S].

    θ_U relates x, y iff x - y ∈ U. Each θ is materialized as the coset label
    of every carrier element. Since x (θ_I∘θ_J) y iff the θ_I-class of x meets
    the θ_J-class of y, the composite is evaluated class-pair by class-pair
    from the incidence table built by scanning every carrier element z.
    """
    size = algebra.p**algebra.dim
    if size > guard:
        raise GuardExceeded(f"carrier of {algebra.label}", size, guard)
    li = coset_labels(algebra, i.space)
    lj = coset_labels(algebra, j.space)
    lij = coset_labels(algebra, gf.sum_spaces(i.space, j.space))
    ci, inv_i = np.unique(li, return_inverse=True)
    cj, inv_j = np.unique(lj, return_inverse=True)
    inv_i, inv_j = inv_i.ravel(), inv_j.ravel()
    meets = np.zeros((len(ci), len(cj)), dtype=bool)
    meets[inv_i, inv_j] = True
    # θ_{I+J}-label of each θ_I-class and θ_J-class (well defined: I, J ⊆ I+J)
    sum_of_i = np.empty(len(ci), dtype=np.int64)
    sum_of_i[inv_i] = lij
    sum_of_j = np.empty(len(cj), dtype=np.int64)
    sum_of_j[inv_j] = lij
    expected = sum_of_i[:, None] == sum_of_j[None, :]
    # θ_J∘θ_I is the converse of θ_I∘θ_J, and θ_{I+J} is symmetric, so one
    # comparison settles both equalities
    return bool(np.array_equal(meets, expected))
