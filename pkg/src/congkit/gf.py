"""Exact linear algebra over prime fields F_p.

Vectors are plain tuples of residues. A subspace is stored by its reduced row
echelon basis, which is canonical: two subspaces are equal iff their bases are
identical tuples.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .errors import DimensionMismatch, FieldMismatch, GuardExceeded, InputError

Vector = tuple[int, ...]

DEFAULT_SUBSPACE_GUARD = 10**5
DEFAULT_VECTOR_GUARD = 10**6
GUARD_ENV = "CONGKIT_GUARD_SUBSPACES"


def subspace_guard() -> int:
    """Default bound on the number of subspaces an enumeration may visit."""
    value = os.environ.get(GUARD_ENV)
    if value:
        try:
            return int(value)
        except ValueError:
            raise InputError(f"{GUARD_ENV} must be an integer, got {value!r}") from None
    return DEFAULT_SUBSPACE_GUARD


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not 2 <= self.p <= 97 or not _is_prime(self.p):
            raise InputError(f"field order must be a prime in [2, 97], got {self.p!r}")

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, self.p - 2, self.p)

    def vector(self, coords: Iterable[int]) -> Vector:
        return tuple(c % self.p for c in coords)

    def __str__(self):
        return f"F{self.p}"


@dataclass(frozen=True)
class Subspace:
    """Subspace of F_p^n given by its RREF basis.

    Construct through :func:`rref` (or the helpers below); the constructor
    itself trusts that ``basis`` is already reduced.
    """

    field: PrimeField
    ambient_dim: int
    basis: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(_leading(row) for row in self.basis)

    @property
    def sort_key(self):
        return (self.dim, tuple(x for row in self.basis for x in row))

    def __contains__(self, v) -> bool:
        return member(v, self)

    def __le__(self, other: Subspace) -> bool:
        return is_subspace(self, other)

    def __lt__(self, other: Subspace) -> bool:
        return self.dim < other.dim and is_subspace(self, other)

    def vectors(self) -> Iterator[Vector]:
        """All p**dim elements, by brute force over coefficient tuples."""
        p, n = self.field.p, self.ambient_dim
        for coeffs in product(range(p), repeat=self.dim):
            v = [0] * n
            for c, row in zip(coeffs, self.basis):
                if c:
                    for k, x in enumerate(row):
                        v[k] += c * x
            yield tuple(x % p for x in v)

    def as_lists(self) -> list[list[int]]:
        return [list(row) for row in self.basis]


def _leading(row: Sequence[int]) -> int:
    for k, x in enumerate(row):
        if x:
            return k
    return -1


def _check_rows(rows, field, n):
    for row in rows:
        if len(row) != n:
            raise DimensionMismatch(f"vector of length {len(row)} in ambient dimension {n}")


def _reduce(rows: list[list[int]], p: int, ncols: int) -> list[list[int]]:
    """In-place Gauss-Jordan elimination mod p; returns the nonzero RREF rows."""
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r]
        inv = pow(lead[c], p - 2, p)
        if inv != 1:
            lead[:] = [(x * inv) % p for x in lead]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], lead)]
        r += 1
        if r == len(rows):
            break
    return rows[:r]


def rref(rows: Iterable[Sequence[int]], field: PrimeField, ambient_dim: int | None = None) -> Subspace:
    """Canonical subspace spanned by ``rows``."""
    rows = [list(r) for r in rows]
    if ambient_dim is None:
        if not rows:
            raise DimensionMismatch("ambient dimension needed for an empty generating set")
        ambient_dim = len(rows[0])
    _check_rows(rows, field, ambient_dim)
    p = field.p
    rows = [[x % p for x in r] for r in rows]
    basis = _reduce(rows, p, ambient_dim)
    return Subspace(field, ambient_dim, tuple(tuple(r) for r in basis))


def zero_space(field: PrimeField, n: int) -> Subspace:
    return Subspace(field, n, ())


def full_space(field: PrimeField, n: int) -> Subspace:
    return Subspace(field, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def _same_space(u: Subspace, w: Subspace):
    if u.field != w.field:
        raise FieldMismatch(f"{u.field} vs {w.field}")
    if u.ambient_dim != w.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions {u.ambient_dim} and {w.ambient_dim}")


def reduce_vector(v: Sequence[int], u: Subspace) -> list[int]:
    """Remainder of ``v`` after clearing the pivot columns of ``u``; canonical coset representative."""
    if len(v) != u.ambient_dim:
        raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {u.ambient_dim}")
    p = u.field.p
    w = [x % p for x in v]
    for c, row in zip(u.pivots, u.basis):
        f = w[c]
        if f:
            w = [(x - f * y) % p for x, y in zip(w, row)]
    return w


def member(v: Sequence[int], u: Subspace) -> bool:
    return not any(reduce_vector(v, u))


def is_subspace(u: Subspace, w: Subspace) -> bool:
    _same_space(u, w)
    return u.dim <= w.dim and all(member(row, w) for row in u.basis)


def sum_spaces(u: Subspace, w: Subspace) -> Subspace:
    _same_space(u, w)
    return rref(u.basis + w.basis, u.field, u.ambient_dim)


def intersect(u: Subspace, w: Subspace) -> Subspace:
    """Zassenhaus: reduce [u | u] stacked on [w | 0]; rows with zero left half span u ∩ w."""
    _same_space(u, w)
    n, p = u.ambient_dim, u.field.p
    rows = [list(r) + list(r) for r in u.basis] + [list(r) + [0] * n for r in w.basis]
    reduced = _reduce(rows, p, 2 * n)
    meet = [r[n:] for r in reduced if not any(r[:n])]
    return rref(meet, u.field, n)


def nullspace(rows: Sequence[Sequence[int]], field: PrimeField, ncols: int) -> Subspace:
    """Solution space of the homogeneous system ``rows · x = 0``."""
    _check_rows(rows, field, ncols)
    p = field.p
    reduced = _reduce([[x % p for x in r] for r in rows], p, ncols)
    pivots = [_leading(r) for r in reduced]
    free = [c for c in range(ncols) if c not in pivots]
    kernel = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for c, r in zip(pivots, reduced):
            x[c] = (-r[f]) % p
        kernel.append(x)
    return rref(kernel, field, ncols)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def subspace_count(n: int, q: int) -> int:
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def enumerate_subspaces(n: int, field: PrimeField, guard: int | None = None) -> Iterator[Subspace]:
    """Every subspace of F_p^n exactly once, by direct construction of RREF matrices.

    For each pivot-column set the free entries (right of the pivot, outside
    other pivot columns) range over all of F_p.
    """
    guard = subspace_guard() if guard is None else guard
    total = subspace_count(n, field.p)
    if total > guard:
        raise GuardExceeded(f"subspaces of {field}^{n}", total, guard)
    return _rref_matrices(n, field)


def _rref_matrices(n, field):
    p = field.p
    for r in range(n + 1):
        for pivots in combinations(range(n), r):
            pivot_set = set(pivots)
            slots = [(i, c) for i, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pivot_set]
            for values in product(range(p), repeat=len(slots)):
                rows = [[0] * n for _ in range(r)]
                for i, pc in enumerate(pivots):
                    rows[i][pc] = 1
                for (i, c), x in zip(slots, values):
                    rows[i][c] = x
                yield Subspace(field, n, tuple(tuple(row) for row in rows))


def all_vectors(n: int, field: PrimeField) -> Iterator[Vector]:
    return product(range(field.p), repeat=n)
