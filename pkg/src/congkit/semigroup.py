"""Finite semigroups as Cayley tables, the built-in families, and quotients."""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence, Union

from .errors import InputError, InvalidSize, NotACongruence, NotAssociative
from .relations import Partition, congruence_violation

MAX_ORDER = 12
LETTERS = "efghijklmnop"
SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def find_associativity_violation(table: Sequence[Sequence[int]]):
    """First (i, j, k) in lexicographic order with (ij)k != i(jk), or None."""
    n = len(table)
    for i in range(n):
        row_i = table[i]
        for j in range(n):
            ij = row_i[j]
            row_ij = table[ij]
            row_j = table[j]
            for k in range(n):
                if row_ij[k] != row_i[row_j[k]]:
                    return (i, j, k)
    return None


def validate_associativity(table: Sequence[Sequence[int]]) -> None:
    triple = find_associativity_violation(table)
    if triple is not None:
        raise NotAssociative(*triple)


@dataclass(frozen=True)
class CayleyTable:
    """A finite semigroup: ``table[i][j]`` is the index of s_i · s_j.

    Construction validates shape, range, distinct names and associativity,
    so every instance is a genuine semigroup.
    """

    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...]
    label: str = ""

    def __post_init__(self):
        n = len(self.table)
        if n < 1:
            raise InvalidSize("a semigroup needs at least one element")
        if any(len(row) != n for row in self.table):
            raise InputError("Cayley table must be square")
        if any(not isinstance(x, int) or not 0 <= x < n for row in self.table for x in row):
            raise InputError(f"Cayley table entries must lie in [0, {n})")
        if len(self.names) != n:
            raise InputError(f"{len(self.names)} names for {n} elements")
        if len(set(self.names)) != n:
            raise InputError("element names must be distinct")
        validate_associativity(self.table)

    @classmethod
    def create(cls, table, names=None, label="", max_order=MAX_ORDER) -> CayleyTable:
        n = len(table)
        if not 1 <= n <= max_order:
            raise InvalidSize(f"order {n} outside [1, {max_order}]")
        names = tuple(names) if names is not None else tuple(str(i) for i in range(n))
        return cls(tuple(tuple(row) for row in table), names, label)

    @property
    def n(self) -> int:
        return len(self.table)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def index(self, name: str) -> int:
        return self.names.index(name)


# Family specifications


@dataclass(frozen=True)
class SemilatticeChain:
    n: int


@dataclass(frozen=True)
class RectangularBand:
    l: int
    r: int


@dataclass(frozen=True)
class CyclicGroup:
    n: int


@dataclass(frozen=True)
class LeftZero:
    n: int


@dataclass(frozen=True)
class RightZero:
    n: int


@dataclass(frozen=True)
class TwoElementSemilattice:
    pass


@dataclass(frozen=True)
class Custom:
    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = None


FamilySpec = Union[SemilatticeChain, RectangularBand, CyclicGroup, LeftZero, RightZero, TwoElementSemilattice, Custom]


def _power_name(k: int) -> str:
    if k == 0:
        return "1"
    if k == 1:
        return "a"
    return "a" + str(k).translate(SUPERSCRIPTS)


def _letters(n):
    return list(LETTERS[:n]) if n <= len(LETTERS) else [f"e{i}" for i in range(n)]


def build(spec: FamilySpec, max_order: int = MAX_ORDER) -> CayleyTable:
    def size(n):
        if not isinstance(n, int) or not 1 <= n <= max_order:
            raise InvalidSize(f"order {n} outside [1, {max_order}]")
        return n

    match spec:
        case TwoElementSemilattice():
            # ef = fe = e
            return CayleyTable.create([[0, 0], [0, 1]], ["e", "f"], "TwoElementSemilattice", max_order)
        case SemilatticeChain(n):
            size(n)
            table = [[min(i, j) for j in range(n)] for i in range(n)]
            return CayleyTable.create(table, _letters(n), f"SemilatticeChain({n})", max_order)
        case CyclicGroup(n):
            size(n)
            table = [[(i + j) % n for j in range(n)] for i in range(n)]
            return CayleyTable.create(table, [_power_name(k) for k in range(n)], f"CyclicGroup({n})", max_order)
        case LeftZero(n):
            size(n)
            return CayleyTable.create([[i] * n for i in range(n)], _letters(n), f"LeftZero({n})", max_order)
        case RightZero(n):
            size(n)
            return CayleyTable.create([list(range(n))] * n, _letters(n), f"RightZero({n})", max_order)
        case RectangularBand(l, r):
            if not isinstance(l, int) or not isinstance(r, int) or l < 1 or r < 1:
                raise InvalidSize(f"rectangular band needs l, r >= 1, got {l}, {r}")
            size(l * r)
            # (a_i, b_j) has index i*r + j; (a, b)(a', b') = (a, b')
            table = [[(x // r) * r + (y % r) for y in range(l * r)] for x in range(l * r)]
            names = [f"(a{i + 1},b{j + 1})" for i in range(l) for j in range(r)]
            return CayleyTable.create(table, names, f"RectangularBand({l},{r})", max_order)
        case Custom(table, names):
            return CayleyTable.create(table, names, "custom", max_order)
    raise InputError(f"unknown family spec {spec!r}")


_FAMILY_RE = re.compile(r"^([a-z0-9-]+)(?::([0-9, ]+))?$")


def parse_family(text: str) -> FamilySpec:
    """Parse CLI family strings such as ``rect-band:2,2`` or ``cyclic:4``."""
    m = _FAMILY_RE.match(text.strip().lower())
    if not m:
        raise InputError(f"cannot parse family {text!r}")
    name, args = m.group(1), m.group(2)
    try:
        nums = [int(x) for x in args.split(",")] if args else []
    except ValueError:
        raise InputError(f"bad family arguments in {text!r}") from None
    one = {"chain-semilattice": SemilatticeChain, "cyclic": CyclicGroup, "left-zero": LeftZero, "right-zero": RightZero}
    if name in one and len(nums) == 1:
        return one[name](nums[0])
    if name == "rect-band" and len(nums) == 2:
        return RectangularBand(*nums)
    if name in ("semilattice2", "two-element-semilattice") and not nums:
        return TwoElementSemilattice()
    raise InputError(f"unknown family {text!r}; expected one of chain-semilattice:N, cyclic:N, "
                     "left-zero:N, right-zero:N, rect-band:L,R, semilattice2")


def quotient(s: CayleyTable, alpha: Partition) -> CayleyTable:
    """S/α, with classes in label order and named ``{m1,m2,...}`` (members in element order)."""
    witness = congruence_violation(s, alpha)
    if witness is not None:
        raise NotACongruence(witness)
    classes = alpha.classes()
    lab = alpha.class_of
    table = [[lab[s.table[c[0]][d[0]]] for d in classes] for c in classes]
    names = ["{" + ",".join(s.names[x] for x in c) + "}" for c in classes]
    return CayleyTable(tuple(tuple(r) for r in table), tuple(names), f"{s.label}/α" if s.label else "")


# Cayley-table text format


def read_table(text: str, max_order: int = MAX_ORDER) -> CayleyTable:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InputError("empty Cayley table file")
    try:
        n = int(lines[0])
    except ValueError:
        raise InputError(f"first line must be the element count, got {lines[0]!r}") from None
    if not 1 <= n <= max_order:
        raise InvalidSize(f"order {n} outside [1, {max_order}]")
    if len(lines) != n + 2:
        raise InputError(f"expected {n + 2} non-comment lines, found {len(lines)}")
    names = lines[1].split()
    try:
        rows = [[int(x) for x in ln.split()] for ln in lines[2:]]
    except ValueError:
        raise InputError("table rows must be integers") from None
    return CayleyTable.create(rows, names, "custom", max_order)


def write_table(s: CayleyTable) -> str:
    out = [str(s.n), " ".join(s.names)]
    out += [" ".join(str(x) for x in row) for row in s.table]
    return "\n".join(out) + "\n"


def load_table(path, max_order: int = MAX_ORDER) -> CayleyTable:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    s = read_table(text, max_order)
    return CayleyTable(s.table, s.names, Path(path).stem)
