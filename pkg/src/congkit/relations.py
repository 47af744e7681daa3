"""Binary relations and congruences on a finite carrier {0, ..., n-1}.

Relations are bit-packed: row ``x`` is an int whose bit ``y`` is set iff
(x, y) belongs to the relation. Partitions are stored as restricted growth
strings (labels assigned in order of first appearance), which makes value
equality the same as equality of equivalence relations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import CarrierMismatch, GuardExceeded, NotAnEquivalence
from .reports import CheckReport

DEFAULT_CONGRUENCE_GUARD = 10


@dataclass(frozen=True)
class BinaryRelation:
    n: int
    rows: tuple[int, ...]

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> BinaryRelation:
        rows = [0] * n
        for x, y in pairs:
            rows[x] |= 1 << y
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence]) -> BinaryRelation:
        n = len(matrix)
        if any(len(row) != n for row in matrix):
            raise CarrierMismatch("relation matrix must be square")
        return cls(n, tuple(sum(1 << y for y, b in enumerate(row) if b) for row in matrix))

    @classmethod
    def identity(cls, n: int) -> BinaryRelation:
        return cls(n, tuple(1 << x for x in range(n)))

    @classmethod
    def universal(cls, n: int) -> BinaryRelation:
        return cls(n, ((1 << n) - 1,) * n)

    def __contains__(self, pair) -> bool:
        x, y = pair
        return bool(self.rows[x] >> y & 1)

    def pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.n) for y in range(self.n) if self.rows[x] >> y & 1]

    def to_matrix(self) -> list[list[int]]:
        return [[self.rows[x] >> y & 1 for y in range(self.n)] for x in range(self.n)]

    def converse(self) -> BinaryRelation:
        return BinaryRelation.from_pairs(self.n, ((y, x) for x, y in self.pairs()))

    def __matmul__(self, other: BinaryRelation) -> BinaryRelation:
        return compose(self, other)


def compose(a: BinaryRelation, b: BinaryRelation) -> BinaryRelation:
    """(x, y) ∈ a∘b iff a relates x to some z and b relates z to y."""
    if a.n != b.n:
        raise CarrierMismatch(f"carriers of size {a.n} and {b.n}")
    rows = []
    for row in a.rows:
        acc = 0
        z = 0
        while row:
            if row & 1:
                acc |= b.rows[z]
            row >>= 1
            z += 1
        rows.append(acc)
    return BinaryRelation(a.n, tuple(rows))


@dataclass(frozen=True, order=False)
class Partition:
    class_of: tuple[int, ...]

    def __post_init__(self):
        seen = -1
        for label in self.class_of:
            if label > seen + 1 or label < 0:
                raise ValueError(f"labels {self.class_of} are not in first-appearance form")
            seen = max(seen, label)

    @classmethod
    def from_labels(cls, labels: Sequence) -> Partition:
        """Canonicalize arbitrary hashable labels."""
        relabel = {}
        return cls(tuple(relabel.setdefault(x, len(relabel)) for x in labels))

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[Iterable[int]]) -> Partition:
        labels = [None] * n
        for k, block in enumerate(classes):
            for x in block:
                labels[x] = k
        if None in labels:
            raise CarrierMismatch(f"classes do not cover 0..{n - 1}")
        return cls.from_labels(labels)

    @classmethod
    def identity(cls, n: int) -> Partition:
        return cls(tuple(range(n)))

    @classmethod
    def universal(cls, n: int) -> Partition:
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self.class_of)

    @property
    def num_classes(self) -> int:
        return max(self.class_of, default=-1) + 1

    def classes(self) -> list[list[int]]:
        out = [[] for _ in range(self.num_classes)]
        for x, k in enumerate(self.class_of):
            out[k].append(x)
        return out

    def related(self, x: int, y: int) -> bool:
        return self.class_of[x] == self.class_of[y]

    @property
    def sort_key(self):
        # finer partitions first, so ι leads and ω closes the list
        return (-self.num_classes, self.class_of)

    def __le__(self, other: Partition) -> bool:
        """Refinement order: self ⊆ other as relations."""
        _same_carrier(self, other)
        image = {}
        return all(image.setdefault(a, b) == b for a, b in zip(self.class_of, other.class_of))

    def format(self, names: Sequence[str] | None = None) -> str:
        names = names or [str(i) for i in range(self.n)]
        return "{" + ",".join("{" + ",".join(names[x] for x in c) + "}" for c in self.classes()) + "}"


def _same_carrier(a, b):
    if a.n != b.n:
        raise CarrierMismatch(f"carriers of size {a.n} and {b.n}")


def as_relation(p: Partition) -> BinaryRelation:
    masks = [0] * p.num_classes
    for x, k in enumerate(p.class_of):
        masks[k] |= 1 << x
    return BinaryRelation(p.n, tuple(masks[k] for k in p.class_of))


def classify(r: BinaryRelation) -> Partition:
    """Partition induced by an equivalence relation; raises NotAnEquivalence otherwise."""
    n = r.n
    for x in range(n):
        if not r.rows[x] >> x & 1:
            raise NotAnEquivalence("reflexive", (x, x))
    for x, y in r.pairs():
        if not r.rows[y] >> x & 1:
            raise NotAnEquivalence("symmetric", (x, y))
    for x in range(n):
        for y in range(n):
            if r.rows[x] >> y & 1 and r.rows[y] & ~r.rows[x]:
                z = next(z for z in range(n) if r.rows[y] >> z & 1 and not r.rows[x] >> z & 1)
                raise NotAnEquivalence("transitive", (x, z))
    return Partition.from_labels(r.rows)


def congruence_violation(s, p: Partition):
    """Smallest (x, y, z, side) with x ~ y but xz ≁ yz (side "right") or zx ≁ zy (side "left"); None if p is a congruence."""
    if s.n != p.n:
        raise CarrierMismatch(f"semigroup of order {s.n}, partition on {p.n} points")
    t, lab = s.table, p.class_of
    n = s.n
    for x in range(n):
        for y in range(x + 1, n):
            if lab[x] != lab[y]:
                continue
            for z in range(n):
                if lab[t[x][z]] != lab[t[y][z]]:
                    return (x, y, z, "right")
                if lab[t[z][x]] != lab[t[z][y]]:
                    return (x, y, z, "left")
    return None


def is_congruence(s, p: Partition) -> bool:
    return congruence_violation(s, p) is None


def set_partitions(n: int) -> Iterator[Partition]:
    """All partitions of {0..n-1} as restricted growth strings, in lexicographic order."""
    if n == 0:
        yield Partition(())
        return
    rgs = [0] * n
    maxes = [0] * n  # maxes[i] = max(rgs[:i+1])

    def rec(i):
        if i == n:
            yield Partition(tuple(rgs))
            return
        for label in range(maxes[i - 1] + 2):
            rgs[i] = label
            maxes[i] = max(maxes[i - 1], label)
            yield from rec(i + 1)

    yield from rec(1)


def enumerate_congruences(s, guard: int = DEFAULT_CONGRUENCE_GUARD) -> list[Partition]:
    if s.n > guard:
        raise GuardExceeded("congruence enumeration (semigroup order)", s.n, guard)
    found = [p for p in set_partitions(s.n) if is_congruence(s, p)]
    return sorted(found, key=lambda p: p.sort_key)


def meet(a: Partition, b: Partition) -> Partition:
    _same_carrier(a, b)
    return Partition.from_labels(list(zip(a.class_of, b.class_of)))


def join(a: Partition, b: Partition) -> Partition:
    """Equivalence closure of a ∪ b, by union-find over the classes of both."""
    _same_carrier(a, b)
    parent = list(range(a.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for part in (a, b):
        for block in part.classes():
            root = find(block[0])
            for x in block[1:]:
                parent[find(x)] = root
    return Partition.from_labels([find(x) for x in range(a.n)])


def is_permutable(s, guard: int = DEFAULT_CONGRUENCE_GUARD) -> CheckReport:
    """Do all congruences of ``s`` commute under relation composition?

    The witness is the first congruence pair (by list index) that fails,
    together with the smallest element pair in the symmetric difference of
    the two composites.
    """
    congs = enumerate_congruences(s, guard)
    rels = [as_relation(c) for c in congs]
    witnesses = []
    for i, j in combinations(range(len(congs)), 2):
        ab = compose(rels[i], rels[j])
        ba = compose(rels[j], rels[i])
        if ab != ba:
            x, y = min(set(ab.pairs()) ^ set(ba.pairs()))
            witnesses.append({
                "alpha": congs[i].format(s.names),
                "beta": congs[j].format(s.names),
                "pair": [s.names[x], s.names[y]],
                "in_alpha_beta": (x, y) in ab,
                "in_beta_alpha": (x, y) in ba,
            })
            break
    return CheckReport(
        check_name="permutable",
        verdict=not witnesses,
        witnesses=witnesses,
        context_summary=f"{len(congs)} congruences on {s.label or 'S'} (order {s.n})",
        semigroup=s.label,
    )


def cover_relation(items: Sequence, leq) -> list[tuple[int, int]]:
    """Hasse edges (i, j): items[i] < items[j] with nothing strictly between."""
    m = len(items)
    below = [[i != j and leq(items[i], items[j]) for j in range(m)] for i in range(m)]
    edges = []
    for i in range(m):
        for j in range(m):
            if below[i][j] and not below[j][i]:
                if not any(below[i][k] and below[k][j] and not below[k][i] and not below[j][k] for k in range(m)):
                    edges.append((i, j))
    return edges
