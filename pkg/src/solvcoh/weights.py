"""Flat-bundle classes as a finitely generated abelian group.

Characters of G trivial on the nilradical are products of ``rank`` free
symbols.  Integer relations declare which products are trivial on the
lattice, and ``real_log`` records the log-modulus of each symbol, so a
class is unitary exactly when its real log vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .linalg import IntegerLattice


class WeightGroupError(ValueError):
    pass


@dataclass(frozen=True)
class WeightGroup:
    rank: int
    relations: IntegerLattice = None
    real_log: tuple = ()
    base_dim: int = 0
    symbol_names: tuple = ()

    def __post_init__(self):
        rel = self.relations if self.relations is not None else IntegerLattice(self.rank)
        if rel.ambient_rank != self.rank:
            raise WeightGroupError(f"relations live in Z^{rel.ambient_rank}, group has rank {self.rank}")
        object.__setattr__(self, "relations", rel)
        logs = tuple(tuple(Fraction(x) for x in row) for row in self.real_log) or tuple(
            (Fraction(0),) * self.base_dim for _ in range(self.rank)
        )
        if len(logs) != self.rank:
            raise WeightGroupError(f"real_log has {len(logs)} rows, expected one per symbol ({self.rank})")
        for row in logs:
            if len(row) != self.base_dim:
                raise WeightGroupError(f"real_log row {row} has length {len(row)}, expected base_dim={self.base_dim}")
        object.__setattr__(self, "real_log", logs)
        object.__setattr__(self, "symbol_names", tuple(self.symbol_names))
        if self.symbol_names and len(self.symbol_names) != self.rank:
            raise WeightGroupError("symbol_names must name every symbol")
        for g in rel.generators:
            if any(self._log_of(g)):
                raise WeightGroupError(f"real_log nonzero on relation {list(g)}")

    def _log_of(self, vector: Sequence[int]) -> tuple:
        out = [Fraction(0)] * self.base_dim
        for w, row in zip(vector, self.real_log):
            if w:
                for k, x in enumerate(row):
                    out[k] += w * x
        return tuple(out)

    def element(self, vector: Iterable[int]) -> WeightClass:
        return WeightClass(self, tuple(int(x) for x in vector))

    def zero(self) -> WeightClass:
        return WeightClass(self, (0,) * self.rank)


@dataclass(frozen=True, eq=False)
class WeightClass:
    group: WeightGroup
    vector: tuple
    _key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.vector) != self.group.rank:
            raise WeightGroupError(f"weight vector {self.vector} has length {len(self.vector)}, group rank {self.group.rank}")
        object.__setattr__(self, "_key", self.group.relations.reduce_key(self.vector))

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightClass):
            return NotImplemented
        return self._key == other._key and (self.group is other.group or self.group == other.group)

    def __hash__(self) -> int:
        return hash(self._key)

    def __add__(self, other: WeightClass) -> WeightClass:
        _same_group(self, other)
        return WeightClass(self.group, tuple(a + b for a, b in zip(self.vector, other.vector)))

    def __neg__(self) -> WeightClass:
        return WeightClass(self.group, tuple(-a for a in self.vector))

    def __sub__(self, other: WeightClass) -> WeightClass:
        return self + (-other)

    def scaled(self, k: int) -> WeightClass:
        return WeightClass(self.group, tuple(k * a for a in self.vector))

    def real_log(self) -> tuple:
        return self.group._log_of(self.vector)

    def is_zero(self) -> bool:
        return self.group.relations.contains(self.vector)

    def pretty(self) -> str:
        names = self.group.symbol_names
        if not names:
            return "(" + ",".join(str(x) for x in self.vector) + ")"
        parts = []
        for w, name in zip(self.vector, names):
            if not w:
                continue
            coeff = "" if w == 1 else "-" if w == -1 else f"{w}*"
            parts.append(f"{coeff}{name}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def __repr__(self) -> str:
        return f"WeightClass({list(self.vector)})"


def _same_group(a: WeightClass, b: WeightClass) -> None:
    if a.group != b.group:
        raise WeightGroupError("weight classes belong to different groups")


def class_equal(a: WeightClass, b: WeightClass) -> bool:
    _same_group(a, b)
    return a.group.relations.contains(tuple(x - y for x, y in zip(a.vector, b.vector)))


def is_unitary(a: WeightClass) -> bool:
    return not any(a.real_log())


def multiindex_class(weights: Sequence[WeightClass], indices: Iterable[int], group: WeightGroup | None = None) -> WeightClass:
    """Class of the product of the characters indexed by ``indices``."""
    indices = list(indices)
    if group is None:
        if not weights:
            raise WeightGroupError("cannot infer the group from an empty weight list")
        group = weights[0].group
    vec = [0] * group.rank
    for i in indices:
        for k, x in enumerate(weights[i].vector):
            vec[k] += x
    return WeightClass(group, tuple(vec))


def canonical_representatives(classes: Iterable[WeightClass]) -> list[WeightClass]:
    """Deduplicate classes, keeping the shortest representative of each."""
    best: dict = {}
    for c in classes:
        cur = best.get(c)
        if cur is None or _rep_key(c) < _rep_key(cur):
            best[c] = c
    return sorted(best.values(), key=lambda c: c.vector)


def _rep_key(c: WeightClass) -> tuple:
    return (sum(abs(x) for x in c.vector), c.vector)


def enumerate_K(weights: Sequence[WeightClass], p: int, group: WeightGroup | None = None) -> list[WeightClass]:
    """Distinct classes of the degree-``p`` multi-index characters."""
    n = len(weights)
    if not 0 <= p <= n:
        raise WeightGroupError(f"degree {p} outside 0..{n}")
    return canonical_representatives(multiindex_class(weights, I, group) for I in combinations(range(n), p))


def enumerate_K_all(weights: Sequence[WeightClass], group: WeightGroup | None = None) -> list[WeightClass]:
    return canonical_representatives(c for p in range(len(weights) + 1) for c in enumerate_K(weights, p, group))
