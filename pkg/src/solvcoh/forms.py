"""Sparse elements of an exterior algebra on numbered generators.

A monomial x_I = x_{i1} ^ ... ^ x_{ip} (i1 < ... < ip) is encoded as the
bitmask with bits i1..ip set.  A ``Form`` maps masks to nonzero Scalars.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

from .scalar import ONE, ZERO, Scalar, ScalarLike

MAX_GENERATORS = 62


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_indices(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def indices_mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def wedge_sign(a: int, b: int) -> int:
    """Sign of x_a ^ x_b relative to x_{a|b}; 0 when the masks overlap."""
    if a & b:
        return 0
    swaps = 0
    for j in mask_indices(b):
        swaps += popcount(a >> (j + 1))
    return -1 if swaps & 1 else 1


def sort_sign(indices: Sequence[int]) -> tuple[int, int]:
    """(sign, mask) of x_{i1} ^ ... ^ x_{ip} for an arbitrary index order."""
    if len(set(indices)) != len(indices):
        return 0, 0
    sign = 1
    idx = list(indices)
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    return sign, indices_mask(idx)


class Form:
    """Immutable sparse exterior form."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, ScalarLike] | None = None):
        clean = {}
        if terms:
            for mask, v in terms.items():
                v = Scalar.coerce(v)
                if v:
                    clean[int(mask)] = v
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Form is immutable")

    @classmethod
    def monomial(cls, indices: Sequence[int], coeff: ScalarLike = ONE) -> Form:
        sign, mask = sort_sign(indices)
        if not sign:
            return ZERO_FORM
        return cls({mask: Scalar.coerce(coeff) * sign})

    @classmethod
    def generator(cls, i: int) -> Form:
        return cls({1 << i: ONE})

    @classmethod
    def one(cls) -> Form:
        return cls({0: ONE})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Sequence[int], ScalarLike]]) -> Form:
        acc: dict = {}
        for indices, coeff in terms:
            sign, mask = sort_sign(indices)
            if sign:
                acc[mask] = acc.get(mask, ZERO) + Scalar.coerce(coeff) * sign
        return cls(acc)

    # access ---------------------------------------------------------------

    def items(self) -> Iterator[tuple[int, Scalar]]:
        return iter(sorted(self._terms.items()))

    def masks(self) -> list[int]:
        return sorted(self._terms)

    def coeff(self, mask: int) -> Scalar:
        return self._terms.get(mask, ZERO)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degrees(self) -> set[int]:
        return {popcount(m) for m in self._terms}

    def degree(self) -> int:
        """Degree of a homogeneous nonzero form."""
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError(f"form is not homogeneous (degrees {sorted(degs)})")
        return degs.pop()

    def component(self, degree: int) -> Form:
        return Form({m: v for m, v in self._terms.items() if popcount(m) == degree})

    def restrict(self, keep) -> Form:
        return Form({m: v for m, v in self._terms.items() if keep(m)})

    # algebra --------------------------------------------------------------

    def __add__(self, other: Form) -> Form:
        if not isinstance(other, Form):
            return NotImplemented
        acc = dict(self._terms)
        for m, v in other._terms.items():
            acc[m] = acc.get(m, ZERO) + v
        return Form(acc)

    def __sub__(self, other: Form) -> Form:
        if not isinstance(other, Form):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> Form:
        return Form({m: -v for m, v in self._terms.items()})

    def scale(self, c: ScalarLike) -> Form:
        c = Scalar.coerce(c)
        if not c:
            return ZERO_FORM
        return Form({m: v * c for m, v in self._terms.items()})

    def __rmul__(self, c: ScalarLike) -> Form:
        return self.scale(c)

    def wedge(self, other: Form) -> Form:
        acc: dict = {}
        for a, u in self._terms.items():
            for b, v in other._terms.items():
                s = wedge_sign(a, b)
                if s:
                    acc[a | b] = acc.get(a | b, ZERO) + (u * v if s > 0 else -(u * v))
        return Form(acc)

    __xor__ = wedge

    def power(self, k: int) -> Form:
        out = Form.one()
        for _ in range(k):
            out = out.wedge(self)
        return out

    def conjugate(self, perm: Sequence[int]) -> Form:
        """Complex conjugate, sending generator i to generator perm[i]."""
        acc: dict = {}
        for m, v in self._terms.items():
            sign, mask = sort_sign([perm[i] for i in mask_indices(m)])
            acc[mask] = acc.get(mask, ZERO) + v.conjugate() * sign
        return Form(acc)

    def to_vector(self, basis_index: Mapping[int, int], length: int) -> tuple:
        vec = [ZERO] * length
        for m, v in self._terms.items():
            try:
                vec[basis_index[m]] = v
            except KeyError:
                raise ValueError(f"form has a term {mask_indices(m)} outside the given basis") from None
        return tuple(vec)

    @classmethod
    def from_vector(cls, vec: Sequence[Scalar], basis: Sequence[int]) -> Form:
        return cls({basis[k]: v for k, v in enumerate(vec) if v})

    # comparison -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(frozenset(self._terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"Form({self.pretty()})"

    def pretty(self, labels: Sequence[str] | None = None) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, v in self.items():
            idx = mask_indices(m)
            name = "^".join(labels[i] if labels else f"x{i + 1}" for i in idx) or "1"
            coeff = str(v)
            if coeff == "1" and idx:
                parts.append(name)
            elif coeff == "-1" and idx:
                parts.append(f"-{name}")
            else:
                if "+" in coeff[1:] or "-" in coeff[1:]:
                    coeff = f"({coeff})"
                parts.append(f"{coeff}*{name}" if idx else coeff)
        return " + ".join(parts).replace("+ -", "- ")


ZERO_FORM = Form()
