"""Weight-graded invariant model complexes of solvmanifolds.

The input is a Lie algebra already written in the eigenbasis of the
semisimple part of the adjoint action: every dual generator x_i carries a
weight class and the log-derivative 1-form of its character.  The model
differential acts on generators as

    D x_k = (Chevalley-Eilenberg part) + logderiv_k ^ x_k

and extends to the exterior algebra as a graded derivation.  The untwisted
Chevalley-Eilenberg differential of the Lie algebra itself is kept as well,
since the Dolbeault layer works on it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Callable, Mapping, Sequence

from . import linalg
from .forms import MAX_GENERATORS, ZERO_FORM, Form, mask_indices, popcount, wedge_sign
from .linalg import ScalarMatrix
from .scalar import ZERO, Scalar
from .weights import WeightClass, WeightGroup, canonical_representatives

HOLO = (1, 0)
ANTI = (0, 1)


@dataclass(frozen=True)
class Generator:
    label: str
    weight: tuple
    bidegree: tuple | None = None
    logderiv: tuple = ()  # ((generator index, Scalar), ...)

    def logderiv_form(self) -> Form:
        return Form({1 << j: c for j, c in self.logderiv})


@dataclass(frozen=True)
class ModelSpec:
    name: str
    weight_group: WeightGroup
    generators: tuple
    structure_constants: tuple = ()  # ((i, j, k, Scalar), ...) with i < j: d x_k has c x_i ^ x_j
    forms: Mapping[str, Form] = field(default_factory=dict)
    meta: Mapping[str, str] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.generators)

    @property
    def base_dim(self) -> int:
        return self.weight_group.base_dim

    def weights(self) -> list[WeightClass]:
        return [self.weight_group.element(g.weight) for g in self.generators]

    def labels(self) -> list[str]:
        return [g.label for g in self.generators]

    def has_bigrading(self) -> bool:
        return bool(self.generators) and all(g.bidegree is not None for g in self.generators)

    def conjugation(self) -> list[int] | None:
        """Pair the k-th (1,0) generator with the k-th (0,1) generator."""
        if not self.has_bigrading():
            return None
        holo = [i for i, g in enumerate(self.generators) if g.bidegree == HOLO]
        anti = [i for i, g in enumerate(self.generators) if g.bidegree == ANTI]
        if len(holo) != len(anti):
            return None
        perm = [0] * self.n
        for a, b in zip(holo, anti):
            perm[a], perm[b] = b, a
        return perm

    @property
    def symplectic_forms(self) -> dict[str, Form]:
        return {k: f for k, f in self.forms.items() if f and f.degrees() == {2}}

    @property
    def one_forms(self) -> dict[str, Form]:
        return {k: f for k, f in self.forms.items() if f and f.degrees() == {1}}


# --------------------------------------------------------------------------
# validation

@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    where: str = ""

    def __str__(self) -> str:
        loc = f" [{self.where}]" if self.where else ""
        return f"{self.code}: {self.message}{loc}"


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, code: str, message: str, where: str = "") -> None:
        self.violations.append(Violation(code, message, where))

    def codes(self) -> list[str]:
        return [v.code for v in self.violations]


class ModelValidationError(ValueError):
    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__("; ".join(str(v) for v in report.violations))


def derive(images: Sequence[Form], mask: int) -> dict:
    """Apply the graded derivation determined by generator ``images`` to x_mask."""
    out: dict = {}
    idx = mask_indices(mask)
    left = 0
    for pos, i in enumerate(idx):
        right = mask & ~((1 << (i + 1)) - 1)
        for m, v in images[i].items():
            s1 = wedge_sign(left, m)
            if not s1:
                continue
            s2 = wedge_sign(left | m, right)
            if not s2:
                continue
            s = s1 * s2 * (-1 if pos & 1 else 1)
            key = left | m | right
            out[key] = out.get(key, ZERO) + (v if s > 0 else -v)
        left |= 1 << i
    return out


def apply_derivation(images: Sequence[Form], form: Form) -> Form:
    acc: dict = {}
    for mask, c in form.items():
        for m, v in derive(images, mask).items():
            acc[m] = acc.get(m, ZERO) + c * v
    return Form(acc)


def _generator_images(spec: ModelSpec) -> tuple[list[Form], list[Form]]:
    n = spec.n
    lie = [dict() for _ in range(n)]
    for i, j, k, c in spec.structure_constants:
        if not (0 <= i < n and 0 <= j < n and 0 <= k < n) or i == j:
            continue
        sign = 1 if i < j else -1
        mask = (1 << i) | (1 << j)
        lie[k][mask] = lie[k].get(mask, ZERO) + c * sign
    lie_forms = [Form(t) for t in lie]
    twisted = [lie_forms[k] + g.logderiv_form().wedge(Form.generator(k)) for k, g in enumerate(spec.generators)]
    return lie_forms, twisted


def _bracket_table(images: Sequence[Form], n: int) -> dict:
    """[X_i, X_j] as coefficient dicts, read off the quadratic part of the differential."""
    table: dict = {}
    for k, img in enumerate(images):
        for mask, c in img.items():
            if popcount(mask) != 2:
                continue
            i, j = mask_indices(mask)
            table.setdefault((i, j), {})
            table[(i, j)][k] = table[(i, j)].get(k, ZERO) - c
    return table


def lower_central_dims(images: Sequence[Form], n: int) -> list[int]:
    """dim C^0, C^1, ... of the lower central series, until it stops shrinking."""
    table = _bracket_table(images, n)

    def bracket(i: int, vec: Sequence[Scalar]) -> list:
        out = [ZERO] * n
        for j, a in enumerate(vec):
            if not a or i == j:
                continue
            key, sign = ((i, j), 1) if i < j else ((j, i), -1)
            for k, c in table.get(key, {}).items():
                out[k] = out[k] + a * c * sign
        return out

    current = [tuple(Scalar(int(i == j)) for j in range(n)) for i in range(n)]
    dims = [n]
    while current:
        spanning = [bracket(i, v) for i in range(n) for v in current]
        nxt = linalg.span_basis(spanning, n) if spanning else []
        if len(nxt) == len(current):
            break
        current = nxt
        dims.append(len(current))
    return dims


def validate(spec: ModelSpec) -> ValidationReport:
    rep = ValidationReport()
    n = spec.n
    group = spec.weight_group
    if n > MAX_GENERATORS:
        rep.add("too-many-generators", f"{n} generators, at most {MAX_GENERATORS} supported")
        return rep
    for idx, g in enumerate(spec.generators):
        if len(g.weight) != group.rank:
            rep.add("weight-length", f"weight {list(g.weight)} has length {len(g.weight)}, group rank {group.rank}", g.label)
        for j, _ in g.logderiv:
            if not 0 <= j < n:
                rep.add("index-range", f"logderiv index {j + 1} out of range", g.label)
    ok_triples = []
    for i, j, k, c in spec.structure_constants:
        where = f"triple ({i + 1},{j + 1},{k + 1})"
        if not all(0 <= x < n for x in (i, j, k)):
            rep.add("index-range", "structure constant index out of range", where)
        elif i >= j:
            rep.add("triple-order", "structure constants need i < j", where)
        else:
            ok_triples.append((i, j, k, c))
    if not rep.ok:
        return rep

    weights = spec.weights()
    for i, j, k, c in ok_triples:
        if weights[k] != weights[i] + weights[j]:
            rep.add(
                "weight-homogeneity",
                f"weight(x{k + 1})={list(weights[k].vector)} differs from weight(x{i + 1})+weight(x{j + 1})",
                f"triple ({i + 1},{j + 1},{k + 1})",
            )

    lie, twisted = _generator_images(spec)
    zero = group.zero()
    for idx, g in enumerate(spec.generators):
        for j, _ in g.logderiv:
            if weights[j] != zero:
                rep.add("logderiv-support", f"logderiv uses x{j + 1}, whose weight is not trivial", g.label)
            elif twisted[j]:
                rep.add("logderiv-support", f"logderiv uses x{j + 1}, which is not closed in the model", g.label)

    if symbol_logderivs(spec) is None:
        rep.add("logderiv-additivity", "log-derivatives are not additive in the weight vectors")

    tags = [g.bidegree for g in spec.generators]
    if any(t is not None for t in tags):
        if any(t is None for t in tags):
            rep.add("conjugation-pairing", "bidegrees must be given for all generators or none")
        elif any(t not in (HOLO, ANTI) for t in tags):
            rep.add("conjugation-pairing", "bidegree must be (1,0) or (0,1)")
        elif tags.count(HOLO) != tags.count(ANTI):
            rep.add("conjugation-pairing", f"{tags.count(HOLO)} (1,0) generators but {tags.count(ANTI)} (0,1) generators")

    for k in range(n):
        dd = apply_derivation(lie, lie[k])
        if dd:
            rep.add("jacobi", f"d^2 x{k + 1} = {dd.pretty(spec.labels())} is nonzero", spec.generators[k].label)
    for k in range(n):
        dd = apply_derivation(twisted, twisted[k])
        if dd:
            rep.add("d-squared", f"D^2 x{k + 1} = {dd.pretty(spec.labels())} is nonzero", spec.generators[k].label)
    if rep.ok:
        dims = lower_central_dims(twisted, n)
        if dims[-1] != 0:
            rep.add("not-nilpotent", f"model Lie algebra is not nilpotent (lower central series {dims})")
    return rep


def symbol_logderivs(spec: ModelSpec) -> list[Form] | None:
    """Per-symbol log-derivative 1-forms, or None if the data are not additive."""
    n, r = spec.n, spec.weight_group.rank
    W = ScalarMatrix.from_dense([[Scalar(x) for x in g.weight] for g in spec.generators], cols=r) if n else ScalarMatrix(0, r)
    per_symbol = [dict() for _ in range(r)]
    for col in range(n):
        rhs = [dict(g.logderiv).get(col, ZERO) for g in spec.generators]
        if not any(rhs):
            continue
        x = linalg.solve(W, rhs)
        if x is None:
            return None
        for j, v in enumerate(x):
            if v:
                per_symbol[j][1 << col] = v
    return [Form(t) for t in per_symbol]


# --------------------------------------------------------------------------
# the complex

class InvariantComplex:
    """The twisted model complex, graded by degree and weight class."""

    def __init__(self, spec: ModelSpec):
        self.spec = spec
        self.n = spec.n
        self.group = spec.weight_group
        self.weights = spec.weights()
        self.lie_images, self.images = _generator_images(spec)
        self.symbol_forms = symbol_logderivs(spec)
        self._d_cache: dict = {}
        self._lie_cache: dict = {}
        self._blocks: dict = {}
        self._hcache: dict = {}
        for p in range(self.n + 1):
            for I in combinations(range(self.n), p):
                mask = sum(1 << i for i in I)
                self._blocks.setdefault(self.class_of(mask), {}).setdefault(p, []).append(mask)

    def class_of(self, mask: int) -> WeightClass:
        vec = [0] * self.group.rank
        for i in mask_indices(mask):
            for k, x in enumerate(self.weights[i].vector):
                vec[k] += x
        return WeightClass(self.group, tuple(vec))

    @cached_property
    def classes(self) -> list[WeightClass]:
        """Every class carried by some multi-index (the union of all K^p)."""
        return canonical_representatives(self.class_of(m) for p in range(self.n + 1) for m in self._masks_of_degree(p))

    def _masks_of_degree(self, p: int) -> list[int]:
        return [sum(1 << i for i in I) for I in combinations(range(self.n), p)]

    def block_basis(self, w: WeightClass, p: int) -> list[int]:
        return list(self._blocks.get(w, {}).get(p, []))

    def in_K(self, w: WeightClass) -> bool:
        return w in self._blocks

    def degree_basis(self, p: int) -> list[int]:
        return self._masks_of_degree(p)

    # differentials ---------------------------------------------------------

    def d_mask(self, mask: int) -> Form:
        f = self._d_cache.get(mask)
        if f is None:
            f = Form(derive(self.images, mask))
            self._d_cache[mask] = f
        return f

    def lie_mask(self, mask: int) -> Form:
        f = self._lie_cache.get(mask)
        if f is None:
            f = Form(derive(self.lie_images, mask))
            self._lie_cache[mask] = f
        return f

    def d(self, form: Form) -> Form:
        return _linear(self.d_mask, form)

    def d_lie(self, form: Form) -> Form:
        return _linear(self.lie_mask, form)

    def weight_block(self, w: WeightClass, p: int) -> tuple[ScalarMatrix, ScalarMatrix]:
        """(D: C^p_w -> C^{p+1}_w, D: C^{p-1}_w -> C^p_w)."""
        here = self.block_basis(w, p)
        up = self.block_basis(w, p + 1)
        down = self.block_basis(w, p - 1) if p > 0 else []
        return operator_matrix(self.d_mask, here, up), operator_matrix(self.d_mask, down, here)

    def class_one_form(self, w: WeightClass) -> Form:
        """The log-derivative 1-form naming the flat bundle of class ``w``."""
        out = ZERO_FORM
        for k, form in zip(w.vector, self.symbol_forms or []):
            if k:
                out = out + form.scale(k)
        return out

    def form_class(self, form: Form) -> WeightClass | None:
        """The weight class of a nonzero form lying in a single class, else None."""
        classes = {self.class_of(m) for m in form.masks()}
        return classes.pop() if len(classes) == 1 else None


def _linear(on_mask: Callable[[int], Form], form: Form) -> Form:
    acc: dict = {}
    for mask, c in form.items():
        for m, v in on_mask(mask).items():
            acc[m] = acc.get(m, ZERO) + c * v
    return Form(acc)


def operator_matrix(on_mask: Callable[[int], Form], source: Sequence[int], target: Sequence[int]) -> ScalarMatrix:
    """Matrix (rows = target basis, cols = source basis) of a linear map on monomials."""
    index = {m: r for r, m in enumerate(target)}
    rows = [dict() for _ in target]
    for col, mask in enumerate(source):
        for m, v in on_mask(mask).items():
            r = index.get(m)
            if r is None:
                raise ValueError(f"operator image of {mask_indices(mask)} leaves the target basis at {mask_indices(m)}")
            rows[r][col] = v
    return ScalarMatrix(len(target), len(source), rows)


def build_complex(spec: ModelSpec) -> InvariantComplex:
    report = validate(spec)
    if not report.ok:
        raise ModelValidationError(report)
    return InvariantComplex(spec)


def hull_is_abelian(c: InvariantComplex) -> bool:
    return not any(c.images)


def lower_central_series(c: InvariantComplex) -> list[int]:
    return lower_central_dims(c.images, c.n)
