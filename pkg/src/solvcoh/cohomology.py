"""Twisted cohomology of the model, jump loci and ring-level diagnostics.

Everything here works one weight block at a time: the class-w part of the
model in degree p has the multi-indices of class w as basis, and the
model differential restricts to it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from . import linalg
from ._parallel import ordered_map
from .forms import Form
from .linalg import ScalarMatrix
from .model import InvariantComplex, hull_is_abelian
from .weights import WeightClass, enumerate_K, is_unitary


class OutsideKError(ValueError):
    """The requested class carries no multi-index, so its cohomology is zero."""


class NotClosedError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


class CriterionMismatch(RuntimeError):
    """A structural criterion disagreed with the direct computation."""


@dataclass(frozen=True)
class DegreeCohomology:
    degree: int
    basis: tuple  # block basis masks
    representatives: tuple  # Forms
    image_basis: tuple  # Forms spanning D(C^{p-1}_w)

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def _span_vectors(self) -> list:
        index = {m: k for k, m in enumerate(self.basis)}
        return [f.to_vector(index, len(self.basis)) for f in (*self.representatives, *self.image_basis)]

    def coordinates(self, form: Form) -> tuple:
        """Coefficients of the class of a closed ``form`` in the representative basis."""
        if not self.basis:
            if form:
                raise ValueError("form does not live in this block")
            return ()
        index = {m: k for k, m in enumerate(self.basis)}
        vec = form.to_vector(index, len(self.basis))
        sol = linalg.membership(vec, self._span_vectors())
        if sol is None:
            raise NotClosedError("form is not closed in this block")
        return tuple(sol[: self.dim])

    def is_exact(self, form: Form) -> bool:
        return not any(self.coordinates(form))


@dataclass(frozen=True)
class ClassCohomology:
    weight: WeightClass
    degrees: tuple  # DegreeCohomology for p = 0..n

    @property
    def dims(self) -> tuple:
        return tuple(d.dim for d in self.degrees)

    @property
    def total(self) -> int:
        return sum(self.dims)

    def __getitem__(self, p: int) -> DegreeCohomology:
        return self.degrees[p]


def _block_cohomology(c: InvariantComplex, w: WeightClass, p: int) -> DegreeCohomology:
    basis = c.block_basis(w, p)
    d_out, d_in = c.weight_block(w, p)
    image = linalg.image_basis(d_in) if d_in.cols else []
    reps: list = []
    span = list(image)
    for k in linalg.kernel_basis(d_out):
        if not span or linalg.membership(k, span) is None:
            reps.append(k)
            span.append(k)
    return DegreeCohomology(
        degree=p,
        basis=tuple(basis),
        representatives=tuple(Form.from_vector(v, basis) for v in reps),
        image_basis=tuple(Form.from_vector(v, basis) for v in image),
    )


def cohomology(c: InvariantComplex, w: WeightClass) -> ClassCohomology:
    """H^*(C_w, D) with echelon-canonical representatives."""
    if w.group != c.group:
        raise ValueError("weight class belongs to a different weight group")
    if not c.in_K(w):
        raise OutsideKError(
            f"class {list(w.vector)} is not a multi-index class; no cochain carries it, so its twisted cohomology vanishes"
        )
    hit = c._hcache.get(w)
    if hit is None:
        hit = ClassCohomology(w, tuple(_block_cohomology(c, w, p) for p in range(c.n + 1)))
        c._hcache[w] = hit
    return hit


def cohomology_or_zero(c: InvariantComplex, w: WeightClass) -> ClassCohomology:
    if c.in_K(w):
        return cohomology(c, w)
    return ClassCohomology(w, tuple(DegreeCohomology(p, (), (), ()) for p in range(c.n + 1)))


@dataclass(frozen=True)
class CohomologyTable:
    entries: dict = field(default_factory=dict)  # WeightClass -> ClassCohomology

    def classes(self) -> list:
        return list(self.entries)

    def dim(self, w: WeightClass, p: int) -> int:
        h = self.entries.get(w)
        return h.dims[p] if h else 0


def table(c: InvariantComplex) -> CohomologyTable:
    results = ordered_map(lambda w: cohomology(c, w), c.classes)
    return CohomologyTable({h.weight: h for h in results})


@dataclass(frozen=True)
class JumpLocus:
    by_degree: tuple  # per p: tuple of WeightClass with H^p != 0
    K: tuple  # per p: enumerate_K

    @property
    def classes(self) -> list:
        seen: dict = {}
        for layer in self.by_degree:
            for w in layer:
                seen.setdefault(w, w)
        return sorted(seen.values(), key=lambda w: w.vector)

    def degree(self, p: int) -> tuple:
        return self.by_degree[p]


def jump_loci(c: InvariantComplex) -> JumpLocus:
    tab = table(c)
    by_degree = []
    for p in range(c.n + 1):
        by_degree.append(tuple(w for w in tab.classes() if tab.dim(w, p)))
    K = tuple(tuple(enumerate_K(c.weights, p, c.group)) for p in range(c.n + 1))
    return JumpLocus(tuple(by_degree), K)


# --------------------------------------------------------------------------
# products

def _check_closed(c: InvariantComplex, w: WeightClass, form: Form, what: str) -> int:
    if not form:
        return -1
    p = form.degree()
    if any(c.class_of(m) != w for m in form.masks()):
        raise ValueError(f"{what} has terms outside class {list(w.vector)}")
    if c.d(form):
        raise NotClosedError(f"{what} is not D-closed")
    return p


def project(c: InvariantComplex, w: WeightClass, form: Form, p: int | None = None) -> tuple:
    """Cohomology coordinates of a closed form of class ``w``."""
    if p is None:
        if not form:
            raise ValueError("degree of the zero form is ambiguous; pass p")
        p = form.degree()
    if not c.in_K(w) or p > c.n:
        if form:
            raise ValueError("form does not live in an existing block")
        return ()
    return cohomology(c, w)[p].coordinates(form)


def cup(c: InvariantComplex, w1: WeightClass, rep1: Form, w2: WeightClass, rep2: Form) -> tuple[WeightClass, tuple]:
    p1 = _check_closed(c, w1, rep1, "first factor")
    p2 = _check_closed(c, w2, rep2, "second factor")
    w = w1 + w2
    if p1 < 0 or p2 < 0:
        return w, ()
    prod = rep1.wedge(rep2)
    p = p1 + p2
    if not c.in_K(w) or p > c.n:
        return w, ()
    return w, project(c, w, prod, p)


# --------------------------------------------------------------------------
# hard Lefschetz

@dataclass(frozen=True)
class LefschetzDegree:
    i: int
    source_dim: int
    target_dim: int
    rank: int

    @property
    def iso(self) -> bool:
        return self.rank == self.source_dim == self.target_dim


@dataclass(frozen=True)
class LefschetzResult:
    weight: WeightClass
    degrees: tuple

    @property
    def passed(self) -> bool:
        return all(d.iso for d in self.degrees)

    def failures(self) -> list[int]:
        return [d.i for d in self.degrees if not d.iso]


def check_symplectic(c: InvariantComplex, omega: Form) -> None:
    if c.n % 2:
        raise PreconditionError(f"odd dimension {c.n}: no symplectic form")
    if not omega or omega.degrees() != {2}:
        raise PreconditionError("omega must be a nonzero 2-form")
    if c.form_class(omega) != c.group.zero():
        raise PreconditionError("omega must have trivial weight")
    if c.d(omega):
        raise PreconditionError("omega is not closed")
    if not omega.power(c.n // 2):
        raise PreconditionError("omega^n vanishes: omega is degenerate")


def lefschetz_test(c: InvariantComplex, omega: Form, w: WeightClass) -> LefschetzResult:
    check_symplectic(c, omega)
    m = c.n // 2
    h = cohomology(c, w)
    out = []
    for i in range(m + 1):
        power = omega.power(m - i)
        src, tgt = h[i], h[2 * m - i]
        cols = [tgt.coordinates(power.wedge(r)) if tgt.dim else () for r in src.representatives]
        mat = ScalarMatrix.from_columns(cols, tgt.dim) if cols else ScalarMatrix(tgt.dim, 0)
        out.append(LefschetzDegree(i, src.dim, tgt.dim, linalg.rank(mat)))
    return LefschetzResult(w, tuple(out))


@dataclass(frozen=True)
class HyperLefschetzResult:
    results: tuple  # LefschetzResult per jump-locus class
    hull_abelian: bool

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


def hyper_lefschetz(c: InvariantComplex, omega: Form) -> HyperLefschetzResult:
    check_symplectic(c, omega)
    classes = jump_loci(c).classes
    results = tuple(ordered_map(lambda w: lefschetz_test(c, omega, w), classes))
    res = HyperLefschetzResult(results, hull_is_abelian(c))
    if res.passed != res.hull_abelian:
        raise CriterionMismatch(
            f"hard Lefschetz over all jump-locus classes gives {res.passed} but the abelian-hull criterion gives {res.hull_abelian}"
        )
    return res


# --------------------------------------------------------------------------
# Massey triples

@dataclass(frozen=True)
class MasseyResult:
    vanishes: bool
    weight: WeightClass
    degree: int
    representative: Form
    coordinates: tuple
    indeterminacy_dim: int
    primitives: tuple = ()  # (x, y)


def _primitive(c: InvariantComplex, w: WeightClass, target: Form, p: int, reverse: bool) -> Form | None:
    """Some x of class w, degree p - 1, with D x = target (None if not exact)."""
    if not target:
        return Form()
    if p == 0 or not c.in_K(w):
        return None
    _, d_in = c.weight_block(w, p)
    basis = c.block_basis(w, p)
    vec = target.to_vector({m: k for k, m in enumerate(basis)}, len(basis))
    sol = linalg.solve(d_in, vec, reverse=reverse)
    if sol is None:
        return None
    return Form.from_vector(sol, c.block_basis(w, p - 1))


def massey_triple(
    c: InvariantComplex,
    weights: tuple,
    a: Form,
    b: Form,
    cc: Form,
    reverse: bool = False,
) -> MasseyResult:
    """The triple product <[a],[b],[cc]> modulo its indeterminacy."""
    wa, wb, wc = weights
    pa = _check_closed(c, wa, a, "a")
    pb = _check_closed(c, wb, b, "b")
    pc = _check_closed(c, wc, cc, "c")
    w = wa + wb + wc
    if min(pa, pb, pc) < 0:
        return MasseyResult(True, w, max(pa, 0) + max(pb, 0) + max(pc, 0) - 1, Form(), (), 0)
    x = _primitive(c, wa + wb, a.wedge(b), pa + pb, reverse)
    if x is None:
        raise PreconditionError("[a] cup [b] is nonzero; the triple product is undefined")
    y = _primitive(c, wb + wc, b.wedge(cc), pb + pc, reverse)
    if y is None:
        raise PreconditionError("[b] cup [c] is nonzero; the triple product is undefined")
    sign = -1 if pa % 2 else 1
    rep = a.wedge(y) - x.wedge(cc).scale(sign)
    deg = pa + pb + pc - 1
    if not c.in_K(w) or deg > c.n:
        return MasseyResult(True, w, deg, rep, (), 0, (x, y))
    h = cohomology(c, w)[deg]
    coords = h.coordinates(rep)
    indet = []
    for rep_h in cohomology_or_zero(c, wb + wc)[pb + pc - 1].representatives:
        indet.append(h.coordinates(a.wedge(rep_h)))
    for rep_h in cohomology_or_zero(c, wa + wb)[pa + pb - 1].representatives:
        indet.append(h.coordinates(rep_h.wedge(cc)))
    indet_basis = linalg.span_basis(indet, h.dim) if indet and h.dim else []
    if not any(coords):
        vanishes = True
    else:
        vanishes = bool(indet_basis) and linalg.membership(coords, indet_basis) is not None
    return MasseyResult(vanishes, w, deg, rep, coords, len(indet_basis), (x, y))


def find_massey_witness(c: InvariantComplex) -> tuple | None:
    """Search triples of degree-1 representatives for a nonvanishing product.

    Returns ((w_a, a), (w_b, b), (w_c, c), MasseyResult) or None.
    """
    layer = []
    for w in c.classes:
        for r in cohomology(c, w)[1].representatives if c.n else ():
            layer.append((w, r))
    for (wa, a), (wb, b), (wc, cc) in product(layer, repeat=3):
        try:
            res = massey_triple(c, (wa, wb, wc), a, b, cc)
        except PreconditionError:
            continue
        if not res.vanishes:
            return (wa, a), (wb, b), (wc, cc), res
    return None


# --------------------------------------------------------------------------
# mu-symmetry

@dataclass(frozen=True)
class MuSymmetry:
    symmetric: bool
    witness: WeightClass | None = None
    witness_dim: int = 0


def mu_symmetry(c: InvariantComplex) -> MuSymmetry:
    """Unitarity of every generator weight; otherwise a non-unitary class with H^1 != 0."""
    if all(is_unitary(w) for w in c.weights):
        return MuSymmetry(True)
    seen = set()
    for w in c.weights:
        if w in seen or is_unitary(w):
            continue
        seen.add(w)
        dim = cohomology(c, w).dims[1]
        if dim:
            return MuSymmetry(False, w, dim)
    raise CriterionMismatch("non-unitary weights present but no non-unitary class has H^1 != 0")


def euler_characteristic(c: InvariantComplex, w: WeightClass) -> tuple[int, int]:
    """(alternating sum of H^p dims, alternating sum of block sizes)."""
    h = cohomology(c, w)
    chi_h = sum((-1) ** p * d for p, d in enumerate(h.dims))
    chi_c = sum((-1) ** p * len(c.block_basis(w, p)) for p in range(c.n + 1))
    return chi_h, chi_c
