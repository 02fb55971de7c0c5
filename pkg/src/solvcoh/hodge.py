"""Bigraded layer: Dolbeault, Bott-Chern, the Dolbeault-to-twisted spectral
sequence, and (hyper-)strong-Hodge-decomposition checks.

All operators act on the full exterior algebra of the Lie algebra dual with
the untwisted Chevalley-Eilenberg differential d = del + delbar, split by the
bidegree tags of the generators.  Twists enter as wedge multiplication by
1-forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .forms import ZERO_FORM, Form, popcount
from .linalg import ScalarMatrix
from .model import ANTI, HOLO, InvariantComplex, derive, operator_matrix
from .scalar import Scalar, ScalarLike


class IntegrabilityError(ValueError):
    pass


class OperatorInconsistency(ValueError):
    pass


class TwistError(ValueError):
    pass


class SpectralSequenceMismatch(RuntimeError):
    """The two spectral-sequence algorithms (or E_infinity vs direct) disagree."""


class Operator:
    """A derivation (given on generators) plus left wedge by a 1-form."""

    def __init__(self, images: Sequence[Form], multiplier: Form = ZERO_FORM):
        self.images = tuple(images)
        self.multiplier = multiplier
        self._cache: dict = {}

    def on_mask(self, mask: int) -> Form:
        f = self._cache.get(mask)
        if f is None:
            f = Form(derive(self.images, mask)) if self.images else ZERO_FORM
            if self.multiplier:
                f = f + self.multiplier.wedge(Form({mask: 1}))
            self._cache[mask] = f
        return f

    def __call__(self, form: Form) -> Form:
        acc: dict = {}
        for mask, c in form.items():
            for m, v in self.on_mask(mask).items():
                acc[m] = acc.get(m, Scalar(0)) + c * v
        return Form(acc)

    def __add__(self, other: Operator) -> Operator:
        n = max(len(self.images), len(other.images))
        a = self.images + (ZERO_FORM,) * (n - len(self.images))
        b = other.images + (ZERO_FORM,) * (n - len(other.images))
        return Operator([x + y for x, y in zip(a, b)], self.multiplier + other.multiplier)

    def scale(self, t: ScalarLike) -> Operator:
        return Operator([f.scale(t) for f in self.images], self.multiplier.scale(t))


def anticommutator_vanishes(p: Operator, q: Operator, n: int) -> bool:
    """PQ + QP = 0 (with P = Q this is P^2 = 0).

    For odd derivations plus wedge terms the anticommutator is a derivation
    plus wedge by a 2-form, so it is enough to test 1 and the generators.
    """
    for mask in [0] + [1 << k for k in range(n)]:
        x = Form({mask: 1})
        if p(q(x)) + q(p(x)):
            return False
    return True


@dataclass(frozen=True)
class BigradedComplex:
    base: InvariantComplex
    holo: tuple  # generator indices tagged (1,0)
    anti: tuple
    del_images: tuple
    delbar_images: tuple
    conj: tuple  # generator permutation for complex conjugation

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def holo_mask(self) -> int:
        return sum(1 << i for i in self.holo)

    @property
    def anti_mask(self) -> int:
        return sum(1 << i for i in self.anti)

    def bidegree(self, mask: int) -> tuple[int, int]:
        return popcount(mask & self.holo_mask), popcount(mask & self.anti_mask)

    def form_bidegrees(self, form: Form) -> set:
        return {self.bidegree(m) for m in form.masks()}

    def is_pure(self, form: Form, bideg: tuple) -> bool:
        return self.form_bidegrees(form) <= {bideg}

    def conjugate(self, form: Form) -> Form:
        return form.conjugate(self.conj)

    @property
    def delbar(self) -> Operator:
        return Operator(self.delbar_images)

    @property
    def del_(self) -> Operator:
        return Operator(self.del_images)

    @property
    def d(self) -> Operator:
        return Operator(self.base.lie_images)

    def basis(self, k: int) -> list[int]:
        return self.base.degree_basis(k)

    def bibasis(self, p: int, q: int) -> list[int]:
        return [m for m in self.basis(p + q) if self.bidegree(m) == (p, q)]


def split_bigrading(c: InvariantComplex) -> BigradedComplex:
    spec = c.spec
    if not spec.has_bigrading():
        raise IntegrabilityError("bidegree tags are missing")
    conj = spec.conjugation()
    if conj is None:
        raise IntegrabilityError("(1,0) and (0,1) generators do not pair up")
    holo = tuple(i for i, g in enumerate(spec.generators) if g.bidegree == HOLO)
    anti = tuple(i for i, g in enumerate(spec.generators) if g.bidegree == ANTI)
    hm = sum(1 << i for i in holo)
    am = sum(1 << i for i in anti)
    bideg = lambda m: (popcount(m & hm), popcount(m & am))
    dels, delbars = [], []
    for k, g in enumerate(spec.generators):
        a, b = g.bidegree
        img = c.lie_images[k]
        up = img.restrict(lambda m: bideg(m) == (a + 1, b))
        right = img.restrict(lambda m: bideg(m) == (a, b + 1))
        leak = img - up - right
        if leak:
            raise IntegrabilityError(
                f"d {g.label} has a component of forbidden bidegree: {leak.pretty(spec.labels())}"
            )
        dels.append(up)
        delbars.append(right)
    bc = BigradedComplex(c, holo, anti, tuple(dels), tuple(delbars), tuple(conj))
    n = c.n
    for name, p, q in (("delbar^2", bc.delbar, bc.delbar), ("del^2", bc.del_, bc.del_), ("del delbar + delbar del", bc.del_, bc.delbar)):
        if not anticommutator_vanishes(p, q, n):
            raise IntegrabilityError(f"{name} is nonzero")
    return bc


def holomorphic_one_forms(b: BigradedComplex) -> list[Form]:
    """Echelon basis of the delbar-closed (1,0) combinations of generators."""
    src = [1 << i for i in b.holo]
    tgt = b.bibasis(1, 1)
    m = operator_matrix(b.delbar.on_mask, src, tgt)
    return [Form.from_vector(v, src) for v in linalg.kernel_basis(m)]


# --------------------------------------------------------------------------
# generic cohomology of an operator on the total exterior algebra

def _matrix(op: Operator, source: list[int], target: list[int]) -> ScalarMatrix:
    return operator_matrix(op.on_mask, source, target)


def _cohomology_dims(op: Operator, bases: list[list[int]]) -> tuple:
    """dim ker - dim im in each degree, with ``bases[k]`` the degree-k basis."""
    out = []
    n = len(bases) - 1
    ranks = []
    for k in range(n + 1):
        tgt = bases[k + 1] if k < n else []
        ranks.append(linalg.rank(_matrix(op, bases[k], tgt)))
    for k in range(n + 1):
        out.append(len(bases[k]) - ranks[k] - (ranks[k - 1] if k else 0))
    return tuple(out)


def total_cohomology(b: BigradedComplex, op: Operator) -> tuple:
    return _cohomology_dims(op, [b.basis(k) for k in range(b.n + 1)])


@dataclass(frozen=True)
class DolbeaultResult:
    total: tuple
    bigraded: dict | None  # (p,q) -> dim, only when theta = 0


def _check_twists(b: BigradedComplex, B: Form, theta: Form) -> None:
    if B and not b.is_pure(B, ANTI):
        raise TwistError("B must be a (0,1)-form")
    if theta and not b.is_pure(theta, HOLO):
        raise TwistError("theta must be a (1,0)-form")
    if theta and b.delbar(theta):
        raise TwistError("theta is not holomorphic (delbar theta != 0)")
    if not anticommutator_vanishes(b.delbar + Operator((), B), b.delbar + Operator((), B), b.n):
        raise TwistError("(delbar + B)^2 != 0")


def dolbeault_cohomology(b: BigradedComplex, B: Form | None = None, theta: Form | None = None) -> DolbeaultResult:
    B = B or ZERO_FORM
    theta = theta or ZERO_FORM
    _check_twists(b, B, theta)
    op = b.delbar + Operator((), B + theta)
    total = total_cohomology(b, op)
    bigraded = None
    if not theta:
        bigraded = {}
        m = len(b.holo)
        for p in range(m + 1):
            bases = [b.bibasis(p, q) for q in range(len(b.anti) + 1)]
            for q, dim in enumerate(_cohomology_dims(op, bases)):
                bigraded[(p, q)] = dim
    return DolbeaultResult(total, bigraded)


# --------------------------------------------------------------------------
# spectral sequence

@dataclass(frozen=True)
class Page:
    r: int
    dims: dict  # (p, q) -> dim

    def total(self, k: int) -> int:
        return sum(v for (p, q), v in self.dims.items() if p + q == k)


@dataclass(frozen=True)
class SpectralSequence:
    pages: tuple  # Page for r = 1 .. R
    infinity: Page
    direct_totals: tuple
    filtration: str


class _Filtered:
    """Total complex filtered by one component of the bidegree."""

    def __init__(self, b: BigradedComplex, d0: Operator, d1: Operator, by_holo: bool):
        self.b = b
        self.d0, self.d1 = d0, d1
        self.by_holo = by_holo
        self.n = b.n
        self.smax = len(b.holo) if by_holo else len(b.anti)
        self._bases: dict = {}
        self._mats: dict = {}

    def s_of(self, mask: int) -> int:
        p, q = self.b.bidegree(mask)
        return p if self.by_holo else q

    def bidegree(self, s: int, k: int) -> tuple:
        return (s, k - s) if self.by_holo else (k - s, s)

    def basis(self, s: int, k: int) -> list[int]:
        key = (s, k)
        if key not in self._bases:
            if s < 0 or s > self.smax or k < 0 or k > self.n:
                self._bases[key] = []
            else:
                self._bases[key] = [m for m in self.b.basis(k) if self.s_of(m) == s]
        return self._bases[key]

    def mat(self, which: int, s: int, k: int) -> ScalarMatrix:
        """d0 (which=0): (s,k)->(s,k+1); d1 (which=1): (s,k)->(s+1,k+1)."""
        key = (which, s, k)
        if key not in self._mats:
            op = self.d0 if which == 0 else self.d1
            self._mats[key] = _matrix(op, self.basis(s, k), self.basis(s + which, k + 1))
        return self._mats[key]

    # zig-zag description ---------------------------------------------------

    def _block_system(self, col_blocks, row_blocks, entries):
        """Assemble a block matrix; entries maps (row_block, col_block) -> ScalarMatrix."""
        col_off, off = [], 0
        for cb in col_blocks:
            col_off.append(off)
            off += len(cb)
        ncols = off
        rows: list = []
        for ri, rb in enumerate(row_blocks):
            local = [dict() for _ in rb]
            for (r, cidx), m in entries.items():
                if r != ri:
                    continue
                for i in range(m.rows):
                    for j, v in m.row(i).items():
                        local[i][col_off[cidx] + j] = v
            rows.extend(local)
        return ScalarMatrix(len(rows), ncols, rows), col_off

    def zigzag_X(self, r: int, s: int, k: int) -> list:
        """Leading components x_s of zig-zags x_s + ... + x_{s+r-1} with D-image in F^{s+r}."""
        cols = [self.basis(s + j, k) for j in range(r)]
        rows = [self.basis(s + j, k + 1) for j in range(r)]
        entries = {}
        for j in range(r):
            entries[(j, j)] = self.mat(0, s + j, k)
            if j:
                entries[(j, j - 1)] = self.mat(1, s + j - 1, k)
        m, off = self._block_system(cols, rows, entries)
        width = len(cols[0])
        lead = [v[:width] for v in linalg.kernel_basis(m)]
        return linalg.span_basis(lead, width) if lead and width else []

    def zigzag_Y(self, r: int, s: int, k: int) -> list:
        """A^s-components of D y for y in F^{s-r+1} with D y in F^s."""
        lo = s - r + 1
        cols = [self.basis(lo + j, k - 1) for j in range(r)]
        rows = [self.basis(lo + j, k) for j in range(r - 1)]
        entries = {}
        for j in range(r - 1):
            entries[(j, j)] = self.mat(0, lo + j, k - 1)
            if j:
                entries[(j, j - 1)] = self.mat(1, lo + j - 1, k - 1)
        m, off = self._block_system(cols, rows, entries)
        target = self.basis(s, k)
        if not target:
            return []
        out_entries = {(0, r - 1): self.mat(0, s, k - 1)}
        if r >= 2:
            out_entries[(0, r - 2)] = self.mat(1, s - 1, k - 1)
        out, _ = self._block_system(cols, [target], out_entries)
        ker = linalg.kernel_basis(m)
        imgs = [out.apply(v) for v in ker]
        return linalg.span_basis(imgs, len(target)) if imgs else []

    def zigzag_dim(self, r: int, s: int, k: int) -> int:
        X = self.zigzag_X(r, s, k)
        Y = self.zigzag_Y(r, s, k)
        width = len(self.basis(s, k))
        if Y and linalg.span_dim(list(X) + list(Y), width) != len(X):
            raise SpectralSequenceMismatch(f"Y_{r} not contained in X_{r} at filtration {s}, degree {k}")
        return len(X) - len(Y)

    # filtration description ------------------------------------------------

    def _full(self, k: int) -> list[int]:
        if k < 0 or k > self.n:
            return []
        return [m for s in range(self.smax + 1) for m in self.basis(s, k)]

    def _D(self, k: int) -> ScalarMatrix:
        key = ("D", k)
        if key not in self._mats:
            op = self.d0 + self.d1
            self._mats[key] = _matrix(op, self._full(k), self._full(k + 1))
        return self._mats[key]

    def Z(self, r: int, s: int, k: int) -> list:
        """F^s cap D^{-1} F^{s+r} in degree k, as vectors over the full degree-k basis."""
        full = self._full(k)
        if not full:
            return []
        keep_cols = [j for j, m in enumerate(full) if self.s_of(m) >= s]
        if not keep_cols:
            return []
        D = self._D(k)
        tgt = self._full(k + 1)
        low_rows = [i for i, m in enumerate(tgt) if self.s_of(m) < s + r]
        sub = ScalarMatrix(
            len(low_rows),
            len(keep_cols),
            ({keep_cols.index(j): v for j, v in D.row(i).items() if j in keep_cols} for i in low_rows),
        )
        out = []
        for v in linalg.kernel_basis(sub):
            full_v = [Scalar(0)] * len(full)
            for idx, j in enumerate(keep_cols):
                full_v[j] = v[idx]
            out.append(tuple(full_v))
        return out

    def filtration_dim(self, r: int, s: int, k: int) -> int:
        full = self._full(k)
        if not full:
            return 0
        num = self.Z(r, s, k)
        den = list(self.Z(r - 1, s + 1, k))
        D = self._D(k - 1) if k > 0 else None
        if D is not None:
            den += [D.apply(v) for v in self.Z(r - 1, s - r + 1, k - 1)]
        return linalg.span_dim(num, len(full)) - (linalg.span_dim(den, len(full)) if den else 0)


def spectral_sequence(
    b: BigradedComplex,
    B: Form | None = None,
    theta: Form | None = None,
    t: ScalarLike = 1,
    r_max: int | None = None,
    filtration: str = "delbar",
) -> SpectralSequence:
    """Pages of the spectral sequence of the pair (delbar + B, t theta).

    ``filtration="delbar"`` filters by the holomorphic degree, so that
    d_0 = delbar + B and E_1 is twisted Dolbeault cohomology; ``"theta"``
    filters by the antiholomorphic degree, so that d_0 = t theta.
    """
    t = Scalar.coerce(t)
    if not t:
        raise ValueError("t must be nonzero")
    B = B or ZERO_FORM
    theta = theta or ZERO_FORM
    _check_twists(b, B, theta)
    vert = b.delbar + Operator((), B)
    horiz = Operator((), theta.scale(t))
    if filtration == "delbar":
        fc = _Filtered(b, vert, horiz, by_holo=True)
    elif filtration == "theta":
        fc = _Filtered(b, horiz, vert, by_holo=False)
    else:
        raise ValueError(f"unknown filtration {filtration!r}")
    stable = fc.smax + 2
    R = max(r_max or 1, stable)
    pages = []
    for r in range(1, R + 1):
        dims = {}
        for k in range(b.n + 1):
            for s in range(fc.smax + 1):
                if not fc.basis(s, k) and not fc.basis(s, k - 1):
                    zz = ff = 0
                else:
                    zz = fc.zigzag_dim(r, s, k)
                    ff = fc.filtration_dim(r, s, k)
                if zz != ff:
                    raise SpectralSequenceMismatch(
                        f"page {r}, filtration {s}, degree {k}: zig-zag gives {zz}, filtration quotient gives {ff}"
                    )
                pq = fc.bidegree(s, k)
                if 0 <= pq[0] <= len(b.holo) and 0 <= pq[1] <= len(b.anti):
                    dims[pq] = zz
        pages.append(Page(r, dims))
    infinity = pages[-1]
    direct = total_cohomology(b, vert + horiz)
    for k in range(b.n + 1):
        if infinity.total(k) != direct[k]:
            raise SpectralSequenceMismatch(f"E_infinity total {infinity.total(k)} != direct {direct[k]} in degree {k}")
    shown = pages[: r_max] if r_max else pages
    return SpectralSequence(tuple(shown), infinity, direct, filtration)


# --------------------------------------------------------------------------
# Bott-Chern and Hodge decompositions

@dataclass(frozen=True)
class BottChernResult:
    dims: tuple  # per total degree
    representatives: tuple  # per degree, tuple of Forms
    bigraded: dict | None


def _bc_degree(b: BigradedComplex, P: Operator, Q: Operator, k: int, basis_of) -> tuple[int, list]:
    src = basis_of(k)
    if not src:
        return 0, []
    up = b.basis(k + 1) if k < b.n else []
    stacked_rows = list(_matrix(P, src, up).sparse_rows()) + list(_matrix(Q, src, up).sparse_rows())
    stacked = ScalarMatrix(len(stacked_rows), len(src), stacked_rows)
    ker = linalg.kernel_basis(stacked)
    index = {m: i for i, m in enumerate(src)}
    image = []
    if k >= 2:
        for m in b.basis(k - 2):
            f = P(Q(Form({m: 1}))).restrict(lambda x: x in index)
            image.append(f.to_vector(index, len(src)))
        image = linalg.span_basis(image, len(src)) if image else []
    reps, span = [], list(image)
    for v in ker:
        if not span or linalg.membership(v, span) is None:
            reps.append(Form.from_vector(v, src))
            span.append(v)
    return len(reps), reps


def _bott_chern(b: BigradedComplex, P: Operator, Q: Operator) -> BottChernResult:
    if not (anticommutator_vanishes(P, P, b.n) and anticommutator_vanishes(Q, Q, b.n) and anticommutator_vanishes(P, Q, b.n)):
        raise OperatorInconsistency("twisted operators must square to zero and anticommute")
    dims, reps = [], []
    for k in range(b.n + 1):
        d, r = _bc_degree(b, P, Q, k, b.basis)
        dims.append(d)
        reps.append(tuple(r))
    return BottChernResult(tuple(dims), tuple(reps), None)


def bott_chern(b: BigradedComplex, A: Form | None = None, B: Form | None = None) -> BottChernResult:
    """ker(del + A) cap ker(delbar + B) / im (del + A)(delbar + B)."""
    A = A or ZERO_FORM
    B = B or ZERO_FORM
    P = b.del_ + Operator((), A)
    Q = b.delbar + Operator((), B)
    res = _bott_chern(b, P, Q)
    if b.is_pure(A, HOLO) and b.is_pure(B, ANTI):
        big = {}
        for p in range(len(b.holo) + 1):
            for q in range(len(b.anti) + 1):
                big[(p, q)] = _bc_degree(b, P, Q, p + q, lambda k, p=p, q=q: b.bibasis(p, q))[0]
        res = BottChernResult(res.dims, res.representatives, big)
    return res


def _map_rank(b: BigradedComplex, reps: Sequence[Form], op: Operator, k: int) -> tuple[int, int]:
    """(rank of reps -> H^k(op), dim H^k(op)); reps must be op-closed."""
    src = b.basis(k)
    if not src:
        return 0, 0
    index = {m: i for i, m in enumerate(src)}
    image = []
    if k:
        image = linalg.image_basis(_matrix(op, b.basis(k - 1), src))
    up = b.basis(k + 1) if k < b.n else []
    h_dim = len(src) - linalg.rank(_matrix(op, src, up)) - len(image)
    vecs = [r.to_vector(index, len(src)) for r in reps]
    ranked = linalg.span_dim(list(image) + vecs, len(src)) - len(image) if vecs else 0
    return ranked, h_dim


@dataclass(frozen=True)
class MapCheck:
    name: str
    source_dims: tuple
    target_dims: tuple
    ranks: tuple

    @property
    def iso(self) -> bool:
        return all(r == s == t for r, s, t in zip(self.ranks, self.source_dims, self.target_dims))

    def mismatch(self) -> str:
        for k, (r, s, t) in enumerate(zip(self.ranks, self.source_dims, self.target_dims)):
            if not r == s == t:
                return f"degree {k}: source {s}, target {t}, rank {r}"
        return ""


def _map_check(b: BigradedComplex, name: str, bc: BottChernResult, op: Operator) -> MapCheck:
    ranks, tdims = [], []
    for k in range(b.n + 1):
        r, h = _map_rank(b, bc.representatives[k], op, k)
        ranks.append(r)
        tdims.append(h)
    return MapCheck(name, bc.dims, tuple(tdims), tuple(ranks))


@dataclass(frozen=True)
class SHDResult:
    maps: tuple  # MapCheck
    caveat: str = ""

    @property
    def passed(self) -> bool:
        return all(m.iso for m in self.maps)


MODEL_CAVEAT = (
    "computed on the invariant bigraded model; transfer to the manifold requires that "
    "the model compute Dolbeault cohomology (see dolbeault_model_justification)"
)


def shd_test(b: BigradedComplex) -> SHDResult:
    bc = bott_chern(b)
    maps = (
        _map_check(b, "bott-chern->dolbeault", bc, b.delbar),
        _map_check(b, "bott-chern->de-rham", bc, b.d),
    )
    return SHDResult(maps, MODEL_CAVEAT)


@dataclass(frozen=True)
class HyperSHDResult:
    maps: tuple
    bott_chern_total: int
    dolbeault_total: int
    del_total: int
    de_rham_total: int
    de_rham_dims: tuple
    de_rham_source: str  # "weight-class <v>" or "direct"
    caveat: str = MODEL_CAVEAT

    @property
    def passed(self) -> bool:
        return all(m.iso for m in self.maps) and self.de_rham_total == self.dolbeault_total == self.bott_chern_total

    def mismatch(self) -> str:
        if self.de_rham_total != self.dolbeault_total:
            return f"de Rham side dim {self.de_rham_total} vs Dolbeault side dim {self.dolbeault_total}"
        for m in self.maps:
            if not m.iso:
                return f"{m.name}: {m.mismatch()}"
        return ""


def _twist_class(c: InvariantComplex, phi: Form):
    """An integer weight class whose log-derivative form is ``phi``, if any."""
    forms = c.symbol_forms or []
    if not forms:
        return c.group.zero() if not phi else None
    support = sorted({m for f in forms for m in f.masks()} | set(phi.masks()))
    index = {m: i for i, m in enumerate(support)}
    cols = [f.to_vector(index, len(support)) for f in forms]
    sol = linalg.membership(phi.to_vector(index, len(support)), cols)
    if sol is None:
        return None
    vec = []
    for x in sol:
        if x.im or x.re.denominator != 1:
            return None
        vec.append(int(x.re))
    return c.group.element(vec)


def hyper_shd_test(b: BigradedComplex, theta: Form | None = None, vartheta: Form | None = None) -> HyperSHDResult:
    """Natural maps out of H((del + vartheta + conj theta)(delbar - conj vartheta + theta))."""
    theta = theta or ZERO_FORM
    vartheta = vartheta or ZERO_FORM
    for name, f in (("theta", theta), ("vartheta", vartheta)):
        if f and not b.is_pure(f, HOLO):
            raise TwistError(f"{name} is not a (1,0)-form")
        if f and b.delbar(f):
            raise TwistError(f"{name} is not holomorphic")
    P = b.del_ + Operator((), vartheta + b.conjugate(theta))
    Q = b.delbar + Operator((), theta - b.conjugate(vartheta))
    bc = _bott_chern(b, P, Q)
    total = P + Q
    maps = (
        _map_check(b, "bott-chern->dolbeault", bc, Q),
        _map_check(b, "bott-chern->conjugate", bc, P),
        _map_check(b, "bott-chern->de-rham", bc, total),
    )
    phi = vartheta - b.conjugate(vartheta) + theta + b.conjugate(theta)
    from .cohomology import cohomology_or_zero

    w = _twist_class(b.base, phi)
    if w is not None:
        dr = cohomology_or_zero(b.base, w).dims
        source = f"weight-class {list(w.vector)}"
    else:
        dr = maps[2].target_dims
        source = "direct"
    return HyperSHDResult(
        maps=maps,
        bott_chern_total=sum(bc.dims),
        dolbeault_total=sum(maps[0].target_dims),
        del_total=sum(maps[1].target_dims),
        de_rham_total=sum(dr),
        de_rham_dims=tuple(dr),
        de_rham_source=source,
    )
