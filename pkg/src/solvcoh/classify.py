"""Kähler-admissibility classifier built from the structural criteria."""

from __future__ import annotations

from dataclasses import dataclass, field

from .cohomology import (
    CriterionMismatch,
    PreconditionError,
    check_symplectic,
    cohomology,
    find_massey_witness,
    hyper_lefschetz,
    jump_loci,
    mu_symmetry,
)
from .model import InvariantComplex, ModelSpec, build_complex, hull_is_abelian
from .weights import is_unitary

# citation keys naming the result each verdict rests on
CITE_HULL = "abelian-hull-iff-semidirect-product"
CITE_UNITARY = "mu-symmetry-iff-unitary-weights"
CITE_WITNESS = "non-unitary-weight-gives-H1-class"
CITE_B1 = "kahler-implies-even-b1"
CITE_FORMAL = "hyper-formal-iff-abelian-hull"
CITE_MASSEY = "massey-product-obstructs-formality"
CITE_LEFSCHETZ = "hyper-lefschetz-iff-abelian-hull"
CITE_KAHLER = "kahler-iff-abelian-hull-and-unitary-weights"


@dataclass(frozen=True)
class Verdict:
    key: str
    value: object  # bool, int, or None for "not evaluated"
    citation: str
    detail: str = ""


@dataclass
class Report:
    name: str
    admissible: bool
    reasons: list
    verdicts: list = field(default_factory=list)
    b1: int = 0
    jump_locus: list = field(default_factory=list)  # (WeightClass, dims)
    massey_witness: object = None
    lefschetz: dict = field(default_factory=dict)  # form name -> HyperLefschetzResult | str
    mu: object = None

    def verdict(self, key: str) -> Verdict:
        for v in self.verdicts:
            if v.key == key:
                return v
        raise KeyError(key)


def classify(spec: ModelSpec, complex_: InvariantComplex | None = None) -> Report:
    c = complex_ or build_complex(spec)
    abelian = hull_is_abelian(c)
    unitary = all(is_unitary(w) for w in c.weights)
    zero = c.group.zero()
    b1 = cohomology(c, zero).dims[1] if c.n else 0
    even_dim = c.n % 2 == 0
    verdicts = [
        Verdict("hull-abelian", abelian, CITE_HULL, "model differential vanishes on generators" if abelian else "model differential is nonzero on some generator"),
        Verdict("unitary-weights", unitary, CITE_UNITARY),
        Verdict("b1", b1, CITE_B1, "even" if b1 % 2 == 0 else "odd"),
    ]

    witness = None
    if not abelian:
        witness = find_massey_witness(c)
    if witness is not None and abelian:
        raise CriterionMismatch("nonvanishing Massey product on a model with abelian hull")
    formal_detail = ""
    if witness is not None:
        (_, a), (_, b), (_, cc), res = witness
        labels = spec.labels()
        formal_detail = f"<{a.pretty(labels)}, {b.pretty(labels)}, {cc.pretty(labels)}> = [{res.representative.pretty(labels)}] != 0"
    verdicts.append(Verdict("hyper-formal", abelian, CITE_FORMAL if witness is None else f"{CITE_FORMAL}; {CITE_MASSEY}", formal_detail))

    lefschetz: dict = {}
    for name, omega in sorted(spec.symplectic_forms.items()):
        try:
            check_symplectic(c, omega)
        except PreconditionError as e:
            lefschetz[name] = f"not symplectic: {e}"
            continue
        lefschetz[name] = hyper_lefschetz(c, omega)
    evaluated = {k: v for k, v in lefschetz.items() if not isinstance(v, str)}
    if evaluated:
        passed = all(v.passed for v in evaluated.values())
        if passed != abelian:
            raise CriterionMismatch("hyper-Lefschetz verdict disagrees with the abelian-hull criterion")
        verdicts.append(Verdict("hyper-lefschetz", passed, CITE_LEFSCHETZ, "form " + ",".join(sorted(evaluated))))
    else:
        verdicts.append(Verdict("hyper-lefschetz", None, CITE_LEFSCHETZ, "not evaluated: no symplectic form supplied"))

    mu = mu_symmetry(c)
    mu_detail = ""
    if mu.witness is not None:
        mu_detail = f"witness class {mu.witness.pretty()} with dim H^1 = {mu.witness_dim}"
    verdicts.append(Verdict("mu-symmetry", mu.symmetric, f"{CITE_UNITARY}; {CITE_WITNESS}" if mu.witness else CITE_UNITARY, mu_detail))

    reasons = []
    if not abelian:
        reasons.append("non-abelian-hull")
    if not unitary:
        reasons.append("non-unitary-weights")
    if not even_dim:
        reasons.append("odd-dimension")
    admissible = not reasons
    if admissible and not (mu.symmetric and b1 % 2 == 0):
        raise CriterionMismatch("Kähler-admissible verdict without mu-symmetry and even b1")
    verdicts.append(Verdict("kahler-admissible", admissible, CITE_KAHLER, "input trusted to describe a lattice quotient"))

    locus = jump_loci(c)
    table = [(w, cohomology(c, w).dims) for w in locus.classes]
    return Report(
        name=spec.name,
        admissible=admissible,
        reasons=reasons,
        verdicts=verdicts,
        b1=b1,
        jump_locus=table,
        massey_witness=witness,
        lefschetz=lefschetz,
        mu=mu,
    )
