"""Command-line front end: ``solvcoh <command> FIXTURE [options]``.

Exit codes: 0 computed (verdict positive), 1 computed with a negative
verdict (classify, lefschetz, shd, hyper-shd), 2 input or computation error.
"""

from __future__ import annotations

import argparse
import sys

from . import cohomology as coh
from . import hodge
from .classify import classify
from .fixture import FixtureError, parse
from .forms import ZERO_FORM, Form
from .model import ModelValidationError, build_complex, lower_central_series, validate
from .report import Document, dims_str, table
from .scalar import Scalar
from .weights import WeightGroupError


class UsageError(ValueError):
    pass


def _form(spec, name: str | None) -> Form:
    if name is None or name == "0":
        return ZERO_FORM
    if name not in spec.forms:
        known = ", ".join(sorted(spec.forms)) or "none"
        raise UsageError(f"no form named {name!r} in the fixture (known: {known})")
    return spec.forms[name]


def _weight(c, text: str | None):
    g = c.group
    if text is None:
        return g.zero()
    text = text.strip().strip("()")
    if g.rank == 0 and text in ("", "0"):
        return g.zero()
    try:
        vec = [int(x) for x in text.split(",")] if text else []
    except ValueError:
        raise UsageError(f"bad class vector {text!r}") from None
    if len(vec) != g.rank:
        raise UsageError(f"class vector needs {g.rank} entries, got {len(vec)}")
    return g.element(vec)


def _vec(w) -> list:
    return list(w.vector)


def _bigraded(spec):
    c = build_complex(spec)
    return c, hodge.split_bigrading(c)


def _justification(doc: Document, spec) -> None:
    just = spec.meta.get("dolbeault_model_justification", "")
    doc.put("dolbeault_model_justification", just or "none")
    doc.text(f"model justification: {just or 'none given (results are model-level only)'}")


# --------------------------------------------------------------------------
# commands; each returns (Document, exit code)

def cmd_validate(spec, args):
    doc = Document("validate")
    rep = validate(spec)
    doc.put("valid", rep.ok)
    doc.put("violations", [v.code for v in rep.violations])
    if rep.ok:
        doc.text("valid")
        c = build_complex(spec)
        doc.put("lower_central_series", lower_central_series(c))
        doc.text(f"{spec.n} generators, lower central series {dims_str(lower_central_series(c))}")
        return doc, 0
    doc.text("invalid")
    for v in rep.violations:
        doc.text(f"  {v}")
    return doc, 2


def cmd_cohomology(spec, args):
    c = build_complex(spec)
    w = _weight(c, args.class_)
    h = coh.cohomology(c, w)
    doc = Document("cohomology")
    doc.put("class", _vec(w))
    doc.put("dims", list(h.dims))
    doc.put("total", h.total)
    doc.text(f"class {w.pretty()}   twist {c.class_one_form(w).pretty(spec.labels())}")
    degrees = [args.degree] if args.degree is not None else range(c.n + 1)
    rows = []
    for p in degrees:
        if not 0 <= p <= c.n:
            raise UsageError(f"degree {p} outside 0..{c.n}")
        reps = [r.pretty(spec.labels()) for r in h[p].representatives]
        doc.put(f"reps.{p}", reps)
        rows.append([str(p), str(h[p].dim), "; ".join(reps) or "-"])
    doc.text(table(["p", "dim", "representatives"], rows))
    return doc, 0


def cmd_jumploci(spec, args):
    c = build_complex(spec)
    locus = coh.jump_loci(c)
    doc = Document("jumploci")
    doc.put("count", len(locus.classes))
    doc.put("classes", [_vec(w) for w in locus.classes])
    rows = []
    for w in locus.classes:
        dims = coh.cohomology(c, w).dims
        doc.put(f"dims.{','.join(map(str, w.vector))}", list(dims))
        rows.append([w.pretty(), c.class_one_form(w).pretty(spec.labels()), dims_str(dims)])
    for p, layer in enumerate(locus.by_degree):
        doc.put(f"J.{p}", [_vec(w) for w in layer])
    doc.text(f"{len(locus.classes)} classes in the jump locus")
    doc.text(table(["class", "one-form", "dims"], rows))
    return doc, 0


def cmd_lefschetz(spec, args):
    c = build_complex(spec)
    omega = _form(spec, args.omega)
    doc = Document("lefschetz")
    if args.class_ is not None:
        results = [coh.lefschetz_test(c, omega, _weight(c, args.class_))]
        hull = None
    else:
        hl = coh.hyper_lefschetz(c, omega)
        results, hull = list(hl.results), hl.hull_abelian
    rows = []
    for r in results:
        key = ",".join(map(str, r.weight.vector))
        doc.put(f"iso.{key}", [d.iso for d in r.degrees])
        rows.append([r.weight.pretty()] + ["iso" if d.iso else f"fail({d.rank}/{d.source_dim}->{d.target_dim})" for d in r.degrees])
    passed = all(r.passed for r in results)
    doc.put("passed", passed)
    if hull is not None:
        doc.put("hull_abelian", hull)
        doc.put("citation", "hyper-lefschetz-iff-abelian-hull")
    m = c.n // 2
    doc.text(table(["class"] + [f"i={i}" for i in range(m + 1)], rows))
    doc.text(("hard Lefschetz holds" if passed else "hard Lefschetz fails") + (f" (hull abelian: {str(hull).lower()})" if hull is not None else ""))
    return doc, 0 if passed else 1


def cmd_massey(spec, args):
    c = build_complex(spec)
    names = [x.strip() for x in args.reps.split(",")]
    if len(names) != 3:
        raise UsageError("--reps takes three form names separated by commas")
    forms = [_form(spec, n) for n in names]
    weights = []
    for n, f in zip(names, forms):
        w = c.form_class(f) if f else c.group.zero()
        if w is None:
            raise UsageError(f"form {n!r} is not weight-homogeneous")
        weights.append(w)
    res = coh.massey_triple(c, tuple(weights), *forms)
    doc = Document("massey")
    doc.put("vanishes", res.vanishes)
    doc.put("class", _vec(res.weight))
    doc.put("degree", res.degree)
    doc.put("representative", res.representative.pretty(spec.labels()))
    doc.put("indeterminacy_dim", res.indeterminacy_dim)
    doc.text(f"<{', '.join(names)}> = [{res.representative.pretty(spec.labels())}] in degree {res.degree}, class {res.weight.pretty()}")
    doc.text(f"indeterminacy dim {res.indeterminacy_dim}; " + ("vanishes" if res.vanishes else "nonvanishing"))
    return doc, 0


def cmd_dolbeault(spec, args):
    c, b = _bigraded(spec)
    res = hodge.dolbeault_cohomology(b, _form(spec, args.phi01), _form(spec, args.theta))
    doc = Document("dolbeault")
    doc.put("total", list(res.total))
    doc.text(f"total dims {dims_str(res.total)}")
    if res.bigraded is not None:
        keys = sorted(res.bigraded)
        doc.put("hpq", [[p, q, res.bigraded[(p, q)]] for p, q in keys])
        m = len(b.holo)
        rows = [[str(p)] + [str(res.bigraded[(p, q)]) for q in range(len(b.anti) + 1)] for p in range(m + 1)]
        doc.text(table(["p\\q"] + [str(q) for q in range(len(b.anti) + 1)], rows))
    else:
        doc.text("bigrading broken by the holomorphic twist; totals only")
    _justification(doc, spec)
    return doc, 0


def cmd_spectral(spec, args):
    c, b = _bigraded(spec)
    try:
        t = Scalar.parse(args.t) if args.t else Scalar(1)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if not t:
        raise UsageError("--t must be nonzero")
    ss = hodge.spectral_sequence(b, _form(spec, args.phi01), _form(spec, args.theta), t=t, r_max=args.pages, filtration=args.filtration)
    doc = Document("spectral")
    doc.put("filtration", ss.filtration)
    for page in ss.pages:
        doc.put(f"E{page.r}", [[p, q, page.dims[(p, q)]] for p, q in sorted(page.dims)])
        nonzero = " ".join(f"({p},{q}):{page.dims[(p, q)]}" for p, q in sorted(page.dims) if page.dims[(p, q)])
        doc.text(f"E_{page.r}: {nonzero or '0'}")
    doc.put("Einf_totals", [ss.infinity.total(k) for k in range(b.n + 1)])
    doc.put("direct_totals", list(ss.direct_totals))
    doc.text(f"E_inf totals {dims_str([ss.infinity.total(k) for k in range(b.n + 1)])} = direct {dims_str(ss.direct_totals)}")
    return doc, 0


def cmd_shd(spec, args):
    c, b = _bigraded(spec)
    res = hodge.shd_test(b)
    doc = Document("shd")
    doc.put("passed", res.passed)
    rows = []
    for m in res.maps:
        doc.put(f"{m.name}.ranks", list(m.ranks))
        doc.put(f"{m.name}.iso", m.iso)
        rows.append([m.name, dims_str(m.source_dims), dims_str(m.target_dims), dims_str(m.ranks), "iso" if m.iso else m.mismatch()])
    doc.text(table(["map", "source", "target", "rank", "status"], rows))
    doc.text(("strong Hodge decomposition holds" if res.passed else "strong Hodge decomposition fails") + " (model level)")
    doc.text(f"caveat: {res.caveat}")
    _justification(doc, spec)
    return doc, 0 if res.passed else 1


def cmd_hyper_shd(spec, args):
    c, b = _bigraded(spec)
    res = hodge.hyper_shd_test(b, _form(spec, args.theta), _form(spec, args.vartheta))
    doc = Document("hyper-shd")
    doc.put("passed", res.passed)
    doc.put("bott_chern_total", res.bott_chern_total)
    doc.put("dolbeault_total", res.dolbeault_total)
    doc.put("del_total", res.del_total)
    doc.put("de_rham_total", res.de_rham_total)
    doc.put("de_rham_source", res.de_rham_source)
    doc.put("mismatch", res.mismatch() or "none")
    rows = [[m.name, dims_str(m.source_dims), dims_str(m.target_dims), dims_str(m.ranks), "iso" if m.iso else "fail"] for m in res.maps]
    doc.text(table(["map", "source", "target", "rank", "status"], rows))
    doc.text(f"de Rham side {dims_str(res.de_rham_dims)} from {res.de_rham_source}")
    doc.text("hyper strong Hodge decomposition " + ("holds for this pair" if res.passed else f"fails: {res.mismatch()}"))
    doc.text(f"caveat: {res.caveat}")
    _justification(doc, spec)
    return doc, 0 if res.passed else 1


def cmd_classify(spec, args):
    rep = classify(spec)
    doc = Document("classify")
    doc.put("name", rep.name)
    doc.put("verdict", rep.admissible)
    doc.put("reasons", rep.reasons)
    rows = []
    for v in rep.verdicts:
        value = "not-evaluated" if v.value is None else v.value
        doc.put(f"{v.key}", value)
        doc.put(f"{v.key}.citation", v.citation)
        rows.append([v.key, value if isinstance(value, str) else str(value).lower() if isinstance(value, bool) else str(value), v.citation, v.detail])
    if rep.mu.witness is not None:
        doc.put("mu-symmetry.witness", _vec(rep.mu.witness))
        doc.put("mu-symmetry.witness_h1", rep.mu.witness_dim)
    doc.put("jump_locus", [_vec(w) for w, _ in rep.jump_locus])
    head = "Kähler-admissible" if rep.admissible else "NOT Kähler-admissible"
    doc.text(f"{rep.name}: {head}" + (f" ({', '.join(rep.reasons)})" if rep.reasons else ""))
    doc.text(table(["check", "value", "justified by", "detail"], rows))
    doc.text("jump locus:")
    doc.text(table(["class", "dims"], [[w.pretty(), dims_str(d)] for w, d in rep.jump_locus]))
    return doc, 0 if rep.admissible else 1


COMMANDS = {
    "validate": cmd_validate,
    "cohomology": cmd_cohomology,
    "jumploci": cmd_jumploci,
    "lefschetz": cmd_lefschetz,
    "massey": cmd_massey,
    "dolbeault": cmd_dolbeault,
    "spectral": cmd_spectral,
    "shd": cmd_shd,
    "hyper-shd": cmd_hyper_shd,
    "classify": cmd_classify,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="solvcoh", description="Twisted cohomology and Kähler diagnostics of solvmanifold models.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("fixture", help="fixture file")
        p.add_argument("--format", choices=("text", "machine"), default="text")
        return p

    add("validate", "check a fixture; exit 2 if invalid")
    p = add("cohomology", "cohomology of one weight class")
    p.add_argument("--class", dest="class_", help="weight vector, comma separated (default: 0)")
    p.add_argument("--degree", type=int)
    add("jumploci", "classes with nonzero cohomology")
    p = add("lefschetz", "hard Lefschetz over the jump locus (exit 1 on failure)")
    p.add_argument("--omega", required=True, help="name of a 2-form in the fixture")
    p.add_argument("--class", dest="class_", help="test a single class only")
    p = add("massey", "triple Massey product of three named forms")
    p.add_argument("--reps", required=True, help="three form names, comma separated")
    p = add("dolbeault", "twisted Dolbeault cohomology")
    p.add_argument("--theta", help="holomorphic 1-form twist")
    p.add_argument("--phi01", help="(0,1)-form twist")
    p = add("spectral", "spectral sequence of (delbar + phi01, t theta)")
    p.add_argument("--theta", required=True)
    p.add_argument("--phi01")
    p.add_argument("--t", help="nonzero rational rescaling (default 1)")
    p.add_argument("--pages", type=int, help="number of pages to print")
    p.add_argument("--filtration", choices=("delbar", "theta"), default="delbar")
    add("shd", "strong Hodge decomposition (exit 1 on failure)")
    p = add("hyper-shd", "twisted strong Hodge decomposition for one pair (exit 1 on failure)")
    p.add_argument("--theta", required=True)
    p.add_argument("--vartheta", required=True, help="second holomorphic 1-form, or 0")
    add("classify", "Kähler-admissibility verdict (exit 1 if not admissible)")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)  # exits 2 with usage on bad flags
    try:
        spec = parse(args.fixture)
        if args.command != "validate":
            rep = validate(spec)
            if not rep.ok:
                raise ModelValidationError(rep)
        doc, code = COMMANDS[args.command](spec, args)
    except OSError as e:
        print(f"error: cannot read {args.fixture}: {e.strerror or e}", file=sys.stderr)
        return 2
    except FixtureError as e:
        print("error: malformed fixture", file=sys.stderr)
        for issue in e.issues:
            print(f"  {issue}", file=sys.stderr)
        return 2
    except (
        ModelValidationError,
        UsageError,
        WeightGroupError,
        coh.OutsideKError,
        coh.PreconditionError,
        coh.NotClosedError,
        hodge.IntegrabilityError,
        hodge.TwistError,
        hodge.OperatorInconsistency,
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (coh.CriterionMismatch, hodge.SpectralSequenceMismatch) as e:
        print(f"internal consistency error: {e}", file=sys.stderr)
        return 2
    sys.stdout.write(doc.render(args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
