"""Reading and writing the line-oriented fixture format.

Layout::

    solvcoh-fixture v1
    [meta]
    name: heisenberg
    dolbeault_model_justification: free text
    [weight_group]
    rank: 1
    base_dim: 1
    real_log: 1/2            # one line per symbol, base_dim entries
    relation: 2              # repeatable
    symbol_name: (dz1+dzb1)/2
    [generators]
    g1 weight=0 bidegree=1,0
    g2 weight=1 bidegree=1,0 logderiv=1:1/2,4:1/2
    [structure_constants]
    1 2 2 -1/2 0             # i j k re im: d x_k contains c x_i ^ x_j
    [forms]
    omega 1,4 0 1            # name multi-index re im; index order sets the sign

Indices are 1-based.  ``#`` starts a comment.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .forms import Form, mask_indices
from .linalg import IntegerLattice
from .model import Generator, ModelSpec
from .scalar import Scalar
from .weights import WeightGroup, WeightGroupError

HEADER = "solvcoh-fixture v1"
SECTIONS = ("meta", "weight_group", "generators", "structure_constants", "forms")


@dataclass(frozen=True)
class FixtureIssue:
    code: str
    line: int
    message: str

    def __str__(self) -> str:
        return f"line {self.line}: {self.code}: {self.message}"


class FixtureError(ValueError):
    def __init__(self, issues: list[FixtureIssue], source: str = "<string>"):
        self.issues = issues
        self.source = source
        super().__init__(f"{source}: " + "; ".join(str(i) for i in issues))

    @property
    def codes(self) -> list[str]:
        return [i.code for i in self.issues]


class _Bad(Exception):
    def __init__(self, code: str, message: str):
        self.code, self.message = code, message


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise _Bad("bad-number", f"not a rational number: {text!r}") from None


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise _Bad("bad-number", f"not an integer: {text!r}") from None


def _int_list(text: str) -> tuple:
    text = text.strip()
    return tuple(_int(x) for x in text.split(",")) if text else ()


def _frac_list(text: str) -> tuple:
    text = text.strip()
    return tuple(_frac(x) for x in text.split(",")) if text else ()


def parse(path: str | Path) -> ModelSpec:
    p = Path(path)
    return parse_text(p.read_text(encoding="utf-8"), str(p))


def parse_text(text: str, source: str = "<string>") -> ModelSpec:
    issues: list[FixtureIssue] = []
    lines = text.splitlines()
    body = [(no, ln.split("#", 1)[0].strip()) for no, ln in enumerate(lines, 1)]
    body = [(no, ln) for no, ln in body if ln]
    if not body or body[0][1] != HEADER:
        line = body[0][0] if body else 1
        raise FixtureError([FixtureIssue("header", line, f"first line must be {HEADER!r}")], source)

    meta: dict = {}
    wg: dict = {"real_log": [], "relation": [], "symbol_name": []}
    wg_lines: dict = {}
    gens: list = []
    triples: list = []
    forms: dict = {}
    section = None
    seen_sections: set = set()

    for no, ln in body[1:]:
        try:
            if ln.startswith("[") and ln.endswith("]"):
                section = ln[1:-1].strip()
                if section not in SECTIONS:
                    raise _Bad("section", f"unknown section [{section}]")
                if section in seen_sections:
                    raise _Bad("duplicate", f"section [{section}] repeated")
                seen_sections.add(section)
                continue
            if section is None:
                raise _Bad("syntax", "content before the first section")
            if section == "meta":
                key, sep, val = ln.partition(":")
                if not sep:
                    raise _Bad("syntax", "expected 'key: value'")
                key = key.strip()
                if key in meta:
                    raise _Bad("duplicate", f"meta key {key!r} repeated")
                meta[key] = val.strip()
            elif section == "weight_group":
                key, sep, val = ln.partition(":")
                key = key.strip()
                if not sep:
                    raise _Bad("syntax", "expected 'key: value'")
                if key in ("rank", "base_dim"):
                    if key in wg:
                        raise _Bad("duplicate", f"{key} repeated")
                    wg[key] = _int(val.strip())
                elif key == "real_log":
                    wg["real_log"].append(_frac_list(val))
                elif key == "relation":
                    wg["relation"].append(_int_list(val))
                    wg_lines.setdefault("relation", []).append(no)
                elif key == "symbol_name":
                    wg["symbol_name"].append(val.strip())
                else:
                    raise _Bad("unknown-key", f"unknown weight_group key {key!r}")
                wg_lines.setdefault(key, [no])
            elif section == "generators":
                gens.append((no, _parse_generator(ln)))
            elif section == "structure_constants":
                parts = ln.split()
                if len(parts) != 5:
                    raise _Bad("syntax", "expected 'i j k re im'")
                i, j, k = (_int(x) for x in parts[:3])
                triples.append((no, i, j, k, Scalar(_frac(parts[3]), _frac(parts[4]))))
            elif section == "forms":
                parts = ln.split()
                if len(parts) != 4:
                    raise _Bad("syntax", "expected 'name i,j,... re im'")
                idx = _int_list(parts[1])
                forms.setdefault(parts[0], []).append((no, idx, Scalar(_frac(parts[2]), _frac(parts[3]))))
        except _Bad as e:
            issues.append(FixtureIssue(e.code, no, e.message))

    end = body[-1][0]
    for key in ("name",):
        if key not in meta:
            issues.append(FixtureIssue("missing-field", end, f"meta field {key!r} missing"))
    for key in ("rank",):
        if key not in wg:
            issues.append(FixtureIssue("missing-field", end, f"weight_group field {key!r} missing"))
    if issues:
        raise FixtureError(issues, source)

    group = None
    try:
        rank = wg["rank"]
        for no, rel in zip(wg_lines.get("relation", []), wg["relation"]):
            if len(rel) != rank:
                issues.append(FixtureIssue("weight-length", no, f"relation {list(rel)} has length {len(rel)}, rank is {rank}"))
        if not issues:
            group = WeightGroup(
                rank=rank,
                relations=IntegerLattice(rank, tuple(wg["relation"])),
                real_log=tuple(wg["real_log"]),
                base_dim=wg.get("base_dim", 0),
                symbol_names=tuple(wg["symbol_name"]),
            )
    except WeightGroupError as e:
        code = "real-log-relation" if "relation" in str(e) and "real_log" in str(e) else "weight-group"
        line = wg_lines.get("relation" if code == "real-log-relation" else "real_log", [end])[0]
        issues.append(FixtureIssue(code, line, str(e)))
    if issues:
        raise FixtureError(issues, source)

    n = len(gens)
    labels = set()
    generators = []
    for no, (label, weight, bideg, logd) in gens:
        if label in labels:
            issues.append(FixtureIssue("duplicate", no, f"generator label {label!r} repeated"))
        labels.add(label)
        if len(weight) != group.rank:
            issues.append(FixtureIssue("weight-length", no, f"weight has length {len(weight)}, rank is {group.rank}"))
        for j, _ in logd:
            if not 1 <= j <= n:
                issues.append(FixtureIssue("index-range", no, f"logderiv index {j} outside 1..{n}"))
        generators.append(Generator(label, weight, bideg, tuple((j - 1, v) for j, v in logd)))
    sc = []
    for no, i, j, k, c in triples:
        if not all(1 <= x <= n for x in (i, j, k)):
            issues.append(FixtureIssue("index-range", no, f"index outside 1..{n}"))
        elif i >= j:
            issues.append(FixtureIssue("triple-order", no, "structure constants need i < j"))
        else:
            sc.append((i - 1, j - 1, k - 1, c))
    named: dict = {}
    for name, entries in forms.items():
        terms = []
        for no, idx, c in entries:
            if not idx or not all(1 <= x <= n for x in idx):
                issues.append(FixtureIssue("index-range", no, f"form index outside 1..{n}"))
            elif len(set(idx)) != len(idx):
                issues.append(FixtureIssue("syntax", no, "repeated index in a form term"))
            else:
                terms.append(([x - 1 for x in idx], c))
        named[name] = Form.from_terms(terms)
    if issues:
        raise FixtureError(issues, source)
    return ModelSpec(
        name=meta["name"],
        weight_group=group,
        generators=tuple(generators),
        structure_constants=tuple(sc),
        forms=named,
        meta=dict(meta),
    )


def _parse_generator(ln: str):
    parts = ln.split()
    label = parts[0]
    if "=" in label:
        raise _Bad("syntax", "generator line must start with a label")
    fields: dict = {}
    for tok in parts[1:]:
        key, sep, val = tok.partition("=")
        if not sep:
            raise _Bad("syntax", f"expected key=value, got {tok!r}")
        if key in fields:
            raise _Bad("duplicate", f"generator field {key!r} repeated")
        if key not in ("weight", "bidegree", "logderiv"):
            raise _Bad("unknown-key", f"unknown generator field {key!r}")
        fields[key] = val
    if "weight" not in fields:
        raise _Bad("missing-field", f"generator {label!r} has no weight")
    weight = _int_list(fields["weight"])
    bideg = None
    if "bidegree" in fields:
        bideg = _int_list(fields["bidegree"])
        if bideg not in ((1, 0), (0, 1)):
            raise _Bad("syntax", "bidegree must be 1,0 or 0,1")
    logd = []
    for entry in filter(None, fields.get("logderiv", "").split(",")):
        bits = entry.split(":")
        if len(bits) not in (2, 3):
            raise _Bad("syntax", f"logderiv entry {entry!r} must be idx:re[:im]")
        logd.append((_int(bits[0]), Scalar(_frac(bits[1]), _frac(bits[2]) if len(bits) == 3 else 0)))
    return label, weight, bideg, tuple(logd)


# --------------------------------------------------------------------------
# canonical serialization

def _q(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def serialize(spec: ModelSpec) -> str:
    g = spec.weight_group
    out = [HEADER, "[meta]", f"name: {spec.name}"]
    for key in sorted(k for k in spec.meta if k != "name"):
        out.append(f"{key}: {spec.meta[key]}")
    out += ["[weight_group]", f"rank: {g.rank}", f"base_dim: {g.base_dim}"]
    for row in g.real_log:
        out.append("real_log: " + ",".join(_q(x) for x in row))
    for rel in g.relations.generators:
        out.append("relation: " + ",".join(str(x) for x in rel))
    for name in g.symbol_names:
        out.append(f"symbol_name: {name}")
    out.append("[generators]")
    for gen in spec.generators:
        parts = [gen.label, "weight=" + ",".join(str(x) for x in gen.weight)]
        if gen.bidegree is not None:
            parts.append("bidegree=" + ",".join(str(x) for x in gen.bidegree))
        if gen.logderiv:
            entries = []
            for j, v in sorted(gen.logderiv, key=lambda t: t[0]):
                entries.append(f"{j + 1}:{_q(v.re)}" + (f":{_q(v.im)}" if v.im else ""))
            parts.append("logderiv=" + ",".join(entries))
        out.append(" ".join(parts))
    out.append("[structure_constants]")
    for i, j, k, c in sorted(spec.structure_constants, key=lambda t: (t[2], t[0], t[1])):
        out.append(f"{i + 1} {j + 1} {k + 1} {_q(c.re)} {_q(c.im)}")
    out.append("[forms]")
    for name in sorted(spec.forms):
        for mask, c in spec.forms[name].items():
            idx = ",".join(str(i + 1) for i in mask_indices(mask))
            out.append(f"{name} {idx} {_q(c.re)} {_q(c.im)}")
    return "\n".join(out) + "\n"
