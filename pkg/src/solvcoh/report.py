"""Text tables and the stable ``key=value`` machine rendering."""

from __future__ import annotations

from typing import Iterable, Sequence


def _atom(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(_atom(x) for x in v) + "]"
    return str(v)


class Document:
    """Ordered key/value pairs plus text blocks; rendered once at the end."""

    def __init__(self, command: str):
        self.command = command
        self.fields: list[tuple[str, object]] = []
        self.blocks: list[str] = []

    def put(self, key: str, value) -> None:
        self.fields.append((key, value))

    def text(self, block: str) -> None:
        self.blocks.append(block)

    def machine(self) -> str:
        lines = [f"command={self.command}"]
        lines += [f"{k}={_atom(v)}" for k, v in self.fields]
        return "\n".join(lines) + "\n"

    def human(self) -> str:
        return "\n".join(self.blocks).rstrip("\n") + "\n"

    def render(self, fmt: str) -> str:
        return self.machine() if fmt == "machine" else self.human()


def table(headers: Sequence[str], rows: Iterable[Sequence]) -> str:
    rows = [[_atom(x) if not isinstance(x, str) else x for x in r] for r in rows]
    widths = [len(h) for h in headers]
    for r in rows:
        for i, x in enumerate(r):
            widths[i] = max(widths[i], len(x))
    fmt = lambda r: "  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip()
    out = [fmt(headers), fmt(["-" * w for w in widths])]
    out += [fmt(r) for r in rows]
    return "\n".join(out)


def dims_str(dims: Sequence[int]) -> str:
    return "(" + ",".join(str(d) for d in dims) + ")"
