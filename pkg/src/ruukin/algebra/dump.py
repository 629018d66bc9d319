"""Plain-text polynomial dump format.

A dump starts with a ``vars`` header naming the variables that index the
exponent columns, followed by one term per line::

    vars y1 y2 y3
    4/1 0/1 : 2 0 0
    0/1 -2/1 : 0 1 0

Each line holds the rational and sqrt(3) parts of the coefficient, then the
exponents.  Terms appear in canonical order so dumps of equal polynomials are
byte-identical.  Several polynomials can share one file as named sections
(``# name`` lines start a section).
"""

from __future__ import annotations

from typing import Iterable, Mapping, TextIO

from .poly import MPoly, VAR_INDEX, VARIABLES
from .scalar import ExtScalar, format_rational, to_mpq


def dumps(p: MPoly, variables: Iterable[str] | None = None) -> str:
    names = tuple(variables) if variables is not None else p.variables
    missing = set(p.variables) - set(names)
    if missing:
        raise ValueError(f"variables {sorted(missing)} not in the dump header")
    idx = [VAR_INDEX[n] for n in names]
    lines = ["vars " + " ".join(names)]
    for exps, c in p.terms():
        cols = " ".join(str(exps[i]) for i in idx)
        lines.append(f"{format_rational(c.rat)} {format_rational(c.irr)} : {cols}".rstrip())
    return "\n".join(lines) + "\n"


def loads(text: str) -> MPoly:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("vars"):
        raise ValueError("dump must start with a 'vars' header")
    names = lines[0].split()[1:]
    for n in names:
        if n not in VAR_INDEX:
            raise ValueError(f"unknown variable {n!r} in dump header")
    items = []
    for ln in lines[1:]:
        coeff, _, exps = ln.partition(":")
        parts = coeff.split()
        if len(parts) != 2:
            raise ValueError(f"bad term line {ln!r}")
        es = [int(e) for e in exps.split()]
        if len(es) != len(names):
            raise ValueError(f"term line {ln!r} has {len(es)} exponents, expected {len(names)}")
        c = ExtScalar._raw(to_mpq(parts[0]), to_mpq(parts[1]))
        items.append((dict(zip(names, es)), c))
    return MPoly.from_terms(items)


def write_sections(fh: TextIO, polys: Mapping[str, MPoly], header: Mapping[str, str] | None = None):
    """Write named polynomials; ``header`` entries become ``## key: value`` lines."""
    for key, value in (header or {}).items():
        fh.write(f"## {key}: {value}\n")
    for name, p in polys.items():
        fh.write(f"# {name}\n")
        fh.write(dumps(p))


def read_sections(fh: TextIO) -> tuple[dict[str, str], dict[str, MPoly]]:
    header: dict[str, str] = {}
    sections: dict[str, list[str]] = {}
    current = None
    for line in fh:
        if line.startswith("## "):
            key, _, value = line[3:].partition(":")
            header[key.strip()] = value.strip()
        elif line.startswith("# "):
            current = line[2:].strip()
            sections[current] = []
        elif line.strip():
            if current is None:
                raise ValueError("term data before the first section name")
            sections[current].append(line)
    return header, {name: loads("".join(body)) for name, body in sections.items()}


__all__ = ["dumps", "loads", "write_sections", "read_sections", "VARIABLES"]
