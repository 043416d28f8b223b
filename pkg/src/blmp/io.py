"""Plain-text instance and placement files.

Probes file::

    # comment lines start with '#'
    <dim> <probelength>
    <sequence 1>
    ...
    <sequence dim*dim>

Placement file: ``dim`` lines of ``dim`` space-separated 1-based probe indices.
"""
from __future__ import annotations

import os
from typing import Iterator

import numpy as np

from .model import ALPHABET, InvalidInputError, Placement, ProbeSet


class ParseError(InvalidInputError):
    def __init__(self, path, lineno: int | None, message: str):
        self.path = str(path)
        self.lineno = lineno
        where = f"{self.path}:{lineno}" if lineno else self.path
        super().__init__(f"{where}: {message}")


def _data_lines(path) -> Iterator[tuple[int, str]]:
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            yield lineno, line


def read_probes_file(path) -> ProbeSet:
    lines = list(_data_lines(path))
    if not lines:
        raise ParseError(path, None, "missing '<dim> <probelength>' header")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError(path, lineno, f"malformed header {header!r}, expected '<dim> <probelength>'")
    dim, length = int(parts[0]), int(parts[1])
    if dim < 1 or length < 1:
        raise ParseError(path, lineno, "dim and probelength must be positive")
    body = lines[1:]
    expected = dim * dim
    if len(body) != expected:
        diff = expected - len(body)
        what = f"{diff} missing" if diff > 0 else f"{-diff} extra"
        last = body[-1][0] if body else lineno
        raise ParseError(path, last, f"expected {expected} probe lines for dim={dim}, found {len(body)} ({what})")
    seqs = []
    for ln, seq in body:
        bad = sorted(set(seq) - set(ALPHABET))
        if bad:
            raise ParseError(path, ln, f"illegal symbol(s) {''.join(bad)!r} in {seq!r}")
        if len(seq) != length:
            raise ParseError(path, ln, f"probe has length {len(seq)}, expected {length}")
        seqs.append(seq)
    return ProbeSet(dim, length, tuple(seqs))


def write_probes_file(sp: ProbeSet, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"{sp.dim} {sp.probelength}\n")
        for p in sp.probes:
            fh.write(f"{p}\n")


def read_placement_file(path, sp: ProbeSet | None = None) -> Placement:
    rows = []
    seen: dict[int, int] = {}
    lines = list(_data_lines(path))
    dim = sp.dim if sp is not None else len(lines)
    n = dim * dim
    if len(lines) != dim:
        raise ParseError(path, lines[-1][0] if lines else None, f"expected {dim} grid rows, found {len(lines)}")
    for lineno, line in lines:
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(path, lineno, f"non-integer entry in {line!r}") from None
        if len(row) != dim:
            raise ParseError(path, lineno, f"expected {dim} indices, found {len(row)}")
        for idx in row:
            if not 1 <= idx <= n:
                raise ParseError(path, lineno, f"probe index {idx} out of range 1..{n}")
            if idx in seen:
                raise ParseError(path, lineno, f"probe index {idx} already placed on line {seen[idx]}")
            seen[idx] = lineno
        rows.append(row)
    return Placement(np.array(rows, dtype=np.int64))


def write_placement_file(pl: Placement, path) -> None:
    width = len(str(pl.grid.size))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for row in pl.grid.tolist():
            fh.write(" ".join(str(v).rjust(width) for v in row) + "\n")


def data_path(name: str) -> str:
    """Path of a fixture shipped with the package."""
    return os.path.join(os.path.dirname(__file__), "data", name)
