"""Variable identifiers: chart coordinates x/y/z, generic v, and the Rees parameter t."""

from __future__ import annotations

import re
from dataclasses import dataclass

_KINDS = ("x", "y", "z", "v", "t")
_VAR_RE = re.compile(r"([xyz])\[(\d+)\]\[(\d+)\]|v\[(\d+)\]|t")


@dataclass(frozen=True, order=True)
class Var:
    kind: str
    i: int = 0
    j: int = 0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown variable kind {self.kind!r}")
        if self.kind in "xyz":
            if not 1 <= self.j < self.i:
                raise ValueError(f"chart variable {self.kind}{self.i}{self.j} must satisfy 1 <= j < i")
        elif self.kind == "v":
            if self.i < 1 or self.j != 0:
                raise ValueError(f"generic variable index must be >= 1, got {self.i}")
        elif self.i or self.j:
            raise ValueError("t takes no indices")

    def __str__(self):
        if self.kind in "xyz":
            return f"{self.kind}[{self.i}][{self.j}]"
        if self.kind == "v":
            return f"v[{self.i}]"
        return "t"

    def __repr__(self):
        return f"Var({self})"

    @property
    def short(self) -> str:
        """Compact name used in tables and figures, e.g. ``x31``."""
        if self.kind in "xyz":
            return f"{self.kind}{self.i}{self.j}"
        if self.kind == "v":
            return f"v{self.i}"
        return "t"

    @property
    def latex(self) -> str:
        if self.kind in "xyz":
            return f"{self.kind}_{{{self.i}{self.j}}}"
        if self.kind == "v":
            return f"v_{{{self.i}}}"
        return "t"


def X(i: int, j: int) -> Var:
    return Var("x", i, j)


def Y(i: int, j: int) -> Var:
    return Var("y", i, j)


def Z(i: int, j: int) -> Var:
    return Var("z", i, j)


def V(k: int) -> Var:
    return Var("v", k)


T = Var("t")


def parse_var(text: str) -> Var:
    m = _VAR_RE.fullmatch(text.strip())
    if m is None:
        raise ValueError(f"cannot parse variable {text!r}")
    if m.group(1):
        return Var(m.group(1), int(m.group(2)), int(m.group(3)))
    if m.group(4):
        return Var("v", int(m.group(4)))
    return T


def partner(v: Var) -> Var:
    """The x <-> y partner of a chart variable."""
    if v.kind == "x":
        return Var("y", v.i, v.j)
    if v.kind == "y":
        return Var("x", v.i, v.j)
    raise ValueError(f"{v} has no diagonal partner")


def canonical_sort_key(v: Var):
    return (_KINDS.index(v.kind), v.i, v.j)
