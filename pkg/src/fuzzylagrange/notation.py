"""Text notation for groups.

Grammar::

    spec := term { "x" term }
    term := "Z" int | "D" int | "S" int | "A" int | "Q8" | "ZM(" int "," int "," int ")"

Whitespace is ignored, letters are case-sensitive and products associate to
the left.  ``D n`` has order ``2n``.  Parsing checks syntax only; invalid
parameters surface when the group is built.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import SizeLimitError, SpecSyntaxError
from .groups import (
    DEFAULT_CAP,
    Group,
    make_alternating,
    make_cyclic,
    make_dihedral,
    make_direct_product,
    make_quaternion8,
    make_symmetric,
    make_zm,
)


@dataclass(frozen=True)
class Cyclic:
    n: int


@dataclass(frozen=True)
class Dihedral:
    n: int


@dataclass(frozen=True)
class Symmetric:
    k: int


@dataclass(frozen=True)
class Alternating:
    k: int


@dataclass(frozen=True)
class Quaternion8:
    pass


@dataclass(frozen=True)
class ZM:
    m: int
    n: int
    r: int


@dataclass(frozen=True)
class Product:
    left: "GroupSpec"
    right: "GroupSpec"


GroupSpec = Union[Cyclic, Dihedral, Symmetric, Alternating, Quaternion8, ZM, Product]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def expect(self, s: str):
        if not self.peek(s):
            raise SpecSyntaxError(f"expected {s!r}", self.pos)
        self.pos += len(s)

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise SpecSyntaxError("expected an integer", start)
        return int(self.text[start:self.pos])

    def term(self) -> GroupSpec:
        if self.peek("ZM("):
            self.expect("ZM(")
            m = self.integer()
            self.expect(",")
            n = self.integer()
            self.expect(",")
            r = self.integer()
            self.expect(")")
            return ZM(m, n, r)
        if self.peek("Q8"):
            self.expect("Q8")
            return Quaternion8()
        for letter, node in (("Z", Cyclic), ("D", Dihedral), ("S", Symmetric), ("A", Alternating)):
            if self.peek(letter):
                self.pos += 1
                return node(self.integer())
        self.skip()
        raise SpecSyntaxError("expected one of Z, D, S, A, Q8, ZM(", self.pos)

    def spec(self) -> GroupSpec:
        node = self.term()
        while self.peek("x"):
            self.pos += 1
            node = Product(node, self.term())
        self.skip()
        if self.pos != len(self.text):
            raise SpecSyntaxError(f"unexpected {self.text[self.pos]!r}", self.pos)
        return node


def parse_group_spec(text: str) -> GroupSpec:
    """Parse ``text`` into a :data:`GroupSpec` tree.

    >>> parse_group_spec("Z2 x Z2")
    Product(left=Cyclic(n=2), right=Cyclic(n=2))
    """
    return _Parser(text).spec()


def format_group_spec(spec: GroupSpec) -> str:
    if isinstance(spec, Cyclic):
        return f"Z{spec.n}"
    if isinstance(spec, Dihedral):
        return f"D{spec.n}"
    if isinstance(spec, Symmetric):
        return f"S{spec.k}"
    if isinstance(spec, Alternating):
        return f"A{spec.k}"
    if isinstance(spec, Quaternion8):
        return "Q8"
    if isinstance(spec, ZM):
        return f"ZM({spec.m},{spec.n},{spec.r})"
    if isinstance(spec, Product):
        right = format_group_spec(spec.right)
        if isinstance(spec.right, Product):
            # no brackets in the grammar; a right-nested product cannot be printed faithfully
            raise ValueError("only left-nested products have a textual form")
        return f"{format_group_spec(spec.left)}x{right}"
    raise TypeError(f"not a group spec: {spec!r}")


def spec_order(spec: GroupSpec) -> int:
    """Order of the group ``spec`` describes, without building it."""
    if isinstance(spec, Cyclic):
        return spec.n
    if isinstance(spec, Dihedral):
        return 2 * spec.n
    if isinstance(spec, Symmetric):
        return math.factorial(spec.k)
    if isinstance(spec, Alternating):
        return max(1, math.factorial(spec.k) // 2)
    if isinstance(spec, Quaternion8):
        return 8
    if isinstance(spec, ZM):
        return spec.m * spec.n
    return spec_order(spec.left) * spec_order(spec.right)


def build_group(spec: GroupSpec | str, cap: int = DEFAULT_CAP) -> Group:
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    if isinstance(spec, Cyclic):
        return make_cyclic(spec.n, cap=cap)
    if isinstance(spec, Dihedral):
        return make_dihedral(spec.n, cap=cap)
    if isinstance(spec, Symmetric):
        return make_symmetric(spec.k, cap=cap)
    if isinstance(spec, Alternating):
        return make_alternating(spec.k, cap=cap)
    if isinstance(spec, Quaternion8):
        return make_quaternion8(cap=cap)
    if isinstance(spec, ZM):
        return make_zm(spec.m, spec.n, spec.r, cap=cap)
    if isinstance(spec, Product):
        if spec_order(spec) > cap:
            raise SizeLimitError(f"group order {spec_order(spec)} exceeds cap {cap}")
        return make_direct_product(build_group(spec.left, cap), build_group(spec.right, cap), cap=cap)
    raise TypeError(f"not a group spec: {spec!r}")
