"""Small finite groups stored as explicit multiplication tables.

Every group has elements ``0 .. n-1`` with ``0`` the identity and a table
``table[i, j] == i * j``.  Tables are validated exhaustively when a group is
built, so everything downstream may trust them.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence, Union

import numpy as np

from .errors import (
    DomainMismatchError,
    InvalidOrderError,
    InvalidParameterError,
    InvalidTableError,
    InvalidZMParametersError,
    SizeLimitError,
)

DEFAULT_CAP = 128
MAX_SYMMETRIC_DEGREE = 5


class Group:
    """A finite group given by its Cayley table.

    Parameters
    ----------
    table : array-like of shape (n, n)
        ``table[i][j]`` is the index of ``i * j``. Index 0 must be the identity.
    labels : sequence of str, optional
        Human-readable name per element; defaults to the indices.
    spec : str
        Construction descriptor, e.g. ``"Z12"`` or ``"ZM(3,4,2)"``.
    cap : int
        Largest order accepted. Associativity is checked in O(n^3).
    """

    def __init__(self, table, labels: Sequence[str] | None = None, spec: str = "",
                 cap: int = DEFAULT_CAP, meta: dict | None = None):
        table = np.array(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise InvalidTableError(f"table must be a non-empty square array, got shape {table.shape}")
        n = table.shape[0]
        if n > cap:
            raise SizeLimitError(f"group order {n} exceeds cap {cap}")
        _check_table(table)
        table.setflags(write=False)
        self.table = table
        self.order = n
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        if len(self.labels) != n:
            raise InvalidTableError(f"expected {n} labels, got {len(self.labels)}")
        self.spec = spec
        self.meta = dict(meta or {})
        # plain nested lists are much faster than numpy scalars in Python loops
        self.rows = table.tolist()

    def __repr__(self):
        return f"Group({self.spec or '?'}, order={self.order})"

    def __len__(self):
        return self.order

    def elements(self) -> range:
        return range(self.order)

    def element(self, index: int) -> Element:
        return Element(self, self._index(index))

    def _index(self, x: Union[int, "Element"]) -> int:
        if isinstance(x, Element):
            if x.group is not self:
                raise DomainMismatchError(f"element {x.index} belongs to {x.group!r}, not {self!r}")
            return x.index
        if isinstance(x, (int, np.integer)) and not isinstance(x, bool) and 0 <= x < self.order:
            return int(x)
        raise DomainMismatchError(f"{x!r} is not an element of {self!r}")

    def mul(self, x, y) -> int:
        return self.rows[self._index(x)][self._index(y)]

    def inv(self, x) -> int:
        return int(self.inverses[self._index(x)])

    def power(self, x, k: int) -> int:
        x = self._index(x)
        k %= int(self.element_orders[x])
        return int(self.powers[x, k])

    @cached_property
    def inverses(self) -> np.ndarray:
        inv = np.argmin(self.table, axis=1)  # the unique column holding 0
        inv.setflags(write=False)
        return inv

    @cached_property
    def powers(self) -> np.ndarray:
        """``powers[x, k] == x**k`` for ``0 <= k <= exponent``."""
        xs = np.arange(self.order)
        cols = [np.zeros(self.order, dtype=np.int64)]
        while len(cols) <= self.exponent:
            cols.append(self.table[cols[-1], xs])
        p = np.stack(cols, axis=1)
        p.setflags(write=False)
        return p

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        xs = np.arange(n)
        orders = np.zeros(n, dtype=np.int64)
        cur = xs.copy()
        k = 1
        while not orders.all():
            hit = (cur == 0) & (orders == 0)
            orders[hit] = k
            cur = self.table[cur, xs]
            k += 1
        orders.setflags(write=False)
        return orders

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*self.element_orders.tolist())

    @cached_property
    def abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    @cached_property
    def cyclic(self) -> bool:
        return bool((self.element_orders == self.order).any())

    def order_census(self) -> dict[int, int]:
        values, counts = np.unique(self.element_orders, return_counts=True)
        return dict(zip(values.tolist(), counts.tolist()))


@dataclass(frozen=True)
class Element:
    """An element index bound to its group."""

    group: Group
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.group.order:
            raise DomainMismatchError(f"index {self.index} out of range for {self.group!r}")

    def __mul__(self, other: Element) -> Element:
        return Element(self.group, self.group.mul(self, other))

    def __repr__(self):
        return f"<{self.group.labels[self.index]} in {self.group.spec}>"


def _check_table(t: np.ndarray) -> None:
    n = t.shape[0]
    idx = np.arange(n)
    if t.min() < 0 or t.max() >= n:
        raise InvalidTableError("table entries out of range")
    if not (t[0] == idx).all() or not (t[:, 0] == idx).all():
        raise InvalidTableError("index 0 is not a two-sided identity")
    srt = np.sort(t, axis=1)
    if not (srt == idx).all():
        raise InvalidTableError("some row is not a permutation")
    srt = np.sort(t, axis=0)
    if not (srt == idx[:, None]).all():
        raise InvalidTableError("some column is not a permutation")
    # (xy)z == x(yz) for all x, y, z; one x-slab at a time keeps memory at n^2
    for x in range(n):
        left = t[t[x]]          # left[y, z] = (x y) z
        right = t[x][t]         # right[y, z] = x (y z)
        if not (left == right).all():
            y, z = np.argwhere(left != right)[0]
            raise InvalidTableError(f"associativity fails for ({x}, {y}, {z})")


# ---------------------------------------------------------------------------
# constructors


def make_cyclic(n: int, cap: int = DEFAULT_CAP) -> Group:
    """Cyclic group of order ``n``; index ``k`` stands for ``a**k``."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidOrderError(f"cyclic order must be a positive integer, got {n!r}")
    _cap_check(n, cap)
    k = np.arange(n)
    table = (k[:, None] + k[None, :]) % n
    return Group(table, [str(i) for i in range(n)], spec=f"Z{n}", cap=cap,
                 meta={"family": "cyclic", "n": int(n)})


def check_zm_parameters(m: int, n: int, r: int) -> None:
    """Raise :class:`InvalidZMParametersError` naming the first failed condition.

    With ``n == 1`` the relation forces ``b = e`` and the group is cyclic of
    order ``m``; ``gcd(m, r-1)`` is not required there (``r = 1`` is the only
    reduced choice and would otherwise be rejected for every ``m > 1``).
    """
    for name, v in (("m", m), ("n", n), ("r", r)):
        if not isinstance(v, (int, np.integer)) or v < 1:
            raise InvalidZMParametersError(f"{name} must be a positive integer")
    if math.gcd(m, n) != 1:
        raise InvalidZMParametersError("gcd(m,n) must be 1")
    if n > 1 and math.gcd(m, r - 1) != 1:
        raise InvalidZMParametersError("gcd(m,r-1) must be 1")
    if pow(r, n, m) != 1 % m:
        raise InvalidZMParametersError("r^n must be 1 mod m")


def zm_index(m: int, x: int, y: int) -> int:
    """Index of ``b**x a**y`` in ``make_zm(m, n, r)``."""
    return x * m + y


def make_zm(m: int, n: int, r: int, cap: int = DEFAULT_CAP) -> Group:
    """The metacyclic group ``<a, b | a^m = b^n = 1, b^-1 a b = a^r>``.

    Elements are kept in normal form ``b**x a**y`` (index ``x*m + y``).  From
    ``a b = b a**r`` one gets ``a**y b**x = b**x a**(y r**x)``, hence

        (b**x1 a**y1)(b**x2 a**y2) = b**(x1+x2) a**(y1 r**x2 + y2).
    """
    check_zm_parameters(m, n, r)
    order = m * n
    _cap_check(order, cap)
    rpow = [pow(r, x, m) for x in range(n)]
    x = np.repeat(np.arange(n), m)
    y = np.tile(np.arange(m), n)
    rp = np.array(rpow)[x]
    xs = (x[:, None] + x[None, :]) % n
    ys = (y[:, None] * rp[None, :] + y[None, :]) % m
    table = xs * m + ys
    labels = [_zm_label(int(i), int(j)) for i, j in zip(x, y)]
    return Group(table, labels, spec=f"ZM({m},{n},{r})", cap=cap,
                 meta={"family": "zm", "m": m, "n": n, "r": r})


def _zm_label(x: int, y: int) -> str:
    parts = []
    if x:
        parts.append("b" if x == 1 else f"b^{x}")
    if y:
        parts.append("a" if y == 1 else f"a^{y}")
    return " ".join(parts) or "e"


def make_direct_product(g: Group, h: Group, cap: int = DEFAULT_CAP) -> Group:
    """Componentwise product; the pair ``(i, j)`` gets index ``i * |h| + j``."""
    order = g.order * h.order
    _cap_check(order, cap)
    gi = np.repeat(np.arange(g.order), h.order)
    hj = np.tile(np.arange(h.order), g.order)
    table = g.table[gi[:, None], gi[None, :]] * h.order + h.table[hj[:, None], hj[None, :]]
    labels = [f"({g.labels[i]},{h.labels[j]})" for i, j in zip(gi, hj)]
    return Group(table, labels, spec=f"{g.spec}x{h.spec}", cap=cap,
                 meta={"family": "product", "factors": (g.spec, h.spec)})


def _permutation_group(perms: list[tuple[int, ...]], spec: str, cap: int, meta: dict) -> Group:
    # composition: (p * q)(i) = p(q(i)), i.e. apply q first
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(len(p)))] for q in perms] for p in perms]
    return Group(table, [_cycle_label(p) for p in perms], spec=spec, cap=cap, meta=meta)


def _cycle_label(p: tuple[int, ...]) -> str:
    seen, cycles = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cycle, i = [], start
        while i not in seen:
            seen.add(i)
            cycle.append(str(i + 1))
            i = p[i]
        cycles.append("(" + " ".join(cycle) + ")")
    return "".join(cycles) or "()"


def _parity(p: tuple[int, ...]) -> int:
    inversions = sum(1 for i, j in itertools.combinations(range(len(p)), 2) if p[i] > p[j])
    return inversions % 2


def make_symmetric(k: int, cap: int = DEFAULT_CAP) -> Group:
    """Symmetric group on ``k <= 5`` points; permutations in lexicographic order."""
    if not isinstance(k, (int, np.integer)) or not 1 <= k <= MAX_SYMMETRIC_DEGREE:
        raise InvalidParameterError(f"symmetric degree must be in 1..{MAX_SYMMETRIC_DEGREE}, got {k!r}")
    _cap_check(math.factorial(k), cap)
    perms = list(itertools.permutations(range(k)))
    return _permutation_group(perms, f"S{k}", cap, {"family": "symmetric", "k": k})


def make_alternating(k: int, cap: int = DEFAULT_CAP) -> Group:
    """Alternating group on ``k <= 5`` points."""
    if not isinstance(k, (int, np.integer)) or not 1 <= k <= MAX_SYMMETRIC_DEGREE:
        raise InvalidParameterError(f"alternating degree must be in 1..{MAX_SYMMETRIC_DEGREE}, got {k!r}")
    _cap_check(max(1, math.factorial(k) // 2), cap)
    perms = [p for p in itertools.permutations(range(k)) if _parity(p) == 0]
    return _permutation_group(perms, f"A{k}", cap, {"family": "alternating", "k": k})


def make_dihedral(n: int, cap: int = DEFAULT_CAP) -> Group:
    """Dihedral group of order ``2n`` (symmetries of a regular n-gon).

    Index ``a*n + i`` is ``rot**i ref**a``; ``make_dihedral(2)`` is the Klein group.
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidParameterError(f"dihedral parameter must be >= 1, got {n!r}")
    _cap_check(2 * n, cap)
    a = np.repeat(np.arange(2), n)
    i = np.tile(np.arange(n), 2)
    sign = np.where(a == 1, -1, 1)
    rot = (i[:, None] + sign[:, None] * i[None, :]) % n
    ref = (a[:, None] + a[None, :]) % 2
    table = ref * n + rot
    labels = []
    for aa, ii in zip(a, i):
        s = ("r" if ii == 1 else f"r^{ii}") if ii else ""
        s = (s + " s").strip() if aa else s
        labels.append(s or "e")
    return Group(table, labels, spec=f"D{n}", cap=cap, meta={"family": "dihedral", "n": n})


_Q8_LABELS = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
# unit products among 1, i, j, k as (sign, unit)
_Q8_UNITS = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def make_quaternion8(cap: int = DEFAULT_CAP) -> Group:
    """Quaternion group {+-1, +-i, +-j, +-k}."""
    _cap_check(8, cap)

    def split(label):
        return (-1, label[1:]) if label.startswith("-") else (1, label)

    def join(sign, unit):
        return unit if sign == 1 else "-" + unit

    index = {lab: i for i, lab in enumerate(_Q8_LABELS)}
    table = []
    for x in _Q8_LABELS:
        sx, ux = split(x)
        row = []
        for y in _Q8_LABELS:
            sy, uy = split(y)
            s, u = _Q8_UNITS[(ux, uy)]
            row.append(index[join(sx * sy * s, u)])
        table.append(row)
    return Group(table, _Q8_LABELS, spec="Q8", cap=cap, meta={"family": "quaternion"})


def _cap_check(order: int, cap: int) -> None:
    if order > cap:
        raise SizeLimitError(f"group order {order} exceeds cap {cap}")


# ---------------------------------------------------------------------------
# functional interface


def identity(g: Group) -> Element:
    return Element(g, 0)


def multiply(g: Group, x, y) -> Element:
    return Element(g, g.mul(x, y))


def inverse(g: Group, x) -> Element:
    return Element(g, g.inv(x))


def element_order(g: Group, x) -> int:
    return int(g.element_orders[g._index(x)])


def group_exponent(g: Group) -> int:
    return g.exponent


def is_cyclic(g: Group) -> bool:
    return g.cyclic


def is_abelian(g: Group) -> bool:
    return g.abelian
