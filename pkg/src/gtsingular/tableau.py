"""Tableau points, the shift group, point classification, and singular data.

A point assigns a rational to every position (k, i), 1 <= i <= k <= n.  The
shift group is the free abelian group on positions of rows 1..n-1, acting by
integer translation of those coordinates.  A point is generic when no two
same-row coordinates differ by an integer, 1-singular when exactly one
same-row pair does.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .poly import Polynomial, Var, check_var
from .ratfun import RationalFunction, divide_by_linear, linear_valuation


def positions(n: int) -> Iterator[Var]:
    for k in range(1, n + 1):
        for i in range(1, k + 1):
            yield (k, i)


class Shift:
    """Element of the free abelian shift group: position (k, i) -> integer."""

    __slots__ = ("items", "_hash")

    def __init__(self, components: Mapping[Var, int] | Iterable[tuple[Var, int]] = ()):
        comps = dict(components.items() if isinstance(components, Mapping) else components)
        cleaned = {}
        for v, m in comps.items():
            check_var(v)
            if m:
                cleaned[v] = int(m)
        self.items: tuple[tuple[Var, int], ...] = tuple(sorted(cleaned.items()))
        self._hash = None

    @classmethod
    def identity(cls) -> "Shift":
        return cls(())

    @classmethod
    def generator(cls, k: int, i: int, power: int = 1) -> "Shift":
        return cls({(k, i): power})

    def component(self, v: Var) -> int:
        for w, m in self.items:
            if w == v:
                return m
        return 0

    def is_identity(self) -> bool:
        return not self.items

    def __mul__(self, other: "Shift") -> "Shift":
        out = dict(self.items)
        for v, m in other.items:
            out[v] = out.get(v, 0) + m
        return Shift(out)

    def inverse(self) -> "Shift":
        return Shift({v: -m for v, m in self.items})

    def __pow__(self, e: int) -> "Shift":
        return Shift({v: m * e for v, m in self.items})

    def __eq__(self, other) -> bool:
        return isinstance(other, Shift) and self.items == other.items

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = self._hash = hash(self.items)
        return h

    def sort_key(self):
        return self.items

    def validate(self, n: int) -> "Shift":
        for (k, _i), _m in self.items:
            if k > n - 1:
                raise ValueError(f"shift touches row {k}, beyond rows 1..{n - 1}")
        return self

    def offsets(self, sign: int = 1) -> dict[Var, Fraction]:
        return {v: Fraction(sign * m) for v, m in self.items}

    def to_json(self) -> dict[str, int]:
        return {f"({k},{i})": m for (k, i), m in self.items}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "Shift":
        comps: dict[Var, int] = {}
        for key, m in data.items():
            body = key.strip()
            if not (body.startswith("(") and body.endswith(")")):
                raise ValueError(f"bad shift key {key!r}")
            k, i = (int(part) for part in body[1:-1].split(","))
            comps[(k, i)] = int(m)
        return cls(comps)

    def __repr__(self) -> str:
        if not self.items:
            return "id"
        return "*".join(
            f"σ[{k},{i}]" + (f"^{m}" if m != 1 else "")
            for (k, i), m in self.items
        )


def shift_subst(f: RationalFunction, sigma: Shift) -> RationalFunction:
    """Image of f under sigma: substitute X(k,i) -> X(k,i) - m(k,i)."""
    if sigma.is_identity():
        return f
    return f.subs_offsets(sigma.offsets(-1))


def shift_subst_poly(p: Polynomial, sigma: Shift) -> Polynomial:
    if sigma.is_identity():
        return p
    return p.subs_offsets(sigma.offsets(-1))


def transpose_subst(f: RationalFunction, a: Var, b: Var) -> RationalFunction:
    if a[0] != b[0]:
        raise ValueError(f"positions {a} and {b} are in different rows")
    return f.swap_vars(a, b)


class Point:
    """Total rational coordinate assignment for a tableau of order n."""

    __slots__ = ("n", "coords")

    def __init__(self, n: int, coords: Mapping[Var, Fraction]):
        if n < 2:
            raise ValueError("order must be at least 2")
        full = {}
        for v in positions(n):
            if v not in coords:
                raise ValueError(f"missing coordinate for position {v}")
            full[v] = Fraction(coords[v])
        if len(coords) != len(full):
            extra = set(coords) - set(full)
            raise ValueError(f"unexpected positions {sorted(extra)}")
        self.n = n
        self.coords = full

    def __getitem__(self, v: Var) -> Fraction:
        return self.coords[v]

    def __eq__(self, other) -> bool:
        return isinstance(other, Point) and self.n == other.n and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.n, tuple(sorted(self.coords.items()))))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "Point":
        rows = [list(r) for r in rows]
        n = len(rows)
        coords = {}
        for k, row in enumerate(rows, start=1):
            if len(row) != k:
                raise ValueError(f"row {k} must have {k} entries, got {len(row)}")
            for i, val in enumerate(row, start=1):
                coords[(k, i)] = Fraction(val)
        return cls(n, coords)

    def rows(self) -> list[list[Fraction]]:
        return [[self.coords[(k, i)] for i in range(1, k + 1)] for k in range(1, self.n + 1)]

    def to_json(self) -> dict:
        from .textform import frac_text

        return {"n": self.n, "rows": [[frac_text(c) for c in row] for row in self.rows()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Point":
        from .textform import parse_frac

        n = int(data["n"])
        rows = [[parse_frac(s) for s in row] for row in data["rows"]]
        if len(rows) != n:
            raise ValueError(f"expected {n} rows, got {len(rows)}")
        return cls.from_rows(rows)

    @classmethod
    def load(cls, path) -> "Point":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))

    def __repr__(self) -> str:
        return f"Point(n={self.n}, rows={self.rows()!r})"


def apply_shift(sigma: Shift, p: Point) -> Point:
    sigma.validate(p.n)
    coords = dict(p.coords)
    for v, m in sigma.items:
        coords[v] += m
    return Point(p.n, coords)


@dataclass(frozen=True)
class PointClass:
    tag: str  # "Generic" | "OneSingular" | "Other"
    pair: tuple[int, int, int] | None = None

    def __str__(self) -> str:
        if self.tag == "OneSingular":
            k, i, j = self.pair
            return f"OneSingular({k},{i},{j})"
        return self.tag


def classify_point(p: Point) -> PointClass:
    """Count same-row integer differences: none = Generic, one = OneSingular."""
    witness = None
    count = 0
    for k in range(2, p.n + 1):
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                if (p[(k, i)] - p[(k, j)]).denominator == 1:
                    count += 1
                    witness = (k, i, j)
    if count == 0:
        return PointClass("Generic")
    if count == 1:
        return PointClass("OneSingular", witness)
    return PointClass("Other")


class SingularContext:
    """Singular pair data at a 1-singular base point with equal pair values.

    Holds the order n, the singular row/columns (k, i, j), the point v with
    v(k,i) = v(k,j), the vanishing linear form z1 = X(k,i) - X(k,j), and the
    transposition of the two columns.
    """

    def __init__(self, v: Point, k: int, i: int, j: int):
        n = v.n
        if not (1 <= i < j <= k):
            raise ValueError(f"bad column pair ({i},{j}) in row {k}")
        if k == n:
            raise ValueError(
                "singular pair in the bottom row produces no singular denominators; "
                "context rejected"
            )
        if not (2 <= k <= n - 1):
            raise ValueError(f"singular row must lie in 2..{n - 1}, got {k}")
        if v[(k, i)] != v[(k, j)]:
            raise ValueError("base point must take equal values on the singular pair")
        cls = classify_point(v)
        if cls.tag != "OneSingular" or cls.pair != (k, i, j):
            raise ValueError(
                f"point classifies as {cls}, not OneSingular({k},{i},{j})"
            )
        self.n = n
        self.k = k
        self.i = i
        self.j = j
        self.v = v
        self.pos_i: Var = (k, i)
        self.pos_j: Var = (k, j)
        self.z1_poly = Polynomial.variable(k, i) - Polynomial.variable(k, j)
        self.z1 = RationalFunction.from_poly(self.z1_poly)

    # -- transposition action ------------------------------------------------

    def tau_of_shift(self, sigma: Shift) -> Shift:
        mi = sigma.component(self.pos_i)
        mj = sigma.component(self.pos_j)
        if mi == mj:
            return sigma
        out = dict(sigma.items)
        out.pop(self.pos_i, None)
        out.pop(self.pos_j, None)
        if mj:
            out[self.pos_i] = mj
        if mi:
            out[self.pos_j] = mi
        return Shift(out)

    def is_tau_fixed(self, sigma: Shift) -> bool:
        return sigma.component(self.pos_i) == sigma.component(self.pos_j)

    def delta_representative(self, sigma: Shift) -> tuple[Shift, bool]:
        """Representative with component(k,i) <= component(k,j), plus a flip flag."""
        if sigma.component(self.pos_i) <= sigma.component(self.pos_j):
            return sigma, False
        return self.tau_of_shift(sigma), True

    def transpose(self, f: RationalFunction) -> RationalFunction:
        return f.swap_vars(self.pos_i, self.pos_j)

    def transpose_poly(self, p: Polynomial) -> Polynomial:
        return p.swap_vars(self.pos_i, self.pos_j)

    # -- z1 calculus -----------------------------------------------------------

    def partial_z1(self, f: RationalFunction) -> RationalFunction:
        """Directional derivative along z1 = X(k,i) - X(k,j)."""
        return (f.derivative(self.pos_i) - f.derivative(self.pos_j)).scale(Fraction(1, 2))

    def partial_z1_poly(self, p: Polynomial) -> Polynomial:
        return (p.derivative(self.pos_i) - p.derivative(self.pos_j)).scale(Fraction(1, 2))

    def divide_by_z1(self, f: RationalFunction) -> tuple[RationalFunction, int]:
        """(f / z1, z1-adic valuation of f along z1 = 0)."""
        val_num, _ = linear_valuation(f.num, self.z1_poly)
        val_den, _ = linear_valuation(f.den, self.z1_poly)
        return divide_by_linear(f, self.z1_poly), val_num - val_den

    def orbit_point(self, sigma: Shift) -> Point:
        return apply_shift(sigma, self.v)

    def __repr__(self) -> str:
        return f"SingularContext(n={self.n}, pair=({self.k},{self.i},{self.j}))"


def canonical_test_point(n: int = 3) -> Point:
    """The shipped base point: equal singular pair in row 2, all other
    coordinates with pairwise distinct prime denominators."""
    if n != 3:
        raise ValueError("a canonical test point is shipped for order 3 only")
    return Point.from_rows(
        [
            [Fraction(1, 5)],
            [Fraction(1, 3), Fraction(1, 3)],
            [Fraction(1, 7), Fraction(2, 11), Fraction(3, 13)],
        ]
    )


def canonical_context(n: int = 3) -> SingularContext:
    return SingularContext(canonical_test_point(n), 2, 1, 2)
