"""The distribution basis at a 1-singular point and the module action on it.

Basis vectors are indexed by shifts with ordered components at the singular
pair: D1 is the symmetrized evaluation, D2 the symmetrized first jet along
z1 scaled by 1/(2 z1).  A ring element A with tau-invariant, at most simply
singular coefficients acts on a distribution D = ev_v o B by composing on
the function side, D |-> ev_v o (B o A), and the result expands exactly in
the basis: per term h sigma with g = z1 h,

    ev_v o (h sigma) = g(v) D2_sigma + (dg/dz1)(v) D1_sigma,

followed by reduction to ordered representatives (D1 is tau-even, D2
tau-odd).  The same module is realized on derivative-tableau symbols, which
serves as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .gtformulas import GeneratorId, convention, multiply, phi_general
from .poly import Polynomial, divexact
from .ratfun import RationalFunction, multiply_by_linear
from .skewring import (
    RingElement,
    is_at_most_one_singular,
    is_tau_invariant,
)
from .tableau import (
    Point,
    Shift,
    SingularContext,
    apply_shift,
    classify_point,
    shift_subst,
    shift_subst_poly,
)

_HALF = Fraction(1, 2)


class MembershipError(ValueError):
    """Ring element is outside the universal ring at the base point."""


class InvariantViolation(RuntimeError):
    """A structurally guaranteed cancellation failed; indicates a bug."""


@dataclass(frozen=True)
class BasisVec:
    kind: str  # "D1" | "D2"
    sigma: Shift

    def sort_key(self):
        return (self.sigma.sort_key(), self.kind)

    def __repr__(self) -> str:
        return f"{self.kind}[{self.sigma!r}]"


def canonical_basis_vec(
    ctx: SingularContext, kind: str, sigma: Shift
) -> tuple[BasisVec, int]:
    """Reduce (kind, sigma) to its ordered representative; returns the sign."""
    if kind not in ("D1", "D2"):
        raise ValueError(f"unknown distribution kind {kind!r}")
    rep, flipped = ctx.delta_representative(sigma)
    if kind == "D2" and ctx.is_tau_fixed(sigma):
        raise ValueError("D2 is undefined on a transposition-fixed shift")
    sign = -1 if (kind == "D2" and flipped) else 1
    return BasisVec(kind, rep), sign


class DistVector:
    """Finite rational combination of canonical basis distributions."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[BasisVec, Fraction] | None = None):
        self.coeffs = {bv: Fraction(c) for bv, c in (coeffs or {}).items() if c}

    @classmethod
    def from_terms(
        cls,
        ctx: SingularContext,
        terms: Iterable[tuple[str, Shift, Fraction]],
    ) -> "DistVector":
        acc: dict[BasisVec, Fraction] = {}
        for kind, sigma, c in terms:
            c = Fraction(c)
            if not c:
                continue
            if kind == "D2" and ctx.is_tau_fixed(sigma):
                raise InvariantViolation(
                    f"nonzero D2 coefficient {c} on transposition-fixed shift {sigma!r}"
                )
            bv, sign = canonical_basis_vec(ctx, kind, sigma)
            acc[bv] = acc.get(bv, Fraction(0)) + sign * c
        return cls({bv: c for bv, c in acc.items() if c})

    @classmethod
    def zero(cls) -> "DistVector":
        return cls({})

    @classmethod
    def basis(cls, bv: BasisVec) -> "DistVector":
        return cls({bv: Fraction(1)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, DistVector) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "DistVector") -> "DistVector":
        out = dict(self.coeffs)
        for bv, c in other.coeffs.items():
            s = out.get(bv, Fraction(0)) + c
            if s:
                out[bv] = s
            else:
                out.pop(bv, None)
        d = DistVector.__new__(DistVector)
        d.coeffs = out
        return d

    def __sub__(self, other: "DistVector") -> "DistVector":
        return self + other.scale(-1)

    def scale(self, c) -> "DistVector":
        c = Fraction(c)
        d = DistVector.__new__(DistVector)
        d.coeffs = {bv: q * c for bv, q in self.coeffs.items()} if c else {}
        return d

    def sorted_items(self) -> list[tuple[BasisVec, Fraction]]:
        return sorted(self.coeffs.items(), key=lambda t: t[0].sort_key())

    def support(self) -> list[BasisVec]:
        return [bv for bv, _ in self.sorted_items()]

    def to_json(self) -> list[dict]:
        from .textform import frac_text

        return [
            {"kind": bv.kind, "shift": bv.sigma.to_json(), "coeff": frac_text(c)}
            for bv, c in self.sorted_items()
        ]

    @classmethod
    def from_json(cls, ctx: SingularContext, data: Iterable[Mapping]) -> "DistVector":
        from .textform import parse_frac

        return cls.from_terms(
            ctx,
            [
                (e["kind"], Shift.from_json(e["shift"]), parse_frac(e["coeff"]))
                for e in data
            ],
        )

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*{bv!r}" for bv, c in self.sorted_items())


# --- evaluation of ring elements into the basis ------------------------------


def evaluate_at_v(
    ctx: SingularContext, a: RingElement, *, check_membership: bool = True
) -> DistVector:
    """Expand ev_v o A in the distribution basis, term by term."""
    if check_membership:
        if not is_tau_invariant(ctx, a):
            raise MembershipError("ring element is not invariant under the transposition")
        if not is_at_most_one_singular(ctx, a):
            raise MembershipError("ring element has a higher-order pole at the base point")
    v = ctx.v.coords
    terms: list[tuple[str, Shift, Fraction]] = []
    for sigma, h in a.terms.items():
        g = multiply_by_linear(h, ctx.z1_poly)
        d2 = g.evaluate(v)
        d1 = ctx.partial_z1(g).evaluate(v)
        if d2:
            terms.append(("D2", sigma, d2))
        if d1:
            terms.append(("D1", sigma, d1))
    return DistVector.from_terms(ctx, terms)


def materialize(ctx: SingularContext, bv: BasisVec) -> RingElement:
    """The defining ring element of a basis distribution."""
    sigma = bv.sigma
    tau_sigma = ctx.tau_of_shift(sigma)
    if bv.kind == "D1":
        half = RationalFunction.constant(_HALF)
        return RingElement([(sigma, half), (tau_sigma, half)])
    if ctx.is_tau_fixed(sigma):
        raise ValueError("D2 is undefined on a transposition-fixed shift")
    inv = RationalFunction(Polynomial.constant(_HALF), ctx.z1_poly)
    return RingElement([(sigma, inv), (tau_sigma, -inv)])


def act(
    ctx: SingularContext, a: RingElement, d: "BasisVec | DistVector"
) -> DistVector:
    """Module action: D = ev_v o B goes to ev_v o (B composed with A),
    with the composition side fixed by the calibrated convention."""
    if isinstance(d, BasisVec):
        d = DistVector.basis(d)
    conv = convention()
    out = DistVector.zero()
    for bv, c in d.coeffs.items():
        composed = multiply(conv, a, materialize(ctx, bv))
        out = out + evaluate_at_v(ctx, composed).scale(c)
    return out


def act_lie(
    ctx: SingularContext, gen: GeneratorId, d: "BasisVec | DistVector"
) -> DistVector:
    return act(ctx, phi_general(ctx.n, *gen), d)


# --- distributions as functionals --------------------------------------------


def check_invariant_function(ctx: SingularContext, f: Polynomial) -> Polynomial:
    if ctx.transpose_poly(f) != f:
        raise ValueError("test function must be invariant under the transposition")
    return f


def dist_functional(
    ctx: SingularContext, kind: str, sigma: Shift, f: Polynomial
) -> Fraction:
    """Value of D1/D2 at any shift label (not necessarily ordered) on an
    invariant polynomial test function."""
    check_invariant_function(ctx, f)
    v = ctx.v.coords
    tau_sigma = ctx.tau_of_shift(sigma)
    if kind == "D1":
        total = shift_subst_poly(f, sigma).evaluate(v) + shift_subst_poly(
            f, tau_sigma
        ).evaluate(v)
        return total * _HALF
    if kind != "D2":
        raise ValueError(f"unknown distribution kind {kind!r}")
    if sigma == tau_sigma:
        raise ValueError("D2 is undefined on a transposition-fixed shift")
    diff = shift_subst_poly(f, sigma) - shift_subst_poly(f, tau_sigma)
    quot = divexact(diff, ctx.z1_poly)
    if quot is None:
        raise InvariantViolation(
            "antisymmetrized test function is not divisible by z1"
        )
    return quot.evaluate(v) * _HALF


def apply_dist(ctx: SingularContext, d: DistVector, f: Polynomial) -> Fraction:
    check_invariant_function(ctx, f)
    total = Fraction(0)
    for bv, c in d.coeffs.items():
        total += c * dist_functional(ctx, bv.kind, bv.sigma, f)
    return total


# --- generic orbit action -----------------------------------------------------


def generic_act_element(x: Point, a: RingElement, y: Shift) -> dict[Shift, Fraction]:
    """Action of a ring element on the orbit label y at a generic point:
    coefficients evaluated at y(x), labels composed through the inverse
    shifts (the classical displacement y(x) -> y(x) + delta)."""
    p = apply_shift(y, x)
    out: dict[Shift, Fraction] = {}
    for rho, h in a.terms.items():
        c = h.evaluate(p.coords)
        if not c:
            continue
        label = y * rho.inverse()
        s = out.get(label, Fraction(0)) + c
        if s:
            out[label] = s
        else:
            out.pop(label, None)
    return out


def generic_act(x: Point, gen: GeneratorId, y: Shift) -> dict[Shift, Fraction]:
    if classify_point(x).tag != "Generic":
        raise ValueError("generic action requires a generic point")
    return generic_act_element(x, phi_general(x.n, *gen), y)


# --- derivative-tableau realization ------------------------------------------


class DerivTabVec:
    """Combination of tableau symbols T (tau-even) and DT (tau-odd)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[tuple[str, Shift], Fraction] | None = None):
        self.coeffs = {key: Fraction(c) for key, c in (coeffs or {}).items() if c}

    @classmethod
    def from_terms(
        cls,
        ctx: SingularContext,
        terms: Iterable[tuple[str, Shift, Fraction]],
    ) -> "DerivTabVec":
        acc: dict[tuple[str, Shift], Fraction] = {}
        for sym, sigma, c in terms:
            c = Fraction(c)
            if not c:
                continue
            if sym not in ("T", "DT"):
                raise ValueError(f"unknown tableau symbol {sym!r}")
            rep, flipped = ctx.delta_representative(sigma)
            if sym == "DT":
                if ctx.is_tau_fixed(sigma):
                    # the odd relation gives 2*DT = 0 on fixed shifts, so the
                    # symbol itself is zero in the quotient
                    continue
                if flipped:
                    c = -c
            key = (sym, rep)
            acc[key] = acc.get(key, Fraction(0)) + c
        return cls({key: c for key, c in acc.items() if c})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, DerivTabVec) and self.coeffs == other.coeffs

    def __add__(self, other: "DerivTabVec") -> "DerivTabVec":
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            s = out.get(key, Fraction(0)) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        v = DerivTabVec.__new__(DerivTabVec)
        v.coeffs = out
        return v

    def scale(self, c) -> "DerivTabVec":
        c = Fraction(c)
        v = DerivTabVec.__new__(DerivTabVec)
        v.coeffs = {key: q * c for key, q in self.coeffs.items()} if c else {}
        return v

    def sorted_items(self):
        return sorted(self.coeffs.items(), key=lambda t: (t[0][1].sort_key(), t[0][0]))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"{c}*{sym}[{sigma!r}]" for (sym, sigma), c in self.sorted_items()
        )


def appendix_act(
    ctx: SingularContext, gen: GeneratorId, e: DerivTabVec
) -> DerivTabVec:
    """Generator action on tableau symbols through the first z1-jet of the
    symbolic orbit expansion; an independent realization of the module."""
    a = phi_general(ctx.n, *gen)
    v = ctx.v.coords
    terms: list[tuple[str, Shift, Fraction]] = []
    for (sym, sigma), c in e.coeffs.items():
        for rho, h in a.terms.items():
            cfn = shift_subst(h, sigma)
            target = sigma * rho
            if sym == "T":
                g = multiply_by_linear(cfn, ctx.z1_poly)
                terms.append(("T", target, c * ctx.partial_z1(g).evaluate(v)))
                terms.append(("DT", target, c * g.evaluate(v)))
            else:
                terms.append(("T", target, c * ctx.partial_z1(cfn).evaluate(v)))
                terms.append(("DT", target, c * cfn.evaluate(v)))
    return DerivTabVec.from_terms(ctx, terms)


def basis_correspondence(ctx: SingularContext, d: DistVector) -> DerivTabVec:
    """D1 pairs with the even symbol T, D2 with the odd symbol DT; on
    ordered representatives the map is label-preserving."""
    terms = []
    for bv, c in d.coeffs.items():
        tau_sigma = ctx.tau_of_shift(bv.sigma)
        if bv.kind == "D1":
            terms.append(("T", bv.sigma, c * _HALF))
            terms.append(("T", tau_sigma, c * _HALF))
        else:
            terms.append(("DT", bv.sigma, c * _HALF))
            terms.append(("DT", tau_sigma, -c * _HALF))
    return DerivTabVec.from_terms(ctx, terms)


def basis_correspondence_inverse(ctx: SingularContext, e: DerivTabVec) -> DistVector:
    terms = []
    for (sym, sigma), c in e.coeffs.items():
        terms.append(("D1" if sym == "T" else "D2", sigma, c))
    return DistVector.from_terms(ctx, terms)
