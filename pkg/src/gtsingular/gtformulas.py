"""Classical Gelfand-Tsetlin generator images in the skew ring.

The elementary matrices E(r,s) of gl_n map to ring elements: adjacent and
diagonal generators come from the classical tableau formulas, every other
E(r,s) from a fixed commutator bracketing.  Which of the two products (the
twisted one or its opposite) makes this map a ring homomorphism is decided
once by an exact order-2 computation and then frozen.
"""

from __future__ import annotations

from functools import lru_cache

from .poly import Polynomial
from .ratfun import RationalFunction
from .skewring import RingElement, ring_mul_circ, ring_mul_star
from .tableau import Shift

GeneratorId = tuple[int, int]


def gl_bracket(x: GeneratorId, y: GeneratorId) -> list[tuple[int, GeneratorId]]:
    """[E_ab, E_cd] = delta_bc E_ad - delta_da E_cb as signed generators."""
    (a, b), (c, d) = x, y
    out: list[tuple[int, GeneratorId]] = []
    if b == c:
        out.append((1, (a, d)))
    if d == a:
        out.append((-1, (c, b)))
    # cancel E_aa - E_aa when both terms coincide
    if len(out) == 2 and out[0][1] == out[1][1]:
        return []
    return out


def _check_gen(n: int, r: int, s: int) -> None:
    if not (1 <= r <= n and 1 <= s <= n):
        raise ValueError(f"generator E({r},{s}) out of range for gl_{n}")


def _xvar(k: int, i: int) -> Polynomial:
    return Polynomial.variable(k, i)


@lru_cache(maxsize=None)
def phi_raising(n: int, k: int) -> RingElement:
    """Image of E(k, k+1): shifts sigma(k,i)^-1 with the classical coefficients."""
    if not (1 <= k <= n - 1):
        raise ValueError(f"raising index {k} out of range for gl_{n}")
    terms = []
    for i in range(1, k + 1):
        num = Polynomial.one()
        for j in range(1, k + 2):
            num = num * (_xvar(k, i) - _xvar(k + 1, j))
        den = Polynomial.one()
        for j in range(1, k + 1):
            if j != i:
                den = den * (_xvar(k, i) - _xvar(k, j))
        coeff = RationalFunction(-num, den)
        terms.append((Shift.generator(k, i, -1), coeff))
    return RingElement(terms)


@lru_cache(maxsize=None)
def phi_lowering(n: int, k: int) -> RingElement:
    """Image of E(k+1, k): shifts sigma(k,i) with the classical coefficients."""
    if not (1 <= k <= n - 1):
        raise ValueError(f"lowering index {k} out of range for gl_{n}")
    terms = []
    for i in range(1, k + 1):
        num = Polynomial.one()
        for j in range(1, k):
            num = num * (_xvar(k, i) - _xvar(k - 1, j))
        den = Polynomial.one()
        for j in range(1, k + 1):
            if j != i:
                den = den * (_xvar(k, i) - _xvar(k, j))
        terms.append((Shift.generator(k, i), RationalFunction(num, den)))
    return RingElement(terms)


@lru_cache(maxsize=None)
def phi_diagonal(n: int, k: int) -> RingElement:
    """Image of E(k, k): a shift-free row-sum coefficient."""
    if not (1 <= k <= n):
        raise ValueError(f"diagonal index {k} out of range for gl_{n}")
    p = Polynomial.zero()
    for i in range(1, k + 1):
        p = p + _xvar(k, i) + Polynomial.constant(i - 1)
    for i in range(1, k):
        p = p - _xvar(k - 1, i) - Polynomial.constant(i - 1)
    return RingElement.term(RationalFunction.from_poly(p), Shift.identity())


def multiply(convention: str, a: RingElement, b: RingElement) -> RingElement:
    if convention == "circ":
        return ring_mul_circ(a, b)
    if convention == "star":
        return ring_mul_star(a, b)
    raise ValueError(f"unknown multiplication convention {convention!r}")


def bracket(convention: str, a: RingElement, b: RingElement) -> RingElement:
    return multiply(convention, a, b) - multiply(convention, b, a)


def _adjacent_generators(n: int) -> list[GeneratorId]:
    gens: list[GeneratorId] = []
    for k in range(1, n):
        gens.append((k, k + 1))
        gens.append((k + 1, k))
    for k in range(1, n + 1):
        gens.append((k, k))
    return gens


def _phi_basic(n: int, r: int, s: int) -> RingElement:
    if r == s:
        return phi_diagonal(n, r)
    if s == r + 1:
        return phi_raising(n, r)
    if s == r - 1:
        return phi_lowering(n, s)
    raise ValueError(f"E({r},{s}) is not adjacent or diagonal")


@lru_cache(maxsize=None)
def calibrate_convention(n: int = 2) -> str:
    """Pick the multiplication making the generator map a homomorphism.

    Checked on ordered pairs of adjacent/diagonal generators whose bracket
    stays adjacent/diagonal (at n = 2 that is every pair); exactly one of
    the two products passes.
    """
    if n < 2:
        raise ValueError("order must be at least 2")
    gens = _adjacent_generators(n)
    gen_set = set(gens)
    pairs = []
    for x in gens:
        for y in gens:
            br = gl_bracket(x, y)
            if all(g in gen_set for _, g in br):
                pairs.append((x, y, br))
    winners = []
    for convention in ("circ", "star"):
        ok = True
        for x, y, br in pairs:
            lhs = bracket(convention, _phi_basic(n, *x), _phi_basic(n, *y))
            rhs = RingElement.zero()
            for sign, g in br:
                rhs = rhs + _phi_basic(n, *g).scale(sign)
            if lhs != rhs:
                ok = False
                break
        if ok:
            winners.append(convention)
    if len(winners) != 1:
        raise RuntimeError(
            f"calibration failed: conventions passing at n={n}: {winners!r}"
        )
    return winners[0]


def convention() -> str:
    """The frozen multiplication convention (calibrated at order 2)."""
    return calibrate_convention(2)


@lru_cache(maxsize=None)
def phi_general(n: int, r: int, s: int) -> RingElement:
    """Image of any E(r,s), non-adjacent ones via E(r,s) = [E(r,t), E(t,s)]
    with t the neighbor of r toward s."""
    _check_gen(n, r, s)
    if abs(r - s) <= 1:
        return _phi_basic(n, r, s)
    t = r + 1 if s > r else r - 1
    return bracket(convention(), phi_general(n, r, t), phi_general(n, t, s))


def phi_combination(n: int, terms: list[tuple[int, GeneratorId]]) -> RingElement:
    out = RingElement.zero()
    for sign, (r, s) in terms:
        out = out + phi_general(n, r, s).scale(sign)
    return out


def verify_homomorphism(n: int) -> dict:
    """Check the commutator identity on all ordered pairs of elementary
    matrices; returns a machine-readable report."""
    conv = convention()
    gens = [(r, s) for r in range(1, n + 1) for s in range(1, n + 1)]
    checks = []
    failures = []
    for x in gens:
        for y in gens:
            lhs = bracket(conv, phi_general(n, *x), phi_general(n, *y))
            rhs = phi_combination(n, gl_bracket(x, y))
            ok = lhs == rhs
            entry = {"pair": [list(x), list(y)], "equal": ok}
            if not ok:
                diff = lhs - rhs
                sigma = diff.support()[0]
                entry["counterexample"] = {
                    "shift": sigma.to_json(),
                    "coeff": repr(diff.coeff(sigma)),
                }
                failures.append(entry)
            checks.append(entry)
    return {
        "suite": "homomorphism",
        "n": n,
        "convention": conv,
        "total": len(checks),
        "passed": sum(1 for c in checks if c["equal"]),
        "ok": not failures,
        "checks": checks,
        "failures": failures,
    }
