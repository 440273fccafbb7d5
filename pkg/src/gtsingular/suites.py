"""Named verification sweeps over the algebra, seeded and deterministic.

Each suite returns a JSON-ready report dict with an "ok" flag, counts, and
failure details; the CLI maps suite names onto these functions.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .distributions import (
    BasisVec,
    DistVector,
    act,
    act_lie,
    appendix_act,
    apply_dist,
    basis_correspondence,
    evaluate_at_v,
    generic_act_element,
)
from .gtformulas import gl_bracket, phi_combination, verify_homomorphism
from .poly import Polynomial
from .ratfun import RationalFunction
from .skewring import (
    RingElement,
    apply_to_function,
    is_at_most_one_singular,
    is_tau_invariant,
    ring_mul_circ,
)
from .tableau import Point, Shift, SingularContext, canonical_context

DEFAULT_SEED = 318

ADJACENT_GENERATORS_3 = [(1, 2), (2, 1), (2, 3), (3, 2), (1, 1), (2, 2), (3, 3)]
ALL_GENERATORS_3 = [(r, s) for r in range(1, 4) for s in range(1, 4)]

# The documented sample vectors for the order-3 module sweeps (canonical
# representatives; radius 2 around the identity shift).
SAMPLE_BASIS_3 = [
    ("D1", Shift.identity()),
    ("D1", Shift({(2, 1): 1, (2, 2): 1})),
    ("D2", Shift({(2, 2): 1})),
    ("D2", Shift({(2, 2): 2})),
]
EXTRA_BASIS_3 = [
    ("D1", Shift({(1, 1): 1})),
    ("D2", Shift({(1, 1): 1, (2, 2): 1})),
]


# --- samplers -----------------------------------------------------------------


def shift_positions(n: int) -> list[tuple[int, int]]:
    return [(k, i) for k in range(1, n) for i in range(1, k + 1)]


def random_shift(rng: random.Random, n: int, radius: int = 1) -> Shift:
    return Shift({v: rng.randint(-radius, radius) for v in shift_positions(n)})


def random_polynomial(
    rng: random.Random,
    n: int,
    max_terms: int = 3,
    max_deg: int = 3,
    zero_ok: bool = True,
) -> Polynomial:
    variables = [(k, i) for k in range(1, n + 1) for i in range(1, k + 1)]
    while True:
        p = Polynomial.zero()
        for _ in range(rng.randint(0 if zero_ok else 1, max_terms)):
            c = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
            mono: dict = {}
            for _ in range(rng.randint(0, max_deg)):
                v = rng.choice(variables)
                mono[v] = mono.get(v, 0) + 1
            p = p + Polynomial.term(tuple(sorted(mono.items())), c)
        if zero_ok or not p.is_zero():
            return p


def random_rational(rng: random.Random, n: int, max_deg: int = 3) -> RationalFunction:
    num = random_polynomial(rng, n, max_terms=3, max_deg=max_deg)
    if rng.random() < 0.5:
        return RationalFunction.from_poly(num)
    den = random_polynomial(rng, n, max_terms=2, max_deg=1, zero_ok=False)
    return RationalFunction(num, den)


def random_ring_element(
    rng: random.Random, n: int, max_support: int = 3, max_deg: int = 3
) -> RingElement:
    terms = []
    for _ in range(rng.randint(0, max_support)):
        terms.append((random_shift(rng, n), random_rational(rng, n, max_deg)))
    return RingElement(terms)


def random_generator_form(rng: random.Random, ctx: SingularContext) -> RingElement:
    """A tau-invariant element with coefficients H/z1, H polynomial: the
    symmetrization of a random polynomial-over-z1 sum."""
    from .skewring import group_act_on_ring

    terms = []
    for _ in range(rng.randint(1, 2)):
        h = random_polynomial(rng, ctx.n, max_terms=2, max_deg=1, zero_ok=False)
        coeff = RationalFunction(h, ctx.z1_poly)
        terms.append((random_shift(rng, ctx.n), coeff))
    a = RingElement(terms)
    return a + group_act_on_ring(ctx, a)


def random_invariant_polynomial(
    rng: random.Random, ctx: SingularContext, max_deg: int = 4
) -> Polynomial:
    g = random_polynomial(rng, ctx.n, max_terms=3, max_deg=max_deg)
    return g + ctx.transpose_poly(g)


def random_dist_vector(rng: random.Random, ctx: SingularContext) -> DistVector:
    terms = []
    for _ in range(rng.randint(1, 3)):
        sigma = random_shift(rng, ctx.n, radius=2)
        kind = rng.choice(["D1", "D2"])
        if kind == "D2" and ctx.is_tau_fixed(sigma):
            kind = "D1"
        terms.append((kind, sigma, Fraction(rng.randint(-3, 3), rng.randint(1, 2))))
    return DistVector.from_terms(ctx, terms)


# --- suites -------------------------------------------------------------------


def _report(suite: str, failures: list, total: int, **extra) -> dict:
    out = {
        "suite": suite,
        "total": total,
        "passed": total - len(failures),
        "ok": not failures,
        "failures": failures,
    }
    out.update(extra)
    return out


def ring_suite(n: int = 3, count: int = 200, seed: int = DEFAULT_SEED) -> dict:
    """Associativity and distributivity of the twisted product on random
    triples, plus the two-sided unit."""
    rng = random.Random(seed)
    failures = []
    one = RingElement.one()
    for idx in range(count):
        a = random_ring_element(rng, n)
        b = random_ring_element(rng, n)
        c = random_ring_element(rng, n)
        checks = [
            ("assoc", ring_mul_circ(ring_mul_circ(a, b), c)
             == ring_mul_circ(a, ring_mul_circ(b, c))),
            ("left-dist", ring_mul_circ(a, b + c)
             == ring_mul_circ(a, b) + ring_mul_circ(a, c)),
            ("right-dist", ring_mul_circ(a + b, c)
             == ring_mul_circ(a, c) + ring_mul_circ(b, c)),
            ("unit", ring_mul_circ(a, one) == a and ring_mul_circ(one, a) == a),
        ]
        for name, ok in checks:
            if not ok:
                failures.append({"triple": idx, "check": name})
    return _report("ring", failures, count, n=n, seed=seed)


def homomorphism_suite(n: int) -> dict:
    return verify_homomorphism(n)


def _anchor_check(ctx: SingularContext) -> bool:
    """The closed-form square of (1/z1)(sigma' - tau sigma'), whose middle
    coefficient's z1-pole cancels exactly."""
    s_i = Shift.generator(ctx.k, ctx.i)
    s_j = Shift.generator(ctx.k, ctx.j)
    z1 = RationalFunction.from_poly(ctx.z1_poly)
    one = RationalFunction.one()
    two = RationalFunction.constant(2)
    a = RingElement([(s_i, one / z1), (s_j, -(one / z1))])
    expected = RingElement(
        [
            (s_i * s_i, one / (z1 * (z1 - one))),
            (s_i * s_j, -(two / (z1 * z1 - one))),
            (s_j * s_j, one / (z1 * (z1 + one))),
        ]
    )
    return ring_mul_circ(a, a) == expected


def singularity_suite(
    ctx: SingularContext | None = None, count: int = 100, seed: int = DEFAULT_SEED
) -> dict:
    """Products of tau-invariant simple-pole elements stay at most simply
    singular at the base point."""
    ctx = ctx or canonical_context()
    rng = random.Random(seed)
    failures = []
    if not _anchor_check(ctx):
        failures.append({"check": "closed-form-anchor"})
    for idx in range(count):
        length = rng.randint(1, 4)
        prod = random_generator_form(rng, ctx)
        for _ in range(length - 1):
            prod = ring_mul_circ(prod, random_generator_form(rng, ctx))
        if not is_tau_invariant(ctx, prod):
            failures.append({"product": idx, "check": "tau-invariance"})
        if not is_at_most_one_singular(ctx, prod):
            failures.append({"product": idx, "check": "at-most-one-singular"})
    return _report("singularity", failures, count + 1, seed=seed)


def module_suite(
    ctx: SingularContext | None = None,
    generators: list | None = None,
    basis_sample: list | None = None,
) -> dict:
    """Commutator identity on the distribution module for every ordered
    generator pair and every sample basis vector."""
    ctx = ctx or canonical_context()
    generators = generators or ADJACENT_GENERATORS_3
    basis_sample = basis_sample or SAMPLE_BASIS_3
    vectors = [
        DistVector.from_terms(ctx, [(kind, sigma, Fraction(1))])
        for kind, sigma in basis_sample
    ]
    failures = []
    total = 0
    for x in generators:
        for y in generators:
            rhs_elem = phi_combination(ctx.n, gl_bracket(x, y))
            for bv_spec, d in zip(basis_sample, vectors):
                total += 1
                lhs = act_lie(ctx, x, act_lie(ctx, y, d)) - act_lie(
                    ctx, y, act_lie(ctx, x, d)
                )
                rhs = act(ctx, rhs_elem, d)
                if lhs != rhs:
                    failures.append(
                        {
                            "pair": [list(x), list(y)],
                            "basis": [bv_spec[0], bv_spec[1].to_json()],
                            "lhs": lhs.to_json(),
                            "rhs": rhs.to_json(),
                        }
                    )
    return _report("module", failures, total, n=ctx.n)


def appendix_suite(
    ctx: SingularContext | None = None,
    generators: list | None = None,
    basis_sample: list | None = None,
) -> dict:
    """The derivative-tableau realization intertwines the basis action
    through the explicit correspondence."""
    ctx = ctx or canonical_context()
    generators = generators or ALL_GENERATORS_3
    basis_sample = basis_sample or (SAMPLE_BASIS_3 + EXTRA_BASIS_3)
    failures = []
    total = 0
    for gen in generators:
        for kind, sigma in basis_sample:
            total += 1
            d = DistVector.basis(BasisVec(kind, sigma))
            lhs = basis_correspondence(ctx, act_lie(ctx, gen, d))
            rhs = appendix_act(ctx, gen, basis_correspondence(ctx, d))
            if lhs != rhs:
                failures.append(
                    {
                        "generator": list(gen),
                        "basis": [kind, sigma.to_json()],
                    }
                )
    return _report("appendix", failures, total, n=ctx.n)


def functional_suite(
    ctx: SingularContext | None = None, count: int = 100, seed: int = DEFAULT_SEED
) -> dict:
    """Expanding at the base point then pairing with a test function agrees
    with acting on the function first and evaluating."""
    ctx = ctx or canonical_context()
    rng = random.Random(seed)
    failures = []
    for idx in range(count):
        a = random_generator_form(rng, ctx)
        if rng.random() < 0.4:
            a = ring_mul_circ(a, random_generator_form(rng, ctx))
        f = random_invariant_polynomial(rng, ctx)
        lhs = apply_dist(ctx, evaluate_at_v(ctx, a), f)
        rhs = apply_to_function(a, RationalFunction.from_poly(f)).evaluate(ctx.v.coords)
        if lhs != rhs:
            failures.append({"pair": idx})
    return _report("functional", failures, count, seed=seed)


GENERIC_POINT_3 = Point.from_rows(
    [
        [Fraction(1, 5)],
        [Fraction(1, 3), Fraction(1, 7)],
        [Fraction(1, 11), Fraction(2, 13), Fraction(3, 17)],
    ]
)

GENERIC_LABELS_3 = [
    Shift.identity(),
    Shift({(1, 1): 1}),
    Shift({(2, 1): 1}),
    Shift({(2, 2): -1}),
    Shift({(2, 1): 1, (2, 2): 1}),
    Shift({(1, 1): -1, (2, 1): 1}),
]


def generic_suite(
    x: Point | None = None, labels: list | None = None, generators: list | None = None
) -> dict:
    """gl_3 commutator identities for the orbit action at a generic point."""
    from .gtformulas import phi_general

    x = x or GENERIC_POINT_3
    labels = labels or GENERIC_LABELS_3
    generators = generators or ALL_GENERATORS_3

    def act_on_combo(gen, combo: dict) -> dict:
        out: dict = {}
        a = phi_general(x.n, *gen)
        for label, c in combo.items():
            for lab2, c2 in generic_act_element(x, a, label).items():
                s = out.get(lab2, Fraction(0)) + c * c2
                if s:
                    out[lab2] = s
                else:
                    out.pop(lab2, None)
        return out

    failures = []
    total = 0
    for xg in generators:
        for yg in generators:
            rhs_elem = phi_combination(x.n, gl_bracket(xg, yg))
            for y in labels:
                total += 1
                start = {y: Fraction(1)}
                lhs: dict = {}
                for lab, c in act_on_combo(xg, act_on_combo(yg, start)).items():
                    lhs[lab] = lhs.get(lab, Fraction(0)) + c
                for lab, c in act_on_combo(yg, act_on_combo(xg, start)).items():
                    s = lhs.get(lab, Fraction(0)) - c
                    if s:
                        lhs[lab] = s
                    else:
                        lhs.pop(lab, None)
                rhs = generic_act_element(x, rhs_elem, y)
                if lhs != rhs:
                    failures.append(
                        {"pair": [list(xg), list(yg)], "label": y.to_json()}
                    )
    return _report("generic", failures, total, n=x.n)


SUITES = {
    "ring": lambda ctx=None, n=3: ring_suite(n=n),
    "homomorphism": lambda ctx=None, n=2: homomorphism_suite(n),
    "singularity": lambda ctx=None, n=3: singularity_suite(ctx),
    "module": lambda ctx=None, n=3: module_suite(ctx),
    "appendix": lambda ctx=None, n=3: appendix_suite(ctx),
}
