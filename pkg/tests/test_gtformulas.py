import random
from fractions import Fraction

import pytest

from gtsingular.gtformulas import (
    bracket,
    calibrate_convention,
    convention,
    gl_bracket,
    phi_combination,
    phi_diagonal,
    phi_general,
    phi_lowering,
    phi_raising,
    verify_homomorphism,
)
from gtsingular.poly import Polynomial
from gtsingular.ratfun import RationalFunction
from gtsingular.skewring import (
    RingElement,
    group_act_on_ring,
    is_at_most_one_singular,
    is_tau_invariant,
)
from gtsingular.tableau import Shift, canonical_context

CTX = canonical_context()


def X(k, i):
    return Polynomial.variable(k, i)


# --- structure table ---------------------------------------------------------


def test_bracket_spot_values():
    assert gl_bracket((1, 2), (2, 1)) == [(1, (1, 1)), (-1, (2, 2))]
    assert gl_bracket((1, 1), (2, 2)) == []
    assert gl_bracket((1, 2), (2, 3)) == [(1, (1, 3))]
    assert gl_bracket((1, 1), (1, 2)) == [(1, (1, 2))]


def test_bracket_antisymmetry():
    gens = [(r, s) for r in range(1, 4) for s in range(1, 4)]
    for x in gens:
        for y in gens:
            lhs = sorted(gl_bracket(x, y))
            rhs = sorted((-sign, g) for sign, g in gl_bracket(y, x))
            assert lhs == rhs


def test_bracket_jacobi_sampled():
    rng = random.Random(5)
    gens = [(r, s) for r in range(1, 4) for s in range(1, 4)]

    def combo_bracket(combo, z):
        out = {}
        for sign, g in combo:
            for s2, h in gl_bracket(g, z):
                out[h] = out.get(h, 0) + sign * s2
        return {g: c for g, c in out.items() if c}

    for _ in range(40):
        x, y, z = (rng.choice(gens) for _ in range(3))
        total = {}
        for combo in (
            combo_bracket(gl_bracket(x, y), z),
            combo_bracket(gl_bracket(y, z), x),
            combo_bracket(gl_bracket(z, x), y),
        ):
            for g, c in combo.items():
                total[g] = total.get(g, 0) + c
        assert all(c == 0 for c in total.values())


# --- generator images --------------------------------------------------------


def test_phi_raising_n2():
    expected = RingElement.term(
        RationalFunction(-(X(1, 1) - X(2, 1)) * (X(1, 1) - X(2, 2)), Polynomial.one()),
        Shift.generator(1, 1, -1),
    )
    assert phi_raising(2, 1) == expected


def test_phi_lowering_n2():
    assert phi_lowering(2, 1) == RingElement.term(
        RationalFunction.one(), Shift.generator(1, 1)
    )


def test_phi_raising_n3_row2():
    a = phi_raising(3, 2)
    assert a.support() == sorted(
        [Shift.generator(2, 1, -1), Shift.generator(2, 2, -1)], key=Shift.sort_key
    )
    c1 = a.coeff(Shift.generator(2, 1, -1))
    assert c1.den == X(2, 1) - X(2, 2)
    c2 = a.coeff(Shift.generator(2, 2, -1))
    # canonical denominators are monic, so the sign sits in the numerator
    assert c2.den == X(2, 1) - X(2, 2)
    num = Polynomial.one()
    for j in range(1, 4):
        num = num * (X(2, 1) - X(3, j))
    assert c1 == RationalFunction(-num, X(2, 1) - X(2, 2))


def test_phi_lowering_n3_row2():
    a = phi_lowering(3, 2)
    c1 = a.coeff(Shift.generator(2, 1))
    assert c1 == RationalFunction(X(2, 1) - X(1, 1), X(2, 1) - X(2, 2))
    c2 = a.coeff(Shift.generator(2, 2))
    assert c2 == RationalFunction(X(2, 2) - X(1, 1), X(2, 2) - X(2, 1))


def test_phi_diagonal():
    assert phi_diagonal(3, 1) == RingElement.term(
        RationalFunction.variable(1, 1), Shift.identity()
    )
    expected = RationalFunction.from_poly(
        X(2, 1) + X(2, 2) + Polynomial.one() - X(1, 1)
    )
    assert phi_diagonal(3, 2) == RingElement.term(expected, Shift.identity())


def generic_point(rng, n=3):
    from gtsingular.tableau import Point, classify_point

    primes = [5, 7, 11, 13, 17, 19]
    while True:
        rows = []
        idx = 0
        for k in range(1, n + 1):
            rows.append([Fraction(rng.randint(1, 30), primes[idx + i]) for i in range(k)])
            idx += k
        p = Point.from_rows(rows)
        if classify_point(p).tag == "Generic":
            return p


@pytest.mark.parametrize("seed", range(4))
def test_generic_evaluation_oracle(seed):
    """Coefficients of the images evaluate to the classical formula values,
    computed here with independent nested loops over the point coordinates."""
    rng = random.Random(900 + seed)
    p = generic_point(rng)
    x = p.coords
    for k in (1, 2):
        img = phi_raising(3, k)
        for i in range(1, k + 1):
            num = Fraction(1)
            for j in range(1, k + 2):
                num *= x[(k, i)] - x[(k + 1, j)]
            den = Fraction(1)
            for j in range(1, k + 1):
                if j != i:
                    den *= x[(k, i)] - x[(k, j)]
            assert img.coeff(Shift.generator(k, i, -1)).evaluate(x) == -num / den
        img = phi_lowering(3, k)
        for i in range(1, k + 1):
            num = Fraction(1)
            for j in range(1, k):
                num *= x[(k, i)] - x[(k - 1, j)]
            den = Fraction(1)
            for j in range(1, k + 1):
                if j != i:
                    den *= x[(k, i)] - x[(k, j)]
            assert img.coeff(Shift.generator(k, i)).evaluate(x) == num / den
    for k in (1, 2, 3):
        img = phi_diagonal(3, k)
        val = sum(x[(k, i)] + i - 1 for i in range(1, k + 1)) - sum(
            x[(k - 1, i)] + i - 1 for i in range(1, k)
        )
        assert img.coeff(Shift.identity()).evaluate(x) == val


def test_all_images_tau_invariant():
    for r in range(1, 4):
        for s in range(1, 4):
            assert is_tau_invariant(CTX, phi_general(3, r, s)), (r, s)


def test_all_images_in_universal_ring():
    for r in range(1, 4):
        for s in range(1, 4):
            a = phi_general(3, r, s)
            assert is_at_most_one_singular(CTX, a), (r, s)
            assert is_at_most_one_singular(CTX, a, orbit_check=True), (r, s)


def test_tau_invariance_of_lowering_row2():
    a = phi_lowering(3, 2)
    assert group_act_on_ring(CTX, a) == a


# --- calibration and homomorphism -------------------------------------------


def test_calibration_star():
    assert calibrate_convention(2) == "star"
    assert convention() == "star"
    # the opposite-order commutator is what matches the bracket at order 3 too
    assert calibrate_convention(3) == "star"


def test_circ_commutator_has_wrong_sign():
    lhs = bracket("circ", phi_general(2, 1, 2), phi_general(2, 2, 1))
    rhs = phi_combination(2, [(1, (1, 1)), (-1, (2, 2))])
    assert lhs == rhs.scale(-1)
    lhs_star = bracket("star", phi_general(2, 1, 2), phi_general(2, 2, 1))
    assert lhs_star == rhs


def test_diagonal_pair_commutes_both_ways():
    for conv in ("circ", "star"):
        assert bracket(conv, phi_diagonal(2, 1), phi_diagonal(2, 2)).is_zero()


def test_homomorphism_n2():
    report = verify_homomorphism(2)
    assert report["ok"] and report["total"] == 16 and report["passed"] == 16


def test_homomorphism_n3():
    report = verify_homomorphism(3)
    assert report["ok"] and report["total"] == 81


def test_commutator_antisymmetry_of_reports():
    conv = convention()
    a, b = phi_general(3, 1, 2), phi_general(3, 2, 2)
    assert bracket(conv, a, b) == bracket(conv, b, a).scale(-1)


def test_phi_general_delegates():
    assert phi_general(3, 1, 2) == phi_raising(3, 1)
    assert phi_general(3, 2, 1) == phi_lowering(3, 1)
    assert phi_general(3, 2, 2) == phi_diagonal(3, 2)


def test_phi_general_nonadjacent_bracket():
    expected = bracket(convention(), phi_general(3, 1, 2), phi_general(3, 2, 3))
    assert phi_general(3, 1, 3) == expected
    assert not phi_general(3, 1, 3).is_zero()
    assert not phi_general(3, 3, 1).is_zero()


def test_phi_invalid_indices():
    with pytest.raises(ValueError):
        phi_general(3, 0, 1)
    with pytest.raises(ValueError):
        phi_raising(3, 3)
    with pytest.raises(ValueError):
        phi_diagonal(3, 4)
