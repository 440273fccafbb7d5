"""Sparse multivariate polynomials over exact rationals.

Variables are tableau positions (row, col) with 1 <= col <= row; a monomial
is a sorted tuple of ((row, col), exponent) pairs with positive exponents.
The monomial order is graded lexicographic, with variables ordered by
(row, col) and earlier positions ranked higher.  Canonical form (no zero
coefficients, sorted monomial tuples) makes structural equality coincide
with mathematical equality.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd as _igcd
from typing import Mapping

Var = tuple[int, int]
Monomial = tuple[tuple[Var, int], ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def check_var(v: Var, n: int | None = None) -> Var:
    k, i = v
    if not (1 <= i <= k):
        raise ValueError(f"invalid tableau position {v!r}")
    if n is not None and k > n:
        raise ValueError(f"position {v!r} out of range for order {n}")
    return v


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = dict(a)
    for v, e in b:
        out[v] = out.get(v, 0) + e
    return tuple(sorted(out.items()))


def mono_div(a: Monomial, b: Monomial) -> Monomial | None:
    """a / b, or None when some exponent would go negative."""
    out = dict(a)
    for v, e in b:
        r = out.get(v, 0) - e
        if r < 0:
            return None
        if r == 0:
            out.pop(v, None)
        else:
            out[v] = r
    return tuple(sorted(out.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_key(m: Monomial):
    """Sort key realizing the graded-lex order (larger key = larger monomial)."""
    return (mono_degree(m), tuple(((-v[0], -v[1]), e) for v, e in m))


class Polynomial:
    """Immutable sparse polynomial; term map monomial -> nonzero Fraction."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if not c:
                    continue
                m = tuple(sorted((v, e) for v, e in m if e))
                s = clean.get(m, _ZERO) + c
                if s:
                    clean[m] = s
                else:
                    clean.pop(m, None)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> "Polynomial":
        # internal: caller guarantees canonical content
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Polynomial":
        return cls._raw({(): _ONE})

    @classmethod
    def constant(cls, c) -> "Polynomial":
        c = Fraction(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def variable(cls, k: int, i: int) -> "Polynomial":
        check_var((k, i))
        return cls._raw({(((k, i), 1),): _ONE})

    @classmethod
    def term(cls, mono: Monomial, coeff) -> "Polynomial":
        return cls({mono: Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((), _ZERO)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = self._hash = hash(frozenset(self.terms.items()))
        return h

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self.terms.items()})

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, _ZERO) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.terms or not other.terms:
            return Polynomial.zero()
        big, small = self.terms, other.terms
        if len(big) < len(small):
            big, small = small, big
        out: dict[Monomial, Fraction] = {}
        get = out.get
        for m2, c2 in small.items():
            for m1, c1 in big.items():
                m = mono_mul(m1, m2)
                s = get(m, _ZERO) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._raw(out)

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero()
        if c == 1:
            return self
        return Polynomial._raw({m: q * c for m, q in self.terms.items()})

    def variables(self) -> list[Var]:
        vs: set[Var] = set()
        for m in self.terms:
            for v, _ in m:
                vs.add(v)
        return sorted(vs)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def degree_in(self, var: Var) -> int:
        d = 0
        for m in self.terms:
            for v, e in m:
                if v == var and e > d:
                    d = e
        return d

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=mono_key)

    def leading_coeff(self) -> Fraction:
        return self.terms[self.leading_monomial()]

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in descending graded-lex order (the canonical print order)."""
        return sorted(self.terms.items(), key=lambda t: mono_key(t[0]), reverse=True)

    def evaluate(self, coords: Mapping[Var, Fraction]) -> Fraction:
        total = _ZERO
        for m, c in self.terms.items():
            val = c
            for v, e in m:
                val *= Fraction(coords[v]) ** e
            total += val
        return total

    def derivative(self, var: Var) -> "Polynomial":
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            for idx, (v, e) in enumerate(m):
                if v == var:
                    rest = m[:idx] + ((v, e - 1),) + m[idx + 1:] if e > 1 else m[:idx] + m[idx + 1:]
                    s = out.get(rest, _ZERO) + c * e
                    if s:
                        out[rest] = s
                    else:
                        out.pop(rest, None)
                    break
        return Polynomial._raw(out)

    def subs_offsets(self, offsets: Mapping[Var, Fraction]) -> "Polynomial":
        """Substitute X_v -> X_v + offsets[v] for every listed variable."""
        live = {v: Fraction(c) for v, c in offsets.items() if c}
        if not live:
            return self
        cache: dict[tuple[Var, int], dict[Monomial, Fraction]] = {}
        out: dict[Monomial, Fraction] = {}
        for m, coeff in self.terms.items():
            static: list[tuple[Var, int]] = []
            factors: list[dict[Monomial, Fraction]] = []
            for v, e in m:
                c = live.get(v)
                if c is None:
                    static.append((v, e))
                    continue
                f = cache.get((v, e))
                if f is None:
                    f = {
                        (((v, j),) if j else ()): Fraction(comb(e, j)) * c ** (e - j)
                        for j in range(e + 1)
                    }
                    cache[(v, e)] = f
                factors.append(f)
            expanded: dict[Monomial, Fraction] = {tuple(static): coeff}
            for f in factors:
                nxt: dict[Monomial, Fraction] = {}
                for m1, c1 in expanded.items():
                    for m2, c2 in f.items():
                        mm = mono_mul(m1, m2)
                        s = nxt.get(mm, _ZERO) + c1 * c2
                        if s:
                            nxt[mm] = s
                        else:
                            nxt.pop(mm, None)
                expanded = nxt
            for mm, cc in expanded.items():
                s = out.get(mm, _ZERO) + cc
                if s:
                    out[mm] = s
                else:
                    out.pop(mm, None)
        return Polynomial._raw(out)

    def swap_vars(self, a: Var, b: Var) -> "Polynomial":
        if a == b:
            return self
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            mm = tuple(sorted((b if v == a else a if v == b else v, e) for v, e in m))
            out[mm] = c
        return Polynomial._raw(out)

    def __repr__(self) -> str:
        from .textform import poly_text

        return poly_text(self)


# ---------------------------------------------------------------------------
# Exact division and gcd.  The gcd core works on integer-coefficient term
# maps (denominators cleared first); it is a primitive polynomial remainder
# sequence, recursing on the coefficient polynomials for contents.
# ---------------------------------------------------------------------------


def divexact(f: Polynomial, g: Polynomial) -> Polynomial | None:
    """Quotient f/g when the division is exact, else None."""
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if f.is_zero():
        return Polynomial.zero()
    g_lm = g.leading_monomial()
    g_lc = g.terms[g_lm]
    rem = dict(f.terms)
    out: dict[Monomial, Fraction] = {}
    while rem:
        lm = max(rem, key=mono_key)
        q_mono = mono_div(lm, g_lm)
        if q_mono is None:
            return None
        q_c = rem[lm] / g_lc
        out[q_mono] = q_c
        for m, c in g.terms.items():
            mm = mono_mul(m, q_mono)
            s = rem.get(mm, _ZERO) - c * q_c
            if s:
                rem[mm] = s
            else:
                rem.pop(mm, None)
    return Polynomial._raw(out)


IntTerms = dict  # Monomial -> int


def _to_int_terms(p: Polynomial) -> IntTerms:
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // _igcd(den, c.denominator)
    return {m: int(c * den) for m, c in p.terms.items()}


def _int_content(d: IntTerms) -> int:
    g = 0
    for c in d.values():
        g = _igcd(g, c)
        if g == 1:
            return 1
    return g


def _int_scale_div(d: IntTerms, k: int) -> IntTerms:
    if k == 1:
        return d
    return {m: c // k for m, c in d.items()}


def _int_mul(a: IntTerms, b: IntTerms) -> IntTerms:
    out: IntTerms = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = mono_mul(m1, m2)
            s = out.get(m, 0) + c1 * c2
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return out


def _int_sub(a: IntTerms, b: IntTerms) -> IntTerms:
    out = dict(a)
    for m, c in b.items():
        s = out.get(m, 0) - c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def _mono_strip(m: Monomial, var: Var) -> tuple[int, Monomial]:
    for idx, (v, e) in enumerate(m):
        if v == var:
            return e, m[:idx] + m[idx + 1:]
    return 0, m


def _coeff_map(d: IntTerms, var: Var) -> dict[int, IntTerms]:
    """View as univariate in var: degree -> coefficient term map."""
    out: dict[int, IntTerms] = {}
    for m, c in d.items():
        e, rest = _mono_strip(m, var)
        out.setdefault(e, {})[rest] = c
    return out


def _from_coeff_map(cm: dict[int, IntTerms], var: Var) -> IntTerms:
    out: IntTerms = {}
    for e, coeff in cm.items():
        for m, c in coeff.items():
            mm = mono_mul(m, (((var, e),) if e else ())) if e else m
            out[mm] = c
    return out


def _attach_power(d: IntTerms, var: Var, e: int) -> IntTerms:
    if e == 0:
        return d
    pw: Monomial = ((var, e),)
    return {mono_mul(m, pw): c for m, c in d.items()}


def _int_divexact(f: IntTerms, g: IntTerms) -> IntTerms | None:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if not f:
        return {}
    g_lm = max(g, key=mono_key)
    g_lc = g[g_lm]
    rem = dict(f)
    out: IntTerms = {}
    while rem:
        lm = max(rem, key=mono_key)
        q_mono = mono_div(lm, g_lm)
        if q_mono is None:
            return None
        q_c, r = divmod(rem[lm], g_lc)
        if r:
            return None
        out[q_mono] = q_c
        for m, c in g.items():
            mm = mono_mul(m, q_mono)
            s = rem.get(mm, 0) - c * q_c
            if s:
                rem[mm] = s
            else:
                rem.pop(mm, None)
    return out


def _common_vars(f: IntTerms, g: IntTerms) -> list[Var]:
    vf = {v for m in f for v, _ in m}
    vg = {v for m in g for v, _ in m}
    return sorted(vf & vg)


def _mono_content(d: IntTerms) -> Monomial:
    """Largest monomial dividing every term."""
    it = iter(d)
    common = dict(next(it))
    for m in it:
        if not common:
            break
        md = dict(m)
        for v in list(common):
            e = md.get(v, 0)
            if e == 0:
                del common[v]
            elif e < common[v]:
                common[v] = e
    return tuple(sorted(common.items()))


def _int_deg(d: IntTerms, var: Var) -> int:
    deg = 0
    for m in d:
        for v, e in m:
            if v == var and e > deg:
                deg = e
    return deg


def _prem(f: IntTerms, g: IntTerms, var: Var) -> IntTerms:
    """Pseudo-remainder of f by g with respect to var."""
    dg = _int_deg(g, var)
    cg = _coeff_map(g, var)
    lcg = cg[dg]
    f = dict(f)
    df = _int_deg(f, var)
    while f and df >= dg:
        cf = _coeff_map(f, var)
        lcf = cf[df]
        shifted = _attach_power(_int_mul(lcf, g), var, df - dg)
        f = _int_sub(_int_mul(lcg, f), shifted)
        df = _int_deg(f, var)
    return f


def _content_in_var(d: IntTerms, var: Var) -> IntTerms:
    cm = _coeff_map(d, var)
    cont: IntTerms = {}
    for coeff in cm.values():
        cont = _int_gcd(cont, coeff)
        if len(cont) == 1 and () in cont and abs(cont[()]) == 1:
            break
    return cont


def _positive_primitive(d: IntTerms) -> IntTerms:
    if not d:
        return d
    c = _int_content(d)
    if d[max(d, key=mono_key)] < 0:
        c = -c
    return _int_scale_div(d, c)


class _HeuristicFailed(Exception):
    pass


def _max_norm(d: IntTerms) -> int:
    return max(abs(c) for c in d.values())


def _int_eval_var(d: IntTerms, var: Var, xi: int) -> IntTerms:
    out: IntTerms = {}
    for m, c in d.items():
        e, rest = _mono_strip(m, var)
        s = out.get(rest, 0) + c * xi**e
        if s:
            out[rest] = s
        else:
            out.pop(rest, None)
    return out


def _heu_gcd(f: IntTerms, g: IntTerms, depth: int = 0) -> IntTerms:
    """Heuristic gcd: evaluate one variable at a huge integer, take the gcd
    one level down, lift it back from the xi-adic digits, and certify by
    exact division.  Raises when the lift keeps failing."""
    if depth > 12:
        raise _HeuristicFailed
    common = _common_vars(f, g)
    if not common:
        return {(): _igcd(_int_content(f), _int_content(g))}
    var = min(common, key=lambda v: min(_int_deg(f, v), _int_deg(g, v)))
    xi = 2 * min(_max_norm(f), _max_norm(g)) + 29
    for _ in range(6):
        fe = _int_eval_var(f, var, xi)
        ge = _int_eval_var(g, var, xi)
        if fe and ge:
            try:
                h_val = _heu_gcd(fe, ge, depth + 1)
            except _HeuristicFailed:
                h_val = None
            if h_val is not None:
                # xi-adic lift with balanced digits
                h: IntTerms = {}
                u = h_val
                e = 0
                while u:
                    digit: IntTerms = {}
                    nxt: IntTerms = {}
                    for m, c in u.items():
                        r = c % xi
                        if r > xi // 2:
                            r -= xi
                        if r:
                            digit[m] = r
                        q = (c - r) // xi
                        if q:
                            nxt[m] = q
                    for m, c in digit.items():
                        h[mono_mul(m, ((var, e),) if e else ())] = c
                    u = nxt
                    e += 1
                if h:
                    h = _positive_primitive(h)
                    if _int_divexact(f, h) is not None and _int_divexact(g, h) is not None:
                        return h
        xi = xi * 73794 // 27011 + 17
    raise _HeuristicFailed


def _prs_gcd(f: IntTerms, g: IntTerms) -> IntTerms:
    """Primitive polynomial remainder sequence; the certified fallback."""
    common = _common_vars(f, g)
    if not common or len(f) == 1 or len(g) == 1:
        return {(): _igcd(_int_content(f), _int_content(g))}
    var = min(common, key=lambda v: min(_int_deg(f, v), _int_deg(g, v)))
    cont_f = _content_in_var(f, var)
    cont_g = _content_in_var(g, var)
    cont = _int_gcd(cont_f, cont_g)
    F = _int_divexact_strict(f, cont_f)
    G = _int_divexact_strict(g, cont_g)
    if _int_deg(F, var) < _int_deg(G, var):
        F, G = G, F
    while True:
        r = _prem(F, G, var)
        if not r:
            pp = _positive_primitive(G)
            break
        if _int_deg(r, var) == 0:
            pp = {(): 1}
            break
        F, G = G, _positive_primitive(_int_divexact_strict(r, _content_in_var(r, var)))
    return _int_mul(pp, cont)


def _int_gcd(f: IntTerms, g: IntTerms) -> IntTerms:
    if not f:
        return _positive_primitive(dict(g))
    if not g:
        return _positive_primitive(dict(f))
    ci = _igcd(_int_content(f), _int_content(g))
    f = _positive_primitive(f)
    g = _positive_primitive(g)
    if f == g:
        return {m: c * ci for m, c in f.items()}
    mf, mg = dict(_mono_content(f)), dict(_mono_content(g))
    mono: Monomial = tuple(sorted((v, min(e, mg[v])) for v, e in mf.items() if v in mg))
    if mono:
        f = {mono_div(m, mono): c for m, c in f.items()}
        g = {mono_div(m, mono): c for m, c in g.items()}
    common = _common_vars(f, g)
    if not common or len(f) == 1 or len(g) == 1:
        return {mono: ci}
    try:
        out = _heu_gcd(f, g)
    except _HeuristicFailed:
        out = _prs_gcd(f, g)
    if mono:
        out = {mono_mul(m, mono): c for m, c in out.items()}
    return {m: c * ci for m, c in out.items()}


def _int_divexact_strict(f: IntTerms, g: IntTerms) -> IntTerms:
    q = _int_divexact(f, g)
    if q is None:
        raise ArithmeticError("internal gcd error: expected exact division")
    return q


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Greatest common divisor, returned primitive over Z with positive lead."""
    if f.is_zero() and g.is_zero():
        return Polynomial.zero()
    d = _int_gcd(_to_int_terms(f), _to_int_terms(g))
    return Polynomial._raw({m: Fraction(c) for m, c in d.items()})
