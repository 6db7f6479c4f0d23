"""Laurent polynomials and rational functions on Y, with the Weyl action.

A LaurentPoly is a finite map from exponent vectors in Z^d (coordinates in the
chosen basis (y_j) of Y) to nonzero field elements; Z^lam denotes the monomial
with exponent lam.  The Weyl group acts by Z^lam -> Z^{w.lam}, so that
(theta^v)^w = theta^{wv}.

A RationalFunction is a reduced fraction num/den.  Canonical form: den is a
genuine polynomial (nonnegative exponents) with no monomial factor, monic for
the graded-lex order, and coprime to the polynomial part of num; num keeps any
leftover monomial unit.  Reduction uses a recursive primitive Euclidean gcd
over the coefficient field, which is plenty at the support sizes the engine
produces.

A Character is a point of Hom(Y, F^x) given by its values on the basis (y_j);
evaluation of a rational function at a character is exact and raises
SingularAt when the reduced denominator vanishes there - which is meaningful:
the function lies outside the local ring at that character.
"""

from __future__ import annotations

from .scalars import CyclotomicField, FieldElement


class SingularAt(ZeroDivisionError):
    """Evaluation at a character where the reduced denominator vanishes."""


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

class LaurentPoly:
    __slots__ = ("field", "nvars", "coeffs")

    def __init__(self, field: CyclotomicField, nvars: int, coeffs: dict | None = None):
        self.field = field
        self.nvars = nvars
        clean = {}
        if coeffs:
            for exp, c in coeffs.items():
                if not c.is_zero():
                    clean[tuple(int(e) for e in exp)] = c
        self.coeffs = clean

    # -- constructors ------------------------------------------------------
    @staticmethod
    def monomial(field, exponent, coeff=None) -> "LaurentPoly":
        exponent = tuple(int(e) for e in exponent)
        c = field.one if coeff is None else field(coeff)
        return LaurentPoly(field, len(exponent), {exponent: c})

    @staticmethod
    def constant(field, nvars, value) -> "LaurentPoly":
        return LaurentPoly(field, nvars, {(0,) * nvars: field(value)})

    def zero_like(self) -> "LaurentPoly":
        return LaurentPoly(self.field, self.nvars)

    # -- structure ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return not self.coeffs or set(self.coeffs) == {(0,) * self.nvars}

    def constant_value(self) -> FieldElement:
        if self.is_zero():
            return self.field.zero
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.coeffs[(0,) * self.nvars]

    def support(self):
        return set(self.coeffs)

    def min_exponents(self):
        return tuple(min(e[i] for e in self.coeffs) for i in range(self.nvars))

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPoly)
            and other.nvars == self.nvars
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.coeffs.items())))

    # -- arithmetic --------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, FieldElement)):
            return LaurentPoly.constant(self.field, self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for exp, c in other.coeffs.items():
            cur = out.get(exp)
            s = c if cur is None else cur + c
            if s.is_zero():
                out.pop(exp, None)
            else:
                out[exp] = s
        return LaurentPoly(self.field, self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.field, self.nvars, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple, FieldElement] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                cur = out.get(e)
                s = p if cur is None else cur + p
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return LaurentPoly(self.field, self.nvars, out)

    __rmul__ = __mul__

    def scale(self, c: FieldElement) -> "LaurentPoly":
        if c.is_zero():
            return self.zero_like()
        return LaurentPoly(self.field, self.nvars, {e: v * c for e, v in self.coeffs.items()})

    def shift(self, exponent) -> "LaurentPoly":
        """Multiply by the monomial Z^exponent."""
        return LaurentPoly(
            self.field,
            self.nvars,
            {tuple(a + b for a, b in zip(e, exponent)): c for e, c in self.coeffs.items()},
        )

    # -- Weyl action ---------------------------------------------------------
    def weyl_act(self, w) -> "LaurentPoly":
        """theta^w = sum a_lam Z^{w.lam}; a ring automorphism."""
        out = {}
        for e, c in self.coeffs.items():
            out[w.act_y(e)] = c
        return LaurentPoly(self.field, self.nvars, out)

    # -- evaluation ----------------------------------------------------------
    def evaluate(self, character: "Character") -> FieldElement:
        total = self.field.zero
        for e, c in self.coeffs.items():
            total = total + c * character.value_of(e)
        return total

    # -- rendering -------------------------------------------------------------
    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, key=_grlex_key, reverse=True):
            c = self.coeffs[e]
            mono = "Z^[" + ",".join(str(x) for x in e) + "]"
            if all(x == 0 for x in e):
                parts.append(f"({c})")
            elif c == self.field.one:
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<LaurentPoly {self}>"


def _grlex_key(exp):
    return (sum(exp), exp)


# ---------------------------------------------------------------------------
# gcd over the field, on genuine polynomials (nonnegative exponents)
# ---------------------------------------------------------------------------

def _poly_lead(p: LaurentPoly):
    return max(p.coeffs, key=_grlex_key)


def _poly_divmod(a: LaurentPoly, b: LaurentPoly):
    """Graded-lex long division; exact enough for content/primitive work."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    q = a.zero_like()
    r = a
    lb = _poly_lead(b)
    cb = b.coeffs[lb]
    while not r.is_zero():
        lr = _poly_lead(r)
        diff = tuple(x - y for x, y in zip(lr, lb))
        if any(d < 0 for d in diff):
            break
        t = LaurentPoly.monomial(a.field, diff, r.coeffs[lr] / cb)
        q = q + t
        r = r - t * b
    return q, r


def _poly_divexact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    q, r = _poly_divmod(a, b)
    if not r.is_zero():
        raise ArithmeticError("division was expected to be exact")
    return q


def _to_univariate(p: LaurentPoly, var: int) -> dict[int, LaurentPoly]:
    """Split off one variable: degree -> coefficient poly in the others."""
    out: dict[int, dict] = {}
    for e, c in p.coeffs.items():
        d = e[var]
        rest = e[:var] + e[var + 1:]
        out.setdefault(d, {})[rest] = c
    return {
        d: LaurentPoly(p.field, p.nvars - 1, coeffs)
        for d, coeffs in out.items()
    }


def _from_univariate(field, nvars: int, var: int, coeffs: dict[int, LaurentPoly]) -> LaurentPoly:
    out = {}
    for d, poly in coeffs.items():
        for e, c in poly.coeffs.items():
            out[e[:var] + (d,) + e[var:]] = c
    return LaurentPoly(field, nvars, out)


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """gcd of two genuine polynomials, monic under graded lex.

    Recursive primitive Euclidean algorithm: treat the last active variable as
    the main one, take contents in the remaining variables, and use
    pseudo-remainders.
    """
    if a.is_zero():
        return _make_monic(b)
    if b.is_zero():
        return _make_monic(a)
    assert a.nvars == b.nvars
    var = _last_active_var(a, b)
    if var is None:  # both constants
        return LaurentPoly.constant(a.field, a.nvars, 1)
    ua, ub = _to_univariate(a, var), _to_univariate(b, var)
    if max(ua) == 0 and max(ub) == 0:
        g = poly_gcd(ua[0], ub[0])
        return _insert_var(g, var)
    ca = _content(ua)
    cb = _content(ub)
    pa = {d: _poly_divexact(p, ca) for d, p in ua.items()}
    pb = {d: _poly_divexact(p, cb) for d, p in ub.items()}
    cont = poly_gcd(ca, cb)
    if max(pa) < max(pb):
        pa, pb = pb, pa
    while True:
        if not pb:
            g = _primitive(pa)
            break
        r = _pseudo_rem(pa, pb, a.field)
        if not r:
            g = _primitive(pb)
            break
        # primitive remainder sequence keeps coefficient growth in check
        r = _primitive(r)
        lead = r[max(r)]
        if lead.is_constant():
            c = lead.constant_value().inverse()
            r = {d: p.scale(c) for d, p in r.items()}
        pa, pb = pb, r
    g = {d: p * cont for d, p in g.items()}
    return _make_monic(_from_univariate(a.field, a.nvars, var, g))


def _last_active_var(a: LaurentPoly, b: LaurentPoly):
    for var in range(a.nvars - 1, -1, -1):
        if any(e[var] for e in a.coeffs) or any(e[var] for e in b.coeffs):
            return var
    return None


def _insert_var(g: LaurentPoly, var: int) -> LaurentPoly:
    return LaurentPoly(
        g.field, g.nvars + 1, {e[:var] + (0,) + e[var:]: c for e, c in g.coeffs.items()}
    )


def _content(u: dict[int, LaurentPoly]) -> LaurentPoly:
    polys = list(u.values())
    g = polys[0]
    for p in polys[1:]:
        g = poly_gcd(g, p)
        if g.is_constant():
            break
    return _make_monic(g)


def _primitive(u: dict[int, LaurentPoly]) -> dict[int, LaurentPoly]:
    c = _content(u)
    return {d: _poly_divexact(p, c) for d, p in u.items()}


def _pseudo_rem(a: dict[int, LaurentPoly], b: dict[int, LaurentPoly], field):
    """Pseudo-remainder of univariate polys with polynomial coefficients."""
    a = dict(a)
    db, lb = max(b), b[max(b)]
    while a and max(a) >= db:
        da, la = max(a), a[max(a)]
        # a <- lb*a - la*x^(da-db)*b
        new: dict[int, LaurentPoly] = {}
        for d, p in a.items():
            new[d] = p * lb
        for d, p in b.items():
            shifted = d + da - db
            cur = new.get(shifted)
            term = p * la
            new[shifted] = (cur - term) if cur is not None else -term
        a = {d: p for d, p in new.items() if not p.is_zero()}
    return a


def _make_monic(p: LaurentPoly) -> LaurentPoly:
    if p.is_zero():
        return p
    lead = p.coeffs[_poly_lead(p)]
    return p.scale(lead.inverse())


# ---------------------------------------------------------------------------
# Rational functions, with factored denominators
# ---------------------------------------------------------------------------
#
# Denominators are kept as a multiset of monic, monomial-content-free factors
# (in this algebra: products of binomials 1 - Z^{-beta} and friends), and the
# numerator is kept coprime to every factor by gcd cancellation against the
# individual factors.  That yields the same canonical (num, expanded den) pair
# as a single big gcd would, while only ever running Euclid against small
# factors.  Equality and rendering use the expanded denominator.


def _factor_sort_key(f: LaurentPoly):
    lead = _poly_lead(f)
    items = tuple(sorted((e, f.coeffs[e].coeffs) for e in f.coeffs))
    return (_grlex_key(lead), items)


def _binomial_data(f: LaurentPoly):
    """(delta, c, dual) for a two-term factor f = Z^{e1} (Z^delta - c) with
    delta primitive, or None.  dual is an integer vector with dual . delta = 1,
    used to fold exponents modulo delta."""
    if len(f.coeffs) != 2:
        return None
    lo, hi = sorted(f.coeffs, key=_grlex_key)
    delta = tuple(h - x for h, x in zip(hi, lo))
    g, dual = _ext_gcd_vector(delta)
    if g != 1:
        return None
    c = -f.coeffs[lo] / f.coeffs[hi]
    return delta, c, tuple(dual)


def _ext_gcd_vector(v):
    """gcd g of the entries and an integer vector u with u . v = g."""
    g = 0
    u = [0] * len(v)
    for i, x in enumerate(v):
        if x == 0:
            continue
        if g == 0:
            g = abs(x)
            u[i] = 1 if x > 0 else -1
            continue
        old_r, r = g, x
        old_s, s = 1, 0
        while r:
            quo = old_r // r
            old_r, r = r, old_r - quo * r
            old_s, s = s, old_s - quo * s
        t = (old_r - old_s * g) // x
        u = [old_s * c for c in u]
        u[i] = t
        g = old_r
        if g < 0:
            g, u = -g, [-c for c in u]
    return g, u


def _fold_binomial(p: LaurentPoly, delta, c, dual):
    """Residue of p modulo Z^delta - c: substitute along the dual grading."""
    field = p.field
    out: dict[tuple, FieldElement] = {}
    for e, coeff in p.coeffs.items():
        q = sum(u * x for u, x in zip(dual, e))
        rep = tuple(x - q * d for x, d in zip(e, delta))
        val = coeff * c ** q
        cur = out.get(rep)
        s = val if cur is None else cur + val
        if s.is_zero():
            out.pop(rep, None)
        else:
            out[rep] = s
    return LaurentPoly(field, p.nvars, out)


def _split_binomial(f: LaurentPoly):
    """Split a two-term factor Z^{e1}(Z^{g*delta0} - c) into primitive binomials.

    Returns (monomial_unit_exponent, [factors]) when the field contains all the
    g-th roots needed, or None (the caller then keeps f whole and uses the
    generic gcd)."""
    from .scalars import nth_root

    if len(f.coeffs) != 2:
        return None
    lo, hi = sorted(f.coeffs, key=_grlex_key)
    delta = tuple(h - x for h, x in zip(hi, lo))
    g, _ = _ext_gcd_vector(delta)
    if g <= 1:
        return None
    field = f.field
    c = -f.coeffs[lo] / f.coeffs[hi]
    root = nth_root(c, g)
    if root is None:
        return None
    # all g-th roots of c, when the g-th roots of unity are all in the field
    if field.torsion_order % g != 0:
        return None
    zg = field.torsion_generator() ** (field.torsion_order // g)
    roots = []
    t = field.one
    for _ in range(g):
        roots.append(root * t)
        t = t * zg
    if len(set(roots)) != g:
        return None
    delta0 = tuple(x // g for x in delta)
    base = LaurentPoly.monomial(field, delta0)
    return lo, [base - LaurentPoly.constant(field, f.nvars, xi) for xi in roots]


def _normalize_factor(f: LaurentPoly):
    """(monic content-free factor, unit) with f = unit * factor; unit = (shift, scalar)."""
    fmin = f.min_exponents()
    shifted = f.shift(tuple(-m for m in fmin))
    lead = shifted.coeffs[_poly_lead(shifted)]
    return shifted.scale(lead.inverse()), (fmin, lead)


class RationalFunction:
    __slots__ = ("num", "factors", "_den")

    def __init__(self, num: LaurentPoly, factors: tuple = ()):
        """Internal constructor; use reduce / from_poly for canonical values."""
        self.num = num
        self.factors = factors  # tuple of (LaurentPoly, multiplicity), sorted
        self._den = None

    # -- construction -------------------------------------------------------
    @staticmethod
    def _build(num: LaurentPoly, raw_factors) -> "RationalFunction":
        """Cancel num against each factor copy and assemble canonical form."""
        field, nvars = num.field, num.nvars
        if num.is_zero():
            return RationalFunction(num.zero_like())
        pending = []
        for f, mult in raw_factors:
            for _ in range(mult):
                pending.append(f)
        kept: list[LaurentPoly] = []
        while pending:
            f = pending.pop()
            if f.is_constant():
                num = num.scale(f.constant_value().inverse())
                continue
            if len(f.coeffs) == 1:  # monomial: a unit
                (exp, c), = f.coeffs.items()
                num = num.shift(tuple(-e for e in exp)).scale(c.inverse())
                continue
            f, (fshift, flead) = _normalize_factor(f)
            if any(fshift) or flead != field.one:
                num = num.shift(tuple(-s for s in fshift)).scale(flead.inverse())
            split = _split_binomial(f)
            if split is not None:
                unit_exp, parts = split
                if any(unit_exp):
                    num = num.shift(tuple(-x for x in unit_exp))
                pending.extend(parts)
                continue
            nmin = num.min_exponents()
            num_poly = num.shift(tuple(-m for m in nmin))
            if len(num_poly.coeffs) == 1:
                kept.append(f)  # monomial numerator: coprime to every factor
                continue
            binomial = _binomial_data(f)
            if binomial is not None:
                # Z^delta - c with delta primitive is irreducible: a fold decides
                delta, c, dual = binomial
                if not _fold_binomial(num_poly, delta, c, dual).is_zero():
                    kept.append(f)
                    continue
            q, r = _poly_divmod(num_poly, f)
            if r.is_zero():
                num = q.shift(nmin)
                continue
            g = poly_gcd(num_poly, f)
            if g.is_constant():
                kept.append(f)
            else:
                num = _poly_divexact(num_poly, g).shift(nmin)
                rest = _poly_divexact(f, g)
                if not rest.is_constant():
                    pending.append(rest)
        counted: dict[LaurentPoly, int] = {}
        for f in kept:
            counted[f] = counted.get(f, 0) + 1
        factors = tuple(sorted(counted.items(), key=lambda fm: _factor_sort_key(fm[0])))
        return RationalFunction(num, factors)

    @staticmethod
    def reduce(num: LaurentPoly, den: LaurentPoly) -> "RationalFunction":
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        return RationalFunction._build(num, ((den, 1),))

    @staticmethod
    def from_poly(p: LaurentPoly) -> "RationalFunction":
        return RationalFunction(p)

    @staticmethod
    def constant(field, nvars, value) -> "RationalFunction":
        return RationalFunction(LaurentPoly.constant(field, nvars, value))

    # -- structure ----------------------------------------------------------
    @property
    def field(self):
        return self.num.field

    @property
    def nvars(self):
        return self.num.nvars

    @property
    def den(self) -> LaurentPoly:
        """The expanded canonical denominator (monic, no monomial factor)."""
        if self._den is None:
            out = LaurentPoly.constant(self.field, self.nvars, 1)
            for f, mult in self.factors:
                for _ in range(mult):
                    out = out * f
            self._den = out
        return self._den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return not self.factors

    def to_laurent(self) -> LaurentPoly:
        if self.factors:
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def is_constant(self) -> bool:
        return not self.factors and self.num.is_constant()

    def constant_value(self) -> FieldElement:
        return self.to_laurent().constant_value()

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, LaurentPoly):
            return RationalFunction.from_poly(other)
        if isinstance(other, (int, FieldElement)):
            return RationalFunction.constant(self.field, self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.factors and not other.factors:
            return RationalFunction(self.num + other.num)
        if self.factors == other.factors:
            return RationalFunction._build(self.num + other.num, self.factors)
        # shared factors contribute their maximum multiplicity
        mine = dict(self.factors)
        theirs = dict(other.factors)
        common: dict[LaurentPoly, int] = dict(mine)
        for f, m in theirs.items():
            common[f] = max(common.get(f, 0), m)
        left = self.num
        for f, m in common.items():
            extra = m - mine.get(f, 0)
            for _ in range(extra):
                left = left * f
        right = other.num
        for f, m in common.items():
            extra = m - theirs.get(f, 0)
            for _ in range(extra):
                right = right * f
        return RationalFunction._build(left + right, tuple(common.items()))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.factors)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_constant():
            c = other.constant_value()
            if c.is_zero():
                return RationalFunction.constant(self.field, self.nvars, 0)
            return RationalFunction(self.num.scale(c), self.factors)
        if self.is_constant():
            c = self.constant_value()
            if c.is_zero():
                return RationalFunction.constant(self.field, self.nvars, 0)
            return RationalFunction(other.num.scale(c), other.factors)
        merged: dict[LaurentPoly, int] = dict(self.factors)
        for f, m in other.factors:
            merged[f] = merged.get(f, 0) + m
        return RationalFunction._build(self.num * other.num, tuple(merged.items()))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        num = LaurentPoly.constant(self.field, self.nvars, 1)
        for f, mult in self.factors:
            for _ in range(mult):
                num = num * f
        return RationalFunction._build(num, ((self.num, 1),))

    def __eq__(self, other):
        if isinstance(other, (int, FieldElement, LaurentPoly)):
            other = self._coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- action and evaluation ------------------------------------------------
    def weyl_act(self, w) -> "RationalFunction":
        # a ring automorphism preserves coprimality, so no cancellation is needed
        num = self.num.weyl_act(w)
        counted: dict[LaurentPoly, int] = {}
        for f, mult in self.factors:
            norm, (shift, scalar) = _normalize_factor(f.weyl_act(w))
            if any(shift) or scalar != self.field.one:
                num = num.shift(tuple(-mult * s for s in shift)).scale(
                    (scalar ** mult).inverse()
                )
            counted[norm] = counted.get(norm, 0) + mult
        factors = tuple(sorted(counted.items(), key=lambda fm: _factor_sort_key(fm[0])))
        return RationalFunction(num, factors)

    def evaluate(self, character: "Character") -> FieldElement:
        dval = self.field.one
        for f, mult in self.factors:
            v = f.evaluate(character)
            if v.is_zero():
                raise SingularAt(
                    f"rational function {self} is singular at the character"
                )
            dval = dval * v ** mult
        return self.num.evaluate(character) / dval

    def regular_at(self, character: "Character") -> bool:
        return all(not f.evaluate(character).is_zero() for f, _ in self.factors)

    def __str__(self):
        if not self.factors:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"<RationalFunction {self}>"


# ---------------------------------------------------------------------------
# Characters of Y
# ---------------------------------------------------------------------------

class Character:
    """tau in Hom(Y, F^x), stored by its values on the basis (y_j)."""

    __slots__ = ("field", "values")

    def __init__(self, field: CyclotomicField, values):
        self.field = field
        vals = tuple(field(v) for v in values)
        if any(v.is_zero() for v in vals):
            raise ValueError("character values must be nonzero")
        self.values = vals

    def __len__(self):
        return len(self.values)

    def value_of(self, exponent) -> FieldElement:
        out = self.field.one
        for v, e in zip(self.values, exponent):
            if e:
                out = out * v ** e
        return out

    def value_on_coroot(self, rgs, coroot) -> FieldElement:
        return self.value_of(rgs.coroot_y_coords(coroot))

    def act(self, w) -> "Character":
        """(w.tau)(lam) = tau(w^{-1}.lam)."""
        winv = w.inverse()
        d = len(self.values)
        basis = [tuple(1 if i == j else 0 for i in range(d)) for j in range(d)]
        return Character(self.field, [self.value_of(winv.act_y(b)) for b in basis])

    def __eq__(self, other):
        return (
            isinstance(other, Character)
            and other.field == self.field
            and other.values == self.values
        )

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return "Character(" + ", ".join(str(v) for v in self.values) + ")"
