"""Exact coefficient fields: arbitrary-precision rationals and cyclotomic fields Q(zeta_n).

Every scalar in the engine is a FieldElement: a polynomial in a fixed primitive
n-th root of unity `z`, of degree < phi(n), with Fraction coefficients, reduced
modulo the n-th cyclotomic polynomial.  The pure-rational case is n = 1.
Arithmetic is exact; equality compares canonical forms bit for bit.

A session works inside one field context; combining elements of different
contexts raises FieldMismatchError rather than coercing silently.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd


class FieldMismatchError(TypeError):
    """Two elements from different field contexts were combined."""


class FieldTooSmallError(ValueError):
    """A required root is absent from the session field."""


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv_lead = 1 / b[-1]
    while len(a) >= len(b):
        c = a[-1] * inv_lead
        d = len(a) - len(b)
        q[d] = c
        for i, bc in enumerate(b):
            a[d + i] -= c * bc
        _poly_trim(a)
        if not a:
            break
    return _poly_trim(q), a


@lru_cache(maxsize=None)
def _cyclotomic_polynomial(n: int) -> tuple[Fraction, ...]:
    """Coefficients of Phi_n, low degree first, computed by exact division of x^n - 1."""
    poly = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in _divisors(n):
        if d == n:
            continue
        q, r = _poly_divmod(poly, list(_cyclotomic_polynomial(d)))
        assert not r, "cyclotomic division must be exact"
        poly = q
    return tuple(poly)


_NUM_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class CyclotomicField:
    """The field Q(zeta_n); n = 1 gives plain Q."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("cyclotomic index must be >= 1")
        self.n = n
        self.modulus = _cyclotomic_polynomial(n)
        self.degree = len(self.modulus) - 1  # phi(n)
        self.zero = FieldElement(self, ())
        self.one = FieldElement(self, (Fraction(1),))
        if n == 1:
            self.zeta = self.one
        else:
            self.zeta = self.element([0, 1])
        # largest order of a root of unity inside Q(zeta_n)
        self.torsion_order = n if n % 2 == 0 else 2 * n

    def __repr__(self):
        return f"CyclotomicField({self.n})"

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.n == self.n

    def __hash__(self):
        return hash(("CyclotomicField", self.n))

    def element(self, coeffs) -> FieldElement:
        """Build an element from low-first coefficients, reducing mod Phi_n."""
        cs = [Fraction(c) for c in coeffs]
        if len(cs) >= len(self.modulus):
            _, cs = _poly_divmod(cs, list(self.modulus))
        else:
            _poly_trim(cs)
        return FieldElement(self, tuple(cs))

    def rational(self, value) -> FieldElement:
        return self.element([Fraction(value)])

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError("element from a different field context")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return self.rational(value)

    def zeta_power(self, k: int) -> FieldElement:
        return self.zeta ** (k % self.n)

    def torsion_generator(self) -> FieldElement:
        """A root of unity of maximal order (torsion_order) in the field."""
        if self.n % 2 == 0 or self.n == 1:
            return self.zeta if self.n > 1 else self.rational(-1)
        return -self.zeta_power((self.n + 1) // 2)

    def parse(self, text: str) -> FieldElement:
        """Parse "p/q" or cyclotomic sums like "1/2 + 3*z^2 - z"."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty scalar literal")
        # split into signed terms
        terms = re.findall(r"[+-]?[^+-]+", s)
        if "".join(terms) != s:
            raise ValueError(f"cannot parse scalar literal {text!r}")
        acc = self.zero
        for term in terms:
            sign = 1
            body = term
            if body[0] in "+-":
                sign = -1 if body[0] == "-" else 1
                body = body[1:]
            coeff = Fraction(1)
            power = 0
            for factor in body.split("*"):
                if not factor:
                    raise ValueError(f"cannot parse scalar literal {text!r}")
                if factor[0] == "z":
                    if factor == "z":
                        power += 1
                    elif factor.startswith("z^"):
                        power += int(factor[2:])
                    else:
                        raise ValueError(f"cannot parse scalar literal {text!r}")
                elif _NUM_RE.match(factor):
                    coeff *= Fraction(factor)
                else:
                    raise ValueError(f"cannot parse scalar literal {text!r}")
            if power and self.n == 1:
                raise ValueError("'z' is not available in the rational field (n = 1)")
            acc = acc + self.zeta_power(power) * self.element([sign * coeff])
        return acc


class FieldElement:
    """An element of Q(zeta_n) in canonical reduced form.  Immutable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CyclotomicField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    # -- helpers ---------------------------------------------------------
    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError("mixing elements of different field contexts")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def as_rational(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        if len(self.coeffs) > 1:
            raise ValueError("element is not rational")
        return self.coeffs[0]

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return FieldElement(self.field, tuple(_poly_trim(out)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self.field.zero
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return self.field.element(out)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if not self.coeffs:
            raise ZeroDivisionError("division by zero in the coefficient field")
        if len(self.coeffs) == 1:
            return self.field.rational(1 / self.coeffs[0])
        # extended Euclid in Q[x] against the (irreducible) modulus
        r0, r1 = list(self.field.modulus), list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while r1:
            q, r = _poly_divmod(r0, r1)
            s = list(s0)
            # s0 - q*s1
            prod = [Fraction(0)] * (len(q) + len(s1) - 1)
            for i, qa in enumerate(q):
                if qa:
                    for j, sb in enumerate(s1):
                        prod[i + j] += qa * sb
            for i in range(max(len(s), len(prod))):
                if i >= len(s):
                    s.append(Fraction(0))
                if i < len(prod):
                    s[i] -= prod[i]
            _poly_trim(s)
            r0, r1, s0, s1 = r1, r, s1, s
        assert len(r0) == 1, "gcd with an irreducible modulus must be a unit"
        g = r0[0]
        return self.field.element([c / g for c in s0])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison / hashing --------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.rational(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.n, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- rendering ---------------------------------------------------------
    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mono = "z" if k == 1 else f"z^{k}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}*{mono}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self):
        return f"<{self} in Q(zeta_{self.field.n})>"


def multiplicative_order(a: FieldElement, bound: int | None = None) -> int | None:
    """Least k (1 <= k <= bound) with a^k = 1, or None.

    With no bound, decides root-of-unity-ness exactly: the torsion of
    Q(zeta_n)^x has order n (n even) or 2n (n odd).
    """
    if a.is_zero():
        raise ValueError("zero has no multiplicative order")
    cap = bound if bound is not None else a.field.torsion_order
    if bound is None and a ** a.field.torsion_order != a.field.one:
        return None
    p = a
    for k in range(1, cap + 1):
        if p == a.field.one:
            return k
        p = p * a
    return None


# ---------------------------------------------------------------------------
# Root extraction.  Supports elements of the form rational * zeta^k, which is
# all the engine needs when solving for characters with prescribed coroot
# values.  Returns None when no root exists in the field (or out of reach).
# ---------------------------------------------------------------------------

def as_rational_times_zeta(a: FieldElement) -> tuple[Fraction, int] | None:
    """Write a = r * zeta^k with r rational, if possible."""
    if a.is_zero():
        return (Fraction(0), 0)
    if a.is_rational():
        return (a.as_rational(), 0)
    field = a.field
    zinv = field.zeta.inverse()
    b = a
    for k in range(field.n):
        if b.is_rational():
            return (b.as_rational(), k)
        b = b * zinv
    return None


def _int_nth_root(m: int, k: int) -> int | None:
    if m < 0:
        return None
    r = round(m ** (1.0 / k)) if m > 1 else m
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** k == m:
            return cand
    return None


def _sqrt_positive_int(m: int, field: CyclotomicField) -> FieldElement | None:
    """Square root of a positive integer via Gauss sums, when the field has it."""
    square = 1
    squarefree = 1
    for p in range(2, int(m ** 0.5) + 1):
        while m % (p * p) == 0:
            m //= p * p
            square *= p
    # factor remaining squarefree part
    rem = m
    p = 2
    primes = []
    while p * p <= rem:
        if rem % p == 0:
            primes.append(p)
            rem //= p
        else:
            p += 1
    if rem > 1:
        primes.append(rem)
    root = field.rational(square)
    n = field.n
    for p in primes:
        if p == 2:
            if n % 8 != 0:
                return None
            z8 = field.zeta_power(n // 8)
            root = root * (z8 + z8.inverse())
        else:
            if n % p != 0:
                return None
            zp = field.zeta_power(n // p)
            g = field.zero
            for k in range(1, p):
                legendre = pow(k, (p - 1) // 2, p)
                sign = 1 if legendre == 1 else -1
                g = g + sign * (zp ** k)
            if p % 4 == 3:
                if n % 4 != 0:
                    return None
                g = g * field.zeta_power(n // 4).inverse()  # g = i*sqrt(p)
            root = root * g
        squarefree *= p
    return root


def sqrt(a: FieldElement) -> FieldElement | None:
    """A square root of a in its field, or None."""
    field = a.field
    if a.is_zero():
        return field.zero
    decomp = as_rational_times_zeta(a)
    if decomp is None:
        return None
    r, k = decomp
    # sqrt of zeta^k
    n = field.n
    if k % 2 == 0:
        zroot = field.zeta_power(k // 2)
    elif n % 2 == 1:
        zroot = field.zeta_power((k * (n + 1) // 2) % n)
    else:
        zroot = field.zeta_power((k + n) // 2)
    # sqrt of the rational part
    num, den = r.numerator, r.denominator
    negative = num < 0
    num = abs(num)
    s = _sqrt_positive_int(num * den, field)
    if s is None:
        return None
    rroot = s / field.rational(den)
    if negative:
        if n % 4 != 0:
            return None
        rroot = rroot * field.zeta_power(n // 4)
    cand = rroot * zroot
    return cand if cand * cand == a else None


def nth_root(a: FieldElement, m: int) -> FieldElement | None:
    """Some x with x^m = a, or None.  m >= 1."""
    if m < 1:
        raise ValueError("root index must be positive")
    if m == 1 or a.is_zero():
        return a
    field = a.field
    if m % 2 == 0:
        half = sqrt(a)
        if half is None:
            return None
        return nth_root(half, m // 2)
    decomp = as_rational_times_zeta(a)
    if decomp is None:
        return None
    r, k = decomp
    n = field.n
    # solve j*m = k (mod n) for the zeta part
    g = gcd(m, n)
    if k % g != 0:
        return None
    j = (k // g * pow(m // g, -1, n // g)) % (n // g)
    zroot = field.zeta_power(j)
    num, den = r.numerator, r.denominator
    sign = -1 if num < 0 else 1
    rn = _int_nth_root(abs(num), m)
    rd = _int_nth_root(den, m)
    if rn is None or rd is None:
        return None
    rroot = field.rational(Fraction(sign * rn, rd))
    cand = rroot * zroot
    return cand if cand ** m == a else None
