"""The Bernstein-Lusztig-Hecke algebra with rational-function coefficients.

Elements are finite sums  sum_w X_w * theta_w  with theta_w in F(Y) written on
the RIGHT of the basis vector, X in {H, T, B, F}.  The product is computed in
the H basis from the defining relations:

  quadratic:    H_s * H_s = (sigma_s - sigma_s^{-1}) H_s + 1
  translation:  Z^lam * Z^mu = Z^{lam+mu}
  exchange:     theta * H_s = H_s * theta^s + Q_s(Z) (theta - theta^s),
                Q_s(Z) = ((sigma_s - sigma_s^{-1})
                          + (sigma'_s - sigma'_s^{-1}) Z^{-alpha_s^vee})
                         / (1 - Z^{-2 alpha_s^vee}).

Derived machinery built here: the correction functions Q_s; the zeta factors
zeta_s = -sigma_s Q_s + sigma_s^2 and their transports zeta_{w.alpha_s^vee}
= (zeta_s)^w; the intertwiner generators F_s = B_s + zeta_s with
B_s = T_s - sigma_s^2, T_s = sigma_s H_s; products F_w over reduced words
(well-definedness is a test, not an assumption); the constant-coefficient
basis (B_w) obtained by evaluating F_w at a character tau0 with
tau0(alpha_s^vee) = sigma_s; the coefficient recursions P_{v,w,lam} and
Q_{v,w,lam}; and the regularized intertwiners K_r = F_r - zeta_{alpha_r^vee}.
"""

from __future__ import annotations

import logging

from .coxeter import Coroot, RootGeneratingSystem, WeylElement, word_str
from .intmat import matvec, smith_normal_form
from .laurent import Character, LaurentPoly, RationalFunction, SingularAt
from .scalars import FieldElement, FieldTooSmallError, nth_root

log = logging.getLogger(__name__)

BASES = ("H", "T", "B", "F")


class HeckeElement:
    """A finite map basis-vector -> rational function, tagged by basis."""

    __slots__ = ("algebra", "basis", "coeffs")

    def __init__(self, algebra: "HeckeAlgebra", basis: str, coeffs: dict):
        assert basis in BASES
        self.algebra = algebra
        self.basis = basis
        self.coeffs = {w: c for w, c in coeffs.items() if not c.is_zero()}

    # -- structure ----------------------------------------------------------
    def support(self) -> set[WeylElement]:
        return set(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, w: WeylElement) -> RationalFunction:
        return self.coeffs.get(w, self.algebra.rf_zero)

    def max_support(self) -> set[WeylElement]:
        rgs = self.algebra.rgs
        return {
            w
            for w in self.coeffs
            if not any(w != v and rgs.bruhat_leq(w, v) for v in self.coeffs)
        }

    # -- linear operations -----------------------------------------------------
    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        a, b = self, other
        if a.basis != b.basis:
            a, b = a.to_basis("H"), b.to_basis("H")
        out = dict(a.coeffs)
        for w, c in b.coeffs.items():
            out[w] = out[w] + c if w in out else c
        return HeckeElement(a.algebra, a.basis, out)

    def __neg__(self):
        return HeckeElement(self.algebra, self.basis, {w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "HeckeElement":
        c = self.algebra.as_rf(c)
        return HeckeElement(
            self.algebra, self.basis, {w: v * c for w, v in self.coeffs.items()}
        )

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        return self.algebra.mul(self, other)

    def to_basis(self, target: str) -> "HeckeElement":
        return self.algebra.basis_convert(self, target)

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.to_basis("H").coeffs == other.to_basis("H").coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for w in sorted(self.coeffs, key=lambda u: (u.length(), u.reduced_word())):
            parts.append(f"{self.basis}[{word_str(w.reduced_word())}]*({self.coeffs[w]})")
        return " + ".join(parts)

    def __repr__(self):
        return f"<HeckeElement {self}>"


class ZetaData:
    """zeta_{alpha^vee} together with its chosen numerator/denominator pair."""

    __slots__ = ("coroot", "fraction", "numerator", "denominator", "den_label")

    def __init__(self, coroot, fraction, numerator, denominator, den_label):
        self.coroot = coroot
        self.fraction = fraction
        self.numerator = numerator
        self.denominator = denominator
        self.den_label = den_label

    def __repr__(self):
        return f"<ZetaData {self.coroot}: {self.fraction} (den {self.den_label})>"


class HeckeAlgebra:
    def __init__(self, rgs: RootGeneratingSystem):
        self.rgs = rgs
        self.field = rgs.field
        self.nvars = rgs.rank_y
        self.rf_zero = RationalFunction.constant(self.field, self.nvars, 0)
        self.rf_one = RationalFunction.constant(self.field, self.nvars, 1)
        self._q_cache: dict[int, RationalFunction] = {}
        self._zeta_cache: dict[tuple, ZetaData] = {}
        self._f_cache: dict[WeylElement, HeckeElement] = {}
        self._b_cache: dict[WeylElement, HeckeElement] = {}
        self._tau0: Character | None = None
        self._tau0_failure: str | None = None

    # -- element constructors -------------------------------------------------
    def as_rf(self, value) -> RationalFunction:
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, LaurentPoly):
            return RationalFunction.from_poly(value)
        return RationalFunction.constant(self.field, self.nvars, value)

    def zero(self) -> HeckeElement:
        return HeckeElement(self, "H", {})

    def one(self) -> HeckeElement:
        return HeckeElement(self, "H", {self.rgs.identity: self.rf_one})

    def h(self, w: WeylElement, coeff=1) -> HeckeElement:
        return HeckeElement(self, "H", {w: self.as_rf(coeff)})

    def from_function(self, theta) -> HeckeElement:
        """theta in F(Y), embedded on the basis vector H_1."""
        return HeckeElement(self, "H", {self.rgs.identity: self.as_rf(theta)})

    def monomial(self, exponent, coeff=1) -> HeckeElement:
        return self.from_function(LaurentPoly.monomial(self.field, exponent, coeff))

    def t(self, w: WeylElement) -> HeckeElement:
        return HeckeElement(self, "T", {w: self.rf_one})

    def sigma_word(self, w: WeylElement) -> FieldElement:
        out = self.field.one
        for s in w.reduced_word():
            out = out * self.rgs.sigma[s]
        return out

    # -- defining data ----------------------------------------------------------
    def coroot_monomial(self, coroot: Coroot, multiple: int = 1) -> LaurentPoly:
        y = self.rgs.coroot_y_coords(coroot)
        return LaurentPoly.monomial(self.field, tuple(multiple * c for c in y))

    def q_factor(self, s: int) -> RationalFunction:
        """The exchange-relation correction function for the simple reflection s."""
        if s not in self._q_cache:
            si, sp = self.rgs.sigma[s], self.rgs.sigma_prime[s]
            one = LaurentPoly.constant(self.field, self.nvars, 1)
            z_minus = self.coroot_monomial(self.rgs.simple_coroot(s), -1)
            z_minus2 = self.coroot_monomial(self.rgs.simple_coroot(s), -2)
            num = one.scale(si - si.inverse()) + z_minus.scale(sp - sp.inverse())
            den = one - z_minus2
            self._q_cache[s] = RationalFunction.reduce(num, den)
        return self._q_cache[s]

    def zeta(self, coroot: Coroot) -> ZetaData:
        """zeta_{alpha^vee}; for alpha^vee = w.alpha_s^vee this is (zeta_s)^w."""
        if not coroot.positive:
            raise ValueError("zeta is attached to positive coroots")
        key = coroot.coords
        if key not in self._zeta_cache:
            w, s = self.rgs.coroot_decomposition(coroot)
            si = self.rgs.sigma[s]
            base = self.as_rf(si ** 2) - self.q_factor(s) * self.as_rf(si)
            frac = base.weyl_act(w) if not w.is_identity() else base
            one = LaurentPoly.constant(self.field, self.nvars, 1)
            candidates = [
                ("1-Z^-a", one - self.coroot_monomial(coroot, -1)),
                ("1+Z^-a", one + self.coroot_monomial(coroot, -1)),
                ("1-Z^-2a", one - self.coroot_monomial(coroot, -2)),
            ]
            for label, cand in candidates:
                prod = frac * cand
                if prod.is_laurent():
                    self._zeta_cache[key] = ZetaData(
                        coroot, frac, prod.to_laurent(), cand, label
                    )
                    break
            else:
                raise AssertionError(
                    f"no admissible denominator for zeta at {coroot}; parameters "
                    "violate the standing assumption"
                )
        return self._zeta_cache[key]

    # -- the product ----------------------------------------------------------
    def mul(self, a: HeckeElement, b: HeckeElement) -> HeckeElement:
        a = a.to_basis("H")
        b = b.to_basis("H")
        out: dict[WeylElement, RationalFunction] = {}
        for v, theta_v in a.coeffs.items():
            for w, psi_w in b.coeffs.items():
                pushed = self._push_through(theta_v, w)
                for u, c_u in pushed.items():
                    left = self._h_times_h(v, u)
                    for x, d_x in left.items():
                        term = d_x * c_u * psi_w
                        cur = out.get(x)
                        out[x] = cur + term if cur is not None else term
        return HeckeElement(self, "H", out)

    def _push_through(self, theta: RationalFunction, w: WeylElement) -> dict:
        """Rewrite theta * H_w as sum_u H_u * c_u via the exchange relation."""
        if w.is_identity() or theta.is_constant():
            return {w: theta}
        word = w.reduced_word()
        s = word[0]
        rs = self.rgs.simple_reflection(s)
        wp = rs * w  # the rest of the word
        theta_s = theta.weyl_act(rs)
        first = self._push_through(theta_s, wp)
        out: dict[WeylElement, RationalFunction] = {}
        for u, c in self._left_letter(s, first).items():
            out[u] = c
        correction = self.q_factor(s) * (theta - theta_s)
        if not correction.is_zero():
            for u, c in self._push_through(correction, wp).items():
                cur = out.get(u)
                out[u] = cur + c if cur is not None else c
        return out

    def _left_letter(self, s: int, coeffs: dict) -> dict:
        """Left multiplication of sum H_u c_u by H_s, via the quadratic relation."""
        rs = self.rgs.simple_reflection(s)
        out: dict[WeylElement, RationalFunction] = {}

        def add(u, c):
            cur = out.get(u)
            out[u] = cur + c if cur is not None else c

        for u, c in coeffs.items():
            su = rs * u
            if su.length() > u.length():
                add(su, c)
            else:
                si = self.rgs.sigma[s]
                add(u, c * self.as_rf(si - si.inverse()))
                add(su, c)
        return out

    def _h_times_h(self, v: WeylElement, u: WeylElement) -> dict:
        """H_v * H_u by right multiplication along a reduced word of u."""
        out = {v: self.rf_one}
        for s in u.reduced_word():
            rs = self.rgs.simple_reflection(s)
            nxt: dict[WeylElement, RationalFunction] = {}

            def add(x, c):
                cur = nxt.get(x)
                nxt[x] = cur + c if cur is not None else c

            for x, c in out.items():
                xs = x * rs
                if xs.length() > x.length():
                    add(xs, c)
                else:
                    si = self.rgs.sigma[s]
                    add(x, c * self.as_rf(si - si.inverse()))
                    add(xs, c)
            out = nxt
        return out

    # -- commutation diagnostics --------------------------------------------------
    def commutator_defect(self, theta: RationalFunction, w: WeylElement) -> HeckeElement:
        """theta * H_w - H_w * theta^{w^{-1}}; its support is strictly below w."""
        theta = self.as_rf(theta)
        lhs = self.mul(self.from_function(theta), self.h(w))
        rhs = self.mul(self.h(w), self.from_function(theta.weyl_act(w.inverse())))
        defect = lhs - rhs
        for v in defect.support():
            assert v != w and self.rgs.bruhat_leq(v, w), (
                f"commutator defect leaked outside [1,{w}): found {v}"
            )
        return defect

    def intertwine_check(self, theta, w: WeylElement) -> bool:
        """Whether theta * F_w = F_w * theta^{w^{-1}} holds symbolically."""
        theta = self.as_rf(theta)
        fw = self.f_element(w)
        lhs = self.mul(self.from_function(theta), fw)
        rhs = self.mul(fw, self.from_function(theta.weyl_act(w.inverse())))
        return (lhs - rhs).is_zero()

    # -- intertwiner elements -----------------------------------------------------
    def b_s(self, s: int) -> HeckeElement:
        """B_s = T_s - sigma_s^2 = sigma_s H_s - sigma_s^2."""
        si = self.rgs.sigma[s]
        return HeckeElement(
            self,
            "H",
            {
                self.rgs.simple_reflection(s): self.as_rf(si),
                self.rgs.identity: self.as_rf(-(si ** 2)),
            },
        )

    def f_s(self, s: int) -> HeckeElement:
        return self.b_s(s) + self.from_function(
            self.zeta(self.rgs.simple_coroot(s)).fraction
        )

    def f_element(self, w: WeylElement) -> HeckeElement:
        """F_w = F_{s_1} * ... * F_{s_r} along the cached reduced word s_1...s_r.

        Letters compose left to right, which is the order that makes
        F_w - T_w lower-triangular and theta * F_w = F_w * theta^{w^{-1}}
        hold.  Independence of the word is a tested theorem, not an
        assumption here.
        """
        if w not in self._f_cache:
            if w.is_identity():
                fw = self.one()
            else:
                word = w.reduced_word()
                s = word[-1]
                rest = self.rgs.word_element(word[:-1])
                fw = self.mul(self.f_element(rest), self.f_s(s))
            if not w.is_identity():
                top = fw.coefficient(w) / self.as_rf(self.sigma_word(w))
                assert top == self.rf_one, f"leading T-coefficient of F_{w} is {top}"
                for v in fw.support():
                    assert self.rgs.bruhat_leq(v, w), f"support of F_{w} leaked to {v}"
            self._f_cache[w] = fw
        return self._f_cache[w]

    def f_square(self, s: int) -> RationalFunction:
        """F_s^2, asserted scalar and equal to zeta_s * (zeta_s)^s."""
        fs = self.f_s(s)
        sq = self.mul(fs, fs)
        assert sq.support() <= {self.rgs.identity}, "F_s^2 must be scalar"
        val = sq.coefficient(self.rgs.identity)
        zs = self.zeta(self.rgs.simple_coroot(s)).fraction
        assert val == zs * zs.weyl_act(self.rgs.simple_reflection(s))
        return val

    def k_element(self, r: WeylElement) -> HeckeElement:
        """K_r = F_r - zeta_{alpha_r^vee} for a reflection r."""
        coroot = self.rgs.coroot_of_reflection(r)
        return self.f_element(r) - self.from_function(self.zeta(coroot).fraction)

    def zeta_w(self, w: WeylElement) -> RationalFunction:
        """Product of zeta over the inversion set of w."""
        out = self.rf_one
        for coroot in sorted(self.rgs.inversion_set(w), key=lambda c: (c.height(), c.coords)):
            out = out * self.zeta(coroot).fraction
        if self.tau0_available():
            constant = self.basis_convert(self.f_element(w), "B").coefficient(
                self.rgs.identity
            )
            assert constant == out, f"inversion-set product disagrees with pi^B_1(F_{w})"
        else:
            log.info("zeta_w cross-check against the B basis skipped: %s", self._tau0_failure)
        return out

    # -- the constant-coefficient B basis ---------------------------------------
    def tau0(self) -> Character:
        """A character with tau0(alpha_s^vee) = sigma_s sigma'_s, on the Y basis.

        This is the point where every zeta_s vanishes, so that F_s(tau0) is
        exactly B_s = T_s - sigma_s^2.
        """
        if self._tau0 is None:
            if self._tau0_failure is not None:
                raise FieldTooSmallError(self._tau0_failure)
            try:
                self._tau0 = solve_character_on_coroots(
                    self.rgs,
                    [self.rgs.sigma[s] * self.rgs.sigma_prime[s] for s in range(self.rgs.ell)],
                )
            except FieldTooSmallError as err:
                self._tau0_failure = str(err)
                raise
        return self._tau0

    def tau0_available(self) -> bool:
        try:
            self.tau0()
            return True
        except FieldTooSmallError:
            return False

    def b_element(self, w: WeylElement) -> HeckeElement:
        """B_w = F_w evaluated at tau0; constant coefficients, B_w - T_w lower."""
        if w not in self._b_cache:
            tau0 = self.tau0()
            bw = self.ev_at(self.f_element(w), tau0)
            for v in bw.support():
                assert self.rgs.bruhat_leq(v, w)
            diff = bw - self.t_in_h(w)
            for v in diff.support():
                assert v != w and self.rgs.bruhat_leq(v, w), "B_w - T_w not lower"
            self._b_cache[w] = bw
        return self._b_cache[w]

    def t_in_h(self, w: WeylElement) -> HeckeElement:
        return self.h(w, self.sigma_word(w))

    # -- evaluation ---------------------------------------------------------------
    def ev_at(self, a: HeckeElement, tau: Character) -> HeckeElement:
        """Coefficientwise evaluation at tau; error names the singular vector."""
        a = a.to_basis("H")
        out = {}
        for w, c in a.coeffs.items():
            try:
                out[w] = self.as_rf(c.evaluate(tau))
            except SingularAt:
                raise SingularAt(
                    f"coefficient of H[{word_str(w.reduced_word())}] is singular "
                    "at the character"
                ) from None
        return HeckeElement(self, "H", out)

    def is_iwahori_hecke(self, a: HeckeElement, cap: int | None = None) -> bool:
        """Whether every coefficient is a Laurent polynomial supported on Y+.

        Y+-membership of each exponent is decided with to_dominant; an
        undecided exponent counts as failure (the cap is configurable).
        """
        a = a.to_basis("H")
        for c in a.coeffs.values():
            if not c.is_laurent():
                return False
            for e in c.to_laurent().support():
                res = self.rgs.to_dominant(e, cap=cap)
                if res is None:
                    return False
        return True

    # -- coefficient recursions ------------------------------------------------------
    def p_expansion(self, lam, w: WeylElement) -> dict[WeylElement, LaurentPoly]:
        """Coefficients P_{v,w,lam} in Z^lam * T_w = sum_v T_v * P_{v,w,lam}."""
        lam = tuple(int(x) for x in lam)
        prod = self.mul(self.monomial(lam), self.h(w, self.sigma_word(w)))
        out = {}
        for v, c in prod.coeffs.items():
            p = c / self.as_rf(self.sigma_word(v))
            assert p.is_laurent(), f"P_({v},{w}) is not a Laurent polynomial"
            assert self.rgs.bruhat_leq(v, w)
            out[v] = p.to_laurent()
        top = out.get(w)
        assert top is not None and top == LaurentPoly.monomial(
            self.field, w.inverse().act_y(lam)
        ), "top coefficient must be Z^{w^{-1}.lam}"
        return out

    def q_recursion(self, lam, w: WeylElement) -> dict[WeylElement, RationalFunction]:
        """The decreasing-Bruhat recursion for the T-coefficients of F_w.

        Requires lam dominant regular: alpha_i(lam) > 0 for all i.
        """
        lam = tuple(int(x) for x in lam)
        if any(self.rgs.root_value_on_y(i, lam) <= 0 for i in range(self.rgs.ell)):
            raise ValueError("lambda must pair strictly positively with every simple root")
        interval = self.rgs.bruhat_interval(w)
        p_tables = {u: self.p_expansion(lam, u) for u in interval}
        q: dict[WeylElement, RationalFunction] = {w: self.rf_one}
        for v in sorted(interval, key=lambda u: -u.length()):
            if v == w:
                continue
            acc = self.rf_zero
            for u in interval:
                if u == v or not self.rgs.bruhat_leq(v, u):
                    continue
                pvu = p_tables[u].get(v)
                if pvu is not None:
                    acc = acc + q[u] * pvu
            den = RationalFunction.from_poly(
                LaurentPoly.monomial(self.field, w.inverse().act_y(lam))
                - LaurentPoly.monomial(self.field, v.inverse().act_y(lam))
            )
            q[v] = acc / den
        fw = self.f_element(w)
        for v in interval:
            expected = fw.coefficient(v) / self.as_rf(self.sigma_word(v))
            assert q[v] == expected, (
                f"recursion and intertwiner disagree at {v}: {q[v]} vs {expected}"
            )
        return q

    # -- basis conversion ----------------------------------------------------------
    def basis_convert(self, a: HeckeElement, target: str) -> HeckeElement:
        if target not in BASES:
            raise ValueError(f"unknown basis {target!r}")
        if a.basis == target:
            return a
        in_h = self._to_h(a)
        if target == "H":
            return in_h
        if target == "T":
            return HeckeElement(
                self,
                "T",
                {w: c / self.as_rf(self.sigma_word(w)) for w, c in in_h.coeffs.items()},
            )
        family = self.b_element if target == "B" else self.f_element
        remaining = dict(in_h.coeffs)
        out: dict[WeylElement, RationalFunction] = {}
        while remaining:
            w = max(remaining, key=lambda u: (u.length(), u.reduced_word()))
            basis_vec = family(w)
            coeff = remaining[w] / basis_vec.coefficient(w)
            out[w] = coeff
            for v, c in basis_vec.coeffs.items():
                cur = remaining.get(v, self.rf_zero) - c * coeff
                if cur.is_zero():
                    remaining.pop(v, None)
                else:
                    remaining[v] = cur
        return HeckeElement(self, target, out)

    def _to_h(self, a: HeckeElement) -> HeckeElement:
        if a.basis == "H":
            return a
        if a.basis == "T":
            return HeckeElement(
                self,
                "H",
                {w: c * self.as_rf(self.sigma_word(w)) for w, c in a.coeffs.items()},
            )
        family = self.b_element if a.basis == "B" else self.f_element
        out = self.zero()
        for w, c in a.coeffs.items():
            out = out + family(w).scale(c)
        return out


def solve_character_on_coroots(rgs: RootGeneratingSystem, values) -> Character:
    """A character tau with tau(alpha_i^vee) = values[i], if the field permits.

    Multiplicative linear algebra through the Smith normal form of the coroot
    coordinate matrix; raises FieldTooSmallError when a required root of a
    parameter product is missing (the message suggests enlarging the field).
    """
    field = rgs.field
    values = [field(v) for v in values]
    u, d, v = smith_normal_form(rgs.coroots)
    ell, dim = rgs.ell, rgs.rank_y
    y = []
    for k in range(dim):
        if k < ell and d[k][k] != 0:
            rho = field.one
            for i in range(ell):
                rho = rho * values[i] ** u[k][i]
            root = nth_root(rho, d[k][k])
            if root is None:
                raise FieldTooSmallError(
                    f"no {d[k][k]}-th root of {rho} in Q(zeta_{field.n}); "
                    "enlarge the cyclotomic field (e.g. include the needed "
                    "square roots) to use this construction"
                )
            y.append(root)
        else:
            y.append(field.one)
    tvals = []
    for j in range(dim):
        t = field.one
        for k in range(dim):
            t = t * y[k] ** v[j][k]
        tvals.append(t)
    tau = Character(field, tvals)
    for i in range(ell):
        got = tau.value_of(rgs.coroots[i])
        if got != values[i]:
            raise FieldTooSmallError(
                "character system is inconsistent: "
                f"tau(alpha_{i + 1}^vee) = {got}, wanted {values[i]}"
            )
    return tau
