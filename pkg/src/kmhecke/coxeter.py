"""Kac-Moody root generating systems and their Weyl groups, exactly.

A root generating system is a Kac-Moody matrix A together with a lattice Y of
rank d, the pairing values alpha_i(y_j) of the simple roots on a basis of Y,
the coordinates of the simple coroots in that basis, and the Hecke parameters
sigma_s, sigma'_s.

Weyl group elements act on two lattices at once: on the coroot lattice
(an ell x ell integer matrix in the simple-coroot basis, which identifies the
element - the reflection representation of a Kac-Moody Weyl group on the
coroot lattice is faithful, and we record that as an assumption) and on Y
(a d x d integer matrix, used to transport exponents of Laurent monomials).
Both matrices are products of the simple-reflection matrices

    r_i(v) = v - alpha_i(v) alpha_i^vee.

Lengths, reduced words, inversion sets and the Bruhat order all come from the
coroot action: ell(ws) = ell(w) + 1 exactly when w.alpha_s^vee is positive,
and N(w) = {positive real coroots sent negative by w} has size ell(w).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import intmat
from .scalars import CyclotomicField, FieldElement


class RootDatumError(ValueError):
    """The supplied root generating system violates a structural invariant."""


class Coroot:
    """A real coroot: integer coordinates in the simple-coroot basis plus a sign."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(int(c) for c in coords)
        if all(c == 0 for c in coords):
            raise ValueError("zero vector is not a coroot")
        if not (all(c >= 0 for c in coords) or all(c <= 0 for c in coords)):
            raise ValueError(f"mixed-sign vector {coords} is not a real coroot")
        self.coords = coords

    @property
    def positive(self) -> bool:
        return any(c > 0 for c in self.coords)

    def __neg__(self):
        return Coroot(tuple(-c for c in self.coords))

    def __eq__(self, other):
        return isinstance(other, Coroot) and other.coords == self.coords

    def __hash__(self):
        return hash(self.coords)

    def height(self) -> int:
        return sum(abs(c) for c in self.coords)

    def __repr__(self):
        return f"Coroot{self.coords}"


class WeylElement:
    """A Weyl group element, identified with its matrix on the coroot lattice."""

    __slots__ = ("rgs", "mc", "my", "_word", "_length")

    def __init__(self, rgs: "RootGeneratingSystem", mc, my, word=None):
        self.rgs = rgs
        self.mc = mc
        self.my = my
        self._word = word
        self._length = len(word) if word is not None else None

    # -- group structure ---------------------------------------------------
    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return self.rgs.intern(
            intmat.matmul(self.mc, other.mc),
            intmat.matmul(self.my, other.my),
        )

    def inverse(self) -> "WeylElement":
        # the reversed word is reduced but not necessarily lex-smallest, so the
        # inverse recomputes its canonical word lazily
        w = self.rgs.intern(
            intmat.invert_unimodular(self.mc),
            intmat.invert_unimodular(self.my),
        )
        if w._length is None:
            w._length = self._length
        return w

    def __eq__(self, other):
        return isinstance(other, WeylElement) and other.mc == self.mc

    def __hash__(self):
        return hash(self.mc)

    def is_identity(self) -> bool:
        return self.mc == self.rgs._id_c

    # -- actions -------------------------------------------------------------
    def act_coroot(self, coroot: Coroot) -> Coroot:
        return Coroot(intmat.matvec(self.mc, coroot.coords))

    def act_coroot_coords(self, coords):
        return intmat.matvec(self.mc, coords)

    def act_y(self, vec):
        """Image of a Y-vector (integer or Fraction coordinates)."""
        return tuple(
            sum(self.my[i][j] * vec[j] for j in range(len(vec)))
            for i in range(len(self.my))
        )

    # -- length and words ------------------------------------------------
    def right_descent_set(self) -> list[int]:
        """Indices s with ws < w, i.e. w.alpha_s^vee negative."""
        out = []
        for s in range(self.rgs.ell):
            col = [self.mc[i][s] for i in range(self.rgs.ell)]
            if any(c < 0 for c in col):
                out.append(s)
        return out

    def is_right_ascent(self, s: int) -> bool:
        col = [self.mc[i][s] for i in range(self.rgs.ell)]
        return all(c >= 0 for c in col)

    def is_left_descent(self, s: int) -> bool:
        winv_alpha = self.inverse_column(s)
        return any(c < 0 for c in winv_alpha)

    def inverse_column(self, s: int):
        """Coordinates of w^{-1}.alpha_s^vee without forming the inverse."""
        # w^{-1} = transpose trick is unavailable (matrix not orthogonal);
        # strip a reduced word instead.
        return intmat.matvec(self.inverse().mc, self.rgs._coroot_unit(s))

    def length(self) -> int:
        if self._length is None:
            self._length = len(self.reduced_word())
        return self._length

    def reduced_word(self) -> tuple[int, ...]:
        """The lexicographically smallest reduced word.

        Greedy: the first letter of the lex-smallest word is the smallest
        left descent, and the remainder is the lex-smallest word of s*w.
        """
        if self._word is None:
            letters = []
            w = self
            guard = 0
            while not w.is_identity():
                winv = w.inverse()
                for s in range(self.rgs.ell):
                    col = [winv.mc[i][s] for i in range(self.rgs.ell)]
                    if any(c < 0 for c in col):  # ell(s*w) < ell(w)
                        letters.append(s)
                        w = self.rgs.simple_reflection(s) * w
                        break
                else:
                    raise RootDatumError("element admits no descent; not a Weyl element")
                guard += 1
                if guard > 10_000:
                    raise RootDatumError("descent stripping failed to terminate")
            self._word = tuple(letters)
            self._length = len(letters)
        return self._word

    def is_reflection(self) -> bool:
        return (not self.is_identity()) and (self * self).is_identity() and self.length() % 2 == 1

    def __repr__(self):
        return f"W[{word_str(self.reduced_word())}]"


def word_str(word) -> str:
    if not word:
        return "e"
    return ".".join(f"s{i + 1}" for i in word)


class RootGeneratingSystem:
    """A Kac-Moody root generating system with Hecke parameters.

    Parameters
    ----------
    field:        the coefficient field (one context per session).
    matrix:       the Kac-Moody matrix A, with a_{i,j} = alpha_j(alpha_i^vee).
    pairing:      pairing[i][j] = alpha_i(y_j) for a chosen Z-basis (y_j) of Y.
    coroots:      coroots[i] = coordinates of alpha_i^vee in the (y_j) basis.
    sigma, sigma_prime:  nonzero field elements, one pair per simple reflection.
    """

    def __init__(self, field: CyclotomicField, matrix, pairing, coroots, sigma, sigma_prime):
        self.field = field
        self.matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        self.pairing = tuple(tuple(int(x) for x in row) for row in pairing)
        self.coroots = tuple(tuple(int(x) for x in row) for row in coroots)
        self.ell = len(self.matrix)
        self.rank_y = len(self.pairing[0]) if self.pairing else 0
        self.sigma = tuple(field(s) for s in sigma)
        self.sigma_prime = tuple(field(s) for s in sigma_prime)
        self._validate()
        self._simple = None
        self._id_c = intmat.identity(self.ell)
        self._id_y = intmat.identity(self.rank_y)
        self._elements: dict[tuple, WeylElement] = {}
        self.identity = self.intern(self._id_c, self._id_y, word=())
        self._balls: dict[int, list[WeylElement]] = {}
        self._bruhat_cache: dict[tuple, bool] = {}

    def intern(self, mc, my, word=None) -> WeylElement:
        """One canonical WeylElement per matrix, so words and lengths persist."""
        w = self._elements.get(mc)
        if w is None:
            w = WeylElement(self, mc, my, word=word)
            self._elements[mc] = w
        else:
            if w.my != my:
                raise RootDatumError(
                    "coroot matrix repeated with a different Y action; the "
                    "faithfulness assumption on the coroot representation failed"
                )
            if w._word is None and word is not None:
                w._word = word
                w._length = len(word)
        return w

    # -- validation ------------------------------------------------------
    def _validate(self):
        a = self.matrix
        ell = self.ell
        if any(len(row) != ell for row in a):
            raise RootDatumError("Kac-Moody matrix must be square")
        for i in range(ell):
            if a[i][i] != 2:
                raise RootDatumError("Kac-Moody matrix needs 2 on the diagonal")
            for j in range(ell):
                if i != j:
                    if a[i][j] > 0:
                        raise RootDatumError("off-diagonal entries must be <= 0")
                    if (a[i][j] == 0) != (a[j][i] == 0):
                        raise RootDatumError("vanishing pattern must be symmetric")
        if len(self.pairing) != ell:
            raise RootDatumError("pairing needs one row per simple root")
        if len(self.coroots) != ell or any(len(c) != self.rank_y for c in self.coroots):
            raise RootDatumError("coroot coordinates must have the rank of Y")
        # alpha_j(alpha_i^vee) = a_{i,j}
        for i in range(ell):
            for j in range(ell):
                val = sum(self.pairing[j][k] * self.coroots[i][k] for k in range(self.rank_y))
                if val != a[i][j]:
                    raise RootDatumError(
                        f"pairing/coroot data gives alpha_{j + 1}(alpha_{i + 1}^vee) = {val}, "
                        f"but the matrix says {a[i][j]}"
                    )
        if intmat.rank(self.coroots) != ell:
            raise RootDatumError("simple coroots are not a free family")
        if len(self.sigma) != ell or len(self.sigma_prime) != ell:
            raise RootDatumError("need one parameter pair per simple reflection")
        for s in range(ell):
            if self.sigma[s].is_zero() or self.sigma_prime[s].is_zero():
                raise RootDatumError("Hecke parameters must be nonzero")
            if self.alpha_y_image_index(s) == 1 and self.sigma[s] != self.sigma_prime[s]:
                raise RootDatumError(
                    f"alpha_{s + 1}(Y) = Z forces sigma = sigma' for s{s + 1}"
                )
            sp, si = self.sigma_prime[s], self.sigma[s]
            if sp in (si.inverse(), -si, -si.inverse()):
                raise RootDatumError(
                    f"parameters for s{s + 1} violate the standing assumption "
                    "sigma' not in {1/sigma, -sigma, -1/sigma}"
                )
        for i in range(ell):
            for j in range(i + 1, ell):
                if a[i][j] == -1 and a[j][i] == -1:
                    vals = {self.sigma[i], self.sigma[j], self.sigma_prime[i], self.sigma_prime[j]}
                    if len(vals) != 1:
                        raise RootDatumError(
                            f"s{i + 1} and s{j + 1} are conjugate; all four parameters must agree"
                        )

    def alpha_y_image_index(self, s: int) -> int:
        """alpha_s(Y) = g*Z; returns g (0 if the row vanishes)."""
        g = 0
        for x in self.pairing[s]:
            g = abs(x) if g == 0 else _gcd(g, abs(x))
        return g

    # -- basic data --------------------------------------------------------
    def _coroot_unit(self, s: int):
        return tuple(1 if i == s else 0 for i in range(self.ell))

    def simple_coroot(self, s: int) -> Coroot:
        return Coroot(self._coroot_unit(s))

    def coroot_y_coords(self, coroot: Coroot):
        """Coordinates of the coroot inside Y (in the y basis)."""
        return tuple(
            sum(coroot.coords[i] * self.coroots[i][k] for i in range(self.ell))
            for k in range(self.rank_y)
        )

    def root_value_on_coroot(self, j: int, coroot: Coroot) -> int:
        """alpha_j(coroot), computed through the Kac-Moody matrix."""
        return sum(coroot.coords[i] * self.matrix[i][j] for i in range(self.ell))

    def root_value_on_y(self, j: int, vec):
        """alpha_j(vec) for vec in Y (or Y tensor Q)."""
        return sum(self.pairing[j][k] * vec[k] for k in range(self.rank_y))

    def simple_reflection(self, s: int) -> WeylElement:
        if self._simple is None:
            simple = []
            for i in range(self.ell):
                # on the coroot lattice: r_i(alpha_j^vee) = alpha_j^vee - a_{j,i} alpha_i^vee
                mc = [[1 if p == q else 0 for q in range(self.ell)] for p in range(self.ell)]
                for j in range(self.ell):
                    mc[i][j] -= self.matrix[j][i]
                # on Y: r_i(y_j) = y_j - alpha_i(y_j) alpha_i^vee
                my = [[1 if p == q else 0 for q in range(self.rank_y)] for p in range(self.rank_y)]
                for j in range(self.rank_y):
                    for k in range(self.rank_y):
                        my[k][j] -= self.pairing[i][j] * self.coroots[i][k]
                simple.append(
                    self.intern(tuple(map(tuple, mc)), tuple(map(tuple, my)), word=(i,))
                )
            self._simple = simple
        return self._simple[s]

    def word_element(self, word) -> WeylElement:
        w = self.identity
        for s in word:
            w = w * self.simple_reflection(s)
        return w

    def infinite_dihedral(self) -> bool:
        return (
            self.ell == 2 and self.matrix[0][1] * self.matrix[1][0] >= 4
        )

    # -- balls and the Bruhat order -----------------------------------------
    def ball(self, L: int) -> list[WeylElement]:
        """All elements of length <= L, sorted by (length, lex reduced word)."""
        if L < 0:
            raise ValueError("ball radius must be >= 0")
        if L in self._balls:
            return self._balls[L]
        elems: dict[tuple, tuple[int, ...]] = {self._id_c: ()}
        frontier: list[WeylElement] = [self.identity]
        for _ in range(L):
            candidates: dict[tuple, tuple[int, ...]] = {}
            for w in frontier:
                for s in range(self.ell):
                    if w.is_right_ascent(s):
                        ws = w * self.simple_reflection(s)
                        word = elems[w.mc] + (s,)
                        if ws.mc not in elems:
                            if ws.mc not in candidates or word < candidates[ws.mc]:
                                candidates[ws.mc] = word
            frontier = []
            for mc, word in candidates.items():
                elems[mc] = word
                frontier.append(self.intern(mc, self.word_element(word).my, word=word))
            if not frontier:
                break  # finite Weyl group: ball saturated
        out = [self.intern(mc, self.word_element(word).my, word=word)
               for mc, word in elems.items()]
        out.sort(key=lambda w: (w.length(), w.reduced_word()))
        self._balls[L] = out
        return out

    def ball_is_whole_group(self, L: int) -> bool:
        return len(self.ball(L)) == len(self.ball(L + 1))

    def bruhat_leq(self, v: WeylElement, w: WeylElement) -> bool:
        """v <= w in Bruhat order, by the descent recursion, memoized."""
        if v.mc == w.mc:
            return True
        key = (v.mc, w.mc)
        cached = self._bruhat_cache.get(key)
        if cached is not None:
            return cached
        if v.length() >= w.length():
            result = False
        else:
            s = w.right_descent_set()[0]
            rs = self.simple_reflection(s)
            ws = w * rs
            vs = v * rs
            if vs.length() < v.length():
                result = self.bruhat_leq(vs, ws)
            else:
                result = self.bruhat_leq(v, ws)
        self._bruhat_cache[key] = result
        return result

    def bruhat_interval(self, w: WeylElement) -> list[WeylElement]:
        """[1, w], sorted like the ball."""
        return [v for v in self.ball(w.length()) if self.bruhat_leq(v, w)]

    # -- inversion sets, reflections, coroots --------------------------------
    def inversion_set(self, w: WeylElement) -> set[Coroot]:
        """N(w): positive coroots sent negative; built from a reduced word."""
        word = w.reduced_word()
        out = set()
        suffix = self.identity
        for i in range(len(word) - 1, -1, -1):
            # suffix = s_{i+1} ... s_r acting on alpha_{s_i}^vee
            out.add(suffix.act_coroot(self.simple_coroot(word[i])))
            suffix = suffix * self.simple_reflection(word[i])
        assert len(out) == len(word), "inversion set size must equal the length"
        return out

    def positive_coroots(self, L: int) -> list[Coroot]:
        """Positive real coroots w.alpha_i^vee for w in the length-L ball, deduplicated.

        Covers every reflection of length <= 2L + 1.
        """
        seen: set[tuple] = set()
        out = []
        for w in self.ball(L):
            for s in range(self.ell):
                c = w.act_coroot(self.simple_coroot(s))
                if not c.positive:
                    c = -c
                if c.coords not in seen:
                    seen.add(c.coords)
                    out.append(c)
        out.sort(key=lambda c: (c.height(), c.coords))
        return out

    def coroots_saturated(self, L: int) -> bool:
        """True when the coroot enumeration provably exhausts Phi^vee_+."""
        return self.ball_is_whole_group(L)

    def coroot_decomposition(self, coroot: Coroot) -> tuple[WeylElement, int]:
        """(w, s) with coroot = w.alpha_s^vee, by height descent.  Positive input."""
        if not coroot.positive:
            raise ValueError("expected a positive coroot")
        cur = coroot
        letters = []
        guard = 0
        while True:
            simple = next(
                (s for s in range(self.ell) if cur.coords == self._coroot_unit(s)), None
            )
            if simple is not None:
                w = self.identity
                for s in reversed(letters):
                    w = self.simple_reflection(s) * w
                return w, simple
            progressed = False
            for s in range(self.ell):
                if self.root_value_on_coroot(s, cur) > 0:
                    try:
                        nxt = self.simple_reflection(s).act_coroot(cur)
                    except ValueError:
                        continue
                    if nxt.positive and nxt.height() < cur.height():
                        letters.append(s)
                        cur = nxt
                        progressed = True
                        break
            if not progressed:
                raise ValueError(f"{coroot} is not a positive real coroot")
            guard += 1
            if guard > 10_000:
                raise ValueError("coroot descent failed to terminate")

    def reflection_of_coroot(self, coroot: Coroot) -> WeylElement:
        """The reflection r with alpha_r^vee = coroot (positive real input)."""
        w, s = self.coroot_decomposition(coroot)
        return w * self.simple_reflection(s) * w.inverse()

    def coroot_of_reflection(self, r: WeylElement) -> Coroot:
        """The positive coroot of a reflection; errors on non-reflections."""
        if r.is_identity() or not (r * r).is_identity():
            raise ValueError("input is not a reflection (must be an involution != 1)")
        # (r - 1) has rank one on the coroot lattice; any nonzero column spans
        # the alpha_r^vee line.
        col = None
        for j in range(self.ell):
            c = [r.mc[i][j] - (1 if i == j else 0) for i in range(self.ell)]
            if any(c):
                col = c
                break
        if col is None:
            raise ValueError("input is not a reflection")
        if all(x <= 0 for x in col):
            col = [-x for x in col]
        if not all(x >= 0 for x in col):
            raise ValueError("input is not a reflection of this Weyl group")
        g = 0
        for x in col:
            g = _gcd(g, abs(x))
        # walk the line down to a simple coroot; the actual coroot on the line
        # is recovered at the end and verified.
        line = Coroot(tuple(x // g for x in col))
        w, s = self.coroot_decomposition(line)
        cand = w.act_coroot(self.simple_coroot(s))
        if self.reflection_of_coroot(cand) != r:
            raise ValueError("input is not a reflection of this Weyl group")
        return cand

    # -- Tits cone ----------------------------------------------------------
    def to_dominant(self, x, cap: int | None = None):
        """Walk x in Y tensor Q toward the closed dominant chamber.

        Returns (w, J) with w^{-1}.x dominant and J = {i : alpha_i(w^{-1}.x) = 0},
        or None when undecided within the iteration cap (x may be outside the
        Tits cone; membership is only semi-decidable).
        """
        x = tuple(Fraction(c) for c in x)
        if cap is None:
            cap = int(10 * (sum(abs(c) for c in x) + 1))
        cur = x
        letters: list[int] = []
        for _ in range(cap + 1):
            neg = next(
                (i for i in range(self.ell) if self.root_value_on_y(i, cur) < 0), None
            )
            if neg is None:
                w = self.identity
                for s in letters:
                    w = w * self.simple_reflection(s)
                zero = frozenset(
                    i for i in range(self.ell) if self.root_value_on_y(i, cur) == 0
                )
                return w, zero
            cur = self.simple_reflection(neg).act_y(cur)
            letters.append(neg)
        return None


@lru_cache(maxsize=None)
def _gcd_pair(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _gcd(a: int, b: int) -> int:
    return _gcd_pair(abs(a), abs(b))
