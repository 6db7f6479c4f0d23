"""Weyl group machinery, checked on the rank-2 hyperbolic fixture F1.

F1: A = [[2,-2],[-4,2]], Y = Z y1 + Z y2 with alpha_i(y_j) = delta_ij,
alpha_1^vee = 2y1 - 2y2, alpha_2^vee = -4y1 + 2y2, sigma = sigma' = 2.
Its Weyl group is infinite dihedral.
"""

import itertools
import random

import pytest

from kmhecke.coxeter import Coroot, RootDatumError, RootGeneratingSystem
from kmhecke.scalars import CyclotomicField


@pytest.fixture(scope="module")
def f1():
    field = CyclotomicField(4)
    return RootGeneratingSystem(
        field,
        matrix=[[2, -2], [-4, 2]],
        pairing=[[1, 0], [0, 1]],
        coroots=[[2, -2], [-4, 2]],
        sigma=[2, 2],
        sigma_prime=[2, 2],
    )


@pytest.fixture(scope="module")
def a2fin():
    """Finite Weyl group fixture (Cartan matrix of type A2, braid relation)."""
    field = CyclotomicField(4)
    return RootGeneratingSystem(
        field,
        matrix=[[2, -1], [-1, 2]],
        pairing=[[2, -1], [-1, 2]],
        coroots=[[1, 0], [0, 1]],
        sigma=[2, 2],
        sigma_prime=[2, 2],
    )


def alpha1v(rgs):
    return rgs.simple_coroot(0)


def alpha2v(rgs):
    return rgs.simple_coroot(1)


# -- validation ------------------------------------------------------------

def test_validation_rejects_bad_diagonal():
    field = CyclotomicField(1)
    with pytest.raises(RootDatumError):
        RootGeneratingSystem(field, [[1]], [[1]], [[2]], [2], [2])


def test_validation_rejects_dependent_coroots():
    field = CyclotomicField(1)
    with pytest.raises(RootDatumError, match="free family"):
        RootGeneratingSystem(
            field,
            matrix=[[2, -2], [-2, 2]],
            pairing=[[1, -1], [-1, 1]],
            coroots=[[1, -1], [-1, 1]],
            sigma=[2, 2],
            sigma_prime=[2, 2],
        )


def test_validation_enforces_sigma_constraint():
    field = CyclotomicField(1)
    # alpha_1(Y) = Z forces sigma = sigma'
    with pytest.raises(RootDatumError, match="sigma"):
        RootGeneratingSystem(
            field,
            matrix=[[2, -2], [-4, 2]],
            pairing=[[1, 0], [0, 1]],
            coroots=[[2, -2], [-4, 2]],
            sigma=[2, 2],
            sigma_prime=[3, 2],
        )


def test_validation_standing_assumption():
    field = CyclotomicField(1)
    # sigma' = -sigma is excluded even where alpha_s(Y) = 2Z
    with pytest.raises(RootDatumError, match="standing assumption"):
        RootGeneratingSystem(
            field,
            matrix=[[2, -2], [-6, 2]],
            pairing=[[2, -6], [-2, 2]],
            coroots=[[1, 0], [0, 1]],
            sigma=[2, 2],
            sigma_prime=[-2, 2],
        )


# -- simple reflections ------------------------------------------------------

def test_simple_reflection_on_own_coroot(f1):
    s1 = f1.simple_reflection(0)
    assert s1.act_coroot(alpha1v(f1)) == -alpha1v(f1)
    assert (s1 * s1).is_identity()


def test_simple_reflection_cross_terms(f1):
    s1, s2 = f1.simple_reflection(0), f1.simple_reflection(1)
    # s1.a2v = a2v + 4 a1v since alpha_1(alpha_2^vee) = -4
    assert s1.act_coroot(alpha2v(f1)) == Coroot((4, 1))
    # s2.a1v = a1v + 2 a2v since alpha_2(alpha_1^vee) = -2
    assert s2.act_coroot(alpha1v(f1)) == Coroot((1, 2))


def test_actions_agree_on_the_coroot_lattice(f1):
    # the Y-matrix restricted to coroot coordinates matches the coroot matrix
    rng = random.Random(5)
    for _ in range(20):
        w = f1.word_element([rng.randint(0, 1) for _ in range(rng.randint(0, 6))])
        c = Coroot((1, 2)) if rng.random() < 0.5 else alpha1v(f1)
        via_c = f1.coroot_y_coords(w.act_coroot(c))
        via_y = w.act_y(f1.coroot_y_coords(c))
        assert via_c == via_y


# -- length / reduced words ---------------------------------------------------

def test_length_and_word_examples(f1):
    assert f1.identity.length() == 0
    assert f1.identity.reduced_word() == ()
    w = f1.word_element([0, 1])
    assert w.length() == 2 and w.reduced_word() == (0, 1)
    w = f1.word_element([0, 1, 0])
    assert w.length() == 3 and w.reduced_word() == (0, 1, 0)


def test_word_is_lex_smallest_in_braid_group(a2fin):
    # s2 s1 s2 = s1 s2 s1 in type A2; canonical word must be the lex-smaller one
    w = a2fin.word_element([1, 0, 1])
    assert w == a2fin.word_element([0, 1, 0])
    assert w.reduced_word() == (0, 1, 0)


def test_length_parity_steps(f1):
    for w in f1.ball(4):
        for s in range(2):
            ws = w * f1.simple_reflection(s)
            assert abs(ws.length() - w.length()) == 1
            grows = ws.length() == w.length() + 1
            assert grows == w.act_coroot(f1.simple_coroot(s)).positive


# -- inversion sets ------------------------------------------------------------

def brute_inversion_set(rgs, w, L=8):
    """Direct definition: positive coroots (from a big enumeration) sent negative."""
    out = set()
    for c in rgs.positive_coroots(L):
        try:
            img = w.act_coroot(c)
        except ValueError:
            raise AssertionError("coroot image had mixed signs")
        if not img.positive:
            out.add(c)
    return out


def test_inversion_set_examples(f1):
    s2 = f1.simple_reflection(1)
    assert f1.inversion_set(s2) == {alpha2v(f1)}
    w = f1.word_element([0, 1])
    assert f1.inversion_set(w) == {alpha2v(f1), Coroot((1, 2))}
    assert len(f1.inversion_set(f1.word_element([0, 1, 0]))) == 3


def test_inversion_set_against_direct_definition(f1):
    for w in f1.ball(4):
        assert f1.inversion_set(w) == brute_inversion_set(f1, w)


def test_inversion_set_recursions(f1):
    # N(vs) = s.N(v) u {alpha_s^vee} and N(sv) = N(v) u {v^-1.alpha_s^vee}
    for v in f1.ball(3):
        for s in range(2):
            rs = f1.simple_reflection(s)
            if (v * rs).length() > v.length():
                lhs = f1.inversion_set(v * rs)
                rhs = {rs.act_coroot(c) for c in f1.inversion_set(v)} | {f1.simple_coroot(s)}
                assert lhs == rhs
            if (rs * v).length() > v.length():
                lhs = f1.inversion_set(rs * v)
                rhs = f1.inversion_set(v) | {v.inverse().act_coroot(f1.simple_coroot(s))}
                assert lhs == rhs


# -- Bruhat order ---------------------------------------------------------------

def subword_oracle(rgs, v, w):
    """v <= w iff some subword of one reduced word of w is a reduced word of v."""
    word = w.reduced_word()
    k = v.length()
    for positions in itertools.combinations(range(len(word)), k):
        sub = [word[p] for p in positions]
        if rgs.word_element(sub) == v:
            return True
    return v == w


def test_bruhat_examples(f1):
    s1, s2 = f1.simple_reflection(0), f1.simple_reflection(1)
    for w in f1.ball(3):
        assert f1.bruhat_leq(f1.identity, w)
    assert f1.bruhat_leq(s1, f1.word_element([1, 0]))
    assert not f1.bruhat_leq(s1, s2)
    assert not f1.bruhat_leq(s2, s1)


def test_bruhat_matches_subword_oracle(f1, a2fin):
    for rgs in (f1, a2fin):
        ball = rgs.ball(4)
        for v in ball:
            for w in ball:
                assert rgs.bruhat_leq(v, w) == subword_oracle(rgs, v, w)


def test_bruhat_is_a_partial_order(f1):
    ball = f1.ball(4)
    rng = random.Random(11)
    for w in ball:
        assert f1.bruhat_leq(w, w)
    for _ in range(60):
        u, v, w = (rng.choice(ball) for _ in range(3))
        if f1.bruhat_leq(u, v) and f1.bruhat_leq(v, u):
            assert u == v
        if f1.bruhat_leq(u, v) and f1.bruhat_leq(v, w):
            assert f1.bruhat_leq(u, w)


# -- balls -------------------------------------------------------------------

def test_ball_counts_infinite_dihedral(f1):
    assert [w.reduced_word() for w in f1.ball(0)] == [()]
    assert len(f1.ball(2)) == 5
    assert [w.reduced_word() for w in f1.ball(2)] == [(), (0,), (1,), (0, 1), (1, 0)]
    assert len(f1.ball(5)) == 11
    assert f1.infinite_dihedral()
    assert not f1.coroots_saturated(5)


def test_ball_saturates_for_finite_group(a2fin):
    assert len(a2fin.ball(3)) == 6
    assert len(a2fin.ball(4)) == 6
    assert a2fin.coroots_saturated(4)
    assert not a2fin.infinite_dihedral()


# -- reflections <-> coroots ---------------------------------------------------

def test_reflection_of_simple_coroot(f1):
    assert f1.reflection_of_coroot(alpha1v(f1)) == f1.simple_reflection(0)


def test_reflection_of_translated_coroot(f1):
    # s2.a1v = a1v + 2 a2v corresponds to s2 s1 s2
    assert f1.reflection_of_coroot(Coroot((1, 2))) == f1.word_element([1, 0, 1])


def test_reflection_coroot_round_trip(f1):
    for c in f1.positive_coroots(2):  # reflections of length <= 5
        r = f1.reflection_of_coroot(c)
        assert r.is_reflection()
        assert f1.coroot_of_reflection(r) == c


def test_coroot_of_non_reflection_errors(f1):
    with pytest.raises(ValueError):
        f1.coroot_of_reflection(f1.word_element([0, 1]))
    with pytest.raises(ValueError):
        f1.coroot_of_reflection(f1.identity)


# -- Tits cone -----------------------------------------------------------------

def test_to_dominant_examples(f1):
    w, J = f1.to_dominant((1, 1))
    assert w.is_identity() and J == frozenset()
    w, J = f1.to_dominant((0, 0))
    assert w.is_identity() and J == frozenset({0, 1})
    # one descent step from s1.y with y dominant regular
    y = (2, 3)
    x = f1.simple_reflection(0).act_y(y)
    w, J = f1.to_dominant(x)
    assert w == f1.simple_reflection(0) and J == frozenset()
    assert w.inverse().act_y(x) == y


def test_to_dominant_undecided_outside_cone(f1):
    # -dominant-regular points lie outside the Tits cone of an infinite group
    assert f1.to_dominant((-1, -1), cap=60) is None
