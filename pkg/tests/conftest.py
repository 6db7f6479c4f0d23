"""Shared fixtures: the rank-2 hyperbolic system F1, the coroot-lattice system
A2 used for the Z-fixer character, a finite A2 Cartan system, and a rank-3
system whose Tits cone has a non-spherical face.
"""

import pytest

from kmhecke.coxeter import RootGeneratingSystem
from kmhecke.hecke import HeckeAlgebra
from kmhecke.laurent import Character
from kmhecke.scalars import CyclotomicField


def make_f1(n=4, sigma=2):
    field = CyclotomicField(n)
    return RootGeneratingSystem(
        field,
        matrix=[[2, -2], [-4, 2]],
        pairing=[[1, 0], [0, 1]],
        coroots=[[2, -2], [-4, 2]],
        sigma=[sigma, sigma],
        sigma_prime=[sigma, sigma],
    )


def make_a2z(n=4, sigma=2):
    """A2 = [[2,-2],[-6,2]] with Y the coroot lattice itself."""
    field = CyclotomicField(n)
    return RootGeneratingSystem(
        field,
        matrix=[[2, -2], [-6, 2]],
        pairing=[[2, -6], [-2, 2]],
        coroots=[[1, 0], [0, 1]],
        sigma=[sigma, sigma],
        sigma_prime=[sigma, sigma],
    )


def make_a2fin(n=4, sigma=2):
    field = CyclotomicField(n)
    return RootGeneratingSystem(
        field,
        matrix=[[2, -1], [-1, 2]],
        pairing=[[2, -1], [-1, 2]],
        coroots=[[1, 0], [0, 1]],
        sigma=[sigma, sigma],
        sigma_prime=[sigma, sigma],
    )


def make_rank3(n=1, sigma=2):
    field = CyclotomicField(n)
    a = [[2, -2, -2], [-2, 2, -2], [-2, -2, 2]]
    return RootGeneratingSystem(
        field,
        matrix=a,
        pairing=a,  # Y = coroot lattice and A is symmetric
        coroots=[[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        sigma=[sigma] * 3,
        sigma_prime=[sigma] * 3,
    )


@pytest.fixture(scope="session")
def f1():
    return make_f1()


@pytest.fixture(scope="session")
def alg(f1):
    return HeckeAlgebra(f1)


@pytest.fixture(scope="session")
def a2z():
    return make_a2z()


@pytest.fixture(scope="session")
def alg_a2z(a2z):
    return HeckeAlgebra(a2z)


@pytest.fixture(scope="session")
def a2fin():
    return make_a2fin()


@pytest.fixture(scope="session")
def alg_a2fin(a2fin):
    return HeckeAlgebra(a2fin)


@pytest.fixture(scope="session")
def rank3():
    return make_rank3()


def tau_trivial(rgs):
    return Character(rgs.field, [1] * rgs.rank_y)


def tau_regular_rational(rgs):
    return Character(rgs.field, [2, 3])


def tau_b3(rgs):
    """tau(y1) = tau(y2) = zeta_4 on F1; the dihedral-fixer fixture."""
    z = rgs.field.zeta_power(rgs.field.n // 4)
    return Character(rgs.field, [z, z])


def tau_z(rgs):
    """tau(a1v) = -zeta_4, tau(a2v) = zeta_4 on the coroot-lattice A2 system."""
    z = rgs.field.zeta_power(rgs.field.n // 4)
    return Character(rgs.field, [-z, z])
