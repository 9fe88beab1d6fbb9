import random
from fractions import Fraction

import pytest

from perstab.lattice import CanonicalData, ChernVector, ContractionKind, make_model

THREEFOLD_KINDS = [ContractionKind.TI, ContractionKind.TII, ContractionKind.TIII,
                   ContractionKind.TIV, ContractionKind.TV]


@pytest.fixture
def surface():
    return make_model(ContractionKind.SURFACE, 1)


@pytest.fixture
def surface_w3():
    return make_model(ContractionKind.SURFACE, 3)


@pytest.fixture
def surface_canonical():
    # blow-up of a surface with K_Y.omega = -3, chi(O) = 1 (e.g. P^2 data)
    return make_model(ContractionKind.SURFACE, 1,
                      canonical=CanonicalData(Fraction(-3), Fraction(1)))


@pytest.fixture
def tv():
    return make_model(ContractionKind.TV, 1)


@pytest.fixture(params=THREEFOLD_KINDS, ids=lambda k: k.value)
def threefold(request):
    return make_model(request.param, 1)


def rand_fraction(rng: random.Random, lo: int = -9, hi: int = 9, den: int = 6) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def rand_surface_class(rng: random.Random) -> ChernVector:
    return ChernVector.surface(
        rand_fraction(rng), rand_fraction(rng), rand_fraction(rng), rand_fraction(rng)
    )


def rand_threefold_class(rng: random.Random, kind: ContractionKind) -> ChernVector:
    n_curves = {"TI": 1, "TII": 1, "TIII": 2, "TIV": 1, "TV": 1}[kind.value]
    ch2 = tuple(rand_fraction(rng) for _ in range(n_curves + 1))
    return ChernVector.threefold(
        kind, rand_fraction(rng), (rand_fraction(rng), rand_fraction(rng)), ch2,
        rand_fraction(rng),
    )
