import random
from fractions import Fraction
from pathlib import Path

import pytest

from superlie import (
    Alphabet,
    DerivationSpec,
    StructureAlgebra,
    SubalgebraSpec,
    ad_derivation,
    validate_derivation,
    validate_structure,
    validate_subalgebra,
)
from superlie.fields import RationalField

DATA = Path(__file__).parent / "data"

Q = RationalField()


@pytest.fixture
def data_dir():
    return DATA


def one_one_algebra():
    """f even, e odd, [e,e] = f, with A = L and d = ad_e."""
    alphabet = Alphabet(("f", "e"), (0, 1))
    L = StructureAlgebra.from_entries(alphabet, [((1, 1), {0: Fraction(1)})], Q)
    A = SubalgebraSpec((0, 1))
    return L, A, ad_derivation(L, A, 1)


def gl11_algebra():
    one = Fraction(1)
    alphabet = Alphabet(("a", "b", "x", "y"), (0, 0, 1, 1))
    L = StructureAlgebra.from_entries(alphabet, [
        ((0, 2), {2: one}), ((0, 3), {3: -one}),
        ((1, 2), {2: -one}), ((1, 3), {3: one}),
        ((2, 3), {0: one, 1: one}),
    ], Q)
    A = SubalgebraSpec((0, 1, 2, 3))
    return L, A, ad_derivation(L, A, 2)


def heisenberg_algebra():
    one = Fraction(1)
    alphabet = Alphabet(("z", "p", "q"), (0, 1, 1))
    L = StructureAlgebra.from_entries(alphabet, [
        ((1, 2), {0: one}), ((1, 1), {0: one}),
    ], Q)
    A = SubalgebraSpec((0, 1, 2))
    return L, A, ad_derivation(L, A, 1)


def random_two_step_algebra(rng: random.Random, dim_max: int = 4):
    """Random 2-step nilpotent superalgebra: brackets of the first block land
    in a central second block, which makes the Jacobi identity automatic."""
    dim = rng.randint(3, dim_max)
    n_center = rng.randint(1, dim - 2)
    n_head = dim - n_center
    parities = [rng.randint(0, 1) for _ in range(dim)]
    if 1 not in parities[:n_head]:
        parities[rng.randrange(n_head)] = 1  # keep an odd generator in the head
    names = tuple(f"g{i}" for i in range(dim))
    alphabet = Alphabet(names, tuple(parities))
    entries = []
    for i in range(n_head):
        for j in range(i + 1):
            if i == j and parities[i] == 0:
                continue
            row = {}
            for k in range(n_head, dim):
                if (parities[i] + parities[j]) % 2 != parities[k]:
                    continue
                if rng.random() < 0.6:
                    num = rng.randint(-3, 3)
                    if num:
                        row[k] = Fraction(num, rng.randint(1, 3))
            if row:
                entries.append(((i, j), row))
    L = StructureAlgebra.from_entries(alphabet, entries, Q)
    A = SubalgebraSpec(tuple(range(dim)))
    d = ad_derivation(L, A, rng.randrange(dim))
    return L, A, d


def random_fixture_suite(seed: int = 20260810, count: int = 20):
    """Valid (algebra, subalgebra, derivation) fixtures: the fixed catalog
    plus random 2-step nilpotent draws, each checked by the validators."""
    rng = random.Random(seed)
    fixtures = [one_one_algebra(), gl11_algebra(), heisenberg_algebra()]
    while len(fixtures) < count:
        fixtures.append(random_two_step_algebra(rng))
    for L, A, d in fixtures:
        assert validate_structure(L).ok
        assert validate_subalgebra(L, A).ok
        assert validate_derivation(L, A, d).ok
    return fixtures
