import json
import random
from fractions import Fraction

import pytest

from tannakit import Matrix, QQ, load_document
from tannakit.cli import load_fixture_text


FIXTURES = ["trivial", "z2_character", "z2_regular", "comatrix2",
            "z2_function", "z2_function_f2"]


def load_fixture(name):
    return load_document(json.loads(load_fixture_text(name)))


@pytest.fixture
def rng():
    return random.Random(20260810)


def rand_matrix(rng, field, rows, cols, lo=-3, hi=3, denom=False):
    def entry():
        n = rng.randint(lo, hi)
        if denom and field == QQ:
            return Fraction(n, rng.randint(1, 3))
        return field.from_int(n)
    return Matrix(field, [[entry() for _ in range(cols)] for _ in range(rows)],
                  cols=cols)


def rand_invertible(rng, field, n):
    from tannakit import solve_matrix
    while True:
        m = rand_matrix(rng, field, n, n)
        if solve_matrix(m, Matrix.identity(field, n)) is not None:
            return m


def random_expr(rng, word, depth):
    from tannakit import AdjacentSwap, Compose, Identity, Tensor
    if depth == 0 or len(word) < 2:
        if len(word) >= 2 and rng.random() < 0.7:
            return AdjacentSwap(word, rng.randrange(len(word) - 1))
        return Identity(word)
    kind = rng.random()
    if kind < 0.45:
        a = random_expr(rng, word, depth - 1)
        b = random_expr(rng, a.codomain, depth - 1)
        return Compose(a, b)
    if kind < 0.7 and len(word) >= 2:
        cut = rng.randint(1, len(word) - 1)
        return Tensor(random_expr(rng, word[:cut], depth - 1),
                      random_expr(rng, word[cut:], depth - 1))
    if len(word) >= 2:
        return AdjacentSwap(word, rng.randrange(len(word) - 1))
    return Identity(word)


def random_expr_pair(rng, max_len=6):
    atoms = ["a", "b"]
    while True:
        word = tuple(rng.choice(atoms) for _ in range(rng.randint(1, max_len)))
        e1 = random_expr(rng, word, 3)
        e2 = random_expr(rng, word, 3)
        if e1.codomain == e2.codomain:
            return e1, e2
