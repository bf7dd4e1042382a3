import random

import pytest
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from cmworkbench.lattice import hermite_rows, reduce_mod_hermite, smith_form


def random_matrix(rng, m, n, lo=-6, hi=6):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)]


@pytest.mark.parametrize("seed", range(25))
def test_smith_invariants_match_sympy(seed):
    rng = random.Random(seed)
    m, n = rng.randint(1, 6), rng.randint(1, 6)
    a = random_matrix(rng, m, n)
    ours = smith_form(a, n)
    theirs = smith_normal_form(Matrix(a), domain=ZZ)
    diag = [abs(theirs[k, k]) for k in range(min(m, n)) if theirs[k, k] != 0]
    assert list(ours.invariants) == diag


@pytest.mark.parametrize("seed", range(25))
def test_column_transform_is_unimodular_inverse_pair(seed):
    rng = random.Random(seed)
    m, n = rng.randint(1, 6), rng.randint(1, 6)
    sf = smith_form(random_matrix(rng, m, n), n)
    v = Matrix(sf.col_transform)
    w = Matrix(sf.col_inverse)
    assert v * w == Matrix.eye(n)
    assert abs(v.det()) == 1


@pytest.mark.parametrize("seed", range(25))
def test_membership_agrees_between_hermite_and_smith(seed):
    rng = random.Random(seed)
    m, n = rng.randint(1, 5), rng.randint(2, 5)
    a = random_matrix(rng, m, n)
    sf = smith_form(a, n)
    h = hermite_rows(a, n)
    for _ in range(30):
        if rng.random() < 0.5:
            z = [rng.randint(-3, 3) for _ in range(m)]
            vec = [sum(z[i] * a[i][j] for i in range(m)) for j in range(n)]
            assert sf.in_lattice(vec)
        else:
            vec = [rng.randint(-9, 9) for _ in range(n)]
        assert sf.in_lattice(vec) == (not any(reduce_mod_hermite(vec, h)))


def test_saturation_example():
    # lattice spanned by (2, 0) and (0, 3) saturates to Z^2 with index 6
    sf = smith_form([[2, 0], [0, 3]], 2)
    assert sf.index == 6
    assert sf.in_saturation([1, 1]) and not sf.in_lattice([1, 1])
    assert sf.torsion_order([1, 1]) == 6
    assert sf.torsion_order([1, 0]) == 2


def test_saturation_of_rank_deficient_lattice():
    sf = smith_form([[2, 4, 6]], 3)
    assert sf.rank == 1
    assert sf.in_saturation([1, 2, 3])
    assert not sf.in_saturation([1, 0, 0])
    assert sf.torsion_order([1, 2, 3]) == 2
    assert sf.torsion_order([1, 0, 0]) is None
    assert len(sf.quotient([1, 0, 0])) == 2


@pytest.mark.parametrize("seed", range(20))
def test_hermite_is_canonical(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 5)
    a = random_matrix(rng, rng.randint(1, 4), n)
    # a unimodular change of generators plus redundant rows gives the same HNF
    b = [row[:] for row in a]
    for _ in range(10):
        i, j = rng.randrange(len(b)), rng.randrange(len(b))
        if i != j:
            k = rng.randint(-3, 3)
            b[i] = [x + k * y for x, y in zip(b[i], b[j])]
    b.append([sum(r[c] for r in a) for c in range(n)])
    rng.shuffle(b)
    assert hermite_rows(a, n) == hermite_rows(b, n)


def test_reduce_is_canonical_representative():
    h = hermite_rows([[2, 1], [0, 3]], 2)
    reps = set()
    for x in range(-10, 10):
        for y in range(-10, 10):
            reps.add(tuple(reduce_mod_hermite([x, y], h)))
    assert len(reps) == 6  # |det| = 6
