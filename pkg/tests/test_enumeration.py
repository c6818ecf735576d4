import itertools

import pytest

from k3lat import enumeration as en
from k3lat import linalg
from k3lat.gram_data import A2, E8, U, S_LATTICE_2_5_3_10, S_LATTICE_2_9_3_6
from k3lat.lattice import Lattice


def e8_coordinate_oracle(norm_times_4):
    """Independent count of E8 vectors by scanning the D8+glue model.

    E8 at twice its coordinates is {x in Z^8 : all x_i same parity,
    sum x_i = 0 mod 4} with norm (x.x)/4. The even class is scanned as
    x = 2y with sum(y) even, the odd class directly over odd entries.
    """
    assert norm_times_4 <= 16
    count = 0
    box = int(norm_times_4 ** 0.5 / 2) + 1
    for y in itertools.product(range(-box, box + 1), repeat=8):
        if any(y) and sum(y) % 2 == 0 and 4 * sum(a * a for a in y) == norm_times_4:
            count += 1
    for x in itertools.product((-3, -1, 1, 3), repeat=8):
        if sum(x) % 4 == 0 and sum(a * a for a in x) == norm_times_4:
            count += 1
    return count


def test_a1_minus_two():
    L = Lattice([[-2]])
    vecs = en.short_vectors(L, 2, up_to_sign=True)
    assert len(vecs) == 1 and vecs[0].norm() == -2


def test_e8_roots_against_brute_force():
    L = Lattice(E8, name="E8")
    assert e8_coordinate_oracle(8) == 240
    assert len(en.short_vectors(L, 2)) == 240


def test_e8_norm4_against_brute_force():
    L = Lattice(E8, name="E8")
    oracle = e8_coordinate_oracle(16)
    assert oracle == 2160
    assert en.norm_census(L, 4, up_to_sign=False).count(4) == oracle


def test_s_lattice_censuses():
    L = Lattice(S_LATTICE_2_5_3_10)
    c = en.norm_census(L, 6)
    assert c.count(-4) == 5 and c.count(-6) == 10
    L = Lattice(S_LATTICE_2_9_3_6)
    c = en.norm_census(L, 6)
    assert c.count(-4) == 9 and c.count(-6) == 6


def test_census_rejects_indefinite():
    with pytest.raises(ValueError):
        en.norm_census(Lattice(U), 2)


def test_min_norm():
    assert en.min_norm(Lattice(E8).rescale(-2)) == -4
    assert en.min_norm(Lattice(E8)) == 2
    from k3lat.gram_data import POS_2_5_3_10
    assert en.min_norm(Lattice(POS_2_5_3_10)) == 4


def test_has_roots():
    assert en.has_roots(Lattice(E8).rescale(-1))
    assert not en.has_roots(Lattice(E8).rescale(-2))


def test_primitive_represents():
    A = Lattice(A2)
    T = A + A.rescale(3)
    v = en.primitive_represents(T, 2)
    assert v is not None and v.norm() == 2 and v.is_primitive()
    assert en.primitive_represents(Lattice([[-2]]), 2) is None


def test_primitive_vs_imprimitive():
    L = Lattice([[1]])
    assert en.primitive_represents(L, 4) is None  # only 2*e has norm 4
    assert en.primitive_represents(L, 1) is not None


def test_census_invariant_under_basis_permutation():
    L = Lattice(E8)
    c1 = en.norm_census(L, 4).counts
    perm = [3, 1, 4, 0, 5, 2, 7, 6]
    P = [[1 if j == perm[i] else 0 for j in range(8)] for i in range(8)]
    G2 = linalg.mat_mul(linalg.mat_mul(P, E8), linalg.transpose(P))
    c2 = en.norm_census(Lattice(G2), 4).counts
    assert c1 == c2


def test_census_even_norms_only_for_even_lattice():
    c = en.norm_census(Lattice(E8), 6)
    assert all(q % 2 == 0 for q in c.counts)


def test_census_scaling():
    cA = en.norm_census(Lattice(A2), 6).counts
    cA2 = en.norm_census(Lattice(A2).rescale(2), 12).counts
    assert cA2 == {2 * q: c for q, c in cA.items()}


def test_census_of_direct_sum_is_convolution():
    A = Lattice(A2)
    bound = 8
    cA = en.norm_census(A, bound, up_to_sign=False).counts
    cAA = en.norm_census(A + A, bound, up_to_sign=False).counts
    for q in range(2, bound + 1):
        expect = 2 * cA.get(q, 0)
        for q1, c1 in cA.items():
            if q - q1 in cA:
                expect += c1 * cA[q - q1]
        assert cAA.get(q, 0) == expect


def test_up_to_sign_halves_and_canonicalizes():
    L = Lattice(E8)
    full = en.short_vectors(L, 2)
    half = en.short_vectors(L, 2, up_to_sign=True)
    assert len(full) == 2 * len(half)
    for v in half:
        first = next(a for a in v.coords if a)
        assert first > 0


def test_cap_raises():
    with pytest.raises(en.EnumerationCap):
        en.short_vectors(Lattice(E8), 4, cap=10)


def test_ordering_deterministic():
    L = Lattice(A2)
    v1 = [v.coords for v in en.short_vectors(L, 6)]
    v2 = [v.coords for v in en.short_vectors(L, 6)]
    assert v1 == v2 and v1 == sorted(v1, key=lambda c: (abs(linalg.dot(c, c, A2)), c))
