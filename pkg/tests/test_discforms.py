from fractions import Fraction

import pytest

from k3lat import discforms as df
from k3lat import linalg
from k3lat.gram_data import A2, E8, U
from k3lat.lattice import Lattice


def L(gram, k=1, name=None):
    base = Lattice(gram, name=name)
    return base.rescale(k) if k != 1 else base


def test_unimodular_trivial_group():
    q = df.discriminant_form(L(U))
    assert q.is_trivial() and q.order() == 1


def test_minus_two_form():
    q = df.discriminant_form(Lattice([[-2]]))
    assert q.factors == [2]
    assert q.q_value((1,)) == Fraction(3, 2)


def test_e8_minus_two_form():
    q = df.discriminant_form(L(E8, -2))
    assert q.factors == [2] * 8


def test_odd_lattice_rejected():
    with pytest.raises(ValueError):
        df.discriminant_form(Lattice([[1]]))


def test_q_values_well_defined_on_factors():
    q = df.discriminant_form(L(A2, -1))
    assert q.factors == [3]
    g = (1,)
    assert q.q_value((0,)) == 0
    # q(d * g) = 0 in Q/2Z
    tripled = tuple(3 * a % 3 for a in g)
    assert q.q_value(tripled) == 0


def test_milgram_trivial():
    assert df.milgram_signature(df.FiniteQuadraticForm.trivial()) == 0


def test_milgram_minus_two():
    q = df.discriminant_form(Lattice([[-2]]))
    assert df.milgram_signature(q) == 7


def test_milgram_plus_two():
    q = df.discriminant_form(Lattice([[2]]))
    assert df.milgram_signature(q) == 1


def test_milgram_e8_minus_2():
    q = df.discriminant_form(L(E8, -2))
    assert df.milgram_signature(q) == 0


def test_milgram_matches_lattice_signature():
    cases = [
        Lattice([[-2]]),
        Lattice([[4]]),
        Lattice([[-6]]),
        L(A2),
        L(A2, -1),
        L(A2, 3),
        L(U, 2),
        L(U, 3),
        L(E8, -2),
        L(E8, 3),
        L(A2) + Lattice([[-4]]),
    ]
    for lat in cases:
        if not lat.is_even():
            continue
        plus, minus = lat.signature()
        q = df.discriminant_form(lat)
        assert df.milgram_signature(q) == (plus - minus) % 8, lat


def test_milgram_cap():
    q = df.FiniteQuadraticForm([2] * 21, [[Fraction(1, 2) if i == j else 0
                                           for j in range(21)] for i in range(21)])
    with pytest.raises(ValueError, match="p-primary"):
        df.milgram_signature(q)


def test_forms_isomorphic_reflexive():
    q = df.discriminant_form(L(A2, -1))
    assert df.forms_isomorphic(q, q) is True


def test_forms_not_isomorphic_by_milgram():
    q1 = df.discriminant_form(Lattice([[2]]))   # q = 1/2 on Z/2
    q2 = df.discriminant_form(Lattice([[-2]]))  # q = 3/2 on Z/2
    assert df.forms_isomorphic(q1, q2) is False


def test_forms_isomorphic_sign_symmetry():
    qA = df.discriminant_form(L(A2))
    qAm = df.discriminant_form(L(A2, -1))
    assert df.forms_isomorphic(qA, qAm.neg()) is True


def test_anti_isometry_found():
    qA = df.discriminant_form(L(A2))
    qAm = df.discriminant_form(L(A2, -1))
    images = df.find_anti_isometry(qA, qAm)
    assert images is not None
    # verify: q flips sign on every subgroup element
    for c in range(3):
        x = (c,)
        y = tuple(c * i % 3 for i in images[0])
        assert (qA.q_value(x) + qAm.q_value(y)) % 2 == 0


def test_nikulin_lattice_exists_cases():
    # signature (0,1), Milgram 1 form: congruence fails
    q_plus = df.discriminant_form(Lattice([[2]]))
    assert df.nikulin_lattice_exists((0, 1), q_plus).status == "no"
    # rank below length: inconclusive
    q_222 = df.FiniteQuadraticForm([2, 2, 2], [[0] * 3] * 3)
    assert df.nikulin_lattice_exists((1, 0), q_222).status == "inconclusive"
    # honest case
    q = df.discriminant_form(Lattice([[-2]]))
    assert df.nikulin_lattice_exists((1, 2), q).status == "yes"


def test_nikulin_embedding_exists():
    # E8(-2) into signature (4,20): complement (4,12), rank 16 >= length 8
    v = df.nikulin_embedding_exists(L(E8, -2), (4, 20))
    assert v.status == "yes"
    assert v.witness["complement_signature"] == (4, 12)
    # rank obstruction
    neg24 = L(E8, -1) + L(E8, -1) + L(E8, -1)
    assert df.nikulin_embedding_exists(neg24, (3, 20)).status == "no"


def test_nikulin_unique():
    q_len1 = df.discriminant_form(Lattice([[-2]]))
    assert df.nikulin_unique((3, 20), q_len1).status == "unique"
    q_e82 = df.discriminant_form(L(E8, -2))
    assert df.nikulin_unique((0, 8), q_e82).status == "inconclusive"
    assert df.nikulin_unique((1, 1), q_len1).status == "inconclusive"


def test_two_modular_invariants():
    rank, sig, length, delta = df.two_modular_invariants(L(U, 2))
    assert (rank, sig, length, delta) == (2, (1, 1), 2, 0)
    # every dual vector of E8(-2) has q = -x^2/2 with x^2 even, so all
    # values are integral and Delta = 0 by direct evaluation
    rank, sig, length, delta = df.two_modular_invariants(L(E8, -2))
    assert (rank, sig, length, delta) == (8, (0, 8), 8, 0)
    with pytest.raises(ValueError):
        df.two_modular_invariants(L(A2, -1))


def test_glue_rank_two_unimodular():
    S = Lattice([[-2]], name="(-2)")
    T = Lattice([[2]], name="(2)")
    glue = df.GlueMap([[1]], [[1]])
    g = df.glue_overlattice(S, T, glue)
    Lg = g.lattice
    assert Lg.rank == 2 and Lg.det() == -1 and Lg.is_even()
    assert Lg.signature() == (1, 1)
    assert g.index == 2


def test_glue_e8_pair():
    S = L(E8, -2)
    T = L(E8, 2)
    gm = df.GlueMap.full(df.discriminant_form(S), df.discriminant_form(T))
    assert gm is not None
    g = df.glue_overlattice(S, T, gm)
    assert g.lattice.rank == 16
    assert abs(g.lattice.det()) == 1
    assert g.lattice.signature() == (8, 8)
    assert g.lattice.is_even()


def test_glue_determinant_index_relation():
    S = Lattice([[-4]])
    T = Lattice([[4]])
    glue = df.GlueMap([[2]], [[2]])  # subgroup of order 2 inside Z/4
    g = df.glue_overlattice(S, T, glue)
    assert abs(g.lattice.det()) == abs(S.det() * T.det()) // g.index ** 2
    # factors stay primitive: their saturations are themselves
    assert g.s_sub.saturation().coords == g.s_sub.coords
    assert g.t_sub.saturation().coords == g.t_sub.coords


def test_glue_rejects_non_anti_isometry():
    S = Lattice([[-2]])
    T = Lattice([[4]])  # q = 1/4 on Z/4: subgroup gen 2 has q(2) = 1
    with pytest.raises(ValueError, match="anti-isometry|well defined"):
        df.glue_overlattice(S, T, df.GlueMap([[1]], [[2]]))


def test_embedding_milgram_consistency():
    # yes-verdicts come with a Milgram-consistent complement
    for lat in [L(E8, -2), L(A2, -1), Lattice([[-4]])]:
        v = df.nikulin_embedding_exists(lat, (4, 20))
        if v.status != "yes":
            continue
        mp, mm = v.witness["complement_signature"]
        q = df.FiniteQuadraticForm.from_json(v.witness["complement_form"])
        assert df.milgram_signature(q) == (mp - mm) % 8
