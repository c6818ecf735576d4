import pytest

from k3lat import catalog, discforms as df, enumeration as en
from k3lat import isometries as iso
from k3lat import linalg
from k3lat.gram_data import NIEMEIER_ROWS, S_LATTICE_2_9_3_6
from k3lat.lattice import Lattice

COXETER = {name: row[2] for name, row in NIEMEIER_ROWS.items()}


def test_named_elementary():
    assert catalog.named("U").gram == [[0, 1], [1, 0]]
    E8m = catalog.named("E8(-1)")
    assert E8m.rank == 8 and E8m.det() == 1 and E8m.is_even()
    assert len(en.short_vectors(E8m, 2)) == 240
    A23 = catalog.named("A2(3)")
    assert A23.gram == [[6, -3], [-3, 6]]


def test_named_l_n():
    L2 = catalog.named("L_2")
    assert L2.rank == 23 and L2.signature() == (3, 20) and abs(L2.det()) == 2
    L1 = catalog.named("K3")
    assert L1.rank == 22 and L1.signature() == (3, 19) and abs(L1.det()) == 1
    L4 = catalog.l_n(4)
    assert L4.vector([0] * 22 + [1]).norm() == -6


def test_named_mukai():
    M = catalog.named("L_M")
    assert M.rank == 24 and M.signature() == (4, 20) and M.det() == 1
    assert M.is_even()


def test_named_unknown():
    with pytest.raises(ValueError, match="catalog"):
        catalog.named("F4")


def test_leech_characterization():
    L = catalog.leech()
    assert L.rank == 24
    assert L.det() == 1
    assert L.signature() == (0, 24)
    assert L.is_even()
    assert en.min_norm(L) == -4
    assert not en.has_roots(L)


def test_golay_code_weights():
    model = catalog.leech_model()
    code = model.golay_code()
    assert len(code) == 4096
    assert len(model.codewords_of_weight(8)) == 759
    assert len(model.codewords_of_weight(12)) == 2576


@pytest.mark.parametrize("name", sorted(NIEMEIER_ROWS))
def test_niemeier_root_counts(name):
    N = catalog.niemeier(name)
    assert N.rank == 24 and N.det() == 1 and N.is_even()
    assert N.signature() == (0, 24)
    roots = len(en.short_vectors(N, 2))
    assert roots == 24 * COXETER[name]


@pytest.mark.parametrize("name", [n for n in sorted(NIEMEIER_ROWS)
                                  if NIEMEIER_ROWS[n][0] != "E8"])
def test_holy_construction(name):
    frame = catalog.holy_construction(name)
    L = frame.leech
    assert (L.rank, L.det(), L.is_even()) == (24, 1, True)
    assert L.signature() == (0, 24)
    assert not en.has_roots(L)
    hole = frame.hole
    assert hole.det() == 1 and hole.rank == 24
    assert len(en.short_vectors(hole, 2)) == 24 * COXETER[name]


def test_holy_rejects_e8_row():
    with pytest.raises(ValueError, match="pure A-type"):
        catalog.holy_construction("N3")


def test_exceptional_bw16():
    L = catalog.exceptional("BW16(-1)")
    assert L.rank == 16 and L.det() == 2 ** 8 and L.is_even()
    assert en.min_norm(L) == -4
    q = df.discriminant_form(L)
    assert q.factors == [2] * 8


def test_exceptional_d12():
    L = catalog.exceptional("D12+(-2)")
    assert L.rank == 12 and L.is_even()
    q = df.discriminant_form(L)
    assert q.factors == [2] * 12
    assert not en.has_roots(L)


def test_exceptional_s3exo():
    S = catalog.exceptional("S_3exo")
    assert S.rank == 16
    q = df.discriminant_form(S)
    assert q.factors == [3] * 8
    # complement in E8(-1)^3 is E8(-3) on the nose
    C = S.orthogonal_complement()
    assert C.gram == [[-3 * a for a in row] for row in catalog.gram_E(8)]


def test_s_lattice_censuses():
    for name, i, j in (("2^5 3^10", 5, 10), ("2^9 3^6", 9, 6)):
        L = catalog.exceptional(name)
        c = en.norm_census(L, 6)
        assert (c.count(-4), c.count(-6)) == (i, j), name


def test_w_minus_1():
    W = catalog.exceptional("W(-1)")
    assert W.rank == 18
    assert df.discriminant_form(W).factors == [3] * 5
    assert not en.has_roots(W)
    M = W.orthogonal_complement()
    c = en.norm_census(M, 6)
    assert (c.count(-4), c.count(-6)) == (27, 36)


def test_s_pk3_ranks():
    expected = {"S_2.K3": 8, "S_3.K3": 12, "S_5.K3": 16, "S_7.K3": 18}
    for name, rank in expected.items():
        S = catalog.exceptional(name)
        assert S.rank == rank, name
        assert not en.has_roots(S), name
        plus, minus = S.signature()
        assert plus == 0, name


def test_s5exo_rank_and_genus_partner():
    S = catalog.exceptional("S_5exo")
    assert S.rank == 20 and abs(S.det()) == 125
    # its Mukai complement lies in the genus of the positive 2^5 3^10 form
    T = catalog.pos_2_5_3_10()
    assert en.min_norm(T) == 4
    qS = df.discriminant_form(S)
    qT = df.discriminant_form(T)
    assert df.find_anti_isometry(qS, qT) is not None


def test_s11_det_121():
    S = catalog.exceptional("S_11.K3[2]")
    assert S.rank == 20 and abs(S.det()) == 121
    for T in catalog.det121_forms():
        assert T.det() == 121
        assert df.find_anti_isometry(df.discriminant_form(S),
                                     df.discriminant_form(T)) is not None


def test_2936_in_leech_matches_printed_gram():
    S = catalog.s_lattice_2936_in_leech()
    assert S.rank == 4
    T = iso.find_isometry(Lattice(S.gram), Lattice(S_LATTICE_2_9_3_6))
    assert T is not None


def test_leech_pairs_for_catalog_coinvariants():
    # every S_p.K3 coinvariant comes from a Leech pair
    frames = {"S_3.K3": ("N22", 6), "S_5.K3": ("N20", 4), "S_7.K3": ("N17", 3)}
    for name, (frame_name, weight) in frames.items():
        frame = catalog.holy_construction(frame_name)
        word = frame.words_of_weight(weight)[0]
        g = frame.glue_translation(word)
        S = iso.coinvariant_lattice([g])
        sub = Lattice(S.gram, name=name)
        restricted = iso.Isometry(sub, iso.restrict_isometry(g, S).matrix)
        report = iso.leech_pair_check(sub, [restricted])
        assert all(report.values()), (name, report)


def test_milgram_battery_over_catalog():
    lattices = [
        catalog.named("U"),
        catalog.named("U(2)"),
        catalog.named("U(3)"),
        catalog.named("A2"),
        catalog.named("A2(-1)"),
        catalog.named("A2(3)"),
        catalog.named("A2(-3)"),
        catalog.named("A3"),
        catalog.named("A4(-1)"),
        catalog.named("D4"),
        catalog.named("E6(-1)"),
        catalog.named("E7"),
        catalog.named("E8(-1)"),
        catalog.named("E8(-2)"),
        catalog.named("E8(-3)"),
        catalog.leech(),
        catalog.niemeier("N22"),
        catalog.niemeier("N23"),
        catalog.mukai(),
        catalog.l_n(1),
        catalog.l_n(2),
        catalog.l_n(3),
        catalog.l_n(6),
        catalog.exceptional("BW16(-1)"),
        catalog.exceptional("D12+(-2)"),
        catalog.exceptional("S_3exo"),
        catalog.exceptional("2^5 3^10"),
        catalog.exceptional("2^9 3^6"),
        catalog.exceptional("W(-1)"),
        catalog.exceptional("S_11.K3[2]"),
        catalog.exceptional("S_5exo"),
        catalog.exceptional("S_3.K3"),
        catalog.exceptional("S_5.K3"),
        catalog.exceptional("S_7.K3"),
    ]
    assert len(lattices) >= 25
    for L in lattices:
        if not L.is_even():
            continue
        plus, minus = L.signature()
        sigma = df.milgram_signature(df.discriminant_form(L))
        assert sigma == (plus - minus) % 8, L.name


def test_construction_cache_returns_same_object():
    assert catalog.leech() is catalog.leech()
    assert catalog.niemeier("N22") is catalog.niemeier("N22")
