from hypothesis import given, strategies as st

from skb.compositions import partitions_upto
from skb.tableaux import (ReverseSSYT, SkylineFilling, dst, dst_preimages, dst_q, enumerate_fillings,
                          enumerate_revssyt, is_particle_highest, is_quasi_yamanouchi, is_valid)

SHAPE = (0, 0, 2, 0, 2)

SMALL_TABLEAUX = [v for lam in partitions_upto(4, min_size=1) for v in enumerate_revssyt(lam, 3)]


def atom_filling(rows):
    return SkylineFilling.from_rows(SHAPE, rows)


def test_dst_bumps_to_the_particle_highest_filling():
    standard = atom_filling({5: [5, 1], 3: [3, 2]})
    highest = atom_filling({5: [5, 1], 3: [3, 3]})
    assert dst(standard) == highest
    assert dst(highest) == highest
    assert is_particle_highest(highest)
    assert not is_particle_highest(standard)


def test_dst_q_bumps_further():
    standard = atom_filling({5: [5, 1], 3: [3, 2]})
    assert dst_q(standard) == atom_filling({5: [5, 2], 3: [3, 3]})
    assert is_quasi_yamanouchi(dst_q(standard))
    assert dst(atom_filling({5: [5, 2], 3: [3, 3]})) == atom_filling({5: [5, 2], 3: [3, 3]})


def test_first_column_labels_are_never_bumped():
    f = SkylineFilling.from_rows((0, 2), {2: [2, 2]})
    assert dst(f) == f
    assert dst_q(f) == f


def test_dst_on_reverse_tableaux():
    assert dst(ReverseSSYT.from_rows([[2, 1]])) == ReverseSSYT.from_rows([[2, 2]])
    assert dst(ReverseSSYT.from_rows([[3, 1]])) == ReverseSSYT.from_rows([[3, 3]])
    assert dst(ReverseSSYT.from_rows([[3, 1]]), n=2) == ReverseSSYT.from_rows([[3, 2]])
    assert dst(ReverseSSYT.from_rows([[3], [1]])) == ReverseSSYT.from_rows([[3], [1]])


def test_dst_on_pairs_reads_the_tableau_right_of_the_filling():
    s = SkylineFilling.from_rows((0, 3, 0, 2), {4: [4, 3], 2: [2, 1, 1]})
    t = ReverseSSYT.from_rows([[3, 3], [2]])
    assert is_valid("LSSF", (0, 3, 0, 2), s)
    s2, t2 = dst((s, t), 4)
    assert s2 == SkylineFilling.from_rows((0, 3, 0, 2), {4: [4, 4], 2: [2, 1, 1]})
    assert t2 == ReverseSSYT.from_rows([[4, 4], [2]])
    assert is_particle_highest((s2, t2))


def test_particle_highest_atom_fillings():
    fillings = enumerate_fillings("ASSF", (0, 1, 0, 3))
    highest = [f for f in fillings if is_particle_highest(f)]
    assert {f.weight() for f in highest} == {(0, 1, 0, 3), (0, 2, 0, 2)}
    assert SkylineFilling.from_rows((0, 1, 0, 3), {4: [4, 4, 4], 2: [2]}) in highest
    assert SkylineFilling.from_rows((0, 1, 0, 3), {4: [4, 4, 3], 2: [2]}) not in highest


def test_dst_preimages():
    highest = atom_filling({5: [5, 1], 3: [3, 3]})
    preimages = dst_preimages(highest, 5)
    assert preimages == {(1, 0, 2, 0, 1): highest,
                         (1, 1, 1, 0, 1): atom_filling({5: [5, 1], 3: [3, 2]})}
    assert all(dst(p) == highest for p in preimages.values())


@given(st.sampled_from(SMALL_TABLEAUX))
def test_destandardization_fixed_points(v):
    image = dst(v)
    assert image.is_valid()
    assert is_particle_highest(image)
    assert dst(image) == image
    assert is_particle_highest(v) == (image == v)
    assert is_quasi_yamanouchi(dst_q(v))
    assert is_quasi_yamanouchi(v) == (dst_q(v) == v)
