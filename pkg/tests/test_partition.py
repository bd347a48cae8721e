import pytest
from hypothesis import given
import hypothesis.strategies as st

from ncb import (
    AnnulusShape,
    BPartition,
    ClassicalPartition,
    SignedPermutation,
    abs_map,
    adjusted_orbits,
    boundary_permutation,
    connectivity,
    kreweras,
    meet_q1,
    nc_a,
    nc_b_annulus,
    nc_b_disc,
    pair_stats,
)

TOP3 = BPartition(3, [[1, -1, 2, -2, 3, -3]])

WORKED = BPartition(
    8,
    [[1, -5], [-1, 5], [2], [-2], [3, -4, -6, 8], [-3, 4, 6, -8], [7], [-7]],
)


def test_canonical_form():
    "Block and element order do not matter."
    a = BPartition(2, [[1, 2], [-2, -1]])
    b = BPartition(2, [[-1, -2], [2, 1]])
    assert a == b
    assert hash(a) == hash(b)
    assert a.blocks == ((1, 2), (-1, -2))
    assert a.block_string() == "{1,2}{-1,-2}"


def test_element_order_within_block():
    "Within a block the positive label comes before its negative."
    top = BPartition(2, [[2, -1, 1, -2]])
    assert top.blocks == ((1, -1, 2, -2),)


@pytest.mark.parametrize(
    "blocks",
    [
        [[1, 2], [-1, -2], []],
        [[1, 2], [-1, -2], [3]],
        [[1, 0], [-1, 2, -2]],
        [[1, 2], [-1, -2], [1, -1]],
        [[1, -2], [2, -1, 3, -3]],
        [[1, -1], [2, -2]],
    ],
)
def test_constructor_rejects(blocks):
    "Coverage, negation closure, and the single invariant block are enforced."
    n = max((abs(x) for b in blocks for x in b), default=1)
    with pytest.raises(ValueError):
        BPartition(n, blocks)


def test_singletons():
    "The bottom element has all blocks singleton and rank zero."
    bot = BPartition.singletons(3)
    assert len(bot.blocks) == 6
    assert bot.rank() == 0
    assert bot.zero_block() is None


def test_zero_block_and_rank():
    "The invariant block is excluded from the rank count."
    assert TOP3.zero_block() == (1, -1, 2, -2, 3, -3)
    assert TOP3.rank() == 3
    mid = BPartition(2, [[1, -1], [2], [-2]])
    assert mid.zero_block() == (1, -1)
    assert mid.rank() == 1
    assert WORKED.zero_block() is None
    assert WORKED.rank() == 4


def test_block_containing():
    "Lookup returns the canonical block of any signed label."
    assert WORKED.block_containing(-6) == (3, -4, -6, 8)
    assert WORKED.block_containing(6) == (-3, 4, 6, -8)
    with pytest.raises(KeyError):
        WORKED.block_containing(9)


def test_json_round_trip():
    "Serialization is stable and inverts exactly."
    for pi in nc_b_annulus(2, 1).elements:
        text = pi.to_json()
        again = BPartition.from_json(text)
        assert again == pi
        assert again.to_json() == text
    assert BPartition.from_dict(WORKED.to_dict()) == WORKED


def test_le_is_reverse_refinement():
    "Merging blocks moves up, and incomparable pairs exist."
    bot = BPartition.singletons(2)
    ab = BPartition(2, [[1, 2], [-1, -2]])
    ax = BPartition(2, [[1, -2], [-1, 2]])
    top = BPartition(2, [[1, -1, 2, -2]])
    assert bot.le(ab) and ab.le(top)
    assert not ab.le(ax) and not ax.le(ab)
    assert not top.le(ab)
    with pytest.raises(ValueError):
        bot.le(TOP3)


def test_adjusted_orbits():
    "Orbits become blocks, with all invariant orbits pooled."
    assert adjusted_orbits(SignedPermutation.identity(2)) == BPartition.singletons(2)
    swap = SignedPermutation.from_cycles(3, (1, 2))
    assert adjusted_orbits(swap) == BPartition(
        3, [[1, 2], [-1, -2], [3], [-3]]
    )
    gamma = boundary_permutation(AnnulusShape(2, 1))
    assert adjusted_orbits(gamma) == TOP3
    flip = SignedPermutation.from_cycles(3, (1, -1), (2, -2))
    assert adjusted_orbits(flip) == BPartition(
        3, [[1, -1, 2, -2], [3], [-3]]
    )


def test_pair_stats_worked_example():
    "Connecting, exterior, interior pair counts on a known partition."
    stats = pair_stats(WORKED, AnnulusShape(5, 3))
    assert stats == (1, 2, 1)
    assert connectivity(WORKED, AnnulusShape(5, 3)) == 1


def test_pair_stats_zero_block_not_connecting():
    "A zero block spanning both circles does not count as connecting."
    shape = AnnulusShape(2, 1)
    assert pair_stats(TOP3, shape) == (0, 0, 0)
    assert connectivity(TOP3, shape) == 0


def test_rank_equals_size_minus_pairs():
    "Rank always equals n minus the total number of block pairs."
    shape = AnnulusShape(2, 2)
    for pi in nc_b_annulus(2, 2).elements:
        c, e, i = pair_stats(pi, shape)
        assert pi.rank() == 4 - (c + e + i)


def test_abs_map_fibers():
    "Forgetting signs covers each noncrossing partition four times."
    images = [abs_map(pi) for pi in nc_b_disc(3).elements]
    assert all(im.is_noncrossing() for im in images)
    classical = set(nc_a(3).elements)
    assert set(images) == classical
    for target in classical:
        assert images.count(target) == 4
    assert abs_map(WORKED).blocks == ((1, 5), (2,), (3, 4, 6, 8), (7,))


def test_classical_noncrossing():
    "Crossing detection on one circle."
    assert ClassicalPartition(4, [[1, 4], [2, 3]]).is_noncrossing()
    assert not ClassicalPartition(4, [[1, 3], [2, 4]]).is_noncrossing()
    assert ClassicalPartition(4, [[1, 2, 3, 4]]).block_string() == "{1,2,3,4}"
    with pytest.raises(ValueError):
        ClassicalPartition(2, [[1]])


def test_kreweras_complement():
    "The complement reverses order and complements rank."
    shape = AnnulusShape(2, 1)
    poset = nc_b_annulus(2, 1)
    images = {kreweras(pi, shape) for pi in poset.elements}
    assert images == set(poset.elements)
    for pi in poset.elements:
        assert kreweras(pi, shape).rank() == 3 - pi.rank()
    for a in poset.elements:
        for b in poset.elements:
            if a.le(b):
                assert kreweras(b, shape).le(kreweras(a, shape))
    assert kreweras(BPartition.singletons(3), shape) == TOP3
    assert kreweras(TOP3, shape) == BPartition.singletons(3)


def test_meet_is_greatest_lower_bound():
    "The blockwise meet is the greatest lower bound on the annulus with one inner point."
    shape = AnnulusShape(2, 1)
    elements = nc_b_annulus(2, 1).elements
    for a in elements:
        for b in elements:
            m = meet_q1(a, b, shape)
            assert m.le(a) and m.le(b)
            for c in elements:
                if c.le(a) and c.le(b):
                    assert c.le(m)


def test_meet_requires_single_inner_point():
    "Shapes with a larger inner circle are rejected."
    shape = AnnulusShape(2, 2)
    bot = BPartition.singletons(4)
    with pytest.raises(ValueError):
        meet_q1(bot, bot, shape)


@given(st.integers(1, 4))
def test_extremes_bound_everything(n):
    "Bottom and top bound the whole poset for any size."
    bot = BPartition.singletons(n)
    top = BPartition(n, [[x for a in range(1, n + 1) for x in (a, -a)]])
    assert bot.le(top)
    assert bot.rank() == 0
    assert top.rank() == n
