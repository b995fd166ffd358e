import numpy as np
import pytest

from cocyred.groups import (Family, GroupSpec, build_group, group_axioms_hold,
                            is_abelian, parse_group_spec)


def test_parse_group_spec():
    s = parse_group_spec("g1:2")
    assert s.family is Family.G1 and s.t == 2 and s.order == 8
    assert parse_group_spec("cyclic:5").order == 10
    assert str(parse_group_spec("d4t:3")) == "d4t:3"


@pytest.mark.parametrize("bad", ["", "g7:1", "g1", "g1:0", "g1:x", "d4t:-2"])
def test_parse_group_spec_rejects(bad):
    with pytest.raises(ValueError):
        parse_group_spec(bad)


def test_index_formulas_match_printed_examples():
    # printed 1-based indices: i = 2*i1+i2+1, 4*i1+2*i2+i3+1, 2t*i1+i2+1
    g1 = build_group(GroupSpec(Family.G1, 2))
    assert int(g1.index_of((1, 1))) + 1 == 4
    g2 = build_group(GroupSpec(Family.G2, 2))
    assert int(g2.index_of((1, 0, 1))) + 1 == 6
    d = build_group(GroupSpec(Family.D4T, 2))
    assert int(d.index_of((1, 3))) + 1 == 8


@pytest.mark.parametrize("fam", list(Family))
@pytest.mark.parametrize("t", range(1, 9))
def test_group_axioms_exhaustive(fam, t):
    g = build_group(GroupSpec(fam, t))
    assert group_axioms_hold(g)


@pytest.mark.parametrize("fam", list(Family))
def test_identity_row_and_inverse(fam):
    g = build_group(GroupSpec(fam, 3))
    v = g.order
    assert (g.mul[0] == np.arange(v)).all()
    assert g.inv_of(0) == 0
    for a in range(v):
        assert g.mul_of(a, g.inv_of(a)) == 0


def test_cyclic_multiplication():
    g = build_group(GroupSpec(Family.CYCLIC, 2))  # Z_4
    # elements with values 2 and 3 multiply to the value-1 element
    assert g.mul_of(2, 3) == 1


def test_d4t_rotation_subgroup():
    g = build_group(GroupSpec(Family.D4T, 2))
    a = int(g.index_of((0, 1)))
    b = int(g.index_of((0, 3)))
    assert g.mul_of(a, b) == 0  # rotations by 1 and 3 compose to the identity


def test_d4t_reflections_are_involutions():
    for t in (1, 2, 3, 4):
        g = build_group(GroupSpec(Family.D4T, t))
        for k in range(2 * t):
            refl = int(g.index_of((1, k)))
            assert g.inv_of(refl) == refl


def test_d4t_t1_is_klein_four():
    g = build_group(GroupSpec(Family.D4T, 1))
    assert is_abelian(g)
    for a in range(4):
        assert g.mul_of(a, a) == 0
    assert not is_abelian(build_group(GroupSpec(Family.D4T, 2)))


@pytest.mark.parametrize("fam", list(Family))
def test_coords_roundtrip(fam):
    g = build_group(GroupSpec(fam, 4))
    idx = np.arange(g.order)
    assert (g.index_of(g.coords_of(idx)) == idx).all()


def test_out_of_range_indices_raise():
    g = build_group(GroupSpec(Family.G1, 1))
    with pytest.raises(IndexError):
        g.mul_of(0, 4)
    with pytest.raises(IndexError):
        g.inv_of(-1)
