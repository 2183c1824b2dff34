import pytest
from hypothesis import given
from hypothesis import strategies as st

from g2cert.weyl import (
    cartan_type,
    dimension_census,
    root_system,
    simple_algebra_census,
    weyl_dimension,
)

LABELS = ("A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4")


@pytest.fixture(scope="module")
def g2():
    return root_system(cartan_type("G2"))


@pytest.mark.parametrize(
    "label,count",
    [("A1", 1), ("A2", 3), ("B2", 4), ("B3", 9), ("C3", 9), ("G2", 6), ("D4", 12), ("F4", 24)],
)
def test_positive_root_counts(label, count):
    assert len(root_system(cartan_type(label)).positive_roots) == count


@pytest.mark.parametrize(
    "label,dim",
    [("A1", 3), ("A2", 8), ("B3", 21), ("C3", 21), ("G2", 14), ("F4", 52),
     ("E6", 78), ("E7", 133), ("E8", 248)],
)
def test_algebra_dimensions(label, dim):
    assert root_system(cartan_type(label)).algebra_dimension == dim


def test_positive_roots_have_nonnegative_coordinates(g2):
    assert all(all(x >= 0 for x in root) for root in g2.positive_roots)


def test_g2_fundamental_dimensions(g2):
    assert weyl_dimension(g2, (0, 0)) == 1
    assert weyl_dimension(g2, (1, 0)) == 7
    assert weyl_dimension(g2, (0, 1)) == 14


def test_g2_adjoint_weight_matches_dimension(g2):
    assert weyl_dimension(g2, (0, 1)) == g2.algebra_dimension


def test_a1_dimensions():
    a1 = root_system(cartan_type("A1"))
    assert [weyl_dimension(a1, (k,)) for k in (1, 2, 3)] == [2, 3, 4]


def test_nondominant_rejected(g2):
    with pytest.raises(ValueError):
        weyl_dimension(g2, (-1, 0))


def test_census_g2_small_dimensions(g2):
    census = dimension_census(g2, 10)
    assert census.monotone
    nontrivial_below_14 = [
        (w, d) for w, d in census.entries if any(w) and d < 14
    ]
    assert nontrivial_below_14 == [((1, 0), 7)]
    assert all(d != 6 for _, d in census.entries)


def test_census_sorted_by_dimension(g2):
    census = dimension_census(g2, 3)
    dims = [d for _, d in census.entries]
    assert dims == sorted(dims)


def test_census_a1_small_grid():
    a1 = root_system(cartan_type("A1"))
    census = dimension_census(a1, 3)
    assert census.entries == (((0,), 1), ((1,), 2), ((2,), 3), ((3,), 4))


def test_simple_algebra_census_dim21():
    assert simple_algebra_census(21, 8) == ["B3", "C3"]
    assert simple_algebra_census(21, 3) == ["B3", "C3"]


def test_simple_algebra_census_other_dims():
    assert simple_algebra_census(14, 8) == ["G2"]
    assert simple_algebra_census(4, 8) == []
    assert simple_algebra_census(3, 8) == ["A1"]
    assert simple_algebra_census(8, 8) == ["A2"]


def test_classical_coincidences_excluded():
    with pytest.raises(ValueError):
        cartan_type("C2")  # same algebra as B2
    with pytest.raises(ValueError):
        cartan_type("D3")  # same algebra as A3
    with pytest.raises(ValueError):
        cartan_type("D2")  # not simple
    with pytest.raises(ValueError):
        cartan_type("E9")


@pytest.mark.parametrize("label", LABELS)
def test_trivial_weight_gives_dimension_one(label):
    rs = root_system(cartan_type(label))
    assert weyl_dimension(rs, (0,) * rs.cartan.rank) == 1


@pytest.mark.parametrize("label", LABELS)
def test_adjoint_weight_exists_in_grid(label):
    rs = root_system(cartan_type(label))
    census = dimension_census(rs, 2)
    assert any(d == rs.algebra_dimension for _, d in census.entries)


@given(
    st.sampled_from(LABELS),
    st.lists(st.integers(min_value=0, max_value=4), min_size=4, max_size=4),
)
def test_weyl_dimension_is_positive_integer(label, coeffs):
    rs = root_system(cartan_type(label))
    weight = tuple(coeffs[: rs.cartan.rank])
    dim = weyl_dimension(rs, weight)
    assert isinstance(dim, int)
    assert dim >= 1


@given(
    st.sampled_from(("A2", "B2", "G2")),
    st.tuples(st.integers(0, 5), st.integers(0, 5)),
    st.integers(0, 1),
)
def test_monotone_under_increments(label, weight, direction):
    rs = root_system(cartan_type(label))
    bumped = tuple(
        w + (1 if i == direction else 0) for i, w in enumerate(weight)
    )
    assert weyl_dimension(rs, bumped) > weyl_dimension(rs, weight)


def test_cartan_validation_rejects_bad_matrices():
    from g2cert.weyl import CartanType

    with pytest.raises(ValueError):
        CartanType(label="X2", rank=2, cartan_matrix=((2, 1), (1, 2)), symmetrizer=(1, 1))
    with pytest.raises(ValueError):
        CartanType(label="X2", rank=2, cartan_matrix=((2, -2), (-2, 2)), symmetrizer=(1, 1))
