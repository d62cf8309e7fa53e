from src.multiseg.multisegments import parse_multisegment, rep_of
from src.quiver import linalg
from src.quiver.core import check_relations
from src.quiver.sampling import fiber_sample


def test_fiber_sample_lies_over_x():
    x = rep_of(parse_multisegment("[1,2]+[2,3]+[2,2]"), 3)
    y = fiber_sample(x, seed=7)
    assert y.quiver.name == "Lambda3"
    assert y.dims == x.dims
    assert check_relations(y)
    for a in x.quiver.arrows:
        assert linalg.is_zero(y[a.id] - x[a.id])


def test_fiber_sample_is_seeded():
    x = rep_of(parse_multisegment("[1,2]+[1,1]+[2,2]"), 2)
    first, again, other = fiber_sample(x, 11), fiber_sample(x, 11), fiber_sample(x, 12)
    assert linalg.is_zero(first["a1*"] - again["a1*"])
    assert not linalg.is_zero(first["a1*"] - other["a1*"])


def test_fiber_sample_respects_bound():
    x = rep_of(parse_multisegment("[1,1]+[2,2]"), 2)
    y = fiber_sample(x, seed=(3, 4), bound=2)
    assert all(abs(v) <= 2 for v in y["a1*"].flat)
    assert check_relations(y)
