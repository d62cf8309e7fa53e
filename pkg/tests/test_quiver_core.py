import pytest

from src.models import QuiverError, ShapeMismatchError, ToolkitError
from src.quiver import linalg
from src.quiver.core import (
    Arrow,
    Quiver,
    Rep,
    check_relations,
    direct_sum,
    direct_sum_all,
    double_quiver,
    gp_relations,
    is_nilpotent,
    linear_quiver,
    load_rep,
    preprojective_quiver,
    quiver_by_name,
    rep_from_file,
    rep_to_file,
    save_rep,
    segment_rep,
    zero_rep,
)


def test_linear_quiver_orientation():
    q = linear_quiver(4)
    assert q.name == "Q4"
    assert [(a.id, a.source, a.target) for a in q.arrows] == [("a1", 2, 1), ("a2", 3, 2), ("a3", 4, 3)]


def test_double_quiver_adds_reversed_arrows():
    q = double_quiver(linear_quiver(3))
    assert q.name == "Q3bar"
    assert [a.id for a in q.arrows] == ["a1", "a1*", "a2", "a2*"]
    star = q.arrow("a2*")
    assert (star.source, star.target, star.starred) == (2, 3, True)


def test_gp_relations_one_per_vertex(lambda_quiver):
    n = len(lambda_quiver.vertices)
    assert len(gp_relations(linear_quiver(n))) == n
    assert lambda_quiver.name == f"Lambda{n}"
    for relation in lambda_quiver.relations:
        source, target = relation.endpoints(lambda_quiver)
        assert source == target


def test_quiver_rejects_loops_and_unknown_vertices():
    with pytest.raises(QuiverError):
        Quiver("L", (1,), (Arrow("x", 1, 1),))
    with pytest.raises(QuiverError):
        Quiver("U", (1, 2), (Arrow("x", 1, 3),))
    with pytest.raises(QuiverError):
        linear_quiver(3).arrow("b1")


def test_quiver_by_name():
    assert quiver_by_name("Q3").same_as(linear_quiver(3))
    assert quiver_by_name("Lambda2").relations
    with pytest.raises(QuiverError):
        quiver_by_name("A3")


def test_rep_validates_shapes():
    q = preprojective_quiver(2)
    with pytest.raises(ShapeMismatchError):
        Rep(q, [1, 1, 1])
    with pytest.raises(ShapeMismatchError):
        Rep(q, [1, 2], {"a1": linalg.identity(2)})
    with pytest.raises(QuiverError):
        Rep(q, [1, 1], {"b": linalg.identity(1)})


def test_missing_arrows_act_by_zero():
    x = Rep(preprojective_quiver(2), [1, 1], {"a1": [[1]]})
    assert linalg.is_zero(x["a1*"])
    assert check_relations(x)


def test_fixture_modules_satisfy_relations(ex5, m31, m32):
    for x in (ex5, m31, m32):
        assert check_relations(x)
        assert is_nilpotent(x)


def test_relations_detect_failure():
    x = Rep(preprojective_quiver(2), [1, 1], {"a1": [[1]], "a1*": [[1]]})
    assert not check_relations(x)
    assert not is_nilpotent(x)


def test_segment_rep():
    x = segment_rep(2, 3, 4)
    assert x.dims == (0, 1, 1, 0)
    assert x["a2"][0, 0] == 1
    with pytest.raises(QuiverError):
        segment_rep(3, 2, 4)


def test_direct_sum():
    x = direct_sum(segment_rep(1, 2, 3), segment_rep(2, 3, 3))
    assert x.dims == (1, 2, 1)
    assert linalg.rank(x["a1"]) == 1 and linalg.rank(x["a2"]) == 1
    with pytest.raises(QuiverError):
        direct_sum(segment_rep(1, 1, 2), segment_rep(1, 1, 3))
    with pytest.raises(QuiverError):
        direct_sum_all([])
    assert direct_sum_all([], quiver=linear_quiver(2)).total_dim == 0
    assert zero_rep(linear_quiver(3)).dims == (0, 0, 0)


def test_rep_json_roundtrip(m31, tmp_path):
    path = tmp_path / "m31.json"
    save_rep(m31, path)
    back = load_rep(path)
    assert back.dims == m31.dims
    for a in m31.quiver.arrows:
        assert linalg.is_zero(back[a.id] - m31[a.id])
    doc = rep_to_file(m31)
    assert rep_from_file(doc.model_dump()).dims == (1, 2, 2, 1)


def test_rep_from_file_errors(tmp_path):
    with pytest.raises(ShapeMismatchError):
        rep_from_file({"quiver": "Lambda2", "dims": [1, -1], "arrows": {}})
    with pytest.raises(ShapeMismatchError):
        rep_from_file({"quiver": "Lambda2", "dims": [1, 1], "arrows": {"a1": [["1", "2"]]}})
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ToolkitError):
        load_rep(bad)
