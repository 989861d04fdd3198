import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from driftscan.lineage import LineageGraph, ancestors, descendants, related, validate
from driftscan.schema import Feature, FeatureSchema


def _schema(names, lineage=()):
    return FeatureSchema(
        "ts",
        tuple(Feature(n, "numeric", {"origin": "raw"}) for n in names),
        tuple(lineage),
    )


def _graph(names, edges):
    return LineageGraph.from_schema(_schema(names, edges))


def test_chain_is_valid():
    graph = _graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert ancestors(graph, "c") == {"a", "b"}
    assert descendants(graph, "a") == {"b", "c"}


def test_cycle_rejected():
    schema = _schema(["a", "b"])
    graph = LineageGraph(("a", "b"), (("a", "b"), ("b", "a")))
    with pytest.raises(ValueError, match="cycle"):
        validate(graph, schema)


def test_unknown_node_rejected():
    schema = _schema(["a"])
    graph = LineageGraph(("a", "ghost"), (("a", "ghost"),))
    with pytest.raises(ValueError, match="ghost"):
        validate(graph, schema)


def test_isolated_node_has_no_relations():
    graph = _graph(["a", "b", "lone"], [("a", "b")])
    assert ancestors(graph, "lone") == set()
    assert descendants(graph, "lone") == set()


def test_diamond_closure_no_duplicates():
    graph = _graph(["a", "b", "c", "d"], [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])
    assert ancestors(graph, "d") == {"a", "b", "c"}
    assert descendants(graph, "a") == {"b", "c", "d"}


def test_unknown_feature_query_rejected():
    graph = _graph(["a"], [])
    with pytest.raises(ValueError, match="ghost"):
        ancestors(graph, "ghost")


def test_related_single_feature_matches_closures():
    graph = _graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    for flag in (False, True):
        rel = related(graph, ["b"], common_only=flag)
        assert rel["ancestors"] == {"a"}
        assert rel["descendants"] == {"c"}


def test_related_common_intersection_in_diamond():
    graph = _graph(["a", "b", "c", "d"], [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])
    rel = related(graph, ["b", "c"], common_only=True)
    assert rel == {"ancestors": {"a"}, "descendants": {"d"}}


def test_related_disjoint_lineages_empty_intersection():
    graph = _graph(["a", "b", "x", "y"], [("a", "b"), ("x", "y")])
    rel = related(graph, ["b", "y"], common_only=True)
    assert rel == {"ancestors": set(), "descendants": set()}
    rel_all = related(graph, ["b", "y"], common_only=False)
    assert rel_all == {"ancestors": {"a", "x"}, "descendants": set()}


@st.composite
def random_dag(draw):
    n = draw(st.integers(2, 8))
    names = [f"f{i}" for i in range(n)]
    edges = []
    for j in range(1, n):
        for i in range(j):
            if draw(st.booleans()):
                edges.append((names[i], names[j]))  # i < j keeps it acyclic
    return names, edges


@given(random_dag())
@settings(max_examples=80, deadline=None)
def test_ancestor_descendant_duality(dag):
    names, edges = dag
    graph = _graph(names, edges)
    for x in names:
        for y in names:
            if x == y:
                continue
            assert (y in ancestors(graph, x)) == (x in descendants(graph, y))
        assert x not in ancestors(graph, x)
        assert x not in descendants(graph, x)


@given(random_dag(), st.data())
@settings(max_examples=60, deadline=None)
def test_common_related_subset_of_all_related(dag, data):
    names, edges = dag
    graph = _graph(names, edges)
    subset = data.draw(st.lists(st.sampled_from(names), min_size=1, max_size=3, unique=True))
    common = related(graph, subset, common_only=True)
    full = related(graph, subset, common_only=False)
    assert common["ancestors"] <= full["ancestors"]
    assert common["descendants"] <= full["descendants"]
