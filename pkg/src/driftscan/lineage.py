"""Feature lineage DAG: ancestor/descendant closure and common-related
queries for the investigation view."""

from dataclasses import dataclass, field

from .schema import FeatureSchema


@dataclass(eq=False)
class LineageGraph:
    nodes: tuple
    edges: tuple  # (parent, child) pairs: child computed from parent
    _children: dict = field(init=False, repr=False)
    _parents: dict = field(init=False, repr=False)

    def __post_init__(self):
        self._children = {n: [] for n in self.nodes}
        self._parents = {n: [] for n in self.nodes}
        for parent, child in self.edges:
            self._children[parent].append(child)
            self._parents[child].append(parent)

    @classmethod
    def from_schema(cls, schema: FeatureSchema) -> "LineageGraph":
        graph = cls(schema.names, tuple(schema.lineage))
        validate(graph, schema)
        return graph


def _find_cycle(adjacency: dict):
    WHITE, GRAY, BLACK = 0, 1, 2
    state = {n: WHITE for n in adjacency}
    for root in adjacency:
        if state[root] != WHITE:
            continue
        stack = [(root, iter(adjacency[root]))]
        path = [root]
        state[root] = GRAY
        while stack:
            node, children = stack[-1]
            advanced = False
            for child in children:
                if state[child] == GRAY:
                    return path[path.index(child):] + [child]
                if state[child] == WHITE:
                    state[child] = GRAY
                    stack.append((child, iter(adjacency[child])))
                    path.append(child)
                    advanced = True
                    break
            if not advanced:
                state[node] = BLACK
                stack.pop()
                path.pop()
    return None


def validate(graph: LineageGraph, schema: FeatureSchema) -> None:
    """Check acyclicity and that every edge endpoint exists in the schema."""
    known = set(schema.names)
    for parent, child in graph.edges:
        for endpoint in (parent, child):
            if endpoint not in known:
                raise ValueError(f"lineage references unknown feature {endpoint!r}")
    cycle = _find_cycle(graph._children)
    if cycle is not None:
        raise ValueError(f"lineage contains a cycle: {' -> '.join(cycle)}")


def _closure(start: str, adjacency: dict) -> set:
    if start not in adjacency:
        raise ValueError(f"unknown feature {start!r}")
    seen = set()
    frontier = [start]
    while frontier:
        node = frontier.pop()
        for nxt in adjacency[node]:
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    seen.discard(start)
    return seen


def ancestors(graph: LineageGraph, feature: str) -> set:
    """All features transitively used to compute `feature`."""
    return _closure(feature, graph._parents)


def descendants(graph: LineageGraph, feature: str) -> set:
    """All features transitively computed from `feature`."""
    return _closure(feature, graph._children)


def related(graph: LineageGraph, features, common_only: bool = False) -> dict:
    """Union (or intersection, when common_only) of the investigated
    features' ancestor and descendant sets, excluding the features
    themselves."""
    feats = list(features)
    if not feats:
        raise ValueError("need at least one feature")
    anc_sets = [ancestors(graph, f) for f in feats]
    desc_sets = [descendants(graph, f) for f in feats]
    combine = set.intersection if common_only else set.union
    anc = combine(*anc_sets) - set(feats)
    desc = combine(*desc_sets) - set(feats)
    return {"ancestors": anc, "descendants": desc}
