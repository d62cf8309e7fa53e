"""
Component graphs: construction, reduction, cliques and export
"""
import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx
from pydantic import ValidationError

from src.config import config
from src.models import CriticalReading, ExportFormat, ExportFormatError, FixtureError, GraphDocument, ToolkitError
from src.compgraph.components import indec_components, projective_components, sample_component
from src.multiseg.covering import psi
from src.multiseg.multisegments import Multisegment, rep_of
from src.quiver.homological import ext1_dim
from src.quiver.sampling import fiber_sample
from src.roots.edges import edge
from src.roots.lattice import RootVec
from src.roots.maps import delta_map
from src.utils.fixtures import load_fixture
from src.utils.logger import toolkit_logger


PROJECTIVE_TAGS = tuple(f"C{j}" for j in range(1, 6))


@dataclass
class ComponentGraph:
    """
    Undirected graph on component labels with loop flags

    Vertex order is the construction order and drives every sorted output.
    """
    vertices: List[str] = field(default_factory=list)
    labels: Dict[str, str] = field(default_factory=dict)
    graph: nx.Graph = field(default_factory=nx.Graph)
    loops: Set[str] = field(default_factory=set)

    def add_vertex(self, vertex: str, label: Optional[str] = None):
        if vertex not in self.graph:
            self.vertices.append(vertex)
            self.graph.add_node(vertex)
        self.labels[vertex] = label or vertex

    def add_edge(self, u: str, v: str):
        if u == v:
            self.loops.add(u)
        else:
            self.graph.add_edge(u, v)

    def has_edge(self, u: str, v: str) -> bool:
        return u in self.loops if u == v else self.graph.has_edge(u, v)

    def _order(self) -> Dict[str, int]:
        return {v: k for k, v in enumerate(self.vertices)}

    def edges(self) -> List[Tuple[str, str]]:
        order = self._order()
        pairs = [tuple(sorted(e, key=order.get)) for e in self.graph.edges()]
        return sorted(pairs, key=lambda e: (order[e[0]], order[e[1]]))

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return self.graph.number_of_edges()

    def without(self, removed: Iterable[str], drop_loops: bool = True) -> "ComponentGraph":
        removed = set(removed)
        out = ComponentGraph()
        for v in self.vertices:
            if v not in removed:
                out.add_vertex(v, self.labels[v])
        for u, v in self.edges():
            if u not in removed and v not in removed:
                out.add_edge(u, v)
        if not drop_loops:
            out.loops = {v for v in self.loops if v not in removed}
        return out

    def to_document(self) -> GraphDocument:
        order = self._order()
        return GraphDocument(
            vertices=list(self.vertices),
            edges=[list(e) for e in self.edges()],
            loops=sorted(self.loops, key=order.get),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, ComponentGraph):
            return NotImplemented
        return (set(self.vertices) == set(other.vertices)
                and {frozenset(e) for e in self.edges()} == {frozenset(e) for e in other.edges()}
                and self.loops == other.loops)


# ---------------------------------------------------------------------------
# Sampled graphs, n <= 4
# ---------------------------------------------------------------------------

def build_graph(n: int, trials: Optional[int] = None, seed: Optional[int] = None) -> ComponentGraph:
    """
    Full component graph of Lambda_n from sampled generic Ext

    Every component is sampled once per trial; a pair is joined when the
    minimum of ext1 over trials is zero.
    """
    trials = config.TRIALS if trials is None else trials
    seed = config.SEED if seed is None else seed
    comps = list(indec_components(n))
    labels = [f"m{k + 1}" for k in range(len(comps))]

    g = ComponentGraph()
    for label, m in zip(labels, comps):
        g.add_vertex(label, str(m))

    pending = set(combinations(range(len(comps)), 2)) | {(k, k) for k in range(len(comps))}
    for t in range(trials):
        samples = [sample_component(m, n, seed, t) for m in comps]
        for k, l in sorted(pending):
            if ext1_dim(samples[k], samples[l]) == 0:
                g.add_edge(labels[k], labels[l])
                pending.discard((k, l))
        toolkit_logger.debug(f"Lambda_{n} trial {t}: {len(pending)} pairs still nonzero")
        if not pending:
            break
    toolkit_logger.info(f"Built C(Lambda_{n}): {g.vertex_count} vertices, {g.edge_count} edges, "
                        f"{len(g.loops)} loops (seed {seed}, {trials} trials)")
    return g


def reduced_graph(g: ComponentGraph, n: int) -> ComponentGraph:
    """Delete the projective components and all loops"""
    comps = list(indec_components(n))
    projective = {f"m{comps.index(m) + 1}" for m in projective_components(n)}
    return g.without(projective)


def build_graph_stable(
    n: int,
    seeds: Sequence[int],
    trials: Optional[int] = None,
) -> Tuple[ComponentGraph, bool]:
    """
    Build with several seeds; on disagreement rebuild with ESCALATION_TRIALS

    Returns:
        The graph of the first seed and whether all seeds agreed
    """
    trials = config.TRIALS if trials is None else trials
    graphs = [build_graph(n, trials, s) for s in seeds]
    if all(g == graphs[0] for g in graphs[1:]):
        return graphs[0], True
    toolkit_logger.warning(f"Seeds {list(seeds)} disagree on C(Lambda_{n}); "
                           f"escalating to {config.ESCALATION_TRIALS} trials")
    graphs = [build_graph(n, config.ESCALATION_TRIALS, s) for s in seeds]
    stable = all(g == graphs[0] for g in graphs[1:])
    if not stable:
        toolkit_logger.warning(f"Seeds still disagree on C(Lambda_{n}) after escalation")
    return graphs[0], stable


def load_g4_fixture() -> Set[frozenset]:
    data = load_fixture("g4_edges.json")
    try:
        return {frozenset((f"m{u}", f"m{v}")) for u, v in data["edges"]}
    except (KeyError, TypeError, ValueError) as e:
        raise FixtureError(f"Malformed G4 edge fixture: {e}")


def compare_with_fixture(reduced: ComponentGraph) -> Tuple[List[Tuple[str, str]], List[Tuple[str, str]]]:
    """(edges only in the fixture, edges only in the graph)"""
    expected = load_g4_fixture()
    actual = {frozenset(e) for e in reduced.edges()}

    def ordered(edges):
        return sorted((tuple(sorted(e, key=lambda s: int(s[1:]))) for e in edges),
                      key=lambda e: (int(e[0][1:]), int(e[1][1:])))

    return ordered(expected - actual), ordered(actual - expected)


# ---------------------------------------------------------------------------
# Lattice graphs, n = 5
# ---------------------------------------------------------------------------

def root_label(d: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in d) + ")"


def build_graph_a5(roots: Sequence[RootVec], reading: Optional[CriticalReading] = None) -> ComponentGraph:
    """
    Graph on Schur roots and the projective components C1..C5

    Root pairs are joined by the lattice edge test; each C_j is joined to
    every vertex, itself included.
    """
    g = ComponentGraph()
    roots = list(dict.fromkeys(tuple(r) for r in roots))
    labels = [root_label(r) for r in roots]
    for label, r in zip(labels, roots):
        g.add_vertex(label, str(psi(delta_map(r))))
    for tag in PROJECTIVE_TAGS:
        g.add_vertex(tag)

    for k, d in enumerate(roots):
        for l in range(k, len(roots)):
            if edge(d, roots[l], reading):
                g.add_edge(labels[k], labels[l])
    for tag in PROJECTIVE_TAGS:
        for v in g.vertices:
            g.add_edge(tag, v)
    toolkit_logger.info(f"Built A5 slice graph: {len(roots)} roots, {g.edge_count} edges")
    return g


def realize_root(d: Sequence[int], seed: int, trial: int):
    """Generic Lambda_5 module of the component attached to a Schur root"""
    m: Multisegment = psi(delta_map(d))
    return fiber_sample(rep_of(m, 5), (seed, trial) + tuple(x + 1000 for x in d))


def sampled_edge_a5(d: Sequence[int], e: Sequence[int], trials: Optional[int] = None,
                    seed: Optional[int] = None) -> bool:
    """Edge between two Schur roots decided by sampled generic Ext on realized modules"""
    trials = config.TRIALS if trials is None else trials
    seed = config.SEED if seed is None else seed
    for t in range(trials):
        x, y = realize_root(d, seed, t), realize_root(e, seed, t)
        if ext1_dim(x, y) == 0:
            return True
    return False


def cross_check_a5(
    pairs: Sequence[Tuple[RootVec, RootVec]],
    trials: Optional[int] = None,
    seed: Optional[int] = None,
) -> Dict[str, List[Tuple[RootVec, RootVec]]]:
    """
    Compare the lattice edge test with sampled generic Ext

    Returns:
        Disagreeing pairs per critical-pair reading
    """
    out: Dict[str, List[Tuple[RootVec, RootVec]]] = {r.value: [] for r in CriticalReading}
    for d, e in pairs:
        sampled = sampled_edge_a5(d, e, trials, seed)
        for reading in CriticalReading:
            if edge(d, e, reading) != sampled:
                out[reading.value].append((tuple(d), tuple(e)))
    for reading, bad in out.items():
        level = toolkit_logger.info if not bad else toolkit_logger.warning
        level(f"A5 cross-check ({reading} reading): {len(pairs) - len(bad)}/{len(pairs)} pairs agree",
              extra={'verification': True})
    return out


# ---------------------------------------------------------------------------
# Cliques and export
# ---------------------------------------------------------------------------

def max_cliques(g: ComponentGraph) -> List[List[str]]:
    """All maximal cliques, loops ignored, in vertex order"""
    order = {v: k for k, v in enumerate(g.vertices)}
    cliques = [sorted(c, key=order.get) for c in nx.find_cliques(g.graph)]
    return sorted(cliques, key=lambda c: [order[v] for v in c])


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def export(g: ComponentGraph, fmt) -> str:
    """
    Render a graph as DOT or JSON

    Raises:
        ExportFormatError: For anything but "dot" or "json"
    """
    try:
        fmt = ExportFormat(fmt)
    except ValueError:
        raise ExportFormatError(f"Unknown export format {fmt!r}; use dot or json")
    if fmt == ExportFormat.JSON:
        return g.to_document().model_dump_json(indent=2)

    lines = ["graph components {"]
    for v in g.vertices:
        lines.append(f'  "{_dot_escape(v)}" [label="{_dot_escape(g.labels.get(v, v))}"];')
    order = {v: k for k, v in enumerate(g.vertices)}
    for v in sorted(g.loops, key=order.get):
        lines.append(f'  "{_dot_escape(v)}" -- "{_dot_escape(v)}";')
    for u, v in g.edges():
        lines.append(f'  "{_dot_escape(u)}" -- "{_dot_escape(v)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_json(text: str) -> ComponentGraph:
    try:
        doc = GraphDocument(**json.loads(text))
    except (json.JSONDecodeError, ValidationError, TypeError) as e:
        raise ToolkitError(f"Malformed graph document: {e}")
    g = ComponentGraph()
    for v in doc.vertices:
        g.add_vertex(v)
    known = set(doc.vertices)
    for pair in doc.edges:
        if len(pair) != 2 or not set(pair) <= known:
            raise ToolkitError(f"Edge {pair} does not join two listed vertices")
        g.add_edge(pair[0], pair[1])
    for v in doc.loops:
        if v not in known:
            raise ToolkitError(f"Loop at unknown vertex {v}")
        g.add_edge(v, v)
    return g
