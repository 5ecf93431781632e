"""Bipartite-graph view of a state under a kept/dropped column partition.

Each term becomes one edge joining its kept-column word (side A) to its
dropped-column word (side B).  Two degree rules characterize uniform
reductions for states whose terms all carry one common phase:

* diagonality (rule A'): every side-B vertex has degree <= 1;
* uniformity (rule B'): all d**k side-A vertices have equal degree.

Checking both rules over every partition certifies k-uniformity for that
phase class; states with mixed phases must use the spectral certifier.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, product
from typing import NamedTuple, Sequence, Tuple

from .errors import ParameterViolation, ParseError, PhasesPresent
from .states import DIGITS36, PureState, _validated_subset

_PHASE_EQ_TOL = 1e-12


@dataclass(frozen=True)
class BipartiteGraph:
    """All d**k kept-words (side A), all d**(N-k) dropped-words (side B),
    and one phase-annotated edge per state term."""

    qudits: int
    levels: int
    kept: Tuple[int, ...]
    edges: Tuple[Tuple[str, str, complex], ...]

    @property
    def dropped(self) -> Tuple[int, ...]:
        return tuple(i for i in range(self.qudits) if i not in self.kept)

    @property
    def vertices_a(self) -> Tuple[str, ...]:
        return _all_words(self.levels, len(self.kept))

    @property
    def vertices_b(self) -> Tuple[str, ...]:
        return _all_words(self.levels, self.qudits - len(self.kept))


def _all_words(d: int, length: int) -> Tuple[str, ...]:
    return tuple("".join(DIGITS36[v] for v in t)
                 for t in product(range(d), repeat=length))


def graph_from_state(state: PureState, keep: Sequence[int]) -> BipartiteGraph:
    """Split every term's word across the partition; phases ride along as
    edge annotations and do not affect the topology."""
    kept = _validated_subset(keep, state.qudits)
    dropped = tuple(i for i in range(state.qudits) if i not in kept)
    edges = tuple(("".join(word[i] for i in kept),
                   "".join(word[i] for i in dropped),
                   phase)
                  for word, phase in state.terms)
    return BipartiteGraph(state.qudits, state.levels, kept, edges)


class RuleCheck(NamedTuple):
    """diagonality = rule A' (B-degrees <= 1);
    uniformity = rule B' (all A-degrees equal, zeros included)."""

    diagonality: bool
    uniformity: bool


def check_rules(graph: BipartiteGraph) -> RuleCheck:
    b_degree: dict = {}
    a_degree = {w: 0 for w in graph.vertices_a}
    for a, b, _ in graph.edges:
        a_degree[a] += 1
        b_degree[b] = b_degree.get(b, 0) + 1
    diagonality = all(v <= 1 for v in b_degree.values())
    degrees = set(a_degree.values())
    return RuleCheck(diagonality, len(degrees) == 1)


def _require_common_phase(state: PureState) -> None:
    first = state.terms[0][1]
    if any(abs(p - first) > _PHASE_EQ_TOL for _, p in state.terms):
        raise PhasesPresent(
            "graph rules apply only to states with one common phase; "
            "use the spectral certifier for mixed phases")


def is_k_uniform_by_graphs(state: PureState, k: int) -> bool:
    """Both degree rules on every C(N, k) partition.  Only valid for states
    whose terms share one phase (raises PhasesPresent otherwise)."""
    n = state.qudits
    if not 1 <= k <= n - 1:
        raise ParameterViolation(f"k must be in 1..{n - 1}, got {k}")
    _require_common_phase(state)
    for kept in combinations(range(n), k):
        rules = check_rules(graph_from_state(state, kept))
        if not (rules.diagonality and rules.uniformity):
            return False
    return True


def graphs_identical(state: PureState, k: int) -> bool:
    """True iff the edge multisets -- as (kept-word, dropped-word) label
    pairs -- coincide across all C(N, k) partitions."""
    n = state.qudits
    if not 1 <= k <= n - 1:
        raise ParameterViolation(f"k must be in 1..{n - 1}, got {k}")
    _require_common_phase(state)
    reference = None
    for kept in combinations(range(n), k):
        graph = graph_from_state(state, kept)
        labels = sorted((a, b) for a, b, _ in graph.edges)
        if reference is None:
            reference = labels
        elif labels != reference:
            return False
    return True


def is_product_across(graph: BipartiteGraph) -> bool:
    """Advisory separability flag: the state factorizes across this
    partition iff the edge set is exactly (active A) x (active B)."""
    pairs = {(a, b) for a, b, _ in graph.edges}
    active_a = {a for a, _ in pairs}
    active_b = {b for _, b in pairs}
    return pairs == {(a, b) for a in active_a for b in active_b}


# ---------------------------------------------------------------------------
# adjacency matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AdjacencyMatrix:
    """0/1 grid M with one row per kept-word and one column per
    dropped-word; M[a][b] = 1 iff the state holds the interleaved word."""

    matrix: Tuple[Tuple[int, ...], ...]
    qudits: int
    levels: int
    kept: Tuple[int, ...]


def adjacency(graph: BipartiteGraph) -> AdjacencyMatrix:
    index_a = {w: i for i, w in enumerate(graph.vertices_a)}
    index_b = {w: i for i, w in enumerate(graph.vertices_b)}
    grid = [[0] * len(index_b) for _ in index_a]
    for a, b, _ in graph.edges:
        grid[index_a[a]][index_b[b]] = 1
    return AdjacencyMatrix(tuple(map(tuple, grid)), graph.qudits,
                           graph.levels, graph.kept)


def state_from_adjacency(matrix: AdjacencyMatrix) -> PureState:
    """One +1 term per set bit; the kept/dropped words are re-interleaved
    back into full words using the partition metadata."""
    kept = matrix.kept
    dropped = tuple(i for i in range(matrix.qudits) if i not in kept)
    words_a = _all_words(matrix.levels, len(kept))
    words_b = _all_words(matrix.levels, len(dropped))
    if len(matrix.matrix) != len(words_a) or any(
            len(row) != len(words_b) for row in matrix.matrix):
        raise ParameterViolation("matrix shape does not match the partition")
    terms = []
    for i, row in enumerate(matrix.matrix):
        for j, bit in enumerate(row):
            if bit not in (0, 1):
                raise ParameterViolation("matrix entries must be 0 or 1")
            if bit:
                chars = [""] * matrix.qudits
                for pos, ch in zip(kept, words_a[i]):
                    chars[pos] = ch
                for pos, ch in zip(dropped, words_b[j]):
                    chars[pos] = ch
                terms.append(("".join(chars), complex(1.0)))
    if not terms:
        raise ParameterViolation("matrix has no set bits")
    return PureState(matrix.qudits, matrix.levels, tuple(terms))


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------

def to_dot(graph: BipartiteGraph) -> str:
    """Graphviz text with the two sides as ranked clusters; vertex order is
    the canonical word order and partition labels are 1-based."""
    kept_labels = ",".join(str(c + 1) for c in graph.kept)
    dropped_labels = ",".join(str(c + 1) for c in graph.dropped)
    lines = ["graph state {", "  rankdir=LR;"]
    lines.append("  subgraph cluster_a {")
    lines.append(f'    label="kept qudits {{{kept_labels}}}";')
    lines.append("    rank=same;")
    for w in graph.vertices_a:
        lines.append(f'    "A_{w}" [label="{w}"];')
    lines.append("  }")
    lines.append("  subgraph cluster_b {")
    lines.append(f'    label="dropped qudits {{{dropped_labels}}}";')
    lines.append("    rank=same;")
    for w in graph.vertices_b:
        lines.append(f'    "B_{w}" [label="{w}"];')
    lines.append("  }")
    for a, b, phase in graph.edges:
        if abs(phase - 1.0) <= _PHASE_EQ_TOL:
            lines.append(f'  "A_{a}" -- "B_{b}";')
        else:
            lines.append(f'  "A_{a}" -- "B_{b}" [label="{phase:.6g}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(graph: BipartiteGraph) -> str:
    """Stable schema: {n, d, k, partition (1-based), vertices_a, vertices_b,
    edges: [[a_word, b_word, [re, im]], ...]}."""
    doc = {
        "n": graph.qudits,
        "d": graph.levels,
        "k": len(graph.kept),
        "partition": [c + 1 for c in graph.kept],
        "vertices_a": list(graph.vertices_a),
        "vertices_b": list(graph.vertices_b),
        "edges": [[a, b, [phase.real, phase.imag]]
                  for a, b, phase in graph.edges],
    }
    return json.dumps(doc, indent=2) + "\n"


def graph_from_json(text: str) -> BipartiteGraph:
    """Inverse of to_json."""
    try:
        doc = json.loads(text)
        kept = tuple(int(c) - 1 for c in doc["partition"])
        edges = tuple((str(a), str(b), complex(re, im))
                      for a, b, (re, im) in doc["edges"])
        graph = BipartiteGraph(int(doc["n"]), int(doc["d"]), kept, edges)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad graph JSON: {exc}") from exc
    if list(graph.vertices_a) != list(doc["vertices_a"]) or \
            list(graph.vertices_b) != list(doc["vertices_b"]):
        raise ParseError("vertex lists do not match the declared partition")
    return graph
