"""Clause hypergraph, induced pair multigraphs, components, and gadget words.

Vertices are (player, question) generators; every clause is a hyperedge
through one vertex per player, and the induced graph on two players is a
bipartite multigraph with one edge per clause. Connectivity splits a game
into independent subgames. The spanning-tree path words and the kept-pair
gadget subsequences built here are the raw material of the constructive
refutation pipeline.

All structures are deterministic: components are numbered by their smallest
vertex, representatives are the smallest-index question on the far side,
BFS explores neighbours ordered by (question index, clause index), and
hyperedge paths are minimal length by BFS over clauses.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .games import Clause, Game
from .words import ClauseWord

Vertex = tuple[int, int]  # (player, question), 0-based


@dataclass(frozen=True)
class ClauseHypergraph:
    game: Game
    component_id: dict[Vertex, int]
    num_components: int

    def vertices(self):
        return [
            (a, q) for a in range(self.game.players) for q in range(self.game.alphabet)
        ]

    def clause_component(self, i: int) -> int:
        return self.component_id[(0, self.game.clauses[i].questions[0])]

    def is_connected(self) -> bool:
        """Every clause sits in one component; isolated (never-asked)
        vertices don't count, they can be dropped from the game group."""
        comps = {self.clause_component(i) for i in range(self.game.num_clauses)}
        return len(comps) == 1


def build_hypergraph(game: Game) -> ClauseHypergraph:
    adj: dict[Vertex, set[Vertex]] = {v: set() for v in (
        (a, q) for a in range(game.players) for q in range(game.alphabet)
    )}
    for c in game.clauses:
        verts = [(a, q) for a, q in enumerate(c.questions)]
        for v in verts:
            adj[v].update(w for w in verts if w != v)
    component_id: dict[Vertex, int] = {}
    comp = 0
    for start in sorted(adj):
        if start in component_id:
            continue
        queue = deque([start])
        component_id[start] = comp
        while queue:
            v = queue.popleft()
            for w in sorted(adj[v]):
                if w not in component_id:
                    component_id[w] = comp
                    queue.append(w)
        comp += 1
    return ClauseHypergraph(game=game, component_id=component_id, num_components=comp)


@dataclass(frozen=True)
class ComponentGame:
    """One connected piece, with maps back to the original instance."""

    game: Game
    clause_map: tuple[int, ...]  # new clause index -> original clause index
    question_map: tuple[tuple[int, ...], ...]  # [player][new q] -> original q


def decompose_components(game: Game) -> list[ComponentGame]:
    """Partition the clause multiset by hypergraph component and re-compact
    question indices per player; unused questions are dropped."""
    hg = build_hypergraph(game)
    by_comp: dict[int, list[int]] = {}
    for i in range(game.num_clauses):
        by_comp.setdefault(hg.clause_component(i), []).append(i)
    out = []
    for comp in sorted(by_comp):
        indices = by_comp[comp]
        used = [sorted({game.clauses[i].questions[a] for i in indices})
                for a in range(game.players)]
        remap = [{q: j for j, q in enumerate(qs)} for qs in used]
        alphabet = max(len(qs) for qs in used)
        clauses = tuple(
            Clause(
                tuple(remap[a][q] for a, q in enumerate(game.clauses[i].questions)),
                game.clauses[i].parity,
            )
            for i in indices
        )
        out.append(
            ComponentGame(
                game=Game(players=game.players, alphabet=alphabet, clauses=clauses),
                clause_map=tuple(indices),
                question_map=tuple(tuple(qs) for qs in used),
            )
        )
    return out


class PairGraph:
    """Induced bipartite multigraph on two players with spanning-tree paths.

    One representative vertex is fixed per component, always on the `beta`
    side (smallest question index there); every vertex stores the clause
    sequence of its tree path to the representative. Paths from an
    alpha-side vertex have odd clause count, from a beta-side vertex even.
    """

    def __init__(self, game: Game, alpha: int, beta: int):
        if alpha == beta:
            raise ValueError("need two distinct players")
        self.game = game
        self.alpha = alpha
        self.beta = beta
        adj: dict[Vertex, list[tuple[Vertex, int]]] = {}
        for q in range(game.alphabet):
            adj[(alpha, q)] = []
            adj[(beta, q)] = []
        for i, c in enumerate(game.clauses):
            va = (alpha, c.questions[alpha])
            vb = (beta, c.questions[beta])
            adj[va].append((vb, i))
            adj[vb].append((va, i))
        for v in adj:
            adj[v].sort(key=lambda e: (e[0][1], e[1]))
        self._adj = adj

        self.component_id: dict[Vertex, int] = {}
        comp = 0
        for start in sorted(adj):
            if start not in self.component_id:
                self._flood(start, comp)
                comp += 1
        self.num_components = comp

        self.representative: dict[int, Vertex] = {}
        for v in sorted(adj):
            c = self.component_id[v]
            if c not in self.representative and v[0] == beta:
                self.representative[c] = v

        # Parent pointers of BFS trees rooted at the representatives.
        self._parent: dict[Vertex, tuple[Vertex, int]] = {}
        for rep in self.representative.values():
            queue = deque([rep])
            seen = {rep}
            while queue:
                v = queue.popleft()
                for w, i in self._adj[v]:
                    if w not in seen:
                        seen.add(w)
                        self._parent[w] = (v, i)
                        queue.append(w)

    def _flood(self, start: Vertex, comp: int):
        queue = deque([start])
        self.component_id[start] = comp
        while queue:
            v = queue.popleft()
            for w, _ in self._adj[v]:
                if w not in self.component_id:
                    self.component_id[w] = comp
                    queue.append(w)

    def rep_of(self, v: Vertex) -> Vertex:
        """Component representative (beta side) of an alpha- or beta-vertex."""
        if v not in self.component_id:
            raise KeyError(f"unknown vertex {v}")
        comp = self.component_id[v]
        if comp not in self.representative:
            raise KeyError(f"component of {v} has no {self.beta}-side vertex")
        return self.representative[comp]

    def path_word(self, v: Vertex) -> ClauseWord:
        """Tree path from v to its representative as a clause sequence.

        The reduced word projects to v's letter on v's own side and to the
        representative's letter on the other side, interior letters
        cancelling in adjacent pairs.
        """
        rep = self.rep_of(v)
        indices = []
        cur = v
        while cur != rep:
            cur, i = self._parent[cur]
            indices.append(i)
        return ClauseWord.from_indices(indices)


def hyperedge_path(game: Game, start: Vertex, goal: Vertex) -> tuple[int, ...]:
    """Minimal-length clause sequence connecting two vertices: the first
    clause contains start, the last contains goal, and consecutive clauses
    share a vertex. Empty iff start == goal."""
    if start == goal:
        return ()

    def contains(i, v):
        return game.clauses[i].questions[v[0]] == v[1]

    sources = [i for i in range(game.num_clauses) if contains(i, start)]
    prev: dict[int, int | None] = {}
    queue = deque()
    for i in sources:
        prev[i] = None
        queue.append(i)
    adj: dict[int, list[int]] = {}
    verts = [
        [(a, q) for a, q in enumerate(game.clauses[i].questions)]
        for i in range(game.num_clauses)
    ]
    by_vertex: dict[Vertex, list[int]] = {}
    for i, vs in enumerate(verts):
        for v in vs:
            by_vertex.setdefault(v, []).append(i)
    for i in range(game.num_clauses):
        nbrs = sorted({j for v in verts[i] for j in by_vertex[v] if j != i})
        adj[i] = nbrs
    end = None
    for i in sources:
        if contains(i, goal):
            end = i
            break
    while queue and end is None:
        i = queue.popleft()
        for j in adj[i]:
            if j not in prev:
                prev[j] = i
                if contains(j, goal):
                    end = j
                    break
                queue.append(j)
    if end is None:
        raise ValueError(f"no path between {start} and {goal}")
    path = []
    cur: int | None = end
    while cur is not None:
        path.append(cur)
        cur = prev[cur]
    return tuple(reversed(path))


@dataclass(frozen=True)
class GadgetWord:
    """Kept-pair subsequence of a hyperedge path.

    base_path is the full minimal path; kept_pairs lists the adjacent clause
    pairs that cancel on the kept player (both clauses ask it the same
    question). Minimality makes the kept pairs disjoint.
    """

    base_path: tuple[int, ...]
    kept_pairs: tuple[tuple[int, int], ...]

    def clause_word(self) -> ClauseWord:
        return ClauseWord.from_indices([i for pair in self.kept_pairs for i in pair])


def gadget_word(game: Game, pg: PairGraph, question: int) -> GadgetWord:
    """Gadget for a third-player question relative to pg = PairGraph(2, beta).

    Walks the minimal hyperedge path from the question's pair-graph
    representative to the smallest question asked of player beta, keeping
    the adjacent pairs that agree on the other player of {1, 2}. Requires a
    connected game.
    """
    if pg.alpha != 2 or pg.beta not in (0, 1):
        raise ValueError("gadgets pair player 3 with player 1 or 2")
    hg = build_hypergraph(game)
    if not hg.is_connected():
        raise ValueError("gadget words need a connected clause hypergraph")
    beta = pg.beta
    other = 1 - beta
    rep = pg.rep_of((pg.alpha, question))
    target = (beta, min(c.questions[beta] for c in game.clauses))
    path = hyperedge_path(game, rep, target)
    kept = []
    r = 0
    while r + 1 < len(path):
        i, j = path[r], path[r + 1]
        if game.clauses[i].questions[other] == game.clauses[j].questions[other]:
            kept.append((i, j))
            r += 2
        else:
            r += 1
    return GadgetWord(base_path=path, kept_pairs=tuple(kept))


def hypergraph_dot(game: Game) -> str:
    """DOT rendering with clauses star-expanded into their own nodes."""
    lines = ["graph clauses {", "  node [shape=circle];"]
    hg = build_hypergraph(game)
    for a in range(game.players):
        for q in range(game.alphabet):
            comp = hg.component_id[(a, q)]
            lines.append(f'  "x{q + 1}^({a + 1})" [tooltip="component {comp}"];')
    lines.append("  node [shape=point];")
    for i, c in enumerate(game.clauses):
        lines.append(f'  "h{i + 1}" [xlabel="h{i + 1}"];')
        for a, q in enumerate(c.questions):
            lines.append(f'  "h{i + 1}" -- "x{q + 1}^({a + 1})";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def pair_graph_dot(pg: PairGraph) -> str:
    """DOT rendering of a pair multigraph; representatives are colored and
    spanning-tree edges highlighted."""
    game = pg.game
    reps = set(pg.representative.values())
    tree_edges = set()
    for v in pg.component_id:
        if v in pg._parent:
            w, i = pg._parent[v]
            tree_edges.add(i)
    lines = ["graph pair {", "  node [shape=circle];"]
    for side in (pg.alpha, pg.beta):
        for q in range(game.alphabet):
            v = (side, q)
            color = ' color=red' if v in reps else ""
            lines.append(
                f'  "x{q + 1}^({side + 1})"'
                f' [tooltip="component {pg.component_id[v]}"{color}];'
            )
    for i, c in enumerate(game.clauses):
        va, vb = (pg.alpha, c.questions[pg.alpha]), (pg.beta, c.questions[pg.beta])
        attr = ' [color=blue]' if i in tree_edges else ""
        lines.append(
            f'  "x{va[1] + 1}^({va[0] + 1})" -- "x{vb[1] + 1}^({vb[0] + 1})"{attr};'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
