"""Quiver data model, DSL parser, ADE classification and the Euler form.

A quiver here is a finite connected acyclic directed graph without loops
or multiple arrows, i.e. an orientation of a simply-laced diagram.  Vertex
identity is the declared name string; everything downstream indexes
vertices densely in declaration order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import NotDynkinError, QuiverShapeError, QuiverSyntaxError

DimVector = tuple[int, ...]

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_ARROW_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)->([A-Za-z_][A-Za-z0-9_]*)$")


@dataclass(frozen=True)
class Arrow:
    idx: int
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    """Immutable quiver; validates shape invariants on construction."""

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertices)})
        self._validate()

    def _validate(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverShapeError("duplicate vertex names")
        seen_pairs = set()
        for a in self.arrows:
            if a.source not in self._index or a.target not in self._index:
                raise QuiverShapeError(f"arrow endpoint undeclared: {a.source}->{a.target}")
            if a.source == a.target:
                raise QuiverShapeError(f"loop at vertex {a.source}")
            key = (a.source, a.target)
            if key in seen_pairs or (a.target, a.source) in seen_pairs:
                raise QuiverShapeError(f"multiple arrow between {a.source} and {a.target}")
            seen_pairs.add(key)
        self._check_acyclic()
        self._check_connected()

    def _check_acyclic(self) -> None:
        indeg = {v: 0 for v in self.vertices}
        for a in self.arrows:
            indeg[a.target] += 1
        queue = [v for v in self.vertices if indeg[v] == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for a in self.arrows:
                if a.source == v:
                    indeg[a.target] -= 1
                    if indeg[a.target] == 0:
                        queue.append(a.target)
        if seen != len(self.vertices):
            raise QuiverShapeError("cycle detected")

    def _check_connected(self) -> None:
        if not self.vertices:
            raise QuiverShapeError("empty quiver")
        adj = {v: set() for v in self.vertices}
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        stack, seen = [self.vertices[0]], {self.vertices[0]}
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(self.vertices):
            raise QuiverShapeError("underlying graph is not connected")

    # -- basic accessors -------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.vertices)

    def vertex_index(self, name: str) -> int:
        return self._index[name]

    def arrows_out(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def arrows_in(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def neighbors(self, v: str) -> list[str]:
        out = [a.target for a in self.arrows_out(v)]
        inn = [a.source for a in self.arrows_in(v)]
        return sorted(set(out + inn))

    def topological_order(self) -> list[str]:
        """Vertices in a fixed topological sort (sources first, ties by
        declaration order)."""
        indeg = {v: len(self.arrows_in(v)) for v in self.vertices}
        order: list[str] = []
        ready = [v for v in self.vertices if indeg[v] == 0]
        while ready:
            v = ready.pop(0)
            order.append(v)
            for a in self.arrows_out(v):
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    # keep declaration order among newly ready vertices
                    ready.append(a.target)
                    ready.sort(key=self.vertex_index)
        return order


@dataclass(frozen=True)
class DynkinClass:
    """ADE series/rank plus a deterministic diagram-node -> vertex map."""

    series: str
    rank: int
    labeling: tuple[tuple[int, str], ...]

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"


def parse_quiver(text: str) -> Quiver:
    """Parse the quiver DSL.

    Grammar: ``vertices <name>+`` then ``arrows (<src>-><dst>)*``; tokens
    separated by whitespace or ``;``; ``#`` starts a comment to end of line.
    """
    tokens: list[tuple[str, int, int]] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        col = 1
        for piece in re.split(r"([;\s])", line):
            if piece and piece not in (";",) and not piece.isspace():
                tokens.append((piece, ln, col))
            col += len(piece)
    if not tokens:
        raise QuiverSyntaxError("empty input", 1, 1)

    tok, ln, col = tokens[0]
    if tok != "vertices":
        raise QuiverSyntaxError(f"expected 'vertices', got {tok!r}", ln, col)

    names: list[str] = []
    i = 1
    while i < len(tokens) and tokens[i][0] != "arrows":
        tok, ln, col = tokens[i]
        if not _NAME_RE.match(tok):
            raise QuiverSyntaxError(f"invalid vertex name {tok!r}", ln, col)
        if tok in names:
            raise QuiverSyntaxError(f"duplicate vertex name {tok!r}", ln, col)
        names.append(tok)
        i += 1
    if not names:
        raise QuiverSyntaxError("no vertices declared", ln, col)
    if i == len(tokens):
        raise QuiverSyntaxError("expected 'arrows' statement", ln, col)

    arrows: list[Arrow] = []
    for tok, ln, col in tokens[i + 1 :]:
        m = _ARROW_RE.match(tok)
        if not m:
            raise QuiverSyntaxError(f"expected '<src>-><dst>', got {tok!r}", ln, col)
        src, dst = m.group(1), m.group(2)
        for end in (src, dst):
            if end not in names:
                raise QuiverSyntaxError(f"arrow endpoint undeclared: {end!r}", ln, col)
        arrows.append(Arrow(len(arrows), src, dst))

    return Quiver(tuple(names), tuple(arrows))


def _legs(adj: dict[str, list[str]], center: str) -> list[list[str]]:
    """Paths from a degree-3 vertex to the leaf of each branch."""
    legs = []
    for start in sorted(adj[center]):
        leg = [start]
        prev, cur = center, start
        while len(adj[cur]) == 2:
            nxt = next(w for w in adj[cur] if w != prev)
            leg.append(nxt)
            prev, cur = cur, nxt
        legs.append(leg)
    return legs


def classify(q: Quiver) -> DynkinClass:
    """Classify the underlying graph as an ADE diagram or raise NotDynkinError.

    The labeling maps abstract diagram nodes 1..n to quiver vertices with
    node 1 at the lexicographically least admissible end.
    """
    n = q.rank
    if len(q.arrows) != n - 1:
        raise NotDynkinError("underlying graph is not a tree")
    adj: dict[str, list[str]] = {v: q.neighbors(v) for v in q.vertices}
    degrees = sorted(len(adj[v]) for v in q.vertices)
    if degrees and degrees[-1] > 3:
        raise NotDynkinError("vertex of degree > 3")
    branch = [v for v in q.vertices if len(adj[v]) == 3]
    if len(branch) > 1:
        raise NotDynkinError("more than one branch vertex")

    if not branch:
        # path graph: type A
        if n == 1:
            return DynkinClass("A", 1, ((1, q.vertices[0]),))
        ends = sorted(v for v in q.vertices if len(adj[v]) == 1)
        start = ends[0]
        order = [start]
        prev: str | None = None
        while len(order) < n:
            cur = order[-1]
            nxt = next(w for w in adj[cur] if w != prev)
            order.append(nxt)
            prev = cur
        return DynkinClass("A", n, tuple((i + 1, v) for i, v in enumerate(order)))

    center = branch[0]
    legs = sorted(_legs(adj, center), key=lambda leg: (len(leg), leg[0]))
    lengths = tuple(len(leg) for leg in legs)
    if lengths[0] != 1:
        raise NotDynkinError(f"leg lengths {lengths} are not ADE")
    if lengths[1] == 1:
        series, rank = "D", lengths[2] + 3
    elif lengths[1] == 2 and lengths[2] in (2, 3, 4):
        series, rank = "E", lengths[2] + 4
    else:
        raise NotDynkinError(f"leg lengths {lengths} are not ADE")
    if rank != n:
        raise NotDynkinError("leg lengths inconsistent with vertex count")

    # Deterministic labeling: long leg outward = nodes 1.., center next,
    # short legs last, each leg read leaf-to-center.
    nodes: list[str] = list(reversed(legs[-1])) + [center]
    for leg in legs[:-1]:
        nodes.extend(leg)
    return DynkinClass(series, rank, tuple((i + 1, v) for i, v in enumerate(nodes)))


def euler_form(q: Quiver, d: DimVector, e: DimVector) -> int:
    """Homological Euler form: sum(d_v e_v) - sum over arrows i->j of d_i e_j."""
    if len(d) != q.rank or len(e) != q.rank:
        raise ValueError("dimension vector length mismatch")
    total = sum(dv * ev for dv, ev in zip(d, e))
    for a in q.arrows:
        total -= d[q.vertex_index(a.source)] * e[q.vertex_index(a.target)]
    return total


def symmetric_form(q: Quiver, d: DimVector, e: DimVector) -> int:
    return euler_form(q, d, e) + euler_form(q, e, d)


_PRESET_RE = re.compile(r"^([ADE])(\d+)$")


def dynkin_quiver(name: str, orientation: str = "default") -> Quiver:
    """Build a preset Dynkin quiver, e.g. ``A3`` or ``D4``.

    Default orientations: type A is the linear chain a1->a2->...; types D/E
    point every edge toward the branch vertex along its leg, with the long
    chain oriented in increasing index order.  ``orientation`` may be
    ``default``/``linear`` (as above), ``sink`` (every edge toward the
    canonical center) or ``source`` (every edge away from it).
    """
    m = _PRESET_RE.match(name.strip())
    if not m:
        raise NotDynkinError(f"unrecognized Dynkin name {name!r}")
    series, rank = m.group(1), int(m.group(2))
    if rank < 1 or (series == "D" and rank < 4) or (series == "E" and rank not in (6, 7, 8)):
        raise NotDynkinError(f"unsupported Dynkin type {name}")

    if series == "A":
        names = [f"a{i}" for i in range(1, rank + 1)]
        edges = [(names[i], names[i + 1]) for i in range(rank - 1)]
        center = names[-1]
    elif series == "D":
        names = [f"d{i}" for i in range(1, rank + 1)]
        center = names[rank - 3]
        edges = [(names[i], names[i + 1]) for i in range(rank - 3)]
        edges += [(names[rank - 2], center), (names[rank - 1], center)]
    else:
        names = [f"e{i}" for i in range(1, rank + 1)]
        center = names[2]
        edges = [(names[i], names[i + 1]) for i in range(rank - 2)]
        edges.append((names[rank - 1], center))

    if orientation in ("default", "linear"):
        pairs = edges
    elif orientation in ("sink", "source"):
        # orient each edge toward (sink) or away from (source) the center
        dist = _tree_distances(names, edges, center)
        pairs = []
        for u, w in edges:
            toward = (u, w) if dist[w] < dist[u] else (w, u)
            pairs.append(toward if orientation == "sink" else toward[::-1])
    else:
        raise ValueError(f"unknown orientation {orientation!r}")

    arrows = tuple(Arrow(i, s, t) for i, (s, t) in enumerate(pairs))
    return Quiver(tuple(names), arrows)


def _tree_distances(names: list[str], edges: list[tuple[str, str]], root: str) -> dict[str, int]:
    adj: dict[str, list[str]] = {v: [] for v in names}
    for u, w in edges:
        adj[u].append(w)
        adj[w].append(u)
    dist = {root: 0}
    frontier = [root]
    while frontier:
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    return dist
