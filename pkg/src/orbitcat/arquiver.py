"""Auslander-Reiten quiver of the module category of a Dynkin quiver.

Knitting starts from the projective slice placed inside the translation
quiver ZQ (vertex set Z x Q0, arrows (k,i)->(k,j) and (k,j)->(k+1,i) for
each quiver arrow i->j, translation tau(k,v) = (k-1,v)) and repeatedly
closes meshes: dim of the new module is the sum over the mesh middle
minus dim of the mesh start.  Projective dimension vectors come from path
counting, keeping the whole construction independent of the root-system
enumeration used to cross-check it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolationError, NotDynkinError
from .quiver import DimVector, Quiver, classify

Pos = tuple[int, str]


def positive_roots(q: Quiver) -> list[DimVector]:
    """All positive roots of the underlying diagram, sorted lexicographically.

    Computed as the closure of the simple roots under the simple
    reflections s_i(d)_i = -d_i + sum of d_j over neighbors j of i.
    """
    classify(q)  # raises NotDynkinError when not ADE
    n = q.rank
    adj = [[q.vertex_index(w) for w in q.neighbors(v)] for v in q.vertices]

    def reflect(d: tuple[int, ...], i: int) -> tuple[int, ...]:
        out = list(d)
        out[i] = -d[i] + sum(d[j] for j in adj[i])
        return tuple(out)

    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots: set[tuple[int, ...]] = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for d in frontier:
            for i in range(n):
                r = reflect(d, i)
                if r not in roots:
                    roots.add(r)
                    nxt.append(r)
        frontier = nxt
    return sorted(r for r in roots if all(x >= 0 for x in r))


@dataclass
class ARQuiver:
    """Knitted AR quiver: modules with dim vectors, positions in ZQ,
    irreducible-map arrows, tau, and the P/I/S identifications."""

    quiver: Quiver
    dims: list[DimVector]            # module id -> dim vector
    pos: dict[int, Pos]              # module id -> ZQ position (column, row)
    at: dict[Pos, int]               # ZQ position -> module id
    arrows: list[tuple[int, int]]    # irreducible maps, by module ids
    tau: dict[int, int]              # undefined on projectives
    tau_inv: dict[int, int]          # undefined on injectives
    proj: dict[str, int]             # vertex -> module id of P_v
    inj: dict[str, int]              # vertex -> module id of I_v
    simple: dict[str, int]           # vertex -> module id of S_v

    @property
    def count(self) -> int:
        return len(self.dims)

    def is_projective(self, mod: int) -> bool:
        return mod in self._proj_set()

    def is_injective(self, mod: int) -> bool:
        return mod in self._inj_set()

    def _proj_set(self) -> set[int]:
        return set(self.proj.values())

    def _inj_set(self) -> set[int]:
        return set(self.inj.values())

    def name_of(self, mod: int) -> str:
        """Readable module name, preferring P over I over S over dim=()."""
        for v, i in self.proj.items():
            if i == mod:
                return f"P_{v}"
        for v, i in self.inj.items():
            if i == mod:
                return f"I_{v}"
        for v, i in self.simple.items():
            if i == mod:
                return f"S_{v}"
        return "dim=(" + ",".join(str(x) for x in self.dims[mod]) + ")"

    # window geometry helpers (columns of the shift-0 copy)
    @property
    def proj_col_min(self) -> int:
        return min(self.pos[i][0] for i in self.proj.values())

    @property
    def inj_col_min(self) -> int:
        return min(self.pos[i][0] for i in self.inj.values())

    @property
    def inj_col_max(self) -> int:
        return max(self.pos[i][0] for i in self.inj.values())

    @property
    def shift_stride(self) -> int:
        """Column offset between consecutive shift copies of the module
        category inside ZQ."""
        return self.inj_col_min - self.proj_col_min + 1


def _path_counts(q: Quiver) -> dict[str, dict[str, int]]:
    """counts[v][w] = number of directed paths v -> w (including length 0)."""
    order = q.topological_order()
    counts: dict[str, dict[str, int]] = {}
    for v in q.vertices:
        c = {w: 0 for w in q.vertices}
        c[v] = 1
        for u in order:
            if c[u]:
                for a in q.arrows_out(u):
                    c[a.target] += c[u]
        counts[v] = c
    return counts


def _projective_slice(q: Quiver) -> dict[str, int]:
    """Column of P_v inside ZQ: p_v = p_w + 1 for every arrow v -> w,
    normalized to minimum 0.  Exists since the underlying graph is a tree."""
    p = {q.vertices[0]: 0}
    frontier = [q.vertices[0]]
    while frontier:
        v = frontier.pop()
        for a in q.arrows_out(v):
            if a.target not in p:
                p[a.target] = p[v] - 1
                frontier.append(a.target)
        for a in q.arrows_in(v):
            if a.source not in p:
                p[a.source] = p[v] + 1
                frontier.append(a.source)
    lo = min(p.values())
    return {v: c - lo for v, c in p.items()}


def zq_arrows_out(q: Quiver, pos: Pos) -> list[Pos]:
    k, v = pos
    out = [(k, a.target) for a in q.arrows_out(v)]
    out += [(k + 1, a.source) for a in q.arrows_in(v)]
    return out


def zq_arrows_in(q: Quiver, pos: Pos) -> list[Pos]:
    k, v = pos
    inn = [(k, a.source) for a in q.arrows_in(v)]
    inn += [(k - 1, a.target) for a in q.arrows_out(v)]
    return inn


def knit_module_category(q: Quiver) -> ARQuiver:
    classify(q)  # raises NotDynkinError when not ADE
    counts = _path_counts(q)
    proj_dims = {
        v: tuple(counts[v][w] for w in q.vertices) for v in q.vertices
    }
    inj_dims = {
        v: tuple(counts[w][v] for w in q.vertices) for v in q.vertices
    }
    inj_by_dim = {d: v for v, d in inj_dims.items()}
    slice_cols = _projective_slice(q)
    topo = q.topological_order()

    dims: list[DimVector] = []
    pos: dict[int, Pos] = {}
    at: dict[Pos, int] = {}
    proj: dict[str, int] = {}
    inj: dict[str, int] = {}

    def place(p: Pos, d: DimVector) -> int:
        mod = len(dims)
        dims.append(d)
        pos[mod] = p
        at[p] = mod
        if d in inj_by_dim:
            inj[inj_by_dim[d]] = mod
        return mod

    for v in sorted(q.vertices, key=lambda u: (slice_cols[u], q.vertex_index(u))):
        proj[v] = place((slice_cols[v], v), proj_dims[v])

    col = 0
    max_col = max(slice_cols.values()) + 4 * q.rank * q.rank + 8
    while len(inj) < q.rank:
        if col > max_col:
            raise InvariantViolationError("knitting failed to terminate")
        for v in topo:
            src = (col, v)
            if src not in at or dims[at[src]] in inj_by_dim:
                continue
            middle = [at[p] for p in zq_arrows_out(q, src) if p in at]
            d = tuple(
                sum(dims[m][i] for m in middle) - dims[at[src]][i]
                for i in range(q.rank)
            )
            if any(x < 0 for x in d) or all(x == 0 for x in d):
                raise InvariantViolationError(
                    f"mesh at {src} produced invalid dimension vector {d}"
                )
            place((col + 1, v), d)
        col += 1

    arrows = sorted(
        (mod, at[p])
        for mod in range(len(dims))
        for p in zq_arrows_out(q, pos[mod])
        if p in at
    )
    tau = {
        at[(k, v)]: at[(k - 1, v)] for (k, v) in at if (k - 1, v) in at
    }
    tau_inv = {m2: m1 for m1, m2 in tau.items()}
    simple = {
        v: dims.index(tuple(1 if w == v else 0 for w in q.vertices))
        for v in q.vertices
    }
    return ARQuiver(
        quiver=q,
        dims=dims,
        pos=pos,
        at=at,
        arrows=arrows,
        tau=tau,
        tau_inv=tau_inv,
        proj=proj,
        inj=inj,
        simple=simple,
    )
