"""Immutable bitmask graphs: builders, operators, components, isomorphism, I/O.

Vertices are the integers 0..n-1.  Adjacency is one n-bit integer per vertex,
so every neighbourhood operation is a single machine-word bit operation for
the orders this package handles (capped at 64).  Vertex sets are plain ints
used as bitmasks throughout; ``mask_from`` and ``bits`` convert between masks
and vertex iterables.

Product and join operators use row-major vertex order: the vertex (u, u') of
a product of g and h sits at index u * h.n + u', and a join places all of g
before all of h.  Certificates elsewhere in the package reference these
indices, so the ordering is part of the public contract.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

ORDER_CAP = 64


class GraphError(ValueError):
    pass


class UnknownGraphError(GraphError):
    """Requested named graph does not exist."""


class OrderCapError(GraphError):
    """Construction would exceed the 64-vertex bit-row cap."""


def mask_from(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitmask adjacency rows.

    Rows are symmetric and irreflexive; both are checked at construction.
    ``labels`` is optional provenance (e.g. block names in a construction)
    and never participates in equality or hashing.
    """

    n: int
    adj: tuple[int, ...]
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= ORDER_CAP:
            raise OrderCapError(f"order {self.n} outside 0..{ORDER_CAP}")
        if len(self.adj) != self.n:
            raise GraphError(f"{len(self.adj)} adjacency rows for order {self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} has bits beyond vertex {self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("label count does not match order")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(row.bit_count() for row in self.adj))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def is_regular(self) -> Optional[int]:
        """The common degree when the graph is regular, else None."""
        if self.n == 0:
            return 0
        degs = {row.bit_count() for row in self.adj}
        return degs.pop() if len(degs) == 1 else None


def from_edges(n: int, edges: Iterable[tuple[int, int]],
               labels: Optional[tuple[str, ...]] = None) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows), labels)


# ---------------------------------------------------------------------------
# named builders
# ---------------------------------------------------------------------------

def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, n: int) -> Graph:
    return from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def circulant(n: int, offsets: Iterable[int]) -> Graph:
    edges = []
    for s in offsets:
        if not 0 < s % n:
            raise GraphError(f"circulant offset {s} is 0 mod {n}")
        edges.extend((i, (i + s) % n) for i in range(n))
    return from_edges(n, edges)


def grid_lattice(s: int) -> Graph:
    """Rook's graph on an s-by-s board: same row or same column is adjacent."""
    if s < 1:
        raise GraphError("grid_lattice needs s >= 1")
    return cartesian(complete(s), complete(s))


# Two 4-regular 10-vertex graphs with identical adjacency spectrum but
# different forcing behaviour: a 6-cycle 0..5 plus four inner vertices.
_FIG1_LEFT = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
              (6, 1), (6, 2), (6, 5), (6, 9),
              (7, 0), (7, 1), (7, 3), (7, 8),
              (8, 2), (8, 3), (8, 4),
              (9, 0), (9, 4), (9, 5)]
_FIG1_RIGHT = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
               (6, 0), (6, 1), (6, 3), (6, 9),
               (7, 1), (7, 2), (7, 5), (7, 8),
               (8, 2), (8, 3), (8, 4),
               (9, 0), (9, 4), (9, 5)]


def fig1_left() -> Graph:
    return from_edges(10, _FIG1_LEFT)


def fig1_right() -> Graph:
    return from_edges(10, _FIG1_RIGHT)


def ex32_g() -> Graph:
    """A 6-cycle plus one isolated vertex (7 vertices)."""
    return from_edges(7, [(i, (i + 1) % 6) for i in range(6)])


def ex32_gprime() -> Graph:
    """Spider: centre 0 with three legs 0-1-2, 0-3-4, 0-5-6."""
    return from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


_NAMED = {
    "path": (1, lambda p: path(p[0])),
    "cycle": (1, lambda p: cycle(p[0])),
    "complete": (1, lambda p: complete(p[0])),
    "empty": (1, lambda p: empty(p[0])),
    "complete_bipartite": (2, lambda p: complete_bipartite(p[0], p[1])),
    "grid_lattice": (1, lambda p: grid_lattice(p[0])),
    "fig1_left": (0, lambda p: fig1_left()),
    "fig1_right": (0, lambda p: fig1_right()),
    "ex32_G": (0, lambda p: ex32_g()),
    "ex32_Gprime": (0, lambda p: ex32_gprime()),
    # circulant takes n followed by any number of offsets
    "circulant": (None, lambda p: circulant(p[0], p[1:])),
}


def named_graphs() -> tuple[str, ...]:
    return tuple(sorted(_NAMED))


def build_named(name: str, *params: int) -> Graph:
    """Build one of the named fixture graphs; raises on unknown names or bad params."""
    if name not in _NAMED:
        raise UnknownGraphError(f"unknown graph name {name!r}; known: {', '.join(named_graphs())}")
    arity, fn = _NAMED[name]
    if arity is not None and len(params) != arity:
        raise GraphError(f"{name} takes {arity} parameter(s), got {len(params)}")
    if name == "circulant" and len(params) < 2:
        raise GraphError("circulant takes n followed by at least one offset")
    for p in params:
        if p < 0:
            raise GraphError(f"negative parameter {p} for {name}")
    return fn(params)


# ---------------------------------------------------------------------------
# operators
# ---------------------------------------------------------------------------

def _check_cap(n: int, what: str) -> None:
    if n > ORDER_CAP:
        raise OrderCapError(f"{what} would have order {n} > cap {ORDER_CAP}")


def tensor(g: Graph, h: Graph) -> Graph:
    """Tensor (categorical) product: (u,u') ~ (v,v') iff u~v and u'~v'."""
    _check_cap(g.n * h.n, "tensor product")
    rows = []
    for u in range(g.n):
        for up in range(h.n):
            row = 0
            for v in bits(g.adj[u]):
                row |= h.adj[up] << (v * h.n)
            rows.append(row)
    return Graph(g.n * h.n, tuple(rows))


def cartesian(g: Graph, h: Graph) -> Graph:
    """Cartesian product: (u,u') ~ (v,v') iff u=v and u'~v', or u'=v' and u~v."""
    _check_cap(g.n * h.n, "cartesian product")
    rows = []
    for u in range(g.n):
        for up in range(h.n):
            row = h.adj[up] << (u * h.n)
            for v in bits(g.adj[u]):
                row |= 1 << (v * h.n + up)
            rows.append(row)
    return Graph(g.n * h.n, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides; g comes first."""
    _check_cap(g.n + h.n, "join")
    hfull = ((1 << h.n) - 1) << g.n
    gfull = (1 << g.n) - 1
    rows = [g.adj[u] | hfull for u in range(g.n)]
    rows += [(h.adj[u] << g.n) | gfull for u in range(h.n)]
    return Graph(g.n + h.n, tuple(rows))


def iterated_join(g: Graph, k: int) -> Graph:
    """k-fold self-join: 0 joins returns g itself."""
    if k < 0:
        raise GraphError("iterated_join needs k >= 0")
    out = g
    for _ in range(k):
        out = join(out, g)
    return out


def disjoint_union(g: Graph, h: Graph) -> Graph:
    _check_cap(g.n + h.n, "disjoint union")
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple((full & ~row) & ~(1 << v) for v, row in enumerate(g.adj)))


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of g; adjacent when they share an endpoint."""
    es = g.edges()
    _check_cap(len(es), "line graph")
    rows = [0] * len(es)
    for a, (u1, v1) in enumerate(es):
        for b in range(a + 1, len(es)):
            u2, v2 = es[b]
            if u1 in (u2, v2) or v1 in (u2, v2):
                rows[a] |= 1 << b
                rows[b] |= 1 << a
    return Graph(len(es), tuple(rows))


def relabel(g: Graph, perm: tuple[int, ...]) -> Graph:
    """Apply a permutation: old vertex v becomes perm[v]."""
    rows = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in bits(g.adj[v]):
            row |= 1 << perm[u]
        rows[perm[v]] = row
    return Graph(g.n, tuple(rows))


# ---------------------------------------------------------------------------
# components and induced subgraphs
# ---------------------------------------------------------------------------

def mask_components(adj, mask: int) -> list[int]:
    """Connected components of the subgraph induced on ``mask``, as masks."""
    comps = []
    rem = mask
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                f ^= low
                nxt |= adj[low.bit_length() - 1]
            nxt &= mask & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rem &= ~comp
    return comps


def components(g: Graph) -> list[int]:
    return mask_components(g.adj, g.full_mask)


def induced_subgraph(g: Graph, mask: int) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on the masked vertices plus the map from new to old indices."""
    verts = tuple(bits(mask))
    pos = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        row = 0
        for u in bits(g.adj[v] & mask):
            row |= 1 << pos[u]
        rows.append(row)
    return Graph(len(verts), tuple(rows)), verts


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


# ---------------------------------------------------------------------------
# isomorphism
# ---------------------------------------------------------------------------

def _joint_refine(g: Graph, h: Graph) -> tuple[list[int], list[int]]:
    # Iterated neighbourhood refinement with one colour table shared by both
    # graphs so colours stay comparable across them.
    cg = [g.degree(v) for v in range(g.n)]
    ch = [h.degree(v) for v in range(h.n)]
    ncolors = len(set(cg) | set(ch))
    while True:
        keys_g = [(cg[v], tuple(sorted(cg[u] for u in bits(g.adj[v])))) for v in range(g.n)]
        keys_h = [(ch[v], tuple(sorted(ch[u] for u in bits(h.adj[v])))) for v in range(h.n)]
        table = {k: i for i, k in enumerate(sorted(set(keys_g) | set(keys_h)))}
        cg = [table[k] for k in keys_g]
        ch = [table[k] for k in keys_h]
        if len(table) == ncolors:
            return cg, ch
        ncolors = len(table)


def is_isomorphic(g: Graph, h: Graph) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Decide isomorphism by colour refinement plus backtracking.

    Returns (True, mapping) with mapping[v] the image of v, or (False, None).
    """
    if g.n != h.n or g.m != h.m or g.degree_sequence() != h.degree_sequence():
        return False, None
    n = g.n
    if n == 0:
        return True, ()
    cg, ch = _joint_refine(g, h)
    if sorted(cg) != sorted(ch):
        return False, None

    color_mask_h: dict[int, int] = {}
    for w, c in enumerate(ch):
        color_mask_h[c] = color_mask_h.get(c, 0) | 1 << w
    cand = [color_mask_h.get(cg[v], 0) for v in range(n)]
    full = (1 << n) - 1
    img = [-1] * n
    state = [0, 0]  # mapped source mask, mapped image mask

    def pick() -> int:
        # most-constrained next vertex: maximal mapped neighbourhood, lowest index
        best, bestv = -1, -1
        for v in bits(full & ~state[0]):
            c = (g.adj[v] & state[0]).bit_count()
            if c > best:
                best, bestv = c, v
        return bestv

    def extend() -> bool:
        if state[0] == full:
            return True
        v = pick()
        required = 0
        for u in bits(g.adj[v] & state[0]):
            required |= 1 << img[u]
        for w in bits(cand[v] & ~state[1]):
            if h.adj[w] & state[1] == required:
                img[v] = w
                state[0] |= 1 << v
                state[1] |= 1 << w
                if extend():
                    return True
                state[0] &= ~(1 << v)
                state[1] &= ~(1 << w)
                img[v] = -1
        return False

    if extend():
        return True, tuple(img)
    return False, None


# ---------------------------------------------------------------------------
# I/O: graph6 and plain edge lists
# ---------------------------------------------------------------------------

def emit_graph6(g: Graph) -> str:
    """Standard graph6: size bytes then the upper triangle in column order."""
    n = g.n
    if n <= 62:
        head = chr(63 + n)
    else:
        head = "~" + chr(63 + (n >> 12 & 63)) + chr(63 + (n >> 6 & 63)) + chr(63 + (n & 63))
    stream = []
    for j in range(1, n):
        for i in range(j):
            stream.append(1 if g.has_edge(i, j) else 0)
    out = [head]
    for p in range(0, len(stream), 6):
        chunk = stream[p:p + 6] + [0] * max(0, p + 6 - len(stream))
        val = 0
        for b in chunk:
            val = val << 1 | b
        out.append(chr(63 + val))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 string")
    if s[0] == "~":
        if len(s) < 4 or s[1] == "~":
            raise GraphError("unsupported graph6 size encoding")
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if not 0 <= n <= ORDER_CAP:
        raise OrderCapError(f"graph6 order {n} outside 0..{ORDER_CAP}")
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise GraphError("graph6 body has wrong length")
    stream = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise GraphError(f"invalid graph6 character {ch!r}")
        stream.extend((val >> k) & 1 for k in range(5, -1, -1))
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if stream[pos]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return Graph(n, tuple(rows))


def emit_edgelist(g: Graph) -> str:
    return "\n".join(f"{u} {v}" for u, v in g.edges())


def parse_edgelist(text: str, n: Optional[int] = None) -> Graph:
    """One "u v" pair per line, 0-indexed.

    The order is max index + 1 unless ``n`` is given, so graphs whose last
    vertex is isolated need an explicit ``n``.
    """
    edges = []
    top = -1
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge-list line {line!r}")
        u, v = int(parts[0]), int(parts[1])
        edges.append((u, v))
        top = max(top, u, v)
    order = top + 1 if n is None else n
    return from_edges(order, edges)
