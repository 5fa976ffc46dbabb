"""Cospectral-pair constructions: partition switching and product/join families.

The central tool is partition switching (``gm_switch``): given a partition
{X1..Xl, Y} of the vertices where each part induces a constant-degree
pattern against every part and every outside vertex sees 0, half, or all of
each part, complementing the half-neighbourhoods yields a graph with the
same adjacency spectrum.  Everything else in this module assembles inputs
for which switching (or a join/product identity) provably separates zero
forcing behaviour while preserving a spectrum:

* ``theorem51_build``      join one seed with a long path, leave the other as
                           a spare component, and switch the union of seeds.
* ``regular_construction`` a 2k-regular graph on 6k vertices built from a
                           circulant core plus clique/coclique blocks,
                           switched over the core and the clique.
* ``corollary52_family``   torus pairs whose forcing gap grows linearly while
                           the switched pair stays cospectral.
* ``tensor_family``        tensor with a complete graph, scaling a skew
                           forcing difference while keeping cospectrality.
* ``join_family``          join with a complete graph, shifting forcing
                           numbers by r while keeping Laplacian cospectrality.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import graphs
from .graphs import (Graph, bits, cartesian, complete, cycle, disjoint_union,
                     emit_graph6, fig1_left, fig1_right, is_connected,
                     is_isomorphic, join, mask_from, path)
from .forcing import Rule, closure, zero_forcing_number
from .spectra import MatrixKind, cospectral
from .skew_rank import SkewWitness, max_nullity_witness_search


class PreconditionError(ValueError):
    """One or more construction preconditions failed; lists each violation."""

    def __init__(self, problems: Sequence[str]):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class InvalidPartitionError(ValueError):
    def __init__(self, validation: "SwitchingValidation"):
        self.validation = validation
        super().__init__("; ".join(validation.issues) or "invalid switching partition")


# ---------------------------------------------------------------------------
# switching partitions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SwitchingValidation:
    """Structured validation: per-part cross counts and per-outside-vertex counts."""

    ok: bool
    part_counts: tuple[tuple[Optional[int], ...], ...]  # [i][j] = neighbours in part j of a part-i vertex
    outside_counts: tuple[tuple[int, tuple[int, ...]], ...]  # (vertex, counts per part)
    issues: tuple[str, ...]

    def to_json(self) -> dict:
        return {"ok": self.ok,
                "part_counts": [list(row) for row in self.part_counts],
                "outside_counts": {str(v): list(c) for v, c in self.outside_counts},
                "issues": list(self.issues)}


@dataclass(frozen=True)
class SwitchingPartition:
    parts: tuple[int, ...]  # vertex masks X1..Xl
    rest: int               # mask of Y
    validation: SwitchingValidation


def switching_partition(g: Graph, parts: Sequence[int]) -> SwitchingPartition:
    """Validate {X1..Xl, Y} against the switching conditions.

    Needed: the parts are disjoint and nonempty; for all i, j the number of
    part-j neighbours of a part-i vertex is constant over part i; and every
    outside vertex sees 0, half, or all of each part.
    """
    issues: list[str] = []
    union = 0
    for idx, part in enumerate(parts):
        if part == 0:
            issues.append(f"part {idx} is empty")
        if part & union:
            issues.append(f"part {idx} overlaps an earlier part")
        if part & ~g.full_mask:
            issues.append(f"part {idx} has vertices outside the graph")
        union |= part
    rest = g.full_mask & ~union

    part_counts = []
    for i, pi in enumerate(parts):
        row: list[Optional[int]] = []
        for j, pj in enumerate(parts):
            counts = {(g.adj[v] & pj).bit_count() for v in bits(pi)}
            if len(counts) == 1:
                row.append(counts.pop())
            else:
                row.append(None)
                issues.append(f"part {i} vertices disagree on neighbours in part {j}")
        part_counts.append(tuple(row))

    outside = []
    for y in bits(rest):
        counts = tuple((g.adj[y] & p).bit_count() for p in parts)
        outside.append((y, counts))
        for j, c in enumerate(counts):
            size = parts[j].bit_count()
            if c not in (0, size) and 2 * c != size:
                issues.append(f"vertex {y} has {c} neighbours in part {j} of size {size}")

    validation = SwitchingValidation(not issues, tuple(part_counts), tuple(outside),
                                     tuple(issues))
    return SwitchingPartition(tuple(parts), rest, validation)


def gm_switch(g: Graph, partition: SwitchingPartition | Sequence[int]) -> Graph:
    """Complement every half-neighbourhood of outside vertices against the parts.

    Raises InvalidPartitionError (naming the offending vertex or part) when
    the partition does not satisfy the switching conditions.
    """
    if not isinstance(partition, SwitchingPartition):
        partition = switching_partition(g, partition)
    if not partition.validation.ok:
        raise InvalidPartitionError(partition.validation)
    rows = list(g.adj)
    for part in partition.parts:
        size = part.bit_count()
        for y in bits(partition.rest):
            inside = rows[y] & part
            if inside and 2 * inside.bit_count() == size:
                flipped = part & ~inside
                rows[y] = (rows[y] & ~part) | flipped
                for x in bits(inside):
                    rows[x] &= ~(1 << y)
                for x in bits(flipped):
                    rows[x] |= 1 << y
    return Graph(g.n, tuple(rows), g.labels)


def planted_switching_instance(rng: random.Random, n_min: int = 6, n_max: int = 12
                               ) -> tuple[Graph, SwitchingPartition]:
    """Random graph with a planted valid switching coclique, for property tests."""
    n = rng.randint(n_min, n_max)
    half = rng.randint(1, 2)
    size = 2 * half
    verts = rng.sample(range(n), size)
    xmask = mask_from(verts)
    edges = []
    outside = [v for v in range(n) if not xmask >> v & 1]
    for a in range(len(outside)):
        for b in range(a + 1, len(outside)):
            if rng.random() < 0.5:
                edges.append((outside[a], outside[b]))
    for y in outside:
        mode = rng.choice(("none", "half", "all"))
        if mode == "none":
            chosen = []
        elif mode == "all":
            chosen = verts
        else:
            chosen = rng.sample(verts, half)
        edges.extend((y, x) for x in chosen)
    g = graphs.from_edges(n, edges)
    return g, switching_partition(g, [xmask])


# ---------------------------------------------------------------------------
# construction pairs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Expected:
    name: str
    value: int
    tag: str  # "paper" for values carried by the source claims, "derived" otherwise

    def to_json(self) -> dict:
        return {"name": self.name, "value": self.value, "tag": self.tag}


@dataclass(frozen=True)
class ConstructionPair:
    g: Graph
    g_prime: Graph
    provenance: str
    params: tuple[tuple[str, object], ...]
    expected: tuple[Expected, ...] = ()
    partition: Optional[SwitchingPartition] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.g.n != self.g_prime.n:
            raise ValueError("construction pairs must have equal order")

    def to_json(self) -> dict:
        out = {"provenance": self.provenance,
               "params": dict(self.params),
               "g": emit_graph6(self.g),
               "g_prime": emit_graph6(self.g_prime),
               "expected": [e.to_json() for e in self.expected]}
        if self.partition is not None:
            out["switching_parts"] = [sorted(bits(p)) for p in self.partition.parts]
        return out


def theorem51_build(g1: Optional[Graph] = None, g2: Optional[Graph] = None,
                    m: Optional[int] = None) -> ConstructionPair:
    """Pair ((g1 v P_m) u g2, switched) from two cospectral regular seeds.

    The union of the two seed vertex sets is a switching set of the first
    graph (every path vertex sees exactly half of it), and switching swaps
    which seed carries the path.  Defaults to the smallest valid seeds, the
    two built-in 10-vertex 4-regular graphs, with m = 10.
    """
    g1 = fig1_left() if g1 is None else g1
    g2 = fig1_right() if g2 is None else g2
    m = g1.n if m is None else m

    problems = []
    if not is_connected(g1):
        problems.append("g1 is not connected")
    if not is_connected(g2):
        problems.append("g2 is not connected")
    d1, d2 = g1.is_regular(), g2.is_regular()
    if d1 is None:
        problems.append("g1 is not regular")
    if d2 is None:
        problems.append("g2 is not regular")
    if d1 is not None and d2 is not None and d1 != d2:
        problems.append(f"degrees differ ({d1} vs {d2})")
    if g1.n != g2.n:
        problems.append(f"orders differ ({g1.n} vs {g2.n})")
    elif not cospectral(g1, g2, MatrixKind.ADJACENCY):
        problems.append("seeds are not adjacency-cospectral")
    if m < g1.n:
        problems.append(f"m = {m} is smaller than the seed order {g1.n}")
    if problems:
        raise PreconditionError(problems)

    n = g1.n
    g_prime = disjoint_union(join(g1, path(m)), g2)
    xmask = mask_from(range(n)) | mask_from(range(n + m, 2 * n + m))
    partition = switching_partition(g_prime, [xmask])
    g_double_prime = gm_switch(g_prime, partition)
    return ConstructionPair(
        g=g_prime,
        g_prime=g_double_prime,
        provenance="theorem51",
        params=(("n", n), ("m", m)),
        expected=(),
        partition=partition,
    )


def torus_zero_forcing(s: int, t: int) -> int:
    """Closed form for the standard forcing number of a torus C_s box C_t."""
    if not 3 <= s <= t:
        raise ValueError("torus formula needs 3 <= s <= t")
    return 2 * s - 1 if s == t and s % 2 else 2 * s


@dataclass(frozen=True)
class Corollary52Report:
    c: int
    order: int
    z_first: int
    z_second: int
    gap: int
    g1: Optional[Graph]
    g2: Optional[Graph]
    assembled: Optional[ConstructionPair]
    skipped: Optional[str]

    def to_json(self) -> dict:
        return {"c": self.c, "order": self.order,
                "z_first": self.z_first, "z_second": self.z_second, "gap": self.gap,
                "g1": emit_graph6(self.g1) if self.g1 is not None else None,
                "g2": emit_graph6(self.g2) if self.g2 is not None else None,
                "assembled": self.assembled.to_json() if self.assembled else None,
                "skipped": self.skipped}


def corollary52_family(c: int) -> Corollary52Report:
    """Torus pair (C4 box C_{c^2}, C_2c box C_2c) and its forcing gap 4c - 8.

    The ingredient graphs are built whenever they fit the order cap; the
    fully assembled pair needs 3 times their order, beyond the cap for every
    c >= 3, so the report carries the parameters and the gap instead.
    """
    if c < 3:
        raise ValueError("corollary52_family needs c >= 3")
    order = 4 * c * c
    z1 = torus_zero_forcing(4, c * c)
    z2 = torus_zero_forcing(2 * c, 2 * c)
    g1 = g2 = None
    if order <= graphs.ORDER_CAP:
        g1 = cartesian(cycle(4), cycle(c * c))
        g2 = cartesian(cycle(2 * c), cycle(2 * c))
    assembled = None
    skipped = None
    if g1 is not None and 3 * order <= graphs.ORDER_CAP:
        assembled = theorem51_build(g1, g2, order)
    else:
        skipped = (f"assembled pair would need order {3 * order} > cap "
                   f"{graphs.ORDER_CAP}")
    return Corollary52Report(c, order, z1, z2, z2 - z1, g1, g2, assembled, skipped)


# ---------------------------------------------------------------------------
# the 6k-vertex regular construction
# ---------------------------------------------------------------------------

def circulant_h(k: int) -> Graph:
    """The k-regular circulant core on 3k - 1 vertices: i ~ i + k .. i + 2k - 1."""
    if k < 2:
        raise ValueError("circulant core needs k >= 2")
    return graphs.circulant(3 * k - 1, range(k, 2 * k))


def h_witness_set(k: int) -> tuple[int, ...]:
    """The canonical minimum forcing set {0} u {2, ..., 2k - 2} of the core."""
    return (0,) + tuple(range(2, 2 * k - 1))


def zf_h_check(k: int) -> bool:
    """Exact Z of the core equals 2k - 2 and the canonical witness closes."""
    h = circulant_h(k)
    if zero_forcing_number(h, Rule.STANDARD).value != 2 * k - 2:
        return False
    final, _ = closure(h, Rule.STANDARD, h_witness_set(k))
    return final == h.full_mask


def regular_construction(k: int) -> ConstructionPair:
    """2k-regular cospectral pair on 6k vertices with different forcing numbers.

    Blocks, in vertex order: the circulant core H (0 .. 3k-2), a clique
    a_0..a_k, a coclique b_0..b_k, a coclique c_1..c_{k-1}.  Cross edges:

      (i)   a_i ~ b_j for j != i
      (ii)  c_i ~ 0 and c_i ~ j for j in k .. 3k-2
      (iii) b_i ~ j for i < k and j in 1 .. k-1;  b_k ~ j for j in 2k .. 3k-2
      (iv)  b_i ~ k+i-1 for 1 <= i <= k;  b_0 ~ 0

    Rule (ii) is the unique reading that makes the result 2k-regular, and
    the constructor enforces 2k-regularity plus validity of the switching
    set (core plus clique) as hard postconditions, so any drift fails loudly.
    """
    if k < 2:
        raise ValueError("regular_construction needs k >= 2")
    if 6 * k > graphs.ORDER_CAP:
        raise graphs.OrderCapError(f"order {6 * k} exceeds cap {graphs.ORDER_CAP}")
    nh = 3 * k - 1
    a = {i: nh + i for i in range(k + 1)}
    b = {i: nh + (k + 1) + i for i in range(k + 1)}
    c = {i: nh + 2 * (k + 1) + (i - 1) for i in range(1, k)}

    edges = [(i, (i + d) % nh) for i in range(nh) for d in range(k, 2 * k)]
    edges += [(a[i], a[j]) for i in range(k + 1) for j in range(i + 1, k + 1)]
    edges += [(a[i], b[j]) for i in range(k + 1) for j in range(k + 1) if i != j]
    for i in range(1, k):
        edges.append((c[i], 0))
        edges.extend((c[i], j) for j in range(k, nh))
    for i in range(k):
        edges.extend((b[i], j) for j in range(1, k))
    edges.extend((b[k], j) for j in range(2 * k, nh))
    edges.extend((b[i], k + i - 1) for i in range(1, k + 1))
    edges.append((b[0], 0))

    labels = tuple([f"h{i}" for i in range(nh)]
                   + [f"a{i}" for i in range(k + 1)]
                   + [f"b{i}" for i in range(k + 1)]
                   + [f"c{i}" for i in range(1, k)])
    g = graphs.from_edges(6 * k, edges, labels)

    if g.is_regular() != 2 * k:
        raise AssertionError(f"construction for k={k} is not {2 * k}-regular")
    xmask = mask_from(range(nh)) | mask_from(a.values())
    partition = switching_partition(g, [xmask])
    if not partition.validation.ok:
        raise AssertionError(f"switching set invalid for k={k}: "
                             f"{partition.validation.issues}")
    g_prime = gm_switch(g, partition)
    expected = (Expected("Z(g)", 4 * k - 2, "paper"),
                Expected("Z(g_prime)_upper_bound", 4 * k - 3, "paper"),
                Expected("Z(core)", 2 * k - 2, "paper"))
    return ConstructionPair(g, g_prime, "regular6k", (("k", k),), expected, partition)


# ---------------------------------------------------------------------------
# product and join families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TensorFamilyResult:
    graph: Graph
    base: Graph
    r: int
    z_minus_base: int
    witness: SkewWitness
    expected: tuple[Expected, ...]

    def to_json(self) -> dict:
        return {"graph": emit_graph6(self.graph),
                "base": emit_graph6(self.base),
                "r": self.r,
                "z_minus_base": self.z_minus_base,
                "witness": self.witness.to_json(),
                "expected": [e.to_json() for e in self.expected]}


def tensor_family(g: Graph, r: int, *, witness_budget: int = 4000,
                  seed: int = 0) -> TensorFamilyResult:
    """Tensor g with a complete graph K_r; expected forcing values scale as

        (r - 2) |V(g)| + 2 Z_minus(g)

    for both the standard and the skew rule.  Requires r >= 3 and that the
    maximum skew nullity of g provably equals Z_minus(g), which is certified
    by a witness whose nullity meets the solver value.
    """
    if r < 3:
        raise PreconditionError(["tensor family needs r >= 3"])
    z_minus = zero_forcing_number(g, Rule.SKEW).value
    witness = max_nullity_witness_search(g, budget=witness_budget, seed=seed)
    if witness.achieved_nullity != z_minus:
        raise PreconditionError(
            [f"maximum skew nullity is not established: best witness nullity "
             f"{witness.achieved_nullity} != Z_minus {z_minus}"])
    product = graphs.tensor(g, complete(r))
    value = (r - 2) * g.n + 2 * z_minus
    expected = (Expected("Z(product)", value, "paper"),
                Expected("Z_minus(product)", value, "paper"))
    return TensorFamilyResult(product, g, r, z_minus, witness, expected)


def join_family(g1: Graph, g2: Graph, r: int) -> ConstructionPair:
    """Join both inputs with K_r: Laplacian cospectrality is preserved and
    every forcing number shifts by exactly r.  Requires connected inputs that
    are Laplacian-cospectral with differing standard or skew forcing numbers.
    """
    problems = []
    if r < 1:
        problems.append("join family needs r >= 1")
    if not is_connected(g1):
        problems.append("g1 is not connected")
    if not is_connected(g2):
        problems.append("g2 is not connected")
    if g1.n != g2.n or not cospectral(g1, g2, MatrixKind.LAPLACIAN):
        problems.append("inputs are not Laplacian-cospectral")
    if problems:
        raise PreconditionError(problems)
    z1 = zero_forcing_number(g1, Rule.STANDARD).value
    z2 = zero_forcing_number(g2, Rule.STANDARD).value
    zm1 = zero_forcing_number(g1, Rule.SKEW).value
    zm2 = zero_forcing_number(g2, Rule.SKEW).value
    if z1 == z2 and zm1 == zm2:
        raise PreconditionError(["inputs do not differ in standard or skew forcing number"])
    kr = complete(r)
    expected = (Expected("Z(g1_join)", r + z1, "paper"),
                Expected("Z(g2_join)", r + z2, "paper"),
                Expected("Z_minus(g1_join)", r + zm1, "paper"),
                Expected("Z_minus(g2_join)", r + zm2, "paper"))
    return ConstructionPair(join(g1, kr), join(g2, kr), "join-family",
                            (("r", r), ("n", g1.n)), expected)


# ---------------------------------------------------------------------------
# rook's grid vs its switched mate
# ---------------------------------------------------------------------------

def grid_diagonal_part(s: int = 4) -> int:
    """The diagonal transversal {(i, i)} of the s-by-s rook's graph, as a mask."""
    return mask_from(i * s + i for i in range(s))


def shrikhande() -> Graph:
    """Switch the 4x4 rook's graph over its diagonal coclique."""
    return gm_switch(graphs.grid_lattice(4), [grid_diagonal_part(4)])


@dataclass(frozen=True)
class GridShrikhandeReport:
    r: int
    zplus_grid: int
    zplus_switched: int
    adjacency_cospectral: bool
    isomorphic: bool
    product_upper_bound: int
    product_lower_bound: int
    separation_holds: bool

    def to_json(self) -> dict:
        return {"r": self.r,
                "zplus_grid": self.zplus_grid,
                "zplus_switched": self.zplus_switched,
                "adjacency_cospectral": self.adjacency_cospectral,
                "isomorphic": self.isomorphic,
                "product_upper_bound": self.product_upper_bound,
                "product_lower_bound": self.product_lower_bound,
                "separation_holds": self.separation_holds}


def grid_shrikhande_report(r: int) -> GridShrikhandeReport:
    """PSD forcing separation for (rook's grid) box K_r, by bound arithmetic.

    The two 16-vertex ingredients are solved exactly; the 16r-vertex products
    are far beyond exact search, so the separation uses the product bounds
        upper(switched) = min(r * zplus_switched, 16 (r - 1))
        lower(grid)     = zplus_grid * (r - 1)
    which separate exactly when r >= 11.
    """
    if r < 11:
        raise ValueError("the product separation needs r >= 11")
    grid = graphs.grid_lattice(4)
    mate = shrikhande()
    zp_grid = zero_forcing_number(grid, Rule.PSD).value
    zp_mate = zero_forcing_number(mate, Rule.PSD).value
    upper = min(r * zp_mate, 16 * (r - 1))
    lower = zp_grid * (r - 1)
    iso, _ = is_isomorphic(grid, mate)
    return GridShrikhandeReport(
        r=r,
        zplus_grid=zp_grid,
        zplus_switched=zp_mate,
        adjacency_cospectral=cospectral(grid, mate, MatrixKind.ADJACENCY),
        isomorphic=iso,
        product_upper_bound=upper,
        product_lower_bound=lower,
        separation_holds=upper < lower,
    )
