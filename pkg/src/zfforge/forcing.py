"""Color-change rules, closures with certificates, exact minimum forcing sets.

Rules, over a blue set B with white = V minus B:

* standard: a blue vertex with exactly one white neighbour forces it.
* skew:     ANY vertex, blue or white, with exactly one white neighbour
            forces it.
* psd:      a blue vertex u forces a white neighbour w when w is the only
            white neighbour of u inside w's component of the white-induced
            subgraph.

The closure of an initial set is the unique fixed point of iterating a rule
(the rules are confluent, so firing order never changes the final set).  The
minimum size of a set whose closure is everything is the zero forcing number
for that rule: Z under standard, Z_minus under skew, Z_plus under psd.

The solver enumerates subsets by increasing cardinality per connected
component and sums the component minima (all three parameters are additive
over components; in particular an isolated vertex always costs 1, since no
rule lets anything force a vertex with no neighbours).  Search effort is
metered: every closure evaluation spends budget, and exceeding the budget or
the per-component order cap raises BudgetExceededError rather than
degrading to an approximation.

Certificates use a deterministic tie-break so witnesses are byte-stable: at
every step the lexicographically least eligible (actor, target) pair fires.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .graphs import Graph, bits, components, induced_subgraph, is_connected, join, mask_components

DEFAULT_ORDER_CAP = 24
_DEFAULT_BUDGET = 10 ** 8

VertexSetLike = Union[int, Iterable[int]]


class Rule(enum.Enum):
    STANDARD = "standard"
    SKEW = "skew"
    PSD = "psd"


def rule_from_name(name: str) -> Rule:
    try:
        return Rule(name.lower())
    except ValueError:
        raise ValueError(f"rule must be standard, skew or psd; got {name!r}") from None


class BudgetExceededError(RuntimeError):
    """Search would exceed the closure-evaluation budget or order cap."""


def default_budget() -> int:
    raw = os.environ.get("ZFFORGE_BUDGET")
    if raw is None:
        return _DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"ZFFORGE_BUDGET must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError("ZFFORGE_BUDGET must be positive")
    return value


@dataclass(frozen=True)
class ForcingCertificate:
    """Replayable trace: initial blue vertices plus ordered (actor, target) forces."""

    rule: Rule
    initial: tuple[int, ...]
    forces: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {"rule": self.rule.value,
                "initial": list(self.initial),
                "forces": [list(f) for f in self.forces]}

    @classmethod
    def from_json(cls, data: dict) -> "ForcingCertificate":
        return cls(Rule(data["rule"]),
                   tuple(data["initial"]),
                   tuple((a, t) for a, t in data["forces"]))


@dataclass(frozen=True)
class ZfResult:
    value: int
    witness: ForcingCertificate
    explored: int


def _as_mask(initial: VertexSetLike, n: int) -> int:
    mask = initial if isinstance(initial, int) else sum(1 << v for v in set(initial))
    if mask & ~((1 << n) - 1) or mask < 0:
        raise ValueError("initial set contains vertices outside the graph")
    return mask


# ---------------------------------------------------------------------------
# fast batch closures (value search); fire every snapshot-legal force per pass
# ---------------------------------------------------------------------------

def _close_standard(adj, n, full, blue):
    while True:
        white = full & ~blue
        if not white:
            return blue
        newly = 0
        b = blue
        while b:
            low = b & -b
            b ^= low
            wn = adj[low.bit_length() - 1] & white
            if wn and not wn & (wn - 1):
                newly |= wn
        if not newly:
            return blue
        blue |= newly


def _close_skew(adj, n, full, blue):
    while True:
        white = full & ~blue
        if not white:
            return blue
        newly = 0
        for u in range(n):
            wn = adj[u] & white
            if wn and not wn & (wn - 1):
                newly |= wn
        if not newly:
            return blue
        blue |= newly


def _close_psd(adj, n, full, blue):
    while True:
        white = full & ~blue
        if not white:
            return blue
        comps = mask_components(adj, white)
        newly = 0
        b = blue
        while b:
            low = b & -b
            b ^= low
            row = adj[low.bit_length() - 1]
            if not row & white:
                continue
            for comp in comps:
                wn = row & comp
                if wn and not wn & (wn - 1):
                    newly |= wn
        if not newly:
            return blue
        blue |= newly


_FAST_CLOSE = {Rule.STANDARD: _close_standard,
               Rule.SKEW: _close_skew,
               Rule.PSD: _close_psd}


# ---------------------------------------------------------------------------
# deterministic single-step closure (certificates)
# ---------------------------------------------------------------------------

def _eligible_targets(g: Graph, rule: Rule, blue: int, actor: int) -> int:
    """Mask of vertices the actor may force right now under the rule."""
    white = g.full_mask & ~blue
    row = g.adj[actor] & white
    if not row:
        return 0
    if rule is Rule.STANDARD:
        if not blue >> actor & 1:
            return 0
        return row if not row & (row - 1) else 0
    if rule is Rule.SKEW:
        return row if not row & (row - 1) else 0
    # psd: split white neighbours by white component
    if not blue >> actor & 1:
        return 0
    targets = 0
    for comp in mask_components(g.adj, white):
        wn = row & comp
        if wn and not wn & (wn - 1):
            targets |= wn
    return targets


def _first_force(g: Graph, rule: Rule, blue: int) -> Optional[tuple[int, int]]:
    for actor in range(g.n):
        targets = _eligible_targets(g, rule, blue, actor)
        if targets:
            return actor, (targets & -targets).bit_length() - 1
    return None


def closure(g: Graph, rule: Rule, initial: VertexSetLike) -> tuple[int, ForcingCertificate]:
    """Closure of the initial set, with a deterministic force-by-force trace."""
    blue = _as_mask(initial, g.n)
    start = tuple(bits(blue))
    forces = []
    while True:
        nxt = _first_force(g, rule, blue)
        if nxt is None:
            break
        forces.append(nxt)
        blue |= 1 << nxt[1]
    return blue, ForcingCertificate(rule, start, tuple(forces))


def verify_certificate(g: Graph, cert: ForcingCertificate, require_all_blue: bool = True) -> bool:
    """Independent replay of a certificate; trusts nothing from the solver.

    Checks that every force is legal under the rule when it fires, that no
    vertex is forced twice or forced despite being in the initial set, and
    (by default) that the replay ends with every vertex blue.
    """
    if any(not 0 <= v < g.n for v in cert.initial):
        return False
    blue = set(cert.initial)
    initial = set(cert.initial)
    forced = set()
    for actor, target in cert.forces:
        if not 0 <= actor < g.n or not 0 <= target < g.n:
            return False
        if target in blue or target in forced or target in initial:
            return False
        if not g.has_edge(actor, target):
            return False
        white = set(range(g.n)) - blue
        if cert.rule is Rule.STANDARD:
            if actor not in blue:
                return False
            if {w for w in bits(g.adj[actor]) if w in white} != {target}:
                return False
        elif cert.rule is Rule.SKEW:
            if {w for w in bits(g.adj[actor]) if w in white} != {target}:
                return False
        else:
            if actor not in blue:
                return False
            # component of target inside the white-induced subgraph
            comp = {target}
            stack = [target]
            while stack:
                v = stack.pop()
                for u in bits(g.adj[v]):
                    if u in white and u not in comp:
                        comp.add(u)
                        stack.append(u)
            if {w for w in bits(g.adj[actor]) if w in comp} != {target}:
                return False
        blue.add(target)
        forced.add(target)
    if require_all_blue and len(blue) != g.n:
        return False
    return True


# ---------------------------------------------------------------------------
# exact minimum search
# ---------------------------------------------------------------------------

class _Budget:
    __slots__ = ("remaining", "spent")

    def __init__(self, limit: int):
        self.remaining = limit
        self.spent = 0

    def spend(self, amount: int = 1) -> None:
        self.remaining -= amount
        self.spent += amount
        if self.remaining < 0:
            raise BudgetExceededError(
                f"closure-evaluation budget exhausted after {self.spent} evaluations")


def _subsets_of_size(n: int, k: int):
    # Gosper's hack: all n-bit masks of popcount k in increasing numeric order.
    if k == 0:
        yield 0
        return
    mask = (1 << k) - 1
    top = 1 << n
    while mask < top:
        yield mask
        c = mask & -mask
        r = mask + c
        mask = r | ((mask ^ r) >> 2) // c
    return


def _component_minimum(adj, n, rule: Rule, budget: _Budget) -> tuple[int, int]:
    full = (1 << n) - 1
    close = _FAST_CLOSE[rule]
    for k in range(n + 1):
        for mask in _subsets_of_size(n, k):
            budget.spend()
            if close(adj, n, full, mask) == full:
                return k, mask
    raise AssertionError("unreachable: the full vertex set always closes")


_zf_cache: dict[tuple, ZfResult] = {}


def zero_forcing_number(g: Graph, rule: Rule, *,
                        budget: Optional[int] = None,
                        order_cap: int = DEFAULT_ORDER_CAP,
                        per_component: bool = True) -> ZfResult:
    """Exact minimum forcing-set size with witness certificate.

    Searches each connected component separately (the parameter is additive
    over components) unless ``per_component`` is off, which forces a single
    whole-graph enumeration and exists for cross-checking additivity.
    Successful results for the default budget are cached per
    (graph, rule, cap, mode); passing an explicit budget bypasses the cache.
    """
    cacheable = budget is None
    key = (g.adj, rule, order_cap, per_component)
    if cacheable and key in _zf_cache:
        return _zf_cache[key]
    state = _Budget(default_budget() if budget is None else budget)

    initial = 0
    value = 0
    if per_component:
        for comp in components(g):
            sub, verts = induced_subgraph(g, comp)
            if sub.n > order_cap:
                raise BudgetExceededError(
                    f"component of order {sub.n} exceeds the order cap {order_cap}")
            k, mask = _component_minimum(sub.adj, sub.n, rule, state)
            value += k
            for b in bits(mask):
                initial |= 1 << verts[b]
    else:
        if g.n > order_cap:
            raise BudgetExceededError(f"order {g.n} exceeds the order cap {order_cap}")
        value, initial = _component_minimum(g.adj, g.n, rule, state)

    final, cert = closure(g, rule, initial)
    if final != g.full_mask:
        raise AssertionError("solver witness failed deterministic replay")
    result = ZfResult(value, cert, state.spent)
    if cacheable:
        _zf_cache[key] = result
    return result


def zf_join_formula_check(g: Graph, h: Graph, rule: Rule, *,
                          budget: Optional[int] = None) -> bool:
    """Compare the exact solver on join(g, h) against the join formula

        value(g v h) = min(|V(g)| + value(h), |V(h)| + value(g))

    for the standard and skew rules (both require connected inputs).
    """
    if rule not in (Rule.STANDARD, Rule.SKEW):
        raise ValueError("join formula applies to the standard and skew rules only")
    if not is_connected(g) or not is_connected(h):
        raise ValueError("join formula check needs connected inputs")
    joined = join(g, h)
    lhs = zero_forcing_number(joined, rule, budget=budget).value
    rhs = min(g.n + zero_forcing_number(h, rule, budget=budget).value,
              h.n + zero_forcing_number(g, rule, budget=budget).value)
    return lhs == rhs
