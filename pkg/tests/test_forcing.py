import random

import pytest

from zfforge.forcing import (BudgetExceededError, ForcingCertificate, Rule,
                             closure, default_budget, rule_from_name,
                             verify_certificate, zero_forcing_number,
                             zf_join_formula_check)
from zfforge.graphs import (complete, cycle, disjoint_union, empty, ex32_g,
                            ex32_gprime, fig1_left, fig1_right, from_edges,
                            grid_lattice, join, mask_from, path)
from zfforge.randgraphs import random_connected_graph, random_graph, random_subset_mask

ALL_RULES = (Rule.STANDARD, Rule.SKEW, Rule.PSD)


def test_closure_path_endpoint_standard():
    g = path(3)
    final, cert = closure(g, Rule.STANDARD, [0])
    assert final == g.full_mask
    assert cert.forces == ((0, 1), (1, 2))
    assert verify_certificate(g, cert)


def test_closure_c6_skew_empty_stalls():
    g = cycle(6)
    final, cert = closure(g, Rule.SKEW, [])
    assert final == 0 and cert.forces == ()


def test_closure_star_psd_center():
    g = from_edges(4, [(0, 1), (0, 2), (0, 3)])
    final, cert = closure(g, Rule.PSD, [0])
    assert final == g.full_mask
    assert len(cert.forces) == 3  # each leaf is alone in its white component
    assert all(actor == 0 for actor, _ in cert.forces)
    assert verify_certificate(g, cert)
    # under the standard rule the centre cannot start at all
    final_std, _ = closure(g, Rule.STANDARD, [0])
    assert final_std == 1


def test_fixture_pair_values():
    expect = {(0, Rule.STANDARD): 6, (0, Rule.PSD): 5, (0, Rule.SKEW): 4,
              (1, Rule.STANDARD): 4, (1, Rule.PSD): 4, (1, Rule.SKEW): 4}
    pair = (fig1_left(), fig1_right())
    for (which, rule), value in expect.items():
        result = zero_forcing_number(pair[which], rule)
        assert result.value == value
        assert verify_certificate(pair[which], result.witness)


def test_ex32_skew_values():
    assert zero_forcing_number(ex32_g(), Rule.SKEW).value == 3
    assert zero_forcing_number(ex32_gprime(), Rule.SKEW).value == 1


def test_psd_rook_3():
    assert zero_forcing_number(grid_lattice(3), Rule.PSD).value == 5


def test_path_standard_is_one():
    for n in range(2, 11):
        assert zero_forcing_number(path(n), Rule.STANDARD).value == 1


def test_complete_graphs():
    for n in range(2, 9):
        assert zero_forcing_number(complete(n), Rule.STANDARD).value == n - 1
        assert zero_forcing_number(complete(n), Rule.PSD).value == n - 1


def test_empty_and_singleton():
    for rule in ALL_RULES:
        assert zero_forcing_number(empty(1), rule).value == 1
        assert zero_forcing_number(empty(4), rule).value == 4
        assert zero_forcing_number(empty(0), rule).value == 0


def test_isolated_vertex_always_needed():
    g = ex32_g()  # cycle component plus isolated vertex
    for rule in ALL_RULES:
        result = zero_forcing_number(g, rule)
        assert 6 in result.witness.initial


def test_verify_certificate_rejects_forgeries():
    g = path(3)
    # standard force by an actor with two white neighbours
    bad = ForcingCertificate(Rule.STANDARD, (1,), ((1, 0), (1, 2)))
    assert not verify_certificate(g, bad)
    # skew allows that same first force only if unique; vertex 1 has two whites
    assert not verify_certificate(g, ForcingCertificate(Rule.SKEW, (1,), ((1, 0),)))
    # claiming completion while a vertex stays white
    assert not verify_certificate(g, ForcingCertificate(Rule.STANDARD, (0,), ((0, 1),)))
    assert verify_certificate(g, ForcingCertificate(Rule.STANDARD, (0,), ((0, 1),)),
                              require_all_blue=False)
    # forcing across a non-edge
    assert not verify_certificate(g, ForcingCertificate(Rule.STANDARD, (0, 1), ((0, 2),)))
    # forcing a vertex that is already blue
    assert not verify_certificate(g, ForcingCertificate(Rule.STANDARD, (0, 1), ((0, 1),)))
    # white actors may force under skew but not under standard
    g2 = path(2)
    skew_ok = ForcingCertificate(Rule.SKEW, (), ((0, 1), (1, 0)))
    assert verify_certificate(g2, skew_ok)
    assert not verify_certificate(g2, ForcingCertificate(Rule.STANDARD, (), ((0, 1),)),
                                  require_all_blue=False)


def test_solver_witness_replays_for_every_rule():
    rng = random.Random(211)
    for _ in range(15):
        g = random_graph(rng, rng.randint(1, 8))
        for rule in ALL_RULES:
            result = zero_forcing_number(g, rule)
            assert verify_certificate(g, result.witness)
            assert len(result.witness.initial) == result.value


def test_zf_join_formula_examples():
    assert zero_forcing_number(join(path(3), path(3)), Rule.STANDARD).value == 4
    assert zf_join_formula_check(path(3), path(3), Rule.STANDARD)
    assert zero_forcing_number(join(complete(2), complete(2)), Rule.STANDARD).value == 3
    assert zf_join_formula_check(complete(2), complete(2), Rule.STANDARD)
    with pytest.raises(ValueError):
        zf_join_formula_check(path(3), path(3), Rule.PSD)
    with pytest.raises(ValueError):
        zf_join_formula_check(disjoint_union(path(2), path(2)), path(3), Rule.STANDARD)


def test_zf_join_formula_random_pairs():
    rng = random.Random(223)
    for _ in range(10):
        g = random_connected_graph(rng, rng.randint(2, 6))
        h = random_connected_graph(rng, rng.randint(2, 6))
        for rule in (Rule.STANDARD, Rule.SKEW):
            assert zf_join_formula_check(g, h, rule)


def test_closure_monotone_idempotent_extensive():
    rng = random.Random(227)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 9))
        rule = rng.choice(ALL_RULES)
        s = random_subset_mask(rng, g.n)
        t = s | random_subset_mask(rng, g.n)
        close_s, _ = closure(g, rule, s)
        close_t, _ = closure(g, rule, t)
        assert close_s & ~close_t == 0  # monotone
        assert s & ~close_s == 0  # extensive
        again, _ = closure(g, rule, close_s)
        assert again == close_s  # idempotent
        full, _ = closure(g, rule, g.full_mask)
        assert full == g.full_mask  # the whole vertex set always closes


def test_rule_dominance():
    rng = random.Random(229)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 8))
        z = zero_forcing_number(g, Rule.STANDARD).value
        assert zero_forcing_number(g, Rule.PSD).value <= z
        assert zero_forcing_number(g, Rule.SKEW).value <= z


def test_component_additivity_against_whole_graph_search():
    rng = random.Random(233)
    for _ in range(10):
        g = disjoint_union(random_graph(rng, rng.randint(1, 6)),
                           random_graph(rng, rng.randint(1, 6)))
        for rule in ALL_RULES:
            split = zero_forcing_number(g, rule)
            whole = zero_forcing_number(g, rule, per_component=False)
            assert split.value == whole.value


def test_budget_and_order_cap_errors():
    with pytest.raises(BudgetExceededError):
        zero_forcing_number(fig1_left(), Rule.STANDARD, budget=5)
    with pytest.raises(BudgetExceededError):
        zero_forcing_number(grid_lattice(4), Rule.STANDARD, budget=10 ** 6, order_cap=10)


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("ZFFORGE_BUDGET", "7")
    assert default_budget() == 7
    monkeypatch.setenv("ZFFORGE_BUDGET", "zero")
    with pytest.raises(ValueError):
        default_budget()
    monkeypatch.setenv("ZFFORGE_BUDGET", "-3")
    with pytest.raises(ValueError):
        default_budget()
    monkeypatch.delenv("ZFFORGE_BUDGET")
    assert default_budget() == 10 ** 8


def test_deterministic_witness():
    a = zero_forcing_number(cycle(8), Rule.STANDARD, budget=10 ** 8)
    b = zero_forcing_number(cycle(8), Rule.STANDARD, budget=10 ** 8)
    assert a.witness == b.witness and a.value == b.value == 2
    assert a.explored == b.explored > 0


def test_certificate_json_roundtrip():
    g = fig1_right()
    result = zero_forcing_number(g, Rule.PSD)
    data = result.witness.to_json()
    assert ForcingCertificate.from_json(data) == result.witness
    assert data["rule"] == "psd"


def test_rule_from_name():
    assert rule_from_name("standard") is Rule.STANDARD
    assert rule_from_name("SKEW") is Rule.SKEW
    with pytest.raises(ValueError):
        rule_from_name("fractional")


def test_lowest_pair_tie_break():
    # both endpoints of a path could force; the lower-indexed actor fires first
    g = path(4)
    final, cert = closure(g, Rule.STANDARD, [0, 3])
    assert final == g.full_mask
    assert cert.forces[0] == (0, 1)


def test_initial_accepts_masks_and_iterables():
    g = path(3)
    final_mask, _ = closure(g, Rule.STANDARD, mask_from([0]))
    final_iter, _ = closure(g, Rule.STANDARD, [0])
    assert final_mask == final_iter
    with pytest.raises(ValueError):
        closure(g, Rule.STANDARD, [5])


def _reference_minimum(g, rule):
    # deliberately independent solver: set-based closure, itertools subsets,
    # no bitmasks, no shared code with the package engine
    import itertools

    adj = [sorted(w for w in range(g.n) if g.has_edge(v, w)) for v in range(g.n)]

    def close(blue):
        blue = set(blue)
        while True:
            fired = False
            white = set(range(g.n)) - blue
            if rule is Rule.PSD:
                comps = []
                left = set(white)
                while left:
                    comp = {left.pop()}
                    grow = list(comp)
                    while grow:
                        v = grow.pop()
                        for w in adj[v]:
                            if w in white and w not in comp:
                                comp.add(w)
                                grow.append(w)
                    left -= comp
                    comps.append(comp)
            for u in range(g.n):
                if rule is not Rule.SKEW and u not in blue:
                    continue
                if rule is Rule.PSD:
                    for comp in comps:
                        wn = [w for w in adj[u] if w in comp]
                        if len(wn) == 1 and wn[0] in white:
                            blue.add(wn[0])
                            white.discard(wn[0])
                            fired = True
                else:
                    wn = [w for w in adj[u] if w in white]
                    if len(wn) == 1:
                        blue.add(wn[0])
                        white.discard(wn[0])
                        fired = True
            if not fired:
                return blue

    for k in range(g.n + 1):
        for subset in itertools.combinations(range(g.n), k):
            if len(close(subset)) == g.n:
                return k
    return g.n


def test_solver_matches_independent_reference():
    rng = random.Random(241)
    for _ in range(60):
        g = random_graph(rng, rng.randint(0, 7))
        for rule in ALL_RULES:
            assert zero_forcing_number(g, rule).value == _reference_minimum(g, rule)


def test_batch_and_stepper_closures_agree():
    # the solver's batch engine and the certificate stepper are independent
    # implementations of the same fixed point; they must always agree
    from zfforge.forcing import _FAST_CLOSE

    rng = random.Random(239)
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 9))
        rule = rng.choice(ALL_RULES)
        s = random_subset_mask(rng, g.n)
        fast = _FAST_CLOSE[rule](g.adj, g.n, g.full_mask, s)
        stepped, cert = closure(g, rule, s)
        assert fast == stepped
        assert verify_certificate(g, cert, require_all_blue=False)
