"""The two token games whose optimal budgets equal the recursive rank."""

import random

import pytest

from entrank.digraph import Digraph
from entrank.gamecore import ArenaCeilingError, COPS, THIEF
from entrank.rank import (
    ComebackGame,
    RankShrinkGame,
    comeback_min_k,
    rank,
    rank_via_game,
    solve_comeback_game,
    solve_rank_game,
)

from conftest import clique_edges, dg, dicycle_edges, random_edges, upath_edges
from oracles import comeback_thief_wins, rank_value, shrink_thief_wins


def test_shrink_game_matches_rank_on_families():
    for n in range(1, 7):
        assert rank_via_game(dg(n, upath_edges(n))) == rank(dg(n, upath_edges(n)))
    for n in range(1, 5):
        assert rank_via_game(dg(n, clique_edges(n))) == n - 1
    assert rank_via_game(Digraph(0, [])) == 0
    assert rank_via_game(Digraph(3, [(0, 1), (1, 2)])) == 0


def test_shrink_game_matches_rank_random():
    rng = random.Random(17)
    for _ in range(60):
        n = rng.randrange(6)
        edges = random_edges(n, 0.35, rng)
        assert rank_via_game(dg(n, edges)) == rank_value(n, tuple(edges))


def test_shrink_winners_match_oracle_at_each_k():
    rng = random.Random(23)
    for _ in range(40):
        n = rng.randrange(1, 5)
        edges = random_edges(n, 0.4, rng)
        g = dg(n, edges)
        for k in range(n + 1):
            res = solve_rank_game(g, k)
            expect = THIEF if shrink_thief_wins(n, tuple(edges), k) else COPS
            assert res.winner == expect, (n, edges, k)


def test_comeback_min_k_equals_rank():
    rng = random.Random(31)
    for _ in range(40):
        n = rng.randrange(5)
        edges = random_edges(n, 0.4, rng)
        assert comeback_min_k(dg(n, edges)) == rank_value(n, tuple(edges))
    for n in range(1, 6):
        assert comeback_min_k(dg(n, dicycle_edges(n))) == 1


def test_comeback_winners_match_oracle_at_each_k():
    rng = random.Random(37)
    for _ in range(30):
        n = rng.randrange(1, 5)
        edges = random_edges(n, 0.4, rng)
        g = dg(n, edges)
        for k in range(n + 1):
            res = solve_comeback_game(g, k)
            expect = THIEF if comeback_thief_wins(n, tuple(edges), k) else COPS
            assert res.winner == expect, (n, edges, k)


def test_ceiling_raises_instead_of_guessing():
    g = dg(4, clique_edges(4))
    with pytest.raises(ArenaCeilingError):
        solve_comeback_game(g, 2, ceiling=3)


# --- unit checks of the comeback game's position mechanics ---


def test_out_of_budget_with_cycles_is_a_thief_win():
    g = Digraph(2, [(0, 1), (1, 0)])
    game = ComebackGame(g, 0)
    p = game.initial_position()
    assert game.owner(p) == THIEF
    assert game.winner_if_terminal(p) == THIEF
    assert game.moves(p) == []


def test_no_cycles_no_entries_is_a_cops_win():
    game = ComebackGame(Digraph(2, [(0, 1)]), 1)
    p = game.initial_position()
    assert game.winner_if_terminal(p) == COPS


_BRIDGE = [(0, 1), (1, 0), (2, 3), (3, 2), (1, 2)]


def test_forward_move_records_downstream_siblings():
    game = ComebackGame(Digraph(4, _BRIDGE), 2)
    p0 = game.initial_position()
    by_mask = {mv[1]: np for mv, np in game.moves(p0)}
    # entering the upstream 2-cycle banks the downstream one, frozen with
    # the current list and budget
    up = by_mask[(0, 1)]
    assert len(up.entries) == 1
    banked = up.entries[0]
    assert sorted(i for i in range(4) if banked.mask >> i & 1) == [2, 3]
    assert banked.n == 2 and banked.entries == ()
    # entering the downstream one banks nothing
    assert by_mask[(2, 3)].entries == ()


def test_exhausted_component_forces_a_comeback():
    game = ComebackGame(Digraph(4, _BRIDGE), 3)
    frontier = [game.initial_position()]
    seen = set()
    forced = None
    while frontier:
        p = frontier.pop()
        if (
            game.owner(p) == THIEF
            and p.entries
            and game.winner_if_terminal(p) is None
        ):
            kinds = {mv[0] for mv, _ in game.moves(p)}
            if kinds == {"comeback"}:
                forced = p
                break
        for _, np in game.moves(p):
            key = game.pos_key(np)
            if key not in seen:
                seen.add(key)
                frontier.append(np)
    assert forced is not None
    # the comeback restores a banked position verbatim
    for mv, np in game.moves(forced):
        assert mv[0] == "comeback"
        assert game.pos_key(np) in {game.pos_key(e) for e in forced.entries}
