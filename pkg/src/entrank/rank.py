"""Digraph rank and the two shrinking games that characterize it.

The rank of a digraph is defined by recursion on its strongly connected
structure: an acyclic graph has rank 0; a strongly connected graph with
at least one edge has rank ``1 + min`` over single-vertex deletions;
anything else has the maximum rank of its nontrivial components.

Two games compute the same number.  In the plain shrinking game the
thief repeatedly enters a nontrivial component and the cops delete one
of its vertices, spending one unit of a budget of ``k``; the cops win
iff the graph runs out of cycles before the budget runs out.  The
comeback variant additionally lets the thief return to any component
that was reachable *ahead* of an earlier choice, restoring the budget
in force back then.  Both games are finite and solved exactly by
backward induction.
"""

from __future__ import annotations

from .digraph import Digraph, SccDecomposition, iter_mask, scc_decompose
from .gamecore import (
    COPS,
    THIEF,
    ArenaCeilingError,
    GameResult,
    solve_finite_game,
)

__all__ = [
    "rank",
    "RankShrinkGame",
    "solve_rank_game",
    "rank_via_game",
    "CPos",
    "ComebackGame",
    "solve_comeback_game",
    "comeback_min_k",
]


class _RankMemo:
    """Rank recursion memoized on vertex-subset bitmasks."""

    __slots__ = ("g", "values", "sccs")

    def __init__(self, g: Digraph):
        self.g = g
        self.values: dict[int, int] = {0: 0}
        self.sccs: dict[int, SccDecomposition] = {}

    def decompose(self, mask: int) -> SccDecomposition:
        d = self.sccs.get(mask)
        if d is None:
            d = self.sccs[mask] = scc_decompose(self.g, mask)
        return d

    def rank(self, mask: int) -> int:
        r = self.values.get(mask)
        if r is not None:
            return r
        d = self.decompose(mask)
        masks = d.nontrivial_masks
        if not masks:
            r = 0
        elif len(masks) == 1 and masks[0] == mask:
            # the live subgraph is one nontrivial strongly connected piece
            r = 1 + min(self.rank(mask & ~(1 << v)) for v in iter_mask(mask))
        else:
            r = max(self.rank(m) for m in masks)
        self.values[mask] = r
        return r


def rank(g: Digraph) -> int:
    """Exact rank of ``g``."""
    return _RankMemo(g).rank(g.full_mask)


class RankShrinkGame:
    """Thief-and-cops shrinking game with a deletion budget of ``k``.

    Positions are ``(mask, turn, budget)``.  On the thief's turn the
    play halts with a cops win if the masked graph is acyclic, and with
    a thief win if cycles remain but the budget is 0; otherwise the
    thief enters a nontrivial component.  The cops then delete one of
    its vertices, decrementing the budget.
    """

    game_id = "rank"
    finite_plays = True

    def __init__(self, g: Digraph, k: int):
        if k < 0:
            raise ValueError("budget k must be >= 0")
        self.g = g
        self.k = k
        self._sccs: dict[int, SccDecomposition] = {}

    def _decompose(self, mask: int) -> SccDecomposition:
        d = self._sccs.get(mask)
        if d is None:
            d = self._sccs[mask] = scc_decompose(self.g, mask)
        return d

    def initial_position(self):
        return (self.g.full_mask, THIEF, self.k)

    def owner(self, pos) -> str:
        return pos[1]

    def winner_if_terminal(self, pos) -> str | None:
        mask, turn, n = pos
        if turn != THIEF:
            return None
        if not self._decompose(mask).nontrivial:
            return COPS
        if n == 0:
            return THIEF
        return None

    def moves(self, pos):
        mask, turn, n = pos
        out = []
        if turn == THIEF:
            for cmask in self._decompose(mask).nontrivial_masks:
                out.append(
                    (("enter", tuple(iter_mask(cmask))), (cmask, COPS, n))
                )
        else:
            for v in iter_mask(mask):
                out.append(
                    (("remove", v), (mask & ~(1 << v), THIEF, n - 1))
                )
        return out

    def pos_key(self, pos):
        mask, turn, n = pos
        return (tuple(iter_mask(mask)), turn, n)

    def memo_key(self, pos):
        return pos


def solve_rank_game(g: Digraph, k: int) -> GameResult:
    """Winner and positional certificate of the shrinking game at ``k``."""
    return solve_finite_game(RankShrinkGame(g, k))


def rank_via_game(g: Digraph) -> int:
    """Least budget with which the cops win the shrinking game."""
    for k in range(g.n + 1):
        if solve_rank_game(g, k).winner == COPS:
            return k
    raise AssertionError("cops always win once the budget covers every vertex")


class CPos:
    """Hash-consed position of the comeback game.

    ``entries`` is the comeback collection: cops-turn positions the
    thief may return to, canonically ordered by intern id.  Structural
    equality is identity by construction, so positions hash and compare
    at pointer speed.
    """

    __slots__ = ("uid", "mask", "turn", "entries", "n")

    def __init__(self, uid: int, mask: int, turn: str, entries, n: int):
        self.uid = uid
        self.mask = mask
        self.turn = turn
        self.entries = entries
        self.n = n

    def __repr__(self) -> str:
        return (
            f"CPos({sorted(iter_mask(self.mask))}, {self.turn}, "
            f"|L|={len(self.entries)}, n={self.n})"
        )


class ComebackGame:
    """Shrinking game where the thief may revisit bypassed components.

    When the thief enters component ``C`` of the current graph, every
    nontrivial component reachable ahead of ``C`` is recorded -- with
    the comeback collection and budget in force at that moment -- and
    stays available as a comeback target for the rest of the play.  The
    cops' deletion move keeps the collection unchanged.

    Halting, on the thief's turn: cycles left and budget 0 is an
    immediate thief win whatever the collection holds; an acyclic graph
    with a nonempty collection forces a comeback; an acyclic graph with
    an empty collection is a cops win.

    Recorded positions are interned, which both bounds memory and makes
    the (finite, cycle-free) position graph explicit.  The intern table
    is capped; overflowing raises :class:`ArenaCeilingError`.
    """

    game_id = "comeback"
    finite_plays = True

    #: default cap on distinct interned positions
    DEFAULT_CEILING = 300_000

    def __init__(self, g: Digraph, k: int, ceiling: int | None = None):
        if k < 0:
            raise ValueError("budget k must be >= 0")
        self.g = g
        self.k = k
        self.ceiling = self.DEFAULT_CEILING if ceiling is None else ceiling
        self._intern: dict = {}
        self._sccs: dict[int, SccDecomposition] = {}
        self._keys: dict[int, tuple] = {}
        self._init = self._pos(g.full_mask, THIEF, (), k)

    def _pos(self, mask: int, turn: str, entries, n: int) -> CPos:
        key = (mask, turn, tuple(e.uid for e in entries), n)
        p = self._intern.get(key)
        if p is None:
            if len(self._intern) >= self.ceiling:
                raise ArenaCeilingError(self.game_id, self.ceiling)
            p = CPos(len(self._intern), mask, turn, entries, n)
            self._intern[key] = p
        return p

    def _decompose(self, mask: int) -> SccDecomposition:
        d = self._sccs.get(mask)
        if d is None:
            d = self._sccs[mask] = scc_decompose(self.g, mask)
        return d

    def initial_position(self) -> CPos:
        return self._init

    def owner(self, pos: CPos) -> str:
        return pos.turn

    def winner_if_terminal(self, pos: CPos) -> str | None:
        if pos.turn != THIEF:
            return None
        if not self._decompose(pos.mask).nontrivial:
            return COPS if not pos.entries else None
        if pos.n == 0:
            return THIEF
        return None

    def moves(self, pos: CPos):
        out = []
        if pos.turn == THIEF:
            d = self._decompose(pos.mask)
            if d.nontrivial and pos.n > 0:
                for i in sorted(d.nontrivial):
                    cmask = d.component_masks[i]
                    recorded = [
                        self._pos(d.component_masks[j], COPS, pos.entries, pos.n)
                        for j in d.ahead_of(i)
                    ]
                    merged = sorted(
                        set(pos.entries).union(recorded), key=lambda e: e.uid
                    )
                    target = self._pos(cmask, COPS, tuple(merged), pos.n)
                    out.append((("enter", tuple(iter_mask(cmask))), target))
            for b in pos.entries:
                out.append((("comeback", self.pos_key(b)), b))
        else:
            for v in iter_mask(pos.mask):
                nxt = self._pos(
                    pos.mask & ~(1 << v), THIEF, pos.entries, pos.n - 1
                )
                out.append((("remove", v), nxt))
        return out

    def pos_key(self, pos: CPos):
        k = self._keys.get(pos.uid)
        if k is None:
            children = tuple(sorted(self.pos_key(b) for b in pos.entries))
            k = (tuple(iter_mask(pos.mask)), pos.turn, pos.n, children)
            self._keys[pos.uid] = k
        return k

    def memo_key(self, pos: CPos) -> int:
        return pos.uid


def solve_comeback_game(g: Digraph, k: int, ceiling: int | None = None) -> GameResult:
    """Winner and certificate of the comeback game at budget ``k``.

    Raises :class:`ArenaCeilingError` when the interned position count
    exceeds ``ceiling`` (a reported resource failure, never a silent
    wrong answer).
    """
    return solve_finite_game(ComebackGame(g, k, ceiling=ceiling))


def comeback_min_k(g: Digraph, ceiling: int | None = None) -> int:
    """Least budget with which the cops win the comeback game."""
    for k in range(g.n + 1):
        if solve_comeback_game(g, k, ceiling=ceiling).winner == COPS:
            return k
    raise AssertionError("cops always win once the budget covers every vertex")
