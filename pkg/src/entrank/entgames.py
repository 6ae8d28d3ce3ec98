"""The three pursuit games behind entanglement, solved exactly.

All variants share the same skeleton: a thief walks along edges, cops
occupy at most ``k`` vertices, the thief may never move onto an
occupied vertex.  A play that halts (the thief is stuck) is a cops win;
an infinite play is a thief win.

* plain variant: cops may skip, add a cop on the thief's vertex
  (capacity permitting), or move an already placed cop onto it;
* retirement variant ("et"): cops may drop any subset of placed cops,
  optionally adding one on the thief's vertex;
* virtual variant ("entv"): positions carry a second set of *virtual*
  cops that do not block the thief; if the thief stands on a virtual
  cop it materializes (forced move), otherwise cops combine one
  retirement-style update of the blocking set with one update of the
  virtual set -- retire any subset of it and optionally reserve one new
  vertex anywhere.  The union of both sets never exceeds ``k``.

The solver enumerates the reachable arena breadth-first into flat
adjacency arrays and computes the cops' forced-reachability set toward
thief-stuck positions by the standard backward counting pass.  The
extracted certificates are positional: cops follow strictly decreasing
attractor ranks; a winning thief simply stays outside the attractor.
"""

from __future__ import annotations

from array import array

from .digraph import Digraph
from .gamecore import (
    COPS,
    DEFAULT_POSITION_CEILING,
    THIEF,
    ArenaCeilingError,
    GameResult,
    StrategyCertificate,
)

__all__ = [
    "PursuitGame",
    "solve_pursuit",
    "solve_ent_game",
    "solve_et_game",
    "solve_entv_game",
    "entanglement",
    "et_min_k",
    "entv_min_k",
]

INIT = ("init",)

_VARIANTS = ("ent", "et", "entv")


def _submasks(m: int) -> list[int]:
    """All submasks of ``m``, ascending."""
    out = [0]
    s = m
    while s:
        out.append(s)
        s = (s - 1) & m
    out.sort()
    return out


class PursuitGame:
    """One pursuit game instance in the shared game protocol.

    Positions are ``("init",)`` (the thief is about to pick a starting
    vertex) or ``(vertex, cop_mask, virtual_mask, turn)``.  The plain
    and retirement variants keep the virtual mask at zero.
    """

    finite_plays = False

    def __init__(self, g: Digraph, k: int, variant: str = "ent"):
        if variant not in _VARIANTS:
            raise ValueError(f"unknown pursuit variant {variant!r}")
        if not 0 <= k <= g.n:
            raise ValueError("cop count k must satisfy 0 <= k <= |V|")
        self.g = g
        self.k = k
        self.variant = variant
        self.game_id = variant
        self._cop_cache: dict[tuple[int, int, int], list[tuple[int, int]]] = {}

    # -- move rules ------------------------------------------------------

    def thief_targets(self, v: int, cmask: int) -> list[int]:
        return [w for w in self.g.successors(v) if not (cmask >> w) & 1]

    def cop_configs(self, v: int, cmask: int, vmask: int) -> list[tuple[int, int]]:
        """Legal ``(cop_mask, virtual_mask)`` results of one Cops turn."""
        key = (v, cmask, vmask)
        got = self._cop_cache.get(key)
        if got is None:
            got = self._cop_cache[key] = self._cop_configs(v, cmask, vmask)
        return got

    def _cop_configs(self, v: int, cmask: int, vmask: int) -> list[tuple[int, int]]:
        k = self.k
        vb = 1 << v
        if self.variant == "ent":
            configs = {cmask}
            if cmask.bit_count() < k:
                configs.add(cmask | vb)
            for x in range(self.g.n):
                if (cmask >> x) & 1:
                    configs.add((cmask & ~(1 << x)) | vb)
            return sorted((c, 0) for c in configs)
        if self.variant == "et":
            configs = set()
            for s in _submasks(cmask):
                configs.add(s)
                if (s | vb).bit_count() <= k:
                    configs.add(s | vb)
            return sorted((c, 0) for c in configs)
        # virtual variant
        if (vmask >> v) & 1:
            return [(cmask | vb, vmask & ~vb)]
        n = self.g.n
        out = set()
        for s in _submasks(cmask):
            for c2 in (s, s | vb):
                for t in _submasks(vmask):
                    if c2 & t:
                        continue
                    if (c2 | t).bit_count() <= k:
                        out.add((c2, t))
                    for w in range(n):
                        wb = 1 << w
                        t2 = t | wb
                        if t2 == t or c2 & wb:
                            continue
                        if (c2 | t2).bit_count() <= k:
                            out.add((c2, t2))
        return sorted(out)

    # -- game protocol ----------------------------------------------------

    def initial_position(self):
        return INIT

    def owner(self, pos) -> str:
        if pos == INIT:
            return THIEF
        return pos[3]

    def winner_if_terminal(self, pos) -> str | None:
        if self.owner(pos) == THIEF and not self.moves(pos):
            return COPS
        return None

    def moves(self, pos):
        if pos == INIT:
            return [(("start", v), (v, 0, 0, COPS)) for v in self.g.vertices()]
        v, cmask, vmask, turn = pos
        if turn == THIEF:
            return [
                (("to", w), (w, cmask, vmask, COPS))
                for w in self.thief_targets(v, cmask)
            ]
        out = []
        for c2, t2 in self.cop_configs(v, cmask, vmask):
            mk = ("occupy", _verts(c2), _verts(t2))
            out.append((mk, (v, c2, t2, THIEF)))
        return out

    def pos_key(self, pos):
        if pos == INIT:
            return INIT
        v, cmask, vmask, turn = pos
        return (v, _verts(cmask), _verts(vmask), turn)

    def memo_key(self, pos):
        return pos


def _verts(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def solve_pursuit(g: Digraph, k: int, variant: str = "ent",
                  ceiling: int | None = None) -> GameResult:
    """Exact winner of the chosen pursuit variant, with a certificate."""
    game = PursuitGame(g, k, variant)
    limit = DEFAULT_POSITION_CEILING if ceiling is None else ceiling

    # breadth-first arena enumeration into flat CSR arrays
    positions: list = [INIT]
    index: dict = {INIT: 0}
    flat = array("l")
    offsets = array("l", [0])
    thief_owned = bytearray()

    i = 0
    while i < len(positions):
        pos = positions[i]
        thief_owned.append(1 if game.owner(pos) == THIEF else 0)
        if pos == INIT:
            targets = [(v, 0, 0, COPS) for v in g.vertices()]
        else:
            v, cmask, vmask, turn = pos
            if turn == THIEF:
                targets = [
                    (w, cmask, vmask, COPS)
                    for w in game.thief_targets(v, cmask)
                ]
            else:
                targets = [
                    (v, c2, t2, THIEF)
                    for c2, t2 in game.cop_configs(v, cmask, vmask)
                ]
        for q in targets:
            j = index.get(q)
            if j is None:
                j = len(positions)
                if j >= limit:
                    raise ArenaCeilingError(variant, limit)
                index[q] = j
                positions.append(q)
            flat.append(j)
        offsets.append(len(flat))
        i += 1

    count = len(positions)

    # predecessor lists by counting sort
    indeg = array("l", [0]) * count
    for j in flat:
        indeg[j] += 1
    poff = array("l", [0] * (count + 1))
    for p in range(count):
        poff[p + 1] = poff[p] + indeg[p]
    preds = array("l", [0] * len(flat))
    cursor = array("l", poff[:count])
    for p in range(count):
        for e in range(offsets[p], offsets[p + 1]):
            q = flat[e]
            preds[cursor[q]] = p
            cursor[q] += 1

    # backward reachability: cops force the play into stuck thief positions
    rank = array("l", [-1] * count)
    need = array("l", [0] * count)
    queue = array("l")
    for p in range(count):
        deg = offsets[p + 1] - offsets[p]
        if thief_owned[p]:
            need[p] = deg
            if deg == 0:
                rank[p] = 0
                queue.append(p)
        else:
            need[p] = 1
    qi = 0
    while qi < len(queue):
        p = queue[qi]
        qi += 1
        r = rank[p] + 1
        for e in range(poff[p], poff[p + 1]):
            q = preds[e]
            if rank[q] != -1:
                continue
            need[q] -= 1
            if need[q] == 0:
                rank[q] = r
                queue.append(q)

    winner = COPS if rank[0] != -1 else THIEF
    cert = StrategyCertificate(variant, k, winner)

    # walk the strategy-restricted graph, recording the winner's choices
    seen = bytearray(count)
    stack = [0]
    seen[0] = 1
    while stack:
        p = stack.pop()
        lo, hi = offsets[p], offsets[p + 1]
        if lo == hi:
            continue
        wins = thief_owned[p] == (1 if winner == THIEF else 0)
        if wins:
            chosen = -1
            if winner == COPS:
                r = rank[p]
                for e in range(lo, hi):
                    q = flat[e]
                    if 0 <= rank[q] < r:
                        chosen = q
                        break
            else:
                for e in range(lo, hi):
                    q = flat[e]
                    if rank[q] == -1:
                        chosen = q
                        break
            if chosen < 0:
                raise AssertionError("no progressing move at a won position")
            cert.moves[game.pos_key(positions[p])] = _move_key(
                positions[p], positions[chosen]
            )
            nxt = [chosen]
        else:
            nxt = [flat[e] for e in range(lo, hi)]
        for q in nxt:
            if not seen[q]:
                seen[q] = 1
                stack.append(q)
    return GameResult(winner, cert)


def _move_key(src, dst):
    if src == INIT:
        return ("start", dst[0])
    if src[3] == THIEF:
        return ("to", dst[0])
    return ("occupy", _verts(dst[1]), _verts(dst[2]))


def solve_ent_game(g: Digraph, k: int, ceiling: int | None = None) -> GameResult:
    return solve_pursuit(g, k, "ent", ceiling)


def solve_et_game(g: Digraph, k: int, ceiling: int | None = None) -> GameResult:
    return solve_pursuit(g, k, "et", ceiling)


def solve_entv_game(g: Digraph, k: int, ceiling: int | None = None) -> GameResult:
    return solve_pursuit(g, k, "entv", ceiling)


def _min_k(g: Digraph, variant: str, ceiling: int | None) -> int:
    for k in range(g.n + 1):
        if solve_pursuit(g, k, variant, ceiling).winner == COPS:
            return k
    raise AssertionError("cops always win once every vertex can hold a cop")


def entanglement(g: Digraph, ceiling: int | None = None) -> int:
    """Least number of cops that wins the plain pursuit game on ``g``."""
    return _min_k(g, "ent", ceiling)


def et_min_k(g: Digraph, ceiling: int | None = None) -> int:
    """Least winning cop count in the retirement variant."""
    return _min_k(g, "et", ceiling)


def entv_min_k(g: Digraph, ceiling: int | None = None) -> int:
    """Least winning cop count in the virtual-cop variant."""
    return _min_k(g, "entv", ceiling)
