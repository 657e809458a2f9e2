"""Exact solver for the Maker-Breaker resolving game.

State is a pair of disjoint claim bitmasks. Resolver has won once his claims
hit every minimal distinguisher mask; Spoiler has won once some distinguisher
is fully inside her claims, because then even claiming every remaining vertex
cannot resolve (resolving sets are superset-closed). Deadness depends only on
Spoiler's claims and Resolver's win only on his own, so each check runs after
the relevant player's move.

Search values pack (winner, move count) into one integer: positive means
Resolver wins, negative Spoiler, and the magnitude BIG - moves rewards faster
wins. Resolver maximizes and Spoiler minimizes, which realizes the value
convention: the winner takes the fewest own moves, the loser drags the
winner out as long as possible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import (
    DistanceMatrix,
    Graph,
    GuardExceededError,
    bits_of,
    require_connected,
)
from .resolving import graph_context, resolves_mask

RESOLVER = "R"
SPOILER = "S"

ONGOING = "ongoing"
R_WON = "r_won"
S_WON = "s_won"


@dataclass(frozen=True)
class GameState:
    r_claimed: int
    s_claimed: int
    first_player: str

    def __post_init__(self):
        if self.r_claimed & self.s_claimed:
            raise ValueError("claim sets must be disjoint")
        if self.first_player not in (RESOLVER, SPOILER):
            raise ValueError("first_player must be 'R' or 'S'")
        pr = self.r_claimed.bit_count()
        ps = self.s_claimed.bit_count()
        if self.first_player == RESOLVER:
            if not (pr == ps or pr == ps + 1):
                raise ValueError("claim counts inconsistent with Resolver moving first")
        else:
            if not (ps == pr or ps == pr + 1):
                raise ValueError("claim counts inconsistent with Spoiler moving first")

    @classmethod
    def initial(cls, first_player: str) -> "GameState":
        return cls(0, 0, first_player)

    @classmethod
    def from_sets(cls, r, s, first_player: str) -> "GameState":
        rm = 0
        for v in r:
            rm |= 1 << v
        sm = 0
        for v in s:
            sm |= 1 << v
        return cls(rm, sm, first_player)

    @property
    def to_move(self) -> str:
        pr = self.r_claimed.bit_count()
        ps = self.s_claimed.bit_count()
        if self.first_player == RESOLVER:
            return RESOLVER if pr == ps else SPOILER
        return SPOILER if ps == pr else RESOLVER


@dataclass(frozen=True)
class GameValue:
    winner: str
    winner_moves: int


@dataclass(frozen=True)
class OutcomeRecord:
    outcome: str  # "R" | "S" | "N"
    r_mb: Optional[int]
    r_mb_s: Optional[int]
    s_mb: Optional[int]
    s_mb_s: Optional[int]

    def to_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "r_mb": self.r_mb,
            "r_mb_s": self.r_mb_s,
            "s_mb": self.s_mb,
            "s_mb_s": self.s_mb_s,
        }


class Solver:
    """Memoized exhaustive search over one graph.

    One transposition table per first player; the table key packs both claim
    masks into a single int, and whose turn it is follows from the claim
    counts. A Solver instance can be reused across queries (sessions do).
    """

    def __init__(self, g: Graph, guard: int = 16):
        require_connected(g)
        if g.n > guard:
            raise GuardExceededError(
                f"graph order {g.n} exceeds the solver guard {guard}"
            )
        self.graph = g
        self.n = g.n
        self.full = g.full_mask
        _, self.crit = graph_context(g)
        self.big = g.n + 2
        self._tables: dict[str, dict[int, int]] = {RESOLVER: {}, SPOILER: {}}
        self._skip_tables: dict[tuple[str, str], dict[int, int]] = {}

    # -- terminal tests ----------------------------------------------------

    def resolver_has_won(self, r_mask: int) -> bool:
        return resolves_mask(r_mask, self.crit)

    def position_dead(self, s_mask: int) -> bool:
        """True when even r plus all unclaimed vertices cannot resolve."""
        avail = self.full & ~s_mask
        for m in self.crit:
            if not (m & avail):
                return True
        return False

    def terminal_status(self, state: GameState) -> str:
        if self.resolver_has_won(state.r_claimed):
            return R_WON
        if self.position_dead(state.s_claimed):
            return S_WON
        return ONGOING

    # -- full game ----------------------------------------------------------

    def _search(self, r, s, pr, ps, mover, memo) -> int:
        if memo is not None:
            key = (r << self.n) | s
            cached = memo.get(key)
            if cached is not None:
                return cached
        big = self.big
        crit = self.crit
        if mover == SPOILER:
            # Resolver moved last (or the game just started): check his win.
            for m in crit:
                if not (m & r):
                    break
            else:
                val = big - pr
                if memo is not None:
                    memo[key] = val
                return val
        else:
            # Spoiler moved last (or the game just started): check deadness.
            avail = self.full & ~s
            for m in crit:
                if not (m & avail):
                    val = ps - big
                    if memo is not None:
                        memo[key] = val
                    return val
        unclaimed = self.full & ~(r | s)
        search = self._search
        if mover == RESOLVER:
            best = -2 * big
            target = big - (pr + 1)  # fastest win still possible
            m = unclaimed
            while m:
                b = m & -m
                m ^= b
                v = search(r | b, s, pr + 1, ps, SPOILER, memo)
                if v > best:
                    best = v
                    if best == target:
                        break
        else:
            best = 2 * big
            target = (ps + 1) - big
            m = unclaimed
            while m:
                b = m & -m
                m ^= b
                v = search(r, s | b, pr, ps + 1, RESOLVER, memo)
                if v < best:
                    best = v
                    if best == target:
                        break
        if memo is not None:
            memo[key] = best
        return best

    def _decode(self, value: int) -> GameValue:
        if value > 0:
            return GameValue(RESOLVER, self.big - value)
        return GameValue(SPOILER, value + self.big)

    def solve(self, first_player: str, memoized: bool = True) -> GameValue:
        if first_player not in (RESOLVER, SPOILER):
            raise ValueError("first_player must be 'R' or 'S'")
        memo = self._tables[first_player] if memoized else None
        return self._decode(self._search(0, 0, 0, 0, first_player, memo))

    def value_of(self, state: GameState) -> GameValue:
        memo = self._tables[state.first_player]
        return self._decode(
            self._search(
                state.r_claimed,
                state.s_claimed,
                state.r_claimed.bit_count(),
                state.s_claimed.bit_count(),
                state.to_move,
                memo,
            )
        )

    def outcome_record(self) -> OutcomeRecord:
        rv = self.solve(RESOLVER)
        sv = self.solve(SPOILER)
        if rv.winner == RESOLVER and sv.winner == RESOLVER:
            return OutcomeRecord("R", rv.winner_moves, sv.winner_moves, None, None)
        if rv.winner == SPOILER and sv.winner == SPOILER:
            return OutcomeRecord("S", None, None, rv.winner_moves, sv.winner_moves)
        if rv.winner == RESOLVER and sv.winner == SPOILER:
            return OutcomeRecord("N", rv.winner_moves, None, None, sv.winner_moves)
        raise AssertionError(
            "second-player-win pattern detected; the solver is broken"
        )

    def best_move(self, state: GameState, mover: Optional[str] = None) -> int:
        """An unclaimed vertex achieving the state's game value, lowest index
        first. The state must be ongoing and it must be mover's turn."""
        if mover is None:
            mover = state.to_move
        elif mover != state.to_move:
            raise ValueError(f"it is not {mover}'s turn in this state")
        if self.terminal_status(state) != ONGOING:
            raise ValueError("game is already decided")
        memo = self._tables[state.first_player]
        r, s = state.r_claimed, state.s_claimed
        pr, ps = r.bit_count(), s.bit_count()
        target = self._search(r, s, pr, ps, mover, memo)
        for v in bits_of(self.full & ~(r | s)):
            b = 1 << v
            if mover == RESOLVER:
                val = self._search(r | b, s, pr + 1, ps, SPOILER, memo)
            else:
                val = self._search(r, s | b, pr, ps + 1, RESOLVER, memo)
            if val == target:
                return v
        raise AssertionError("no move achieves the computed value")

    # -- skip variant ---------------------------------------------------------

    def _search_skip(self, r, s, pr, ps, mover, may_skip, memo) -> int:
        key = ((r << self.n) | s) << 1 | (0 if mover == RESOLVER else 1)
        cached = memo.get(key)
        if cached is not None:
            return cached
        big = self.big
        crit = self.crit
        resolved = True
        for m in crit:
            if not (m & r):
                resolved = False
                break
        if resolved:
            memo[key] = big - pr
            return big - pr
        avail = self.full & ~s
        for m in crit:
            if not (m & avail):
                memo[key] = ps - big
                return ps - big
        unclaimed = self.full & ~(r | s)
        other = SPOILER if mover == RESOLVER else RESOLVER
        values = []
        if mover == RESOLVER:
            best = -2 * big
            m = unclaimed
            while m:
                b = m & -m
                m ^= b
                v = self._search_skip(r | b, s, pr + 1, ps, other, may_skip, memo)
                if v > best:
                    best = v
            if mover == may_skip:
                v = self._search_skip(r, s, pr, ps, other, may_skip, memo)
                if v > best:
                    best = v
        else:
            best = 2 * big
            m = unclaimed
            while m:
                b = m & -m
                m ^= b
                v = self._search_skip(r, s | b, pr, ps + 1, other, may_skip, memo)
                if v < best:
                    best = v
            if mover == may_skip:
                v = self._search_skip(r, s, pr, ps, other, may_skip, memo)
                if v < best:
                    best = v
        memo[key] = best
        return best

    def solve_with_skips(self, first_player: str, may_skip: str) -> GameValue:
        """Same game, but the designated player may pass any turn. A pass
        consumes the turn and claims nothing. Used as the no-skip oracle."""
        if first_player not in (RESOLVER, SPOILER):
            raise ValueError("first_player must be 'R' or 'S'")
        if may_skip not in (RESOLVER, SPOILER):
            raise ValueError("may_skip must be 'R' or 'S'")
        memo = self._skip_tables.setdefault((first_player, may_skip), {})
        return self._decode(
            self._search_skip(0, 0, 0, 0, first_player, may_skip, memo)
        )

    # -- bounded-depth refutation ------------------------------------------

    def resolver_cannot_win_within(self, first_player: str, budget: int) -> bool:
        return resolver_cannot_win_within(self.graph, first_player, budget)


# -- module-level operation surface ------------------------------------------


def terminal_status(g: Graph, d: DistanceMatrix, state: GameState) -> str:
    """Resolver wins iff his claims resolve; otherwise Spoiler has won iff
    the claims plus every unclaimed vertex no longer resolve; else ongoing.
    The Resolver check runs first."""
    del d  # distances are implied by the cached graph context
    return _solver_for(g).terminal_status(state)


_solver_cache: dict[Graph, Solver] = {}


def _solver_for(g: Graph, guard: int = 16) -> Solver:
    solver = _solver_cache.get(g)
    if solver is None:
        solver = Solver(g, guard=guard)
        if len(_solver_cache) > 64:
            _solver_cache.clear()
        _solver_cache[g] = solver
    return solver


def solve(g: Graph, first_player: str, guard: int = 16) -> GameValue:
    return _solver_for(g, guard).solve(first_player)


def outcome_record(g: Graph, guard: int = 16) -> OutcomeRecord:
    return _solver_for(g, guard).outcome_record()


def best_move(g: Graph, state: GameState, mover: str, guard: int = 16) -> int:
    return _solver_for(g, guard).best_move(state, mover)


def solve_with_skips(
    g: Graph, first_player: str, may_skip: str, guard: int = 16
) -> GameValue:
    return _solver_for(g, guard).solve_with_skips(first_player, may_skip)


def resolver_cannot_win_within(
    g: Graph,
    first_player: str,
    move_budget: int,
    enumeration_guard: int = 2 * 10**6,
    node_budget: int = 10**7,
) -> bool:
    """True iff optimal Spoiler play refutes every Resolver attempt to own a
    resolving set within ``move_budget`` of his own moves.

    Works on the family of inclusion-minimal resolving sets of size at most
    the budget. Both players may be restricted to vertices of still-live
    members: a member with a Spoiler vertex is dead forever, vertices outside
    all live members are useless to Resolver, and claiming one is never
    better for Spoiler than a useful block (Breaker monotonicity).
    """
    require_connected(g)
    if move_budget < 1:
        raise ValueError("move_budget must be positive")
    from math import comb

    from .resolving import _masks_of_size

    n = g.n
    total = sum(comb(n, k) for k in range(1, min(move_budget, n) + 1))
    if total > enumeration_guard:
        raise GuardExceededError(
            f"enumerating resolving sets of size <= {move_budget} needs {total} checks"
        )
    _, crit = graph_context(g)
    minimal: list[int] = []
    for k in range(1, min(move_budget, n) + 1):
        for w in _masks_of_size(n, k):
            if resolves_mask(w, crit) and not any(m & w == m for m in minimal):
                minimal.append(w)
    if not minimal:
        return True
    full = g.full_mask
    nodes = 0

    def r_can_force(r, s, mover, r_left, members) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise GuardExceededError("bounded-depth search exceeded its node budget")
        live = [m for m in members if not (m & s)]
        if not live:
            return False
        if mover == RESOLVER:
            if r_left == 0:
                return False
            useful = 0
            for m in live:
                useful |= m
            useful &= ~r
            mm = useful
            while mm:
                b = mm & -mm
                mm ^= b
                nr = r | b
                if any(m & ~nr == 0 for m in live):
                    return True
                if r_left > 1 and r_can_force(nr, s, SPOILER, r_left - 1, live):
                    return True
            return False
        # Spoiler to move: she refutes if some reply leaves Resolver stuck.
        unclaimed = full & ~(r | s)
        if not unclaimed:
            return False  # nothing left to claim, Resolver has not won
        useful = 0
        for m in live:
            useful |= m
        useful &= unclaimed
        options = useful if useful else (unclaimed & -unclaimed)
        mm = options
        while mm:
            b = mm & -mm
            mm ^= b
            if not r_can_force(r, s | b, RESOLVER, r_left, live):
                return False
        return True

    return not r_can_force(0, 0, first_player, move_budget, minimal)
