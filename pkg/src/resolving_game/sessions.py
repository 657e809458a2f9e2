"""In-memory play sessions: a human against the optimal engine.

Sessions are keyed by opaque tokens, mutate under a per-session lock, and
expire after an idle timeout. The engine side always plays the solver's
best move, so it never loses a game it can win.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field
from typing import Optional

from .families import FamilySpec
from .graphs import Graph, bits_of, is_connected
from .pairing import PairingNotApplicableError, PairingSet, construct_family_pairing
from .solver import ONGOING, RESOLVER, R_WON, SPOILER, S_WON, GameState, Solver
from .twins import QuickWin, spoiler_quick_win, twin_classes


class SessionError(ValueError):
    pass


class UnknownSessionError(KeyError):
    pass


class IllegalMoveError(SessionError):
    """Occupied vertex, out-of-turn move, or move in a finished game."""


@dataclass
class MoveRecord:
    player: str
    vertex: int
    status_after: str
    made_resolving: bool  # Resolver's claims resolve after this move
    killed_completion: bool  # the move made a resolving completion impossible

    def to_dict(self) -> dict:
        return {
            "player": self.player,
            "vertex": self.vertex,
            "status_after": self.status_after,
            "made_resolving": self.made_resolving,
            "killed_completion": self.killed_completion,
        }


@dataclass
class Session:
    id: str
    graph: Graph
    family: Optional[FamilySpec]
    human_role: str
    first_player: str
    solver: Solver
    state: GameState
    status: str = ONGOING
    history: list = field(default_factory=list)
    pairing: Optional[PairingSet] = None
    quick_win: Optional[QuickWin] = None
    solved: Optional[dict] = None
    touched: float = field(default_factory=time.time)
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def engine_role(self) -> str:
        return SPOILER if self.human_role == RESOLVER else RESOLVER

    def to_view(self) -> dict:
        s = self.state
        return {
            "id": self.id,
            "graph": self.graph.to_dict(),
            "family": self.family.to_dict() if self.family else None,
            "human_role": self.human_role,
            "first_player": self.first_player,
            "state": {
                "r_claimed": list(bits_of(s.r_claimed)),
                "s_claimed": list(bits_of(s.s_claimed)),
                "to_move": s.to_move if self.status == ONGOING else None,
            },
            "status": self.status,
            "history": [m.to_dict() for m in self.history],
            "resolver_set_resolving": self.solver.resolver_has_won(s.r_claimed),
            "position_dead": self.solver.position_dead(s.s_claimed),
            "solved": self.solved,
        }


class SessionStore:
    def __init__(
        self,
        idle_ttl_s: float = 3600.0,
        create_guard: int = 16,
        solve_record_guard: int = 12,
    ):
        self.idle_ttl_s = idle_ttl_s
        self.create_guard = create_guard
        self.solve_record_guard = solve_record_guard
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    # -- lifecycle -----------------------------------------------------------

    def _expire(self) -> None:
        now = time.time()
        dead = [
            sid
            for sid, s in self._sessions.items()
            if now - s.touched > self.idle_ttl_s
        ]
        for sid in dead:
            del self._sessions[sid]

    def create(
        self,
        graph: Graph,
        human_role: str,
        first_player: str,
        family: Optional[FamilySpec] = None,
    ) -> Session:
        if human_role not in (RESOLVER, SPOILER):
            raise SessionError("human_role must be 'R' or 'S'")
        if first_player not in (RESOLVER, SPOILER):
            raise SessionError("first_player must be 'R' or 'S'")
        if not is_connected(graph):
            raise SessionError("session graphs must be connected")
        if graph.n > self.create_guard:
            raise SessionError(
                f"graph order {graph.n} exceeds the session guard {self.create_guard}"
            )
        solver = Solver(graph, guard=self.create_guard)
        pairing = None
        if family is not None:
            try:
                pairing = construct_family_pairing(family)
            except (PairingNotApplicableError, ValueError):
                pairing = None
        session = Session(
            id=uuid.uuid4().hex,
            graph=graph,
            family=family,
            human_role=human_role,
            first_player=first_player,
            solver=solver,
            state=GameState.initial(first_player),
            pairing=pairing,
            quick_win=spoiler_quick_win(twin_classes(graph)),
        )
        if first_player != human_role:
            self._engine_move(session)
        with self._lock:
            self._expire()
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            self._expire()
            session = self._sessions.get(session_id)
        if session is None:
            raise UnknownSessionError(session_id)
        session.touched = time.time()
        return session

    # -- play ------------------------------------------------------------------

    def _apply(self, session: Session, player: str, vertex: int) -> None:
        s = session.state
        bit = 1 << vertex
        if player == RESOLVER:
            session.state = GameState(s.r_claimed | bit, s.s_claimed, s.first_player)
        else:
            session.state = GameState(s.r_claimed, s.s_claimed | bit, s.first_player)
        status = session.solver.terminal_status(session.state)
        session.status = status
        session.history.append(
            MoveRecord(
                player,
                vertex,
                status,
                made_resolving=status == R_WON,
                killed_completion=status == S_WON,
            )
        )

    def _engine_move(self, session: Session) -> None:
        if session.status != ONGOING:
            return
        vertex = session.solver.best_move(session.state)
        self._apply(session, session.engine_role, vertex)

    def play_move(self, session_id: str, vertex: int) -> Session:
        session = self.get(session_id)
        with session.lock:
            if session.status != ONGOING:
                raise IllegalMoveError("the game is already over")
            if not isinstance(vertex, int) or not (0 <= vertex < session.graph.n):
                raise SessionError(f"vertex {vertex!r} out of range")
            state = session.state
            if state.to_move != session.human_role:
                raise IllegalMoveError("it is not your turn")
            if (state.r_claimed | state.s_claimed) >> vertex & 1:
                raise IllegalMoveError(f"vertex {vertex} is already claimed")
            self._apply(session, session.human_role, vertex)
            self._engine_move(session)
        return session

    def hint(self, session_id: str) -> dict:
        """Optimal vertex for the human, tagged with the reason the engine
        would give: a twin-class grab, a pairing completion, or raw search."""
        session = self.get(session_id)
        with session.lock:
            if session.status != ONGOING:
                raise IllegalMoveError("the game is already over")
            if session.state.to_move != session.human_role:
                raise IllegalMoveError("it is not your turn")
            vertex = session.solver.best_move(session.state)
            tag = "search"
            if (
                session.human_role == SPOILER
                and session.quick_win is not None
                and any(vertex in cls for cls in session.quick_win.witnesses)
            ):
                tag = "twin-grab"
            elif (
                session.human_role == RESOLVER
                and session.pairing is not None
                and any(vertex in p for p in session.pairing.pairs)
            ):
                tag = "pairing-completion"
            return {"vertex": vertex, "tag": tag}

    def view(self, session_id: str) -> dict:
        """Full session view; computes the solved record lazily for graphs
        small enough for the guard."""
        session = self.get(session_id)
        with session.lock:
            if session.solved is None and session.graph.n <= self.solve_record_guard:
                session.solved = session.solver.outcome_record().to_dict()
            return session.to_view()
