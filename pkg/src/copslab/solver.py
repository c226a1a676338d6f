"""Ground-truth game solving by retrograde analysis over the full state space.

States are (sorted cop multiset, robber vertex, side to move); cops are
interchangeable, which shrinks the space by up to k!. Values count plies
(half-moves) until capture under optimal play from both sides; a missing
entry after a completed solve means the robber survives forever. Backward
induction runs as a BFS from the capture states, with per-state escape
counters for robber-to-move states, so distance-to-mate comes out for free.

Reporting converts plies into "cop moves including the initial placement"
(placement is cop move 1), the single currency shared with the engine and
the path-hunting strategy. Large cop counts explode the joint-move
enumeration: the solver only enforces the state budget, so callers gate on
`estimate_solver_work` before committing to anything past k = 4 or so.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from math import comb

from .engine import GameState
from .graphs import Graph
from .gyarfas import analyze_strategy
from .induced import longest_induced_path_order

DEFAULT_STATE_BUDGET = 50_000_000
# Joint-cop-move enumeration volume a solve is allowed before callers that
# gate on feasibility (theorem verification, optimal-robber construction)
# should skip it. Calibrated so a gated solve stays under a second.
DEFAULT_WORK_BUDGET = 10_000_000


class SolverBudgetError(RuntimeError):
    """State space exceeds the configured budget."""

    def __init__(self, required: int, budget: int):
        super().__init__(
            f"instance needs {required} states but the budget is {budget}; "
            f"rerun with a budget of at least {required}"
        )
        self.required = required
        self.budget = budget


@dataclass
class SolverTable:
    """Value map: (sorted cop tuple, robber vertex, cops_to_move) -> plies to capture.

    Missing keys are robber wins. States with the robber on a cop hold 0.
    """

    k: int
    n: int
    values: dict[tuple[tuple[int, ...], int, bool], int]

    def value(self, cops, robber: int, cops_to_move: bool) -> int | None:
        return self.values.get((tuple(sorted(cops)), robber, cops_to_move))


@dataclass(frozen=True)
class SolveResult:
    cop_win: bool
    optimal_capture_cop_moves: int | None
    best_initial_placement: tuple[int, ...] | None


def state_space_size(n: int, k: int) -> int:
    return comb(n + k - 1, k) * n * 2


def estimate_solver_work(g: Graph, k: int) -> int:
    """Joint-move enumeration volume: sum over cop multisets of per-cop options.

    This is the complete homogeneous symmetric sum h_k over (deg(v)+1) times
    the robber-position count, an upper bound on the solver's dominant cost.
    """
    h = [0] * (k + 1)
    h[0] = 1
    for v in range(g.n):
        w = g.degree(v) + 1
        for i in range(1, k + 1):
            h[i] += h[i - 1] * w
    return h[k] * max(g.n, 1)


def joint_cop_moves(g: Graph, cops: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All sorted cop multisets reachable in one joint move (each cop stays or steps).

    Enumeration groups cops sharing a vertex to avoid the k! blowup of naive
    products; output is sorted and duplicate-free.
    """
    groups = Counter(cops)
    per_group = []
    for v, c in sorted(groups.items()):
        opts = sorted(g.adj[v] | {v})
        per_group.append(list(combinations_with_replacement(opts, c)))
    out = set()
    for parts in product(*per_group):
        merged: list[int] = []
        for part in parts:
            merged.extend(part)
        merged.sort()
        out.add(tuple(merged))
    return sorted(out)


def solve(
    g: Graph, k: int, state_budget: int = DEFAULT_STATE_BUDGET
) -> tuple[SolverTable, SolveResult]:
    """Solve the k-cop game on g exactly.

    Returns the full table plus the placement-level verdict: the cops win iff
    some placement beats every robber start; the reported capture time counts
    the placement as cop move 1 and assumes value-maximizing robber starts.
    """
    if g.n == 0 or not g.is_connected():
        raise ValueError("solver requires a connected, non-empty graph")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    n = g.n
    required = state_space_size(n, k)
    if required > state_budget:
        raise SolverBudgetError(required, state_budget)

    cop_tuples = list(combinations_with_replacement(range(n), k))
    values: dict[tuple[tuple[int, ...], int, bool], int] = {}
    pending: dict[tuple[tuple[int, ...], int], int] = {}
    queue: deque[tuple[tuple[int, ...], int, bool]] = deque()

    for T in cop_tuples:
        occupied = set(T)
        for r in range(n):
            if r in occupied:
                values[(T, r, True)] = 0
                values[(T, r, False)] = 0
                queue.append((T, r, True))
                queue.append((T, r, False))
            else:
                # escapes left for the robber-to-move state (T, r)
                pending[(T, r)] = g.degree(r) + 1

    moves_cache: dict[tuple[int, ...], list[tuple[int, ...]]] = {}

    while queue:
        state = queue.popleft()
        T, r, cops_to_move = state
        m = values[state]
        if cops_to_move:
            # Predecessors: robber-to-move states that could step into this one.
            for r_prev in (r, *g.adj[r]):
                key = (T, r_prev)
                cnt = pending.get(key)
                if cnt is None:
                    continue
                if cnt == 1:
                    del pending[key]
                    values[(T, r_prev, False)] = m + 1
                    queue.append((T, r_prev, False))
                else:
                    pending[key] = cnt - 1
        else:
            # Predecessors: cops-to-move states one joint move away (the
            # stay-or-step relation on sorted multisets is symmetric).
            moves = moves_cache.get(T)
            if moves is None:
                moves = joint_cop_moves(g, T)
                moves_cache[T] = moves
            for T_prev in moves:
                key = (T_prev, r, True)
                if key not in values:
                    values[key] = m + 1
                    queue.append(key)

    table = SolverTable(k=k, n=n, values=values)

    best_T = None
    best_worst = None
    for T in cop_tuples:
        worst = 0
        for r in range(n):
            m = values.get((T, r, True))
            if m is None:
                worst = None
                break
            worst = max(worst, m)
        if worst is not None and (best_worst is None or worst < best_worst):
            best_worst = worst
            best_T = T  # lex iteration: first minimum is the smallest tuple
    if best_T is None:
        return table, SolveResult(False, None, None)
    return table, SolveResult(True, 1 + (best_worst + 1) // 2, best_T)


def cop_number(
    g: Graph, k_max: int, state_budget: int = DEFAULT_STATE_BUDGET
) -> int | None:
    """Smallest k <= k_max with a cop win, or None meaning "> k_max"."""
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    for k in range(1, k_max + 1):
        _, result = solve(g, k, state_budget)
        if result.cop_win:
            return k
    return None


class OptimalCop:
    """Table-guided cop team: minimax placement, then moves that shrink the value.

    Against the table's own optimal robber this realizes exactly the solver's
    reported capture time. Deterministic: ties go to the lexicographically
    smallest cop multiset, and step assignment picks the lowest legal targets.
    """

    def __init__(self, g: Graph, table: SolverTable, result: SolveResult):
        if not result.cop_win:
            raise ValueError("no winning placement exists for this cop count")
        self._g = g
        self.table = table
        self.result = result

    def place(self, g: Graph) -> tuple[int, ...]:
        return self.result.best_initial_placement

    def move(self, g: Graph, state: GameState) -> tuple[int, ...]:
        T = tuple(sorted(state.cops))
        r = state.robber
        best_T2 = None
        best_val = None
        for T2 in joint_cop_moves(g, T):
            val = self.table.values.get((T2, r, False))
            if val is None:
                continue
            if best_val is None or val < best_val:
                best_val = val
                best_T2 = T2
        if best_T2 is None:
            raise AssertionError(f"cop-win state {T},{r} has no winning joint move")
        return _assign_steps(g, state.cops, best_T2)


def _assign_steps(
    g: Graph, current: tuple[int, ...], target: tuple[int, ...]
) -> tuple[int, ...]:
    # Map per-cop positions onto a target multiset with stay-or-edge steps.
    remaining = Counter(target)
    out: list[int | None] = [None] * len(current)

    def backtrack(i: int) -> bool:
        if i == len(current):
            return True
        a = current[i]
        for b in sorted(remaining):
            if remaining[b] and (b == a or g.has_edge(a, b)):
                remaining[b] -= 1
                out[i] = b
                if backtrack(i + 1):
                    return True
                remaining[b] += 1
                out[i] = None
        return False

    if not backtrack(0):
        raise AssertionError(f"no legal step assignment {current} -> {target}")
    return tuple(out)


@dataclass(frozen=True)
class TheoremBoundReport:
    """Checks that t-2 cops suffice on a graph whose longest induced path has t-1 vertices.

    (a) some placement of t-2 cops wins; (b) the path-hunting strategy
    captures every robber within t-1 cop moves; (c) its capture time is no
    better than optimal play with the same cop count (skipped with a reason
    when the full solve exceeds the work budget).
    """

    n: int
    m: int
    lip_order: int
    t: int
    cop_number: int | None
    strategy_capture_moves: int | None
    solver_capture_moves: int | None
    solver_skip_reason: str | None
    check_copwin: bool
    check_strategy_bound: bool
    check_time_consistency: bool | None

    @property
    def passed(self) -> bool:
        return (
            self.check_copwin
            and self.check_strategy_bound
            and self.check_time_consistency is not False
        )


def verify_theorem_bound(
    g: Graph,
    state_budget: int = DEFAULT_STATE_BUDGET,
    work_budget: int = DEFAULT_WORK_BUDGET,
) -> TheoremBoundReport:
    """Run all three capture-bound checks on one connected graph."""
    lip, _ = longest_induced_path_order(g)
    t = max(lip + 1, 3)
    k = t - 2
    cnum = cop_number(g, k_max=k, state_budget=state_budget)
    analysis = analyze_strategy(g, t)
    strategy_moves = analysis.max_cop_moves
    check_b = analysis.captured_all and strategy_moves is not None and strategy_moves <= t - 1

    solver_moves = None
    skip_reason = None
    check_c: bool | None = None
    work = estimate_solver_work(g, k)
    if work > work_budget:
        skip_reason = f"solve with k={k} needs ~{work} move enumerations (budget {work_budget})"
    elif state_space_size(g.n, k) > state_budget:
        skip_reason = f"solve with k={k} exceeds the state budget"
    else:
        _, result = solve(g, k, state_budget)
        solver_moves = result.optimal_capture_cop_moves
        check_c = (
            result.cop_win
            and strategy_moves is not None
            and strategy_moves >= solver_moves
        )

    return TheoremBoundReport(
        n=g.n,
        m=g.m,
        lip_order=lip,
        t=t,
        cop_number=cnum,
        strategy_capture_moves=strategy_moves,
        solver_capture_moves=solver_moves,
        solver_skip_reason=skip_reason,
        check_copwin=cnum is not None,
        check_strategy_bound=check_b,
        check_time_consistency=check_c,
    )


def probe_conjecture(
    g: Graph, t: int, state_budget: int = DEFAULT_STATE_BUDGET
) -> tuple[str, dict]:
    """Record whether t-3 cops already suffice on a connected graph.

    Returns (status, evidence): HOLDS when cop_number <= t-3, VIOLATED when
    every k <= t-3 loses (a counterexample candidate; never asserted as a
    failure - the question is open), UNKNOWN when t < 5 or the budget stops
    the solve. Evidence carries the per-k verdicts needed to replay the claim.
    """
    if t < 5:
        return "UNKNOWN", {"reason": f"probe needs t >= 5, got t={t}"}
    k_max = t - 3
    per_k = []
    try:
        for k in range(1, k_max + 1):
            _, result = solve(g, k, state_budget)
            per_k.append({"k": k, "cop_win": result.cop_win})
            if result.cop_win:
                return "HOLDS", {"k_max": k_max, "per_k": per_k, "cop_number": k}
    except SolverBudgetError as exc:
        return "UNKNOWN", {"reason": str(exc), "per_k": per_k}
    return "VIOLATED", {"k_max": k_max, "per_k": per_k, "states": state_space_size(g.n, k_max)}
