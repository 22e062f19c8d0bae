"""Exact MaxCut and QAOA statevector machinery.

Bit i of a basis index z is the side of vertex i.  The phase layer
multiplies amplitude[z] by exp(-i * gamma * C(z)) where C(z) is the plain
cut-edge count, and the mixing layer applies
[[cos b, -i sin b], [-i sin b, cos b]] across every qubit.  Expectations
and probabilities always come from the statevector; there is no analytic
shortcut path.

Angle optimization is multi-start quasi-Newton (L-BFGS-B on the exact
adjoint gradient); the depth-1 case is cross-checked against a dense
(gamma, beta) grid scan.  Random starts are drawn from a stream keyed by
(seed, canonical form, start index) so isomorphic graphs give identical
results.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, replace

import numpy as np
from scipy.optimize import minimize

from .graphs import Graph, UnsupportedSizeError, canonical_form

__all__ = [
    "MaxCutSummary",
    "AngleVector",
    "OptimizerStats",
    "QaoaOutcome",
    "cost_vector",
    "maxcut_bruteforce",
    "evolve",
    "expectation",
    "prob_cmax",
    "uniform_outcome",
    "optimize_angles",
    "grid_scan_p1",
    "metrics_bundle",
    "run_depth_series",
]

TWO_PI = 2.0 * np.pi
MAX_SIM_N = 16
SUPPORTED_DEPTHS = (1, 2, 3)
DELTA_EPS = 1e-9  # remaining gap below this makes the delta ratio undefined
DEFAULT_STARTS = 200
MAX_ITER = 500
OBJECTIVE_TOL = 1e-8


@dataclass(frozen=True)
class MaxCutSummary:
    """Exact optimum cut value and the set of optimal assignments."""

    cmax: int
    optimal_count: int
    optimal_mask: np.ndarray  # bool, length 2**n

    def optimal_bitstrings(self) -> list[int]:
        return [int(z) for z in np.flatnonzero(self.optimal_mask)]


@dataclass(frozen=True)
class AngleVector:
    """Depth-p angle set, reduced to gamma in [0, 2pi) and beta in [0, pi)."""

    gammas: tuple[float, ...]
    betas: tuple[float, ...]

    def __post_init__(self):
        if len(self.gammas) != len(self.betas):
            raise ValueError("gammas and betas must have the same length")
        object.__setattr__(self, "gammas", tuple(float(x) % TWO_PI for x in self.gammas))
        object.__setattr__(self, "betas", tuple(float(x) % np.pi for x in self.betas))

    @property
    def p(self) -> int:
        return len(self.gammas)

    def flat(self) -> np.ndarray:
        return np.array(self.gammas + self.betas, dtype=float)

    @staticmethod
    def from_flat(theta) -> "AngleVector":
        theta = np.asarray(theta, dtype=float)
        p = theta.size // 2
        return AngleVector(tuple(theta[:p]), tuple(theta[p:]))


@dataclass(frozen=True)
class OptimizerStats:
    """Bookkeeping for one multi-start optimization."""

    method: str
    starts: int
    best_start: int  # index of the winning start; -1 marks the grid oracle
    evaluations: int


@dataclass(frozen=True)
class QaoaOutcome:
    """Optimized angles and the four per-graph metrics at one depth."""

    graph_id: int | None
    p: int
    best_angles: AngleVector
    exp_c: float
    prob_cmax: float
    ratio: float
    delta_ratio: float | None
    optimizer_stats: OptimizerStats


# ---------------------------------------------------------------------------
# Cost and exact optimum
# ---------------------------------------------------------------------------


def cost_vector(g: Graph) -> np.ndarray:
    """Cut value of every assignment: entry z counts edges with unequal bits."""
    if g.n > MAX_SIM_N:
        raise UnsupportedSizeError(f"cost vector supports n <= {MAX_SIM_N}, got {g.n}")
    z = np.arange(1 << g.n, dtype=np.int64)
    cost = np.zeros(1 << g.n, dtype=np.int64)
    for u, v in g.edges():
        cost += (z >> u & 1) ^ (z >> v & 1)
    return cost


def maxcut_bruteforce(g: Graph) -> MaxCutSummary:
    """Evaluate all 2^n assignments and keep the exact maximum."""
    cost = cost_vector(g)
    cmax = int(cost.max())
    mask = cost == cmax
    return MaxCutSummary(cmax=cmax, optimal_count=int(mask.sum()), optimal_mask=mask)


# ---------------------------------------------------------------------------
# Statevector evolution
# ---------------------------------------------------------------------------


def _apply_mixer(sv: np.ndarray, beta: float, n: int) -> np.ndarray:
    """Apply exp(-i beta X) on every qubit of sv (any leading batch shape)."""
    c = np.cos(beta)
    s = np.sin(beta)
    lead = sv.shape[:-1]
    for q in range(n):
        shaped = sv.reshape(lead + (1 << (n - q - 1), 2, 1 << q))
        a0 = shaped[..., 0, :].copy()
        a1 = shaped[..., 1, :]
        shaped[..., 0, :] = c * a0 - 1j * s * a1
        shaped[..., 1, :] = c * a1 - 1j * s * a0
    return sv


def evolve(g: Graph, angles: AngleVector) -> np.ndarray:
    """Statevector after p QAOA layers from the uniform superposition."""
    cost = cost_vector(g)
    dim = 1 << g.n
    sv = np.full(dim, 1.0 / np.sqrt(dim), dtype=complex)
    for gamma, beta in zip(angles.gammas, angles.betas):
        sv = sv * np.exp(-1j * gamma * cost)
        sv = _apply_mixer(sv, beta, g.n)
    return sv


def expectation(g: Graph, sv: np.ndarray) -> float:
    """<C> of a statevector."""
    cost = cost_vector(g)
    return float(np.real(np.dot(cost, np.abs(sv) ** 2)))


def prob_cmax(g: Graph, sv: np.ndarray, mc: MaxCutSummary) -> float:
    """Total probability of measuring an optimal assignment."""
    return float((np.abs(sv[mc.optimal_mask]) ** 2).sum())


# ---------------------------------------------------------------------------
# Objective with exact adjoint gradient
# ---------------------------------------------------------------------------


class _Objective:
    """<C>(theta) and its gradient for one graph, theta = (gammas, betas).

    The gradient is the adjoint-state recursion: one forward pass, then the
    layers are peeled off the state and the cost-weighted adjoint together,
    which costs a small constant times the forward evaluation.
    """

    def __init__(self, g: Graph):
        self.n = g.n
        self.cost = cost_vector(g).astype(float)
        self.dim = 1 << g.n
        self.uniform = np.full(self.dim, 1.0 / np.sqrt(self.dim), dtype=complex)
        self.evaluations = 0

    def _forward(self, gammas, betas):
        sv = self.uniform.copy()
        for gamma, beta in zip(gammas, betas):
            sv *= np.exp(-1j * gamma * self.cost)
            _apply_mixer(sv, beta, self.n)
        return sv

    def value(self, theta) -> float:
        self.evaluations += 1
        p = len(theta) // 2
        sv = self._forward(theta[:p], theta[p:])
        return float(np.real(np.dot(self.cost, np.abs(sv) ** 2)))

    def value_and_grad(self, theta):
        self.evaluations += 1
        theta = np.asarray(theta, dtype=float)
        p = theta.size // 2
        gammas, betas = theta[:p], theta[p:]
        sv = self._forward(gammas, betas)
        value = float(np.real(np.dot(self.cost, np.abs(sv) ** 2)))

        grad = np.zeros(2 * p)
        pair = np.stack([sv, self.cost * sv])  # [state, adjoint]
        for layer in range(p - 1, -1, -1):
            # d<C>/dbeta = 2 Im(<adjoint| sum_q X_q |state>), taken before
            # unwinding this layer's mixer
            flipped = np.zeros_like(pair[0])
            for q in range(self.n):
                shaped = pair[0].reshape(1 << (self.n - q - 1), 2, 1 << q)
                out = flipped.reshape(1 << (self.n - q - 1), 2, 1 << q)
                out[:, 0, :] += shaped[:, 1, :]
                out[:, 1, :] += shaped[:, 0, :]
            grad[p + layer] = 2.0 * np.imag(np.vdot(pair[1], flipped))
            _apply_mixer(pair, -betas[layer], self.n)
            grad[layer] = 2.0 * np.imag(np.vdot(pair[1], self.cost * pair[0]))
            pair *= np.exp(1j * gammas[layer] * self.cost)
        return value, grad

    def neg_value_and_grad(self, theta):
        value, grad = self.value_and_grad(theta)
        return -value, -grad


# ---------------------------------------------------------------------------
# Optimization
# ---------------------------------------------------------------------------


def _start_rng(seed: int, canon: str, start_index: int) -> np.random.Generator:
    digest = int.from_bytes(hashlib.sha256(canon.encode("ascii")).digest()[:8], "big")
    return np.random.default_rng([seed, digest, start_index])


def _polish(objective: _Objective, theta0: np.ndarray) -> tuple[float, np.ndarray]:
    res = minimize(
        objective.neg_value_and_grad,
        theta0,
        jac=True,
        method="L-BFGS-B",
        options={"maxiter": MAX_ITER, "ftol": OBJECTIVE_TOL, "gtol": 1e-9},
    )
    value0 = objective.value(theta0)
    if -res.fun >= value0:
        return float(-res.fun), res.x
    return value0, theta0


def _best_of_starts(g: Graph, p: int, starts: int, seed: int, extra_starts=()):
    """Run `starts` seeded local optimizations plus any extra start points."""
    objective = _Objective(g)
    canon = canonical_form(g)
    best_value = -np.inf
    best_theta = None
    best_start = 0
    for idx in range(starts):
        rng = _start_rng(seed, canon, idx)
        theta0 = np.concatenate([rng.uniform(0, TWO_PI, p), rng.uniform(0, np.pi, p)])
        value, theta = _polish(objective, theta0)
        if value > best_value:
            best_value, best_theta, best_start = value, theta, idx
    for j, theta0 in enumerate(extra_starts):
        value, theta = _polish(objective, np.asarray(theta0, dtype=float))
        if value > best_value:
            best_value, best_theta, best_start = value, theta, starts + j
    return best_value, best_theta, best_start, objective.evaluations


def _outcome(g: Graph, mc: MaxCutSummary, p: int, value, theta, stats) -> QaoaOutcome:
    angles = AngleVector.from_flat(theta) if p else AngleVector((), ())
    sv = evolve(g, angles)
    exp_c = min(expectation(g, sv), float(mc.cmax))
    return QaoaOutcome(
        graph_id=g.id,
        p=p,
        best_angles=angles,
        exp_c=exp_c,
        prob_cmax=prob_cmax(g, sv, mc),
        ratio=exp_c / mc.cmax,
        delta_ratio=None,
        optimizer_stats=stats,
    )


def uniform_outcome(g: Graph, mc: MaxCutSummary | None = None) -> QaoaOutcome:
    """Depth-0 metrics: the uniform superposition, no parameters."""
    if mc is None:
        mc = maxcut_bruteforce(g)
    return _outcome(g, mc, 0, None, None, OptimizerStats("uniform", 0, -1, 0))


def optimize_angles(g: Graph, p: int, starts: int = DEFAULT_STARTS, seed: int = 0,
                    extra_starts=()) -> QaoaOutcome:
    """Best <C> over multi-start L-BFGS-B; depth 1 is grid cross-checked.

    extra_starts supplies additional flat angle vectors to polish alongside
    the seeded random starts (used for warm starts between depths).
    """
    if p not in SUPPORTED_DEPTHS:
        raise ValueError(f"depth must be one of {SUPPORTED_DEPTHS}, got {p}")
    if starts < 1:
        raise ValueError("starts must be >= 1")
    mc = maxcut_bruteforce(g)
    value, theta, best_start, evals = _best_of_starts(g, p, starts, seed, extra_starts)
    if p == 1:
        gamma, beta, grid_value = grid_scan_p1(g)
        if grid_value > value:
            value, theta, best_start = grid_value, np.array([gamma, beta]), -1
    stats = OptimizerStats("L-BFGS-B+adjoint", starts, best_start, evals)
    return _outcome(g, mc, p, value, theta, stats)


def grid_scan_p1(g: Graph, grid: int = 64) -> tuple[float, float, float]:
    """Dense depth-1 (gamma, beta) scan with a local polish of the best cell.

    Serves as the depth-1 global oracle; seed-independent by construction.
    """
    if grid < 64:
        raise ValueError(f"grid resolution must be >= 64 points per axis, got {grid}")
    cost = cost_vector(g).astype(float)
    dim = 1 << g.n
    gammas = np.arange(grid) * (TWO_PI / grid)
    betas = np.arange(grid) * (np.pi / grid)
    sv = np.exp(-1j * np.outer(gammas, cost)) / np.sqrt(dim)  # (grid, dim)
    sv = np.repeat(sv[:, None, :], grid, axis=1)  # (grid, grid, dim)
    c = np.cos(betas)[None, :, None, None]
    s = np.sin(betas)[None, :, None, None]
    for q in range(g.n):
        shaped = sv.reshape(grid, grid, 1 << (g.n - q - 1), 2, 1 << q)
        a0 = shaped[..., 0, :].copy()
        a1 = shaped[..., 1, :]
        shaped[..., 0, :] = c * a0 - 1j * s * a1
        shaped[..., 1, :] = c * a1 - 1j * s * a0
    values = np.abs(sv) ** 2 @ cost
    i, j = np.unravel_index(int(values.argmax()), values.shape)
    objective = _Objective(g)
    value, theta = _polish(objective, np.array([gammas[i], betas[j]]))
    angles = AngleVector.from_flat(theta)
    return angles.gammas[0], angles.betas[0], float(value)


# ---------------------------------------------------------------------------
# Metric assembly
# ---------------------------------------------------------------------------


def metrics_bundle(g: Graph, mc: MaxCutSummary, outcomes) -> list[QaoaOutcome]:
    """Fill ratio and delta ratio across a p = 0..P outcome sequence.

    delta at p is the fraction of the remaining gap closed by the p-th
    layer; it is undefined (None) at p = 0 and whenever the previous level
    already sits within DELTA_EPS of the optimum.
    """
    outcomes = list(outcomes)
    for i, outcome in enumerate(outcomes):
        if outcome.p != i:
            raise ValueError(f"outcome sequence must start at p=0 and be consecutive; "
                             f"position {i} has p={outcome.p}")
    filled = []
    for outcome in outcomes:
        ratio = outcome.exp_c / mc.cmax
        if outcome.p == 0:
            delta = None
        else:
            prev = filled[outcome.p - 1]
            gap = mc.cmax - prev.exp_c
            delta = None if gap < DELTA_EPS else (outcome.exp_c - prev.exp_c) / gap
        filled.append(replace(outcome, ratio=ratio, delta_ratio=delta))
    return filled


def run_depth_series(g: Graph, pmax: int, starts: int = DEFAULT_STARTS,
                     seed: int = 0) -> list[QaoaOutcome]:
    """Optimize depths 1..pmax (plus the depth-0 row) with warm starts.

    Each depth adds the zero-padded best of the previous depth to the start
    set, which keeps best <C> non-decreasing in p by construction.
    """
    if not 0 <= pmax <= max(SUPPORTED_DEPTHS):
        raise ValueError(f"pmax must be within 0..{max(SUPPORTED_DEPTHS)}, got {pmax}")
    mc = maxcut_bruteforce(g)
    outcomes = [uniform_outcome(g, mc)]
    for p in range(1, pmax + 1):
        prev = outcomes[-1].best_angles
        warm = np.concatenate([prev.gammas, (0.0,), prev.betas, (0.0,)])
        outcomes.append(optimize_angles(g, p, starts, seed, extra_starts=(warm,)))
    return metrics_bundle(g, mc, outcomes)
