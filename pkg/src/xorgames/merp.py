"""Shared-GHZ strategies with per-question relative phases.

Players share the k-qubit GHZ state (|0...0> + |1...1>)/sqrt(2); on question
q player a measures the conjugated Pauli-X observable
exp(i*theta*Z) X exp(-i*theta*Z) with theta = phi[a][q] * pi/2. A phase table
wins every round iff each clause's phase sum is congruent to its parity bit
mod 2, a linear diophantine condition solved exactly over the rationals.
GF(2) alone is not enough: some perfect games need half-integer phases.

Phases are exact Fractions end to end; floats appear only inside the
numerical simulator and its closed-form cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .decider import incidence_matrix
from .games import Game
from .intlinalg import solve_mod2_over_rationals


@dataclass(frozen=True)
class MerpStrategy:
    """phi[player][question]: rational phases in [0, 2); angle = phi*pi/2."""

    phi: tuple[tuple[Fraction, ...], ...]

    @property
    def players(self) -> int:
        return len(self.phi)

    @property
    def alphabet(self) -> int:
        return len(self.phi[0]) if self.phi else 0

    def to_dict(self) -> dict:
        return {
            "phi": [[f"{x.numerator}/{x.denominator}" for x in row] for row in self.phi]
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "MerpStrategy":
        return cls(
            tuple(tuple(Fraction(entry) for entry in row) for row in obj["phi"])
        )


@dataclass(frozen=True)
class StrategyValue:
    value: float
    exact_perfect: bool


def clause_phase_sum(game: Game, strat: MerpStrategy, i: int) -> Fraction:
    c = game.clauses[i]
    return sum(
        (strat.phi[a][q] for a, q in enumerate(c.questions)), Fraction(0)
    )


def solve_merp(game: Game) -> MerpStrategy | None:
    """Exact phase table winning every round, or None when the parity
    obstruction exists (the two cases are mutually exclusive)."""
    outcome = solve_mod2_over_rationals(
        incidence_matrix(game), [c.parity for c in game.clauses]
    )
    if outcome.solution is None:
        return None
    n = game.alphabet
    phi = tuple(
        tuple(outcome.solution[a * n + q] for q in range(n))
        for a in range(game.players)
    )
    return MerpStrategy(phi)


def verify_merp_symbolic(game: Game, strat: MerpStrategy) -> bool:
    """True iff every clause phase sum is congruent to its parity mod 2,
    exactly in rational arithmetic."""
    if strat.players != game.players or strat.alphabet < game.alphabet:
        raise ValueError("strategy dimensions do not match the game")
    for i, c in enumerate(game.clauses):
        diff = clause_phase_sum(game, strat, i) - c.parity
        if diff.denominator != 1 or diff.numerator % 2 != 0:
            return False
    return True


def merp_observable(theta: float) -> np.ndarray:
    """exp(i*theta*Z) X exp(-i*theta*Z), built as the literal conjugation."""
    phase = np.diag([np.exp(1j * theta), np.exp(-1j * theta)])
    pauli_x = np.array([[0, 1], [1, 0]], dtype=complex)
    return phase @ pauli_x @ phase.conj().T


def _ghz_state(k: int) -> np.ndarray:
    psi = np.zeros(2**k, dtype=complex)
    psi[0] = psi[-1] = 1 / math.sqrt(2)
    return psi


def _apply_single_qubit(op: np.ndarray, psi: np.ndarray, qubit: int, k: int):
    tensor = psi.reshape((2,) * k)
    tensor = np.tensordot(op, tensor, axes=([1], [qubit]))
    return np.moveaxis(tensor, 0, qubit).reshape(-1)


def simulate_merp_value(game: Game, strat: MerpStrategy) -> StrategyValue:
    """State-vector evaluation of the expected score.

    Independent of the closed-form cosine expression: applies each 2x2
    observable to its qubit of the GHZ state and takes inner products.
    """
    k = game.players
    if k > 12:
        raise ValueError("state-vector simulation capped at 12 players")
    if strat.players != k or strat.alphabet < game.alphabet:
        raise ValueError("strategy dimensions do not match the game")
    psi = _ghz_state(k)
    total = 0.0
    for c in game.clauses:
        vec = psi
        for a, q in enumerate(c.questions):
            theta = float(strat.phi[a][q]) * math.pi / 2
            vec = _apply_single_qubit(merp_observable(theta), vec, a, k)
        total += ((-1) ** c.parity) * float(np.real(np.vdot(psi, vec)))
    value = 0.5 + total / (2 * game.num_clauses)
    if not -1e-12 <= value <= 1 + 1e-12:
        raise AssertionError(f"simulated value {value} outside [0, 1]")
    return StrategyValue(value=value, exact_perfect=verify_merp_symbolic(game, strat))


def analytic_merp_value(game: Game, strat: MerpStrategy) -> float:
    """Closed form: 1/2 + (1/2m) * sum_j (-1)^s_j cos(pi * phase sum)."""
    total = sum(
        ((-1) ** c.parity) * math.cos(math.pi * float(clause_phase_sum(game, strat, i)))
        for i, c in enumerate(game.clauses)
    )
    return 0.5 + total / (2 * game.num_clauses)


def observables_pairwise_commute(thetas, tol: float = 1e-12) -> bool:
    """Check M(t1)M(t2)M(t3)M(t4) == M(t3)M(t4)M(t1)M(t2) numerically.

    Holds for every angle tuple: products of two conjugated-X observables
    commute with each other, which is what lets a shared-phase strategy
    satisfy the quotient relations the decider works in.
    """
    t1, t2, t3, t4 = thetas
    m = [merp_observable(t) for t in (t1, t2, t3, t4)]
    lhs = m[0] @ m[1] @ m[2] @ m[3]
    rhs = m[2] @ m[3] @ m[0] @ m[1]
    return bool(np.max(np.abs(lhs - rhs)) <= tol)
