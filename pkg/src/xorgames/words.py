"""Exact arithmetic in the game group.

The group has one involutive generator per (player, question), generators of
distinct players commuting, plus a central involution ("the sign") standing in
for -1. It is a direct product of per-player free products of order-two
groups with the order-two sign, so a complete normal form is one reduced
letter sequence per player together with the sign bit; equality of normal
forms is equality in the group.

Letters are 0-based question indices. A clause maps to the word with one
letter per player and the clause's parity as the sign bit; products of
clauses are tracked as ClauseWord index sequences so that membership in the
clause subgroup stays manifest.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .games import Game


def _reduce(letters) -> tuple[int, ...]:
    out = []
    for x in letters:
        if out and out[-1] == x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class GroupWord:
    """Normal form: reduced per-player letter sequences plus the sign bit."""

    per_player: tuple[tuple[int, ...], ...]
    sigma: int = 0

    def __post_init__(self):
        object.__setattr__(
            self, "per_player", tuple(_reduce(seq) for seq in self.per_player)
        )
        object.__setattr__(self, "sigma", self.sigma & 1)

    @classmethod
    def identity(cls, players: int) -> "GroupWord":
        return cls(tuple(() for _ in range(players)), 0)

    @classmethod
    def sign(cls, players: int) -> "GroupWord":
        return cls(tuple(() for _ in range(players)), 1)

    @property
    def players(self) -> int:
        return len(self.per_player)

    def is_identity(self) -> bool:
        return self.sigma == 0 and all(not seq for seq in self.per_player)

    def is_even(self) -> bool:
        return all(len(seq) % 2 == 0 for seq in self.per_player)

    def length(self) -> int:
        return sum(len(seq) for seq in self.per_player)


def word_from_letters(players: int, player: int, letters, sigma: int = 0) -> GroupWord:
    seqs = [() for _ in range(players)]
    seqs[player] = tuple(letters)
    return GroupWord(tuple(seqs), sigma)


def multiply(a: GroupWord, b: GroupWord) -> GroupWord:
    if a.players != b.players:
        raise ValueError(f"player count mismatch: {a.players} vs {b.players}")
    return GroupWord(
        tuple(x + y for x, y in zip(a.per_player, b.per_player)),
        a.sigma ^ b.sigma,
    )


def inverse(w: GroupWord) -> GroupWord:
    # Letters and the sign are involutions, so inverting reverses sequences.
    return GroupWord(tuple(seq[::-1] for seq in w.per_player), w.sigma)


def project_player(w: GroupWord, player: int) -> GroupWord:
    """Keep player's letters, kill everything else including the sign."""
    seqs = tuple(seq if a == player else () for a, seq in enumerate(w.per_player))
    return GroupWord(seqs, 0)


def project_sigma(w: GroupWord) -> int:
    return w.sigma


def clause_to_word(game: Game, i: int) -> GroupWord:
    if not 0 <= i < game.num_clauses:
        raise IndexError(f"clause index {i} out of range")
    c = game.clauses[i]
    return GroupWord(tuple((q,) for q in c.questions), c.parity)


@dataclass(frozen=True)
class ClauseWord:
    """A product of clauses, kept as (clause index, inverted) entries.

    Clauses are involutions so the inverted flag never changes the group
    element; it is retained so certificates stay auditable as written.
    """

    entries: tuple[tuple[int, bool], ...] = field(default_factory=tuple)

    @classmethod
    def from_indices(cls, indices) -> "ClauseWord":
        return cls(tuple((int(i), False) for i in indices))

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.entries)

    def inverse(self) -> "ClauseWord":
        return ClauseWord(tuple((i, not inv) for i, inv in reversed(self.entries)))

    def __mul__(self, other: "ClauseWord") -> "ClauseWord":
        return ClauseWord(self.entries + other.entries)

    def __len__(self) -> int:
        return len(self.entries)


def commutator(a: ClauseWord, b: ClauseWord) -> ClauseWord:
    return a * b * a.inverse() * b.inverse()


def reduce_clause_word(game: Game, cw: ClauseWord) -> GroupWord:
    """Multiply the referenced clauses out to a normal form."""
    seqs = [[] for _ in range(game.players)]
    sigma = 0
    for i, _ in cw.entries:
        if not 0 <= i < game.num_clauses:
            raise IndexError(f"clause index {i} out of range")
        c = game.clauses[i]
        for a, q in enumerate(c.questions):
            seq = seqs[a]
            if seq and seq[-1] == q:
                seq.pop()
            else:
                seq.append(q)
        sigma ^= c.parity
    return GroupWord(tuple(tuple(s) for s in seqs), sigma)


def render(w: GroupWord) -> str:
    """Debug form, 1-based: `x1^(1) x2^(1) | x2^(2) | - | σ`."""
    parts = []
    for player, seq in enumerate(w.per_player, start=1):
        parts.append(" ".join(f"x{q + 1}^({player})" for q in seq) if seq else "-")
    parts.append("σ" if w.sigma else "-")
    return " | ".join(parts)


def canon_letters(letters) -> tuple[int, ...]:
    """Canonical representative of a one-player word up to pair-commutation.

    Split into odd/even position sublists (position 1 is odd), cancel each
    letter's minority occurrences across the two sublists, sort both, and
    interleave odd-first. Positions-preserving transpositions and free
    cancellation both leave the result unchanged; for words of length >= 3
    it is a complete invariant of the quotient by the pair-commutator
    subgroup.
    """
    odd = [letters[i] for i in range(0, len(letters), 2)]
    even = [letters[i] for i in range(1, len(letters), 2)]
    odd_count, even_count = Counter(odd), Counter(even)
    odd_kept, even_kept = [], []
    for v in sorted(set(odd) | set(even)):
        drop = min(odd_count[v], even_count[v])
        odd_kept.extend([v] * (odd_count[v] - drop))
        even_kept.extend([v] * (even_count[v] - drop))
    out = []
    for i in range(max(len(odd_kept), len(even_kept))):
        if i < len(odd_kept):
            out.append(odd_kept[i])
        if i < len(even_kept):
            out.append(even_kept[i])
    return tuple(out)


def is_parity_trivial(letters) -> bool:
    """True iff the one-player word cancels to nothing up to pair-commutation.

    For even-length words this is exactly membership in the pair-commutator
    subgroup: every letter occurs equally often at odd and even positions.
    """
    return not canon_letters(letters)


def canon_word(w: GroupWord) -> GroupWord:
    """Canonical form of a single-player word; the sign bit passes through.

    Defined only for words of length >= 3 (shorter words are their own
    class representatives but the uniqueness argument needs degree 3).
    """
    occupied = [a for a, seq in enumerate(w.per_player) if seq]
    if len(occupied) > 1:
        raise ValueError("canonical form is defined for single-player words")
    if w.length() < 3:
        raise ValueError(f"canonical form needs length >= 3, got {w.length()}")
    player = occupied[0]
    return word_from_letters(
        w.players, player, canon_letters(w.per_player[player]), w.sigma
    )
