"""Constructive refutations: from an abelian witness to an explicit clause
sequence whose exact product is the sign element.

The pipeline mirrors the existence proof it implements. Starting from the
witness word (which equals the sign element only up to pair-commutators),
right inverses of the player projections clear players 1 and 2 exactly; the
residue on player 3 then lies in the pair-commutator subgroup, is decomposed
into conjugated pair commutators by transposition recording, and is cancelled
against a word assembled from commutators of the two pair right inverses,
with gadget words inserted so that the two assemblies agree on every player.
Every stage is an exact group identity, checked before proceeding; clause
words are carried as index sequences throughout so membership in the clause
subgroup is manifest, and group reduction is used only for checks and the
final verification.

Everything here requires a connected 3-player game; the driver `refute`
handles decomposition and index mapping for general instances.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decider import abelianize_clause_word, check_obstruction, decide, witness_clause_word
from .games import Game
from .graphs import PairGraph, build_hypergraph, decompose_components, gadget_word
from .words import (
    ClauseWord,
    GroupWord,
    commutator,
    is_parity_trivial,
    reduce_clause_word,
)


class PipelineError(RuntimeError):
    """An exact intermediate identity failed; indicates a bug, not bad input."""


class WordLengthCapExceeded(PipelineError):
    def __init__(self, stage: str, length: int, cap: int):
        super().__init__(f"{stage}: clause word length {length} exceeds cap {cap}")
        self.stage = stage
        self.length = length
        self.cap = cap


@dataclass(frozen=True)
class RefutationCertificate:
    """z: the abelian witness; sigma_word: clause sequence multiplying out to
    the sign element; reduced: its normal form (must be the sign element)."""

    z: tuple[int, ...]
    sigma_word: ClauseWord
    reduced: GroupWord
    verified: bool


@dataclass(frozen=True)
class CommutatorEntry:
    """conj . [pair1, pair2] . conj^-1 on one player's letters; conj even."""

    conj: tuple[int, ...]
    pair1: tuple[int, int]
    pair2: tuple[int, int]

    def letters(self) -> tuple[int, ...]:
        a, b = self.pair1
        c, d = self.pair2
        return (
            self.conj
            + (a, b, c, d, b, a, d, c)
            + tuple(reversed(self.conj))
        )


def decompose_pair_commutators(letters, budget: int | None = None) -> list[CommutatorEntry]:
    """Write an even parity-trivial one-player word as an exact product of
    conjugated pair commutators.

    Bubble-sorts the odd-position and even-position sublists; each swap of
    letters two apart is an exact multiplication by one conjugated pair
    commutator, recorded on the left of the word when the prefix is even and
    on the right when the suffix is (one of the two always holds). The
    sorted word interleaves two equal sorted multisets and cancels freely,
    so the recorded entries multiply back to the input exactly.

    The entry list holds a conjugator copy per swap, up to cubic in the word
    length; `budget` caps the total recorded letters and aborts with the
    word-length diagnostic instead of exhausting memory.
    """
    work = list(letters)
    if len(work) % 2 != 0 or not is_parity_trivial(work):
        raise ValueError("decomposition needs an even parity-trivial word")
    left: list[CommutatorEntry] = []
    right: list[CommutatorEntry] = []
    n = len(work)
    spent = 0
    for start in (0, 1):
        changed = True
        while changed:
            changed = False
            for j in range(start, n - 2, 2):
                if work[j] <= work[j + 2]:
                    continue
                a, b, c = work[j], work[j + 1], work[j + 2]
                if b != a and b != c:
                    entry = CommutatorEntry(
                        conj=tuple(work[:j]) if j % 2 == 0 else tuple(reversed(work[j + 3:])),
                        pair1=(a, b),
                        pair2=(c, b),
                    )
                    spent += 2 * len(entry.conj) + 8
                    if budget is not None and spent > budget:
                        raise WordLengthCapExceeded(
                            "commutator decomposition", spent, budget
                        )
                    if j % 2 == 0:
                        left.append(entry)
                    else:
                        right.append(entry)  # reversed below: newest leftmost
                work[j], work[j + 2] = c, a
                changed = True
    right.reverse()
    residue = []
    for x in work:
        if residue and residue[-1] == x:
            residue.pop()
        else:
            residue.append(x)
    if residue:
        raise AssertionError("sorted word failed to cancel; input not parity-trivial?")
    return left + right


class Homomorphisms:
    """Right-inverse tables for one connected 3-player game.

    simple[a][q] is the smallest clause asking q of player a. Pair tables
    hold the spanning-tree path words of the three needed pair graphs, and
    the gadget tables the kept-pair words along minimal hyperedge paths.
    """

    def __init__(self, game: Game):
        if game.players != 3:
            raise ValueError("the refutation pipeline is specific to 3 players")
        if not build_hypergraph(game).is_connected():
            raise ValueError("pipeline requires a connected clause hypergraph")
        self.game = game
        self.simple: list[list[int | None]] = [
            [None] * game.alphabet for _ in range(3)
        ]
        for i, c in enumerate(game.clauses):
            for a, q in enumerate(c.questions):
                if self.simple[a][q] is None:
                    self.simple[a][q] = i
        self.pair = {
            (1, 0): PairGraph(game, 1, 0),
            (2, 0): PairGraph(game, 2, 0),
            (2, 1): PairGraph(game, 2, 1),
        }
        self._gamma: dict[tuple[int, int], ClauseWord] = {}

    def phi_simple(self, player: int, letters) -> ClauseWord:
        indices = []
        for q in letters:
            i = self.simple[player][q] if 0 <= q < self.game.alphabet else None
            if i is None:
                raise ValueError(f"question {q + 1} never asked of player {player + 1}")
            indices.append(i)
        return ClauseWord.from_indices(indices)

    def tree_path(self, alpha: int, beta: int, letter: int) -> ClauseWord:
        return self.pair[(alpha, beta)].path_word((alpha, letter))

    def phi_pair(self, alpha: int, beta: int, letters) -> ClauseWord:
        """Right inverse of the alpha projection that kills the image in
        beta whenever some clause product does: path out, inverse path back."""
        if len(letters) % 2 != 0:
            raise ValueError("pair right inverse is defined on even words")
        out = ClauseWord()
        for r in range(0, len(letters), 2):
            out = out * self.tree_path(alpha, beta, letters[r])
            out = out * self.tree_path(alpha, beta, letters[r + 1]).inverse()
        return out

    def gamma(self, beta: int, question: int) -> ClauseWord:
        key = (beta, question)
        if key not in self._gamma:
            self._gamma[key] = gadget_word(
                self.game, self.pair[(2, beta)], question
            ).clause_word()
        return self._gamma[key]

    def f_map(self, beta: int, letters) -> ClauseWord:
        """Gadget-upgraded pair right inverse of the player-3 projection."""
        if len(letters) % 2 != 0:
            raise ValueError("gadget maps are defined on even words")
        out = ClauseWord()
        for r in range(0, len(letters), 2):
            i, j = letters[r], letters[r + 1]
            out = out * self.tree_path(2, beta, i) * self.gamma(beta, i)
            out = (
                out
                * self.gamma(beta, j).inverse()
                * self.tree_path(2, beta, j).inverse()
            )
        return out

    def player_part(self, cw: ClauseWord, player: int) -> tuple[int, ...]:
        return reduce_clause_word(self.game, cw).per_player[player]

    def compose_f(self, letters) -> tuple[int, ...]:
        """Player-3 residue of both gadget maps in sequence."""
        y = self.player_part(self.f_map(0, letters), 2)
        return self.player_part(self.f_map(1, y), 2)

    def preprocess(self, w: ClauseWord) -> ClauseWord:
        """Clear players 1 and 2 exactly, preserving the abelian image."""
        if not abelianize_clause_word(self.game, w).is_sign():
            raise ValueError("preprocess input must abelianize to the sign element")
        red = reduce_clause_word(self.game, w)
        h = w * self.phi_simple(0, tuple(reversed(red.per_player[0])))
        red_h = reduce_clause_word(self.game, h)
        w2 = h * self.phi_pair(1, 0, tuple(reversed(red_h.per_player[1])))
        red2 = reduce_clause_word(self.game, w2)
        if red2.per_player[0] or red2.per_player[1]:
            raise PipelineError("preprocess failed to clear players 1 and 2")
        if not abelianize_clause_word(self.game, w2).is_sign():
            raise PipelineError("preprocess broke the abelian image")
        return w2


def construct_sigma_word(
    game: Game, z, cap: int = 10**6
) -> RefutationCertificate:
    """Run the full pipeline on a connected 3-player game with witness z."""
    hom = Homomorphisms(game)

    def guard(stage: str, cw: ClauseWord) -> ClauseWord:
        if len(cw) > cap:
            raise WordLengthCapExceeded(stage, len(cw), cap)
        return cw

    w = witness_clause_word(game, z)
    w1 = guard("preprocess", hom.preprocess(w))

    y1 = hom.player_part(w1, 2)
    if not is_parity_trivial(y1):
        raise PipelineError("player-3 residue not parity-trivial after preprocess")
    entries = decompose_pair_commutators(y1, budget=cap)

    w2 = guard(
        "first gadget stage",
        w1 * hom.phi_pair(2, 0, y1).inverse() * hom.f_map(0, y1),
    )
    red2 = reduce_clause_word(game, w2)
    if red2.per_player[0] or red2.per_player[1]:
        raise PipelineError("players 1, 2 reappeared after the first gadget stage")

    y2 = red2.per_player[2]
    if not is_parity_trivial(y2):
        raise PipelineError("player-3 residue escaped the commutator subgroup")
    w3 = guard(
        "second gadget stage",
        w2 * hom.phi_pair(2, 1, y2).inverse() * hom.f_map(1, y2),
    )
    red3 = reduce_clause_word(game, w3)
    if red3.per_player[0] or red3.per_player[1]:
        raise PipelineError("players 1, 2 reappeared after the second gadget stage")

    w4 = ClauseWord()
    for entry in entries:
        fu = hom.compose_f(entry.conj)
        fp = hom.compose_f(entry.pair1)
        fq = hom.compose_f(entry.pair2)
        piece = (
            hom.phi_simple(2, fu)
            * commutator(hom.phi_pair(2, 0, fp), hom.phi_pair(2, 1, fq))
            * hom.phi_simple(2, tuple(reversed(fu)))
        )
        w4 = guard("commutator assembly", w4 * piece)

    red4 = reduce_clause_word(game, w4)
    if red4.per_player[0] or red4.per_player[1] or red4.sigma:
        raise PipelineError("assembled commutator word leaks outside player 3")
    if red4.per_player[2] != red3.per_player[2]:
        raise PipelineError("assembled word does not match the player-3 residue")

    final = guard("final word", w3 * w4.inverse())
    reduced = reduce_clause_word(game, final)
    if reduced != GroupWord.sign(3):
        raise PipelineError("final clause word does not reduce to the sign element")
    return RefutationCertificate(
        z=tuple(int(x) for x in z), sigma_word=final, reduced=reduced, verified=True
    )


def refute(game: Game, cap: int = 10**6) -> RefutationCertificate:
    """Locate a refutable component, run the pipeline there, and map the
    certificate back to the original clause indices."""
    if game.players != 3:
        raise ValueError("constructive refutations are specific to 3 players")
    for comp in decompose_components(game):
        outcome = decide(comp.game)
        if not outcome.member:
            continue
        local = construct_sigma_word(comp.game, outcome.obstruction_z, cap=cap)
        z = [0] * game.num_clauses
        for j, zj in enumerate(local.z):
            z[comp.clause_map[j]] = zj
        sigma_word = ClauseWord(
            tuple((comp.clause_map[i], inv) for i, inv in local.sigma_word.entries)
        )
        reduced = reduce_clause_word(game, sigma_word)
        if reduced != GroupWord.sign(3) or not check_obstruction(game, z):
            raise PipelineError("certificate failed re-verification on the full game")
        return RefutationCertificate(
            z=tuple(z), sigma_word=sigma_word, reduced=reduced, verified=True
        )
    raise ValueError("game has no parity refutation; nothing to construct")
