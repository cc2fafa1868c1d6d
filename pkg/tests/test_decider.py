import random

import pytest

from xorgames.decider import (
    abelianize_clause_word,
    check_obstruction,
    decide,
    incidence_matrix,
    witness_clause_word,
)
from xorgames.games import generate_random_game, parse_text
from xorgames.words import ClauseWord

GHZ = parse_text("1 1 1 0\n1 2 2 1\n2 1 2 1\n2 2 1 1")
PAIR = parse_text("1 1 1 0\n1 1 1 1")
CHSH = parse_text("1 1 1\n2 1 0\n1 2 0\n2 2 0")


def test_incidence_matrix_shape():
    b = incidence_matrix(GHZ)
    assert (b.rows, b.cols) == (4, 6)
    assert b.data[1] == (1, 0, 0, 1, 0, 1)  # clause (1,2,2)


def test_abelianize_cancelling_pair():
    vec = abelianize_clause_word(PAIR, ClauseWord.from_indices([0, 0]))
    assert vec.is_zero()


def test_abelianize_sign_rule():
    game = parse_text("1 1 1 0\n2 2 2 1")
    vec = abelianize_clause_word(game, ClauseWord.from_indices([0, 1]))
    assert vec.per_player == ((-1, 1),) * 3
    assert vec.sigma == 1


def test_abelianize_rejects_odd_words():
    with pytest.raises(ValueError):
        abelianize_clause_word(GHZ, ClauseWord.from_indices([0]))


def test_abelianize_invariant_under_parity_permutation():
    rng = random.Random(61)
    for _ in range(200):
        game = generate_random_game(3, 3, 5, seed=rng.randrange(10**6))
        length = 2 * rng.randrange(1, 5)
        indices = [rng.randrange(game.num_clauses) for _ in range(length)]
        base = abelianize_clause_word(game, ClauseWord.from_indices(indices))
        swapped = list(indices)
        for _ in range(4):
            if length >= 3:
                j = rng.randrange(length - 2)
                swapped[j], swapped[j + 2] = swapped[j + 2], swapped[j]
        assert abelianize_clause_word(game, ClauseWord.from_indices(swapped)) == base


def test_decide_ghz_not_member():
    out = decide(GHZ)
    assert not out.member
    assert out.obstruction_z is None


def test_decide_contradictory_pair():
    out = decide(PAIR)
    assert out.member
    assert out.obstruction_z == (1, -1)


def test_decide_chsh():
    out = decide(CHSH)
    assert out.member
    assert out.obstruction_z == (1, -1, -1, 1)
    assert check_obstruction(CHSH, out.obstruction_z)


def test_decide_invariant_under_clause_reorder_and_relabel():
    rng = random.Random(67)
    for _ in range(60):
        game = generate_random_game(3, 3, 6, seed=rng.randrange(10**6))
        base = decide(game).member
        order = list(range(game.num_clauses))
        rng.shuffle(order)
        relabel = list(range(game.alphabet))
        rng.shuffle(relabel)
        permuted = parse_text(
            "\n".join(
                " ".join(str(relabel[q] + 1) for q in game.clauses[i].questions)
                + f" {game.clauses[i].parity}"
                for i in order
            ),
            alphabet=game.alphabet,
        )
        assert decide(permuted).member == base


def test_witness_word_pair_game():
    word = witness_clause_word(PAIR, (1, -1))
    assert len(word) == 2
    assert abelianize_clause_word(PAIR, word).is_sign()


def test_witness_word_chsh():
    word = witness_clause_word(CHSH, (1, -1, -1, 1))
    assert len(word) == 6
    assert abelianize_clause_word(CHSH, word).is_sign()


def test_witness_rejects_invalid_vectors():
    with pytest.raises(ValueError):
        witness_clause_word(PAIR, (1, 1))
    with pytest.raises(ValueError):
        witness_clause_word(GHZ, (0, 0, 0, 0))


def test_global_decision_is_or_of_components():
    from xorgames.graphs import decompose_components

    rng = random.Random(75)
    for _ in range(60):
        game = generate_random_game(3, 4, rng.randrange(2, 8), seed=rng.randrange(10**6))
        overall = decide(game).member
        per_comp = [decide(c.game).member for c in decompose_components(game)]
        assert overall == any(per_comp)


def test_witness_postcondition_randomized():
    rng = random.Random(71)
    found = 0
    for _ in range(400):
        game = generate_random_game(3, 2, rng.randrange(2, 7), seed=rng.randrange(10**6))
        out = decide(game)
        if not out.member:
            continue
        found += 1
        word = witness_clause_word(game, out.obstruction_z)
        assert len(word) % 2 == 0
        assert abelianize_clause_word(game, word).is_sign()
    assert found >= 30
