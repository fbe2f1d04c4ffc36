import random
from itertools import product

import pytest

from oracles import oracle_completions
from sudolyndon import (
    LimitError,
    Order,
    WordError,
    completions_to_lyndon,
    family_partial_word,
    family_solution,
    has_lyndon_completion,
    is_lyndon,
    swap_letters,
)
from sudolyndon.partial import parse_partial_word

ALT, BLT = Order.ALT, Order.BLT


def all_patterns(n):
    return ("".join(p) for p in product("ab?", repeat=n))


class TestParse:
    def test_accepts(self):
        assert parse_partial_word("a?b") == "a?b"

    def test_rejects(self):
        with pytest.raises(WordError):
            parse_partial_word("")
        with pytest.raises(WordError):
            parse_partial_word("a.b")


class TestCompletions:
    def test_single_hole(self):
        assert completions_to_lyndon("a?", ALT, 10).words == ["ab"]

    def test_two_fixed_letters(self):
        assert completions_to_lyndon("?a?b?", ALT, 10).words == ["aaabb", "aabbb"]

    def test_family_p1_unique(self):
        result = completions_to_lyndon(family_partial_word(1), ALT, 10)
        assert result.words == [family_solution(1)]
        assert not result.truncated

    def test_truncation_flag(self):
        result = completions_to_lyndon("?????", ALT, 3)
        assert result.words == ["aaaab", "aaabb", "aabab"]
        assert result.truncated
        full = completions_to_lyndon("?????", ALT, 6)
        assert len(full.words) == 6 and not full.truncated

    def test_matches_brute_force_exhaustively(self):
        for n in range(1, 9):
            for pw in all_patterns(n):
                for order in (ALT, BLT):
                    got = completions_to_lyndon(pw, order, 1 << n).words
                    assert got == oracle_completions(pw, order), (pw, order)

    def test_matches_brute_force_sampled(self):
        rnd = random.Random(20260810)
        for n in range(9, 13):
            for _ in range(60):
                pw = "".join(rnd.choice("ab?") for _ in range(n))
                for order in (ALT, BLT):
                    got = completions_to_lyndon(pw, order, 1 << n).words
                    assert got == oracle_completions(pw, order), (pw, order)

    def test_swap_duality(self):
        rnd = random.Random(7)
        for _ in range(200):
            n = rnd.randrange(1, 12)
            pw = "".join(rnd.choice("ab?") for _ in range(n))
            blt = completions_to_lyndon(swap_letters(pw), BLT, 1 << n).words
            alt = completions_to_lyndon(pw, ALT, 1 << n).words
            assert blt == [swap_letters(w) for w in alt]

    def test_hole_bound(self):
        with pytest.raises(LimitError):
            completions_to_lyndon("?" * 25, ALT, 2)
        # Explicitly lifting the bound is allowed.
        result = completions_to_lyndon("?" * 25, ALT, 2, max_holes=None)
        assert result.truncated

    def test_limit_validation(self):
        with pytest.raises(ValueError):
            completions_to_lyndon("a?", ALT, 0)


class TestExistence:
    def test_lone_hole(self):
        assert has_lyndon_completion("?") == (True, True)

    def test_b_prefix(self):
        assert has_lyndon_completion("b?") == (False, True)

    def test_forced_hole(self):
        assert has_lyndon_completion("aba?b") == (True, False)
        assert completions_to_lyndon("aba?b", ALT, 5).words == ["ababb"]


class TestFamily:
    def test_p1_pattern(self):
        assert family_partial_word(1) == "ab?a????a?????"

    def test_p1_solution(self):
        assert family_solution(1) == "abbabbbbabbbbb"

    @pytest.mark.parametrize("p", range(1, 9))
    def test_shape(self, p):
        pw = family_partial_word(p)
        assert len(pw) == 2 * p * p + 7 * p + 5
        assert len(pw) - pw.count("?") == 2 * p + 2

    @pytest.mark.parametrize("p", range(1, 9))
    def test_solution_is_lyndon_and_matches(self, p):
        word = family_solution(p)
        pw = family_partial_word(p)
        assert len(word) == len(pw)
        assert is_lyndon(word, ALT)
        assert all(c == "?" or c == w for c, w in zip(pw, word))

    @pytest.mark.parametrize("p", [1, 2, 3])
    def test_unique_completion(self, p):
        result = completions_to_lyndon(
            family_partial_word(p), ALT, 2, max_holes=None
        )
        assert result.words == [family_solution(p)]
        assert not result.truncated

    def test_clue_density_vanishes(self):
        densities = []
        for p in range(1, 12):
            pw = family_partial_word(p)
            densities.append((2 * p + 2) / len(pw))
        assert all(d < 0.3 for d in densities)
        assert all(x > y for x, y in zip(densities, densities[1:]))

    def test_rejects_bad_p(self):
        with pytest.raises(ValueError):
            family_partial_word(0)
        with pytest.raises(ValueError):
            family_solution(0)
