"""Round trips and worked instances for every map."""

from itertools import permutations

import pytest

from treelike.bijections import (
    ColoredLetter,
    ColoredWord,
    CycleForm,
    MarkedRun,
    corner_to_run,
    corner_transfer_delta,
    count_colored_words,
    cut_at_corner,
    enumerate_colored_words,
    glue,
    m_star,
    m_star_inverse,
    parse_colored_word,
    parse_cycle_form,
    pt_to_tlt,
    run_to_corner,
    run_to_triplet,
    tlt_to_pt,
    triplet_to_run,
)
from treelike.core import (
    EMPTY_COL_TABLEAU,
    EMPTY_ROW_TABLEAU,
    Cell,
    enumerate_nat,
    enumerate_pt,
    enumerate_tlt,
    parse_pt,
    parse_tlt,
    to_text,
)
from treelike.counting import runs_of_size_1, tlt_corner_count


class TestColumnDeletion:
    def test_size8_worked_instance(self):
        t = parse_tlt("SWSSWWWSW\no.o.o\noo.o\n..o.\no")
        p = tlt_to_pt(t)
        assert to_text(p) == "SWSSWWWS\n0101\n111\n001\n"
        assert pt_to_tlt(p) == t

    def test_smallest(self):
        t = parse_tlt("SW\no")
        p = tlt_to_pt(t)
        assert to_text(p) == "S\n"
        assert pt_to_tlt(p) == t

    @pytest.mark.parametrize("n", range(1, 7))
    def test_round_trip_both_ways(self, n):
        for t in enumerate_tlt(n):
            assert pt_to_tlt(tlt_to_pt(t)) == t
        for p in enumerate_pt(n):
            assert tlt_to_pt(pt_to_tlt(p)) == p

    def test_degenerate_rejected(self):
        with pytest.raises(ValueError):
            tlt_to_pt(EMPTY_ROW_TABLEAU)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_corner_transfer(self, n):
        import math

        total = 0
        for t in enumerate_tlt(n):
            d = corner_transfer_delta(t)
            assert d in (0, 1)
            before = len(t.path.corner_cells)
            after = len(tlt_to_pt(t).path.corner_cells)
            assert before - after == d
            total += d
        assert total == math.factorial(n - 1)


class TestCutGlue:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_round_trip_all_corners(self, n):
        pairs = 0
        for t in enumerate_tlt(n):
            for c in t.path.corner_cells:
                t_l, t_r, nat = cut_at_corner(t, c)
                assert t_l.size + t_r.size + 1 == n
                fr_l = t_l.rows[0].bit_count() if t_l.rows else 0
                fc_r = sum(1 for m in t_r.rows if m & 1)
                assert nat.width == fr_l
                assert nat.height == fc_r
                assert glue(t_l, t_r, nat) == (t, c)
                pairs += 1
        assert pairs == tlt_corner_count(n)

    def test_smallest_cut(self):
        t = parse_tlt("SW\no")
        t_l, t_r, nat = cut_at_corner(t, Cell(1, 2))
        assert t_l == EMPTY_ROW_TABLEAU
        assert t_r == EMPTY_COL_TABLEAU
        assert (nat.height, nat.width) == (0, 0)

    def test_degenerate_sides_occur(self):
        lefts = set()
        rights = set()
        for t in enumerate_tlt(3):
            for c in t.path.corner_cells:
                t_l, t_r, _ = cut_at_corner(t, c)
                lefts.add(t_l.size)
                rights.add(t_r.size)
        assert 0 in lefts
        assert 0 in rights

    def test_rejects_non_corner(self):
        t = parse_tlt("SW\no")
        with pytest.raises(ValueError, match="not a corner"):
            cut_at_corner(t, Cell(2, 3))

    def test_glue_dimension_mismatch(self):
        nat = next(iter(enumerate_nat(1, 1)))
        with pytest.raises(ValueError, match="width|height"):
            glue(EMPTY_ROW_TABLEAU, EMPTY_COL_TABLEAU, nat)

    def test_glue_wrong_degenerate(self):
        nat = next(iter(enumerate_nat(0, 0)))
        with pytest.raises(ValueError, match="degenerate left"):
            glue(EMPTY_COL_TABLEAU, EMPTY_COL_TABLEAU, nat)

    def test_size_three_triplet_census(self):
        # seven corners split 2 + 3 + 2 by corner label
        by_label = {}
        for t in enumerate_tlt(3):
            for c in t.path.corner_cells:
                by_label[c.row] = by_label.get(c.row, 0) + 1
        assert by_label == {1: 2, 2: 3, 3: 2}


class TestColoredWords:
    def test_alphabet_validation(self):
        with pytest.raises(ValueError):
            ColoredWord((ColoredLetter(1, False),), 0, 1)  # no pointed 0
        with pytest.raises(ValueError):
            parse_colored_word("1 2")

    def test_validity_conditions(self):
        assert parse_colored_word("1 0* 1*").is_valid()
        assert not parse_colored_word("0* 1* 1").is_valid()  # ends unpointed
        assert not parse_colored_word("1* 0* 2*").is_valid()  # pointed decrease
        w = parse_colored_word("2 1 0*")
        assert not w.is_valid()  # unpointed decrease

    def test_parse_round_trip(self):
        s = "2 3 2* 3* 1 4 0* 1*"
        assert parse_colored_word(s).text() == s

    def test_counts(self):
        assert count_colored_words(0, 0) == 1
        assert count_colored_words(1, 1) == 3
        assert count_colored_words(1, 2) == 7
        assert count_colored_words(2, 1) == 7

    @pytest.mark.parametrize("h,w", [(h, w) for h in range(4) for w in range(4) if h + w <= 5])
    def test_matches_tree_count(self, h, w):
        assert count_colored_words(h, w) == sum(1 for _ in enumerate_nat(h, w))

    def test_enumeration_deterministic_and_valid(self):
        words = list(enumerate_colored_words(2, 2))
        assert words == list(enumerate_colored_words(2, 2))
        assert len(set(words)) == len(words)
        for wrd in words:
            assert wrd.is_valid()


class TestCycleForm:
    def test_text_round_trip(self):
        s = "(6)(7 5 2 3)(9 1 8 4)"
        cf = parse_cycle_form(s)
        assert cf.text() == s
        assert cf.size == 9

    def test_empty(self):
        cf = parse_cycle_form("")
        assert cf.cycles == ()
        assert cf.text() == ""

    def test_permutation_round_trip(self):
        for n in range(0, 6):
            for p in permutations(range(1, n + 1)):
                cf = CycleForm.from_permutation(p)
                assert cf.to_permutation() == p

    def test_validation(self):
        with pytest.raises(ValueError, match="maximum"):
            CycleForm(((1, 2),))
        with pytest.raises(ValueError, match="increase"):
            CycleForm(((3, 1), (2,)))
        with pytest.raises(ValueError, match="partition"):
            CycleForm(((2, 1), (2,)))


class TestMarkedRun:
    def test_all_positions_on_decreasing(self):
        for k in (1, 2, 3):
            MarkedRun((3, 2, 1), k)

    def test_rejects_non_run(self):
        with pytest.raises(ValueError, match="run of size 1"):
            MarkedRun((1, 2, 3), 1)
        with pytest.raises(ValueError, match="out of range"):
            MarkedRun((1,), 2)


class TestBlockSwap:
    def test_worked_instance(self):
        m = parse_colored_word("1* 4 0* 1 2 2* 3 3*")
        swapped = m_star(m)
        assert swapped.text() == "1* 4 0* 2* 1 2 3* 3"
        assert m_star_inverse(swapped) == m

    def test_identity_branch(self):
        m = parse_colored_word("2 3 2* 3* 1 4 0* 1*")
        assert m_star(m) == m

    def test_branch_readable_from_last_letter(self):
        # identity keeps the word ending pointed; the swap ends unpointed
        for h in range(3):
            for w in range(3):
                for m in enumerate_colored_words(h, w):
                    out = m_star(m)
                    changed = out != m
                    assert changed == (not out.letters[-1].pointed)
                    assert m_star_inverse(out) == m


L_EX = "(6)(7 5 2 3)(9 1 8 4)"
R_EX = "(4 2 3)(5)(7 1 6)(9 8)"


class TestTripletRun:
    def test_worked_instance_one(self):
        mr = triplet_to_run(
            parse_cycle_form(L_EX),
            parse_cycle_form(R_EX),
            parse_colored_word("2 3 2* 3* 1 4 0* 1*"),
        )
        assert mr.perm == (15, 17, 11, 16, 7, 5, 2, 3, 9, 1, 8, 4, 14, 12, 13, 19, 18, 10, 6)
        assert mr.k == 18

    def test_worked_instance_two_with_swap(self):
        mr = triplet_to_run(
            parse_cycle_form(L_EX),
            parse_cycle_form(R_EX),
            parse_colored_word("1* 4 0* 1 2 2* 3 3*"),
        )
        assert mr.perm == (6, 19, 18, 10, 7, 5, 2, 3, 14, 12, 13, 15, 9, 1, 8, 4, 17, 11, 16)
        assert mr.k == 4

    def test_worked_instance_reverse(self):
        mr = MarkedRun((4, 2, 6, 11, 9, 12, 8, 3, 7, 1, 5, 10), 7)
        l_cf, r_cf, m = run_to_triplet(mr)
        assert l_cf.text() == "(3)(4 2)(6)(7 1 5)"
        assert r_cf.text() == "(2)(3 1)(4)"
        assert m.text() == "2* 3* 2 3 0* 1 1* 4*"
        assert triplet_to_run(l_cf, r_cf, m) == mr

    def test_smallest(self):
        mr = MarkedRun((1,), 1)
        l_cf, r_cf, m = run_to_triplet(mr)
        assert l_cf.cycles == ()
        assert r_cf.cycles == ()
        assert m.text() == "0*"
        assert triplet_to_run(l_cf, r_cf, m) == mr

    @pytest.mark.parametrize("n", range(1, 7))
    def test_round_trip_over_all_marked_runs(self, n):
        for p in permutations(range(1, n + 1)):
            for k in runs_of_size_1(p):
                mr = MarkedRun(p, k)
                trip = run_to_triplet(mr)
                assert triplet_to_run(*trip) == mr

    def test_alphabet_mismatch_rejected(self):
        with pytest.raises(ValueError, match="cycle counts"):
            triplet_to_run(
                parse_cycle_form("(1)"),
                parse_cycle_form(""),
                parse_colored_word("0*"),
            )

    def test_invalid_word_rejected(self):
        with pytest.raises(ValueError, match="valid"):
            triplet_to_run(
                parse_cycle_form("(1)"),
                parse_cycle_form("(1)"),
                ColoredWord(
                    (
                        ColoredLetter(0, True),
                        ColoredLetter(1, True),
                        ColoredLetter(1, False),
                    ),
                    1,
                    1,
                ),
            )


class TestCornerRun:
    @pytest.mark.parametrize("n", range(1, 6))
    def test_bijection(self, n):
        image = {}
        for t in enumerate_tlt(n):
            for c in t.path.corner_cells:
                mr = corner_to_run(t, c)
                assert mr not in image
                image[mr] = (t, c)
                assert run_to_corner(mr) == (t, c)
        runs = {
            MarkedRun(p, k)
            for p in permutations(range(1, n + 1))
            for k in runs_of_size_1(p)
        }
        assert set(image) == runs
        assert len(image) == tlt_corner_count(n)

    def test_triple_run_target(self):
        # the three marked positions of the decreasing word of size 3 all
        # pull back to corners
        for k in (1, 2, 3):
            t, c = run_to_corner(MarkedRun((3, 2, 1), k))
            assert c in t.path.corner_cells
            assert corner_to_run(t, c) == MarkedRun((3, 2, 1), k)
