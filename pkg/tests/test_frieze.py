import itertools
import unittest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from friezes.errors import NotAFriezeError, OutOfStripError, ParseError, PositivityError
from friezes.frieze import (CONDITION_EDGE, CONDITION_POSITIVITY, CONDITION_PTOLEMY, Frieze, QuiddityRow,
                            diamond_rule_check, format_element, frieze_from_quiddity, frieze_type,
                            is_conway_coxeter, matrix_word, matrix_word_check, pattern_entry, quiddity_of,
                            render_pattern_text, validate_frieze)
from friezes.ring import context_create, lambda_embed

TEN_GON_Q = (1, 2, 1, 1, 3, 2, 1, 1, 2, 2)
CTX3, CTX4, CTX6 = context_create(3), context_create(4), context_create(6)
SQRT2, SQRT3 = CTX4.gen, CTX6.gen


def ten_gon_frieze():
    return frieze_from_quiddity(QuiddityRow.from_integers(CTX4, TEN_GON_Q, 4))


def heptagon_frieze():
    entries = (SQRT3, SQRT3, 1 + SQRT3, CTX6.one, 1 + SQRT3, SQRT3, SQRT3)
    return frieze_from_quiddity(QuiddityRow(CTX6, entries))


def integer_row(ctx, values):
    return QuiddityRow(ctx, tuple(ctx.constant(v) for v in values))


def diamond_filler_accepts(quiddity):
    """
    Fills the pattern row by row with exact Fractions by the diamond rule
    F(i, i+r+1) = (F(i, i+r) F(i+1, i+r+1) - 1) / F(i+1, i+r) and accepts when the interior rows are
    positive and the rows N-1 and N come out as ones and zeros.
    """
    n = len(quiddity)
    rows = {1: [Fraction(1)] * n, 2: [Fraction(t) for t in quiddity]}
    for r in range(2, n):
        below = rows[r - 1]
        current = rows[r]
        if r <= n - 2 and any(x <= 0 for x in current):
            return False
        if any(below[(i + 1) % n] == 0 for i in range(n)):
            return False
        rows[r + 1] = [(current[i] * current[(i + 1) % n] - 1) / below[(i + 1) % n] for i in range(n)]
    return all(x == 1 for x in rows[n - 1]) and all(x == 0 for x in rows[n])


class FriezeFromQuiddityTestCase(unittest.TestCase):

    def test_triangle(self):
        f = frieze_from_quiddity(integer_row(CTX3, (1, 1, 1)))
        for a, b in f.pairs():
            self.assertEqual(f.value(a, b), 1)

    def test_ten_gon_entries(self):
        f = ten_gon_frieze()
        self.assertEqual(f.value(0, 3), 3)
        self.assertEqual(f.value(0, 2), 2 * SQRT2)

    def test_heptagon_entries(self):
        f = heptagon_frieze()
        self.assertEqual(f.value(0, 3), 2 + SQRT3)
        self.assertEqual(f.value(0, 4), 2)
        self.assertEqual(f.value(1, 4), SQRT3)
        self.assertEqual(f.value(2, 4), 1)

    def test_closure_failure(self):
        with self.assertRaises(NotAFriezeError):
            frieze_from_quiddity(integer_row(CTX3, (1, 1, 1, 1)))

    def test_positivity_failure(self):
        # (a, b, a, b) with ab = 2 closes up for any sign
        with self.assertRaises(PositivityError):
            frieze_from_quiddity(integer_row(CTX3, (-1, -2, -1, -2)))

    def test_square_exhaustively_against_diamond_filler(self):
        accepted = []
        for entries in itertools.product(range(1, 4), repeat=4):
            self.assertEqual(matrix_word(integer_row(CTX3, entries)).is_minus_identity(),
                             diamond_filler_accepts(entries), entries)
            if diamond_filler_accepts(entries):
                frieze_from_quiddity(integer_row(CTX3, entries))
                accepted.append(entries)
            else:
                with self.assertRaises(NotAFriezeError):
                    frieze_from_quiddity(integer_row(CTX3, entries))
        self.assertEqual(accepted, [(1, 2, 1, 2), (2, 1, 2, 1)])

    def test_pentagon_exhaustively_against_diamond_filler(self):
        accepted = set()
        for entries in itertools.product(range(1, 4), repeat=5):
            try:
                frieze_from_quiddity(integer_row(CTX3, entries))
                accepted.add(entries)
            except (NotAFriezeError, PositivityError):
                pass
        self.assertEqual(accepted, {e for e in itertools.product(range(1, 4), repeat=5) if diamond_filler_accepts(e)})
        self.assertEqual(len(accepted), 5)
        self.assertIn((1, 3, 1, 2, 2), accepted)

    def test_debug_recomputation_agrees(self):
        quiddity = QuiddityRow.from_integers(CTX4, TEN_GON_Q, 4)
        self.assertEqual(frieze_from_quiddity(quiddity, debug=True), frieze_from_quiddity(quiddity, debug=False))

    def test_round_trip(self):
        for f in (ten_gon_frieze(), heptagon_frieze(), frieze_from_quiddity(integer_row(CTX3, (1, 3, 1, 2, 2)))):
            self.assertEqual(frieze_from_quiddity(quiddity_of(f)), f)


class ValidateFriezeTestCase(unittest.TestCase):

    def test_constructed_friezes_pass(self):
        for f in (ten_gon_frieze(), heptagon_frieze(), frieze_from_quiddity(integer_row(CTX3, (1, 2, 1, 2)))):
            report = validate_frieze(f)
            self.assertTrue(report.ok, report.message)

    def test_ptolemy_on_the_square(self):
        lambda_4 = lambda_embed(CTX4, 4)
        f = frieze_from_quiddity(QuiddityRow(CTX4, (lambda_4,) * 4))
        self.assertEqual(f.value(0, 2) * f.value(1, 3), f.value(0, 1) * f.value(2, 3) + f.value(0, 3) * f.value(1, 2))
        self.assertTrue(validate_frieze(f).ok)

    def test_all_ones_pentagon_fails(self):
        f = Frieze.from_function(CTX3, 5, lambda a, b: CTX3.zero if a == b else CTX3.one)
        report = validate_frieze(f)
        self.assertFalse(report.ok)
        self.assertEqual(report.condition, CONDITION_PTOLEMY)
        self.assertEqual(report.witness, (0, 1, 2, 3))

    def test_edge_and_positivity_violations(self):
        f = ten_gon_frieze()
        broken_edge = Frieze.from_function(CTX4, 10, lambda a, b: CTX4.constant(2) if (a, b) == (3, 4) else f.value(a, b))
        self.assertEqual(validate_frieze(broken_edge).condition, CONDITION_EDGE)
        negative = Frieze.from_function(CTX4, 10, lambda a, b: -f.value(a, b) if (a, b) == (2, 6) else f.value(a, b))
        report = validate_frieze(negative)
        self.assertEqual(report.condition, CONDITION_POSITIVITY)
        self.assertEqual(report.witness, (2, 6))


class PatternTestCase(unittest.TestCase):

    def test_boundary_rows(self):
        f = ten_gon_frieze()
        for alpha in range(10):
            self.assertTrue(pattern_entry(f, alpha, alpha).is_zero())
            self.assertEqual(pattern_entry(f, alpha, alpha + 1), 1)
            self.assertEqual(pattern_entry(f, alpha, alpha + 9), 1)
            self.assertTrue(pattern_entry(f, alpha, alpha + 10).is_zero())
        self.assertEqual(pattern_entry(f, 0, 3), 3)

    def test_ten_gon_rows(self):
        f = ten_gon_frieze()
        self.assertEqual([pattern_entry(f, i, i + 3) for i in range(10)], [3, 1, 5, 11, 3, 1, 3, 7, 3, 3])
        self.assertEqual([pattern_entry(f, i, i + 4) for i in range(10)],
                         [m * SQRT2 for m in (1, 2, 9, 8, 1, 1, 5, 5, 4, 2)])
        self.assertEqual([pattern_entry(f, i, i + 5) for i in range(10)], [3, 7, 13, 5, 1, 3, 7, 13, 5, 1])

    def test_out_of_strip(self):
        f = ten_gon_frieze()
        with self.assertRaises(OutOfStripError):
            pattern_entry(f, 0, 11)
        with self.assertRaises(OutOfStripError):
            pattern_entry(f, 3, 2)

    def test_diamond_rule(self):
        self.assertTrue(diamond_rule_check(ten_gon_frieze(), periods=2))
        self.assertTrue(diamond_rule_check(heptagon_frieze()))

    @settings(max_examples=100, deadline=None)
    @given(st.integers(min_value=-30, max_value=30), st.integers(min_value=0, max_value=10))
    def test_glide_reflection(self, i, width):
        f = ten_gon_frieze()
        j = i + width
        self.assertEqual(pattern_entry(f, j, i + 10), pattern_entry(f, i, j))
        self.assertEqual(pattern_entry(f, i + 10, j + 10), pattern_entry(f, i, j))


class MatrixWordAndTypeTestCase(unittest.TestCase):

    def test_matrix_word(self):
        self.assertTrue(matrix_word_check(ten_gon_frieze()))
        self.assertTrue(matrix_word_check(frieze_from_quiddity(integer_row(CTX3, (1, 1, 1)))))
        self.assertFalse(matrix_word(integer_row(CTX3, (1, 1, 1, 1))).is_minus_identity())

    def test_frieze_type(self):
        self.assertEqual(frieze_type(ten_gon_frieze(), 4), TEN_GON_Q)
        self.assertIsNone(frieze_type(heptagon_frieze(), 6))
        self.assertIsNone(frieze_type(heptagon_frieze(), 3))
        self.assertEqual(frieze_type(frieze_from_quiddity(integer_row(CTX3, (1, 1, 1))), 3), (1, 1, 1))

    def test_quiddity_of(self):
        self.assertEqual(quiddity_of(ten_gon_frieze()).entries, tuple(q * SQRT2 for q in TEN_GON_Q))
        self.assertEqual(quiddity_of(heptagon_frieze()).entries, (SQRT3, SQRT3, 1 + SQRT3, 1, 1 + SQRT3, SQRT3, SQRT3))

    def test_conway_coxeter(self):
        self.assertTrue(is_conway_coxeter(frieze_from_quiddity(integer_row(CTX3, (1, 3, 1, 2, 2)))))
        self.assertFalse(is_conway_coxeter(ten_gon_frieze()))


class RenderTestCase(unittest.TestCase):

    def test_format_element(self):
        self.assertEqual(format_element(2 * SQRT2), "2√2")
        self.assertEqual(format_element(SQRT2), "√2")
        self.assertEqual(format_element(1 - SQRT2), "1-√2")
        self.assertEqual(format_element(-SQRT2), "-√2")
        self.assertEqual(format_element(CTX4.constant(Fraction(1, 2))), "1/2")
        self.assertEqual(format_element(1 + SQRT3), "1+√3")
        self.assertEqual(format_element(2 + SQRT3), "2+√3")
        self.assertEqual(format_element(context_create(5).gen), "1/2+√5/2")
        self.assertEqual(format_element(context_create(12).gen), "[0,1,0,0]")
        self.assertEqual(format_element(CTX3.constant(7)), "7")

    def test_triangle(self):
        lines = render_pattern_text(frieze_from_quiddity(integer_row(CTX3, (1, 1, 1)))).splitlines()
        self.assertEqual([line.split() for line in lines], [["0"] * 3, ["1"] * 3, ["1"] * 3, ["0"] * 3])

    def test_ten_gon_quiddity_row(self):
        lines = render_pattern_text(ten_gon_frieze()).splitlines()
        self.assertEqual(len(lines), 11)
        row2 = lines[8].split()
        quiddity = [format_element(q * SQRT2) for q in TEN_GON_Q]
        self.assertIn(row2, [quiddity[k:] + quiddity[:k] for k in range(10)])

    def test_half_cell_offset(self):
        lines = render_pattern_text(ten_gon_frieze(), periods=2).splitlines()
        indents = [len(line) - len(line.lstrip()) for line in lines]
        self.assertEqual(indents, sorted(indents, reverse=True))
        self.assertEqual(len(lines[0].split()), 20)

    def test_heptagon_contains_two_plus_sqrt3(self):
        text = render_pattern_text(heptagon_frieze())
        self.assertIn("2+√3", text)
        self.assertEqual(render_pattern_text(heptagon_frieze()), text)


class FileFormatTestCase(unittest.TestCase):

    def test_frieze_round_trip(self):
        f = heptagon_frieze()
        self.assertEqual(Frieze.from_dict(f.to_dict()), f)
        self.assertEqual(f.to_dict()["table"][0][1], {"L": 6, "coeffs": ["1/1", "0/1"]})

    def test_quiddity_round_trip(self):
        row = quiddity_of(ten_gon_frieze())
        self.assertEqual(QuiddityRow.from_dict(row.to_dict()), row)

    def test_malformed(self):
        data = ten_gon_frieze().to_dict()
        data["table"] = data["table"][:-1]
        with self.assertRaises(ParseError):
            Frieze.from_dict(data)
        with self.assertRaises(ParseError):
            QuiddityRow.from_dict({"L": 4, "entries": [{"L": 4, "coeffs": ["1/1"]}] * 3})
        with self.assertRaises(ParseError):
            QuiddityRow.from_dict({"L": 4, "entries": [{"L": 4, "coeffs": ["1/1", "0/1"]}] * 2})


if __name__ == '__main__':
    unittest.main()
