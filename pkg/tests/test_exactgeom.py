import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from csdepth import InputError, LinearSystem, ParseError, Relation, det_sign, \
    feasible_point, format_rational, parse_rational, solve_square
from csdepth.exactgeom import vec_dot, vec_neg

from helpers import oracle_feasible_2d

fractions = st.fractions(min_value=-100, max_value=100, max_denominator=64)


class TestRationalStrings:
    @pytest.mark.parametrize("text,value", [
        ("3", Fraction(3)),
        ("-7/2", Fraction(-7, 2)),
        ("0", Fraction(0)),
        ("10/4", Fraction(5, 2)),
    ])
    def test_parse(self, text, value):
        assert parse_rational(text) == value

    @pytest.mark.parametrize("text", ["1/0", "0/0", "1.5", "a", "", "1/-2", "1 /2"])
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            parse_rational(text)

    @given(fractions)
    def test_round_trip(self, q):
        assert parse_rational(format_rational(q)) == q

    def test_canonical_form(self):
        assert format_rational(Fraction(4, 8)) == "1/2"
        assert format_rational(Fraction(-3, 1)) == "-3"


class TestDetSign:
    def test_identity(self):
        assert det_sign([(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]) == 1

    def test_swap(self):
        assert det_sign([(Fraction(0), Fraction(1)), (Fraction(1), Fraction(0))]) == -1

    def test_dependent(self):
        assert det_sign([(Fraction(1), Fraction(2)), (Fraction(2), Fraction(4))]) == 0

    def test_dimension_mismatch(self):
        with pytest.raises(InputError):
            det_sign([(Fraction(1),), (Fraction(0), Fraction(1))])

    @given(st.lists(st.tuples(fractions, fractions, fractions), min_size=3, max_size=3))
    def test_transposition_flips(self, cols):
        cols = [tuple(c) for c in cols]
        base = det_sign(cols)
        swapped = det_sign([cols[1], cols[0], cols[2]])
        assert swapped == -base

    @given(st.tuples(fractions, fractions), st.tuples(fractions, fractions))
    def test_repeated_column_is_zero(self, a, b):
        assert det_sign([a, a]) == 0


class TestSolveSquare:
    def test_identity_basis(self):
        sol = solve_square([(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))],
                           (Fraction(3, 2), Fraction(-2)))
        assert sol == (Fraction(3, 2), Fraction(-2))

    def test_symmetric_sum(self):
        sol = solve_square([(Fraction(1), Fraction(1)), (Fraction(1), Fraction(-1))],
                           (Fraction(2), Fraction(0)))
        assert sol == (Fraction(1), Fraction(1))

    def test_singular(self):
        assert solve_square([(Fraction(1), Fraction(2)), (Fraction(2), Fraction(4))],
                            (Fraction(1), Fraction(1))) is None

    def test_dimension_mismatch(self):
        with pytest.raises(InputError):
            solve_square([(Fraction(1), Fraction(0))], (Fraction(1),))

    @settings(max_examples=200)
    @given(st.lists(st.lists(fractions, min_size=3, max_size=3),
                    min_size=3, max_size=3),
           st.lists(fractions, min_size=3, max_size=3))
    def test_substitution_reproduces_rhs(self, cols, rhs):
        cols = [tuple(c) for c in cols]
        rhs = tuple(rhs)
        sol = solve_square(cols, rhs)
        if sol is None:
            assert det_sign(cols) == 0
        else:
            for k in range(3):
                assert sum(sol[i] * cols[i][k] for i in range(3)) == rhs[k]


def _system(rows):
    return LinearSystem(tuple(
        (tuple(Fraction(a) for a in normal), rel) for normal, rel in rows))


class TestFeasiblePoint:
    def test_open_quadrant(self):
        sol = feasible_point(_system([((1, 0), Relation.GT), ((0, 1), Relation.GT)]))
        assert sol is not None and sol[0] > 0 and sol[1] > 0

    def test_contradictory(self):
        assert feasible_point(_system([((1,), Relation.GT), ((-1,), Relation.GT)])) is None

    def test_forced_origin(self):
        sol = feasible_point(_system([((1,), Relation.GE), ((-1,), Relation.GE)]))
        assert sol == (Fraction(0),)

    def test_equality_plus_strict(self):
        sol = feasible_point(_system([((1, 1), Relation.EQ), ((1, 0), Relation.GT)]))
        assert sol is not None
        assert sol[0] + sol[1] == 0 and sol[0] > 0

    def test_constructed_feasible_never_absent(self):
        rng = random.Random(20240811)
        for _ in range(400):
            d = rng.choice([1, 2, 3, 4])
            x = tuple(Fraction(rng.randint(-50, 50), rng.randint(1, 9))
                      for _ in range(d))
            rows = []
            for _ in range(rng.randint(1, 8)):
                a = tuple(Fraction(rng.randint(-9, 9)) for _ in range(d))
                v = vec_dot(a, x)
                if v > 0:
                    rows.append((a, rng.choice([Relation.GT, Relation.GE])))
                elif v == 0:
                    rows.append((a, rng.choice([Relation.EQ, Relation.GE])))
                else:
                    rows.append((vec_neg(a), rng.choice([Relation.GT, Relation.GE])))
            system = LinearSystem(tuple(rows))
            sol = feasible_point(system)
            assert sol is not None
            for normal, rel in system.rows:
                value = vec_dot(normal, sol)
                if rel is Relation.GT:
                    assert value > 0
                elif rel is Relation.GE:
                    assert value >= 0
                else:
                    assert value == 0

    def test_agrees_with_angular_oracle_2d(self):
        """Exact cross-check, both verdicts, against an independent
        sector-sweep decision procedure."""
        rng = random.Random(99)
        rels = {Relation.GE: ">=", Relation.GT: ">", Relation.EQ: "="}
        outcomes = {True: 0, False: 0}
        for _ in range(500):
            rows = []
            for _ in range(rng.randint(1, 5)):
                a = (rng.randint(-4, 4), rng.randint(-4, 4))
                if a == (0, 0):
                    a = (1, 0)
                rel = rng.choice([Relation.GE, Relation.GT, Relation.GT, Relation.EQ])
                rows.append((a, rel))
            got = feasible_point(_system(rows)) is not None
            want = oracle_feasible_2d([(a, rels[r]) for a, r in rows])
            assert got == want
            outcomes[got] += 1
        assert outcomes[True] > 30 and outcomes[False] > 30

    def test_empty_system_rejected(self):
        with pytest.raises(InputError):
            LinearSystem(())

    def test_determinism(self):
        system = _system([((3, -1), Relation.GT), ((1, 2), Relation.GT),
                          ((0, 1), Relation.GE)])
        assert feasible_point(system) == feasible_point(system)
