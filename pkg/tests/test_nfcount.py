"""Discriminants, irreducibility certificates, and counting tables.

trinomial_disc (Sylvester + Bareiss) and closed_form_disc are independent;
their equality over the verification grid is the license for the enumerators
to use the closed form.  Irreducibility certificates are re-proved here by
brute force: integer roots are plugged back in, and mod-q certificates are
checked against exhaustive trial division over F_q.
"""

import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fixcensus import nfcount
from fixcensus.nfcount import IrreducibilityStatus, ZETA2_INV


def poly_mod_q_has_factor(d, c, q, k):
    """Does x^d - x + c have a monic degree-k factor mod q?  Brute force."""
    f = [c % q, (q - 1) % q] + [0] * (d - 2) + [1]  # lowest-first
    for tail in itertools.product(range(q), repeat=k):
        g = list(tail) + [1]
        # polynomial remainder of f by g over F_q
        rem = list(f)
        for i in range(len(rem) - 1, k - 1, -1):
            coef = rem[i]
            if coef:
                for j in range(k + 1):
                    rem[i - k + j] = (rem[i - k + j] - coef * g[j]) % q
        if all(x == 0 for x in rem[:k]):
            return True
    return False


def brute_irreducible_mod_q(d, c, q):
    return not any(poly_mod_q_has_factor(d, c, q, k) for k in range(1, d // 2 + 1))


class TestDiscriminant:
    def test_known_values(self):
        assert nfcount.trinomial_disc(3, 1) == -23
        assert nfcount.trinomial_disc(3, 0) == 4
        assert nfcount.trinomial_disc(4, 1) == 229
        assert nfcount.trinomial_disc(4, -1) == -283
        assert nfcount.trinomial_disc(2, 5) == -19  # 1 - 4c for d = 2

    def test_closed_form_matches_resultant_on_grid(self):
        for d in range(2, 11):
            for c in range(-30, 31):
                assert nfcount.trinomial_disc(d, c) == nfcount.closed_form_disc(d, c), (d, c)

    @settings(max_examples=150, deadline=None)
    @given(st.integers(2, 12), st.integers(-200, 200))
    def test_closed_form_matches_resultant(self, d, c):
        assert nfcount.trinomial_disc(d, c) == nfcount.closed_form_disc(d, c)

    @settings(max_examples=80, deadline=None)
    @given(st.sampled_from([3, 5, 7, 9]), st.integers(0, 100))
    def test_odd_degree_symmetry(self, d, c):
        # c appears only through c^(d-1), an even power for odd d
        assert nfcount.closed_form_disc(d, c) == nfcount.closed_form_disc(d, -c)

    def test_quadratic_formula(self):
        for c in range(-20, 21):
            assert nfcount.closed_form_disc(2, c) == 1 - 4 * c

    def test_degree_validation(self):
        with pytest.raises(ValueError):
            nfcount.trinomial_disc(1, 0)
        with pytest.raises(ValueError):
            nfcount.closed_form_disc(0, 1)


class TestIrreducibility:
    def test_examples(self):
        assert nfcount.irreducibility_status(3, 1) is IrreducibilityStatus.IRREDUCIBLE
        assert nfcount.irreducibility_status(3, 6) is IrreducibilityStatus.REDUCIBLE
        assert nfcount.irreducibility_status(4, 0) is IrreducibilityStatus.REDUCIBLE
        assert nfcount.irreducibility_status(2, 1) is IrreducibilityStatus.IRREDUCIBLE

    def test_unknown_is_first_class(self):
        # x^3 - x + 4 factors mod 2, so a 2-only search cannot decide
        assert nfcount.irreducibility_status(3, 4, q_max=2) is IrreducibilityStatus.UNKNOWN
        assert nfcount.irreducibility_status(3, 4) is IrreducibilityStatus.IRREDUCIBLE
        assert nfcount.certifying_prime(3, 4) == 3

    def test_reducible_has_integer_root(self):
        from fixcensus.dynamics import integral_fixed_points

        for d in (2, 3, 4, 5):
            for c in range(-20, 21):
                if nfcount.irreducibility_status(d, c) is IrreducibilityStatus.REDUCIBLE:
                    roots = integral_fixed_points(d, c).roots
                    assert c == 0 or roots
                    for z in roots:
                        assert z**d - z + c == 0

    def test_certifying_prime_recheck(self):
        # independent exhaustive factor search over F_q confirms each certificate
        for d in (2, 3, 4):
            for c in range(-8, 9):
                q = nfcount.certifying_prime(d, c, q_max=7)
                if q is not None:
                    assert brute_irreducible_mod_q(d, c, q)

    def test_internal_mod_q_test_matches_brute_force(self):
        for d in (2, 3, 4):
            for c in range(-6, 7):
                for q in (2, 3, 5):
                    assert nfcount._irreducible_mod_q(d, c, q) == brute_irreducible_mod_q(
                        d, c, q
                    ), (d, c, q)

    def test_no_certificate_for_reducible(self):
        assert nfcount.certifying_prime(3, 0) is None
        assert nfcount.certifying_prime(3, 6) is None


class TestBoundedTrinomials:
    def test_enumeration_order_and_contents(self):
        ts = nfcount.bounded_trinomials(3, 100)
        assert [(t.c, t.disc) for t in ts] == [(0, 4), (1, -23), (-1, -23)]
        for t in ts:
            assert abs(t.disc) < 100
            assert t.height == abs(t.c) ** (1.0 / 3)

    def test_tight_bound(self):
        assert nfcount.bounded_trinomials(3, 1) == []
        assert [t.c for t in nfcount.bounded_trinomials(3, 5)] == [0]

    def test_completeness_against_window_scan(self):
        for d in (2, 3, 4):
            for X in (10, 100, 1000):
                got = sorted(t.c for t in nfcount.bounded_trinomials(d, X))
                want = sorted(
                    c for c in range(-300, 301) if abs(nfcount.closed_form_disc(d, c)) < X
                )
                assert got == want, (d, X)

    def test_bad_bound(self):
        with pytest.raises(ValueError):
            nfcount.bounded_trinomials(3, 0)


class TestCountByDisc:
    def test_cubic_at_100(self):
        row = nfcount.count_by_disc(3, 100)
        assert row.count == 2
        assert row.unknown == 0
        assert row.admissible == (
            (0, "REDUCIBLE"), (1, "IRREDUCIBLE"), (-1, "IRREDUCIBLE"),
        )
        assert row.exponent_ref == Fraction(3, 4)
        assert row.bound_ok

    def test_cubic_growth(self):
        counts = [nfcount.count_by_disc(3, X).count for X in (1, 100, 1000, 10000)]
        assert counts == [0, 2, 10, 36]
        assert counts == sorted(counts)

    def test_quartic_at_300(self):
        row = nfcount.count_by_disc(4, 300)
        assert row.count == 2
        assert row.exponent_ref == Fraction(2, 3)
        assert {c for c, _ in row.admissible} == {0, 1, -1}

    def test_count_reproducible_from_admissible(self):
        row = nfcount.count_by_disc(3, 1000)
        assert row.count == sum(1 for _, s in row.admissible if s == "IRREDUCIBLE")
        assert row.unknown == sum(1 for _, s in row.admissible if s == "UNKNOWN")
        for c, status in row.admissible:
            assert nfcount.irreducibility_status(3, c).value == status

    def test_bound_flag_responds_to_constant(self):
        assert nfcount.count_by_disc(3, 1000, constant=4.0).bound_ok
        assert not nfcount.count_by_disc(3, 1000, constant=0.01).bound_ok

    def test_as_dict_schema(self):
        payload = nfcount.count_by_disc(3, 100).as_dict()
        assert payload == {
            "d": 3,
            "X": 100,
            "count": 2,
            "unknown": 0,
            "exponent_ref": "3/4",
            "bound_ok": True,
        }


class TestCountByHeight:
    def test_examples(self):
        assert nfcount.count_by_height(3, 2) == 17
        assert nfcount.count_by_height(5, 1) == 3
        assert nfcount.count_by_height(4, 0) == 1
        assert nfcount.count_by_height(2, 1.5) == 5

    def test_against_direct_enumeration(self):
        for d in (2, 3, 4):
            for hmax in (0, 1, 1.5, 2, 2.5):
                want = sum(1 for c in range(-200, 201) if abs(c) ** (1.0 / d) <= hmax)
                assert nfcount.count_by_height(d, hmax) == want, (d, hmax)

    def test_validation(self):
        with pytest.raises(ValueError):
            nfcount.count_by_height(1, 2)
        with pytest.raises(ValueError):
            nfcount.count_by_height(3, -1)


class TestSquarefree:
    def test_cubic_to_10(self):
        rep = nfcount.squarefree_disc_fraction(3, 10)
        assert rep.squarefree == 5
        assert rep.unknown == 0
        assert rep.fraction == Fraction(5, 10)
        assert rep.reference == ZETA2_INV

    def test_pinned_factorizations(self):
        # odd c gives squarefree values, even c leaves a factor of 4
        facts = {1: 23, 3: 239, 5: 11 * 61, 7: 1319, 9: 37 * 59}
        for c, value in facts.items():
            assert abs(nfcount.closed_form_disc(3, c)) == value
        for c in (2, 4, 6, 8, 10):
            assert abs(nfcount.closed_form_disc(3, c)) % 4 == 0

    def test_small_limits(self):
        assert nfcount.squarefree_disc_fraction(3, 1).fraction == Fraction(1, 1)
        rep = nfcount.squarefree_disc_fraction(3, 2)
        assert rep.fraction == Fraction(1, 2)  # 104 = 8 * 13 is not squarefree

    def test_unknown_never_counts_as_squarefree(self):
        rep = nfcount.squarefree_disc_fraction(3, 10, trial_bound=2)
        assert rep.squarefree == 0
        assert rep.unknown == 5
        assert rep.fraction == Fraction(0, 10)

    def test_reference_constant(self):
        assert abs(ZETA2_INV - 0.607927) < 1e-6
        assert ZETA2_INV == 6 / math.pi**2

    def test_as_dict(self):
        payload = nfcount.squarefree_disc_fraction(3, 10).as_dict()
        assert payload["numerator"] == 5
        assert payload["denominator"] == 10
        assert payload["fraction"] == "1/2"
        assert payload["reference"] == "0.607927"

    def test_validation(self):
        with pytest.raises(ValueError):
            nfcount.squarefree_disc_fraction(3, 0)


class TestTrinomialRow:
    def test_row_contents(self):
        row = nfcount.trinomial_row(3, 1)
        assert row == {
            "d": 3,
            "c": 1,
            "disc": -23,
            "height": 1.0,
            "irreducibility": "IRREDUCIBLE",
            "squarefree": "true",
        }

    def test_row_for_reducible_even(self):
        row = nfcount.trinomial_row(3, 2)
        assert row["disc"] == -104
        assert row["irreducibility"] == "IRREDUCIBLE"
        assert row["squarefree"] == "false"

    def test_row_unknown_squarefree(self):
        row = nfcount.trinomial_row(3, 1, trial_bound=2)
        assert row["squarefree"] == "unknown"
