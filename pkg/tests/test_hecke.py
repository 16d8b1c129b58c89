"""Hecke algebra, cellular basis, Gram matrices, residue-field ranks."""

import random

import pytest

from fockdec.errors import ConventionError
from fockdec.hecke import (
    HeckeElement,
    ResidueField,
    bareiss_determinant,
    gram_det_valuation,
    gram_matrix,
    gram_rank_at_root,
    hecke_multiply,
    identity_perm,
    murphy_element,
    murphy_table,
    perm_inverse,
    perm_length,
    reduced_word,
    right_gen,
    row_reading_tableau,
    tableau_perm,
)
from fockdec.laurent import LaurentPoly, parse_poly
from fockdec.partitions import dim_specht, partitions_of, standard_tableaux
from fockdec.schaper import schaper_det_rhs
from fockdec.canonical import decomposition_matrix

from itertools import permutations as iter_permutations

one = LaurentPoly.one()
q = LaurentPoly.q_power(1)


class TestPermutations:
    def test_length_is_inversions(self):
        assert perm_length((0, 1, 2)) == 0
        assert perm_length((2, 1, 0)) == 3

    def test_reduced_word(self):
        for w in iter_permutations(range(4)):
            word = reduced_word(tuple(w))
            assert len(word) == perm_length(tuple(w))
            rebuilt = identity_perm(4)
            for i in word:
                rebuilt = right_gen(rebuilt, i)
            assert rebuilt == tuple(w)

    def test_inverse(self):
        w = (2, 0, 3, 1)
        assert perm_inverse(perm_inverse(w)) == w
        assert perm_length(perm_inverse(w)) == perm_length(w)


class TestHeckeAlgebra:
    def test_identity(self):
        t_w = HeckeElement.t(3, (1, 2, 0))
        assert hecke_multiply(HeckeElement.unit(3), t_w) == t_w
        assert hecke_multiply(t_w, HeckeElement.unit(3)) == t_w

    def test_quadratic_relation(self):
        t_s = HeckeElement.t(2, (1, 0))
        expected = HeckeElement(2, {(1, 0): q - 1, (0, 1): q})
        assert hecke_multiply(t_s, t_s) == expected

    def test_associativity_generators_exhaustive(self):
        for m in (3, 4):
            gens = [
                HeckeElement.t(m, right_gen(identity_perm(m), i))
                for i in range(m - 1)
            ]
            for a in gens:
                for b in gens:
                    for c in gens:
                        assert (a * b) * c == a * (b * c)

    def test_associativity_random_triples(self):
        rng = random.Random(7)
        m = 4
        perms = list(iter_permutations(range(m)))
        for _ in range(12):
            x = HeckeElement(m, {tuple(rng.choice(perms)): LaurentPoly({rng.randint(-2, 2): rng.randint(1, 3)})})
            y = HeckeElement.t(m, tuple(rng.choice(perms)))
            z = HeckeElement.t(m, tuple(rng.choice(perms)))
            assert (x * y) * z == x * (y * z)

    def test_length_additive_products(self):
        # s1 followed on the right by s2: lengths add, single term.
        lhs = HeckeElement.t(3, (1, 0, 2)) * HeckeElement.t(3, (0, 2, 1))
        assert lhs == HeckeElement.t(3, (1, 2, 0))

    def test_star_antiautomorphism(self):
        x = HeckeElement.t(3, (1, 2, 0)) + HeckeElement.t(3, (1, 0, 2)).scale(q)
        y = HeckeElement.t(3, (2, 1, 0))
        assert (x * y).star() == y.star() * x.star()
        assert x.star().star() == x

    def test_rank_mismatch(self):
        with pytest.raises(ValueError):
            HeckeElement.unit(2) * HeckeElement.unit(3)


class TestMurphyBasis:
    def test_one_row_is_full_sum(self):
        for m in (2, 3):
            t = standard_tableaux((m,))[0]
            element = murphy_element(t, t)
            assert set(element.terms) == set(iter_permutations(range(m)))
            assert all(coeff == one for coeff in element.terms.values())

    def test_one_column_is_unit(self):
        for m in (2, 3, 4):
            t = standard_tableaux((1,) * m)[0]
            assert murphy_element(t, t) == HeckeElement.unit(m)

    def test_m2_change_of_basis(self):
        table = murphy_table(2)
        t_e = HeckeElement.unit(2)
        t_s = HeckeElement.t(2, (1, 0))
        coords_e = table.express(t_e)
        coords_s = table.express(t_s)
        assert coords_e == {((1, 1), 0, 0): one}
        assert coords_s == {((2,), 0, 0): one, ((1, 1), 0, 0): -one}

    def test_shape_mismatch(self):
        s = standard_tableaux((2, 1))[0]
        t = standard_tableaux((3,))[0]
        with pytest.raises(ValueError):
            murphy_element(s, t)

    def test_express_round_trip(self):
        table = murphy_table(3)
        rng = random.Random(3)
        perms = list(iter_permutations(range(3)))
        for _ in range(5):
            element = HeckeElement(
                3,
                {
                    tuple(rng.choice(perms)): LaurentPoly(
                        {rng.randint(-2, 2): rng.randint(-3, 3)}
                    )
                    for _ in range(3)
                },
            )
            coords = table.express(element)
            rebuilt = HeckeElement(3)
            for (shape, si, ti), coeff in coords.items():
                tabs = standard_tableaux(shape)
                rebuilt = rebuilt + murphy_element(tabs[si], tabs[ti]).scale(coeff)
            assert rebuilt == element

    def test_tableau_perm_distinguished(self):
        base = row_reading_tableau((3, 1))
        assert tableau_perm(base) == identity_perm(4)
        t = ((1, 3, 4), (2,))
        d = tableau_perm(t)
        assert d == (0, 3, 1, 2)


class TestGramMatrices:
    def test_m2(self):
        assert gram_matrix((2,)).rows == [[one]]
        assert gram_matrix((1, 1)).rows == [[one + q]]

    def test_m2_valuations(self):
        for n in (2, 3, 4):
            assert gram_det_valuation((2,), n) == 0
        assert gram_det_valuation((1, 1), 2) == 1
        assert gram_det_valuation((1, 1), 3) == 0

    def test_two_one(self):
        gram = gram_matrix((2, 1))
        assert len(gram.rows) == 2
        assert gram.rows[0][1] == gram.rows[1][0]
        for n in (2, 3):
            assert gram_det_valuation((2, 1), n) == schaper_det_rhs((2, 1), n)

    def test_oracle_equality_m4(self):
        for m in range(5):
            for lam in partitions_of(m):
                for n in (2, 3, 4):
                    assert gram_det_valuation(lam, n) == schaper_det_rhs(lam, n)

    def test_determinant_nonzero_m4(self):
        for m in range(5):
            for lam in partitions_of(m):
                assert not gram_matrix(lam).determinant().is_zero()

    def test_size_cap(self):
        with pytest.raises(ValueError):
            gram_matrix((4, 2))
        gram_matrix((2, 1), size_cap=3)


class TestBareiss:
    def test_empty(self):
        assert bareiss_determinant([]) == one

    def test_two_by_two(self):
        matrix = [[q, one], [one, q]]
        assert bareiss_determinant(matrix) == q * q - 1

    def test_singular(self):
        matrix = [[q, q], [q, q]]
        assert bareiss_determinant(matrix).is_zero()

    def test_swap_sign(self):
        matrix = [[LaurentPoly.zero(), one], [one, LaurentPoly.zero()]]
        assert bareiss_determinant(matrix) == -one

    def test_matches_cofactor_3x3(self):
        rng = random.Random(11)
        for _ in range(5):
            matrix = [
                [LaurentPoly({rng.randint(-1, 2): rng.randint(-2, 2)}) for _ in range(3)]
                for _ in range(3)
            ]
            a, b, c = matrix[0]
            d, e, f = matrix[1]
            g, h, i = matrix[2]
            cofactor = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
            assert bareiss_determinant(matrix) == cofactor


class TestResidueField:
    def test_reduce_q_powers(self):
        field = ResidueField(2)
        # q = -1 at the second root of unity.
        assert field.reduce(q) == field.reduce(LaurentPoly.from_int(-1))
        assert field.reduce(LaurentPoly.q_power(-1)) == field.reduce(q)

    def test_inverse(self):
        field = ResidueField(4)
        value = field.reduce(q + 1)
        inv = field.inverse(value)
        assert field.mul(value, inv) == field.reduce(one)

    def test_rank_examples(self):
        assert gram_rank_at_root((1, 1), 2) == 0
        assert gram_rank_at_root((2,), 2) == 1

    def test_rank_zero_iff_singular(self):
        for m in range(1, 5):
            for lam in partitions_of(m):
                for n in (2, 3):
                    rank = gram_rank_at_root(lam, n)
                    from fockdec.partitions import is_regular

                    if is_regular(lam, n):
                        assert rank > 0
                    else:
                        assert rank == 0

    def test_ariki_consistency(self):
        for n in (2, 3):
            for m in range(5):
                dmat = decomposition_matrix(n, m)
                ranks = {mu: gram_rank_at_root(mu, n) for mu in partitions_of(m)}
                for lam in partitions_of(m):
                    total = sum(
                        dmat.entry(lam, mu).eval_at_one() * ranks[mu]
                        for mu in partitions_of(m)
                    )
                    assert total == dim_specht(lam)
