"""Formal grammar derivatives and the change of variables u = xy, v = x + y."""

from itertools import product

import pytest
from hypothesis import given, strategies as st

from gesselgamma import (
    DomainError,
    GammaExtractionError,
    Multiset,
    Poly3,
    UVZ,
    XYZ,
    c_polynomial_enum,
    c_polynomial_grammar,
    change_of_variables_check,
    derive,
    gamma_extract,
    gamma_polynomial_grammar,
    gamma_table_to_uvz,
    substitute_uv,
    uvz_rules,
    xyz_rules,
)

X = Poly3.variable("x")
Y = Poly3.variable("y")
Z = Poly3.variable("z")
U = Poly3.variable("u", UVZ)
V = Poly3.variable("v", UVZ)
W = Poly3.variable("z", UVZ)  # the z of the (u, v, z) signature


def small_family(max_n=3, max_k=3, max_total=7):
    for n in range(1, max_n + 1):
        for mults in product(range(1, max_k + 1), repeat=n):
            if sum(mults) <= max_total:
                yield Multiset(mults)


exponents = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
coeffs = st.integers(-9, 9).filter(bool)
polys = st.dictionaries(exponents, coeffs, max_size=5).map(
    lambda terms: Poly3(XYZ, terms)
)


class TestRuleSets:
    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_xyz_rules(self, k):
        rs = xyz_rules(k)
        assert rs.vars == XYZ
        body = {(1, 1, k - 1): 1}
        assert rs.rule("x").terms == body
        assert rs.rule("y").terms == body
        assert rs.rule("z").terms == body

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_uvz_rules(self, k):
        rs = uvz_rules(k)
        assert rs.vars == UVZ
        assert rs.rule("u").terms == {(1, 1, k - 1): 1}
        assert rs.rule("v").terms == {(1, 0, k - 1): 2}
        assert rs.rule("z").terms == {(1, 0, k - 1): 1}

    def test_bad_multiplicity(self):
        with pytest.raises(DomainError):
            xyz_rules(0)
        with pytest.raises(DomainError):
            uvz_rules(-1)


class TestDerive:
    def test_single_steps(self):
        assert derive(X, xyz_rules(2)).terms == {(1, 1, 1): 1}
        assert derive(X * Y * Z, xyz_rules(2)).terms == {
            (1, 2, 2): 1, (2, 1, 2): 1, (2, 2, 1): 1,
        }
        assert derive(U * W, uvz_rules(2)).terms == {(1, 1, 2): 1, (2, 0, 1): 1}

    def test_constants_vanish(self):
        assert derive(Poly3.one(), xyz_rules(3)).is_zero()
        assert derive(Poly3.zero(), xyz_rules(1)).is_zero()

    def test_signature_mismatch(self):
        with pytest.raises(DomainError):
            derive(X, uvz_rules(2))

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_pair_substitution_identities(self, k):
        zk = Z ** (k - 1)
        assert derive(X * Y, xyz_rules(k)) == X * Y * (X + Y) * zk
        assert derive(X + Y, xyz_rules(k)) == 2 * X * Y * zk
        assert derive(Z, xyz_rules(k)) == X * Y * zk

    @given(polys, polys, st.integers(1, 3))
    def test_leibniz(self, p, q, k):
        rs = xyz_rules(k)
        assert derive(p * q, rs) == derive(p, rs) * q + p * derive(q, rs)

    @given(polys, polys, st.integers(-9, 9), st.integers(1, 3))
    def test_linearity(self, p, q, a, k):
        rs = xyz_rules(k)
        assert derive(a * p + q, rs) == a * derive(p, rs) + derive(q, rs)


class TestChains:
    def test_c_chain_matches_enumeration(self):
        for m in small_family():
            assert c_polynomial_grammar(m) == c_polynomial_enum(m)

    def test_c_chain_on_empty_multiset_is_the_seed(self):
        assert c_polynomial_grammar(Multiset(())) == X

    def test_gamma_chain_examples(self):
        assert gamma_polynomial_grammar(Multiset((2, 2))).terms == {
            (2, 0, 1): 1, (1, 1, 2): 1,
        }
        for k in (1, 2, 4):
            assert gamma_polynomial_grammar(Multiset((k,))).terms == {(1, 0, k - 1): 1}
        with pytest.raises(DomainError):
            gamma_polynomial_grammar(Multiset(()))

    def test_gamma_chain_matches_extraction(self):
        for m in small_family():
            expected = gamma_table_to_uvz(gamma_extract(c_polynomial_enum(m), m.K))
            assert gamma_polynomial_grammar(m) == expected

    def test_substitution_joins_the_chains(self):
        for m in small_family():
            assert substitute_uv(gamma_polynomial_grammar(m)) == c_polynomial_grammar(m)


class TestSubstitution:
    def test_examples(self):
        assert substitute_uv(U) == X * Y
        assert substitute_uv(V) == X + Y
        assert substitute_uv(W) == Z
        assert substitute_uv(U ** 2 * W + U * V * W ** 2) == c_polynomial_enum(
            Multiset((2, 2))
        )

    def test_rejects_xyz_polynomials(self):
        with pytest.raises(DomainError):
            substitute_uv(X)


class TestChangeOfVariables:
    def test_c_polynomial_example(self):
        got = change_of_variables_check(c_polynomial_enum(Multiset((2, 2))))
        assert got.terms == {(2, 0, 1): 1, (1, 1, 2): 1}

    def test_signed_example(self):
        got = change_of_variables_check(X ** 2 + Y ** 2, signed=True)
        assert got.terms == {(0, 2, 0): 1, (1, 0, 0): -2}

    def test_unsigned_rejects_negative_peel(self):
        with pytest.raises(GammaExtractionError) as exc:
            change_of_variables_check(X ** 2 + Y ** 2)
        assert (exc.value.i, exc.value.j, exc.value.value) == (0, 1, -2)

    def test_rejects_asymmetric_input(self):
        with pytest.raises(GammaExtractionError):
            change_of_variables_check(X)

    def test_rejects_inhomogeneous_slice(self):
        with pytest.raises(GammaExtractionError) as exc:
            change_of_variables_check(X * Y + X + Y)
        assert exc.value.i == 0

    @given(st.data())
    def test_roundtrip_on_uvz_polynomials(self, data):
        terms = {}
        for i in data.draw(st.sets(st.integers(0, 3), min_size=1, max_size=3)):
            d = data.draw(st.integers(0, 6))
            for j in data.draw(st.sets(st.integers(0, d // 2), min_size=1, max_size=3)):
                c = data.draw(st.integers(-9, 9).filter(bool))
                terms[(j, d - 2 * j, i)] = c
        q = Poly3(UVZ, terms)
        assert change_of_variables_check(substitute_uv(q), signed=True) == q
