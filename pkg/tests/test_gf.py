import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fewweight.gf import (
    FieldError,
    FieldSpec,
    SizeLimitError,
    eta_p,
    field_new,
    is_irreducible,
    rank_mod_p,
)


def _has_root(coeffs, p):
    return any(sum(c * x**i for i, c in enumerate(coeffs)) % p == 0 for x in range(p))


def test_prime_field_modulus():
    assert field_new(3, 1).modulus == (0, 1)


def test_quadratic_modulus_matches_exhaustive_scan():
    # a monic quadratic is irreducible iff it has no root
    expected = next(
        (c0, c1, 1) for c0, c1 in itertools.product(range(3), repeat=2) if not _has_root((c0, c1, 1), 3)
    )
    assert expected == (1, 0, 1)
    assert field_new(3, 2).modulus == expected


def test_cubic_modulus_matches_exhaustive_scan():
    candidates = [low + (1,) for low in itertools.product(range(3), repeat=3)]
    assert len(candidates) == 27
    expected = next(c for c in candidates if not _has_root(c, 3))
    assert expected == (1, 0, 2, 1)
    assert field_new(3, 3).modulus == expected


def test_irreducibility_against_factor_search():
    # degree-4 polynomials over F_3: reducible iff divisible by a monic of degree 1 or 2
    def divides(g, f):
        # long division over F_3
        f = list(f)
        while len(f) >= len(g):
            c = f[-1] * pow(g[-1], -1, 3) % 3
            shift = len(f) - len(g)
            for i, gi in enumerate(g):
                f[shift + i] = (f[shift + i] - c * gi) % 3
            f.pop()
        return not any(f)

    small = [low + (1,) for d in (1, 2) for low in itertools.product(range(3), repeat=d)]
    for low in itertools.product(range(3), repeat=4):
        f = low + (1,)
        assert is_irreducible(f, 3) == (not any(divides(g, f) for g in small))


@pytest.mark.parametrize("p, m", [(4, 1), (9, 2), (1, 1)])
def test_rejects_non_prime(p, m):
    with pytest.raises(FieldError):
        FieldSpec(p, m)


def test_rejects_even_characteristic():
    with pytest.raises(FieldError, match="characteristic 2"):
        FieldSpec(2, 3)


def test_size_guard():
    with pytest.raises(SizeLimitError):
        FieldSpec(3, 17)
    with pytest.raises(SizeLimitError):
        FieldSpec(3, 4, size_limit=3**7)
    assert FieldSpec(3, 4, size_limit=3**8).q == 81


def test_size_guard_env(monkeypatch):
    monkeypatch.setenv("FEWWEIGHT_SIZE_LIMIT", str(3**3))
    with pytest.raises(SizeLimitError):
        FieldSpec(3, 2)


def test_custom_modulus_checked():
    with pytest.raises(FieldError, match="reducible"):
        FieldSpec(3, 2, modulus=(0, 0, 1))
    F = FieldSpec(3, 2, modulus=(2, 1, 1))
    assert F.modulus == (2, 1, 1)


def test_inverse_of_one(field):
    F = field(3, 2)
    assert F.one.inv() == F.one


def test_alpha_squared_is_minus_one(field):
    F = field(3, 2)
    alpha = F.basis[1]
    assert alpha * alpha == F(-1)
    assert alpha.poly_mul(alpha) == F((2, 0))


def test_fermat_exhaustive_f81(field):
    F = field(3, 4)
    nonzero = [x for x in F.elements() if x]
    assert len(nonzero) == 80
    assert all(x ** (F.q - 1) == F.one for x in nonzero)


@pytest.mark.parametrize("p, m", [(3, 3), (5, 2), (7, 2), (3, 1)])
def test_table_product_matches_schoolbook(field, p, m):
    F = field(p, m)
    elems = list(F.elements())
    for x in elems:
        for y in elems:
            assert x * y == x.poly_mul(y)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_table_product_matches_schoolbook_large(data):
    F = FieldSpec(7, 4)
    x = F.element_at(data.draw(st.integers(0, F.q - 1)))
    y = F.element_at(data.draw(st.integers(0, F.q - 1)))
    assert x * y == x.poly_mul(y)


def test_inverse_of_zero(field):
    with pytest.raises(ZeroDivisionError):
        field(3, 2).zero.inv()


def test_mixed_fields_rejected(field):
    with pytest.raises(FieldError):
        field(3, 2).one + field(3, 3).one
    with pytest.raises(FieldError):
        field(3, 2)(field(5, 2).one)


def test_coordinates_validated(field):
    F = field(3, 2)
    with pytest.raises(FieldError):
        F((3, 0))
    with pytest.raises(FieldError):
        F((1, 0, 0))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 80), st.integers(0, 80), st.integers(0, 80))
def test_field_axioms(i, j, k):
    F = FieldSpec(3, 4)
    x, y, z = F.element_at(i), F.element_at(j), F.element_at(k)
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x
    assert x - x == F.zero
    if x:
        assert x * x.inv() == F.one
        assert (y / x) * x == y


def test_trace_examples(field):
    F = field(3, 2)
    assert F.zero.trace() == 0
    assert F.basis[1].trace() == 0
    assert F.one.trace() == 2


@pytest.mark.parametrize("p, m", [(3, 2), (3, 3), (3, 6), (5, 4), (7, 3)])
def test_trace_linear_exhaustive(field, p, m):
    F = field(p, m)
    elems = list(F.elements())
    tr = [x.trace() for x in elems]
    for x in elems:
        for y in elems:
            assert tr[(x + y).index] == (tr[x.index] + tr[y.index]) % p
        for c in range(p):
            assert tr[(F(c) * x).index] == c * tr[x.index] % p
    assert sum(t == 0 for t in tr) == p ** (m - 1)
    for c in range(p):
        assert tr.count(c) == p ** (m - 1)


def test_eta_examples(field):
    assert field(3, 2).one.eta() == 1
    assert field(3, 1)(2).eta() == -1
    assert field(3, 2)(2).eta() == 1
    squares = {(x * x).coords for x in field(3, 2).elements() if x}
    assert (2, 0) in squares


def test_eta_of_zero_rejected(field):
    with pytest.raises(FieldError):
        field(3, 2).zero.eta()


@pytest.mark.parametrize("p, m", [(3, 5), (5, 3), (7, 2), (3, 2)])
def test_eta_multiplicative_and_matches_squares(field, p, m):
    F = field(p, m)
    nonzero = [x for x in F.elements() if x]
    squares = {x * x for x in nonzero}
    eta = {x: x.eta() for x in nonzero}
    assert all((eta[x] == 1) == (x in squares) for x in nonzero)
    for x in nonzero:
        for y in nonzero:
            assert eta[x * y] == eta[x] * eta[y]


@pytest.mark.parametrize("p, m", [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 3)])
def test_eta_on_prime_subfield(field, p, m):
    F = field(p, m)
    for t in range(1, p):
        assert F(t).eta() == (1 if m % 2 == 0 else eta_p(t, p))


@pytest.mark.parametrize("p, m", [(3, 3), (5, 2), (3, 4)])
def test_frobenius_automorphism(field, p, m):
    F = field(p, m)
    elems = list(F.elements())
    images = [x.frobenius() for x in elems]
    assert len(set(images)) == F.q
    fixed = [x for x, y in zip(elems, images) if x == y]
    assert sorted(fixed) == F.prime_subfield()
    for x in elems[:20]:
        for y in elems:
            assert (x * y).frobenius() == x.frobenius() * y.frobenius()
            assert (x + y).frobenius() == x.frobenius() + y.frobenius()
    assert all(x.frobenius(m) == x for x in elems)


def test_enumerate(field):
    assert [x.coords for x in field(3, 1).elements()] == [(0,), (1,), (2,)]
    f9 = list(field(3, 2).elements())
    assert len(f9) == 9 and f9[0] == 0
    f27 = list(field(3, 3).elements())
    assert len(set(f27)) == 27
    assert f27 == sorted(f27)
    assert all(field(3, 3).element_at(x.index) == x for x in f27)
    assert [x.index for x in f27] == list(range(27))


def test_field_s():
    assert FieldSpec(3, 4).s == 2
    with pytest.raises(FieldError):
        FieldSpec(3, 3).s


def test_rank():
    assert rank_mod_p([[1, 2], [2, 4]], 3) == 1
    assert rank_mod_p([[1, 2], [2, 1]], 3) == 1
    assert rank_mod_p([[1, 0], [0, 1]], 5) == 2
