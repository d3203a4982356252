"""Field arithmetic: axioms, Zech vs polynomial basis, embeddings."""

import pytest

from constaqec.field import (
    FIELD_SIZE_CAP,
    ZERO,
    GaloisField,
    embedding,
    field,
    find_modulus,
    prime_factors,
    prime_power,
)


def exps(f: GaloisField) -> list[int]:
    return [ZERO] + list(range(f.n_units))


def test_modulus_selection_is_deterministic_and_frozen():
    # hand-checked: x^2+x+2 is the first degree-2 polynomial over GF(3)
    # whose root is primitive (x^2+1 gives order 4, earlier ones reducible)
    assert field(3, 2).modulus == (2, 1, 1)
    assert field(3, 2) is field(3, 2)
    assert find_modulus(3, 2) == (2, 1, 1)


def test_not_prime_rejected():
    with pytest.raises(ValueError, match="not prime"):
        GaloisField(9, 1)


def test_size_cap_enforced():
    with pytest.raises(ValueError, match="cap"):
        GaloisField(2, 25)
    assert 2 ** 25 > FIELD_SIZE_CAP


def test_gf9_omega_has_order_eight():
    f = field(3, 2)
    powers = {f.pow_exp(1, k) for k in range(1, 8)}
    assert 0 not in powers
    assert f.pow_exp(1, 8) == 0


def test_gf49_omega_order_by_exhaustive_divisor_check():
    f = field(7, 2)
    assert f.n_units == 48
    assert f.pow_exp(1, 48) == 0
    proper = [d for d in range(1, 48) if 48 % d == 0]
    assert all(f.pow_exp(1, d) != 0 for d in proper)


def test_gf9_inverse_example():
    f = field(3, 2)
    assert f.inv_exp(3) == 5  # 3 + 5 = 8 = 0 mod 8


def test_additive_inverse_exhaustive_gf9():
    f = field(3, 2)
    for a in exps(f):
        assert f.add_exp(a, f.neg_exp(a)) == ZERO


def test_distributivity_exhaustive_gf9():
    f = field(3, 2)
    es = exps(f)
    for a in es:
        for b in es:
            for c in es:
                left = f.mul_exp(a, f.add_exp(b, c))
                right = f.add_exp(f.mul_exp(a, b), f.mul_exp(a, c))
                assert left == right


@pytest.mark.parametrize("p,m", [(3, 2), (5, 2), (3, 3), (7, 2), (3, 4), (11, 2)])
def test_zech_addition_matches_polynomial_basis(p, m):
    f = field(p, m)
    for a in exps(f):
        ca = f.coeffs_of(a)
        for b in exps(f):
            cb = f.coeffs_of(b)
            want = tuple((x + y) % p for x, y in zip(ca, cb))
            assert f.coeffs_of(f.add_exp(a, b)) == want


@pytest.mark.parametrize("p,m", [(3, 2), (5, 2), (7, 2), (3, 4)])
def test_multiplicative_group_is_whole_unit_set(p, m):
    f = field(p, m)
    seen = {f.coeffs_of(e) for e in range(f.n_units)}
    assert len(seen) == f.n_units
    assert all(any(c) for c in seen)


def test_field_element_operators_and_cross_field_guard():
    f9, f25 = field(3, 2), field(5, 2)
    a, b = f9.omega(), f9.element(3)
    assert (a + b).exp == f9.add_exp(1, 3)
    assert (a * b).exp == 4
    assert (a - a).is_zero
    assert (a / a) == f9.one()
    assert (-f9.zero()).is_zero
    assert a ** 8 == f9.one()
    with pytest.raises(ValueError, match="different fields"):
        _ = a + f25.omega()
    with pytest.raises(TypeError):
        _ = a + 1


def test_zero_element_rules():
    f = field(3, 2)
    with pytest.raises(ZeroDivisionError):
        f.inv_exp(ZERO)
    assert f.pow_exp(ZERO, 0) == 0  # 0^0 = 1 convention
    assert f.pow_exp(ZERO, 3) == ZERO
    with pytest.raises(ZeroDivisionError):
        f.pow_exp(ZERO, -1)


def test_embedding_gf9_in_gf81_is_field_homomorphism():
    base, ext = field(3, 2), field(3, 4)
    emb = embedding(base, ext)
    assert emb.apply(0) == 0       # 1 -> 1
    assert emb.apply(ZERO) == ZERO  # 0 -> 0
    es = exps(base)
    images = {emb.apply(e) for e in es}
    assert len(images) == len(es)  # injective
    for a in es:
        for b in es:
            assert emb.apply(base.add_exp(a, b)) == ext.add_exp(emb.apply(a), emb.apply(b))
            assert emb.apply(base.mul_exp(a, b)) == ext.mul_exp(emb.apply(a), emb.apply(b))


def test_embedding_retract_round_trip_and_rejection():
    base, ext = field(3, 2), field(3, 4)
    emb = embedding(base, ext)
    for e in exps(base):
        assert emb.retract(emb.apply(e)) == e
    outside = next(
        e for e in range(ext.n_units)
        if (e * base.n_units) % ext.n_units != 0
    )
    with pytest.raises(ValueError, match="outside"):
        emb.retract(outside)


def test_incompatible_embedding_rejected():
    with pytest.raises(ValueError, match="does not embed"):
        embedding(field(3, 2), field(5, 2))
    with pytest.raises(ValueError, match="does not embed"):
        embedding(field(3, 3), field(3, 4))


def test_identity_embedding():
    f = field(3, 2)
    emb = embedding(f, f)
    assert all(emb.apply(e) == e for e in exps(f))


def test_coeff_round_trip():
    f = field(5, 2)
    for e in exps(f):
        assert f.exp_of_coeffs(f.coeffs_of(e)) == e


def test_prime_helpers():
    assert prime_factors(48) == [2, 3]
    assert prime_power(49) == (7, 2)
    assert prime_power(12) is None
    assert prime_power(27) == (3, 3)
