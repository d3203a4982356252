"""Classical code layer: generators, distances, Hermitian oracles."""

import pytest

from constaqec import poly
from constaqec.codes import (
    ConstacyclicCode,
    bch_designed_distance,
    hermitian_containment_oracle,
    is_nonsingular,
    multiplicative_order,
    nullspace,
)
from constaqec.cosets import CosetContext, DefiningSet, dual_contained_in, omega_set
from constaqec.families import FamilySpec, family_defining_set
from constaqec.field import ZERO, field

CTX34 = CosetContext(q=3, n=4, r=2)
NEG_ETA_Q3 = 4  # -1 = w^4 in GF(9)


def code34(members) -> ConstacyclicCode:
    return ConstacyclicCode(DefiningSet.from_members(CTX34, members), NEG_ETA_Q3)


def test_multiplicative_order():
    assert multiplicative_order(9, 8) == 1
    assert multiplicative_order(289, 1044) == 2
    with pytest.raises(ValueError):
        multiplicative_order(2, 8)


# -- designed distance -------------------------------------------------

def test_bch_empty_set_gives_one():
    assert bch_designed_distance(DefiningSet.empty(CTX34)) == 1


def test_bch_on_consecutive_odd_runs():
    ctx = CosetContext(q=9, n=40, r=2)
    for count in range(1, 9):
        z = DefiningSet.from_members(ctx, range(1, 2 * count, 2))
        assert bch_designed_distance(z) == count + 1


def test_bch_on_centred_run_q23():
    z = family_defining_set(FamilySpec("III+", 23), 6)
    assert bch_designed_distance(z) == 14


def test_bch_wrap_around_run():
    # positions 0 and 3 on a length-4 circle form a run of two
    z = DefiningSet.from_members(CTX34, [1, 7])
    assert bch_designed_distance(z) == 3
    code = code34([1, 7])
    assert code.min_distance().exact == 3  # enumeration agrees with the bound


def test_bch_invariant_under_position_relabeling():
    ctx = CosetContext(q=9, n=40, r=2)
    members = set(range(1, 11, 2))
    base = bch_designed_distance(DefiningSet.from_members(ctx, members))
    for shift in (1, 7, 20, 39):
        moved = {(1 + (((z - 1) // 2 + shift) % 40) * 2) for z in members}
        shifted = DefiningSet.from_members(ctx, moved)
        assert bch_designed_distance(shifted) == base


# -- construction and parameters ----------------------------------------

def test_dimension_is_n_minus_set_size():
    spec = FamilySpec("I", 9)
    code = ConstacyclicCode.from_family(spec, 2)
    assert (code.n, code.k, code.designed_distance) == (40, 38, 3)


def test_q23_ingredient_code():
    code = ConstacyclicCode.from_family(FamilySpec("III+", 23), 6)
    assert (code.n, code.k, code.designed_distance) == (106, 93, 14)


def test_full_code_parameters():
    code = code34([])
    assert (code.k, code.designed_distance) == (4, 1)
    assert code.generator_polynomial == [0]
    assert code.min_distance().exact == 1


def test_zero_code_is_degenerate():
    code = code34(omega_set(CTX34))
    assert code.is_zero_code
    with pytest.raises(ValueError, match="zero code"):
        _ = code.designed_distance
    with pytest.raises(ValueError, match="zero code"):
        code.min_distance()
    # its generator is the whole modulus x^n - eta
    f9 = field(3, 2)
    want = [f9.neg_exp(NEG_ETA_Q3), ZERO, ZERO, ZERO, 0]
    assert code.generator_polynomial == want


def test_shift_constant_order_must_match_r():
    with pytest.raises(ValueError, match="order"):
        ConstacyclicCode(DefiningSet.from_members(CTX34, [1]), 1)


def test_non_prime_power_q_rejected():
    ctx = CosetContext(q=15, n=4, r=2)
    with pytest.raises(ValueError, match="prime power"):
        ConstacyclicCode(DefiningSet.empty(ctx), 112)


# -- generator polynomial ------------------------------------------------

def test_generator_polynomial_hand_expanded():
    # (x - w)(x - w^3) over GF(9) comes out as x^2 + x + 2
    code = code34([1, 3])
    assert code.generator_polynomial == [4, 0, 0]
    f9 = code.base_field
    assert [f9.coeffs_of(c)[0] for c in code.generator_polynomial] == [2, 1, 1]


def test_generator_divides_modulus_polynomial():
    code = code34([1, 3])
    f9 = code.base_field
    modulus = [f9.neg_exp(NEG_ETA_Q3), ZERO, ZERO, ZERO, 0]
    quot, rem = poly.divmod_poly(f9, modulus, code.generator_polynomial)
    assert not rem
    assert poly.mul(f9, quot, code.generator_polynomial) == poly.trim(modulus)


def test_defining_set_recovered_from_roots():
    for count in (1, 2, 3):
        code = ConstacyclicCode.from_family(FamilySpec("I", 5), count)
        assert code.evaluate_defining_set() == code.defining_set.members


def test_generator_in_quartic_splitting_field():
    # q=13 puts the roots in GF(13^4); coefficients must drop to GF(169)
    code = ConstacyclicCode.from_family(FamilySpec("III-", 13), 1)
    assert code.splitting_degree == 2
    g = code.generator_polynomial
    assert len(g) == 4  # three roots, monic cubic
    assert code.evaluate_defining_set() == code.defining_set.members


def test_generator_matrix_rows_are_codewords():
    code = code34([1, 3])
    mat = code.generator_matrix
    assert len(mat) == code.k
    assert all(code.contains(row) for row in mat)
    assert mat[1][:1] == [ZERO]  # shifted copy
    assert mat[1][1:] == mat[0][:-1]


# -- minimum distance -----------------------------------------------------

def test_enumeration_distance_small_negacyclic():
    assert code34([1]).min_distance().exact == 2


def test_mds_certificate_q5_length12():
    ctx = CosetContext(q=5, n=12, r=2)
    code = ConstacyclicCode(DefiningSet.from_members(ctx, [1, 3]), 12)
    res = code.min_distance()
    assert res.method == "mds_certificate"
    assert res.exact == 3
    assert res.mds is True


def test_non_mds_code_detected_by_both_oracles():
    # Z = {1, 5}: g = x^2 + w^6 over GF(9), so weight-2 codewords exist
    code = code34([1, 5])
    res = code.min_distance()
    assert (res.exact, res.mds, res.method) == (2, False, "enumeration")
    refuted = code.min_distance(enum_budget=0)
    assert (refuted.exact, refuted.mds, refuted.method) == (2, False, "mds_refuted")


def test_budget_degradation_to_bounds():
    code = ConstacyclicCode.from_family(FamilySpec("I", 9), 5)
    res = code.min_distance(enum_budget=0, mds_budget=0)
    assert res.method == "bch_singleton"
    assert res.exact == 6  # designed and Singleton coincide
    res34 = code34([1, 5]).min_distance(enum_budget=0, mds_budget=0)
    assert res34.exact is None
    assert (res34.lower, res34.upper) == (2, 3)
    assert res34.to_json_fragment()["distance_bounds"] == [2, 3]


def test_distance_strategies_agree():
    code = ConstacyclicCode.from_family(FamilySpec("II", 5, lam=1), 2)
    by_enum = code.min_distance()
    assert by_enum.method == "enumeration"
    by_cert = code.min_distance(enum_budget=0)
    assert by_cert.method == "mds_certificate"
    assert by_enum.exact == by_cert.exact == code.n - code.k + 1


# -- Hermitian machinery ---------------------------------------------------

def test_dual_basis_spans_hermitian_orthogonal_space():
    code = code34([1, 3])
    basis = code.hermitian_dual_basis
    assert len(basis) == code.n - code.k
    f9 = code.base_field
    for vec in basis:
        for row in code.generator_matrix:
            acc = ZERO
            for v, g in zip(vec, row):
                acc = f9.add_exp(acc, f9.mul_exp(v, f9.pow_exp(g, 3)))
            assert acc == ZERO


def test_oracle_matches_criterion_q3():
    big, small = code34([1, 3]), code34([1])
    predicted = dual_contained_in(big.defining_set, small.defining_set)
    assert hermitian_containment_oracle(big, small) == predicted is True


def test_oracle_self_orthogonality_q7():
    ctx = CosetContext(q=7, n=24, r=2)
    code = ConstacyclicCode(DefiningSet.from_members(ctx, [1, 3, 5]), 24)
    assert code.defining_set.is_dual_containing()
    assert hermitian_containment_oracle(code, code)


def test_oracle_full_code_dual_is_everywhere():
    full = code34([])
    assert full.hermitian_dual_basis == []
    assert hermitian_containment_oracle(full, code34([1, 3]))


def test_oracle_rejects_mismatched_codes():
    with pytest.raises(ValueError, match="different"):
        hermitian_containment_oracle(
            code34([1]), ConstacyclicCode.from_family(FamilySpec("I", 5), 1)
        )


# -- linear algebra helpers -------------------------------------------------

def test_is_nonsingular():
    f9 = field(3, 2)
    assert is_nonsingular([[0, ZERO], [ZERO, 0]], f9)
    assert not is_nonsingular([[0, 0], [0, 0]], f9)
    assert not is_nonsingular([[ZERO, ZERO], [0, 0]], f9)


def test_nullspace_dimension_and_membership():
    f9 = field(3, 2)
    rows = [[0, 0, ZERO], [ZERO, 0, 0]]
    basis = nullspace(rows, 3, f9)
    assert len(basis) == 1
    vec = basis[0]
    for row in rows:
        acc = ZERO
        for v, r in zip(vec, row):
            acc = f9.add_exp(acc, f9.mul_exp(v, r))
        assert acc == ZERO
