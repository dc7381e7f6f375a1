from __future__ import annotations

import pytest

from qldi import (
    Classification,
    DistanceReport,
    LVariant,
    Tableau,
    classify,
    distance_search,
    enumeration_oracle,
    ldi_transform,
    scan_primes,
    support_logical_dims,
    syndrome,
    working_ldi_tableau,
)


# --- syndromes and classification ---

def test_syndrome_of_single_x_error(six_qubit):
    t = working_ldi_tableau(six_qubit)
    e = (1,) + (0,) * 11  # X on the first register
    syn_int, syn_mod = syndrome(t, e, 2)
    assert syn_int == (-1, -1, -1, 0, 0)
    assert syn_mod == (1, 1, 1, 0, 0)


def test_syndrome_of_identity_is_zero(six_qubit):
    t = working_ldi_tableau(six_qubit)
    syn_int, syn_mod = syndrome(t, (0,) * 12, 5)
    assert syn_int == (0,) * 5 and syn_mod == (0,) * 5


def test_syndrome_rejects_wrong_length(six_qubit):
    with pytest.raises(ValueError):
        syndrome(working_ldi_tableau(six_qubit), (0, 1), 2)


def test_classify_zero_syndrome_is_unavoidable():
    assert classify((0, 0, 0), 7) is Classification.UNAVOIDABLE


def test_classify_multiple_of_p_is_artifact():
    assert classify((0, -14, 7), 7) is Classification.ARTIFACT


def test_classify_guards_against_detectable_errors():
    with pytest.raises(ValueError, match="detectable"):
        classify((1, 0), 3)


def test_single_register_row_changes_class_with_prime():
    # One register with row (x=1, z=3): the X error has product -3, an
    # artifact at p=3 but detectable at p=5.
    t = Tableau(((1, 3),), 1, None)
    syn_int, syn_mod = syndrome(t, (1, 0), 3)
    assert syn_int == (-3,) and syn_mod == (0,)
    assert classify(syn_int, 3) is Classification.ARTIFACT
    _, syn_mod5 = syndrome(t, (1, 0), 5)
    assert syn_mod5 == (2,)
    with pytest.raises(ValueError):
        classify(syn_int, 5)


# --- support dimensions ---

def test_support_dims_see_the_weight_one_generator(six_qubit):
    t = working_ldi_tableau(six_qubit)
    # The canonical form moved the single-register X generator to position 5.
    kernel_dim, group_dim = support_logical_dims(t, 2, (4,))
    assert group_dim >= 1
    assert kernel_dim >= group_dim


def test_support_dims_full_support_gap_is_2k(six_qubit, five_qubit):
    for code in (six_qubit, five_qubit):
        t = working_ldi_tableau(code)
        for p in (2, 3, 5):
            kernel_dim, group_dim = support_logical_dims(t, p, range(code.n))
            assert kernel_dim - group_dim == 2 * code.k


def test_support_dims_reject_empty_support(five_qubit):
    with pytest.raises(ValueError):
        support_logical_dims(working_ldi_tableau(five_qubit), 2, ())


# --- distance search ---

def test_six_qubit_search_at_its_own_modulus(six_qubit):
    rep = distance_search(ldi_transform(six_qubit), 2, 3)
    assert rep.distance == 3
    assert rep.degenerate
    assert rep.min_stabilizer_weight == 1
    assert rep.witness is not None
    assert rep.witness.weight == 3
    assert rep.witness.classification is Classification.ARTIFACT


def test_six_qubit_search_below_distance_finds_nothing(six_qubit):
    rep = distance_search(ldi_transform(six_qubit), 2, 2)
    assert rep.distance is None
    assert rep.distance_label() == ">2"


def test_six_qubit_search_at_safe_prime(six_qubit):
    rep = distance_search(ldi_transform(six_qubit), 4099, 2)
    assert rep.distance is None
    assert rep.min_stabilizer_weight == 1  # weight-1 generator survives


def test_five_qubit_search_is_non_degenerate(five_qubit):
    t = working_ldi_tableau(five_qubit)
    for p in (2, 3, 5):
        rep = distance_search(t, p, 3)
        assert rep.distance == 3
        assert not rep.degenerate
        assert rep.min_stabilizer_weight is None
        assert rep.min_stabilizer_weight_label() == ">3"


def test_search_rejects_bad_inputs(five_qubit):
    t = working_ldi_tableau(five_qubit)
    with pytest.raises(ValueError, match="prime"):
        distance_search(t, 6, 2)
    with pytest.raises(ValueError, match="register count"):
        distance_search(t, 3, 9)


def test_witness_is_undetectable_and_outside_group(corpus):
    from qldi import in_rowspace, phi_encode

    checked = 0
    for code in corpus:
        t = working_ldi_tableau(code)
        for p in (2, 3):
            rep = distance_search(t, p, min(3, code.n))
            if rep.witness is None:
                continue
            e = phi_encode(rep.witness.word)
            syn_int, syn_mod = syndrome(t, e, p)
            assert syn_mod == (0,) * t.m
            assert syn_int == rep.witness.syndrome_int
            member, _ = in_rowspace(e, t, p)
            assert not member
            assert rep.witness.weight == rep.distance
            checked += 1
    assert checked >= 10


def test_unavoidable_witnesses_stay_undetectable_at_every_prime(corpus):
    from qldi import phi_encode

    seen = 0
    for code in corpus:
        t = working_ldi_tableau(code)
        for p in (2, 3):
            rep = distance_search(t, p, min(3, code.n))
            w = rep.witness
            if w is None or w.classification is not Classification.UNAVOIDABLE:
                continue
            assert w.syndrome_int == (0,) * t.m
            for other in (2, 3, 5, 7):
                _, syn_mod = syndrome(t, phi_encode(w.word), other)
                assert syn_mod == (0,) * t.m
            seen += 1
    assert seen >= 1


def test_search_at_source_modulus_matches_unlifted_tableau(six_qubit, corpus):
    """Mod-q behaviour is anchored to the original code: searching the LDI
    lift at p=q agrees with searching the raw generators."""
    cases = [six_qubit] + corpus[:8]
    for code in cases:
        w = min(3, code.n)
        lifted = distance_search(working_ldi_tableau(code), code.q, w)
        raw = distance_search(code.tableau, code.q, w)
        assert lifted.distance == raw.distance
        assert lifted.degenerate == raw.degenerate
        assert lifted.min_stabilizer_weight == raw.min_stabilizer_weight


def test_variants_agree_on_search_outcomes(six_qubit):
    for p in (2, 3, 5):
        reports = [
            distance_search(ldi_transform(six_qubit, v), p, 3) for v in LVariant
        ]
        assert len({r.distance for r in reports}) == 1
        assert len({r.degenerate for r in reports}) == 1


# --- prime scans ---

def test_scan_returns_one_report_per_prime(six_qubit):
    reports = scan_primes(ldi_transform(six_qubit), (3, 5, 7), 3)
    assert [r.prime for r in reports] == [3, 5, 7]
    assert all(isinstance(r, DistanceReport) for r in reports)


def test_scan_rejects_non_primes(six_qubit):
    with pytest.raises(ValueError, match="non-prime"):
        scan_primes(ldi_transform(six_qubit), (3, 4), 2)


def test_scan_of_empty_list(six_qubit):
    assert scan_primes(ldi_transform(six_qubit), (), 2) == []


# --- enumeration oracle ---

def test_oracle_matches_search_on_named_codes(six_qubit, five_qubit):
    for code, primes in ((six_qubit, (2, 3)), (five_qubit, (2, 3, 5))):
        t = working_ldi_tableau(code)
        for p in primes:
            a = distance_search(t, p, 3)
            b = enumeration_oracle(t, p, 3)
            assert (a.distance, a.degenerate, a.min_stabilizer_weight) == (
                b.distance,
                b.degenerate,
                b.min_stabilizer_weight,
            )


def test_oracle_budget_guard(six_qubit):
    with pytest.raises(ValueError, match="budget"):
        enumeration_oracle(working_ldi_tableau(six_qubit), 101, 3, budget=1000)
