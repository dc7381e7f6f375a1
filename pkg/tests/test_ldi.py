from __future__ import annotations

import pytest

from qldi import (
    LVariant,
    StabilizerCode,
    Tableau,
    build_L,
    canonical_form,
    gram,
    in_rowspace,
    is_ldi,
    ldi_transform,
    max_entry,
    working_ldi_tableau,
)
from conftest import SIX_QUBIT_LDI


def test_build_l_splits_gram_by_variant(six_qubit):
    g = gram(canonical_form(six_qubit).tableau.lift())
    assert g.entries[3][1] == -2 and g.entries[1][3] == 2
    assert sum(1 for row in g.entries for v in row if v) == 2

    full = build_L(g, LVariant.FULL)
    minus = build_L(g, LVariant.MINUS)
    plus = build_L(g, LVariant.PLUS)
    assert full[3][1] == -2 and sum(map(any, full)) == 1
    assert minus == full
    assert plus[1][3] == 2 and sum(map(any, plus)) == 1


def test_is_ldi_detects_integer_commutation():
    xxinv_zz = Tableau(((1, -1, 0, 0), (0, 0, 1, 1)), 2, None)
    assert is_ldi(xxinv_zz)
    xx_zz = Tableau(((1, 1, 0, 0), (0, 0, 1, 1)), 2, None)
    assert not is_ldi(xx_zz)


def test_max_entry_uses_absolute_values():
    t = Tableau(((1, -3, 0, 2),), 2, None)
    assert max_entry(t) == 3


def test_full_variant_reproduces_known_six_qubit_form(six_qubit):
    form = ldi_transform(six_qubit, LVariant.FULL)
    assert form.tableau.rows == SIX_QUBIT_LDI
    assert form.B == 1
    assert form.variant is LVariant.FULL
    assert is_ldi(form.tableau)


def test_minus_variant_matches_full_for_six_qubit(six_qubit):
    # The only nonzero Gram entry sits below the diagonal, so the
    # lower-triangular split coincides with the full split here.
    assert ldi_transform(six_qubit, LVariant.MINUS).tableau.rows == SIX_QUBIT_LDI


def test_plus_variant_six_qubit(six_qubit):
    form = ldi_transform(six_qubit, LVariant.PLUS)
    assert is_ldi(form.tableau)
    # Upper-triangular split pushes a +2 into row 2's Z block instead.
    assert form.B == 2
    assert form.tableau.rows[1][6 + 3] == 2
    assert form.tableau.rows[3] != SIX_QUBIT_LDI[3][:6] + SIX_QUBIT_LDI[3][6:]


def test_transform_preserves_group_mod_q(six_qubit, five_qubit, corpus):
    """Rows of the output and of the canonical form span the same group mod q
    in both directions."""
    for code in (six_qubit, five_qubit, *corpus[:10]):
        canon = canonical_form(code).tableau
        for variant in LVariant:
            out = ldi_transform(code, variant)
            reduced = out.tableau.reduce_mod(code.q)
            for row in reduced.rows:
                assert in_rowspace(row, canon, code.q)[0]
            for row in canon.rows:
                assert in_rowspace(row, reduced, code.q)[0]


def test_transform_is_ldi_for_corpus(corpus):
    for code in corpus[:10]:
        for variant in LVariant:
            assert is_ldi(ldi_transform(code, variant).tableau)


def test_minus_variant_entry_bound(corpus):
    for code in corpus:
        out = ldi_transform(code, LVariant.MINUS)
        bound = (1 + code.k * (code.q - 1)) * (code.q - 1)
        assert out.B <= bound, (code.n, code.k, code.q, out.B, bound)


def test_transform_of_commuting_canonical_code_adds_nothing():
    code = StabilizerCode(Tableau(((1, 0, 0, 0),), 2, 2), 2, 1, 2)
    out = ldi_transform(code)
    assert out.tableau.rows == ((1, 0, 0, 0),)
    assert out.B == 1


def test_working_tableau_keeps_already_commuting_input(five_qubit):
    t = working_ldi_tableau(five_qubit)
    assert t == five_qubit.tableau.lift()
    assert is_ldi(t)


def test_working_tableau_transforms_otherwise(six_qubit):
    assert working_ldi_tableau(six_qubit).rows == SIX_QUBIT_LDI


def test_ldi_form_validates_its_invariants(six_qubit):
    import dataclasses

    form = ldi_transform(six_qubit)
    with pytest.raises(ValueError):
        dataclasses.replace(form, B=7)
