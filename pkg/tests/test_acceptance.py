"""Release gate: every criterion battery at full scale, one line each."""

from __future__ import annotations

import braidskein.homfly
from braidskein import acceptance
from braidskein.homfly import HomflyPoly


def _report(result):
    print(result.format())
    assert result.passed, result.format()


def test_criterion_1_trefoil_exact():
    _report(acceptance.criterion_1())


def test_criterion_2_basis_fixed_points():
    _report(acceptance.criterion_2())


def test_criterion_3_move_invariance():
    _report(acceptance.criterion_3())


def test_criterion_4_template_invariance():
    _report(acceptance.criterion_4())


def test_criterion_5_parity():
    _report(acceptance.criterion_5())


def test_criterion_6_no_removable_crossings():
    _report(acceptance.criterion_6())


def test_criterion_7_odd_changes():
    _report(acceptance.criterion_7())


def test_criterion_8_bridge_equals_oracle():
    _report(acceptance.criterion_8())


def test_criterion_9_stabilization_witness():
    _report(acceptance.criterion_9())


def test_criterion_10_four_strand_divergence():
    _report(acceptance.criterion_10())


def test_negative_control_corrupted_bridge_weights(monkeypatch):
    # sabotage the split-component weight; the bridge criterion must notice
    monkeypatch.setattr(braidskein.homfly, "DELTA", HomflyPoly({(1, -1): -1}))
    result = acceptance.criterion_8(max_len=3, random_b4=5, b4_len=4)
    print(result.format())
    assert not result.passed


def test_quick_mode_runs_everything():
    results = acceptance.run_all(quick=True)
    assert [r.number for r in results] == list(range(1, 11))
    assert all(r.passed for r in results)
