"""Structural nonexistence rules: each rule fires on a pinned pair, rules
never fire on pairs that carry a verified witness, and rule verdicts are
consistent with the exhaustive-stage search on small pairs."""

import pytest

from postlie.catalog import get_algebra
from postlie.certificates import EXISTS, NOT_EXISTS, UNKNOWN
from postlie.rules import (
    RULES,
    applicable_rule,
    nonexistence_certificate,
    rule_by_id,
)
from postlie.samples import get_sample, sample_ids
from postlie.search import pa_search

# one pinned firing pair per rule: (rule id, g id, n id)
FIRING_PAIRS = [
    ("R1", "L5_1", "abelian_5"),
    ("R2", "L5_1", "n3_plus_C2"),
    ("R3", "L5_1", "n3_plus_r2"),
    ("R4", "L7_6", "sl2_plus_sl2_plus_C"),
    ("R5", "L5_1", "sl2_plus_r2"),
    ("R6", "abelian_5", "L5_1"),
    ("R7", "n3_plus_C2", "L5_1"),
    ("R8", "sl2_plus_sl2", "L6_2"),
    ("R9", "L8_21", "sl3"),
    ("R10", "L6_4", "sl2_plus_sl2"),
    ("R11", "L9_59", "sl2_plus_sl2_plus_sl2"),
    ("R12", "L6_4", "f23_plus_C"),
]


def test_registry_shape():
    assert [r.rule_id for r in RULES] == [f"R{k}" for k in range(1, 13)]
    for rule in RULES:
        assert rule.condition
        assert rule.justification
        assert rule_by_id(rule.rule_id) is rule
    with pytest.raises(KeyError):
        rule_by_id("R99")


@pytest.mark.parametrize("rule_id,g_id,n_id", FIRING_PAIRS)
def test_each_rule_fires_on_its_pinned_pair(rule_id, g_id, n_id):
    found = applicable_rule(get_algebra(g_id), get_algebra(n_id))
    assert found is not None
    rule, trace = found
    assert rule.rule_id == rule_id
    assert trace  # the hypothesis checklist is recorded


@pytest.mark.parametrize("rule_id,g_id,n_id", FIRING_PAIRS)
def test_certificates_from_rules(rule_id, g_id, n_id):
    cert = nonexistence_certificate(
        get_algebra(g_id), get_algebra(n_id), g_name=g_id, n_name=n_id
    )
    assert cert.verdict == NOT_EXISTS
    assert cert.rule_id == rule_id
    assert cert.justification
    assert cert.exit_code == 1


def test_precedence_picks_the_earliest_rule():
    # nilpotent two-step target with center violation: R2 wins over later
    # radical-based rules
    found = applicable_rule(get_algebra("L6_2"), get_algebra("n5_plus_C"))
    assert found is not None
    assert found[0].rule_id == "R2"


def test_no_rule_on_a_genuinely_open_pair():
    assert applicable_rule(get_algebra("gl2"), get_algebra("sl2_plus_C")) is None
    cert = nonexistence_certificate(
        get_algebra("gl2"), get_algebra("sl2_plus_C"), g_name="gl2", n_name="sl2_plus_C"
    )
    assert cert.verdict == UNKNOWN
    assert cert.exit_code == 2


def test_rules_never_fire_on_witnessed_pairs():
    for sample_id in sample_ids():
        sample = get_sample(sample_id)
        assert applicable_rule(sample.g_bracket(), sample.n()) is None, sample_id


def test_rules_agree_with_search_on_small_pairs():
    # on dimension <= 5 pairs where a rule fires, the staged search must
    # never produce a witness (soundness, spot-checked)
    small = [(g, n) for _, g, n in FIRING_PAIRS if get_algebra(g).dim <= 5]
    assert small
    for g_id, n_id in small:
        cert = pa_search(
            get_algebra(g_id), get_algebra(n_id), budget=200, g_name=g_id, n_name=n_id
        )
        assert cert.verdict != EXISTS, (g_id, n_id)


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError):
        applicable_rule(get_algebra("sl2"), get_algebra("abelian_5"))
