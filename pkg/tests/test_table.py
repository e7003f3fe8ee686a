"""The 8x8 class-pair existence grid: frozen verdict layout, full
re-verification, and tamper detection."""

import pytest

import postlie.table as table_module
from postlie.catalog import get_algebra
from postlie.table import (
    CLASSES,
    TableVerificationError,
    Witness,
    classify,
    existence_table,
)

# annotation grid frozen after machine re-verification of every cell;
# rows and columns both follow CLASSES order
GOLDEN_GRID = (
    ("✓", "✓", "✓", "− R6", "− R6", "?", "✓", "− R6"),
    ("✓", "✓", "✓", "− R7", "− R7", "?", "✓", "− R7"),
    ("✓", "✓", "✓", "✓", "✓", "✓", "✓", "✓"),
    ("− R1", "− R2", "− R3", "✓", "?", "?", "− R5", "− R8"),
    ("− R1", "− R2", "− R3", "?", "✓", "− R4", "− R3", "− R8"),
    ("✓", "✓", "✓", "?", "?", "✓", "✓", "✓"),
    ("✓", "✓", "✓", "✓", "✓", "✓", "✓", "✓"),
    ("− R1", "?", "− R3", "?", "?", "✓", "− R5", "✓"),
)


@pytest.fixture(scope="module")
def verified_table():
    return existence_table(verify=True)


def test_class_axes():
    assert CLASSES == (
        "abelian",
        "nilpotent",
        "solvable",
        "simple",
        "semisimple",
        "reductive",
        "complete",
        "perfect",
    )


def test_classify_oracles():
    assert classify(get_algebra("abelian_3")) == ("abelian",)
    assert classify(get_algebra("n3")) == ("nilpotent",)
    assert classify(get_algebra("sl2")) == ("simple",)
    assert classify(get_algebra("sl2_plus_sl2")) == ("semisimple",)
    assert classify(get_algebra("gl2")) == ("reductive",)
    assert classify(get_algebra("L5_1")) == ("perfect",)
    # the solvable/complete overlap is real: these satisfy both predicates
    assert classify(get_algebra("r2")) == ("solvable", "complete")
    assert classify(get_algebra("b3")) == ("solvable", "complete")


def test_first_six_classes_are_pairwise_disjoint():
    first_six = CLASSES[:6]
    for entry_id in (
        "abelian_3",
        "n3",
        "r2",
        "sl2",
        "sl2_plus_sl2",
        "gl2",
        "L5_1",
        "f23",
        "sl2_plus_C2",
    ):
        hits = [
            c for c in classify(get_algebra(entry_id)) if c in first_six
        ]
        assert len(hits) <= 1, entry_id


def test_counts(verified_table):
    assert verified_table.counts == {"exists": 34, "not_exists": 20, "unknown": 10}
    assert len(verified_table.cells) == 64


def test_golden_grid(verified_table):
    grid = tuple(
        tuple(verified_table.cell(row, col).annotation for col in CLASSES)
        for row in CLASSES
    )
    assert grid == GOLDEN_GRID


def test_the_undecided_cells(verified_table):
    open_cells = {
        (c.row, c.col) for c in verified_table.cells if c.status == "unknown"
    }
    # four undecided by the source analysis ...
    assert {
        ("reductive", "semisimple"),
        ("perfect", "nilpotent"),
        ("perfect", "simple"),
        ("perfect", "semisimple"),
    } <= open_cells
    # ... plus six with neither witness nor applicable rule
    assert open_cells == {
        ("abelian", "reductive"),
        ("nilpotent", "reductive"),
        ("simple", "semisimple"),
        ("simple", "reductive"),
        ("semisimple", "simple"),
        ("reductive", "simple"),
        ("reductive", "semisimple"),
        ("perfect", "nilpotent"),
        ("perfect", "simple"),
        ("perfect", "semisimple"),
    }


def test_spot_check_specific_cells(verified_table):
    sol_nil = verified_table.cell("solvable", "nilpotent")
    assert sol_nil.status == "exists"
    assert (sol_nil.g_id, sol_nil.n_id) == ("r2_plus_C", "n3")

    sem_com = verified_table.cell("semisimple", "complete")
    assert sem_com.status == "not_exists"
    assert sem_com.rule_id == "R3"

    per_com = verified_table.cell("perfect", "complete")
    assert per_com.rule_id == "R5"
    assert (per_com.g_id, per_com.n_id) == ("L8_21", "b3_plus_sl2")

    assert verified_table.cell("perfect", "perfect").status == "exists"


def test_every_cell_is_fully_annotated(verified_table):
    for c in verified_table.cells:
        if c.status == "exists":
            assert c.g_id and c.n_id and c.witness_kind
            assert c.rule_id is None
        elif c.status == "not_exists":
            assert c.g_id and c.n_id and c.rule_id
            assert c.witness_kind is None
        else:
            assert c.rule_id is None and c.witness_kind is None


def test_as_dict_and_render(verified_table):
    doc = verified_table.as_dict()
    assert doc["counts"] == {"exists": 34, "not_exists": 20, "unknown": 10}
    assert len(doc["cells"]) == 64
    text = verified_table.render()
    assert "g \\ n" in text
    assert "witnessed cells" in text
    assert text.count("✓") >= 34
    assert verified_table.cell("abelian", "abelian").annotation == "✓"


def test_unknown_cell_lookup_raises(verified_table):
    with pytest.raises(KeyError):
        verified_table.cell("abelian", "banana")


def test_tampered_rule_is_caught(monkeypatch):
    # claim an abelian-target rule on a pair whose target is not abelian
    _, g_id, n_id = table_module._NOT_EXISTS[("semisimple", "complete")]
    monkeypatch.setitem(
        table_module._NOT_EXISTS, ("semisimple", "complete"), ("R1", g_id, n_id)
    )
    with pytest.raises(TableVerificationError):
        existence_table(verify=True)


def test_tampered_witness_is_caught(monkeypatch):
    # a zero product on n3 induces n3 itself: wrong class for this row and
    # the wrong fingerprint for the declared source algebra
    monkeypatch.setitem(
        table_module._EXISTS,
        ("solvable", "nilpotent"),
        Witness(kind="zero", g_id="r2_plus_C", n_id="n3"),
    )
    with pytest.raises(TableVerificationError):
        existence_table(verify=True)


def test_unverified_build_matches_verified_layout(verified_table):
    quick = existence_table(verify=False)
    assert quick.as_dict() == verified_table.as_dict()
