"""The 8x8 existence grid over structural classes of Lie algebra pairs.

Rows classify the first bracket ``g``, columns the second bracket ``n``,
both over the eight pairwise-refined classes

    abelian, nilpotent (non-abelian), solvable (non-nilpotent), simple,
    semisimple (non-simple), reductive (non-semisimple),
    complete (non-perfect), perfect (non-semisimple).

A cell answers: *is there some pair* ``(g, n)`` *with these two class
memberships carrying a product structure?*  Three outcomes:

* ``exists`` — a registered witness pair, re-verified on every call: the
  witness product satisfies all three axioms exactly, the induced first
  bracket lies in the row class and matches the registered catalog algebra
  by invariant fingerprint, the second algebra lies in the column class,
  and no non-existence rule fires on the witness pair;
* ``not_exists`` — a registered representative pair on which one of the
  structural rules fires, re-checked on every call, with the expected rule
  identifier pinned;
* ``unknown`` — no witness is registered and no encoded rule applies; the
  cell is honestly left open (this covers both genuinely open questions
  and class pairs whose known obstructions lie outside the encoded rules).

Any discrepancy during re-verification raises
:class:`TableVerificationError` instead of producing a wrong table.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import catalog, linalg
from .liealg import LieAlgebra, fingerprint
from .subspace import Subspace
from .structures import (
    PAProduct,
    RBOperator,
    descendent_bracket,
    induced_bracket,
    pa_from_rb,
    product_from_left_action,
    rb_from_coordinate_split,
    rb_from_decomposition,
    verify_pa,
    verify_rb,
)
from .rules import applicable_rule, rule_by_id
from .sl2 import module_action


class TableVerificationError(RuntimeError):
    """A registered cell failed its re-verification."""


# ----------------------------------------------------------------------
# the eight classes
# ----------------------------------------------------------------------

CLASSES: tuple[str, ...] = (
    "abelian",
    "nilpotent",
    "solvable",
    "simple",
    "semisimple",
    "reductive",
    "complete",
    "perfect",
)

# The grid's eight classes.  The first six are pairwise disjoint refinements
# (nilpotent excludes abelian, and so on); "reductive" additionally excludes
# abelian algebras (which are trivially reductive) so that it means "nonzero
# semisimple part and nonzero center".  "complete" genuinely overlaps
# "solvable" (e.g. the nonabelian 2-dimensional algebra is both), which is
# harmless: a cell verdict quantifies over its row and column classes.
CLASS_PREDICATES: dict[str, Callable[[LieAlgebra], bool]] = {
    "abelian": lambda a: a.is_abelian(),
    "nilpotent": lambda a: a.is_nilpotent() and not a.is_abelian(),
    "solvable": lambda a: a.is_solvable() and not a.is_nilpotent(),
    "simple": lambda a: a.is_simple(),
    "semisimple": lambda a: a.is_semisimple() and not a.is_simple(),
    "reductive": lambda a: a.is_reductive()
    and not a.is_semisimple()
    and not a.is_abelian(),
    "complete": lambda a: a.is_complete() and not a.is_perfect(),
    "perfect": lambda a: a.is_perfect() and not a.is_semisimple(),
}


def classify(alg: LieAlgebra) -> tuple[str, ...]:
    """All classes of the grid the algebra belongs to (may overlap)."""
    return tuple(c for c in CLASSES if CLASS_PREDICATES[c](alg))


# ----------------------------------------------------------------------
# witness material
# ----------------------------------------------------------------------


def _dense(size: int, entries: dict) -> tuple:
    rows = [[linalg.ZERO] * size for _ in range(size)]
    for (r, c), v in entries.items():
        rows[r][c] = linalg.frac(v)
    return tuple(tuple(row) for row in rows)


def _pad(matrix, size: int) -> tuple:
    rows = [[linalg.ZERO] * size for _ in range(size)]
    for r, row in enumerate(matrix):
        for c, v in enumerate(row):
            rows[r][c] = v
    return tuple(tuple(r) for r in rows)


def _vec(size: int, entries) -> tuple:
    return tuple(linalg.frac(x) for x in entries) + tuple(
        linalg.ZERO for _ in range(size - len(entries))
    )


@dataclass(frozen=True)
class Witness:
    """Recipe for one existence witness, materialized on demand.

    ``kind`` selects the recipe:

    * ``zero`` — the zero product on ``n`` (so the induced bracket is ``n``
      itself; used on diagonal-style cells where one algebra lies in both
      classes);
    * ``product`` — an explicit sparse product table on ``n``;
    * ``operator`` — an explicit weight-one operator matrix on ``n``;
    * ``coordinate_split`` — minus the projection onto the complement of
      the listed coordinates (both sides must be subalgebras);
    * ``general_split`` — the same with an explicit second subalgebra that
      is not coordinate-aligned;
    * ``left_action`` — a graph basis ``(v, D)`` of vectors and derivations
      defining the product ``x . y = L(x) y``.
    """

    kind: str
    g_id: str
    n_id: str
    data: tuple = ()

    def materialize(self):
        """Return ``(induced_g, n, product, operator_or_None)``."""
        n_alg = catalog.get_algebra(self.n_id)
        d = n_alg.dim
        op: Optional[RBOperator] = None
        if self.kind == "zero":
            product = PAProduct.zero(d)
        elif self.kind == "product":
            table = {key: dict(val) for key, val in self.data}
            product = PAProduct.from_table(d, table)
        elif self.kind == "operator":
            op = RBOperator.from_rows(self.data, weight=1)
            product = pa_from_rb(n_alg, op)
        elif self.kind == "coordinate_split":
            op = rb_from_coordinate_split(n_alg, self.data)
            product = pa_from_rb(n_alg, op)
        elif self.kind == "general_split":
            coords, second_vectors = self.data
            first = Subspace.spanned_by_coordinates(d, coords)
            second = Subspace.from_vectors(d, second_vectors)
            op = rb_from_decomposition(n_alg, first, second)
            product = pa_from_rb(n_alg, op)
        elif self.kind == "left_action":
            pairs = tuple(
                (_vec(d, vec), mat) for vec, mat in _LEFT_ACTION_BUILDERS[self.n_id]()
            )
            product = product_from_left_action(n_alg, pairs)
        else:  # pragma: no cover
            raise ValueError(f"unknown witness kind {self.kind!r}")
        induced = induced_bracket(n_alg, product, name=self.g_id)
        return induced, n_alg, product, op


def _gl2_multiplication_table() -> dict:
    """Left multiplication of the 2x2 matrix units on themselves."""
    return {
        (0, 0): {0: 1},
        (0, 1): {1: 1},
        (1, 2): {0: 1},
        (1, 3): {1: 1},
        (2, 0): {2: 1},
        (2, 1): {3: 1},
        (3, 2): {2: 1},
        (3, 3): {3: 1},
    }


def _scaling5_pairs() -> tuple:
    e_m, f_m, h_m = module_action((2, 2))
    pe, pf, ph = (_pad(m, 5) for m in (e_m, f_m, h_m))
    scaling = _dense(5, {(0, 0): 1, (1, 1): 1})
    zero = _dense(5, {})
    return (
        ((0, 0, -1, 0, 0), pe),
        ((0, -1, 0, 0, 0), pf),
        ((-1, 0, 0, 1, 0), ph),
        ((-1, 0, 0, -1, 1), zero),
        ((-1, 0, 0, 0, 0), scaling),
    )


def _heis_plus_c2_pairs() -> tuple:
    rho_e = _dense(5, {(0, 1): 1, (3, 4): 1})
    rho_f = _dense(5, {(1, 0): 1, (4, 3): 1})
    rho_h = _dense(5, {(0, 0): 1, (1, 1): -1, (3, 3): 1, (4, 4): -1})
    t2 = _dense(5, {(3, 0): 1, (4, 1): 1, (3, 3): -1, (4, 4): -1})
    zero = _dense(5, {})
    return (
        ((1, 0, Fraction(1, 2), 1, 0), rho_e),
        ((0, 1, Fraction(-1, 2), 0, 0), rho_f),
        ((1, -1, 1, 0, -1), rho_h),
        ((0, 0, 1, 0, 0), zero),
        ((0, 0, 0, 1, 0), t2),
    )


def _heis_plus_c_pairs() -> tuple:
    s1 = _dense(4, {(0, 0): 1, (2, 2): 1})
    s2 = _dense(4, {(2, 0): 1, (3, 3): 1})
    zero = _dense(4, {})
    return (
        ((0, 0, 1, 0), s1),
        ((0, 1, 0, 0), s2),
        ((1, 0, 0, 0), zero),
        ((0, 0, 0, 1), zero),
    )


# Sparse left-action pairs are stored lazily (via callables) because they
# depend on module-building helpers.
_LEFT_ACTION_BUILDERS = {
    "scaling5": _scaling5_pairs,
    "n3_plus_C2": _heis_plus_c2_pairs,
    "n3_plus_C": _heis_plus_c_pairs,
}


def _witness(kind: str, g_id: str, n_id: str, data=()) -> Witness:
    return Witness(kind=kind, g_id=g_id, n_id=n_id, data=data)


_EXISTS: dict[tuple[str, str], Witness] = {
    # row: g abelian
    ("abelian", "abelian"): _witness("zero", "abelian_1", "abelian_1"),
    ("abelian", "nilpotent"): _witness(
        "product", "abelian_3", "n3", (((1, 0), ((2, 1),)),)
    ),
    ("abelian", "solvable"): _witness(
        "product", "abelian_2", "r2", (((1, 0), ((0, 1),)),)
    ),
    ("abelian", "complete"): _witness(
        "product", "abelian_2", "r2", (((1, 0), ((0, 1),)),)
    ),
    # row: g nilpotent non-abelian
    ("nilpotent", "abelian"): _witness(
        "product", "n3", "abelian_3", (((0, 1), ((2, 1),)),)
    ),
    ("nilpotent", "nilpotent"): _witness("zero", "n3", "n3"),
    ("nilpotent", "solvable"): _witness(
        "product", "n3", "r2_plus_C", (((0, 1), ((2, 1),)), ((1, 0), ((0, 1),)))
    ),
    ("nilpotent", "complete"): _witness(
        "coordinate_split", "n3_plus_C2", "b3", (2, 3, 4)
    ),
    # row: g solvable non-nilpotent
    ("solvable", "abelian"): _witness(
        "product", "r2", "abelian_2", (((1, 0), ((0, -1),)), ((1, 1), ((1, -1),)))
    ),
    ("solvable", "nilpotent"): _witness(
        "product", "r2_plus_C", "n3", (((1, 0), ((0, -1), (2, 1))), ((1, 1), ((1, 1),)))
    ),
    ("solvable", "solvable"): _witness("zero", "r2", "r2"),
    ("solvable", "simple"): _witness("coordinate_split", "r2_plus_C", "sl2", (0, 2)),
    ("solvable", "semisimple"): _witness(
        "coordinate_split", "r2_plus_r2_plus_C2", "sl2_plus_sl2", (0, 2, 3, 5)
    ),
    ("solvable", "reductive"): _witness(
        "coordinate_split", "r2_plus_C2", "sl2_plus_C", (0, 2, 3)
    ),
    ("solvable", "complete"): _witness("zero", "r2_plus_r2", "r2_plus_r2"),
    ("solvable", "perfect"): _witness(
        "operator",
        "n3_plus_r2",
        "L5_1",
        (
            (0, 0, 0, 0, 0),
            (0, -1, 0, 0, 0),
            (0, 0, -1, 0, 0),
            (0, 0, 0, 0, 0),
            (0, 0, 0, 0, 0),
        ),
    ),
    # row: g simple
    ("simple", "simple"): _witness("zero", "sl2", "sl2"),
    # row: g semisimple non-simple
    ("semisimple", "semisimple"): _witness(
        "zero", "sl2_plus_sl2", "sl2_plus_sl2"
    ),
    # row: g reductive non-semisimple
    ("reductive", "abelian"): _witness(
        "product", "gl2", "abelian_4", tuple(
            (key, tuple(sorted(val.items())))
            for key, val in sorted(_gl2_multiplication_table().items())
        )
    ),
    ("reductive", "nilpotent"): _witness(
        "left_action", "sl2_plus_C2", "n3_plus_C2"
    ),
    ("reductive", "solvable"): _witness("left_action", "sl2_plus_C2", "scaling5"),
    ("reductive", "reductive"): _witness("zero", "gl2", "gl2"),
    ("reductive", "complete"): _witness(
        "coordinate_split", "sl2_plus_C2", "sl2_plus_r2", (0, 1, 2, 3)
    ),
    ("reductive", "perfect"): _witness(
        "operator",
        "sl2_plus_C2",
        "L5_1",
        (
            (0, 0, 0, 0, 0),
            (0, 0, 0, 0, 0),
            (0, 0, 0, 0, 0),
            (0, 0, 0, -1, 0),
            (0, 0, 0, 0, -1),
        ),
    ),
    # row: g complete non-perfect
    ("complete", "abelian"): _witness(
        "product", "r2", "abelian_2", (((1, 0), ((0, -1),)), ((1, 1), ((1, -1),)))
    ),
    ("complete", "nilpotent"): _witness("left_action", "r2_plus_r2", "n3_plus_C"),
    ("complete", "solvable"): _witness("zero", "r2_plus_r2", "r2_plus_r2"),
    ("complete", "simple"): _witness(
        "general_split",
        "b3_plus_sl2",
        "sl3",
        (
            (0, 1, 2, 3, 4),
            (
                (0, 0, 1, 0, 0, -1, 0, 0),
                (0, 0, 0, 1, 0, 0, -1, 0),
                (0, 0, 0, 0, 1, 0, 0, -1),
            ),
        ),
    ),
    ("complete", "semisimple"): _witness(
        "general_split",
        "r2_plus_r2_plus_r2",
        "sl2_plus_sl2",
        (
            (0, 2, 3, 5),
            ((0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 2, 0)),
        ),
    ),
    ("complete", "reductive"): _witness(
        "general_split",
        "r2_plus_r2",
        "sl2_plus_C",
        (
            (0, 2),
            ((0, 1, 0, 0), (0, 0, 1, 1)),
        ),
    ),
    ("complete", "complete"): _witness("zero", "r2_plus_r2", "r2_plus_r2"),
    ("complete", "perfect"): _witness(
        "product",
        "sl2_plus_r2",
        "L5_1",
        (
            ((3, 1), ((4, 1),)),
            ((3, 2), ((3, 1),)),
            ((4, 0), ((3, 1),)),
            ((4, 2), ((4, -1),)),
            ((4, 3), ((3, -1),)),
            ((4, 4), ((4, -1),)),
        ),
    ),
    # row: g perfect non-semisimple
    ("perfect", "reductive"): _witness(
        "product",
        "L5_1",
        "sl2_plus_C2",
        (
            ((0, 4), ((3, 1),)),
            ((1, 3), ((4, 1),)),
            ((2, 3), ((3, 1),)),
            ((2, 4), ((4, -1),)),
        ),
    ),
    ("perfect", "perfect"): _witness("zero", "L5_1", "L5_1"),
}

_NOT_EXISTS: dict[tuple[str, str], tuple[str, str, str]] = {
    # (row, col): (expected rule, g representative, n representative)
    ("abelian", "simple"): ("R6", "abelian_3", "sl2"),
    ("abelian", "semisimple"): ("R6", "abelian_6", "sl2_plus_sl2"),
    ("abelian", "perfect"): ("R6", "abelian_5", "L5_1"),
    ("nilpotent", "simple"): ("R7", "n3", "sl2"),
    ("nilpotent", "semisimple"): ("R7", "n3_plus_n3", "sl2_plus_sl2"),
    ("nilpotent", "perfect"): ("R7", "n3_plus_C2", "L5_1"),
    ("simple", "abelian"): ("R1", "sl2", "abelian_3"),
    ("simple", "nilpotent"): ("R2", "sl2", "n3"),
    ("simple", "solvable"): ("R3", "sl2", "r2_plus_C"),
    ("simple", "complete"): ("R5", "sl3", "b3_plus_sl2"),
    ("simple", "perfect"): ("R8", "sl3", "L8_21"),
    ("semisimple", "abelian"): ("R1", "sl2_plus_sl2", "abelian_6"),
    ("semisimple", "nilpotent"): ("R2", "sl2_plus_sl2", "n3_plus_n3"),
    ("semisimple", "solvable"): ("R3", "sl2_plus_sl2", "r2_plus_r2_plus_r2"),
    ("semisimple", "reductive"): ("R4", "sl2_plus_sl2_plus_sl2", "sl3_plus_C"),
    ("semisimple", "complete"): ("R3", "sl2_plus_sl2", "r2_plus_r2_plus_r2"),
    ("semisimple", "perfect"): ("R8", "sl2_plus_sl2", "L6_2"),
    ("perfect", "abelian"): ("R1", "L5_1", "abelian_5"),
    ("perfect", "solvable"): ("R3", "L5_1", "n3_plus_r2"),
    ("perfect", "complete"): ("R5", "L8_21", "b3_plus_sl2"),
}

_UNKNOWN: tuple[tuple[str, str], ...] = (
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
)


# ----------------------------------------------------------------------
# table construction with re-verification
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class Cell:
    row: str
    col: str
    status: str  # "exists" | "not_exists" | "unknown"
    g_id: Optional[str] = None
    n_id: Optional[str] = None
    rule_id: Optional[str] = None
    witness_kind: Optional[str] = None

    @property
    def annotation(self) -> str:
        if self.status == "exists":
            return "✓"
        if self.status == "not_exists":
            return f"− {self.rule_id}"
        return "?"

    def as_dict(self) -> dict:
        doc: dict = {"g_class": self.row, "n_class": self.col, "status": self.status}
        if self.g_id is not None:
            doc["g"] = self.g_id
        if self.n_id is not None:
            doc["n"] = self.n_id
        if self.rule_id is not None:
            doc["rule"] = self.rule_id
        if self.witness_kind is not None:
            doc["witness_kind"] = self.witness_kind
        return doc


@dataclass(frozen=True)
class ExistenceTable:
    cells: tuple

    def cell(self, row: str, col: str) -> Cell:
        for c in self.cells:
            if c.row == row and c.col == col:
                return c
        raise KeyError((row, col))

    @property
    def counts(self) -> dict:
        out = {"exists": 0, "not_exists": 0, "unknown": 0}
        for c in self.cells:
            out[c.status] += 1
        return out

    def as_dict(self) -> dict:
        return {
            "classes": list(CLASSES),
            "cells": [c.as_dict() for c in self.cells],
            "counts": self.counts,
        }

    def render(self) -> str:
        width = 7
        short = {
            "abelian": "abe",
            "nilpotent": "nil",
            "solvable": "sol",
            "simple": "sim",
            "semisimple": "sem",
            "reductive": "red",
            "complete": "com",
            "perfect": "per",
        }
        lines = []
        header = "g \\ n".ljust(width) + "".join(
            short[c].center(width) for c in CLASSES
        )
        lines.append(header)
        lines.append("-" * len(header))
        for row in CLASSES:
            parts = [short[row].ljust(width)]
            for col in CLASSES:
                parts.append(self.cell(row, col).annotation.center(width))
            lines.append("".join(parts))
        lines.append("")
        lines.append("witnessed cells (g over n, re-verified):")
        for c in self.cells:
            if c.status == "exists":
                lines.append(
                    f"  ({short[c.row]}, {short[c.col]}): {c.g_id} over {c.n_id}"
                    f" [{c.witness_kind}]"
                )
        lines.append("excluded cells (rule applied to a representative pair):")
        for c in self.cells:
            if c.status == "not_exists":
                lines.append(
                    f"  ({short[c.row]}, {short[c.col]}): {c.rule_id}"
                    f" on ({c.g_id}, {c.n_id})"
                )
        lines.append("open cells: " + ", ".join(
            f"({short[c.row]}, {short[c.col]})"
            for c in self.cells
            if c.status == "unknown"
        ))
        return "\n".join(lines)


def _verify_exists_cell(row: str, col: str, witness: Witness) -> Cell:
    induced, n_alg, product, op = witness.materialize()
    verification = verify_pa(induced, n_alg, product)
    if not verification.ok:
        raise TableVerificationError(
            f"cell ({row}, {col}): witness product fails the axioms"
        )
    if op is not None:
        rb_check = verify_rb(n_alg, op)
        if not rb_check.ok:
            raise TableVerificationError(
                f"cell ({row}, {col}): witness operator fails the weight-one identity"
            )
        expected = descendent_bracket(n_alg, op)
        if expected.brackets != induced.brackets:
            raise TableVerificationError(
                f"cell ({row}, {col}): operator descendent disagrees with product"
            )
    if not CLASS_PREDICATES[row](induced):
        raise TableVerificationError(
            f"cell ({row}, {col}): induced algebra is not in class {row!r}"
        )
    if not CLASS_PREDICATES[col](n_alg):
        raise TableVerificationError(
            f"cell ({row}, {col}): second algebra is not in class {col!r}"
        )
    reference = catalog.get_algebra(witness.g_id)
    if fingerprint(induced) != fingerprint(reference):
        raise TableVerificationError(
            f"cell ({row}, {col}): induced algebra does not match the "
            f"registered catalog fingerprint {witness.g_id!r}"
        )
    fired = applicable_rule(induced, n_alg)
    if fired is not None:
        raise TableVerificationError(
            f"cell ({row}, {col}): rule {fired[0].rule_id} fires on a witness pair"
        )
    return Cell(
        row=row,
        col=col,
        status="exists",
        g_id=witness.g_id,
        n_id=witness.n_id,
        witness_kind=witness.kind,
    )


def _verify_not_exists_cell(
    row: str, col: str, expected_rule: str, g_id: str, n_id: str
) -> Cell:
    rule_by_id(expected_rule)  # unknown ids fail loudly
    g = catalog.get_algebra(g_id)
    n_alg = catalog.get_algebra(n_id)
    if not CLASS_PREDICATES[row](g):
        raise TableVerificationError(
            f"cell ({row}, {col}): representative {g_id!r} not in class {row!r}"
        )
    if not CLASS_PREDICATES[col](n_alg):
        raise TableVerificationError(
            f"cell ({row}, {col}): representative {n_id!r} not in class {col!r}"
        )
    fired = applicable_rule(g, n_alg)
    if fired is None:
        raise TableVerificationError(
            f"cell ({row}, {col}): no rule fires on ({g_id}, {n_id})"
        )
    if fired[0].rule_id != expected_rule:
        raise TableVerificationError(
            f"cell ({row}, {col}): expected {expected_rule}, got {fired[0].rule_id}"
        )
    return Cell(
        row=row,
        col=col,
        status="not_exists",
        g_id=g_id,
        n_id=n_id,
        rule_id=expected_rule,
    )


def existence_table(verify: bool = True) -> ExistenceTable:
    """Build the full 8x8 grid, re-verifying every registered cell.

    With ``verify=False`` the registered verdicts are rendered without
    recomputation (useful only for quick display; tests and the CLI always
    re-verify).
    """
    cells = []
    for row in CLASSES:
        for col in CLASSES:
            key = (row, col)
            if key in _EXISTS:
                witness = _EXISTS[key]
                if verify:
                    cells.append(_verify_exists_cell(row, col, witness))
                else:
                    cells.append(
                        Cell(
                            row=row,
                            col=col,
                            status="exists",
                            g_id=witness.g_id,
                            n_id=witness.n_id,
                            witness_kind=witness.kind,
                        )
                    )
            elif key in _NOT_EXISTS:
                rule_id, g_id, n_id = _NOT_EXISTS[key]
                if verify:
                    cells.append(
                        _verify_not_exists_cell(row, col, rule_id, g_id, n_id)
                    )
                else:
                    cells.append(
                        Cell(
                            row=row,
                            col=col,
                            status="not_exists",
                            g_id=g_id,
                            n_id=n_id,
                            rule_id=rule_id,
                        )
                    )
            else:
                if key not in _UNKNOWN:  # pragma: no cover - registry audit
                    raise TableVerificationError(f"cell {key} is unregistered")
                cells.append(Cell(row=row, col=col, status="unknown"))
    return ExistenceTable(cells=tuple(cells))
