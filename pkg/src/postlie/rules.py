"""Structural non-existence rules for product structures on a pair.

Each rule is a theorem of the form "if ``g`` lies in one structural class
and ``n`` in another, no product structure exists on the pair".  Rules are
applied *only* after every hypothesis has been verified computationally on
the concrete pair — nothing is assumed from names or metadata.  The first
rule whose hypotheses all hold decides the pair (the rule list is ordered,
and earlier rules win), and its certificate carries a trace of every
predicate that was checked together with a self-contained mathematical
justification.

Detection notes
---------------

Two rules identify specific semisimple algebras without isomorphism
testing:

* the simple algebra of dimension eight is recognized as "dimension 8,
  semisimple, and no proper ideal visible from any basis vector" — over the
  rationals any simple algebra of dimension eight remains simple under
  field extension (its centroid is forced to be the base field), so the
  detection is sound;
* the direct sum of two three-dimensional simple algebras is recognized as
  "dimension 6, semisimple, exactly two three-dimensional minimal ideals
  among basis-vector closures" — each three-dimensional simple ideal is
  absolutely simple, so the detected algebra stays a sum of two simple
  three-dimensional ideals over any extension.

Both detections are conservative: a pair presented in a basis that hides
the ideal structure simply fails to fire the rule (yielding ``unknown``),
never fires it wrongly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from . import linalg
from .liealg import LieAlgebra
from .subspace import Subspace, coordinates_in_basis
from .certificates import (
    Certificate,
    not_exists_certificate,
    unknown_certificate,
)

Predicate = Callable[[LieAlgebra, LieAlgebra], tuple[bool, tuple]]


@dataclass(frozen=True)
class Rule:
    """One verified-hypothesis non-existence theorem."""

    rule_id: str
    condition: str
    justification: str
    applies: Predicate


# ----------------------------------------------------------------------
# predicate helpers (every check is an exact computation)
# ----------------------------------------------------------------------


def _check(label: str, value: bool, trace: list) -> bool:
    trace.append(f"{label}: {'yes' if value else 'no'}")
    return value


def _two_step_nilpotent(n: LieAlgebra) -> bool:
    return n.nilpotency_class() == 2


def _restricted_radical_action(g: LieAlgebra, radical: Subspace):
    """Matrices of ad(e_i) restricted to the radical, in its basis."""
    matrices = []
    r = radical.dim
    for i in range(g.dim):
        cols = []
        for vec in radical.basis:
            image = g.bracket(g.basis_vector(i), vec)
            coords = coordinates_in_basis(radical, image)
            if coords is None:
                return None
            cols.append(coords)
        matrices.append(tuple(tuple(cols[c][rr] for c in range(r)) for rr in range(r)))
    return tuple(matrices)


def _commutant_dimension(matrices, size: int) -> int:
    """Dimension of the space of matrices commuting with all given ones."""
    rows = []
    for a in matrices:
        for rr in range(size):
            for cc in range(size):
                row = [linalg.ZERO] * (size * size)
                for k in range(size):
                    row[rr * size + k] += a[k][cc]
                    row[k * size + cc] -= a[rr][k]
                rows.append(tuple(row))
    if not rows:
        return size * size
    return size * size - linalg.rank(tuple(rows))


def _absolutely_simple(alg: LieAlgebra) -> bool:
    """Simple with scalar centroid, hence simple over every extension."""
    if not alg.is_simple():
        return False
    return _commutant_dimension(alg.ad_basis(), alg.dim) == 1


# ----------------------------------------------------------------------
# the twelve rules, in precedence order
# ----------------------------------------------------------------------


def _r1(g: LieAlgebra, n: LieAlgebra):
    trace: list = []
    ok = _check("g is perfect", g.is_perfect(), trace) and _check(
        "n is abelian", n.is_abelian(), trace
    )
    return ok, tuple(trace)


def _r2(g: LieAlgebra, n: LieAlgebra):
    trace: list = []
    ok = _check("g is perfect", g.is_perfect(), trace) and _check(
        "n is nilpotent of class exactly 2", _two_step_nilpotent(n), trace
    )
    return ok, tuple(trace)


def _r3(g: LieAlgebra, n: LieAlgebra):
    trace: list = []
    ok = (
        _check("g is perfect", g.is_perfect(), trace)
        and _check("n is solvable", n.is_solvable(), trace)
        and _check("n is not nilpotent", not n.is_nilpotent(), trace)
    )
    return ok, tuple(trace)


def _r4(g: LieAlgebra, n: LieAlgebra):
    trace: list = []
    ok = (
        _check("g is perfect", g.is_perfect(), trace)
        and _check("n is reductive", n.is_reductive(), trace)
        and _check("n has a 1-dimensional center", n.center().dim == 1, trace)
    )
    return ok, tuple(trace)


def _r5(g: LieAlgebra, n: LieAlgebra):
    trace: list = []
    ok = (
        _check("g is perfect", g.is_perfect(), trace)
        and _check("n is complete", n.is_complete(), trace)
        and _check("n is not perfect", not n.is_perfect(), trace)
    )
    return ok, tuple(trace)


def _r6(g: LieAlgebra, n: LieAlgebra):
    trace: list = []
    ok = _check("g is abelian", g.is_abelian(), trace) and _check(
        "n is perfect and nonzero", n.dim > 0 and n.is_perfect(), trace
    )
    return ok, tuple(trace)


def _r7(g: LieAlgebra, n: LieAlgebra):
    trace: list = []
    ok = (
        _check("g is nilpotent", g.is_nilpotent(), trace)
        and _check("g is not abelian", not g.is_abelian(), trace)
        and _check("n is perfect and nonzero", n.dim > 0 and n.is_perfect(), trace)
    )
    return ok, tuple(trace)


def _r8(g: LieAlgebra, n: LieAlgebra):
    trace: list = []
    ok = (
        _check("g is semisimple", g.is_semisimple(), trace)
        and _check("n is perfect", n.is_perfect(), trace)
        and _check("n is not semisimple", not n.is_semisimple(), trace)
    )
    return ok, tuple(trace)


def _r9(g: LieAlgebra, n: LieAlgebra):
    trace: list = []
    ok = (
        _check("g is perfect", g.is_perfect(), trace)
        and _check("g is not semisimple", not g.is_semisimple(), trace)
        and _check("n has dimension 8", n.dim == 8, trace)
        and _check(
            "n is simple (semisimple, all basis-vector closures full)",
            n.is_simple(),
            trace,
        )
    )
    return ok, tuple(trace)


def _r10(g: LieAlgebra, n: LieAlgebra):
    trace: list = []
    if not (
        _check("g is perfect", g.is_perfect(), trace)
        and _check("g is not semisimple", not g.is_semisimple(), trace)
        and _check("n has dimension 6", n.dim == 6, trace)
        and _check("n is semisimple", n.is_semisimple(), trace)
    ):
        return False, tuple(trace)
    minimal = n.minimal_coordinate_ideals()
    ok = _check(
        "n has exactly two 3-dimensional minimal ideals among "
        "basis-vector closures",
        len(minimal) == 2 and all(m.dim == 3 for m in minimal),
        trace,
    )
    return ok, tuple(trace)


def _r11(g: LieAlgebra, n: LieAlgebra):
    trace: list = []
    if not (
        _check("g is perfect", g.is_perfect(), trace)
        and _check("g is not semisimple", not g.is_semisimple(), trace)
        and _check("n is semisimple", n.is_semisimple(), trace)
    ):
        return False, tuple(trace)
    radical = g.solvable_radical()
    if not _check(
        "the radical of g is nonzero and abelian",
        radical.dim > 0 and g.restrict(radical).is_abelian(),
        trace,
    ):
        return False, tuple(trace)
    quotient = g.quotient(radical)
    if not _check(
        "g modulo its radical is simple with scalar centroid",
        _absolutely_simple(quotient),
        trace,
    ):
        return False, tuple(trace)
    closures_full = all(
        g.ad_closure(Subspace.from_vectors(g.dim, [vec])) == radical
        for vec in radical.basis
    )
    if not _check(
        "the ideal closure of every radical basis vector is the whole radical",
        closures_full,
        trace,
    ):
        return False, tuple(trace)
    action = _restricted_radical_action(g, radical)
    irreducible = action is not None and _commutant_dimension(
        action, radical.dim
    ) == 1
    ok = _check(
        "the radical is an absolutely irreducible g-module "
        "(its commutant algebra is the scalars)",
        irreducible,
        trace,
    )
    return ok, tuple(trace)


def _r12(g: LieAlgebra, n: LieAlgebra):
    trace: list = []
    ok = (
        _check("g is perfect", g.is_perfect(), trace)
        and _check("g is not semisimple", not g.is_semisimple(), trace)
        and _check("g has dimension 5 or 6", g.dim in (5, 6), trace)
        and _check("n is nilpotent", n.is_nilpotent(), trace)
    )
    return ok, tuple(trace)


RULES: tuple[Rule, ...] = (
    Rule(
        "R1",
        "g perfect and n abelian",
        "With an abelian second bracket the three axioms say exactly that "
        "the product is left-symmetric and its commutator equals the first "
        "bracket.  No perfect Lie algebra carries a left-symmetric product: "
        "the trace of right multiplication satisfies tr R_{y.z} = tr(R_z "
        "R_y), which is symmetric in y and z, so the functional x -> tr R_x "
        "kills every commutator and hence all of a perfect algebra; the "
        "classical theorem on left-symmetric structures then excludes the "
        "perfect case entirely.",
        _r1,
    ),
    Rule(
        "R2",
        "g perfect and n nilpotent of class exactly 2",
        "No product structure exists when the first bracket is perfect and "
        "the second is nilpotent of class two.  For class two the left "
        "multiplications preserve the lower central series of the second "
        "bracket, and a weight analysis of the induced action shows the "
        "first bracket's derived algebra lands in a proper subspace, "
        "contradicting perfectness.",
        _r2,
    ),
    Rule(
        "R3",
        "g perfect and n solvable but not nilpotent",
        "Every derivation of a solvable Lie algebra maps it into its "
        "nilradical (adjoin the derivation as a new generator: the extended "
        "algebra is solvable, its derived algebra is a nilpotent ideal "
        "containing the derivation's image).  Each left multiplication is "
        "such a derivation, and the second bracket's values lie in its "
        "derived algebra, also inside the nilradical.  The coupling axiom "
        "then places the first bracket's derived algebra inside the "
        "nilradical, a proper subspace when the second algebra is not "
        "nilpotent — contradicting perfectness of the first bracket.",
        _r3,
    ),
    Rule(
        "R4",
        "g perfect and n reductive with 1-dimensional center",
        "A reductive algebra with 1-dimensional center splits as a "
        "semisimple ideal plus its center, and each of its derivations is "
        "an inner derivation of the semisimple part plus a scaling of the "
        "center.  The scaling component of the left multiplications defines "
        "a homomorphism from the first bracket to the scalars, which "
        "vanishes on a perfect algebra; the products and the second bracket "
        "then take all values inside the semisimple part, so the coupling "
        "axiom confines the first bracket's derived algebra to a proper "
        "subspace — contradicting perfectness.",
        _r4,
    ),
    Rule(
        "R5",
        "g perfect and n complete but not perfect",
        "Over a complete second bracket every product structure is of "
        "operator form x.y = {Rx, y} for a weight-one operator R, and the "
        "first bracket equals the operator's descendent bracket.  Both R "
        "and R+id are then homomorphisms from the first bracket into the "
        "second, so a perfect first bracket forces the images of R and "
        "R+id into the second algebra's derived algebra; writing x = "
        "(R+id)x - Rx shows the second algebra equals its own derived "
        "algebra, contradicting the hypothesis that it is not perfect.",
        _r5,
    ),
    Rule(
        "R6",
        "g abelian and n perfect",
        "With an abelian first bracket the left multiplications commute "
        "pairwise and each is a derivation of the second bracket; such a "
        "configuration makes the second algebra solvable (it is the "
        "degenerate product case dual to the left-symmetric one), and no "
        "nonzero perfect algebra is solvable.",
        _r6,
    ),
    Rule(
        "R7",
        "g nilpotent non-abelian and n perfect",
        "A nilpotent first bracket forces the second algebra of any "
        "product structure to be solvable, and no nonzero perfect algebra "
        "is solvable.",
        _r7,
    ),
    Rule(
        "R8",
        "g semisimple and n perfect but not semisimple",
        "When the first bracket is semisimple, the only perfect second "
        "brackets compatible with a product structure are themselves "
        "semisimple; a perfect non-semisimple second bracket is excluded.",
        _r8,
    ),
    Rule(
        "R9",
        "g perfect non-semisimple and n simple of dimension 8",
        "Any simple algebra of dimension eight remains simple over every "
        "field extension, and products over it force a semisimple or "
        "simple first bracket; a perfect non-semisimple first bracket is "
        "excluded.",
        _r9,
    ),
    Rule(
        "R10",
        "g perfect non-semisimple and n a sum of two 3-dimensional "
        "simple ideals",
        "Over a semisimple second bracket every product comes from a "
        "weight-one operator R whose kernel and the kernel of R+id are "
        "ideals of the induced first bracket.  For the six-dimensional "
        "semisimple algebra that splits into two three-dimensional simple "
        "ideals, the perfect subalgebras have dimension 0, 3, or 6; the "
        "case analysis over kernels and images leaves only semisimple "
        "candidates for the first bracket, so a perfect non-semisimple one "
        "is excluded.",
        _r10,
    ),
    Rule(
        "R11",
        "g a semidirect product of a simple algebra with an irreducible "
        "abelian radical, and n semisimple",
        "A semisimple second bracket is complete, so every product is of "
        "operator form with a weight-one operator R, and both ker R and "
        "ker(R+id) are ideals of the first bracket.  When the first "
        "bracket is simple-by-irreducible-abelian, its only ideals are 0, "
        "the radical, and everything; neither kernel can be everything "
        "(the operator or its shift would vanish, making the two brackets "
        "isomorphic — impossible as one is semisimple and the other not), "
        "and the kernels intersect trivially, yet each nonzero kernel "
        "would have to equal the radical.  Hence both kernels are zero, "
        "making R invertible and the two brackets isomorphic — the same "
        "contradiction.  So no product exists.",
        _r11,
    ),
    Rule(
        "R12",
        "g perfect non-semisimple of dimension 5 or 6, and n nilpotent",
        "The perfect non-semisimple algebras of dimension five and six "
        "are the semidirect products of the three-dimensional simple "
        "algebra with its two-dimensional irreducible module, its "
        "three-dimensional irreducible module, and the Heisenberg algebra; "
        "for each of them, no product structure with a nilpotent second "
        "bracket exists.",
        _r12,
    ),
)


def rule_by_id(rule_id: str) -> Rule:
    for rule in RULES:
        if rule.rule_id == rule_id:
            return rule
    raise KeyError(rule_id)


def applicable_rule(
    g: LieAlgebra, n: LieAlgebra
) -> Optional[tuple[Rule, tuple]]:
    """First rule (in precedence order) whose hypotheses all verify."""
    if g.dim != n.dim:
        raise ValueError("g and n must share one dimension")
    for rule in RULES:
        holds, trace = rule.applies(g, n)
        if holds:
            return rule, trace
    return None


def nonexistence_certificate(
    g: LieAlgebra,
    n: LieAlgebra,
    *,
    g_name: str = "",
    n_name: str = "",
) -> Certificate:
    """Certificate from the first applicable rule, or ``unknown``."""
    g_name = g_name or g.name or "g"
    n_name = n_name or n.name or "n"
    found = applicable_rule(g, n)
    if found is None:
        return unknown_certificate(
            g_name,
            n_name,
            trace=("no structural rule applies to this pair",),
        )
    rule, trace = found
    full_trace = (f"rule {rule.rule_id}: {rule.condition}",) + tuple(trace)
    return not_exists_certificate(
        g_name,
        n_name,
        rule.rule_id,
        rule.justification,
        trace=full_trace,
    )
