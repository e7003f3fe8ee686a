"""Products and operators coupling two Lie brackets on one space.

A *product structure* here is a bilinear product ``x . y`` on the underlying
space of a pair of Lie algebras ``(g, n)`` of equal dimension satisfying

1. ``x . y - y . x = [x, y]_g - {x, y}_n``
2. ``[x, y]_g . z = x . (y . z) - y . (x . z)``
3. ``x . {y, z}_n = {x . y, z}_n + {y, x . z}_n``

(``[.,.]_g`` is the bracket of ``g``, ``{.,.}_n`` the bracket of ``n``).
Axiom 3 says each left multiplication ``L(x): y -> x . y`` is a derivation
of ``n``; axiom 2 says ``L`` is a homomorphism from ``g`` into those
derivations; axiom 1 ties the two brackets together through the product.

A *weighted operator* on a single algebra ``n`` is a linear map ``R`` with

    {Rx, Ry} = R({Rx, y} + {x, Ry} + w {x, y})

for a scalar weight ``w``.  For weight one, ``x . y = {Rx, y}`` is always a
product structure on ``(g, n)`` where ``g`` carries the descendent bracket
``{Rx,y} + {x,Ry} + {x,y}``; this correspondence is exact when ``n`` has
trivial center and surjective inner-derivation map among complete algebras,
and the two notions diverge in general.

Everything is exact rational arithmetic; all verification functions return
complete residual listings rather than booleans alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Sequence

from . import linalg
from .linalg import Matrix, Vector, frac
from .liealg import LieAlgebra
from .subspace import Subspace

ProductTable = Mapping[tuple[int, int], Mapping[int, object]]


def _vec_str(v: Sequence[Fraction]) -> list[str]:
    return [str(x) for x in v]


# ----------------------------------------------------------------------
# product structures
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class PAProduct:
    """Bilinear product stored as a dense tensor ``p[i][j] = e_i . e_j``."""

    dim: int
    tensor: tuple  # tensor[i][j] is the coordinate vector of e_i . e_j
    name: str = field(default="", compare=False)

    @staticmethod
    def from_table(dim: int, table: ProductTable, name: str = "") -> "PAProduct":
        """Build from a sparse 0-based table ``{(i, j): {k: coeff}}``.

        Unlike a bracket table the product is not antisymmetrized: the
        entry for ``(i, j)`` defines ``e_i . e_j`` only.
        """
        tensor = [[[linalg.ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), components in table.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"product index ({i}, {j}) out of range")
            for k, coeff in components.items():
                if not 0 <= k < dim:
                    raise ValueError(f"product target {k} out of range")
                tensor[i][j][k] = frac(coeff)
        return PAProduct(
            dim=dim,
            tensor=tuple(tuple(tuple(row) for row in plane) for plane in tensor),
            name=name,
        )

    @staticmethod
    def zero(dim: int, name: str = "") -> "PAProduct":
        return PAProduct.from_table(dim, {}, name)

    def apply(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        out = [linalg.ZERO] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                cell = self.tensor[i][j]
                scale = xi * yj
                for k in range(self.dim):
                    if cell[k] != 0:
                        out[k] += scale * cell[k]
        return tuple(out)

    def left_mult(self, x: Sequence[Fraction]) -> Matrix:
        """Matrix of ``L(x): y -> x . y`` (columns are ``x . e_j``)."""
        n = self.dim
        m = [[linalg.ZERO] * n for _ in range(n)]
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j in range(n):
                cell = self.tensor[i][j]
                for k in range(n):
                    if cell[k] != 0:
                        m[k][j] += xi * cell[k]
        return tuple(tuple(row) for row in m)

    def left_mult_basis(self) -> tuple[Matrix, ...]:
        n = self.dim
        return tuple(
            tuple(tuple(self.tensor[i][j][k] for j in range(n)) for k in range(n))
            for i in range(n)
        )

    def sparse_table(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        out: dict[tuple[int, int], dict[int, Fraction]] = {}
        for i in range(self.dim):
            for j in range(self.dim):
                entry = {
                    k: self.tensor[i][j][k]
                    for k in range(self.dim)
                    if self.tensor[i][j][k] != 0
                }
                if entry:
                    out[(i, j)] = entry
        return out

    def is_zero(self) -> bool:
        return all(
            c == 0 for plane in self.tensor for row in plane for c in row
        )


def induced_bracket(n: LieAlgebra, product: PAProduct, name: str = "") -> LieAlgebra:
    """The unique ``g``-bracket satisfying axiom 1 for the given product:
    ``[x, y] = x . y - y . x + {x, y}_n``.  The result is antisymmetric by
    construction but need not satisfy the Jacobi identity unless the
    product actually is a product structure.
    """
    if product.dim != n.dim:
        raise ValueError("product and algebra dimensions differ")
    d = n.dim
    brackets = tuple(
        tuple(
            tuple(
                product.tensor[i][j][k] - product.tensor[j][i][k] + n.brackets[i][j][k]
                for k in range(d)
            )
            for j in range(d)
        )
        for i in range(d)
    )
    return LieAlgebra(dim=d, brackets=brackets, name=name or f"induced({n.name})")


@dataclass(frozen=True)
class PAVerification:
    """Complete residual listing for the three product axioms.

    ``axiom1`` holds pairs ``((i, j), residual)`` with ``i < j``; ``axiom2``
    and ``axiom3`` hold triples ``((i, j, k), residual)``.  Only nonzero
    residuals are stored, so the verification succeeds exactly when all
    three tuples are empty and both brackets satisfy Jacobi.
    """

    g_jacobi_ok: bool
    n_jacobi_ok: bool
    axiom1: tuple
    axiom2: tuple
    axiom3: tuple

    @property
    def ok(self) -> bool:
        return (
            self.g_jacobi_ok
            and self.n_jacobi_ok
            and not self.axiom1
            and not self.axiom2
            and not self.axiom3
        )

    @property
    def left_multiplication_is_representation(self) -> bool:
        """Axiom 2 restated: ``L([x,y]_g) = [L(x), L(y)]`` as operators."""
        return not self.axiom2

    @property
    def left_multiplication_acts_by_derivations(self) -> bool:
        """Axiom 3 restated: every ``L(x)`` is a derivation of ``n``."""
        return not self.axiom3

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "g_jacobi_ok": self.g_jacobi_ok,
            "n_jacobi_ok": self.n_jacobi_ok,
            "axiom1_ok": not self.axiom1,
            "axiom2_ok": not self.axiom2,
            "axiom3_ok": not self.axiom3,
            "left_multiplication_is_representation": not self.axiom2,
            "left_multiplication_acts_by_derivations": not self.axiom3,
            "axiom1_violations": [
                {"i": i + 1, "j": j + 1, "residual": _vec_str(res)}
                for (i, j), res in self.axiom1
            ],
            "axiom2_violations": [
                {"i": i + 1, "j": j + 1, "k": k + 1, "residual": _vec_str(res)}
                for (i, j, k), res in self.axiom2
            ],
            "axiom3_violations": [
                {"i": i + 1, "j": j + 1, "k": k + 1, "residual": _vec_str(res)}
                for (i, j, k), res in self.axiom3
            ],
        }


def verify_pa(g: LieAlgebra, n: LieAlgebra, product: PAProduct) -> PAVerification:
    """Exactly verify the three axioms plus Jacobi for both brackets."""
    if not (g.dim == n.dim == product.dim):
        raise ValueError("g, n and the product must share one dimension")
    d = n.dim
    p = product.tensor
    cg = g.brackets
    cn = n.brackets

    axiom1 = []
    for i in range(d):
        for j in range(i + 1, d):
            res = tuple(
                p[i][j][k] - p[j][i][k] - cg[i][j][k] + cn[i][j][k] for k in range(d)
            )
            if any(x != 0 for x in res):
                axiom1.append(((i, j), res))

    axiom2 = []
    for i in range(d):
        for j in range(i + 1, d):
            lhs_vec = cg[i][j]
            for k in range(d):
                ek = tuple(linalg.ONE if t == k else linalg.ZERO for t in range(d))
                lhs = product.apply(lhs_vec, ek)
                rhs = tuple(
                    a - b
                    for a, b in zip(
                        product.apply(
                            tuple(linalg.ONE if t == i else linalg.ZERO for t in range(d)),
                            p[j][k],
                        ),
                        product.apply(
                            tuple(linalg.ONE if t == j else linalg.ZERO for t in range(d)),
                            p[i][k],
                        ),
                    )
                )
                res = tuple(a - b for a, b in zip(lhs, rhs))
                if any(x != 0 for x in res):
                    axiom2.append(((i, j, k), res))

    axiom3 = []
    for i in range(d):
        for j in range(d):
            for k in range(j + 1, d):
                lhs = product.apply(
                    tuple(linalg.ONE if t == i else linalg.ZERO for t in range(d)),
                    cn[j][k],
                )
                rhs = tuple(
                    a + b
                    for a, b in zip(n.bracket(p[i][j], _unit(d, k)), n.bracket(_unit(d, j), p[i][k]))
                )
                res = tuple(a - b for a, b in zip(lhs, rhs))
                if any(x != 0 for x in res):
                    axiom3.append(((i, j, k), res))

    return PAVerification(
        g_jacobi_ok=g.is_lie(),
        n_jacobi_ok=n.is_lie(),
        axiom1=tuple(axiom1),
        axiom2=tuple(axiom2),
        axiom3=tuple(axiom3),
    )


def _unit(d: int, k: int) -> Vector:
    return tuple(linalg.ONE if t == k else linalg.ZERO for t in range(d))


# ----------------------------------------------------------------------
# weighted operators
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class RBOperator:
    """Linear operator with a weight, stored as a matrix acting on columns."""

    dim: int
    matrix: Matrix
    weight: Fraction
    name: str = field(default="", compare=False)

    @staticmethod
    def from_rows(rows: Sequence[Sequence[object]], weight: object = 1, name: str = "") -> "RBOperator":
        m = tuple(tuple(frac(x) for x in row) for row in rows)
        dim = len(m)
        if any(len(row) != dim for row in m):
            raise ValueError("operator matrix must be square")
        return RBOperator(dim=dim, matrix=m, weight=frac(weight), name=name)

    @staticmethod
    def zero(dim: int, weight: object = 1, name: str = "") -> "RBOperator":
        return RBOperator(dim, linalg.zero_matrix(dim, dim), frac(weight), name)

    def apply(self, x: Sequence[Fraction]) -> Vector:
        return linalg.matvec(self.matrix, x)


@dataclass(frozen=True)
class RBVerification:
    n_jacobi_ok: bool
    weight: Fraction
    residuals: tuple  # ((i, j), residual vector) with i < j, nonzero only

    @property
    def ok(self) -> bool:
        return self.n_jacobi_ok and not self.residuals

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "n_jacobi_ok": self.n_jacobi_ok,
            "weight": str(self.weight),
            "violations": [
                {"i": i + 1, "j": j + 1, "residual": _vec_str(res)}
                for (i, j), res in self.residuals
            ],
        }


def verify_rb(n: LieAlgebra, op: RBOperator) -> RBVerification:
    """Check ``{Rx, Ry} = R({Rx, y} + {x, Ry} + w {x, y})`` on basis pairs."""
    if op.dim != n.dim:
        raise ValueError("operator and algebra dimensions differ")
    d = n.dim
    r = op.matrix
    residuals = []
    for i in range(d):
        rei = tuple(r[k][i] for k in range(d))
        for j in range(i + 1, d):
            rej = tuple(r[k][j] for k in range(d))
            lhs = n.bracket(rei, rej)
            inner = tuple(
                a + b + op.weight * c
                for a, b, c in zip(
                    n.bracket(rei, _unit(d, j)),
                    n.bracket(_unit(d, i), rej),
                    n.brackets[i][j],
                )
            )
            rhs = op.apply(inner)
            res = tuple(a - b for a, b in zip(lhs, rhs))
            if any(x != 0 for x in res):
                residuals.append(((i, j), res))
    return RBVerification(
        n_jacobi_ok=n.is_lie(), weight=op.weight, residuals=tuple(residuals)
    )


def descendent_bracket(n: LieAlgebra, op: RBOperator, name: str = "") -> LieAlgebra:
    """``[x, y] = {Rx, y} + {x, Ry} + w {x, y}`` -- a Lie bracket whenever
    the operator verifies."""
    if op.dim != n.dim:
        raise ValueError("operator and algebra dimensions differ")
    d = n.dim
    r = op.matrix
    cols = tuple(tuple(r[k][i] for k in range(d)) for i in range(d))
    brackets = tuple(
        tuple(
            tuple(
                a + b + op.weight * c
                for a, b, c in zip(
                    n.bracket(cols[i], _unit(d, j)),
                    n.bracket(_unit(d, i), cols[j]),
                    n.brackets[i][j],
                )
            )
            for j in range(d)
        )
        for i in range(d)
    )
    return LieAlgebra(dim=d, brackets=brackets, name=name or f"descendent({n.name})")


def pa_from_rb(n: LieAlgebra, op: RBOperator, name: str = "") -> PAProduct:
    """The product ``x . y = {Rx, y}`` induced by a weight-one operator.

    Together with the descendent bracket as ``g`` this always satisfies
    the product axioms when the operator verifies.
    """
    if op.weight != 1:
        raise ValueError("only weight-one operators induce a product this way")
    if op.dim != n.dim:
        raise ValueError("operator and algebra dimensions differ")
    d = n.dim
    r = op.matrix
    cols = tuple(tuple(r[k][i] for k in range(d)) for i in range(d))
    tensor = tuple(
        tuple(n.bracket(cols[i], _unit(d, j)) for j in range(d)) for i in range(d)
    )
    return PAProduct(dim=d, tensor=tensor, name=name or f"op-product({n.name})")


def solve_rb_form(n: LieAlgebra, product: PAProduct) -> RBOperator | None:
    """Find an operator with ``x . y = {Rx, y}`` if one exists (weight one).

    Returns None when the product is not of that form; products on centered
    algebras frequently are not, which separates the two notions.
    """
    if product.dim != n.dim:
        raise ValueError("product and algebra dimensions differ")
    d = n.dim
    rows = []
    rhs = []
    for i in range(d):
        for j in range(d):
            for k in range(d):
                row = [linalg.ZERO] * (d * d)
                for r_idx in range(d):
                    coeff = n.brackets[r_idx][j][k]
                    if coeff != 0:
                        row[r_idx * d + i] += coeff
                rows.append(tuple(row))
                rhs.append(product.tensor[i][j][k])
    solution = linalg.solve(tuple(rows), tuple(rhs))
    if solution is None:
        return None
    matrix = tuple(tuple(solution[r * d + c] for c in range(d)) for r in range(d))
    return RBOperator(dim=d, matrix=matrix, weight=Fraction(1))


def negation_partner(op: RBOperator) -> RBOperator:
    """``R -> -(R + w id)``: verifies exactly when the original does."""
    d = op.dim
    m = tuple(
        tuple(
            -(op.matrix[r][c] + (op.weight if r == c else linalg.ZERO))
            for c in range(d)
        )
        for r in range(d)
    )
    return RBOperator(dim=d, matrix=m, weight=op.weight, name=f"negation({op.name})")


def rb_kernels(n: LieAlgebra, op: RBOperator) -> tuple[Subspace, Subspace]:
    """Kernels of ``R`` and of ``R + w id`` (each a subalgebra when the
    operator verifies and its weight is nonzero)."""
    shifted = tuple(
        tuple(
            op.matrix[r][c] + (op.weight if r == c else linalg.ZERO)
            for c in range(op.dim)
        )
        for r in range(op.dim)
    )
    return (
        Subspace.from_vectors(op.dim, linalg.nullspace(op.matrix, n_cols=op.dim)),
        Subspace.from_vectors(op.dim, linalg.nullspace(shifted, n_cols=op.dim)),
    )


def rb_from_decomposition(n: LieAlgebra, first: Subspace, second: Subspace) -> RBOperator:
    """Weight-one operator from a decomposition into complementary
    subalgebras: ``R`` is minus the projection onto ``second`` along
    ``first``.  Its descendent is isomorphic to the direct sum of the two
    pieces even when ``n`` itself is far from a direct sum.
    """
    if first.ambient_dim != n.dim or second.ambient_dim != n.dim:
        raise ValueError("subspace ambient dimension differs from the algebra")
    if first.dim + second.dim != n.dim or first.intersection(second).dim != 0:
        raise ValueError("subspaces are not complementary")
    for part, label in ((first, "first"), (second, "second")):
        if not n.is_subalgebra(part):
            raise ValueError(f"{label} subspace is not a subalgebra")
    columns = tuple(first.basis) + tuple(second.basis)
    change = linalg.transpose(columns)
    diag = tuple(
        tuple(
            (-linalg.ONE if r == c and r >= first.dim else linalg.ZERO)
            for c in range(n.dim)
        )
        for r in range(n.dim)
    )
    matrix = linalg.matmul(change, linalg.matmul(diag, linalg.inverse(change)))
    return RBOperator(dim=n.dim, matrix=matrix, weight=Fraction(1))


def rb_from_coordinate_split(n: LieAlgebra, coords: Iterable[int]) -> RBOperator:
    """Convenience wrapper: split along coordinate subsets."""
    chosen = sorted(set(coords))
    rest = [i for i in range(n.dim) if i not in chosen]
    return rb_from_decomposition(
        n,
        Subspace.spanned_by_coordinates(n.dim, chosen),
        Subspace.spanned_by_coordinates(n.dim, rest),
    )


# ----------------------------------------------------------------------
# graph constructions inside n |x Der(n)
# ----------------------------------------------------------------------

Pair = tuple[Vector, Matrix]


def pair_bracket(n: LieAlgebra, a: Pair, b: Pair) -> Pair:
    """Bracket of ``n |x Der(n)`` elements ``(v, D)``:
    ``[(v1,D1),(v2,D2)] = ({v1,v2} + D1 v2 - D2 v1, [D1,D2])``."""
    (v1, d1), (v2, d2) = a, b
    vec = tuple(
        x + y - z
        for x, y, z in zip(n.bracket(v1, v2), linalg.matvec(d1, v2), linalg.matvec(d2, v1))
    )
    return vec, linalg.commutator(d1, d2)


def exp_ad_pair(n: LieAlgebra, z: Pair, x: Pair, max_power: int = 60) -> Pair:
    """``exp(ad_z)(x)`` inside ``n |x Der(n)``; requires ``ad_z`` nilpotent
    on the orbit (the sum must terminate within ``max_power`` steps)."""
    total_v, total_d = x
    current = x
    for k in range(1, max_power + 1):
        current = pair_bracket(n, z, current)
        if all(c == 0 for c in current[0]) and all(
            c == 0 for row in current[1] for c in row
        ):
            return total_v, total_d
        scale = Fraction(1, factorial(k))
        total_v = tuple(a + scale * b for a, b in zip(total_v, current[0]))
        total_d = tuple(
            tuple(a + scale * b for a, b in zip(ra, rb))
            for ra, rb in zip(total_d, current[1])
        )
    raise ValueError("ad_z is not nilpotent within the power bound")


def product_from_left_action(n: LieAlgebra, pairs: Sequence[Pair], name: str = "") -> PAProduct:
    """Product from a graph basis ``(v_a, D_a)`` of a candidate subalgebra
    of ``n |x Der(n)`` whose first components form a basis of ``n``.

    The product is ``x . y = L(x) y`` where ``L(v_a) = D_a`` extended
    linearly.  Axiom 3 holds by construction (each ``D_a`` is checked to be
    a derivation); axioms 1 and 2 hold exactly when the pairs span a
    subalgebra, which `verify_pa` on the induced bracket confirms.
    """
    d = n.dim
    if len(pairs) != d:
        raise ValueError("need exactly dim pairs")
    for idx, (_, der) in enumerate(pairs):
        if not n.is_derivation(der):
            raise ValueError(f"matrix in pair {idx} is not a derivation")
    components = linalg.mat([p[0] for p in pairs])
    coord_matrix = linalg.transpose(components)
    tensor = []
    for i in range(d):
        coeffs = linalg.solve(coord_matrix, _unit(d, i))
        if coeffs is None:
            raise ValueError("first components of the pairs do not span")
        left = linalg.zero_matrix(d, d)
        for a, c in enumerate(coeffs):
            if c != 0:
                left = tuple(
                    tuple(x + c * y for x, y in zip(rl, rp))
                    for rl, rp in zip(left, pairs[a][1])
                )
        tensor.append(tuple(tuple(left[k][j] for k in range(d)) for j in range(d)))
    return PAProduct(dim=d, tensor=tuple(tensor), name=name)


# ----------------------------------------------------------------------
# paired embeddings into a doubled algebra
# ----------------------------------------------------------------------


class NotSemisimpleError(ValueError):
    """The paired-embedding criterion only applies over a semisimple target."""


@dataclass(frozen=True)
class DoubleEmbedding:
    """A linear map ``x -> (j1 x, j2 x)`` into the direct sum ``n (+) n``.

    Both blocks are ``dim x dim`` matrices over the rationals, acting on
    coordinate columns of the source algebra.
    """

    dim: int
    j1: Matrix
    j2: Matrix

    @staticmethod
    def from_rows(rows1: Sequence[Sequence[object]], rows2: Sequence[Sequence[object]]) -> "DoubleEmbedding":
        m1 = linalg.mat(rows1)
        m2 = linalg.mat(rows2)
        d = len(m1)
        if len(m2) != d or any(len(r) != d for r in m1 + m2):
            raise ValueError("both blocks must be square of equal size")
        return DoubleEmbedding(dim=d, j1=m1, j2=m2)

    def apply(self, v: Vector) -> tuple[Vector, Vector]:
        return linalg.matvec(self.j1, v), linalg.matvec(self.j2, v)


def verify_double_embedding(phi: DoubleEmbedding, g: LieAlgebra, n: LieAlgebra) -> bool:
    """Decide whether ``phi`` certifies a product structure on ``(g, n)``
    for semisimple ``n``.

    For semisimple ``n``, products on ``(g, n)`` correspond exactly to
    injective homomorphisms ``phi = (j1, j2): g -> n (+) n`` such that
    ``j1 - j2`` is bijective (the product is then recovered from the two
    component projections).  The check below verifies, in order: both
    component maps are homomorphisms from ``g`` into ``n``, the stacked map
    is injective, and ``j1 - j2`` is invertible.

    Raises :class:`NotSemisimpleError` when ``n`` is not semisimple, since
    the correspondence is only a theorem under that hypothesis.
    """
    if g.dim != n.dim or phi.dim != g.dim:
        raise ValueError("phi, g and n must share one dimension")
    if not n.is_semisimple():
        raise NotSemisimpleError(
            "the paired-embedding criterion requires a semisimple target"
        )
    d = g.dim
    for block in (phi.j1, phi.j2):
        for i in range(d):
            for j in range(i + 1, d):
                lhs = linalg.matvec(block, g.brackets[i][j])
                rhs = n.bracket(
                    linalg.matvec(block, _unit(d, i)),
                    linalg.matvec(block, _unit(d, j)),
                )
                if lhs != rhs:
                    return False
    stacked = phi.j1 + phi.j2
    if linalg.rank(stacked) != d:
        return False
    diff = tuple(
        tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(phi.j1, phi.j2)
    )
    return linalg.rank(diff) == d
