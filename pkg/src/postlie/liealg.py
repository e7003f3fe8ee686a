"""Lie algebras over the rationals as exact structure-constant tensors.

A :class:`LieAlgebra` of dimension ``n`` stores the full antisymmetric tensor
``c[i][j][k]`` with ``[e_i, e_j] = sum_k c[i][j][k] e_k`` (0-based indices).
The tensor is an immutable nested tuple, so algebras are hashable and can be
compared by data equality; all invariants are computed exactly.

Structural invariants provided here:

* Jacobi residuals (exact witness of where the identity fails, if anywhere),
* derived series / lower central series dimension profiles,
* center, derived subalgebra, solvable radical (Killing-orthogonal
  complement of the derived subalgebra, valid in characteristic zero),
* Killing form, its rank and determinant,
* the derivation algebra as an explicit matrix basis,
* class predicates: abelian, nilpotent, solvable, perfect, semisimple,
  reductive, complete (trivial center and only inner derivations), simple.

The simplicity test decomposes the algebra by taking ad-closures of basis
vectors; this detects the split, basis-aligned decompositions used throughout
the bundled catalog, but a non-split form whose simple ideals are not
spanned by basis vectors could fool it (documented caveat; every catalog
entry is basis-aligned).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from . import linalg
from .linalg import Matrix, Vector, ZERO, ONE, frac
from .subspace import Subspace

BracketTable = Mapping[tuple[int, int], Mapping[int, object]]


def _tensor_from_table(dim: int, table: BracketTable):
    c = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
    for (i, j), component in table.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise ValueError(f"bracket index ({i},{j}) out of range for dim {dim}")
        if i == j:
            raise ValueError(f"bracket [e{i},e{i}] must be zero")
        for k, coeff in component.items():
            if not 0 <= k < dim:
                raise ValueError(f"component index {k} out of range for dim {dim}")
            value = frac(coeff)
            c[i][j][k] += value
            c[j][i][k] -= value
    return tuple(tuple(tuple(row) for row in plane) for plane in c)


@dataclass(frozen=True)
class LieAlgebra:
    """An exact-rational Lie algebra given by structure constants."""

    dim: int
    brackets: tuple  # brackets[i][j] is the component vector of [e_i, e_j]
    name: str = field(default="", compare=False)

    @staticmethod
    def from_table(dim: int, table: BracketTable, name: str = "") -> "LieAlgebra":
        """Build from a sparse table {(i, j): {k: coeff}} with i < j, 0-based.

        Antisymmetry is enforced by construction; the Jacobi identity is not
        (use :meth:`jacobi_residuals` / :meth:`is_lie` to check it).
        """
        return LieAlgebra(dim, _tensor_from_table(dim, table), name)

    @staticmethod
    def abelian(dim: int, name: str = "") -> "LieAlgebra":
        return LieAlgebra.from_table(dim, {}, name or f"abelian_{dim}")

    # ------------------------------------------------------------------
    # basic bracket operations
    # ------------------------------------------------------------------

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        n = self.dim
        out = [ZERO] * n
        for i in range(n):
            if x[i] == 0:
                continue
            row = self.brackets[i]
            for j in range(n):
                if y[j] == 0:
                    continue
                coeff = x[i] * y[j]
                comp = row[j]
                for k in range(n):
                    if comp[k] != 0:
                        out[k] += coeff * comp[k]
        return tuple(out)

    def basis_vector(self, i: int) -> Vector:
        return tuple(ONE if j == i else ZERO for j in range(self.dim))

    def ad(self, x: Sequence[Fraction]) -> Matrix:
        """Matrix of ad(x) = [x, -] acting on column vectors."""
        n = self.dim
        cols = [self.bracket(x, self.basis_vector(j)) for j in range(n)]
        return tuple(tuple(cols[j][k] for j in range(n)) for k in range(n))

    def ad_basis(self) -> tuple[Matrix, ...]:
        return tuple(self.ad(self.basis_vector(i)) for i in range(self.dim))

    # ------------------------------------------------------------------
    # Jacobi identity
    # ------------------------------------------------------------------

    def jacobi_residuals(self) -> tuple[tuple[tuple[int, int, int], Vector], ...]:
        """All basis triples (i<j<k) where the Jacobi identity fails."""
        bad = []
        n = self.dim
        for i in range(n):
            ei = self.basis_vector(i)
            for j in range(i + 1, n):
                ej = self.basis_vector(j)
                bij = self.brackets[i][j]
                for k in range(j + 1, n):
                    ek = self.basis_vector(k)
                    total = linalg.add_vectors(
                        self.bracket(bij, ek),
                        linalg.add_vectors(
                            self.bracket(self.brackets[j][k], ei),
                            self.bracket(self.brackets[k][i], ej),
                        ),
                    )
                    if not linalg.is_zero_vector(total):
                        bad.append(((i, j, k), total))
        return tuple(bad)

    def is_lie(self) -> bool:
        return not self.jacobi_residuals()

    # ------------------------------------------------------------------
    # subspace machinery
    # ------------------------------------------------------------------

    def full_space(self) -> Subspace:
        return Subspace.full(self.dim)

    def bracket_span(self, a: Subspace, b: Subspace) -> Subspace:
        """Span of [u, v] over basis vectors u of a and v of b."""
        vectors = [self.bracket(u, v) for u in a.basis for v in b.basis]
        return Subspace.from_vectors(self.dim, vectors)

    def derived_subalgebra(self) -> Subspace:
        full = self.full_space()
        return self.bracket_span(full, full)

    def derived_series(self) -> tuple[int, ...]:
        """Dimensions g ⊇ [g,g] ⊇ ... until the series stabilizes."""
        dims = [self.dim]
        current = self.full_space()
        while True:
            nxt = self.bracket_span(current, current)
            if nxt.dim == current.dim:
                if not dims or dims[-1] != nxt.dim:
                    dims.append(nxt.dim)
                break
            dims.append(nxt.dim)
            current = nxt
            if nxt.dim == 0:
                break
        return tuple(dims)

    def lower_central_series(self) -> tuple[int, ...]:
        dims = [self.dim]
        full = self.full_space()
        current = full
        while True:
            nxt = self.bracket_span(full, current)
            if nxt.dim == current.dim:
                if not dims or dims[-1] != nxt.dim:
                    dims.append(nxt.dim)
                break
            dims.append(nxt.dim)
            current = nxt
            if nxt.dim == 0:
                break
        return tuple(dims)

    @cached_property
    def _center(self) -> Subspace:
        # x central iff sum_i x_i c[i][j][k] = 0 for all j, k.
        rows = []
        n = self.dim
        for j in range(n):
            for k in range(n):
                rows.append(tuple(self.brackets[i][j][k] for i in range(n)))
        return Subspace(n, linalg.nullspace(tuple(rows), n_cols=n))

    def center(self) -> Subspace:
        return self._center

    @cached_property
    def _killing(self) -> Matrix:
        ads = self.ad_basis()
        n = self.dim

        def pair_trace(a: Matrix, b: Matrix) -> Fraction:
            return sum(
                (a[r][c] * b[c][r] for r in range(n) for c in range(n) if a[r][c]),
                Fraction(0),
            )

        rows = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                value = pair_trace(ads[i], ads[j])
                rows[i][j] = value
                rows[j][i] = value
        return tuple(tuple(row) for row in rows)

    def killing_form(self) -> Matrix:
        return self._killing

    def killing_rank(self) -> int:
        return linalg.rank(self._killing)

    def killing_det(self) -> Fraction:
        return linalg.det(self._killing)

    def solvable_radical(self) -> Subspace:
        """Killing-orthogonal complement of [g, g] (characteristic zero)."""
        derived = self.derived_subalgebra()
        kappa = self._killing
        rows = [linalg.matvec(kappa, d) for d in derived.basis]
        return Subspace(self.dim, linalg.nullspace(tuple(rows), n_cols=self.dim))

    # ------------------------------------------------------------------
    # class predicates
    # ------------------------------------------------------------------

    def is_abelian(self) -> bool:
        return all(
            linalg.is_zero_vector(self.brackets[i][j])
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        )

    def is_perfect(self) -> bool:
        return self.derived_subalgebra().dim == self.dim

    def is_solvable(self) -> bool:
        return self.derived_series()[-1] == 0

    def is_nilpotent(self) -> bool:
        return self.lower_central_series()[-1] == 0

    def nilpotency_class(self) -> int | None:
        """Length of the lower central series if nilpotent, else None."""
        series = self.lower_central_series()
        if series[-1] != 0:
            return None
        return len(series) - 1

    def is_semisimple(self) -> bool:
        if self.dim == 0:
            return True
        return self.killing_det() != 0

    def is_reductive(self) -> bool:
        """True iff g = center ⊕ [g,g] with semisimple derived subalgebra."""
        center = self.center()
        derived = self.derived_subalgebra()
        if center.dim + derived.dim != self.dim:
            return False
        if center.intersection(derived).dim != 0:
            return False
        if derived.dim == 0:
            return True
        return self.restrict(derived).is_semisimple()

    @cached_property
    def _derivations(self) -> tuple[Matrix, ...]:
        """Canonical basis of the derivation algebra.

        A matrix D (acting on columns) is a derivation iff for all i < j, k:
        sum_m c[i][j][m] D[k][m] - sum_a c[a][j][k] D[a][i]
                                 - sum_b c[i][b][k] D[b][j] = 0,
        with unknowns D flattened row-major.
        """
        n = self.dim
        rows = []
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(n):
                    row = [ZERO] * (n * n)
                    for m in range(n):
                        coeff = self.brackets[i][j][m]
                        if coeff != 0:
                            row[k * n + m] += coeff
                    for a in range(n):
                        coeff = self.brackets[a][j][k]
                        if coeff != 0:
                            row[a * n + i] -= coeff
                    for b in range(n):
                        coeff = self.brackets[i][b][k]
                        if coeff != 0:
                            row[b * n + j] -= coeff
                    rows.append(tuple(row))
        basis = linalg.nullspace(tuple(rows), n_cols=n * n)
        return tuple(
            tuple(tuple(flat[r * n + c] for c in range(n)) for r in range(n))
            for flat in basis
        )

    def derivations(self) -> tuple[Matrix, ...]:
        return self._derivations

    def is_derivation(self, matrix: Matrix) -> bool:
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                lhs = linalg.matvec(matrix, self.brackets[i][j])
                rhs = linalg.add_vectors(
                    self.bracket(linalg.matvec(matrix, self.basis_vector(i)), self.basis_vector(j)),
                    self.bracket(self.basis_vector(i), linalg.matvec(matrix, self.basis_vector(j))),
                )
                if lhs != rhs:
                    return False
        return True

    def is_complete(self) -> bool:
        """Trivial center and every derivation inner."""
        return self.center().dim == 0 and len(self._derivations) == self.dim

    def ad_closure(self, seed: Subspace) -> Subspace:
        """Smallest ideal containing the given subspace."""
        current = seed
        full = self.full_space()
        while True:
            nxt = current.sum(self.bracket_span(full, current))
            if nxt.dim == current.dim:
                return nxt
            current = nxt

    def minimal_coordinate_ideals(self) -> tuple[Subspace, ...]:
        """Minimal elements among ad-closures of the basis vectors."""
        closures = []
        for i in range(self.dim):
            closure = self.ad_closure(
                Subspace.spanned_by_coordinates(self.dim, [i])
            )
            if closure not in closures:
                closures.append(closure)
        minimal = [
            c
            for c in closures
            if not any(o.dim < c.dim and c.contains_subspace(o) for o in closures)
        ]
        out = []
        for c in minimal:
            if c not in out:
                out.append(c)
        return tuple(out)

    def is_simple(self) -> bool:
        """Semisimple with no proper ideal visible from any basis vector.

        Sound for split algebras whose simple ideals are spanned by basis
        vectors (true of the whole catalog); see module docstring.
        """
        if self.dim == 0 or not self.is_semisimple():
            return False
        full = self.full_space()
        return all(
            self.ad_closure(Subspace.spanned_by_coordinates(self.dim, [i])) == full
            for i in range(self.dim)
        )

    # ------------------------------------------------------------------
    # subalgebras, quotients, sums
    # ------------------------------------------------------------------

    def is_subalgebra(self, space: Subspace) -> bool:
        return all(
            space.contains(self.bracket(u, v))
            for a, u in enumerate(space.basis)
            for v in space.basis[a + 1 :]
        )

    def is_ideal(self, space: Subspace) -> bool:
        return all(
            space.contains(self.bracket(self.basis_vector(i), v))
            for i in range(self.dim)
            for v in space.basis
        )

    def restrict(self, space: Subspace) -> "LieAlgebra":
        """The bracket restricted to a subalgebra, in the subspace basis."""
        from .subspace import coordinates_in_basis

        if not self.is_subalgebra(space):
            raise ValueError("subspace is not closed under the bracket")
        d = space.dim
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for a in range(d):
            for b in range(a + 1, d):
                w = self.bracket(space.basis[a], space.basis[b])
                coords = coordinates_in_basis(space, w)
                if coords is None:  # cannot happen for a subalgebra
                    raise AssertionError("bracket left the subalgebra")
                entry = {k: coords[k] for k in range(d) if coords[k] != 0}
                if entry:
                    table[(a, b)] = entry
        return LieAlgebra.from_table(d, table)

    def quotient(self, ideal: Subspace) -> "LieAlgebra":
        """Quotient by an ideal, in the basis of non-pivot coordinates."""
        if not self.is_ideal(ideal):
            raise ValueError("subspace is not an ideal")
        pivots = {
            next(i for i, x in enumerate(row) if x != 0) for row in ideal.basis
        }
        section = [i for i in range(self.dim) if i not in pivots]
        d = len(section)

        def reduce_mod(v: Sequence[Fraction]) -> list[Fraction]:
            residual = list(v)
            for row in ideal.basis:
                pivot = next(i for i, x in enumerate(row) if x != 0)
                if residual[pivot] != 0:
                    c = residual[pivot]
                    residual = [x - c * y for x, y in zip(residual, row)]
            return residual

        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for a in range(d):
            for b in range(a + 1, d):
                w = reduce_mod(
                    self.bracket(self.basis_vector(section[a]), self.basis_vector(section[b]))
                )
                entry = {}
                for pos, i in enumerate(section):
                    if w[i] != 0:
                        entry[pos] = w[i]
                if any(w[i] != 0 for i in range(self.dim) if i not in section):
                    raise AssertionError("reduction left ideal coordinates nonzero")
                if entry:
                    table[(a, b)] = entry
        return LieAlgebra.from_table(d, table)

    def sparse_table(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        """The i<j sparse form of the bracket tensor."""
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                entry = {
                    k: self.brackets[i][j][k]
                    for k in range(self.dim)
                    if self.brackets[i][j][k] != 0
                }
                if entry:
                    table[(i, j)] = entry
        return table


def direct_sum(*algebras: LieAlgebra, name: str = "") -> LieAlgebra:
    total = sum(a.dim for a in algebras)
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    offset = 0
    for alg in algebras:
        for (i, j), entry in alg.sparse_table().items():
            table[(i + offset, j + offset)] = {
                k + offset: coeff for k, coeff in entry.items()
            }
        offset += alg.dim
    return LieAlgebra.from_table(total, table, name)


def semidirect_product(
    sub: LieAlgebra,
    module_dim: int,
    action: Sequence[Matrix],
    module_table: BracketTable | None = None,
    name: str = "",
) -> LieAlgebra:
    """Build sub ⋉ module from an action of sub by derivations of the module.

    ``action[i]`` is the matrix by which the i-th basis vector of ``sub``
    acts on the module.  The action must be a homomorphism
    ([action_i, action_j] = action of [e_i, e_j]) and each matrix must be a
    derivation of the module bracket; both conditions are verified.
    """
    if len(action) != sub.dim:
        raise ValueError("need one action matrix per subalgebra basis vector")
    module = LieAlgebra.from_table(module_dim, module_table or {})
    for i, mat_i in enumerate(action):
        if len(mat_i) != module_dim or any(len(row) != module_dim for row in mat_i):
            raise ValueError("action matrix has wrong shape")
        if not module.is_derivation(mat_i):
            raise ValueError(f"action of basis vector {i} is not a derivation")
    for i in range(sub.dim):
        for j in range(i + 1, sub.dim):
            expected = [[ZERO] * module_dim for _ in range(module_dim)]
            for k in range(sub.dim):
                coeff = sub.brackets[i][j][k]
                if coeff != 0:
                    for r in range(module_dim):
                        for c in range(module_dim):
                            expected[r][c] += coeff * action[k][r][c]
            actual = linalg.commutator(action[i], action[j])
            if actual != tuple(tuple(row) for row in expected):
                raise ValueError(
                    f"action is not a homomorphism on basis pair ({i},{j})"
                )
    dim = sub.dim + module_dim
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j), entry in sub.sparse_table().items():
        table[(i, j)] = dict(entry)
    for i in range(sub.dim):
        for a in range(module_dim):
            entry = {
                sub.dim + k: action[i][k][a]
                for k in range(module_dim)
                if action[i][k][a] != 0
            }
            if entry:
                table[(i, sub.dim + a)] = entry
    if module_table:
        for (a, b), entry in module.sparse_table().items():
            table[(sub.dim + a, sub.dim + b)] = {
                sub.dim + k: coeff for k, coeff in entry.items()
            }
    return LieAlgebra.from_table(dim, table, name)


@dataclass(frozen=True)
class Fingerprint:
    """Cheap isomorphism invariants used to compare algebras structurally.

    Equality of fingerprints does NOT prove isomorphism (the catalog
    documents known collision sets, e.g. four dimension-9 entries whose
    radicals decompose differently); inequality does prove non-isomorphism.
    """

    dim: int
    derived_dims: tuple[int, ...]
    lower_central_dims: tuple[int, ...]
    center_dim: int
    killing_rank: int
    radical_dim: int
    radical_class: int | None
    perfect: bool
    solvable: bool
    nilpotent: bool
    semisimple: bool

    def as_dict(self) -> dict:
        return {
            "dim": self.dim,
            "derived_dims": list(self.derived_dims),
            "lower_central_dims": list(self.lower_central_dims),
            "center_dim": self.center_dim,
            "killing_rank": self.killing_rank,
            "radical_dim": self.radical_dim,
            "radical_class": self.radical_class,
            "perfect": self.perfect,
            "solvable": self.solvable,
            "nilpotent": self.nilpotent,
            "semisimple": self.semisimple,
        }


def fingerprint(alg: LieAlgebra) -> Fingerprint:
    radical = alg.solvable_radical()
    radical_alg = alg.restrict(radical)
    return Fingerprint(
        dim=alg.dim,
        derived_dims=alg.derived_series(),
        lower_central_dims=alg.lower_central_series(),
        center_dim=alg.center().dim,
        killing_rank=alg.killing_rank(),
        radical_dim=radical.dim,
        radical_class=radical_alg.nilpotency_class(),
        perfect=alg.is_perfect(),
        solvable=alg.is_solvable(),
        nilpotent=alg.is_nilpotent(),
        semisimple=alg.is_semisimple(),
    )
