"""postlie: exact-arithmetic toolkit for post-Lie structures on Lie algebras.

The package builds a catalog of low-dimensional perfect Lie algebras with
exact rational structure constants, verifies and searches for post-Lie
products and Rota-Baxter operators on pairs of algebras, and assembles a
machine-checked existence table across structural classes (abelian,
nilpotent, solvable, simple, semisimple, reductive, complete, perfect).
"""

from .liealg import Fingerprint, LieAlgebra, Subspace, fingerprint
from .catalog import (
    ExternalDataRequired,
    UnknownCatalogId,
    catalog_ids,
    get_algebra,
    get_entry,
    identify,
    perfect_ids,
)
from .structures import (
    DoubleEmbedding,
    NotSemisimpleError,
    PAProduct,
    PAVerification,
    RBOperator,
    RBVerification,
    descendent_bracket,
    induced_bracket,
    negation_partner,
    pa_from_rb,
    product_from_left_action,
    rb_from_coordinate_split,
    rb_from_decomposition,
    rb_kernels,
    solve_rb_form,
    verify_double_embedding,
    verify_pa,
    verify_rb,
)
from .certificates import EXISTS, NOT_EXISTS, UNKNOWN, Certificate
from .search import SolutionSpace, pa_linear_space, pa_search
from .rules import RULES, applicable_rule, nonexistence_certificate, rule_by_id
from .table import ExistenceTable, TableVerificationError, classify, existence_table
from .samples import SAMPLES, get_sample, sample_ids
from .interchange import (
    InterchangeError,
    ParsedDocument,
    parse_document,
    parse_file,
    parse_text,
    serialize,
)

__all__ = [
    "Fingerprint",
    "LieAlgebra",
    "Subspace",
    "fingerprint",
    "ExternalDataRequired",
    "UnknownCatalogId",
    "catalog_ids",
    "get_algebra",
    "get_entry",
    "identify",
    "perfect_ids",
    "DoubleEmbedding",
    "NotSemisimpleError",
    "PAProduct",
    "PAVerification",
    "RBOperator",
    "RBVerification",
    "descendent_bracket",
    "induced_bracket",
    "negation_partner",
    "pa_from_rb",
    "product_from_left_action",
    "rb_from_coordinate_split",
    "rb_from_decomposition",
    "rb_kernels",
    "solve_rb_form",
    "verify_double_embedding",
    "verify_pa",
    "verify_rb",
    "EXISTS",
    "NOT_EXISTS",
    "UNKNOWN",
    "Certificate",
    "SolutionSpace",
    "pa_linear_space",
    "pa_search",
    "RULES",
    "applicable_rule",
    "nonexistence_certificate",
    "rule_by_id",
    "ExistenceTable",
    "TableVerificationError",
    "classify",
    "existence_table",
    "SAMPLES",
    "get_sample",
    "sample_ids",
    "InterchangeError",
    "ParsedDocument",
    "parse_document",
    "parse_file",
    "parse_text",
    "serialize",
]

__version__ = "0.1.0"
