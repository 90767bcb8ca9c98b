"""Rank-2 permutation endomorphisms of O_2: classification and index."""

import json

from ._core import (
    CuntzError,
    Permutation,
    __version__,
    all_permutations,
    apply,
    automorphism_order,
    classify,
    commutant_dimension,
    diagonal,
    equivalence_classes,
    equivalence_witness,
    generator_images,
    identities,
    inner_witness,
    normalize,
    report,
    roundtrip_json,
    sweep,
    table,
    table_order,
    unitary,
    verify,
    xi,
)


def table_data(**kwargs):
    """The full table with certificates, as parsed JSON."""
    return json.loads(table(format="json", details=True, **kwargs))


__all__ = [
    "CuntzError",
    "Permutation",
    "__version__",
    "all_permutations",
    "apply",
    "automorphism_order",
    "classify",
    "commutant_dimension",
    "diagonal",
    "equivalence_classes",
    "equivalence_witness",
    "generator_images",
    "identities",
    "inner_witness",
    "normalize",
    "report",
    "roundtrip_json",
    "sweep",
    "table",
    "table_data",
    "table_order",
    "unitary",
    "verify",
    "xi",
]
