"""Pop-stack sorting on Tamari lattices of lattice paths.

Exact integer arithmetic throughout: lattice elements are N/E paths weakly
above a base path, encoded as vectors whose componentwise order matches the
lattice order, so the pop operator (meet of an element with its lower
covers) becomes an entrywise computation that can be cross-checked against
the direct cover-based definition.
"""

from .brackets import (
    BracketVector,
    enumerate_vectors,
    is_valid,
    leq,
    meet,
    path_to_vector,
    vector_to_path,
)
from .paths import (
    BoundExceeded,
    LatticePath,
    NuContext,
    covers_down,
    covers_up,
    east_staircase,
    enumerate_tam,
    horizontal_distance,
    lies_weakly_above,
    parse_path,
    staircase,
)
from .perms import (
    Permutation,
    avoids,
    enumerate_av312,
    image_by_characterization,
    parse_permutation,
    pi_down,
    pop_stack,
    pop_tamari_perm,
    r_map,
    tamari_perm_bijection,
)
from .pop import (
    PopPolynomial,
    PopTrajectory,
    count_t_sortable,
    decompose_irreducible,
    hash_map,
    pop_generic,
    pop_image,
    pop_polynomial,
    pop_vector,
    sortability_time,
    trajectory,
)
from .series import (
    IntSeries,
    a055151,
    catalan,
    g_series,
    g_series_rational,
    h_series,
    h_series_rational,
    motzkin,
)

__version__ = "0.1.0"

__all__ = [
    "BoundExceeded",
    "BracketVector",
    "IntSeries",
    "LatticePath",
    "NuContext",
    "Permutation",
    "PopPolynomial",
    "PopTrajectory",
    "a055151",
    "avoids",
    "catalan",
    "count_t_sortable",
    "covers_down",
    "covers_up",
    "decompose_irreducible",
    "east_staircase",
    "enumerate_av312",
    "enumerate_tam",
    "enumerate_vectors",
    "g_series",
    "g_series_rational",
    "h_series",
    "h_series_rational",
    "hash_map",
    "horizontal_distance",
    "image_by_characterization",
    "is_valid",
    "leq",
    "lies_weakly_above",
    "meet",
    "motzkin",
    "parse_path",
    "parse_permutation",
    "path_to_vector",
    "pi_down",
    "pop_generic",
    "pop_image",
    "pop_polynomial",
    "pop_stack",
    "pop_tamari_perm",
    "pop_vector",
    "r_map",
    "sortability_time",
    "staircase",
    "tamari_perm_bijection",
    "trajectory",
    "vector_to_path",
]
