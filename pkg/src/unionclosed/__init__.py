"""Finite union-closed set families: purification, isomorphisms, hyperisomorphism
extraction, inclusion lattices and exhaustive small-scale enumeration."""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .family import (
    SetFamily,
    elements_of,
    family_union,
    format_member,
    is_union_closed,
    make_family,
    mask_of,
    member_star,
    minimal_members,
    remove_member,
    star_intersection,
    union_closure,
)
from .purification import (
    PurificationTrace,
    all_purifications,
    is_pure,
    is_redundant,
    purify,
    redundant_elements,
    reduce,
    strip_map,
)
from .morphism import (
    FamilyMap,
    compose,
    find_isomorphisms,
    image_family,
    inverse,
    is_homomorphism,
    is_isomorphism,
)
from .hyperiso import (
    CardinalityReport,
    GroundMap,
    brute_force_hyperisomorphism,
    extract_hyperisomorphism,
    induced_map,
    is_hyperisomorphism,
    verify_cardinality_theorem,
)
from .lattice import (
    Lattice,
    export_dot,
    frankl_abundant_elements,
    frankl_counts,
    meet,
    join,
    to_lattice,
    verify_lattice_laws,
)
from .enumeration import (
    CanonicalForm,
    canonical_form,
    enumerate_pure,
    enumerate_union_closed,
    hyperisomorphic,
)
from .familyfile import ParseError, format_family, parse_family, read_family, write_family
