"""Autotopy-nuclear structure of finite quasigroups."""

from .autotopy import (
    AutotopyGroup,
    autotopy_group,
    conjugate_group,
    is_autotopy,
    leakh_extend,
    plain_autotopy_group,
    third_from_two,
)
from .centers import (
    a_center,
    a_centers,
    identity_check,
    is_a_central,
    is_a_nuclear,
    is_abelian_group_isotope,
    is_group_isotope,
    loop_center,
    semidirect_structure_check,
)
from .cli import parse_table_file, run_command
from .congruence import congruence_check, normality_report, nucleus_equivalence, relation_product_check
from .errors import *  # noqa: F401,F403
from .inverse import InverseWitness, autostrophy_bridge, check_witness, detect_special, nucleus_coincidence_check
from .isotopy import (
    Isostrophy,
    Isotopy,
    apply_isostrophy,
    apply_isotopy,
    compose_isostrophy,
    invert_isostrophy,
    lp_isotope,
    transport_check,
)
from .nuclei import (
    a_nucleus,
    action_profile,
    component_group,
    garrison_nucleus,
    multiplication_groups,
    nucleus_isomorphism_check,
    orbits,
    translation_centralizer,
)
from .partition import Partition
from .perm import Perm, PermGroup, compose, generate_group, group_fingerprint, inverse
from .quasigroup import (
    FiniteQuasigroup,
    Parastrophy,
    divisions,
    local_maps,
    parastrophe,
    tau_property,
    translation,
    validate_table,
)
