"""ASM chain poset: alternating sequences, alternating sign matrices, maximal
chains, and the dihedral symmetry of the Hasse diagram.

Vertices are bitstrings like "0101" (leftmost character is the first
coordinate), matrices are lists of rows over {-1, 0, 1}, chains are lists of
bitstrings from the all-zero word to the all-one word.
"""

from asmposet._core import (
    DihedralElement,
    ValidationError,
    asm_to_chain,
    chain_to_asm,
    complement,
    count_maximal_chains,
    differences,
    down_covers,
    enumerate_alternating,
    enumerate_asms,
    group_order,
    hasse_edges,
    is_alternating,
    is_asm,
    is_constrained,
    is_cover,
    is_graph_automorphism,
    leq,
    maximal_chains,
    parse_asm,
    partial_sums,
    rank,
    rho,
    serialize_asm,
    tau,
    theta,
    theta_cycle,
    theta_cycles_report,
    theta_inverse,
    up_covers,
    validate_asm,
    validate_chain,
    verify,
    vertex_orbits,
    xi,
)

__all__ = [
    "DihedralElement",
    "ValidationError",
    "asm_to_chain",
    "chain_to_asm",
    "complement",
    "count_maximal_chains",
    "differences",
    "down_covers",
    "enumerate_alternating",
    "enumerate_asms",
    "group_order",
    "hasse_edges",
    "is_alternating",
    "is_asm",
    "is_constrained",
    "is_cover",
    "is_graph_automorphism",
    "leq",
    "maximal_chains",
    "parse_asm",
    "partial_sums",
    "rank",
    "rho",
    "serialize_asm",
    "tau",
    "theta",
    "theta_cycle",
    "theta_cycles_report",
    "theta_inverse",
    "up_covers",
    "validate_asm",
    "validate_chain",
    "verify",
    "vertex_orbits",
    "xi",
]

__version__ = "0.1.0"
