"""Dissociated spans, Bourgain peeling and Fourier certificates for finite sets."""

from ._addspan import (
    Error,
    Set,
    additive_energy,
    bourgain_peel,
    cover_structure,
    doubling,
    embed_to_torus,
    energy_structure,
    energy_via_l4,
    generate,
    is_dissociated,
    max_dissociated_greedy,
    parse_set_file,
    rudin_probe,
    run_cli,
    span_contains,
    span_intersect,
    sumset,
    thm2_chain_check,
)

__all__ = [
    "Error",
    "Set",
    "additive_energy",
    "bourgain_peel",
    "cover_structure",
    "doubling",
    "embed_to_torus",
    "energy_structure",
    "energy_via_l4",
    "generate",
    "is_dissociated",
    "max_dissociated_greedy",
    "parse_set_file",
    "rudin_probe",
    "run_cli",
    "span_contains",
    "span_intersect",
    "sumset",
    "thm2_chain_check",
]
