"""Hexagonal-lattice multiple-unicast network coding simulator."""

from ._hexnc import (
    benefit,
    check_decoded_source_property,
    hex_decode_errors,
    hex_energy_per_slot,
    lemma1,
    lemma2,
    line_benefit,
    node_constants,
    routing_energy_per_slot,
    sweep,
    verify_code,
    verify_line,
    verify_symmetry,
)

__all__ = [
    "benefit",
    "check_decoded_source_property",
    "hex_decode_errors",
    "hex_energy_per_slot",
    "lemma1",
    "lemma2",
    "line_benefit",
    "node_constants",
    "routing_energy_per_slot",
    "sweep",
    "verify_code",
    "verify_line",
    "verify_symmetry",
]
