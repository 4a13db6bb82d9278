# pylint: disable=missing-module-docstring

from .geometry_functions import (
    chord_configuration,
    common_chord_line,
    endpoint_power,
    polar_line,
    power_of_point,
    radical_axis,
    signed_chord_power,
    verify_chord_power_relation,
    verify_section_relation,
    verify_supplementary_conic,
    verify_tangent_meeting,
)
from .geometry_model import (
    ChordConfiguration,
    ChordKind,
    Circle,
    CommonChord,
    Line,
    as_fraction,
    as_point,
    format_fraction,
)

__all__ = [
    "Circle",
    "Line",
    "CommonChord",
    "ChordKind",
    "ChordConfiguration",
    "as_fraction",
    "as_point",
    "format_fraction",
    "power_of_point",
    "radical_axis",
    "common_chord_line",
    "endpoint_power",
    "chord_configuration",
    "verify_section_relation",
    "verify_chord_power_relation",
    "polar_line",
    "verify_tangent_meeting",
    "verify_supplementary_conic",
    "signed_chord_power",
]
