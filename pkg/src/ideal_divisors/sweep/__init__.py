# pylint: disable=missing-module-docstring

from .sweep_convert import (
    convert_hdf_to_sweeptable,
    convert_sweeptable_to_hdf,
    export_sweeptable_to_hdf5,
    import_sweeptable_from_hdf5,
)
from .sweep_create import create_sweeptable
from .sweep_model import SweepTable, SweepTableAccessor

__all__ = [
    "SweepTable",
    "SweepTableAccessor",
    "create_sweeptable",
    "convert_sweeptable_to_hdf",
    "convert_hdf_to_sweeptable",
    "export_sweeptable_to_hdf5",
    "import_sweeptable_from_hdf5",
]
