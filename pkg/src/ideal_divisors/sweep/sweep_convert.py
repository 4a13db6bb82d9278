# pylint: disable=invalid-name

"""
Functions converting from and to the SweepTable data model.
"""

import collections
import logging
from typing import List, Union

import h5py
import numpy
import xarray

from ideal_divisors.constants import LOGGER_NAME
from ideal_divisors.oracle import SearchBudget
from ideal_divisors.sweep.sweep_model import SweepTable

log = logging.getLogger(LOGGER_NAME)

INT_VARS = ["f", "e", "generators_found"]
STR_VARS = ["kind", "u", "outcome", "generators"]
ATTRS = ["lam", "q_max", "max_support", "coeff_bound", "max_candidates"]


def convert_sweeptable_to_hdf(st: SweepTable, f):
    """Convert a SweepTable to an HDF file

    :param st: SweepTable
    :param f: hdf group
    :return: group with st added
    """
    if not isinstance(st, xarray.Dataset):
        raise ValueError(f"st is not an xarray.Dataset: {st}")
    if st.attrs.get("data_model") != "SweepTable":
        raise ValueError(f"st is not a SweepTable: {st}")

    f.attrs["data_model"] = "SweepTable"
    for attr in ATTRS:
        if attr in st.attrs:
            f.attrs[attr] = st.attrs[attr]
    f["data_prime"] = st["prime"].data
    for var in INT_VARS:
        f[f"data_{var}"] = st[var].data
    for var in STR_VARS:
        f[f"data_{var}"] = [
            numpy.bytes_(value, encoding="utf-8") for value in st[var].data
        ]
    return f


def convert_hdf_to_sweeptable(f):
    """Convert HDF root to a SweepTable

    :param f: hdf group
    :return: SweepTable
    """
    assert f.attrs["data_model"] == "SweepTable", "Not a SweepTable"

    budget = None
    if "max_support" in f.attrs:
        budget = SearchBudget(
            int(f.attrs["max_support"]),
            int(f.attrs["coeff_bound"]),
            int(f.attrs["max_candidates"]),
        )
    ints = {var: f[f"data_{var}"][()] for var in INT_VARS}
    strs = {
        var: [str(v, encoding="utf-8") for v in f[f"data_{var}"]]
        for var in STR_VARS
    }
    return SweepTable.constructor(
        int(f.attrs["lam"]),
        int(f.attrs["q_max"]),
        f["data_prime"][()],
        ints["f"],
        ints["e"],
        strs["kind"],
        strs["u"],
        ints["generators_found"],
        strs["outcome"],
        strs["generators"],
        budget=budget,
    )


def export_sweeptable_to_hdf5(
    st: Union[SweepTable, List[SweepTable]], filename
):
    """Export a SweepTable or list to HDF5 format

    :param st: SweepTable or list
    :param filename: Name of HDF5 file
    :return: None
    """
    if isinstance(st, xarray.Dataset) or not isinstance(
        st, collections.abc.Iterable
    ):
        st = [st]
    with h5py.File(filename, "w") as f:
        f.attrs["number_data_models"] = len(st)
        for i, table in enumerate(st):
            sf = f.create_group(f"SweepTable{i}")
            convert_sweeptable_to_hdf(table, sf)
        f.flush()
    log.info(
        "export_sweeptable_to_hdf5: wrote %d table(s) to %s", len(st), filename
    )


def import_sweeptable_from_hdf5(filename):
    """Import SweepTable(s) from HDF5 format

    :param filename: Name of HDF5 file
    :return: single SweepTable or list of SweepTables
    """
    with h5py.File(filename, "r") as f:
        ntables = f.attrs["number_data_models"]
        tables = [
            convert_hdf_to_sweeptable(f[f"SweepTable{i}"])
            for i in range(ntables)
        ]
        if ntables == 1:
            return tables[0]

        return tables
