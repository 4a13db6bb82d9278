"""This module contains an encode function to convert xarray.Dataset based
tables (SweepTable) and the plain report models into msgpack bytes. Decode
returns plain Python / xarray objects, not the original classes."""

import msgpack
import msgpack_numpy
import xarray

from ideal_divisors.oracle import OracleReport, SearchResult


def _model_encoder(obj):
    """Custom encoder for the package's data models.

    Classes that can be encoded currently:
    * xarray.Dataset (specifically SweepTable)
    * ideal_divisors.oracle.SearchResult
    * ideal_divisors.oracle.OracleReport
    * Most numpy arrays and scalars
    """
    if isinstance(obj, xarray.Dataset):
        return obj.to_dict(data="array")

    if isinstance(obj, SearchResult):
        return obj.to_dict()

    if isinstance(obj, OracleReport):
        return {
            "origin": obj.origin,
            "context": obj.context,
            "data": obj.data,
        }

    # Default to attempting to convert assuming numpy data
    return msgpack_numpy.encode(obj)


def encode(model) -> bytes:
    """Encode a SweepTable, SearchResult or OracleReport into msgpack
    bytes."""
    return msgpack.packb(model, default=_model_encoder)


def decode(bytes_model: bytes):
    """Decode msgpack bytes; datasets come back as xarray.Dataset and
    reports as dicts."""
    data_raw = msgpack.unpackb(bytes_model, object_hook=msgpack_numpy.decode)
    if isinstance(data_raw, dict) and "data_vars" in data_raw:
        return xarray.Dataset.from_dict(data_raw)
    return data_raw
