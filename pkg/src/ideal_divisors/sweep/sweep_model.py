# pylint: disable=too-many-ancestors,too-many-arguments

"""
Sweep table model: the census of ideal prime divisors of every rational
prime up to a bound.
"""

import json

import xarray

from ideal_divisors.oracle import BOUNDED_EVIDENCE

NOT_FOUND = "none"


def _split_ints(text):
    """ "4,14" -> [4, 14]; "" -> []"""
    return [int(v) for v in text.split(",")] if text else []


class SweepTable(xarray.Dataset):
    """
    One row per rational prime q <= q_max for a fixed exponent λ

    Here is an example::

        <xarray.SweepTable>
        Dimensions:           (prime: 8)
        Coordinates:
          * prime             (prime) int64 2 3 5 7 11 13 17 19
        Data variables:
            f                 (prime) int64 4 4 1 4 1 4 4 2
            e                 (prime) int64 1 1 1 1 4 1 1 2
            kind              (prime) <U8 'inert' 'inert' ... 'partial'
            u                 (prime) <U8 '1' '2' '' '6' ... '4,14'
            divisors          (prime) int64 1 1 1 1 4 1 1 2
            generators_found  (prime) int64 1 1 1 1 4 1 1 2
            outcome           (prime) <U15 'found' 'found' ... 'found'
            generators        (prime) <U39 '2,0,0,0,0' ... '...'
        Attributes:
            data_model:      SweepTable
            lam:             5
            q_max:           20
            max_support:     3
            coeff_bound:     3
            max_candidates:  2000000

    u holds the canonical congruence assignment, comma separated.
    generators holds one coefficient list per divisor, separated by ";",
    with "none" where the search found nothing.
    """

    __slots__ = ()

    def __init__(
        self,
        data_vars=None,
        coords=None,
        attrs=None,
    ):
        super().__init__(data_vars, coords=coords, attrs=attrs)

    @classmethod
    def constructor(
        cls,
        lam,
        q_max,
        primes,
        f,
        e,
        kind,
        u,
        generators_found,
        outcome,
        generators,
        budget=None,
    ):
        """
        SweepTable from per-prime columns

        :param lam: odd prime λ
        :param q_max: bound on the primes
        :param primes: the rational primes, increasing
        :param f: residue degrees
        :param e: numbers of divisors
        :param kind: decomposition labels
        :param u: congruence assignments as strings
        :param generators_found: number of divisors with a generator
        :param outcome: search outcome per prime
        :param generators: generator strings per prime
        :param budget: SearchBudget used for the searches
        """
        coords = {"prime": list(primes)}
        dims = ["prime"]

        datavars = {}
        datavars["f"] = xarray.DataArray(f, coords=coords, dims=dims)
        datavars["e"] = xarray.DataArray(e, coords=coords, dims=dims)
        datavars["kind"] = xarray.DataArray(kind, coords=coords, dims=dims)
        datavars["u"] = xarray.DataArray(u, coords=coords, dims=dims)
        datavars["divisors"] = xarray.DataArray(e, coords=coords, dims=dims)
        datavars["generators_found"] = xarray.DataArray(
            generators_found, coords=coords, dims=dims
        )
        datavars["outcome"] = xarray.DataArray(
            outcome, coords=coords, dims=dims
        )
        datavars["generators"] = xarray.DataArray(
            generators, coords=coords, dims=dims
        )

        attrs = {}
        attrs["data_model"] = "SweepTable"
        attrs["lam"] = lam
        attrs["q_max"] = q_max
        if budget is not None:
            attrs["max_support"] = budget.max_support
            attrs["coeff_bound"] = budget.coeff_bound
            attrs["max_candidates"] = budget.max_candidates

        return cls(datavars, coords=coords, attrs=attrs)

    def __sizeof__(self):
        """Override default method to return size of dataset
        :return: int
        """
        return int(self.nbytes)


@xarray.register_dataset_accessor("sweeptable_acc")
class SweepTableAccessor:
    """Convenience methods to render a SweepTable"""

    def __init__(self, xarray_obj):
        self._obj = xarray_obj

    @property
    def nprimes(self):
        """Number of rows"""
        return len(self._obj["prime"])

    def rows(self):
        """
        Rows as JSON-ready dicts, in increasing q

        :return: list of dict
        """
        table = self._obj
        out = []
        for i in range(self.nprimes):
            gens = str(table["generators"].data[i])
            row = {
                "q": int(table["prime"].data[i]),
                "f": int(table["f"].data[i]),
                "e": int(table["e"].data[i]),
                "kind": str(table["kind"].data[i]),
                "u": _split_ints(str(table["u"].data[i])),
                "divisors": int(table["divisors"].data[i]),
                "generatorsFound": int(table["generators_found"].data[i]),
                "outcome": str(table["outcome"].data[i]),
                "generators": [
                    None if g == NOT_FOUND else _split_ints(g)
                    for g in gens.split(";")
                ],
            }
            if row["generatorsFound"] < row["divisors"]:
                row["evidence"] = BOUNDED_EVIDENCE
            out.append(row)
        return out

    def to_json_lines(self):
        """One JSON object per row, newline separated"""
        return "\n".join(
            json.dumps(row, separators=(",", ":")) for row in self.rows()
        )

    def to_text(self):
        """Fixed-width text table rendered by pandas"""
        table = self._obj
        frame = table.to_dataframe()
        header = (
            f"lambda={table.attrs['lam']} q_max={table.attrs['q_max']}"
        )
        if "max_support" in table.attrs:
            header += (
                f" support={table.attrs['max_support']}"
                f" bound={table.attrs['coeff_bound']}"
            )
        footer = ""
        if any("evidence" in row for row in self.rows()):
            footer = f"\nmissing generators are {BOUNDED_EVIDENCE} only"
        return header + "\n" + frame.to_string() + footer
