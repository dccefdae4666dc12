"""Named fixtures exposed to the command line and the verification suite."""

from __future__ import annotations

from .algebra import Subspace
from .linalg import frac, unit_vec
from . import filiform as _f

CATALOG_NAMES = (
    "Ln",
    "LC",
    "heis3",
    "dim6",
    "irreg6",
    "heis6_2center",
    "so3",
    "sl2",
    "solv_rot",
    "solv_exp",
)


def catalog_entry(name: str, params=()):
    """Build a catalog fixture: (algebra, metric or None, named subspaces).

    ``Ln`` takes the dimension; ``LC`` takes the list of nonzero rescaling
    coefficients; the rest take no parameters.
    """
    params = list(params)
    if name == "Ln":
        if len(params) != 1:
            raise ValueError("Ln requires exactly one parameter: the dimension")
        n = int(params[0])
        g = _f.standard_filiform(n)
        even = Subspace(n, [unit_vec(n, i) for i in range(1, n, 2)])
        centre = Subspace(n, [unit_vec(n, n - 1)])
        return g, None, {"even": even, "center": centre}
    if name == "LC":
        if not params:
            raise ValueError("LC requires the coefficients c_2..c_{n-1}")
        g = _f.filiform_LC([frac(p) for p in params])
        n = g.dim
        even = Subspace(n, [unit_vec(n, i) for i in range(1, n, 2)])
        return g, None, {"even": even}
    if params:
        raise ValueError("catalog entry %r takes no parameters" % name)
    if name == "heis3":
        return _f.heis3(), None, {}
    if name == "dim6":
        return _f.dim6_example(), None, {}
    if name == "irreg6":
        data = _f.irreg6_example()
        h = Subspace(6, data.subalgebra.rows)
        return data.algebra, data.metric, {"h": h}
    if name == "heis6_2center":
        return _f.heis6_2center(), None, {}
    if name == "so3":
        return _f.so3(), None, {}
    if name == "sl2":
        return _f.sl2(), None, {}
    if name == "solv_rot":
        g = _f.solv_rot()
        return g, None, {"h": Subspace(3, [unit_vec(3, 1), unit_vec(3, 2)])}
    if name == "solv_exp":
        return _f.solv_exp(), None, {}
    raise ValueError(
        "unknown catalog entry %r (known: %s)" % (name, ", ".join(CATALOG_NAMES))
    )
