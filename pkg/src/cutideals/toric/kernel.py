"""Backend selection for the completion kernel.

The compiled extension is used when it imports; setting the environment
variable ``CUTIDEALS_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

import os

from . import _pykernel

OK = _pykernel.OK
DEGREE_LIMIT = _pykernel.DEGREE_LIMIT
PAIR_LIMIT = _pykernel.PAIR_LIMIT
TIME_LIMIT = _pykernel.TIME_LIMIT

STATUS_NAMES = {OK: "ok", DEGREE_LIMIT: "degree", PAIR_LIMIT: "pairs", TIME_LIMIT: "time"}

_backend = _pykernel
BACKEND = "python"
if os.environ.get("CUTIDEALS_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernel as _backend  # noqa: F811

        BACKEND = "cython"
    except ImportError:
        pass


def backends():
    """Mapping name -> module for every importable backend."""
    out = {"python": _pykernel}
    try:
        from . import _ckernel

        out["cython"] = _ckernel
    except ImportError:
        pass
    return out


def complete(gens, nvars, kind, block=0, max_degree=0, max_pairs=0, deadline=0.0, backend=None):
    mod = _backend if backend is None else backends()[backend]
    return mod.complete(gens, nvars, kind, block, max_degree, max_pairs, deadline)


def normal_form(leads, tails, mono, backend=None):
    mod = _backend if backend is None else backends()[backend]
    return mod.normal_form(leads, tails, mono)
