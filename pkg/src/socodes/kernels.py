"""Hot-loop dispatch: the compiled core when importable, numpy otherwise.

Set ``SOCODES_PURE_PYTHON=1`` to force the numpy implementations.  Both
backends expose the same functions and return identical results.
"""

from __future__ import annotations

import os

from . import _kernels_py as python_backend

compiled_backend = None
if os.environ.get("SOCODES_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as compiled_backend  # type: ignore[no-redef]
    except ImportError:
        compiled_backend = None

_active = compiled_backend or python_backend
BACKEND = "compiled" if compiled_backend is not None else "python"


def get_backend(name: str | None = None):
    """Module implementing the kernels: ``"compiled"``, ``"python"`` or the active one."""
    if name is None:
        return _active
    if name == "python":
        return python_backend
    if name == "compiled":
        if compiled_backend is None:
            raise ImportError("compiled kernels are not built")
        return compiled_backend
    raise ValueError(f"unknown backend {name!r}")


def weight_histogram(G, field, first_symbols=None, backend: str | None = None):
    """Weight histogram of the code generated by G (compact indices over ``field``)."""
    impl = get_backend(backend)
    return impl.weight_histogram(G, field.add, field.mul, field.neg, field.inv, field.order, first_symbols)


def dependent_triples(cols, field, backend: str | None = None) -> int:
    impl = get_backend(backend)
    return int(impl.dependent_triples(cols, field.add, field.mul, field.neg, field.inv, field.order))
