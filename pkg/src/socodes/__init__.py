"""Self-orthogonal trace codes over odd-characteristic finite fields.

Build the code of a quadric defining set, compute its weight distribution in
closed form or by enumeration, and certify the derived dual, quantum, LCD
and locality properties.
"""

__version__ = "0.1.0"

from .ff import FieldTower, Params, make_tower
from .code import Code, build_code
from .wdist import WeightDistribution, pless_dual_counts, wdist_closed, wdist_enumerate

__all__ = [
    "__version__",
    "FieldTower",
    "Params",
    "make_tower",
    "Code",
    "build_code",
    "WeightDistribution",
    "pless_dual_counts",
    "wdist_closed",
    "wdist_enumerate",
]
