"""Double cyclic codes over R = F_q + vF_q + v^2F_q with v^3 = v."""
from .field import FieldCtx, Fq
from .poly import Poly
from .ring import RElem
from .rpoly import RPoly

__all__ = ["FieldCtx", "Fq", "Poly", "RElem", "RPoly"]
__version__ = "0.1.0"
