"""Concrete instances used by the reproduction scripts and the test-suite."""
from __future__ import annotations

from .functions import FunctionSpec, linear, table_function, table_from_callable
from .ring import RingParams, hom_weight

Z4 = RingParams(2)

# Three messages in Z_4 at mutual distances d(0,1)=1, d(0,3)=1, d(1,3)=2.
THREE_POINT_MESSAGES = ((0,), (1,), (3,))


def three_value_function() -> FunctionSpec:
    """f: Z_4 -> {0,1,2} with f(0)=0, f(1)=f(2)=1, f(3)=2.

    Locally (3, rho)-bounded for every rho (|Im f| = 3), contiguous under the
    natural order, and distinct on :data:`THREE_POINT_MESSAGES`.
    """
    return table_function(Z4, 1, [0, 1, 1, 2], name="three-value")


def clipped_weight(ring: RingParams = Z4, k: int = 2, cap: int = 3) -> FunctionSpec:
    """min(w_h(x), cap): over Z_4^2 with cap 3 this is locally (4, 2)-bounded."""
    return table_from_callable(ring, k, lambda x: min(hom_weight(x, ring), cap),
                               name=f"clipped-weight:{cap}")


EXAMPLE_LINEAR_MATRIX = ((1, 1, 0), (0, 1, 1))
EXAMPLE_GENERATOR = ((2, 2, 0), (0, 2, 2))


def example_linear() -> FunctionSpec:
    """f(u1, u2, u3) = (u1 + u2, u2 + u3) over Z_4."""
    return linear(Z4, EXAMPLE_LINEAR_MATRIX)
