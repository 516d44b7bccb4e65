"""The worked [10,5,5] example over F_7 with m = n = 5."""
from .code import code_new
from .field import FieldCtx
from .rpoly import rpoly_from_standard

Q, M, N = 7, 5, 5

# standard-basis coefficients (a, b, c) = a + b v + c v^2, ascending in x
IOTA_STD = [(1, 0, 0)] * 5
ELL_STD = [(5, 1, 2), (2, 4, 4), (3, 6, 0), (4, 2, 6)]
THETA_STD = [(6, 0, 0), (1, 0, 0)]

ELL_COMPONENTS = ([5, 2, 3, 4], [1, 3, 2, 5], [6, 2, 4, 1])

G1 = [
    [1, 1, 1, 1, 1, 0, 0, 0, 0, 0],
    [5, 2, 3, 4, 0, 6, 1, 0, 0, 0],
    [0, 5, 2, 3, 4, 0, 6, 1, 0, 0],
    [4, 0, 5, 2, 3, 0, 0, 6, 1, 0],
    [3, 4, 0, 5, 2, 0, 0, 0, 6, 1],
]
G2 = [
    [1, 1, 1, 1, 1, 0, 0, 0, 0, 0],
    [1, 3, 2, 5, 0, 6, 1, 0, 0, 0],
    [0, 1, 3, 2, 5, 0, 6, 1, 0, 0],
    [5, 0, 1, 3, 2, 0, 0, 6, 1, 0],
    [2, 5, 0, 1, 3, 0, 0, 0, 6, 1],
]
G3 = [
    [1, 1, 1, 1, 1, 0, 0, 0, 0, 0],
    [6, 2, 4, 1, 0, 6, 1, 0, 0, 0],
    [0, 6, 2, 4, 1, 0, 6, 1, 0, 0],
    [1, 0, 6, 2, 4, 0, 0, 6, 1, 0],
    [4, 1, 0, 6, 2, 0, 0, 0, 6, 1],
]
MATRICES = (G1, G2, G3)
PARAMETERS = (10, 5, 5)


def example1_code():
    ctx = FieldCtx(Q)
    return code_new(
        ctx,
        M,
        N,
        rpoly_from_standard(ctx, IOTA_STD),
        rpoly_from_standard(ctx, ELL_STD),
        rpoly_from_standard(ctx, THETA_STD),
    )
