"""Hand-transcribed reference matrices for Gamma_1 and its level 1+i subgroup.

Cohomological conventions: coboundaries restrict, and the degree-zero Hecke
matrices act on H^0 in the basis dual to the standard H_0 basis.
"""

from .linalg import IntMatrix

# d^0 for Gamma_1; columns P(4) Q(3) R(4) S(3), rows PQ(3) QR(2) RS(2) SP(3)
GAMMA1_D0 = IntMatrix.from_rows([
    [-1, 0, 0, -1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, -1, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, -1, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, -1, 0, -1, 1, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, -1, -1, 0, 0, 1, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, -1, 0, -1, 0, 1, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, -1, 0, -1, 0, 1, 1],
    [1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0],
    [0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1],
    [0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1],
])

GAMMA1_D1 = IntMatrix.from_rows([[1] * 10])

# d^0 for K(1+i); columns P(4) Q(2) R(2) g[1].R(4) S(2)
K_D0 = IntMatrix.from_rows([
    [-1, -1, -1, -1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, -1, -1, 1, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, -1, 0, 0, 0, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, -1, 0, -1, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, -1, 0, 1],
    [1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1],
])

# d^1 for K(1+i); rows E, s.E, g[1].E
K_D1 = IntMatrix.from_rows([
    [1, 1, 0, 0, 1, 0, 0, 1],
    [1, 1, 0, 0, 1, 0, 0, 1],
    [1, 0, 1, 1, 0, 1, 1, 1],
])

# restriction chain map in degree 0; rows K basis, columns Gamma_1 basis
F0 = IntMatrix.from_rows([
    [1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
])

# restriction chain map in degree 1; rows PQ QR g[1].QR(2) RS g[1].RS(2) SP
F1 = IntMatrix.from_rows([
    [1, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 1],
])

# degree-zero restriction H^0(Gamma_1) -> H^0(K)
M1 = IntMatrix.from_rows([
    [1, 2, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [0, 1, 1, 1, 0, 0],
    [1, 1, 2, -1, 1, -1],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
])

# degree-zero corestriction H^0(K) -> H^0(Gamma_1)
M2 = IntMatrix.from_rows([
    [1, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 1, 0],
    [1, 1, 1, 1, 0, -1, 0, 1],
])

# Hecke operator of diag(1+i, 1) on H^0(Gamma_1)
HECKE_1PI = IntMatrix.from_rows([
    [1, 2, 0, 0, 0, 0],
    [1, 2, 0, 0, 0, 0],
    [0, 0, 3, 0, 0, 0],
    [0, 1, 1, 1, 0, 0],
    [1, 1, 2, -1, 2, -1],
    [0, 1, 1, 1, -1, 2],
])

# x (x - 3)^3 (x - 1)^2, expanded by hand
HECKE_1PI_CHARPOLY = [1, -11, 46, -90, 81, -27, 0]
