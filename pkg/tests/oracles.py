"""Independent dense-window oracles; they only read entries, never profiles."""

from fractions import Fraction

from rcfm.matrix import entry


def reach(*mats):
    """Padding that covers every band offset and patch position of the inputs."""
    pad = 0
    for A in mats:
        if A.band:
            pad = max(pad, max(abs(d) for d in A.band))
        pad = max(pad, A.patch.row_bound, A.patch.col_bound)
    return pad


def dense_product_entry(A, B, i, j, K):
    return sum((entry(A, i, k) * entry(B, k, j) for k in range(1, K + 1)), Fraction(0))


def dense_window(A, n, m=None):
    m = m or n
    return [[entry(A, i, j) for j in range(1, m + 1)] for i in range(1, n + 1)]


def matmul(X, Y):
    return [[sum((X[i][k] * Y[k][j] for k in range(len(Y))), Fraction(0)) for j in range(len(Y[0]))] for i in range(len(X))]
