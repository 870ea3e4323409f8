"""Non-HGP codes used as negative controls."""

from __future__ import annotations

import numpy as np

from hgp_robust.distance import CssPair


def rotated_surface_code(d: int) -> CssPair:
    """Rotated surface code on a ``d x d`` grid of data qubits (``q = row * d + col``).

    Face ``(i, j)`` sits between rows ``i, i+1`` and columns ``j, j+1``; bulk
    faces with ``i + j`` even are X checks, odd are Z checks. Weight-2 X checks
    run along the top and bottom edges, Z checks along the left and right.
    """
    if d < 2:
        raise ValueError("rotated surface code needs d >= 2")
    x_rows, z_rows = [], []

    def face(i, j):
        return [r * d + c for r in (i, i + 1) for c in (j, j + 1) if 0 <= r < d and 0 <= c < d]

    for i in range(d - 1):
        for j in range(d - 1):
            (x_rows if (i + j) % 2 == 0 else z_rows).append(face(i, j))
    for j in range(d - 1):
        for i in (-1, d - 1):
            if (i + j) % 2 == 0:
                x_rows.append(face(i, j))
    for i in range(d - 1):
        for j in (-1, d - 1):
            if (i + j) % 2 == 1:
                z_rows.append(face(i, j))

    def matrix(rows):
        m = np.zeros((len(rows), d * d), dtype=np.uint8)
        for s, qubits in enumerate(rows):
            m[s, qubits] = 1
        return m

    return CssPair(matrix(x_rows), matrix(z_rows))
