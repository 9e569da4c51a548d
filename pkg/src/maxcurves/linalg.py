"""Exact dense linear algebra over a field tower."""

from __future__ import annotations

from .field_tower import FieldTower


def row_echelon(tower: FieldTower, rows) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and ascending pivot column list."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        piv = mat[r]
        inv = tower.inv(piv[c])
        for k in range(c, ncols):
            piv[k] = tower.mul(inv, piv[k])
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                row = mat[i]
                for k in range(c, ncols):
                    row[k] = tower.sub(row[k], tower.mul(f, piv[k]))
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def matrix_rank(tower: FieldTower, rows) -> int:
    return len(row_echelon(tower, rows)[1])


def kernel_vector(tower: FieldTower, rows, ncols: int) -> list[int] | None:
    """Deterministic nontrivial kernel vector of the row system, or None.

    The vector sets the first free column to 1, so repeated calls on the
    same matrix return identical witnesses.
    """
    red, pivots = row_echelon(tower, rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    if not free:
        return None
    f0 = free[0]
    v = [0] * ncols
    v[f0] = 1
    for ri, pc in enumerate(pivots):
        v[pc] = tower.neg(red[ri][f0])
    return v
