"""Quotient of the graph union by its cell partition."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .model import graph_union
from .partition import GammaPartition, IndexSet


@dataclass(frozen=True)
class QuotientGraph:
    cells: tuple[IndexSet, ...]
    B: tuple[tuple[int, ...], ...]
    """``B[i][j]``: neighbours in cell ``j`` of each vertex of cell ``i``."""
    cell_names: tuple[tuple[str, ...], ...]
    cell_labels: tuple[str, ...]


def quotient_matrix(p: GammaPartition) -> QuotientGraph:
    cells = tuple(p.cells)
    if not cells:
        raise ValueError("partition has no cells")
    B = tuple(
        tuple(p.gamma(J) * (I & J != 0) - (I == J) for J in cells) for I in cells
    )
    c = p.collection
    return QuotientGraph(
        cells,
        B,
        tuple(tuple(c.index_names(J)) for J in cells),
        tuple(c.cell_label(J) for J in cells),
    )


def characteristic_matrix(p: GammaPartition) -> list[list[int]]:
    """n x k 0/1 matrix; column order is the canonical cell order."""
    return [[int(p.cell_of[i] == J) for J in p.cells] for i in range(p.n)]


def quotient_matrix_product(p: GammaPartition) -> list[list[Fraction]]:
    """``(C^T C)^-1 C^T A C`` in exact rational arithmetic."""
    C = characteristic_matrix(p)
    A = graph_union(p.collection).matrix()
    n, k = len(C), len(p.cells)
    CtA = [[sum(C[x][a] * A[x][y] for x in range(n)) for y in range(n)] for a in range(k)]
    CtAC = [[sum(CtA[a][y] * C[y][b] for y in range(n)) for b in range(k)] for a in range(k)]
    CtC = [[sum(C[x][a] * C[x][b] for x in range(n)) for b in range(k)] for a in range(k)]
    # C^T C is diagonal with the cell sizes
    return [[Fraction(CtAC[a][b], CtC[a][a]) for b in range(k)] for a in range(k)]


def export_quotient(q: QuotientGraph, format: str = "json") -> str:
    if format == "json":
        return json.dumps(
            {"cells": [list(names) for names in q.cell_names], "B": [list(row) for row in q.B]},
            separators=(",", ":"),
        )
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(q.cell_labels)
        writer.writerows(q.B)
        return buf.getvalue()
    if format == "dot":
        lines = ["digraph quotient {"]
        for i, label in enumerate(q.cell_labels):
            lines.append(f'  "{label}" [internal={q.B[i][i]}];')
        for i, row in enumerate(q.B):
            for j, weight in enumerate(row):
                if i != j and weight:
                    lines.append(
                        f'  "{q.cell_labels[i]}" -> "{q.cell_labels[j]}" [weight={weight}, label={weight}];'
                    )
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown quotient format {format!r}; expected json, dot or csv")


def characteristic_polynomial(M: list[list[int]]) -> list[int]:
    """Integer coefficients of det(xI - M), highest degree first (Faddeev-LeVerrier)."""
    n = len(M)
    coeffs = [1]
    N = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # N <- M N + c_{k-1} I, then c_k = -tr(M N) / k
        prev = coeffs[-1]
        N = [[sum(M[i][t] * N[t][j] for t in range(n)) + (prev if i == j else 0) for j in range(n)] for i in range(n)]
        trace = sum(M[i][t] * N[t][i] for i in range(n) for t in range(n))
        if trace % k:
            raise ArithmeticError("non-integral characteristic polynomial coefficient")
        coeffs.append(-trace // k)
    return coeffs


def divides(divisor: list[int], dividend: list[int]) -> bool:
    """Exact division test for a monic integer divisor (coefficients highest first)."""
    rem = list(dividend)
    d = len(divisor) - 1
    for i in range(len(rem) - d):
        q = rem[i]
        if q:
            for t, coeff in enumerate(divisor):
                rem[i + t] -= q * coeff
    return not any(rem[len(rem) - d :]) if d else True


def spectrum_contained(
    p: GammaPartition, method: str | None = None, exact_max_n: int = 12, tol: float = 1e-8
) -> bool:
    """Whether every eigenvalue of the quotient matrix is an eigenvalue of the adjacency matrix.

    ``method`` is ``"exact"`` (characteristic-polynomial divisibility over the
    integers) or ``"numeric"``; by default graphs with at most ``exact_max_n``
    nodes take the exact path.
    """
    if method is None:
        method = "exact" if p.n <= exact_max_n else "numeric"
    if method not in ("exact", "numeric"):
        raise ValueError(f"unknown method {method!r}")
    q = quotient_matrix(p)
    A = graph_union(p.collection).matrix()
    if method == "exact":
        return divides(characteristic_polynomial([list(r) for r in q.B]), characteristic_polynomial(A))
    sizes = np.array([p.gamma(J) for J in q.cells], dtype=float)
    root = np.sqrt(sizes)
    # diagonal similarity makes the quotient matrix symmetric
    S = np.array(q.B, dtype=float) * root[:, None] / root[None, :]
    quotient_eigs = np.linalg.eigvalsh((S + S.T) / 2)
    graph_eigs = np.linalg.eigvalsh(np.array(A, dtype=float))
    return all(np.min(np.abs(graph_eigs - lam)) <= tol for lam in quotient_eigs)

