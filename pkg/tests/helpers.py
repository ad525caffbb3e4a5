"""Test-side oracles, kept independent of the library's echelon engine."""

from __future__ import annotations

from gradedosp.algebras import AlgebraSpec, Family, j_matrix
from gradedosp.gmatrix import GradedMatrix, elem
from gradedosp.grading import trace_sign
from gradedosp.scalars import ONE, ZERO, Scalar


def dense_rows(matrices) -> list[list[Scalar]]:
    rows = []
    for mat in matrices:
        m = mat.size
        row = [ZERO] * (m * m)
        for (i, j), v in mat.items():
            row[(i - 1) * m + (j - 1)] = v
        rows.append(row)
    return rows


def dense_rank(rows: list[list[Scalar]]) -> int:
    """Textbook forward elimination on dense Scalar rows."""
    work = [list(r) for r in rows if any(r)]
    if not work:
        return 0
    cols = len(work[0])
    rank = 0
    for col in range(cols):
        piv = None
        for r in range(rank, len(work)):
            if work[r][col]:
                piv = r
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = work[rank][col].inv()
        for r in range(rank + 1, len(work)):
            factor = work[r][col]
            if not factor:
                continue
            factor = factor * inv
            prow = work[rank]
            row = work[r]
            for c in range(col, cols):
                if prow[c]:
                    row[c] = row[c] - factor * prow[c]
        rank += 1
        if rank == len(work):
            break
    return rank


def bruteforce_algebra_dim(spec: AlgebraSpec) -> int:
    """dim of the defining condition's solution space, via the rank of the
    constraint map evaluated entrywise on matrix units (no kernel code)."""
    sig = spec.signature()
    m = spec.size
    if spec.family is Family.SL:
        images = []
        for p in range(1, m + 1):
            for q in range(1, m + 1):
                row = [ZERO]
                if p == q:
                    row = [ONE if trace_sign(sig[p - 1]) > 0 else -ONE]
                images.append(row)
        return m * m - dense_rank(images)
    j = j_matrix(spec)
    images = []
    for p in range(1, m + 1):
        for q in range(1, m + 1):
            e = elem(sig, p, q)
            images.append((e.graded_transpose() @ j) + (j @ e))
    return m * m - dense_rank(dense_rows(images))


def embed_middle_zero(mat: GradedMatrix, spec_d: AlgebraSpec) -> GradedMatrix:
    """Re-embed an ospD-layout matrix into the ospB layout of the same
    parameters by inserting a zero middle row and column."""
    mid = 2 * (spec_d.m1 + spec_d.m2) + 1
    spec_b = AlgebraSpec(Family.OSP_B, spec_d.m1, spec_d.m2, spec_d.n1, spec_d.n2)
    entries = {}
    for (i, j), v in mat.items():
        entries[(i if i < mid else i + 1, j if j < mid else j + 1)] = v
    return GradedMatrix(spec_b.signature(), entries)


def osp_grid(max_m=2, max_n=2):
    """Every ospB parameter tuple with m1+m2 <= max_m and n1+n2 <= max_n."""
    specs = []
    for m1 in range(max_m + 1):
        for m2 in range(max_m + 1 - m1):
            for n1 in range(max_n + 1):
                for n2 in range(max_n + 1 - n1):
                    specs.append(AlgebraSpec(Family.OSP_B, m1, m2, n1, n2))
    return specs
