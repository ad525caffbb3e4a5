"""Graded square matrices over Q(sqrt 2).

Entries are stored sparsely (only nonzeros), semantics are dense. A matrix
carries a signature assigning a degree to each index; the position (i, j)
has degree d(i) + d(j), and a matrix is homogeneous when all its nonzero
entries sit at positions of one degree.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .grading import Degree, Signature, deg_add, dot, trace_sign
from .scalars import ONE, ZERO, Scalar

Position = tuple[int, int]


class GradedMatrix:
    """Immutable-by-convention sparse matrix with a degree signature."""

    __slots__ = ("signature", "_entries")

    def __init__(self, signature: Signature, entries=None):
        self.signature = tuple(signature)
        m = len(self.signature)
        if m == 0:
            raise ValueError("signature must be nonempty")
        cleaned: dict[Position, Scalar] = {}
        if entries:
            items = entries.items() if isinstance(entries, dict) else entries
            for (i, j), value in items:
                if not (1 <= i <= m and 1 <= j <= m):
                    raise IndexError(f"position ({i}, {j}) outside 1..{m}")
                if not isinstance(value, Scalar):
                    value = Scalar(value)
                if value:
                    cleaned[(i, j)] = value
        self._entries = cleaned

    @classmethod
    def _make(cls, signature: Signature, entries: dict[Position, Scalar]) -> GradedMatrix:
        # Internal fast path: entries already validated and zero-pruned.
        out = object.__new__(cls)
        out.signature = signature
        out._entries = entries
        return out

    @classmethod
    def zero(cls, signature: Signature) -> GradedMatrix:
        return cls(signature)

    @classmethod
    def identity(cls, signature: Signature) -> GradedMatrix:
        return cls(signature, {(i, i): ONE for i in range(1, len(signature) + 1)})

    # -- inspection -------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.signature)

    def entry(self, i: int, j: int) -> Scalar:
        return self._entries.get((i, j), ZERO)

    def items(self) -> Iterator[tuple[Position, Scalar]]:
        return iter(self._entries.items())

    def is_zero(self) -> bool:
        return not self._entries

    def position_degree(self, i: int, j: int) -> Degree:
        return deg_add(self.signature[i - 1], self.signature[j - 1])

    def degree_of(self) -> Optional[Degree]:
        """The common degree of all nonzero entries; (0,0) for the zero
        matrix by convention; None when the matrix is not homogeneous."""
        if not self._entries:
            return (0, 0)
        sig = self.signature
        degree = None
        for i, j in self._entries:
            d = deg_add(sig[i - 1], sig[j - 1])
            if degree is None:
                degree = d
            elif d != degree:
                return None
        return degree

    def homogeneous_parts(self) -> dict[Degree, GradedMatrix]:
        """Split into the four graded components (all four always present)."""
        sig = self.signature
        parts: dict[Degree, dict[Position, Scalar]] = {
            (0, 0): {}, (1, 1): {}, (1, 0): {}, (0, 1): {},
        }
        for (i, j), v in self._entries.items():
            parts[deg_add(sig[i - 1], sig[j - 1])][(i, j)] = v
        return {d: GradedMatrix._make(sig, e) for d, e in parts.items()}

    # -- linear structure --------------------------------------------------

    def _check_compatible(self, other: GradedMatrix) -> None:
        if not isinstance(other, GradedMatrix):
            raise TypeError(f"expected GradedMatrix, got {type(other).__name__}")
        if self.signature != other.signature:
            raise ValueError("signature mismatch")

    def __add__(self, other: GradedMatrix) -> GradedMatrix:
        self._check_compatible(other)
        acc = dict(self._entries)
        for pos, v in other._entries.items():
            cur = acc.get(pos)
            s = v if cur is None else cur + v
            if s:
                acc[pos] = s
            else:
                acc.pop(pos, None)
        return GradedMatrix._make(self.signature, acc)

    def __sub__(self, other: GradedMatrix) -> GradedMatrix:
        self._check_compatible(other)
        acc = dict(self._entries)
        for pos, v in other._entries.items():
            cur = acc.get(pos)
            s = -v if cur is None else cur - v
            if s:
                acc[pos] = s
            else:
                acc.pop(pos, None)
        return GradedMatrix._make(self.signature, acc)

    def __neg__(self) -> GradedMatrix:
        return GradedMatrix._make(
            self.signature, {pos: -v for pos, v in self._entries.items()}
        )

    def scale(self, factor: Scalar | int) -> GradedMatrix:
        if not isinstance(factor, Scalar):
            factor = Scalar(factor)
        if not factor:
            return GradedMatrix._make(self.signature, {})
        return GradedMatrix._make(
            self.signature, {pos: factor * v for pos, v in self._entries.items()}
        )

    def __rmul__(self, factor) -> GradedMatrix:
        if isinstance(factor, (Scalar, int)):
            return self.scale(factor)
        return NotImplemented

    def __matmul__(self, other: GradedMatrix) -> GradedMatrix:
        self._check_compatible(other)
        rows = _rows_of(other)
        acc: dict[Position, Scalar] = {}
        for (i, j), v in self._entries.items():
            hits = rows.get(j)
            if not hits:
                continue
            for l, w in hits:
                key = (i, l)
                cur = acc.get(key)
                s = v * w if cur is None else cur + v * w
                if s:
                    acc[key] = s
                else:
                    acc.pop(key, None)
        return GradedMatrix._make(self.signature, acc)

    # -- graded operations ---------------------------------------------------

    def graded_transpose(self) -> GradedMatrix:
        """Degree-aware transpose from the dual-space pairing.

        The entry at (i, j) of position degree g moves to (j, i) with sign
        (-1)^{dot(g, d(i))}. On the gl block layout this reproduces the
        familiar block sign table; defined entrywise it works for any
        index ordering, which the orthosymplectic layout needs.
        """
        sig = self.signature
        out: dict[Position, Scalar] = {}
        for (i, j), v in self._entries.items():
            g = deg_add(sig[i - 1], sig[j - 1])
            out[(j, i)] = -v if dot(g, sig[i - 1]) else v
        return GradedMatrix._make(sig, out)

    def supertrace(self) -> Scalar:
        """Signed trace: +1 on diagonal degrees (0,0)/(1,1), -1 on the rest."""
        total = ZERO
        sig = self.signature
        for (i, j), v in self._entries.items():
            if i == j:
                total = total + v if trace_sign(sig[i - 1]) > 0 else total - v
        return total

    # -- equality / presentation ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return self.signature == other.signature and self._entries == other._entries

    __hash__ = None  # mutable container inside

    def __repr__(self) -> str:
        body = ", ".join(
            f"({i},{j}): {v}" for (i, j), v in sorted(self._entries.items())
        )
        return f"GradedMatrix(size={self.size}, {{{body}}})"

    # -- serialization -----------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "signature": [list(d) for d in self.signature],
            "entries": [
                [i, j, *v.to_json()] for (i, j), v in sorted(self._entries.items())
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> GradedMatrix:
        signature = tuple((int(a), int(b)) for a, b in data["signature"])
        if len(signature) != int(data["size"]):
            raise ValueError("signature length does not match size")
        entries = {}
        for i, j, p, q, r, s in data["entries"]:
            entries[(int(i), int(j))] = Scalar.from_json([p, q, r, s])
        return cls(signature, entries)


def elem(signature: Signature, i: int, j: int) -> GradedMatrix:
    """The matrix with a single 1 at (i, j); homogeneous of degree d(i)+d(j)."""
    m = len(signature)
    if not (1 <= i <= m and 1 <= j <= m):
        raise IndexError(f"position ({i}, {j}) outside 1..{m}")
    return GradedMatrix._make(tuple(signature), {(i, j): ONE})


def _rows_of(mat: GradedMatrix) -> dict[int, list[tuple[int, Scalar]]]:
    rows: dict[int, list[tuple[int, Scalar]]] = {}
    for (k, l), w in mat._entries.items():
        rows.setdefault(k, []).append((l, w))
    return rows


def commutator(a: GradedMatrix, b: GradedMatrix) -> GradedMatrix:
    """Plain AB - BA, ignoring the grading."""
    return (a @ b) - (b @ a)


def anticommutator(a: GradedMatrix, b: GradedMatrix) -> GradedMatrix:
    """Plain AB + BA, ignoring the grading."""
    return (a @ b) + (b @ a)


def graded_bracket(a: GradedMatrix, b: GradedMatrix) -> GradedMatrix:
    """The bracket x*y - (-1)^{dot(dx,dy)} y*x, extended bilinearly.

    Computed entrywise: each pair of entries contributes with the sign of
    its position degrees, which agrees with splitting both operands into
    homogeneous parts and bracketing part by part.
    """
    a._check_compatible(b)
    sig = a.signature
    acc: dict[Position, Scalar] = {}

    rows_b = _rows_of(b)
    for (i, j), v in a._entries.items():
        hits = rows_b.get(j)
        if not hits:
            continue
        for l, w in hits:
            key = (i, l)
            cur = acc.get(key)
            s = v * w if cur is None else cur + v * w
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)

    rows_a: dict[int, list[tuple[int, Scalar, Degree]]] = {}
    for (i, j), v in a._entries.items():
        rows_a.setdefault(i, []).append((j, v, deg_add(sig[i - 1], sig[j - 1])))

    for (k, l), w in b._entries.items():
        hits = rows_a.get(l)
        if not hits:
            continue
        beta = deg_add(sig[k - 1], sig[l - 1])
        for j2, v, alpha in hits:
            term = w * v
            if not dot(alpha, beta):
                term = -term
            key = (k, j2)
            cur = acc.get(key)
            s = term if cur is None else cur + term
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
    return GradedMatrix._make(sig, acc)
