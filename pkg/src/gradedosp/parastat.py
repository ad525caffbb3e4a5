"""Creation/annihilation generators inside the matrix algebras, and
exhaustive verification of the triple relations they satisfy.

Two families of parafermions and two families of parabosons live inside
the ospB algebras; the A-type generators live inside sl(1,0|n1,n2). Every
relation family is checked over its complete admissible index range and
all sign tuples, with exact matrix equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterator, Optional

from .algebras import AlgebraSpec, Family
from .gmatrix import GradedMatrix, anticommutator, commutator, elem, graded_bracket
from .grading import dot, signature_gl
from .report import CheckReport
from .scalars import SQRT2

SIGNS = (1, -1)


@dataclass
class GeneratorSet:
    """Paired creation (+) and annihilation (-) operators, two families.

    Generators 1..family_split belong to the first family, the rest to
    the second; the two families carry different degrees.
    """

    spec: AlgebraSpec
    kind: str  # "parafermion" | "paraboson" | "palev"
    creators: list[GradedMatrix]
    annihilators: list[GradedMatrix]
    family_split: int

    @property
    def count(self) -> int:
        return len(self.creators)

    def get(self, index: int, sign: int) -> GradedMatrix:
        """Generator number `index` (1-based); sign +1 creator, -1 annihilator."""
        if not 1 <= index <= self.count:
            raise IndexError(f"generator index {index} outside 1..{self.count}")
        return self.creators[index - 1] if sign > 0 else self.annihilators[index - 1]

    def family_of(self, index: int) -> int:
        return 1 if index <= self.family_split else 2

    def label(self, index: int, sign: int) -> str:
        tag = {"parafermion": "f", "paraboson": "b", "palev": "a"}[self.kind]
        return f"{tag}{index}{'+' if sign > 0 else '-'}"

    def labelled(self) -> list[tuple[str, GradedMatrix]]:
        out = []
        for i in range(1, self.count + 1):
            for sign in SIGNS:
                out.append((self.label(i, sign), self.get(i, sign)))
        return out


class RelationFamily(Enum):
    FF = "FF"
    BB_SAME = "BB_same"
    BB_MIXED = "BB_mixed"
    PF_FAMILY1 = "PF_family1"
    PF_FAMILY2 = "PF_family2"
    A_SAME = "A_same"
    A_MIXED = "A_mixed"

    @property
    def sign_arity(self) -> int:
        return 0 if self in (RelationFamily.A_SAME, RelationFamily.A_MIXED) else 3


def parafermion_ops(spec: AlgebraSpec) -> GeneratorSet:
    """The 2(m1+m2) parafermion operators of an ospB algebra.

    f_i^+ = sqrt2 (e_{2k+1, i} - e_{k+i, 2k+1}) and
    f_i^- = sqrt2 (e_{i, 2k+1} - e_{2k+1, k+i}) with k = m1+m2;
    degrees (0,0) for i <= m1 and (1,1) above.
    """
    if spec.family is not Family.OSP_B:
        raise ValueError("parafermion operators live in the ospB family")
    k = spec.m1 + spec.m2
    if k == 0:
        raise ValueError("no parafermions: m1 + m2 = 0")
    sig = spec.signature()
    mid = 2 * k + 1
    creators = []
    annihilators = []
    for i in range(1, k + 1):
        creators.append((elem(sig, mid, i) - elem(sig, k + i, mid)).scale(SQRT2))
        annihilators.append((elem(sig, i, mid) - elem(sig, mid, k + i)).scale(SQRT2))
    return GeneratorSet(spec, "parafermion", creators, annihilators, spec.m1)


def paraboson_ops(spec: AlgebraSpec) -> GeneratorSet:
    """The 2(n1+n2) paraboson operators of an ospB algebra.

    b_i^+ = sqrt2 (e_{2k+1, 2k+1+n+i} + e_{2k+1+i, 2k+1}) and
    b_i^- = sqrt2 (e_{2k+1, 2k+1+i} - e_{2k+1+n+i, 2k+1}) with n = n1+n2;
    degrees (1,0) for i <= n1 and (0,1) above.
    """
    if spec.family is not Family.OSP_B:
        raise ValueError("paraboson operators live in the ospB family")
    n = spec.n1 + spec.n2
    if n == 0:
        raise ValueError("no parabosons: n1 + n2 = 0")
    sig = spec.signature()
    mid = 2 * (spec.m1 + spec.m2) + 1
    creators = []
    annihilators = []
    for i in range(1, n + 1):
        creators.append((elem(sig, mid, mid + n + i) + elem(sig, mid + i, mid)).scale(SQRT2))
        annihilators.append((elem(sig, mid, mid + i) - elem(sig, mid + n + i, mid)).scale(SQRT2))
    return GeneratorSet(spec, "paraboson", creators, annihilators, spec.n1)


def palev_ops(n1: int, n2: int) -> GeneratorSet:
    """The A-type generators a_i^+ = e_{i+1,1}, a_i^- = e_{1,i+1}
    inside sl(1,0|n1,n2); degrees (1,0) for i <= n1 and (0,1) above."""
    if n1 < 0 or n2 < 0:
        raise ValueError("n1 and n2 must be non-negative")
    if n1 + n2 == 0:
        raise ValueError("no generators: n1 + n2 = 0")
    spec = AlgebraSpec(Family.SL, 1, 0, n1, n2)
    sig = signature_gl(1, 0, n1, n2)
    creators = [elem(sig, i + 1, 1) for i in range(1, n1 + n2 + 1)]
    annihilators = [elem(sig, 1, i + 1) for i in range(1, n1 + n2 + 1)]
    return GeneratorSet(spec, "palev", creators, annihilators, n1)


def _families(split: int, count: int) -> tuple[range, range]:
    return range(1, split + 1), range(split + 1, count + 1)


Instance = tuple[dict, dict, GradedMatrix, GradedMatrix]


def _ff_instances(f: GeneratorSet) -> Iterator[Instance]:
    # All indices, both families mixed freely: taken literally as stated.
    idx = range(1, f.count + 1)
    for j, k, l in product(idx, idx, idx):
        for xi, eta, eps in product(SIGNS, repeat=3):
            lhs = commutator(commutator(f.get(j, xi), f.get(k, eta)), f.get(l, eps))
            rhs = GradedMatrix.zero(lhs.signature)
            if k == l and eps != eta:
                rhs = rhs + f.get(j, xi).scale(abs(eps - eta))
            if j == l and eps != xi:
                rhs = rhs - f.get(k, eta).scale(abs(eps - xi))
            yield (
                {"j": j, "k": k, "l": l},
                {"xi": xi, "eta": eta, "eps": eps},
                lhs,
                rhs,
            )


def _bb_same_instances(b: GeneratorSet) -> Iterator[Instance]:
    fam1, fam2 = _families(b.family_split, b.count)
    for fam in (fam1, fam2):
        for j, k, l in product(fam, fam, fam):
            for xi, eta, eps in product(SIGNS, repeat=3):
                lhs = commutator(
                    anticommutator(b.get(j, xi), b.get(k, eta)), b.get(l, eps)
                )
                rhs = GradedMatrix.zero(lhs.signature)
                if j == l and eps != xi:
                    rhs = rhs + b.get(k, eta).scale(eps - xi)
                if k == l and eps != eta:
                    rhs = rhs + b.get(j, xi).scale(eps - eta)
                yield (
                    {"j": j, "k": k, "l": l},
                    {"xi": xi, "eta": eta, "eps": eps},
                    lhs,
                    rhs,
                )


def _bb_mixed_instances(b: GeneratorSet) -> Iterator[Instance]:
    fam1, fam2 = _families(b.family_split, b.count)
    everything = range(1, b.count + 1)
    # Both index configurations are enumerated explicitly.
    for js, ks in ((fam1, fam2), (fam2, fam1)):
        for j, k, l in product(js, ks, everything):
            for xi, eta, eps in product(SIGNS, repeat=3):
                lhs = anticommutator(
                    commutator(b.get(j, xi), b.get(k, eta)), b.get(l, eps)
                )
                rhs = GradedMatrix.zero(lhs.signature)
                if j == l and eps != xi:
                    rhs = rhs - b.get(k, eta).scale(eps - xi)
                if k == l and eps != eta:
                    rhs = rhs + b.get(j, xi).scale(eps - eta)
                yield (
                    {"j": j, "k": k, "l": l},
                    {"xi": xi, "eta": eta, "eps": eps},
                    lhs,
                    rhs,
                )


def _pf_instances(f: GeneratorSet, b: GeneratorSet, family: int) -> Iterator[Instance]:
    frange = (
        range(1, f.family_split + 1)
        if family == 1
        else range(f.family_split + 1, f.count + 1)
    )
    brange = range(1, b.count + 1)
    zero = GradedMatrix.zero(f.spec.signature())

    # [[f, f], b] = 0
    for j, k in product(frange, frange):
        for l in brange:
            for xi, eta, eps in product(SIGNS, repeat=3):
                lhs = commutator(
                    commutator(f.get(j, xi), f.get(k, eta)), b.get(l, eps)
                )
                yield (
                    {"rel": "ffb", "j": j, "k": k, "l": l},
                    {"xi": xi, "eta": eta, "eps": eps},
                    lhs,
                    zero,
                )
    # [{b, b}, f] = 0
    for j, k in product(brange, brange):
        for l in frange:
            for xi, eta, eps in product(SIGNS, repeat=3):
                lhs = commutator(
                    anticommutator(b.get(j, xi), b.get(k, eta)), f.get(l, eps)
                )
                yield (
                    {"rel": "bbf", "j": j, "k": k, "l": l},
                    {"xi": xi, "eta": eta, "eps": eps},
                    lhs,
                    zero,
                )
    # the family-dependent mixed relations
    for j in frange:
        for k in brange:
            for l in frange:
                for xi, eta, eps in product(SIGNS, repeat=3):
                    if family == 1:
                        lhs = commutator(
                            commutator(f.get(j, xi), b.get(k, eta)), f.get(l, eps)
                        )
                        rhs = zero
                        if j == l and eps != xi:
                            rhs = rhs - b.get(k, eta).scale(abs(eps - xi))
                    else:
                        lhs = anticommutator(
                            anticommutator(f.get(j, xi), b.get(k, eta)), f.get(l, eps)
                        )
                        rhs = zero
                        if j == l and eps != xi:
                            rhs = rhs + b.get(k, eta).scale(abs(eps - xi))
                    yield (
                        {"rel": "fbf", "j": j, "k": k, "l": l},
                        {"xi": xi, "eta": eta, "eps": eps},
                        lhs,
                        rhs,
                    )
    for j in frange:
        for k, l in product(brange, brange):
            for xi, eta, eps in product(SIGNS, repeat=3):
                inner = (
                    commutator(f.get(j, xi), b.get(k, eta))
                    if family == 1
                    else anticommutator(f.get(j, xi), b.get(k, eta))
                )
                lhs = (
                    anticommutator(inner, b.get(l, eps))
                    if family == 1
                    else commutator(inner, b.get(l, eps))
                )
                rhs = zero
                if k == l and eps != eta:
                    rhs = rhs + f.get(j, xi).scale(eps - eta)
                yield (
                    {"rel": "fbb", "j": j, "k": k, "l": l},
                    {"xi": xi, "eta": eta, "eps": eps},
                    lhs,
                    rhs,
                )


def _a_same_instances(a: GeneratorSet) -> Iterator[Instance]:
    fam1, fam2 = _families(a.family_split, a.count)
    zero = GradedMatrix.zero(a.spec.signature())
    for fam in (fam1, fam2):
        for sign in SIGNS:
            for i, j in product(fam, fam):
                lhs = anticommutator(a.get(i, sign), a.get(j, sign))
                yield ({"rel": "aa", "i": i, "j": j, "sign": sign}, {}, lhs, zero)
        for i, j, k in product(fam, fam, fam):
            middle = anticommutator(a.get(i, 1), a.get(j, -1))
            lhs = commutator(middle, a.get(k, 1))
            rhs = zero
            if j == k:
                rhs = rhs + a.get(i, 1)
            if i == j:
                rhs = rhs - a.get(k, 1)
            yield ({"rel": "aap", "i": i, "j": j, "k": k}, {}, lhs, rhs)
            lhs = commutator(middle, a.get(k, -1))
            rhs = zero
            if i == k:
                rhs = rhs - a.get(j, -1)
            if i == j:
                rhs = rhs + a.get(k, -1)
            yield ({"rel": "aam", "i": i, "j": j, "k": k}, {}, lhs, rhs)


def _a_mixed_instances(a: GeneratorSet) -> Iterator[Instance]:
    fam1, fam2 = _families(a.family_split, a.count)
    everything = range(1, a.count + 1)
    zero = GradedMatrix.zero(a.spec.signature())
    for iis, jjs in ((fam1, fam2), (fam2, fam1)):
        for sign in SIGNS:
            for i, j in product(iis, jjs):
                lhs = commutator(a.get(i, sign), a.get(j, sign))
                yield ({"rel": "aa", "i": i, "j": j, "sign": sign}, {}, lhs, zero)
        for i, j in product(iis, jjs):
            middle = commutator(a.get(i, 1), a.get(j, -1))
            for k in everything:
                lhs = anticommutator(middle, a.get(k, 1))
                rhs = a.get(i, 1) if j == k else zero
                yield ({"rel": "aap", "i": i, "j": j, "k": k}, {}, lhs, rhs)
                lhs = anticommutator(middle, a.get(k, -1))
                rhs = a.get(j, -1) if i == k else zero
                yield ({"rel": "aam", "i": i, "j": j, "k": k}, {}, lhs, rhs)


def declared_total(family: RelationFamily, gens: GeneratorSet, partner: Optional[GeneratorSet] = None) -> int:
    """Sign-complete instance count, computed combinatorially (not by
    running the loops), so silently skipped cases cannot hide."""
    s = 2 ** family.sign_arity
    if family is RelationFamily.FF:
        return gens.count ** 3 * s
    if family is RelationFamily.BB_SAME:
        n1 = gens.family_split
        n2 = gens.count - n1
        return (n1 ** 3 + n2 ** 3) * s
    if family is RelationFamily.BB_MIXED:
        n1 = gens.family_split
        n2 = gens.count - n1
        return 2 * n1 * n2 * gens.count * s
    if family in (RelationFamily.PF_FAMILY1, RelationFamily.PF_FAMILY2):
        nf = (
            gens.family_split
            if family is RelationFamily.PF_FAMILY1
            else gens.count - gens.family_split
        )
        nb = partner.count
        return (nf * nf * nb + nb * nb * nf + nf * nb * nf + nf * nb * nb) * s
    if family is RelationFamily.A_SAME:
        n1 = gens.family_split
        n2 = gens.count - n1
        return sum(2 * f * f + 2 * f ** 3 for f in (n1, n2))
    # A_MIXED
    n1 = gens.family_split
    n2 = gens.count - n1
    return 2 * (2 * n1 * n2) + 2 * (2 * n1 * n2 * gens.count)


def verify_relations(
    family: RelationFamily,
    gens: GeneratorSet,
    partner: Optional[GeneratorSet] = None,
    max_counterexamples: int = 10,
) -> CheckReport:
    """Evaluate one relation family exhaustively: every admissible index
    tuple, every sign tuple, exact matrix equality of both sides."""
    family = RelationFamily(family)
    if family is RelationFamily.FF:
        if gens.kind != "parafermion":
            raise ValueError("FF relations need a parafermion generator set")
        instances = _ff_instances(gens)
    elif family in (RelationFamily.BB_SAME, RelationFamily.BB_MIXED):
        if gens.kind != "paraboson":
            raise ValueError(f"{family.value} relations need a paraboson generator set")
        instances = (
            _bb_same_instances(gens)
            if family is RelationFamily.BB_SAME
            else _bb_mixed_instances(gens)
        )
    elif family in (RelationFamily.PF_FAMILY1, RelationFamily.PF_FAMILY2):
        if gens.kind != "parafermion" or partner is None or partner.kind != "paraboson":
            raise ValueError(
                f"{family.value} relations need parafermion gens plus paraboson partner"
            )
        if gens.spec != partner.spec:
            raise ValueError("parafermion and paraboson sets must share one spec")
        instances = _pf_instances(
            gens, partner, 1 if family is RelationFamily.PF_FAMILY1 else 2
        )
    else:
        if gens.kind != "palev":
            raise ValueError(f"{family.value} relations need a palev generator set")
        instances = (
            _a_same_instances(gens)
            if family is RelationFamily.A_SAME
            else _a_mixed_instances(gens)
        )

    report = CheckReport(f"relations-{family.value}", gens.spec.to_json())
    for indices, signs, lhs, rhs in instances:
        ok = lhs == rhs
        report.record(
            ok,
            None
            if ok
            else {"indices": indices, "signs": signs, "residual": (lhs - rhs).to_json()},
            max_counterexamples,
        )
    report.details = {
        "declared_total": declared_total(family, gens, partner),
        "sign_arity": family.sign_arity,
    }
    return report


def graded_bracket_consistency(
    *gen_sets: GeneratorSet, max_counterexamples: int = 10
) -> CheckReport:
    """For every ordered pair of generators, the graded bracket must be the
    anticommutator when the degrees' dot is 1 and the commutator when 0 —
    certifying the bracket placements used in the relation tables."""
    if not gen_sets:
        raise ValueError("need at least one generator set")
    pool: list[tuple[str, GradedMatrix]] = []
    for gs in gen_sets:
        pool.extend(gs.labelled())
    degrees = []
    for label, mat in pool:
        d = mat.degree_of()
        if d is None:
            raise ValueError(f"generator {label} is not homogeneous")
        degrees.append(d)
    report = CheckReport("bracket-consistency", gen_sets[0].spec.to_json())
    for ix, (lx, x) in enumerate(pool):
        for iy, (ly, y) in enumerate(pool):
            expected = (
                anticommutator(x, y)
                if dot(degrees[ix], degrees[iy])
                else commutator(x, y)
            )
            actual = graded_bracket(x, y)
            ok = actual == expected
            report.record(
                ok,
                None
                if ok
                else {"indices": [lx, ly], "residual": (actual - expected).to_json()},
                max_counterexamples,
            )
    return report
