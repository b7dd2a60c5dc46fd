"""Cyclic rotations, permutation mass formulas, and Ct <-> A folding.

Three kinds of permutation appear: cyclic rotations of the affine A
index cycle, arbitrary permutations of {0..m} feeding the finite A
partial-sum mass formula, and palindromic permutations of {0..2l+1}
classifying the boundary-block masses of affine Ct.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import AFFINE_A, AFFINE_CT, AlgebraSpec, LinForm, MassVector
from .action import Word, family_matrix
from .chains import mu_star
from .errors import DomainError, SymmetryError


@dataclass(frozen=True)
class CyclicRotation:
    """The rotation of I = {1..n+1} sending position 1 to value r."""

    r: int

    def apply(self, i: int, n: int) -> int:
        return (self.r - 1 + i - 1) % (n + 1) + 1

    def invert(self, i: int, n: int) -> int:
        return (i - self.r) % (n + 1) + 1


def rotate_vector(v: MassVector, rot: CyclicRotation) -> MassVector:
    """Entry i of the output is entry f(i) of the input."""
    if v.spec.family != AFFINE_A:
        raise DomainError("rotations are an affine A diagram symmetry")
    n = v.spec.n
    if not 1 <= rot.r <= n + 1:
        raise DomainError("rotation offset %d outside 1..%d" % (rot.r, n + 1))
    return MassVector(v.spec,
                      tuple(v.entry(rot.apply(i, n)) for i in v.spec.indices))


def rotation_covariance(word: Word, rot: CyclicRotation,
                        spec: AlgebraSpec) -> Word:
    """Relabel a word letterwise through the inverse rotation.

    The relabeled word, applied to zero under the rotated weights
    mu'_i = mu_{f(i)}, reproduces the rotation of the original word's
    result.
    """
    if spec.family != AFFINE_A:
        raise DomainError("rotations are an affine A diagram symmetry")
    n = spec.n
    return Word(tuple(rot.invert(i, n) for i in word.letters))


def rotated_weights(rot: CyclicRotation, spec: AlgebraSpec) -> list[LinForm]:
    """The weight overlay mu'_i = mu_{f(i)} as forms."""
    n = spec.n
    return [LinForm.weight(rot.apply(i, n)) for i in spec.indices]


@dataclass(frozen=True)
class FinitePermutation:
    """A bijection of {0, 1, ..., m}, stored as its value tuple."""

    values: tuple[int, ...]

    def __post_init__(self):
        m = len(self.values) - 1
        if sorted(self.values) != list(range(m + 1)):
            raise DomainError("not a permutation of 0..%d: %r"
                              % (m, self.values))

    def __call__(self, j: int) -> int:
        return self.values[j]

    @property
    def top(self) -> int:
        return len(self.values) - 1


def finite_a_mass(f: FinitePermutation,
                  weights: Sequence[LinForm]) -> list[LinForm]:
    """Partial-sum masses of a finite A system from a permutation.

    With f on {0..m} and weights w_1..w_m, entry i (1-based) is

        2 * sum_{l=0}^{i-1} ( sum_{j<=f(l)} w_j  -  sum_{j<=l} w_j ).
    """
    m = len(weights)
    if f.top != m:
        raise DomainError("permutation must act on 0..%d" % m)

    def prefix(k: int) -> LinForm:
        acc = LinForm.zero()
        for j in range(1, k + 1):
            acc = acc + weights[j - 1]
        return acc

    out = []
    acc = LinForm.zero()
    for i in range(1, m + 1):
        acc = acc + (prefix(f(i - 1)) - prefix(i - 1)).scale(2)
        out.append(acc)
    return out


@dataclass(frozen=True)
class SPermC:
    """A permutation of {0..2l+1} with f(j) + f(2l+1-j) = 2l+1."""

    values: tuple[int, ...]

    def __post_init__(self):
        top = len(self.values) - 1
        if len(self.values) % 2 or sorted(self.values) != list(range(top + 1)):
            raise DomainError("not a permutation of 0..2l+1: %r"
                              % (self.values,))
        for j in range(top + 1):
            if self.values[j] + self.values[top - j] != top:
                raise DomainError("palindromic constraint fails at j=%d" % j)

    def __call__(self, j: int) -> int:
        return self.values[j]

    @property
    def l(self) -> int:
        return len(self.values) // 2 - 1

    @staticmethod
    def identity(l: int) -> "SPermC":
        return SPermC(tuple(range(2 * l + 2)))

    @staticmethod
    def reversal(l: int) -> "SPermC":
        return SPermC(tuple(range(2 * l + 1, -1, -1)))

    def compose(self, other: "SPermC") -> "SPermC":
        """self after other: (self . other)(j) = self(other(j))."""
        return SPermC(tuple(self.values[other.values[j]]
                            for j in range(len(self.values))))


def sc_simple(i: int, l: int) -> SPermC:
    """The i-th simple palindromic involution of {0..2l+1}, 0 <= i <= l."""
    if not 0 <= i <= l:
        raise DomainError("simple index %d outside 0..%d" % (i, l))
    vals = []
    for j in range(2 * l + 2):
        if j == i or j == 2 * l - i:
            vals.append(j + 1)
        elif j == i + 1 or j == 2 * l + 1 - i:
            vals.append(j - 1)
        else:
            vals.append(j)
    return SPermC(tuple(vals))


def sigma_f_ct(v: MassVector, f: SPermC, J) -> MassVector:
    """Permutation masses on a boundary block of affine Ct.

    Entries inside the head block {1..l0+1} (or tail block {i0..n+1})
    are rewritten via partial sums of the shifted weights
    mu-bar_t = mu_t - (1/2) sum_s k_{ts} sigma_s, read through the
    block's mirror extension; entries outside J are unchanged.
    """
    spec = v.spec
    if spec.family != AFFINE_CT:
        raise DomainError("sigma_f_ct needs an affine Ct spec")
    idx = J.indices(spec.n)
    if len(idx) >= spec.size:
        raise DomainError("block must be a proper subset of the index set")
    l0 = J.length
    if f.l != l0:
        raise DomainError("permutation acts on 0..%d, block needs 0..%d"
                          % (2 * f.l + 1, 2 * l0 + 1))
    bar = mu_star(v)

    if J.is_head(spec.n):
        def hat(r: int) -> LinForm:
            if r <= l0 + 1:
                return bar[l0 + 2 - r - 1]
            return bar[r - l0 - 1]

        lo, span = 1, lambda i: l0 + 1 - i
    elif J.is_tail(spec.n):
        i0 = J.start

        def hat(r: int) -> LinForm:
            if r <= l0 + 1:
                return bar[r + i0 - 1 - 1]
            return bar[2 * l0 + 1 + i0 - r - 1]

        lo, span = i0, lambda i: i - i0
    else:
        raise DomainError("interior blocks have no boundary mass formula")

    def prefix(k: int) -> LinForm:
        acc = LinForm.zero()
        for r in range(1, k + 1):
            acc = acc + hat(r)
        return acc

    out = v
    for i in range(lo, lo + l0 + 1):
        acc = v.entry(i)
        for j in range(0, span(i) + 1):
            acc = acc + (prefix(f(j)) - prefix(j)).scale(2)
        out = out.replace(i, acc)
    return out


def fold_ct_to_a(v: MassVector,
                 weights: Optional[Sequence[LinForm]] = None
                 ) -> tuple[MassVector, list[LinForm]]:
    """Mirror a rank-n Ct vector into a rank-(2n-1) affine A vector.

    Entry i of the output is entry min(i, 2n+2-i) of the input; the
    returned weight overlay folds the same way, so the output's Pohozaev
    residual should be taken against those weights.
    """
    n = v.spec.n
    if weights is None:
        weights = [LinForm.weight(i) for i in v.spec.indices]
    spec_a = AlgebraSpec(AFFINE_A, 2 * n - 1)
    entries = []
    folded_w = []
    for i in range(1, 2 * n + 1):
        src = i if i <= n + 1 else 2 * n + 2 - i
        entries.append(v.entry(src))
        folded_w.append(weights[src - 1])
    return MassVector(spec_a, tuple(entries)), folded_w


def unfold_a_to_ct(w: MassVector) -> MassVector:
    """Invert the fold; requires the mirror symmetry w_i = w_{2n+2-i}."""
    if w.spec.family != AFFINE_A:
        raise DomainError("unfolding starts from an affine A vector")
    if w.spec.n % 2 == 0:
        raise DomainError("unfolding needs an odd affine A rank 2n-1")
    n = (w.spec.n + 1) // 2
    for i in range(2, n + 1):
        if w.entry(i) != w.entry(2 * n + 2 - i):
            raise SymmetryError("entries %d and %d differ" % (i, 2 * n + 2 - i))
    spec_ct = AlgebraSpec(AFFINE_CT, n)
    return MassVector(spec_ct, tuple(w.entry(i) for i in range(1, n + 2)))
