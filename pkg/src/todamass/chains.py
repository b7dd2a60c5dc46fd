"""Set-chain words, their closed-form targets, and composite blow-up steps.

A chain for an index block J is a specific word in the generators whose
application realizes, in one shot, the mass gain of a full sub-system
blow-up.  For affine A the word on a block of size l+1 has length
(l+1)(l+2)/2; for affine Ct, blocks touching the boundary use squares of
sweeps of length (l+1)^2 and interior blocks reuse the A-type word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .algebra import AFFINE_A, AFFINE_CT, AlgebraSpec, LinForm, MassVector
from .cartan import ConsecutiveSet, inverse_submatrix
from .errors import DecompositionError, DomainError
from .action import Word, apply_word, family_matrix

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ChainPlan:
    target_set: ConsecutiveSet
    word: Word
    family: str


def _std_chain(l: int) -> tuple[int, ...]:
    """Chain letters for the block {1, ..., l+1} at start position 1."""
    if l == 0:
        return (1,)
    if l == 1:
        return (1, 2, 1)
    if l == 2:
        block = (2, 3, 1)
        return block * 2
    if l == 3:
        block = (2, 3, 4, 2, 1)
        return block * 2
    # ascending sweep 2..l+1, then descending l-1..1, squared, with the
    # recursive chain for the middle block {3..l-1} up front
    block = tuple(range(2, l + 2)) + tuple(range(l - 1, 0, -1))
    middle = tuple(p + 2 for p in _std_chain(l - 4))
    return middle + block * 2


def _relabeled(letters: tuple[int, ...], idx: list[int]) -> tuple[int, ...]:
    return tuple(idx[p - 1] for p in letters)


def chain_word_a(J: ConsecutiveSet, spec: AlgebraSpec) -> ChainPlan:
    """A-type chain word for a proper consecutive (or wrap) block."""
    if spec.family != AFFINE_A:
        raise DomainError("A-type chains need an affine A spec")
    idx = J.indices(spec.n)
    if len(idx) >= spec.size:
        raise DomainError("block must be a proper subset of the index set")
    letters = _relabeled(_std_chain(J.length), idx)
    return ChainPlan(J, Word(letters), spec.family)


def chain_word_ct(J: ConsecutiveSet, spec: AlgebraSpec) -> ChainPlan:
    """Ct-type chain word: sweep powers at the boundary, A-type inside."""
    if spec.family != AFFINE_CT:
        raise DomainError("Ct-type chains need an affine Ct spec")
    if J.wrap:
        raise DomainError("affine Ct has no wrap-around blocks")
    idx = J.indices(spec.n)
    if len(idx) >= spec.size:
        raise DomainError("block must be a proper subset of the index set")
    j, l = J.start, J.length
    if l == 0:
        letters: tuple[int, ...] = (j,)
    elif J.is_head(spec.n):
        letters = tuple(range(j + l, j - 1, -1)) * (l + 1)
    elif J.is_tail(spec.n):
        letters = tuple(range(j, j + l + 1)) * (l + 1)
    else:
        letters = _relabeled(_std_chain(l), idx)
    return ChainPlan(J, Word(letters), spec.family)


def mu_star(v: MassVector) -> list[LinForm]:
    """Shifted weights mu*_s = mu_s - (1/2) sum_t k_{st} sigma_t."""
    k = family_matrix(v.spec)
    out = []
    for s in v.spec.indices:
        f = LinForm.weight(s)
        for t in v.spec.indices:
            c = k[s, t]
            if c:
                f = f - v.entry(t).scale(HALF * c)
        out.append(f)
    return out


def closed_form_a(v: MassVector, J: ConsecutiveSet) -> MassVector:
    """Chain target by the inverse-submatrix closed form.

    New entry at the p-th element s_p of J:

        sigma_{s_p} + 2 sum_q K[p,q] (mu*_{s_q} + mu*_{s_{m+1-q}})

    where K inverts the principal submatrix of the Cartan matrix at J
    and m = |J|.  Entries outside J are unchanged.  Works for any proper
    block of affine A and for interior blocks of affine Ct.
    """
    spec = v.spec
    idx = J.indices(spec.n)
    if len(idx) >= spec.size:
        raise DomainError("block must be a proper subset of the index set")
    if spec.family == AFFINE_CT and not J.is_interior(spec.n):
        raise DomainError("boundary blocks of affine Ct use closed_form_ct")
    K = inverse_submatrix(family_matrix(spec), J)
    stars = mu_star(v)
    m = len(idx)
    out = v
    for p in range(1, m + 1):
        s_p = idx[p - 1]
        acc = v.entry(s_p)
        for q in range(1, m + 1):
            s_q = idx[q - 1]
            s_q_mirror = idx[m - q]
            coeff = K[p, q]
            if coeff:
                acc = acc + (stars[s_q - 1] + stars[s_q_mirror - 1]).scale(2 * coeff)
        out = out.replace(s_p, acc)
    return out


def closed_form_ct(v: MassVector, J: ConsecutiveSet) -> MassVector:
    """Chain target for boundary blocks of affine Ct, by explicit sums.

    Head blocks {1..l+1} and tail blocks {i..n+1} have closed forms in
    the plain weights and the neighboring entry just outside the block;
    interior blocks are rejected (use closed_form_a).
    """
    spec = v.spec
    if spec.family != AFFINE_CT:
        raise DomainError("closed_form_ct needs an affine Ct spec")
    if J.wrap:
        raise DomainError("affine Ct has no wrap-around blocks")
    idx = J.indices(spec.n)
    if len(idx) >= spec.size:
        raise DomainError("block must be a proper subset of the index set")
    l = J.length
    out = v
    if J.is_head(spec.n):
        for s in range(1, l + 2):
            acc = LinForm.zero()
            for t in range(1, l + 2):
                acc = acc + LinForm.weight(t, 2 * (l + 2 - s))
            for q in range(0, l + 2 - s):
                for t in range(l + 2, 2 * l + 2 - q):
                    acc = acc + LinForm.weight(t - l, 2)
                for t in range(1, q + 1):
                    acc = acc - LinForm.weight(l + 2 - t, 2)
            acc = acc - v.entry(s) + v.entry(l + 2).scale(2)
            out = out.replace(s, acc)
    elif J.is_tail(spec.n):
        i = J.start
        if i < 2:
            raise DomainError("tail block covering the whole index set")
        for s in range(i, spec.n + 2):
            acc = LinForm.zero()
            for q in range(0, s - i + 1):
                for t in range(1, l + 2):
                    acc = acc + LinForm.weight(t + i - 1, 2)
                for t in range(l + 2, 2 * l + 2 - q):
                    acc = acc + LinForm.weight(2 * l + i + 1 - t, 2)
                for t in range(1, q + 1):
                    acc = acc - LinForm.weight(t + i - 1, 2)
            acc = acc - v.entry(s) + v.entry(i - 1).scale(2)
            out = out.replace(s, acc)
    else:
        raise DomainError("interior blocks use closed_form_a")
    return out


CASE_TAGS = ("A-I", "A-II", "Ct-I", "Ct-II", "Ct-III", "Ct-IV")


@dataclass(frozen=True)
class Decomposition:
    """A validated splitting of the index set into blocks plus a null set."""

    spec: AlgebraSpec
    case_tag: str
    blocks: tuple[ConsecutiveSet, ...]
    null_set: frozenset[int] = field(default_factory=frozenset)

    def validate(self) -> None:
        spec = self.spec
        n = spec.n
        if self.case_tag not in CASE_TAGS:
            raise DecompositionError("unknown case tag %r" % (self.case_tag,))
        if self.case_tag.startswith("A") != (spec.family == AFFINE_A):
            raise DecompositionError("case tag does not match the family")
        if not self.blocks:
            raise DecompositionError("at least one block is required")
        seen: set[int] = set()
        block_idx = []
        for b in self.blocks:
            idx = b.indices(n)
            if seen & set(idx):
                raise DecompositionError("blocks are not pairwise disjoint")
            seen |= set(idx)
            block_idx.append(idx)
        if seen & self.null_set:
            raise DecompositionError("blocks meet the null set")
        if seen | self.null_set != set(spec.indices):
            raise DecompositionError("blocks and null set do not cover I")
        for b, idx in zip(self.blocks, block_idx):
            lo, hi = idx[0], idx[-1]
            before = spec.wrap(lo - 1) if spec.family == AFFINE_A else lo - 1
            after = spec.wrap(hi + 1) if spec.family == AFFINE_A else hi + 1
            for nb in (before, after):
                if 1 <= nb <= n + 1 and nb not in self.null_set:
                    raise DecompositionError(
                        "block {%s} is not maximal: neighbor %d is not "
                        "in the null set" % (",".join(map(str, idx)), nb))
        N = self.null_set
        tag = self.case_tag
        first, last = self.blocks[0], self.blocks[-1]
        if tag == "A-I":
            if not N:
                raise DecompositionError("A-I needs a nonempty null set")
            if not ({1, n + 1} & N):
                raise DecompositionError("A-I needs 1 or n+1 in the null set")
            if any(b.wrap for b in self.blocks):
                raise DecompositionError("A-I blocks must not wrap")
        elif tag == "A-II":
            if {1, n + 1} & N:
                raise DecompositionError("A-II forbids 1 and n+1 in the null set")
            if not first.wrap:
                raise DecompositionError("A-II needs a wrap-around first block")
            if any(b.wrap for b in self.blocks[1:]):
                raise DecompositionError("only the first block may wrap")
        elif tag == "Ct-I":
            if {1, 2} & N:
                raise DecompositionError("Ct-I forbids 1 and 2 in the null set")
            if not ({n, n + 1} & N):
                raise DecompositionError("Ct-I needs n or n+1 in the null set")
            if not first.is_head(n):
                raise DecompositionError("Ct-I first block must start at 1")
            if not all(b.is_interior(n) for b in self.blocks[1:]):
                raise DecompositionError("Ct-I later blocks must be interior")
        elif tag == "Ct-II":
            if not ({1, 2} & N):
                raise DecompositionError("Ct-II needs 1 or 2 in the null set")
            if not first.is_tail(n):
                raise DecompositionError("Ct-II first block must end at n+1")
            if not all(b.is_interior(n) for b in self.blocks[1:]):
                raise DecompositionError("Ct-II later blocks must be interior")
        elif tag == "Ct-III":
            if n < 4:
                raise DecompositionError("Ct-III needs rank at least 4")
            if len(self.blocks) < 2:
                raise DecompositionError("Ct-III needs head and tail blocks")
            if not first.is_head(n):
                raise DecompositionError("Ct-III first block must start at 1")
            if not last.is_tail(n):
                raise DecompositionError("Ct-III last block must end at n+1")
            if not all(b.is_interior(n) for b in self.blocks[1:-1]):
                raise DecompositionError("Ct-III middle blocks must be interior")
        elif tag == "Ct-IV":
            if not ({1, 2} & N):
                raise DecompositionError("Ct-IV needs 1 or 2 in the null set")
            if not ({n, n + 1} & N):
                raise DecompositionError("Ct-IV needs n or n+1 in the null set")
            if not all(b.is_interior(n) for b in self.blocks):
                raise DecompositionError("Ct-IV blocks must all be interior")


@dataclass(frozen=True)
class BlowupResult:
    vector: MassVector
    word: Word


def blowup_step(v: MassVector, d: Decomposition) -> BlowupResult:
    """Apply every block chain of a validated decomposition to v.

    The word is the concatenation of the block chains in their listed
    order (boundary block first where the case has one); the resulting
    vector is its action on v.
    """
    if v.spec != d.spec:
        raise DomainError("vector and decomposition specs differ")
    d.validate()
    builder = chain_word_a if d.spec.family == AFFINE_A else chain_word_ct
    word = Word()
    for b in d.blocks:
        word = word * builder(b, d.spec).word
    return BlowupResult(apply_word(word, v), word)
