"""Generator action on mass vectors, words, relations, Pohozaev residuals.

A generator with index i replaces entry i of the vector by

    2*mu_i - sum_t k_{it} sigma_t + sigma_i

where k is the Cartan matrix of the vector's family, and leaves every
other entry alone.  Words are applied right to left: the last letter of
the tuple acts first, so a word reads like the usual product notation
R_{i_s} ... R_{i_1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import AFFINE_A, AlgebraSpec, LinForm, MassVector
from .cartan import CartanMatrix, build
from .errors import DomainError, EvaluationError


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...] = ()

    @staticmethod
    def of(*letters: int) -> "Word":
        return Word(tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        """Concatenation in product order: (self * other) applies other first."""
        return Word(self.letters + other.letters)

    def power(self, k: int) -> "Word":
        return Word(self.letters * k)

    def __str__(self) -> str:
        return "[" + " ".join(str(i) for i in self.letters) + "]"


_matrix_cache: dict[tuple[str, int], CartanMatrix] = {}


def family_matrix(spec: AlgebraSpec) -> CartanMatrix:
    key = (spec.family, spec.size)
    if key not in _matrix_cache:
        _matrix_cache[key] = build(spec.family, spec.size)
    return _matrix_cache[key]


def _default_weights(spec: AlgebraSpec) -> list[LinForm]:
    return [LinForm.weight(i) for i in spec.indices]


def apply_generator(i: int, v: MassVector,
                    weights: Optional[Sequence[LinForm]] = None) -> MassVector:
    """Apply the reflection with index i to v.

    ``weights`` optionally replaces the symbolic weights: entry t is the
    form standing in for mu_{t+1}.  The default is the plain mu basis.
    """
    spec = v.spec
    if not 1 <= i <= spec.size:
        raise DomainError("generator index %d outside 1..%d" % (i, spec.size))
    k = family_matrix(spec)
    w_i = weights[i - 1] if weights is not None else LinForm.weight(i)
    new = w_i.scale(2)
    for t in spec.indices:
        c = k[i, t]
        if c:
            new = new - v.entry(t).scale(c)
    new = new + v.entry(i)
    return v.replace(i, new)


def apply_word(w: Word, v: MassVector,
               weights: Optional[Sequence[LinForm]] = None) -> MassVector:
    """Right-to-left fold of apply_generator over the word's letters."""
    for i in reversed(w.letters):
        v = apply_generator(i, v, weights)
    return v


def presentation_relations(spec: AlgebraSpec) -> list[tuple[str, Word]]:
    """All defining relations of the family, as words equal to the identity.

    Generators are involutions, so each relation u = v is encoded as the
    single word u * v^{-1} (which here is just u * v reversed).
    """
    n = spec.n
    rels: list[tuple[str, Word]] = []
    for i in spec.indices:
        rels.append(("R%d^2" % i, Word.of(i, i)))
    if spec.family == AFFINE_A:
        for i in spec.indices:
            for j in spec.indices:
                if i >= j:
                    continue
                d = j - i
                if d in (1, n):
                    rels.append(("(R%dR%d)^3" % (i, j),
                                 Word.of(i, j).power(3)))
                    # braid R_i R_j R_i = R_j R_i R_j, moved to one side
                    rels.append(("braid(%d,%d)" % (i, j),
                                 Word.of(i, j, i) * Word.of(j, i, j)))
                elif 1 < d < n:
                    rels.append(("(R%dR%d)^2" % (i, j),
                                 Word.of(i, j).power(2)))
    else:
        for i in spec.indices:
            for j in spec.indices:
                if i >= j:
                    continue
                d = j - i
                if 1 < d <= n:
                    rels.append(("(R%dR%d)^2" % (i, j),
                                 Word.of(i, j).power(2)))
                elif d == 1 and 2 <= i and j <= n:
                    rels.append(("braid(%d,%d)" % (i, j),
                                 Word.of(i, j, i) * Word.of(j, i, j)))
        rels.append(("(R2R1)^4", Word.of(2, 1).power(4)))
        rels.append(("(R%dR%d)^4" % (n, n + 1), Word.of(n, n + 1).power(4)))
    return rels


def verify_relation(w: Word, spec: AlgebraSpec) -> bool:
    """True iff w acts as the identity on the fully generic vector."""
    g = MassVector.generic(spec)
    return apply_word(w, g) == g


Monomial = tuple[int, ...]  # () constant, (i,) mu_i, (i, j) mu_i*mu_j, i<=j


@dataclass(frozen=True)
class QuadPoly:
    """Exact polynomial of degree <= 2 in the mu indeterminates."""

    terms: tuple[tuple[Monomial, Fraction], ...] = ()

    @staticmethod
    def from_dict(d: dict[Monomial, Fraction]) -> "QuadPoly":
        return QuadPoly(tuple(sorted((m, c) for m, c in d.items() if c)))

    def as_dict(self) -> dict[Monomial, Fraction]:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "QuadPoly") -> "QuadPoly":
        d = self.as_dict()
        for m, c in other.terms:
            d[m] = d.get(m, Fraction(0)) + c
        return QuadPoly.from_dict(d)

    def __sub__(self, other: "QuadPoly") -> "QuadPoly":
        return self + other.scale(-1)

    def scale(self, k) -> "QuadPoly":
        k = Fraction(k)
        return QuadPoly.from_dict({m: c * k for m, c in self.terms})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for m, c in self.terms:
            name = "*".join("mu_%d" % i for i in m)
            bits.append(str(c) if not m else "%s*%s" % (c, name))
        return " + ".join(bits)


def _require_mu_only(f: LinForm) -> None:
    if f.s:
        raise EvaluationError("generic s-indeterminates present; "
                              "evaluate them before forming residuals")


def linform_product(a: LinForm, b: LinForm) -> QuadPoly:
    """Exact product of two mu-only linear forms."""
    _require_mu_only(a)
    _require_mu_only(b)
    d: dict[Monomial, Fraction] = {}

    def bump(m: Monomial, c: Fraction) -> None:
        if c:
            d[m] = d.get(m, Fraction(0)) + c

    bump((), a.const * b.const)
    for i, c in a.mu:
        bump((i,), c * b.const)
    for j, c in b.mu:
        bump((j,), c * a.const)
    for i, ci in a.mu:
        for j, cj in b.mu:
            m = (i, j) if i <= j else (j, i)
            bump(m, ci * cj)
    return QuadPoly.from_dict(d)


def pohozaev_residual(v: MassVector,
                      weights: Optional[Sequence[LinForm]] = None) -> QuadPoly:
    """The quadratic constraint residual; identically zero on the orbit.

    Affine A:  sum_i s_i^2 - sum_i s_i s_{i+1} - 2 sum_i mu_i s_i  (cyclic)
    Affine Ct: sum_{i<=n} (s_i - s_{i+1})^2
               - 2 (mu_1 s_1 + 2 sum_{2<=i<=n} mu_i s_i + mu_{n+1} s_{n+1})

    ``weights`` optionally substitutes forms for the plain mu_i, which is
    what the folding map needs.
    """
    spec = v.spec
    w = list(weights) if weights is not None else _default_weights(spec)
    total = QuadPoly()
    if spec.family == AFFINE_A:
        for i in spec.indices:
            e = v.entry(i)
            total = total + linform_product(e, e)
            total = total - linform_product(e, v.entry(i + 1))
            total = total - linform_product(w[i - 1], e).scale(2)
    else:
        for i in range(1, spec.n + 1):
            diff = v.entry(i) - v.entry(i + 1)
            total = total + linform_product(diff, diff)
        pairing = linform_product(w[0], v.entry(1))
        for i in range(2, spec.n + 1):
            pairing = pairing + linform_product(w[i - 1], v.entry(i)).scale(2)
        pairing = pairing + linform_product(w[spec.n], v.entry(spec.n + 1))
        total = total - pairing.scale(2)
    return total


def pohozaev_residual_cyclic_difference(
        v: MassVector,
        weights: Optional[Sequence[LinForm]] = None) -> QuadPoly:
    """Affine A residual in the squared-difference form.

    sum_i (s_i - s_{i+1})^2 - 4 sum_i mu_i s_i, cyclic in i.  This equals
    exactly twice the band-form residual and is the shape the folding
    argument compares against.
    """
    spec = v.spec
    if spec.family != AFFINE_A:
        raise EvaluationError("difference form is specific to affine A")
    w = list(weights) if weights is not None else _default_weights(spec)
    total = QuadPoly()
    for i in spec.indices:
        diff = v.entry(i) - v.entry(i + 1)
        total = total + linform_product(diff, diff)
        total = total - linform_product(w[i - 1], v.entry(i)).scale(4)
    return total
