"""Exact symbolic core: algebra descriptors, degree-one forms, mass vectors.

Every coefficient is a `fractions.Fraction`, so all arithmetic in the
package is exact.  A `LinForm` is an affine-linear expression

    const + sum_i c_i * mu_i + sum_i d_i * s_i

in the weight indeterminates mu_1..mu_{n+1} and the generic seed
indeterminates s_1..s_{n+1}.  A `MassVector` is a tuple of n+1 such
forms attached to an `AlgebraSpec`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

from .errors import DomainError, EvaluationError, FormatError, RankError

Scalar = Union[int, Fraction]

AFFINE_A = "affine_a"
AFFINE_CT = "affine_ct"
FAMILIES = (AFFINE_A, AFFINE_CT)


@dataclass(frozen=True)
class AlgebraSpec:
    """Which affine family we work in, and at which rank.

    The index set is always I = {1, ..., n+1}.  For family ``affine_a``
    index arithmetic on I is cyclic; for ``affine_ct`` it is not.
    """

    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError("unknown family %r" % (self.family,))
        if self.n < 2:
            raise RankError("rank must be at least 2, got %d" % self.n)

    @property
    def size(self) -> int:
        return self.n + 1

    @property
    def indices(self) -> range:
        return range(1, self.n + 2)

    def wrap(self, i: int) -> int:
        """Reduce an integer to the index set, cyclically for affine A."""
        if self.family == AFFINE_A:
            return (i - 1) % (self.n + 1) + 1
        if not 1 <= i <= self.n + 1:
            raise DomainError("index %d outside 1..%d" % (i, self.n + 1))
        return i


def _as_fraction(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("expected int or Fraction, got %r" % (x,))


def _clean(items: Iterable[tuple[int, Scalar]]) -> tuple[tuple[int, Fraction], ...]:
    acc: dict[int, Fraction] = {}
    for idx, coeff in items:
        c = acc.get(idx, Fraction(0)) + _as_fraction(coeff)
        if c:
            acc[idx] = c
        elif idx in acc:
            del acc[idx]
    return tuple(sorted(acc.items()))


@dataclass(frozen=True)
class LinForm:
    """const + sum c_i mu_i + sum d_i s_i, coefficients exact rationals.

    Instances are immutable and hashable; the stored coefficient tuples
    are sorted by index with zero coefficients dropped, so structural
    equality is semantic equality.
    """

    const: Fraction = Fraction(0)
    mu: tuple[tuple[int, Fraction], ...] = ()
    s: tuple[tuple[int, Fraction], ...] = ()

    @staticmethod
    def make(const: Scalar = 0,
             mu: Optional[Mapping[int, Scalar]] = None,
             s: Optional[Mapping[int, Scalar]] = None) -> "LinForm":
        return LinForm(_as_fraction(const),
                       _clean((mu or {}).items()),
                       _clean((s or {}).items()))

    @staticmethod
    def zero() -> "LinForm":
        return LinForm()

    @staticmethod
    def weight(i: int, coeff: Scalar = 1) -> "LinForm":
        """The form coeff * mu_i."""
        return LinForm.make(mu={i: coeff})

    @staticmethod
    def seed(i: int, coeff: Scalar = 1) -> "LinForm":
        """The form coeff * s_i."""
        return LinForm.make(s={i: coeff})

    def mu_dict(self) -> dict[int, Fraction]:
        return dict(self.mu)

    def s_dict(self) -> dict[int, Fraction]:
        return dict(self.s)

    def mu_coeff(self, i: int) -> Fraction:
        return dict(self.mu).get(i, Fraction(0))

    def s_coeff(self, i: int) -> Fraction:
        return dict(self.s).get(i, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self.const and not self.mu and not self.s

    def __add__(self, other: "LinForm") -> "LinForm":
        return LinForm(self.const + other.const,
                       _clean(self.mu + other.mu),
                       _clean(self.s + other.s))

    def __sub__(self, other: "LinForm") -> "LinForm":
        return self + (-other)

    def __neg__(self) -> "LinForm":
        return self.scale(-1)

    def scale(self, k: Scalar) -> "LinForm":
        k = _as_fraction(k)
        if not k:
            return LinForm()
        return LinForm(self.const * k,
                       tuple((i, c * k) for i, c in self.mu),
                       tuple((i, c * k) for i, c in self.s))

    def __mul__(self, k: Scalar) -> "LinForm":
        return self.scale(k)

    __rmul__ = __mul__

    def substitute_weights(self, mapping: Mapping[int, int]) -> "LinForm":
        """Relabel mu_i -> mu_{mapping[i]}; indices absent from the map stay."""
        return LinForm(self.const,
                       _clean((mapping.get(i, i), c) for i, c in self.mu),
                       self.s)

    def evaluate(self,
                 mu: Optional[Mapping[int, Scalar]] = None,
                 s: Optional[Mapping[int, Scalar]] = None) -> Fraction:
        """Evaluate at the given indeterminate values.

        Values must be supplied for every indeterminate that actually
        occurs, otherwise EvaluationError.
        """
        mu = mu or {}
        s = s or {}
        total = self.const
        for i, c in self.mu:
            if i not in mu:
                raise EvaluationError("no value for mu_%d" % i)
            total += c * _as_fraction(mu[i])
        for i, c in self.s:
            if i not in s:
                raise EvaluationError("no value for s_%d" % i)
            total += c * _as_fraction(s[i])
        return total

    def __str__(self) -> str:
        parts = []
        if self.const:
            parts.append(str(self.const))
        for i, c in self.mu:
            parts.append("%s*mu_%d" % (c, i))
        for i, c in self.s:
            parts.append("%s*s_%d" % (c, i))
        return " + ".join(parts) if parts else "0"


def _frac_to_str(x: Fraction) -> str:
    return str(x)


def _frac_from_str(text) -> Fraction:
    if not isinstance(text, str):
        raise FormatError("rational must be a string, got %r" % (text,))
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError("bad rational %r" % (text,)) from exc


def _linform_to_json(f: LinForm) -> dict:
    return {"const": _frac_to_str(f.const),
            "mu": {str(i): _frac_to_str(c) for i, c in f.mu},
            "s": {str(i): _frac_to_str(c) for i, c in f.s}}


def _linform_from_json(obj) -> LinForm:
    if not isinstance(obj, dict):
        raise FormatError("entry must be an object, got %r" % (obj,))
    const = _frac_from_str(obj.get("const", "0"))

    def coeffs(key):
        raw = obj.get(key, {})
        if not isinstance(raw, dict):
            raise FormatError("%r must be an object" % (key,))
        out = {}
        for k, v in raw.items():
            try:
                idx = int(k)
            except (TypeError, ValueError) as exc:
                raise FormatError("bad index %r" % (k,)) from exc
            if idx < 1:
                raise FormatError("index %d must be positive" % idx)
            out[idx] = _frac_from_str(v)
        return out

    return LinForm.make(const, coeffs("mu"), coeffs("s"))


@dataclass(frozen=True)
class MassVector:
    """A vector of n+1 symbolic entries attached to an algebra."""

    spec: AlgebraSpec
    entries: tuple[LinForm, ...]

    def __post_init__(self):
        if len(self.entries) != self.spec.size:
            raise RankError("expected %d entries, got %d"
                            % (self.spec.size, len(self.entries)))

    @staticmethod
    def zero(spec: AlgebraSpec) -> "MassVector":
        return MassVector(spec, (LinForm.zero(),) * spec.size)

    @staticmethod
    def generic(spec: AlgebraSpec) -> "MassVector":
        """Vector with fresh seed indeterminates: entry i equals s_i."""
        return MassVector(spec, tuple(LinForm.seed(i) for i in spec.indices))

    def entry(self, i: int) -> LinForm:
        """Entry at 1-based index i (cyclic for affine A)."""
        return self.entries[self.spec.wrap(i) - 1]

    def replace(self, i: int, form: LinForm) -> "MassVector":
        i = self.spec.wrap(i)
        entries = list(self.entries)
        entries[i - 1] = form
        return MassVector(self.spec, tuple(entries))

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for e in self.entries)

    def evaluate(self,
                 mu_values,
                 s_values=None) -> tuple[Fraction, ...]:
        """Evaluate every entry at numeric weights (and seeds, if present).

        ``mu_values`` / ``s_values`` are sequences indexed by position
        (value for mu_1 first).  Seeds are only required when some entry
        actually mentions an s-indeterminate.
        """
        if len(mu_values) != self.spec.size:
            raise EvaluationError("expected %d weight values, got %d"
                                  % (self.spec.size, len(mu_values)))
        mu = {i + 1: _as_fraction(x) for i, x in enumerate(mu_values)}
        s = {}
        if s_values is not None:
            s = {i + 1: _as_fraction(x) for i, x in enumerate(s_values)}
        return tuple(e.evaluate(mu, s) for e in self.entries)

    def canonical_key(self) -> str:
        """Deterministic string key; equal vectors get equal keys."""
        return json.dumps(self.to_json_dict(), sort_keys=True,
                          separators=(",", ":"))

    def to_json_dict(self) -> dict:
        return {"family": self.spec.family,
                "n": self.spec.n,
                "entries": [_linform_to_json(e) for e in self.entries]}

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_json_dict(), indent=indent, sort_keys=True)

    @staticmethod
    def from_json_dict(obj) -> "MassVector":
        if not isinstance(obj, dict):
            raise FormatError("top-level JSON must be an object")
        for key in ("family", "n", "entries"):
            if key not in obj:
                raise FormatError("missing field %r" % key)
        if not isinstance(obj["n"], int) or isinstance(obj["n"], bool):
            raise FormatError("field 'n' must be an integer")
        if obj["family"] not in FAMILIES:
            raise FormatError("unknown family %r" % (obj["family"],))
        spec = AlgebraSpec(obj["family"], obj["n"])
        raw = obj["entries"]
        if not isinstance(raw, list):
            raise FormatError("field 'entries' must be a list")
        if len(raw) != spec.size:
            raise FormatError("expected %d entries, got %d"
                              % (spec.size, len(raw)))
        return MassVector(spec, tuple(_linform_from_json(e) for e in raw))

    @staticmethod
    def from_json(text: str) -> "MassVector":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError("invalid JSON: %s" % exc) from exc
        return MassVector.from_json_dict(obj)

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self.entries) + ")"
