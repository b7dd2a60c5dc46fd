"""Breadth-first orbit enumeration, membership tests, descent certificates.

The orbit of the zero vector under the generator action is infinite, so
enumeration is always depth-bounded.  Vectors are deduplicated by their
canonical serialized key, which makes the output independent of worker
count and traversal order.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import AlgebraSpec, LinForm, MassVector
from .action import Word, apply_generator, apply_word, pohozaev_residual
from .errors import FormatError, NotMassForm

MEMBER = "member"
NOT_IN_GAMMA_N = "not_in_gamma_n"
DESCENT_STALLED = "descent_stalled"


@dataclass(frozen=True)
class OrbitNode:
    vector: MassVector
    witness: Word
    level: int


@dataclass(frozen=True)
class CoefficientMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def is_nonneg_integral(self) -> bool:
        return all(c >= 0 and c.denominator == 1
                   for row in self.entries for c in row)


@dataclass(frozen=True)
class MembershipReport:
    verdict: str
    pohozaev_ok: bool
    coeffs_ok: bool
    word: Optional[Word] = None
    reason: str = ""
    steps: int = 0


def _expand(node: OrbitNode, skip_repeat: bool) -> list[tuple[str, OrbitNode]]:
    out = []
    first = node.witness.letters[0] if node.witness.letters else None
    for i in node.vector.spec.indices:
        if skip_repeat and i == first:
            continue  # R_i^2 = e, this child is the node's own parent
        child = apply_generator(i, node.vector)
        witness = Word((i,) + node.witness.letters)
        out.append((child.canonical_key(),
                    OrbitNode(child, witness, node.level + 1)))
    return out


def enumerate_orbit(spec: AlgebraSpec, depth: int, workers: int = 1,
                    skip_repeat: bool = True) -> list[OrbitNode]:
    """All orbit vectors within the given word length, as sorted nodes.

    Each vector carries a shortest discovered witness word.  The result
    is sorted by (level, canonical key) and is byte-identical for any
    worker count: frontier chunks are expanded independently and merged
    in sorted order.
    """
    root = OrbitNode(MassVector.zero(spec), Word(), 0)
    seen = {root.vector.canonical_key(): root}
    frontier = [root]
    for _ in range(depth):
        if not frontier:
            break
        chunks = [frontier[k::workers] for k in range(workers)]
        chunks = [c for c in chunks if c]
        if workers > 1 and len(chunks) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                batches = list(pool.map(
                    lambda c: [p for nd in c for p in _expand(nd, skip_repeat)],
                    chunks))
        else:
            batches = [[p for nd in c for p in _expand(nd, skip_repeat)]
                       for c in chunks]
        candidates = [p for batch in batches for p in batch]
        candidates.sort(key=lambda p: (p[0], p[1].witness.letters))
        frontier = []
        for key, node in candidates:
            if key not in seen:
                seen[key] = node
                frontier.append(node)
    return sorted(seen.values(),
                  key=lambda nd: (nd.level, nd.vector.canonical_key()))


def coefficient_matrix(v: MassVector) -> CoefficientMatrix:
    """The matrix n_{ij} with entry i equal to 2 sum_j n_{ij} mu_j."""
    rows = []
    for i in v.spec.indices:
        e = v.entry(i)
        if e.const:
            raise NotMassForm("entry %d has constant term %s" % (i, e.const))
        if e.s:
            raise NotMassForm("entry %d has generic s-indeterminates" % i)
        rows.append(tuple(e.mu_coeff(j) / 2 for j in v.spec.indices))
    return CoefficientMatrix(tuple(rows))


def gamma_n_test(v: MassVector) -> MembershipReport:
    """Check the two membership conditions: coefficients and Pohozaev."""
    coeffs_ok = coefficient_matrix(v).is_nonneg_integral()
    pohozaev_ok = pohozaev_residual(v).is_zero
    verdict = MEMBER if (coeffs_ok and pohozaev_ok) else NOT_IN_GAMMA_N
    reason = ""
    if not coeffs_ok:
        reason = "coefficient matrix is not nonnegative-integral"
    elif not pohozaev_ok:
        reason = "Pohozaev residual is nonzero"
    return MembershipReport(verdict, pohozaev_ok, coeffs_ok, reason=reason)


def _phi(v: MassVector) -> Fraction:
    ones = [1] * v.spec.size
    return sum(v.evaluate(ones), Fraction(0))


def descend_to_zero(v: MassVector, max_steps: int = 256) -> MembershipReport:
    """Greedy descent certificate: a word carrying v to zero, if found.

    At each step, among generators that strictly decrease the total mass
    at weights (1,...,1), the smallest index is applied.  If none exists
    before reaching zero the verdict is a stall, never a loop.
    """
    base = gamma_n_test(v)
    if base.verdict != MEMBER:
        return base
    applied: list[int] = []
    cur = v
    steps = 0
    while not cur.is_zero:
        if steps >= max_steps:
            return MembershipReport(DESCENT_STALLED, True, True,
                                    reason="step budget exhausted",
                                    steps=steps)
        phi = _phi(cur)
        pick = None
        for i in cur.spec.indices:
            child = apply_generator(i, cur)
            if _phi(child) < phi:
                pick = (i, child)
                break
        if pick is None:
            return MembershipReport(DESCENT_STALLED, True, True,
                                    reason="no descending generator",
                                    steps=steps)
        applied.append(pick[0])
        cur = pick[1]
        steps += 1
    word = Word(tuple(reversed(applied)))
    return MembershipReport(MEMBER, True, True, word=word, steps=steps)


def _node_edges(nodes: Sequence[OrbitNode]) -> list[tuple[str, str, int]]:
    """Discovery-tree edges (parent key, child key, generator label)."""
    edges = []
    for nd in nodes:
        if not nd.witness.letters:
            continue
        parent = apply_word(Word(nd.witness.letters[1:]),
                            MassVector.zero(nd.vector.spec))
        edges.append((parent.canonical_key(), nd.vector.canonical_key(),
                      nd.witness.letters[0]))
    return edges


def export_graph(nodes: Sequence[OrbitNode], fmt: str,
                 mu: Optional[Sequence] = None) -> bytes:
    """Serialize an enumerated orbit as DOT, JSON, or CSV bytes."""
    nodes = sorted(nodes, key=lambda nd: (nd.level, nd.vector.canonical_key()))
    if fmt == "dot":
        ids = {nd.vector.canonical_key(): "v%d" % k
               for k, nd in enumerate(nodes)}
        lines = ["digraph orbit {"]
        for k, nd in enumerate(nodes):
            lines.append('  v%d [label="%s"];' % (k, nd.vector))
        for src, dst, label in _node_edges(nodes):
            lines.append("  %s -> %s [label=%d];" % (ids[src], ids[dst], label))
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    if fmt == "json":
        payload = {"nodes": [{"vector": nd.vector.to_json_dict(),
                              "witness": list(nd.witness.letters),
                              "level": nd.level} for nd in nodes]}
        return (json.dumps(payload, sort_keys=True, indent=2) + "\n").encode()
    if fmt == "csv":
        values = mu if mu is not None else None
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["index", "mass"])
        for k, nd in enumerate(nodes):
            if values is not None:
                masses = nd.vector.evaluate(values)
                writer.writerow([k, " ".join(str(m) for m in masses)])
            else:
                writer.writerow([k, str(nd.vector)])
        return buf.getvalue().encode()
    raise FormatError("unknown export format %r" % (fmt,))
