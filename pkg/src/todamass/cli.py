"""Command-line front end.

Exit codes: 0 success/verified, 1 usage or input error, 2 property
violated / not a member, 3 inconclusive (descent stalled).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .algebra import AFFINE_A, AFFINE_CT, AlgebraSpec, MassVector
from .cartan import ConsecutiveSet
from .action import apply_word, pohozaev_residual, presentation_relations
from .chains import (Decomposition, blowup_step, chain_word_a, chain_word_ct,
                     closed_form_a, closed_form_ct)
from .errors import TodamassError
from .orbit import (DESCENT_STALLED, MEMBER, descend_to_zero, enumerate_orbit,
                    export_graph)
from .perms import (CyclicRotation, SPermC, fold_ct_to_a, rotate_vector,
                    sc_simple)

FAMILY_FLAGS = {"a": AFFINE_A, "ct": AFFINE_CT}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _spec(args) -> AlgebraSpec:
    return AlgebraSpec(FAMILY_FLAGS[args.family], args.rank)


def _parse_set(text: str) -> ConsecutiveSet:
    try:
        j, l = (int(x) for x in text.split(":"))
    except ValueError:
        raise UsageError("expected --set j:l, got %r" % text)
    return ConsecutiveSet(j, l)


def _parse_mu(text: str, size: int) -> list[Fraction]:
    if text == "ones":
        return [Fraction(1)] * size
    try:
        values = [Fraction(x) for x in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise UsageError("bad --mu list %r" % text)
    if len(values) != size:
        raise UsageError("--mu needs %d values" % size)
    return values


def _load_vector(path: str) -> MassVector:
    with open(path) as fh:
        return MassVector.from_json(fh.read())


def _cmd_relations(args, out) -> int:
    spec = _spec(args)
    from .action import verify_relation
    failed = 0
    for name, word in presentation_relations(spec):
        ok = verify_relation(word, spec)
        out.write("%s %s\n" % (name, "PASS" if ok else "FAIL"))
        failed += not ok
    return 0 if not failed else 2


def _cmd_chain(args, out) -> int:
    spec = _spec(args)
    if args.wrap:
        try:
            r2, r1 = (int(x) for x in args.wrap.split(","))
        except ValueError:
            raise UsageError("expected --wrap r2,r1")
        J = ConsecutiveSet(r2, (spec.n + 1) - r2 + r1, wrap=True)
    else:
        if not args.set:
            raise UsageError("either --set or --wrap is required")
        J = _parse_set(args.set)
    builder = chain_word_a if spec.family == AFFINE_A else chain_word_ct
    plan = builder(J, spec)
    out.write("word %s\n" % plan.word)
    out.write("length %d\n" % len(plan.word))
    if args.verify:
        g = MassVector.generic(spec)
        if spec.family == AFFINE_A:
            target = closed_form_a(g, J)
        elif J.is_interior(spec.n):
            target = closed_form_a(g, J)
        else:
            target = closed_form_ct(g, J)
        out.write("target %s\n" % target)
        equal = apply_word(plan.word, g) == target
        out.write("EQUAL\n" if equal else "UNEQUAL\n")
        return 0 if equal else 2
    return 0


def _cmd_orbit(args, out) -> int:
    spec = _spec(args)
    nodes = enumerate_orbit(spec, args.depth, workers=args.workers)
    mu = _parse_mu(args.mu, spec.size) if args.mu else None
    data = export_graph(nodes, args.out, mu=mu)
    if hasattr(out, "buffer"):
        out.buffer.write(data)
    else:
        out.write(data.decode())
    return 0


def _cmd_member(args, out) -> int:
    from .errors import NotMassForm
    v = _load_vector(args.input)
    try:
        report = descend_to_zero(v, max_steps=args.max_steps)
    except NotMassForm as exc:
        out.write("NotInGammaN: %s\n" % exc)
        return 2
    if report.verdict == MEMBER:
        out.write("Member %s\n" % report.word)
        return 0
    if report.verdict == DESCENT_STALLED:
        out.write("DescentStalled after %d steps\n" % report.steps)
        return 3
    out.write("NotInGammaN: %s\n" % report.reason)
    return 2


def _cmd_pohozaev(args, out) -> int:
    v = _load_vector(args.input)
    residual = pohozaev_residual(v)
    out.write("residual %s\n" % residual)
    return 0 if residual.is_zero else 2


def _cmd_fold(args, out) -> int:
    v = _load_vector(args.input)
    folded, _ = fold_ct_to_a(v)
    out.write(folded.to_json(indent=2) + "\n")
    return 0


def _cmd_rotate(args, out) -> int:
    v = _load_vector(args.input)
    out.write(rotate_vector(v, CyclicRotation(args.r)).to_json(indent=2) + "\n")
    return 0


def _cmd_sperm(args, out) -> int:
    f = SPermC.identity(args.l)
    if args.word:
        for tok in args.word.split(","):
            f = f.compose(sc_simple(int(tok), args.l))
    out.write("values %s\n" % (" ".join(str(x) for x in f.values)))
    if args.check:
        top = 2 * args.l + 1
        ok = all(f(j) + f(top - j) == top for j in range(top + 1))
        out.write("constraint %s\n" % ("PASS" if ok else "FAIL"))
        return 0 if ok else 2
    return 0


def _cmd_blowup_step(args, out) -> int:
    spec = _spec(args)
    blocks = []
    for tok in args.blocks.split(","):
        parts = tok.split(":")
        if parts[0] == "w":
            r2, r1 = int(parts[1]), int(parts[2])
            blocks.append(ConsecutiveSet(r2, (spec.n + 1) - r2 + r1, wrap=True))
        else:
            blocks.append(ConsecutiveSet(int(parts[0]), int(parts[1])))
    covered = set()
    for b in blocks:
        covered |= set(b.indices(spec.n))
    null_set = frozenset(spec.indices) - covered
    d = Decomposition(spec, args.case, tuple(blocks), null_set)
    v = _load_vector(args.input) if args.input else MassVector.zero(spec)
    result = blowup_step(v, d)
    out.write("word %s\n" % result.word)
    out.write(result.vector.to_json(indent=2) + "\n")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="todamass")
    sub = parser.add_subparsers(dest="verb", required=True)

    def family_rank(p):
        p.add_argument("--family", choices=sorted(FAMILY_FLAGS), required=True)
        p.add_argument("--rank", type=int, required=True)

    p = sub.add_parser("relations")
    family_rank(p)

    p = sub.add_parser("chain")
    family_rank(p)
    p.add_argument("--set")
    p.add_argument("--wrap")
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("orbit")
    family_rank(p)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--out", choices=["dot", "json", "csv"], default="json")
    p.add_argument("--mu")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("member")
    p.add_argument("--input", required=True)
    p.add_argument("--max-steps", type=int, default=256)

    p = sub.add_parser("pohozaev")
    p.add_argument("--input", required=True)

    p = sub.add_parser("fold")
    p.add_argument("--input", required=True)

    p = sub.add_parser("rotate")
    p.add_argument("--input", required=True)
    p.add_argument("--r", type=int, required=True)

    p = sub.add_parser("sperm")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--word", default="")
    p.add_argument("--check", action="store_true")

    p = sub.add_parser("blowup-step")
    family_rank(p)
    p.add_argument("--case", required=True)
    p.add_argument("--blocks", required=True)
    p.add_argument("--input")

    return parser


_HANDLERS = {
    "relations": _cmd_relations,
    "chain": _cmd_chain,
    "orbit": _cmd_orbit,
    "member": _cmd_member,
    "pohozaev": _cmd_pohozaev,
    "fold": _cmd_fold,
    "rotate": _cmd_rotate,
    "sperm": _cmd_sperm,
    "blowup-step": _cmd_blowup_step,
}


def run(argv, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write("usage error: %s\n" % exc)
        return 1
    try:
        return _HANDLERS[args.verb](args, out)
    except UsageError as exc:
        err.write("usage error: %s\n" % exc)
        return 1
    except FileNotFoundError as exc:
        err.write("cannot read input: %s\n" % exc)
        return 1
    except TodamassError as exc:
        err.write("%s: %s\n" % (type(exc).__name__, exc))
        return 2 if not _is_input_error(exc) else 1
    except (OSError, ValueError) as exc:
        err.write("error: %s\n" % exc)
        return 1


def _is_input_error(exc: TodamassError) -> bool:
    from .errors import FormatError, RankError
    return isinstance(exc, (FormatError, RankError))


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
