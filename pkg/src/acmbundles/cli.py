"""Command line front end.

Exit status: 0 on success, 2 when an input violates a precondition, 1 when
an internal consistency check fails (theorem/oracle mismatch, corollary
violation).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import step_matrix
from .acm import is_acm, verify_equivalence
from .bbw import cohomology
from .corollaries import validate_corollaries
from .enumerator import enumerate_acm, format_atlas, atlas_rows
from .lie import FlagSpace, ValidationError


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"weight must be a comma list of integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", required=True, choices=["B", "C", "D"], dest="lie_type")
    common.add_argument("--rank", required=True, type=int)
    common.add_argument("--format", default="plain", choices=["plain", "json", "latex", "csv"])
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--jobs", type=int, default=1)

    need_k = argparse.ArgumentParser(add_help=False)
    need_k.add_argument("--k", required=True, type=int)
    opt_k = argparse.ArgumentParser(add_help=False)
    opt_k.add_argument("--k", type=int, help="marked node; all nodes when omitted")
    weight = argparse.ArgumentParser(add_help=False)
    weight.add_argument("--weight", required=True, type=_weight,
                        help="a_1,...,a_n including the marked coefficient")

    p = _Parser(prog="acmbundles", description="ACM homogeneous bundles on isotropic Grassmannians")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("step-matrix", parents=[common, need_k, weight], help="print the step matrix")
    c = sub.add_parser("check", parents=[common, need_k, weight], help="decide ACM")
    c.add_argument("--verbose", action="store_true", help="list every gap / witness")
    h = sub.add_parser("cohomology", parents=[common, need_k, weight],
                       help="Borel-Bott-Weil cohomology of E_lambda(-t)")
    h.add_argument("--t", type=int, default=0)
    sub.add_parser("enumerate", parents=[common, opt_k], help="all initialized ACM weights")
    v = sub.add_parser("verify", parents=[common, opt_k], help="step matrix vs. oracle sweep")
    v.add_argument("--sum-bound", type=int, default=4)
    r = sub.add_parser("corollaries", parents=[common, need_k], help="check closed-form families")
    r.add_argument("--margin", type=int, default=2)
    return p


def _spaces(args) -> list[FlagSpace]:
    if args.k is not None:
        return [FlagSpace(args.lie_type, args.rank, args.k)]
    FlagSpace(args.lie_type, args.rank, 1)  # rank validation
    seen, out = set(), []
    for k in range(1, args.rank + 1):
        sp = FlagSpace(args.lie_type, args.rank, k)
        if sp.k not in seen:
            seen.add(sp.k)
            out.append(sp)
    return out


def _cmd_step_matrix(args) -> tuple[str, int]:
    sp = FlagSpace(args.lie_type, args.rank, args.k)
    sm = step_matrix.build(sp, sp.weight(args.weight))
    fmt = "plain" if args.format == "csv" else args.format
    return step_matrix.render(sm, fmt), 0


def _cmd_check(args) -> tuple[str, int]:
    sp = FlagSpace(args.lie_type, args.rank, args.k)
    v = is_acm(sp, sp.weight(args.weight), verbose=args.verbose)
    if args.format == "json":
        return json.dumps({
            "type": str(sp.lie_type), "n": sp.n, "k": sp.k,
            "lambda": list(v.weight), "is_acm": v.is_acm, "M": v.M.to_json(),
            "twist_applied": v.twist_applied, "missing": v.missing,
            "gaps": list(v.gaps) if args.verbose else None,
            "witnesses": {str(l): list(pos) for l, pos in v.witnesses.items()},
            "remapped": sp.remapped,
        }, separators=(",", ":")), 0
    lines = [v.summary()]
    if sp.remapped:
        lines.append(f"note: k={sp.n - 1} treated as k={sp.n} (a_{sp.n - 1} and a_{sp.n} swapped)")
    if v.twist_applied:
        lines.append(f"twist applied: {v.twist_applied} (initialized weight {list(v.weight)})")
    if args.verbose:
        if v.is_acm:
            lines += [f"  l={l}: {b}[{i},{j}]" for l, (b, i, j) in v.witnesses.items()]
        else:
            lines.append(f"  gaps: {list(v.gaps)}")
    return "\n".join(lines), 0


def _cmd_cohomology(args) -> tuple[str, int]:
    sp = FlagSpace(args.lie_type, args.rank, args.k)
    res = cohomology(sp, sp.weight(args.weight), args.t)
    if args.format == "json":
        return json.dumps({
            "degree": res.degree,
            "weight": None if res.is_zero else list(res.weight),
            "dimension": res.dimension,
        }, separators=(",", ":")), 0
    if res.is_zero:
        return "all cohomology vanishes", 0
    return f"H^{res.degree} = V{list(res.weight)}, dimension {res.dimension}", 0


def _cmd_enumerate(args) -> tuple[str, int]:
    spaces = _spaces(args)
    if args.format in ("csv", "json"):
        return format_atlas(atlas_rows(spaces, jobs=args.jobs), "csv" if args.format == "csv" else "jsonl").rstrip("\n"), 0
    lines = []
    for sp in spaces:
        res = enumerate_acm(sp, jobs=args.jobs)
        lines.append(f"{sp}: {len(res.acm_weights)} initialized ACM weights "
                     f"({res.candidates_scanned} candidates, {res.bound_used})")
        lines += [f"  {list(w)}" for w in res.acm_weights]
    return "\n".join(lines), 0


def _cmd_verify(args) -> tuple[str, int]:
    if args.sum_bound < 0:
        raise ValidationError("--sum-bound must be non-negative")
    reports = [verify_equivalence(sp, args.sum_bound, jobs=args.jobs) for sp in _spaces(args)]
    bad = any(r.mismatches for r in reports)
    if args.format == "json":
        text = "".join(r.jsonl() for r in reports).rstrip("\n")
    else:
        text = "\n".join(r.summary() for r in reports)
    return text, 1 if bad else 0


def _cmd_corollaries(args) -> tuple[str, int]:
    sp = FlagSpace(args.lie_type, args.rank, args.k)
    checks = validate_corollaries(sp, margin=args.margin)
    if args.format == "json":
        text = json.dumps([{
            "family": c.family.name, "kind": c.family.kind, "condition": c.family.description,
            "swept": c.swept, "inside": c.inside, "ok": c.ok,
            "violations": [list(lam) for lam, _, _ in c.violations],
        } for c in checks], separators=(",", ":"))
    else:
        text = "\n".join(c.summary() for c in checks) or f"{sp}: no closed-form family applies"
    return text, 0 if all(c.ok for c in checks) else 1


_COMMANDS = {
    "step-matrix": _cmd_step_matrix,
    "check": _cmd_check,
    "cohomology": _cmd_cohomology,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "corollaries": _cmd_corollaries,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, code = _COMMANDS[args.command](args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
            return 2
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
