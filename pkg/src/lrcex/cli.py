"""Command-line front end: ``lrcex <subcommand> ...``.

Every subcommand builds an :class:`OutputRecord` and renders it as a table,
JSON or CSV. Exit status is 0 when the computation finished and every
requested cross-check agreed, 1 when a check failed, 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any

from . import families, lr, quiver
from .partition import Partition, PartitionError, parse_partition, render_partition, skew, stretch

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    command: str
    inputs: dict
    result: Any
    checks: list[dict] = field(default_factory=list)
    elapsed_ms: float = 0.0

    def add_check(self, name: str, lhs, rhs, passed: bool | None = None):
        self.checks.append(
            {"name": name, "lhs": lhs, "rhs": rhs, "pass": lhs == rhs if passed is None else passed}
        )

    @property
    def ok(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def to_dict(self) -> dict:
        # elapsed time stays out of the payload so output is reproducible
        return {
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "checks": self.checks,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, default=_jsonable)

    @classmethod
    def from_json(cls, text: str) -> OutputRecord:
        d = json.loads(text)
        return cls(d["command"], d["inputs"], d["result"], d["checks"])


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _table_rows(result) -> list[dict] | None:
    if isinstance(result, dict) and isinstance(result.get("rows"), list):
        return result["rows"]
    return None


def render_table(rec: OutputRecord) -> str:
    out = [f"# {rec.command}  " + "  ".join(f"{k}={v}" for k, v in rec.inputs.items())]
    rows = _table_rows(rec.result)
    if rows:
        cols = list(rows[0])
        cells = [[str(r.get(c, "")) for c in cols] for r in rows]
        widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(cols)]
        out.append("  ".join(c.rjust(w) for c, w in zip(cols, widths)))
        out.extend("  ".join(x.rjust(w) for x, w in zip(r, widths)) for r in cells)
        extra = {k: v for k, v in rec.result.items() if k != "rows"}
    else:
        extra = rec.result if isinstance(rec.result, dict) else {"value": rec.result}
    for k, v in extra.items():
        if isinstance(v, str) and "\n" in v:
            out.append(f"{k}:\n{v}")
        elif isinstance(v, list) and v and all(isinstance(x, str) and "\n" in x for x in v):
            out.append(f"{k}:")
            out.extend(x + "\n" for x in v)
        else:
            out.append(f"{k}: {_plain(v)}")
    for c in rec.checks:
        out.append(f"[{'PASS' if c['pass'] else 'FAIL'}] {c['name']}: {c['lhs']} vs {c['rhs']}")
    out.append(f"({rec.elapsed_ms:.1f} ms)")
    return "\n".join(out)


def _plain(v):
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(str(_plain(x)) for x in v) + "]"
    return str(v)


def render_csv(rec: OutputRecord) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    rows = _table_rows(rec.result)
    if rows:
        cols = list(rows[0])
        w.writerow(cols)
        for r in rows:
            w.writerow([_plain(r.get(c, "")) for c in cols])
    else:
        items = rec.result.items() if isinstance(rec.result, dict) else [("value", rec.result)]
        w.writerow(["key", "value"])
        for k, v in items:
            w.writerow([k, _plain(v)])
    for c in rec.checks:
        w.writerow(["check", c["name"], c["lhs"], c["rhs"], c["pass"]])
    return buf.getvalue().rstrip("\n")


def render(rec: OutputRecord, fmt: str) -> str:
    if fmt == "json":
        return rec.to_json()
    if fmt == "csv":
        return render_csv(rec)
    return render_table(rec)


# -- argument helpers -----------------------------------------------------------


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except PartitionError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _rect(text: str) -> tuple[int, int]:
    try:
        m, _, l = text.partition("^")
        return int(m), int(l or 1)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected m^l, got {text!r}") from exc


def _n_range(text: str) -> tuple[int, int]:
    for sep in ("..", "-", ":"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            return int(lo), int(hi)
    return int(text), int(text)


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    return int(os.environ.get("LRCEX_THREADS", "1"))


def _guard_boxes(args, boxes: int):
    if boxes > args.timeout_boxes and not args.force:
        raise UsageError(
            f"direct enumeration over {boxes} boxes exceeds --timeout-boxes={args.timeout_boxes}; "
            "pass --force to run anyway"
        )


# -- subcommands ----------------------------------------------------------------


def cmd_lr(args) -> OutputRecord:
    lam, mu, nu = args.outer, args.inner1, args.inner2
    inputs = {"outer": lam.render(), "inner1": mu.render(), "inner2": nu.render()}
    value = lr.lr_coefficient(lam, mu, nu)
    rec = OutputRecord("lr", inputs, {"value": value})
    if args.enumerate or args.oracle:
        if lam.contains(mu):
            shape = skew(lam, mu)
            _guard_boxes(args, shape.size)
            fillings = lr.enumerate_lr_fillings(shape, nu)
        else:
            fillings = []
        if args.enumerate:
            rec.result["fillings"] = [f.render() for f in fillings]
        if args.oracle:
            rec.add_check("counting vs enumeration", value, len(fillings))
    return rec


def cmd_multi_lr(args) -> OutputRecord:
    gamma, factors = args.outer, args.factor
    inputs = {"outer": gamma.render(), "factors": [f.render() for f in factors]}
    return OutputRecord("multi-lr", inputs, {"value": lr.multi_lr_coefficient(gamma, factors)})


def cmd_kostka(args) -> OutputRecord:
    if args.family_n is not None:
        lam, rects = families.kostka_family(args.family_n)
        lam, rects = stretch(args.m, lam), rects.stretch(args.m)
    else:
        if args.lam is None or not args.rect:
            raise UsageError("give --lam and at least one --rect, or --family-n")
        lam, rects = args.lam, families.RectangleSequence(tuple(args.rect))
    inputs = {"lam": lam.render(), "rects": [f"{m}^{l}" for m, l in rects.rectangles]}
    return OutputRecord("kostka", inputs, {"value": families.parabolic_kostka(lam, rects)})


def cmd_counterexample(args) -> OutputRecord:
    lo, hi = _n_range(args.n)
    if lo < 1 or hi < lo:
        raise UsageError(f"bad n range {args.n!r}")
    if args.N < 1:
        raise UsageError("--N must be >= 1")
    records = families.counterexample_report(
        lo, hi, family=args.family, N=args.N, verify_direct=args.verify_direct,
        si_bound=args.si_bound, threads=_threads(args),
    )
    inputs = {"family": args.family, "n": [lo, hi], "N": args.N, "verify_direct": args.verify_direct}
    rows = []
    rec = OutputRecord("counterexample", inputs, {"rows": rows})
    for r in records:
        before, here, after = r.context["values"]
        rows.append({
            "n": r.context["n"], "value(N-1)": before, "value(N)": here, "value(N+1)": after,
            "lhs": r.lhs, "rhs": r.rhs, "holds": r.holds,
        })
        for c in r.checks:
            rec.add_check(f"n={r.context['n']} {c.name}", c.lhs, c.rhs)
    return rec


EULER_PRESETS = {
    "t434-pair": "<e2, e1> on T_{4,3,4}",
    "k4star-pair": "<e2, e1> on the four-leaf star",
    "theta3-beta": "<(1,2), (1,2)> on theta(3)",
}


def cmd_quiver(args) -> OutputRecord:
    action = args.action
    if action == "euler":
        if args.preset:
            if args.preset == "t434-pair":
                q, pair = quiver.paper_quiver_T434()
                a, b = pair.e2, pair.e1
            elif args.preset == "k4star-pair":
                q, pair = quiver.paper_quiver_K4star()
                a, b = pair.e2, pair.e1
            else:
                q = quiver.kronecker_quiver(3)
                a = b = q.vector((1, 2))
            inputs = {"preset": args.preset}
        else:
            if args.alpha is None or args.beta is None:
                raise UsageError("give --preset or --alpha and --beta")
            q = quiver.kronecker_quiver(args.l)
            a, b = q.vector(args.alpha), q.vector(args.beta)
            inputs = {"l": args.l, "alpha": list(args.alpha), "beta": list(args.beta)}
        return OutputRecord("quiver euler", inputs, {"value": quiver.euler_form(q, a, b)})
    if action == "si-dim":
        inputs = {"l": args.l, "n": args.n, "m": args.m}
        return OutputRecord("quiver si-dim", inputs, {"value": quiver.kronecker_si_dim(args.l, args.n, args.m)})
    if action == "reciprocity":
        l, n, m = args.l, args.n, args.m
        q = quiver.kronecker_quiver(l)
        beta = (m, (l - 1) * m)
        sigma = quiver.weight_of(q, "left", q.vector((n, n))).as_tuple()
        left = quiver.kronecker_si_dim(l, n, m)
        right = quiver.kronecker_si_dim_general(l, beta, sigma)
        rec = OutputRecord(
            "quiver reciprocity", {"l": l, "n": n, "m": m},
            {"SI(theta,(n,n))_(-m,m)": left, f"SI(theta,{beta})_{sigma}": right},
        )
        rec.add_check("reciprocity", left, right)
        return rec
    if action == "embed-check":
        n, m = args.n, args.m
        lam, mu = families.okounkov_family(n)
        left = quiver.kronecker_si_dim(3, n, m)
        right = lr.lr_coefficient(stretch(m, lam), stretch(m, mu), stretch(m, mu))
        rec = OutputRecord(
            "quiver embed-check", {"n": n, "m": m},
            {"si_dim": left, "lr": right, "agree": left == right},
        )
        rec.add_check("SI(theta(3),(n,n))_(-m,m) = c^{m lam(n)}_{m mu(n), m mu(n)}", left, right)
        return rec
    raise UsageError(f"unknown quiver action {action!r}")


def cmd_stretch(args) -> OutputRecord:
    table = lr.stretched_values(args.lam, args.mu, args.nu, args.n_max)
    inputs = {"lam": args.lam.render(), "mu": args.mu.render(), "nu": args.nu.render(), "n_max": args.n_max}
    result: dict[str, Any] = {"values": list(table.values)}
    if len(table.values) < 2:
        result["degree"] = None
        result["verdict"] = "cannot confirm degree"
        return OutputRecord("stretch", inputs, result)
    fit = lr.fit_polynomial(table.values)
    result["degree"] = fit.degree
    result["coefficients"] = [str(c) for c in fit.coefficients]
    if fit.confirmed:
        result["constant_term"] = str(fit.constant_term)
        result["constant_is_one"] = fit.constant_term == 1
        result["verdict"] = f"degree {fit.degree} confirmed"
    else:
        result["verdict"] = "cannot confirm degree"
    return OutputRecord("stretch", inputs, result)


def cmd_horn(args) -> OutputRecord:
    n = args.n
    count = families.horn_count_two_rows(n)
    result: dict[str, Any] = {"count": count}
    if args.list:
        result["rows"] = [
            {
                "lambda1": render_partition(t[0]), "lambda2": render_partition(t[1]),
                "lambda3": render_partition(t[2]),
                "monomial": list(families.horn_monomial(n, t)),
            }
            for t in families.horn_triples(n)
        ]
    rec = OutputRecord("horn", {"n": n}, result)
    rec.add_check("count = binom(n+5, 5)", count, comb(n + 5, 5))
    return rec


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--threads", type=int, default=None,
                        help="worker threads (default: $LRCEX_THREADS or 1)")

    parser = argparse.ArgumentParser(
        prog="lrcex",
        description="Exact LR coefficients, quiver semi-invariants and log-concavity counterexamples.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lr", parents=[common], help="LR coefficient c^outer_{inner1,inner2}")
    p.add_argument("--outer", type=_partition, required=True)
    p.add_argument("--inner1", type=_partition, required=True)
    p.add_argument("--inner2", type=_partition, required=True)
    p.add_argument("--enumerate", action="store_true", help="also print every LR filling")
    p.add_argument("--oracle", action="store_true", help="cross-check against full enumeration")
    p.add_argument("--timeout-boxes", type=int, default=60)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("multi-lr", parents=[common], help="multi-factor LR coefficient")
    p.add_argument("--outer", type=_partition, required=True)
    p.add_argument("--factor", type=_partition, action="append", required=True)
    p.set_defaults(func=cmd_multi_lr)

    p = sub.add_parser("kostka", parents=[common], help="parabolic Kostka number")
    p.add_argument("--lam", type=_partition)
    p.add_argument("--rect", type=_rect, action="append", help="rectangle m^l (repeatable)")
    p.add_argument("--family-n", type=int, help="use lambda(n), R(n) of the counterexample family")
    p.add_argument("--m", type=int, default=1, help="stretch factor for --family-n")
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("counterexample", parents=[common], help="log-concavity report over n")
    p.add_argument("--family", choices=("okounkov", "kostka"), default="okounkov")
    p.add_argument("--n", required=True, help="n or a range such as 20..22")
    p.add_argument("--N", type=int, default=1)
    p.add_argument("--verify-direct", action="store_true",
                   help="cross-check against direct LR/Kostka computation at small n")
    p.add_argument("--si-bound", type=int, default=8,
                   help="largest n where the Horn count is checked against the Cauchy sum")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("quiver", parents=[common], help="quiver computations")
    p.add_argument("action", choices=("euler", "si-dim", "reciprocity", "embed-check"))
    p.add_argument("--preset", choices=tuple(EULER_PRESETS))
    p.add_argument("--alpha", type=_int_list)
    p.add_argument("--beta", type=_int_list)
    p.add_argument("--l", type=int, default=3)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--m", type=int, default=1)
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("stretch", parents=[common], help="stretched LR values and polynomial fit")
    p.add_argument("--lam", type=_partition, required=True)
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--nu", type=_partition, required=True)
    p.add_argument("--n-max", type=int, default=6)
    p.set_defaults(func=cmd_stretch)

    p = sub.add_parser("horn", parents=[common], help="count two-row Horn triples")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--list", action="store_true", help="list triples and their monomials")
    p.set_defaults(func=cmd_horn)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        rec = args.func(args)
    except (UsageError, PartitionError, ValueError) as exc:
        print(f"lrcex: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rec.elapsed_ms = (time.perf_counter() - start) * 1000
    print(render(rec, args.format))
    if not rec.ok:
        for c in rec.checks:
            if not c["pass"]:
                print(f"lrcex: check failed: {c['name']}: {c['lhs']} != {c['rhs']}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
