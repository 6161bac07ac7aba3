"""Command-line interface.

Exit codes: 0 ok, 1 internal error, 2 input error, 3 Komeda case,
4 no slider found, 5 conjecture finding.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from typing import Optional

from . import families, reports
from .bn import VanishingSequence, rho
from .core import (
    NumericalSemigroup,
    composite_gap_pairs,
    invariants,
    parse_semigroup,
)
from .errors import InvalidInput, SemigroupError, SpecParseError
from .slide import Outcome, certificate_chain
from .tree import DEFAULT_SPLIT_DEPTH, EnumerationFilter, enumerate_parallel

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INPUT = 2
EXIT_KOMEDA = 3
EXIT_NO_SLIDER = 4
EXIT_FINDING = 5

CHAIN_EXIT = {
    Outcome.REACHED_ORDINARY: EXIT_OK,
    Outcome.KOMEDA_EXCEPTION: EXIT_KOMEDA,
    Outcome.NO_SLIDER_FOUND: EXIT_NO_SLIDER,
}

log = logging.getLogger("weierstrass")


@dataclass
class RunConfig:
    command: str
    semigroup_spec: Optional[str] = None
    max_genus: int = 0
    ew_bound: Optional[int] = None
    jobs: int = 1
    output_format: str = "human"
    output_path: Optional[str] = None


def parse_spec(text: str) -> NumericalSemigroup:
    """``gens:...``, ``gaps:...`` or ``family:NAME k=v ...``."""
    text = text.strip()
    if not text.startswith("family:"):
        return parse_semigroup(text)
    body = text[len("family:"):].replace(",", " ").split()
    if not body:
        raise SpecParseError(text, 7, "missing family name")
    return describe_family(body[0], body[1:], text).semigroup


def describe_family(name: str, assignments, text: Optional[str] = None) -> families.FamilyDescriptor:
    text = text or " ".join([name, *assignments])
    try:
        fam = families.Family(name)
    except ValueError:
        known = ", ".join(f.value for f in families.Family)
        raise SpecParseError(text, text.find(name), f"unknown family {name!r} (known: {known})") from None
    params = {}
    for item in assignments:
        key, eq, value = item.partition("=")
        try:
            params[key] = int(value)
        except ValueError:
            raise SpecParseError(text, text.find(item), f"expected key=integer, got {item!r}") from None
        if not eq:
            raise SpecParseError(text, text.find(item), f"expected key=integer, got {item!r}")
    return families.describe(fam, **params)


def _csv_row(d: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(list(d))
    w.writerow([" ".join(map(str, v)) if isinstance(v, list) else v for v in d.values()])
    return buf.getvalue()


def _human(d: dict) -> str:
    return "".join(f"{k}: {v}\n" for k, v in d.items())


def _render(data, fmt: str, text=None, csv_text=None) -> str:
    if fmt == "json":
        return json.dumps(data) + "\n"
    if fmt == "csv":
        return csv_text if csv_text is not None else _csv_row(data)
    return text if text is not None else _human(data)


# -- commands -----------------------------------------------------------------


def cmd_invariants(args):
    S = parse_spec(" ".join(args.spec))
    rec = invariants(S).as_dict()
    g, lam, ew, wt = rec["genus"], rec["lambda"], rec["effective_weight"], rec["weight"]
    data = {"semigroup": str(S), "gaps": list(S.gaps), **rec}
    data["g_minus_lambda"] = g - lam
    data["ew_minus_g_plus_lambda"] = ew - (g - lam)
    data["negatively_graded"] = families.classify_negatively_graded(S)
    data["wt_minus_ew"] = wt - ew
    data["composite_gap_pairs"] = composite_gap_pairs(S)
    return _render(data, args.format), EXIT_OK


def cmd_enumerate(args):
    flt = EnumerationFilter(args.max_genus, ew_bound=args.ew_bound)
    stats = enumerate_parallel(flt, jobs=args.jobs, split_depth=args.split_depth)
    log.info("visited %d nodes in %.2fs", stats.visited, stats.elapsed)
    lines = [f"{'g':>3} {'count':>9} {'max_ew':>6}  witnesses"]
    for g, c in enumerate(stats.counts_by_genus):
        ew, wits = stats.max_ew_by_genus[g]
        lines.append(f"{g:>3} {c:>9} {'' if ew is None else ew:>6}  {', '.join(map(str, wits))}")
    return _render(stats.as_dict(), args.format, "\n".join(lines) + "\n", stats.to_csv()), EXIT_OK


def cmd_conjecture(args):
    report = reports.conjecture_max_ew(args.max_genus, jobs=args.jobs, split_depth=args.split_depth)
    for row in report.findings:
        log.warning("FINDING at g=%d: %s (max ew %d, bound %d)", row.g, row.status, row.max_ew, row.bound)
    code = EXIT_OK if report.ok else EXIT_FINDING
    return _render(report.as_dict(), args.format, report.to_text(), report.to_csv()), code


def cmd_chain(args):
    S = parse_spec(" ".join(args.spec))
    chain = certificate_chain(S)
    lines = [f"start: {S}"]
    for i, step in enumerate(chain.steps, 1):
        lines.append(
            f"{i:>3}. slide_{step.k} ({step.rule}): {step.before} -> {step.after}"
            f"  T={list(step.t_before)} -> {list(step.t_after)}"
        )
    lines.append(f"terminal: {chain.terminal}")
    lines.append(f"outcome: {chain.outcome.value} after {len(chain.steps)} step(s)")
    rows = [s.as_dict() for s in chain.steps]
    csv_text = _table_csv(["before", "k", "after", "T", "T_next"], [
        [r["before"], r["k"], r["after"], " ".join(map(str, r["T"])), " ".join(map(str, r["T_next"]))]
        for r in rows
    ])
    return _render(chain.as_dict(), args.format, "\n".join(lines) + "\n", csv_text), CHAIN_EXIT[chain.outcome]


def _table_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_table(args):
    t = reports.table(args.kind, args.max_genus, ew_bound=args.ew_bound, jobs=args.jobs)
    if args.format == "json":
        return t.to_json() + "\n", EXIT_OK
    if args.format == "csv":
        return t.to_csv(), EXIT_OK
    return t.to_text(), EXIT_OK


def _parse_seq(text: str, d: int) -> VanishingSequence:
    try:
        values = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise InvalidInput(f"cannot parse vanishing sequence {text!r}") from None
    return VanishingSequence(d, values)


def cmd_rho(args):
    seqs = [_parse_seq(s, args.d) for s in args.seq]
    value = rho(args.g, args.r, args.d, seqs)
    data = {"g": args.g, "r": args.r, "d": args.d, "sequences": [list(s) for s in seqs], "rho": value}
    return _render(data, args.format, f"{value}\n"), EXIT_OK


def cmd_check_identities(args):
    result = reports.check_identities(args.max_genus, args.samples, args.seed)
    lines = []
    for key in ("dim_identity", "bn_additivity", "elliptic_rho"):
        r = result[key]
        lines.append(f"{key}: {r['checked']} checked, {r['failed']} failed")
    lines.extend(result["failures"])
    flat = {k: v for k, v in result.items() if k != "failures"}
    code = EXIT_OK if result["ok"] else EXIT_INTERNAL
    csv_text = _table_csv(["identity", "checked", "failed"], [
        [k, result[k]["checked"], result[k]["failed"]] for k in ("dim_identity", "bn_additivity", "elliptic_rho")
    ])
    return _render(flat if args.format != "json" else result, args.format, "\n".join(lines) + "\n", csv_text), code


def cmd_family(args):
    desc = describe_family(args.name, args.params)
    data = {
        "family": desc.family.value,
        "params": desc.params,
        "semigroup": str(desc.semigroup),
        "gaps": list(desc.semigroup.gaps),
        "predicted": desc.predicted,
        "computed": desc.computed(),
        "ok": desc.ok(),
    }
    text = (
        f"{desc.family.value} {' '.join(f'{k}={v}' for k, v in desc.params.items())}: {desc.semigroup}\n"
        f"gaps: {list(desc.semigroup.gaps)}\n"
        + "".join(f"{k}: predicted {v}, computed {desc.computed().get(k, '-')}\n" for k, v in desc.predicted.items())
    )
    csv_text = _table_csv(["family", "semigroup", *[f"predicted_{k}" for k in desc.predicted], "ok"],
                          [[desc.family.value, str(desc.semigroup), *desc.predicted.values(), desc.ok()]])
    return _render(data, args.format, text, csv_text), EXIT_OK if desc.ok() else EXIT_INTERNAL


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json", "csv"), default="human")
    common.add_argument("--out", metavar="PATH", help="write data here instead of stdout")
    common.add_argument("--quiet", action="store_true", help="suppress progress on stderr")

    def search_flags(p, ew_bound=True, max_genus_default=None):
        p.add_argument("--max-genus", type=int, required=max_genus_default is None, default=max_genus_default)
        if ew_bound:
            p.add_argument("--ew-bound", type=int, default=None)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--split-depth", type=int, default=DEFAULT_SPLIT_DEPTH)

    parser = argparse.ArgumentParser(prog="weierstrass", description="Numerical semigroups and effective weight.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inv", parents=[common], help="invariants of one semigroup")
    p.add_argument("spec", nargs="+", help="gens:..., gaps:... or family:NAME k=v ...")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("enumerate", parents=[common], help="walk the semigroup tree")
    search_flags(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("conjecture", help="conjecture searches")
    csub = p.add_subparsers(dest="conjecture", required=True)
    q = csub.add_parser("max-ew", parents=[common], help="max effective weight per genus vs floor((g+1)^2/8)")
    search_flags(q, ew_bound=False)
    q.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("chain", parents=[common], help="good-slider chain down to an ordinary semigroup")
    p.add_argument("spec", nargs="+")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("table", parents=[common], help="tabulate per-genus data")
    p.add_argument("kind", choices=reports.TABLE_KINDS)
    search_flags(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("rho", parents=[common], help="adjusted Brill-Noether number")
    p.add_argument("-g", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--seq", action="append", default=[], help="vanishing sequence, e.g. 0,3,5 (repeatable)")
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("check-identities", parents=[common], help="sweep the dimension and rho identities")
    p.add_argument("--max-genus", type=int, default=12)
    p.add_argument("--samples", type=int, default=10**4)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_check_identities)

    p = sub.add_parser("family", parents=[common], help="construct a named family member")
    p.add_argument("name", choices=[f.value for f in families.Family])
    p.add_argument("params", nargs="*", metavar="KEY=VALUE")
    p.set_defaults(func=cmd_family)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(
        level=logging.WARNING if args.quiet else logging.INFO,
        format="%(name)s: %(message)s",
        stream=sys.stderr,
    )
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        output, code = args.func(args)
    except (SemigroupError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001 - exit-code contract
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(output)
    else:
        sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
