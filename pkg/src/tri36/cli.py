"""Command-line interface: ``tri36 {count,orbit,build,verify}``.

Results go to stdout as JSON (or CSV for ``count``); progress goes to
stderr.  Exit status is 0 on success, 2 for bad input and 3 when an
internal consistency check fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from . import enumerate as en
from .errors import ConsistencyError, DomainError
from .ivec import IndexVector, check_vector, code, improper_form, is_akempic_arith, mirror, orbit
from .tri import build, canonical_form_hex, index_vectors_from_graph
from .verify import SUITES, run_suites

__all__ = ["main", "parse_range"]

log = logging.getLogger("tri36")

EXIT_OK, EXIT_DOMAIN, EXIT_CONSISTENCY = 0, 2, 3


def parse_range(text: str) -> list[int]:
    """``"a..b"`` (inclusive) or a bare integer."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise DomainError(f"bad range {text!r}; expected N or A..B") from None
    if lo < 1 or hi < lo:
        raise DomainError(f"bad range {text!r}; need 1 <= A <= B")
    return list(range(lo, hi + 1))


def _flatten(row: dict) -> dict:
    out = {}
    for key, val in row.items():
        if isinstance(val, dict):
            for sub, x in val.items():
                out[f"{key}_{sub}"] = x
        else:
            out[key] = val
    return out


def _emit(doc, fmt: str = "json") -> None:
    if fmt == "csv":
        rows = [_flatten(r) for r in doc]
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else ["n"], lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")


def _vector(args) -> IndexVector:
    v = check_vector((args.k, args.m, args.s))
    form = improper_form(v)
    if form is not None:
        raise DomainError(f"improper: {form}")
    return v


def cmd_count(args) -> int:
    rows = en.count_table(parse_range(args.n), args.what, args.mode)
    _emit(rows, args.format)
    return EXIT_OK


def cmd_orbit(args) -> int:
    v = _vector(args)
    c = code(v)
    _emit(
        {
            "orbit": orbit(v).to_json(),
            "mirror_orbit": orbit(mirror(v)).to_json(),
            "code": c.to_json(),
            "symmetric": c.symmetric,
            "akempic": is_akempic_arith(v),
        }
    )
    return EXIT_OK


def cmd_build(args) -> int:
    v = _vector(args)
    g = build(v)
    vectors = index_vectors_from_graph(g, 0, g.rotation[0][0])
    if args.out:
        Path(args.out).write_text(g.to_json() + "\n")
        log.info("wrote %s", args.out)
    if args.edge_list:
        Path(args.edge_list).write_text(g.edge_list_json() + "\n")
        log.info("wrote %s", args.edge_list)
    _emit(
        {
            "vertices": g.vertex_count,
            "index_vectors": [list(x) for x in vectors],
            "canonical_form": canonical_form_hex(g),
        }
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = [x.strip() for x in args.suites.split(",") if x.strip()]
    results = run_suites(args.max_n, suites)
    ok = all(r.passed for r in results)
    _emit({"max_n": args.max_n, "passed": ok, "checks": [r.to_json() for r in results]})
    return EXIT_OK if ok else EXIT_CONSISTENCY


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tri36", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="tabulate d(n), a(n), symmetric counts or code-order histograms")
    c.add_argument("--n", required=True, help="N or A..B inclusive")
    c.add_argument("--what", choices=["d", "a", "symmetric", "histogram"], default="d")
    c.add_argument("--mode", choices=["formula", "partition", "both"], default="formula")
    c.add_argument("--format", choices=["json", "csv"], default="json")
    c.set_defaults(func=cmd_count)

    for name, func, helptext in (
        ("orbit", cmd_orbit, "orbit, mirror orbit and code of an index vector"),
        ("build", cmd_build, "construct the triangulation of an index vector"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("k", type=int)
        s.add_argument("m", type=int)
        s.add_argument("s", type=int)
        s.set_defaults(func=func)
        if name == "build":
            s.add_argument("-o", "--out", help="write graph JSON here")
            s.add_argument("--edge-list", help="write sorted edge list JSON here")

    v = sub.add_parser("verify", help="run invariant suites")
    v.add_argument("--max-n", type=int, default=12)
    v.add_argument("--suites", default=",".join(SUITES), help="comma-separated subset of " + ",".join(SUITES))
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY


if __name__ == "__main__":
    sys.exit(main())
