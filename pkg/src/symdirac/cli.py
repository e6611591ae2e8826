"""Command-line front end.

Commands: verify, commutator, kernel, spectrum, table.  Exit code 0 when
every requested check passes, 1 when a check fails, 2 on invalid usage.
Reports are deterministic: identical configuration gives byte-identical
output.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from math import comb

from . import _core
from .kernel import hermite_eigenspaces, monogenic_dims
from .operators import catalog, catalog_names
from .spinor import MODELS, WEIGHTED
from .table import paper_table_diff
from .verify import SCHEMA_VERSION, run_verification
from .weyl import commutator

_NAME_RE = re.compile(r"^\s*(~?[A-Za-z_+^]+[A-Za-z0-9_+^]*?)\s*(?:\[(\d+)(?:\s*,\s*(\d+))?\])?\s*$")


def _parse_operator(text, n):
    m = _NAME_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse operator name: {text!r}")
    name = m.group(1)
    indices = None
    if m.group(2):
        indices = (int(m.group(2)),) if m.group(3) is None else (
            int(m.group(2)),
            int(m.group(3)),
        )
    return catalog(name, n, indices)


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cmd_verify(args):
    report = run_verification(args.n)
    if args.format == "json":
        _emit(report.to_json(), args.out)
    elif args.format == "csv":
        _emit(report.to_csv(), args.out)
    else:
        _emit(report.to_text(), args.out)
    return 0 if report.passed else 1


def _cmd_commutator(args):
    try:
        a = _parse_operator(args.a, args.n)
        b = _parse_operator(args.b, args.n)
    except (KeyError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    bracket = commutator(a, b)
    if args.format == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "n": args.n,
            "a": args.a,
            "b": args.b,
            "pretty": bracket.pretty(),
            "bracket": bracket.to_dict(),
        }
        _emit(json.dumps(payload, sort_keys=True, indent=2), args.out)
    elif args.format == "csv":
        rows = ["coeff,x,y,q,dx,dy,dq"]
        d = bracket.to_dict()
        for t in d["terms"]:
            rows.append(
                ",".join(
                    [f"\"{t['coeff']}\""]
                    + [" ".join(map(str, t[blk])) for blk in ("x", "y", "q", "dx", "dy", "dq")]
                )
            )
        _emit("\n".join(rows), args.out)
    else:
        _emit(bracket.pretty(), args.out)
    return 0


def _cmd_kernel(args):
    report = monogenic_dims(args.n, args.k, args.m, args.model)
    ok = report.dim_joint <= min(report.dim_ker_Ds, report.dim_ker_DsTilde)
    if args.model == WEIGHTED:
        ok = ok and report.dim_joint >= report.holomorphic_lower_bound
    if args.format == "json":
        payload = {"schema_version": SCHEMA_VERSION, **report.to_dict()}
        _emit(json.dumps(payload, sort_keys=True, indent=2), args.out)
    elif args.format == "csv":
        _emit(report.CSV_HEADER + "\n" + report.to_csv_row(), args.out)
    else:
        lines = [
            f"kernel dimensions on P_{args.k} x S_<= {args.m} (n={args.n}, {args.model} model)",
            f"  dim ker D_s        = {report.dim_ker_Ds}",
            f"  dim ker ~D_s       = {report.dim_ker_DsTilde}",
            f"  dim joint kernel   = {report.dim_joint}",
            f"  holomorphic floor  = {report.holomorphic_lower_bound}",
        ]
        _emit("\n".join(lines), args.out)
    return 0 if ok else 1


def _cmd_spectrum(args):
    pairs = hermite_eigenspaces(args.n, args.kmax)
    ok = all(dim == comb(args.n + k - 1, k) for k, (_, dim) in enumerate(pairs))
    if args.format == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "n": args.n,
            "kmax": args.kmax,
            "eigenspaces": [
                {"k": k, "eigenvalue": str(ev), "dimension": dim}
                for k, (ev, dim) in enumerate(pairs)
            ],
        }
        _emit(json.dumps(payload, sort_keys=True, indent=2), args.out)
    elif args.format == "csv":
        rows = ["n,k,eigenvalue,dimension"]
        rows += [f"{args.n},{k},{ev},{dim}" for k, (ev, dim) in enumerate(pairs)]
        _emit("\n".join(rows), args.out)
    else:
        lines = [f"Hermite spectrum on q-degree <= {args.kmax} (n={args.n}, weighted model)"]
        lines += [f"  k={k}: eigenvalue {ev}, dimension {dim}" for k, (ev, dim) in enumerate(pairs)]
        _emit("\n".join(lines), args.out)
    return 0 if ok else 1


def _cmd_table(args):
    td = paper_table_diff(args.n)
    if args.format == "json":
        payload = {"schema_version": SCHEMA_VERSION, **td.to_dict()}
        _emit(json.dumps(payload, sort_keys=True, indent=2), args.out)
    elif args.format == "csv":
        rows = ["row,col,printed,computed,status,scalar,central"]
        for c in td.cells:
            rows.append(
                ",".join(
                    [
                        c.row,
                        c.col,
                        f'"{c.printed}"',
                        f'"{c.computed}"',
                        c.status,
                        c.scalar or "",
                        c.central or "",
                    ]
                )
            )
        _emit("\n".join(rows), args.out)
    else:
        _emit(td.to_text(), args.out)
    return 0 if td.certified() else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="symdirac",
        description=(
            "Exact verification engine for symplectic Dirac operators "
            f"(arithmetic backend: {_core.BACKEND})"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n_default=3):
        p.add_argument("--n", type=int, default=n_default, help="number of base pairs")
        p.add_argument(
            "--format", choices=("text", "json", "csv"), default="text", help="output format"
        )
        p.add_argument("--out", default=None, help="write the report to this path")

    p = sub.add_parser("verify", help="run the full verification suite")
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("commutator", help="print the normal-ordered bracket of two catalog operators")
    p.add_argument("a", help="first operator name, e.g. D_s or X[1,2]")
    p.add_argument("b", help="second operator name")
    common(p, n_default=1)
    p.set_defaults(func=_cmd_commutator)

    p = sub.add_parser("kernel", help="exact kernel dimensions on a graded block")
    common(p, n_default=1)
    p.add_argument("--k", type=int, default=0, help="base degree")
    p.add_argument("--m", type=int, default=0, help="spinor-degree cap")
    p.add_argument("--model", choices=MODELS, default=WEIGHTED)
    p.set_defaults(func=_cmd_kernel)

    p = sub.add_parser("spectrum", help="Hermite-operator eigenvalues and dimensions")
    common(p, n_default=1)
    p.add_argument("--kmax", type=int, default=6, help="largest q-degree")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("table", help="computed 8x8 commutator table with diff annotations")
    common(p, n_default=1)
    p.set_defaults(func=_cmd_table)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.n < 1:
        print("error: --n must be >= 1", file=sys.stderr)
        return 2
    for attr in ("k", "m", "kmax"):
        if getattr(args, attr, 0) is not None and getattr(args, attr, 0) < 0:
            print(f"error: --{attr} must be >= 0", file=sys.stderr)
            return 2
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
