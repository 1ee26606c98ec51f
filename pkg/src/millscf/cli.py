"""Command line front end.

Subcommands: eval (one point), table (CSV error table), maxerr (per-depth
maximum error report), figure (error-curve CSVs on a fixed grid), verify
(the invariant suites).  Exit codes: 0 success, 1 verification failure,
2 usage or domain error, 3 I/O error.
"""

import argparse
import sys

from . import gauss, verify
from .reference import reference_mills
from .tails import FAMILIES, custom

_FAMILY_CHOICES = sorted(FAMILIES) + ["custom"]
_FIGURE_DEPTH = {1: 0, 2: 1, 3: 4}
_FIGURE_FAMILIES = ("improved-expo", "linear", "sqrt")

# reported maximum errors for the first four improved-expo depths
_PUBLISHED_MAXERR = {0: 2.1e-4, 1: 4.8e-5, 2: 3.0e-5, 3: 1.6e-5}


def _fmt(v):
    # repr of a float is the shortest decimal that round-trips (<= 17 digits)
    return repr(float(v))


def _load_custom_tail(path):
    """Two-column x, beta(x) file -> tail with a monotone cubic derivative."""
    from scipy.interpolate import PchipInterpolator

    xs, bs = [], []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            parts = line.replace(",", " ").split()
            if len(parts) != 2:
                continue
            try:
                xv, bv = float(parts[0]), float(parts[1])
            except ValueError:
                continue  # header line
            xs.append(xv)
            bs.append(bv)
    if len(xs) < 2:
        raise ValueError(f"tail file {path!r} needs at least two x,beta rows")
    interp = PchipInterpolator(xs, bs)
    d1 = interp.derivative()
    d2 = interp.derivative(2)
    return custom(value=lambda n, x: float(interp(x)),
                  deriv=lambda n, x: float(d1(x)),
                  second=lambda n, x: float(d2(x)))


def _resolve_family(args):
    if args.family == "custom":
        if getattr(args, "tail_file", None) is None:
            raise ValueError("--family custom requires --tail-file")
        return _load_custom_tail(args.tail_file)
    return args.family


def _write_csv(path, header, rows):
    # LF endings and ASCII bytes keep the files byte-deterministic
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(row) + "\n")


def run_eval(args):
    fam = _resolve_family(args)
    approx = gauss.mills(args.x, args.n, fam)
    ref = reference_mills(args.x)
    print(f"x: {_fmt(args.x)}")
    print(f"family: {approx.family}")
    print(f"n: {approx.n}")
    print(f"value: {_fmt(approx.value)}")
    print(f"bound_side: {approx.bound_side}")
    if approx.trunc_bound is not None:
        print(f"trunc_bound: {_fmt(approx.trunc_bound)}")
    print(f"reference: {_fmt(ref)}")
    print(f"error: {_fmt(approx.value - ref)}")
    return 0


def run_table(args):
    if args.xmax < args.xmin:
        raise ValueError("xmax must be >= xmin")
    if args.step <= 0:
        raise ValueError("step must be > 0")
    fam = _resolve_family(args)
    count = int((args.xmax - args.xmin) / args.step + 1e-9)
    rows = []
    for i in range(count + 1):
        x = args.xmin + i * args.step
        value = gauss.mills(x, args.n, fam).value
        ref = reference_mills(x)
        rows.append((_fmt(x), _fmt(value), _fmt(ref), _fmt(value - ref)))
    _write_csv(args.out, "x,approx,reference,error", rows)
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def run_maxerr(args):
    if args.nmax < args.nmin:
        raise ValueError("nmax must be >= nmin")
    fam = _resolve_family(args)
    name = fam if isinstance(fam, str) else fam.kind
    xmin = 1.0 if name == "classic" else 0.0
    print(f"family: {name}  scan [{_fmt(xmin)}, 20.0] step 0.001")
    for n in range(args.nmin, args.nmax + 1):
        x_star, worst = gauss.scan_max_delta(fam, n, xmin=xmin)
        decays = gauss.decays_beyond(fam, n)
        line = (f"n={n}  max|error|={worst:.6e}  at x={x_star:.4f}  "
                f"decays beyond scan: {'yes' if decays else 'NO'}")
        if name == "improved-expo" and n in _PUBLISHED_MAXERR:
            pub = _PUBLISHED_MAXERR[n]
            line += f"  published={pub:.1e}  ratio={worst / pub:.3f}"
        print(line)
    return 0


def run_figure(args):
    n = _FIGURE_DEPTH[args.id]
    columns = list(_FIGURE_FAMILIES)
    fams = {name: name for name in columns}
    if args.tail_file is not None:
        fams["custom"] = _load_custom_tail(args.tail_file)
        columns.append("custom")
    rows = []
    for i in range(601):  # x in [0, 6] step 0.01
        x = i / 100.0
        row = [_fmt(x)]
        for name in columns:
            row.append(_fmt(gauss.delta(x, n, fams[name])))
        rows.append(tuple(row))
    _write_csv(args.out, ",".join(["x"] + columns), rows)
    print(f"wrote error curves for depth n={n} to {args.out}")
    return 0


def run_verify(args):
    names = [args.suite] if args.suite else None
    results = verify.run_suites(names, inject_sign_fault=args.inject_sign_fault)
    failures = 0
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'} {name:<22} {detail}")
        failures += 0 if ok else 1
    print(f"{len(results) - failures} of {len(results)} suites passed")
    return 1 if failures else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="millscf",
        description="Gaussian and Gamma Mills ratios from modified "
                    "continued fractions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def family_flags(p, default="improved-expo"):
        p.add_argument("--family", choices=_FAMILY_CHOICES, default=default)
        p.add_argument("--n", type=int, default=1,
                       help="number of fraction terms kept")
        p.add_argument("--tail-file",
                       help="two-column x,beta CSV for --family custom")

    p = sub.add_parser("eval", help="evaluate one point")
    p.add_argument("--x", type=float, required=True)
    family_flags(p)
    p.set_defaults(func=run_eval)

    p = sub.add_parser("table", help="CSV table of approx/reference/error")
    p.add_argument("--xmin", type=float, required=True)
    p.add_argument("--xmax", type=float, required=True)
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--out", required=True)
    family_flags(p)
    p.set_defaults(func=run_table)

    p = sub.add_parser("maxerr", help="per-depth maximum error report")
    p.add_argument("--nmin", type=int, default=0)
    p.add_argument("--nmax", type=int, default=3)
    family_flags(p)
    p.set_defaults(func=run_maxerr)

    p = sub.add_parser("figure", help="error-curve CSV on the [0,6] grid")
    p.add_argument("--id", type=int, required=True, choices=sorted(_FIGURE_DEPTH))
    p.add_argument("--out", required=True)
    p.add_argument("--tail-file",
                   help="optional custom tail to plot alongside the built-ins")
    p.set_defaults(func=run_figure)

    p = sub.add_parser("verify", help="run the invariant suites")
    p.add_argument("--suite", help="run a single named suite")
    p.add_argument("--inject-sign-fault", action="store_true",
                   help=argparse.SUPPRESS)
    p.set_defaults(func=run_verify)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
