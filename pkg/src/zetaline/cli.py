"""Command-line front end: evaluate, verify, scan, self-test.

Subcommands and their stdout formats (space-separated tokens, floats with
17 significant digits so values round-trip exactly):

  eval      value_re value_im err_est method n_evals
  feq       lhs_re lhs_im rhs_re rhs_im abs_residual rel_residual form direction
  lemma     bose_re bose_im exp_sq_re exp_sq_im sinh_re sinh_im
            reference_re reference_im max_abs_deviation extended
  residues  one row per table size N: "N value_re value_im tail_bound"
  scan      writes CSV to --out (header re_s,im_s,re_E,im_E,re_zeta,im_zeta,
            abs_zeta,err_est; shortest round-trip decimals; LF endings;
            zeta fields empty inside the |s-1| < 1e-6 pole guard); stdout
            stays empty
  selftest  one "criterion N PASS/FAIL name: detail" line per check

Exit codes: 0 pass/success; 1 usage error; 2 domain error (guards, poles,
contract boxes, unwritable scan paths); 3 convergence or check failure
(eval that missed its tolerance, feq residual above 1e-8, failed selftest
criterion).  Diagnostics go to stderr; stdout carries results only.  There
are no environment variables: every knob is a flag.

Repeated invocations with identical flags produce byte-identical stdout,
and scans are byte-identical whatever --jobs is; evaluation order is fixed
row-major (im outer, re inner) regardless of completion order.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .acceptance import run_criteria
from .contour import ContourSpec, EvalResult, entire_e_axis, entire_e_line, zeta
from .errors import (
    DomainError,
    NonFiniteIntegrand,
    PoleAtOne,
    TruncationFailure,
    ZetalineError,
)
from .functional_equation import feq_check
from .mellin import mellin_check
from .oracle import default_params, zeta_euler_maclaurin
from .quadrature import QuadraturePlan
from .contour import residue_partial_sum

__all__ = ["ScanGrid", "main"]

_POLE_RADIUS = 1e-6
_MAX_SCAN_POINTS = 1_000_000
_FEQ_PASS = 1e-8


@dataclass(frozen=True)
class ScanGrid:
    """Rectangular grid: steps_* points per axis, endpoints inclusive."""

    re_min: float
    re_max: float
    im_min: float
    im_max: float
    steps_re: int
    steps_im: int

    def __post_init__(self) -> None:
        if not (self.re_min <= self.re_max and self.im_min <= self.im_max):
            raise DomainError("grid needs re_min <= re_max and im_min <= im_max")
        if self.steps_re < 1 or self.steps_im < 1:
            raise DomainError("steps_re and steps_im must be >= 1")
        if self.steps_re * self.steps_im > _MAX_SCAN_POINTS:
            raise DomainError(
                f"grid has {self.steps_re * self.steps_im} points; "
                f"the cap is {_MAX_SCAN_POINTS}"
            )

    def points(self) -> list[complex]:
        """Row-major: im outer, re inner."""
        res = _axis(self.re_min, self.re_max, self.steps_re)
        ims = _axis(self.im_min, self.im_max, self.steps_im)
        return [complex(re, im) for im in ims for re in res]


def _axis(lo: float, hi: float, n: int) -> list[float]:
    if n == 1:
        return [lo]
    return [lo + k * (hi - lo) / (n - 1) for k in range(n)]


def _fmt(x: float) -> str:
    return f"{x:.17g}"


_SCAN_HEADER = "re_s,im_s,re_E,im_E,re_zeta,im_zeta,abs_zeta,err_est"


def _scan_cell(s: complex, spec: ContourSpec) -> str:
    e = entire_e_line(s, spec)
    if abs(s - 1.0) < _POLE_RADIUS:
        z_re = z_im = z_abs = ""  # undefined near the pole, not zero
    else:
        z = e.value / (s - 1.0)
        z_re, z_im, z_abs = repr(z.real), repr(z.imag), repr(abs(z))
    return (
        f"{s.real!r},{s.imag!r},{e.value.real!r},{e.value.imag!r},"
        f"{z_re},{z_im},{z_abs},{e.err_est!r}"
    )


def scan_csv_lines(grid: ScanGrid, spec: ContourSpec, jobs: int = 1) -> list[str]:
    """Header plus one line per grid point, deterministic for any jobs value."""
    if jobs < 1:
        raise DomainError(f"jobs must be >= 1, got {jobs}")
    pts = grid.points()
    if jobs == 1:
        body = [_scan_cell(s, spec) for s in pts]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            body = list(pool.map(lambda s: _scan_cell(s, spec), pts))
    return [_SCAN_HEADER, *body]


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags by default; the contract reserves 2 for
    # domain errors and uses 1 for usage problems
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_point_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--re", type=float, required=True, help="Re s")
    p.add_argument("--im", type=float, default=0.0, help="Im s (default 0)")


def _build_parser() -> _Parser:
    parser = _Parser(prog="zetaline", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate zeta(s)")
    _add_point_flags(p)
    p.add_argument("--method", choices=("line", "axis", "oracle"), default="line")
    p.add_argument("--tol", type=float, default=1e-12, help="quadrature tolerance")
    p.add_argument("--sigma", type=float, default=0.5, help="contour abscissa in (0,1)")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("feq", help="check zeta(s) = chi(s) zeta(1-s)")
    _add_point_flags(p)
    p.add_argument("--form", choices=("auto", "sine", "cosine"), default="auto")
    p.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(func=_cmd_feq)

    p = sub.add_parser("lemma", help="check the Mellin chain against Gamma(s) zeta(s)")
    _add_point_flags(p)
    p.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(func=_cmd_lemma)

    p = sub.add_parser("residues", help="residue partial-sum table (doubling N)")
    _add_point_flags(p)
    p.add_argument("--n-max", type=int, required=True, help="largest table size")
    p.set_defaults(func=_cmd_residues)

    p = sub.add_parser("scan", help="CSV grid scan of E(s) and zeta(s)")
    p.add_argument("--re-min", type=float, required=True)
    p.add_argument("--re-max", type=float, required=True)
    p.add_argument("--im-min", type=float, required=True)
    p.add_argument("--im-max", type=float, required=True)
    p.add_argument("--steps-re", type=int, required=True)
    p.add_argument("--steps-im", type=int, required=True)
    p.add_argument("--out", required=True, help="output CSV path")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--jobs", type=int, default=1, help="concurrent evaluations")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.set_defaults(func=_cmd_selftest)

    return parser


def _cmd_eval(args: argparse.Namespace) -> int:
    s = complex(args.re, args.im)
    plan = QuadraturePlan(target_tol=args.tol)
    if args.method == "line":
        res = zeta(s, ContourSpec(sigma=args.sigma, plan=plan))
    elif args.method == "axis":
        e = entire_e_axis(s, plan)
        sm1 = s - 1.0  # Re s <= -0.05 keeps this away from 0
        res = EvalResult(e.value / sm1, e.err_est / abs(sm1), "axis",
                         e.truncation_height, e.n_evals, e.converged)
    else:
        if abs(s - 1.0) < _POLE_RADIUS:
            raise PoleAtOne("pole at s = 1")
        value, err = zeta_euler_maclaurin(s)
        res = EvalResult(value, err, "oracle", 0.0, default_params(s).N, True)
    print(f"{_fmt(res.value.real)} {_fmt(res.value.imag)} {_fmt(res.err_est)} "
          f"{res.method} {res.n_evals}")
    return 0 if res.converged else 3


def _cmd_feq(args: argparse.Namespace) -> int:
    rep = feq_check(
        complex(args.re, args.im),
        ContourSpec(plan=QuadraturePlan(target_tol=args.tol)),
        form=args.form,
    )
    print(f"{_fmt(rep.lhs.real)} {_fmt(rep.lhs.imag)} {_fmt(rep.rhs.real)} "
          f"{_fmt(rep.rhs.imag)} {_fmt(rep.abs_residual)} {_fmt(rep.rel_residual)} "
          f"{rep.form} {rep.direction}")
    return 0 if rep.rel_residual <= _FEQ_PASS else 3


def _cmd_lemma(args: argparse.Namespace) -> int:
    rep = mellin_check(complex(args.re, args.im), QuadraturePlan(target_tol=args.tol))
    print(f"{_fmt(rep.bose.real)} {_fmt(rep.bose.imag)} "
          f"{_fmt(rep.exp_sq.real)} {_fmt(rep.exp_sq.imag)} "
          f"{_fmt(rep.sinh_form.real)} {_fmt(rep.sinh_form.imag)} "
          f"{_fmt(rep.reference.real)} {_fmt(rep.reference.imag)} "
          f"{_fmt(rep.max_abs_deviation)} {int(rep.extended)}")
    return 0


def _cmd_residues(args: argparse.Namespace) -> int:
    if args.n_max < 1:
        raise DomainError(f"--n-max must be >= 1, got {args.n_max}")
    s = complex(args.re, args.im)
    sizes = []
    n = 1
    while n <= args.n_max:
        sizes.append(n)
        n *= 2
    if sizes[-1] != args.n_max:
        sizes.append(args.n_max)
    for size in sizes:
        value, tail = residue_partial_sum(s, size)
        print(f"{size} {_fmt(value.real)} {_fmt(value.imag)} {_fmt(tail)}")
    return 0


def _cmd_scan(args: argparse.Namespace) -> int:
    grid = ScanGrid(args.re_min, args.re_max, args.im_min, args.im_max,
                    args.steps_re, args.steps_im)
    spec = ContourSpec(plan=QuadraturePlan(target_tol=args.tol))
    lines = scan_csv_lines(grid, spec, jobs=args.jobs)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    for r in run_criteria():
        print(f"criterion {r.number} {'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}")
        if not r.passed:
            return 3
    grid = ScanGrid(-2.0, 3.0, 0.0, 5.0, 100, 100)
    spec = ContourSpec(plan=QuadraturePlan(target_tol=1e-8))
    same = scan_csv_lines(grid, spec, jobs=1) == scan_csv_lines(grid, spec, jobs=4)
    print(f"criterion 9 {'PASS' if same else 'FAIL'} scan determinism: "
          f"10000-point scan byte-identical with jobs 1 and jobs 4")
    return 0 if same else 3


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PoleAtOne:
        print("pole at s=1; evaluate E instead", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (TruncationFailure, NonFiniteIntegrand) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ZetalineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
