"""Command line front end.

Four subcommands:

* verify: one theorem, one function/weight/setting, one report.
* identity: the two trapezoid-defect identities over an alpha grid.
* corpus: every requested theorem over the builtin corpus and grids.
* sweep: one theorem and one function across alpha (and q) grids.

Output is JSON by default (--format csv or text otherwise), written to
stdout or --out.  Floats are rendered with 17 significant digits, rows
are emitted in a deterministic sorted order, and the builtin corpus is
seeded, so a fixed command line plus a fixed --seed reproduces output
byte for byte.

Exit codes: 0 when every row Holds, 1 when any row is Violated, 2 when
the worst row is Inconclusive, 3 for usage or configuration errors.
The base tolerance defaults to the FRACHH_TOL environment variable
when set.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import inequalities as ineq
from .fracops import FracSetting, check_symmetry_lemma
from .functions import (FunctionSpec, HolderPair, WeightSpec,
                        builtin_function_corpus, builtin_weight_corpus,
                        DEFAULT_CORPUS_SEED)
from .numerics import DEFAULT_TOL, DomainError, EvaluationError, cumulative_kernel
from .inequalities import Status

__all__ = ["main", "RunConfig", "THEOREMS", "run_rows"]

CSV_COLUMNS = ("theorem", "f", "g", "a", "b", "alpha", "p", "q",
               "lhs", "mid", "rhs", "observed", "bound",
               "margin_lower", "margin_upper", "slack",
               "error_budget", "status", "evaluations", "seed")

DEFAULT_ALPHA_GRID = (0.25, 0.5, 1.0, 2.0)
DEFAULT_Q_GRID = (2.0, 3.0)
SWEEP_ALPHA_GRID = (0.1, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 2.0, 2.5, 3.0)

# (a, b) pairs exercised by the scalar power gap lemma in corpus runs
LEMMA_SCALAR_PAIRS = ((0.0, 1.0), (0.25, 1.25), (0.5, 2.0), (1.0, 3.0),
                      (2.0, 2.5))


@dataclass(frozen=True)
class TheoremInfo:
    ident: str
    kind: str  # sandwich | identity | bound | aux | lemma
    needs_f: bool = False
    needs_g: bool = False
    needs_alpha: bool = True
    needs_q: bool = False
    needs_deriv: bool = False


THEOREMS: dict[str, TheoremInfo] = {t.ident: t for t in (
    TheoremInfo("hh-classical", "sandwich", needs_f=True, needs_alpha=False),
    TheoremInfo("fejer-classical", "sandwich", needs_f=True, needs_g=True,
                needs_alpha=False),
    TheoremInfo("hh-fractional", "sandwich", needs_f=True),
    TheoremInfo("fejer-fractional", "sandwich", needs_f=True, needs_g=True),
    TheoremInfo("identity-1-4", "identity", needs_f=True, needs_deriv=True),
    TheoremInfo("identity-2-3", "identity", needs_f=True, needs_g=True,
                needs_deriv=True),
    TheoremInfo("bound-1-5", "bound", needs_f=True, needs_deriv=True),
    TheoremInfo("bound-2-4", "bound", needs_f=True, needs_g=True,
                needs_deriv=True),
    TheoremInfo("bound-2-5", "bound", needs_f=True, needs_g=True,
                needs_q=True, needs_deriv=True),
    TheoremInfo("bound-2-6", "bound", needs_f=True, needs_g=True,
                needs_q=True, needs_deriv=True),
    TheoremInfo("bound-2-7", "bound", needs_f=True, needs_g=True,
                needs_q=True, needs_deriv=True),
    TheoremInfo("aux-integrals", "aux"),
    TheoremInfo("lemma-1-6", "lemma"),
    TheoremInfo("lemma-2-1", "lemma", needs_g=True),
)}


@dataclass(frozen=True)
class RunConfig:
    a: float = 0.0
    b: float = 1.0
    tol: float = DEFAULT_TOL
    seed: int = 42
    force: bool = False
    strict_paper: bool = False

    def setting(self, alpha: float) -> FracSetting:
        return FracSetting(self.a, self.b, alpha,
                           strict_paper_mode=self.strict_paper)


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- rows

def _row(theorem: str, seed: int, **fields) -> dict:
    row = {key: None for key in CSV_COLUMNS}
    row["theorem"] = theorem
    row["seed"] = seed
    row["notes"] = ()
    for key, value in fields.items():
        if key not in row:
            raise KeyError(key)
        row[key] = value
    return row


def _report_rows(ident: str, report, cfg: RunConfig, *, f_label: str = "",
                 g_label: str = "", a: Optional[float] = None,
                 b: Optional[float] = None, alpha: Optional[float] = None,
                 p: Optional[float] = None,
                 q: Optional[float] = None) -> list[dict]:
    base = dict(f=f_label or None, g=g_label or None,
                a=cfg.a if a is None else a, b=cfg.b if b is None else b,
                alpha=alpha, p=p, q=q)
    common = dict(error_budget=report.error_budget,
                  status=report.status.value,
                  evaluations=report.evaluations, notes=report.notes)
    if isinstance(report, ineq.SandwichReport):
        rows = [_row(ident, cfg.seed, **base, **common,
                     lhs=report.lhs, mid=report.mid, rhs=report.rhs,
                     margin_lower=report.lower_margin,
                     margin_upper=report.upper_margin)]
    elif isinstance(report, ineq.IdentityReport):
        rows = [_row(ident, cfg.seed, **base, **common,
                     lhs=report.lhs, rhs=report.rhs)]
    elif isinstance(report, ineq.BoundReport):
        rows = [_row(ident, cfg.seed, **base, **common,
                     observed=report.observed, bound=report.bound,
                     slack=report.slack)]
    elif isinstance(report, ineq.AuxIntegralsReport):
        rows = [_row(ident, cfg.seed, **{**base, "f": "e-part"}, **common,
                     lhs=report.e_closed, rhs=report.e_numeric),
                _row(ident, cfg.seed, **{**base, "f": "f-part"}, **common,
                     lhs=report.f_closed, rhs=report.f_numeric)]
    else:
        raise TypeError(f"unknown report type {type(report).__name__}")
    return rows


def _sort_key(row: dict):
    def k(key):
        v = row[key]
        return (v is not None, v if v is not None else 0)
    return tuple(k(c) for c in ("theorem", "f", "g", "a", "b", "alpha",
                                "q", "p"))


def _worst_status(rows: Sequence[dict]) -> int:
    statuses = {row["status"] for row in rows}
    if Status.VIOLATED.value in statuses:
        return 1
    if Status.INCONCLUSIVE.value in statuses:
        return 2
    return 0


# ------------------------------------------------------------- running

def run_rows(ident: str, cfg: RunConfig, *, f: Optional[FunctionSpec] = None,
             g: Optional[WeightSpec] = None, alpha: Optional[float] = None,
             q: Optional[float] = None, p: Optional[float] = None,
             kernel=None) -> list[dict]:
    """Run one theorem once and flatten the report into output rows."""
    info = THEOREMS[ident]
    if info.needs_f and f is None:
        raise UsageError(f"{ident} needs --f")
    if info.needs_g and g is None:
        raise UsageError(f"{ident} needs --g")
    if info.needs_alpha and alpha is None:
        raise UsageError(f"{ident} needs --alpha")
    if info.needs_q and q is None:
        if p is None:
            raise UsageError(f"{ident} needs --q (or --p)")
        if not p > 1.0:
            raise UsageError(f"need p > 1, got {p!r}")
        q = p / (p - 1.0)

    tol, force = cfg.tol, cfg.force
    fl = f.label if f is not None else ""
    gl = g.label if g is not None else ""

    if ident == "hh-classical":
        report = ineq.hh_classical(f, cfg.a, cfg.b, tol, force)
        return _report_rows(ident, report, cfg, f_label=fl)
    if ident == "fejer-classical":
        report = ineq.fejer_classical(f, g, tol, force)
        return _report_rows(ident, report, cfg, f_label=fl, g_label=gl)

    if ident == "lemma-1-6":
        report = ineq.scalar_power_lemma(cfg.a, cfg.b, alpha)
        return _report_rows(ident, report, cfg, alpha=alpha)

    s = cfg.setting(alpha)
    if ident == "hh-fractional":
        report = ineq.hh_fractional(f, s, tol, force)
        return _report_rows(ident, report, cfg, f_label=fl, alpha=alpha)
    if ident == "fejer-fractional":
        report = ineq.fejer_fractional(f, g, s, tol, force)
        return _report_rows(ident, report, cfg, f_label=fl, g_label=gl,
                            alpha=alpha)
    if ident == "identity-1-4":
        report = ineq.trapezoid_identity(f, s, tol)
        return _report_rows(ident, report, cfg, f_label=fl, alpha=alpha)
    if ident == "identity-2-3":
        report = ineq.weighted_trapezoid_identity(f, g, s, tol, kernel=kernel)
        return _report_rows(ident, report, cfg, f_label=fl, g_label=gl,
                            alpha=alpha)
    if ident == "bound-1-5":
        report = ineq.trapezoid_bound(f, s, tol, force)
        return _report_rows(ident, report, cfg, f_label=fl, alpha=alpha)
    if ident == "bound-2-4":
        report = ineq.weighted_bound_sup(f, g, s, tol, force)
        return _report_rows(ident, report, cfg, f_label=fl, g_label=gl,
                            alpha=alpha)
    if ident == "bound-2-5":
        report = ineq.weighted_bound_power_mean(f, g, s, q, tol, force)
        return _report_rows(ident, report, cfg, f_label=fl, g_label=gl,
                            alpha=alpha, q=q)
    if ident in ("bound-2-6", "bound-2-7"):
        pair = HolderPair(p, q) if p is not None else HolderPair.from_q(q)
        run = (ineq.weighted_bound_holder if ident == "bound-2-6"
               else ineq.weighted_bound_holder_low_order)
        report = run(f, g, s, pair, tol, force)
        return _report_rows(ident, report, cfg, f_label=fl, g_label=gl,
                            alpha=alpha, p=pair.p, q=pair.q)
    if ident == "aux-integrals":
        report = ineq.aux_integrals(s)
        return _report_rows(ident, report, cfg, alpha=alpha)
    if ident == "lemma-2-1":
        rep = check_symmetry_lemma(g, s, tol)
        status = Status.HOLDS if rep.passed else Status.VIOLATED
        return [_row(ident, cfg.seed, g=gl, a=cfg.a, b=cfg.b, alpha=alpha,
                     lhs=rep.left, rhs=rep.right,
                     error_budget=rep.error_budget, status=status.value,
                     evaluations=rep.evaluations)]
    raise UsageError(f"unknown theorem {ident!r}")


def _corpus_rows(idents: Sequence[str], cfg: RunConfig,
                 alphas: Sequence[float],
                 qs: Sequence[float]) -> list[dict]:
    functions = builtin_function_corpus(cfg.a, cfg.b, cfg.seed)
    weights = builtin_weight_corpus(cfg.a, cfg.b, cfg.seed)
    # identities only need a derivative; bounds also need the certified
    # convexity of |f'|^q, so uncertified entries are skipped there
    deriv_fs = [f for f in functions if f.deriv is not None]
    kernels: dict[tuple[str, float], object] = {}
    rows: list[dict] = []

    def kernel_for(g: WeightSpec, alpha: float):
        key = (g.label, alpha)
        if key not in kernels:
            kernels[key] = cumulative_kernel(g.fn, cfg.a, cfg.b, alpha,
                                             tol=cfg.tol)
        return kernels[key]

    for ident in idents:
        info = THEOREMS[ident]
        if ident == "hh-classical":
            for f in functions:
                rows += run_rows(ident, cfg, f=f)
        elif ident == "fejer-classical":
            for f in functions:
                for g in weights:
                    rows += run_rows(ident, cfg, f=f, g=g)
        elif ident == "lemma-1-6":
            for a, b in LEMMA_SCALAR_PAIRS:
                for alpha in alphas:
                    if alpha > 1.0:
                        continue
                    pair_cfg = RunConfig(a, b, cfg.tol, cfg.seed, cfg.force,
                                         cfg.strict_paper)
                    rows += run_rows(ident, pair_cfg, alpha=alpha)
        else:
            for alpha in alphas:
                if ident == "bound-2-7" and alpha > 1.0:
                    continue  # hard restriction, not a failure
                fs = deriv_fs if info.needs_deriv else functions
                if not info.needs_f:
                    fs = [None]
                gs = weights if info.needs_g else [None]
                for f in fs:
                    if info.kind == "bound" and not f.admits_deriv_power(1.0):
                        continue
                    for g in gs:
                        if info.needs_q:
                            for q in qs:
                                if not f.admits_deriv_power(q):
                                    continue
                                rows += run_rows(ident, cfg, f=f, g=g,
                                                 alpha=alpha, q=q)
                        elif ident == "identity-2-3":
                            rows += run_rows(ident, cfg, f=f, g=g,
                                             alpha=alpha,
                                             kernel=kernel_for(g, alpha))
                        else:
                            rows += run_rows(ident, cfg, f=f, g=g,
                                             alpha=alpha)
    return rows


# --------------------------------------------------------- serializing

def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"non-finite value in output: {x!r}")
    return format(x, ".17g")


def _json_scalar(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _fmt_float(value)
    if isinstance(value, str):
        return json.dumps(value)
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _render_json(rows: list[dict], cfg: RunConfig) -> str:
    out = io.StringIO()
    out.write("{\n  \"config\": {")
    cfg_items = (("a", cfg.a), ("b", cfg.b), ("tol", cfg.tol),
                 ("seed", cfg.seed), ("force", cfg.force),
                 ("strict_paper", cfg.strict_paper))
    out.write(", ".join(f"\"{k}\": {_json_scalar(v)}" for k, v in cfg_items))
    out.write("},\n  \"rows\": [\n")
    chunks = []
    for row in rows:
        fields = [f"\"{key}\": {_json_scalar(row[key])}"
                  for key in CSV_COLUMNS]
        notes = ", ".join(json.dumps(n) for n in row["notes"])
        fields.append(f"\"notes\": [{notes}]")
        chunks.append("    {" + ", ".join(fields) + "}")
    out.write(",\n".join(chunks))
    out.write("\n  ]\n}\n")
    return out.getvalue()


def _render_csv(rows: list[dict]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        record = []
        for key in CSV_COLUMNS:
            value = row[key]
            if value is None:
                record.append("")
            elif isinstance(value, float):
                record.append(_fmt_float(value))
            else:
                record.append(str(value))
        writer.writerow(record)
    return out.getvalue()


def _render_text(rows: list[dict]) -> str:
    lines = []
    for row in rows:
        head = row["theorem"]
        tags = [f"{k}={row[k]}" for k in ("f", "g") if row[k]]
        for k in ("alpha", "q", "p"):
            if row[k] is not None:
                tags.append(f"{k}={row[k]:g}")
        tags.append(f"[{row['a']:g}, {row['b']:g}]")
        body = []
        if row["lhs"] is not None and row["mid"] is not None:
            body.append(f"lhs={row['lhs']:.12g} mid={row['mid']:.12g} "
                        f"rhs={row['rhs']:.12g}")
        elif row["lhs"] is not None:
            body.append(f"lhs={row['lhs']:.12g} rhs={row['rhs']:.12g} "
                        f"residual={abs(row['lhs'] - row['rhs']):.3g}")
        if row["observed"] is not None:
            body.append(f"observed={row['observed']:.12g} "
                        f"bound={row['bound']:.12g} "
                        f"slack={row['slack']:.3g}")
        body.append(f"budget={row['error_budget']:.3g}")
        lines.append(f"{row['status']:14} {head}  {' '.join(tags)}  "
                     f"{' '.join(body)}")
        for note in row["notes"]:
            lines.append(f"{'':14} note: {note}")
    counts = {s.value: 0 for s in Status}
    for row in rows:
        counts[row["status"]] += 1
    lines.append(f"rows={len(rows)} holds={counts['Holds']} "
                 f"violated={counts['Violated']} "
                 f"inconclusive={counts['Inconclusive']}")
    return "\n".join(lines) + "\n"


def _emit(rows: list[dict], cfg: RunConfig, fmt: str,
          out_path: Optional[str]) -> None:
    rows = sorted(rows, key=_sort_key)
    if fmt == "json":
        text = _render_json(rows, cfg)
    elif fmt == "csv":
        text = _render_csv(rows)
    else:
        text = _render_text(rows)
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -------------------------------------------------------------- parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 3, not argparse's 2
        raise UsageError(message)


def _grid(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise UsageError(f"bad grid {text!r}: {exc}")
    if not values:
        raise UsageError(f"empty grid {text!r}")
    if any(not v > 0.0 for v in values):
        raise UsageError(f"grid values must be positive: {text!r}")
    return values


def _add_common(sub: argparse.ArgumentParser, *, interval: bool = True):
    if interval:
        sub.add_argument("--a", type=float, default=0.0,
                         help="left endpoint (default 0)")
        sub.add_argument("--b", type=float, default=1.0,
                         help="right endpoint (default 1)")
    sub.add_argument("--tol", type=float, default=None,
                     help="quadrature tolerance (default FRACHH_TOL or 1e-9)")
    sub.add_argument("--seed", type=int, default=42,
                     help="corpus seed (default 42)")
    sub.add_argument("--force", action="store_true",
                     help="run even when hypotheses fail, noting it")
    sub.add_argument("--strict-paper", action="store_true",
                     help="reject intervals with a < 0")
    sub.add_argument("--format", choices=("json", "csv", "text"),
                     default="json")
    sub.add_argument("--out", default=None, help="write output to this path")


def build_parser() -> _Parser:
    parser = _Parser(prog="frachh",
                     description="numerical checks of Hermite-Hadamard and "
                                 "Fejer type statements for fractional "
                                 "integral means")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("verify", parents=[], help="check one theorem once")
    p.add_argument("--thm", "--theorem", dest="theorem", required=True,
                   choices=sorted(THEOREMS))
    p.add_argument("--f", default=None, help="function label from the corpus")
    p.add_argument("--g", default=None, help="weight label from the corpus")
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--q", type=float, default=None)
    p.add_argument("--p", type=float, default=None)
    _add_common(p)

    p = subs.add_parser("identity",
                        help="trapezoid-defect identities over an alpha grid")
    p.add_argument("--f", required=True)
    p.add_argument("--g", default=None,
                   help="weight label; runs the weighted identity if given")
    p.add_argument("--alpha-grid", type=_grid,
                   default=DEFAULT_ALPHA_GRID, metavar="A1,A2,...")
    _add_common(p)

    p = subs.add_parser("corpus",
                        help="run theorems across the builtin corpus")
    p.add_argument("--theorems", default="all",
                   help="comma list of theorem ids, or 'all'")
    p.add_argument("--alpha-grid", type=_grid, default=DEFAULT_ALPHA_GRID,
                   metavar="A1,A2,...")
    p.add_argument("--q-grid", type=_grid, default=DEFAULT_Q_GRID,
                   metavar="Q1,Q2,...")
    _add_common(p)

    p = subs.add_parser("sweep",
                        help="one theorem, one function, across grids")
    p.add_argument("--thm", "--theorem", dest="theorem", required=True,
                   choices=sorted(THEOREMS))
    p.add_argument("--f", default=None)
    p.add_argument("--g", default=None)
    p.add_argument("--alpha-grid", type=_grid, default=SWEEP_ALPHA_GRID,
                   metavar="A1,A2,...")
    p.add_argument("--q-grid", type=_grid, default=DEFAULT_Q_GRID,
                   metavar="Q1,Q2,...")
    _add_common(p)

    return parser


def _config_from(args) -> RunConfig:
    tol = args.tol
    if tol is None:
        env = os.environ.get("FRACHH_TOL", "")
        try:
            tol = float(env) if env else DEFAULT_TOL
        except ValueError:
            raise UsageError(f"bad FRACHH_TOL value {env!r}")
    if not (0.0 < tol < 1.0):
        raise UsageError(f"tolerance must be in (0, 1), got {tol!r}")
    return RunConfig(args.a, args.b, tol, args.seed, args.force,
                     args.strict_paper)


def _lookup(label: Optional[str], pool, what: str):
    if label is None:
        return None
    for item in pool:
        if item.label == label:
            return item
    names = ", ".join(sorted(item.label for item in pool))
    raise UsageError(f"unknown {what} {label!r}; available: {names}")


def _run_command(args) -> int:
    cfg = _config_from(args)
    functions = builtin_function_corpus(cfg.a, cfg.b, cfg.seed)
    weights = builtin_weight_corpus(cfg.a, cfg.b, cfg.seed)

    if args.command == "verify":
        f = _lookup(args.f, functions, "function")
        g = _lookup(args.g, weights, "weight")
        rows = run_rows(args.theorem, cfg, f=f, g=g, alpha=args.alpha,
                        q=args.q, p=args.p)
    elif args.command == "identity":
        f = _lookup(args.f, functions, "function")
        g = _lookup(args.g, weights, "weight")
        ident = "identity-2-3" if g is not None else "identity-1-4"
        rows = []
        for alpha in args.alpha_grid:
            rows += run_rows(ident, cfg, f=f, g=g, alpha=alpha)
    elif args.command == "corpus":
        if args.theorems.strip() == "all":
            idents = sorted(THEOREMS)
        else:
            idents = [part.strip() for part in args.theorems.split(",")
                      if part.strip()]
            unknown = [i for i in idents if i not in THEOREMS]
            if unknown:
                raise UsageError(f"unknown theorems: {', '.join(unknown)}")
        rows = _corpus_rows(idents, cfg, args.alpha_grid, args.q_grid)
    elif args.command == "sweep":
        f = _lookup(args.f, functions, "function")
        g = _lookup(args.g, weights, "weight")
        info = THEOREMS[args.theorem]
        rows = []
        alphas = args.alpha_grid
        for alpha in alphas:
            if args.theorem == "bound-2-7" and alpha > 1.0:
                continue
            if info.needs_q:
                for q in args.q_grid:
                    rows += run_rows(args.theorem, cfg, f=f, g=g,
                                     alpha=alpha, q=q)
            else:
                rows += run_rows(args.theorem, cfg, f=f, g=g,
                                 alpha=alpha if info.needs_alpha else None)
            if not info.needs_alpha:
                break  # alpha-free theorems produce a single row
    else:  # pragma: no cover - argparse enforces the choices
        raise UsageError(f"unknown command {args.command!r}")

    _emit(rows, cfg, args.format, args.out)
    return _worst_status(rows)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _run_command(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (DomainError, EvaluationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
