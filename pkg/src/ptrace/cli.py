"""Command-line front end.

Exit codes: 0 ok, 1 usage, 2 parse error, 3 resource budget, 4 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from . import checks, hypertoric, kostka, poisson_bracket, singularity, sympow
from .exact_core import Graded, WeightedRing
from .parsing import ParseError, parse_int_list, parse_polynomial

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_BUDGET, EXIT_VERIFY = 0, 1, 2, 3, 4

FORMULAS = {
    "jacobian-bracket-hp0": "dim C[x]_w / (ideal_w + span of monomial Jacobian brackets)",
    "jacobi-product": "prod (1 - t^(m - a_i)) / (1 - t^(a_i))",
    "duval-record": "hypersurface presentation of C^2/Gamma with Weyl degrees d_i",
    "twistor-orders": "phi(2, j) = n_j / 2 + 1, phi(0, 1) = 0 (C^2 grading)",
    "sympow-hp0-product": "prod_i prod_j 1/(1 - t^(n_i + j*step) s^(j+1))",
    "sympow-hpdr-product": "prod_k 1/(1 - s^k t^-2 u^(2k)) * prod_i prod_j 1/(1 - t^(n_i + j|f|) s^(j+1))",
    "multipartition-product": "coefficient of t^n in prod_m (1 - t^m)^-i",
    "kostka-maj": "K_lambda(t) = sum_T t^(dim B - maj T)",
    "lusztig-nilcone": "sum_lambda K_lambda(x^2) K_lambda(y^-2)",
    "walgebra-slice": "y^(dim G.e) K_lambda(y^-2), lambda = Jordan type of e",
    "hypertoric-flats": "y^-dimX sum_F T_(M/F)(x^2, 0) T_(M|F)(0, y^-2) y^(2|F|)",
    "cone-curve-ledger": "g = (d-1)(d-2)/2, mu = (d-1)^3, M(X) = delta^(mu-g) + M(X)_ind",
    "hpdr-surface": "HP^DR_* = H^(2-*) + C^mu in degree 0",
    "smoothing-rank": "b_2 + sum mu_s",
    "cross-checks": "registered dual-route verifications",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class Request:
    subcommand: str
    args: argparse.Namespace
    grading: str
    fmt: str = "json"


@dataclass
class Report:
    command: str
    formula: str
    grading: str
    result: Any
    tables: List[Dict[str, Any]] = field(default_factory=list)
    certification: Dict[str, Any] = field(default_factory=dict)
    checks: List[checks.CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "provenance": {
                "formula": self.formula,
                "formula_text": FORMULAS[self.formula],
                "grading": self.grading,
                "certification": self.certification,
            },
            "result": self.result,
            "tables": self.tables,
            "checks": [c.to_json() for c in self.checks],
            "ok": self.ok,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["table", "grading", "exponent", "value"])
        for t in self.tables:
            for row in t["rows"]:
                exp = row[:-1]
                w.writerow([t["name"], t["grading"], "(" + ";".join(map(str, exp)) + ")", row[-1]])
        for c in self.checks:
            w.writerow(["check:" + c.name, self.grading, "()", int(c.passed)])
        return buf.getvalue()


def _table(name: str, grading: str, g: Graded) -> Dict[str, Any]:
    rows = [[e[0], c] if g.arity == 1 else list(e) + [c] for e, c in g.coeffs]
    return {"name": name, "grading": grading, "rows": rows}


def _series_tables(name: str, series) -> List[Dict[str, Any]]:
    return [_table(f"{name}[s^{k}]", series.grading, c) for k, c in enumerate(series.coeffs)]


# --------------------------------------------------------------------------
# subcommand handlers


def _cmd_duval(req: Request) -> Report:
    a = req.args
    rec = singularity.duval_record(a.label)
    g = req.grading
    res = rec.to_json(g)
    tw = sympow.twistor_orders_duval(rec)
    res["twistor"] = tw.to_json()
    rep = Report("duval", "duval-record", g, res,
                 [_table("jacobi", g, rec.jacobi_series(g))])
    if a.verify:
        prof = poisson_bracket.hp0_dims(rec.surface(), budget=a.budget)
        closed = singularity.jacobi_hilbert(rec.weights, rec.fdegree)
        rep.checks.append(checks.CheckResult(
            "bracket-vs-closed-form", prof.dims == closed,
            f"brute {prof.dims.as_dict()} vs closed {closed.as_dict()} (listed grading)"))
        rep.certification = {"certified_through": prof.certified_through,
                             "window": prof.stabilization_window}
        rep.checks.append(checks.REGISTRY["twistor-vs-trigraded"]())
    return rep


def _read_poly_text(text: Optional[str]) -> str:
    if text is None or text == "-":
        if sys.stdin is None or sys.stdin.isatty():
            raise UsageError("no polynomial given (use --f or pipe it on stdin)")
        text = sys.stdin.read().strip()
    return text


def _ring(a) -> WeightedRing:
    if not a.weights:
        raise UsageError("--weights is required")
    try:
        return WeightedRing(tuple(parse_int_list(a.weights)))
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise UsageError(str(exc))


def _cmd_surface(req: Request) -> Report:
    a = req.args
    ring = _ring(a)
    if ring.nvars != 3:
        raise UsageError("surface takes a hypersurface in C^3 (use ci-surface otherwise)")
    f = parse_polynomial(_read_poly_text(a.f), ring)
    try:
        X = poisson_bracket.SurfaceVariety.hypersurface(f)
    except ValueError as exc:
        raise UsageError(str(exc))
    iso, cert = poisson_bracket.is_isolated(X)
    res: Dict[str, Any] = {
        "equation": str(f),
        "weights": list(ring.weights),
        "degree": X.degrees[0],
        "bracket_degree": X.bracket_degree,
        "isolated": iso,
        "isolated_certificate": cert.to_json(),
        "outside_hypotheses": not iso,
    }
    rep = Report("surface", "jacobi-product", req.grading, res)
    rep.certification["isolated_window"] = list(cert.window)
    closed = None
    if iso:
        closed = singularity.jacobi_hilbert(ring.weights, X.degrees[0])
        res["jacobi"] = closed.to_json()
        res["milnor"] = closed.total()
        rep.tables.append(_table("jacobi", req.grading, closed))
    if a.bracket:
        g = parse_polynomial(a.bracket[0], ring)
        h = parse_polynomial(a.bracket[1], ring)
        res["bracket"] = poisson_bracket.bracket(X, g, h).to_json()
    if a.hp0 or a.verify:
        prof = poisson_bracket.hp0_dims(X, a.wmax, budget=a.budget, check_isolated=True)
        res["hp0"] = prof.to_json()
        res["irrep_bound"] = singularity.irrep_bound(prof.total)
        rep.formula = "jacobian-bracket-hp0"
        rep.tables.append(_table("hp0", req.grading, prof.dims))
        rep.certification.update({"certified_through": prof.certified_through,
                                  "window": prof.stabilization_window})
        if a.verify and closed is not None:
            trimmed = {w: d for w, d in closed.as_dict().items() if w <= prof.certified_through}
            rep.checks.append(checks.CheckResult(
                "bracket-vs-closed-form", prof.dims.as_dict() == trimmed,
                f"brute {prof.dims.as_dict()} vs closed {closed.as_dict()}"))
    return rep


def _cmd_ci_surface(req: Request) -> Report:
    a = req.args
    ring = _ring(a)
    texts = a.f or [_read_poly_text(None)]
    polys = [parse_polynomial(t, ring) for t in texts]
    try:
        X = poisson_bracket.SurfaceVariety(ring, tuple(polys))
    except ValueError as exc:
        raise UsageError(str(exc))
    res: Dict[str, Any] = {"equations": [str(p) for p in polys], "weights": list(ring.weights),
                           "degrees": list(X.degrees), "bracket_degree": X.bracket_degree}
    if a.bracket:
        g = parse_polynomial(a.bracket[0], ring)
        h = parse_polynomial(a.bracket[1], ring)
        res["bracket"] = poisson_bracket.bracket(X, g, h).to_json()
    prof = poisson_bracket.hp0_dims(X, a.wmax, budget=a.budget, check_isolated=False)
    res["hp0"] = prof.to_json()
    rep = Report("ci-surface", "jacobian-bracket-hp0", req.grading, res,
                 [_table("hp0", req.grading, prof.dims)],
                 {"certified_through": prof.certified_through, "window": prof.stabilization_window})
    return rep


def _cmd_sympow(req: Request) -> Report:
    a = req.args
    g = req.grading
    if a.order < 0:
        raise UsageError("--order must be >= 0")
    if a.duval:
        rec = singularity.duval_record(a.duval)
        if a.derham:
            series = sympow.hpdr_sympow_duval_series(rec, a.order, g)
            formula = "sympow-hpdr-product"
            expect = [sympow.a(n, rec.milnor + 1) for n in range(a.order + 1)]
        else:
            series = sympow.duval_hp0_series(rec, a.order, g)
            formula = "sympow-hp0-product"
            expect = [sympow.a(n, rec.milnor) for n in range(a.order + 1)]
    else:
        if not a.jacobi or not a.step:
            raise UsageError("give --duval LABEL, or --jacobi n1,n2,... with --step")
        if a.derham:
            raise UsageError("--derham needs a du Val record (--duval)")
        ns = parse_int_list(a.jacobi)
        series = sympow.hp0_sympow_series(ns, a.step, a.order, g)
        formula = "sympow-hp0-product"
        expect = [sympow.a(n, len(ns)) for n in range(a.order + 1)]
    rep = Report("sympow", formula, g, series.to_json(), _series_tables("series", series))
    rep.result["dims"] = series.specialize_all()
    if a.verify:
        rep.checks.append(checks.CheckResult(
            "product-vs-enumeration", series.specialize_all() == expect,
            f"specialized {series.specialize_all()} vs multipartitions {expect}",
            weak=a.order == 0))
    return rep


def _cmd_multipartition(req: Request) -> Report:
    a = req.args
    if a.n < 0 or a.i < 0:
        raise UsageError("n and i must be nonnegative")
    res = {"n": a.n, "i": a.i, "a": sympow.a(a.n, a.i),
           "row": sympow._COUNTER.row(a.i, a.n)}
    rep = Report("multipartition", "multipartition-product", req.grading, res)
    if a.verify:
        brute = [sympow.count_multipartitions(k, a.i) for k in range(a.n + 1)]
        rep.checks.append(checks.CheckResult("product-vs-enumeration", brute == res["row"],
                                             f"enumeration {brute}"))
    return rep


def _partition_arg(text: str) -> kostka.Partition:
    parts = parse_int_list(text)
    try:
        return kostka.Partition(tuple(parts))
    except ValueError as exc:
        raise UsageError(str(exc))


def _cmd_nilcone(req: Request) -> Report:
    a = req.args
    if a.n < 1:
        raise UsageError("n must be >= 1")
    L = kostka.lusztig_nilcone(a.n)
    ks = {str(lam): kostka.kostka(lam).to_json() for lam in kostka.partitions_of(a.n)}
    rep = Report("nilcone", "lusztig-nilcone", "c2", {"series": L.to_json(), "kostka": ks},
                 [_table("nilcone(x,y)", "c2", L)])
    if a.verify:
        if a.n == 2:
            rep.checks.append(checks.REGISTRY["kostka-vs-duval"](max_n=2))
        import math
        rep.checks.append(checks.CheckResult("nilcone-total", L.total() == math.factorial(a.n),
                                             f"total {L.total()} vs {a.n}!"))
    return rep


def _cmd_slice(req: Request) -> Report:
    a = req.args
    lam = _partition_arg(a.partition)
    hs = kostka.walgebra_hp0(lam)
    res = {"jordan_type": list(lam.parts), "orbit_dim": kostka.orbit_dim(lam),
           "kostka": kostka.kostka(lam).to_json(), "hp0": hs.to_json()}
    rep = Report("slice", "walgebra-slice", "c2", res, [_table("hp0(y)", "c2", hs)])
    if a.verify and len(lam.parts) == 2 and lam.parts[1] == 1:
        n = lam.size
        rec = singularity.duval_record(f"A{n - 1}")
        brute = poisson_bracket.hp0_dims(rec.surface(), budget=a.budget).dims
        rep.checks.append(checks.CheckResult("kostka-vs-duval", brute == hs,
                                             f"brute A{n - 1}: {brute.as_dict()}"))
    return rep


def _cmd_hypertoric(req: Request) -> Report:
    a = req.args
    if (a.normals is None) == (a.weight_matrix is None):
        raise UsageError("give exactly one of --normals or --weight-matrix")
    raw = a.normals if a.normals is not None else a.weight_matrix
    try:
        matrix = json.loads(raw)
        if not (isinstance(matrix, list) and all(isinstance(r, list) for r in matrix)
                and all(isinstance(x, int) for r in matrix for x in r)):
            raise ValueError
    except ValueError:
        raise ParseError("matrix must be a JSON array of integer rows", 0, raw) from None
    kind = "normals" if a.normals is not None else "weights"
    with warnings.catch_warnings(record=True):
        warnings.simplefilter("always")
        try:
            out = hypertoric.hpdr_hypertoric(matrix, a.dimx, kind)
        except hypertoric.SpanningError as exc:
            raise UsageError(str(exc))
    res = out.to_json()
    res["pretty"] = out.series.pretty(("x", "y"))
    rep = Report("hypertoric", "hypertoric-flats", "c2", res,
                 [_table("hpdr(x,y)", "c2", out.series)],
                 {"unimodular": out.unimodular})
    if a.verify:
        normals = matrix if kind == "normals" else hypertoric.gale_dual(matrix)
        M = hypertoric.VectorMatroid(normals, len(matrix[0]))
        T = hypertoric.tutte(M)
        rep.checks.append(checks.CheckResult(
            "deletion-contraction-vs-corank-nullity", T == hypertoric.tutte_corank_nullity(M),
            hypertoric.tutte_str(T)))
        if len(normals) == 1 and all(x != 0 for x in normals[0]):
            m = len(normals[0])
            if m >= 2:
                rec = singularity.duval_record(f"A{m - 1}")
                want = sympow.relabel_ut_to_xy(sympow.hpdr_sympow_duval_series(rec, 1)[1])
                rep.checks.append(checks.CheckResult(
                    "hypertoric-vs-duval", want == out.series, f"du Val A{m - 1}: {want.to_json()}"))
    return rep


def _cmd_cone_curve(req: Request) -> Report:
    a = req.args
    try:
        c = singularity.cone_curve(a.d)
    except ValueError as exc:
        raise UsageError(str(exc))
    res = c.to_json()
    res["hpdr"] = singularity.hpdr_surface((1, 0, 0), [c.milnor]).to_json()
    res["smoothing_rank"] = singularity.smoothing_rank(0, [c.milnor])
    res["irrep_bound"] = singularity.irrep_bound(c.milnor)
    rep = Report("cone-curve", "cone-curve-ledger", req.grading, res)
    if a.verify:
        rep.checks.append(checks.REGISTRY["cone-ledger"]())
    return rep


def _cmd_verify(req: Request) -> Report:
    a = req.args
    results = checks.verify_all(order=a.order)
    res = {"passed": sum(r.passed for r in results), "total": len(results)}
    return Report("verify", "cross-checks", req.grading, res, checks=results)


HANDLERS = {
    "duval": _cmd_duval,
    "surface": _cmd_surface,
    "ci-surface": _cmd_ci_surface,
    "sympow": _cmd_sympow,
    "nilcone": _cmd_nilcone,
    "slice": _cmd_slice,
    "hypertoric": _cmd_hypertoric,
    "multipartition": _cmd_multipartition,
    "cone-curve": _cmd_cone_curve,
    "verify": _cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv")
    common.add_argument("--grading", choices=singularity.GRADINGS, default=None)
    common.add_argument("--order", type=int, default=None)
    common.add_argument("--wmax", type=int, default=None)
    common.add_argument("--verify", action="store_true")
    common.add_argument("--budget", type=int, default=None,
                        help="matrix-size budget in bytes (default $PTRACE_BUDGET or 512 MiB)")

    p = _Parser(prog="ptrace", description="Poisson trace invariants in exact arithmetic")
    sub = p.add_subparsers(dest="subcommand", parser_class=_Parser)

    s = sub.add_parser("duval", parents=[common], help="du Val record")
    s.add_argument("label")

    s = sub.add_parser("surface", parents=[common], help="hypersurface in C^3")
    s.add_argument("--f", help="polynomial in x1..x3 ('-' or omitted: read stdin)")
    s.add_argument("--weights", required=True)
    s.add_argument("--hp0", action="store_true")
    s.add_argument("--bracket", nargs=2, metavar=("G", "H"))

    s = sub.add_parser("ci-surface", parents=[common], help="complete-intersection surface")
    s.add_argument("--f", action="append", help="one defining equation (repeat n-2 times)")
    s.add_argument("--weights", required=True)
    s.add_argument("--bracket", nargs=2, metavar=("G", "H"))

    s = sub.add_parser("sympow", parents=[common], help="symmetric-power series")
    s.add_argument("--duval")
    s.add_argument("--jacobi")
    s.add_argument("--step", type=int)
    s.add_argument("--derham", action="store_true")

    s = sub.add_parser("nilcone", parents=[common], help="Lusztig bigraded series for sl_n")
    s.add_argument("n", type=int)

    s = sub.add_parser("slice", parents=[common], help="HP_0 of a Slodowy slice in sl_n")
    s.add_argument("partition", help="Jordan type, e.g. 2,1")

    s = sub.add_parser("hypertoric", parents=[common], help="hypertoric HP^DR via Tutte polynomials")
    s.add_argument("--normals")
    s.add_argument("--weight-matrix", dest="weight_matrix")
    s.add_argument("--dimx", type=int)

    s = sub.add_parser("multipartition", parents=[common], help="a_n(i)")
    s.add_argument("n", type=int)
    s.add_argument("i", type=int)

    s = sub.add_parser("cone-curve", parents=[common], help="cone over a smooth plane curve")
    s.add_argument("d", type=int)

    sub.add_parser("verify", parents=[common], help="run every registered cross-check")
    return p


_DEFAULT_GRADING = {"duval": "c2", "sympow": "c2", "surface": "listed", "ci-surface": "listed",
                    "nilcone": "c2", "slice": "c2", "hypertoric": "c2"}


def run(request: Request) -> Report:
    return HANDLERS[request.subcommand](request)


def main(argv: Optional[Sequence[str]] = None) -> int:
    out = sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if not args.subcommand:
            raise UsageError("a subcommand is required")
        grading = args.grading or _DEFAULT_GRADING.get(args.subcommand, "listed")
        if args.subcommand in ("nilcone", "slice", "hypertoric") and grading != "c2":
            raise UsageError(f"{args.subcommand} output is only defined in the c2 grading")
        if args.order is None:
            args.order = 10 if args.subcommand == "verify" else 4
        if args.budget is None:
            args.budget = poisson_bracket.default_budget()
        req = Request(args.subcommand, args, grading, args.fmt or "json")
        report = run(req)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        if exc.text:
            print(f"  {exc.text}\n  {' ' * exc.pos}^", file=sys.stderr)
        return EXIT_PARSE
    except poisson_bracket.ResourceBudgetError as exc:
        print(f"resource budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, poisson_bracket.NotIsolatedError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.write(report.to_csv() if req.fmt == "csv" else report.dumps() + "\n")
    return EXIT_OK if report.ok else EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
