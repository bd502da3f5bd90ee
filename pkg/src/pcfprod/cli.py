"""Command-line front door.

Two commands:

* ``pcfprod eval TARGET --name value ...`` evaluates one quantity at one
  point and prints the value plus convergence metadata.
* ``pcfprod verify IDENTITY|all [--name gridspec ...]`` sweeps an
  identity over a parameter grid, emitting one verification record per
  point as CSV or JSON plus a pass/fail/skip summary.  Exit status is 0
  iff no record failed.

Grid specs are ``lo:hi:count`` (inclusive, linear), ``log:lo:hi:count``
(log-spaced), or a single number.  Output is deterministic: identical
invocations produce byte-identical reports.  ``PCF_MAX_THREADS`` caps
the number of worker threads used for grid evaluation (default 1);
records are always emitted in grid order regardless.
"""

from __future__ import annotations

import itertools
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import click

from . import glasser, green, hyperbolic, mehler, specfun
from .errors import ConvergenceError, DomainError
from .report import IDENTITY_IDS, VerificationRecord, make_record, skipped_record

_EXIT_DOMAIN = 2
_EXIT_CONVERGENCE = 3


# --------------------------------------------------------------------------
# eval
# --------------------------------------------------------------------------

def _q(params, *names):
    missing = [n for n in names if n not in params]
    if missing:
        raise click.UsageError(f"missing parameter(s): {', '.join('--' + m for m in missing)}")
    return [params[n] for n in names]


def _eval_pcf_d(params, tol):
    nu, z = _q(params, "nu", "z")
    return specfun.pcf_d(nu, z, tol), {}


def _eval_product_integral(params, tol):
    nu, x, y = _q(params, "nu", "x", "y")
    r = glasser.product_via_integral(glasser.ProductQuery(nu, x, y), tol)
    return r.value, {"error_estimate": r.error_estimate, "evaluations": r.evaluations}


def _eval_product_reference(params, tol):
    nu, x, y = _q(params, "nu", "x", "y")
    return glasser.product_reference(glasser.ProductQuery(nu, x, y)), {}


def _eval_laplace_I(params, tol):
    nu, a, b, sign = _q(params, "nu", "a", "b", "sign")
    r = glasser.laplace_I(glasser.LaplaceParams(nu, a, b), int(sign), tol)
    return r.value, {"error_estimate": r.error_estimate, "evaluations": r.evaluations}


def _eval_mehler_kernel(params, tol):
    X, Y, u = _q(params, "X", "Y", "u")
    return mehler.mehler_kernel_closed(mehler.MehlerPoint(X, Y, u)), {}


def _eval_mehler_kernel_series(params, tol):
    X, Y, u = _q(params, "X", "Y", "u")
    r = mehler.mehler_kernel_series(mehler.MehlerPoint(X, Y, u), tol)
    return r.value, {"terms_used": r.terms_used, "tail_bound": r.tail_bound}


def _eval_series_for_I(params, tol):
    nu, X, Y = _q(params, "nu", "X", "Y")
    r = mehler.series_for_I(nu, X, Y, max(tol, 1e-9))
    return r.value, {"terms_used": r.terms_used, "tail_bound": r.tail_bound}


def _eval_sum_rule_lhs(params, tol):
    nu, x, y = _q(params, "nu", "x", "y")
    r = mehler.sum_rule_lhs(mehler.SumRuleQuery(nu, x, y), max(tol, 5e-8))
    return r.value, {"terms_used": r.terms_used, "tail_bound": r.tail_bound}


def _eval_green_spectral(params, tol):
    lam, x, xprime = _q(params, "lam", "x", "xprime")
    r = green.green_spectral(green.GreenQuery(lam, x, xprime), max(tol, 1e-8))
    return r.value, {"terms_used": r.terms_used, "tail_bound": r.tail_bound}


def _eval_green_closed(params, tol):
    lam, x, xprime = _q(params, "lam", "x", "xprime")
    return green.green_closed(green.GreenQuery(lam, x, xprime)), {}


def _eval_green_ode(params, tol):
    lam, x, xprime = _q(params, "lam", "x", "xprime")
    return green.green_ode_oracle(green.GreenQuery(lam, x, xprime)), {}


def _eval_eigenfunction(params, tol):
    n, x = _q(params, "n", "x")
    return green.eigenfunction(int(n), x), {}


def _eval_hyperbolic_lhs(which):
    def run(params, tol):
        if which == "14":
            a, phi = _q(params, "a", "phi")
            rec = hyperbolic.k_identity_14(hyperbolic.HyperbolicQuery(a=a, phi=phi), tol)
        else:
            alpha, phi = _q(params, "alpha", "phi")
            q = hyperbolic.HyperbolicQuery(alpha=alpha, phi=phi)
            rec = (hyperbolic.erfc_identity_13a if which == "13a"
                   else hyperbolic.erfc_identity_13b)(q, tol)
        return rec.lhs, {"evaluations": rec.evaluations}
    return run


def _eval_scalar(fn, *names):
    def run(params, tol):
        return fn(*_q(params, *names)), {}
    return run


EVAL_TARGETS = {
    "pcf_d": _eval_pcf_d,
    "gamma": _eval_scalar(specfun.gamma, "nu"),
    "erfc": _eval_scalar(specfun.erfc, "x"),
    "bessel_k_quarter": _eval_scalar(specfun.bessel_k_quarter, "z"),
    "hermite": lambda p, tol: (specfun.hermite(int(_q(p, "n")[0]), _q(p, "x")[0]), {}),
    "product_integral": _eval_product_integral,
    "product_reference": _eval_product_reference,
    "laplace_I": _eval_laplace_I,
    "mehler_kernel": _eval_mehler_kernel,
    "mehler_kernel_series": _eval_mehler_kernel_series,
    "series_for_I": _eval_series_for_I,
    "sum_rule_lhs": _eval_sum_rule_lhs,
    "green_spectral": _eval_green_spectral,
    "green_closed": _eval_green_closed,
    "green_ode": _eval_green_ode,
    "eigenfunction": _eval_eigenfunction,
    "hyperbolic_lhs_13a": _eval_hyperbolic_lhs("13a"),
    "hyperbolic_lhs_13b": _eval_hyperbolic_lhs("13b"),
    "hyperbolic_lhs_14": _eval_hyperbolic_lhs("14"),
}


def _parse_named_floats(raw: tuple[str, ...]) -> dict[str, str]:
    """Parse trailing '--name value' pairs into a dict of raw strings."""
    out: dict[str, str] = {}
    i = 0
    while i < len(raw):
        tok = raw[i]
        if not tok.startswith("--"):
            raise click.UsageError(f"expected --name, got {tok!r}")
        if i + 1 >= len(raw):
            raise click.UsageError(f"missing value for {tok}")
        out[tok[2:]] = raw[i + 1]
        i += 2
    return out


# --------------------------------------------------------------------------
# verify
# --------------------------------------------------------------------------

def _parse_gridspec(name: str, spec: str) -> list[float]:
    log = spec.startswith("log:")
    body = spec[4:] if log else spec
    parts = body.split(":")
    try:
        if len(parts) == 1:
            return [float(parts[0])]
        if len(parts) != 3:
            raise ValueError
        lo, hi = float(parts[0]), float(parts[1])
        count = int(parts[2])
        if count < 1:
            raise ValueError
    except ValueError:
        raise click.UsageError(
            f"malformed range spec for --{name}: {spec!r} (want lo:hi:count or log:lo:hi:count)"
        )
    if count == 1:
        return [lo]
    if log:
        if lo <= 0 or hi <= 0:
            raise click.UsageError(f"log spacing needs positive bounds in --{name}={spec!r}")
        ratio = (hi / lo) ** (1.0 / (count - 1))
        return [lo * ratio**i for i in range(count)]
    step = (hi - lo) / (count - 1)
    return [lo + step * i for i in range(count)]


def _clamp_quad_tol(tol: float) -> float:
    return min(max(tol, 1e-14), 1e-2)


def _check_eq3(p):
    return None if abs(p["u"]) <= 0.9 else "|u| > 0.9"


def _verify_eq3(p, tol):
    point = mehler.MehlerPoint(p["X"], p["Y"], p["u"])
    series = mehler.mehler_kernel_series(point, tol * 0.1)
    # kernel values can be exponentially small while series terms are O(1);
    # the series contract is the mixed tolerance tol*(1+|value|)
    return make_record("EQ3", p, series.value, mehler.mehler_kernel_closed(point),
                       tol, series.terms_used, mode="mixed")


def _check_eq10(p):
    return None if p["x"] > p["y"] > 0 else "requires x > y > 0"


def _verify_eq10(p, tol):
    q = glasser.ProductQuery(p["nu"], p["x"], p["y"])
    lhs = glasser.product_via_integral(q, _clamp_quad_tol(tol * 0.1))
    return make_record("EQ10", p, lhs.value, glasser.product_reference(q), tol, lhs.evaluations)


def _check_eq11(p):
    return None if p["a"] > p["b"] > 0 else "requires a > b > 0"


def _check_eq12(p):
    if not p["a"] + p["b"] > 0:
        return "requires a + b > 0"
    if p["a"] < abs(p["b"]) or p["b"] <= 0:
        return "D arguments complex unless a >= |b| and b > 0"
    return None


def _verify_laplace(identity, sign):
    def run(p, tol):
        lp = glasser.LaplaceParams(p["nu"], p["a"], p["b"])
        lhs = glasser.laplace_I(lp, sign, _clamp_quad_tol(tol * 0.1))
        q = glasser.xy_from_params(lp)
        y_arg = -q.y if sign == 1 else q.y
        rhs = (2.0 * math.exp(0.5 * p["a"]) * specfun.gamma(p["nu"])
               * specfun.pcf_d(-p["nu"], q.x) * specfun.pcf_d(-p["nu"], y_arg))
        return make_record(identity, p, lhs.value, rhs, tol, lhs.evaluations)
    return run


def _verify_eq13(which):
    fn = hyperbolic.erfc_identity_13a if which == "a" else hyperbolic.erfc_identity_13b
    def run(p, tol):
        rec = fn(hyperbolic.HyperbolicQuery(alpha=p["alpha"], phi=p["phi"]), tol)
        return make_record(rec.identity_id, p, rec.lhs, rec.rhs, tol, rec.evaluations)
    return run


def _check_eq14(p):
    return None if p["phi"] >= 0.05 else "phi < 0.05 (K_{1/4} underflow guard)"


def _verify_eq14(p, tol):
    rec = hyperbolic.k_identity_14(hyperbolic.HyperbolicQuery(a=p["a"], phi=p["phi"]), tol)
    return make_record("EQ14", p, rec.lhs, rec.rhs, tol, rec.evaluations)


def _check_eq15(p):
    return None if p["x"] > p["y"] else "requires x > y"


def _verify_eq15(p, tol):
    q = mehler.SumRuleQuery(p["nu"], p["x"], p["y"])
    lhs = mehler.sum_rule_lhs(q, tol * 0.5)
    rhs = specfun.gamma(p["nu"]) * glasser.product_reference(
        glasser.ProductQuery(p["nu"], p["x"], p["y"]))
    return make_record("EQ15", p, lhs.value, rhs, tol, lhs.terms_used)


def _check_eq8_eq9(p):
    if not p["x"] > p["xprime"]:
        return "closed form requires x > x'"
    if p["lam"] >= 1.0:
        return "closed form requires lambda < 1"
    return None


def _verify_eq8_eq9(p, tol):
    q = green.GreenQuery(p["lam"], p["x"], p["xprime"])
    lhs = green.green_spectral(q, tol * 0.5)
    return make_record("EQ8_EQ9", p, lhs.value, green.green_closed(q), tol, lhs.terms_used)


IDENTITIES = {
    "EQ3": {
        "params": ("X", "Y", "u"),
        "grid": {"X": [-2.0, 0.0, 1.5], "Y": [-1.0, 0.5, 2.0],
                 "u": [-0.8, -0.3, 0.0, 0.3, 0.8]},
        "tol": 1e-9,
        "check": _check_eq3,
        "run": _verify_eq3,
    },
    "EQ10": {
        "params": ("nu", "x", "y"),
        "grid": {"nu": [0.5, 1.0, 2.5], "x": [1.5, 2.5], "y": [0.5, 1.0]},
        "tol": 1e-8,
        "check": _check_eq10,
        "run": _verify_eq10,
    },
    "EQ11": {
        "params": ("nu", "a", "b"),
        "grid": {"nu": [0.5, 1.0, 2.0], "a": [1.5, 3.0], "b": [0.5, 1.0]},
        "tol": 1e-8,
        "check": _check_eq11,
        "run": _verify_laplace("EQ11", 1),
    },
    "EQ12": {
        "params": ("nu", "a", "b"),
        "grid": {"nu": [0.5, 1.0, 2.0], "a": [1.5, 3.0], "b": [0.5, 1.0]},
        "tol": 1e-8,
        "check": _check_eq12,
        "run": _verify_laplace("EQ12", -1),
    },
    "EQ13A": {
        "params": ("alpha", "phi"),
        "grid": {"alpha": [0.5, 1.0, 2.0], "phi": [0.5, 1.0, 2.0]},
        "tol": 1e-8,
        "check": lambda p: None,
        "run": _verify_eq13("a"),
    },
    "EQ13B": {
        "params": ("alpha", "phi"),
        "grid": {"alpha": [0.5, 1.0, 2.0], "phi": [0.5, 1.0, 2.0]},
        "tol": 1e-8,
        "check": lambda p: None,
        "run": _verify_eq13("b"),
    },
    "EQ14": {
        "params": ("a", "phi"),
        "grid": {"a": [0.5, 1.0, 2.0], "phi": [0.5, 1.0, 2.0]},
        "tol": 1e-7,
        "check": _check_eq14,
        "run": _verify_eq14,
    },
    "EQ15": {
        "params": ("nu", "x", "y"),
        "grid": {"nu": [0.5, 1.0, 2.0], "x": [2.0, 3.0], "y": [0.5, 1.0]},
        "tol": 5e-7,
        "check": _check_eq15,
        "run": _verify_eq15,
    },
    "EQ8_EQ9": {
        "params": ("lam", "x", "xprime"),
        "grid": {"lam": [-3.0, -1.0, 0.0, 0.5], "x": [1.0, 1.5], "xprime": [0.0, 0.5]},
        "tol": 1e-6,
        "check": _check_eq8_eq9,
        "run": _verify_eq8_eq9,
    },
}


def _evaluate_identity(identity: str, grids: dict[str, list[float]], tol: float):
    cfg = IDENTITIES[identity]
    names = cfg["params"]
    points = [dict(zip(names, combo))
              for combo in itertools.product(*(grids[n] for n in names))]

    def one(p: dict[str, float]) -> VerificationRecord:
        reason = cfg["check"](p)
        if reason is not None:
            return skipped_record(identity, p, reason)
        try:
            return cfg["run"](p, tol)
        except DomainError as exc:
            return skipped_record(identity, p, str(exc))

    workers = max(1, int(os.environ.get("PCF_MAX_THREADS", "1")))
    if workers > 1 and len(points) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(one, points))
    return [one(p) for p in points]


def _emit_csv(records: list[VerificationRecord], names, out) -> None:
    header = ["identity_id", *names, "lhs", "rhs", "abs_err", "rel_err", "passed"]
    out.write(",".join(header) + "\n")
    for r in records:
        passed = "skipped" if r.skipped else ("true" if r.passed else "false")
        row = [r.identity_id, *(repr(r.params[n]) for n in names),
               repr(r.lhs), repr(r.rhs), repr(r.abs_err), repr(r.rel_err), passed]
        out.write(",".join(row) + "\n")


def _record_json(r: VerificationRecord) -> dict:
    return {
        "identity_id": r.identity_id,
        "params": r.params,
        "lhs": r.lhs,
        "rhs": r.rhs,
        "abs_err": r.abs_err,
        "rel_err": r.rel_err,
        "status": r.status,
        "evaluations": r.evaluations,
        "note": r.note,
    }


# --------------------------------------------------------------------------
# click wiring
# --------------------------------------------------------------------------

@click.group()
def main():
    """Parabolic-cylinder product representations and their verification."""


@main.command("eval", context_settings={"ignore_unknown_options": True})
@click.argument("target")
@click.option("--tol", type=float, default=1e-10, show_default=True,
              help="Requested relative tolerance for iterative targets.")
@click.argument("params", nargs=-1, type=click.UNPROCESSED)
def eval_cmd(target, tol, params):
    """Evaluate TARGET at the point given by trailing --name value pairs."""
    if target not in EVAL_TARGETS:
        known = ", ".join(sorted(EVAL_TARGETS))
        raise click.UsageError(f"unknown target {target!r}; known targets: {known}")
    raw = _parse_named_floats(params)
    try:
        point = {k: float(v) for k, v in raw.items()}
    except ValueError as exc:
        raise click.UsageError(f"invalid parameter value: {exc}")
    try:
        value, meta = EVAL_TARGETS[target](point, tol)
    except DomainError as exc:
        click.echo(f"domain error: {exc}", err=True)
        sys.exit(_EXIT_DOMAIN)
    except ConvergenceError as exc:
        click.echo(f"convergence error: {exc}", err=True)
        sys.exit(_EXIT_CONVERGENCE)
    click.echo(repr(value))
    for key, val in meta.items():
        click.echo(f"# {key} = {val!r}")


@main.command("verify", context_settings={"ignore_unknown_options": True})
@click.argument("identity")
@click.option("--tol", type=float, default=None,
              help="Override the identity's default tolerance.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
              show_default=True)
@click.argument("gridargs", nargs=-1, type=click.UNPROCESSED)
def verify_cmd(identity, tol, fmt, gridargs):
    """Verify IDENTITY (or 'all') over a parameter grid.

    Default grids are used for parameters without an explicit
    --name lo:hi:count range.  Points outside an identity's validity
    domain are emitted as skipped records.
    """
    identity = identity.upper() if identity != "all" else identity
    if identity != "all" and identity not in IDENTITIES:
        raise click.UsageError(
            f"unknown identity {identity!r}; choose from {', '.join(IDENTITY_IDS)} or 'all'")
    chosen = list(IDENTITIES) if identity == "all" else [identity]
    raw = _parse_named_floats(gridargs)

    blocks = []
    for ident in chosen:
        cfg = IDENTITIES[ident]
        grids = {}
        for name in cfg["params"]:
            grids[name] = (_parse_gridspec(name, raw[name]) if name in raw
                           else list(cfg["grid"][name]))
        unknown = set(raw) - set(cfg["params"])
        if identity != "all" and unknown:
            raise click.UsageError(
                f"{ident} takes parameters {cfg['params']}, not {sorted(unknown)}")
        records = _evaluate_identity(ident, grids, tol if tol is not None else cfg["tol"])
        blocks.append((ident, cfg["params"], records))

    all_records = [r for _, _, recs in blocks for r in recs]
    n_pass = sum(1 for r in all_records if r.status == "pass")
    n_fail = sum(1 for r in all_records if r.status == "fail")
    n_skip = sum(1 for r in all_records if r.status == "skip")

    if fmt == "csv":
        for ident, names, records in blocks:
            _emit_csv(records, names, sys.stdout)
        click.echo(f"# summary: pass={n_pass} fail={n_fail} skip={n_skip}")
    else:
        doc = {
            "summary": {"pass": n_pass, "fail": n_fail, "skip": n_skip},
            "records": [_record_json(r) for r in all_records],
        }
        click.echo(json.dumps(doc, indent=2))
    sys.exit(0 if n_fail == 0 else 1)


@main.command("explore-equal-args")
@click.option("--nu", type=float, default=1.0, show_default=True)
@click.option("--x", type=float, default=2.0, show_default=True)
@click.option("--tol", type=float, default=1e-6, show_default=True)
def explore_cmd(nu, x, tol):
    """Probe the integral representation on its x = y boundary.

    The representation is stated for x > y only, and the discussion
    around it asserts divergence at x = y; the integrand tail there is
    ~ t^{-3/2}, however, which is integrable.  This command evaluates
    the integral at x = y and reports how it compares with the direct
    product.
    """
    q = glasser.ProductQuery(nu, x, x)
    ref = glasser.product_reference(q)
    try:
        got = glasser.product_via_integral(q, _clamp_quad_tol(tol), allow_equal_args=True)
    except ConvergenceError as exc:
        if exc.partial is None:
            click.echo(f"convergence error: {exc}", err=True)
            sys.exit(_EXIT_CONVERGENCE)
        got = exc.partial
    rel = abs(got.value - ref) / abs(ref)
    click.echo(f"integral value at x = y = {x}: {got.value!r}")
    click.echo(f"direct product:              {ref!r}")
    click.echo(f"relative discrepancy:        {rel:.3e}")
    click.echo(
        "finding: the integral converges at x = y and matches the product; "
        "no divergence is observed at the boundary."
        if rel <= 1e-4 else
        "finding: the integral and the product disagree at x = y."
    )


if __name__ == "__main__":
    main()
