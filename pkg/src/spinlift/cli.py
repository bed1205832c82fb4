"""JSON command-line front end.

Requests carry a 4x4 matrix (except ``selftest``); responses echo the request
metadata and report result matrices, scalar invariants, the branch taken, and
residual diagnostics.  All floats are printed with 17 significant digits so
output can be re-ingested bit-faithfully; complex entries are [re, im] pairs.

Exit codes: 0 success, 1 domain error (machine-readable ``{code, message}``),
2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from ._linalg import maxabs
from .bivector import (
    Bivector,
    det_bivector,
    is_simple,
    mu_roots,
    orthogonal_decompose,
    tr2,
)
from .clifford import Representation, representation, spin_rep
from .errors import MalformedInputError, SpinLiftError
from .expmap import exp_spin, exp_spin_factored, exp_spin_polynomial, exp_spin_simple
from .group_lift import (
    LorentzTransformation,
    factor_transform,
    is_simple_transform,
    lift,
    log_simple,
    sign_normalize,
    simple_log_coefficients,
    tr2_transform,
)
from .metric import SIGNATURES, Metric, make_metric
from .oracle import exp_series, intertwining_defect
from .sampling import (
    degenerate_denominator_transformation,
    random_nonsimple_bivector,
    random_nonsimple_transformation,
    random_wedge,
    traceless_simple_transformation,
)
from .spin import (
    cross_trace_check,
    recover_invariants,
    spin_cross_product,
    spin_decompose,
)

COMMANDS = ("decompose", "exp-spin", "log", "factor", "lift", "invariants", "selftest")

_DEFAULTS = {"metric": "pmmm", "rep": "gamma", "tol": 1e-9, "seed": 0}
_SELFTEST_TRIALS = 10


# ---------------------------------------------------------------------------
# deterministic JSON output


def _render(obj, indent: int = 0) -> str:
    pad = "  " * indent
    inner_pad = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = ",\n".join(
            f"{inner_pad}{json.dumps(key)}: {_render(value, indent + 1)}"
            for key, value in obj.items()
        )
        return "{\n" + items + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        flat = all(not isinstance(x, (dict, list, tuple)) for x in obj)
        if flat:
            return "[" + ", ".join(_render(x) for x in obj) + "]"
        items = ",\n".join(f"{inner_pad}{_render(x, indent + 1)}" for x in obj)
        return "[\n" + items + "\n" + pad + "]"
    if isinstance(obj, bool) or isinstance(obj, np.bool_):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        value = float(obj)
        if not math.isfinite(value):
            raise ValueError(f"non-finite value {value} in output")
        if value == 0.0:
            value = 0.0  # canonicalize -0.0
        return format(value, ".17g")
    if isinstance(obj, str):
        return json.dumps(obj)
    if obj is None:
        return "null"
    raise TypeError(f"cannot serialize {type(obj)!r}")


def render_document(doc: dict) -> str:
    return _render(doc) + "\n"


def _matrix_payload(m) -> list:
    m = np.asarray(m)
    if np.iscomplexobj(m):
        return [[[float(z.real), float(z.imag)] for z in row] for row in m]
    return [[float(x) for x in row] for row in m]


# ---------------------------------------------------------------------------
# request parsing


def _parse_matrix(raw) -> np.ndarray:
    try:
        m = np.array(raw, dtype=float)
    except (TypeError, ValueError) as exc:
        raise MalformedInputError(f"matrix entries must be numbers: {exc}") from exc
    if m.shape != (4, 4):
        raise MalformedInputError(f"matrix must be 4x4, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise MalformedInputError("matrix entries must be finite")
    return m


def _load_request(args) -> dict:
    """Merge the JSON input document with command-line flags (flags win)."""
    payload: dict = {}
    if args.command != "selftest":
        if args.infile:
            with open(args.infile, "r", encoding="utf-8") as handle:
                text = handle.read()
        else:
            text = sys.stdin.read()
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedInputError(f"input is not valid JSON: {exc}") from exc
        if not isinstance(payload, dict):
            raise MalformedInputError("input document must be a JSON object")
        unknown = set(payload) - {"matrix", "metric", "rep", "tol"}
        if unknown:
            raise MalformedInputError(f"unknown request keys: {sorted(unknown)}")

    request = {"command": args.command}
    for key in ("metric", "rep", "tol"):
        flag = getattr(args, key)
        if flag is not None:
            request[key] = flag
        elif key in payload:
            request[key] = payload[key]
        else:
            request[key] = _DEFAULTS[key]
    request["seed"] = args.seed if args.seed is not None else _DEFAULTS["seed"]

    if request["metric"] not in SIGNATURES:
        raise MalformedInputError(f"unknown metric tag {request['metric']!r}")
    if request["rep"] not in ("gamma", "regular"):
        raise MalformedInputError(f"unknown representation {request['rep']!r}")
    try:
        request["tol"] = float(request["tol"])
    except (TypeError, ValueError) as exc:
        raise MalformedInputError("tol must be a number") from exc
    if not (request["tol"] > 0.0 and math.isfinite(request["tol"])):
        raise MalformedInputError("tol must be a positive finite number")

    if args.command != "selftest":
        if "matrix" not in payload:
            raise MalformedInputError('input document must contain a "matrix" key')
        request["matrix"] = _parse_matrix(payload["matrix"])
    return request


# ---------------------------------------------------------------------------
# command bodies


def _cmd_decompose(matrix, g: Metric, rep: Representation, tol: float):
    L = Bivector(matrix, g)
    l_plus, l_minus = orthogonal_decompose(L, tol)
    mu = mu_roots(L)
    result = {
        "l_plus": _matrix_payload(l_plus.matrix),
        "l_minus": _matrix_payload(l_minus.matrix),
    }
    invariants = {
        "tr2_l": tr2(L),
        "det_l": det_bivector(L),
        "mu_plus": mu.mu_plus,
        "mu_minus": mu.mu_minus,
    }
    diagnostics = {
        "reconstruction_defect": maxabs(l_plus.matrix + l_minus.matrix - L.matrix),
        "annihilation_defect": max(
            maxabs(l_plus.matrix @ l_minus.matrix),
            maxabs(l_minus.matrix @ l_plus.matrix),
        ),
        "det_plus": abs(det_bivector(l_plus)),
        "det_minus": abs(det_bivector(l_minus)),
        "tr2_defect_plus": abs(tr2(l_plus) + mu.mu_plus),
        "tr2_defect_minus": abs(tr2(l_minus) + mu.mu_minus),
    }
    return "nonsimple", result, invariants, diagnostics


def _cmd_exp_spin(matrix, g: Metric, rep: Representation, tol: float):
    L = Bivector(matrix, g)
    out, branch = exp_spin(L, rep, tol, return_branch=True)
    mu = mu_roots(L)
    series = exp_series(spin_rep(rep, L))
    lam = LorentzTransformation(exp_series(L.matrix), g)
    result = {"exp_spin": _matrix_payload(out)}
    invariants = {
        "tr2_l": tr2(L),
        "det_l": det_bivector(L),
        "mu_plus": mu.mu_plus,
        "mu_minus": mu.mu_minus,
    }
    diagnostics = {
        "series_defect": maxabs(out - series),
        "intertwining_defect": intertwining_defect(out, lam, rep),
    }
    return branch, result, invariants, diagnostics


def _cmd_log(matrix, g: Metric, rep: Representation, tol: float):
    lam = LorentzTransformation(matrix, g)
    L = log_simple(lam, tol)
    k, mu_inv, kind = simple_log_coefficients(lam)
    t = float(np.trace(lam.matrix))
    t2 = tr2_transform(lam)
    result = {"log": _matrix_payload(L.matrix)}
    invariants = {
        "tr_lambda": t,
        "tr2_lambda": t2,
        "k_factor": k,
        "mu": mu_inv,
        "tr2_log": tr2(L),
    }
    diagnostics = {
        "roundtrip_defect": maxabs(exp_series(L.matrix) - lam.matrix),
        "simplicity_defect": abs(t2 - 2.0 * (t - 1.0)),
    }
    return f"simple/{kind}", result, invariants, diagnostics


def _cmd_factor(matrix, g: Metric, rep: Representation, tol: float):
    lam = LorentzTransformation(matrix, g)
    pair = factor_transform(lam, tol)
    mp, mm = pair.lambda_plus.matrix, pair.lambda_minus.matrix
    t = float(np.trace(lam.matrix))
    t2 = tr2_transform(lam)

    def simplicity(m):
        tt = float(np.trace(m))
        tt2 = 0.5 * (tt * tt - float(np.trace(m @ m)))
        return abs(tt2 - 2.0 * (tt - 1.0))

    result = {
        "lambda_plus": _matrix_payload(mp),
        "lambda_minus": _matrix_payload(mm),
    }
    invariants = {
        "tr_lambda": t,
        "tr2_lambda": t2,
        "delta": pair.delta,
        "c_plus": pair.c_plus,
        "c_minus": pair.c_minus,
        "tr_plus": float(np.trace(mp)),
        "tr_minus": float(np.trace(mm)),
    }
    diagnostics = {
        "reconstruction_defect": maxabs(mp @ mm - lam.matrix),
        "commutation_defect": maxabs(mp @ mm - mm @ mp),
        "simplicity_defect_plus": simplicity(mp),
        "simplicity_defect_minus": simplicity(mm),
        "trace_identity_defect": abs(t - 2.0 * (pair.c_plus + pair.c_minus)),
        "tr2_identity_defect": abs(t2 - (4.0 * pair.c_plus * pair.c_minus + 2.0)),
    }
    return "nonsimple", result, invariants, diagnostics


def _cmd_lift(matrix, g: Metric, rep: Representation, tol: float):
    lam = LorentzTransformation(matrix, g)
    sigma, branch = lift(lam, rep, tol, return_branch=True)
    if branch == "simple" and maxabs(lam.matrix - np.eye(4)) <= 1e-12:
        branch = "simple/identity"
    sigma = sign_normalize(sigma)
    t = float(np.trace(lam.matrix))
    t2 = tr2_transform(lam)
    result = {"sigma": _matrix_payload(sigma)}
    invariants = {
        "tr_lambda": t,
        "tr2_lambda": t2,
        "denominator": 2.0 + 2.0 * t + t2,
        "simple": is_simple_transform(lam, tol),
    }
    diagnostics = {"intertwining_defect": intertwining_defect(sigma, lam, rep)}
    return branch, result, invariants, diagnostics


def _cmd_invariants(matrix, g: Metric, rep: Representation, tol: float):
    L = Bivector(matrix, g)
    s = spin_rep(rep, L)
    recovered_tr2, recovered_det = recover_invariants(s, rep)
    direct_tr2 = tr2(L)
    direct_det = det_bivector(L)
    mu = mu_roots(L)
    simple = is_simple(L, tol)
    result = {"recovered_tr2": recovered_tr2, "recovered_det": recovered_det}
    invariants = {
        "tr2_l": direct_tr2,
        "det_l": direct_det,
        "mu_plus": mu.mu_plus,
        "mu_minus": mu.mu_minus,
    }
    diagnostics = {
        "tr2_recovery_defect": abs(recovered_tr2 - direct_tr2),
        "det_recovery_defect": abs(recovered_det - direct_det),
    }
    if not simple:
        diagnostics["cross_trace_defect"] = cross_trace_check(rep, L)
    return ("simple" if simple else "nonsimple"), result, invariants, diagnostics


_COMMAND_BODIES = {
    "decompose": _cmd_decompose,
    "exp-spin": _cmd_exp_spin,
    "log": _cmd_log,
    "factor": _cmd_factor,
    "lift": _cmd_lift,
    "invariants": _cmd_invariants,
}


# ---------------------------------------------------------------------------
# selftest battery


def _check_decomposition(g, reps, seed, trials):
    worst = 0.0
    for i in range(trials):
        L = random_nonsimple_bivector(g, seed + i)
        l_plus, l_minus = orthogonal_decompose(L)
        mu = mu_roots(L)
        scale = max(1.0, maxabs(L.matrix))
        worst = max(
            worst,
            maxabs(l_plus.matrix + l_minus.matrix - L.matrix) / scale,
            maxabs(l_plus.matrix @ l_minus.matrix) / scale**2,
            maxabs(l_minus.matrix @ l_plus.matrix) / scale**2,
            abs(det_bivector(l_plus)) / scale**4,
            abs(det_bivector(l_minus)) / scale**4,
            abs(tr2(l_plus) + mu.mu_plus) / scale**2,
            abs(tr2(l_minus) + mu.mu_minus) / scale**2,
        )
    return worst


def _check_spin_square(g, reps, seed, trials):
    worst = 0.0
    for rep in reps:
        for i in range(trials):
            W = random_wedge(g, seed + i, kind="any")
            s = spin_rep(rep, W)
            worst = max(
                worst,
                maxabs(s @ s + 0.25 * tr2(W) * rep.identity)
                / max(1.0, maxabs(W.matrix) ** 2),
            )
    return worst


def _check_spin_decompose(g, reps, seed, trials):
    worst = 0.0
    for rep in reps:
        for i in range(trials):
            L = random_nonsimple_bivector(g, seed + i)
            l_plus, l_minus = orthogonal_decompose(L)
            s_plus, s_minus = spin_decompose(spin_rep(rep, L), mu_roots(L))
            scale = max(1.0, maxabs(L.matrix) ** 2)
            worst = max(
                worst,
                maxabs(s_plus - spin_rep(rep, l_plus)) / scale,
                maxabs(s_minus - spin_rep(rep, l_minus)) / scale,
            )
    return worst


def _check_cross_product(g, reps, seed, trials):
    worst = 0.0
    for rep in reps:
        for i in range(trials):
            L = random_nonsimple_bivector(g, seed + i)
            l_plus, l_minus = orthogonal_decompose(L)
            sp = spin_rep(rep, l_plus)
            sm = spin_rep(rep, l_minus)
            predicted = spin_cross_product(spin_rep(rep, L), tr2(L), rep)
            scale = max(1.0, maxabs(L.matrix) ** 2)
            worst = max(
                worst,
                maxabs(predicted - sp @ sm) / scale,
                maxabs(sp @ sm - sm @ sp) / scale,
            )
    return worst


def _check_recovery(g, reps, seed, trials):
    worst = 0.0
    for rep in reps:
        for i in range(trials):
            L = random_nonsimple_bivector(g, seed + i)
            rec_tr2, rec_det = recover_invariants(spin_rep(rep, L), rep)
            scale = max(1.0, maxabs(L.matrix) ** 2)
            worst = max(
                worst,
                abs(rec_tr2 - tr2(L)) / scale,
                abs(rec_det - det_bivector(L)) / scale**2,
                cross_trace_check(rep, L) / scale,
            )
    return worst


def _check_exp_agreement(g, reps, seed, trials):
    worst = 0.0
    for rep in reps:
        for i in range(trials):
            L = random_nonsimple_bivector(g, seed + i)
            series = exp_series(spin_rep(rep, L))
            scale = max(1.0, maxabs(series))
            worst = max(
                worst,
                maxabs(exp_spin_factored(L, rep) - series) / scale,
                maxabs(exp_spin_polynomial(L, rep) - series) / scale,
            )
        for j, kind in enumerate(("rotation", "boost", "null")):
            W = random_wedge(g, seed + 500 + j, kind=kind)
            s = spin_rep(rep, W)
            series = exp_series(s)
            worst = max(
                worst,
                maxabs(exp_spin_simple(s, tr2(W)) - series) / max(1.0, maxabs(series)),
            )
    return worst


def _check_log_roundtrip(g, reps, seed, trials):
    worst = 0.0
    kinds = ("rotation", "boost", "null")
    for i in range(trials):
        W = random_wedge(g, seed + i, kind=kinds[i % 3])
        lam = LorentzTransformation(exp_series(W.matrix), g)
        L = log_simple(lam)
        worst = max(
            worst,
            maxabs(exp_series(L.matrix) - lam.matrix) / max(1.0, maxabs(lam.matrix)),
        )
    return worst


def _check_factor(g, reps, seed, trials):
    worst = 0.0
    for i in range(trials):
        lam = random_nonsimple_transformation(g, seed + i)
        pair = factor_transform(lam)
        mp, mm = pair.lambda_plus.matrix, pair.lambda_minus.matrix
        t = float(np.trace(lam.matrix))
        t2 = tr2_transform(lam)
        scale = max(1.0, maxabs(lam.matrix))
        worst = max(
            worst,
            maxabs(mp @ mm - lam.matrix) / scale,
            maxabs(mp @ mm - mm @ mp) / scale,
            abs(t - 2.0 * (pair.c_plus + pair.c_minus)) / scale,
            abs(t2 - (4.0 * pair.c_plus * pair.c_minus + 2.0)) / scale**2,
        )
    return worst


def _check_lift(g, reps, seed, trials):
    worst = 0.0
    for rep in reps:
        for i in range(trials):
            lam = random_nonsimple_transformation(g, seed + i)
            worst = max(worst, intertwining_defect(lift(lam, rep), lam, rep))
        for j, kind in enumerate(("rotation", "boost")):
            W = random_wedge(g, seed + 600 + j, kind=kind)
            lam = LorentzTransformation(exp_series(W.matrix), g)
            worst = max(worst, intertwining_defect(lift(lam, rep), lam, rep))
        lam = traceless_simple_transformation(g, seed + 700)
        worst = max(worst, intertwining_defect(lift(lam, rep), lam, rep))
        lam = degenerate_denominator_transformation(g, seed + 800)
        worst = max(worst, intertwining_defect(lift(lam, rep), lam, rep))
    return worst


def _check_homomorphism(g, reps, seed, trials):
    worst = 0.0
    for rep in reps:
        for i in range(trials):
            lam1 = random_nonsimple_transformation(g, seed + 2 * i)
            lam2 = random_nonsimple_transformation(g, seed + 2 * i + 1)
            product = lam1 @ lam2
            sigma = lift(lam1, rep) @ lift(lam2, rep)
            worst = max(worst, intertwining_defect(sigma, product, rep))
    return worst


def _check_double_cover(g, reps, seed, trials):
    worst = 0.0
    for rep in reps:
        for i in range(trials):
            W = random_wedge(g, seed + i, kind="rotation")
            angle = math.sqrt(tr2(W))
            W2 = W * ((angle + 2.0 * math.pi) / angle)
            flipped = exp_spin(W2, rep)
            base = exp_spin(W, rep)
            worst = max(worst, maxabs(flipped + base) / max(1.0, maxabs(base)))
    return worst


_SELFTEST_CHECKS = (
    ("bivector-decomposition", _check_decomposition, 1e-8),
    ("spin-square-scalar", _check_spin_square, 1e-10),
    ("spin-decompose", _check_spin_decompose, 1e-9),
    ("spin-cross-product", _check_cross_product, 1e-9),
    ("invariant-recovery", _check_recovery, 1e-8),
    ("exp-agreement", _check_exp_agreement, 1e-9),
    ("log-roundtrip", _check_log_roundtrip, 1e-8),
    ("factor-properties", _check_factor, 1e-8),
    ("lift-intertwining", _check_lift, 1e-7),
    ("homomorphism-pairs", _check_homomorphism, 1e-7),
    ("double-cover-sign", _check_double_cover, 1e-9),
)


def run_selftest(metric_tag: str, seed: int, trials: int = _SELFTEST_TRIALS) -> dict:
    """Run the full property battery over both representations."""
    g = make_metric(metric_tag)
    reps = (representation("gamma", g), representation("regular", g))
    checks = []
    all_passed = True
    for index, (name, fn, tol) in enumerate(_SELFTEST_CHECKS):
        defect = fn(g, reps, seed + 1000 * index, trials)
        passed = bool(defect <= tol)
        all_passed = all_passed and passed
        checks.append(
            {
                "name": name,
                "cases": trials,
                "max_defect": defect,
                "tol": tol,
                "passed": passed,
            }
        )
    return {"checks": checks, "all_passed": all_passed}


# ---------------------------------------------------------------------------
# driver


def run_request(request: dict) -> dict:
    """Execute a parsed request and assemble the response document."""
    command = request["command"]
    if command == "selftest":
        report = run_selftest(request["metric"], request["seed"])
        return {
            "command": command,
            "metric": request["metric"],
            "rep": request["rep"],
            "tol": request["tol"],
            "seed": request["seed"],
            "trials": _SELFTEST_TRIALS,
            "result": report,
        }
    g = make_metric(request["metric"])
    rep = representation(request["rep"], g)
    branch, result, invariants, diagnostics = _COMMAND_BODIES[command](
        request["matrix"], g, rep, request["tol"]
    )
    return {
        "command": command,
        "metric": request["metric"],
        "rep": request["rep"],
        "tol": request["tol"],
        "input": {"matrix": _matrix_payload(request["matrix"])},
        "branch": branch,
        "result": result,
        "invariants": invariants,
        "diagnostics": diagnostics,
    }


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinlift",
        description="Closed-form Lorentz bivector decomposition and spin lifts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        cmd = sub.add_parser(name)
        cmd.add_argument("--metric", choices=sorted(SIGNATURES), default=None)
        cmd.add_argument("--rep", choices=("gamma", "regular"), default=None)
        cmd.add_argument("--tol", type=float, default=None)
        cmd.add_argument("--seed", type=int, default=None)
        cmd.add_argument("--in", dest="infile", default=None)
        cmd.add_argument("--out", dest="outfile", default=None)
    return parser


def _emit(text: str, outfile):
    if outfile:
        with open(outfile, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        request = _load_request(args)
    except MalformedInputError as exc:
        _emit(
            render_document({"error": {"code": exc.code, "message": str(exc)}}),
            args.outfile,
        )
        return 2
    try:
        doc = run_request(request)
    except MalformedInputError as exc:
        _emit(
            render_document({"error": {"code": exc.code, "message": str(exc)}}),
            args.outfile,
        )
        return 2
    except SpinLiftError as exc:
        _emit(
            render_document({"error": {"code": exc.code, "message": str(exc)}}),
            args.outfile,
        )
        return 1
    _emit(render_document(doc), args.outfile)
    if request["command"] == "selftest" and not doc["result"]["all_passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
