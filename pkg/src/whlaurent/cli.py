"""Batch command-line front end.

Reads a JSON job description, runs the requested mode, prints a JSON
report on standard output.  Exit codes: 0 success, 2 validation error,
3 numerical failure (residual or tail estimate over tolerance).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any, Dict, Optional, Tuple

from .rings import Ring, RingError
from .series import (Antiholo, Holo, InvertiblePair, LaurentSeries, Mono,
                     WindowError, invert_from_factors, invert_numeric, laurent_ring)
from . import matrices as mx
from .corpus import random_complex_factors
from .factorization import (FactorizationError, FactorizationResult, factorize,
                            orthogonal_decompose)
from .oracle import OracleError, cepstral_factorize, compare, root_split_factorize
from .serialize import (result_to_json, ring_from_json, series_from_json,
                        series_to_json)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3

MODES = ("factorize", "verify", "orthogonal", "oracle-compare", "matrix-dump")


class JobError(ValueError):
    """Invalid job description."""


def _parse_factor(ring: Ring, item: Dict[str, Any]):
    kind = item.get("type")
    if kind == "antiholo":
        return Antiholo(ring.parse(str(item["alpha"])))
    if kind == "holo":
        return Holo(ring.parse(str(item["beta"])))
    if kind == "mono":
        return Mono(int(item.get("p", 0)), ring.parse(str(item.get("u", "1"))))
    raise JobError("unknown factor type: %r" % kind)


def _build_pair(job: Dict[str, Any], ring: Ring,
                window: Tuple[int, int]) -> InvertiblePair:
    has_factors = "factors" in job
    has_coeffs = "coefficients" in job
    if has_factors == has_coeffs:
        raise JobError("exactly one of 'factors' or 'coefficients' must be given")
    if has_factors:
        factors = [_parse_factor(ring, f) for f in job["factors"]]
        return invert_from_factors(ring, factors, window)
    a = series_from_json(ring, job["coefficients"])
    if "inverse" in job:
        b = series_from_json(ring, job["inverse"], window)
        return InvertiblePair.make(a, b)
    if ring.is_exact:
        raise JobError("exact rings need an explicit 'inverse'")
    samples = int(job.get("samples", 1024))
    return invert_numeric(a, samples)


def run_job(job: Dict[str, Any], mode_override: Optional[str] = None,
            window_override: Optional[int] = None,
            seed_override: Optional[int] = None,
            tolerance_override: Optional[float] = None,
            dump_matrices: bool = False) -> Tuple[int, Dict[str, Any]]:
    """Execute one job; returns (exit_code, json_payload)."""
    mode = mode_override or job.get("mode", "factorize")
    if mode not in MODES:
        raise JobError("unknown mode: %r" % mode)
    ring_spec = dict(job.get("ring", {"kind": "rational"}))
    if tolerance_override is not None:
        ring_spec["tolerance"] = tolerance_override
    elif "tolerance" in job:
        ring_spec.setdefault("tolerance", job["tolerance"])
    ring = ring_from_json(ring_spec)
    half = window_override if window_override is not None else int(job.get("window", 16))
    if half < 1:
        raise JobError("window must be a positive size")
    window = (-half, half)

    if mode == "oracle-compare":
        return _run_oracle_compare(job, ring, window, seed_override)

    pair = _build_pair(job, ring, window)

    if mode == "matrix-dump":
        return EXIT_OK, _run_matrix_dump(pair, ring, window)

    if mode == "orthogonal":
        dec = orthogonal_decompose(pair)
        return EXIT_OK, {
            "idempotents": [{"n": n, "c": ring.fmt(c)}
                            for n, c in sorted(dec.idempotents.items())],
            "unit": ring.fmt(dec.unit),
        }

    if mode == "verify":
        fac = job.get("factorization")
        if not isinstance(fac, dict):
            raise JobError("verify mode needs a 'factorization' object")
        pm = series_from_json(ring, fac.get("pi_minus", []))
        pt = series_from_json(ring, fac.get("pi_tilde", []))
        pp = series_from_json(ring, fac.get("pi_plus", []))
        recon = pm.mul(pt).mul(pp).truncate(window)
        residual = recon.sup_diff(pair.a.truncate(window))
        tol = 0.0 if ring.is_exact else ring.tolerance * 100
        code = EXIT_OK if residual <= tol else EXIT_NUMERICAL
        return code, {"residual": residual}

    # factorize
    res = factorize(pair, window)
    payload = result_to_json(res)
    if dump_matrices:
        payload["matrices"] = _matrix_dumps(pair, ring, window)
    return EXIT_OK, payload


def _run_oracle_compare(job: Dict[str, Any], ring: Ring, window: Tuple[int, int],
                        seed_override: Optional[int]) -> Tuple[int, Dict[str, Any]]:
    if ring.is_exact:
        raise JobError("oracle-compare requires the complex ring")
    tol = job.get("compare_tolerance", 1e-8)
    cases = []
    if "factors" in job or "coefficients" in job:
        cases.append(_build_pair(job, ring, window))
    else:
        seed = seed_override if seed_override is not None else int(job.get("seed", 0))
        rng = random.Random(seed)
        count = int(job.get("count", 20))
        for _ in range(count):
            factors = random_complex_factors(rng)
            cases.append(invert_from_factors(ring, factors, window))
    worst = 0.0
    windings_agree = True
    for pair in cases:
        engine = factorize(pair, window)
        for orc in (cepstral_factorize(pair.a), root_split_factorize(pair.a)):
            rep = compare(engine, orc)
            worst = max(worst, rep.max_diff)
            windings_agree = windings_agree and rep.winding_equal
    code = EXIT_OK if (worst <= tol and windings_agree) else EXIT_NUMERICAL
    return code, {"cases": len(cases), "max_diff": worst,
                  "windings_agree": windings_agree}


def _matrix_dumps(pair: InvertiblePair, ring: Ring,
                  window: Tuple[int, int]) -> Dict[str, str]:
    lo, hi = window
    view = (max(lo, -6), min(hi, 6))
    ring_w = laurent_ring(ring, "w")
    w = LaurentSeries.monomial(ring, 1)
    u = mx.build_U(pair.a, mx.Lattice.INTEGER, view)
    f_plus = mx.build_F("R+", ring_w, ring_w.one, w, view)
    f_minus = mx.build_F("R-", ring_w, ring_w.one, w, view)
    utilde = mx.build_Utilde(pair.a, ring_w, w, ring_w.const, view)
    return {
        "U(a)": u.dump(),
        "F^{R+}(1,w)": f_plus.dump(),
        "F^{R-}(1,w)": f_minus.dump(),
        "Utilde(a,w)": utilde.dump(),
    }


def _run_matrix_dump(pair: InvertiblePair, ring: Ring,
                     window: Tuple[int, int]) -> Dict[str, Any]:
    return {"matrices": _matrix_dumps(pair, ring, window)}


def main(argv: Optional[list] = None) -> int:
    ap = argparse.ArgumentParser(
        prog="whlaurent",
        description="Wiener-Hopf factorization of Laurent series over "
                    "commutative coefficient rings")
    ap.add_argument("--input", required=True, help="JSON job file ('-' for stdin)")
    ap.add_argument("--mode", choices=MODES, help="override the job's mode")
    ap.add_argument("--window", type=int, help="override the truncation window size")
    ap.add_argument("--seed", type=int, help="seed for generated corpora")
    ap.add_argument("--tolerance", type=float, help="override floating tolerance")
    ap.add_argument("--dump-matrices", action="store_true",
                    help="attach windowed-matrix dumps to factorize output")
    args = ap.parse_args(argv)

    try:
        if args.input == "-":
            job = json.load(sys.stdin)
        else:
            with open(args.input) as fh:
                job = json.load(fh)
        if not isinstance(job, dict):
            raise JobError("job must be a JSON object")
        code, payload = run_job(job, args.mode, args.window, args.seed,
                                args.tolerance, args.dump_matrices)
    except (json.JSONDecodeError, OSError, JobError, RingError, KeyError,
            TypeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_VALIDATION
    except (FactorizationError, WindowError, OracleError) as exc:
        print(json.dumps({"error": str(exc)}))
        return EXIT_NUMERICAL
    print(json.dumps(payload, indent=2, default=str))
    return code


if __name__ == "__main__":
    sys.exit(main())
