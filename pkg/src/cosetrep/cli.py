"""Command line interface.

Commands
--------
coeffs    print the rational coefficient table
realize   infinitesimal action of a generator at a coset point, with oracle
factor    split a finite transformation into coset representative x rotation
gauge     flow a section of attached vectors along a node-wise generator field
verify    run a self-check suite and report every measured property

Exit codes: 0 success, 1 a mathematical check or domain guard failed,
2 usage or input-document error.  Reports are plain JSON (or CSV where
offered) with sorted keys and no timestamps, so identical inputs produce
identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from .coeffs import l_coeffs
from .errors import ClosureError, DimensionError, DomainError
from .induced import (
    factor_boost_rotation,
    flow_section,
    group_from_spec,
    reconstruct,
    section_from_json_dict,
    section_to_json_dict,
    spinor_hrep,
    vector_hrep,
)
from .lie import CosetPoint, algebra_from_json_dict, h_pairs, so1m_algebra
from .series import DEFAULT_ORDER, realize
from .verify import SUITES, fd_action_derivative, suite_algebra

__all__ = ["main"]


class _UsageError(Exception):
    """Bad flags or an unreadable/malformed input document (exit 2)."""


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _load_json(path: str) -> dict:
    try:
        with open(path) as f:
            return json.load(f)
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise _UsageError(f"{path} is not valid JSON: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _json_text(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# input documents
# ---------------------------------------------------------------------------

def _element_from_doc(alg, doc) -> "object":
    """Generator coordinates from {"boost": [...], "rotations": [[i,k,theta]...]}."""
    f = np.zeros(alg.dim_f)
    h = np.zeros(alg.dim_h)
    boost = doc.get("boost")
    if boost is not None:
        b = np.asarray(boost, dtype=float)
        if b.shape != (alg.dim_f,):
            raise _UsageError(f"boost must have {alg.dim_f} entries, got shape {b.shape}")
        f = b
    pairs = {pr: a for a, pr in enumerate(h_pairs(alg.dim_f))}
    for entry in doc.get("rotations", []):
        try:
            i, k, theta = int(entry[0]), int(entry[1]), float(entry[2])
        except (TypeError, ValueError, IndexError) as exc:
            raise _UsageError(f"rotation entries must be [i, k, theta], got {entry!r}") from exc
        if (i, k) not in pairs:
            raise _UsageError(f"no rotation plane ({i}, {k}) for m={alg.dim_f}")
        h[pairs[(i, k)]] += theta
    return alg.element(h=h, f=f)


def _matrix_from_doc(doc, m_flag: int | None) -> np.ndarray:
    """Finite transformation from {"matrix": ...} or {"m", "boost", "rotations"}."""
    if "matrix" in doc:
        g = np.asarray(doc["matrix"], dtype=float)
        if g.ndim != 2 or g.shape[0] != g.shape[1]:
            raise _UsageError(f"matrix must be square, got shape {g.shape}")
        if m_flag is not None and g.shape[0] != m_flag + 1:
            raise _UsageError(f"matrix is {g.shape[0]}x{g.shape[0]} but --m {m_flag} was given")
        return g
    m = doc.get("m", m_flag)
    if m is None:
        raise _UsageError("document needs either a matrix or an m with boost/rotations")
    m = int(m)
    if m_flag is not None and m != m_flag:
        raise _UsageError(f"document has m={m} but --m {m_flag} was given")
    try:
        return group_from_spec(m, doc.get("boost"), doc.get("rotations", ()))
    except (DomainError, DimensionError) as exc:
        raise _UsageError(str(exc)) from exc


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _cmd_coeffs(args) -> int:
    table = l_coeffs(args.order)
    if args.format == "csv":
        lines = ["n,numerator,denominator,value"]
        for n in range(1, args.order + 1):
            c: Fraction = table.l(n)
            lines.append(f"{n},{c.numerator},{c.denominator},{float(c)!r}")
        _emit("\n".join(lines) + "\n", args.out)
        return 0
    rows = [
        {
            "n": n,
            "numerator": table.l(n).numerator,
            "denominator": table.l(n).denominator,
            "value": float(table.l(n)),
        }
        for n in range(1, args.order + 1)
    ]
    _emit(_json_text({"order": args.order, "coefficients": rows}), args.out)
    return 0


def _cmd_realize(args) -> int:
    doc = _load_json(args.infile)
    try:
        sigma = np.asarray(doc["sigma"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise _UsageError(f"document needs a numeric sigma: {exc}") from exc
    m = int(doc.get("m", sigma.shape[0] if sigma.ndim == 1 else 0))
    if args.m is not None and args.m != m:
        raise _UsageError(f"document has m={m} but --m {args.m} was given")
    if sigma.shape != (m,):
        raise _UsageError(f"sigma must have {m} entries, got shape {sigma.shape}")
    try:
        alg = so1m_algebra(m)
    except (DomainError, DimensionError) as exc:
        raise _UsageError(str(exc)) from exc
    xi_doc = doc.get("xi")
    if not isinstance(xi_doc, dict):
        raise _UsageError('document needs "xi": {"boost": [...], "rotations": [...]}')
    xi = _element_from_doc(alg, xi_doc)
    point = CosetPoint(sigma)

    act = realize(alg, xi, point, order=args.order)
    fd_sigma, fd_comp = fd_action_derivative(alg, xi, point)
    diff = max(
        float(abs(act.dF - fd_sigma).max()) if act.dF.size else 0.0,
        float(abs(act.dI - fd_comp).max()) if act.dI.size else 0.0,
    )

    payload = {
        "m": m,
        "order": args.order,
        "sigma": sigma.tolist(),
        "d_sigma": {"series": act.dF.tolist(), "oracle": fd_sigma.tolist()},
        "d_compensator": {"series": act.dI.tolist(), "oracle": fd_comp.tolist()},
        "max_abs_diff": diff,
    }
    if "v" in doc:
        v = np.asarray(doc["v"], dtype=float)
        hrep = (vector_hrep if args.rep == "vector" else spinor_hrep)(m)
        if v.shape != (hrep.d,):
            raise _UsageError(
                f"v must have {hrep.d} entries for the {args.rep} representation, got shape {v.shape}"
            )
        payload["d_v"] = (hrep.matrix(act.dI) @ v).tolist()
        payload["rep"] = args.rep

    if args.format == "csv":
        lines = ["part,index,series,oracle"]
        for i, (s, o) in enumerate(zip(act.dF, fd_sigma)):
            lines.append(f"sigma,{i},{float(s)!r},{float(o)!r}")
        for i, (s, o) in enumerate(zip(act.dI, fd_comp)):
            lines.append(f"compensator,{i},{float(s)!r},{float(o)!r}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_json_text(payload), args.out)
    return 0


def _cmd_factor(args) -> int:
    doc = _load_json(args.infile)
    g = _matrix_from_doc(doc, args.m)
    pair = factor_boost_rotation(g)
    err = float(abs(reconstruct(pair) - g).max())
    payload = {
        "m": pair.f_prime.m,
        "f_prime": pair.f_prime.sigma.tolist(),
        "rho": pair.rho.tolist(),
        "reconstruction_error": err,
    }
    _emit(_json_text(payload), args.out)
    return 0


def _cmd_gauge(args) -> int:
    doc = _load_json(args.infile)
    try:
        section, xi = section_from_json_dict(doc)
    except (DomainError, DimensionError) as exc:
        raise _UsageError(str(exc)) from exc
    if xi is None:
        raise _UsageError("gauge flow needs a generator field: every node must carry xi")
    m = section.m
    try:
        alg = so1m_algebra(m)
    except (DomainError, DimensionError) as exc:
        raise _UsageError(str(exc)) from exc
    hrep = (vector_hrep if args.rep == "vector" else spinor_hrep)(m)
    if section.d != hrep.d:
        raise _UsageError(
            f"section vectors have d={section.d} but the {args.rep} representation needs d={hrep.d}"
        )
    flowed = flow_section(alg, section, xi, args.t, args.order, hrep)
    _emit(_json_text(section_to_json_dict(flowed, xi)), args.out)
    return 0


def _cmd_verify(args) -> int:
    suite_fn = SUITES[args.suite]
    if args.infile is not None:
        if args.suite != "algebra":
            raise _UsageError("--in is only meaningful for the algebra suite")
        doc = _load_json(args.infile)
        try:
            alg = algebra_from_json_dict(doc)
        except (ValueError, KeyError, TypeError) as exc:
            raise _UsageError(f"bad algebra document: {exc}") from exc
        results = suite_algebra(args.tol, args.seed, alg=alg)
    else:
        results = suite_fn(args.tol, args.seed)
    failures = [r for r in results if not r.informational and not r.passed]
    payload = {
        "suite": args.suite,
        "seed": args.seed,
        "tol": args.tol,
        "passed": not failures,
        "n_failed": len(failures),
        "results": [r.as_dict() for r in results],
    }
    if args.format == "csv":
        lines = ["name,passed,measured,threshold,informational"]
        for r in results:
            thr = "" if r.threshold is None else repr(float(r.threshold))
            lines.append(
                f"{r.name},{str(r.passed).lower()},{float(r.measured)!r},{thr},{str(r.informational).lower()}"
            )
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_json_text(payload), args.out)
    return 0 if not failures else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cosetrep",
        description="Coset realizations of pseudo-orthogonal groups: series, factorization, gauge flow.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="print the rational coefficient table")
    p.add_argument("--order", type=_positive_int, default=12, help="largest index to print")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("realize", help="infinitesimal action of a generator at a point")
    p.add_argument("--in", dest="infile", required=True, help="JSON with sigma and xi")
    p.add_argument("--m", type=_positive_int, default=None, help="check the document against this m")
    p.add_argument("--order", type=_positive_int, default=DEFAULT_ORDER, help="series truncation")
    p.add_argument("--rep", choices=("vector", "spinor"), default="vector")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("factor", help="split a finite transformation")
    p.add_argument("--in", dest="infile", required=True, help="JSON with a matrix or boost/rotations")
    p.add_argument("--m", type=_positive_int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser("gauge", help="flow a section along its generator field")
    p.add_argument("--in", dest="infile", required=True, help="section JSON, every node carrying xi")
    p.add_argument("--t", type=float, default=1.0, help="total flow time")
    p.add_argument("--order", type=_positive_int, default=16, help="number of Euler steps")
    p.add_argument("--rep", choices=("vector", "spinor"), default="vector")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_gauge)

    p = sub.add_parser("verify", help="run a self-check suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--tol", type=float, default=None, help="override the comparison thresholds")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--in", dest="infile", default=None, help="algebra JSON for the algebra suite")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"cosetrep: {exc}", file=sys.stderr)
        return 2
    except DimensionError as exc:
        print(f"cosetrep: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ClosureError) as exc:
        print(f"cosetrep: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"cosetrep: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
