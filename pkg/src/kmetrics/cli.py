"""Command-line front end.

Every run prints one JSON report to stdout: either the command's results or
an error object.  Exit codes: 0 success, 1 negative verification verdict,
2 unusable input (parse, schema, or precondition), 3 solver failure.  The
results of a run depend only on the inputs and flags, never on --jobs.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import sys
import time

import numpy as np

from . import corpus
from .apex import apex_extend, apex_extend_chain_matrix
from .coboundary import (
    ChainMatrix,
    NormSpec,
    NotStrongError,
    embed_l2_to_lp,
    eval_coboundary_metric,
    frechet_embed,
    jl_target_dim,
    l2_to_lp_dim,
    max_distortion,
    random_project,
)
from .fileio import (
    InputError,
    read_any,
    read_chain_matrix,
    read_cloud,
    read_complex,
    read_kmetric,
    write_chain,
    write_chain_matrix,
    write_cloud,
    write_complex,
    write_kmetric,
)
from .hypertree import NotHypertreeError, hypertree_to_l1, is_hypertree, mbc_metric
from .lp import LPError
from .metric import (
    KMetric,
    UnfillableBoundaryError,
    check_strong,
    check_weak,
    min_bounding_chain,
)
from .simplicial import apply_operator, boundary_operator, indicator_chain
from .volume import PointCloud, volume_metric, volume_to_coboundary

OK, VERIFY_FAIL, INPUT_FAIL, SOLVER_FAIL = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # emit JSON instead of argparse's exit
        raise _UsageError(message)


def _parse_p(text: str) -> float:
    if text.strip().lower() in ("inf", "infinity"):
        return math.inf
    try:
        return float(text)
    except ValueError:
        raise _UsageError(f"invalid norm exponent: {text!r}") from None


def _parse_target(text: str) -> tuple:
    try:
        verts = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise _UsageError(f"invalid vertex list: {text!r}") from None
    if len(verts) < 2:
        raise _UsageError("target needs at least two vertices")
    return verts


def _sha256(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(65536), b""):
            digest.update(block)
    return "sha256:" + digest.hexdigest()


def _simplex_list(s) -> list:
    return [int(v) for v in s]


def build_parser() -> _Parser:
    parser = _Parser(prog="kmetrics", description=__doc__)
    parser.add_argument(
        "--jobs",
        type=int,
        default=os.cpu_count() or 1,
        help="parallel solver fan-out (results do not depend on this)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check the weak/strong chain inequalities")
    p.add_argument("metric")
    p.add_argument("--strong", action="store_true")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--tol", type=float, default=1e-6)

    p = sub.add_parser("min-chain", help="cheapest facet chain bounding a tuple")
    p.add_argument("complex")
    p.add_argument("--target", required=True, help="comma-separated vertices")
    p.add_argument("-o", "--output", help="write the optimal chain here")

    p = sub.add_parser("embed", help="build or shrink chain collections")
    esub = p.add_subparsers(dest="mode", required=True)
    q = esub.add_parser("frechet", help="strong table to max-norm chain columns")
    q.add_argument("metric")
    q.add_argument("-o", "--output", required=True)
    q = esub.add_parser("jl", help="Gaussian sketch at the dimension-bound size")
    q.add_argument("chains")
    q.add_argument("--eps", type=float, required=True)
    q.add_argument("--seed", type=int, required=True)
    q.add_argument("--cprime", type=float, default=8.0)
    q.add_argument("-o", "--output", required=True)
    q = esub.add_parser("l2lp", help="re-norm a Euclidean table into p-norm columns")
    q.add_argument("chains")
    q.add_argument("--p", required=True)
    q.add_argument("--eps", type=float, required=True)
    q.add_argument("--seed", type=int, required=True)
    q.add_argument("-o", "--output", required=True)

    p = sub.add_parser("eval", help="evaluate chain columns into a distance table")
    p.add_argument("chains")
    p.add_argument("--p", required=True)
    p.add_argument("-o", "--output")

    p = sub.add_parser("volume", help="simplex volumes of a point cloud")
    p.add_argument("points")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--to-coboundary", action="store_true")
    p.add_argument("-o", "--output")

    p = sub.add_parser("apex", help="raise arity through a fresh apex vertex")
    p.add_argument("payload", help="a table or chain collection file")
    p.add_argument("-o", "--output")

    p = sub.add_parser("hypertree", help="rank checks and the 1-norm realisation")
    p.add_argument("complex")
    p.add_argument("--to-l1", action="store_true")
    p.add_argument("-o", "--output")

    p = sub.add_parser("gen", help="write a named corpus instance")
    p.add_argument(
        "name",
        choices=[
            "subdivided-triangle",
            "discrete",
            "four-point-equilateral",
            "six-point-apex-discrete",
            "perimeter",
            "max-side",
            "random-strong",
        ],
    )
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--high", type=float, default=10.0)
    p.add_argument("--points", help="cloud file for perimeter/max-side")
    p.add_argument("-o", "--output", required=True)

    return parser


# --- handlers ---------------------------------------------------------------


def _cmd_verify(args, inputs, outputs):
    d = read_kmetric(args.metric)
    inputs[args.metric] = _sha256(args.metric)
    if args.strong:
        report = check_strong(
            d, exhaustive=args.exhaustive, tol=args.tol, jobs=args.jobs
        )
    else:
        report = check_weak(d, tol=args.tol)
    results = {
        "n": d.n,
        "k": d.k,
        "weak": report.is_weak,
        "weak_violations": [
            {"s": _simplex_list(s), "y": int(y)} for s, y in report.weak_violations
        ],
        "pseudo": len(report.pseudo_violations) > 0,
        "pseudo_zero_tuples": len(report.pseudo_violations),
    }
    code = OK if report.is_weak else VERIFY_FAIL
    if args.strong:
        results["strong"] = report.is_strong
        if report.strong_witness is not None:
            w = report.strong_witness
            results["witness"] = {
                "s": _simplex_list(w.simplex),
                "value": w.value,
                "cost": w.cost,
                "chain_support": [
                    {"s": _simplex_list(s), "coeff": float(c)}
                    for s, c in zip(w.chain.support(), w.chain.coeffs[w.chain.coeffs != 0])
                ],
            }
        if args.exhaustive:
            results["margins"] = [
                {"s": _simplex_list(s), "cost": cost, "value": value}
                for s, cost, value in report.strong_margins
            ]
        if not report.is_strong:
            code = VERIFY_FAIL
    return results, code


def _cmd_min_chain(args, inputs, outputs):
    K = read_complex(args.complex)
    inputs[args.complex] = _sha256(args.complex)
    target = _parse_target(args.target)
    if len(target) != K.k:
        raise _UsageError(f"target needs {K.k} vertices, got {len(target)}")
    weights = np.zeros(boundary_operator(K.n, K.k - 1).matrix.shape[1])
    idx = K.facet_indices()
    weights[idx] = K.weights
    boundary = apply_operator(
        boundary_operator(K.n, K.k - 1), indicator_chain(K.n, target)
    )
    cost, chain = min_bounding_chain(weights, boundary, mask=idx)
    if args.output:
        write_chain(chain, args.output)
        outputs["chain"] = args.output
    support = chain.support()
    results = {
        "target": list(target),
        "cost": cost,
        "chain_support": [
            {"s": _simplex_list(s), "coeff": float(c)}
            for s, c in zip(support, chain.coeffs[chain.coeffs != 0])
        ],
    }
    return results, OK


def _cmd_embed(args, inputs, outputs):
    if args.mode == "frechet":
        d = read_kmetric(args.metric)
        inputs[args.metric] = _sha256(args.metric)
        F = frechet_embed(d, jobs=args.jobs)
        write_chain_matrix(F, args.output)
        outputs["chains"] = args.output
        return {"n": F.n, "k": F.k, "columns": F.m}, OK

    F = read_chain_matrix(args.chains)
    inputs[args.chains] = _sha256(args.chains)
    if args.mode == "jl":
        m_target = jl_target_dim(F.n, F.k, args.eps, args.cprime)
        projected = random_project(F, m_target, NormSpec(2), args.seed)
        distortion = max_distortion(
            eval_coboundary_metric(projected, NormSpec(2)),
            eval_coboundary_metric(F, NormSpec(2)),
        )
        results = {
            "columns_before": F.m,
            "columns_after": projected.m,
            "eps": args.eps,
            "distortion": distortion,
        }
    else:  # l2lp
        p = _parse_p(args.p)
        projected = embed_l2_to_lp(F, p, args.eps, args.seed)
        distortion = max_distortion(
            eval_coboundary_metric(projected, NormSpec(p)),
            eval_coboundary_metric(F, NormSpec(2)),
        )
        results = {
            "columns_before": F.m,
            "columns_after": projected.m,
            "p": p,
            "eps": args.eps,
            "distortion": distortion,
        }
    write_chain_matrix(projected, args.output)
    outputs["chains"] = args.output
    return results, OK


def _cmd_eval(args, inputs, outputs):
    F = read_chain_matrix(args.chains)
    inputs[args.chains] = _sha256(args.chains)
    d = eval_coboundary_metric(F, NormSpec(_parse_p(args.p)))
    if args.output:
        write_kmetric(d, args.output)
        outputs["metric"] = args.output
    return {
        "n": d.n,
        "k": d.k,
        "min_value": float(d.values.min()),
        "max_value": float(d.values.max()),
    }, OK


def _cmd_volume(args, inputs, outputs):
    cloud = read_cloud(args.points)
    inputs[args.points] = _sha256(args.points)
    if args.to_coboundary:
        F = volume_to_coboundary(cloud, args.k)
        if args.output:
            write_chain_matrix(F, args.output)
            outputs["chains"] = args.output
        return {"points": cloud.count, "k": args.k, "columns": F.m}, OK
    d = volume_metric(cloud, args.k)
    if args.output:
        write_kmetric(d, args.output)
        outputs["metric"] = args.output
    return {
        "points": cloud.count,
        "k": args.k,
        "min_volume": float(d.values.min()),
        "max_volume": float(d.values.max()),
    }, OK


def _cmd_apex(args, inputs, outputs):
    kind, payload = read_any(args.payload)
    inputs[args.payload] = _sha256(args.payload)
    if kind == "kmetric":
        extended = apex_extend(payload)
        if args.output:
            write_kmetric(extended, args.output)
            outputs["metric"] = args.output
    elif kind == "chain_matrix":
        extended = apex_extend_chain_matrix(payload)
        if args.output:
            write_chain_matrix(extended, args.output)
            outputs["chains"] = args.output
    else:
        raise InputError(
            args.payload, f"apex extension applies to tables or chains, not {kind}"
        )
    return {
        "kind": kind,
        "n": extended.n,
        "k": extended.k,
        "apex": extended.n - 1,
    }, OK


def _cmd_hypertree(args, inputs, outputs):
    K = read_complex(args.complex)
    inputs[args.complex] = _sha256(args.complex)
    report = is_hypertree(K)
    results = {
        "n": K.n,
        "k": K.k,
        "facets": report.facet_count,
        "facet_rank": report.facet_rank,
        "cycle_space_dim": report.cycle_space_dim,
        "acyclic": report.acyclic,
        "fills_cycles": report.fills_cycles,
        "hypertree": report.is_hypertree,
    }
    if args.to_l1:
        F = hypertree_to_l1(K)  # raises NotHypertreeError on a bad complex
        if args.output:
            write_chain_matrix(F, args.output)
            outputs["chains"] = args.output
        results["columns"] = F.m
    return results, OK if report.is_hypertree else VERIFY_FAIL


def _cmd_gen(args, inputs, outputs):
    name = args.name
    if name == "subdivided-triangle":
        inst = corpus.subdivided_triangle(high=args.high)
    elif name == "discrete":
        if args.n is None or args.k is None:
            raise _UsageError("discrete needs --n and --k")
        inst = corpus.discrete_metric(args.n, args.k)
    elif name == "four-point-equilateral":
        inst = corpus.four_point_equilateral()
    elif name == "six-point-apex-discrete":
        inst = corpus.six_point_apex_discrete()
    elif name in ("perimeter", "max-side"):
        if not args.points:
            raise _UsageError(f"{name} needs --points")
        cloud = read_cloud(args.points)
        inputs[args.points] = _sha256(args.points)
        maker = corpus.perimeter_metric if name == "perimeter" else corpus.max_side_metric
        inst = maker(cloud)
    else:  # random-strong
        if args.n is None or args.k is None:
            raise _UsageError("random-strong needs --n and --k")
        inst = corpus.random_strong_metric(args.n, args.k, args.seed)

    payload = inst.payload
    if isinstance(payload, KMetric):
        write_kmetric(payload, args.output)
    elif isinstance(payload, ChainMatrix):
        write_chain_matrix(payload, args.output)
    else:
        raise _UsageError(f"cannot serialise payload of {name}")
    outputs["instance"] = args.output

    expected = {}
    for key, value in inst.expected.items():
        if isinstance(value, dict):
            expected[key] = {
                ",".join(map(str, s)): float(v) for s, v in value.items()
            }
        elif isinstance(value, tuple):
            expected[key] = list(value)
        else:
            expected[key] = value
    return {"name": name, "expected": expected}, OK


_HANDLERS = {
    "verify": _cmd_verify,
    "min-chain": _cmd_min_chain,
    "embed": _cmd_embed,
    "eval": _cmd_eval,
    "volume": _cmd_volume,
    "apex": _cmd_apex,
    "hypertree": _cmd_hypertree,
    "gen": _cmd_gen,
}


def _emit(obj: dict) -> None:
    print(json.dumps(obj, indent=1))


def _error(kind: str, message: str, **extra) -> dict:
    body = {"kind": kind, "message": message}
    body.update({k: v for k, v in extra.items() if v is not None})
    return {"error": body}


def main(argv=None) -> int:
    started = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        _emit(_error("usage", str(exc)))
        return INPUT_FAIL

    inputs, outputs = {}, {}
    try:
        results, code = _HANDLERS[args.command](args, inputs, outputs)
    except _UsageError as exc:
        _emit(_error("usage", str(exc)))
        return INPUT_FAIL
    except InputError as exc:
        _emit(
            _error(
                "input", exc.message, file=exc.path, field=exc.field, line=exc.line
            )
        )
        return INPUT_FAIL
    except NotStrongError as exc:
        _emit(
            _error(
                "verification",
                str(exc),
                simplex=_simplex_list(exc.simplex),
                value=exc.value,
                achieved=exc.achieved,
            )
        )
        return VERIFY_FAIL
    except NotHypertreeError as exc:
        _emit(_error("verification", str(exc)))
        return VERIFY_FAIL
    except UnfillableBoundaryError as exc:
        _emit(_error("input", str(exc)))
        return INPUT_FAIL
    except LPError as exc:
        _emit(_error("solver", str(exc)))
        return SOLVER_FAIL
    except (ValueError, OSError) as exc:
        _emit(_error("input", str(exc)))
        return INPUT_FAIL

    _emit(
        {
            "command": args.command
            + (f" {args.mode}" if getattr(args, "mode", None) else ""),
            "inputs": inputs,
            "results": results,
            "outputs": outputs,
            "timing": {"seconds": round(time.perf_counter() - started, 6)},
        }
    )
    return code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
