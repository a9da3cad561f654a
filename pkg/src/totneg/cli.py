"""Command-line front end: certify matrices, hulls, and complementarity instances.

Exit codes: 0 verdict holds / success, 1 verdict fails (with witness),
2 usage or parse problem, 3 an exact sweep hit its resource cap.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .checks import (
    TN,
    TNP,
    AlphaChoice,
    ClassQuery,
    Verdict,
    Violation,
    ViolationKind,
    check_by_contiguous_minors,
    check_by_minor_definition,
    check_tn_snr_single_vector,
    check_tn_vd_single_vector,
    check_tnp_snr,
    check_tnp_vd,
    sign_non_reversal,
    vd_check,
)
from .errors import ResourceLimitError
from .generate import (
    certificate_digest,
    cross_validate,
    generate_near_miss,
    generate_tn,
    generate_tnp,
)
from .hull import IntervalHull, hull_is_totally_negative, hull_is_totally_nonpositive, i_matrix
from .lcp import (
    LCPInstance,
    _single_vector_x,
    lcp_single_vector_check,
    solve_lcp,
)
from .matrix import (
    ExactMatrix,
    format_fraction,
    minor_det,
    parse_lcp_input,
    parse_matrix,
    parse_matrix_pair,
    submatrix,
)
from .signs import is_mixed_orthant, s_minus, s_plus, sign_profile

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _fraction_str(x: Fraction) -> str:
    return format_fraction(x)


def _matrix_json(a: ExactMatrix) -> dict[str, Any]:
    return {
        "rows": a.rows,
        "cols": a.cols,
        "entries": [[_fraction_str(v) for v in row] for row in a.row_list()],
    }


def _matrix_from_json(obj: dict[str, Any]) -> ExactMatrix:
    return ExactMatrix.from_rows(obj["entries"])


def _violation_json(v: Violation | None) -> dict[str, Any] | None:
    if v is None:
        return None
    return {
        "kind": v.kind.value,
        "rows": list(v.rows),
        "cols": list(v.cols),
        "vector": [_fraction_str(x) for x in v.vector] if v.vector is not None else None,
        "detail": _fraction_str(v.detail) if v.detail is not None else None,
    }


def _violation_from_json(obj: dict[str, Any]) -> Violation:
    return Violation(
        kind=ViolationKind(obj["kind"]),
        rows=tuple(obj["rows"]),
        cols=tuple(obj["cols"]),
        vector=tuple(Fraction(t) for t in obj["vector"]) if obj.get("vector") else None,
        detail=Fraction(obj["detail"]) if obj.get("detail") else None,
    )


def _emit(report: dict[str, Any], as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
        return
    for method in report["methods"]:
        line = f"{method['name']}: {'holds' if method['holds'] else 'FAILS'}"
        if method.get("witness"):
            w = method["witness"]
            line += f"  [{w['kind']} at rows {w['rows']} cols {w['cols']}"
            if w.get("detail") is not None:
                line += f", value {w['detail']}"
            line += "]"
        print(line)
    print(f"verdict: {'holds' if report['holds'] else 'fails'}")


def _parse_alpha(args: argparse.Namespace) -> AlphaChoice | None:
    if not args.alpha:
        return None
    mags = [Fraction(tok) for tok in args.alpha.split()]
    return AlphaChoice.of(mags, global_sign=args.alpha_sign)


def _method_entry(name: str, holds: bool, witness: Violation | None, elapsed_ms: float) -> dict[str, Any]:
    return {
        "name": name,
        "holds": holds,
        "witness": _violation_json(witness),
        "elapsed_ms": round(elapsed_ms, 3),
    }


def cmd_check(args: argparse.Namespace) -> int:
    raw = Path(args.path).read_bytes()
    a = parse_matrix(raw.decode())
    k = args.order
    alpha = _parse_alpha(args)
    cls = args.matrix_class
    start = time.perf_counter()
    methods: list[dict[str, Any]] = []
    if args.method == "all":
        report = cross_validate(a, k, alpha=alpha)
        outcomes = report.tn_methods if cls == TN else report.tnp_methods
        for m in outcomes:
            methods.append(_method_entry(m.name, m.holds, m.witness, m.elapsed_ms))
        agree = report.tn_agree if cls == TN else report.tnp_agree
        holds = agree and outcomes[0].holds
        if not agree:
            methods.append(
                {"name": "agreement", "holds": False, "witness": None, "elapsed_ms": 0.0}
            )
        extra = {"tnp_lcp_status": report.tnp_lcp_status} if cls == TNP else {}
    else:
        t0 = time.perf_counter()
        verdict = _single_method(a, cls, k, args.method, alpha)
        methods.append(_method_entry(verdict.method, verdict.holds, verdict.witness, (time.perf_counter() - t0) * 1000))
        holds = verdict.holds
        extra = {}
    report_obj = {
        "command": ["check", str(args.path), cls, f"order={k}", f"method={args.method}"],
        "input_digest": _digest(raw),
        "input": {"kind": "matrix", "matrix": _matrix_json(a)},
        "class": cls,
        "order": k,
        "methods": methods,
        "holds": holds,
        "seed": args.seed if args.seed is not None else int(_digest(raw)[:8], 16),
        "elapsed_ms": round((time.perf_counter() - start) * 1000, 3),
        **extra,
    }
    _emit(report_obj, args.json)
    return EXIT_HOLDS if holds else EXIT_FAILS


def _single_method(a: ExactMatrix, cls: str, k: int, method: str, alpha: AlphaChoice | None) -> Verdict:
    query = ClassQuery(cls, k)
    if method == "minors":
        return check_by_minor_definition(a, query)
    if method == "contiguous":
        return check_by_contiguous_minors(a, query)
    if method == "snr":
        if cls == TN:
            return check_tn_snr_single_vector(a, k, alpha)
        return check_tnp_snr(a, k, alpha=alpha)
    if method == "vd":
        if cls == TN:
            return check_tn_vd_single_vector(a, alpha, k=k)
        return check_tnp_vd(a, alpha=alpha, k=k)
    if method == "lcp":
        if cls == TN:
            return lcp_single_vector_check(a, k)
        raise ValueError("the complementarity test decides the strict class only; use --method all for tnp")
    raise ValueError(f"unknown method {method}")


def cmd_hull(args: argparse.Namespace) -> int:
    raw = Path(args.path).read_bytes()
    a, b = parse_matrix_pair(raw.decode())
    h = IntervalHull(a, b)
    k = args.order
    start = time.perf_counter()
    if args.matrix_class == TN:
        verdict = hull_is_totally_negative(h, k)
    else:
        verdict = hull_is_totally_nonpositive(h, k)
    elapsed = (time.perf_counter() - start) * 1000
    witness_json: dict[str, Any] | None = None
    if not verdict.holds:
        z, zt = verdict.failing_sign_words
        witness_json = {
            "z": list(z),
            "zt": list(zt),
            "member": _matrix_json(i_matrix(h, z, zt)),
            "violation": _violation_json(verdict.witness),
        }
    report_obj = {
        "command": ["hull", str(args.path), args.matrix_class, f"order={k}"],
        "input_digest": _digest(raw),
        "input": {"kind": "hull", "a": _matrix_json(a), "b": _matrix_json(b)},
        "class": args.matrix_class,
        "order": k,
        "methods": [
            {
                "name": verdict.method,
                "holds": verdict.holds,
                "witness": witness_json,
                "elapsed_ms": round(elapsed, 3),
            }
        ],
        "holds": verdict.holds,
        "seed": args.seed if args.seed is not None else int(_digest(raw)[:8], 16),
        "elapsed_ms": round(elapsed, 3),
    }
    _emit_hull(report_obj, args.json)
    return EXIT_HOLDS if verdict.holds else EXIT_FAILS


def _emit_hull(report: dict[str, Any], as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
        return
    m = report["methods"][0]
    if m["holds"]:
        print(f"{m['name']}: holds for the entire hull")
    else:
        w = m["witness"]
        print(f"{m['name']}: FAILS at sign words z={w['z']} zt={w['zt']}")
        v = w["violation"]
        print(f"  member minor at rows {v['rows']} cols {v['cols']} has value {v['detail']}")
    print(f"verdict: {'holds' if report['holds'] else 'fails'}")


def cmd_lcp(args: argparse.Namespace) -> int:
    raw = Path(args.path).read_bytes()
    a, q = parse_lcp_input(raw.decode())
    start = time.perf_counter()
    if args.enumerate:
        sols = solve_lcp(LCPInstance(a, q))
        body: dict[str, Any] = {
            "kind": sols.kind,
            "solutions": [[_fraction_str(v) for v in s] for s in sols.solutions],
            "families": [
                {
                    "support": list(f.support),
                    "particular": [_fraction_str(v) for v in f.particular],
                    "directions": [[_fraction_str(v) for v in d] for d in f.directions],
                    "t_range": [None if b is None else _fraction_str(b) for b in f.t_range]
                    if f.t_range is not None
                    else None,
                }
                for f in sols.families
            ],
        }
        report_obj = {
            "command": ["lcp", str(args.path), "enumerate"],
            "input_digest": _digest(raw),
            "input": {"kind": "lcp", "matrix": _matrix_json(a), "q": [_fraction_str(v) for v in q]},
            "class": None,
            "order": None,
            "methods": [{"name": "solve_lcp", "holds": True, "witness": None}],
            "solution_set": body,
            "holds": True,
            "seed": args.seed if args.seed is not None else int(_digest(raw)[:8], 16),
            "elapsed_ms": round((time.perf_counter() - start) * 1000, 3),
        }
        if args.json:
            print(json.dumps(report_obj, indent=2, sort_keys=True))
        else:
            print(f"solution set is {body['kind']}")
            for s in body["solutions"]:
                print("  (" + ", ".join(s) + ")")
            for f in body["families"]:
                rng = f["t_range"]
                desc = f"t in [{rng[0]}, {rng[1] if rng[1] is not None else 'inf'}]" if rng else "underdescribed"
                print(
                    f"  family on support {f['support']}: base ("
                    + ", ".join(f["particular"])
                    + ") + t * ("
                    + ", ".join(f["directions"][0])
                    + f"), {desc}"
                )
        return EXIT_HOLDS
    k = args.order
    if k is None:
        raise ValueError("--single-vector requires --order")
    verdict = lcp_single_vector_check(a, k)
    elapsed = (time.perf_counter() - start) * 1000
    report_obj = {
        "command": ["lcp", str(args.path), f"single-vector order={k}"],
        "input_digest": _digest(raw),
        "input": {"kind": "lcp", "matrix": _matrix_json(a), "q": [_fraction_str(v) for v in q]},
        "class": TN,
        "order": k,
        "methods": [_method_entry(verdict.method, verdict.holds, verdict.witness, elapsed)],
        "holds": verdict.holds,
        "seed": args.seed if args.seed is not None else int(_digest(raw)[:8], 16),
        "elapsed_ms": round(elapsed, 3),
    }
    _emit(report_obj, args.json)
    return EXIT_HOLDS if verdict.holds else EXIT_FAILS


def cmd_generate(args: argparse.Namespace) -> int:
    if args.count < 1:
        raise ValueError("--count must be at least 1")
    try:
        m_str, n_str = args.shape.lower().split("x")
        shape = (int(m_str), int(n_str))
    except ValueError as exc:
        raise ValueError(f"bad --shape {args.shape!r}, expected MxN") from exc
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    order = args.order if args.order is not None else min(shape)
    for idx in range(args.count):
        seed = args.seed + idx
        if args.matrix_class == TN:
            inst = generate_tn(shape, order, seed)
        elif args.matrix_class == TNP:
            inst = generate_tnp(shape, order, seed)
        else:
            inst = generate_near_miss(shape, order, seed)
        stem = f"{inst.klass}_{shape[0]}x{shape[1]}_k{order}_seed{seed}"
        (out_dir / f"{stem}.txt").write_text(inst.matrix.to_text())
        meta = "\n".join(
            [
                f"class={inst.klass}",
                f"order={order}",
                f"shape={shape[0]}x{shape[1]}",
                f"seed={seed}",
                f"attempts={inst.attempts}",
                f"certificate={certificate_digest(inst.matrix, order)}",
            ]
        )
        (out_dir / f"{stem}.meta").write_text(meta + "\n")
        print(f"wrote {out_dir / (stem + '.txt')}")
    return EXIT_HOLDS


def _verify_minor_witness(a: ExactMatrix, v: Violation) -> str | None:
    value = minor_det(a, v.rows, v.cols)
    if v.detail is not None and value != v.detail:
        return f"recomputed minor {value} != recorded {v.detail}"
    if v.kind is ViolationKind.NONNEGATIVE_MINOR and value < 0:
        return "recorded nonnegative minor is negative"
    if v.kind is ViolationKind.POSITIVE_MINOR and value <= 0:
        return "recorded positive minor is nonpositive"
    return None


def _verify_witness_entry(a: ExactMatrix, method: str, v: Violation) -> str | None:
    """Re-check one recorded violation against the parsed input; None when it verifies."""
    if v.kind in (ViolationKind.NONNEGATIVE_MINOR, ViolationKind.POSITIVE_MINOR):
        return _verify_minor_witness(a, v)
    sub = submatrix(a, v.rows, v.cols)
    if v.kind is ViolationKind.SIGN_REVERSAL:
        if v.vector is None:
            return "reversal witness lacks the vector"
        if all(x == 0 for x in v.vector):
            return None  # degenerate adjugate: trivially no positive product
        strict = "tnp" not in method
        ok, _ = sign_non_reversal(sub, v.vector, strict=strict)
        return "vector does not exhibit a reversal" if ok else None
    if v.kind is ViolationKind.VARIATION_INCREASE:
        if v.vector is None:
            return "variation witness lacks the vector"
        y = sub.matvec(v.vector)
        if "tnp" in method:
            return None if s_minus(y) > s_minus(v.vector) else "weak variation did not grow"
        if not is_mixed_orthant(v.vector):
            return None  # degenerate test vector is itself the certificate
        return None if s_plus(y) > s_minus(v.vector) else "variation did not grow"
    if v.kind is ViolationKind.EQUALITY_SIGN_CLAUSE:
        if v.vector is None:
            return "clause witness lacks the vector"
        y = sub.matvec(v.vector)
        if "tnp" in method:
            if s_minus(y) != s_minus(v.vector) or all(val == 0 for val in y):
                return "equality case not reached"
            pin, pout = sign_profile(v.vector), sign_profile(y)
            bad = (
                pin.first_nonzero_sign != pout.first_nonzero_sign
                or pin.last_nonzero_sign != pout.last_nonzero_sign
            )
            return None if bad else "end signs agree after all"
        satisfied, pin, pout = vd_check(sub, v.vector)
        if pout.s_plus != pin.s_minus:
            return "equality case not reached"
        return None if not satisfied else "clause holds after all"
    if v.kind is ViolationKind.LCP_SOLUTION_MISMATCH:
        x = _single_vector_x(sub)
        if v.vector is not None and tuple(-t for t in x) != v.vector:
            return "recorded expected solution does not match the construction"
        sols = solve_lcp(LCPInstance(sub, sub.matvec(x)))
        zero = tuple(Fraction(0) for _ in range(sub.rows))
        expected = {zero, tuple(-t for t in x)}
        mismatch = not (sols.is_finite and set(sols.solutions) == expected)
        return None if mismatch else "solution set matches after all"
    return f"unknown witness kind {v.kind}"


def cmd_verify_witness(args: argparse.Namespace) -> int:
    report = json.loads(Path(args.path).read_text())
    problems: list[str] = []
    kind = report["input"]["kind"]
    checked = 0
    for m in report["methods"]:
        if m.get("holds") or not m.get("witness"):
            continue
        checked += 1
        if kind == "hull":
            w = m["witness"]
            member = _matrix_from_json(w["member"])
            h = IntervalHull(_matrix_from_json(report["input"]["a"]), _matrix_from_json(report["input"]["b"]))
            z, zt = tuple(w["z"]), tuple(w["zt"])
            if i_matrix(h, z, zt) != member:
                problems.append(f"{m['name']}: recorded member does not match its sign words")
                continue
            problem = _verify_minor_witness(member, _violation_from_json(w["violation"]))
        else:
            a = _matrix_from_json(report["input"]["matrix"])
            problem = _verify_witness_entry(a, m["name"], _violation_from_json(m["witness"]))
        if problem:
            problems.append(f"{m['name']}: {problem}")
    if problems:
        for p in problems:
            print(f"witness FAILED: {p}", file=sys.stderr)
        return EXIT_FAILS
    print(f"all witnesses verified ({checked} checked)")
    return EXIT_HOLDS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="totneg",
        description="Certify total negativity / non-positivity of matrices and interval hulls.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_check = sub.add_parser("check", help="certify a single matrix")
    p_check.add_argument("path")
    p_check.add_argument("--class", dest="matrix_class", choices=[TN, TNP], required=True)
    p_check.add_argument("--order", type=int, required=True)
    p_check.add_argument(
        "--method", choices=["minors", "contiguous", "snr", "vd", "lcp", "all"], default="all"
    )
    p_check.add_argument("--alpha", help="test coefficient magnitudes, e.g. '1 1/2 2'")
    p_check.add_argument("--alpha-sign", type=int, choices=[1, -1], default=1)
    p_check.add_argument("--seed", type=int)
    p_check.add_argument("--json", action="store_true")
    p_check.set_defaults(func=cmd_check)

    p_hull = sub.add_parser("hull", help="certify an entire interval hull")
    p_hull.add_argument("path")
    p_hull.add_argument("--class", dest="matrix_class", choices=[TN, TNP], required=True)
    p_hull.add_argument("--order", type=int, required=True)
    p_hull.add_argument("--seed", type=int)
    p_hull.add_argument("--json", action="store_true")
    p_hull.set_defaults(func=cmd_hull)

    p_lcp = sub.add_parser("lcp", help="solve or certify a complementarity instance")
    p_lcp.add_argument("path")
    group = p_lcp.add_mutually_exclusive_group(required=True)
    group.add_argument("--enumerate", action="store_true")
    group.add_argument("--single-vector", action="store_true")
    p_lcp.add_argument("--order", type=int)
    p_lcp.add_argument("--seed", type=int)
    p_lcp.add_argument("--json", action="store_true")
    p_lcp.set_defaults(func=cmd_lcp)

    p_gen = sub.add_parser("generate", help="emit oracle-certified instances")
    p_gen.add_argument("--class", dest="matrix_class", choices=[TN, TNP, "near-miss"], required=True)
    p_gen.add_argument("--shape", required=True, help="MxN")
    p_gen.add_argument("--order", type=int)
    p_gen.add_argument("--count", type=int, required=True)
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--out-dir", required=True)
    p_gen.set_defaults(func=cmd_generate)

    p_verify = sub.add_parser("verify-witness", help="re-check the witnesses in a JSON report")
    p_verify.add_argument("path")
    p_verify.set_defaults(func=cmd_verify_witness)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
