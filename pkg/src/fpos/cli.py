"""Command-line front end.

Subcommands: invariants | positivity | cones | stability | verify.
Verdicts are data and exit 0; exit 2 means invalid input, exit 1 means a
mathematically guaranteed identity failed (a bug).  With --json the output
is one object {command, input, results, checks, seed?} with every rational
as an exact "p/q" string; identical inputs always produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chowring import class_of_ci
from .cones import b_cone, cone_chain_report, in_cone, membership_equivalence_check, nef_cone, pseff_cone, virtual_slopes
from .errors import InconsistencyError
from .instances import (
    Instance,
    instance_payload,
    load_instance,
    parse_contact_problem,
    parse_instance,
    rational_str,
    to_jsonable,
    _load_json,
)
from .positivity import (
    DegenerateMarginError,
    asymptotic_threshold,
    canonical_class,
    f_positive_at,
    fiber_degree,
    margin_polynomial,
    slope_inequality_check,
    top_self_intersection,
    verify_theorem,
)
from .pushforward import deg_pushforward, rank_fiber
from .stability import bezout_contact, instability_report, propagation_check
from .sweep import run_sweep


def _instance_line(inst: Instance) -> str:
    pairs = " ".join(f"({k},{y})" for k, y in inst.ci.pairs)
    return (
        f"bundle rank {inst.ambient.rank}, degree {inst.ambient.degree}; "
        f"hypersurfaces (k,y): {pairs}"
    )


def _resolve_h(inst: Instance, args, required: bool) -> int | None:
    h = args.h if args.h is not None else inst.h
    if h is None:
        if required:
            raise ValueError("h is required: set it in the file or pass --h")
        return None
    if h < 1:
        raise ValueError(f"h must be >= 1, got {h}")
    return h


def _max_scan(inst: Instance, args) -> int:
    if args.max_h is not None:
        if args.max_h < 1:
            raise ValueError(f"--max-h must be >= 1, got {args.max_h}")
        return args.max_h
    return 10 * inst.ci.degree_sum


def cmd_invariants(args):
    inst = load_instance(args.file)
    h = _resolve_h(inst, args, required=True)
    spec, r, d = inst.ci, inst.ambient.rank, inst.ambient.degree
    a, m = canonical_class(spec, r, d)
    results = {
        "h": h,
        "rank_fiber": rank_fiber(spec, r, h),
        "deg_pushforward": deg_pushforward(spec, r, d, h),
        "top_self_intersection": top_self_intersection(spec, r, d, h),
        "fiber_degree": fiber_degree(spec, r),
        "canonical_class": {"h_coeff": a, "fiber_coeff": m},
    }
    payload = {
        "command": "invariants",
        "input": instance_payload(inst),
        "results": results,
        "checks": {},
    }
    text = "\n".join(
        [
            _instance_line(inst),
            f"h = {h}",
            f"  h^0(F, O(h))            = {results['rank_fiber']}",
            f"  deg pushforward of O(h) = {results['deg_pushforward']}",
            f"  top self-intersection   = {results['top_self_intersection']}",
            f"  fibre degree            = {results['fiber_degree']}",
            f"  relative canonical class = {a}*H_X + {m}*F",
        ]
    )
    return 0, payload, text


def cmd_positivity(args):
    inst = load_instance(args.file)
    spec, r, d = inst.ci, inst.ambient.rank, inst.ambient.degree
    h = _resolve_h(inst, args, required=False)
    report = verify_theorem(spec, r, d)
    threshold = None
    threshold_note = ""
    try:
        threshold = asymptotic_threshold(spec, r, d, max_scan=_max_scan(inst, args))
    except DegenerateMarginError:
        threshold_note = "undefined: margin polynomial identically zero (boundary)"
    poly = margin_polynomial(spec, r, d)
    slope_ineq = slope_inequality_check(spec, r, d)

    if report.slope_condition_holds and report.slope_margin == 0:
        verdict = "f-positive (boundary)"
    elif report.slope_condition_holds:
        verdict = "f-positive"
    else:
        verdict = "not f-positive"

    at_h = None
    regime = None
    if h is not None:
        at_h = f_positive_at(spec, r, d, h)
        if h < spec.min_degree:
            regime = "theorem-covered (h below every k_i)"
        elif threshold is not None and h >= threshold:
            regime = "asymptotic (h at or above the certified threshold)"
        else:
            regime = "instance-specific (direct evaluation only)"

    results = {
        "verdict": verdict,
        "slope_condition": {
            "holds": report.slope_condition_holds,
            "margin": report.slope_margin,
        },
        "low_h": list(report.low_h_results),
        "asymptotic_positive": report.asymptotic_positive,
        "threshold": threshold,
        "threshold_note": threshold_note,
        "margin_polynomial": list(poly.coefficients),
        "slope_inequality": slope_ineq if slope_ineq is not None else "not applicable",
        "at_h": at_h,
        "at_h_regime": regime,
        "zero_dimensional_fiber": report.zero_dimensional_fiber,
    }
    payload = {
        "command": "positivity",
        "input": instance_payload(inst),
        "results": results,
        "checks": {"theorem_consistent": report.consistent},
    }

    lines = [
        _instance_line(inst),
        f"verdict: {verdict}",
        f"slope condition: {'holds' if report.slope_condition_holds else 'fails'}, "
        f"margin {rational_str(report.slope_margin)}",
    ]
    for pm in report.low_h_results:
        lines.append(
            f"  O_X({pm.h}) margin = {rational_str(pm.margin)} "
            f"({'positive' if pm.positive else 'negative'})"
        )
    lines.append(
        f"asymptotically f-positive: {'yes' if report.asymptotic_positive else 'no'}"
    )
    if threshold is not None:
        lines.append(f"certified constant-sign threshold: h >= {threshold}")
    else:
        lines.append(f"certified constant-sign threshold: {threshold_note}")
    if slope_ineq is None:
        lines.append("slope inequality (relative canonical): not applicable")
    else:
        lines.append(
            f"slope inequality (relative canonical): margin "
            f"{rational_str(slope_ineq.margin)} at h = {slope_ineq.h} "
            f"({'holds' if slope_ineq.positive else 'fails'})"
        )
    if at_h is not None:
        lines.append(
            f"O_X({h}) margin = {rational_str(at_h.margin)} "
            f"({'positive' if at_h.positive else 'negative'}; {regime})"
        )
    if report.zero_dimensional_fiber:
        lines.append("warning: zero-dimensional fibres (c = r - 1), formulas applied verbatim")
    lines.append(f"theorem cross-check: {'consistent' if report.consistent else 'INCONSISTENT'}")
    return (0 if report.consistent else 1), payload, "\n".join(lines)


def cmd_cones(args):
    inst = load_instance(args.file)
    if inst.hn is None:
        raise ValueError("the cones command needs Harder-Narasimhan data ('hn' in bundle)")
    spec, ambient, hn = inst.ci, inst.ambient, inst.hn
    r, d, c = ambient.rank, ambient.degree, spec.codim
    chain = cone_chain_report(hn, c)
    x_class = class_of_ci(spec, ambient)
    members = {
        "nef": in_cone(x_class, nef_cone(hn, c)),
        "b": in_cone(x_class, b_cone(r, d, c)),
        "pseff": in_cone(x_class, pseff_cone(hn, c)),
    }
    equivalence = membership_equivalence_check(spec, r, d)
    results = {
        "codim": c,
        "virtual_slopes": list(virtual_slopes(hn)),
        "nu": {"nef": chain.nu_nef, "b": chain.nu_b, "pseff": chain.nu_pseff},
        "chain": {
            "nef_strict": chain.nef_strict,
            "pseff_strict": chain.pseff_strict,
            "semistable": chain.semistable,
        },
        "class": {"h_coeff": x_class.h_coeff, "sigma_coeff": x_class.sigma_coeff},
        "membership": members,
        "slope_condition_equivalent": equivalence,
    }
    payload = {
        "command": "cones",
        "input": instance_payload(inst),
        "results": results,
        "checks": {"chain_ordered": True, "membership_equivalence": True},
    }
    slopes = ", ".join(rational_str(s) for s in virtual_slopes(hn))
    lines = [
        _instance_line(inst),
        f"virtual slopes (largest first): {slopes}",
        f"nu_nef = {rational_str(chain.nu_nef)}, nu_B = {rational_str(chain.nu_b)}, "
        f"nu_pseff = {rational_str(chain.nu_pseff)}",
    ]
    if chain.semistable:
        lines.append("semistable bundle: the three cones coincide")
    else:
        lines.append(
            f"chain strictness: nef < B {'yes' if chain.nef_strict else 'no'}, "
            f"B < pseff {'yes' if chain.pseff_strict else 'no'}"
        )
    lines.append(
        f"[X] = {rational_str(x_class.h_coeff)}*H^{c} + "
        f"{rational_str(x_class.sigma_coeff)}*H^{c - 1}*S"
    )
    lines.append(
        "membership: "
        + ", ".join(f"{name} {'yes' if flag else 'no'}" for name, flag in members.items())
    )
    lines.append(
        f"slope-condition equivalence verdict: {'holds' if equivalence else 'fails'}"
    )
    return 0, payload, "\n".join(lines)


def cmd_stability(args):
    payload_in = _load_json(args.file)
    if isinstance(payload_in, dict) and "filtration" in payload_in:
        return _stability_contact(payload_in)
    return _stability_instance(payload_in, args)


def _stability_contact(payload_in):
    filtration, first, second = parse_contact_problem(payload_in)
    try:
        intersection = bezout_contact(first, second, filtration)
    except ValueError:
        raise
    report = propagation_check(first, second, filtration)
    results = {
        "bound": report.bound,
        "first": {"datum": first, "verdict": report.first_verdict},
        "second": {"datum": second, "verdict": report.second_verdict},
        "intersection": {
            "datum": intersection,
            "verdict": report.intersection_verdict,
        },
        "chain_terms": {
            "first": report.term_first,
            "second": report.term_second,
            "weights": report.term_weights,
        },
        "applicable": report.applicable,
        "expect_stable": report.expect_stable,
    }
    payload = {
        "command": "stability",
        "input": payload_in,
        "results": results,
        "checks": {"chain_identity": True, "propagation": report.applicable},
    }
    lines = [
        f"weight bound: {rational_str(report.bound)}",
        f"first:  verdict {report.first_verdict.value}",
        f"second: verdict {report.second_verdict.value}",
        f"intersection: dim {intersection.dim}, deg {intersection.deg}, "
        f"contact {rational_str(intersection.contact)} "
        f"-> verdict {report.intersection_verdict.value}",
    ]
    if report.applicable:
        lines.append(
            "propagation: non-unstable inputs gave a "
            f"{report.intersection_verdict.value} intersection"
        )
    else:
        lines.append("propagation: not applicable (an input is unstable)")
    return 0, payload, "\n".join(lines)


def _stability_instance(payload_in, args):
    inst = parse_instance(payload_in)
    spec, r, d = inst.ci, inst.ambient.rank, inst.ambient.degree
    report = instability_report(spec, r, d, max_scan=_max_scan(inst, args))
    results = {
        "slope_condition": {"holds": report.slope_holds, "margin": report.slope_margin},
        "applies": report.applies,
        "unstable_low_hs": list(report.unstable_low_hs),
        "low_margins": list(report.low_margins),
        "unstable_from": report.unstable_from,
    }
    payload = {
        "command": "stability",
        "input": instance_payload(inst),
        "results": results,
        "checks": {},
    }
    lines = [
        _instance_line(inst),
        f"slope condition: {'holds' if report.slope_holds else 'fails'}, "
        f"margin {rational_str(report.slope_margin)}",
    ]
    if report.applies:
        low = ", ".join(str(h) for h in report.unstable_low_hs)
        lines.append(f"fibres are Chow-unstable in O(h) for h in {{{low}}}")
        lines.append(f"fibres are Chow-unstable in O(h) for every h >= {report.unstable_from}")
    else:
        lines.append("no instability conclusion")
    return 0, payload, "\n".join(lines)


def cmd_verify(args):
    report = run_sweep(args.seed, args.count)
    results = {
        "ok": report.ok,
        "checks": report.checks,
        "failures": report.failures,
    }
    payload = {
        "command": "verify",
        "input": {"seed": args.seed, "count": args.count},
        "results": results,
        "checks": report.checks,
        "seed": args.seed,
    }
    lines = [f"seed {report.seed}, {report.count} instances"]
    for name in sorted(report.checks):
        lines.append(f"  {name}: {report.checks[name]}/{report.count} ok")
    if report.ok:
        lines.append("all checks passed")
    else:
        lines.append(f"{len(report.failures)} FAILURES")
        for failure in report.failures:
            lines.append(f"  {json.dumps(failure, sort_keys=True)}")
    return (0 if report.ok else 1), payload, "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fpos",
        description=(
            "Exact slope-positivity, cone and Chow-stability arithmetic for "
            "relative complete intersections in projective bundles over a curve."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text, *, with_file=True, with_h=False, with_max_h=False):
        p = sub.add_parser(name, help=help_text)
        if with_file:
            p.add_argument("file", help="instance file (JSON)")
        if with_h:
            p.add_argument("--h", type=int, default=None, help="override the file's h")
        if with_max_h:
            p.add_argument(
                "--max-h",
                type=int,
                default=None,
                help="cap for threshold refinement scans (default 10 * sum k_i)",
            )
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(handler=handler)
        return p

    add("invariants", cmd_invariants, "rank, degrees and intersection numbers at h", with_h=True)
    add("positivity", cmd_positivity, "full positivity report", with_h=True, with_max_h=True)
    add("cones", cmd_cones, "cone chain and membership of the class of X")
    p_stab = add(
        "stability",
        cmd_stability,
        "instability report for an instance, or contact arithmetic for a contact file",
        with_max_h=True,
    )
    p_stab.add_argument("--h", type=int, default=None, help=argparse.SUPPRESS)
    p_verify = sub.add_parser("verify", help="seeded randomized cross-checking sweep")
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--count", type=int, default=100)
    p_verify.add_argument("--json", action="store_true", help="machine-readable output")
    p_verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, payload, text = args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(to_jsonable(payload), indent=2, sort_keys=True))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
