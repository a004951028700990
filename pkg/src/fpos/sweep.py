"""Randomized cross-checking sweep over seeded instances.

Every instance runs the full battery: the four-way positivity equivalence,
cone membership against the slope condition, twist invariance of the margin,
the closed-form intersection numbers against reduction in the ring, the
rank formula against the Hilbert-series oracle, pushforward integrality, and
the cone chain for the instance's filtration data.  All checks are exact;
a single disagreement anywhere is a bug and fails the sweep.

Instances are generated sequentially from one seeded stream, so a seed fully
determines the report.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .chowring import class_of_ci, degree, fiber_class, hyperplane_class, multiply
from .cones import cone_chain_report, membership_equivalence_check, virtual_slopes
from .errors import InconsistencyError
from .instances import Instance, instance_payload, random_instance
from .positivity import (
    f_positive_at,
    fiber_degree,
    margin_twisted,
    top_self_intersection,
    verify_theorem,
)
from .pushforward import deg_pushforward, hilbert_rank_oracle, rank_fiber

TWIST_SAMPLES = (-10, -3, 0, 5, 10)


@dataclass
class SweepReport:
    seed: int
    count: int
    checks: dict[str, int] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_instance(instance: Instance) -> list[str]:
    """Run the whole battery on one instance; returns the failing check names."""
    spec, ambient = instance.ci, instance.ambient
    r, d, c = ambient.rank, ambient.degree, instance.ci.codim
    failures = []

    def run(name, predicate):
        try:
            ok = predicate()
        except InconsistencyError:
            ok = False
        if not ok:
            failures.append(name)

    run("theorem_equivalence", lambda: verify_theorem(spec, r, d).consistent)
    run("membership_equivalence", lambda: membership_equivalence_check(spec, r, d) in (True, False))

    def twist_invariance():
        for h in (1, spec.degree_sum + 1):
            base = f_positive_at(spec, r, d, h).margin
            if any(margin_twisted(spec, r, d, h, m) != base for m in TWIST_SAMPLES):
                return False
        return True

    run("twist_invariance", twist_invariance)

    def top_intersection_oracle():
        x_class = class_of_ci(spec, ambient)
        hyper = hyperplane_class(ambient)
        for h in (1, 2):
            cycle = (h * hyper) ** (r - c) * x_class
            if degree(cycle) != top_self_intersection(spec, r, d, h):
                return False
        return True

    run("top_intersection_oracle", top_intersection_oracle)

    def fiber_degree_oracle():
        cycle = multiply(
            hyperplane_class(ambient) ** (r - c - 1) * fiber_class(ambient),
            class_of_ci(spec, ambient),
        )
        return degree(cycle) == fiber_degree(spec, r)

    run("fiber_degree_oracle", fiber_degree_oracle)

    def rank_oracle():
        return all(
            rank_fiber(spec, r, h) == hilbert_rank_oracle(spec, r, h)
            for h in range(0, spec.degree_sum + r + 1)
        )

    run("rank_oracle", rank_oracle)

    def pushforward_integrality():
        # deg_pushforward raises InconsistencyError on a non-integer result
        for h in range(1, spec.degree_sum + r + 1):
            deg_pushforward(spec, r, d, h)
        return True

    run("pushforward_integrality", pushforward_integrality)

    def cone_chain():
        hn = instance.hn
        if hn is None:
            return True
        if sum(virtual_slopes(hn)) != hn.degree:
            return False
        for cc in range(1, r):
            report = cone_chain_report(hn, cc)
            if (report.nef_strict and report.pseff_strict) == hn.is_semistable:
                return False
        return True

    run("cone_chain", cone_chain)
    return failures


CHECK_NAMES = (
    "theorem_equivalence",
    "membership_equivalence",
    "twist_invariance",
    "top_intersection_oracle",
    "fiber_degree_oracle",
    "rank_oracle",
    "pushforward_integrality",
    "cone_chain",
)


def run_sweep(seed: int, count: int) -> SweepReport:
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    rng = random.Random(seed)
    report = SweepReport(seed=seed, count=count, checks={name: 0 for name in CHECK_NAMES})
    for index in range(count):
        instance = random_instance(rng)
        failed = check_instance(instance)
        for name in CHECK_NAMES:
            if name not in failed:
                report.checks[name] += 1
        for name in failed:
            report.failures.append(
                {"index": index, "check": name, "instance": instance_payload(instance)}
            )
    return report
