"""The theorem harness: every statement the library is built around
becomes a checkable predicate over a concrete graph instance, and sweeps
aggregate the evidence.

Checks are hypothesis-gated: an instance that fails a statement's
hypotheses yields verdict "skipped" (with the unmet hypothesis named),
never a vacuous "pass".  A "fail" is a counterexample to a published
theorem and carries both measured sides.  Capacity overruns skip.

Regularities computed here are cross-validated: whenever both Betti
engines are within caps, their tables must agree entrywise (a mismatch
raises EngineDisagreement rather than producing a verdict).
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import monomials as mon
from .betti import DEFAULT_CAPS, CapacityError, regularity
from .evenconn import colon_graph, colon_ideal_by_algebra
from .generators import FamilySpec
from .graphs import (
    INFINITE,
    canonical_key,
    induced_matching_number,
    is_very_well_covered,
    odd_girth,
)

VERSION = "1.0.0"

CHECK_NAMES = (
    "katzman",
    "bht",
    "main_theorem",
    "main_theorem_hunter",
    "colon_squarefree_oddgirth",
    "lemma_colon_iteration",
    "vwc_preservation",
    "banerjee",
)

VERDICTS = ("pass", "fail", "skipped", "observation")


@dataclass
class CheckResult:
    check: str
    instance: str
    verdict: str
    values: dict = field(default_factory=dict)
    elapsed: float | None = None

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.verdict == "skipped" and "reason" not in self.values:
            raise ValueError("skipped verdicts must name the unmet hypothesis")

    def to_json_obj(self, timings=False):
        obj = {
            "check": self.check,
            "instance": self.instance,
            "verdict": self.verdict,
            "values": self.values,
        }
        if timings and self.elapsed is not None:
            obj["elapsed"] = round(self.elapsed, 6)
        return obj


def graph_code(G):
    """A label-independent instance identifier for a graph."""
    n, edges = canonical_key(G)
    return f"{n}:" + ",".join(f"{u}-{v}" for u, v in sorted(edges))


def _instance_id(G, **params):
    parts = [f"g={graph_code(G)}"]
    for key in sorted(params):
        val = params[key]
        if key == "m":
            val = ";".join(f"{u}-{v}" for u, v in val)
        parts.append(f"{key}={val}")
    return " ".join(parts)


def _og_str(G):
    og = odd_girth(G)
    return "inf" if og == INFINITE else og


def derive_k(G, s):
    """The strongest valid k for a graph: floor((odd_girth - 1)/2), with
    bipartite graphs capped at s + 2 (the least k admitting power s)."""
    og = odd_girth(G)
    if og == INFINITE:
        return s + 2
    return (og - 1) // 2


def _reg(I, caps):
    return regularity(I, engine="auto", caps=caps, cross_validate=True)


# ---------------------------------------------------------------------------
# Individual checks.
# ---------------------------------------------------------------------------


def check_katzman(G, caps=DEFAULT_CAPS):
    """reg(I(G)) >= nu(G) + 1 on any graph with an edge."""
    inst = _instance_id(G)
    if not G.edges:
        return CheckResult("katzman", inst, "skipped", {"reason": "no edges"})
    nu = induced_matching_number(G)
    try:
        reg = _reg(mon.edge_ideal(G), caps)
    except CapacityError as exc:
        return CheckResult("katzman", inst, "skipped", {"reason": str(exc)})
    verdict = "pass" if reg >= nu + 1 else "fail"
    return CheckResult("katzman", inst, verdict, {"reg": reg, "nu": nu})


def check_bht_lower_bound(G, s, caps=DEFAULT_CAPS):
    """reg(I(G)^s) >= 2s + nu(G) - 1."""
    inst = _instance_id(G, s=s)
    if not G.edges:
        return CheckResult("bht", inst, "skipped", {"reason": "no edges"})
    if s < 1:
        raise ValueError("s must be positive")
    nu = induced_matching_number(G)
    try:
        reg = _reg(mon.power(mon.edge_ideal(G), s), caps)
    except CapacityError as exc:
        return CheckResult("bht", inst, "skipped", {"reason": str(exc)})
    bound = 2 * s + nu - 1
    verdict = "pass" if reg >= bound else "fail"
    return CheckResult("bht", inst, verdict, {"reg": reg, "bound": bound})


def check_main_theorem(G, k, s, caps=DEFAULT_CAPS):
    """reg(I(G)^s) == 2s + nu(G) - 1 for very well-covered G with
    odd-girth >= 2k+1, k >= 3, 1 <= s <= k-2."""
    inst = _instance_id(G, k=k, s=s)
    name = "main_theorem"
    if k < 3:
        return CheckResult(name, inst, "skipped", {"reason": "k < 3"})
    if not 1 <= s <= k - 2:
        return CheckResult(name, inst, "skipped", {"reason": "s outside 1..k-2"})
    if not is_very_well_covered(G):
        return CheckResult(
            name, inst, "skipped", {"reason": "not very well-covered"}
        )
    if odd_girth(G) < 2 * k + 1:
        return CheckResult(
            name, inst, "skipped",
            {"reason": f"odd-girth {_og_str(G)} < {2 * k + 1}"},
        )
    nu = induced_matching_number(G)
    try:
        reg = _reg(mon.power(mon.edge_ideal(G), s), caps)
    except CapacityError as exc:
        return CheckResult(name, inst, "skipped", {"reason": str(exc)})
    expected = 2 * s + nu - 1
    verdict = "pass" if reg == expected else "fail"
    return CheckResult(name, inst, verdict, {"reg": reg, "expected": expected})


def check_main_theorem_hunter(G, s, caps=DEFAULT_CAPS):
    """Hypothesis-relaxed observation: does the equality hold for this
    very well-covered graph and power anyway?  Never a failure: whether
    the equality extends beyond s <= k-2 is an open question."""
    inst = _instance_id(G, s=s)
    name = "main_theorem_hunter"
    if not is_very_well_covered(G):
        return CheckResult(
            name, inst, "skipped", {"reason": "not very well-covered"}
        )
    nu = induced_matching_number(G)
    try:
        reg = _reg(mon.power(mon.edge_ideal(G), s), caps)
    except CapacityError as exc:
        return CheckResult(name, inst, "skipped", {"reason": str(exc)})
    expected = 2 * s + nu - 1
    return CheckResult(
        name, inst, "observation",
        {"reg": reg, "expected": expected, "equal": reg == expected},
    )


def check_colon_squarefree_and_oddgirth(G, m, k):
    """On odd-girth >= 2k+1 and s = |m| <= k-1: the colon ideal
    (I^{s+1} : m) is squarefree and its graph has odd-girth
    >= 2(k-s)+1."""
    s = len(m)
    inst = _instance_id(G, m=m, k=k)
    name = "colon_squarefree_oddgirth"
    if odd_girth(G) < 2 * k + 1:
        return CheckResult(
            name, inst, "skipped",
            {"reason": f"odd-girth {_og_str(G)} < {2 * k + 1}"},
        )
    if s > k - 1:
        return CheckResult(name, inst, "skipped", {"reason": "s > k-1"})
    cg = colon_graph(G, m)
    og = odd_girth(cg.edge_graph())
    bound = 2 * (k - s) + 1
    ok = cg.is_squarefree and og >= bound
    return CheckResult(
        name, inst, "pass" if ok else "fail",
        {
            "squarefree": cg.is_squarefree,
            "colon_odd_girth": "inf" if og == INFINITE else og,
            "bound": bound,
        },
    )


def check_lemma_colon_iteration(G, m, i):
    """(I^{s+1} : e_1...e_s) == ((I^2 : e_i)^s : prod_{j != i} e_j),
    both sides by plain ideal arithmetic, under odd-girth >= 2s+3
    (i.e. s <= k-1 for some k >= 2)."""
    s = len(m)
    inst = _instance_id(G, m=m, i=i)
    name = "lemma_colon_iteration"
    if odd_girth(G) < 2 * s + 3:
        return CheckResult(
            name, inst, "skipped",
            {"reason": f"odd-girth {_og_str(G)} < {2 * s + 3}"},
        )
    I = mon.edge_ideal(G)
    lhs = mon.colon_by_monomial(
        mon.power(I, s + 1), mon.product_of_edges(G.n, m)
    )
    e_i = m[i]
    base = mon.colon_by_monomial(
        mon.power(I, 2), mon.product_of_edges(G.n, [e_i])
    )
    rest = [e for j, e in enumerate(m) if j != i]
    rhs = mon.power(base, s)
    if rest:
        rhs = mon.colon_by_monomial(rhs, mon.product_of_edges(G.n, rest))
    ok = mon.equals(lhs, rhs)
    return CheckResult(
        name, inst, "pass" if ok else "fail",
        {"lhs_gens": len(lhs.gens), "rhs_gens": len(rhs.gens)},
    )


def check_vwc_preservation(G, m, k):
    """For very well-covered G with odd-girth >= 2k+1 (k >= 3) and
    s = |m| <= k-2: the colon graph is very well-covered, and its induced
    matching number does not grow."""
    s = len(m)
    inst = _instance_id(G, m=m, k=k)
    name = "vwc_preservation"
    if k < 3:
        return CheckResult(name, inst, "skipped", {"reason": "k < 3"})
    if not is_very_well_covered(G):
        return CheckResult(
            name, inst, "skipped", {"reason": "not very well-covered"}
        )
    if odd_girth(G) < 2 * k + 1:
        return CheckResult(
            name, inst, "skipped",
            {"reason": f"odd-girth {_og_str(G)} < {2 * k + 1}"},
        )
    if s > k - 2:
        return CheckResult(name, inst, "skipped", {"reason": "s > k-2"})
    cg = colon_graph(G, m)
    Gp = cg.edge_graph()
    vwc = cg.is_squarefree and is_very_well_covered(Gp)
    nu, nu_p = induced_matching_number(G), induced_matching_number(Gp)
    ok = vwc and nu_p <= nu
    return CheckResult(
        name, inst, "pass" if ok else "fail",
        {"colon_vwc": vwc, "nu": nu, "nu_colon": nu_p},
    )


def check_banerjee_recursion(G, s, caps=DEFAULT_CAPS):
    """reg(I^{s+1}) <= max( max_l reg((I^{s+1}:m_l)) + 2s, reg(I^s) )
    over the minimal generators m_l of I^s."""
    inst = _instance_id(G, s=s)
    name = "banerjee"
    if not G.edges:
        return CheckResult(name, inst, "skipped", {"reason": "no edges"})
    I = mon.edge_ideal(G)
    Is = mon.power(I, s)
    Is1 = mon.power(I, s + 1)
    try:
        lhs = _reg(Is1, caps)
        rhs = _reg(Is, caps)
        for m_l in Is.sorted_gens():
            colon = mon.colon_by_monomial(Is1, m_l)
            rhs = max(rhs, _reg(colon, caps) + 2 * s)
    except CapacityError as exc:
        return CheckResult(name, inst, "skipped", {"reason": str(exc)})
    verdict = "pass" if lhs <= rhs else "fail"
    return CheckResult(name, inst, verdict, {"lhs": lhs, "rhs": rhs})


# ---------------------------------------------------------------------------
# Sweeps.
# ---------------------------------------------------------------------------


@dataclass
class SweepParams:
    s_values: tuple = (1, 2)
    seed: int = 0
    multiset_sample: int = 50
    multiset_exhaustive_edge_limit: int = 10
    jobs: int = 1
    timings: bool = False


def _edge_multisets(G, s, params, instance_index):
    """Deterministic multiset quantification: exhaustive for s <= 2 on
    small edge sets, otherwise a seeded sample."""
    edges = list(G.sorted_edges)
    if s <= 2 and len(edges) <= params.multiset_exhaustive_edge_limit:
        return list(itertools.combinations_with_replacement(edges, s))
    rng = random.Random(f"{params.seed}:{instance_index}:{s}")
    seen = set()
    for _ in range(params.multiset_sample * 4):
        m = tuple(sorted(rng.choice(edges) for _ in range(s)))
        seen.add(m)
        if len(seen) >= params.multiset_sample:
            break
    return sorted(seen)


def _run_checks_on_instance(args):
    G, idx, checks, params, caps = args
    results = []

    def timed(fn, *a, **kw):
        t0 = time.perf_counter()
        res = fn(*a, **kw)
        res.elapsed = time.perf_counter() - t0
        results.append(res)

    for check in checks:
        if check == "katzman":
            timed(check_katzman, G, caps)
        elif check == "bht":
            for s in params.s_values:
                timed(check_bht_lower_bound, G, s, caps)
        elif check == "main_theorem":
            for s in params.s_values:
                timed(check_main_theorem, G, derive_k(G, s), s, caps)
        elif check == "main_theorem_hunter":
            for s in params.s_values:
                timed(check_main_theorem_hunter, G, s, caps)
        elif check == "colon_squarefree_oddgirth":
            for s in params.s_values:
                k = derive_k(G, s + 1)
                for m in _edge_multisets(G, s, params, idx):
                    timed(check_colon_squarefree_and_oddgirth, G, m, k)
        elif check == "lemma_colon_iteration":
            for s in params.s_values:
                for m in _edge_multisets(G, s, params, idx):
                    for i in sorted(set(m.index(e) for e in m)):
                        timed(check_lemma_colon_iteration, G, m, i)
        elif check == "vwc_preservation":
            for s in params.s_values:
                k = derive_k(G, s + 2)
                for m in _edge_multisets(G, s, params, idx):
                    timed(check_vwc_preservation, G, m, k)
        elif check == "banerjee":
            for s in params.s_values:
                timed(check_banerjee_recursion, G, s, caps)
        else:
            raise ValueError(f"unknown check {check!r}")
    return results


@dataclass
class SweepReport:
    spec: FamilySpec
    checks: tuple
    params: SweepParams
    results: list

    @property
    def summary(self):
        out = {}
        for res in self.results:
            tally = out.setdefault(
                res.check,
                {"pass": 0, "fail": 0, "skipped": 0, "observation": 0},
            )
            tally[res.verdict] += 1
        return dict(sorted(out.items()))

    @property
    def fail_count(self):
        return sum(1 for r in self.results if r.verdict == "fail")

    def failures(self):
        return [r for r in self.results if r.verdict == "fail"]

    def to_json_obj(self):
        return {
            "spec": self.spec.to_json_obj(),
            "checks": list(self.checks),
            "field": "QQ",
            "version": VERSION,
            "seed": self.params.seed,
            "s_values": list(self.params.s_values),
            "results": [
                r.to_json_obj(timings=self.params.timings)
                for r in self.results
            ],
            "summary": self.summary,
        }

    def to_json(self):
        return json.dumps(self.to_json_obj(), sort_keys=True, indent=2) + "\n"

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["check", "instance", "verdict", "values"])
        for r in self.results:
            writer.writerow(
                [r.check, r.instance, r.verdict,
                 json.dumps(r.values, sort_keys=True)]
            )
        return buf.getvalue()


def run_sweep(spec, checks, params=None, caps=DEFAULT_CAPS):
    """Apply each named check to every instance of the family.  Failures
    are collected, never raised; the report is deterministic for a fixed
    spec, checks, params, and version."""
    params = params or SweepParams()
    for check in checks:
        if check not in CHECK_NAMES:
            raise ValueError(f"unknown check {check!r}")
    instances = spec.instances()
    tasks = [(G, i, tuple(checks), params, caps) for i, G in enumerate(instances)]
    if params.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=params.jobs) as pool:
            chunks = list(pool.map(_run_checks_on_instance, tasks))
    else:
        chunks = [_run_checks_on_instance(t) for t in tasks]
    results = [r for chunk in chunks for r in chunk]
    results.sort(key=lambda r: (r.check, r.instance))
    return SweepReport(spec, tuple(checks), params, results)
