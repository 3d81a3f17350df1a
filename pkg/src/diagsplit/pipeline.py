"""Verification runs for the main theorem and the graded suite, and report output."""

from __future__ import annotations

import json
import os
import sys
import time
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import diagonal as dg
from . import graded as gr
from . import kempf as kp
from .algebra import PolyRing, X, Y, is_prime
from .rnc import has_rnc
from .splitting import (
    DiagonalPairing,
    NotASplitting,
    Principal,
    SplittingOperator,
    check_compatibility,
    is_maximally_split_diagonal,
    is_splitting,
    maximality_search,
    section_vanishing_order,
)

STATUSES = ("pass", "fail", "skipped", "probabilistic")
CHECK_GROUPS = ("all", "rnc", "split", "kempf", "delta")

# principal-ideal checks enumerate p^N residues per factor
PRINCIPAL_GUARD = 2**16


@dataclass
class CheckResult:
    name: str
    status: str
    witness: str | None = None
    duration_ms: int = 0
    detail: str | None = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    def to_dict(self) -> dict:
        out = {"name": self.name, "status": self.status, "witness": self.witness, "duration_ms": self.duration_ms}
        if self.detail is not None:
            out["detail"] = self.detail
        return out


@dataclass
class VerificationReport:
    kind: str
    n: int | None
    p: int | None
    checks: list[CheckResult] = field(default_factory=list)
    data: dict[str, Any] = field(default_factory=dict)
    parameters: dict[str, Any] = field(default_factory=dict)

    @property
    def overall(self) -> str:
        return "fail" if any(c.status == "fail" for c in self.checks) else "pass"

    @property
    def passed(self) -> bool:
        return self.overall == "pass"

    def counts(self) -> dict[str, int]:
        return {s: sum(1 for c in self.checks if c.status == s) for s in STATUSES}

    def get(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "p": self.p,
            "overall": self.overall,
            "counts": self.counts(),
            "checks": [c.to_dict() for c in self.checks],
            "data": self.data,
            "parameters": self.parameters,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        head = f"# {self.kind}"
        if self.n is not None:
            head += f" n={self.n}"
        if self.p is not None:
            head += f" p={self.p}"
        lines = [head, "status\tname\tduration_ms\twitness"]
        for c in self.checks:
            lines.append(f"{c.status}\t{c.name}\t{c.duration_ms}\t{c.witness or c.detail or ''}")
        counts = ", ".join(f"{k}={v}" for k, v in self.counts().items())
        lines.append(f"# overall: {self.overall} ({counts})")
        return "\n".join(lines) + "\n"


# a check body returns (ok, witness) or a CheckResult-like (status, witness, detail)
Outcome = tuple


@dataclass
class _Task:
    name: str
    body: Callable[[], Outcome] | None
    skip_reason: str | None = None


def _run(task: _Task, timings: bool) -> CheckResult:
    if task.body is None:
        return CheckResult(task.name, "skipped", detail=task.skip_reason)
    t0 = time.perf_counter()
    try:
        out = task.body()
    except Exception as exc:  # a crashing check is a failing check
        out = ("fail", None, f"{type(exc).__name__}: {exc}")
    ms = int(round((time.perf_counter() - t0) * 1000)) if timings else 0
    if isinstance(out[0], bool):
        status = "pass" if out[0] else "fail"
        witness = out[1] if len(out) > 1 else None
        detail = out[2] if len(out) > 2 else None
    else:
        status, witness, detail = (tuple(out) + (None, None))[:3]
    return CheckResult(task.name, status, witness, ms, detail)


def _execute(tasks: list[_Task], workers: int | None, timings: bool) -> list[CheckResult]:
    workers = workers or os.cpu_count() or 1
    if workers == 1 or len(tasks) <= 1:
        results = [_run(t, timings) for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda t: _run(t, timings), tasks))
    return sorted(results, key=lambda c: c.name)


def within_resource_guard(n: int, p: int) -> bool:
    return (n <= 3 and p <= 7) or (n == 4 and p <= 3) or (n == 5 and p == 2)


def _groups(checks: str | list[str]) -> set[str]:
    sel = {checks} if isinstance(checks, str) else set(checks)
    bad = sel - set(CHECK_GROUPS)
    if bad:
        raise ValueError(f"unknown check group(s): {', '.join(sorted(bad))}")
    return set(CHECK_GROUPS[1:]) if "all" in sel else sel


def _control_xy(p: int) -> tuple[SplittingOperator, DiagonalPairing]:
    ring = PolyRing(p, [X(2, 1), Y(2, 1)])
    x, y = ring.gens()
    return SplittingOperator((x * y) ** (p - 1)), DiagonalPairing(ring)


def _negative_maximality(op: SplittingOperator, pairing: DiagonalPairing, d: int) -> Outcome:
    """A control passes when both maximality criteria reject it."""
    if not is_splitting(op):
        return False, None, "control section is not a splitting"
    by_order = is_maximally_split_diagonal(op, pairing, d)
    search = maximality_search(op, pairing, d, m_max=2, deg_bound=4 * op.p)
    detail = f"z-order {section_vanishing_order(op, pairing)} < d(p-1) = {d * (op.p - 1)}"
    return (not by_order and not search.holds), search.witness, detail


def verify_theorem(n: int, p: int, checks: str | list[str] = "all", *, seed: int = 0, force: bool = False,
                   all_kempf: bool = False, workers: int | None = None, timings: bool = True) -> VerificationReport:
    """Every finite claim about f = prod det L_i for one (n, p), as a report."""
    if not isinstance(n, int) or n < 2:
        raise ValueError("n must be an integer >= 2")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    groups = _groups(checks)
    params = {"checks": sorted(groups), "seed": seed, "force": force, "all_kempf": all_kempf}
    report = VerificationReport("theorem", n, p, parameters=params)
    guarded = not within_resource_guard(n, p) and not force
    if guarded:
        report.checks.append(CheckResult(
            "00-resource-guard", "skipped",
            detail=f"(n={n}, p={p}) exceeds the default limits; rerun with --force"))
        return report

    t0 = time.perf_counter()
    data = dg.diagonal_data(n, p)
    factors = dg.f_factors(n, p)
    op = SplittingOperator.from_rnc(factors)
    pairing = dg.chart_pairing(n, p)
    d = len(pairing)
    N = op.ring.nvars
    report.data.update({
        "V": [[v.short for v in vs] for vs in data.V],
        "mu": list(data.mu),
        "ordering": [v.short for v in data.ordering()],
        "factor_terms": [len(f) for f in factors],
        "section_terms": len(op.section),
        "setup_ms": int(round((time.perf_counter() - t0) * 1000)) if timings else 0,
    })
    tasks: list[_Task] = []
    last = 2 * n - 1

    if "delta" in groups:
        tasks.append(_Task("01-diagonal-data", lambda: (True, None, f"sum mu = {sum(data.mu)}")))
        delta_cap = last if (force or n <= 4) else min(last, 5)
        for i in range(1, last + 1):
            name = f"02-delta-identity[i={i:02d}]"
            if i > delta_cap:
                tasks.append(_Task(name, None, f"i > {delta_cap} skipped at n={n}; use --force"))
                continue
            tasks.append(_Task(name, lambda i=i: _delta(n, i, p)))
        for i in range(1, last + 1):
            tasks.append(_Task(f"03-congruence[i={i:02d}]",
                               lambda i=i: (dg.check_congruence(n, i, p), str(data.m[i - 1]))))
        for i in range(1, last + 1):
            tasks.append(_Task(f"04-mu-bound[i={i:02d}]", lambda i=i: _mu_bound(data, pairing, i)))

    if "rnc" in groups:
        def rnc():
            f = op.section if p == 2 else dg.f_section(n, p)
            return has_rnc(f, data.ordering()), None

        tasks.append(_Task("05-rnc", rnc))
        tasks.append(_Task("06-diagonal-order", lambda: _order(op, pairing, n)))

    if "split" in groups:
        tasks.append(_Task("07-phi-one", lambda: (is_splitting(op), str(op.apply(op.ring.one)))))
        tasks.append(_Task("08-maximal-z-order", lambda: (is_maximally_split_diagonal(op, pairing, d), None,
                                                          f"z-order {section_vanishing_order(op, pairing)}")))

        def operator_check():
            res = maximality_search(op, pairing, d, m_max=2)
            return res.holds, res.witness, f"{res.tested} monomials tested"

        tasks.append(_Task("09-maximal-operator[m_max=2]", operator_check))
        principal_ok = p**N <= PRINCIPAL_GUARD or force
        for k, h in enumerate(factors, start=1):
            name = f"10-factor-ideal[{k:02d}]"
            if not principal_ok:
                tasks.append(_Task(name, None, f"p^N = {p}^{N} exceeds {PRINCIPAL_GUARD}; use --force"))
                continue
            tasks.append(_Task(name, lambda h=h: _principal(op, h, seed)))
        naive = SplittingOperator.power_of(dg.naive_diagonal_product(n, p), p - 1)
        tasks.append(_Task("11-control-naive-product", lambda: _negative_maximality(naive, pairing, d)))
        ctl, ctl_pairing = _control_xy(p)
        tasks.append(_Task("12-control-xy", lambda: _negative_maximality(ctl, ctl_pairing, 1)))

    if "kempf" in groups:
        if n <= 4 or all_kempf:
            vectors = [a for a in kp.kempf_vectors(n) if any(a)]
            report.data["kempf_scope"] = "all"
        else:
            vectors = [r.vector for r in kp.rectangular_vectors(n)]
            report.data["kempf_scope"] = "rectangular"
        report.data["kempf_count"] = len(vectors)
        for a in vectors:
            tasks.append(_Task(f"13-kempf[{kp.format_kempf(a)}]",
                               lambda a=a: (kp.check_kempf_compat(n, p, a, op), None)))

    report.checks = _execute(tasks, workers, timings)
    return report


def _delta(n: int, i: int, p: int) -> Outcome:
    ok, sign = dg.check_delta_identity(n, i, p)
    return ok, None, f"sign {sign:+d}" if ok else None


def _mu_bound(data: dg.DiagonalData, pairing: DiagonalPairing, i: int) -> Outcome:
    det = data.L[i - 1].determinant()
    order = pairing.z_order(pairing.shift(det))
    pairs = dg.identical_column_pairs(data.n, i)
    mu = data.mu[i - 1]
    return order >= mu and pairs == mu, None, f"order {order}, identical pairs {pairs}, mu {mu}"


def _order(op: SplittingOperator, pairing: DiagonalPairing, n: int) -> Outcome:
    # z-order is additive over products, so the factors give the order of f
    target = n * (n - 1) // 2
    f_order = sum(pairing.z_order(pairing.shift(b)) for b, _ in op.factors)
    return f_order == target, None, f"order {f_order}, expected {target}"


def _principal(op: SplittingOperator, h, seed: int) -> Outcome:
    v = check_compatibility(op, Principal(h), seed=seed)
    if not v.holds:
        return False, v.witness
    return ("pass" if v.exact else "probabilistic"), None, None


def verify_graded(n_max: int, p_list: list[int], d_max: int | None = None, *, workers: int | None = None,
                  timings: bool = True) -> VerificationReport:
    """The l_j grid with the dimension identity, plus Rees checks on the (3, 2) section."""
    for p in p_list:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
    params = {"n_max": n_max, "primes": list(p_list), "d_max": d_max}
    report = VerificationReport("graded", n_max, None, parameters=params)
    if not p_list:
        return report
    tasks: list[_Task] = []
    ranks: dict[str, list[int]] = {}
    for n in range(1, n_max + 1):
        dm = d_max if d_max is not None else 2 * n + 3
        for p in p_list:
            def ell(n=n, p=p):
                r = gr.ell_ranks(n, p)
                ranks[f"{n},{p}"] = list(r.ranks)
                return r.recursion_holds() and r.total == p**n, None, f"ranks {list(r.ranks)}"

            tasks.append(_Task(f"01-ell-ranks[n={n},p={p}]", ell))
            tasks.append(_Task(f"02-dimension-identity[n={n},p={p},d<={dm}]",
                               lambda n=n, p=p, dm=dm: (gr.check_graded_dimension_identity(n, p, dm), None)))

    def rees_main():
        op = dg.f_operator(3, 2)
        res = gr.rees_compatibility_search(op, dg.chart_pairing(3, 2), 3, m_max=2)
        return res.holds, res.witness, res.reason

    def rees_control():
        op, pairing = _control_xy(2)
        res = gr.rees_compatibility_search(op, pairing, 1, m_max=1)
        return not res.holds, res.witness, res.reason

    def induced():
        op = dg.f_operator(3, 2)
        pairing = dg.chart_pairing(3, 2)
        for r in kp.rectangular_vectors(3):
            res = gr.induced_maximality_search(op, pairing, kp.kempf_vars(r, doubled=True), m_max=1, deg_bound=6)
            if not res.holds:
                return False, res.witness, f"rectangle {r}"
        return True, None, None

    tasks.append(_Task("03-rees[n=3,p=2,m_max=2]", rees_main))
    tasks.append(_Task("04-rees-control-xy", rees_control))
    tasks.append(_Task("05-induced-maximality[n=3,p=2]", induced))
    report.checks = _execute(tasks, workers, timings)
    report.data["ranks"] = dict(sorted(ranks.items()))
    return report


def write_report(report: VerificationReport, fmt: str = "text", path: str | os.PathLike | None = None) -> bool:
    """Serialize to ``path`` (stdout when None); False after an I/O error, reported on stderr."""
    if fmt == "json":
        text = report.to_json()
    elif fmt == "text":
        text = report.to_text()
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if path is None:
        sys.stdout.write(text)
        return True
    try:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write report to {path}: {exc}", file=sys.stderr)
        return False
    return True


def emit_report(report: VerificationReport, fmt: str = "text", path: str | os.PathLike | None = None) -> int:
    """Write the report; returns the process exit code (0 pass, 1 fail or I/O error)."""
    if not write_report(report, fmt, path):
        return 1
    return 0 if report.passed else 1


__all__ = [
    "CHECK_GROUPS",
    "CheckResult",
    "NotASplitting",
    "VerificationReport",
    "emit_report",
    "write_report",
    "verify_graded",
    "verify_theorem",
    "within_resource_guard",
]
