"""Suite runners and verification reports.

Each suite re-checks one layer of the construction at a chosen rank and
returns a deterministic list of check records; suites fan out over a
thread pool sized by the QKC_THREADS environment variable.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor

from . import alcove, ichevalley, qbg, qkpres, relations, semimod
from .rings import ConfigError, specialize_Q_zero
from .weylc import enumerate_group, positive_roots

SUITES = ("qbg", "alcove", "ic", "semimod", "relations", "qkpres")


def thread_count():
    value = os.environ.get("QKC_THREADS")
    if value:
        try:
            count = int(value)
        except ValueError:
            raise ConfigError("QKC_THREADS must be an integer")
        if count < 1:
            raise ConfigError("QKC_THREADS must be positive")
        return count
    return min(os.cpu_count() or 1, 8)


class VerificationReport:
    """Outcome of one suite: ordered check records plus run parameters."""

    __slots__ = ("suite", "n", "trunc", "mode", "checks")

    def __init__(self, suite, n, trunc, mode, checks):
        self.suite = suite
        self.n = n
        self.trunc = trunc
        self.mode = mode
        self.checks = list(checks)  # (id, ok, location, seconds)

    @property
    def ok(self):
        return all(ok for _, ok, _, _ in self.checks)

    def to_json(self, timings=False):
        records = []
        for cid, ok, location, seconds in self.checks:
            rec = {"id": cid, "status": "pass" if ok else "fail"}
            if location:
                rec["location"] = location
            if timings:
                rec["seconds"] = seconds
            records.append(rec)
        return {
            "suite": self.suite,
            "n": self.n,
            "trunc": self.trunc,
            "mode": self.mode,
            "status": "pass" if self.ok else "fail",
            "checks": records,
        }

    def render(self, timings=False):
        lines = ["suite %s (n=%d, mode=%s)" % (self.suite, self.n, self.mode)]
        for cid, ok, location, seconds in self.checks:
            line = "  %s %s" % ("PASS" if ok else "FAIL", cid)
            if location:
                line += "  [%s]" % location
            if timings:
                line += "  (%.3fs)" % seconds
            lines.append(line)
        return "\n".join(lines)


def _run_tasks(tasks):
    """Run (callable -> record list) tasks on the pool, keeping order."""
    with ThreadPoolExecutor(max_workers=thread_count()) as pool:
        futures = [pool.submit(_timed, fn) for fn in tasks]
        out = []
        for future in futures:
            out.extend(future.result())
    return out


def _timed(fn):
    start = time.monotonic()
    records = fn()
    elapsed = time.monotonic() - start
    share = elapsed / max(len(records), 1)
    return [(cid, ok, loc, share) for cid, ok, loc in records]


def _suite_qbg(n, trunc):
    roots = positive_roots(n)

    def check(w):
        for root in roots:
            if qbg.edge_by_pattern(w, root) != qbg.edge_by_length(w, root):
                return [("pattern-vs-length-%s" % w.render(), False,
                         "root %s" % root.render())]
        return [("pattern-vs-length-%s" % w.render(), True, "")]

    tasks = [lambda w=w: check(w) for w in enumerate_group(n)]
    return _run_tasks(tasks)


def _mountain(n, k):
    return ichevalley.mountain(n, k)


def _staircase(n, k):
    return ichevalley.staircase(n, k)


def _alpha_range(n, a, b):
    return tuple(1 if a <= t <= b else 0 for t in range(1, n + 1))


def _check_mountain_theta(n, k):
    fam = alcove.admissible_subsets(_mountain(n, k), alcove.theta_seq(n, k))
    if k == 1:
        ok = [a.positions for a in fam] == [()]
        return [("mountain-theta-k%d" % k, ok, "")]
    ok = (len(fam) == 2
          and fam[1].sequence.absolute(fam[1].positions[0]).pair_label()
          == (k - 1, k)
          and fam[1].end == _mountain(n, k - 1))
    return [("mountain-theta-k%d" % k, ok, "")]


def _check_mountain_gamma(n, k):
    fam = alcove.admissible_subsets(_mountain(n, k), alcove.gamma_seq(n, k))
    got = {a.positions: a for a in fam}
    seq = alcove.gamma_seq(n, k)
    idx = {root.pair_label(): p for p, (_, root) in enumerate(seq.entries)}
    long_p = idx[(k, -k)]
    ok = True
    if k < n:
        next_p = idx[(k, k + 1)]
        ok = set(got) == {(), (next_p,), (long_p,), (long_p, next_p)}
        ok = ok and got[(next_p,)].end == _mountain(n, k + 1)
        ok = ok and got[(next_p,)].down == _alpha_range(n, k, k)
        ok = ok and got[(long_p, next_p)].end == _staircase(n, k)
        ok = ok and got[(long_p, next_p)].down == _alpha_range(n, k, n)
    else:
        ok = set(got) == {(), (long_p,)}
    ok = ok and got[(long_p,)].end == _staircase(n, k - 1)
    ok = ok and got[(long_p,)].down == _alpha_range(n, k, n)
    return [("mountain-gamma-k%d" % k, ok, "")]


def _check_staircase_gamma(n, j):
    fam = alcove.admissible_subsets(_staircase(n, j - 1), alcove.gamma_seq(n, j))
    label = (j, j + 1) if j < n else (n, -n)
    ok = (len(fam) == 2
          and fam[1].sequence.absolute(fam[1].positions[0]).pair_label() == label
          and fam[1].end == _staircase(n, j)
          and fam[1].down == (0,) * n)
    return [("staircase-gamma-j%d" % j, ok, "")]


def _suite_alcove(n, trunc):
    tasks = []
    for k in range(1, n + 1):
        tasks.append(lambda k=k: _check_mountain_theta(n, k))
        tasks.append(lambda k=k: _check_mountain_gamma(n, k))
        tasks.append(lambda k=k: _check_staircase_gamma(n, k))
    return _run_tasks(tasks)


def _check_ic(n, k):
    got = ichevalley.inverse_chevalley(_mountain(n, k), k)
    ok = got == ichevalley.ic2_closed(n, k)
    return [("evaluator-vs-closed-form-k%d" % k, ok, "")]


def _check_cancellation(n, k):
    report = ichevalley.cancellation_report(n, k)
    ok = report["matches_closed_form"]
    got = {(j, chain) for j, chain, _ in report["survivors"]}
    expect = {(j, tuple(range(k, j - 1, -1))) for j in range(1, k + 1)}
    ok = ok and got == expect
    return [("cancellation-accounting-k%d" % k, ok, "")]


def _suite_ic(n, trunc):
    tasks = []
    for k in range(1, n + 1):
        tasks.append(lambda k=k: _check_ic(n, k))
        tasks.append(lambda k=k: _check_cancellation(n, k))
    return _run_tasks(tasks)


def _suite_semimod(n, trunc):
    tasks = [
        lambda: semimod.check_recursion(n, trunc),
        lambda: semimod.check_symmetry(n, trunc),
        lambda: semimod.check_duality(n, trunc),
    ]
    return _run_tasks(tasks)


def _suite_relations(n, trunc):
    def audits():
        records = [("base-rewrite-audit", relations.audit_base_rewrite(n), "")]
        if n >= 2:
            ok = (relations.derive_secondary(relations.base_relation(n))
                  == relations.secondary_literal(n))
            records.append(("secondary-derivation", ok, ""))
        for k in range(2, n):
            ok = relations.chain_relation(n, k) == relations.system_arbitrary(n, k)
            records.append(("chain-vs-nested-sum-k%d" % k, ok, ""))
        try:
            relations.assemble_system(n, audit=True)
            records.append(("system-rows-audit", True, ""))
        except ConfigError as exc:
            records.append(("system-rows-audit", False, str(exc)))
        return records

    def solve():
        sol = relations.solve_system(n)
        expect = tuple(relations.elementary_E(n, l) for l in range(n + 1))
        records = [("solution-is-elementary", sol == expect, "")]
        rows = relations.assemble_system(n)
        ok = all(row.evaluate(expect).is_zero() for row in rows)
        records.append(("rows-annihilate-elementary", ok, ""))
        return records

    tasks = [
        audits,
        solve,
        lambda: relations.check_csym_props(min(n, 4)),
        lambda: relations.check_generating_identities(n),
    ]
    return _run_tasks(tasks)


def _check_phi_theta_psi(n, trunc):
    import itertools

    degree = trunc if trunc is not None else 2 * n + 2
    pool = semimod.universe(n)
    bad = None
    for size in range(len(pool) + 1):
        for I in itertools.combinations(pool, size):
            for j in pool:
                psi_val = semimod.psi(n, I, j, degree)
                prod = (semimod.phi_sinf(n, I, j, degree)
                        * semimod.theta_sinf(n, I, j, degree))
                exact = (semimod.phi_sinf_frac(n, I, j)
                         * semimod.theta_sinf(n, I, j)
                         == semimod.psi(n, I, j))
                if prod != psi_val or not exact:
                    bad = (I, j)
                    break
    return [("phi-theta-equals-psi", bad is None,
             "" if bad is None else "I=%s j=%s" % bad)]


def _suite_qkpres(n, trunc):
    def factorization():
        records = qkpres.check_coefficient_factorization(n, trunc)
        failing = [cid for cid, ok, _ in records if not ok]
        return [("zeta-eta-equals-phi", not failing,
                 failing[0] if failing else "")]

    def dictionary():
        for l in range(2 * n + 1):
            if qkpres.to_semimod(qkpres.f_poly(n, l, trunc=trunc)) \
                    != semimod.ff(n, l, trunc=trunc):
                return [("dictionary-f-to-module", False, "l=%d" % l)]
        return [("dictionary-f-to-module", True, "")]

    def dictionary_variants():
        for k in range(1, n + 1):
            for l in range(k + 1):
                if qkpres.to_semimod(qkpres.f_poly(n, l, "upper", k, trunc)) \
                        != semimod.ff(n, l, "upper", k, trunc):
                    return [("dictionary-variants", False,
                             "upper k=%d l=%d" % (k, l))]
            for l in range(2 * n - k + 1):
                if qkpres.to_semimod(qkpres.f_poly(n, l, "barred", k, trunc)) \
                        != semimod.ff(n, l, "barred", k, trunc):
                    return [("dictionary-variants", False,
                             "barred k=%d l=%d" % (k, l))]
        return [("dictionary-variants", True, "")]

    def specialization():
        for l in range(2 * n + 1):
            lhs = specialize_Q_zero(qkpres.f_poly(n, l, trunc=trunc))
            rhs = specialize_Q_zero(qkpres.elementary_z(n, l, trunc=trunc))
            if lhs != rhs:
                return [("specialization-at-Q-zero", False, "l=%d" % l)]
        return [("specialization-at-Q-zero", True, "")]

    tasks = [
        factorization,
        lambda: _check_phi_theta_psi(n, trunc),
        dictionary,
        dictionary_variants,
        specialization,
    ]
    return _run_tasks(tasks)


_RUNNERS = {
    "qbg": _suite_qbg,
    "alcove": _suite_alcove,
    "ic": _suite_ic,
    "semimod": _suite_semimod,
    "relations": _suite_relations,
    "qkpres": _suite_qkpres,
}


def run_suite(suite, n, mode="truncated", trunc=None):
    if suite not in _RUNNERS:
        raise ConfigError("unknown suite %r" % suite)
    if mode not in ("truncated", "exact"):
        raise ConfigError("unknown mode %r" % mode)
    if mode == "exact":
        trunc = None
    elif trunc is None:
        trunc = 2 * n + 2
    checks = _RUNNERS[suite](n, trunc)
    return VerificationReport(suite, n, trunc, mode, checks)


def run_suites(suites, n, mode="truncated", trunc=None):
    names = SUITES if suites in (None, "all") else tuple(suites)
    return [run_suite(name, n, mode, trunc) for name in names]
