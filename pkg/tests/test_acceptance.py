"""Acceptance criteria 1-10.  Each test records one PASS/FAIL line (shown in the
pytest summary) and asserts; run this file directly to print the lines only."""

import subprocess
import sys
import time

from crystab import classify, verify

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script
    ACCEPTANCE_LINES = []


def record(number, title, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    ACCEPTANCE_LINES.append(line)
    return ok


def failures(checks):
    return [c.line() for c in checks if not c.ok]


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_criterion_1_eta_identities():
    checks, dt = timed(lambda: [c for p in (3, 5, 7) for c in verify.suite_eta(p)])
    bad = failures(checks)
    ok = not bad and dt < 10
    assert record(1, "eta identities, p in {3,5,7}, r in 2p-2..2p+6, < 10 s", ok,
                  f"{len(checks)} checks, {len(bad)} failed, {dt:.2f} s"), bad[:5]


def test_criterion_2_coset_decomposition():
    checks, dt = timed(lambda: [c for p, n in ((3, 2), (3, 3), (5, 2))
                                for c in verify.suite_cosets(p, n)])
    bad = failures(checks)
    ok = not bad and dt < 60
    assert record(2, "double coset decomposition of K mod p^n, exhaustive, < 60 s", ok,
                  f"{len(checks)} checks, {len(bad)} failed, {dt:.1f} s"), bad[:5]


def test_criterion_3_delta_sums():
    checks = [c for n in (2, 3) for c in verify.suite_delta(5, n)]
    bad = failures(checks)
    assert record(3, "delta sums at p=5, n in {2,3}", not bad,
                  f"{len(checks)} checks, {len(bad)} failed"), bad[:5]


def test_criterion_4_filtration():
    checks = [c for p, n in ((3, 2), (5, 2)) for c in verify.suite_filtration(p, n)]
    bad = failures(checks)
    assert record(4, "filtration chain, stability, quotients, dim W, eta_s mod U", not bad,
                  f"{len(checks)} checks, {len(bad)} failed"), bad[:5]


def test_criterion_5_constants():
    checks = [c for n in (2, 3) for c in verify.suite_constants(5, n)]
    bad = failures(checks)
    assert record(5, "leading terms of the constants at p=5, n in {2,3}", not bad,
                  f"{len(checks)} checks, {len(bad)} failed"
                  + (f"; first: {bad[0]}" if bad else "")), bad[:5]


def test_criterion_6_vandermonde():
    checks, dt = timed(verify.suite_vandermonde)
    bad = failures(checks)
    ok = not bad and dt < 5
    assert record(6, "binomial Vandermonde closed form, 6561 cases, < 5 s", ok,
                  f"{dt:.2f} s"), bad


def test_criterion_7_nice_systems():
    checks = [c for p in (5, 7) for c in verify.suite_nice(p)]
    bad = failures(checks)
    assert record(7, "nice-combination systems and matrix criterion, p in {5,7}", not bad,
                  f"{len(checks)} checks, {len(bad)} failed"), bad[:5]


def test_criterion_8_classifier_consistency():
    results = [(p, name, ok) for p in (5, 7) for name, ok in classify.consistency_sweep(p)]
    bad = [f"p={p} {name}" for p, name, ok in results if not ok]
    assert record(8, "classifier shortcuts, Pi removal and Banach labels, p in {5,7}", not bad,
                  f"{len(results)} checks, {len(bad)} failed"), bad[:5]


def test_criterion_9_first_order_reducible():
    # each check: reducible with mu = reduce(a^-3 (eps(1+p) - 1 - a^2)), mu = 0 and an
    # unchanged label set under a -> -a at the centre, mu -> -mu off the centre
    checks = verify.first_order_checks(5)
    centre = [c for c in checks if c.params.endswith("shift=0")]
    bad = failures(checks)
    ok = not bad and len(centre) > 0
    assert record(9, "nu=1 reducible case at p=5, n=2 with mu formula and branch flip", ok,
                  f"{len(checks)} eigenvalues, {len(centre)} centres, {len(bad)} failed"), bad[:5]


def _run_verify_all(p, n, budget):
    t0 = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "crystab", "verify", "--suite", "all",
                           "--p", str(p), "--n", str(n)], capture_output=True, text=True,
                          timeout=budget * 2)
    dt = time.perf_counter() - t0
    fails = [ln for ln in proc.stdout.splitlines() if ln.startswith("FAIL")]
    return proc.returncode == 0 and dt < budget, dt, fails


def test_criterion_10_end_to_end():
    ok3, dt3, f3 = _run_verify_all(3, 2, 60)
    ok5, dt5, f5 = _run_verify_all(5, 2, 600)
    ok = ok3 and ok5
    assert record(10, "verify --suite all at (3,2) < 60 s and (5,2) < 600 s with no FAIL", ok,
                  f"(3,2): {dt3:.1f} s, {len(f3)} FAIL; (5,2): {dt5:.1f} s, {len(f5)} FAIL"), \
        (f3 + f5)[:8]


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items(), key=lambda kv: kv[0])
             if k.startswith("test_criterion_")]
    tests.sort(key=lambda f: int(f.__name__.split("_")[2]))
    for t in tests:
        try:
            t()
        except AssertionError:
            pass
        print(ACCEPTANCE_LINES[-1])
    sys.exit(0 if all(ln.startswith("PASS") for ln in ACCEPTANCE_LINES) else 1)
