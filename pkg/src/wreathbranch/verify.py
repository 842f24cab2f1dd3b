"""Exhaustive self-check suites over desk-scale bounds.

Each suite walks a finite family of instances, compares an independently
computed value against the production code path, and returns
``{"checked": count, "failures": [message, ...]}``.  The CLI and the
acceptance tests both run these.
"""

from __future__ import annotations

import itertools
from math import factorial

from .branching import branch_first, verify_branch_dimensions
from .lr import lr_coefficient, schur_product_oracle
from .perms import (all_perms, brute_force_double_cosets, compose, descents,
                    double_coset_reps, from_cycles, identity, inverse, length,
                    rho_cosets, standard_tableau, to_cycles, young_subgroup)
from .shapes import enumerate_partitions, multipartitions


def positive_compositions(n: int):
    """All compositions of n with strictly positive parts.

    Zero parts change neither the Young subgroup nor the double cosets,
    so the coset suites quantify over these.
    """
    if n == 0:
        yield ()
        return
    for cuts in itertools.product([0, 1], repeat=n - 1):
        comp = []
        run = 1
        for c in cuts:
            if c:
                comp.append(run)
                run = 1
            else:
                run += 1
        comp.append(run)
        yield tuple(comp)


def verify_lr_oracle(max_total: int = 8) -> dict:
    """Lattice-word counts against Schur-polynomial peeling, all sizes."""
    checked = 0
    failures = []
    for total in range(0, max_total + 1):
        for a in range(0, total + 1):
            for alpha in enumerate_partitions(a):
                for beta in enumerate_partitions(total - a):
                    expansion = schur_product_oracle(alpha, beta)
                    for lam in enumerate_partitions(total):
                        want = expansion.get(lam, 0)
                        got = lr_coefficient(lam, alpha, beta)
                        checked += 1
                        if got != want:
                            failures.append(
                                f"c^{lam}_({alpha},{beta}) = {got}, "
                                f"oracle says {want}")
    return {"checked": checked, "failures": failures}


def verify_cosets(max_n: int = 6) -> dict:
    """Double coset representatives against the brute-force partition."""
    checked = 0
    failures = []
    for n in range(1, max_n + 1):
        comps = list(positive_compositions(n))
        for gamma in comps:
            for alpha in comps:
                cosets = brute_force_double_cosets(gamma, alpha)
                if sum(len(c) for c in cosets) != factorial(n):
                    failures.append(f"coset sizes of ({gamma},{alpha}) "
                                    "do not sum to n!")
                reps = double_coset_reps(gamma, alpha).reps
                hit = set()
                for rep in reps:
                    owners = [k for k, c in enumerate(cosets) if rep in c]
                    hit.update(owners)
                checked += 1
                if len(reps) != len(cosets) or len(hit) != len(cosets):
                    failures.append(
                        f"({gamma},{alpha}): {len(reps)} reps hit "
                        f"{len(hit)} of {len(cosets)} cosets")
    rho = _verify_rho(max_n)
    checked += rho["checked"]
    failures += rho["failures"]
    return {"checked": checked, "failures": failures}


def _verify_rho(max_n: int) -> dict:
    """The distinguished cyclic reps hit each (S_sizes, S_{n-1})-coset once."""
    checked = 0
    failures = []
    for n in range(1, max_n + 1):
        for sizes in positive_compositions(n):
            cosets = brute_force_double_cosets(sizes, (n - 1, 1))
            reps = [p for _, p in rho_cosets(sizes)]
            owners = set()
            for rep in reps:
                owners.update(k for k, c in enumerate(cosets) if rep in c)
            checked += 1
            if len(reps) != len(cosets) or len(owners) != len(cosets):
                failures.append(f"rho reps for sizes {sizes} hit "
                                f"{len(owners)} of {len(cosets)} cosets")
    # the worked 9-box example, exact cycle output
    got = {to_cycles(p) for _, p in rho_cosets((3, 1, 0, 2, 3))}
    want = {"e", "(6,9,8,7)", "(4,9,8,7,6,5)", "(3,9,8,7,6,5,4)"}
    checked += 1
    if got != want:
        failures.append(f"rho reps for (3,1,0,2,3): {sorted(got)}")
    return {"checked": checked, "failures": failures}


def verify_stabilizers(max_n: int = 6) -> dict:
    """Stabilizer of the acted standard tableau equals the conjugated subgroup.

    The stabilizer under the box action depends only on the flattened
    entries, never on the row shape, so a single shape per (gamma, sigma)
    pair covers all shapes.  Both sides are materialized as sets.
    """
    checked = 0
    failures = []
    for n in range(1, max_n + 1):
        for gamma in positive_compositions(n):
            sg = young_subgroup(gamma, n)
            flat0 = [e for row in standard_tableau((n,), gamma) for e in row]
            for sigma in all_perms(n):
                sinv = inverse(sigma)
                flat = [0] * n
                for i, e in enumerate(flat0):
                    flat[sigma[i] - 1] = e
                stab = {theta for theta in all_perms(n)
                        if all(flat[theta[i] - 1] == flat[i] for i in range(n))} \
                    if n <= 4 else None
                conj = {compose(compose(sinv, g), sigma) for g in sg}
                ok = all(all(flat[h[i] - 1] == flat[i] for i in range(n))
                         for h in conj)
                sizes_match = len(conj) == _stab_order(flat)
                checked += 1
                if not ok or not sizes_match or (stab is not None
                                                 and stab != conj):
                    failures.append(f"stabilizer mismatch gamma={gamma} "
                                    f"sigma={sigma}")
    return {"checked": checked, "failures": failures}


def _stab_order(flat) -> int:
    counts: dict[int, int] = {}
    for e in flat:
        counts[e] = counts.get(e, 0) + 1
    out = 1
    for c in counts.values():
        out *= factorial(c)
    return out


def verify_length_lemma(max_n: int = 6) -> dict:
    """Multiplying by a descent of the inverse drops the length by one."""
    checked = 0
    failures = []
    for n in range(1, max_n + 1):
        for sigma in all_perms(n):
            for j in descents(inverse(sigma)):
                t = from_cycles([[j, j + 1]], n)
                checked += 1
                if length(compose(sigma, t)) != length(sigma) - 1:
                    failures.append(f"length lemma fails for sigma={sigma} "
                                    f"j={j}")
    return {"checked": checked, "failures": failures}


def verify_labelling_equivalence(max_m: int = 4, max_n: int = 4) -> dict:
    """Good-labelling sums equal the matrix-formula multiplicities."""
    checked = 0
    failures = []
    for m in range(2, max_m + 1):
        r = len(enumerate_partitions(m))
        for n in range(1, max_n + 1):
            for lam in multipartitions(n, r):
                via_mats = branch_first(m, lam, method="matrices")
                via_labs = branch_first(m, lam, method="labellings")
                checked += 1
                if via_mats != via_labs:
                    failures.append(f"m={m} lambda={lam}: "
                                    f"{via_labs} != {via_mats}")
    return {"checked": checked, "failures": failures}


def verify_dimensions(rule: str, max_m: int, max_n: int) -> dict:
    """Restriction preserves total dimension for every multipartition."""
    checked = 0
    failures = []
    lo_m = 2
    for m in range(lo_m, max_m + 1):
        for n in range(1, max_n + 1):
            report = verify_branch_dimensions(m, n, rule)
            checked += report["checked"]
            failures += report["failures"]
    return {"checked": checked, "failures": failures}


SUITES = {
    "lr-oracle": lambda max_m, max_n: verify_lr_oracle(max_n or 8),
    "cosets": lambda max_m, max_n: verify_cosets(max_n or 6),
    "dimensions-first": lambda max_m, max_n:
        verify_dimensions("first", max_m or 4, max_n or 5),
    "dimensions-second": lambda max_m, max_n:
        verify_dimensions("second", max_m or 5, max_n or 6),
    "labelling-equivalence": lambda max_m, max_n:
        verify_labelling_equivalence(max_m or 4, max_n or 4),
    "stabilizers": lambda max_m, max_n: verify_stabilizers(max_n or 6),
    "length-lemma": lambda max_m, max_n: verify_length_lemma(max_n or 6),
}


def run_suite(name: str, max_m: int | None = None,
              max_n: int | None = None) -> dict:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    report = SUITES[name](max_m, max_n)
    report["suite"] = name
    return report
