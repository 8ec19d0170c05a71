"""Exhaustive quasi and weak p-Steinberg searches over S_n, A_n and their
double covers, the maximal-weight partition set A(n,p), and verification of
the computed classifications against the expected reference tables."""

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import factorial

from .an_chars import AnCharLabel, an_classes, an_labels, an_nonzero
from .partitions import (
    CycleType,
    Partition,
    dimension,
    format_partition,
    is_p_regular,
    m_core_weight,
    partitions_of,
)
from .sn_chars import Vanishing, mn_value, vanishes_fast
from .spin_chars import (
    AnSpinLabel,
    SpinLabel,
    an_spin_labels,
    an_spin_value,
    cover_p_regular,
    schur_value,
    spin_dimension,
    spin_labels,
    strict_parity,
)

GROUPS = ("sn", "an", "sn-tilde-spin", "an-tilde-spin")

DEFAULT_MAX_N = 12
VERIFY_LIMIT = 20


class ResourceBoundExceeded(ValueError):
    """Requested sweep exceeds the configured bound."""


def primes_upto(n: int) -> tuple[int, ...]:
    sieve = [True] * (n + 1)
    out = []
    for q in range(2, n + 1):
        if sieve[q]:
            out.append(q)
            for k in range(q * q, n + 1, q):
                sieve[k] = False
    return tuple(out)


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def legendre_nu(n: int, p: int) -> int:
    """p-adic valuation of n!."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 0:
        raise ValueError("n must be nonnegative")
    total, q = 0, p
    while q <= n:
        total += n // q
        q *= p
    return total


def group_order(group: str, n: int) -> int:
    if group == "sn":
        return factorial(n)
    if group == "an":
        return factorial(n) // 2
    if group == "sn-tilde-spin":
        return 2 * factorial(n)
    if group == "an-tilde-spin":
        return factorial(n)
    raise ValueError(f"unknown group {group!r}")


def p_part_exponent(group: str, n: int, p: int) -> int:
    """Exponent of p in the group order."""
    nu = legendre_nu(n, p)
    if p == 2:
        if group == "an":
            return nu - 1
        if group == "sn-tilde-spin":
            return nu + 1
    return nu


def _check_prime_for_group(group: str, n: int, p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p > n or p_part_exponent(group, n, p) < 1:
        raise ValueError(f"{p} does not divide the order of {group} at n={n}")


@dataclass(frozen=True)
class Hit:
    label: str
    dim: int
    weak: bool


@dataclass(frozen=True)
class Witness:
    label: str
    cls: str


@dataclass(frozen=True)
class ClassificationReport:
    group: str
    n: int
    p: int
    hits: tuple[Hit, ...]
    witnesses: tuple[Witness, ...]

    def to_json_dict(self) -> dict:
        return {
            "group": self.group,
            "n": self.n,
            "p": self.p,
            "hits": [
                {"label": h.label, "dim": h.dim, "weak": h.weak} for h in self.hits
            ],
            "witnesses": [
                {"label": w.label, "class": w.cls} for w in self.witnesses
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            ["group", "n", "p", "record", "label", "dim", "weak", "class"]
        )
        for h in self.hits:
            writer.writerow(
                [self.group, self.n, self.p, "hit", h.label, h.dim, h.weak, ""]
            )
        for w in self.witnesses:
            writer.writerow(
                [self.group, self.n, self.p, "witness", w.label, "", "", w.cls]
            )
        return buf.getvalue()


def _pool_map(func, items, workers: int):
    if workers <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def _sn_row(lam: Partition, regular: tuple[CycleType, ...]):
    for alpha in regular:
        if vanishes_fast(lam, alpha) is Vanishing.ZERO:
            return alpha
        if mn_value(lam, alpha) == 0:
            return alpha
    return None


def classify_sn(n: int, p: int, workers: int = 1) -> ClassificationReport:
    _check_prime_for_group("sn", n, p)
    regular = tuple(a for a in partitions_of(n) if is_p_regular(a, p))
    rows = partitions_of(n)
    found = _pool_map(lambda lam: _sn_row(lam, regular), rows, workers)
    hits, witnesses = [], []
    for lam, zero_at in zip(rows, found):
        if zero_at is None:
            dim = dimension(lam)
            weak = dim == p ** p_part_exponent("sn", n, p)
            hits.append(Hit(format_partition(lam), dim, weak))
        else:
            witnesses.append(
                Witness(format_partition(lam), format_partition(zero_at))
            )
    return ClassificationReport("sn", n, p, tuple(hits), tuple(witnesses))


def _an_row(label: AnCharLabel, regular):
    for cls in regular:
        if not an_nonzero(label, cls):
            return cls
    return None


def classify_an(n: int, p: int, workers: int = 1) -> ClassificationReport:
    if n < 3:
        raise ValueError("n must be at least 3")
    _check_prime_for_group("an", n, p)
    regular = tuple(c for c in an_classes(n) if is_p_regular(c.alpha, p))
    rows = an_labels(n)
    found = _pool_map(lambda label: _an_row(label, regular), rows, workers)
    hits, witnesses = [], []
    for label, zero_at in zip(rows, found):
        if zero_at is None:
            full = dimension(label.lam)
            dim = full if label.variant == "down" else full // 2
            weak = dim == p ** p_part_exponent("an", n, p)
            hits.append(Hit(str(label), dim, weak))
        else:
            witnesses.append(Witness(str(label), str(zero_at)))
    return ClassificationReport("an", n, p, tuple(hits), tuple(witnesses))


def _spin_row(label: SpinLabel, regular):
    for alpha in regular:
        if schur_value(label, alpha).is_zero():
            return alpha
    return None


def _an_spin_row(label: AnSpinLabel, regular):
    for alpha in regular:
        if label.variant != "down" and alpha == label.lam:
            # split-pair values at the label's own type: both branches
            # must be nonzero, and the pair is branch-order invariant
            if any(
                an_spin_value(label, alpha, s).is_zero() for s in (1, -1)
            ):
                return alpha
        elif an_spin_value(label, alpha).is_zero():
            return alpha
    return None


def classify_spin(
    n: int, p: int, group: str = "sn-tilde-spin", workers: int = 1
) -> ClassificationReport:
    if group not in ("sn-tilde-spin", "an-tilde-spin"):
        raise ValueError(f"not a cover group: {group!r}")
    if n < 4:
        raise ValueError("spin classification requires n >= 4")
    _check_prime_for_group(group, n, p)
    if group == "sn-tilde-spin":
        rows = spin_labels(n)
        regular = tuple(a for a in partitions_of(n) if cover_p_regular(a, p))
        found = _pool_map(lambda label: _spin_row(label, regular), rows, workers)
    else:
        rows = an_spin_labels(n)
        regular = tuple(
            a
            for a in partitions_of(n)
            if (n - len(a)) % 2 == 0 and cover_p_regular(a, p)
        )
        found = _pool_map(
            lambda label: _an_spin_row(label, regular), rows, workers
        )
    hits, witnesses = [], []
    for label, zero_at in zip(rows, found):
        if zero_at is None:
            full = spin_dimension(label.lam)
            halved = group == "an-tilde-spin" and strict_parity(label.lam) == 0
            dim = full // 2 if halved else full
            weak = dim == p ** p_part_exponent(group, n, p)
            hits.append(Hit(str(label), dim, weak))
        else:
            witnesses.append(Witness(str(label), format_partition(zero_at)))
    return ClassificationReport(group, n, p, tuple(hits), tuple(witnesses))


def classify_group(group: str, n: int, p: int, workers: int = 1) -> ClassificationReport:
    if group == "sn":
        return classify_sn(n, p, workers)
    if group == "an":
        return classify_an(n, p, workers)
    return classify_spin(n, p, group, workers)


def quasi_steinberg_sn(n: int, p: int, workers: int = 1) -> list[Partition]:
    """Partitions whose S_n character is nonzero on every p-regular class."""
    report = classify_sn(n, p, workers)
    return [tuple(int(x) for x in h.label.split(",")) for h in report.hits]


def quasi_steinberg_an(n: int, p: int, workers: int = 1) -> list[AnCharLabel]:
    report = classify_an(n, p, workers)
    out = []
    for h in report.hits:
        text, variant = h.label.rsplit(":", 1)
        lam = tuple(int(x) for x in text.split(","))
        name = {"+": "plus", "-": "minus", "down": "down"}[variant]
        out.append(AnCharLabel(lam, name))
    return out


def quasi_steinberg_spin(
    n: int, p: int, group: str = "sn-tilde-spin", workers: int = 1
):
    report = classify_spin(n, p, group, workers)
    out = []
    for h in report.hits:
        text, variant = h.label.rsplit(":", 1)
        lam = tuple(int(x) for x in text.split(","))
        if group == "sn-tilde-spin":
            name = {"+": "plus", "-": "minus", "self": "self"}[variant]
            out.append(SpinLabel(lam, name))
        else:
            name = {"+": "plus", "-": "minus", "down": "down"}[variant]
            out.append(AnSpinLabel(lam, name))
    return out


def is_weak_steinberg(group: str, label, n: int, p: int) -> bool:
    """Degree test for an already-verified quasi p-Steinberg label."""
    if group == "sn":
        dim = dimension(label)
    elif group == "an":
        full = dimension(label.lam)
        dim = full if label.variant == "down" else full // 2
    elif group == "sn-tilde-spin":
        dim = spin_dimension(label.lam)
    elif group == "an-tilde-spin":
        full = spin_dimension(label.lam)
        dim = full if strict_parity(label.lam) == 1 else full // 2
    else:
        raise ValueError(f"unknown group {group!r}")
    return dim == p ** p_part_exponent(group, n, p)


def a_np_set(n: int, p: int) -> list[Partition]:
    """Partitions of maximal q-weight for every prime q <= n other than p.

    Maximal weight means floor(n/q) successive q-rim-hook removals, i.e. the
    q-core is as small as possible.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    other = [q for q in primes_upto(n) if q != p]
    return [
        lam
        for lam in partitions_of(n)
        if all(m_core_weight(lam, q) == n // q for q in other)
    ]


# ---------------------------------------------------------------------------
# expected reference tables

SN_EXPECTED = frozenset(
    {
        (3, (2, 1), 2),
        (4, (2, 2), 2),
        (4, (3, 1), 3),
        (4, (2, 1, 1), 3),
        (5, (4, 1), 2),
        (5, (2, 1, 1, 1), 2),
        (5, (3, 2), 5),
        (5, (2, 2, 1), 5),
        (6, (3, 2, 1), 2),
        (6, (4, 2), 3),
        (6, (2, 2, 1, 1), 3),
        (8, (5, 2, 1), 2),
        (8, (3, 2, 1, 1, 1), 2),
    }
)

AN_EXPECTED = frozenset(
    {
        (3, (2, 1), 3),
        (4, (2, 2), 2),
        (4, (3, 1), 3),
        (4, (2, 2), 3),
        (5, (4, 1), 2),
        (5, (3, 1, 1), 3),
        (5, (3, 2), 5),
        (6, (3, 2, 1), 2),
        (6, (4, 2), 3),
        (6, (5, 1), 5),
        (6, (3, 3), 5),
        (8, (5, 2, 1), 2),
        (9, (7, 2), 3),
    }
)

# non-basic spin labels that remain quasi 2-Steinberg, shared by both covers
SPIN_SMALL_EXPECTED = frozenset(
    {(3, 1), (3, 2), (3, 2, 1), (5, 1), (5, 2, 1)}
)

# quasi hits that fail the degree test (all other table entries are weak)
SN_WEAK_EXCEPTIONS = frozenset(
    {
        (4, (2, 2), 2),
        (5, (4, 1), 2),
        (5, (2, 1, 1, 1), 2),
        (8, (5, 2, 1), 2),
        (8, (3, 2, 1, 1, 1), 2),
    }
)

AN_WEAK_EXCEPTIONS = frozenset(
    {
        (3, (2, 1), 3),
        (4, (2, 2), 2),
        (4, (2, 2), 3),
        (9, (7, 2), 3),  # listed under the conjugate (2,2,1,1,1,1,1)
    }
)


@dataclass(frozen=True)
class ExpectedTables:
    sn: frozenset
    an: frozenset
    spin_small: frozenset
    sn_weak_exceptions: frozenset
    an_weak_exceptions: frozenset


DEFAULT_EXPECTED = ExpectedTables(
    SN_EXPECTED,
    AN_EXPECTED,
    SPIN_SMALL_EXPECTED,
    SN_WEAK_EXCEPTIONS,
    AN_WEAK_EXCEPTIONS,
)


@dataclass(frozen=True)
class VerificationResult:
    max_n: int
    diffs: tuple[str, ...]
    cells: int  # (group, n, p) cells swept

    @property
    def passed(self) -> bool:
        return not self.diffs

    def to_json(self) -> str:
        return json.dumps(
            {
                "max_n": self.max_n,
                "pass": self.passed,
                "cells": self.cells,
                "diffs": list(self.diffs),
            }
        )


def _parse_label_partition(label: str) -> Partition:
    text = label.split(":", 1)[0]
    return tuple(int(x) for x in text.split(","))


def _expected_spin(expected: ExpectedTables, n: int) -> set:
    small = {(n, lam, 2) for lam in expected.spin_small if sum(lam) == n}
    return small | {(n, (n,), 2)}


def verify_reference(
    max_n: int = DEFAULT_MAX_N,
    expected: ExpectedTables = DEFAULT_EXPECTED,
    workers: int = 1,
    limit: int = VERIFY_LIMIT,
) -> VerificationResult:
    """Sweep every group family for 3 <= n <= max_n and all valid primes,
    then diff the hit sets (and weak flags) against the expected tables.

    Linear rows, i.e. labels derived from (n) or (1^n), are excluded from the
    diff; the tables list everything else.  Zero witnesses recorded by the
    searches are re-verified by direct evaluation.
    """
    if max_n < 3 or max_n > limit:
        raise ResourceBoundExceeded(
            f"max_n must lie within 3..{limit}, got {max_n}"
        )
    diffs: list[str] = []
    cells = 0

    def diff_set(group, found, wanted):
        for n, lam, p in sorted(wanted - found):
            diffs.append(
                f"{group} n={n} p={p} lambda={format_partition(lam)}: missing hit"
            )
        for n, lam, p in sorted(found - wanted):
            diffs.append(
                f"{group} n={n} p={p} lambda={format_partition(lam)}: unexpected hit"
            )

    sn_found, sn_weak_bad = set(), []
    an_found, an_weak_bad = set(), []
    spin_found = {"sn-tilde-spin": set(), "an-tilde-spin": set()}
    spin_weak_bad = []

    for n in range(3, max_n + 1):
        for p in primes_upto(n):
            cells += 1
            report = classify_sn(n, p, workers)
            linear = {(n,), (1,) * n}
            for h in report.hits:
                lam = _parse_label_partition(h.label)
                if lam in linear:
                    continue
                sn_found.add((n, lam, p))
                if h.weak != ((n, lam, p) not in expected.sn_weak_exceptions):
                    sn_weak_bad.append((n, lam, p, h.weak))
            _verify_witnesses_sn(report, p, diffs)
            if n >= 9:
                _check_all_nonlinear_vanish(report, n, p, diffs)

            if p_part_exponent("an", n, p) >= 1:
                cells += 1
                report = classify_an(n, p, workers)
                for h in report.hits:
                    lam = _parse_label_partition(h.label)
                    if lam == (n,):
                        continue
                    an_found.add((n, lam, p))
                    weak_expected = (n, lam, p) not in expected.an_weak_exceptions
                    if h.weak != weak_expected:
                        an_weak_bad.append((n, lam, p, h.weak))

            if n >= 4:
                for group in ("sn-tilde-spin", "an-tilde-spin"):
                    cells += 1
                    report = classify_spin(n, p, group, workers)
                    for h in report.hits:
                        lam = _parse_label_partition(h.label)
                        spin_found[group].add((n, lam, p))
                        if h.weak:
                            spin_weak_bad.append((group, n, lam, p))

    diff_set("sn", sn_found, {t for t in expected.sn if t[0] <= max_n})
    diff_set("an", an_found, {t for t in expected.an if t[0] <= max_n})
    for group in ("sn-tilde-spin", "an-tilde-spin"):
        wanted = set()
        for n in range(4, max_n + 1):
            wanted |= _expected_spin(expected, n)
        diff_set(group, spin_found[group], wanted)

    for n, lam, p, got in sn_weak_bad:
        diffs.append(
            f"sn n={n} p={p} lambda={format_partition(lam)}: weak flag {got}"
        )
    for n, lam, p, got in an_weak_bad:
        diffs.append(
            f"an n={n} p={p} lambda={format_partition(lam)}: weak flag {got}"
        )
    for group, n, lam, p in spin_weak_bad:
        diffs.append(
            f"{group} n={n} p={p} lambda={format_partition(lam)}: weak flag True"
        )

    return VerificationResult(max_n, tuple(diffs), cells)


def _verify_witnesses_sn(report: ClassificationReport, p: int, diffs: list) -> None:
    for w in report.witnesses:
        lam = _parse_label_partition(w.label)
        alpha = tuple(int(x) for x in w.cls.split(","))
        if not is_p_regular(alpha, p) or mn_value(lam, alpha) != 0:
            diffs.append(
                f"sn n={report.n} p={p} lambda={w.label}: bad witness {w.cls}"
            )


def _check_all_nonlinear_vanish(
    report: ClassificationReport, n: int, p: int, diffs: list
) -> None:
    # for n >= 9, every non-linear row must come with a zero witness
    witnessed = {w.label for w in report.witnesses}
    for lam in partitions_of(n):
        if lam in ((n,), (1,) * n):
            continue
        if format_partition(lam) not in witnessed:
            diffs.append(
                f"sn n={n} p={p} lambda={format_partition(lam)}: no zero witness"
            )
