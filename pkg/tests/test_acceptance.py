"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line
(run with -s to see them).  Every comparison is exact; no tolerances."""

import json
import time
from fractions import Fraction
from math import factorial

from qstein import cli
from qstein.an_chars import AnCharLabel, an_classes, an_labels, an_value
from qstein.classify import (
    AN_EXPECTED,
    SN_EXPECTED,
    SN_WEAK_EXCEPTIONS,
    SPIN_SMALL_EXPECTED,
    AN_WEAK_EXCEPTIONS,
    classify_an,
    classify_sn,
    classify_spin,
    p_part_exponent,
    primes_upto,
)
from qstein.algebraic import make, rational
from qstein.partitions import (
    class_info,
    conjugate,
    hook_lengths,
    is_all_odd,
    is_p_regular,
    partitions_of,
)
from qstein.sn_chars import mn_value
from qstein.spin_chars import (
    SpinLabel,
    bar_product,
    morris_value,
    schur_value,
    spin_labels,
    strict_parity,
)


def _run(num, name, body):
    try:
        body()
    except BaseException:
        print(f"ACCEPTANCE {num} ({name}): FAIL")
        raise
    print(f"ACCEPTANCE {num} ({name}): PASS")


def _parse(label):
    return tuple(int(x) for x in label.split(":", 1)[0].split(","))


def _sn_sweep():
    found = set()
    for n in range(3, 13):
        for p in primes_upto(n):
            for h in classify_sn(n, p).hits:
                lam = _parse(h.label)
                if lam not in ((n,), (1,) * n):
                    found.add((n, lam, p))
    return found


def test_criterion_1_table_sn():
    def body():
        start = time.time()
        found = _sn_sweep()
        elapsed = time.time() - start
        assert found == SN_EXPECTED
        assert len(SN_EXPECTED) == 13
        assert len({(n, p) for n, _, p in SN_EXPECTED}) == 8
        assert elapsed < 60, f"sweep took {elapsed:.1f}s"

    _run(1, "S_n table reproduction", body)


def test_criterion_2_table_an():
    def body():
        found = set()
        for n in range(3, 13):
            for p in primes_upto(n):
                if p_part_exponent("an", n, p) < 1:
                    continue
                for h in classify_an(n, p).hits:
                    lam = _parse(h.label)
                    if lam != (n,):
                        found.add((n, lam, p))
        assert found == AN_EXPECTED
        assert (9, (7, 2), 3) in found
        assert {(6, (5, 1), 5), (6, (3, 3), 5)} <= found

    _run(2, "A_n table reproduction", body)


def test_criterion_3_spin_classification():
    def body():
        for group in ("sn-tilde-spin", "an-tilde-spin"):
            found = set()
            for n in range(4, 13):
                for p in primes_upto(n):
                    for h in classify_spin(n, p, group).hits:
                        found.add((n, _parse(h.label), p))
            expected = set()
            for n in range(4, 13):
                expected.add((n, (n,), 2))
                expected |= {
                    (n, lam, 2)
                    for lam in SPIN_SMALL_EXPECTED
                    if sum(lam) == n
                }
            assert found == expected, group

    _run(3, "double-cover spin classification", body)


def test_criterion_4_zero_witnesses_for_large_n():
    def body():
        for n in range(9, 13):
            for p in primes_upto(n):
                report = classify_sn(n, p)
                witnessed = {}
                for w in report.witnesses:
                    witnessed[_parse(w.label)] = tuple(
                        int(x) for x in w.cls.split(",")
                    )
                for lam in partitions_of(n):
                    if lam in ((n,), (1,) * n):
                        continue
                    assert lam in witnessed, (n, p, lam)
                    alpha = witnessed[lam]
                    assert is_p_regular(alpha, p)
                    assert mn_value(lam, alpha) == 0

    _run(4, "zero witnesses for 9 <= n <= 12", body)


def test_criterion_5_weak_steinberg_exceptions():
    def body():
        for n in range(3, 13):
            for p in primes_upto(n):
                for h in classify_sn(n, p).hits:
                    lam = _parse(h.label)
                    if lam in ((n,), (1,) * n):
                        continue
                    assert h.weak == ((n, lam, p) not in SN_WEAK_EXCEPTIONS)
                if p_part_exponent("an", n, p) >= 1:
                    for h in classify_an(n, p).hits:
                        lam = _parse(h.label)
                        if lam == (n,):
                            continue
                        assert h.weak == (
                            (n, lam, p) not in AN_WEAK_EXCEPTIONS
                        )
                if n >= 4:
                    for group in ("sn-tilde-spin", "an-tilde-spin"):
                        for h in classify_spin(n, p, group).hits:
                            assert not h.weak

    _run(5, "weak-Steinberg exception lists", body)


def test_criterion_6_orthogonality_suites():
    def body():
        # exact row and column orthogonality for S_n, n <= 10
        for n in range(1, 11):
            parts = partitions_of(n)
            sizes = [class_info(a, n).class_size for a in parts]
            zs = [class_info(a, n).centralizer_order for a in parts]
            rows = {lam: [mn_value(lam, a) for a in parts] for lam in parts}
            for i, lam in enumerate(parts):
                for mu in parts[i:]:
                    total = sum(
                        s * x * y for s, x, y in zip(sizes, rows[lam], rows[mu])
                    )
                    assert total == (factorial(n) if lam == mu else 0)
            for i, alpha in enumerate(parts):
                for j, beta in enumerate(parts[i:], start=i):
                    total = sum(
                        rows[lam][i] * rows[lam][j] for lam in parts
                    )
                    assert total == (zs[i] if alpha == beta else 0)
        # norm-1 inner products over A_n, n <= 8, with exact radicals
        for n in range(3, 9):
            order = rational(factorial(n) // 2)
            for label in an_labels(n):
                total = rational(0)
                for cls in an_classes(n):
                    v = an_value(label, cls)
                    total = total + rational(cls.size) * (v * v.conjugate())
                assert total == order
        # norm-1 inner products for spin characters over the S_n cover, n <= 8
        for n in range(1, 9):
            for label in spin_labels(n):
                total = rational(0)
                for alpha in partitions_of(n):
                    info = class_info(alpha, n)
                    v = schur_value(label, alpha)
                    if not info.splits_in_cover:
                        assert v.is_zero()
                        continue
                    total = total + rational(info.class_size) * (
                        v * v.conjugate()
                    )
                assert total == rational(factorial(n))

    _run(6, "orthogonality suites", body)


def test_criterion_7_dimension_cross_checks():
    def body():
        for n in range(1, 13):
            ident = (1,) * n
            for lam in partitions_of(n):
                hooks = 1
                for row in hook_lengths(lam):
                    for h in row:
                        hooks *= h
                assert mn_value(lam, ident) == factorial(n) // hooks
            for lam in partitions_of(n, "distinct"):
                expected = (
                    2 ** ((n - len(lam)) // 2) * factorial(n) // bar_product(lam)
                )
                assert morris_value(lam, ident) == expected

    _run(7, "dimension cross-checks", body)


def test_criterion_8_golden_values():
    def body():
        # A_5 split-class values (1 +- sqrt 5)/2 on 5-cycles
        classes = {str(c): c for c in an_classes(5)}
        phi = make(Fraction(1, 2), Fraction(1, 2), 0, 5)
        phi_bar = make(Fraction(1, 2), Fraction(-1, 2), 0, 5)
        plus = AnCharLabel((3, 1, 1), "plus")
        minus = AnCharLabel((3, 1, 1), "minus")
        assert an_value(plus, classes["5+"]) == phi
        assert an_value(minus, classes["5+"]) == phi_bar
        assert an_value(plus, classes["5-"]) == phi_bar
        assert an_value(minus, classes["5-"]) == phi
        # one-row spin closed forms for n <= 11
        for n in range(4, 12):
            labels = (
                [SpinLabel((n,), "self")]
                if n % 2
                else [SpinLabel((n,), "plus"), SpinLabel((n,), "minus")]
            )
            for alpha in partitions_of(n):
                for label in labels:
                    got = schur_value(label, alpha)
                    if is_all_odd(alpha):
                        k = len(alpha)
                        exp = (k - 1) // 2 if n % 2 else (k - 2) // 2
                        assert got == rational(2**exp)
                    elif n % 2 == 0 and alpha == (n,):
                        want = make(0, 1, n // 2, n // 2)
                        assert got == (
                            want if label.assoc == "plus" else -want
                        )
                    else:
                        assert got.is_zero()
        # vanishing from a missing 4-hook
        assert mn_value((2, 2), (4,)) == 0
        # Derived independently: the height-2 vertical domino of (3,3) and the
        # height-2 full rim hook of (3,1) give -1; a worked example in
        # circulation reports +1 by missing the second height sign.  The
        # orthogonality suite (criterion 6) pins the S_6 table and confirms -1.
        assert mn_value((3, 3), (4, 2)) == -1

    _run(8, "golden values", body)


def test_criterion_9_cli_determinism(tmp_path):
    def body():
        blobs = []
        for threads in ("1", "4", "8"):
            target = tmp_path / f"verify-{threads}.json"
            code = cli.main(
                [
                    "verify-paper",
                    "--max-n",
                    "12",
                    "--threads",
                    threads,
                    "--format",
                    "json",
                    "--output",
                    str(target),
                ]
            )
            assert code == 0
            blobs.append(target.read_bytes())
        assert blobs[0] == blobs[1] == blobs[2]
        parsed = json.loads(blobs[0])
        assert parsed["pass"] is True and parsed["diffs"] == []

    _run(9, "verify-paper determinism across thread counts", body)
