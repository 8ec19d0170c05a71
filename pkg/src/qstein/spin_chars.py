"""Spin character values of the double covers of S_n and A_n.

Bars are the strict-partition analogue of rim hooks; their legs are read off
the shift-symmetric diagram, built explicitly.  Values are reported at the
distinguished preimage of each cycle type, with the central element acting
by -1 (the value at the other preimage is the negation).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .algebraic import ZERO, AlgValue, make, scale
from .partitions import (
    CycleType,
    check_partition,
    conjugate,
    format_partition,
    is_all_odd,
    is_p_regular,
    is_strict,
    num_even_parts,
    partitions_of,
)
from .sn_chars import DEFAULT_CACHE_SIZE, CharTable

StrictPartition = tuple[int, ...]


def check_strict(lam) -> StrictPartition:
    lam = check_partition(lam)
    if not is_strict(lam):
        raise ValueError(f"parts must be strictly decreasing, got {lam}")
    return lam


def strict_parity(lam: StrictPartition) -> int:
    """0 for an even number of even parts (D+), 1 for odd (D-)."""
    return num_even_parts(lam) % 2


def _ss_rows(lam: StrictPartition) -> tuple[int, ...]:
    # shift-symmetric diagram: shifted rows glued to their reflection
    if not lam:
        return ()
    rows = [lam[i] + i + 1 for i in range(len(lam))]
    for r in range(len(lam) + 1, lam[0] + 1):
        rows.append(sum(1 for j in range(len(lam)) if lam[j] + j >= r))
    return tuple(rows)


def bar_lengths(lam: StrictPartition) -> list[list[int]]:
    """Per-row bar lengths, largest first (hooks of the shifted rows)."""
    lam = check_strict(lam)
    out = []
    for i, part in enumerate(lam):
        gaps = {part - q for q in lam[i + 1 :]}
        row = {x for x in range(1, part + 1) if x not in gaps}
        row |= {part + q for q in lam[i + 1 :]}
        out.append(sorted(row, reverse=True))
    return out


def _bar_leg(lam: StrictPartition, row: int, length: int) -> int:
    # leg of the unique length-`length` hook of SS(lam) in shifted row `row`
    ss = _ss_rows(lam)
    cols = conjugate(ss)
    i = row + 1
    for j in range(i + 1, ss[row] + 1):
        if ss[row] - j + cols[j - 1] - i + 1 == length:
            return cols[j - 1] - i
    raise AssertionError(f"no {length}-bar in row {row} of {lam}")


@dataclass(frozen=True)
class BarRemoval:
    result: StrictPartition
    leg: int
    doubling: int  # 1 exactly on a D+ -> D- transition
    length: int


def bar_removals(lam: StrictPartition, length: int) -> list[BarRemoval]:
    """All ways to remove a bar of the given length (empty when none)."""
    lam = check_strict(lam)
    if length < 1:
        raise ValueError("length must be positive")
    parts = list(lam)
    present = set(parts)
    out = []
    for idx, part in enumerate(parts):
        result = None
        v = part - length
        if v == 0:
            result = tuple(parts[:idx] + parts[idx + 1 :])
        elif v > 0 and v not in present:
            result = tuple(sorted(parts[:idx] + [v] + parts[idx + 1 :], reverse=True))
        else:
            for j in range(idx + 1, len(parts)):
                if part + parts[j] == length:
                    result = tuple(
                        parts[:idx] + parts[idx + 1 : j] + parts[j + 1 :]
                    )
                    break
        if result is None:
            continue
        doubling = 1 if strict_parity(result) - strict_parity(lam) == 1 else 0
        out.append(BarRemoval(result, _bar_leg(lam, idx, length), doubling, length))
    return out


def bar_product(lam: StrictPartition) -> int:
    total = 1
    for row in bar_lengths(lam):
        for b in row:
            total *= b
    return total


def spin_dimension(lam: StrictPartition) -> int:
    """Degree 2^floor((n - len(lam)) / 2) * n! / (product of bar lengths)."""
    lam = check_strict(lam)
    n = sum(lam)
    d, r = divmod(2 ** ((n - len(lam)) // 2) * factorial(n), bar_product(lam))
    assert r == 0
    return d


def _build_morris(maxsize):
    @lru_cache(maxsize=maxsize)
    def rec(lam: StrictPartition, alpha: CycleType) -> int:
        if not alpha:
            return 1
        total = 0
        for b in bar_removals(lam, alpha[0]):
            term = rec(b.result, alpha[1:]) * (2 if b.doubling else 1)
            total += term if b.leg % 2 == 0 else -term
        return total

    return rec


_morris = _build_morris(DEFAULT_CACHE_SIZE)


def configure_cache(maxsize: int | None) -> None:
    """Replace the shared Morris memo cache (None = unbounded)."""
    global _morris
    _morris = _build_morris(maxsize)


def morris_value(lam: StrictPartition, alpha: CycleType) -> int:
    """Spin character value at an all-odd cycle type, by bar recursion."""
    lam = check_strict(lam)
    alpha = check_partition(alpha)
    if not is_all_odd(alpha):
        raise ValueError(f"cycle type must have odd parts only, got {alpha}")
    if sum(lam) != sum(alpha):
        raise ValueError(f"size mismatch: {lam} vs {alpha}")
    return _morris(lam, tuple(sorted(alpha, reverse=True)))


@dataclass(frozen=True)
class SpinLabel:
    lam: StrictPartition
    assoc: str  # self | plus | minus

    def __post_init__(self):
        check_strict(self.lam)
        want_self = strict_parity(self.lam) == 0
        if want_self != (self.assoc == "self"):
            raise ValueError(f"associate tag {self.assoc!r} invalid for {self.lam}")

    def __str__(self) -> str:
        suffix = {"self": "self", "plus": "+", "minus": "-"}[self.assoc]
        return f"{format_partition(self.lam)}:{suffix}"


def spin_labels(n: int) -> tuple[SpinLabel, ...]:
    out = []
    for lam in partitions_of(n, "distinct"):
        if strict_parity(lam) == 0:
            out.append(SpinLabel(lam, "self"))
        else:
            out.append(SpinLabel(lam, "plus"))
            out.append(SpinLabel(lam, "minus"))
    return tuple(out)


def schur_value(label: SpinLabel, alpha: CycleType) -> AlgValue:
    """Spin character value at the distinguished preimage of cycle type alpha.

    All-odd types go through the bar recursion; every other type vanishes
    except alpha equal to the label's own partition in D-, which takes
    i^((n-len+1)/2) * sqrt(prod(parts)/2), negated for the minus associate.
    """
    lam = label.lam
    alpha = check_partition(alpha)
    n = sum(lam)
    if n != sum(alpha):
        raise ValueError(f"size mismatch: {label} vs {alpha}")
    if is_all_odd(alpha):
        return make(morris_value(lam, alpha))
    if alpha == lam and strict_parity(lam) == 1:
        value = make(0, 1, (n - len(lam) + 1) // 2, prod(lam) // 2)
        return value if label.assoc == "plus" else -value
    return ZERO


@dataclass(frozen=True)
class AnSpinLabel:
    lam: StrictPartition
    variant: str  # down | plus | minus

    def __post_init__(self):
        check_strict(self.lam)
        want_down = strict_parity(self.lam) == 1
        if want_down != (self.variant == "down"):
            raise ValueError(f"variant {self.variant!r} invalid for {self.lam}")

    def __str__(self) -> str:
        suffix = {"down": "down", "plus": "+", "minus": "-"}[self.variant]
        return f"{format_partition(self.lam)}:{suffix}"


def an_spin_labels(n: int) -> tuple[AnSpinLabel, ...]:
    out = []
    for lam in partitions_of(n, "distinct"):
        if strict_parity(lam) == 1:
            out.append(AnSpinLabel(lam, "down"))
        else:
            out.append(AnSpinLabel(lam, "plus"))
            out.append(AnSpinLabel(lam, "minus"))
    return tuple(out)


def an_spin_value(
    label: AnSpinLabel, alpha: CycleType, delta_sign: int = 1
) -> AlgValue:
    """Value of the restricted spin character on an even cycle type.

    For a D- label the two associates restrict to the same character.  For a
    D+ label the value is half of the cover value, corrected at alpha equal
    to the label's partition by the diagonal term delta_sign * i^((n-len)/2)
    * sqrt(prod(parts)), added for the plus variant and subtracted for minus.
    """
    lam = label.lam
    alpha = check_partition(alpha)
    n = sum(lam)
    if n != sum(alpha):
        raise ValueError(f"size mismatch: {label} vs {alpha}")
    if (n - len(alpha)) % 2 != 0:
        raise ValueError(f"{alpha} is an odd class")
    if delta_sign not in (1, -1):
        raise ValueError("delta_sign must be +1 or -1")
    if label.variant == "down":
        return schur_value(SpinLabel(lam, "plus"), alpha)
    base = schur_value(SpinLabel(lam, "self"), alpha)
    if alpha == lam:
        delta = make(0, delta_sign, (n - len(lam)) // 2, prod(lam))
        base = base + (delta if label.variant == "plus" else -delta)
    return scale(base, Fraction(1, 2))


def cover_p_regular(alpha: CycleType, p: int) -> bool:
    """True iff some preimage of the class has order coprime to p.

    For odd p the preimage orders differ from the base order only by a factor
    of 2; for p = 2 a 2-regular preimage exists exactly when the base element
    is 2-regular.  Either way this reduces to the base cycle type.
    """
    return is_p_regular(alpha, p)


def spin_character_table(n: int) -> CharTable:
    """Spin values of the S_n cover at distinguished preimages, all types."""
    labels = spin_labels(n)
    classes = partitions_of(n)
    values = tuple(
        tuple(schur_value(label, alpha) for alpha in classes) for label in labels
    )
    return CharTable(
        n,
        tuple(str(label) for label in labels),
        tuple(format_partition(alpha) for alpha in classes),
        values,
    )


def an_spin_character_table(n: int) -> CharTable:
    """Restricted spin values on even types (plus branch of the diagonal)."""
    labels = an_spin_labels(n)
    classes = tuple(
        alpha for alpha in partitions_of(n) if (n - len(alpha)) % 2 == 0
    )
    values = tuple(
        tuple(an_spin_value(label, alpha, 1) for alpha in classes)
        for label in labels
    )
    return CharTable(
        n,
        tuple(str(label) for label in labels),
        tuple(format_partition(alpha) for alpha in classes),
        values,
    )
