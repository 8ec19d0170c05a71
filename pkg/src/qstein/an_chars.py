"""Conjugacy classes and exact irreducible character values of A_n.

Irrational values occur only on split classes whose cycle type folds onto a
self-conjugate row label; everything else is half (or all) of an S_n value.
"""

from dataclasses import dataclass
from fractions import Fraction

from .algebraic import AlgValue, make
from .partitions import (
    CycleType,
    Partition,
    centralizer_order,
    check_partition,
    class_info,
    conjugate,
    epsilon,
    fold,
    format_partition,
    is_all_odd,
    is_strict,
    partitions_of,
)
from .sn_chars import CharTable, mn_value


@dataclass(frozen=True)
class AnClass:
    alpha: CycleType
    tag: str  # plain | plus | minus
    size: int

    def __str__(self) -> str:
        suffix = {"plain": "", "plus": "+", "minus": "-"}[self.tag]
        return format_partition(self.alpha) + suffix


@dataclass(frozen=True)
class AnCharLabel:
    lam: Partition
    variant: str  # down | plus | minus

    def __post_init__(self):
        check_partition(self.lam)
        self_conj = conjugate(self.lam) == self.lam
        if self_conj == (self.variant == "down"):
            raise ValueError(f"variant {self.variant!r} invalid for {self.lam}")

    def __str__(self) -> str:
        suffix = {"down": "down", "plus": "+", "minus": "-"}[self.variant]
        return f"{format_partition(self.lam)}:{suffix}"


def an_classes(n: int) -> tuple[AnClass, ...]:
    """All A_n classes in canonical order; split types expand to +/-."""
    out = []
    for alpha in partitions_of(n):
        info = class_info(alpha, n)
        if info.sign != 1:
            continue
        if info.splits_in_an:
            half = info.class_size // 2
            out.append(AnClass(alpha, "plus", half))
            out.append(AnClass(alpha, "minus", half))
        else:
            out.append(AnClass(alpha, "plain", info.class_size))
    return tuple(out)


def an_labels(n: int) -> tuple[AnCharLabel, ...]:
    """Canonical irreducible labels; conjugate pairs reported once, under the
    lexicographically larger partition."""
    out = []
    for lam in partitions_of(n):
        lc = conjugate(lam)
        if lam == lc:
            out.append(AnCharLabel(lam, "plus"))
            out.append(AnCharLabel(lam, "minus"))
        elif lam > lc:
            out.append(AnCharLabel(lam, "down"))
    return tuple(out)


def canonical_down(lam: Partition) -> Partition:
    """The representative of {lam, lam'} used for down labels."""
    return max(lam, conjugate(lam))


def _is_fold_class(lam: Partition, alpha: CycleType) -> bool:
    return is_strict(alpha) and is_all_odd(alpha) and fold(alpha) == lam


def an_value(label: AnCharLabel, cls: AnClass) -> AlgValue:
    """Exact character value of the labeled A_n irreducible on the class."""
    lam, alpha = check_partition(label.lam), check_partition(cls.alpha)
    if sum(lam) != sum(alpha):
        raise ValueError(f"size mismatch: {label} vs {cls}")
    if label.variant == "down":
        return make(mn_value(lam, alpha))
    if not _is_fold_class(lam, alpha):
        return make(Fraction(mn_value(lam, alpha), 2))
    if cls.tag == "plain":
        raise AssertionError(f"fold class {alpha} must be split")
    # (eps +- sqrt(eps * z_alpha)) / 2, the plus branch on matching tags
    eps = epsilon(alpha)
    z = centralizer_order(alpha)
    plus_branch = (label.variant == "plus") == (cls.tag == "plus")
    b = Fraction(1, 2) if plus_branch else Fraction(-1, 2)
    return make(Fraction(eps, 2), b, 0 if eps == 1 else 1, z)


def an_nonzero(label: AnCharLabel, cls: AnClass) -> bool:
    """True iff an_value(label, cls) is nonzero (no radical ever cancels)."""
    lam, alpha = check_partition(label.lam), check_partition(cls.alpha)
    if sum(lam) != sum(alpha):
        raise ValueError(f"size mismatch: {label} vs {cls}")
    if label.variant != "down" and _is_fold_class(lam, alpha):
        return True
    return mn_value(lam, alpha) != 0


def an_character_table(n: int) -> CharTable:
    """Exact A_n character table with AlgValue entries."""
    labels = an_labels(n)
    classes = an_classes(n)
    values = tuple(
        tuple(an_value(label, cls) for cls in classes) for label in labels
    )
    return CharTable(
        n,
        tuple(str(label) for label in labels),
        tuple(str(cls) for cls in classes),
        values,
    )
