"""Irreducible character values of S_n via the memoized Murnaghan-Nakayama
recursion, fast-vanishing filters, and full table assembly."""

import csv
import io
import json
import os
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .partitions import (
    Partition,
    CycleType,
    check_partition,
    format_partition,
    m_weight,
    partitions_of,
    rim_hook_removals,
)

DEFAULT_CACHE_SIZE = int(os.environ.get("QSTEIN_CACHE_SIZE", "1000000"))
MAX_TABLE_N = 30


def _build_engine(maxsize):
    @lru_cache(maxsize=maxsize)
    def mn(lam: Partition, alpha: CycleType) -> int:
        if not alpha:
            return 1
        rest = alpha[1:]
        total = 0
        # recurse on the largest part first: large hooks are rare, so the
        # sum stays short, and the (lam, sorted alpha) key is canonical
        for rem in rim_hook_removals(lam, alpha[0]):
            term = mn(rem.result, rest)
            total += term if rem.height % 2 else -term
        return total

    return mn


_mn = _build_engine(DEFAULT_CACHE_SIZE)


def configure_cache(maxsize: int | None) -> None:
    """Replace the shared memo cache (None = unbounded)."""
    global _mn
    _mn = _build_engine(maxsize)


def mn_value(lam: Partition, alpha: CycleType) -> int:
    """Exact character value of S_n at cycle type alpha, row label lam."""
    lam = check_partition(lam)
    alpha = check_partition(alpha)
    if sum(lam) != sum(alpha):
        raise ValueError(f"size mismatch: {lam} vs {alpha}")
    return _mn(lam, tuple(sorted(alpha, reverse=True)))


class Vanishing(Enum):
    ZERO = "zero"
    UNKNOWN = "unknown"


def vanishes_fast(lam: Partition, alpha: CycleType) -> Vanishing:
    """Cheap guaranteed-zero test; never contradicts mn_value.

    ZERO when some part of alpha has no hook of that length in lam, or when
    alpha has two parts, the larger removes uniquely and the remainder has no
    hook of the smaller length.
    """
    lam = check_partition(lam)
    alpha = check_partition(alpha)
    if sum(lam) != sum(alpha):
        raise ValueError(f"size mismatch: {lam} vs {alpha}")
    for part in set(alpha):
        if m_weight(lam, part) == 0:
            return Vanishing.ZERO
    if len(alpha) == 2 and m_weight(lam, alpha[0]) == 1:
        nu = rim_hook_removals(lam, alpha[0])[0]
        if m_weight(nu.result, alpha[1]) == 0:
            return Vanishing.ZERO
    return Vanishing.UNKNOWN


@dataclass(frozen=True)
class CharTable:
    """A labeled character-value table; entries are ints or AlgValues."""

    n: int
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    values: tuple[tuple, ...]

    def entry(self, row: str, col: str):
        return self.values[self.row_labels.index(row)][self.col_labels.index(col)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["label", *self.col_labels])
        for label, row in zip(self.row_labels, self.values):
            writer.writerow([label, *[_cell_text(v) for v in row]])
        return buf.getvalue()

    def to_json(self) -> str:
        rows = [
            {"lambda": _label_json(label), "values": [_cell_json(v) for v in row]}
            for label, row in zip(self.row_labels, self.values)
        ]
        return json.dumps({"n": self.n, "rows": rows})


def _cell_text(v) -> str:
    return str(v)


def _cell_json(v):
    return v.to_json() if hasattr(v, "to_json") else v


def _label_json(label: str):
    # bare partitions become integer arrays; tagged labels stay strings
    if ":" in label:
        return label
    return [int(x) for x in label.split(",")]


def character_table(n: int, limit: int = MAX_TABLE_N) -> CharTable:
    """Full integer character table of S_n in canonical order."""
    if n < 1 or n > limit:
        raise ValueError(f"n must be within 1..{limit}, got {n}")
    labels = partitions_of(n)
    values = tuple(
        tuple(mn_value(lam, alpha) for alpha in labels) for lam in labels
    )
    names = tuple(format_partition(p) for p in labels)
    return CharTable(n, names, names, values)
