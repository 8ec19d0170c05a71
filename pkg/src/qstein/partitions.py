"""Partition and cycle-type combinatorics.

Partitions are plain tuples of weakly decreasing positive integers; the empty
tuple is the (unique) partition of 0.  The same tuples label irreducible
characters and conjugacy classes (cycle types) throughout the package.
"""

from dataclasses import dataclass
from functools import cache
from math import factorial

Partition = tuple[int, ...]
CycleType = tuple[int, ...]

FILTERS = ("all", "distinct", "odd", "distinct_plus", "distinct_minus")


def check_partition(parts: Partition) -> Partition:
    """Validate weakly decreasing positive parts; returns the tuple."""
    parts = tuple(parts)
    for i, p in enumerate(parts):
        if not isinstance(p, int) or p < 1:
            raise ValueError(f"invalid part {p!r} in {parts}")
        if i and parts[i - 1] < p:
            raise ValueError(f"parts not weakly decreasing: {parts}")
    return parts


def parse_partition(text: str) -> Partition:
    """Parse a comma-joined part list like "5,2,1" (empty string -> ())."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    return check_partition(parts)


def format_partition(parts: Partition) -> str:
    return ",".join(str(p) for p in parts)


def is_strict(parts: Partition) -> bool:
    """All parts distinct."""
    return all(a > b for a, b in zip(parts, parts[1:]))


def is_all_odd(parts: Partition) -> bool:
    return all(p % 2 == 1 for p in parts)


def num_even_parts(parts: Partition) -> int:
    return sum(1 for p in parts if p % 2 == 0)


def _descending(n: int, largest: int):
    # classic first-part-bounded enumeration, largest part first
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


@cache
def partitions_of(n: int, kind: str = "all") -> tuple[Partition, ...]:
    """All partitions of n under the given filter, in canonical order.

    Canonical order is ascending: (1^n) first, (n) last.  Filters:
    all, distinct, odd, distinct_plus (even count of even parts),
    distinct_minus (odd count of even parts).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind not in FILTERS:
        raise ValueError(f"unknown filter {kind!r}")
    out = []
    for lam in _descending(n, n):
        if kind in ("distinct", "distinct_plus", "distinct_minus"):
            if not is_strict(lam):
                continue
            if kind == "distinct_plus" and num_even_parts(lam) % 2 != 0:
                continue
            if kind == "distinct_minus" and num_even_parts(lam) % 2 != 1:
                continue
        elif kind == "odd" and not is_all_odd(lam):
            continue
        out.append(lam)
    out.reverse()
    return tuple(out)


def conjugate(lam: Partition) -> Partition:
    """Diagram transpose."""
    if not lam:
        return ()
    cols = [0] * lam[0]
    for p in lam:
        for j in range(p):
            cols[j] += 1
    return tuple(cols)


def hook_lengths(lam: Partition) -> list[list[int]]:
    """Hook length of every cell, row by row."""
    conj = conjugate(lam)
    return [
        [lam[i] - j + conj[j] - i - 1 for j in range(lam[i])]
        for i in range(len(lam))
    ]


def m_weight(lam: Partition, m: int) -> int:
    """Number of hooks of length exactly m (= removable m-rim-hook count)."""
    if m < 1:
        raise ValueError("m must be positive")
    return sum(row.count(m) for row in hook_lengths(lam))


def m_core_weight(lam: Partition, m: int) -> int:
    """Number of m-rim-hooks removable in succession down to the m-core.

    Equals the count of hook lengths divisible by m; zero exactly when
    m_weight is zero, but larger whenever removals expose fresh m-hooks.
    """
    if m < 1:
        raise ValueError("m must be positive")
    return sum(1 for row in hook_lengths(lam) for h in row if h % m == 0)


@dataclass(frozen=True)
class RimHookRemoval:
    result: Partition
    height: int
    length: int


def _beta_set(lam: Partition) -> list[int]:
    # first-column hook lengths, strictly decreasing
    k = len(lam)
    return [lam[i] + k - 1 - i for i in range(k)]


def _partition_from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    k = len(beta)
    parts = [beta[i] - (k - 1 - i) for i in range(k)]
    return tuple(p for p in parts if p > 0)


def rim_hook_removals(lam: Partition, length: int) -> list[RimHookRemoval]:
    """All ways to remove a rim hook of the given length.

    One removal per cell of hook length `length`; empty list when none exists.
    """
    if length < 1:
        raise ValueError("length must be positive")
    beta = _beta_set(lam)
    present = set(beta)
    out = []
    for b in beta:
        nb = b - length
        if nb < 0 or nb in present:
            continue
        leg = sum(1 for c in beta if nb < c < b)
        new_beta = [nb if c == b else c for c in beta]
        out.append(
            RimHookRemoval(_partition_from_beta(new_beta), leg + 1, length)
        )
    return out


@cache
def dimension(lam: Partition) -> int:
    """Degree of the irreducible S_n character labeled by lam (hook formula)."""
    n = sum(lam)
    prod = 1
    for row in hook_lengths(lam):
        for h in row:
            prod *= h
    d, r = divmod(factorial(n), prod)
    assert r == 0
    return d


@dataclass(frozen=True)
class ClassInfo:
    alpha: CycleType
    sign: int
    centralizer_order: int
    class_size: int
    splits_in_an: bool
    splits_in_cover: bool


def centralizer_order(alpha: CycleType) -> int:
    """z_alpha = prod over part sizes i of i^m_i * m_i!."""
    z = 1
    mult: dict[int, int] = {}
    for p in alpha:
        mult[p] = mult.get(p, 0) + 1
    for size, m in mult.items():
        z *= size**m * factorial(m)
    return z


def class_info(alpha: CycleType, n: int) -> ClassInfo:
    """Conjugacy-class statistics and split flags for cycle type alpha in S_n."""
    alpha = check_partition(alpha)
    if sum(alpha) != n:
        raise ValueError(f"{alpha} is not a partition of {n}")
    sign = -1 if (n - len(alpha)) % 2 else 1
    z = centralizer_order(alpha)
    splits_an = sign == 1 and is_strict(alpha) and is_all_odd(alpha)
    # cover classes split exactly on O(n) and D^-(n)
    splits_cover = is_all_odd(alpha) or (
        is_strict(alpha) and num_even_parts(alpha) % 2 == 1
    )
    return ClassInfo(alpha, sign, z, factorial(n) // z, splits_an, splits_cover)


def is_p_regular(alpha: CycleType, p: int) -> bool:
    """True iff the permutation order (lcm of parts) is coprime to p."""
    return all(part % p != 0 for part in alpha)


def fold(mu: Partition) -> Partition:
    """Bend each distinct odd part into a symmetric hook; yields lam = lam'."""
    mu = check_partition(mu)
    if not (is_strict(mu) and is_all_odd(mu)):
        raise ValueError(f"fold requires distinct odd parts, got {mu}")
    cells = set()
    for i, part in enumerate(mu, start=1):
        # part 2m+1 becomes the symmetric hook cornered at diagonal cell (i, i)
        m = (part - 1) // 2
        for j in range(i, i + m + 1):
            cells.add((i, j))
            cells.add((j, i))
    rows: dict[int, int] = {}
    for r, _ in cells:
        rows[r] = rows.get(r, 0) + 1
    return check_partition(tuple(rows[r] for r in sorted(rows)))


def unfold(lam: Partition) -> Partition:
    """Inverse of fold: principal hook lengths of a self-conjugate partition."""
    lam = check_partition(lam)
    if conjugate(lam) != lam:
        raise ValueError(f"unfold requires a self-conjugate partition, got {lam}")
    out = []
    for i in range(len(lam)):
        if lam[i] <= i:
            break
        out.append(2 * (lam[i] - i) - 1)
    return tuple(out)


def epsilon(mu: Partition) -> int:
    """(-1)^(sum m_i) for mu = (2m_1+1, 2m_2+1, ...) with distinct odd parts."""
    mu = check_partition(mu)
    if not (is_strict(mu) and is_all_odd(mu)):
        raise ValueError(f"epsilon requires distinct odd parts, got {mu}")
    return -1 if sum((p - 1) // 2 for p in mu) % 2 else 1
