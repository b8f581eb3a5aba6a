"""Integer partitions and standard Young tableau counting.

Partitions are plain tuples of weakly decreasing non-negative integers.
The canonical form carries no trailing zeros; formulas that index parts up
to a declared length work against the zero-padded view returned by `pad`.
All arithmetic is exact.
"""

from math import factorial

Partition = tuple[int, ...]

DEFAULT_BRUTE_CAP = 12


def canonical(parts) -> Partition:
    """Validate weak decrease and non-negativity, strip trailing zeros."""
    lam = tuple(int(p) for p in parts)
    if lam and lam[-1] < 0:
        raise ValueError(f"negative part in {lam}")
    for a, b in zip(lam, lam[1:]):
        if a < b:
            raise ValueError(f"parts not weakly decreasing: {lam}")
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    return lam


def pad(lam, length: int) -> Partition:
    """Zero-padded view with exactly `length` parts."""
    lam = canonical(lam)
    if len(lam) > length:
        raise ValueError(f"{lam} has more than {length} nonzero parts")
    return lam + (0,) * (length - len(lam))


def weight(lam) -> int:
    return sum(lam)


def conjugate(lam) -> Partition:
    """Transpose of the Young diagram."""
    lam = canonical(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def enumerate_partitions(total: int, max_parts: int) -> list[Partition]:
    """All partitions of `total` into at most `max_parts` parts.

    Reverse-lexicographic order: (total,) first when it fits, the flattest
    admissible shape last.  enumerate_partitions(0, k) == [()] for any k.
    """
    if total < 0:
        raise ValueError("total must be non-negative")
    if max_parts < 0:
        raise ValueError("max_parts must be non-negative")
    out: list[Partition] = []
    prefix: list[int] = []

    def descend(remaining: int, largest: int, slots: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if slots == 0:
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            descend(remaining - part, part, slots - 1)
            prefix.pop()

    descend(total, total, max_parts)
    return out


def add_rectangle(lam, height: int, width: int) -> Partition:
    """Add `width` cells to each of the first `height` rows.

    `lam` must fit in `height` rows; the result is the partition
    (lam_1 + width, ..., lam_height + width), canonicalized.
    """
    if height < 0 or width < 0:
        raise ValueError("rectangle sides must be non-negative")
    padded = pad(lam, height)
    return canonical(tuple(part + width for part in padded))


def syt_count_hook(lam) -> int:
    """Number of standard Young tableaux of shape `lam`.

    Closed product form: |lam|! times the product of part differences
    (lam_i - lam_j + j - i) over i < j, divided by the product of
    (lam_i + e - i)! where e is the number of parts.  The value does not
    change when zero parts are appended; the empty shape counts 1.
    """
    lam = canonical(lam)
    e = len(lam)
    num = factorial(weight(lam))
    for i in range(e):
        for j in range(i + 1, e):
            num *= lam[i] - lam[j] + j - i
    den = 1
    for i in range(e):
        den *= factorial(lam[i] + e - 1 - i)
    count, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"tableau count for {lam} did not come out integral")
    return count


def syt_count_bruteforce(lam, cap: int = DEFAULT_BRUTE_CAP) -> int:
    """Count standard Young tableaux by exhaustive placement of 1..|lam|.

    Places each value in turn at every cell that keeps rows and columns
    strictly increasing, backtracking over all choices.  Independent of the
    product formula, and exponential in spirit, so the weight is capped.
    """
    lam = canonical(lam)
    n = weight(lam)
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if n > cap:
        raise ValueError(f"|lam| = {n} exceeds brute-force cap {cap}")
    rows = len(lam)
    filled = [0] * rows

    def place(value: int) -> int:
        if value > n:
            return 1
        total = 0
        for i in range(rows):
            # a new cell at (i, filled[i]) is admissible iff the row still has
            # room and the cell above it is already occupied
            if filled[i] < lam[i] and (i == 0 or filled[i - 1] > filled[i]):
                filled[i] += 1
                total += place(value + 1)
                filled[i] -= 1
        return total

    return place(1)
