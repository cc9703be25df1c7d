"""
Set partitions of {1..n}, P-admissible Dunkl multiplicities and the counting
functions p(n), q(n) and B_n.
"""
import logging
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import pandas as pd

from errors import InvalidPartition, NotAdmissible, ParseError

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class SetPartition:
    n: int
    blocks: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidPartition("a partition needs n >= 1")
        seen = [i for block in self.blocks for i in block]
        if any(not block for block in self.blocks):
            raise InvalidPartition("empty block")
        if sorted(seen) != list(range(1, self.n + 1)):
            raise InvalidPartition(f"blocks {self.blocks} do not form a disjoint cover of 1..{self.n}")
        canonical = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        object.__setattr__(self, 'blocks', canonical)

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]], n: Optional[int] = None) -> "SetPartition":
        blocks = tuple(tuple(b) for b in blocks)
        if n is None:
            n = sum(len(b) for b in blocks)
        return cls(n, blocks)

    @property
    def length(self) -> int:
        return len(self.blocks)

    def block(self, j: int) -> Tuple[int, ...]:
        """1-based block access, A_j."""
        if not 1 <= j <= self.length:
            raise InvalidPartition(f"block index {j} out of range 1..{self.length}")
        return self.blocks[j - 1]

    def block_of(self, i: int) -> int:
        for j, b in enumerate(self.blocks, start=1):
            if i in b:
                return j
        raise InvalidPartition(f"index {i} not in 1..{self.n}")

    def __str__(self) -> str:
        return format_partition(self)


@dataclass(frozen=True)
class MultiplicitySeq:
    values: Tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable) -> "MultiplicitySeq":
        return cls(tuple(Fraction(v) for v in values))

    def k(self, i: int) -> Fraction:
        """k_i for 1-based i."""
        return self.values[i - 1]

    @property
    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))


def format_partition(P: SetPartition) -> str:
    return "|".join("{" + ",".join(str(i) for i in b) + "}" for b in P.blocks)


_BLOCK = re.compile(r'\{([^{}]*)\}')


def parse_partition(text: str, n: Optional[int] = None) -> SetPartition:
    """Parse "{1}|{2,3,4}|{5,6,7}"."""
    s = re.sub(r'\s+', '', text)
    parts = s.split('|')
    blocks = []
    for part in parts:
        m = _BLOCK.fullmatch(part)
        if not m or not m.group(1):
            raise ParseError(f"bad block {part!r} in partition {text!r}")
        try:
            blocks.append(tuple(int(t) for t in m.group(1).split(',')))
        except ValueError:
            raise ParseError(f"bad block {part!r} in partition {text!r}") from None
    try:
        return SetPartition.of(blocks, n)
    except InvalidPartition as e:
        raise InvalidPartition(f"{text!r}: {e}") from None


def whole(n: int) -> SetPartition:
    return SetPartition(n, (tuple(range(1, n + 1)),))


def all_singletons(n: int) -> SetPartition:
    return SetPartition(n, tuple((i,) for i in range(1, n + 1)))


def is_all_singletons(P: SetPartition) -> bool:
    return P.length == P.n


def partition_from_shape(sizes: Sequence[int]) -> SetPartition:
    """Consecutive blocks with the given sizes, e.g. (1, 3, 3) -> {1}|{2,3,4}|{5,6,7}."""
    blocks, start = [], 1
    for s in sizes:
        if s < 1:
            raise InvalidPartition(f"block size {s} < 1")
        blocks.append(tuple(range(start, start + s)))
        start += s
    return SetPartition.of(blocks)


def _alphas(P: SetPartition, alphas: Optional[Sequence[int]]) -> List[int]:
    if alphas is None:
        return [b[0] for b in P.blocks]
    alphas = list(alphas)
    if len(alphas) != P.length:
        raise InvalidPartition(f"need one alpha per block, got {len(alphas)} for {P.length} blocks")
    for j, (a, b) in enumerate(zip(alphas, P.blocks), start=1):
        if a not in b:
            raise InvalidPartition(f"alpha {a} is not in block A{j} = {set(b)}")
    return alphas


def canonical_multiplicities(P: SetPartition, alphas: Optional[Sequence[int]] = None) -> MultiplicitySeq:
    """k_alpha = 0 in each block, every other k_i = -1/2."""
    zeros = set(_alphas(P, alphas))
    return MultiplicitySeq(tuple(Fraction(0) if i in zeros else -HALF for i in range(1, P.n + 1)))


def uniform_multiplicities(P: SetPartition) -> MultiplicitySeq:
    values = [Fraction(0)] * P.n
    for b in P.blocks:
        for i in b:
            values[i - 1] = -HALF + Fraction(1, 2 * len(b))
    return MultiplicitySeq(tuple(values))


def multiplicities_for(P: SetPartition, mode: str = "canonical",
                       alphas: Optional[Sequence[int]] = None) -> MultiplicitySeq:
    if mode == "canonical":
        return canonical_multiplicities(P, alphas)
    if mode == "uniform":
        return uniform_multiplicities(P)
    raise ValueError(f"unknown multiplicity mode {mode!r}")


def is_admissible(P: SetPartition, k: MultiplicitySeq) -> bool:
    if len(k.values) != P.n:
        return False
    if any(v > 0 for v in k.values):
        return False
    for b in P.blocks:
        if 2 * sum(k.k(i) for i in b) != 1 - len(b):
            return False
        if sum(1 for i in b if k.k(i) == 0) > 1:
            return False
    return True


def check_admissible(P: SetPartition, k: MultiplicitySeq) -> None:
    if not is_admissible(P, k):
        raise NotAdmissible(f"multiplicities {[str(v) for v in k.values]} are not admissible for {P}")


def dunkl_weight(P: SetPartition) -> Fraction:
    """kappa = (l - n) / 2."""
    return Fraction(P.length - P.n, 2)


def is_odd_partition(P: SetPartition) -> bool:
    return all(len(b) % 2 for b in P.blocks)


def refine(P: SetPartition, j: int, i1: int, i2: int) -> SetPartition:
    """Split i1 and i2 off the block A_j as singletons."""
    block = P.block(j)
    if len(block) <= 2:
        raise InvalidPartition(f"block A{j} = {set(block)} has size {len(block)} <= 2")
    if i1 == i2 or i1 not in block or i2 not in block:
        raise InvalidPartition(f"({i1}, {i2}) is not a pair of distinct elements of A{j} = {set(block)}")
    rest = tuple(i for i in block if i not in (i1, i2))
    others = [b for b in P.blocks if b != block]
    return SetPartition(P.n, tuple(others) + ((i1,), (i2,), rest))


def shape(P: SetPartition) -> Tuple[int, ...]:
    """Block sizes in decreasing order."""
    return tuple(sorted((len(b) for b in P.blocks), reverse=True))


def equivalent(P: SetPartition, Q: SetPartition) -> bool:
    return P.n == Q.n and Counter(shape(P)) == Counter(shape(Q))


# Counting

@lru_cache(maxsize=None)
def bell(n: int) -> int:
    """Bell number B_n from the Bell triangle."""
    if n < 0:
        raise ValueError("n must be >= 0")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


@lru_cache(maxsize=None)
def odd_partition_count(n: int) -> int:
    """q(n): partitions of n into odd parts."""
    ways = [1] + [0] * n
    for part in range(1, n + 1, 2):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


def integer_partitions(n: int, largest: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of n as non-increasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


def odd_integer_partitions(n: int) -> List[Tuple[int, ...]]:
    return [p for p in integer_partitions(n) if all(x % 2 for x in p)]


def enumerate_set_partitions(n: int) -> List[SetPartition]:
    """All set partitions of {1..n}, in restricted-growth order."""
    out = []

    def grow(i: int, blocks: List[List[int]]) -> None:
        if i > n:
            out.append(SetPartition.of(blocks, n))
            return
        for b in blocks:
            b.append(i)
            grow(i + 1, blocks)
            b.pop()
        blocks.append([i])
        grow(i + 1, blocks)
        blocks.pop()

    grow(1, [])
    logger.debug("enumerated %d set partitions of %d", len(out), n)
    return out


def counting_table(ns: Iterable[int]) -> pd.DataFrame:
    rows = [
        {"n": n, "p(n)": partition_count(n), "q(n)": odd_partition_count(n),
         "B_n": bell(n), "q(n)-1": odd_partition_count(n) - 1}
        for n in ns
    ]
    return pd.DataFrame(rows, columns=["n", "p(n)", "q(n)", "B_n", "q(n)-1"])
