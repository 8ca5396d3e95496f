"""
SplitMix64 pseudo-random generator

Fixed, platform-independent stream so verification reports reproduce
bit-for-bit from a seed.
"""
from typing import List, Sequence, TypeVar

T = TypeVar("T")

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    """SplitMix64 generator (Steele, Lea, Flood)"""

    def __init__(self, seed: int = 0):
        self.state = seed & _MASK

    @classmethod
    def for_trial(cls, seed: int, index: int) -> "SplitMix64":
        """Independent stream for one verification trial"""
        mixer = cls(seed)
        for _ in range(index % 4 + 1):
            mixer.next_u64()
        return cls(mixer.next_u64() ^ ((index * _GOLDEN) & _MASK))

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randbelow(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection (no modulo bias)"""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = _MASK - (_MASK + 1) % bound
        while True:
            x = self.next_u64()
            if x <= limit:
                return x % bound

    def randint(self, low: int, high: int) -> int:
        """Uniform integer in [low, high]"""
        return low + self.randbelow(high - low + 1)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision"""
        return (self.next_u64() >> 11) / float(1 << 53)

    def chance(self, p: float) -> bool:
        return self.random() < p

    def choice(self, items: Sequence[T]) -> T:
        return items[self.randbelow(len(items))]

    def shuffle(self, items: List[T]) -> None:
        """In-place Fisher-Yates shuffle"""
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, items: Sequence[T], k: int) -> List[T]:
        pool = list(items)
        self.shuffle(pool)
        return pool[:k]
