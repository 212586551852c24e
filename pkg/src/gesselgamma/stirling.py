"""Stirling permutations of a multiset, their enumeration and statistics.

A word w over {1..n} with the multiplicities of a multiset m is a Stirling
permutation when every element lying between two equal values is at least
as large: if w_i = w_j and i < k < j then w_k >= w_i.

Statistics use the boundary convention sigma_0 = sigma_{K+1} = 0, so the
first position of a nonempty word is always an ascent top and the last is
always a descent top.  All position indices in this module are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import DomainError, ParseError
from .multiset import Multiset


@dataclass(frozen=True, slots=True)
class StirlingPermutation:
    """A Stirling permutation: the word together with its ground multiset.

    The bare constructor trusts its input (enumeration produces words that
    are valid by construction); use :meth:`from_word` to validate.
    """

    word: tuple[int, ...]
    multiset: Multiset

    @classmethod
    def from_word(cls, word, multiset: Multiset | None = None) -> StirlingPermutation:
        word = tuple(word)
        if multiset is None:
            multiset = _infer_multiset(word)
        if not is_stirling(word, multiset):
            raise DomainError(f"{word!r} is not a Stirling permutation of {{{multiset}}}")
        return cls(word, multiset)

    def reverse(self) -> StirlingPermutation:
        """The reversed word, which is again a Stirling permutation."""
        return StirlingPermutation(self.word[::-1], self.multiset)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.word)

    def __len__(self) -> int:
        return len(self.word)


def _infer_multiset(word: tuple[int, ...]) -> Multiset:
    if not word:
        return Multiset(())
    n = max(word)
    counts = [0] * n
    for v in word:
        if not isinstance(v, int) or v < 1:
            raise DomainError(f"word values must be positive integers, got {v!r}")
        counts[v - 1] += 1
    if any(c == 0 for c in counts):
        missing = [i + 1 for i, c in enumerate(counts) if c == 0]
        raise DomainError(f"word {word!r} misses values {missing}; every value 1..n must occur")
    return Multiset(tuple(counts))


def parse_word(text: str) -> tuple[int, ...]:
    """Parse a permutation word.

    Accepts space- or comma-separated decimal values; as a convenience a
    bare digit string like ``"1221"`` is read one value per character.
    """
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        parts = [p.strip() for p in text.split(",") if p.strip()]
    elif " " in text:
        parts = text.split()
    elif text.isdigit():
        parts = list(text)
    else:
        parts = [text]
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ParseError(f"bad permutation word {text!r}: {exc}") from None


def is_stirling(word, multiset: Multiset) -> bool:
    """Check multiplicities and the Stirling condition.

    The condition for value v only needs checking between the first and
    last occurrence of v, which covers every pair of equal letters.
    """
    word = tuple(word)
    if len(word) != multiset.K:
        return False
    counts = [0] * multiset.n
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for pos, v in enumerate(word):
        if not 1 <= v <= multiset.n:
            return False
        counts[v - 1] += 1
        first.setdefault(v, pos)
        last[v] = pos
    if tuple(counts) != multiset.mults:
        return False
    for v in first:
        for k in range(first[v] + 1, last[v]):
            if word[k] < v:
                return False
    return True


def count_stirling(multiset: Multiset) -> int:
    """|Q_m| by the insertion product: prod_{i>=2} (1 + k_1 + ... + k_{i-1})."""
    total = 1
    prefix = 0
    for i, k in enumerate(multiset.mults):
        if i > 0:
            total *= prefix + 1
        prefix += k
    return total


def enumerate_stirling(multiset: Multiset) -> Iterator[StirlingPermutation]:
    """All Stirling permutations of the multiset, in lexicographic order.

    Words are built by inserting the block n^kn into each of the K'+1 gaps
    of every Stirling permutation of {1^k1, ..., (n-1)^k(n-1)}; distinct
    gaps give distinct words, so this realises the counting product.
    """
    words = [()]
    for value, k in enumerate(multiset.mults, start=1):
        block = (value,) * k
        words = [w[:gap] + block + w[gap:] for w in words for gap in range(len(w) + 1)]
    words.sort()
    for w in words:
        yield StirlingPermutation(w, multiset)


@dataclass(frozen=True)
class StatProfile:
    """All position statistics of one Stirling permutation.

    Positions are 1-based.  An index i is an ascent when sigma_{i-1} <
    sigma_i, a descent when sigma_i > sigma_{i+1} and a plateau when
    sigma_i = sigma_{i+1}, under the zero boundary convention.  A plateau
    is keyed by j when its right copy is the j-th occurrence of its value.
    A descent at i is a double fall when the position before the first
    occurrence of sigma_i is itself a descent.  A plateau is an ascent- or
    descent-plateau according to the step that enters it.
    """

    asc: int
    des: int
    plat: int
    plat_by_j: dict[int, int]
    dfall: int
    aplat: int
    dplat: int
    ascent_positions: frozenset[int]
    descent_positions: frozenset[int]
    plateau_positions: frozenset[int]
    dfall_positions: frozenset[int]
    aplat_positions: frozenset[int]
    dplat_positions: frozenset[int]

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.asc, self.des, self.plat)


def statistics(s: StirlingPermutation) -> StatProfile:
    w = s.word
    K = len(w)

    def sigma(i: int) -> int:
        return w[i - 1] if 1 <= i <= K else 0

    occ_index = [0] * K  # 1-based occurrence rank of each position's value
    first_occ: dict[int, int] = {}
    seen: dict[int, int] = {}
    for pos in range(1, K + 1):
        v = w[pos - 1]
        seen[v] = seen.get(v, 0) + 1
        occ_index[pos - 1] = seen[v]
        if seen[v] == 1:
            first_occ[v] = pos

    ascents = frozenset(i for i in range(1, K + 1) if sigma(i - 1) < sigma(i))
    descents = frozenset(i for i in range(1, K + 1) if sigma(i) > sigma(i + 1))
    plateaus = frozenset(i for i in range(1, K + 1) if sigma(i) == sigma(i + 1))

    plat_by_j: dict[int, int] = {}
    aplat_pos = set()
    dplat_pos = set()
    for i in sorted(plateaus):
        j = occ_index[i]  # occurrence rank of the right copy at position i+1
        plat_by_j[j] = plat_by_j.get(j, 0) + 1
        if sigma(i - 1) < sigma(i):
            aplat_pos.add(i)
        elif sigma(i - 1) > sigma(i):
            dplat_pos.add(i)

    dfall_pos = frozenset(
        i for i in descents if first_occ[sigma(i)] - 1 in descents
    )

    return StatProfile(
        asc=len(ascents),
        des=len(descents),
        plat=len(plateaus),
        plat_by_j=plat_by_j,
        dfall=len(dfall_pos),
        aplat=len(aplat_pos),
        dplat=len(dplat_pos),
        ascent_positions=ascents,
        descent_positions=descents,
        plateau_positions=plateaus,
        dfall_positions=dfall_pos,
        aplat_positions=frozenset(aplat_pos),
        dplat_positions=frozenset(dplat_pos),
    )
