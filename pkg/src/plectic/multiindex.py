"""Strictly increasing multi-indices and their combinatorics.

Multi-indices are 1-based tuples (i_1 < ... < i_p) with i_p <= n.  The
canonical enumeration of all length-p multi-indices is lexicographic, which
fixes the coordinate order of every dense alternating-form representation
in the package.
"""

from __future__ import annotations

import itertools
from functools import lru_cache, total_ordering


@total_ordering
class MultiIndex:
    """An increasing index tuple into coordinates 1..n."""

    __slots__ = ("indices", "n")

    def __init__(self, indices, n: int):
        idx = tuple(int(i) for i in indices)
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise ValueError(f"indices not strictly increasing: {idx}")
        if idx and (idx[0] < 1 or idx[-1] > n):
            raise ValueError(f"indices {idx} out of range 1..{n}")
        if len(idx) > n:
            raise ValueError(f"length {len(idx)} exceeds dimension {n}")
        object.__setattr__(self, "indices", idx)
        object.__setattr__(self, "n", int(n))

    def __setattr__(self, name, value):
        raise AttributeError("MultiIndex is immutable")

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __getitem__(self, i):
        return self.indices[i]

    def __eq__(self, other):
        if isinstance(other, MultiIndex):
            return self.indices == other.indices and self.n == other.n
        if isinstance(other, tuple):
            return self.indices == other
        return NotImplemented

    def __lt__(self, other):
        other_idx = other.indices if isinstance(other, MultiIndex) else tuple(other)
        return self.indices < other_idx

    def __hash__(self):
        return hash(self.indices)

    def __repr__(self):
        return f"MultiIndex({self.indices}, n={self.n})"


@lru_cache(maxsize=None)
def index_tuples(n: int, p: int) -> tuple:
    """All increasing p-tuples in 1..n, lexicographic."""
    return tuple(itertools.combinations(range(1, n + 1), p))


@lru_cache(maxsize=None)
def index_rank(n: int, p: int) -> dict:
    """tuple -> its position in index_tuples(n, p)."""
    return {t: i for i, t in enumerate(index_tuples(n, p))}


def sort_with_sign(indices):
    """Sort an index sequence, tracking the permutation sign.

    Returns (sorted_tuple, sign); sign is 0 if any index repeats.
    """
    seq = list(indices)
    sign = 1
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and seq[j - 1] == seq[j]:
            return None, 0
    return tuple(seq), sign


def merge_sign(left, right):
    """Concatenate two increasing tuples, as in dx^L ∧ dx^R.

    Returns (merged_tuple, sign), sign 0 when the tuples intersect.
    """
    merged, sign = sort_with_sign(tuple(left) + tuple(right))
    return merged, sign


def removal_sign(indices, pos: int) -> int:
    """Sign (-1)^pos of dropping position pos (0-based) from an index tuple."""
    return -1 if pos % 2 else 1


def complement_tuple(indices, n: int) -> tuple:
    inside = set(indices)
    return tuple(i for i in range(1, n + 1) if i not in inside)
