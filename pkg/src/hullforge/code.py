"""The [n,k,d] quaternary linear code abstraction.

Distance and weight data come from exhaustive codeword enumeration, capped by
dimension (DEFAULT_ENUM_CAP).  Generators are kept in RREF so equality checks
and serialization are deterministic; column order is never changed.
"""

from itertools import product

import numpy as np

from . import gf4
from .exceptions import (
    AllCoordinatesError,
    BudgetExceededError,
    ZeroMatrixError,
)

DEFAULT_ENUM_CAP = 14

# rows handled in one dense numpy block during enumeration; the rest are
# looped over as prefixes (4^(k - _BLOCK_K) iterations)
_BLOCK_K = 9


class WeightDistribution:
    """Counts A_w of codewords of each Hamming weight w = 0..n."""

    def __init__(self, counts):
        self.counts = tuple(int(c) for c in counts)

    def __getitem__(self, w):
        return self.counts[w]

    def __len__(self):
        return len(self.counts)

    def __eq__(self, other):
        return isinstance(other, WeightDistribution) and self.counts == other.counts

    def total(self):
        return sum(self.counts)

    def min_nonzero_weight(self):
        for w, c in enumerate(self.counts):
            if w > 0 and c > 0:
                return w
        return None

    def __repr__(self):
        nz = {w: c for w, c in enumerate(self.counts) if c}
        return f"WeightDistribution({nz})"


class LinearCode:
    """An [n, k] code over GF(4), fixed by a full-row-rank generator in RREF."""

    def __init__(self, generator, n=None):
        if generator.size == 0:
            if n is None:
                raise ValueError("length required for the zero code")
            self.generator = np.zeros((0, n), dtype=np.uint8)
        else:
            self.generator = np.asarray(generator, dtype=np.uint8)
        self.generator.setflags(write=False)
        self.k, self.n = self.generator.shape
        self._weights = None

    @classmethod
    def from_generator(cls, g):
        """Build a code from any generator matrix; dependent rows are dropped."""
        g = gf4.as_matrix(g)
        r, pivots = gf4.rref(g)
        if not pivots:
            raise ZeroMatrixError("generator matrix has rank 0")
        return cls(r[: len(pivots)])

    @classmethod
    def zero(cls, n):
        """The degenerate k = 0 code of length n."""
        return cls(np.zeros((0, n), dtype=np.uint8), n=n)

    # -- weight data -------------------------------------------------------

    def weight_distribution(self, cap=DEFAULT_ENUM_CAP):
        if self._weights is None:
            self._weights = WeightDistribution(self._count_weights(cap))
        return self._weights

    def min_distance(self, cap=DEFAULT_ENUM_CAP):
        if self.k == 0:
            raise ZeroMatrixError("the zero code has no minimum distance")
        return self.weight_distribution(cap).min_nonzero_weight()

    def _count_weights(self, cap):
        if self.k > cap:
            raise BudgetExceededError(
                f"k={self.k} exceeds the enumeration cap {cap}"
            )
        counts = np.zeros(self.n + 1, dtype=np.int64)
        if self.k == 0:
            counts[0] = 1
            return counts
        base_k = min(self.k, _BLOCK_K)
        block = np.zeros((1, self.n), dtype=np.uint8)
        for row in self.generator[self.k - base_k:]:
            scaled = gf4.MUL[:, row]  # (4, n): 0, row, w*row, W*row
            block = (block[:, None, :] ^ scaled[None, :, :]).reshape(-1, self.n)
        prefix_rows = self.generator[: self.k - base_k]
        for coeffs in product(range(4), repeat=len(prefix_rows)):
            p = np.zeros(self.n, dtype=np.uint8)
            for c, row in zip(coeffs, prefix_rows):
                p ^= gf4.MUL[c, row]
            w = np.count_nonzero(block ^ p, axis=1)
            counts += np.bincount(w, minlength=self.n + 1)
        return counts

    def codewords(self, cap=DEFAULT_ENUM_CAP):
        """All 4^k codewords as a (4^k, n) array (small k only)."""
        if self.k > cap:
            raise BudgetExceededError(f"k={self.k} exceeds the enumeration cap {cap}")
        words = np.zeros((1, self.n), dtype=np.uint8)
        for row in self.generator:
            scaled = gf4.MUL[:, row]
            words = (words[:, None, :] ^ scaled[None, :, :]).reshape(-1, self.n)
        return words

    # -- duality and coordinate operations ---------------------------------

    def hermitian_dual(self):
        """The [n, n-k] Hermitian dual; the zero code when k = n."""
        ker = gf4.kernel(self.generator)
        if ker.shape[0] == 0:
            return LinearCode.zero(self.n)
        dual_gen = gf4.CONJ[ker]
        return LinearCode.from_generator(dual_gen)

    def puncture(self, coords):
        """Delete the given (0-based) coordinates from every codeword."""
        coords = _check_coords(coords, self.n)
        keep = [c for c in range(self.n) if c not in coords]
        g = self.generator[:, keep]
        r, pivots = gf4.rref(g)
        if not pivots:
            return LinearCode.zero(len(keep))
        return LinearCode(r[: len(pivots)])

    def shorten(self, coords):
        """The subcode vanishing on the given coordinates, punctured there.

        Solved through linear constraints on the message space, so it works
        for any k.
        """
        coords = _check_coords(coords, self.n)
        if not coords:
            return self
        sel = self.generator[:, sorted(coords)]
        msgs = gf4.kernel(sel.T)  # x with x . G_S = 0
        if msgs.shape[0] == 0:
            return LinearCode.zero(self.n - len(coords))
        sub = gf4.matmul(msgs, self.generator)
        keep = [c for c in range(self.n) if c not in coords]
        g = sub[:, keep]
        r, pivots = gf4.rref(g)
        if not pivots:
            return LinearCode.zero(len(keep))
        return LinearCode(r[: len(pivots)])

    def contains(self, vector):
        v = np.asarray(vector, dtype=np.uint8).reshape(1, -1)
        stacked = np.vstack([self.generator, v])
        return gf4.rank(stacked) == self.k

    def same_codewords(self, other):
        return self == other

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and self.n == other.n
            and self.k == other.k
            and np.array_equal(self.generator, other.generator)
        )

    def __hash__(self):
        return hash((self.n, self.k, self.generator.tobytes()))

    def __repr__(self):
        return f"LinearCode(n={self.n}, k={self.k})"


def _check_coords(coords, n):
    coords = set(coords)
    if any(c < 0 or c >= n for c in coords):
        raise ValueError(f"coordinates must be in 0..{n - 1}")
    if len(coords) == n:
        raise AllCoordinatesError("cannot remove every coordinate")
    return coords
