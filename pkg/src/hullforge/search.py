"""Search for quaternary hull-1 codes.

Exhaustive determination of the largest hull-1 distance for k <= 3 works in
the multiplicity-vector representation: every code without a zero column is
equivalent to a code whose generator columns are simplex columns with
multiplicities m_i, so enumerating m with column-count pruning is a complete
search over that class.  Codes with a zero column (dual distance 1) are
covered by recursing on length n - 1.

For k >= 4 only a seeded randomized search is offered; it never claims
exhaustiveness and every accepted witness is re-verified by full enumeration.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import ceil

import numpy as np

from . import gf4
from .bounds import griesmer_max_d, sphere_packing_max_d
from .code import LinearCode
from .construct import (
    MultiplicityVector,
    code_from_multiplicity,
    simplex_length,
    simplex_matrix,
)
from .exceptions import NotReducibleError, UnsupportedError
from .hull import hull_dim, hull_information_set

_RANDOM_CHUNK = 1024


@dataclass(frozen=True)
class SearchOutcome:
    best_d: int
    witness: LinearCode | None
    exhaustive: bool
    explored: int


@dataclass(frozen=True)
class NonexistenceCertificate:
    n: int
    k: int
    d: int
    pruning_bounds: tuple  # (lower, upper) per-multiplicity interval
    vectors_examined: int


@dataclass(frozen=True)
class CounterexampleFound:
    n: int
    k: int
    d: int
    witness: LinearCode


class _ProjectiveGeometry:
    """Per-dimension tables for fast multiplicity-vector evaluation.

    Codeword weights of C_k(m) only depend on the projective class of the
    message, so weights are Z @ m for a fixed 0/1 incidence matrix Z; the
    Gram matrix is the XOR of the per-column rank-one Gram blocks with odd
    multiplicity.
    """

    def __init__(self, k):
        self.k = k
        self.length = simplex_length(k)
        s = simplex_matrix(k)
        # Z[x, i] = 1 iff class-x messages are nonzero on column i
        self.incidence = (gf4.matmul(s.T, s) != 0).astype(np.int64)
        # rank-one Hermitian Gram blocks h_i conj(h_i)^T, flattened
        blocks = []
        for i in range(self.length):
            col = s[:, i: i + 1]
            blocks.append(gf4.matmul(col, gf4.conj_transpose(col)).reshape(-1))
        self.gram_blocks = np.array(blocks, dtype=np.uint8)
        # incidence column suffix sums, for distance pruning
        self.suffix = np.zeros((self.length, self.length + 1), dtype=np.int64)
        self.suffix[:, :-1] = np.cumsum(self.incidence[:, ::-1], axis=1)[:, ::-1]


_GEOMETRY = {}


def _geometry(k):
    if k not in _GEOMETRY:
        _GEOMETRY[k] = _ProjectiveGeometry(k)
    return _GEOMETRY[k]


def multiplicity_bounds(n, k, d):
    """Per-column multiplicity interval implied by minimum weight >= d."""
    if k >= 3:
        lower = max(0, 4 * d - 3 * n)
        upper = n - ceil((4 ** (k - 1) - 1) * d / (3 * 4 ** (k - 2)))
    elif k == 2:
        # each projective message class vanishes on exactly one column
        lower, upper = 0, n - d
    else:
        # single column: its multiplicity is the whole length
        lower, upper = 0, n
    return lower, min(upper, n)


def _gram_rank(flat, k):
    return gf4.rank(flat.reshape(k, k))


def _enumerate_multiplicities(n, k, d, stop_at_witness, symmetry=False):
    """Walk all multiplicity vectors of weight >= d, pruned by the column
    bounds; reports hull-1 hits.

    Returns (witness_m or None, vectors_examined).
    """
    geo = _geometry(k)
    length = geo.length
    lower, upper = multiplicity_bounds(n, k, d)
    if upper < lower or upper * length < n or lower * length > n:
        return None, 0
    inc = geo.incidence
    suffix = geo.suffix
    blocks = geo.gram_blocks
    m = [0] * length
    weights = np.zeros(length, dtype=np.int64)
    examined = 0
    witness = None

    def recurse(pos, remaining, gram):
        nonlocal examined, witness, weights
        if witness is not None and stop_at_witness:
            return
        if pos == length - 1:
            if not lower <= remaining <= upper:
                return
            if symmetry and k == 2 and pos == 1 and m[0] > remaining:
                return
            m[pos] = remaining
            examined += 1
            w = weights + remaining * inc[:, pos]
            if w.min() >= d:
                g = gram ^ blocks[pos] if remaining % 2 else gram
                if _gram_rank(g, k) == k - 1:
                    witness = tuple(m)
            m[pos] = 0
            return
        # feasibility of the remaining sum
        lo = max(lower, remaining - upper * (length - pos - 1))
        hi = min(upper, remaining - lower * (length - pos - 1))
        if hi < lo:
            return
        # even a maxed-out suffix cannot reach weight d: prune
        if (weights + upper * suffix[:, pos]).min() < d:
            return
        # try the value closest to the running mean first: witnesses sit
        # near balanced multiplicities, so they surface much earlier
        mean = remaining / (length - pos)
        for v in sorted(range(lo, hi + 1), key=lambda x: (abs(x - mean), x)):
            if symmetry and k == 2 and pos == 1 and m[0] > v:
                continue
            m[pos] = v
            weights_add = v * inc[:, pos]
            weights += weights_add
            g = gram ^ blocks[pos] if v % 2 else gram
            recurse(pos + 1, remaining - v, g)
            weights -= weights_add
            m[pos] = 0
            if witness is not None and stop_at_witness:
                return

    recurse(0, n, np.zeros(k * k, dtype=np.uint8))
    return witness, examined


def _verify_multiplicity_witness(k, m, expect_d):
    code = code_from_multiplicity(MultiplicityVector(k, tuple(m)))
    assert hull_dim(code) == 1
    actual = code.min_distance()
    assert actual >= expect_d, (m, actual, expect_d)
    return code, actual


_EXHAUSTIVE_CACHE = {}


def exhaustive_dh(n, k, symmetry=False):
    """Exact largest hull-1 distance for k in {1, 2, 3}.

    Scans d downward from the classical bounds; the first d with a
    multiplicity-vector witness (or a zero-column lift of a shorter witness)
    is exact.
    """
    if k not in (1, 2, 3):
        raise UnsupportedError("exhaustive search supports k <= 3 only")
    if n < k:
        raise ValueError("need n >= k")
    key = (n, k, symmetry)
    if key in _EXHAUSTIVE_CACHE:
        return _EXHAUSTIVE_CACHE[key]

    shorter = exhaustive_dh(n - 1, k, symmetry) if n - 1 >= k else None
    dmax = min(griesmer_max_d(n, k), sphere_packing_max_d(n, k))
    explored = shorter.explored if shorter else 0
    best_d = 0
    witness = None
    for d in range(dmax, 0, -1):
        if shorter and shorter.best_d >= d:
            # the zero-column lift already achieves d; no deeper scan needed
            break
        m, examined = _enumerate_multiplicities(n, k, d, stop_at_witness=True,
                                                symmetry=symmetry)
        explored += examined
        if m is not None:
            code, actual = _verify_multiplicity_witness(k, m, d)
            best_d, witness = actual, code
            break
    if shorter and shorter.best_d > best_d:
        best_d = shorter.best_d
        witness = _append_zero_column(shorter.witness) if shorter.witness else None
    outcome = SearchOutcome(best_d, witness, exhaustive=True, explored=explored)
    _EXHAUSTIVE_CACHE[key] = outcome
    return outcome


def _append_zero_column(code):
    g = np.hstack([code.generator, np.zeros((code.k, 1), dtype=np.uint8)])
    return LinearCode.from_generator(g)


def certify_nonexistence(n, k, d, symmetry=False):
    """Exhaust the pruned multiplicity space (and the zero-column recursion)
    for an [n, k, >=d] hull-1 code; returns a certificate or a witness."""
    if k not in (2, 3):
        raise UnsupportedError("certification supports k in {2, 3}")
    examined = 0
    length_n = n
    while length_n >= k and griesmer_max_d(length_n, k) >= d:
        m, count = _enumerate_multiplicities(length_n, k, d,
                                             stop_at_witness=True,
                                             symmetry=symmetry)
        examined += count
        if m is not None:
            code, _ = _verify_multiplicity_witness(k, m, d)
            while code.n < n:
                code = _append_zero_column(code)
            return CounterexampleFound(n, k, d, code)
        length_n -= 1
    return NonexistenceCertificate(n, k, d, multiplicity_bounds(n, k, d), examined)


def reduce_by_simplex(n, k, d):
    """One simplex-stripping step: (n, k, d) -> (n - (4^k - 1)/3, k, d - 4^(k-1)).

    Nonexistence of the reduced parameters lifts back to the original ones.
    """
    if k < 3:
        raise NotReducibleError("reduction needs k >= 3")
    length = simplex_length(k)
    weight = 4 ** (k - 1)
    if n < length or d < weight or n - length < k:
        raise NotReducibleError(f"({n}, {k}, {d}) cannot shed a simplex block")
    return n - length, k, d - weight


# -- randomized search -----------------------------------------------------


def _hull_dim_from_generator(g):
    return g.shape[0] - gf4.rank(gf4.hermitian_gram(g))


def _standard_form(k, n, a):
    g = np.zeros((k, n), dtype=np.uint8)
    g[:, :k] = np.eye(k, dtype=np.uint8)
    g[:, k:] = a
    return g


def _search_chunk(n, k, seed, chunk_index, size, cap):
    """Deterministic per-chunk stream: fresh samples, single-entry mutations
    of the chunk best, and hull-2 shorten moves from length n + 1."""
    rng = np.random.default_rng([seed, chunk_index])
    best = None  # (d, gen_bytes, code)
    current = None
    for j in range(size):
        mode = j % 3
        g = None
        if mode == 1 and current is not None:
            a = current.copy()
            a[rng.integers(k), rng.integers(n - k)] = rng.integers(4)
            g = _standard_form(k, n, a)
            current = a
        elif mode == 2 and k + 1 <= n:
            b = rng.integers(0, 4, size=(k + 1, n - k), dtype=np.uint8)
            lifted = _standard_form(k + 1, n + 1, b)
            if _hull_dim_from_generator(lifted) == 2:
                lifted_code = LinearCode.from_generator(lifted)
                pivots = hull_information_set(lifted_code)
                if pivots:
                    shortened = lifted_code.shorten({pivots[0]})
                    if shortened.k == k and shortened.n == n:
                        g = shortened.generator
        if g is None:
            a = rng.integers(0, 4, size=(k, n - k), dtype=np.uint8)
            g = _standard_form(k, n, a)
            current = a
        if _hull_dim_from_generator(g) != 1:
            continue
        code = LinearCode.from_generator(g)
        if code.k != k:
            continue
        d = code.min_distance(cap)
        key = (d, _neg_bytes(code.generator.tobytes()))
        if best is None or key > best[0]:
            best = (key, code)
    return best


def _neg_bytes(b):
    # order so that higher tuple compares prefer lexicographically *smaller* bytes
    return bytes(255 - x for x in b)


def random_search(n, k, target_d, seed, budget, threads=1, cap=14):
    """Seeded randomized search for an [n, k] hull-1 code of distance
    >= target_d.

    The candidate stream is split into fixed-size chunks whose RNG state
    depends only on (seed, chunk index), and results merge by best distance
    with lexicographically-least generator as the tie break, so the outcome
    is identical for any thread count.
    """
    if k > cap:
        raise UnsupportedError(f"k={k} exceeds the distance cap {cap}")
    chunks = []
    offset = 0
    index = 0
    while offset < budget:
        size = min(_RANDOM_CHUNK, budget - offset)
        chunks.append((index, size))
        offset += size
        index += 1

    def run(args):
        ci, size = args
        return _search_chunk(n, k, seed, ci, size, cap)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, chunks))
    else:
        results = [run(c) for c in chunks]

    best = None
    for res in results:
        if res is not None and (best is None or res[0] > best[0]):
            best = res
    if best is None:
        return SearchOutcome(0, None, exhaustive=False, explored=budget)
    (d, _), code = best
    assert hull_dim(code) == 1
    assert code.min_distance(cap) == d
    if d < target_d:
        return SearchOutcome(d, None, exhaustive=False, explored=budget)
    return SearchOutcome(d, code, exhaustive=False, explored=budget)
