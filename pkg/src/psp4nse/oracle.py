"""Brute-force ground truth: Sp4(q) by closure from explicit generators, plus a
small permutation-group engine.

The matrix engine enumerates the full group breadth-first from the standard
generators (root elements x_iota(1), torus elements h(g,1), h(1,g), and the two
Weyl reflections), packing each matrix into a 16f-bit key for membership.  The
hot paths (closure, order histograms) run batched over numpy lookup tables;
the scalar Mat4 API stays available for small-scale work and cross-checks.

For even q the symplectic group is already simple modulo nothing: the center
is trivial, so the enumerated Sp4(q) *is* PSp4(q) and no quotient is formed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm

import numpy as np

from .gf2 import FieldSpec, find_generator

__all__ = [
    "CapacityExceeded",
    "Mat4",
    "EnumeratedGroup",
    "OrderHistogram",
    "PermGroupSpec",
    "sp4_generators",
    "enumerate_group",
    "sp4_group",
    "order_histogram",
    "random_word_orders",
    "perm_group_elements",
    "perm_nse",
    "power_count",
    "z4_times_z7_z3",
    "z3_times_z7_z4",
]

_VECTOR_FIELD_LIMIT = 256  # multiplication tables stay dense up to GF(2^8)
_CHUNK_ROWS = 1 << 18


class CapacityExceeded(RuntimeError):
    """Raised when a closure grows past the configured cap."""


# The alternating form: all-ones antidiagonal (signs vanish in characteristic 2).
_J_ENTRIES = tuple(1 if r + c == 3 else 0 for r in range(4) for c in range(4))


@dataclass(frozen=True)
class Mat4:
    """A 4x4 matrix over a fixed GF(2^f), entries as bitmasks in row-major order."""

    spec: FieldSpec
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != 16:
            raise ValueError("Mat4 needs exactly 16 entries")

    @classmethod
    def identity(cls, spec: FieldSpec) -> Mat4:
        return cls(spec, tuple(1 if r == c else 0 for r in range(4) for c in range(4)))

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows) -> Mat4:
        flat = tuple(x for row in rows for x in row)
        return cls(spec, flat)

    def __getitem__(self, rc: tuple[int, int]) -> int:
        r, c = rc
        return self.entries[4 * r + c]

    def mul(self, other: Mat4) -> Mat4:
        if self.spec != other.spec:
            raise ValueError("matrices over different field specs")
        s = self.spec
        a, b = self.entries, other.entries
        out = []
        for r in range(4):
            for c in range(4):
                acc = 0
                for k in range(4):
                    acc ^= s.mul(a[4 * r + k], b[4 * k + c])
                out.append(acc)
        return Mat4(s, tuple(out))

    def transpose(self) -> Mat4:
        e = self.entries
        return Mat4(self.spec, tuple(e[4 * c + r] for r in range(4) for c in range(4)))

    def is_symplectic(self) -> bool:
        """Whether M^T J M = J for the fixed antidiagonal form."""
        j = Mat4(self.spec, _J_ENTRIES)
        return self.transpose().mul(j).mul(self).entries == _J_ENTRIES

    def order(self, bound: int = 1 << 20) -> int:
        ident = Mat4.identity(self.spec)
        acc = self
        for k in range(1, bound + 1):
            if acc == ident:
                return k
            acc = acc.mul(self)
        raise RuntimeError(f"order exceeds bound {bound}")

    def packed(self) -> int:
        f = self.spec.f
        key = 0
        for e in self.entries:
            key = (key << f) | e
        return key


def sp4_generators(q: int) -> list[Mat4]:
    """The eight standard generators of Sp4(q) over GF(q), q = 2^f > 2.

    Returns x_a(1), x_b(1), x_{a+b}(1), x_{2a+b}(1), h(g,1), h(1,g) for a
    generator g of the multiplicative group, and the Weyl reflections w_a, w_b
    (with -1 = 1 in characteristic 2).  Every matrix is checked against the
    alternating form before being returned.
    """
    from .sympl import validate_q

    f = validate_q(q)
    spec = FieldSpec.for_degree(f)
    g = find_generator(spec).bits
    g_inv = spec.inv(g)
    one = 1
    x_a = Mat4.from_rows(spec, [[1, one, 0, 0], [0, 1, 0, 0], [0, 0, 1, one], [0, 0, 0, 1]])
    x_b = Mat4.from_rows(spec, [[1, 0, 0, 0], [0, 1, one, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    x_ab = Mat4.from_rows(spec, [[1, 0, one, 0], [0, 1, 0, one], [0, 0, 1, 0], [0, 0, 0, 1]])
    x_2ab = Mat4.from_rows(spec, [[1, 0, 0, one], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    h_g1 = Mat4.from_rows(spec, [[g, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, g_inv]])
    h_1g = Mat4.from_rows(spec, [[1, 0, 0, 0], [0, g, 0, 0], [0, 0, g_inv, 0], [0, 0, 0, 1]])
    w_a = Mat4.from_rows(spec, [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    w_b = Mat4.from_rows(spec, [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
    gens = [x_a, x_b, x_ab, x_2ab, h_g1, h_1g, w_a, w_b]
    for m in gens:
        if not m.is_symplectic():
            raise AssertionError("generator does not preserve the alternating form")
    return gens


@lru_cache(maxsize=8)
def _mul_table(spec: FieldSpec) -> np.ndarray:
    n = spec.order
    if n > _VECTOR_FIELD_LIMIT:
        raise ValueError(f"dense multiplication table unsupported for GF(2^{spec.f})")
    table = np.zeros((n, n), dtype=np.uint8)
    for a in range(n):
        for b in range(a, n):
            v = spec.mul(a, b)
            table[a, b] = v
            table[b, a] = v
    return table


def _bmul(table: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Batched matrix product over the field table; b is (4,4) or (n,4,4)."""
    if b.ndim == 2:
        prod = table[a[:, :, :, None], b[None, None, :, :]]
    else:
        prod = table[a[:, :, :, None], b[:, None, :, :]]
    return np.bitwise_xor.reduce(prod, axis=2)


def _pack_keys(mats: np.ndarray, f: int) -> list[int]:
    """16f-bit keys for a batch of matrices (row-major entry packing)."""
    flat = mats.reshape(len(mats), 16).astype(np.uint64)
    per_word = 64 // f
    words = []
    for start in range(0, 16, per_word):
        seg = flat[:, start : start + per_word]
        k = seg.shape[1]
        shifts = np.arange(k - 1, -1, -1, dtype=np.uint64) * np.uint64(f)
        words.append((seg << shifts).sum(axis=1, dtype=np.uint64).tolist())
    if len(words) == 1:
        return words[0]
    out = []
    width = per_word * f
    for parts in zip(*words):
        key = 0
        for w in parts:
            key = (key << width) | int(w)
        out.append(key)
    return out


@dataclass
class EnumeratedGroup:
    """An enumerated matrix group: packed-key membership plus the matrix array."""

    spec: FieldSpec
    mats: np.ndarray
    keys: frozenset[int]

    def __len__(self) -> int:
        return len(self.keys)

    def __contains__(self, m: Mat4) -> bool:
        return m.spec == self.spec and m.packed() in self.keys

    def __iter__(self):
        for row in self.mats:
            yield Mat4(self.spec, tuple(int(x) for x in row.reshape(16)))

    def all_symplectic(self) -> bool:
        """Vectorized check that every element preserves the alternating form."""
        table = _mul_table(self.spec)
        a = self.mats
        ja = a[:, ::-1, :]  # J acts by reversing rows
        at = a.transpose(0, 2, 1)
        prod = _bmul(table, at, ja)
        j = np.array(_J_ENTRIES, dtype=a.dtype).reshape(4, 4)
        return bool((prod == j).all())


def _mats_array(generators: list[Mat4]) -> np.ndarray:
    return np.array([g.entries for g in generators], dtype=np.uint8).reshape(-1, 4, 4)


def enumerate_group(generators: list[Mat4], cap: int) -> EnumeratedGroup:
    """Closure of the generators under multiplication, breadth-first from identity.

    Raises CapacityExceeded as soon as the closure grows past cap elements.
    """
    if not generators:
        raise ValueError("need at least one generator")
    spec = generators[0].spec
    if any(g.spec != spec for g in generators):
        raise ValueError("generators over different field specs")
    if cap < 1:
        raise ValueError("cap must be positive")
    table = _mul_table(spec)
    f = spec.f
    gens = _mats_array(generators)
    ident = _mats_array([Mat4.identity(spec)])
    seen: set[int] = set(_pack_keys(ident, f))
    blocks = [ident]
    frontier = ident
    while len(frontier):
        fresh_blocks = []
        for gi in range(len(gens)):
            for start in range(0, len(frontier), _CHUNK_ROWS):
                chunk = frontier[start : start + _CHUNK_ROWS]
                prods = _bmul(table, chunk, gens[gi])
                keys = _pack_keys(prods, f)
                fresh_idx = []
                for pos, key in enumerate(keys):
                    if key not in seen:
                        seen.add(key)
                        fresh_idx.append(pos)
                if len(seen) > cap:
                    raise CapacityExceeded(
                        f"closure exceeded cap of {cap} elements"
                    )
                if fresh_idx:
                    fresh_blocks.append(prods[np.array(fresh_idx)])
        if fresh_blocks:
            frontier = np.concatenate(fresh_blocks)
            blocks.append(frontier)
        else:
            frontier = ident[:0]
    return EnumeratedGroup(spec, np.concatenate(blocks), frozenset(seen))


_SP4_CACHE: dict[int, EnumeratedGroup] = {}


def sp4_group(q: int, cap: int = 2_000_000) -> EnumeratedGroup:
    """Enumerate Sp4(q) once per process; capacity errors are not cached."""
    cached = _SP4_CACHE.get(q)
    if cached is not None:
        if len(cached) > cap:
            raise CapacityExceeded(f"closure exceeded cap of {cap} elements")
        return cached
    group = enumerate_group(sp4_generators(q), cap)
    _SP4_CACHE[q] = group
    return group


@dataclass(frozen=True)
class OrderHistogram:
    """Exact map from element order to count for a finite group."""

    counts: dict[int, int]

    def total(self) -> int:
        return sum(self.counts.values())

    def nse(self) -> frozenset[int]:
        return frozenset(self.counts.values())

    def power_count(self, n: int) -> int:
        """|G_n| = number of elements with x^n = 1."""
        return sum(c for d, c in self.counts.items() if n % d == 0)

    def __getitem__(self, order: int) -> int:
        return self.counts.get(order, 0)


def _orders_vectorized(spec: FieldSpec, mats: np.ndarray, bound: int) -> np.ndarray:
    table = _mul_table(spec)
    n = len(mats)
    ident = np.array(
        [1 if r == c else 0 for r in range(4) for c in range(4)], dtype=mats.dtype
    ).reshape(4, 4)
    orders = np.zeros(n, dtype=np.int64)
    idx = np.arange(n)
    cur = mats.copy()
    base = mats
    k = 1
    while len(idx):
        if k > bound:
            raise RuntimeError(f"element order exceeds bound {bound}")
        done = (cur == ident).all(axis=(1, 2))
        orders[idx[done]] = k
        keep = ~done
        idx = idx[keep]
        cur = cur[keep]
        base = base[keep]
        if len(idx):
            out = []
            for start in range(0, len(idx), _CHUNK_ROWS):
                out.append(
                    _bmul(table, cur[start : start + _CHUNK_ROWS], base[start : start + _CHUNK_ROWS])
                )
            cur = np.concatenate(out)
            k += 1
    return orders


def order_histogram(elements) -> OrderHistogram:
    """Exact order histogram; vectorized for an EnumeratedGroup, scalar otherwise."""
    if isinstance(elements, EnumeratedGroup):
        orders = _orders_vectorized(elements.spec, elements.mats, len(elements) + 1)
        values, counts = np.unique(orders, return_counts=True)
        return OrderHistogram({int(v): int(c) for v, c in zip(values, counts)})
    counts: dict[int, int] = {}
    for m in elements:
        k = m.order()
        counts[k] = counts.get(k, 0) + 1
    return OrderHistogram(dict(sorted(counts.items())))


def random_word_orders(
    q: int, count: int, length: int = 24, seed: int = 0
) -> np.ndarray:
    """Orders of random length-`length` products of the Sp4(q) generators."""
    gens = sp4_generators(q)
    spec = gens[0].spec
    table = _mul_table(spec)
    g = _mats_array(gens)
    rng = np.random.default_rng(seed)
    cur = np.broadcast_to(
        _mats_array([Mat4.identity(spec)])[0], (count, 4, 4)
    ).copy()
    for _ in range(length):
        pick = rng.integers(0, len(g), size=count)
        cur = _bmul(table, cur, g[pick])
    return _orders_vectorized(spec, cur, bound=4 * (q * q + 1))


# ---------------------------------------------------------------------------
# Permutation groups (used for the order-84 pair and small verifications)

Perm = tuple[int, ...]


@dataclass(frozen=True)
class PermGroupSpec:
    """A permutation group given by generators on {0..degree-1}."""

    degree: int
    generators: tuple[Perm, ...]

    def __post_init__(self) -> None:
        for p in self.generators:
            if sorted(p) != list(range(self.degree)):
                raise ValueError(f"not a permutation of degree {self.degree}: {p}")


def _perm_mul(a: Perm, b: Perm) -> Perm:
    """(a * b)(x) = a(b(x))."""
    return tuple(a[b[x]] for x in range(len(a)))


def _perm_order(p: Perm) -> int:
    seen = [False] * len(p)
    k = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        k = lcm(k, length)
    return k


def _from_cycles(degree: int, cycles: list[list[int]]) -> Perm:
    img = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a] = b
    return tuple(img)


def perm_group_elements(spec: PermGroupSpec, cap: int = 1_000_000) -> set[Perm]:
    """Closure of the generators; breadth-first, capped."""
    ident = tuple(range(spec.degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in spec.generators:
                q = _perm_mul(p, g)
                if q not in seen:
                    seen.add(q)
                    if len(seen) > cap:
                        raise CapacityExceeded(f"closure exceeded cap of {cap} elements")
                    nxt.append(q)
        frontier = nxt
    return seen


def perm_nse(spec: PermGroupSpec, cap: int = 1_000_000) -> OrderHistogram:
    """Order histogram of the group generated by the permutation spec."""
    counts: dict[int, int] = {}
    for p in perm_group_elements(spec, cap):
        k = _perm_order(p)
        counts[k] = counts.get(k, 0) + 1
    return OrderHistogram(dict(sorted(counts.items())))


def power_count(spec: PermGroupSpec, n: int, cap: int = 1_000_000) -> int:
    """|G_n| = #{x in G : x^n = 1} for the generated permutation group."""
    return perm_nse(spec, cap).power_count(n)


def z4_times_z7_z3() -> PermGroupSpec:
    """Z4 x (Z7 : Z3): the 7-cycle with the squaring action, times a 4-cycle.

    The Frobenius factor acts on {0..6} by a -> a+1 and a -> 2a; the Z4 factor
    is a 4-cycle on four extra points.  This is the unique group of this
    isomorphism type, of order 84, with elements of order 28.
    """
    shift = _from_cycles(11, [[0, 1, 2, 3, 4, 5, 6]])
    double = tuple([(2 * a) % 7 for a in range(7)] + [7, 8, 9, 10])
    four = _from_cycles(11, [[7, 8, 9, 10]])
    return PermGroupSpec(11, (shift, double, four))


def z3_times_z7_z4() -> PermGroupSpec:
    """Z3 x (Z7 : Z4), where Z4 inverts Z7 through its order-2 quotient.

    No faithful order-4 action on Z7 exists; the order-4 generator acts on
    {0..6} by negation while carrying a 4-cycle on four extra points, which
    makes the representation faithful.  Order 84, no element of order 28.
    """
    shift = _from_cycles(14, [[0, 1, 2, 3, 4, 5, 6]])
    negate_and_cycle = tuple(
        [(-a) % 7 for a in range(7)] + [8, 9, 10, 7] + [11, 12, 13]
    )
    three = _from_cycles(14, [[11, 12, 13]])
    return PermGroupSpec(14, (shift, negate_and_cycle, three))
