"""Exhaustive and sampled generators for spaces and maps at desk scale.

Exhaustive streams are deterministic and lexicographic over table entries
(entry for subset 0 most significant).  Two classes avoid filtering the full
(2**n)**(2**n) universe:

* isotonic tables factor into one upward-closed family of subsets per output
  bit, so the stream is a product over precomputed up-sets;
* exterior-separated tables are exactly those whose singleton rows form a
  symmetric matrix R and whose entry for each A contains the forced mask
  {x : R(x) meets A}, so the stream is a product over symmetric matrices and
  arbitrary extra bits.

Both constructions are cross-checked against filter-based oracles in the
test suite.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator

import numpy as np

from . import _kernels
from .core import ClosureSpaceError, Space, ground
from .maps import SpaceMap, make_map

CLASSES = (
    "all",
    "isotonic",
    "isotonic_pointwise_symmetric",
    "exterior_separated",
    "enlarging_isotonic",
)

DEFAULT_TABLE_BUDGET = 200_000
DEFAULT_MAP_BUDGET = 1_000_000
SAMPLE_MAX_N = 4


class UniverseTooLarge(ClosureSpaceError):
    """Requested exhaustive stream exceeds the table budget."""


class UnknownClass(ClosureSpaceError):
    """Generator class tag not in CLASSES."""


def _check_class(cls: str) -> None:
    if cls not in CLASSES:
        raise UnknownClass(f"unknown generator class: {cls!r}")


@lru_cache(maxsize=None)
def upset_families(n: int) -> tuple[int, ...]:
    """All upward-closed families of subsets of an n-element set.

    A family is a bitmask over the 2**n subsets: bit A set means A belongs.
    Found by filtering all families; counts are 3, 6, 20, 168 for n=1..4.
    """
    size = 1 << n
    fams = np.arange(1 << size, dtype=np.int64)
    ok = np.ones(fams.shape[0], bool)
    for a in range(size):
        for x in range(n):
            if (a >> x) & 1:
                continue
            b = a | (1 << x)
            ok &= ~((((fams >> a) & 1) == 1) & (((fams >> b) & 1) == 0))
    return tuple(int(f) for f in fams[ok])


def _submasks(mask: int) -> list[int]:
    out = []
    sub = mask
    while True:
        out.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & mask
    out.reverse()  # ascending
    return out


@lru_cache(maxsize=8)
def isotonic_tables(n: int) -> np.ndarray:
    """All isotonic tables on n elements, lexicographic, as an int64 array."""
    if n > 3:
        raise UniverseTooLarge(f"isotonic enumeration is limited to n <= 3, got {n}")
    size = 1 << n
    fams = upset_families(n)
    rows = np.empty((len(fams) ** n, size), np.int64)
    i = 0
    for combo in itertools.product(fams, repeat=n):
        for a in range(size):
            m = 0
            for j in range(n):
                m |= ((combo[j] >> a) & 1) << j
            rows[i, a] = m
        i += 1
    ordered = rows[np.lexsort(rows.T[::-1])]
    ordered.setflags(write=False)  # cached and shared; callers must not mutate
    return ordered


def _symmetric_matrices(n: int) -> Iterator[tuple[int, ...]]:
    """All symmetric boolean matrices as per-element row masks, diagonal free."""
    slots = [(x, y) for x in range(n) for y in range(x, n)]
    for bits in range(1 << len(slots)):
        rows = [0] * n
        for k, (x, y) in enumerate(slots):
            if (bits >> k) & 1:
                rows[x] |= 1 << y
                rows[y] |= 1 << x
        yield tuple(rows)


def extsep_count(n: int) -> int:
    """Exact number of exterior-separated tables on n elements."""
    size = 1 << n
    total = 0
    for rows in _symmetric_matrices(n):
        prod = 1
        for a in range(size):
            if a and a & (a - 1) == 0:
                continue  # singleton entries are fixed by the matrix
            forced = 0
            for x in range(n):
                if rows[x] & a:
                    forced |= 1 << x
            prod *= 1 << (n - bin(forced).count("1"))
        total += prod
    return total


@lru_cache(maxsize=8)
def extsep_tables(n: int) -> np.ndarray:
    """All exterior-separated tables on n elements, lexicographic."""
    if n > 3:
        raise UniverseTooLarge(
            f"exterior-separated enumeration is limited to n <= 3, got {n}"
        )
    size = 1 << n
    full = size - 1
    out = []
    base = [0] * size
    for rows in _symmetric_matrices(n):
        for x in range(n):
            base[1 << x] = rows[x]
        free_slots = []
        for a in range(size):
            if a and a & (a - 1) == 0:
                continue
            forced = 0
            for x in range(n):
                if rows[x] & a:
                    forced |= 1 << x
            base[a] = forced
            free_slots.append((a, _submasks(full ^ forced)))
        for extras in itertools.product(*(subs for _, subs in free_slots)):
            row = list(base)
            for (a, _), extra in zip(free_slots, extras):
                row[a] |= extra
            out.append(row)
    rows_arr = np.array(out, np.int64)
    ordered = rows_arr[np.lexsort(rows_arr.T[::-1])]
    ordered.setflags(write=False)  # cached and shared; callers must not mutate
    return ordered


def class_size(n: int, cls: str) -> int | None:
    """Exact class size where it is known without filtering, else None."""
    _check_class(cls)
    size = 1 << n
    if cls == "all":
        return size**size
    if cls == "isotonic":
        return len(upset_families(n)) ** n
    if cls == "exterior_separated":
        return extsep_count(n)
    return None


def all_tables_block(n: int, start: int, stop: int) -> np.ndarray:
    """Rows start..stop of the full lexicographic table universe at size n."""
    size = 1 << n
    m = np.arange(start, stop, dtype=np.int64)
    cols = []
    for pos in range(size):
        div = size ** (size - 1 - pos)
        cols.append((m // div) % size)
    return np.stack(cols, axis=1)


def iter_table_chunks(
    n: int,
    cls: str = "all",
    budget: int | None = None,
    chunk_size: int = 1 << 14,
) -> Iterator[np.ndarray]:
    """Stream the class universe as int64 table arrays in lexicographic order.

    Raises UniverseTooLarge when the universe (the unfiltered base universe,
    for the filtered classes) exceeds ``budget`` tables.
    """
    _check_class(cls)
    limit = DEFAULT_TABLE_BUDGET if budget is None else int(budget)

    if cls == "all":
        total = class_size(n, "all")
        if total > limit:
            raise UniverseTooLarge(
                f"class 'all' at n={n} has {total} tables, over the budget of {limit}"
            )
        for start in range(0, total, chunk_size):
            yield all_tables_block(n, start, min(start + chunk_size, total))
        return

    if cls == "exterior_separated":
        total = extsep_count(n)
        if n > 3 or total > limit:
            raise UniverseTooLarge(
                f"class 'exterior_separated' at n={n} has {total} tables, "
                f"over the budget of {limit}"
            )
        tables = extsep_tables(n)
        for start in range(0, tables.shape[0], chunk_size):
            yield tables[start : start + chunk_size]
        return

    # remaining classes are the isotonic family
    base_total = class_size(n, "isotonic") if n <= 3 else None
    if n > 3 or base_total > limit:
        raise UniverseTooLarge(
            f"isotonic base universe at n={n} exceeds the budget of {limit}"
        )
    tables = isotonic_tables(n)
    if cls == "isotonic_pointwise_symmetric":
        flags = _kernels.kernel("symmetry_flags")(tables, n)
        tables = tables[flags[:, 0] == 1]
    elif cls == "enlarging_isotonic":
        flags = _kernels.kernel("axiom_flags")(tables, n)
        tables = tables[flags[:, 2] == 1]
    for start in range(0, tables.shape[0], chunk_size):
        yield tables[start : start + chunk_size]


def spaces_from_tables(n: int, tables: np.ndarray) -> Iterator[Space]:
    g = ground(n)
    for row in tables:
        yield Space(g, tuple(int(v) for v in row))


def enumerate_spaces(
    n: int, cls: str = "all", budget: int | None = None
) -> Iterator[Space]:
    """Every space of the class at carrier size n, exactly once, in
    lexicographic table order."""
    for chunk in iter_table_chunks(n, cls, budget):
        yield from spaces_from_tables(n, chunk)


# ---------------------------------------------------------------------------
# seeded samplers
# ---------------------------------------------------------------------------


def _sample_tables(n: int, cls: str, count: int, seed: int) -> np.ndarray:
    size = 1 << n
    full = size - 1
    rng = np.random.default_rng(seed)

    if cls == "all":
        return rng.integers(0, size, size=(count, size), dtype=np.int64)

    if cls == "isotonic":
        fams = upset_families(n)
        picks = rng.integers(0, len(fams), size=(count, n))
        rows = np.zeros((count, size), np.int64)
        for i in range(count):
            for a in range(size):
                m = 0
                for j in range(n):
                    m |= ((fams[picks[i, j]] >> a) & 1) << j
                rows[i, a] = m
        return rows

    if cls == "isotonic_pointwise_symmetric":
        # rejection from the isotonic sampler, checked definitionally
        rows = np.zeros((count, size), np.int64)
        got = 0
        attempt = 0
        while got < count:
            batch = _sample_tables(n, "isotonic", max(count, 64), seed + 7919 * attempt)
            flags = _kernels.kernel("symmetry_flags")(batch, n)
            keep = batch[flags[:, 0] == 1]
            take = min(count - got, keep.shape[0])
            rows[got : got + take] = keep[:take]
            got += take
            attempt += 1
            if attempt > 10_000:
                raise RuntimeError("rejection sampling failed to converge")
        return rows

    if cls == "enlarging_isotonic":
        # per output bit x: the family must contain every subset with x, and
        # restrict to an up-set on the subsets without x
        sub_fams = upset_families(n - 1)
        without_x = [[a for a in range(size) if not (a >> x) & 1] for x in range(n)]
        picks = rng.integers(0, len(sub_fams), size=(count, n))
        rows = np.zeros((count, size), np.int64)
        for i in range(count):
            for x in range(n):
                fam = sub_fams[picks[i, x]]
                for k, a in enumerate(without_x[x]):
                    if (fam >> k) & 1:
                        rows[i, a] |= 1 << x
            for a in range(size):
                rows[i, a] |= a  # enlarging: every entry contains its subset
        return rows

    if cls == "exterior_separated":
        slots = [(x, y) for x in range(n) for y in range(x, n)]
        rows = np.zeros((count, size), np.int64)
        for i in range(count):
            bits = int(rng.integers(0, 1 << len(slots)))
            r = [0] * n
            for k, (x, y) in enumerate(slots):
                if (bits >> k) & 1:
                    r[x] |= 1 << y
                    r[y] |= 1 << x
            for a in range(size):
                if a and a & (a - 1) == 0:
                    rows[i, a] = r[_bit_index(a)]
                    continue
                forced = 0
                for x in range(n):
                    if r[x] & a:
                        forced |= 1 << x
                extra = int(rng.integers(0, full + 1)) & (full ^ forced)
                rows[i, a] = forced | extra
        return rows

    raise UnknownClass(f"unknown generator class: {cls!r}")


def _bit_index(mask: int) -> int:
    return mask.bit_length() - 1


def sample_spaces(n: int, cls: str, count: int, seed: int) -> Iterator[Space]:
    """Exactly ``count`` class members, deterministic for a fixed seed."""
    _check_class(cls)
    if n > SAMPLE_MAX_N:
        raise UniverseTooLarge(f"sampling is limited to n <= {SAMPLE_MAX_N}, got {n}")
    yield from spaces_from_tables(n, _sample_tables(n, cls, count, seed))


def sample_tables(n: int, cls: str, count: int, seed: int) -> np.ndarray:
    """Array form of :func:`sample_spaces`, for the sweep kernels."""
    _check_class(cls)
    if n > SAMPLE_MAX_N:
        raise UniverseTooLarge(f"sampling is limited to n <= {SAMPLE_MAX_N}, got {n}")
    return _sample_tables(n, cls, count, seed)


# ---------------------------------------------------------------------------
# maps
# ---------------------------------------------------------------------------


def all_assignments(nx: int, ny: int) -> np.ndarray:
    """Every total assignment of nx domain elements into ny targets, lex."""
    rows = np.array(list(itertools.product(range(ny), repeat=nx)), np.int64)
    return rows.reshape(-1, nx)


def enumerate_maps(x: Space, y: Space, budget: int | None = None) -> Iterator[SpaceMap]:
    """All total maps from x to y in lexicographic assignment order."""
    limit = DEFAULT_MAP_BUDGET if budget is None else int(budget)
    total = y.ground.n ** x.ground.n
    if total > limit:
        raise UniverseTooLarge(
            f"{total} maps from {x.ground.n} into {y.ground.n} elements, "
            f"over the budget of {limit}"
        )
    for combo in itertools.product(range(y.ground.n), repeat=x.ground.n):
        yield make_map(x, y, combo)
