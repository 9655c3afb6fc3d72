"""Knowlton-Graham partition pairs.

A pair of partitions of {1..n} has the Knowlton-Graham (KG) property when,
for every (j, k), at most one element lies in an A-set of size j and a
B-set of size k; the (j, k) cells then serve as unique coordinates. Such a
pair of order m (largest set size m) is the same thing as an m x m 0-1
matrix whose row and column sums are multiples of their index: rows chunk
into A-sets, columns into B-sets.

Feasibility is a pure counting question: order-m pairs exist exactly for
m(m+1)/2 <= n <= max_elements(m), and some order works for every n except
2, 5 and 9. The constructive path goes through :func:`represent`, which
writes n as a sum of multiples t_j of j whose values form a consecutive
run, so the sorted sums are gap-free and the matrix layer can realize them
(symmetrically, since rows and columns get the same sums).

:func:`verify_kg` checks the KG property by direct counting over the sets,
with no matrix machinery; it is the independent oracle for everything else
here.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .matrices import BinaryMatrix, construct_matrix, permute_to_sums

PARTITION_SCHEMA = "kg-partition/1"


class InfeasibleOrderError(ValueError):
    """No Knowlton-Graham pair exists for the requested (n, order)."""

    def __init__(self, n: int, m: int | None = None):
        self.n = n
        self.m = m
        if m is None:
            message = f"no order exists for n (n={n})"
        else:
            message = (
                f"n out of range for order m (n={n}, m={m}, "
                f"feasible range {min_elements(m)}..{max_elements(m)})"
            )
        super().__init__(message)


def min_elements(m: int) -> int:
    """Smallest n admitting an order-m pair: m(m+1)/2."""
    if m < 1:
        raise ValueError(f"order must be positive, got {m}")
    return m * (m + 1) // 2


def max_elements(m: int) -> int:
    """Largest n admitting an order-m pair: sum over j of j*floor(m/j)."""
    if m < 1:
        raise ValueError(f"order must be positive, got {m}")
    direct = sum(j * (m // j) for j in range(1, m + 1))
    # Equivalent closed rearrangement; both forms must agree.
    alt = m * m - sum(m % j for j in range(1, m + 1))
    assert direct == alt, (m, direct, alt)
    return direct


def feasible_orders(n: int) -> list[int]:
    """All orders m whose feasible range contains n, ascending.

    Empty exactly for n in {2, 5, 9}.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    orders = []
    m = 1
    while min_elements(m) <= n:
        if n <= max_elements(m):
            orders.append(m)
        m += 1
    return orders


@dataclass(frozen=True)
class Representation:
    """n written as t_1 + ... + t_m with each t_j a positive multiple of j.

    The shape is pinned by (s, k): t_j = j for j > s; t_s = k*s with
    1 < k <= floor(m/s) when s >= 1; t_j = j*floor(m/j) for 1 < j < s; and
    m - s < t_1 <= m when s > 1. By convention k = 1 when s = 0 (the
    triangular case t_j = j). The value multiset always forms a consecutive
    run, so sorted descending it decreases by at most 1 per step.
    """

    m: int
    t: tuple[int, ...]
    s: int
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "t", tuple(self.t))
        m, t, s, k = self.m, self.t, self.s, self.k
        if m < 1 or len(t) != m:
            raise ValueError(f"need m >= 1 values, got m={m}, t={t}")
        if not 0 <= s <= m // 2:
            raise ValueError(f"s must lie in [0, m/2], got s={s} for m={m}")
        for j, value in enumerate(t, start=1):
            if value <= 0 or value % j:
                raise ValueError(f"t_{j}={value} is not a positive multiple of {j}")
            if j > s and value != j:
                raise ValueError(f"t_{j}={value} but positions past s={s} must equal their index")
            if 1 < j < s and value != j * (m // j):
                raise ValueError(f"t_{j}={value} must be the largest multiple of {j} not exceeding {m}")
        if s == 0:
            if k != 1:
                raise ValueError(f"k must be 1 when s=0, got {k}")
        else:
            if t[s - 1] != k * s or not 1 < k <= m // s:
                raise ValueError(f"t_{s}={t[s - 1]} must be k*s with 1 < k <= {m // s}, got k={k}")
        if s > 1 and not m - s < t[0] <= m:
            raise ValueError(f"t_1={t[0]} must lie in ({m - s}, {m}] when s={s} > 1")
        ordered = sorted(t, reverse=True)
        for a, b in zip(ordered, ordered[1:]):
            if a - b > 1:
                raise ValueError(f"sorted values must drop by at most 1: {ordered}")

    @property
    def n(self) -> int:
        return sum(self.t)


def represent(n: int, m: int) -> Representation:
    """Canonical representation of n as a sum of m positive multiples.

    Starts from the maximal case n = max_elements(m), where s = floor(m/2),
    k = floor(m/s) and t_1 = m, and walks down one unit at a time:
    decrement t_1; if s > 1 and t_1 has dropped to m - s, reset t_1 to m
    and take s out of t_s; if t_s has reached s, shrink s by one. The walk
    ends exactly at the triangular case t_j = j (s = 0).
    """
    if n < 1 or m < 1:
        raise ValueError(f"n and m must be positive, got n={n}, m={m}")
    if not min_elements(m) <= n <= max_elements(m):
        raise InfeasibleOrderError(n, m)
    if m == 1:
        return Representation(m=1, t=(1,), s=0, k=1)

    s = m // 2
    t = [0] * m
    t[0] = m
    for j in range(2, m + 1):
        if j < s:
            t[j - 1] = j * (m // j)
        elif j == s:
            t[j - 1] = (m // s) * s
        else:
            t[j - 1] = j
    assert sum(t) == max_elements(m), (m, t)

    for _ in range(max_elements(m) - n):
        t[0] -= 1
        if s > 1 and t[0] == m - s:
            t[0] = m
            t[s - 1] -= s
        if s >= 1 and t[s - 1] == s:
            s -= 1

    k = t[s - 1] // s if s >= 1 else 1
    return Representation(m=m, t=tuple(t), s=s, k=k)


@dataclass(frozen=True)
class KgPartition:
    """Two partitions (A-sets, B-sets) of the same n elements.

    Sets are stored in canonical order (by cardinality, then by sorted
    content). The dataclass itself accepts malformed pairs, overlaps,
    gaps and all; judging them is verify_kg's job.
    """

    n: int
    a_sets: tuple[frozenset, ...]
    b_sets: tuple[frozenset, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        for name in ("a_sets", "b_sets"):
            frozen = [frozenset(s) for s in getattr(self, name)]
            try:
                frozen.sort(key=lambda s: (len(s), tuple(sorted(s))))
            except TypeError:  # mixed label types in a malformed pair
                frozen.sort(key=lambda s: (len(s), tuple(sorted(map(repr, s)))))
            object.__setattr__(self, name, tuple(frozen))

    @property
    def order(self) -> int:
        return max(len(s) for s in self.a_sets + self.b_sets)


def kg_violations(partition: KgPartition) -> list[str]:
    """Diagnostics for everything that stops a pair from being a valid KG pair.

    Structure first (each side must be an exact partition of {1..n}); if
    the structure holds, every (j, k) cell holding two or more elements is
    listed with its witnesses. Empty list means the pair is valid.
    """
    messages: list[str] = []
    universe = set(range(1, partition.n + 1))
    for name, sets in (("A", partition.a_sets), ("B", partition.b_sets)):
        if any(len(s) == 0 for s in sets):
            messages.append(f"{name}-sets contain an empty set")
        counts = Counter(x for s in sets for x in s)
        duplicated = _ordered(x for x, c in counts.items() if c > 1)
        if duplicated:
            messages.append(f"{name}-sets overlap on elements {duplicated}")
        covered = set(counts)
        missing = universe - covered
        if missing:
            messages.append(f"{name}-sets do not cover elements {sorted(missing)}")
        extra = covered - universe
        if extra:
            messages.append(f"{name}-sets contain elements outside 1..{partition.n}: {_ordered(extra)}")
    if messages:
        return messages

    size_a = {x: len(s) for s in partition.a_sets for x in s}
    size_b = {x: len(s) for s in partition.b_sets for x in s}
    cells: dict[tuple[int, int], list] = defaultdict(list)
    for x in sorted(universe):
        cells[(size_a[x], size_b[x])].append(x)
    for (j, k), members in sorted(cells.items()):
        if len(members) > 1:
            messages.append(f"cell ({j},{k}) holds {len(members)} elements: {members}")
    return messages


def _ordered(items: Iterable) -> list:
    items = list(items)
    try:
        return sorted(items)
    except TypeError:  # mixed label types in a malformed pair
        return sorted(items, key=repr)


def verify_kg(partition: KgPartition) -> bool:
    """True iff both sides partition {1..n} and no (j, k) cell holds two elements."""
    return not kg_violations(partition)


def _blocks(items: list, size: int) -> list[frozenset]:
    assert len(items) % size == 0
    return [frozenset(items[i : i + size]) for i in range(0, len(items), size)]


def matrix_to_partition(matrix: BinaryMatrix, labels: Iterable[Hashable]) -> KgPartition:
    """Turn a matrix with index-divisible sums into a partition pair.

    Labels attach to the 1-cells in row-major order. Row j's labels are
    chunked, left to right, into consecutive blocks of size j (the A-sets);
    column k's labels are chunked top to bottom into blocks of size k (the
    B-sets). An element's (row, column) cell is therefore exactly its
    (A-size, B-size) coordinate pair.
    """
    labels = tuple(labels)
    m = matrix.m
    r, c = matrix.row_sums(), matrix.col_sums()
    for j in range(1, m + 1):
        if r[j - 1] % j:
            raise ValueError(f"row {j} has sum {r[j - 1]}, not a multiple of {j}")
        if c[j - 1] % j:
            raise ValueError(f"column {j} has sum {c[j - 1]}, not a multiple of {j}")
    total = sum(r)
    if len(labels) != total:
        raise ValueError(f"need exactly {total} labels (one per 1-entry), got {len(labels)}")
    if len(set(labels)) != len(labels):
        raise ValueError("labels must be distinct")

    cell_label: dict[tuple[int, int], Hashable] = {}
    ordered = iter(labels)
    for i in range(m):
        for j in range(m):
            if matrix.rows[i][j]:
                cell_label[(i, j)] = next(ordered)

    a_sets: list[frozenset] = []
    for i in range(m):
        row_labels = [cell_label[(i, j)] for j in range(m) if matrix.rows[i][j]]
        a_sets.extend(_blocks(row_labels, i + 1))
    b_sets: list[frozenset] = []
    for j in range(m):
        col_labels = [cell_label[(i, j)] for i in range(m) if matrix.rows[i][j]]
        b_sets.extend(_blocks(col_labels, j + 1))
    return KgPartition(n=len(labels), a_sets=tuple(a_sets), b_sets=tuple(b_sets))


def partition_to_matrix(partition: KgPartition) -> BinaryMatrix:
    """The 0-1 matrix of a partition pair: entry (j, k) marks the element
    lying in an A-set of size j and a B-set of size k.

    Raises if either side fails to partition the elements or if some cell
    would hold two elements (the pair is not a KG pair).
    """
    size_a: dict[Hashable, int] = {}
    for s in partition.a_sets:
        for x in s:
            if x in size_a:
                raise ValueError(f"A-sets overlap on {x!r}; not a partition")
            size_a[x] = len(s)
    size_b: dict[Hashable, int] = {}
    for s in partition.b_sets:
        for x in s:
            if x in size_b:
                raise ValueError(f"B-sets overlap on {x!r}; not a partition")
            size_b[x] = len(s)
    if set(size_a) != set(size_b):
        raise ValueError("A-sets and B-sets cover different elements")
    if not size_a:
        raise ValueError("partition has no elements")

    m = max(max(size_a.values()), max(size_b.values()))
    grid = [[0] * m for _ in range(m)]
    for x in size_a:
        j, k = size_a[x], size_b[x]
        if grid[j - 1][k - 1]:
            raise ValueError(f"cell ({j},{k}) holds more than one element; not a Knowlton-Graham pair")
        grid[j - 1][k - 1] = 1
    return BinaryMatrix(tuple(tuple(row) for row in grid))


@dataclass(frozen=True)
class Construction:
    """Every intermediate artifact of the constructive pipeline."""

    representation: Representation
    symmetric_matrix: BinaryMatrix
    matrix: BinaryMatrix
    partition: KgPartition


def construct_trace(n: int, m: int | None = None) -> Construction:
    """Build an order-m KG partition of {1..n}, keeping intermediates.

    With m omitted, the smallest feasible order is used. Pipeline:
    represent(n, m); sort t descending (stable) and realize those sums
    symmetrically; permute rows and columns back to t; chunk into sets
    with labels 1..n.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if m is None:
        orders = feasible_orders(n)
        if not orders:
            raise InfeasibleOrderError(n)
        m = orders[0]
    rep = represent(n, m)
    sorted_sums = tuple(sorted(rep.t, reverse=True))
    symmetric = construct_matrix(sorted_sums, sorted_sums)
    # Equal row and column inputs make the construction self-dual.
    assert symmetric == symmetric.transpose(), rep
    matrix = permute_to_sums(symmetric, rep.t, rep.t)
    partition = matrix_to_partition(matrix, range(1, n + 1))
    return Construction(
        representation=rep, symmetric_matrix=symmetric, matrix=matrix, partition=partition
    )


def construct(n: int, m: int | None = None) -> KgPartition:
    """Knowlton-Graham partition of {1..n} with order m (smallest feasible if omitted)."""
    return construct_trace(n, m).partition


def partition_to_json(partition: KgPartition) -> str:
    """Serialize an integer-labelled pair as a schema-tagged JSON document."""
    for s in partition.a_sets + partition.b_sets:
        for x in s:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ValueError(f"only integer-labelled partitions serialize, got {x!r}")
    payload = {
        "schema": PARTITION_SCHEMA,
        "n": partition.n,
        "a_sets": [sorted(s) for s in partition.a_sets],
        "b_sets": [sorted(s) for s in partition.b_sets],
    }
    return json.dumps(payload, indent=2) + "\n"


def partition_from_json(text: str, schemas: Sequence[str] = (PARTITION_SCHEMA,)) -> KgPartition:
    """Parse a partition document. Malformed input raises ValueError; a
    well-formed document describing an invalid pair parses fine (verification
    is a separate step)."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise ValueError("partition document must be a JSON object")
    schema = payload.get("schema")
    if schema not in schemas:
        raise ValueError(f"unsupported schema {schema!r}, expected one of {list(schemas)}")
    n = payload.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"field 'n' must be a positive integer, got {n!r}")
    sides = []
    for field in ("a_sets", "b_sets"):
        raw = payload.get(field)
        if not isinstance(raw, list) or not all(isinstance(s, list) for s in raw):
            raise ValueError(f"field {field!r} must be a list of integer lists")
        for s in raw:
            for x in s:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError(f"field {field!r} must contain only integers, got {x!r}")
        sides.append(tuple(frozenset(s) for s in raw))
    return KgPartition(n=n, a_sets=sides[0], b_sets=sides[1])
