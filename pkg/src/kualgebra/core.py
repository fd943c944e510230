"""Finite KU-algebras given by Cayley tables.

Elements are the indices ``0 .. n-1`` and element ``0`` is always the
constant of the signature.  The entry ``table[x, y]`` is ``x * y``.

The natural order is ``x <= y  iff  y * x == 0``.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    BoundExceeded,
    EmptySubset,
    MalformedTable,
    NoLeastElement,
    NotAPoset,
    NotKUAlgebra,
    OutOfRange,
)

AXIOMS = ("ku1", "ku2", "ku3", "ku4", "antisymmetry")
IDENTITIES = ("ku5", "p1", "x*0=0", "order_reversal", "double_residual")

# Witness variable names per law, used for reports.
WITNESS_VARS = {
    "ku1": ("x",),
    "ku2": ("x", "y", "z"),
    "ku3": ("x", "y", "z"),
    "ku4": ("x", "y", "z"),
    "antisymmetry": ("x", "y"),
    "ku5": ("z",),
    "p1": ("x", "z"),
    "x*0=0": ("x",),
    "order_reversal": ("x", "y", "z"),
    "double_residual": ("x", "y"),
}

DEFAULT_ENUMERATION_BOUND = 4


def _as_table(table) -> np.ndarray:
    try:
        arr = np.asarray(table)
    except ValueError as exc:  # ragged nested lists
        raise MalformedTable(f"table is not rectangular: {exc}") from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise MalformedTable(f"table must be a non-empty square matrix, got shape {arr.shape}")
    if arr.dtype == object or not np.issubdtype(arr.dtype, np.integer):
        if arr.size and not all(float(v).is_integer() for v in arr.ravel()):
            raise MalformedTable("table entries must be integers")
        arr = arr.astype(np.int64)
    n = arr.shape[0]
    bad = np.argwhere((arr < 0) | (arr >= n))
    if len(bad):
        x, y = (int(v) for v in bad[0])
        raise MalformedTable(f"entry {x}*{y} = {int(arr[x, y])} is outside [0, {n - 1}]")
    out = arr.astype(np.int64, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class AxiomReport:
    """Verdicts for a family of laws checked exhaustively on one table.

    ``counterexamples[law]`` lists every witnessing tuple in lexicographic
    scan order; an empty list means the law holds.
    """

    counterexamples: dict[str, list[tuple[int, ...]]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(not w for w in self.counterexamples.values())

    def __bool__(self):
        return self.passed

    def verdict(self, law: str) -> bool:
        return not self.counterexamples[law]

    def first(self, law: str) -> tuple[int, ...] | None:
        found = self.counterexamples[law]
        return found[0] if found else None

    def failed_laws(self) -> list[str]:
        return [law for law, w in self.counterexamples.items() if w]

    def summary(self) -> str:
        if self.passed:
            return "all laws hold"
        return "; ".join(self.describe(law) for law in self.failed_laws())

    def describe(self, law: str, names: Sequence[str] | None = None) -> str:
        w = self.first(law)
        if w is None:
            return f"{law} holds"
        vals = [names[v] if names is not None else str(v) for v in w]
        at = ", ".join(f"{var}={val}" for var, val in zip(WITNESS_VARS.get(law, ()), vals))
        return f"{law} fails at {at}"


def _witnesses(mask: np.ndarray) -> list[tuple[int, ...]]:
    return [tuple(int(v) for v in row) for row in np.argwhere(mask)]


def _axiom_masks(T: np.ndarray) -> dict[str, np.ndarray]:
    n = T.shape[0]
    X, Y, Z = np.indices((n, n, n))
    xy, yz, xz = T[X, Y], T[Y, Z], T[X, Z]
    zx, zy = T[Z, X], T[Z, Y]
    A = T
    return {
        "ku1": T[0] != np.arange(n),
        "ku2": (xy == 0) & ((T[yz, xz] != 0) | (T[zx, zy] != 0)),
        "ku3": T[X, yz] != T[Y, xz],
        "ku4": T[xy, T[yz, xz]] != 0,
        "antisymmetry": np.triu((A == 0) & (A.T == 0), k=1),
    }


def verify_axioms(table) -> AxiomReport:
    """Check ku1-ku4 and antisymmetry exhaustively.

    Raises MalformedTable for non-square tables or out-of-range entries.
    """
    T = table.table if isinstance(table, KUAlgebra) else _as_table(table)
    masks = _axiom_masks(T)
    return AxiomReport({law: _witnesses(masks[law]) for law in AXIOMS})


class OrderRelation:
    """A finite partial order stored as a boolean matrix ``leq[x, y]``."""

    def __init__(self, leq, names: Sequence[str] | None = None):
        leq = np.array(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise NotAPoset(f"order matrix must be square, got shape {leq.shape}")
        leq.setflags(write=False)
        self.leq = leq
        self.size = leq.shape[0]
        self.names = tuple(names) if names is not None else tuple(str(i) for i in range(self.size))

    def __eq__(self, other):
        return isinstance(other, OrderRelation) and np.array_equal(self.leq, other.leq)

    def __hash__(self):
        return hash(self.leq.tobytes())

    def __repr__(self):
        return f"OrderRelation(size={self.size}, strict={self.strict_pairs()})"

    def is_reflexive(self) -> bool:
        return bool(self.leq.diagonal().all())

    def is_antisymmetric(self) -> bool:
        return not np.triu(self.leq & self.leq.T, 1).any()

    def is_transitive(self) -> bool:
        L = self.leq.astype(np.int64)
        return not ((L @ L > 0) & ~self.leq).any()

    def is_partial_order(self) -> bool:
        return self.is_reflexive() and self.is_antisymmetric() and self.is_transitive()

    def least(self) -> int | None:
        for x in range(self.size):
            if self.leq[x].all():
                return x
        return None

    def strict_pairs(self) -> list[tuple[int, int]]:
        lt = self.leq & ~np.eye(self.size, dtype=bool)
        return [(int(x), int(y)) for x, y in np.argwhere(lt)]

    def covers(self) -> list[tuple[int, int]]:
        """Pairs ``(x, y)`` with ``x < y`` and nothing strictly between."""
        lt = self.leq & ~np.eye(self.size, dtype=bool)
        L = lt.astype(np.int64)
        between = (L @ L) > 0
        return [(int(x), int(y)) for x, y in np.argwhere(lt & ~between)]

    def downset(self, q: int) -> frozenset[int]:
        return frozenset(int(x) for x in np.flatnonzero(self.leq[:, q]))

    def lower_bounds(self, subset: Iterable[int]) -> frozenset[int]:
        ys = list(subset)
        if not ys:
            raise EmptySubset("lower bounds of an empty subset are not defined here")
        mask = self.leq[:, ys].all(axis=1)
        return frozenset(int(x) for x in np.flatnonzero(mask))

    def infimum(self, subset: Iterable[int]) -> int | None:
        lbs = sorted(self.lower_bounds(subset))
        for c in lbs:
            if all(self.leq[b, c] for b in lbs):
                return c
        return None


class KUAlgebra:
    """A finite KU-algebra ``(X, *, 0)``.

    Construction validates the table; pass ``check=False`` to skip the
    axiom check (entries are still range-checked).
    """

    def __init__(self, table, names: Sequence[str] | None = None, check: bool = True):
        self.table = _as_table(table)
        self.order = self.table.shape[0]
        if names is None:
            names = [str(i) for i in range(self.order)]
        names = tuple(str(s) for s in names)
        if len(names) != self.order or len(set(names)) != self.order:
            raise MalformedTable("element names must be distinct and one per element")
        self.names = names
        if check:
            report = verify_axioms(self.table)
            if not report.passed:
                raise NotKUAlgebra(report)

    def __len__(self):
        return self.order

    def __eq__(self, other):
        return isinstance(other, KUAlgebra) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        return f"KUAlgebra(order={self.order}, table={self.table.tolist()})"

    def op(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def index(self, name: str) -> int:
        return self.names.index(name)

    def elements(self) -> range:
        return range(self.order)

    def _check_element(self, q):
        if not (isinstance(q, (int, np.integer)) and 0 <= q < self.order):
            raise OutOfRange(f"element {q!r} is not in [0, {self.order - 1}]")

    def _check_subset(self, S):
        S = frozenset(S)
        for s in S:
            self._check_element(s)
        return S

    @cached_property
    def natural_order(self) -> OrderRelation:
        return OrderRelation(self.table.T == 0, self.names)

    def to_rows(self) -> list[list[int]]:
        return self.table.tolist()


def natural_order(X: KUAlgebra) -> OrderRelation:
    """``leq[x, y]`` holds iff ``y * x == 0``."""
    return X.natural_order


def infimum(X: KUAlgebra, Y: Iterable[int]) -> int | None:
    """Greatest lower bound of ``Y`` in the natural order, or None."""
    Y = X._check_subset(Y)
    if not Y:
        raise EmptySubset("infimum of the empty subset")
    return X.natural_order.infimum(sorted(Y))


def check_derived_identities(X: KUAlgebra) -> AxiomReport:
    """Exhaustively check identities that every KU-algebra must satisfy.

    ``ku5``: z*z = 0; ``p1``: z*(x*z) = 0; ``x*0=0``;
    ``order_reversal``: x <= y implies y*z <= x*z;
    ``double_residual``: y*((y*x)*x) = 0.
    """
    T = X.table if isinstance(X, KUAlgebra) else _as_table(X)
    n = T.shape[0]
    X2, Y2 = np.indices((n, n))
    Xs, Ys, Zs = np.indices((n, n, n))
    masks = {
        "ku5": T.diagonal() != 0,
        "p1": T[Y2, T[X2, Y2]] != 0,
        "x*0=0": T[:, 0] != 0,
        # x <= y is T[y, x] == 0; y*z <= x*z is T[x*z, y*z] == 0
        "order_reversal": (T[Ys, Xs] == 0) & (T[T[Xs, Zs], T[Ys, Zs]] != 0),
        "double_residual": T[Y2, T[T[Y2, X2], X2]] != 0,
    }
    return AxiomReport({law: _witnesses(masks[law]) for law in IDENTITIES})


def is_subalgebra(X: KUAlgebra, S: Iterable[int]) -> bool:
    S = X._check_subset(S)
    return all(X.table[x, y] in S for x in S for y in S)


def is_ku_ideal(X: KUAlgebra, S: Iterable[int]) -> bool:
    S = X._check_subset(S)
    if 0 not in S:
        return False
    T = X.table
    member = np.zeros(X.order, dtype=bool)
    member[list(S)] = True
    Xs, Ys, Zs = np.indices((X.order,) * 3)
    premise = member[T[Xs, T[Ys, Zs]]] & member[Ys]
    return not (premise & ~member[T[Xs, Zs]]).any()


def gcd_algebra(n: int) -> KUAlgebra:
    """The algebra on ``a_1 .. a_n`` with ``a_i * a_j = a_{j / gcd(i, j)}``.

    ``a_k`` has index ``k - 1``; the natural order is divisibility.
    """
    if n < 1:
        raise ValueError("n must be positive")
    table = [[j // gcd(i, j) - 1 for j in range(1, n + 1)] for i in range(1, n + 1)]
    return KUAlgebra(table, names=[f"a_{k}" for k in range(1, n + 1)])


def from_poset(leq, names: Sequence[str] | None = None) -> KUAlgebra:
    """Canonical KU-algebra of a poset whose least element is index 0.

    ``x * y = 0`` when ``y <= x`` and ``x * y = y`` otherwise.
    """
    P = leq if isinstance(leq, OrderRelation) else OrderRelation(leq)
    if not P.is_partial_order():
        raise NotAPoset("relation is not reflexive, antisymmetric and transitive")
    if not P.leq[0].all():
        raise NoLeastElement("index 0 is not the least element")
    n = P.size
    table = np.where(P.leq.T, 0, np.arange(n)[None, :])
    if names is None and isinstance(leq, OrderRelation):
        names = leq.names
    return KUAlgebra(table, names=names)


# -- enumeration -----------------------------------------------------------


def _free_cells(n):
    return [(x, y) for x in range(1, n) for y in range(1, n) if x != y]


def _skeleton(n):
    """Partial table with forced entries; unknown cells hold the sentinel n."""
    T = np.full((n + 1, n + 1), n, dtype=np.int64)
    T[:n, 0] = 0
    T[0, :n] = np.arange(n)
    T[np.arange(n), np.arange(n)] = 0
    return T


def _partial_violation(Tp, n, idx) -> bool:
    """True if some axiom instance already fails on the known entries."""
    u = n
    X, Y, Z = idx
    xy, yz, xz = Tp[X, Y], Tp[Y, Z], Tp[X, Z]
    lhs, rhs = Tp[X, yz], Tp[Y, xz]
    if ((lhs != u) & (rhs != u) & (lhs != rhs)).any():
        return True
    inner = Tp[yz, xz]
    v = Tp[xy, inner]
    if ((v != u) & (v != 0)).any():
        return True
    prem = xy == 0
    if (prem & (inner != u) & (inner != 0)).any():
        return True
    other = Tp[Tp[Z, X], Tp[Z, Y]]
    if (prem & (other != u) & (other != 0)).any():
        return True
    A = Tp[:n, :n]
    return bool(np.triu((A == 0) & (A.T == 0), 1).any())


def _relabel(T: np.ndarray, perm: Sequence[int]) -> np.ndarray:
    p = np.asarray(perm)
    out = np.empty_like(T)
    out[np.ix_(p, p)] = p[T]
    return out


def canonical_form(X) -> np.ndarray:
    """Lexicographically least table among relabelings fixing 0."""
    T = X.table if isinstance(X, KUAlgebra) else _as_table(X)
    n = T.shape[0]
    best = T
    for rest in itertools.permutations(range(1, n)):
        cand = _relabel(T, (0,) + rest)
        if tuple(cand.ravel()) < tuple(best.ravel()):
            best = cand
    return best


def _is_canonical(T: np.ndarray) -> bool:
    flat = tuple(T.ravel())
    n = T.shape[0]
    for rest in itertools.permutations(range(1, n)):
        if tuple(_relabel(T, (0,) + rest).ravel()) < flat:
            return False
    return True


def _search(n, up_to_iso, shard):
    cells = _free_cells(n)
    Tp = _skeleton(n)
    idx = np.indices((n, n, n))
    k_shard, n_shards = shard
    split = min(2, len(cells))

    def rec(depth, prefix_rank):
        if depth == split and prefix_rank % n_shards != k_shard:
            return
        if depth == len(cells):
            T = Tp[:n, :n].copy()
            if verify_axioms(T).passed and (not up_to_iso or _is_canonical(T)):
                yield T
            return
        x, y = cells[depth]
        for v in range(n):
            Tp[x, y] = v
            if not _partial_violation(Tp, n, idx):
                rank = prefix_rank * n + v if depth < split else prefix_rank
                yield from rec(depth + 1, rank)
        Tp[x, y] = n

    yield from rec(0, 0)


def enumerate_algebras(
    n: int,
    up_to_iso: bool = False,
    bound: int = DEFAULT_ENUMERATION_BOUND,
    shard: tuple[int, int] = (0, 1),
) -> Iterator[KUAlgebra]:
    """Yield every KU-algebra of order ``n`` in lexicographic table order.

    Row 0, column 0 and the diagonal are fixed before the search; the rest
    is filled by backtracking with early rejection of axiom instances whose
    entries are already known.  With ``up_to_iso`` only the lexicographically
    least table of each isomorphism class is emitted.

    ``shard=(k, K)`` restricts the search to the k-th of K disjoint slices
    of the search tree; merging all slices and sorting by table reproduces
    the unsharded output.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > bound:
        raise BoundExceeded(f"order {n} exceeds the enumeration bound {bound}")
    k, K = shard
    if not (K >= 1 and 0 <= k < K):
        raise ValueError(f"invalid shard {shard!r}")
    if n == 1:
        if k == 0:
            yield KUAlgebra([[0]], check=False)
        return
    for T in _search(n, up_to_iso, shard):
        yield KUAlgebra(T, check=False)


def _shard_tables(args):
    n, up_to_iso, bound, k, K = args
    return [X.to_rows() for X in enumerate_algebras(n, up_to_iso, bound, (k, K))]


def enumerate_algebras_parallel(n, up_to_iso=False, bound=DEFAULT_ENUMERATION_BOUND, jobs=2):
    """Same output as ``enumerate_algebras`` computed over ``jobs`` processes."""
    if n > bound:
        raise BoundExceeded(f"order {n} exceeds the enumeration bound {bound}")
    tasks = [(n, up_to_iso, bound, k, jobs) for k in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_shard_tables, tasks))
    rows = sorted((r for part in parts for r in part), key=lambda t: [v for row in t for v in row])
    return [KUAlgebra(r, check=False) for r in rows]


# -- isomorphism -----------------------------------------------------------


def _signatures(T):
    zeros = T == 0
    return [(int(zeros[x].sum()), int(zeros[:, x].sum())) for x in range(T.shape[0])]


def are_isomorphic(X: KUAlgebra, Y: KUAlgebra) -> dict[int, int] | None:
    """Find a bijection ``h`` with ``h(0) = 0`` and ``h(x*y) = h(x)*h(y)``.

    Candidates for ``h(x)`` are limited to elements of ``Y`` whose down-set
    and up-set sizes equal those of ``x``.
    """
    if X.order != Y.order:
        return None
    A, B = X.table, Y.table
    n = X.order
    sa, sb = _signatures(A), _signatures(B)
    if sorted(sa) != sorted(sb):
        return None
    options = [[y for y in range(n) if sb[y] == sa[x]] for x in range(n)]
    if 0 not in options[0]:
        return None
    h = [-1] * n
    used = [False] * n

    def consistent(k):
        # every product among assigned elements 0..k must map correctly
        for x in range(k + 1):
            for y in range(k + 1):
                if x != k and y != k:
                    continue
                z = A[x, y]
                if h[z] != -1 and h[z] != B[h[x], h[y]]:
                    return False
        return True

    def rec(k):
        if k == n:
            return all(h[A[x, y]] == B[h[x], h[y]] for x in range(n) for y in range(n))
        for c in ([0] if k == 0 else options[k]):
            if used[c]:
                continue
            h[k], used[c] = c, True
            if consistent(k) and rec(k + 1):
                return True
            h[k], used[c] = -1, False
        return False

    if rec(0):
        return {x: int(h[x]) for x in range(n)}
    return None
