"""Machine-check the cut-set laws of a KU-function on one concrete instance.

Each claim is evaluated exhaustively in up to two variants:

``literal``
    the statement with the set operations exactly as usually printed
    (unions for the meet laws, the up-set ``{x : x * q = 0}`` for ``(q]``).
``corrected``
    the form that actually holds for down-set cuts (intersections for the
    meet laws, the down-set ``{x : q * x = 0}`` for ``(q]``).

Claims whose statement needs no correction are reported under both
variants with the same predicate.  Every failing entry carries a witness
that :func:`recheck` re-evaluates from scratch.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .function import KUFunction, _cut_bits

LITERAL = "literal"
CORRECTED = "corrected"

DEFAULT_MAX_SUBSET = 3
EXHAUSTIVE_SUBSET_ORDER = 5


@dataclass(frozen=True)
class AuditEntry:
    claim: str
    variant: str
    passed: bool
    witness: dict | None = None
    counterexamples: tuple[tuple, ...] = ()
    checked: int = 0
    note: str = ""

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        text = f"{self.claim:<22} {self.variant:<9} {verdict}"
        if self.note:
            text += f"  ({self.note})"
        if self.witness is not None:
            shown = ", ".join(f"{k}={_show(v)}" for k, v in self.witness.items())
            text += f"  witness: {shown}"
        return text


def _show(v):
    if isinstance(v, (set, frozenset)):
        return "{" + ",".join(sorted(str(x) for x in v)) + "}"
    if isinstance(v, tuple):
        return "(" + ",".join(str(x) for x in v) + ")"
    return str(v)


@dataclass(frozen=True)
class AuditReport:
    entries: tuple[AuditEntry, ...] = field(default_factory=tuple)

    def get(self, claim: str, variant: str = CORRECTED) -> AuditEntry:
        for e in self.entries:
            if e.claim == claim and e.variant == variant:
                return e
        raise KeyError((claim, variant))

    def passed(self, variant: str | None = None) -> bool:
        return all(e.passed for e in self.entries if variant is None or e.variant == variant)

    def failures(self) -> list[AuditEntry]:
        return [e for e in self.entries if not e.passed]

    def to_text(self, variants=(CORRECTED, LITERAL)) -> str:
        return "\n".join(e.line() for e in self.entries if e.variant in variants)


class _Instance:
    """Cut family of one function as bitmasks over domain positions."""

    def __init__(self, f: KUFunction, max_subset: int, literal_cuts: bool):
        self.f = f
        X = f.algebra
        self.X = X
        self.n = X.order
        self.m = f.size
        self.T = X.table.tolist()
        self.leq = X.natural_order.leq.tolist()
        bits = _cut_bits(f, literal_cuts)
        self.cut = [sum(1 << i for i in range(self.m) if bits[q][i]) for q in range(self.n)]
        self.family = frozenset(self.cut)
        self.full = (1 << self.m) - 1
        self.cap = self.n if self.n <= EXHAUSTIVE_SUBSET_ORDER else max_subset
        self._inf = {}

    def inf(self, ys):
        ys = tuple(sorted(ys))
        if ys not in self._inf:
            self._inf[ys] = self.X.natural_order.infimum(ys)
        return self._inf[ys]

    def meet_complete(self):
        # pairwise infima give all nonempty finite infima by induction
        return all(self.inf(ys) is not None for ys in itertools.combinations(range(self.n), 2))

    def subsets(self, cap):
        for k in range(1, cap + 1):
            yield from itertools.combinations(range(self.n), k)

    def positions(self, mask):
        return frozenset(self.f.labels[i] for i in range(self.m) if mask >> i & 1)

    def elements(self, xs):
        return frozenset(self.X.names[x] for x in xs)

    def name(self, q):
        return self.X.names[q]


def _union(cuts):
    out = 0
    for c in cuts:
        out |= c
    return out


def _inter(cuts, full):
    out = full
    for c in cuts:
        out &= c
    return out


@dataclass(frozen=True)
class _Claim:
    name: str
    variants: tuple[str, ...]
    args: Callable[[_Instance], Iterator[tuple]]
    check: Callable[[_Instance, str, tuple], tuple[bool, dict]]
    guard: Callable[[_Instance], bool] | None = None


# Claim predicates. Each returns (holds, witness details).


def _inf_representation(I, variant, args):
    (i,) = args
    qs = [q for q in range(I.n) if I.cut[q] >> i & 1]
    inf = I.inf(qs) if qs else None
    ok = inf == I.f.image[i]
    return ok, {"x": I.f.labels[i], "inf": None if inf is None else I.name(inf), "value": I.name(I.f.image[i])}


def _cut_monotone(I, variant, args):
    p, q = args
    ok = I.cut[p] & ~I.cut[q] == 0
    return ok, {"p": I.name(p), "q": I.name(q), "A_p": I.positions(I.cut[p]), "A_q": I.positions(I.cut[q])}


def _cut_injective(I, variant, args):
    x, y = args
    fx, fy = I.f.image[x], I.f.image[y]
    ok = (fx != fy) == (I.cut[fx] != I.cut[fy])
    return ok, {"x": I.f.labels[x], "y": I.f.labels[y]}


def _cut_inclusion(I, variant, args):
    q, x = args
    fx = I.f.image[x]
    below = I.T[fx][q] == 0 if variant == LITERAL else I.T[q][fx] == 0
    included = I.cut[fx] & ~I.cut[q] == 0
    return below == included, {"q": I.name(q), "x": I.f.labels[x], "f(x)": I.name(fx)}


def _cut_order(I, variant, args):
    x, y = args
    fx, fy = I.f.image[x], I.f.image[y]
    ok = (I.T[fx][fy] == 0) == (I.cut[fy] & ~I.cut[fx] == 0)
    return ok, {"x": I.f.labels[x], "y": I.f.labels[y]}


def _meet_cut(I, variant, ys):
    inf = I.inf(ys)
    cuts = [I.cut[q] for q in ys]
    rhs = _union(cuts) if variant == LITERAL else _inter(cuts, I.full)
    ok = I.cut[inf] == rhs
    return ok, {
        "Y": I.elements(ys),
        "inf": I.name(inf),
        "A_inf": I.positions(I.cut[inf]),
        ("union" if variant == LITERAL else "intersection"): I.positions(rhs),
    }


def _pair_cut_closure(I, variant, args):
    p, q = args
    combined = I.cut[p] | I.cut[q] if variant == LITERAL else I.cut[p] & I.cut[q]
    return combined in I.family, {"p": I.name(p), "q": I.name(q), "combined": I.positions(combined)}


def _cut_cover(I, variant, args):
    total = _inter(I.cut, I.full) if variant == LITERAL else _union(I.cut)
    return total == I.full, {"combined": I.positions(total), "A": I.positions(I.full)}


def _cut_principal(I, variant, args):
    (i,) = args
    cuts = [c for c in I.cut if c >> i & 1]
    if variant == LITERAL:
        combined = _union(cuts)
        ok = combined in I.family
    else:
        combined = _inter(cuts, I.full)
        ok = combined == I.cut[I.f.image[i]]
    return ok, {"x": I.f.labels[i], "combined": I.positions(combined)}


def _theta_downset(I, variant, args):
    p, q = args
    same_cut = I.cut[p] == I.cut[q]
    img = I.f.image_set
    if variant == LITERAL:
        dp = {x for x in range(I.n) if I.T[x][p] == 0} | img
        dq = {x for x in range(I.n) if I.T[x][q] == 0} | img
    else:
        dp = {x for x in range(I.n) if I.T[p][x] == 0} & img
        dq = {x for x in range(I.n) if I.T[q][x] == 0} & img
    return same_cut == (dp == dq), {
        "p": I.name(p),
        "q": I.name(q),
        "same_cut": same_cut,
        "(p]": I.elements(dp),
        "(q]": I.elements(dq),
    }


def _class_minimum(I, variant, args):
    (i,) = args
    fx = I.f.image[i]
    cls = [q for q in range(I.n) if I.cut[q] == I.cut[fx]]
    ok = all(I.leq[fx][q] for q in cls)
    return ok, {"x": I.f.labels[i], "class": I.elements(cls)}


BOTH = (LITERAL, CORRECTED)

CLAIMS = (
    _Claim("inf_representation", BOTH, lambda I: ((i,) for i in range(I.m)), _inf_representation),
    _Claim(
        "cut_monotone",
        BOTH,
        lambda I: ((p, q) for p in range(I.n) for q in range(I.n) if I.T[q][p] == 0),
        _cut_monotone,
    ),
    _Claim("cut_injective", BOTH, lambda I: itertools.product(range(I.m), repeat=2), _cut_injective),
    _Claim(
        "cut_inclusion",
        BOTH,
        lambda I: itertools.product(range(I.n), range(I.m)),
        _cut_inclusion,
    ),
    _Claim("cut_order", BOTH, lambda I: itertools.product(range(I.m), repeat=2), _cut_order),
    _Claim(
        "meet_cut",
        BOTH,
        lambda I: (ys for ys in I.subsets(I.cap) if I.inf(ys) is not None),
        _meet_cut,
    ),
    _Claim(
        "complete_meet_cut",
        BOTH,
        lambda I: I.subsets(I.cap),
        _meet_cut,
        guard=lambda I: I.meet_complete(),
    ),
    _Claim(
        "pair_cut_closure",
        BOTH,
        lambda I: itertools.combinations_with_replacement(range(I.n), 2),
        _pair_cut_closure,
        guard=lambda I: I.meet_complete(),
    ),
    _Claim("cut_cover", BOTH, lambda I: iter([()]), _cut_cover),
    _Claim("cut_principal", BOTH, lambda I: ((i,) for i in range(I.m)), _cut_principal),
    _Claim("theta_downset", BOTH, lambda I: itertools.product(range(I.n), repeat=2), _theta_downset),
    _Claim("theta_class_minimum", (CORRECTED,), lambda I: ((i,) for i in range(I.m)), _class_minimum),
)

CLAIM_NAMES = tuple(c.name for c in CLAIMS)
_BY_NAME = {c.name: c for c in CLAIMS}


def audit_propositions(
    f: KUFunction,
    max_subset: int = DEFAULT_MAX_SUBSET,
    literal_cuts: bool = False,
    claims=None,
) -> AuditReport:
    """Evaluate every claim (or those named in ``claims``) on ``f``.

    Subset-quantified claims range over nonempty ``Y`` with
    ``|Y| <= max_subset``; when the algebra has at most five elements all
    subsets are used.  ``literal_cuts`` evaluates with the cut convention
    ``f(i) * q == 0`` instead of ``q * f(i) == 0``.
    """
    if max_subset < 1:
        raise ValueError("max_subset must be at least 1")
    I = _Instance(f, max_subset, literal_cuts)
    entries = []
    for claim in CLAIMS:
        if claims is not None and claim.name not in claims:
            continue
        vacuous = claim.guard is not None and not claim.guard(I)
        for variant in claim.variants:
            if vacuous:
                entries.append(AuditEntry(claim.name, variant, True, note="vacuous: not meet-complete"))
                continue
            witness, bad, count = None, [], 0
            for args in claim.args(I):
                count += 1
                ok, detail = claim.check(I, variant, args)
                if not ok:
                    if witness is None:
                        witness = {"args": tuple(args), **detail}
                    bad.append(tuple(args))
            entries.append(AuditEntry(claim.name, variant, not bad, witness, tuple(bad), count))
    return AuditReport(tuple(entries))


def evaluate_claim(f: KUFunction, claim: str, variant: str, args, literal_cuts: bool = False):
    """Evaluate one claim at explicit arguments; returns ``(holds, details)``."""
    I = _Instance(f, DEFAULT_MAX_SUBSET, literal_cuts)
    return _BY_NAME[claim].check(I, variant, tuple(args))


def recheck(f: KUFunction, entry: AuditEntry, literal_cuts: bool = False) -> bool:
    """Re-evaluate a claim at the witness stored in ``entry``."""
    if entry.witness is None:
        raise ValueError("entry has no witness")
    return evaluate_claim(f, entry.claim, entry.variant, entry.witness["args"], literal_cuts)[0]
