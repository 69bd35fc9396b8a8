"""FGLM pattern algorithm for the binomial ideal of a binary linear code.

The quotient ``K[X]/I(C)`` is represented by the syndrome space: a monomial
``w`` maps to ``psi(w) * H``.  Linear dependency in that representation
reduces to set membership, so the main loop only has to look a syndrome up
in a table indexed by its packed value.

One pass builds the normal set N (the 2^r standard monomials) and the
reduced Groebner basis; the multiplication tables and the border basis
are read off the completed N afterwards.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .code import BinaryCode, GuardExceeded, Syndrome
from .gf2 import BitVector
from .monomials import Monomial, TermOrdering

MAX_REDUNDANCY = 24


class InvariantViolation(RuntimeError):
    """Internal consistency of a run was broken (indicates a bug or bad input state)."""


class QueueExhausted(LookupError):
    pass


@dataclass(frozen=True)
class Binomial:
    lead: Monomial
    tail: Monomial

    def __str__(self) -> str:
        return f"{self.lead} - {self.tail}"


class NormalSet:
    """Standard monomials in admission order, with their syndromes.

    ``member`` is a dense table lookup keyed by the packed syndrome value.
    """

    def __init__(self, n: int, r: int):
        self.n = n
        self.r = r
        self.monomials: list[Monomial] = []
        self.syndromes: list[int] = []
        self._by_syndrome = [-1] * (1 << r)
        self._by_monomial: dict[Monomial, int] = {}

    def add(self, w: Monomial, syndrome: int) -> int:
        if self._by_syndrome[syndrome] != -1:
            raise InvariantViolation(f"syndrome of {w} already present")
        idx = len(self.monomials)
        self.monomials.append(w)
        self.syndromes.append(syndrome)
        self._by_syndrome[syndrome] = idx
        self._by_monomial[w] = idx
        return idx

    def member(self, v: Syndrome | int) -> int | None:
        """Index of the normal monomial with syndrome ``v``, or ``None``."""
        key = v.bits if isinstance(v, BitVector) else v
        idx = self._by_syndrome[key]
        return None if idx < 0 else idx

    def index(self, w: Monomial) -> int | None:
        return self._by_monomial.get(w)

    def syndrome_of(self, w: Monomial) -> int:
        return self.syndromes[self._by_monomial[w]]

    def __getitem__(self, i: int) -> Monomial:
        return self.monomials[i]

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.monomials)

    def __contains__(self, w: object) -> bool:
        return w in self._by_monomial

    def is_complete(self) -> bool:
        return len(self.monomials) == 1 << self.r

    def copy_without(self, w: Monomial) -> "NormalSet":
        """A copy lacking ``w``; only useful for fault-injection tests."""
        out = NormalSet(self.n, self.r)
        for m, v in zip(self.monomials, self.syndromes):
            if m != w:
                out.add(m, v)
        return out


@dataclass(frozen=True)
class MatphiSet:
    """Multiplication tables: ``tables[k][i]`` is the index j with N_i * x_{k+1} = N_j."""

    s: int
    tables: tuple[tuple[int, ...], ...]

    def apply(self, var: int, i: int) -> int:
        """Image of normal index ``i`` under multiplication by ``x_var`` (1-based var)."""
        return self.tables[var - 1][i]

    def as_matrix(self, var: int) -> list[list[int]]:
        t = self.tables[var - 1]
        return [[1 if j == t[i] else 0 for j in range(self.s)] for i in range(self.s)]

    def violations(self) -> list[str]:
        out = []
        ident = tuple(range(self.s))
        for k, t in enumerate(self.tables, start=1):
            if sorted(t) != list(ident):
                out.append(f"phi({k}) is not a permutation")
                continue
            if tuple(t[t[i]] for i in ident) != ident:
                out.append(f"phi({k}) is not an involution")
        for a in range(len(self.tables)):
            for b in range(a + 1, len(self.tables)):
                ta, tb = self.tables[a], self.tables[b]
                if any(ta[tb[i]] != tb[ta[i]] for i in ident):
                    out.append(f"phi({a + 1}) and phi({b + 1}) do not commute")
        return out


class TermQueue:
    """Pending terms in increasing order, each with an insertion counter.

    A term reached from every one of its predecessors has been inserted
    ``support_size`` times; anything less means some predecessor is not a
    standard monomial.
    """

    def __init__(self, ordering: TermOrdering):
        self.ordering = ordering
        self._heap: list[tuple[tuple[int, ...], Monomial]] = []
        self._counts: dict[Monomial, int] = {}

    def push(self, m: Monomial, count: int = 1) -> None:
        if m in self._counts:
            self._counts[m] += count
        else:
            self._counts[m] = count
            heapq.heappush(self._heap, (self.ordering.key(m), m))

    def insert_nexts(self, w: Monomial) -> "TermQueue":
        for i in range(1, w.n + 1):
            self.push(w.multiply(i))
        return self

    def next_term(self) -> tuple[Monomial, int]:
        if not self._heap:
            raise QueueExhausted("term queue is empty")
        _, m = heapq.heappop(self._heap)
        return m, self._counts.pop(m)

    def count(self, m: Monomial) -> int:
        return self._counts.get(m, 0)

    def keys(self) -> list[Monomial]:
        return [m for _, m in sorted(self._heap)]

    def __len__(self) -> int:
        return len(self._heap)

    def __bool__(self) -> bool:
        return bool(self._heap)


def insert_nexts(q: TermQueue, w: Monomial, ordering: TermOrdering | None = None) -> TermQueue:
    if ordering is not None and TermOrdering.parse(ordering) is not q.ordering:
        raise ValueError("queue was built for a different ordering")
    return q.insert_nexts(w)


def next_term(q: TermQueue) -> tuple[Monomial, int]:
    return q.next_term()


def step4_passes(w: Monomial, count: int) -> bool:
    """True iff every predecessor of ``w`` is a standard monomial."""
    return count == w.support_size()


def incremental_syndrome(w: Monomial, normal: NormalSet, code: BinaryCode) -> int:
    """Packed syndrome of ``w`` as syndrome(u) + row_i(H) for some u*x_i = w, u in N."""
    if w.is_one():
        return 0
    for i in w.support():
        u = w.quotient(Monomial.var(w.n, i))
        idx = normal.index(u)
        if idx is not None:
            return normal.syndromes[idx] ^ code.rows[i - 1]
    raise InvariantViolation(f"no predecessor of {w} is in the normal set")


def detect_t(gb_in_processing_order: Sequence[Binomial]) -> int | None:
    """Error-correcting capability read from the first squarefree leading term.

    Returns ``None`` if no squarefree monomial ever collided (the trivial
    code, where every vector is its own coset leader).
    """
    for b in gb_in_processing_order:
        if b.lead.is_squarefree():
            return b.lead.degree() - 1
    return None


@dataclass(frozen=True)
class TraceEvent:
    term: Monomial
    count: int
    step4: bool
    explicit: bool
    action: str  # "normal", "lead" or "skip"


@dataclass
class FglmResult:
    code: BinaryCode
    ordering: TermOrdering
    gb: list[Binomial]
    normal_set: NormalSet
    matphi: MatphiSet | None = None
    border: list[Binomial] | None = None
    t_detected: int | None = None
    trace: list[TraceEvent] | None = field(default=None, repr=False)

    @property
    def leads(self) -> list[Monomial]:
        return [b.lead for b in self.gb]

    @property
    def step4_disagreements(self) -> list[TraceEvent]:
        if self.trace is None:
            raise ValueError("run was not traced; pass debug=True")
        return [e for e in self.trace if e.step4 != e.explicit]


def run_fglm(
    code: BinaryCode,
    ordering: TermOrdering | str = TermOrdering.DEGREVLEX,
    *,
    want_matphi: bool = True,
    want_border: bool = True,
    want_t: bool = True,
    debug: bool = False,
) -> FglmResult:
    """Compute the reduced Groebner basis and normal set of I(C).

    With ``debug=True`` every loop iteration also checks the counter test
    against explicit divisibility by the leads found so far; the outcome is
    kept in ``result.trace``.
    """
    ordering = TermOrdering.parse(ordering)
    if code.r > MAX_REDUNDANCY:
        raise GuardExceeded(f"r={code.r} exceeds memory guard {MAX_REDUNDANCY}")
    n = code.n
    normal = NormalSet(n, code.r)
    gb: list[Binomial] = []
    trace: list[TraceEvent] | None = [] if debug else None

    queue = TermQueue(ordering)
    queue.push(Monomial.one(n), count=0)
    while queue:
        w, count = queue.next_term()
        passes = step4_passes(w, count)
        explicit = passes
        if debug:
            explicit = not any(b.lead.divides(w) for b in gb)
        if not passes:
            if debug:
                trace.append(TraceEvent(w, count, passes, explicit, "skip"))
            continue
        v = incremental_syndrome(w, normal, code)
        j = normal.member(v)
        if j is not None:
            gb.append(Binomial(w, normal[j]))
            action = "lead"
        else:
            normal.add(w, v)
            queue.insert_nexts(w)
            action = "normal"
        if debug:
            trace.append(TraceEvent(w, count, passes, explicit, action))

    if not normal.is_complete():
        raise InvariantViolation(f"normal set has {len(normal)} elements, expected {1 << code.r}")

    result = FglmResult(code, ordering, gb, normal, trace=trace)
    if want_matphi or want_border:
        matphi = compute_matphi(normal, code)
        result.matphi = matphi if want_matphi else None
        if want_border:
            result.border = compute_border_basis(normal, matphi, ordering)
    if want_t and ordering.degree_compatible:
        result.t_detected = detect_t(gb)
    return result


def compute_matphi(normal: NormalSet, code: BinaryCode) -> MatphiSet:
    if not normal.is_complete():
        raise InvariantViolation("matphi needs the complete normal set")
    tables = []
    for row in code.rows:
        t = []
        for v in normal.syndromes:
            j = normal.member(v ^ row)
            if j is None:
                raise InvariantViolation("syndrome missing from normal set")
            t.append(j)
        tables.append(tuple(t))
    return MatphiSet(len(normal), tuple(tables))


def border_terms(normal: NormalSet) -> list[Monomial]:
    """Monomials u*x_k with u standard and u*x_k not standard, without repeats."""
    seen: dict[Monomial, None] = {}
    for u in normal:
        for k in range(1, normal.n + 1):
            m = u.multiply(k)
            if m not in normal:
                seen[m] = None
    return list(seen)


def compute_border_basis(normal: NormalSet, matphi: MatphiSet,
                         ordering: TermOrdering | None = None) -> list[Binomial]:
    """Binomials ``w - Can(w)`` over the border of N.

    The canonical form of ``u*x_k`` is read from the table of ``x_k`` at the
    index of ``u``.  Sorted by leading term when ``ordering`` is given,
    otherwise in the order the border terms are first reached from N.
    """
    out: dict[Monomial, Monomial] = {}
    for i, u in enumerate(normal):
        for k in range(1, normal.n + 1):
            m = u.multiply(k)
            if m not in normal and m not in out:
                out[m] = normal[matphi.apply(k, i)]
    binomials = [Binomial(m, c) for m, c in out.items()]
    if ordering is not None:
        binomials.sort(key=lambda b: ordering.key(b.lead))
    return binomials
