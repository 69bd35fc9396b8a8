"""Brute-force ground truth for the FGLM engine and the decoder.

Nothing here calls into the engine's algorithm: syndromes are recomputed
from H with plain GF(2) products, coset leaders come from scanning all of
F_2^n, and a computed result is only inspected as data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .code import BinaryCode, GuardExceeded, UndefinedDistanceError
from .gf2 import BitVector, mul_packed

MAX_TABLE_LENGTH = 16
MAX_DECODE_LENGTH = 12


@dataclass(frozen=True)
class CosetTable:
    n: int
    r: int
    min_weight: tuple[int, ...]
    leader: tuple[int, ...]  # packed; smallest integer among minimum-weight members
    leader_count: tuple[int, ...]  # how many members attain the minimum weight
    size: tuple[int, ...]

    def entry(self, syndrome: BitVector | int) -> tuple[int, BitVector]:
        s = syndrome.bits if isinstance(syndrome, BitVector) else syndrome
        return self.min_weight[s], BitVector(self.n, self.leader[s])

    def is_unique(self, syndrome: int) -> bool:
        return self.leader_count[syndrome] == 1


def all_syndromes(code: BinaryCode) -> list[int]:
    """Packed syndrome of every y in F_2^n, indexed by the packed y."""
    n = code.n
    if n > MAX_TABLE_LENGTH:
        raise GuardExceeded(f"n={n} exceeds brute-force guard {MAX_TABLE_LENGTH}")
    rows = code.rows
    syn = [0] * (1 << n)
    for y in range(1, 1 << n):
        low = y & -y
        syn[y] = syn[y ^ low] ^ rows[low.bit_length() - 1]
    return syn


def build_coset_table(code: BinaryCode) -> CosetTable:
    syn = all_syndromes(code)
    s = 1 << code.r
    big = code.n + 1
    min_w = [big] * s
    leader = [0] * s
    count = [0] * s
    size = [0] * s
    for y, v in enumerate(syn):
        w = y.bit_count()
        size[v] += 1
        if w < min_w[v]:
            min_w[v], leader[v], count[v] = w, y, 1
        elif w == min_w[v]:
            count[v] += 1
    if big in min_w:
        raise ValueError("some syndrome is never attained; H is not full rank")
    return CosetTable(code.n, code.r, tuple(min_w), tuple(leader), tuple(count), tuple(size))


@dataclass
class Report:
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, msg: str) -> None:
        self.violations.append(msg)

    def extend(self, other: "Report") -> "Report":
        self.violations.extend(other.violations)
        return self

    def __str__(self) -> str:
        if self.passed:
            return "PASS"
        return "\n".join(["FAIL"] + [f"  {v}" for v in self.violations])


def _packed(m) -> int:
    bits = 0
    for i, e in enumerate(m.exponents):
        if e & 1:
            bits |= 1 << i
    return bits


def _syndrome(code: BinaryCode, m) -> int:
    return mul_packed(_packed(m), code.rows)


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a.exponents, b.exponents))


def _bump(m, i: int, delta: int):
    exps = list(m.exponents)
    exps[i] += delta
    return type(m)(tuple(exps))


def verify_gb(result, exhaustive_normal_set: bool = True) -> Report:
    """Structural checks on a computed Groebner basis, normal set, tables and border.

    With ``exhaustive_normal_set`` (and n <= 16) the normal set is also
    compared against the smallest squarefree member of every syndrome class.
    """
    rep = Report()
    code = result.code
    key = result.ordering.key
    normal = list(result.normal_set)
    nset = set(normal)
    leads = [b.lead for b in result.gb]
    lead_set = set(leads)

    expected = 1 << code.r
    if len(normal) != expected:
        rep.add(f"normal set has {len(normal)} elements, expected {expected}")

    seen: dict[int, object] = {}
    for m in normal:
        if any(e > 1 for e in m.exponents):
            rep.add(f"normal monomial {m} is not squarefree")
        v = _syndrome(code, m)
        if v in seen:
            rep.add(f"normal monomials {seen[v]} and {m} share a syndrome")
        seen[v] = m
        for i, e in enumerate(m.exponents):
            if e and _bump(m, i, -1) not in nset:
                rep.add(f"normal set is not an order ideal: {m} has divisor {_bump(m, i, -1)} outside")
    if normal and any(normal[0].exponents):
        rep.add("first normal monomial is not 1")
    recorded = getattr(result.normal_set, "syndromes", None)
    if recorded is not None:
        for m, v in zip(normal, recorded):
            if v != _syndrome(code, m):
                rep.add(f"stored syndrome of {m} is wrong")

    for b in result.gb:
        if _syndrome(code, b.lead) != _syndrome(code, b.tail):
            rep.add(f"unsound binomial {b}: syndromes differ")
        if not key(b.tail) < key(b.lead):
            rep.add(f"binomial {b}: tail is not smaller than lead")
        if b.tail not in nset:
            rep.add(f"binomial {b}: tail not in normal set")
        if b.lead in nset:
            rep.add(f"binomial {b}: lead is a normal monomial")
        for i, e in enumerate(b.lead.exponents):
            if e and _bump(b.lead, i, -1) not in nset:
                rep.add(f"binomial {b}: predecessor {_bump(b.lead, i, -1)} not in normal set")
    if len(lead_set) != len(leads):
        rep.add("repeated leading terms")
    for a, b in combinations(leads, 2):
        if _divides(a, b) or _divides(b, a):
            rep.add(f"leading terms {a} and {b} divide one another")

    # Every term one step outside N must lie in the ideal generated by the leads.
    border = set()
    for m in normal:
        for i in range(code.n):
            u = _bump(m, i, 1)
            if u not in nset:
                border.add(u)
                if not any(_divides(ld, u) for ld in leads):
                    rep.add(f"{u} is outside N but not divisible by any leading term")

    if exhaustive_normal_set and code.n <= MAX_TABLE_LENGTH:
        best: dict[int, tuple] = {}
        one = normal[0] if normal else None
        if one is not None:
            for y in range(1 << code.n):
                m = type(one)(tuple((y >> i) & 1 for i in range(code.n)))
                v = mul_packed(y, code.rows)
                if v not in best or key(m) < best[v][0]:
                    best[v] = (key(m), m)
            if {m for _, m in best.values()} != nset:
                rep.add("normal set differs from the minimal squarefree coset representatives")

    if result.matphi is not None:
        rep.extend(_verify_matphi(result, normal))
    if result.border is not None:
        rep.extend(_verify_border(result, border))
    return rep


def _verify_matphi(result, normal) -> Report:
    rep = Report()
    code = result.code
    mp = result.matphi
    if mp.s != len(normal) or len(mp.tables) != code.n:
        rep.add(f"matphi shape {len(mp.tables)}x{mp.s} does not match n={code.n}, s={len(normal)}")
        return rep
    s = mp.s
    for k, t in enumerate(mp.tables, start=1):
        if sorted(t) != list(range(s)):
            rep.add(f"phi({k}) is not a permutation")
            continue
        if any(t[t[i]] != i for i in range(s)):
            rep.add(f"phi({k}) is not an involution")
        for i, j in enumerate(t):
            if _syndrome(code, normal[i]) ^ code.rows[k - 1] != _syndrome(code, normal[j]):
                rep.add(f"phi({k}) maps {normal[i]} to {normal[j]}, wrong class")
                break
    for a, b in combinations(range(code.n), 2):
        ta, tb = mp.tables[a], mp.tables[b]
        if len(ta) == len(tb) == s and any(ta[tb[i]] != tb[ta[i]] for i in range(s)):
            rep.add(f"phi({a + 1}) and phi({b + 1}) do not commute")
    return rep


def _verify_border(result, border_terms: set) -> Report:
    rep = Report()
    code = result.code
    nset = set(result.normal_set)
    got = {b.lead: b.tail for b in result.border}
    if set(got) != border_terms:
        rep.add(f"border has {len(got)} terms, expected {len(border_terms)}")
    for lead, tail in got.items():
        if _syndrome(code, lead) != _syndrome(code, tail) or tail not in nset:
            rep.add(f"border binomial {lead} - {tail} is wrong")
    for b in result.gb:
        if got.get(b.lead) != b.tail:
            rep.add(f"border basis is missing {b}")
    return rep


def verify_t(result) -> Report:
    rep = Report()
    try:
        t = result.code.error_capability()
    except UndefinedDistanceError:
        t = None
    if result.t_detected != t:
        rep.add(f"detected t={result.t_detected}, brute force gives t={t}")
    return rep


def verify_decoding(code: BinaryCode, result, t: int | None = None,
                    table: CosetTable | None = None) -> Report:
    """Decode every vector of F_2^n and compare against the coset table.

    ``t`` overrides the capability used for decoding (for fault injection);
    the expectations always use the brute-force capability of the code.
    """
    from .decoder import decode

    if code.n > MAX_DECODE_LENGTH:
        raise GuardExceeded(f"n={code.n} exceeds exhaustive decoding guard {MAX_DECODE_LENGTH}")
    rep = Report()
    table = table or build_coset_table(code)
    try:
        t_true = code.error_capability()
    except UndefinedDistanceError:
        t_true = code.n
    t_used = t_true if t is None else t
    for s in range(1 << code.r):
        if table.min_weight[s] <= t_true and not table.is_unique(s):
            rep.add(f"syndrome {s}: coset of weight {table.min_weight[s]} <= t has several leaders")
    syn = all_syndromes(code)
    for y in range(1 << code.n):
        yv = BitVector(code.n, y)
        res = decode(yv, result, t=t_used)
        s = syn[y]
        mw = table.min_weight[s]
        if res.canonical_weight != mw:
            rep.add(f"y={yv.to_string()}: canonical weight {res.canonical_weight}, coset minimum {mw}")
        if mw <= t_true:
            if not res.decoded:
                rep.add(f"y={yv.to_string()}: {mw} errors reported as too many")
            elif res.error.bits != table.leader[s] or not table.is_unique(s):
                rep.add(f"y={yv.to_string()}: error {res.error.to_string()} is not the unique leader")
        elif res.decoded:
            rep.add(f"y={yv.to_string()}: decoded although coset weight {mw} > t={t_true}")
        if res.decoded and mul_packed(res.codeword.bits, code.rows):
            rep.add(f"y={yv.to_string()}: decoded word is not a codeword")
    return rep
