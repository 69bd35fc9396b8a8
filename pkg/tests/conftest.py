import random

import pytest

from fglmcodes.code import BinaryCode
from fglmcodes.gf2 import BitMatrix, left_nullspace, rank
from fglmcodes.monomials import Monomial

PAPER_H = [
    [1, 1, 1],
    [1, 0, 1],
    [0, 1, 1],
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
]

PAPER_CODE_TEXT = "6 3\n" + "\n".join(" ".join(map(str, row)) for row in PAPER_H) + "\n"


def mono(text, n=6):
    from fglmcodes.monomials import parse_monomial
    return parse_monomial(text, n)


def random_code(rng: random.Random, n: int, r: int) -> BinaryCode:
    while True:
        rows = [[rng.randint(0, 1) for _ in range(r)] for _ in range(n)]
        if rank(BitMatrix.from_rows(rows)) == r:
            return BinaryCode.from_rows(rows)


def make_code_family(count=60, seed=2024, max_n=12, max_r=8):
    """Deterministic family of random full-rank codes with k >= 1."""
    rng = random.Random(seed)
    codes = []
    for _ in range(count):
        n = rng.randint(2, max_n)
        r = rng.randint(1, min(max_r, n - 1))
        codes.append(random_code(rng, n, r))
    return codes


def code_from_generator(gen_rows) -> BinaryCode:
    """Code with the given generator rows; H's columns span the dual code."""
    G = BitMatrix.from_rows(gen_rows)
    cols = left_nullspace(G.transpose())
    n = G.ncols
    return BinaryCode.from_rows([[(c >> i) & 1 for c in cols] for i in range(n)])


def structured_codes():
    """Codes with t >= 1, which random full-rank matrices rarely give."""
    hamming = [[1, 0, 0, 0, 1, 1, 0], [0, 1, 0, 0, 1, 0, 1],
               [0, 0, 1, 0, 0, 1, 1], [0, 0, 0, 1, 1, 1, 1]]
    codes = [
        code_from_generator(hamming),  # [7,4,3]
        code_from_generator([[1] * 5]),  # [5,1,5]
        code_from_generator([[1] * 9]),  # [9,1,9]
        code_from_generator([[1] * 5 + [0] * 5, [0] * 5 + [1] * 5]),  # [10,2,5]
    ]
    rng = random.Random(77)
    for _ in range(12):
        n = rng.randint(6, 12)
        k = rng.randint(1, 3)
        codes.append(random_code(rng, n, min(n - k, 8)))
    return codes


@pytest.fixture(scope="session")
def paper_code():
    return BinaryCode.from_rows(PAPER_H)


@pytest.fixture(scope="session")
def paper_result(paper_code):
    from fglmcodes.fglm import run_fglm
    return run_fglm(paper_code, debug=True)


@pytest.fixture(scope="session")
def code_family():
    return make_code_family() + structured_codes()


def sympy_reduced_gb(code: BinaryCode, order: str = "grevlex"):
    """Reduced GB of I(C) from sympy's Buchberger, as {lead: tail}.

    I(C) is generated by x_i^2 - 1 together with x^c - 1 for c in a basis
    of C; the squares make every variable a unit, so no saturation is needed.
    """
    import sympy

    n = code.n
    xs = sympy.symbols(f"x1:{n + 1}")
    gens = list(reversed(xs))  # x_n > ... > x_1
    polys = [x**2 - 1 for x in xs]
    for c in code.codeword_basis:
        term = sympy.Integer(1)
        for i in range(n):
            if (c >> i) & 1:
                term *= xs[i]
        polys.append(term - 1)
    G = sympy.groebner(polys, *gens, order=order, domain="QQ")
    out = {}
    for p in G.polys:
        terms = p.terms(order=order)
        assert len(terms) == 2, p
        (lm, lc), (tm, tc) = terms
        assert lc == -tc, p
        out[Monomial(tuple(reversed(lm)))] = Monomial(tuple(reversed(tm)))
    return out


# --- acceptance reporting -------------------------------------------------

_criteria: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    cid, title = marker.args
    failed = report.failed or (report.when == "call" and report.skipped)
    prev = _criteria.get(cid, (title, True))
    _criteria[cid] = (title, prev[1] and not failed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_criteria):
        title, ok = _criteria[cid]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {cid}: {title}")
