from __future__ import annotations

import itertools
from pathlib import Path

import numpy as np
import pytest

from gldpc_spectrum.ensemble import CNType, Ensemble
from gldpc_spectrum.enumerators import Enumerator, hamming74, spc
from gldpc_spectrum.gf2codes import GF2Matrix, enumerate_wef, hamming74_generator

CONFIGS = Path(__file__).resolve().parents[1] / "configs"

EX2_TYPE2 = Enumerator(7, {0: 1, 2: 5, 4: 7, 6: 3})
EX3_WEF = Enumerator(5, {0: 1, 2: 3, 3: 3, 5: 1})


def ex1(kind: str = "weight") -> Ensemble:
    return Ensemble.build(2, [CNType.from_generator("1", hamming74_generator(), gamma=1.0)], kind)


def ex2(g2: float = 0.278) -> Ensemble:
    return Ensemble.build(
        3,
        [CNType("1", spc(7), h=6, gamma=1.0 - g2), CNType("2", EX2_TYPE2, h=4, gamma=g2)],
    )


def ex3() -> Ensemble:
    return Ensemble.build(2, [CNType("1", EX3_WEF, h=3, gamma=1.0)])


def ldpc36() -> Ensemble:
    return Ensemble.build(3, [CNType("1", spc(6), h=5, gamma=1.0)])


def symmetric_hybrid() -> Ensemble:
    """Hamming(7,4) and SPC(6) mixed; both contain the all-ones word."""
    return Ensemble.build(3, [CNType("h", hamming74(), h=4, rho=0.4), CNType("p", spc(6), h=5, rho=0.6)])


# -- independent brute-force oracles ---------------------------------------


def codewords(g: GF2Matrix) -> set[tuple[int, ...]]:
    """Every message times G, by explicit mod-2 matrix products."""
    G = np.array(g.bits, dtype=np.int64)
    words = set()
    for msg in itertools.product((0, 1), repeat=g.rows):
        words.add(tuple(int(b) for b in (np.array(msg) @ G) % 2))
    return words


def oracle_wef(g: GF2Matrix) -> dict[int, int]:
    counts: dict[int, int] = {}
    for w in codewords(g):
        counts[sum(w)] = counts.get(sum(w), 0) + 1
    return counts


def oracle_map_ssef(g: GF2Matrix) -> dict[int, int]:
    """Count erasure sets E in which every erased bit is covered by a codeword inside E.

    A bit is unrecoverable under MAP decoding exactly when two codewords that
    agree outside E differ on it, i.e. when some codeword supported in E
    has a one there.
    """
    words = codewords(g)
    s = g.cols
    counts: dict[int, int] = {}
    for size in range(s + 1):
        for erased in itertools.combinations(range(s), size):
            E = set(erased)
            covered = set()
            for w in words:
                supp = {i for i, b in enumerate(w) if b}
                if supp <= E:
                    covered |= supp
            if covered == E:
                counts[size] = counts.get(size, 0) + 1
    return counts


def random_generator(rng: np.random.Generator, max_cols: int = 10, min_distance: int = 2) -> GF2Matrix:
    """Full-rank generator with no idle column and the requested minimum distance."""
    while True:
        s = int(rng.integers(3, max_cols + 1))
        h = int(rng.integers(1, s))
        rows = rng.integers(0, 2, size=(h, s))
        if rng.random() < 0.5:
            rows[-1] = 1  # make the all-ones word likely to be present
        g = GF2Matrix.from_rows(rows.tolist())
        if g.has_zero_column():
            continue
        try:
            wef = enumerate_wef(g)
        except ValueError:
            continue
        if wef.min_weight >= min_distance:
            return g


def random_corpus(n: int = 50, seed: int = 20240611) -> list[GF2Matrix]:
    rng = np.random.default_rng(seed)
    return [random_generator(rng) for _ in range(n)]


@pytest.fixture(scope="session")
def corpus() -> list[GF2Matrix]:
    return random_corpus()


# -- acceptance summary --------------------------------------------------------
#
# Tests marked ``@pytest.mark.acceptance("id", "description")`` get one
# PASS/FAIL line each in the terminal summary.

_ACCEPTANCE: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(id, text): acceptance criterion with a summary line")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    cid, text = mark.args
    if call.when == "setup" and call.excinfo is not None:
        _ACCEPTANCE[cid] = ("FAIL", text)
    elif call.when == "call":
        _ACCEPTANCE[cid] = ("PASS" if call.excinfo is None else "FAIL", text)


def _criterion_key(cid: str) -> tuple[int, str]:
    digits = "".join(ch for ch in cid if ch.isdigit())
    return int(digits or 0), cid


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_ACCEPTANCE, key=_criterion_key):
        status, text = _ACCEPTANCE[cid]
        terminalreporter.write_line(f"{status}  [{cid}] {text}")
    failed = sum(1 for s, _ in _ACCEPTANCE.values() if s == "FAIL")
    terminalreporter.write_line(f"{len(_ACCEPTANCE) - failed}/{len(_ACCEPTANCE)} criteria passed")
