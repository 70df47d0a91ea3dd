import itertools
from pathlib import Path

import pytest
from hypothesis import strategies as st

from bikei import make_constant_action, make_tsr, parse_presentation_file
from bikei.birack import TsrParams

DATA = Path(__file__).resolve().parent.parent / "data"


def brute_count(P, X):
    """Try every assignment of elements to generators."""
    total = 0
    for a in itertools.product(range(X.n), repeat=P.generator_count):
        if all((X.b1[a[i]][a[j]], X.b2[a[i]][a[j]]) == (a[k], a[l]) for i, j, k, l in P.relations):
            total += 1
    return total


def brute_labelings(P, X):
    for a in itertools.product(range(X.n), repeat=P.generator_count):
        if all((X.b1[a[i]][a[j]], X.b2[a[i]][a[j]]) == (a[k], a[l]) for i, j, k, l in P.relations):
            yield a


def naive_closure(X, seed):
    s = set(seed)
    while True:
        new = {v for x in s for y in s for v in (X.b1[x][y], X.b2[x][y])} | s
        if new == s:
            return s
        s = new


@pytest.fixture
def fox():
    return make_tsr(3, 2, 2, 1)


@pytest.fixture
def z4():
    return make_tsr(4, 1, 2, 3)


@pytest.fixture
def z11():
    return make_tsr(11, 6, 5, 3)


@pytest.fixture
def swap2():
    """Constant action on two points, sigma = swap, rho = id: involutory, rank 2."""
    return make_constant_action((1, 0), (0, 1))


@pytest.fixture
def vk33_down():
    return parse_presentation_file((DATA / "vk33_down.txt").read_text())


@pytest.fixture
def vk33_up():
    return parse_presentation_file((DATA / "vk33_up.txt").read_text())


def valid_tsr(max_n=12):
    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_n))
        cands = []
        for t, s, r in itertools.product(range(n), repeat=3):
            try:
                cands.append(TsrParams(n, t, s, r))
            except ValueError:
                pass
        return draw(st.sampled_from(cands))
    return build()


@st.composite
def braid_words(draw, max_strands=3, max_len=6, virtual=True):
    strands = draw(st.integers(2, max_strands))
    letters = "sSv" if virtual else "sS"
    toks = draw(st.lists(st.tuples(st.sampled_from(letters), st.integers(1, strands - 1)),
                         max_size=max_len))
    return " ".join(f"{c}{k}" for c, k in toks), strands
