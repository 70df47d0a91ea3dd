import itertools

import pytest
from hypothesis import given, settings

from bikei.counting import count_labelings_backtrack
from bikei.diagram import (Crossing, LinkDiagram, Presentation, extract_presentation, insert_kinks,
                           parse_braid_word, parse_gauss_code, parse_presentation_file)
from bikei.errors import ParseError

from conftest import braid_words, brute_count


def test_braid_trefoil():
    D = parse_braid_word("s1 s1 s1")
    assert (len(D.crossings), D.component_count, D.semiarc_count) == (3, 1, 6)
    P = extract_presentation(D)
    # B(a,b)=(c,d), B(c,d)=(e,f), B(e,f)=(a,b)
    assert P.relations == ((0, 1, 2, 3), (2, 3, 4, 5), (4, 5, 0, 1))
    assert P.writhe == (3,)


def test_braid_virtual_trefoil_variant():
    P = extract_presentation(parse_braid_word("s1 s1 s1 v1"))
    assert P.relations == ((0, 1, 2, 3), (2, 3, 4, 5), (4, 5, 1, 0))


def test_braid_hopf():
    D = parse_braid_word("s1 s1")
    assert (len(D.crossings), D.component_count) == (2, 2)
    assert extract_presentation(D).writhe == (0, 0)


def test_braid_virtual_permutation():
    D = parse_braid_word("s1 v1")
    assert (len(D.crossings), D.component_count) == (1, 2)


def test_braid_empty_is_unlink():
    assert parse_braid_word("").component_count == 1
    D = parse_braid_word("", strands=3)
    assert (D.component_count, D.semiarc_count, D.free_loops) == (3, 3, [0, 1, 2])


def test_braid_virtual_only_loop():
    D = parse_braid_word("v1 v2")
    assert D.component_count == 1 and D.free_loops == [0]


@pytest.mark.parametrize("word,token,pos", [("s1 x2", "x2", 2), ("s0", "s0", 1), ("s1 s", "s", 2)])
def test_braid_errors(word, token, pos):
    with pytest.raises(ParseError) as exc:
        parse_braid_word(word)
    assert exc.value.token == token and exc.value.position == pos


def test_braid_too_few_strands():
    with pytest.raises(ParseError):
        parse_braid_word("s2", strands=2)


def test_gauss_trefoil():
    D = parse_gauss_code("O+1 U+2 O+3 U+1 O+2 U+3")
    assert (len(D.crossings), D.component_count, D.semiarc_count) == (3, 1, 6)
    assert D.writhe() == (3,)


def test_gauss_empty():
    D = parse_gauss_code("")
    assert (len(D.crossings), D.component_count, D.semiarc_count) == (0, 1, 1)


def test_gauss_two_crossings():
    D = parse_gauss_code("O+1 U+2 O+2 U+1")
    assert (len(D.crossings), D.component_count) == (2, 1)


def test_gauss_link_and_unknotted_component():
    D = parse_gauss_code("O+1 U+2 / U+1 O+2 / ")
    assert D.component_count == 3
    assert D.writhe() == (0, 0, 0)
    assert len(D.free_loops) == 1


@pytest.mark.parametrize("code,token", [
    ("O+1 O+1", "O+1"),
    ("O+1 U-1", "U-1"),
    ("O+1 U+2 U+1", "2"),
    ("O+1 X+1", "X+1"),
])
def test_gauss_errors(code, token):
    with pytest.raises(ParseError) as exc:
        parse_gauss_code(code)
    assert exc.value.token == token


def test_gauss_matches_braid_trefoil(fox):
    # same knot from two encodings gives the same labeling count
    a = extract_presentation(parse_gauss_code("O+1 U+2 O+3 U+1 O+2 U+3"))
    b = extract_presentation(parse_braid_word("s1 s1 s1"))
    assert brute_count(a, fox) == brute_count(b, fox) == 9


def test_crossing_passes_round_trip():
    for positive in (True, False):
        c = Crossing.from_passes((0, 1), (2, 3), positive)
        assert (c.over, c.under, c.positive) == ((0, 1), (2, 3), positive)


def test_diagram_validation():
    with pytest.raises(ValueError):
        LinkDiagram.build([Crossing(0, 1, 2, 2)], 3)


def test_presentation_file_3_3(vk33_down, vk33_up):
    assert vk33_down.generator_count == 6 and len(vk33_down.relations) == 3
    assert vk33_up.generator_count == 6 and len(vk33_up.relations) == 3
    # (b,a) = B(e,d) normalises to B(e,d) = (b,a)
    assert vk33_down.relations[0] == (4, 3, 1, 0)
    assert vk33_up.relations[0] == (0, 1, 3, 4)


def test_presentation_file_unknot():
    P = parse_presentation_file("gens: a\n")
    assert (P.generator_count, P.relations, P.writhe) == (1, (), (0,))


def test_presentation_file_components():
    P = parse_presentation_file("gens: a b c d\ncomp: a=1 b=2 c=2 d=1\nwrithe: 0 0\n"
                                "B(a,b)=(c,d)\nB(c,d)=(a,b)  # hopf\n")
    assert P.component_of == (0, 1, 1, 0)
    assert P.component_count == 2


@pytest.mark.parametrize("text,token", [
    ("gens: a b\nB(a,z)=(a,b)\n", "z"),
    ("gens: a b\nB(a,b)=(a\n", "B(a,b)=(a"),
    ("gens: a b\ncomp: a=1\n", "b"),
    ("gens: a\nwrithe: 0 0\n", None),
    ("B(a,b)=(a,b)\n", None),
])
def test_presentation_file_errors(text, token):
    with pytest.raises(ParseError) as exc:
        parse_presentation_file(text)
    assert exc.value.token == token


def test_presentation_format_round_trip():
    for word in ("s1 s1 s1", "S1 s2 S1 s2", "s1 s1 v1 s2", ""):
        P = extract_presentation(parse_braid_word(word))
        assert parse_presentation_file(P.format()) == P


def test_extract_unknot():
    P = extract_presentation(parse_braid_word(""))
    assert (P.generator_count, P.relations, P.writhe) == (1, (), (0,))


def test_insert_kinks_zero_counts():
    P = extract_presentation(parse_braid_word("s1 s1 s1"))
    assert insert_kinks(P, [0]) == P


def test_insert_kinks_unknot(swap2):
    P = extract_presentation(parse_braid_word(""))
    K = insert_kinks(P, [1])
    assert (K.generator_count, len(K.relations), K.writhe) == (2, 1, (1,))
    # the only relation is B(a,c) = (a,c): a label must be fixed by the kink map
    fix = sum(1 for x in range(swap2.n) if swap2.kink_map[x] == x)
    assert brute_count(K, swap2) == fix == 0


def test_insert_kinks_period(swap2):
    P = extract_presentation(parse_braid_word(""))
    counts = [brute_count(insert_kinks(P, [k]), swap2) for k in range(4)]
    assert counts == [2, 0, 2, 0]


def test_insert_kinks_errors():
    P = extract_presentation(parse_braid_word("s1 s1"))
    with pytest.raises(IndexError):
        insert_kinks(P, [1])
    with pytest.raises(ValueError):
        insert_kinks(P, [1, -1])


def _strand_cycles(D):
    for s in range(D.semiarc_count):
        t, steps = D.successor(s), 1
        while t != s:
            t = D.successor(t)
            steps += 1
            assert steps <= D.semiarc_count
        yield s


@settings(max_examples=80, deadline=None)
@given(braid_words())
def test_diagram_properties(data):
    word, strands = data
    D = parse_braid_word(word, strands=strands)
    list(_strand_cycles(D))
    assert D.semiarc_count == 2 * len(D.crossings) + len(D.free_loops)
    P = extract_presentation(D)
    assert P.generator_count == D.semiarc_count
    # writhe is unchanged by reversing any set of components
    for k in range(1, D.component_count + 1):
        for flip in itertools.combinations(range(D.component_count), k):
            R = D.reversed(flip)
            assert R.writhe() == D.writhe()
            assert extract_presentation(D, reverse=flip).writhe == P.writhe
    assert D.reversed(range(D.component_count)).reversed(range(D.component_count)) == D


@settings(max_examples=60, deadline=None)
@given(braid_words(), braid_words(max_strands=2, max_len=3))
def test_insert_kinks_counts(data, extra):
    word, strands = data
    P = extract_presentation(parse_braid_word(word, strands=strands))
    counts = [len(extra[0].split()) % 3 for _ in range(P.component_count)]
    counts[0] += 1
    K = insert_kinks(P, counts)
    free = set(g for g in range(P.generator_count) if not any(g in r for r in P.relations))
    kinked_free = sum(1 for k, c in enumerate(counts)
                      if c and any(P.component_of[g] == k for g in free))
    assert K.generator_count == P.generator_count + 2 * sum(counts) - kinked_free
    assert len(K.relations) == len(P.relations) + sum(counts)
    assert K.writhe == tuple(w + c for w, c in zip(P.writhe, counts))
    # every generator still enters exactly one crossing, unless it is a free loop
    entering = [0] * K.generator_count
    for r, sg in zip(K.relations, K.signs):
        for g in (r[:2] if sg > 0 else r[2:]):
            entering[g] += 1
    assert all(e in (0, 1) for e in entering)


def test_kinked_presentations_are_diagrams():
    # kinks on the trefoil agree with the braid closure of a stabilised word
    P = insert_kinks(extract_presentation(parse_braid_word("s1 s1 s1")), [1])
    S = extract_presentation(parse_braid_word("s1 s1 s1 s2"))
    from bikei import make_tsr
    for X in (make_tsr(3, 2, 2, 1), make_tsr(5, 2, 0, 1), make_tsr(11, 6, 5, 3)):
        assert count_labelings_backtrack(P, X)[0] == count_labelings_backtrack(S, X)[0]
