import itertools

import pytest

from mealygrowth import (
    F0,
    F1,
    GeneratorWord,
    NormalForm,
    absorption_relation,
    carry_relation,
    cayley_ball,
    cayley_block,
    enumerate_normal_forms,
    has_rule_occurrence,
    is_invertible,
    ladder_word,
    loop_free_path_words,
    low_term,
    mask_successor_machine,
    parse_word,
    prefix_relation,
    reduce_word,
    restrict_normal_form,
    restriction_word,
    shifted_mask_successor_machine,
    successor_power_machine,
    valuation,
    word_element,
    word_from_letters,
    word_problem,
)
from mealygrowth.family import GEN_STATE
from mealygrowth.growth import canonical_element, compose_state, identity_element
from mealygrowth.series import ball_growth_recurrence


def rows(machine, state):
    return [(machine.transition[state][x], machine.output[state][x])
            for x in range(machine.m)]


def test_machine_rows():
    base = mask_successor_machine(2)
    assert rows(base, 1) == [(0, 0), (1, 0)]
    assert rows(base, 2) == [(0, 1), (2, 0)]
    three = mask_successor_machine(3)
    assert [three.output[2][x] for x in range(3)] == [1, 2, 0]
    assert not any(is_invertible(mask_successor_machine(m)) for m in range(2, 7))
    with pytest.raises(ValueError):
        mask_successor_machine(1)


def test_shifted_machine_rows():
    shifted = shifted_mask_successor_machine(2)
    assert rows(shifted, 1) == [(1, 1), (0, 1)]
    assert rows(shifted, 2) == [(2, 1), (0, 0)]


def test_valuation_and_low_term():
    assert valuation(12, 2) == 2 and low_term(12, 2) == 4
    assert valuation(3, 2) == 0 and low_term(3, 2) == 1
    for m, k in ((2, 5), (3, 4), (7, 3)):
        assert valuation(m ** k, m) == k
        assert low_term(m ** k, m) == m ** k
    for p in range(1, 200):
        q, v = low_term(p, 3), valuation(p, 3)
        assert 1 <= q // 3 ** v < 3 and q % 3 ** v == 0
    with pytest.raises(ValueError):
        valuation(0, 2)


def test_word_construction_normalizes():
    w = GeneratorWord(2, [(F0, 1), (F0, 2), (F1, 0), (F0, 1), (F1, 3)])
    assert w.runs == ((F0, 4), (F1, 3))
    assert w.letter_count() == 7
    assert list(GeneratorWord(2, [(F1, 2)]).letters()) == [F1, F1]
    with pytest.raises(ValueError):
        GeneratorWord(2, [(F0, -1)])
    with pytest.raises(ValueError):
        GeneratorWord(2, [(7, 1)])


def test_word_grammar_roundtrip():
    for text in ("", "f0", "f1^2 f0", "f0 f1^12345678901234567890 f0"):
        w = parse_word(2, text)
        assert parse_word(2, w.to_string()) == w
    assert parse_word(2, "f1^1").to_string() == "f1"
    assert parse_word(2, "f1^0") == parse_word(2, "")
    with pytest.raises(ValueError):
        parse_word(2, "f2")
    with pytest.raises(ValueError):
        parse_word(2, "f1^")
    with pytest.raises(ValueError):
        parse_word(2, "f1^-3")


def test_word_concatenation():
    left = parse_word(2, "f0 f1")
    right = parse_word(2, "f1^2 f0")
    assert (left * right).to_string() == "f0 f1^3 f0"
    with pytest.raises(ValueError):
        left * parse_word(3, "f0")


def test_ladder_words():
    assert ladder_word(2, 1).to_string() == "f0 f1 f0"
    assert ladder_word(3, 2).to_string() == "f0 f1^8 f0 f1^2 f0"
    assert ladder_word(5, 0).to_string() == "f0"
    assert ladder_word(2, 3).letter_count() == 4 + (7 + 3 + 1)


def test_relation_words():
    assert [w.to_string() for w in absorption_relation(2, 0, 1)] == ["f0^2", "f0"]
    assert [w.to_string() for w in carry_relation(2, 0)] == ["f0 f1^2 f0", "f1^2 f0"]
    assert [w.to_string() for w in prefix_relation(2, 0, (1, 2))] == \
        ["f0 f1^4 f0", "f1^4 f0"]
    # the named families are instances of the general one
    for m, k in ((2, 2), (3, 1), (4, 3)):
        for p in range(1, m):
            assert absorption_relation(m, k, p) == \
                prefix_relation(m, k, (p, 0) + (1,) * k)
        assert carry_relation(m, k) == prefix_relation(m, k, (1,) * (k + 2))


def test_relation_parameter_validation():
    with pytest.raises(ValueError):
        absorption_relation(2, 0, 2)
    with pytest.raises(ValueError):
        absorption_relation(2, -1, 1)
    with pytest.raises(ValueError):
        prefix_relation(2, 1, (1, 0))        # wrong arity
    with pytest.raises(ValueError):
        prefix_relation(2, 1, (1, 0, 0))     # inner parameter below 1
    with pytest.raises(ValueError):
        prefix_relation(3, 0, (3, 1))        # leading parameter too large


def test_reduce_reference_cases():
    assert reduce_word(parse_word(2, "f0 f1^2 f0")) == NormalForm(2, 1, (0, 2))
    assert reduce_word(parse_word(2, "f0 f1 f0")) == NormalForm(2, 2, (0, 1, 0))
    assert reduce_word(parse_word(2, "f0 f0")) == NormalForm(2, 1, (0, 0))
    assert reduce_word(parse_word(2, "f1^9")) == NormalForm(2, 0, (9,))
    assert reduce_word(parse_word(2, "")) == NormalForm(2, 0, (0,))


def test_reduce_shape_idempotence_and_shortening():
    for m in (2, 3):
        for length in range(9):
            for letters in itertools.product((F0, F1), repeat=length):
                w = word_from_letters(m, letters)
                nf = reduce_word(w)
                nf_word = nf.to_word()
                assert reduce_word(nf_word) == nf
                assert nf_word.letter_count() <= w.letter_count()
                assert nf.length() == nf_word.letter_count()


def test_word_problem():
    assert word_problem(parse_word(2, "f0 f1^2 f0"), parse_word(2, "f1^2 f0"))
    assert not word_problem(parse_word(2, "f0 f1 f0"), parse_word(2, "f0"))
    w = parse_word(2, "f1 f0 f1^3")
    assert word_problem(w, w)
    with pytest.raises(ValueError):
        word_problem(parse_word(2, "f0"), parse_word(3, "f0"))


def test_restrict_normal_form_reference_cases():
    # at the distinguished symbol the mask tower survives with halved exponents
    assert restrict_normal_form(NormalForm(2, 1, (1, 1)), 0) == NormalForm(2, 1, (0, 0))
    # a bare successor power divides by the alphabet size
    for x in (0, 1):
        assert restrict_normal_form(NormalForm(2, 0, (2,)), x) == NormalForm(2, 0, (1,))
    for x in (0, 1, 2):
        assert restrict_normal_form(NormalForm(3, 0, (0,)), x) == NormalForm(3, 0, (0,))
    with pytest.raises(ValueError):
        restrict_normal_form(NormalForm(2, 0, (1,)), 2)


def test_restrict_normal_form_matches_machine_walk():
    for m in (2, 3):
        forms = [NormalForm(m, 0, (p0,)) for p0 in range(m + 2)]
        forms += [NormalForm(m, 1, (p0, p1))
                  for p0 in range(m + 2) for p1 in range(m + 2)]
        forms += [NormalForm(m, 2, (p0, p1, p2))
                  for p0 in range(m + 1) for p1 in range(1, m + 2)
                  for p2 in range(m + 1)]
        for nf in forms:
            word = nf.to_word()
            for x in range(m):
                rest, _ = restriction_word(word, x)
                assert restrict_normal_form(nf, x) == reduce_word(rest)


def test_restriction_word_defining_property():
    w = parse_word(2, "f1^2 f0 f1")
    elem = word_element(w, "letters")
    for x in (0, 1):
        rest, out = restriction_word(w, x)
        rest_elem = word_element(rest, "letters")
        assert out == elem.apply((x,))[0]
        for u in itertools.product((0, 1), repeat=4):
            assert elem.apply((x,) + u) == (out,) + rest_elem.apply(u)


def test_has_rule_occurrence():
    assert has_rule_occurrence(parse_word(2, "f0 f0"))
    assert has_rule_occurrence(parse_word(2, "f1 f0^2 f1"))
    assert not has_rule_occurrence(parse_word(2, "f0 f1 f0"))
    assert not has_rule_occurrence(parse_word(2, "f1^7"))
    assert has_rule_occurrence(parse_word(2, "f0 f1^5 f0 f1 f0"))
    assert not has_rule_occurrence(parse_word(2, "f1^4 f0 f1 f0"))
    assert has_rule_occurrence(parse_word(3, "f0 f1^3 f0"))
    assert not has_rule_occurrence(parse_word(3, "f0 f1^2 f0"))


def test_rule_occurrence_characterizes_reduced_words():
    for m in (2, 3):
        for length in range(9):
            for letters in itertools.product((F0, F1), repeat=length):
                w = word_from_letters(m, letters)
                assert (reduce_word(w).to_word() == w) == (not has_rule_occurrence(w))


def test_normal_form_validation_and_json():
    with pytest.raises(ValueError):
        NormalForm(2, 1, (0,))           # wrong arity
    with pytest.raises(ValueError):
        NormalForm(2, 2, (0, 0, 0))      # inner exponent below 1
    with pytest.raises(ValueError):
        NormalForm(2, 0, (-1,))
    nf = NormalForm(2, 2, (0, 1, 0))
    assert nf.to_json() == '{"m":2,"k":2,"p":[0,1,0]}'
    assert NormalForm.from_json(nf.to_json()) == nf


def test_normal_form_words_and_lengths():
    nf = NormalForm(2, 2, (0, 1, 0))
    assert nf.to_word().to_string() == "f0 f1 f0"
    assert nf.length() == 3
    nf = NormalForm(3, 1, (2, 1))
    assert nf.to_word().to_string() == "f1 f0 f1^2"
    assert nf.length() == 4
    assert NormalForm(2, 0, (0,)).to_word() == parse_word(2, "")
    assert NormalForm(2, 0, (0,)).length() == 0


def test_enumerate_normal_forms_counts_match_ball_growth():
    for m, max_len in ((2, 8), (3, 6)):
        count = sum(1 for _ in enumerate_normal_forms(m, max_len))
        assert count == ball_growth_recurrence(m, max_len).values[max_len]
        lengths = [nf.length() for nf in enumerate_normal_forms(m, max_len)]
        assert all(l <= max_len for l in lengths)


def test_successor_power_machine_matches_letterwise(rng):
    for m in (2, 3, 5):
        base = mask_successor_machine(m)
        for exp in list(range(8)) + [23, 60]:
            fast = canonical_element(successor_power_machine(m, exp), 0)
            slow = identity_element(m)
            for _ in range(exp):
                slow = compose_state(base, GEN_STATE[F1], slow)
            assert fast.key == slow.key


def test_distinct_normal_forms_have_distinct_keys():
    for m, limit in ((2, 4), (3, 5)):
        forms = [NormalForm(m, 0, (p0,)) for p0 in range(limit + 1)]
        for k in (1, 2, 3):
            for mid in itertools.product(range(1, limit + 1), repeat=k - 1):
                for p0 in range(limit + 1):
                    for pk in range(limit + 1):
                        forms.append(NormalForm(m, k, (p0,) + mid + (pk,)))
        keys = {word_element(nf.to_word()).key for nf in forms}
        assert len(keys) == len(forms)


def test_word_element_strategies_agree(rng):
    for _ in range(60):
        m = rng.choice((2, 3, 4))
        runs = [(rng.choice((F0, F1)), rng.randint(1, 120))
                for _ in range(rng.randint(0, 6))]
        w = GeneratorWord(m, runs)
        assert word_element(w, "letters").key == word_element(w, "runs").key
    with pytest.raises(ValueError):
        word_element(parse_word(2, "f0"), "psychic")


def test_cayley_block_structure():
    assert cayley_block(2, 3).f1_edge_count() == 7
    zero = cayley_block(3, 0)
    assert zero.vertices == 1 and zero.f0_edges == ()
    for m, i in ((2, 4), (3, 3)):
        block = cayley_block(m, i)
        assert block.f1_edge_count() == m ** i - 1
        # the mask edge from v closes the loop f0 f1^(low_term(v+1)-1)
        for u, v in block.f0_edges:
            assert v == u + 1 - low_term(u + 1, m)
    dot = cayley_block(2, 2).to_dot()
    assert dot.count('label="f1"') == 3 and dot.count('label="f0"') == 3


def test_cayley_ball_paths_are_normal_forms():
    radius = 5
    ball = cayley_ball(2, radius)
    paths = loop_free_path_words(ball)
    forms = [nf.to_word() for nf in enumerate_normal_forms(2, radius)]
    assert sorted(w.runs for w in paths) == sorted(w.runs for w in forms)
    # geodesic labels are exactly the normal-form words of their vertices
    for word in ball.words:
        assert reduce_word(word).to_word() == word
    dot = ball.to_dot()
    assert 'label="e"' in dot and "digraph" in dot


def test_cayley_ball_edges_stay_inside():
    ball = cayley_ball(2, 3)
    n = len(ball.words)
    assert all(0 <= u < n and 0 <= v < n for u, _, v in ball.edges)
    assert len(ball.words) == 11  # ball(3)
