import pytest

from conftest import random_machine, random_word
from mealygrowth import (
    GrowthTable,
    GuardExceeded,
    automaton_growth,
    ball_growth,
    canonical_element,
    compose,
    distinguishing_word,
    identity_element,
    mask_successor_machine,
    parse_word,
    spherical_growth,
    word_element,
    word_growth,
)

GENS = (0, 1, 2)   # e, f0, f1


def test_ball_growth_reference_values():
    base = mask_successor_machine(2)
    assert ball_growth(base, GENS, 7).values == (1, 3, 6, 11, 18, 28, 41, 59)
    assert ball_growth(base, GENS, 0).values == (1,)


def test_word_growth_reference_values():
    assert word_growth(mask_successor_machine(2), GENS, 7).values == \
        (1, 2, 3, 5, 7, 10, 13, 18)
    assert word_growth(mask_successor_machine(3), GENS, 4).values == \
        (1, 2, 3, 4, 6)


def test_spherical_growth():
    base = mask_successor_machine(2)
    # with the identity among the generators, spheres equal balls
    assert spherical_growth(base, GENS, 5).values == ball_growth(base, GENS, 5).values
    # without it: at length 2 the products are f1^2, f1 f0, f0 f1 and f0 f0 = f0
    assert spherical_growth(base, (1, 2), 2).values == (1, 2, 4)


def test_ball_without_identity_generator():
    base = mask_successor_machine(2)
    table = ball_growth(base, (1, 2), 4)
    words = word_growth(base, (1, 2), 4)
    # the identity is never a product of f0, f1, so nothing has length 0, and
    # every other element keeps its length: the ball is one short throughout
    assert words.values[0] == 0
    assert table.values == (0, 2, 5, 10, 17)
    assert table.values == tuple(b - 1 for b in ball_growth(base, GENS, 4).values)


def test_automaton_growth_two_routes_agree():
    for m, max_n in ((2, 5), (3, 4)):
        base = mask_successor_machine(m)
        powers = automaton_growth(base, max_n)
        spheres = spherical_growth(base, GENS, max_n)
        assert powers.values == spheres.values
    assert automaton_growth(mask_successor_machine(2), 3).values == (1, 3, 6, 11)
    assert automaton_growth(mask_successor_machine(3), 2).values == (1, 3, 6)


def test_growth_inequalities():
    for m in (2, 3):
        base = mask_successor_machine(m)
        words = word_growth(base, GENS, 6).values
        spheres = spherical_growth(base, GENS, 6).values
        balls = ball_growth(base, GENS, 6).values
        running = 0
        for n in range(7):
            running += words[n]
            assert words[n] <= spheres[n] <= balls[n]
            assert balls[n] == running
        assert all(balls[i] <= balls[i + 1] for i in range(6))


def test_growth_determinism():
    base = mask_successor_machine(3)
    first = ball_growth(base, GENS, 6)
    second = ball_growth(base, GENS, 6)
    reordered = ball_growth(base, (2, 0, 1), 6)
    assert first.values == second.values == reordered.values


def test_growth_guard_carries_partial_table():
    base = mask_successor_machine(2)
    with pytest.raises(GuardExceeded) as exc:
        ball_growth(base, GENS, 10, element_guard=5)
    assert exc.value.partial == (1, 2)  # level counts completed before refusal
    with pytest.raises(GuardExceeded) as exc:
        spherical_growth(base, GENS, 10, element_guard=3)
    assert exc.value.partial == (1, 3)


def test_growth_table_serialization():
    table = GrowthTable(2, "ball", "bfs", (1, 3, 6))
    assert table.to_csv() == "n,value\n0,1\n1,3\n2,6\n"
    assert table.to_json() == '{"m":2,"kind":"ball","provenance":"bfs","values":[1,3,6]}'
    with pytest.raises(ValueError):
        GrowthTable(2, "cone", "bfs", (1,))
    with pytest.raises(ValueError):
        GrowthTable(2, "ball", "guesswork", (1,))


def test_canonical_keys_separate_equal_from_distinct(rng):
    same_a = word_element(parse_word(2, "f0 f0"), "letters")
    same_b = word_element(parse_word(2, "f0"), "letters")
    assert same_a.key == same_b.key
    for _ in range(200):
        w = random_word(rng, 2, 16)
        assert same_a.apply(w) == same_b.apply(w)
    diff = word_element(parse_word(2, "f1 f0"), "letters")
    assert diff.key != same_a.key
    witness = distinguishing_word(diff, same_a)
    assert witness is not None
    assert len(witness) <= diff.machine.n + same_a.machine.n
    assert diff.apply(witness) != same_a.apply(witness)


def test_distinguishing_word_none_for_equal_elements():
    e1 = word_element(parse_word(2, "f0 f1^2 f0"), "letters")
    e2 = word_element(parse_word(2, "f1^2 f0"), "letters")
    assert distinguishing_word(e1, e2) is None


def test_compose_matches_apply_chain(rng):
    for _ in range(20):
        m = rng.randint(2, 4)
        a = random_machine(rng, rng.randint(1, 4), m)
        b = random_machine(rng, rng.randint(1, 4), m)
        left = canonical_element(a, rng.randrange(a.n))
        right = canonical_element(b, rng.randrange(b.n))
        both = compose(left, right)
        for _ in range(10):
            w = random_word(rng, m, rng.randint(0, 10))
            assert both.apply(w) == left.apply(right.apply(w))


def test_identity_element_and_restrict():
    ident = identity_element(3)
    assert ident.is_identity()
    assert ident.apply((0, 2, 1)) == (0, 2, 1)
    elem = canonical_element(mask_successor_machine(2), 1)
    # past a low symbol the mask is spent
    assert elem.restrict((0,)).is_identity()
    assert not elem.restrict((1,)).is_identity()
