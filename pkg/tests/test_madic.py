import math

import pytest

from mealygrowth import (
    F0,
    F1,
    GeneratorWord,
    MadicCodec,
    act_on_integer,
    madic_and,
    mask_successor_machine,
    parse_word,
)
from mealygrowth.family import GEN_STATE


def test_codec_reference_cases():
    assert MadicCodec(2, 4).encode(11) == (1, 1, 0, 1)
    assert MadicCodec(3, 3).encode(5) == (2, 1, 0)
    assert MadicCodec(5, 3).encode(0) == (0, 0, 0)


def test_codec_roundtrip(rng):
    for m in (2, 3, 5):
        codec = MadicCodec(m, 12)
        for _ in range(1000):
            p = rng.randrange(m ** 12)
            assert codec.decode(codec.encode(p)) == p


def test_codec_errors():
    codec = MadicCodec(2, 4)
    with pytest.raises(ValueError):
        codec.encode(16)
    with pytest.raises(ValueError):
        codec.encode(-1)
    with pytest.raises(ValueError):
        codec.decode((0, 2))
    with pytest.raises(ValueError):
        MadicCodec(1, 4)
    with pytest.raises(ValueError):
        MadicCodec(2, 0)


def test_madic_and():
    assert madic_and(11, 12, 2) == 8
    assert madic_and(5, 7, 3) == 0
    assert madic_and(0, 99, 7) == 0


def test_madic_and_is_idempotent_and_dominated(rng):
    for _ in range(300):
        m = rng.choice((2, 3, 5))
        p, q = rng.randrange(10 ** 9), rng.randrange(10 ** 9)
        assert madic_and(p, p, m) == p
        r = madic_and(p, q, m)
        # digitwise the result never exceeds p
        while r or p:
            r, dr = divmod(r, m)
            p, dp = divmod(p, m)
            assert dr <= dp


def test_act_reference_cases():
    assert act_on_integer(parse_word(2, "f0"), 11) == 8
    assert act_on_integer(parse_word(2, "f1^3"), 5) == 8
    a = parse_word(2, "f0 f1^2 f0")
    b = parse_word(2, "f1^2 f0")
    for p in range(101):
        assert act_on_integer(a, p) == act_on_integer(b, p)
    with pytest.raises(ValueError):
        act_on_integer(a, -1)


def test_act_matches_machine_action(rng):
    for _ in range(200):
        m = rng.choice((2, 3, 5))
        runs = [(rng.choice((F0, F1)), rng.randint(1, 50))
                for _ in range(rng.randint(0, 8))]
        word = GeneratorWord(m, runs)
        p = rng.randrange(10 ** 6 + 1)
        shift = sum(e for g, e in word.runs if g == F1)
        digits = math.ceil(math.log(p + shift + 2, m)) + 1
        codec = MadicCodec(m, digits)
        machine = mask_successor_machine(m)
        image = codec.encode(p)
        for gen, exp in reversed(word.runs):
            for _ in range(exp):
                image = machine.apply(GEN_STATE[gen], image)
        assert codec.decode(image) == act_on_integer(word, p)
