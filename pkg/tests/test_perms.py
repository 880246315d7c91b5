import random

import pytest

from covering_lab.perms import (
    CycleType,
    Perm,
    PermError,
    all_partitions,
    canonical_cycle_word,
    conjugator_between,
    parse_perm,
)


def test_parse_cycle_notation():
    p = parse_perm("(1 2 3 4 5)", 5)
    assert p.cycle_type().parts == (5,)
    assert p.apply(1) == 2 and p.apply(5) == 1


def test_parse_identity():
    p = parse_perm("()", 4)
    assert p.is_identity
    assert p.cycle_type().parts == (1, 1, 1, 1)


def test_parse_paper_h2_element():
    p = parse_perm("(1 4)(2 5 3 6)", 6)
    assert str(p.cycle_type()) == "[2;4]"


def test_parse_image_list():
    p = parse_perm("3 1 2 5 4", 5)
    assert p == parse_perm("(1 3 2)(4 5)", 5)


def test_parse_commas_and_spaces():
    assert parse_perm("(1,2,3)(4 5)", 5) == parse_perm("(1 2 3)(4 5)", 5)


@pytest.mark.parametrize(
    "text,degree",
    [
        ("(1 2 2)", 4),
        ("(1 9)", 4),
        ("(1 2", 4),
        ("1 2 3", 4),
        ("1 1 2 3", 4),
        ("", 3),
        ("(1 2) junk", 4),
    ],
)
def test_parse_errors(text, degree):
    with pytest.raises(PermError):
        parse_perm(text, degree)


def test_compose_applies_left_first():
    a = parse_perm("(1 2)", 3)
    b = parse_perm("(2 3)", 3)
    assert (a * b).apply(1) == 3


def test_inverse_and_identity():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randrange(1, 9)
        images = list(range(n))
        rng.shuffle(images)
        p = Perm(images)
        assert (p * p.inverse()).is_identity
        assert (p.inverse() * p).is_identity


def test_conjugate_by_identity():
    x = parse_perm("(1 2 3)", 5)
    assert x.conj(Perm.identity(5)) == x


def test_conjugate_relabels():
    x = parse_perm("(1 2 3)", 3)
    g = parse_perm("(1 2)", 3)
    assert x.conj(g) == parse_perm("(2 1 3)", 3)
    assert x.conj(g).cycle_type() == x.cycle_type()


def test_conjugate_nine_cycle_square():
    mu = parse_perm("(1 2 3 4 5 6 7 8 9)", 9)
    alpha = parse_perm("(2 3 5 9 8 6)(4 7)", 9)
    assert mu.conj(alpha) == mu**2


def test_parity_matches_cycle_count():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randrange(1, 10)
        images = list(range(n))
        rng.shuffle(images)
        p = Perm(images)
        assert p.is_even == ((n - len(p.cycles(full=True))) % 2 == 0)


def test_parity_multiplicative():
    rng = random.Random(13)
    for _ in range(100):
        images = list(range(7))
        rng.shuffle(images)
        a = Perm(images)
        rng.shuffle(images)
        b = Perm(images)
        assert (a * b).is_even == (a.is_even == b.is_even)


def test_cycle_type_identity_degree7():
    assert Perm.identity(7).cycle_type().parts == (1,) * 7


def test_cycle_type_six_cycle():
    assert str(parse_perm("(1 4 2 5 3 6)", 6).cycle_type()) == "[6]"


def test_cycle_type_validation():
    with pytest.raises(ValueError):
        CycleType(5, (3, 3))
    with pytest.raises(ValueError):
        CycleType(5, (2, 3))  # not non-increasing


def test_cycle_type_parity_and_order():
    t = CycleType.of(8, [3, 5])
    assert t.is_even and t.element_order == 15
    assert not CycleType.of(6, [2, 1, 1, 1, 1]).is_even


def test_canonical_word_and_conjugator():
    rng = random.Random(17)
    for _ in range(100):
        images = list(range(8))
        rng.shuffle(images)
        x = Perm(images)
        rng.shuffle(images)
        g = Perm(images)
        y = x.conj(g)
        w = conjugator_between(x, y)
        assert x.conj(w) == y
    with pytest.raises(ValueError):
        conjugator_between(parse_perm("(1 2)", 4), parse_perm("(1 2 3)", 4))


def test_canonical_word_covers_all_points():
    x = parse_perm("(1 2 3)(4 5 6 7 8)", 9)
    word = canonical_cycle_word(x)
    assert sorted(word) == list(range(9))
    assert word[:5] == [3, 4, 5, 6, 7]  # longest cycle first


def test_cycle_string_roundtrip():
    rng = random.Random(19)
    for _ in range(50):
        images = list(range(9))
        rng.shuffle(images)
        p = Perm(images)
        assert parse_perm(p.cycle_string(), 9) == p
        assert parse_perm(p.one_line(), 9) == p


def test_all_partitions():
    parts = all_partitions(4)
    assert parts[0] == (1, 1, 1, 1)
    assert len(parts) == 5
    assert len(all_partitions(8)) == 22
