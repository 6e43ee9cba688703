import pytest

from crystal_tableaux import (
    LOWERING,
    RAISING,
    LetterError,
    TypeSpecError,
    Weight,
    is_hat_dominant,
    letter_eps_phi,
    letter_step,
    letter_weight,
    make_type_spec,
)
from oracles import textbook_cartan


def test_alphabets():
    assert make_type_spec("A", 2).alphabet == (1, 2, 3)
    assert make_type_spec("C", 3).alphabet == (1, 2, 3, -3, -2, -1)
    assert make_type_spec("G", 2).alphabet == (1, 2, 3, 0, -3, -2, -1)
    assert make_type_spec("A", 2).index_set == range(1, 3)
    assert make_type_spec("D", 3).rank == 4


@pytest.mark.parametrize("family,n", [("G", 3), ("G", 1), ("A", 0), ("D", 1), ("E", 6)])
def test_bad_types(family, n):
    with pytest.raises(TypeSpecError):
        make_type_spec(family, n)


def test_g3_message_names_constraint():
    with pytest.raises(TypeSpecError, match="n = 2"):
        make_type_spec("G", 3)


@pytest.mark.parametrize(
    "family,n",
    [("A", 1), ("A", 2), ("A", 4), ("B", 2), ("B", 3), ("B", 4), ("C", 2), ("C", 3), ("C", 5),
     ("D", 2), ("D", 3), ("D", 4), ("G", 2)],
)
def test_cartan_matches_textbook(family, n):
    derived = [list(row) for row in make_type_spec(family, n).cartan]
    assert derived == textbook_cartan(family, n)


def test_letter_steps():
    A2, B3, G2, D4 = (make_type_spec(*p) for p in [("A", 2), ("B", 3), ("G", 2), ("D", 3)])
    assert letter_step(A2, 1, 1, LOWERING) == 2
    assert letter_step(B3, 3, 3, LOWERING) == 0
    assert letter_step(B3, 3, 0, LOWERING) == -3
    assert letter_step(G2, 1, 3, LOWERING) == 0
    assert letter_step(D4, 4, 3, LOWERING) == -4
    assert letter_step(D4, 3, 3, LOWERING) == 4
    assert letter_step(A2, 2, 2, RAISING) is None
    assert letter_step(B3, 3, -3, RAISING) == 0


def test_illegal_letter():
    with pytest.raises(LetterError):
        letter_step(make_type_spec("A", 2), 1, 0, LOWERING)
    with pytest.raises(LetterError):
        letter_weight(make_type_spec("C", 2), 0)


def test_eps_phi():
    assert letter_eps_phi(make_type_spec("B", 3), 3, 3) == (0, 2)
    assert letter_eps_phi(make_type_spec("G", 2), 1, 0) == (1, 1)
    assert letter_eps_phi(make_type_spec("A", 2), 1, 3) == (0, 0)


def test_letter_weights():
    assert letter_weight(make_type_spec("A", 2), 1) == Weight((1, 0))
    assert letter_weight(make_type_spec("B", 3), 0) == Weight((0, 0, 0))
    assert letter_weight(make_type_spec("G", 2), 3) == Weight((2, -1))


def test_arrows_move_by_simple_roots(spec):
    for i in spec.index_set:
        for x in spec.alphabet:
            y = letter_step(spec, i, x, LOWERING)
            if y is None:
                continue
            assert letter_weight(spec, x) - letter_weight(spec, y) == spec.simple_root(i)
            assert letter_step(spec, i, y, RAISING) == x
            e, p = letter_eps_phi(spec, i, x)
            assert p - e == letter_weight(spec, x)[i]


def test_hat_dominant():
    B3, D4, A2 = make_type_spec("B", 3), make_type_spec("D", 3), make_type_spec("A", 2)
    assert not is_hat_dominant(B3, Weight((0, 0, 1)))
    assert is_hat_dominant(B3, Weight((0, 0, 2)))
    assert is_hat_dominant(D4, Weight((1, 0, 2, 2)))
    assert not is_hat_dominant(D4, Weight((1, 0, 1, 2)))
    assert is_hat_dominant(A2, Weight((5, 0)))
    assert not is_hat_dominant(A2, Weight((-1, 0)))
    with pytest.raises(ValueError):
        is_hat_dominant(A2, Weight((1, 0, 0)))


def test_weight_arithmetic():
    w = Weight((1, -2))
    assert w + w == w.scale(2)
    assert w - w == Weight.zero(2)
    assert w[1] == 1 and w[2] == -2
