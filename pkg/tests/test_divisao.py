from fractions import Fraction
import random

import pytest
from hypothesis import given, settings, strategies as st

from classes.intervalo import ZERO, IntervalReal
from utils.divisao import pivot_select, rdiv_eps


def r(q):
    return IntervalReal.racional(Fraction(q))


def test_rdiv_metade():
    z = rdiv_eps(r(1), r(2), 20)
    assert z.exato == Fraction(1, 2)


def test_rdiv_denominador_nulo_termina():
    z = rdiv_eps(r(Fraction(3, 10)), ZERO, 20)
    assert z.exato == 0


def test_rdiv_numerador_maior_satura_em_um():
    assert rdiv_eps(r(5), r(2), 10).exato == 1


def test_rdiv_com_pi():
    x = IntervalReal.pi()
    z = rdiv_eps(x, x.escalar(2), 30)
    assert abs(z.exato - Fraction(1, 2)) <= Fraction(1, 2 ** 30)


@given(
    x=st.fractions(min_value=0, max_value=8, max_denominator=10 ** 6),
    y=st.fractions(min_value=0, max_value=8, max_denominator=10 ** 6),
    n=st.integers(min_value=1, max_value=40),
)
@settings(max_examples=200, deadline=None)
def test_rdiv_contrato(x, y, n):
    z = rdiv_eps(r(x), r(y), n).exato
    assert 0 <= z <= 1
    assert (z * 2 ** (n + 2)).denominator == 1
    if y >= Fraction(1, 2 ** n):
        assert abs(z - min(x, y) / y) <= Fraction(1, 2 ** n)


def test_pivo_maior_modulo_com_sinal():
    escolha = pivot_select([r(3), r(1), r(-5)], 20)
    assert escolha.indice == 2
    assert escolha.sinal == -1
    assert not escolha.atravessa_zero
    assert escolha.certificado == 0


def test_pivo_todos_nulos():
    escolha = pivot_select([ZERO, ZERO, ZERO], 20)
    assert escolha.indice == 0
    assert escolha.sinal == 1
    assert escolha.atravessa_zero
    assert escolha.certificado == 0


def test_pivo_empate_fica_com_menor_indice():
    assert pivot_select([r(2), r(-2), r(1)], 10).indice == 0


def test_pivo_lista_vazia():
    with pytest.raises(ValueError):
        pivot_select([], 10)


@given(st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=100), min_size=1, max_size=12))
@settings(max_examples=100, deadline=None)
def test_pivo_e_um_maximo(valores):
    escolha = pivot_select([r(v) for v in valores], 16)
    maior = max(abs(v) for v in valores)
    assert abs(valores[escolha.indice]) == maior
    assert escolha.indice == min(i for i, v in enumerate(valores) if abs(v) == maior)


@pytest.mark.lento
def test_rdiv_em_dez_mil_pares():
    rng = random.Random(20)
    for _ in range(10 ** 4):
        y = Fraction(rng.randint(1, 10 ** 6), 10 ** 6)
        x = y * Fraction(rng.randint(0, 10 ** 6), 10 ** 6)
        assert abs(rdiv_eps(r(x), r(y), 20).exato - x / y) <= Fraction(1, 2 ** 20)
    for _ in range(10 ** 3):
        y = Fraction(rng.randint(0, 10 ** 6), 10 ** 6 * 2 ** 40)
        z = rdiv_eps(r(y * Fraction(rng.randint(0, 100), 100)), r(y), 20).exato
        assert 0 <= z <= 1
