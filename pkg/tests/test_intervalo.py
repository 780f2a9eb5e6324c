from fractions import Fraction
import math

from hypothesis import given, settings, strategies as st

from classes.intervalo import UM, ZERO, IntervalReal, arredondar_fora

racionais = st.fractions(min_value=-100, max_value=100, max_denominator=1000)


def test_racional_e_exato():
    x = IntervalReal.racional(Fraction(3, 7))
    assert x.exato == Fraction(3, 7)
    assert x.intervalo(10) == (Fraction(3, 7), Fraction(3, 7))
    assert not x.eh_zero
    assert ZERO.eh_zero


def test_operacoes_exatas_propagam_o_valor():
    a, b = IntervalReal.racional(Fraction(1, 3)), IntervalReal.racional(Fraction(5, 2))
    assert (a + b).exato == Fraction(17, 6)
    assert (a - b).exato == Fraction(-13, 6)
    assert (a * b).exato == Fraction(5, 6)
    assert (-a).exato == Fraction(-1, 3)
    assert a.escalar(0) is ZERO
    assert b.inverso().exato == Fraction(2, 5)


def test_arredondar_fora_contem_o_original():
    lo, hi = arredondar_fora(Fraction(1, 3), Fraction(2, 3), 4)
    assert lo <= Fraction(1, 3) and hi >= Fraction(2, 3)
    assert (lo * 16).denominator == 1 and (hi * 16).denominator == 1


@given(m=st.integers(min_value=0, max_value=200))
@settings(max_examples=25, deadline=None)
def test_pi_tem_largura_e_contem_pi(m):
    lo, hi = IntervalReal.pi().intervalo(m)
    assert hi - lo <= Fraction(1, 2 ** m)
    assert lo <= Fraction(math.pi) + Fraction(1, 2 ** 40) and hi >= Fraction(math.pi) - Fraction(1, 2 ** 40)


def test_intervalos_encaixados():
    x = IntervalReal.pi().escalar(3) - UM
    anterior = None
    for m in (2, 5, 9, 20, 40, 80):
        lo, hi = x.intervalo(m)
        assert hi - lo <= Fraction(1, 2 ** m)
        if anterior is not None:
            assert anterior[0] <= lo and hi <= anterior[1]
        anterior = (lo, hi)


@given(q=racionais, m=st.integers(min_value=1, max_value=120))
@settings(max_examples=50, deadline=None)
def test_expressao_preguicosa_contem_o_valor(q, m):
    x = (IntervalReal.pi() - IntervalReal.pi()) + IntervalReal.racional(q)
    lo, hi = x.intervalo(m)
    assert lo <= q <= hi
    assert hi - lo <= Fraction(1, 2 ** m)


def test_funcoes_transcendentes():
    um = IntervalReal.pi().escalar(0) + UM
    assert abs(float(IntervalReal.racional(1).exp().ponto_medio(60)) - math.e) < 1e-15
    assert abs(float((IntervalReal.pi() - IntervalReal.pi() + um).atan().ponto_medio(60)) - math.pi / 4) < 1e-15
    assert abs(float(IntervalReal.racional(2).cos().ponto_medio(60)) - math.cos(2)) < 1e-15
    assert abs(float(IntervalReal.racional(2).sin().ponto_medio(60)) - math.sin(2)) < 1e-15
    assert abs(float(IntervalReal.racional(1).arccot().ponto_medio(60)) - math.pi / 4) < 1e-15


def test_atan_de_zero_exato():
    assert ZERO.atan() is ZERO


def test_limitar_corta_nos_extremos():
    assert IntervalReal.racional(Fraction(3, 2)).limitar(0, 1).exato == 1
    assert IntervalReal.racional(-2).limitar(0, 1).exato == 0
    meio = IntervalReal.pi().escalar(Fraction(1, 8)).limitar(0, 1)
    assert abs(float(meio.ponto_medio(50)) - math.pi / 8) < 1e-14


def test_inverso_de_expressao():
    x = (IntervalReal.pi() + UM).inverso()
    assert abs(float(x.ponto_medio(60)) - 1 / (math.pi + 1)) < 1e-15
