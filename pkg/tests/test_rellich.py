from fractions import Fraction
import math

import pytest

from classes.erros import ShapeError
from classes.intervalo import ZERO, IntervalReal
from utils.decomposicao import lu_decomp_pq, matriz_racional, validate_lu
from utils.rellich import eps_rellich, grade_rellich, matriz_rellich, recover_x, rellich


def test_rellich_em_zero_e_nula():
    resultado = rellich(ZERO)
    assert all(x.eh_zero for linha in resultado.B for x in linha)
    assert resultado.valores == [[(0, 0), (0, 0)], [(0, 0), (0, 0)]]


def test_rellich_em_meio():
    B = matriz_rellich(IntervalReal.racional(Fraction(1, 2)))
    b00 = float(B[0][0].ponto_medio(80))
    b01 = float(B[0][1].ponto_medio(80))
    assert b00 ** 2 + b01 ** 2 == pytest.approx(math.exp(-8), rel=1e-12)
    assert b00 == pytest.approx(math.exp(-4) * math.cos(2), rel=1e-12)
    assert float(B[1][0].ponto_medio(80)) == pytest.approx(-b01, rel=1e-12)
    assert float(B[1][1].ponto_medio(80)) == pytest.approx(b00, rel=1e-12)


def test_entrada_desprezivel_tem_largura_pedida():
    B = matriz_rellich(IntervalReal.racional(Fraction(1, 100)))
    lo, hi = B[0][0].intervalo(30)
    assert lo <= 0 <= hi
    assert hi - lo <= Fraction(1, 2 ** 30)


def test_eps_rellich():
    eps = eps_rellich(1, Fraction(1, 2))
    assert float(eps.ponto_medio(60)) == pytest.approx(1 / (2 * math.pi + 0.5), rel=1e-14)


def test_decomposicao_de_rellich_valida():
    B = matriz_rellich(eps_rellich(1, Fraction(1, 3)))
    lu = lu_decomp_pq(B)
    validacao = validate_lu(B, lu)
    assert validacao.aprovado, validacao.violacoes


@pytest.mark.parametrize("y", [Fraction(1, 4), Fraction(1, 2), Fraction(9, 10)])
def test_recupera_y_com_k_tres(y):
    (linha,) = grade_rellich([3], [y])
    assert linha["ok"], linha
    assert linha["erro"] <= Fraction(1, 2 ** 10)


def test_recuperacao_em_eps_nulo_fica_no_intervalo():
    lu = lu_decomp_pq(matriz_rellich(ZERO))
    x = recover_x(lu).ponto_medio(20)
    assert 0 <= x <= 1


def test_recover_x_exige_dois_por_dois():
    lu = lu_decomp_pq(matriz_racional([[1, 2, 3], [4, 5, 6], [7, 8, 9]]))
    with pytest.raises(ShapeError):
        recover_x(lu)


@pytest.mark.lento
def test_grade_ate_k_vinte():
    ys = [Fraction(j, 8) for j in range(9)]
    linhas = grade_rellich(range(1, 21), ys)
    falhas = [l for l in linhas if not l["ok"]]
    assert not falhas, falhas[:3]
