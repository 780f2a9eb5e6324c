from fractions import Fraction

import pytest

from classes.erros import ShapeError
from classes.intervalo import IntervalReal
from utils.decomposicao import (
    dividir_blocos,
    eliminacao_exata,
    lu_decomp_pq,
    lu_decomp_q,
    matriz_racional,
    matrizes_semeadas,
    precisao_trabalho,
    validate_lu,
)

TOL = Fraction(1, 2 ** 20)


def test_precisao_trabalho():
    assert precisao_trabalho(4, 4, 20) == 30
    assert precisao_trabalho(1, 1, 20) == 28


def test_identidade():
    A = matriz_racional([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    lu = lu_decomp_pq(A)
    assert lu.P == [0, 1, 2]
    assert lu.Q == [0, 1, 2]
    assert lu.certificado == 0
    validacao = validate_lu(A, lu)
    assert validacao.aprovado, validacao.violacoes
    assert validacao.residuo == 0
    assert validacao.posto == 3


def test_matriz_nula():
    A = matriz_racional([[0] * 4 for _ in range(4)])
    for decompor in (lu_decomp_pq, lu_decomp_q):
        lu = decompor(A)
        validacao = validate_lu(A, lu)
        assert validacao.aprovado, validacao.violacoes
        assert validacao.perfil == [None] * 4
        assert validacao.posto == 0


def test_modo_q_troca_linhas():
    A = matriz_racional([[0, 1], [1, 0]])
    lu = lu_decomp_q(A)
    assert lu.P == [1, 0]
    assert lu.Q == [0, 1]
    assert validate_lu(A, lu).aprovado


def test_modo_q_pula_coluna_nula():
    A = matriz_racional([[0, 1, 2], [0, 3, 4]])
    lu = lu_decomp_q(A)
    assert lu.Q == [1, 2, 0]
    assert lu.P == [1, 0]
    validacao = validate_lu(A, lu)
    assert validacao.aprovado, validacao.violacoes
    assert validacao.perfil == [0, 1]


def test_multiplicadores_sao_diadicos_limitados():
    A = matriz_racional([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    lu = lu_decomp_pq(A)
    for i in range(3):
        for j in range(i):
            l = lu.multiplicador(i, j)
            assert abs(l) <= 1
            assert l.denominator & (l.denominator - 1) == 0
    assert lu.certificado <= TOL


def test_entradas_irracionais():
    pi = IntervalReal.pi()
    A = [[pi, IntervalReal.racional(1)], [pi.escalar(2), pi.exp()]]
    lu = lu_decomp_pq(A, tol_bits=30)
    validacao = validate_lu(A, lu, tol_bits=30)
    assert validacao.aprovado, validacao.violacoes
    assert validacao.posto == 2


def test_corpus_semeado_contra_eliminacao_exata():
    for indice, valores in enumerate(matrizes_semeadas(30, 4, semente=0)):
        A = matriz_racional(valores)
        lu = lu_decomp_pq(A)
        validacao = validate_lu(A, lu)
        assert validacao.aprovado, (indice, validacao.violacoes)
        assert validacao.residuo <= TOL
        exata = eliminacao_exata(valores)
        if exata.menor_pivo is None or exata.menor_pivo > Fraction(1, 2 ** 16):
            assert validacao.posto == exata.posto, indice
            assert validacao.perfil == exata.perfil, indice


def test_corpus_semeado_deterministico():
    assert matrizes_semeadas(10, 3, semente=7) == matrizes_semeadas(10, 3, semente=7)
    primeira = matrizes_semeadas(8, 3, semente=7)
    assert primeira[0] == [[0] * 3 for _ in range(3)]
    assert eliminacao_exata(primeira[7]).posto < 3


def test_modo_q_contra_eliminacao_exata():
    for valores in matrizes_semeadas(15, 3, semente=3):
        A = matriz_racional(valores)
        lu = lu_decomp_q(A)
        validacao = validate_lu(A, lu)
        assert validacao.aprovado, validacao.violacoes
        exata = eliminacao_exata(valores, modo="q")
        if exata.menor_pivo is None or exata.menor_pivo > Fraction(1, 2 ** 16):
            assert validacao.posto == exata.posto


def test_blocos_diagonais():
    A = matriz_racional([[2, 1, 0], [1, 3, 0], [0, 0, 5]])
    lu = lu_decomp_pq(A)
    validacao = validate_lu(A, lu, blocos=(2, 2))
    assert validacao.aprovado, validacao.violacoes
    assert len(validacao.blocos) == 2
    assert all(b.aprovado for b in validacao.blocos)
    (lu_a, A1), (lu_b, A2) = dividir_blocos(A, lu, 2, 2)
    assert lu_a.linhas == 2 and lu_b.linhas == 1
    assert A2[0][0].exato == 5


def test_blocos_rejeita_matriz_nao_diagonal():
    A = matriz_racional([[2, 1, 1], [1, 3, 0], [0, 0, 5]])
    validacao = validate_lu(A, lu_decomp_pq(A), blocos=(2, 2))
    assert not validacao.aprovado


def test_diagonal_corrompida_e_rejeitada():
    A = matriz_racional([[2, 1], [1, 3]])
    lu = lu_decomp_pq(A)
    lu.L[0][0] = IntervalReal.racional(2)
    validacao = validate_lu(A, lu)
    assert not validacao.aprovado
    assert any("diagonal unitária" in v for v in validacao.violacoes)


def test_u_adulterada_falha_no_residuo():
    A = matriz_racional([[2, 1], [1, 3]])
    lu = lu_decomp_pq(A)
    lu.U[0][0] = lu.U[0][0] + IntervalReal.racional(Fraction(1, 1000))
    validacao = validate_lu(A, lu)
    assert not validacao.aprovado
    assert any("resíduo" in v for v in validacao.violacoes)


def test_dimensoes_incompativeis():
    A = matriz_racional([[1, 2], [3, 4]])
    B = matriz_racional([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(ShapeError):
        validate_lu(B, lu_decomp_pq(A))
    with pytest.raises(ShapeError):
        lu_decomp_pq(matriz_racional([[1, 2], [3]]))


@pytest.mark.lento
@pytest.mark.parametrize("quantidade, n", [(200, 4), (50, 8)])
def test_corpus_completo(quantidade, n):
    for indice, valores in enumerate(matrizes_semeadas(quantidade, n, semente=0)):
        A = matriz_racional(valores)
        lu = lu_decomp_pq(A)
        validacao = validate_lu(A, lu)
        assert validacao.aprovado, (indice, validacao.violacoes)
        assert all(abs(lu.multiplicador(i, j)) <= 1 for i in range(n) for j in range(i))
        exata = eliminacao_exata(valores)
        if exata.menor_pivo is None or exata.menor_pivo > Fraction(1, 2 ** 16):
            assert validacao.perfil == exata.perfil, indice
