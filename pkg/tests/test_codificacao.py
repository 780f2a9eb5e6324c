from fractions import Fraction
import random

import pytest
from hypothesis import given, settings, strategies as st

from classes.erros import DecodingError
from classes.name import Name, de_corridas, periodico
from classes.pontos import ArvoreAou, ConjuntoFechado, ConjuntoFinito, Sequencia
from utils.codificacao import (
    codificar_arvore,
    codificar_conjunto_finito,
    codificar_fechado,
    codificar_natural,
    codificar_real,
    decode_point,
    decodificar_arvore,
    decodificar_conjunto_finito,
    decodificar_fechado,
    decodificar_natural,
    decodificar_real,
    despar,
    encode_point,
    index_of,
    inject_coproduct,
    inject_union,
    par,
    rational_enumeration,
    strip_coproduct,
    strip_union,
    tuple_names,
    untuple,
)

racionais = st.fractions(min_value=-1000, max_value=1000, max_denominator=10 ** 4)
racionais_baixos = st.fractions(min_value=-40, max_value=40, max_denominator=200)


# ------------------------------------------------------------------- nomes
def test_bloco_exponencial_custa_pouco():
    nome = de_corridas([(0, 2 ** 80), (1, None)])
    assert nome.seek(0, 1, 2 ** 81) == 2 ** 80
    assert nome.bit(2 ** 80 - 1) == 0
    assert nome.bit(2 ** 80 + 5) == 1


def test_seek_exige_limite_finito():
    nome = periodico("", "0")
    with pytest.raises(ValueError):
        nome.seek(0, 1, None)
    assert nome.seek(0, 1, 1000) is None
    assert nome.read_horizon == 999


def test_leituras_repetidas_coincidem():
    nome = periodico("0110", "10")
    primeira = [nome.bit(j) for j in range(40)]
    assert primeira == [nome.bit(j) for j in range(40)]
    assert nome.prefix(8) == "01101010"


def test_nome_finito_e_rejeitado():
    with pytest.raises(ValueError):
        de_corridas([(0, 3), (1, 2)])


def test_stripped_perde_a_verdade():
    nome = codificar_real(Fraction(1, 3))
    copia = nome.stripped()
    assert copia.ground_truth is None
    assert copia.prefix(64) == nome.prefix(64)


# ------------------------------------------------------------- pareamentos
@given(st.integers(min_value=0, max_value=10 ** 6), st.integers(min_value=0, max_value=10 ** 6))
def test_par_despar(a, b):
    assert despar(par(a, b)) == (a, b)


@given(racionais_baixos)
@settings(max_examples=300, deadline=None)
def test_enumeracao_dos_racionais(q):
    assert rational_enumeration(index_of(q)) == q


@given(racionais_baixos)
@settings(max_examples=200, deadline=None)
def test_diadicos_nos_indices_pares(q):
    diadico = q.denominator & (q.denominator - 1) == 0
    assert (index_of(q) % 2 == 0) == diadico


def test_enumeracao_e_injetiva():
    vistos = [rational_enumeration(i) for i in range(2000)]
    assert len(set(vistos)) == len(vistos)
    assert all(index_of(q) == i for i, q in enumerate(vistos))


def test_enumeracao_indice_negativo():
    with pytest.raises(ValueError):
        rational_enumeration(-1)


# ------------------------------------------------------------------- reais
@given(racionais, st.integers(min_value=0, max_value=60))
@settings(max_examples=100, deadline=None)
def test_nome_real(x, profundidade):
    q = decodificar_real(codificar_real(x), profundidade)
    assert abs(q - x) < Fraction(1, 2 ** profundidade)


@given(racionais, st.integers(min_value=0, max_value=3), st.sampled_from([-1, 0, 1]))
@settings(max_examples=50, deadline=None)
def test_variantes_de_nome_real(x, deslocamento, vies):
    nome = codificar_real(x, deslocamento, vies)
    for i in (0, 5, 20):
        assert abs(decodificar_real(nome, i) - x) < Fraction(1, 2 ** i)


def test_variante_fora_do_contrato():
    with pytest.raises(ValueError):
        codificar_real(Fraction(1), vies=2)


# ---------------------------------------------------------------- naturais
@given(st.integers(min_value=0, max_value=10 ** 4))
def test_natural(n):
    assert decodificar_natural(codificar_natural(n)) == n


def test_natural_malformado():
    with pytest.raises(DecodingError):
        decodificar_natural(periodico("001", "01"), 10)
    with pytest.raises(ValueError):
        codificar_natural(-1)


# ------------------------------------------------------ conjuntos e espaços
def test_conjunto_finito():
    A = ConjuntoFinito(frozenset({0, 2}), 4)
    assert decodificar_conjunto_finito(codificar_conjunto_finito(A), 4) == A
    cheio = ConjuntoFinito(frozenset(range(4)), 3)
    assert decodificar_conjunto_finito(codificar_conjunto_finito(cheio), 3) == cheio


def test_fechado_colapsado_contem_o_ponto():
    restante = decodificar_fechado(codificar_fechado(ConjuntoFechado(Fraction(1, 3), 2)), 10)
    assert restante.contem(Fraction(1, 3))
    assert restante.largura() < Fraction(1, 2 ** 10)


def test_fechado_cheio():
    restante = decodificar_fechado(codificar_fechado(ConjuntoFechado()), 10)
    assert restante.casco() == (0, 1)


def test_arvore_colapsando():
    arvore = ArvoreAou(3, Sequencia("101", "0"))
    niveis = decodificar_arvore(codificar_arvore(arvore), 5)
    assert niveis == [None, None, None, "101", "1010", "10100"]


def test_arvore_com_dois_nos_e_rejeitada():
    # nível 1 com os nós 0 e 1 marcados e o nível 2 com dois de quatro
    nome = de_corridas([(1, 1), (1, 2), (1, 2), (0, 2), (0, 10), (1, None)])
    with pytest.raises(DecodingError):
        decodificar_arvore(nome, 2)


def test_tuplas():
    nomes = [codificar_natural(3), codificar_real(Fraction(1, 2))]
    tupla = tuple_names(nomes)
    assert tupla.ground_truth == (3, Fraction(1, 2))
    a, b = untuple(tupla, 2)
    assert decodificar_natural(a) == 3
    with pytest.raises(DecodingError):
        untuple(tupla, 3)
    with pytest.raises(ValueError):
        tuple_names([])


def test_tupla_intercalada_sem_componentes():
    nome = periodico("", "01")
    pares, impares = untuple(nome, 2)
    assert pares.prefix(6) == "000000"
    assert impares.prefix(6) == "111111"


def test_uniao_e_coproduto():
    marca, resto = strip_union(inject_union(1, codificar_natural(5)))
    assert marca == 1 and decodificar_natural(resto) == 5
    n, resto = strip_coproduct(inject_coproduct(4, codificar_natural(2)))
    assert n == 4 and decodificar_natural(resto) == 2
    with pytest.raises(ValueError):
        inject_union(2, codificar_natural(0))


def test_uniao_e_coproduto_lidos_dos_bits():
    bruto = inject_coproduct(3, codificar_natural(7)).stripped()
    bits = Name(lambda j, b=bruto: (b.bit(j), 1))
    n, resto = strip_coproduct(bits)
    assert n == 3 and decodificar_natural(resto) == 7
    marca, resto = strip_union(periodico("1", "0"))
    assert marca == 1 and resto.prefix(4) == "0000"


def test_ponto_generico():
    espaco = ("real", "nat", "cantor")
    nome = encode_point(espaco, (Fraction(-7, 3), 4, Sequencia("1", "0")))
    x, n, s = decode_point(espaco, nome, 16)
    assert abs(x - Fraction(-7, 3)) < Fraction(1, 2 ** 16)
    assert n == 4
    assert s == "1" + "0" * 15
    assert decode_point("finito:3", encode_point("finito:3", {1, 2}), 8).elementos == {1, 2}
    with pytest.raises(ValueError):
        encode_point("esfera", 1)


@pytest.mark.lento
def test_dez_mil_pontos_semeados():
    rng = random.Random(8)
    for _ in range(10 ** 4 // 4):
        x = Fraction(rng.randint(-10 ** 6, 10 ** 6), rng.randint(1, 10 ** 4))
        n = rng.randint(0, 10 ** 4)
        s = Sequencia(format(rng.getrandbits(12), "012b"), rng.choice(["0", "1", "01"]))
        A = frozenset(k for k in range(6) if rng.random() < 0.5)
        espaco = ("real", "nat", "cantor", "finito:5")
        y, m, prefixo, B = decode_point(espaco, encode_point(espaco, (x, n, s, A)), 24)
        assert abs(y - x) < Fraction(1, 2 ** 24)
        assert m == n
        assert prefixo == s.inicio(24)
        assert B.elementos == A
