from dataclasses import replace
from fractions import Fraction

import pytest

from classes.erros import ConstructionError, UnknownReductionError
from classes.reducao import ConfigAdversario
from classes.transformador import Programa
from utils.leitores import escrever_natural
from utils.principios import gerar_corpus, problema
from utils.reducoes import FATOR_FILHO, _filho, compor, get_reduction, identidade, nomes_disponiveis, verify_reduction

RAPIDAS = [n for n in nomes_disponiveis() if n not in ("cnextraction", "cnabsorbtion")]


@pytest.mark.parametrize("nome", RAPIDAS)
def test_reducao_da_biblioteca_em_corpus_pequeno(nome):
    relatorio = verify_reduction(get_reduction(nome), depth=12, tamanho=12, semente=1)
    assert relatorio.aprovado, relatorio.primeira_falha
    assert relatorio.celulas >= 12


def test_reducao_quebrada_e_detectada():
    red = get_reduction("lpo_le_ubrdiv")
    sempre_zero = Programa("sempre_zero", lambda: escrever_natural(0), 0, {0: "nat"})
    quebrada = replace(red, nome="quebrada", K=sempre_zero)
    relatorio = verify_reduction(quebrada, depth=12, tamanho=6)
    assert not relatorio.aprovado
    falha = relatorio.primeira_falha
    assert falha.estagio == "validacao"
    assert falha.instancia["spec"] == {"primeiro_um": None}
    assert falha.para_json()["violated_constraint"]


def test_corpus_externo():
    red = get_reduction("llpo_le_rdiv")
    corpus = gerar_corpus(red.f, 5, semente=9)
    relatorio = verify_reduction(red, corpus=corpus, adversario=ConfigAdversario(amostras=3, semente=2), depth=10)
    assert relatorio.aprovado, relatorio.primeira_falha
    assert relatorio.corpus_id.endswith("externo")


def test_composicao():
    ida = get_reduction("llpo_le_llpo_r2")
    volta = get_reduction("llpo_r2_le_llpo")
    red = compor(ida, volta)
    assert red.f.identificador == "LLPO" and red.g.identificador == "LLPO"
    assert verify_reduction(red, depth=10, tamanho=10).aprovado


def test_composicao_incompativel():
    with pytest.raises(ConstructionError):
        compor(get_reduction("llpo_le_rdiv"), get_reduction("llpo_le_llpo_r2"))


def test_identidade():
    red = identidade(problema("rDiv"))
    assert verify_reduction(red, depth=12, tamanho=8).aprovado
    assert get_reduction("identidade(AoUC_unit)").f.identificador == "AoUC_unit"


def test_reducao_parametrizada():
    red = get_reduction("cfin_le_llpo_power(2)")
    assert red.f.identificador == "C_fin(2)"
    assert verify_reduction(red, depth=10, tamanho=8).aprovado


def test_reducao_desconhecida():
    with pytest.raises(UnknownReductionError) as erro:
        get_reduction("lpo_le_tudo")
    assert "rdiv_le_aouc" in erro.value.disponiveis
    assert isinstance(erro.value, KeyError)
    with pytest.raises(UnknownReductionError):
        get_reduction("rdiv_le_aouc(3)")


@pytest.mark.lento
@pytest.mark.parametrize("nome", nomes_disponiveis())
def test_reducao_com_corpus_completo(nome):
    relatorio = verify_reduction(get_reduction(nome), depth=20, tamanho=1000)
    assert relatorio.aprovado, relatorio.primeira_falha


def test_filhos_da_arvore_de_intervalos_se_sobrepoem():
    a, b = Fraction(0), Fraction(1)
    esquerdo, direito = _filho(a, b, 0), _filho(a, b, 1)
    assert esquerdo == (0, Fraction(2, 3)) and direito == (Fraction(1, 3), 1)
    for n in range(1, 6):
        a, b = _filho(a, b, n % 2)
        assert b - a == FATOR_FILHO ** n
