import pytest

from classes.erros import ConstructionError
from utils.construtores import build_cnabsorbtion, build_cnextraction, build_composite, subconjunto
from utils.principios import problema
from utils.reducoes import verify_reduction


def test_subconjuntos_por_indice():
    assert subconjunto(0, 2) == frozenset()
    assert subconjunto(3, 2) == frozenset({0, 1})
    assert len({subconjunto(i, 3) for i in range(8)}) == 8


def test_extracao_com_k_um():
    red = build_cnextraction(problema("AoUC_unit"), 1)
    assert red.nome.startswith("cnextraction")
    relatorio = verify_reduction(red, depth=10, tamanho=6, semente=2)
    assert relatorio.aprovado, relatorio.primeira_falha


def test_absorcao_com_n_dois():
    red = build_cnabsorbtion(problema("AoUC_unit"), 2)
    relatorio = verify_reduction(red, depth=10, tamanho=6, semente=2)
    assert relatorio.aprovado, relatorio.primeira_falha


def test_parametros_invalidos():
    with pytest.raises(ValueError):
        build_cnextraction(problema("AoUC_unit"), 0)
    with pytest.raises(ValueError):
        build_cnabsorbtion(problema("AoUC_unit"), 0)


def test_construtor_exige_dominio_bom():
    with pytest.raises(ConstructionError):
        build_cnextraction(problema("LPO"), 1)


def test_cadeia_associada_a_direita():
    etapas = build_composite(1, 1, 1)
    assert len(etapas) == 4
    assert etapas[-1].descricao.endswith("AoUC^3 ⋆ AoUC^3")
    assert [e.executavel for e in etapas] == [True, True, False, False]


def test_cadeia_associada_a_esquerda():
    etapas = build_composite(1, 1, 1, associacao="esquerda")
    assert len(etapas) == 4
    assert etapas[-1].descricao.endswith("C_4 ⋆ AoUC^7")
    assert etapas[0].reducao is not None


def test_cadeia_com_associacao_desconhecida():
    with pytest.raises(ValueError):
        build_composite(1, 1, 1, associacao="meio")
    with pytest.raises(ConstructionError):
        build_composite(0, 1, 1)


@pytest.mark.lento
@pytest.mark.parametrize(
    "construir",
    [
        lambda: build_cnextraction(problema("AoUC_unit"), 1),
        lambda: build_cnextraction(problema("AoUC_unit"), 2),
        lambda: build_cnabsorbtion(problema("AoUC_unit"), 2),
        lambda: build_cnabsorbtion(problema("AoUC_unit"), 3),
    ],
)
def test_construtores_em_corpus_de_duzentas(construir):
    relatorio = verify_reduction(construir(), depth=20, tamanho=200)
    assert relatorio.aprovado, relatorio.primeira_falha
