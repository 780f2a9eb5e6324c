import pytest

from classes.erros import GenerationError
from utils.algebra import Composicional, Coproduto, Produto, Uniao, combine, continuacoes_compativeis, iterado
from utils.codificacao import codificar_natural, inject_union, tuple_names, untuple
from utils.principios import (
    Identidade,
    gerar_corpus,
    generate_instance,
    problema,
    sample_realizer_outputs,
    solve,
    validate,
)


def percorrer(prob, tamanho=4, depth=10, amostras=2):
    """solve, validate e sample sobre um corpus pequeno do problema."""
    for entrada in gerar_corpus(prob, tamanho, semente=3):
        resposta = solve(prob, entrada.nome)
        veredito = validate(prob, entrada.nome, resposta, depth)
        assert veredito, (entrada.descritor, veredito.motivo)
        for candidato in sample_realizer_outputs(prob, entrada.nome, amostras, seed=1):
            veredito = validate(prob, entrada.nome, candidato, depth)
            assert veredito, (entrada.descritor, veredito.motivo)


def test_produto_e_potencia():
    assert len(combine("product", ["LPO", "LLPO"]).fatores) == 2
    assert combine("finite_power", ["LPO"], 3).identificador == "LPO^3"


def test_potencia_zero_e_identidade():
    assert isinstance(combine("finite_power", ["rDiv"], 0), Identidade)
    assert isinstance(combine("iterated", ["rDiv"], 0), Identidade)


def test_composicional():
    assert isinstance(combine("star", ["LLPO", "AoUC_unit"]), Composicional)


def test_operador_desconhecido():
    with pytest.raises(KeyError):
        combine("tensor", ["LPO"])


def test_aridade_incompativel():
    with pytest.raises(ValueError):
        combine("finite_power", ["LPO"])
    with pytest.raises(ValueError):
        combine("union", ["LPO", "LLPO", "LPO"])


# ------------------------------------------------------------- validação
def test_produto_valida_em_conjuncao():
    prod = combine("product", ["LPO", "LLPO"])
    instancia = generate_instance(prod, {"fatores": [{"primeiro_um": 0}, {"primeiro_um": 3}]})
    assert validate(prod, instancia, tuple_names([codificar_natural(0), codificar_natural(1)]))
    assert not validate(prod, instancia, tuple_names([codificar_natural(0), codificar_natural(0)]))
    assert not validate(prod, instancia, tuple_names([codificar_natural(1), codificar_natural(1)]))


def test_uniao_despacha_pela_marca():
    uniao = combine("union", ["LPO", "LLPO"])
    instancia = generate_instance(uniao, {"marca": 1, "instancia": {"primeiro_um": 3}})
    assert validate(uniao, instancia, inject_union(1, codificar_natural(1)))
    veredito = validate(uniao, instancia, inject_union(0, codificar_natural(1)))
    assert not veredito
    assert veredito.testemunha == 0


def test_estrela_responde_com_pares():
    prob = combine("star", ["LLPO", "AoUC_unit"])
    (entrada,) = gerar_corpus(prob, 1, semente=5)
    resposta_g, resposta_f = untuple(solve(prob, entrada.nome), 2)
    assert validate(problema("AoUC_unit"), entrada.nome.components[0], resposta_g)
    assert validate(prob, entrada.nome, tuple_names([resposta_g, resposta_f]))


@pytest.mark.parametrize(
    "montar",
    [
        lambda: combine("product", ["LPO", "rDiv"]),
        lambda: combine("union", ["LLPO", "AoUC_unit"]),
        lambda: combine("coproduct", ["LPO", "LLPO", "rDiv"]),
        lambda: combine("star_power", ["LLPO"]),
        lambda: combine("finite_power", ["AoUC_unit"], 2),
        lambda: combine("star", ["AoUC_unit", "rDiv"]),
    ],
    ids=["produto", "uniao", "coproduto", "estrela_finita", "potencia", "composicional"],
)
def test_operadores_em_corpus(montar):
    prob = montar()
    assert isinstance(prob, (Produto, Uniao, Coproduto, Composicional))
    percorrer(prob)


# --------------------------------------------------------------- iteração
def test_iterado_de_ordem_um_e_o_proprio_problema():
    llpo = problema("LLPO")
    assert iterado(llpo, 1) is llpo
    dois = combine("iterated", [llpo], 2)
    assert isinstance(dois, Composicional)
    assert dois.f is llpo and dois.g is llpo


@pytest.mark.parametrize("base", ["AoUC_unit", "LLPO", "rDiv"])
def test_iterado_de_ordem_dois(base):
    prob = combine("iterated", [base], 2)
    assert continuacoes_compativeis(prob.f, prob.g)
    percorrer(prob)


def test_iterado_de_ordem_tres_aninha_pares():
    prob = combine("iterated", ["LLPO"], 3)
    assert continuacoes_compativeis(prob.f, prob.g) == ["um_na_resposta"]
    entrada = gerar_corpus(prob, 1, semente=0)[0]
    resposta = solve(prob, entrada.nome)
    _, resto = untuple(resposta, 2)
    assert len(untuple(resto, 2)) == 2
    assert validate(prob, entrada.nome, resposta)
    percorrer(prob, tamanho=3)


def test_sem_codigo_para_lpo_a_partir_de_cantor():
    with pytest.raises(GenerationError):
        continuacoes_compativeis(problema("LPO"), problema("DependentCut"))
