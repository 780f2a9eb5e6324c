from fractions import Fraction

import pytest

from classes.erros import GenerationError
from classes.pontos import Sequencia
from utils.codificacao import (
    codificar_natural,
    codificar_real,
    codificar_sequencia,
    decodificar_natural,
    decodificar_real,
)
from utils.principios import (
    gerar_corpus,
    generate_instance,
    problema,
    sample_realizer_outputs,
    solve,
    validate,
)


def sequencia(prefixo, ciclo="0"):
    return codificar_sequencia(Sequencia(prefixo, ciclo))


def test_lpo():
    lpo = problema("LPO")
    assert decodificar_natural(solve(lpo, sequencia("0001"))) == 0
    assert decodificar_natural(solve(lpo, sequencia(""))) == 1
    assert not validate(lpo, sequencia("0001"), codificar_natural(1))


def test_llpo_paridade():
    llpo = problema("LLPO")
    assert validate(llpo, sequencia("0001"), codificar_natural(1))
    veredito = validate(llpo, sequencia("0001"), codificar_natural(0))
    assert not veredito
    assert veredito.testemunha == 0
    assert validate(llpo, sequencia(""), codificar_natural(0))
    assert validate(llpo, sequencia(""), codificar_natural(1))


def test_llpo_r2():
    llpo = problema("LLPO_R2")
    ambos = generate_instance(llpo, {"x": "1/2", "y": "1/4"})
    assert validate(llpo, ambos, codificar_natural(0)) and validate(llpo, ambos, codificar_natural(1))
    so_y_nulo = generate_instance(llpo, {"x": "1/3", "y": 0})
    assert validate(llpo, so_y_nulo, codificar_natural(1))
    assert not validate(llpo, so_y_nulo, codificar_natural(0))


def test_cfin():
    cfin = problema("C_fin(3)")
    instancia = generate_instance(cfin, {"elementos": [2]})
    assert validate(cfin, instancia, codificar_natural(2))
    assert not validate(cfin, instancia, codificar_natural(1))
    with pytest.raises(GenerationError):
        generate_instance(cfin, {"elementos": []})
    with pytest.raises(GenerationError):
        generate_instance(cfin, {"elementos": [4]})


def test_rdiv():
    rdiv = problema("rDiv")
    instancia = generate_instance(rdiv, {"x": "1/2", "y": "1"})
    assert abs(decodificar_real(solve(rdiv, instancia), 20) - Fraction(1, 2)) < Fraction(1, 2 ** 20)
    assert validate(rdiv, instancia, codificar_real(Fraction(1, 2)))
    assert not validate(rdiv, instancia, codificar_real(Fraction(3, 4)))


def test_rdiv_sem_divisor_aceita_todo_o_intervalo():
    rdiv = problema("rDiv")
    instancia = generate_instance(rdiv, {"x": 0, "y": 0})
    assert validate(rdiv, instancia, codificar_real(Fraction(1, 3)))
    assert validate(rdiv, instancia, codificar_real(Fraction(1)))
    assert not validate(rdiv, instancia, codificar_real(Fraction(3, 2)))


def test_rdiv_normalizado():
    with pytest.raises(GenerationError):
        generate_instance(problema("rDiv"), {"x": 2, "y": 1})
    with pytest.raises(GenerationError):
        generate_instance(problema("rDiv"), {"x": "1/0", "y": 1})


def test_rdiv_sem_verdade_de_base():
    rdiv = problema("rDiv")
    instancia = generate_instance(rdiv, {"x": "1/3", "y": "2/3"}).stripped()
    assert validate(rdiv, instancia, codificar_real(Fraction(1, 2)), depth=16)
    assert not validate(rdiv, instancia, codificar_real(Fraction(5, 8)), depth=16)


def test_ubrdiv():
    ubrdiv = problema("ubrDiv")
    instancia = generate_instance(ubrdiv, {"x": "-5/3", "y": "1/3"})
    assert validate(ubrdiv, instancia, codificar_real(Fraction(-5)))
    livre = generate_instance(ubrdiv, {"x": "1/3", "y": 0})
    assert validate(ubrdiv, livre, codificar_real(Fraction(1000)))


def test_dependent_cut():
    corte = problema("DependentCut")
    instancia = sequencia("0001", "10")
    assert validate(corte, instancia, sequencia("", "10"))
    assert not validate(corte, instancia, sequencia("", "01"))
    assert validate(corte, sequencia(""), sequencia("1101"))


def test_aouc_unit():
    aouc = problema("AoUC_unit")
    colapso = generate_instance(aouc, {"ponto": "1/3", "colapso": 2})
    assert validate(aouc, colapso, codificar_real(Fraction(1, 3)))
    assert not validate(aouc, colapso, codificar_real(Fraction(1, 2)))
    cheio = generate_instance(aouc, {"cheio": True})
    assert validate(aouc, cheio, codificar_real(Fraction(7, 8)))


def test_amostras_de_realizadores_sao_validas():
    rdiv = problema("rDiv")
    instancia = generate_instance(rdiv, {"x": "1/4", "y": "1/2"})
    amostras = sample_realizer_outputs(rdiv, instancia, 6, seed=3)
    assert len(amostras) == 6
    assert all(validate(rdiv, instancia, nome) for nome in amostras)
    assert len({nome.prefix(256) for nome in amostras}) > 1
    with pytest.raises(ValueError):
        sample_realizer_outputs(rdiv, instancia, 0)


def test_corpus_deterministico():
    rdiv = problema("rDiv")
    a = [e.para_json() for e in gerar_corpus(rdiv, 40, semente=5)]
    b = [e.para_json() for e in gerar_corpus(rdiv, 40, semente=5)]
    assert a == b
    assert len(a) == 40
    assert {"x": 0, "y": 0} in [e["spec"] for e in a]
    assert a != [e.para_json() for e in gerar_corpus(rdiv, 40, semente=6)]


def test_corpus_vazio():
    with pytest.raises(ValueError):
        gerar_corpus(problema("LPO"), 0)


def test_problema_desconhecido():
    with pytest.raises(KeyError):
        problema("Kuratowski")
