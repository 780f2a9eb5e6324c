import pytest

from classes.erros import ParseError
from classes.jogo import (
    FIM,
    PRO_VENCE,
    PROFUNDIDADE_INSUFICIENTE,
    ArvoreRegrada,
    GameState,
    OpponentTriple,
)
from utils.estrategia import (
    SUITE,
    aou_height,
    jogar_suite,
    looks_like_aou,
    pro_step,
    run_game,
    suite_adversarios,
    verify_defeat,
)


def oponente(nome):
    return next(o for o in suite_adversarios() if o.nome == nome)


def test_arvore_cheia_parece_aou():
    t = ArvoreRegrada.cheia()
    assert looks_like_aou(t, 3, 3)
    assert not looks_like_aou(t, 3, 2)
    assert aou_height(t, 5) == 5


def test_arvore_colapsando():
    t = ArvoreRegrada.colapsando(2, "10")
    assert list(t.nos(3, 10)) == ["100"]
    assert aou_height(t, 5) == 5


def test_arvore_com_tres_nos_nao_e_aou():
    t = ArvoreRegrada(["*", "*", ["00", "01", "10"]])
    assert not looks_like_aou(t, 3, 5)
    assert aou_height(t, 5) == 2


def test_oponente_constante():
    estado = run_game(oponente("constante"), max_stages=10)
    assert estado.estado == FIM
    assert estado.estagio == 1
    assert estado.tau == "1"
    assert {"1b", "2b", "3a"} <= estado.ramos
    veredito = verify_defeat(oponente("constante"), estado, 8)
    assert veredito.resultado == PRO_VENCE


def test_oponente_identidade_restringe_s():
    opp = oponente("identidade")
    estado = run_game(opp, k=1, max_stages=6)
    assert estado.estado == 1
    assert estado.S("1") == {1}
    assert estado.S("0") == {0, 1}
    assert "4b" in estado.ramos and "1a" in estado.ramos
    veredito = verify_defeat(opp, estado, 4)
    assert veredito.pro_vence
    assert veredito.testemunha == ("1000",)


def test_profundidade_insuficiente():
    opp = oponente("identidade")
    estado = run_game(opp, max_stages=3)
    assert estado.altura_cheia == 4
    veredito = verify_defeat(opp, estado, 4)
    assert veredito.resultado == PROFUNDIDADE_INSUFICIENTE
    assert veredito.para_json()["verdict"] == "insufficient_depth"


def test_k_divergente():
    with pytest.raises(ValueError):
        run_game(oponente("par"), k=1)


def test_passo_depois_do_fim():
    opp = oponente("constante")
    estado = run_game(opp)
    with pytest.raises(ValueError):
        pro_step(estado, opp)


def test_pro_step_nao_altera_o_estado_anterior():
    opp = oponente("identidade")
    inicial = GameState()
    seguinte = pro_step(inicial, opp)
    assert inicial.estagio == 0 and inicial.excecoes == {}
    assert seguinte.estagio == 1


def test_suite_inteira_derrotada():
    resumo = jogar_suite()
    assert len(resumo) == len(SUITE)
    perdedores = [r["opponent"] for r in resumo if r["verdict"] != PRO_VENCE]
    assert not perdedores


def test_suite_exercita_todos_os_ramos():
    ramos = set()
    for opp in suite_adversarios():
        ramos |= run_game(opp, max_stages=16).ramos
    assert ramos >= {"1a", "1b", "2a", "2b", "3a", "3b", "4a", "4b"}


def test_oponente_de_json():
    dados = {"k": 1, "trees": [{"tipo": "cheia"}], "phi": {"op": "proj", "i": 0}, "psi": {"op": "nunca"}}
    opp = OpponentTriple.de_json(dados, "arquivo")
    assert opp.nome == "arquivo" and opp.k == 1
    with pytest.raises(ParseError) as erro:
        OpponentTriple.de_json({"trees": []})
    assert erro.value.campo == "k"
    with pytest.raises(ParseError) as erro:
        OpponentTriple.de_json({**dados, "k": 2})
    assert erro.value.campo == "trees"
    with pytest.raises(ParseError):
        OpponentTriple.de_json({**dados, "phi": {"op": "proj", "i": 3}})


def test_arvore_atrasada_nao_encerra_sem_evidencia():
    dados = {
        "k": 1,
        "trees": [{"tipo": "cheia", "atraso": 2}],
        "phi": {"op": "const", "ciclo": "0"},
        "psi": {"op": "const", "valor": "0"},
    }
    opp = OpponentTriple.de_json(dados, "atrasada")
    estado = run_game(opp, max_stages=10)
    primeiro = estado.transcricao[0]
    assert primeiro["decisoes"] == ["1b", "2a"]
    assert "tau" not in primeiro
    assert estado.terminou and estado.estagio == 2
    assert estado.tau == "1"
    veredito = verify_defeat(opp, estado, 8)
    assert veredito.resultado == PRO_VENCE
