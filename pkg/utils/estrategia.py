"""
Estratégia Pro do jogo de separação contra uma jogada fixa do oponente.

A cada estágio Pro calcula a altura a.o.u. comum das árvores do oponente e
percorre os itens 1 a 4: ou estende T_e com um nível cheio, ou restringe
S_e(0^q1) e avança o estado, ou encerra T_e num único caminho τ0^∞ que
evita as saídas de φ.
"""
from dataclasses import replace
from itertools import islice, product
import logging
from typing import Any, Dict, List, Optional

from classes.jogo import (
    FIM,
    OPONENTE_SOBREVIVE,
    PRO_VENCE,
    PROFUNDIDADE_INSUFICIENTE,
    GameState,
    OpponentTriple,
    PartialTree,
    VereditoJogo,
)

logger = logging.getLogger(__name__)


def looks_like_aou(t: PartialTree, l: int, s: int) -> bool:
    """t(σ)[s] converge em todo |σ| = l e todo nível n < l tem 2^n nós ou 1."""
    if not t.converge_nivel(l, s):
        return False
    return all(t.cardinalidade(n, s) in (1, 2 ** n) for n in range(l))


def aou_height(t: PartialTree, s: int) -> int:
    """Maior l ≤ s em que t parece árvore a.o.u. no estágio s (0 se nenhum)."""
    validos = 0
    while validos < s and t.cardinalidade(validos, s) in (1, 2 ** validos):
        validos += 1
    for l in range(validos, -1, -1):
        if t.converge_nivel(l, s):
            return l
    return 0


def _seguir(estado: GameState, s: int, registro: Dict[str, Any], ramo: str) -> GameState:
    """Casos "não": estado mantido e nível s de T_e cheio."""
    registro["decisoes"].append(ramo)
    return replace(estado, estagio=s, altura_cheia=s + 1)


def pro_step(estado: GameState, opp: OpponentTriple) -> GameState:
    """Um estágio da estratégia Pro; devolve um novo estado."""
    if estado.terminou:
        raise ValueError("o jogo já terminou")
    s = estado.estagio + 1
    q = estado.estado
    novo = replace(
        estado,
        excecoes={p: set(v) for p, v in estado.excecoes.items()},
        transcricao=list(estado.transcricao),
        ramos=set(estado.ramos),
    )
    altura = min(aou_height(t, s) for t in opp.arvores)
    registro: Dict[str, Any] = {"stage": s, "state": q, "aou": altura, "decisoes": []}
    novo.transcricao.append(registro)

    resultado = _itens(novo, opp, s, q, altura, registro)
    resultado.ramos.update(registro["decisoes"])
    logger.debug("[JOGO] estágio %d: estado %s, aou %d, %s", s, q, altura, " ".join(registro["decisoes"]))
    return resultado


def _no_unico(t: PartialTree, altura: int, s: int) -> bool:
    return len(list(islice(t.nos(altura, s), 2))) == 1


def _itens(
    estado: GameState,
    opp: OpponentTriple,
    s: int,
    q: int,
    altura: int,
    registro: Dict[str, Any],
) -> GameState:
    colapsadas = sum(1 for t in opp.arvores if _no_unico(t, altura, s))
    if colapsadas < q:
        return _seguir(estado, s, registro, "1a")
    registro["decisoes"].append("1b")

    niveis = [list(t.nos(altura, s)) for t in opp.arvores]
    # sem k-uplas convergidas não há evidência para o item 3
    if not all(niveis) or any(len(opp.phi_em(sigmas, s)) < q + 1 for sigmas in product(*niveis)):
        return _seguir(estado, s, registro, "2a")
    registro["decisoes"].append("2b")

    saidas = {sigmas: opp.phi_em(sigmas, s) for sigmas in product(*niveis)}
    imagem = {x[: q + 1] for x in saidas.values()}
    if len(imagem) < 2 ** (q + 1):
        candidatos = (format(j, f"0{q + 1}b") for j in range(2 ** (q + 1)))
        tau = next(c for c in candidatos if c not in imagem)
        registro["decisoes"].append("3a")
        registro["tau"] = tau
        logger.info("[JOGO] estágio %d: φ não cobre %s; T_e passa a ter o único caminho %s0^∞", s, tau, tau)
        return replace(estado, estagio=s, estado=FIM, altura_cheia=s, tau=tau)
    registro["decisoes"].append("3b")

    escolhas = {sigmas: opp.psi_em(sigmas, s) for sigmas in saidas}
    if any(j is None for j in escolhas.values()):
        return _seguir(estado, s, registro, "4a")
    registro["decisoes"].append("4b")

    prefixo = "0" * q + "1"
    D = [sigmas for sigmas, x in saidas.items() if x.startswith(prefixo)]
    # D ≠ ∅ porque a imagem de φ cobre {0,1}^{q+1}, inclusive 0^q1
    logger.debug("[JOGO] estágio %d: D tem %d k-uplas com φ ⪰ %s", s, len(D), prefixo)
    valores = {escolhas[sigmas] for sigmas in D}
    S = estado.excecoes.setdefault(prefixo, {0, 1})
    if valores == {0, 1}:
        S.discard(0)
    else:
        (tomado,) = valores
        S.discard(tomado)
    registro["S"] = {prefixo: sorted(S)}
    return replace(estado, estagio=s, estado=q + 1, altura_cheia=s + 1)


def run_game(opp: OpponentTriple, k: Optional[int] = None, max_stages: int = 64) -> GameState:
    """Joga os estágios 1..max_stages, ou até o estado "end"."""
    if k is not None and k != opp.k:
        raise ValueError(f"o oponente joga {opp.k} árvores, não {k}")
    estado = GameState()
    while estado.estagio < max_stages and not estado.terminou:
        estado = pro_step(estado, opp)
    logger.info(
        "[JOGO] %s: %d estágios, estado %s, ramos %s",
        opp.nome,
        estado.estagio,
        estado.estado,
        ",".join(sorted(estado.ramos)),
    )
    return estado


def verify_defeat(opp: OpponentTriple, estado: GameState, depth: int) -> VereditoJogo:
    """
    Procura, entre as k-uplas de nós de comprimento `depth` das árvores do
    oponente, uma em que φ sai de [T_e] ou ψ sai de S_e(φ).
    """
    if not estado.terminou and depth >= estado.altura_cheia:
        return VereditoJogo(
            PROFUNDIDADE_INSUFICIENTE,
            depth,
            motivo=f"T_e só foi construída até a altura {estado.altura_cheia - 1}",
        )
    for i, t in enumerate(opp.arvores):
        if not t.converge_nivel(depth, opp.orcamento):
            return VereditoJogo(
                PROFUNDIDADE_INSUFICIENTE,
                depth,
                motivo=f"árvore {i} não converge no nível {depth} dentro do orçamento",
            )
    limite = min(opp.orcamento, max(depth, estado.estagio))
    examinadas = 0
    for sigmas in product(*(t.nos(depth, opp.orcamento) for t in opp.arvores)):
        examinadas += 1
        x = opp.phi_em(sigmas, limite)[:depth]
        if not estado.contem(x):
            return VereditoJogo(PRO_VENCE, depth, sigmas, f"φ = {x}… fora de [T_e]", examinadas)
        j = opp.psi_em(sigmas, limite)
        if j is not None and j not in estado.S(x):
            return VereditoJogo(PRO_VENCE, depth, sigmas, f"ψ = {j} fora de S_e({x}…)", examinadas)
    return VereditoJogo(OPONENTE_SOBREVIVE, depth, motivo="nenhuma violação até a profundidade", tuplas=examinadas)


# --------------------------------------------------------- suíte adversária
SUITE: List[Dict[str, Any]] = [
    {
        "name": "constante",
        "k": 1,
        "trees": [{"tipo": "cheia"}],
        "phi": {"op": "const", "ciclo": "0"},
        "psi": {"op": "const", "valor": "0"},
        "depth": 8,
    },
    {
        "name": "identidade",
        "k": 1,
        "trees": [{"tipo": "cheia"}],
        "phi": {"op": "proj", "i": 0},
        "psi": {"op": "const", "valor": "0"},
        "depth": 8,
    },
    {
        "name": "segundo_bit",
        "k": 1,
        "trees": [{"tipo": "cheia"}],
        "phi": {"op": "proj", "i": 0},
        "psi": {"op": "bit", "pos": 1, "arg": {"op": "proj", "i": 0}},
        "depth": 8,
    },
    {
        "name": "psi_lento",
        "k": 1,
        "trees": [{"tipo": "cheia"}],
        "phi": {"op": "proj", "i": 0},
        "psi": {"op": "atraso", "passos": 3, "arg": {"op": "const", "valor": "0"}},
        "depth": 8,
    },
    {
        "name": "phi_lento",
        "k": 1,
        "trees": [{"tipo": "cheia"}],
        "phi": {"op": "atraso", "passos": 2, "arg": {"op": "proj", "i": 0}},
        "psi": {"op": "const", "valor": "1"},
        "depth": 8,
    },
    {
        "name": "colapso",
        "k": 1,
        "trees": [{"tipo": "colapso", "altura": 2, "caminho": "10"}],
        "phi": {"op": "proj", "i": 0},
        "psi": {"op": "const", "valor": "1"},
        "depth": 8,
    },
    {
        "name": "par",
        "k": 2,
        "trees": [{"tipo": "cheia"}, {"tipo": "cheia"}],
        "phi": {"op": "intercalar", "args": [{"op": "proj", "i": 0}, {"op": "proj", "i": 1}]},
        "psi": {"op": "const", "valor": "0"},
        "depth": 5,
    },
    {
        "name": "par_colapso",
        "k": 2,
        "trees": [{"tipo": "cheia"}, {"tipo": "colapso", "altura": 2, "caminho": "00"}],
        "phi": {"op": "proj", "i": 1},
        "psi": {"op": "bit", "pos": 0, "arg": {"op": "proj", "i": 0}},
        "depth": 6,
    },
]


def suite_adversarios() -> List[OpponentTriple]:
    return [OpponentTriple.de_json(dados) for dados in SUITE]


def profundidade_sugerida(nome: str) -> int:
    for dados in SUITE:
        if dados["name"] == nome:
            return dados["depth"]
    raise KeyError(nome)


def jogar_suite(max_stages: int = 16, depth: Optional[int] = None) -> List[Dict[str, Any]]:
    """Joga e verifica cada oponente da suíte; devolve um resumo por oponente."""
    resumo = []
    for opp in suite_adversarios():
        estado = run_game(opp, max_stages=max_stages)
        veredito = verify_defeat(opp, estado, depth or profundidade_sugerida(opp.nome))
        resumo.append({"opponent": opp.nome, "k": opp.k, "game": estado.para_json(), **veredito.para_json()})
    return resumo
