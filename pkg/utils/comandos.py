"""
Comandos da linha de comando. Cada comando devolve (código de saída,
relatório); main.py escreve o relatório no formato pedido.

Códigos: 0 sucesso, 1 falha de verificação, 2 erro de leitura ou de uso,
3 veredito de profundidade insuficiente no jogo.
"""
from fractions import Fraction
import json
import logging
from pathlib import Path
import re
from typing import Any, Dict, List, Optional, Tuple

from classes.configuracao import RunConfig
from classes.erros import ParseError
from classes.intervalo import IntervalReal
from classes.jogo import PROFUNDIDADE_INSUFICIENTE, GameState, OpponentTriple
from classes.reducao import ConfigAdversario
from classes.robust_lu import Matriz, intervalo_json
from utils.decomposicao import lu_decomp_pq, lu_decomp_q, matrizes_semeadas, validate_lu
from utils.estrategia import SUITE, jogar_suite, run_game, verify_defeat
from utils.graficos import plotar_arvore_jogo, plotar_grade_rellich
from utils.principios import gerar_corpus, problema
from utils.reducoes import get_reduction, nomes_disponiveis, verify_reduction
from utils.rellich import grade_rellich, matriz_rellich, recover_x

logger = logging.getLogger(__name__)

Resultado = Tuple[int, Dict[str, Any]]

OK, FALHA, ERRO_USO, PROFUNDIDADE = 0, 1, 2, 3

_RACIONAL = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


# ------------------------------------------------------------------ leitura
def racional_de(texto: Any, **local: Any) -> Fraction:
    if isinstance(texto, int) and not isinstance(texto, bool):
        return Fraction(texto)
    casamento = _RACIONAL.match(texto) if isinstance(texto, str) else None
    if casamento is None:
        raise ParseError(f"racional malformado {texto!r}", **local)
    numerador, denominador = casamento.groups()
    if denominador is not None and int(denominador) == 0:
        raise ParseError(f"denominador nulo em {texto!r}", **local)
    return Fraction(int(numerador), int(denominador or 1))


def ler_matriz(caminho: str) -> Tuple[Matriz, Dict[Tuple[int, int], Tuple[Fraction, Tuple[int, int]]]]:
    """
    Lê { rows, cols, entries } e devolve a matriz e as células de Rellich
    encontradas, posição → (ε, célula de B(ε)).
    """
    try:
        dados = json.loads(Path(caminho).read_text(encoding="utf-8"))
    except json.JSONDecodeError as erro:
        raise ParseError(f"JSON inválido em {caminho}: {erro.msg}", linha=erro.lineno, coluna=erro.colno) from erro
    if not isinstance(dados, dict):
        raise ParseError("esperado um objeto JSON", campo="entries")
    entradas = dados.get("entries")
    if not isinstance(entradas, list) or not entradas:
        raise ParseError("lista de entradas ausente", campo="entries")
    linhas = int(dados.get("rows", len(entradas)))
    colunas = int(dados.get("cols", len(entradas[0])))
    if len(entradas) != linhas:
        raise ParseError(f"{len(entradas)} linhas, rows = {linhas}", campo="rows")

    matrizes_b: Dict[Fraction, Matriz] = {}
    celulas: Dict[Tuple[int, int], Tuple[Fraction, Tuple[int, int]]] = {}
    A: Matriz = []
    for i, linha in enumerate(entradas):
        if not isinstance(linha, list) or len(linha) != colunas:
            raise ParseError(f"esperadas {colunas} colunas", linha=i)
        nova = []
        for j, valor in enumerate(linha):
            local = {"linha": i, "coluna": j}
            if isinstance(valor, dict) and "dyadic" in valor:
                try:
                    mantissa, expoente = (int(v) for v in valor["dyadic"])
                except (TypeError, ValueError):
                    raise ParseError(f"diádico malformado {valor!r}", **local) from None
                nova.append(IntervalReal.diadico(mantissa, expoente))
            elif isinstance(valor, dict) and "rellich" in valor:
                rellich = valor["rellich"]
                if not isinstance(rellich, dict) or "eps" not in rellich or "cell" not in rellich:
                    raise ParseError("rellich exige eps e cell", **local)
                eps = racional_de(rellich["eps"], **local)
                if not 0 <= eps <= 1:
                    raise ParseError(f"ε = {eps} fora de [0, 1]", **local)
                try:
                    a, b = (int(v) for v in rellich["cell"])
                except (TypeError, ValueError):
                    raise ParseError(f"célula malformada {rellich['cell']!r}", **local) from None
                if not (0 <= a < 2 and 0 <= b < 2):
                    raise ParseError(f"célula {rellich['cell']!r} fora de B", **local)
                if eps not in matrizes_b:
                    matrizes_b[eps] = matriz_rellich(IntervalReal.racional(eps))
                nova.append(matrizes_b[eps][a][b])
                celulas[(i, j)] = (eps, (a, b))
            else:
                nova.append(IntervalReal.racional(racional_de(valor, **local)))
        A.append(nova)
    return A, celulas


def _eps_da_rellich(A: Matriz, celulas) -> Optional[Fraction]:
    """ε quando A é exatamente B(ε), célula por célula."""
    if len(A) != 2 or len(A[0]) != 2 or len(celulas) != 4:
        return None
    valores = {eps for eps, _ in celulas.values()}
    if len(valores) != 1 or any(posicao != celula for posicao, (_, celula) in celulas.items()):
        return None
    return valores.pop()


def _ler_json(caminho: str) -> Any:
    try:
        return json.loads(Path(caminho).read_text(encoding="utf-8"))
    except json.JSONDecodeError as erro:
        raise ParseError(f"JSON inválido em {caminho}: {erro.msg}", linha=erro.lineno, coluna=erro.colno) from erro


def _escrever_json(caminho: Path, dados: Any) -> None:
    caminho.write_text(json.dumps(dados, indent=2, sort_keys=True, ensure_ascii=False, default=str) + "\n", encoding="utf-8")


# ------------------------------------------------------------------- comandos
def cmd_lu(caminho: str, config: RunConfig, modo: str = "pq", blocos: Optional[Tuple[int, int]] = None) -> Resultado:
    """Decompõe a matriz do arquivo e valida a decomposição."""
    A, celulas = ler_matriz(caminho)
    decompor = lu_decomp_pq if modo == "pq" else lu_decomp_q
    lu = decompor(A, config.tol_bits)
    validacao = validate_lu(A, lu, config.tol_bits, blocos)
    relatorio: Dict[str, Any] = {
        "schema": "lu/1",
        "matrix": caminho,
        "config": config.para_json(),
        "decomposition": lu.para_json(config.tol_bits + 4),
        "validation": validacao.para_json(),
    }
    eps = _eps_da_rellich(A, celulas)
    if eps is not None:
        x = recover_x(lu)
        relatorio["rellich"] = {
            "eps": str(eps),
            "x_eps": intervalo_json(x.intervalo(config.precision_bits)),
            "x_eps_approx": float(x.ponto_medio(config.precision_bits)),
        }
    logger.info("[CLI] lu %s: %s", caminho, "ok" if validacao.aprovado else "; ".join(validacao.violacoes))
    return (OK if validacao.aprovado else FALHA), relatorio


def cmd_verify(nome: str, config: RunConfig) -> Resultado:
    """Verifica uma redução da biblioteca (ou todas, com "all") no corpus semeado."""
    nomes = nomes_disponiveis() if nome == "all" else [nome]
    relatorios = []
    for atual in nomes:
        red = get_reduction(atual, config.horizon, config.budget)
        relatorios.append(
            verify_reduction(
                red,
                adversario=ConfigAdversario(semente=config.seed),
                depth=config.depth,
                orcamento=config.budget,
                tamanho=config.corpus_size,
                semente=config.seed,
            )
        )
    aprovado = all(r.aprovado for r in relatorios)
    return (OK if aprovado else FALHA), {
        "schema": "verify/1",
        "config": config.para_json(),
        "summary": [
            {"reduction": r.reducao, "cells": r.celulas, "failures": len(r.falhas), "passed": r.aprovado}
            for r in relatorios
        ],
        "reports": [r.para_json() for r in relatorios],
    }


def materializar_te(estado: GameState, profundidade: int) -> List[str]:
    """Nível a nível: "full" ou o único nó."""
    return [estado.nivel(n) or "full" for n in range(1, profundidade + 1)]


def cmd_game(caminho: Optional[str], config: RunConfig) -> Resultado:
    """Joga contra o oponente do arquivo, ou contra a suíte embutida se `caminho` é None."""
    if caminho is None:
        resumo = jogar_suite(config.max_stages)
        todos = all(r["verdict"] == "pro_wins" for r in resumo)
        return (OK if todos else FALHA), {"schema": "game-suite/1", "config": config.para_json(), "results": resumo}

    dados = _ler_json(caminho)
    if not isinstance(dados, dict):
        raise ParseError("esperado um objeto JSON", campo="k")
    dados = dict(dados)
    dados.setdefault("budget", config.budget)
    opp = OpponentTriple.de_json(dados, Path(caminho).stem)
    estado = run_game(opp, max_stages=config.max_stages)
    profundidade = int(dados.get("depth", config.depth))
    veredito = verify_defeat(opp, estado, profundidade)
    if config.grafico:
        plotar_arvore_jogo(estado, profundidade, config.grafico)
    if veredito.pro_vence:
        codigo = OK
    elif veredito.resultado == PROFUNDIDADE_INSUFICIENTE:
        codigo = PROFUNDIDADE
    else:
        codigo = FALHA
    return codigo, {
        "schema": "game/1",
        "opponent": opp.nome,
        "config": config.para_json(),
        "game": estado.para_json(),
        "T_e": materializar_te(estado, max(profundidade, estado.estagio)),
        **veredito.para_json(),
    }


def cmd_gen(tipo: str, config: RunConfig, nome_problema: str = "rDiv", dimensao: int = 4) -> Resultado:
    """Gera matrizes, corpus ou a suíte de oponentes em `config.out` (diretório)."""
    destino = Path(config.out or "gerados")
    destino.mkdir(parents=True, exist_ok=True)
    arquivos: List[str] = []
    if tipo == "matrices":
        for i, M in enumerate(matrizes_semeadas(config.corpus_size, dimensao, config.seed)):
            caminho = destino / f"matriz_{i:04d}.json"
            _escrever_json(caminho, {"rows": dimensao, "cols": dimensao, "entries": [[str(v) for v in linha] for linha in M]})
            arquivos.append(str(caminho))
    elif tipo == "corpus":
        prob = problema(nome_problema, config.horizon, config.budget)
        corpus = gerar_corpus(prob, config.corpus_size, config.seed)
        caminho = destino / f"corpus_{prob.identificador}.json"
        _escrever_json(caminho, [entrada.para_json() for entrada in corpus])
        arquivos.append(str(caminho))
    elif tipo == "opponents":
        for dados in SUITE:
            caminho = destino / f"oponente_{dados['name']}.json"
            _escrever_json(caminho, dados)
            arquivos.append(str(caminho))
    else:
        raise ValueError(f"tipo desconhecido {tipo!r}; use matrices, corpus ou opponents")
    logger.info("[CLI] gen %s: %d arquivos em %s", tipo, len(arquivos), destino)
    return OK, {"schema": "gen/1", "kind": tipo, "config": config.para_json(), "files": arquivos}


def cmd_rellich(config: RunConfig, k_max: int = 3) -> Resultado:
    """Grade k = 1..k_max, y ∈ {0, 1/8, …, 1}: recupera y de L em B(1/(2kπ + y))."""
    ys = [Fraction(j, 8) for j in range(9)]
    linhas = grade_rellich(range(1, k_max + 1), ys, config.tol_bits)
    if config.grafico:
        plotar_grade_rellich(linhas, config.grafico)
    todos = all(l["ok"] for l in linhas)
    return (OK if todos else FALHA), {
        "schema": "rellich/1",
        "config": config.para_json(),
        "grid": [{**l, "y": str(l["y"]), "x": float(l["x"]), "erro": float(l["erro"])} for l in linhas],
    }


# ------------------------------------------------------------------ tabelas
def _alinhar(linhas: List[List[str]]) -> str:
    larguras = [max(len(l[c]) for l in linhas) for c in range(len(linhas[0]))]
    return "\n".join("  ".join(v.ljust(w) for v, w in zip(l, larguras)).rstrip() for l in linhas)


def tabela(relatorio: Dict[str, Any]) -> str:
    """Forma legível do relatório, derivada dos mesmos dados do JSON."""
    esquema = relatorio.get("schema")
    if esquema == "lu/1":
        d, v = relatorio["decomposition"], relatorio["validation"]
        linhas = [
            ["P", str(d["P"])],
            ["Q", str(d["Q"])],
            ["resíduo", v["residual"]],
            ["posto", str(v["rank"])],
            ["aprovado", str(v["passed"])],
        ]
        linhas += [["violação", x] for x in v["violations"]]
        if "rellich" in relatorio:
            linhas.append(["x_ε", str(relatorio["rellich"]["x_eps_approx"])])
        return _alinhar(linhas)
    if esquema == "verify/1":
        linhas = [["redução", "células", "falhas", "estado"]]
        linhas += [
            [r["reduction"], str(r["cells"]), str(r["failures"]), "ok" if r["passed"] else "FALHOU"]
            for r in relatorio["summary"]
        ]
        return _alinhar(linhas)
    if esquema == "game/1":
        linhas = [["estágio", "estado", "aou", "decisões"]]
        linhas += [
            [str(r["stage"]), str(r["state"]), str(r["aou"]), " ".join(r["decisoes"])]
            for r in relatorio["game"]["transcript"]
        ]
        return _alinhar(linhas) + f"\n\nveredito: {relatorio['verdict']} ({relatorio['reason']})"
    if esquema == "game-suite/1":
        linhas = [["oponente", "k", "veredito", "motivo"]]
        linhas += [[r["opponent"], str(r["k"]), r["verdict"], r["reason"]] for r in relatorio["results"]]
        return _alinhar(linhas)
    if esquema == "rellich/1":
        linhas = [["k", "y", "x", "erro", "ok"]]
        linhas += [[str(l["k"]), l["y"], f"{l['x']:.6f}", f"{l['erro']:.2e}", str(l["ok"])] for l in relatorio["grid"]]
        return _alinhar(linhas)
    return "\n".join(relatorio.get("files", []))


def formatar(relatorio: Dict[str, Any], formato: str) -> str:
    if formato == "table":
        return tabela(relatorio)
    return json.dumps(relatorio, indent=2, sort_keys=True, ensure_ascii=False, default=str)
