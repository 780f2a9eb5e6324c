import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from typing import Any, Dict, List, Sequence

from classes.jogo import GameState


def plotar_grade_rellich(linhas: Sequence[Dict[str, Any]], caminho: str) -> None:
    """
    x_ε recuperado contra y para cada k da grade de Rellich, com o erro
    |x_ε − y| em escala logarítmica.

    :param linhas: Saída de grade_rellich.
    :param caminho: Arquivo PNG de destino.
    """
    ks = sorted({linha["k"] for linha in linhas})
    fig, (eixo_x, eixo_erro) = plt.subplots(2, 1, figsize=(8, 8))

    for k in ks:
        pontos = [l for l in linhas if l["k"] == k]
        ys = np.array([float(l["y"]) for l in pontos])
        xs = np.array([float(l["x"]) for l in pontos])
        erros = np.array([max(float(l["erro"]), 1e-300) for l in pontos])
        eixo_x.plot(ys, xs, marker="o", linestyle="", label=f"k={k}")
        eixo_erro.semilogy(ys, erros, marker=".", linestyle="-", label=f"k={k}")

    eixo_x.plot([0, 1], [0, 1], color="gray", linewidth=0.8)
    eixo_x.set_xlabel("y")
    eixo_x.set_ylabel("x recuperado")
    eixo_x.set_title("Recuperação de y a partir de L em B(1/(2kπ + y))")
    eixo_x.grid(True)

    eixo_erro.axhline(2.0 ** -10, color="red", linewidth=0.8, label="2^-10")
    eixo_erro.set_xlabel("y")
    eixo_erro.set_ylabel("|x − y|")
    eixo_erro.grid(True)
    if len(ks) <= 10:
        eixo_x.legend(fontsize="small")
        eixo_erro.legend(fontsize="small")

    fig.tight_layout()
    fig.savefig(caminho)
    plt.close(fig)


def plotar_arvore_jogo(estado: GameState, profundidade: int, caminho: str) -> None:
    """
    Desenha T_e até `profundidade`: níveis cheios com todos os 2^n nós,
    níveis após o colapso com o único nó τ0^∞.

    :param estado: Estado final do jogo.
    :param profundidade: Último nível desenhado (limitado a 8).
    :param caminho: Arquivo PNG de destino.
    """
    profundidade = min(profundidade, 8)
    fig, eixo = plt.subplots(figsize=(10, 6))
    posicoes: Dict[str, Any] = {"": (0.5, 0)}
    for n in range(1, profundidade + 1):
        unico = estado.nivel(n)
        nos: List[str] = [unico] if unico is not None else [format(j, f"0{n}b") for j in range(2 ** n)]
        for no in nos:
            x = (int(no, 2) + 0.5) / 2 ** n
            posicoes[no] = (x, -n)
            pai = posicoes.get(no[:-1])
            if pai is not None:
                eixo.plot([pai[0], x], [pai[1], -n], color="black", linewidth=0.6)
        cor = "tab:red" if unico is not None else "tab:blue"
        eixo.scatter([posicoes[no][0] for no in nos], [-n] * len(nos), s=12, color=cor)

    restricoes = ", ".join(f"S({p})={sorted(v)}" for p, v in sorted(estado.excecoes.items()))
    eixo.set_title(f"T_e: estado {estado.estado}, τ={estado.tau}; {restricoes or 'sem restrições'}")
    eixo.set_ylabel("nível")
    eixo.set_xticks([])
    fig.tight_layout()
    fig.savefig(caminho)
    plt.close(fig)
