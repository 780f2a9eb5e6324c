"""
Eliminação gaussiana robusta sobre reais refináveis.

Os multiplicadores são pontos diádicos exatos devolvidos por rdiv_eps, com
sinal corrigido; U fica como expressões preguiçosas sobre as entradas de A.
Cada entrada zerada abaixo de um pivô deixa um resíduo r, e
P·A·Q − L·U é exatamente a matriz desses resíduos, de modo que a soma de
|r| por linha certifica o resíduo. Se o certificado passar de 2^-tol_bits,
a eliminação é refeita com mais precisão.
"""
from fractions import Fraction
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from classes.erros import ShapeError
from classes.intervalo import UM, ZERO, IntervalReal, abs_intervalo
from classes.robust_lu import EliminacaoExata, Matriz, RobustLU, ValidacaoLU
from utils.divisao import pivot_select, rdiv_eps

logger = logging.getLogger(__name__)

PRECISAO_MAXIMA = 1 << 15
PASSO_PRECISAO = 8


def _log2_teto(n: int) -> int:
    return max(0, n - 1).bit_length()


def precisao_trabalho(linhas: int, colunas: int, tol_bits: int) -> int:
    """tol_bits + ⌈log₂ max(linhas, colunas)⌉ + 8 bits de guarda."""
    return tol_bits + _log2_teto(max(linhas, colunas)) + 8


def matriz_racional(valores: Sequence[Sequence[object]]) -> Matriz:
    return [[IntervalReal.racional(Fraction(v)) for v in linha] for linha in valores]


def _dimensoes(A: Sequence[Sequence[object]]) -> Tuple[int, int]:
    if not A or not A[0]:
        raise ShapeError("matriz vazia")
    colunas = len(A[0])
    for i, linha in enumerate(A):
        if len(linha) != colunas:
            raise ShapeError(f"linha {i} tem {len(linha)} entradas; esperado {colunas}")
    return len(A), colunas


def _bits_inverso(v: Fraction) -> int:
    """Menor e ≥ 0 com v ≥ 2^-e (v > 0)."""
    if v >= 1:
        return 0
    q = 1 / v
    return (-(-q.numerator // q.denominator) - 1).bit_length()


def _escala(entradas: Sequence[IntervalReal], m0: int, teto: int) -> Optional[int]:
    """
    Bits e com max |x| ≥ 2^-e, refinando em m0, 2·m0, … até `teto`; None se
    todas as entradas continuam compatíveis com 0.
    """
    m = m0
    while True:
        maior = max(abs_intervalo(x.intervalo(m))[0] for x in entradas)
        if maior > 0:
            return _bits_inverso(maior)
        if all(x.eh_zero for x in entradas) or m >= teto:
            return None
        m = min(2 * m, teto)


def _sinal(x: IntervalReal, m: int) -> int:
    lo, hi = x.intervalo(m)
    return -1 if lo + hi < 0 else 1


class _Eliminacao:
    """Estado de uma rodada de eliminação numa precisão de trabalho fixa."""

    def __init__(self, A: Matriz, wp: int, teto: int) -> None:
        self.r, self.c = len(A), len(A[0])
        self.wp = wp
        self.teto = teto
        self.M: Matriz = [list(linha) for linha in A]
        self.L = [[Fraction(int(i == j)) for j in range(self.r)] for i in range(self.r)]
        self.linhas = list(range(self.r))
        self.residuos = [Fraction(0)] * self.r
        self.pivos: List[int] = []

    def precisao_para(self, entradas: Sequence[IntervalReal]) -> int:
        extra = _escala(entradas, self.wp, self.teto)
        return self.wp + (extra or 0)

    def trocar(self, t: int, i0: int) -> None:
        if i0 == t:
            return
        self.M[t], self.M[i0] = self.M[i0], self.M[t]
        self.linhas[t], self.linhas[i0] = self.linhas[i0], self.linhas[t]
        self.residuos[t], self.residuos[i0] = self.residuos[i0], self.residuos[t]
        for j in range(t):
            self.L[t][j], self.L[i0][j] = self.L[i0][j], self.L[t][j]

    def zerar_abaixo(self, t: int, j0: int, sinal_pivo: int, m: int) -> None:
        p = self.M[t][j0]
        modulo_p = abs(p)
        for i in range(t + 1, self.r):
            a = self.M[i][j0]
            if a.eh_zero:
                continue
            z = rdiv_eps(abs(a), modulo_p, m).exato
            l = _sinal(a, m) * sinal_pivo * z
            self.L[i][t] = l
            if l != 0:
                for j in range(self.c):
                    if j != j0 and not self.M[t][j].eh_zero:
                        self.M[i][j] = self.M[i][j] - self.M[t][j].escalar(l)
            self.residuos[i] += (a - p.escalar(l)).cota(m)
            self.M[i][j0] = ZERO
        self.pivos.append(j0)

    def resultado(self, modo: str, limiar: Fraction) -> RobustLU:
        Q = self.pivos + [j for j in range(self.c) if j not in self.pivos]
        return RobustLU(
            P=list(self.linhas),
            Q=Q,
            L=[[UM if v == 1 else IntervalReal.racional(v) for v in linha] for linha in self.L],
            U=[[self.M[i][j] for j in Q] for i in range(self.r)],
            certificado=max(self.residuos),
            precisao=self.wp,
            limiar_zero=limiar,
            modo=modo,
            pivos=list(self.pivos),
        )


def _eliminar_pq(A: Matriz, wp: int, limiar: Fraction, teto: int) -> RobustLU:
    e = _Eliminacao(A, wp, teto)
    for t in range(min(e.r, e.c)):
        livres = [j for j in range(e.c) if j not in e.pivos]
        candidatos = [(i, j) for i in range(t, e.r) for j in livres]
        entradas = [e.M[i][j] for i, j in candidatos]
        m = e.precisao_para(entradas)
        escolha = pivot_select(entradas, m)
        i0, j0 = candidatos[escolha.indice]
        e.trocar(t, i0)
        e.zerar_abaixo(t, j0, escolha.sinal, m)
    return e.resultado("pq", limiar)


def _eliminar_q(A: Matriz, wp: int, limiar: Fraction, teto: int) -> RobustLU:
    e = _Eliminacao(A, wp, teto)
    t = 0
    for j0 in range(e.c):
        if t == e.r:
            break
        entradas = [e.M[i][j0] for i in range(t, e.r)]
        escolha = pivot_select(entradas, wp)
        if entradas[escolha.indice].cota(wp) <= limiar:
            logger.debug("[LU] coluna %d desprezível a partir da linha %d; pulando", j0, t)
            continue
        m = e.precisao_para(entradas)
        if m != wp:
            escolha = pivot_select(entradas, m)
        e.trocar(t, t + escolha.indice)
        e.zerar_abaixo(t, j0, escolha.sinal, m)
        t += 1
    return e.resultado("q", limiar)


def _decompor(A: Matriz, tol_bits: int, modo: str, teto: int) -> RobustLU:
    linhas, colunas = _dimensoes(A)
    alvo = Fraction(1, 2 ** tol_bits)
    wp = precisao_trabalho(linhas, colunas, tol_bits)
    eliminar = _eliminar_pq if modo == "pq" else _eliminar_q
    while True:
        lu = eliminar(A, wp, alvo, teto)
        if lu.certificado <= alvo:
            logger.debug("[LU] %s %dx%d: precisão %d, resíduo ≤ %s", modo, linhas, colunas, wp, lu.certificado)
            return lu
        logger.info(
            "[LU] resíduo certificado %.3g acima de 2^-%d; precisão %d → %d",
            float(lu.certificado),
            tol_bits,
            wp,
            wp + PASSO_PRECISAO,
        )
        wp += PASSO_PRECISAO


def lu_decomp_pq(A: Matriz, tol_bits: int = 20, precisao_maxima: int = PRECISAO_MAXIMA) -> RobustLU:
    """
    Eliminação com pivotamento completo: em cada rodada o pivô é a entrada de
    maior módulo da submatriz restante (menor índice, em ordem de linhas, no
    empate). Nunca falha; |L_ij| ≤ 1.
    """
    return _decompor(A, tol_bits, "pq", precisao_maxima)


def lu_decomp_q(A: Matriz, tol_bits: int = 20, precisao_maxima: int = PRECISAO_MAXIMA) -> RobustLU:
    """
    Eliminação coluna a coluna: o pivô é a linha restante de maior módulo na
    coluna; colunas desprezíveis são puladas e vão para o fim de Q. P
    registra as trocas de linha induzidas.
    """
    return _decompor(A, tol_bits, "q", precisao_maxima)


# --------------------------------------------------------------- validação
def _perfil(U: Matriz, m: int, limiar: Fraction) -> List[Optional[int]]:
    perfil = []
    for linha in U:
        perfil.append(next((j for j, x in enumerate(linha) if x.cota(m) > limiar), None))
    return perfil


def _eh_permutacao(p: Sequence[int], n: int) -> bool:
    return sorted(p) == list(range(n))


def validate_lu(
    A: Matriz,
    lu: RobustLU,
    tol_bits: int = 20,
    blocos: Optional[Tuple[int, int]] = None,
) -> ValidacaoLU:
    """
    Confere P·A·Q = L·U até 2^-tol_bits, diagonal unitária de L, forma
    escalonada de U e as permutações. Com `blocos=(r1, c1)` e A bloco-diagonal,
    valida também as decomposições induzidas em cada bloco.
    """
    r, c = _dimensoes(A)
    if len(lu.P) != r or len(lu.Q) != c:
        raise ShapeError(f"permutações de tamanhos {len(lu.P)}, {len(lu.Q)} para A {r}x{c}")
    if len(lu.L) != r or any(len(linha) != r for linha in lu.L):
        raise ShapeError(f"L deve ser {r}x{r}")
    if len(lu.U) != r or any(len(linha) != c for linha in lu.U):
        raise ShapeError(f"U deve ser {r}x{c}")

    violacoes: List[str] = []
    if not _eh_permutacao(lu.P, r):
        violacoes.append(f"P não é permutação: {lu.P}")
    if not _eh_permutacao(lu.Q, c):
        violacoes.append(f"Q não é permutação: {lu.Q}")

    for i in range(r):
        if lu.L[i][i].exato != 1:
            violacoes.append(f"diagonal unitária: L[{i}][{i}] ≠ 1")
        for j in range(i + 1, r):
            if not lu.L[i][j].eh_zero:
                violacoes.append(f"L[{i}][{j}] acima da diagonal não é 0")
        if lu.modo == "pq":
            for j in range(i):
                if lu.L[i][j].cota() > 1:
                    violacoes.append(f"|L[{i}][{j}]| > 1")

    m = tol_bits + _log2_teto(r * c) + 4
    alvo = Fraction(1, 2 ** tol_bits)
    residuo = Fraction(0)
    if not violacoes:
        for i in range(r):
            soma = Fraction(0)
            for j in range(c):
                diferenca = A[lu.P[i]][lu.Q[j]]
                for t in range(r):
                    if not lu.L[i][t].eh_zero and not lu.U[t][j].eh_zero:
                        diferenca = diferenca - lu.U[t][j].escalar(lu.L[i][t].exato)
                soma += diferenca.cota(m)
            residuo = max(residuo, soma)
        if residuo > alvo:
            violacoes.append(f"resíduo {float(residuo):.3g} > 2^-{tol_bits}")

    perfil = _perfil(lu.U, m, lu.limiar_zero)
    vistos = [j for j in perfil if j is not None]
    if any(b <= a for a, b in zip(vistos, vistos[1:])):
        violacoes.append(f"U fora da forma escalonada: perfil {perfil}")
    ultimo_pivo = max((i for i, j in enumerate(perfil) if j is not None), default=-1)
    if any(perfil[i] is None for i in range(ultimo_pivo)):
        violacoes.append(f"linha nula acima de linha com pivô: perfil {perfil}")

    sub: List[ValidacaoLU] = []
    if blocos is not None and not violacoes:
        r1, c1 = blocos
        fora = [
            (i, j)
            for i in range(r)
            for j in range(c)
            if (i < r1) != (j < c1) and not A[i][j].eh_zero
        ]
        if fora:
            violacoes.append(f"A não é bloco-diagonal com blocos ({r1}, {c1}): entrada {fora[0]}")
        else:
            (lu_a, A1), (lu_b, A2) = dividir_blocos(A, lu, r1, c1)
            sub = [validate_lu(A1, lu_a, tol_bits), validate_lu(A2, lu_b, tol_bits)]
            violacoes.extend(f"bloco {k}: {v}" for k, b in enumerate(sub) for v in b.violacoes)

    if violacoes:
        logger.warning("[LU] validação reprovada: %s", "; ".join(violacoes))
    return ValidacaoLU(not violacoes, residuo, perfil, violacoes, sub)


def _induzida(A: Matriz, lu: RobustLU, linhas_a: range, colunas_a: range) -> Tuple[RobustLU, Matriz]:
    linhas = [k for k, p in enumerate(lu.P) if p in linhas_a]
    colunas = [k for k, q in enumerate(lu.Q) if q in colunas_a]
    bloco = RobustLU(
        P=[lu.P[k] - linhas_a.start for k in linhas],
        Q=[lu.Q[k] - colunas_a.start for k in colunas],
        L=[[lu.L[i][k] for k in linhas] for i in linhas],
        U=[[lu.U[i][j] for j in colunas] for i in linhas],
        certificado=lu.certificado,
        precisao=lu.precisao,
        limiar_zero=lu.limiar_zero,
        modo=lu.modo,
    )
    return bloco, [[A[i][j] for j in colunas_a] for i in linhas_a]


def dividir_blocos(
    A: Matriz, lu: RobustLU, r1: int, c1: int
) -> Tuple[Tuple[RobustLU, Matriz], Tuple[RobustLU, Matriz]]:
    """Decomposições de A1 e A2 induzidas por uma decomposição de diag(A1, A2)."""
    r, c = len(A), len(A[0])
    if not (0 < r1 < r and 0 < c1 < c):
        raise ShapeError(f"blocos ({r1}, {c1}) inválidos para A {r}x{c}")
    return (
        _induzida(A, lu, range(0, r1), range(0, c1)),
        _induzida(A, lu, range(r1, r), range(c1, c)),
    )


# ------------------------------------------------------------ oráculo exato
def eliminacao_exata(A: Sequence[Sequence[object]], modo: str = "pq") -> EliminacaoExata:
    """Eliminação em frações com o desempate de lu_decomp_pq / lu_decomp_q."""
    if modo not in ("pq", "q"):
        raise ValueError(f"modo desconhecido {modo!r}")
    r, c = _dimensoes(A)
    M = [[Fraction(v) for v in linha] for linha in A]
    L = [[Fraction(int(i == j)) for j in range(r)] for i in range(r)]
    linhas = list(range(r))
    pivos: List[int] = []

    def trocar(t: int, i0: int) -> None:
        M[t], M[i0] = M[i0], M[t]
        linhas[t], linhas[i0] = linhas[i0], linhas[t]
        for j in range(t):
            L[t][j], L[i0][j] = L[i0][j], L[t][j]

    def eliminar(t: int, j0: int) -> None:
        for i in range(t + 1, r):
            l = M[i][j0] / M[t][j0]
            L[i][t] = l
            M[i] = [a - l * b for a, b in zip(M[i], M[t])]
        pivos.append(j0)

    t = 0
    if modo == "pq":
        while t < min(r, c):
            candidatos = [(i, j) for i in range(t, r) for j in range(c) if j not in pivos]
            i0, j0 = max(candidatos, key=lambda ij: abs(M[ij[0]][ij[1]]))
            if M[i0][j0] == 0:
                break
            trocar(t, i0)
            eliminar(t, j0)
            t += 1
    else:
        for j0 in range(c):
            if t == r:
                break
            i0 = max(range(t, r), key=lambda i: abs(M[i][j0]))
            if M[i0][j0] == 0:
                continue
            trocar(t, i0)
            eliminar(t, j0)
            t += 1

    Q = pivos + [j for j in range(c) if j not in pivos]
    U = [[M[i][j] for j in Q] for i in range(r)]
    perfil = [next((j for j, x in enumerate(linha) if x != 0), None) for linha in U]
    return EliminacaoExata(linhas, Q, L, U, perfil)


# ------------------------------------------------------------ corpus semeado
def matrizes_semeadas(quantidade: int, n: int, semente: int = 0) -> List[List[List[Fraction]]]:
    """
    Matrizes racionais n×n determinísticas em (quantidade, n, semente). A
    primeira é nula e a cada sete uma tem posto deficiente (linha repetida
    a menos de escala).
    """
    rng = np.random.default_rng(semente)
    matrizes: List[List[List[Fraction]]] = []
    for indice in range(quantidade):
        if indice == 0:
            matrizes.append([[Fraction(0)] * n for _ in range(n)])
            continue
        numeradores = rng.integers(-9, 10, size=(n, n))
        denominadores = rng.integers(1, 5, size=(n, n))
        M = [[Fraction(int(a), int(b)) for a, b in zip(la, lb)] for la, lb in zip(numeradores, denominadores)]
        if indice % 7 == 0 and n > 1:
            fator = Fraction(int(rng.integers(1, 4)), int(rng.integers(1, 4)))
            M[n - 1] = [fator * v for v in M[0]]
        matrizes.append(M)
    return matrizes
