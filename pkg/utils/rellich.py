"""
Família de Rellich B(ε) e recuperação de x a partir de uma decomposição LU.

Para ε = 1/(2kπ + y) o canto inferior esquerdo de L é ±tan y ou ±cot y,
conforme as permutações escolhidas; a inversa total correspondente devolve y.
"""
from fractions import Fraction
import logging
from typing import Dict, List, Sequence

from mpmath.libmp.libmpi import mpi_cos_sin, mpi_exp, mpi_mul, mpi_neg, mpi_square

from classes.erros import ShapeError
from classes.intervalo import (
    ZERO,
    Intervalo,
    IntervalReal,
    arredondar_fora,
    de_mpi,
    para_mpi,
)
from classes.robust_lu import Matriz, RellichMatrix, RobustLU
from utils.decomposicao import lu_decomp_pq

logger = logging.getLogger(__name__)

GUARDA = 4


def _desprezivel(hi: Fraction, m: int) -> bool:
    """exp(−1/hi²) ≤ 2^-(m+1), usando 0,7 > ln 2."""
    return hi <= 0 or hi * hi * 7 * (m + 1) <= 10


def _avaliar(eps: Intervalo, componente: int, prec: int) -> Intervalo:
    lo, hi = eps
    u = para_mpi((1 / hi, 1 / lo), prec)
    fator = mpi_exp(mpi_neg(mpi_square(u, prec)), prec)
    trig = mpi_cos_sin(u, prec)[componente]
    return de_mpi(mpi_mul(fator, trig, prec))


def _entrada(eps: IntervalReal, componente: int, sinal: int) -> IntervalReal:
    """sinal·exp(−ε^-2)·(cos ε^-1 se componente = 0, senão sin ε^-1)."""

    def refinar(m: int) -> Intervalo:
        guarda = GUARDA
        while True:
            lo, hi = eps.intervalo(m + guarda)
            if _desprezivel(hi, m):
                b = Fraction(1, 2 ** (m + 1))
                return -b, b
            if lo > 0:
                a, b = _avaliar((lo, hi), componente, m + guarda + 16)
                if b - a <= Fraction(1, 2 ** (m + 1)):
                    if sinal < 0:
                        a, b = -b, -a
                    return arredondar_fora(a, b, m + 2)
            guarda *= 2

    nome = ("cos", "sin")[componente]
    return IntervalReal(refinar, rotulo=f"{'-' if sinal < 0 else ''}B[{nome}]({eps.rotulo})")


def matriz_rellich(eps: IntervalReal) -> Matriz:
    if eps.eh_zero:
        return [[ZERO, ZERO], [ZERO, ZERO]]
    return [
        [_entrada(eps, 0, 1), _entrada(eps, 1, 1)],
        [_entrada(eps, 1, -1), _entrada(eps, 0, 1)],
    ]


def rellich(eps: IntervalReal, m: int = 53) -> RellichMatrix:
    """B(ε) com as entradas avaliadas na precisão m."""
    B = matriz_rellich(eps)
    valores = [[x.intervalo(m) for x in linha] for linha in B]
    logger.debug("[RELLICH] B(%s) avaliada em %d bits", eps.rotulo, m)
    return RellichMatrix(eps=eps, B=B, precisao=m, valores=valores)


def eps_rellich(k: int, y: Fraction) -> IntervalReal:
    """ε = 1/(2kπ + y)."""
    return (IntervalReal.pi().escalar(2 * k) + IntervalReal.racional(y)).inverso()


def recover_x(lu: RobustLU) -> IntervalReal:
    """
    x_ε = max{0, min{1, x'}}, com x' = atan ou arccot do canto inferior
    esquerdo de L conforme as trocas em P e Q.
    """
    if lu.linhas != 2 or lu.colunas != 2:
        raise ShapeError(f"recover_x espera decomposição 2x2, não {lu.linhas}x{lu.colunas}")
    l = lu.L[1][0]
    troca_linhas, troca_colunas = lu.P[0] == 1, lu.Q[0] == 1
    if not troca_linhas and not troca_colunas:
        bruto = (-l).atan()
    elif not troca_linhas:
        bruto = l.arccot()
    elif not troca_colunas:
        bruto = (-l).arccot()
    else:
        bruto = l.atan()
    logger.debug("[RELLICH] P=%s Q=%s L10=%s", lu.P, lu.Q, l.rotulo)
    return bruto.limitar(0, 1)


def grade_rellich(
    ks: Sequence[int],
    ys: Sequence[Fraction],
    tol_bits: int = 20,
    bits: int = 10,
) -> List[Dict[str, object]]:
    """Roda lu_decomp_pq em B(1/(2kπ + y)) para cada (k, y) e mede |x_ε − y|."""
    linhas = []
    for k in ks:
        for y in ys:
            lu = lu_decomp_pq(matriz_rellich(eps_rellich(k, y)), tol_bits)
            x = recover_x(lu).ponto_medio(bits + 2)
            erro = abs(x - y)
            linhas.append({"k": k, "y": y, "x": x, "erro": erro, "ok": erro <= Fraction(1, 2 ** bits)})
            logger.debug("[RELLICH] k=%d y=%s: x=%.6f", k, y, float(x))
    return linhas
