"""
Divisão robusta aproximada e escolha de pivô sobre reais refináveis.
"""
from fractions import Fraction
import logging
from typing import Sequence

from classes.intervalo import IntervalReal, abs_intervalo, contem_zero
from classes.robust_lu import EscolhaPivo

logger = logging.getLogger(__name__)


def rdiv_eps(x: IntervalReal, y: IntervalReal, n: int) -> IntervalReal:
    """
    Ponto diádico z ∈ [0, 1] com |z − min{x, y}/y| ≤ 2^-n sempre que y ≥ 2^-n.

    O denominador é limitado por baixo por 2^-(n+1), o que faz a busca
    terminar mesmo com y = 0; nesse caso z é o ponto médio do quociente
    limitado (0 para numerador exato 0).
    """
    piso = Fraction(1, 2 ** (n + 1))
    alvo = Fraction(1, 2 ** n)
    m = n + 2
    while True:
        X, Y = x.intervalo(m), y.intervalo(m)
        numerador = (min(X[0], Y[0]), min(X[1], Y[1]))
        denominador = (max(Y[0], piso), max(Y[1], piso))
        quocientes = [a / b for a in numerador for b in denominador]
        lo, hi = min(quocientes), max(quocientes)
        if hi - lo <= alvo:
            break
        m *= 2
    grade = 2 ** (n + 2)
    meio = min(max((lo + hi) / 2, Fraction(0)), Fraction(1))
    z = Fraction(round(meio * grade), grade)
    logger.debug("[LU] rdiv_eps(n=%d): precisão %d, z=%s", n, m, z)
    return IntervalReal.racional(z)


def pivot_select(entradas: Sequence[IntervalReal], m: int) -> EscolhaPivo:
    """
    Índice de maior |entrada| pelo ponto médio na precisão m; empate fica com
    o menor índice.
    """
    if not entradas:
        raise ValueError("pivot_select exige ao menos uma entrada")
    intervalos = [x.intervalo(m) for x in entradas]
    modulos = [abs_intervalo(i) for i in intervalos]
    medios = [(lo + hi) / 2 for lo, hi in modulos]
    indice = max(range(len(entradas)), key=lambda j: (medios[j], -j))
    lo, hi = intervalos[indice]
    certificado = max(Fraction(0), max(h for _, h in modulos) - modulos[indice][0])
    return EscolhaPivo(
        indice=indice,
        sinal=-1 if lo + hi < 0 else 1,
        certificado=certificado,
        atravessa_zero=contem_zero((lo, hi)),
    )
