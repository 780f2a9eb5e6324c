"""
Reais refináveis: cada valor é uma função m ↦ intervalo diádico de largura
≤ 2^-m que o contém.

As operações são preguiçosas; o resultado pede os operandos com bits de
guarda crescentes até atingir a largura pedida e arredonda para fora na
grade 2^-(m+2). Funções transcendentes usam a aritmética intervalar de
mpmath, com arredondamento dirigido.
"""
from fractions import Fraction
import logging
import math
from typing import Callable, Dict, Optional, Tuple, Union

from mpmath.libmp import from_rational, round_ceiling, round_floor, to_rational
from mpmath.libmp.libmpi import mpi_atan, mpi_cos_sin, mpi_exp, mpi_pi

logger = logging.getLogger(__name__)

Intervalo = Tuple[Fraction, Fraction]
Numero = Union[int, Fraction]

GUARDA_INICIAL = 4
GUARDA_MAXIMA = 1 << 16


def arredondar_fora(lo: Fraction, hi: Fraction, bits: int) -> Intervalo:
    """Arredonda para fora na grade 2^-bits."""
    escala = 1 << bits if bits >= 0 else Fraction(1, 1 << -bits)
    return (
        Fraction(math.floor(lo * escala)) / escala,
        Fraction(math.ceil(hi * escala)) / escala,
    )


def para_mpi(intervalo: Intervalo, prec: int):
    lo, hi = intervalo
    return (
        from_rational(lo.numerator, lo.denominator, prec, round_floor),
        from_rational(hi.numerator, hi.denominator, prec, round_ceiling),
    )


def de_mpi(valor) -> Intervalo:
    a, b = valor
    return Fraction(*to_rational(a)), Fraction(*to_rational(b))


def abs_intervalo(intervalo: Intervalo) -> Intervalo:
    lo, hi = intervalo
    if lo >= 0:
        return lo, hi
    if hi <= 0:
        return -hi, -lo
    return Fraction(0), max(-lo, hi)


def contem_zero(intervalo: Intervalo) -> bool:
    return intervalo[0] <= 0 <= intervalo[1]


class IntervalReal:
    """
    Real dado por refinamento.

    Atributos:
        exato (Optional[Fraction]): Valor racional, quando conhecido.
        rotulo (str): Descrição usada em relatórios e logs.
    """

    def __init__(
        self,
        refinar: Callable[[int], Intervalo],
        exato: Optional[Fraction] = None,
        rotulo: str = "",
    ) -> None:
        self._refinar = refinar
        self.exato = exato
        self.rotulo = rotulo if len(rotulo) <= 80 else rotulo[:77] + "..."
        self._cache: Dict[int, Intervalo] = {}

    # ---------------------------------------------------------- construtores
    @classmethod
    def racional(cls, q: Numero) -> "IntervalReal":
        q = Fraction(q)
        return cls(lambda m: (q, q), exato=q, rotulo=str(q))

    @classmethod
    def diadico(cls, mantissa: int, expoente: int) -> "IntervalReal":
        return cls.racional(Fraction(mantissa) * Fraction(2) ** expoente)

    @classmethod
    def pi(cls) -> "IntervalReal":
        return cls(lambda m: de_mpi(mpi_pi(m + 8)), rotulo="π")

    # ------------------------------------------------------------ refinamento
    def intervalo(self, m: int) -> Intervalo:
        """
        Intervalo de largura ≤ 2^-m. Consultas em ordem crescente de m
        devolvem intervalos encaixados.
        """
        if m in self._cache:
            return self._cache[m]
        if self.exato is not None:
            resultado = (self.exato, self.exato)
        else:
            lo, hi = self._refinar(m)
            for anterior in sorted(k for k in self._cache if k < m):
                alo, ahi = self._cache[anterior]
                lo, hi = max(lo, alo), min(hi, ahi)
            resultado = (lo, hi)
        self._cache[m] = resultado
        return resultado

    def ponto_medio(self, m: int) -> Fraction:
        lo, hi = self.intervalo(m)
        return (lo + hi) / 2

    def cota(self, m: int = 0) -> Fraction:
        """Cota superior de |x| lida na precisão m."""
        return abs_intervalo(self.intervalo(m))[1]

    @property
    def eh_zero(self) -> bool:
        return self.exato == 0

    def __repr__(self) -> str:
        return f"IntervalReal({self.rotulo or '?'})"

    # ------------------------------------------------------------- operações
    @staticmethod
    def _refinado(avaliar: Callable[[int, int], Intervalo]) -> Callable[[int], Intervalo]:
        """Sobe a guarda até a largura ≤ 2^-(m+1), depois arredonda na grade 2^-(m+2)."""

        def refinar(m: int) -> Intervalo:
            guarda = GUARDA_INICIAL
            while True:
                lo, hi = avaliar(m, guarda)
                if hi - lo <= Fraction(1, 2 ** (m + 1)) or guarda > GUARDA_MAXIMA:
                    if guarda > GUARDA_MAXIMA:
                        logger.warning("[INTERVALO] guarda máxima atingida na precisão %d", m)
                    return arredondar_fora(lo, hi, m + 2)
                guarda *= 2

        return refinar

    def _binaria(self, outro: "IntervalReal", combinar, exato, simbolo: str) -> "IntervalReal":
        if self.exato is not None and outro.exato is not None:
            return IntervalReal.racional(exato(self.exato, outro.exato))

        def avaliar(m, guarda):
            return combinar(self.intervalo(m + guarda), outro.intervalo(m + guarda))

        return IntervalReal(self._refinado(avaliar), rotulo=f"({self.rotulo}{simbolo}{outro.rotulo})")

    def __add__(self, outro: "IntervalReal") -> "IntervalReal":
        outro = _real(outro)
        if outro.eh_zero:
            return self
        if self.eh_zero:
            return outro
        return self._binaria(outro, lambda a, b: (a[0] + b[0], a[1] + b[1]), lambda x, y: x + y, "+")

    def __sub__(self, outro: "IntervalReal") -> "IntervalReal":
        outro = _real(outro)
        if outro.eh_zero:
            return self
        return self._binaria(outro, lambda a, b: (a[0] - b[1], a[1] - b[0]), lambda x, y: x - y, "-")

    def __neg__(self) -> "IntervalReal":
        if self.exato is not None:
            return IntervalReal.racional(-self.exato)

        def refinar(m: int) -> Intervalo:
            lo, hi = self.intervalo(m)
            return -hi, -lo

        return IntervalReal(refinar, rotulo=f"-{self.rotulo}")

    def __mul__(self, outro: "IntervalReal") -> "IntervalReal":
        outro = _real(outro)
        if outro.exato is not None:
            return self.escalar(outro.exato)
        if self.exato is not None:
            return outro.escalar(self.exato)

        def combinar(a: Intervalo, b: Intervalo) -> Intervalo:
            produtos = [x * y for x in a for y in b]
            return min(produtos), max(produtos)

        return self._binaria(outro, combinar, lambda x, y: x * y, "·")

    def escalar(self, c: Numero) -> "IntervalReal":
        """c·x para c racional exato."""
        c = Fraction(c)
        if c == 0 or self.eh_zero:
            return ZERO
        if self.exato is not None:
            return IntervalReal.racional(c * self.exato)
        if c == 1:
            return self
        bits = max(0, abs(c).numerator.bit_length() - abs(c).denominator.bit_length() + 1)

        def refinar(m: int) -> Intervalo:
            lo, hi = self.intervalo(m + bits + 2)
            lo, hi = sorted((c * lo, c * hi))
            return arredondar_fora(lo, hi, m + 2)

        return IntervalReal(refinar, rotulo=f"{c}·{self.rotulo}")

    def __abs__(self) -> "IntervalReal":
        if self.exato is not None:
            return IntervalReal.racional(abs(self.exato))
        return IntervalReal(lambda m: abs_intervalo(self.intervalo(m)), rotulo=f"|{self.rotulo}|")

    def minimo(self, outro: "IntervalReal") -> "IntervalReal":
        outro = _real(outro)
        return self._binaria(outro, lambda a, b: (min(a[0], b[0]), min(a[1], b[1])), min, " min ")

    def maximo(self, outro: "IntervalReal") -> "IntervalReal":
        outro = _real(outro)
        return self._binaria(outro, lambda a, b: (max(a[0], b[0]), max(a[1], b[1])), max, " max ")

    def inverso(self) -> "IntervalReal":
        """1/x; só termina se x ≠ 0."""
        if self.exato is not None:
            return IntervalReal.racional(1 / self.exato)

        def avaliar(m, guarda):
            lo, hi = self.intervalo(m + guarda)
            while contem_zero((lo, hi)):
                guarda *= 2
                lo, hi = self.intervalo(m + guarda)
            return min(1 / lo, 1 / hi), max(1 / lo, 1 / hi)

        return IntervalReal(self._refinado(avaliar), rotulo=f"1/{self.rotulo}")

    def _mpmath(self, funcao, nome: str) -> "IntervalReal":
        def avaliar(m, guarda):
            prec = m + guarda + 16
            return de_mpi(funcao(para_mpi(self.intervalo(m + guarda), prec), prec))

        return IntervalReal(self._refinado(avaliar), rotulo=f"{nome}({self.rotulo})")

    def exp(self) -> "IntervalReal":
        return self._mpmath(mpi_exp, "exp")

    def cos(self) -> "IntervalReal":
        return self._mpmath(lambda s, prec: mpi_cos_sin(s, prec)[0], "cos")

    def sin(self) -> "IntervalReal":
        return self._mpmath(lambda s, prec: mpi_cos_sin(s, prec)[1], "sin")

    def atan(self) -> "IntervalReal":
        if self.eh_zero:
            return ZERO
        return self._mpmath(mpi_atan, "atan")

    def arccot(self) -> "IntervalReal":
        """π/2 − atan(x), total em ℝ e com valores em (0, π)."""
        return IntervalReal.pi().escalar(Fraction(1, 2)) - self.atan()

    def limitar(self, a: Numero = 0, b: Numero = 1) -> "IntervalReal":
        """max{a, min{b, x}}."""
        return self.minimo(IntervalReal.racional(b)).maximo(IntervalReal.racional(a))


def _real(valor: Union[IntervalReal, Numero]) -> IntervalReal:
    return valor if isinstance(valor, IntervalReal) else IntervalReal.racional(valor)


ZERO = IntervalReal.racional(0)
UM = IntervalReal.racional(1)
