from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from .intervalo import Intervalo, IntervalReal

Matriz = List[List[IntervalReal]]


def _texto(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def intervalo_json(intervalo: Intervalo) -> List[str]:
    return [_texto(intervalo[0]), _texto(intervalo[1])]


@dataclass
class RobustLU:
    """
    Decomposição P·A·Q = L·U obtida por eliminação robusta.

    Atributos:
        P (List[int]): Linha de A que ocupa cada linha de P·A·Q.
        Q (List[int]): Coluna de A que ocupa cada coluna de P·A·Q.
        L (Matriz): Triangular inferior, diagonal exatamente 1, multiplicadores diádicos exatos.
        U (Matriz): Escalonada a menos de entradas de módulo ≤ limiar_zero.
        certificado (Fraction): Cota para ‖P·A·Q − L·U‖_∞.
        precisao (int): Precisão de trabalho final (bits).
        limiar_zero (Fraction): Entradas abaixo disso contam como zeros estruturais.
        modo (str): "pq" (pivotamento completo) ou "q" (pivotamento por coluna).
        pivos (List[int]): Coluna de A escolhida em cada rodada de eliminação.
    """
    P: List[int]
    Q: List[int]
    L: Matriz
    U: Matriz
    certificado: Fraction
    precisao: int
    limiar_zero: Fraction
    modo: str = "pq"
    pivos: List[int] = field(default_factory=list)

    @property
    def linhas(self) -> int:
        return len(self.P)

    @property
    def colunas(self) -> int:
        return len(self.Q)

    def multiplicador(self, i: int, j: int) -> Fraction:
        valor = self.L[i][j].exato
        if valor is None:
            raise ValueError(f"L[{i}][{j}] não é exato")
        return valor

    def para_json(self, bits: int) -> Dict[str, Any]:
        return {
            "mode": self.modo,
            "P": list(self.P),
            "Q": list(self.Q),
            "L": [[intervalo_json(x.intervalo(bits)) for x in linha] for linha in self.L],
            "U": [[intervalo_json(x.intervalo(bits)) for x in linha] for linha in self.U],
            "residual_bound": _texto(self.certificado),
            "precision": self.precisao,
            "certification_bits": bits,
        }


@dataclass
class RellichMatrix:
    """
    B(ε) = exp(−ε^-2)·[[cos ε^-1, sin ε^-1], [−sin ε^-1, cos ε^-1]], com B(0) = 0.

    Atributos:
        eps (IntervalReal): ε ∈ [0, 1].
        B (Matriz): Entradas refináveis de B(ε).
        precisao (int): Precisão em que `valores` foi avaliado.
        valores (Optional[List[List[Intervalo]]]): B(ε) avaliada na precisão.
    """
    eps: IntervalReal
    B: Matriz
    precisao: int
    valores: Optional[List[List[Intervalo]]] = None

    def para_json(self) -> Dict[str, Any]:
        return {
            "precision": self.precisao,
            "B": [[intervalo_json(v) for v in linha] for linha in self.valores or []],
        }


@dataclass(frozen=True)
class EscolhaPivo:
    """
    Resultado da escolha de pivô.

    Atributos:
        indice (int): Posição escolhida na lista de candidatos.
        sinal (int): Sinal do ponto médio (+1 quando o ponto médio é 0).
        certificado (Fraction): Quanto o máximo verdadeiro pode exceder |pivô|.
        atravessa_zero (bool): O intervalo do pivô contém 0.
    """
    indice: int
    sinal: int
    certificado: Fraction
    atravessa_zero: bool


@dataclass
class ValidacaoLU:
    """
    Relatório de validate_lu.

    Atributos:
        aprovado (bool): Nenhuma violação encontrada.
        residuo (Fraction): Cota medida para ‖P·A·Q − L·U‖_∞.
        perfil (List[Optional[int]]): Coluna do primeiro elemento não desprezível de cada linha de U.
        violacoes (List[str]): Restrições violadas.
        blocos (List[ValidacaoLU]): Validações das decomposições induzidas nos blocos diagonais.
    """
    aprovado: bool
    residuo: Fraction
    perfil: List[Optional[int]]
    violacoes: List[str] = field(default_factory=list)
    blocos: List["ValidacaoLU"] = field(default_factory=list)

    @property
    def posto(self) -> int:
        return sum(1 for j in self.perfil if j is not None)

    def para_json(self) -> Dict[str, Any]:
        return {
            "passed": self.aprovado,
            "residual": _texto(self.residuo),
            "profile": self.perfil,
            "rank": self.posto,
            "violations": self.violacoes,
            "blocks": [b.para_json() for b in self.blocos],
        }


@dataclass
class EliminacaoExata:
    """
    Eliminação gaussiana em frações, com o mesmo desempate da versão robusta.

    Atributos:
        P (List[int]): Permutação de linhas.
        Q (List[int]): Permutação de colunas.
        L (List[List[Fraction]]): Multiplicadores exatos.
        U (List[List[Fraction]]): Forma escalonada exata.
        perfil (List[Optional[int]]): Coluna do pivô de cada linha de U.
    """
    P: List[int]
    Q: List[int]
    L: List[List[Fraction]]
    U: List[List[Fraction]]
    perfil: List[Optional[int]]

    @property
    def posto(self) -> int:
        return sum(1 for j in self.perfil if j is not None)

    @property
    def menor_pivo(self) -> Optional[Fraction]:
        pivos = [abs(self.U[i][j]) for i, j in enumerate(self.perfil) if j is not None]
        return min(pivos, default=None)
