from dataclasses import dataclass, field
from fractions import Fraction
from typing import FrozenSet, List, Optional, Tuple


@dataclass(frozen=True)
class Sequencia:
    """
    Ponto do espaço de Cantor eventualmente periódico: prefixo·ciclo^ω.

    Atributos:
        prefixo (str): Parte inicial.
        ciclo (str): Parte repetida indefinidamente (não vazia).
    """
    prefixo: str
    ciclo: str = "0"

    def __post_init__(self) -> None:
        if not self.ciclo:
            raise ValueError("ciclo vazio")
        if set(self.prefixo + self.ciclo) - {"0", "1"}:
            raise ValueError("sequência com caracteres não binários")

    def bit(self, posicao: int) -> int:
        if posicao < len(self.prefixo):
            return int(self.prefixo[posicao])
        return int(self.ciclo[(posicao - len(self.prefixo)) % len(self.ciclo)])

    def inicio(self, n: int) -> str:
        return "".join(str(self.bit(i)) for i in range(n))

    def primeiro_um(self) -> Optional[int]:
        if "1" in self.prefixo:
            return self.prefixo.index("1")
        if "1" in self.ciclo:
            return len(self.prefixo) + self.ciclo.index("1")
        return None


@dataclass(frozen=True)
class ConjuntoFinito:
    """
    Subconjunto A de {0, ..., n}.

    Atributos:
        elementos (FrozenSet[int]): Elementos de A.
        n (int): Maior elemento do espaço.
    """
    elementos: FrozenSet[int]
    n: int

    def __post_init__(self) -> None:
        if any(k < 0 or k > self.n for k in self.elementos):
            raise ValueError(f"elementos fora de {{0..{self.n}}}: {sorted(self.elementos)}")

    @property
    def excluidos(self) -> List[int]:
        return [k for k in range(self.n + 1) if k not in self.elementos]


@dataclass(frozen=True)
class ConjuntoFechado:
    """
    Instância de AoUC em [0,1]: o intervalo inteiro ou um ponto.

    Atributos:
        ponto (Optional[Fraction]): Ponto do singleton; None para [0,1].
        estagio (int): Número de slots de passagem antes do colapso.
    """
    ponto: Optional[Fraction] = None
    estagio: int = 0

    @property
    def cheio(self) -> bool:
        return self.ponto is None


@dataclass(frozen=True)
class ArvoreAou:
    """
    Árvore a.o.u.: níveis cheios até o colapso, depois um caminho único.

    Atributos:
        estagio_colapso (Optional[int]): Primeiro nível com um único nó;
            None para a árvore cheia.
        caminho (Optional[Sequencia]): Caminho infinito após o colapso.
    """
    estagio_colapso: Optional[int] = None
    caminho: Optional[Sequencia] = None

    def __post_init__(self) -> None:
        if (self.estagio_colapso is None) != (self.caminho is None):
            raise ValueError("colapso e caminho devem ser dados juntos")

    @property
    def cheia(self) -> bool:
        return self.estagio_colapso is None

    def nivel(self, n: int) -> Optional[str]:
        """None para nível cheio; senão o único nó de comprimento n."""
        if self.cheia or n < self.estagio_colapso:
            return None
        return self.caminho.inicio(n)

    def cardinalidade(self, n: int) -> int:
        return 2 ** n if self.nivel(n) is None else 1


@dataclass
class Restante:
    """
    O que sobra de [0,1] depois de remover bolas abertas: intervalos fechados.

    Atributos:
        intervalos (List[Tuple[Fraction, Fraction]]): Intervalos disjuntos, ordenados.
    """
    intervalos: List[Tuple[Fraction, Fraction]] = field(
        default_factory=lambda: [(Fraction(0), Fraction(1))]
    )

    def remover(self, centro: Fraction, raio: Fraction) -> None:
        if raio <= 0:
            return
        a, b = centro - raio, centro + raio
        novos: List[Tuple[Fraction, Fraction]] = []
        for lo, hi in self.intervalos:
            if hi <= a or lo >= b:
                novos.append((lo, hi))
                continue
            if lo <= a:
                novos.append((lo, a))
            if b <= hi:
                novos.append((b, hi))
        self.intervalos = novos

    def copia(self) -> "Restante":
        return Restante(list(self.intervalos))

    @property
    def vazio(self) -> bool:
        return not self.intervalos

    def casco(self) -> Tuple[Fraction, Fraction]:
        return self.intervalos[0][0], self.intervalos[-1][1]

    def largura(self) -> Fraction:
        lo, hi = self.casco()
        return hi - lo

    def contem(self, x: Fraction) -> bool:
        return any(lo <= x <= hi for lo, hi in self.intervalos)

    def sem_bola(self, centro: Fraction, raio: Fraction) -> "Restante":
        outro = self.copia()
        outro.remover(centro, raio)
        return outro
