from bisect import bisect_right
from dataclasses import dataclass
import math
from typing import Any, Callable, List, Optional, Sequence, Tuple, Union

# Uma corrida é (bit, comprimento); comprimento None significa corrida infinita.
Corrida = Tuple[int, Optional[int]]


@dataclass(frozen=True)
class Continuacao:
    """
    Código anexado a um nome: programa mais os nomes ligados a ele.

    É a forma concreta da segunda componente de uma instância de f ⋆ g:
    o programa recebe a resposta de g na fita 0 e os nomes ligados nas
    fitas 1, 2, ...

    Atributos:
        programa (Any): Programa (ver `classes.transformador.Programa`).
        ligadas (Tuple[Name, ...]): Nomes ligados ao código.
    """
    programa: Any
    ligadas: Tuple["Name", ...] = ()

    def sem_verdade(self) -> "Continuacao":
        return Continuacao(self.programa, tuple(n.stripped() for n in self.ligadas))


class Name:
    """
    Sequência binária infinita gerada sob demanda, armazenada por corridas.

    O gerador `segmento(j)` devolve a j-ésima corrida `(bit, comprimento)`;
    corridas vazias são ignoradas e corridas adjacentes com o mesmo bit são
    fundidas, de modo que blocos exponencialmente longos (por exemplo
    0^(2^80)) custam O(1). Nomes de tuplas guardam as componentes e expõem
    a visão intercalada bit a bit.

    Atributos:
        kind (str): Descritor do espaço representado.
        ground_truth (Any): Ponto codificado, quando conhecido.
        components (Optional[Tuple[Name, ...]]): Componentes de uma tupla.
        read_horizon (int): Maior posição já materializada por leitura.
    """

    def __init__(
        self,
        segmento: Optional[Callable[[int], Corrida]] = None,
        *,
        kind: str = "cantor",
        ground_truth: Any = None,
        components: Optional[Sequence["Name"]] = None,
        continuacao: Optional[Continuacao] = None,
        obter_continuacao: Optional[Callable[[], Optional[Continuacao]]] = None,
        partes: Optional[Tuple[str, int, "Name"]] = None,
    ) -> None:
        if segmento is None and components is None:
            raise ValueError("um nome precisa de gerador ou de componentes")
        self._segmento = segmento
        self.kind = kind
        self.ground_truth = ground_truth
        self.components = tuple(components) if components is not None else None
        self._continuacao = continuacao
        self._obter_continuacao = obter_continuacao
        self.partes = partes
        self.read_horizon = -1
        self._bits: List[int] = []
        self._fins: List[Union[int, float]] = []
        self._proximo_segmento = 0

    # ------------------------------------------------------------------ corridas
    def _materializar_ate(self, posicao: Union[int, float]) -> None:
        while not self._fins or self._fins[-1] <= posicao:
            bit, comprimento = self._segmento(self._proximo_segmento)
            self._proximo_segmento += 1
            if bit not in (0, 1):
                raise ValueError(f"bit inválido {bit!r} no segmento {self._proximo_segmento - 1}")
            if comprimento == 0:
                continue
            inicio = self._fins[-1] if self._fins else 0
            fim = math.inf if comprimento is None else inicio + comprimento
            if self._bits and self._bits[-1] == bit:
                self._fins[-1] = fim
            else:
                self._bits.append(bit)
                self._fins.append(fim)

    def _marcar(self, posicao: int) -> None:
        if posicao > self.read_horizon:
            self.read_horizon = posicao

    def bit(self, posicao: int) -> int:
        """Bit na posição dada; leituras repetidas devolvem o mesmo bit."""
        if posicao < 0:
            raise IndexError(f"posição negativa {posicao}")
        if self.components is not None:
            k = len(self.components)
            valor = self.components[posicao % k].bit(posicao // k)
        else:
            self._materializar_ate(posicao)
            valor = self._bits[bisect_right(self._fins, posicao)]
        self._marcar(posicao)
        return valor

    def seek(self, posicao: int, bit: int, limite: int) -> Optional[int]:
        """
        Primeira posição j em [posicao, posicao + limite) com o bit dado.

        O limite é obrigatório e finito; sem ocorrência devolve None.
        """
        if limite is None or limite <= 0:
            raise ValueError("a busca exige um limite finito e positivo")
        fim_busca = posicao + limite
        if self.components is not None:
            for j in range(posicao, fim_busca):
                if self.bit(j) == bit:
                    return j
            return None
        j: Union[int, float] = posicao
        while j < fim_busca:
            self._materializar_ate(j)
            indice = bisect_right(self._fins, j)
            if self._bits[indice] == bit:
                self._marcar(int(j))
                return int(j)
            j = self._fins[indice]
        self._marcar(fim_busca - 1)
        return None

    def corrida(self, indice: int) -> Corrida:
        """Corrida canônica de índice dado (após fusão)."""
        if self.components is not None:
            return (self.bit(indice), 1)
        while len(self._fins) <= indice:
            if self._fins and self._fins[-1] == math.inf:
                raise IndexError(f"o nome tem apenas {len(self._fins)} corridas")
            self._materializar_ate(self._fins[-1] if self._fins else 0)
        inicio = self._fins[indice - 1] if indice > 0 else 0
        fim = self._fins[indice]
        return (self._bits[indice], None if fim == math.inf else int(fim - inicio))

    def corridas(self, n: int) -> List[Tuple[int, int]]:
        """Corridas dos primeiros n bits, com a última truncada em n."""
        if n <= 0:
            return []
        if self.components is not None:
            resultado: List[Tuple[int, int]] = []
            for j in range(n):
                b = self.bit(j)
                if resultado and resultado[-1][0] == b:
                    resultado[-1] = (b, resultado[-1][1] + 1)
                else:
                    resultado.append((b, 1))
            return resultado
        self._materializar_ate(n - 1)
        self._marcar(n - 1)
        resultado = []
        inicio: Union[int, float] = 0
        for b, fim in zip(self._bits, self._fins):
            if inicio >= n:
                break
            resultado.append((b, int(min(fim, n) - inicio)))
            inicio = fim
        return resultado

    def prefix(self, n: int) -> str:
        return "".join(str(b) * comprimento for b, comprimento in self.corridas(n))

    # ---------------------------------------------------------------- estrutura
    @property
    def continuacao(self) -> Optional[Continuacao]:
        if self._continuacao is None and self._obter_continuacao is not None:
            self._continuacao = self._obter_continuacao()
            self._obter_continuacao = None
        return self._continuacao

    @property
    def aridade(self) -> int:
        return len(self.components) if self.components is not None else 1

    def stripped(self) -> "Name":
        """Cópia sem verdade de base, com cache próprio e mesmo gerador."""
        componentes = (
            [c.stripped() for c in self.components] if self.components is not None else None
        )
        continuacao = self.continuacao.sem_verdade() if self.continuacao is not None else None
        partes = None
        if self.partes is not None:
            partes = (self.partes[0], self.partes[1], self.partes[2].stripped())
        return Name(
            self._segmento,
            kind=self.kind,
            components=componentes,
            continuacao=continuacao,
            partes=partes,
        )

    def __repr__(self) -> str:
        rotulo = f"tupla[{self.aridade}]" if self.components is not None else self.kind
        return f"Name({rotulo}, verdade={self.ground_truth!r})"


def corridas_de_texto(texto: str) -> List[Tuple[int, int]]:
    corridas: List[Tuple[int, int]] = []
    for caractere in texto:
        b = int(caractere)
        if corridas and corridas[-1][0] == b:
            corridas[-1] = (b, corridas[-1][1] + 1)
        else:
            corridas.append((b, 1))
    return corridas


def de_corridas(
    corridas: Sequence[Corrida],
    ciclo: Sequence[Corrida] = (),
    **atributos: Any,
) -> Name:
    """Nome formado por uma lista finita de corridas seguida de um ciclo de corridas."""
    cabeca = list(corridas)
    repeticao = list(ciclo)
    if not repeticao and (not cabeca or cabeca[-1][1] is not None):
        raise ValueError("nome finito: falta corrida infinita ou ciclo")

    def segmento(j: int) -> Corrida:
        if j < len(cabeca):
            return cabeca[j]
        return repeticao[(j - len(cabeca)) % len(repeticao)]

    return Name(segmento, **atributos)


def periodico(prefixo: str, ciclo: str, **atributos: Any) -> Name:
    """Nome eventualmente periódico prefixo·ciclo^ω."""
    if not ciclo:
        raise ValueError("ciclo vazio")
    if len(set(ciclo)) == 1:
        return de_corridas(corridas_de_texto(prefixo) + [(int(ciclo[0]), None)], **atributos)
    return de_corridas(corridas_de_texto(prefixo), corridas_de_texto(ciclo), **atributos)
