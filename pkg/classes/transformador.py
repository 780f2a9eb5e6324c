"""
Runtime de programas de fluxo (máquinas do tipo 2).

Um programa é uma fábrica de geradores. O gerador conversa com o runtime
por pedidos: lê bits das fitas de entrada (`Ler`, `Buscar`, `LerCodigo`),
escreve bits nos canais de saída (`Emitir`) e anexa código às saídas
(`DefinirCodigo`). A saída só cresce: um bit emitido nunca muda, e cada
bit depende apenas das leituras registradas antes dele.
"""
from bisect import bisect_right
from dataclasses import dataclass, field
import logging
import math
from typing import Any, Callable, Dict, Generator, List, Mapping, Optional, Sequence, Tuple, Union

from .erros import ConstructionError, DecodingError, DivergenceError
from .name import Continuacao, Name

logger = logging.getLogger(__name__)

Canal = Union[int, str]
Forma = Union[Canal, Tuple[Any, ...]]
Endereco = Union[int, Tuple[Any, ...]]

ORCAMENTO_PADRAO = 10 ** 6


# ------------------------------------------------------------------- pedidos
@dataclass(frozen=True)
class Ler:
    fita: Endereco
    posicao: int


@dataclass(frozen=True)
class Buscar:
    """Primeira posição em [posicao, posicao + limite) com o bit dado, ou None."""
    fita: Endereco
    posicao: int
    bit: int
    limite: int

    def __post_init__(self) -> None:
        if self.limite is None or self.limite <= 0:
            raise ValueError("Buscar exige limite finito e positivo")


@dataclass(frozen=True)
class Emitir:
    """Acrescenta `vezes` cópias do bit ao canal; vezes=None fecha o canal com uma corrida infinita."""
    bit: int
    vezes: Optional[int] = 1
    canal: Canal = 0


@dataclass(frozen=True)
class Passo:
    pass


@dataclass(frozen=True)
class LerCodigo:
    fita: Endereco


@dataclass(frozen=True)
class DefinirCodigo:
    """
    Anexa um código à saída.

    Atributos:
        canal (Canal): Canal de saída, ou "raiz" para a saída inteira.
        programa (Programa): Programa anexado.
        fitas (Tuple): Nomes ligados: endereços de entrada, ("saida", forma)
            para saídas deste mesmo programa, ou objetos Name.
    """
    canal: Canal
    programa: "Programa"
    fitas: Tuple[Any, ...] = ()


@dataclass(frozen=True)
class Codigo:
    """Código lido de uma fita: opaco, só pode ser executado ou repassado."""
    programa: "Programa"
    n_ligadas: int


@dataclass(frozen=True)
class Leitura:
    """Trecho [inicio, fim] lido de uma fita; inicio = fim = -1 indica leitura do código."""
    fita: Tuple[Any, ...]
    inicio: int
    fim: int


@dataclass(frozen=True)
class Programa:
    """
    Programa de fluxo.

    Atributos:
        nome (str): Rótulo usado em relatórios e logs.
        fabrica (Callable[[], Generator]): Cria um gerador novo a cada execução.
        forma (Forma): Canal único ou tupla (aninhada) de canais da saída.
        tipos (Dict[Canal, str]): Espaço de cada canal, para os nomes de saída.
        codigos (Tuple[Canal, ...]): Canais (ou "raiz") que recebem código anexado.
    """
    nome: str
    fabrica: Callable[[], Generator]
    forma: Forma = 0
    tipos: Dict[Canal, str] = field(default_factory=dict, compare=False, hash=False)
    codigos: Tuple[Canal, ...] = ()

    def iniciar(self) -> Generator:
        return self.fabrica()


def folhas(forma: Forma) -> List[Canal]:
    if isinstance(forma, tuple):
        return [c for f in forma for c in folhas(f)]
    return [forma]


def normalizar(endereco: Endereco) -> Tuple[Any, ...]:
    return endereco if isinstance(endereco, tuple) else (endereco,)


def navegar(nome: Name, caminho: Sequence[Any]) -> Name:
    """Desce por componentes de tupla e nomes ligados ("ligada", m)."""
    i = 0
    while i < len(caminho):
        passo = caminho[i]
        if passo == "ligada":
            continuacao = nome.continuacao
            if continuacao is None:
                raise DecodingError("nome sem código ligado", 0)
            nome = continuacao.ligadas[caminho[i + 1]]
            i += 2
            continue
        if nome.components is None:
            raise DecodingError(f"componente {passo} pedida em nome que não é tupla", 0)
        nome = nome.components[passo]
        i += 1
    return nome


# ------------------------------------------------------------------- execução
class Execucao:
    """
    Execução preguiçosa de um programa sobre nomes de entrada.

    O programa só avança quando alguém puxa um bit de um canal de saída; o
    orçamento conta os passos desde a última emissão no canal puxado.
    """

    def __init__(self, programa: Programa, entradas: Sequence[Name], orcamento: int = ORCAMENTO_PADRAO) -> None:
        self.programa = programa
        self.entradas = list(entradas)
        self.orcamento = orcamento
        self.leituras: List[Leitura] = []
        self.passos = 0
        self._gerador = programa.iniciar()
        self._pendente: Any = None
        self._terminou = False
        self._emissoes: Dict[Canal, List[Tuple[int, Optional[int]]]] = {}
        self._fins: Dict[Canal, List[Union[int, float]]] = {}
        self._codigos: Dict[Canal, Continuacao] = {}
        self._nomes: Dict[Canal, Name] = {}
        self._raiz: Optional[Name] = None

    # ------------------------------------------------------------- passos
    def _avancar(self) -> bool:
        if self._terminou:
            return False
        try:
            pedido = self._gerador.send(self._pendente)
        except StopIteration:
            self._terminou = True
            return False
        self._pendente = self._atender(pedido)
        self.passos += 1
        return True

    def _atender(self, pedido: Any) -> Any:
        if isinstance(pedido, Ler):
            nome = navegar(self.entradas[normalizar(pedido.fita)[0]], normalizar(pedido.fita)[1:])
            valor = nome.bit(pedido.posicao)
            self.leituras.append(Leitura(normalizar(pedido.fita), pedido.posicao, pedido.posicao))
            return valor
        if isinstance(pedido, Buscar):
            nome = navegar(self.entradas[normalizar(pedido.fita)[0]], normalizar(pedido.fita)[1:])
            achado = nome.seek(pedido.posicao, pedido.bit, pedido.limite)
            fim = achado if achado is not None else pedido.posicao + pedido.limite - 1
            self.leituras.append(Leitura(normalizar(pedido.fita), pedido.posicao, fim))
            return achado
        if isinstance(pedido, Emitir):
            self._registrar_emissao(pedido)
            return None
        if isinstance(pedido, Passo):
            return None
        if isinstance(pedido, LerCodigo):
            nome = navegar(self.entradas[normalizar(pedido.fita)[0]], normalizar(pedido.fita)[1:])
            continuacao = nome.continuacao
            if continuacao is None:
                raise DecodingError("fita sem código anexado", 0)
            self.leituras.append(Leitura(normalizar(pedido.fita), -1, -1))
            return Codigo(continuacao.programa, len(continuacao.ligadas))
        if isinstance(pedido, DefinirCodigo):
            ligadas = tuple(self._nome_ligado(f) for f in pedido.fitas)
            self._codigos[pedido.canal] = Continuacao(pedido.programa, ligadas)
            return None
        raise TypeError(f"pedido desconhecido {pedido!r} em {self.programa.nome}")

    def _registrar_emissao(self, pedido: Emitir) -> None:
        if pedido.bit not in (0, 1):
            raise ValueError(f"bit inválido {pedido.bit!r}")
        fins = self._fins.setdefault(pedido.canal, [])
        if fins and fins[-1] == math.inf:
            raise ValueError(f"emissão no canal {pedido.canal!r} após corrida infinita")
        inicio = fins[-1] if fins else 0
        fins.append(math.inf if pedido.vezes is None else inicio + pedido.vezes)
        self._emissoes.setdefault(pedido.canal, []).append((pedido.bit, pedido.vezes))

    def _nome_ligado(self, fita: Any) -> Name:
        if isinstance(fita, Name):
            return fita
        if isinstance(fita, tuple) and fita and fita[0] == "saida":
            return self.montar(fita[1])
        caminho = normalizar(fita)
        return navegar(self.entradas[caminho[0]], caminho[1:])

    def garantir(self, canal: Canal, n_emissoes: int) -> None:
        """Avança até o canal ter pelo menos `n_emissoes` emissões."""
        emissoes = self._emissoes.setdefault(canal, [])
        ociosos = 0
        while len(emissoes) < n_emissoes:
            antes = len(emissoes)
            if not self._avancar():
                bits = self._fins.get(canal, [0])[-1] if self._fins.get(canal) else 0
                logger.debug("[EXECUCAO] %s terminou sem completar o canal %r", self.programa.nome, canal)
                raise DivergenceError(int(bits), self.passos, canal)
            ociosos = 0 if len(emissoes) > antes else ociosos + 1
            if ociosos > self.orcamento:
                bits = self._fins[canal][-1] if self._fins.get(canal) else 0
                logger.warning(
                    "[EXECUCAO] %s sem saída no canal %r após %d passos", self.programa.nome, canal, self.orcamento
                )
                raise DivergenceError(int(bits), self.orcamento, canal)

    # --------------------------------------------------------------- saídas
    def nome(self, canal: Canal) -> Name:
        if canal not in self._nomes:
            obter = (lambda: self._codigo(canal)) if canal in self.programa.codigos else None
            self._nomes[canal] = Name(
                lambda j: self._segmento(canal, j),
                kind=self.programa.tipos.get(canal, "cantor"),
                obter_continuacao=obter,
            )
        return self._nomes[canal]

    def _segmento(self, canal: Canal, j: int) -> Tuple[int, Optional[int]]:
        self.garantir(canal, j + 1)
        return self._emissoes[canal][j]

    def _codigo(self, canal: Canal) -> Optional[Continuacao]:
        ociosos = 0
        while canal not in self._codigos:
            if not self._avancar():
                return None
            ociosos += 1
            if ociosos > self.orcamento:
                raise DivergenceError(0, self.orcamento, canal)
        return self._codigos[canal]

    def montar(self, forma: Optional[Forma] = None) -> Name:
        """Nome da saída com a forma dada (por padrão a forma do programa)."""
        if forma is None:
            if self._raiz is None:
                self._raiz = self._montar_raiz()
            return self._raiz
        if isinstance(forma, tuple):
            return Name(components=[self.montar(f) for f in forma], kind="tupla")
        return self.nome(forma)

    def _montar_raiz(self) -> Name:
        forma = self.programa.forma
        obter = (lambda: self._codigo("raiz")) if "raiz" in self.programa.codigos else None
        if isinstance(forma, tuple):
            return Name(components=[self.montar(f) for f in forma], kind="tupla", obter_continuacao=obter)
        if obter is None:
            return self.nome(forma)
        return Name(
            lambda j: self._segmento(forma, j),
            kind=self.programa.tipos.get(forma, "cantor"),
            obter_continuacao=obter,
        )


def run_transformer(
    programa: Programa,
    entradas: Sequence[Name],
    output_length: int,
    orcamento: int = ORCAMENTO_PADRAO,
) -> Tuple[str, List[List[Leitura]]]:
    """
    Executa o programa até `output_length` bits de saída.

    Devolve o prefixo e o registro de leituras: read_log[j] lista as leituras
    feitas depois do bit j-1 e antes do bit j ficar disponível.
    """
    execucao = Execucao(programa, entradas, orcamento)
    saida = execucao.montar()
    bits: List[str] = []
    registro: List[List[Leitura]] = []
    visto = 0
    for j in range(output_length):
        bits.append(str(saida.bit(j)))
        registro.append(execucao.leituras[visto:])
        visto = len(execucao.leituras)
    logger.debug("[EXECUCAO] %s: %d bits, %d passos", programa.nome, output_length, execucao.passos)
    return "".join(bits), registro


def fitas_lidas(registro: Sequence[Sequence[Leitura]]) -> Dict[Tuple[Any, ...], int]:
    """Maior posição lida por fita em um registro de leituras."""
    alcance: Dict[Tuple[Any, ...], int] = {}
    for leituras in registro:
        for leitura in leituras:
            alcance[leitura.fita] = max(alcance.get(leitura.fita, -1), leitura.fim)
    return alcance


# --------------------------------------------------------------------- fitas
class Fita:
    """Fonte de bits de uma submáquina; métodos geradores usados com `yield from`."""

    def ler(self, resto: Tuple[Any, ...], posicao: int):
        raise NotImplementedError

    def buscar(self, resto: Tuple[Any, ...], posicao: int, bit: int, limite: int):
        raise NotImplementedError

    def codigo(self, resto: Tuple[Any, ...]):
        raise NotImplementedError


class FitaExterna(Fita):
    """Repassa as leituras ao programa que hospeda a submáquina."""

    def __init__(self, endereco: Endereco) -> None:
        self.endereco = normalizar(endereco)

    def componente(self, i: int) -> "FitaExterna":
        return FitaExterna(self.endereco + (i,))

    def ligada(self, m: int) -> "FitaExterna":
        return FitaExterna(self.endereco + ("ligada", m))

    def ler(self, resto, posicao):
        valor = yield Ler(self.endereco + tuple(resto), posicao)
        return valor

    def buscar(self, resto, posicao, bit, limite):
        achado = yield Buscar(self.endereco + tuple(resto), posicao, bit, limite)
        return achado

    def codigo(self, resto):
        codigo = yield LerCodigo(self.endereco + tuple(resto))
        return codigo


class FitaConstante(Fita):
    """Nome fixo conhecido pelo próprio programa (uma constante computável)."""

    def __init__(self, nome: Name) -> None:
        self.nome = nome

    def ler(self, resto, posicao):
        yield Passo()
        return navegar(self.nome, resto).bit(posicao)

    def buscar(self, resto, posicao, bit, limite):
        yield Passo()
        return navegar(self.nome, resto).seek(posicao, bit, limite)

    def codigo(self, resto):
        yield Passo()
        continuacao = navegar(self.nome, resto).continuacao
        if continuacao is None:
            raise DecodingError("constante sem código anexado", 0)
        return Codigo(continuacao.programa, len(continuacao.ligadas))


class FitaSaida(Fita):
    """Saída de uma submáquina irmã, lida à medida que é produzida."""

    def __init__(self, submaquina: "SubMaquina", forma: Forma) -> None:
        self.submaquina = submaquina
        self.forma = forma

    def _canal(self, resto) -> Canal:
        forma = self.forma
        for passo in resto:
            if not isinstance(forma, tuple):
                raise DecodingError(f"componente {passo} pedida em canal simples", 0)
            forma = forma[passo]
        if isinstance(forma, tuple):
            raise DecodingError("leitura bit a bit de saída em tupla não suportada", 0)
        return forma

    def ler(self, resto, posicao):
        canal = self._canal(resto)
        yield from self.submaquina.garantir(canal, posicao + 1)
        return self.submaquina.bit(canal, posicao)

    def buscar(self, resto, posicao, bit, limite):
        canal = self._canal(resto)
        j = posicao
        while j < posicao + limite:
            yield from self.submaquina.garantir(canal, j + 1)
            b, fim = self.submaquina.emissao_em(canal, j)
            if b == bit:
                return j
            j = fim
        return None

    def codigo(self, resto):
        canal = "raiz" if not resto else self._canal(resto)
        while canal not in self.submaquina.codigos:
            if self.submaquina.terminou:
                raise DecodingError(f"submáquina {self.submaquina.programa.nome} não anexou código", 0)
            yield from self.submaquina.passo()
        definido = self.submaquina.codigos[canal]
        return Codigo(definido.programa, len(definido.fitas))


# ---------------------------------------------------------------- submáquina
class SubMaquina:
    """
    Programa executado dentro de outro programa.

    As fitas do filho são ligadas por endereço (o maior prefixo cadastrado
    vence); cada passo do filho rende ao menos um pedido ao hospedeiro, de
    modo que o orçamento do hospedeiro também limita o filho.
    """

    def __init__(self, programa: Programa, fitas: Mapping[Endereco, Fita]) -> None:
        self.programa = programa
        self.fitas = {normalizar(k): v for k, v in fitas.items()}
        self.terminou = False
        self.codigos: Dict[Canal, DefinirCodigo] = {}
        self._gerador = programa.iniciar()
        self._pendente: Any = None
        self._emissoes: Dict[Canal, List[int]] = {}
        self._fins: Dict[Canal, List[Union[int, float]]] = {}

    def _fita(self, endereco: Endereco) -> Tuple[Fita, Tuple[Any, ...]]:
        caminho = normalizar(endereco)
        for corte in range(len(caminho), 0, -1):
            if caminho[:corte] in self.fitas:
                return self.fitas[caminho[:corte]], caminho[corte:]
        raise DecodingError(f"fita {caminho} não ligada em {self.programa.nome}", 0)

    def passo(self):
        """Um passo do filho; devolve o pedido atendido, ou None se o filho terminou."""
        if self.terminou:
            yield Passo()
            return None
        try:
            pedido = self._gerador.send(self._pendente)
        except StopIteration:
            self.terminou = True
            yield Passo()
            return None
        self._pendente = None
        if isinstance(pedido, Ler):
            fita, resto = self._fita(pedido.fita)
            self._pendente = yield from fita.ler(resto, pedido.posicao)
        elif isinstance(pedido, Buscar):
            fita, resto = self._fita(pedido.fita)
            self._pendente = yield from fita.buscar(resto, pedido.posicao, pedido.bit, pedido.limite)
        elif isinstance(pedido, LerCodigo):
            fita, resto = self._fita(pedido.fita)
            self._pendente = yield from fita.codigo(resto)
        elif isinstance(pedido, Emitir):
            fins = self._fins.setdefault(pedido.canal, [])
            inicio = fins[-1] if fins else 0
            fins.append(math.inf if pedido.vezes is None else inicio + pedido.vezes)
            self._emissoes.setdefault(pedido.canal, []).append(pedido.bit)
            yield Passo()
        elif isinstance(pedido, DefinirCodigo):
            self.codigos[pedido.canal] = pedido
            yield Passo()
        elif isinstance(pedido, Passo):
            yield Passo()
        else:
            raise TypeError(f"pedido desconhecido {pedido!r} em {self.programa.nome}")
        return pedido

    def bits(self, canal: Canal) -> Union[int, float]:
        fins = self._fins.get(canal)
        return fins[-1] if fins else 0

    def garantir(self, canal: Canal, n_bits: int):
        while self.bits(canal) < n_bits:
            if self.terminou:
                raise DivergenceError(int(self.bits(canal)), 0, canal)
            yield from self.passo()

    def emissao_em(self, canal: Canal, posicao: int) -> Tuple[int, Union[int, float]]:
        """Bit e fim da emissão que cobre a posição (já produzida)."""
        fins = self._fins[canal]
        indice = bisect_right(fins, posicao)
        return self._emissoes[canal][indice], fins[indice]

    def bit(self, canal: Canal, posicao: int) -> int:
        return self.emissao_em(canal, posicao)[0]

    def repassar(self, canais: Optional[Mapping[Canal, Canal]] = None):
        """Executa o filho como corpo do hospedeiro, reemitindo saídas e códigos."""
        canais = dict(canais or {})
        while True:
            pedido = yield from self.passo()
            if self.terminou:
                return
            if isinstance(pedido, Emitir):
                yield Emitir(pedido.bit, pedido.vezes, canais.get(pedido.canal, pedido.canal))
            elif isinstance(pedido, DefinirCodigo):
                fitas = tuple(self._traduzir(f, canais) for f in pedido.fitas)
                yield DefinirCodigo(canais.get(pedido.canal, pedido.canal), pedido.programa, fitas)

    def _traduzir(self, fita: Any, canais: Mapping[Canal, Canal]) -> Any:
        if isinstance(fita, Name):
            return fita
        if isinstance(fita, tuple) and fita and fita[0] == "saida":
            return ("saida", _renomear(fita[1], canais))
        alvo, resto = self._fita(fita)
        if isinstance(alvo, FitaExterna):
            return alvo.endereco + tuple(resto)
        if isinstance(alvo, FitaConstante):
            return navegar(alvo.nome, resto)
        raise ConstructionError("código anexado não pode ligar a saída de uma submáquina irmã")


def _renomear(forma: Forma, canais: Mapping[Canal, Canal]) -> Forma:
    if isinstance(forma, tuple):
        return tuple(_renomear(f, canais) for f in forma)
    return canais.get(forma, forma)


def intercalar(filhos: Sequence[Generator], cota: int = 64):
    """
    Executa vários geradores de pedidos em rodízio.

    Troca de filho a cada emissão ou após `cota` pedidos; termina quando
    todos os filhos terminam.
    """
    filhos = list(filhos)
    pendentes: List[Any] = [None] * len(filhos)
    ativos = list(range(len(filhos)))
    vez = 0
    while ativos:
        vez %= len(ativos)
        indice = ativos[vez]
        feitos = 0
        terminou = False
        while True:
            try:
                pedido = filhos[indice].send(pendentes[indice])
            except StopIteration:
                terminou = True
                break
            pendentes[indice] = yield pedido
            feitos += 1
            if isinstance(pedido, Emitir) or feitos >= cota:
                break
        if terminou:
            ativos.pop(vez)
        else:
            vez += 1
