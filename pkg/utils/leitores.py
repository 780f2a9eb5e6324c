"""
Leitores e escritores usados dentro de programas de fluxo.

Todos os métodos que tocam fitas são geradores de pedidos e devem ser
chamados com `yield from` a partir do corpo de um programa.
"""
from fractions import Fraction
import logging
from typing import Any, Dict, List, Optional, Set, Tuple

from classes.erros import DomainError
from classes.pontos import Restante
from classes.transformador import Buscar, Emitir, Endereco, Ler, Programa, intercalar, normalizar
from utils.codificacao import (
    aproximacao_diadica,
    bola_do_codigo,
    bolas_de_colapso,
    codigo_bola,
    index_of,
    inicio_do_nivel,
    rational_enumeration,
)

logger = logging.getLogger(__name__)

LIMITE_INICIAL = 2 ** 64


class LeitorBlocos:
    """Lê blocos 0^n 1 consecutivos de uma fita, com buscas de limite crescente."""

    def __init__(self, fita: Endereco, inicio: int = 0) -> None:
        self.fita = fita
        self.posicao = inicio

    def proximo(self):
        inicio = self.posicao
        cursor, limite = inicio, LIMITE_INICIAL
        while True:
            achado = yield Buscar(self.fita, cursor, 1, limite)
            if achado is not None:
                self.posicao = achado + 1
                return achado - inicio
            cursor += limite
            limite *= LIMITE_INICIAL


class LeitorReal:
    """Aproximações ν_Q(n_i) de um nome real, lidas sob demanda e guardadas."""

    def __init__(self, fita: Endereco) -> None:
        self._blocos = LeitorBlocos(fita)
        self._aproximacoes: List[Fraction] = []

    def aproximacao(self, i: int):
        """Racional a distância < 2^-i do real lido."""
        while len(self._aproximacoes) <= i:
            n = yield from self._blocos.proximo()
            self._aproximacoes.append(rational_enumeration(n))
        return self._aproximacoes[i]


class LeitorSlots:
    """Slots de um nome de fechado de [0,1]: passagens e bolas racionais."""

    def __init__(self, fita: Endereco) -> None:
        self._blocos = LeitorBlocos(fita)
        self.lidos = 0

    def proximo(self):
        n = yield from self._blocos.proximo()
        self.lidos += 1
        return None if n == 0 else bola_do_codigo(n)


class LeitorArvore:
    """Níveis de uma árvore a.o.u. dada pela função característica."""

    def __init__(self, fita: Endereco) -> None:
        self.fita = fita

    def nivel(self, n: int):
        """None se o nível n é cheio; senão o único nó; DomainError se o nível é inválido."""
        inicio, tamanho = inicio_do_nivel(n), 2 ** n
        zero = yield Buscar(self.fita, inicio, 0, tamanho)
        if zero is None:
            return None
        u = yield Buscar(self.fita, inicio, 1, tamanho)
        if u is None:
            raise DomainError(f"nível {n} da árvore está vazio")
        restante = inicio + tamanho - (u + 1)
        if restante > 0:
            outro = yield Buscar(self.fita, u + 1, 1, restante)
            if outro is not None:
                raise DomainError(f"nível {n} da árvore não é cheio nem unitário")
        return format(u - inicio, f"0{n}b") if n else ""


class LeitorConjunto:
    """
    Varredura incremental de um nome de subconjunto finito.

    Cada chamada a `avancar` faz uma leitura limitada e devolve os elementos
    cuja exclusão acabou de ser vista.
    """

    def __init__(self, fita: Endereco, pedaco: int = 4096) -> None:
        self.fita = fita
        self.pedaco = pedaco
        self.excluidos: Set[int] = set()
        self._inicio_corrida = 0
        self._cursor = 0
        self._bit: Optional[int] = None
        self._corridas_fechadas = 0

    def avancar(self):
        if self._bit is None:
            self._bit = yield Ler(self.fita, 0)
            self._cursor = 1
            return []
        fim = yield Buscar(self.fita, self._cursor, 1 - self._bit, self.pedaco)
        novos: List[int] = []
        if fim is None:
            self._cursor += self.pedaco
            if self._bit == 0 and self._cursor - self._inicio_corrida >= 2:
                novos = self._excluir(0)
            return novos
        comprimento = fim - self._inicio_corrida
        if self._bit == 0 and comprimento >= 2:
            novos = self._excluir(0)
        if self._bit == 1 and self._corridas_fechadas > 0:
            novos = self._excluir(comprimento)
        self._corridas_fechadas += 1
        self._inicio_corrida = fim
        self._cursor = fim + 1
        self._bit = 1 - self._bit
        return novos

    def _excluir(self, k: int) -> List[int]:
        if k in self.excluidos:
            return []
        self.excluidos.add(k)
        return [k]


# ------------------------------------------------------------------ escritores
def escrever_bloco_real(q: Fraction, canal: Any = 0):
    yield Emitir(0, index_of(q), canal)
    yield Emitir(1, 1, canal)


def escrever_passagem(canal: Any = 0):
    yield Emitir(1, 1, canal)


def escrever_bola(centro: Fraction, raio: Fraction, canal: Any = 0):
    yield Emitir(0, codigo_bola(centro, raio), canal)
    yield Emitir(1, 1, canal)


def escrever_colapso(q: Fraction, t: int, canal: Any = 0):
    """Passo t do colapso sobre um ponto z com |q − z| ≤ 2^-(t+3)."""
    for centro, raio in bolas_de_colapso(q, t):
        yield from escrever_bola(centro, raio, canal)


class EscritorConjunto:
    """
    Escreve um nome de subconjunto finito à medida que exclusões aparecem.

    Antes da primeira exclusão preenche com 1; depois repete a última
    exclusão como preenchimento, o que não altera o conjunto descrito.
    """

    def __init__(self, canal: Any = 0) -> None:
        self.canal = canal
        self.excluidos: List[int] = []

    def excluir(self, k: int):
        if k in self.excluidos:
            yield from self.preencher()
            return
        if not self.excluidos:
            yield Emitir(0, 1, self.canal)
        self.excluidos.append(k)
        yield Emitir(1, k, self.canal)
        yield Emitir(0, 1, self.canal)

    def preencher(self):
        if not self.excluidos:
            yield Emitir(1, 1, self.canal)
            return
        yield Emitir(1, self.excluidos[-1], self.canal)
        yield Emitir(0, 1, self.canal)


# ------------------------------------------------------------ ponto do fechado
def extrair_ponto(
    fita: Endereco,
    canal: Any = 0,
    deslocamento: int = 0,
    vies: int = 0,
    ancora: Optional[Fraction] = None,
):
    """
    Corpo de programa: nome real do único ponto de um fechado colapsado.

    O bloco i espera o casco do que resta de [0,1] ficar mais estreito que
    2^-(i+1) e emite o ponto médio arredondado; com âncora c, emite c
    enquanto o casco couber em (c − 2^-i, c + 2^-i).
    """
    slots = LeitorSlots(fita)
    restante = Restante()
    i = 0
    while True:
        alvo = Fraction(1, 2 ** (i + 1))
        while restante.vazio or restante.largura() >= alvo:
            if ancora is not None and not restante.vazio:
                lo, hi = restante.casco()
                raio = Fraction(1, 2 ** i)
                if ancora - raio < lo and hi < ancora + raio:
                    break
            slot = yield from slots.proximo()
            if slot is not None:
                restante.remover(*slot)
                if restante.vazio:
                    raise DomainError("fechado vazio: nenhum ponto a extrair")
        lo, hi = restante.casco()
        raio = Fraction(1, 2 ** i)
        if ancora is not None and ancora - raio < lo and hi < ancora + raio:
            q = ancora
        else:
            q = aproximacao_diadica((lo + hi) / 2, i, deslocamento, vies)
        yield from escrever_bloco_real(q, canal)
        i += 1


def programa_ponto_unico(
    fita: Endereco = 0,
    deslocamento: int = 0,
    vies: int = 0,
    ancora: Optional[Fraction] = None,
) -> Programa:
    return Programa(
        nome=f"ponto_unico[{deslocamento},{vies},{ancora}]",
        fabrica=lambda: extrair_ponto(fita, 0, deslocamento, vies, ancora),
        forma=0,
        tipos={0: "real"},
    )


def escrever_natural(n: int, canal: Any = 0):
    if n:
        yield Emitir(0, n, canal)
    yield Emitir(1, None, canal)


def estreitar(slots: LeitorSlots, restante: Restante, precisao: int):
    """Lê slots até o casco ficar mais estreito que 2^-precisao; devolve o ponto médio."""
    alvo = Fraction(1, 2 ** precisao)
    while restante.largura() >= alvo:
        slot = yield from slots.proximo()
        if slot is not None:
            restante.remover(*slot)
            if restante.vazio:
                raise DomainError("as bolas cobrem [0,1]: fechado vazio")
    lo, hi = restante.casco()
    return (lo + hi) / 2


def copiar_fita(fita: Endereco, canal: Any = 0):
    """Corpo de programa: copia uma fita corrida a corrida."""
    bit = yield Ler(fita, 0)
    posicao, limite = 0, LIMITE_INICIAL
    while True:
        fim = yield Buscar(fita, posicao, 1 - bit, limite)
        if fim is None:
            yield Emitir(bit, limite, canal)
            posicao += limite
            limite *= LIMITE_INICIAL
            continue
        if fim > posicao:
            yield Emitir(bit, fim - posicao, canal)
        posicao, bit, limite = fim, 1 - bit, LIMITE_INICIAL


def forma_do_espaco(espaco: Any, proximo: Optional[List[int]] = None) -> Tuple[Any, Dict[Any, str]]:
    """Forma de saída (canais numerados) e tipos dos canais para um espaço de pontos."""
    proximo = proximo if proximo is not None else [0]
    if isinstance(espaco, tuple):
        if espaco and isinstance(espaco[0], str) and espaco[0] in ("uniao", "estrela"):
            raise ValueError(f"espaço {espaco[0]!r} não tem forma de canais")
        formas, tipos = [], {}
        for parte in espaco:
            forma, tipos_parte = forma_do_espaco(parte, proximo)
            formas.append(forma)
            tipos.update(tipos_parte)
        return tuple(formas), tipos
    canal = proximo[0]
    proximo[0] += 1
    return canal, {canal: espaco}


def copiar_estrutura(fita: Endereco, forma: Any):
    """Corpo de programa: copia cada folha da fita (tupla) para o canal correspondente."""

    def caminhos(f, prefixo):
        if isinstance(f, tuple):
            for i, sub in enumerate(f):
                yield from caminhos(sub, prefixo + (i,))
        else:
            yield prefixo, f

    pares = list(caminhos(forma, normalizar(fita)))
    if len(pares) == 1:
        yield from copiar_fita(pares[0][0], pares[0][1])
        return
    yield from intercalar([copiar_fita(caminho, canal) for caminho, canal in pares])
