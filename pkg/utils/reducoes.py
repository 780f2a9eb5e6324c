"""
Biblioteca de reduções, verificação contra realizadores adversários e
composição de reduções.

Cada redução é um par de programas de fluxo (H, K). A verificação percorre
um corpus semeado de instâncias de f, amostra respostas de g para H(p) e
valida K(p, resposta) contra o oráculo de f.
"""
from fractions import Fraction
from itertools import count
import logging
import random
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from classes.erros import (
    ConstructionError,
    DecodingError,
    DivergenceError,
    DomainError,
    UnknownReductionError,
)
from classes.name import Name
from classes.pontos import Restante
from classes.problema import HORIZONTE_PADRAO, Problema, intervalo_quociente
from classes.reducao import ConfigAdversario, Falha, Reduction, RelatorioVerificacao
from classes.transformador import (
    ORCAMENTO_PADRAO,
    Emitir,
    Execucao,
    FitaExterna,
    FitaSaida,
    Ler,
    Buscar,
    Leitura,
    Programa,
    SubMaquina,
)
from utils.algebra import potencia
from utils.codificacao import aproximacao_diadica
from utils.construtores import build_cnabsorbtion, build_cnextraction
from utils.leitores import (
    LeitorArvore,
    LeitorBlocos,
    LeitorConjunto,
    LeitorReal,
    LeitorSlots,
    copiar_estrutura,
    copiar_fita,
    escrever_bloco_real,
    escrever_colapso,
    escrever_natural,
    escrever_passagem,
    estreitar,
    forma_do_espaco,
)
from utils.principios import EntradaCorpus, descrever_verdade, gerar_corpus, problema

logger = logging.getLogger(__name__)


# --------------------------------------------------------------- auxiliares
def _programa(nome: str, corpo: Callable, forma: Any = 0, tipos: Optional[Dict[Any, str]] = None) -> Programa:
    return Programa(nome=nome, fabrica=corpo, forma=forma, tipos=tipos or {})


class PrimeiroUm:
    """Procura incremental do primeiro 1 de uma fita de Cantor."""

    def __init__(self, fita: Any) -> None:
        self.fita = fita
        self.visto = 0
        self.posicao: Optional[int] = None

    def ate(self, n: int):
        """Posição do primeiro 1 se ela é ≤ n; senão None."""
        if self.posicao is None and self.visto <= n:
            self.posicao = yield Buscar(self.fita, self.visto, 1, n + 1 - self.visto)
            self.visto = n + 1
        if self.posicao is not None and self.posicao <= n:
            return self.posicao
        return None


def aproximar_quociente(lx: LeitorReal, ly: LeitorReal, i: int, limitado: bool):
    """Aproximação a menos de 2^-i de min(|x|,|y|)/|y| (limitado) ou x/y; supõe y ≠ 0."""
    p = i + 2
    while True:
        qx = yield from lx.aproximacao(p)
        qy = yield from ly.aproximacao(p)
        intervalo = intervalo_quociente(qx, qy, Fraction(1, 2 ** p), limitado)
        if intervalo is not None and intervalo[1] - intervalo[0] < Fraction(1, 2 ** i):
            return (intervalo[0] + intervalo[1]) / 2
        p += 8


def escrever_nivel(n: int, no: Optional[Sequence[int]], canal: Any = 0):
    """Nível n da função característica de uma árvore: cheio (no None) ou só o nó dado."""
    if no is None:
        yield Emitir(1, 2 ** n, canal)
        return
    u = int("".join(map(str, no)), 2) if n else 0
    if u:
        yield Emitir(0, u, canal)
    yield Emitir(1, 1, canal)
    if 2 ** n - u - 1:
        yield Emitir(0, 2 ** n - u - 1, canal)


def _precisao_para(e: Fraction) -> int:
    """Menor p com 2^-p < e."""
    return (e.denominator // e.numerator).bit_length()


def _evento_llpo(posicao: int, paridade: int, canal: Any = 0):
    """Fecha um nome de LLPO com o primeiro 1 na paridade pedida."""
    if posicao % 2 != paridade:
        yield Emitir(0, 1, canal)
    yield Emitir(1, 1, canal)
    yield Emitir(0, None, canal)


REAIS2 = {0: "real", 1: "real"}


# --------------------------------------------------------- ubrDiv ≡ LPO
def ubrdiv_le_lpo(horizonte: int = HORIZONTE_PADRAO, orcamento: int = ORCAMENTO_PADRAO) -> Reduction:
    """Divide quando LPO diz que y ≠ 0; senão responde 0."""

    def corpo_h():
        ly = LeitorReal((0, 1))
        for n in count():
            q = yield from ly.aproximacao(n)
            if abs(q) > Fraction(2, 2 ** n):
                yield Emitir(1, 1)
                yield Emitir(0, None)
                return
            yield Emitir(0, 1)

    def corpo_k():
        c = yield from LeitorBlocos((1,)).proximo()
        if c != 0:
            yield Emitir(1, None)
            return
        lx, ly = LeitorReal((0, 0)), LeitorReal((0, 1))
        for i in count():
            q = yield from aproximar_quociente(lx, ly, i + 1, False)
            yield from escrever_bloco_real(aproximacao_diadica(q, i + 1))

    return Reduction(
        "ubrdiv_le_lpo",
        _programa("ubrdiv_le_lpo.H", corpo_h),
        _programa("ubrdiv_le_lpo.K", corpo_k, tipos={0: "real"}),
        problema("ubrDiv", horizonte, orcamento),
        problema("LPO", horizonte, orcamento),
        "LPO decide se y ≠ 0; se sim, x/y é computável",
    )


def lpo_le_ubrdiv(horizonte: int = HORIZONTE_PADRAO, orcamento: int = ORCAMENTO_PADRAO) -> Reduction:
    """(x, y) = (n·2^-n, 2^-n) para o primeiro 1 em n; K arredonda x/y e confere o bit."""

    def corpo_h():
        primeiro = PrimeiroUm((0,))
        for i in count():
            n = yield from primeiro.ate(i)
            y = Fraction(1, 2 ** n) if n is not None else Fraction(0)
            m = yield from primeiro.ate(2 * i + 8)
            x = Fraction(m, 2 ** m) if m is not None else Fraction(0)
            yield from escrever_bloco_real(x, 0)
            yield from escrever_bloco_real(y, 1)

    def corpo_k():
        q = yield from LeitorReal((1,)).aproximacao(2)
        n = round(q)
        if n >= 0:
            bit = yield Ler((0,), n)
            if bit == 1:
                yield from escrever_natural(0)
                return
        yield from escrever_natural(1)

    return Reduction(
        "lpo_le_ubrdiv",
        _programa("lpo_le_ubrdiv.H", corpo_h, (0, 1), REAIS2),
        _programa("lpo_le_ubrdiv.K", corpo_k, tipos={0: "nat"}),
        problema("LPO", horizonte, orcamento),
        problema("ubrDiv", horizonte, orcamento),
        "x/y é a posição do primeiro 1",
    )


# ------------------------------------------------------- rDiv ≡ AoUC_[0,1]
def rdiv_le_aouc(horizonte: int = HORIZONTE_PADRAO, orcamento: int = ORCAMENTO_PADRAO) -> Reduction:
    """Mantém [0,1] enquanto procura y > 2^-k; depois colapsa sobre min(|x|,|y|)/|y|."""

    def corpo_h():
        lx, ly = LeitorReal((0, 0)), LeitorReal((0, 1))
        for k in count():
            q = yield from ly.aproximacao(k)
            if abs(q) > Fraction(2, 2 ** k):
                break
            yield from escrever_passagem()
        logger.debug("[REDUCAO] rdiv_le_aouc: divisor separado de 0 no estágio %d", k)
        for t in count():
            z = yield from aproximar_quociente(lx, ly, t + 4, True)
            yield from escrever_colapso(aproximacao_diadica(z, t + 4), t)

    return Reduction(
        "rdiv_le_aouc",
        _programa("rdiv_le_aouc.H", corpo_h, tipos={0: "fechado"}),
        _programa("rdiv_le_aouc.K", lambda: copiar_fita((1,)), tipos={0: "real"}),
        problema("rDiv", horizonte, orcamento),
        problema("AoUC_unit", horizonte, orcamento),
        "a instância de AoUC fica em [0,1] até o divisor se afastar de 0",
    )


def aouc_le_rdiv(horizonte: int = HORIZONTE_PADRAO, orcamento: int = ORCAMENTO_PADRAO) -> Reduction:
    """(0, 0) até a primeira bola no slot k; depois (2^-(k+1)·z, 2^-(k+1))."""

    def corpo_h():
        slots = LeitorSlots((0,))
        restante = Restante()
        y: Optional[Fraction] = None
        for i in count():
            if y is None:
                slot = yield from slots.proximo()
                if slot is not None:
                    restante.remover(*slot)
                    if restante.vazio:
                        raise DomainError("as bolas cobrem [0,1]: fechado vazio")
                    y = Fraction(1, 2 ** (slots.lidos + 1))
            if y is None:
                yield from escrever_bloco_real(Fraction(0), 0)
                yield from escrever_bloco_real(Fraction(0), 1)
                continue
            z = yield from estreitar(slots, restante, i + 1)
            yield from escrever_bloco_real(aproximacao_diadica(y * z, i + 1), 0)
            yield from escrever_bloco_real(y, 1)

    return Reduction(
        "aouc_le_rdiv",
        _programa("aouc_le_rdiv.H", corpo_h, (0, 1), REAIS2),
        _programa("aouc_le_rdiv.K", lambda: copiar_fita((1,)), tipos={0: "real"}),
        problema("AoUC_unit", horizonte, orcamento),
        problema("rDiv", horizonte, orcamento),
        "x = 2^-k·z e y = 2^-k depois do colapso",
    )


# ------------------------------------------------ DependentCut ≡ AoUC_Cantor
def depcut_le_aouc_cantor(horizonte: int = HORIZONTE_PADRAO, orcamento: int = ORCAMENTO_PADRAO) -> Reduction:
    """Árvore cheia até o primeiro 1; depois só o ramo compatível com o resto de p."""

    def corpo_h():
        primeiro = PrimeiroUm((0,))
        caminho: List[int] = []
        for n in count():
            m = yield from primeiro.ate(n)
            if m is None:
                yield from escrever_nivel(n, None)
                continue
            while len(caminho) < n:
                bit = yield Ler((0,), m + 1 + len(caminho))
                caminho.append(bit)
            yield from escrever_nivel(n, caminho[:n])

    return Reduction(
        "depcut_le_aouc_cantor",
        _programa("depcut_le_aouc_cantor.H", corpo_h, tipos={0: "arvore"}),
        _programa("depcut_le_aouc_cantor.K", lambda: copiar_fita((1,))),
        problema("DependentCut", horizonte, orcamento),
        problema("AoUC_cantor", horizonte, orcamento),
        "poda os ramos incompatíveis com p",
    )


def aouc_cantor_le_depcut(horizonte: int = HORIZONTE_PADRAO, orcamento: int = ORCAMENTO_PADRAO) -> Reduction:
    """0 por nível cheio; no colapso, 1 seguido do caminho único."""

    def corpo_h():
        arvore = LeitorArvore((0,))
        for n in count(1):
            no = yield from arvore.nivel(n)
            if no is None:
                yield Emitir(0, 1)
                continue
            yield Emitir(1, 1)
            for j in count():
                no = yield from arvore.nivel(j + 1)
                if no is None:
                    raise DomainError(f"nível {j + 1} cheio depois do colapso")
                yield Emitir(int(no[j]), 1)

    return Reduction(
        "aouc_cantor_le_depcut",
        _programa("aouc_cantor_le_depcut.H", corpo_h),
        _programa("aouc_cantor_le_depcut.K", lambda: copiar_fita((1,))),
        problema("AoUC_cantor", horizonte, orcamento),
        problema("DependentCut", horizonte, orcamento),
        "o caminho da árvore colapsada vira o corte",
    )


# ------------------------------------------------- AoUC_[0,1] ≤ AoUC_Cantor
FATOR_FILHO = Fraction(2, 3)


def _filho(a: Fraction, b: Fraction, bit: int) -> Tuple[Fraction, Fraction]:
    """Filhos sobrepostos de [a, b]: [a, a + 2L/3] e [b − 2L/3, b]."""
    lado = FATOR_FILHO * (b - a)
    return (a, a + lado) if bit == 0 else (b - lado, b)


def aouc_unit_le_aouc_cantor(horizonte: int = HORIZONTE_PADRAO, orcamento: int = ORCAMENTO_PADRAO) -> Reduction:
    """
    Árvore de intervalos racionais sobre [0,1] com filhos sobrepostos.

    Enquanto não há bola, o nível é cheio; depois do colapso cada nível
    escolhe o filho que contém o ponto com folga de L/6.

    O nível n tem intervalos de comprimento (2/3)^n, e não de raio 2^-n:
    filhos vizinhos se sobrepõem em L/3, e uma aproximação a menos de L/12
    do ponto decide o filho sem retrocesso.
    """

    def corpo_h():
        slots = LeitorSlots((0,))
        restante = Restante()
        colapsou = False
        caminho: List[int] = []
        a, b = Fraction(0), Fraction(1)
        for n in count():
            if not colapsou:
                slot = yield from slots.proximo()
                if slot is not None:
                    restante.remover(*slot)
                    if restante.vazio:
                        raise DomainError("as bolas cobrem [0,1]: fechado vazio")
                    colapsou = True
            if not colapsou:
                yield from escrever_nivel(n, None)
                continue
            while len(caminho) < n:
                largura = b - a
                q = yield from estreitar(slots, restante, _precisao_para(largura / 12))
                bit = 0 if q <= a + largura / 2 else 1
                caminho.append(bit)
                a, b = _filho(a, b, bit)
            yield from escrever_nivel(n, caminho)

    def corpo_k():
        a, b = Fraction(0), Fraction(1)
        j = 0
        for i in count():
            while b - a >= Fraction(1, 2 ** (i + 1)):
                bit = yield Ler((1,), j)
                j += 1
                a, b = _filho(a, b, bit)
            yield from escrever_bloco_real(aproximacao_diadica((a + b) / 2, i + 1))

    return Reduction(
        "aouc_unit_le_aouc_cantor",
        _programa("aouc_unit_le_aouc_cantor.H", corpo_h, tipos={0: "arvore"}),
        _programa("aouc_unit_le_aouc_cantor.K", corpo_k, tipos={0: "real"}),
        problema("AoUC_unit", horizonte, orcamento),
        problema("AoUC_cantor", horizonte, orcamento),
        "árvore binária de intervalos com razão 2/3",
    )


# ----------------------------------------------------------- C_fin ≤ LLPO^n
def cfin_le_llpo_power(
    n: int = 3,
    horizonte: int = HORIZONTE_PADRAO,
    orcamento: int = ORCAMENTO_PADRAO,
) -> Reduction:
    """
    C_{0..n} ≤ LLPO^n por torneio: a pergunta m opõe "m excluído" a
    "{0..m−1} todo excluído"; K responde o maior m que venceu (ou 0).
    """
    if n < 1:
        raise ValueError("o torneio exige n ≥ 1")

    def corpo_h():
        leitor = LeitorConjunto((0,))
        decididos: Dict[int, int] = {}
        posicoes = [0] * n
        while len(decididos) < n:
            yield from leitor.avancar()
            excluidos = leitor.excluidos
            for m in range(1, n + 1):
                if m in decididos:
                    continue
                canal = m - 1
                if m in excluidos:
                    paridade = 0
                elif all(k in excluidos for k in range(m)):
                    paridade = 1
                else:
                    yield Emitir(0, 1, canal)
                    posicoes[canal] += 1
                    continue
                decididos[m] = paridade
                yield from _evento_llpo(posicoes[canal], paridade, canal)

    def corpo_k():
        escolha = 0
        for m in range(1, n + 1):
            resposta = yield from LeitorBlocos((1, m - 1)).proximo()
            if resposta == 1:
                escolha = m
        yield from escrever_natural(escolha)

    return Reduction(
        f"cfin_le_llpo_power({n})",
        _programa(f"cfin_le_llpo_power({n}).H", corpo_h, tuple(range(n)), {m: "cantor" for m in range(n)}),
        _programa(f"cfin_le_llpo_power({n}).K", corpo_k, tipos={0: "nat"}),
        problema(f"C_fin({n})", horizonte, orcamento),
        potencia(problema("LLPO", horizonte, orcamento), n),
        "torneio de exclusões em paralelo",
    )


# ----------------------------------------------------------- LLPO e ℝ²
def _parte_llpo(primeiro: PrimeiroUm, i: int, impar: Optional[bool]):
    """Bloco i de 2^-n0 restrito à paridade pedida (None: qualquer paridade)."""
    n0 = yield from primeiro.ate(i)
    if n0 is None or (impar is not None and (n0 % 2 == 1) != impar):
        return Fraction(0)
    return Fraction(1, 2 ** n0)


def llpo_le_llpo_r2(horizonte: int = HORIZONTE_PADRAO, orcamento: int = ORCAMENTO_PADRAO) -> Reduction:
    """x = 2^-n0 se o primeiro 1 é ímpar, y = 2^-n0 se é par."""

    def corpo_h():
        primeiro = PrimeiroUm((0,))
        for i in count():
            x = yield from _parte_llpo(primeiro, i, True)
            y = yield from _parte_llpo(primeiro, i, False)
            yield from escrever_bloco_real(x, 0)
            yield from escrever_bloco_real(y, 1)

    return Reduction(
        "llpo_le_llpo_r2",
        _programa("llpo_le_llpo_r2.H", corpo_h, (0, 1), REAIS2),
        _programa("llpo_le_llpo_r2.K", lambda: copiar_fita((1,)), tipos={0: "nat"}),
        problema("LLPO", horizonte, orcamento),
        problema("LLPO_R2", horizonte, orcamento),
        "a paridade vira a coordenada não nula",
    )


def llpo_r2_le_llpo(horizonte: int = HORIZONTE_PADRAO, orcamento: int = ORCAMENTO_PADRAO) -> Reduction:
    """x ≠ 0 visto primeiro força a resposta 1; y ≠ 0 visto primeiro força 0."""

    def corpo_h():
        lx, ly = LeitorReal((0, 0)), LeitorReal((0, 1))
        for s in count():
            qx = yield from lx.aproximacao(s)
            qy = yield from ly.aproximacao(s)
            limiar = Fraction(2, 2 ** s)
            if abs(qx) > limiar:
                yield from _evento_llpo(s, 1)
                return
            if abs(qy) > limiar:
                yield from _evento_llpo(s, 0)
                return
            yield Emitir(0, 1)

    return Reduction(
        "llpo_r2_le_llpo",
        _programa("llpo_r2_le_llpo.H", corpo_h),
        _programa("llpo_r2_le_llpo.K", lambda: copiar_fita((1,)), tipos={0: "nat"}),
        problema("LLPO_R2", horizonte, orcamento),
        problema("LLPO", horizonte, orcamento),
        "a primeira coordenada vista não nula decide",
    )


def llpo_le_rdiv(horizonte: int = HORIZONTE_PADRAO, orcamento: int = ORCAMENTO_PADRAO) -> Reduction:
    """(|x|, |x| + |y|) da forma em ℝ²; responde 0 se o quociente aproximado é < 1/2."""

    def corpo_h():
        primeiro = PrimeiroUm((0,))
        for i in count():
            x = yield from _parte_llpo(primeiro, i, True)
            total = yield from _parte_llpo(primeiro, i, None)
            yield from escrever_bloco_real(x, 0)
            yield from escrever_bloco_real(total, 1)

    def corpo_k():
        q = yield from LeitorReal((1,)).aproximacao(2)
        yield from escrever_natural(0 if q < Fraction(1, 2) else 1)

    return Reduction(
        "llpo_le_rdiv",
        _programa("llpo_le_rdiv.H", corpo_h, (0, 1), REAIS2),
        _programa("llpo_le_rdiv.K", corpo_k, tipos={0: "nat"}),
        problema("LLPO", horizonte, orcamento),
        problema("rDiv", horizonte, orcamento),
        "quociente 1 para primeiro 1 ímpar, 0 para par",
    )


# --------------------------------------------------- identidade e composição
def identidade(f: Problema) -> Reduction:
    """f ≤ f copiando instância e resposta."""
    try:
        forma_h, tipos_h = forma_do_espaco(f.espaco_instancia)
        forma_k, tipos_k = forma_do_espaco(f.espaco_resposta)
    except ValueError as erro:
        raise ConstructionError(f"identidade não suporta {f}: {erro}") from erro
    return Reduction(
        f"identidade({f.identificador})",
        _programa(f"id[{f}].H", lambda: copiar_estrutura((0,), forma_h), forma_h, tipos_h),
        _programa(f"id[{f}].K", lambda: copiar_estrutura((1,), forma_k), forma_k, tipos_k),
        f,
        f,
        "cópia",
    )


def compor(r1: Reduction, r2: Reduction) -> Reduction:
    """De f ≤ g (r1) e g ≤ h (r2), f ≤ h: H = H2∘H1 e K(p, a) = K1(p, K2(H1(p), a))."""
    if r1.g.identificador != r2.f.identificador:
        raise ConstructionError(f"não compõe: {r1.g} ≠ {r2.f}")

    def corpo_h():
        h1 = SubMaquina(r1.H, {0: FitaExterna(0)})
        h2 = SubMaquina(r2.H, {0: FitaSaida(h1, r1.H.forma)})
        yield from h2.repassar()

    def corpo_k():
        h1 = SubMaquina(r1.H, {0: FitaExterna(0)})
        k2 = SubMaquina(r2.K, {0: FitaSaida(h1, r1.H.forma), 1: FitaExterna(1)})
        k1 = SubMaquina(r1.K, {0: FitaExterna(0), 1: FitaSaida(k2, r2.K.forma)})
        yield from k1.repassar()

    return Reduction(
        f"{r2.nome}∘{r1.nome}",
        Programa(f"{r2.H.nome}∘{r1.H.nome}", corpo_h, r2.H.forma, r2.H.tipos, r2.H.codigos),
        Programa(f"{r1.K.nome}∘{r2.K.nome}", corpo_k, r1.K.forma, r1.K.tipos, r1.K.codigos),
        r1.f,
        r2.g,
        f"composição de {r1.nome} e {r2.nome}",
        r1.descritores,
    )


# ------------------------------------------------------------- biblioteca
def _sem_argumento(fabrica):
    def construir(argumento, horizonte, orcamento):
        if argumento is not None:
            raise ValueError("esta redução não recebe parâmetro")
        return fabrica(horizonte, orcamento)

    return construir


BIBLIOTECA: Dict[str, Callable[[Optional[str], int, int], Reduction]] = {
    "ubrdiv_le_lpo": _sem_argumento(ubrdiv_le_lpo),
    "lpo_le_ubrdiv": _sem_argumento(lpo_le_ubrdiv),
    "rdiv_le_aouc": _sem_argumento(rdiv_le_aouc),
    "aouc_le_rdiv": _sem_argumento(aouc_le_rdiv),
    "depcut_le_aouc_cantor": _sem_argumento(depcut_le_aouc_cantor),
    "aouc_cantor_le_depcut": _sem_argumento(aouc_cantor_le_depcut),
    "aouc_unit_le_aouc_cantor": _sem_argumento(aouc_unit_le_aouc_cantor),
    "llpo_le_llpo_r2": _sem_argumento(llpo_le_llpo_r2),
    "llpo_r2_le_llpo": _sem_argumento(llpo_r2_le_llpo),
    "llpo_le_rdiv": _sem_argumento(llpo_le_rdiv),
    "cfin_le_llpo_power": lambda a, h, o: cfin_le_llpo_power(int(a) if a else 3, h, o),
    "identidade": lambda a, h, o: identidade(problema(a or "LPO", h, o)),
    "cnextraction": lambda a, h, o: build_cnextraction(problema("AoUC_unit", h, o), int(a) if a else 1),
    "cnabsorbtion": lambda a, h, o: build_cnabsorbtion(problema("AoUC_unit", h, o), int(a) if a else 2),
}


def nomes_disponiveis() -> List[str]:
    return sorted(BIBLIOTECA)


def get_reduction(
    nome: str,
    horizonte: int = HORIZONTE_PADRAO,
    orcamento: int = ORCAMENTO_PADRAO,
) -> Reduction:
    """
    Redução da biblioteca pelo nome; entradas parametrizadas aceitam
    `nome(argumento)`, por exemplo `cfin_le_llpo_power(4)` ou `identidade(rDiv)`.
    """
    base, argumento = nome, None
    if nome.endswith(")") and "(" in nome:
        base, argumento = nome[:-1].split("(", 1)
    if base not in BIBLIOTECA:
        raise UnknownReductionError(nome, BIBLIOTECA)
    try:
        return BIBLIOTECA[base](argumento, horizonte, orcamento)
    except (KeyError, ValueError) as erro:
        raise UnknownReductionError(nome, BIBLIOTECA) from erro


# ------------------------------------------------------------ verificação
def _resumir(leituras: Sequence[Leitura], limite: int = 12) -> List[str]:
    return [f"{l.fita}[{l.inicio}..{l.fim}]" for l in leituras[:limite]]


def _assinatura(nome: Name, modelo: Optional[Name] = None) -> Any:
    """Corridas lidas de cada folha, até o horizonte de leitura do modelo."""
    modelo = modelo if modelo is not None else nome
    if modelo.components is not None:
        componentes = nome.components if nome.components is not None else [None] * len(modelo.components)
        return tuple(_assinatura(c, m) for c, m in zip(componentes, modelo.components))
    if modelo.read_horizon < 0:
        return ()
    return tuple(nome.corridas(modelo.read_horizon + 1))


def corpus_da_reducao(red: Reduction, tamanho: int, semente: int = 0) -> List[EntradaCorpus]:
    """Corpus dedicado da redução, ou o corpus padrão de f."""
    return gerar_corpus(red.f, tamanho, semente, red.descritores)


def verify_reduction(
    red: Reduction,
    corpus: Optional[Sequence[EntradaCorpus]] = None,
    adversario: Optional[ConfigAdversario] = None,
    depth: int = 20,
    orcamento: int = ORCAMENTO_PADRAO,
    tamanho: int = 1000,
    semente: int = 0,
) -> RelatorioVerificacao:
    """
    Verifica a redução em cada célula (instância, resposta adversária de g).

    H recebe a instância sem verdade de base; se H(p) não está no domínio de
    g a falha é registrada no estágio "H". Com `cegueira`, cada célula é
    reexecutada com a verdade de base presente e as saídas lidas precisam
    coincidir.
    """
    adversario = adversario or ConfigAdversario()
    if corpus is None:
        corpus = corpus_da_reducao(red, tamanho, semente)
        corpus_id = f"{red.f.identificador}:{tamanho}:{semente}"
    else:
        corpus_id = f"{red.f.identificador}:{len(corpus)}:externo"
    relatorio = RelatorioVerificacao(red.nome, corpus_id, profundidade=depth, orcamento=orcamento)
    rng = random.Random(adversario.semente)
    for entrada in corpus:
        _verificar_instancia(red, entrada, adversario, depth, orcamento, rng, relatorio)
    if relatorio.aprovado:
        logger.info("[REDUCAO] %s", relatorio.resumo())
    else:
        logger.warning("[REDUCAO] %s; primeira falha: %s", relatorio.resumo(), relatorio.primeira_falha.restricao)
    return relatorio


def _verificar_instancia(
    red: Reduction,
    entrada: EntradaCorpus,
    adversario: ConfigAdversario,
    depth: int,
    orcamento: int,
    rng: random.Random,
    relatorio: RelatorioVerificacao,
) -> None:
    instancia = {"problem": entrada.problema, "spec": entrada.descritor, "seed": entrada.semente}

    def falhar(estagio: str, restricao: str, resposta: Any = None, leituras: Sequence[Leitura] = ()) -> None:
        adv = None
        if resposta is not None:
            adv = {"indice": resposta[0], "ground_truth": descrever_verdade(resposta[1].ground_truth)}
        falha = Falha(instancia, adv, estagio, restricao, _resumir(leituras))
        relatorio.falhas.append(falha)
        logger.warning("[REDUCAO] %s falhou em %s (%s): %s", red.nome, estagio, entrada.descritor, restricao)

    p = entrada.nome.stripped()
    execucao_h = Execucao(red.H, [p], orcamento)
    instancia_g = execucao_h.montar()
    try:
        conjunto_f = red.f.solucoes(entrada.nome)
    except (DomainError, DivergenceError, DecodingError) as erro:
        falhar("oraculo", f"instância fora de dom({red.f}): {erro}")
        return
    try:
        respostas = red.g.solucoes(instancia_g).amostras(adversario.amostras, rng)
    except (DomainError, DivergenceError, DecodingError) as erro:
        falhar("H", f"H(p) fora de dom({red.g}): {erro}", leituras=execucao_h.leituras)
        return

    for indice, resposta in enumerate(respostas):
        relatorio.celulas += 1
        execucao_k = Execucao(red.K, [p, resposta], orcamento)
        saida = execucao_k.montar()
        try:
            veredito = conjunto_f.contem(saida, depth)
        except (DomainError, DivergenceError, DecodingError) as erro:
            falhar("K", str(erro), (indice, resposta), execucao_h.leituras + execucao_k.leituras)
            continue
        if not veredito:
            falhar("validacao", veredito.motivo, (indice, resposta), execucao_h.leituras + execucao_k.leituras)
            continue
        if adversario.cegueira and not _cego(red.K, [entrada.nome, resposta], saida, orcamento):
            falhar("cegueira", "K muda de saída quando a verdade de base está presente", (indice, resposta))

    if adversario.cegueira and not _cego(red.H, [entrada.nome], instancia_g, orcamento):
        falhar("cegueira", "H muda de saída quando a verdade de base está presente", leituras=execucao_h.leituras)


def _cego(programa: Programa, entradas: List[Name], saida: Name, orcamento: int) -> bool:
    """Reexecuta o programa sobre as entradas dadas e compara o trecho já lido da saída."""
    try:
        esperado = _assinatura(saida)
        obtido = _assinatura(Execucao(programa, entradas, orcamento).montar(), saida)
    except (DomainError, DivergenceError, DecodingError):
        return False
    return esperado == obtido
