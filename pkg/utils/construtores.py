"""
Construtores de reduções para problemas com domínio bom.

- build_cnextraction(f, k): f ⋆ AoUC^k ≤ C_{2^k} ⋆ (f^{2^k} × AoUC^k)
- build_cnabsorbtion(f, n): f ⋆ C_{1..n} ≤ f^n × C_{1..n}
- build_composite(l, m, k, associacao): cadeia de graus para AoUC^l ⋆ AoUC^m ⋆ AoUC^k

Os ramos hipotéticos escrevem instâncias de f slot a slot; antes de fixar
uma bola conferem que o prefixo ainda se estende a um elemento do domínio,
e ao abandonar completam o prefixo com a sequência densa.
"""
from fractions import Fraction
from itertools import count
import logging
from typing import Any, Callable, Dict, FrozenSet, List, Sequence, Tuple

from classes.erros import ConstructionError
from classes.problema import HORIZONTE_PADRAO, Problema
from classes.reducao import Etapa, Reduction
from classes.transformador import (
    DefinirCodigo,
    Emitir,
    FitaConstante,
    FitaExterna,
    FitaSaida,
    LerCodigo,
    ORCAMENTO_PADRAO,
    Programa,
    SubMaquina,
    folhas,
    intercalar,
)
from utils.algebra import Composicional, Produto, potencia
from utils.codificacao import codificar_natural, codificar_real
from utils.leitores import (
    EscritorConjunto,
    LeitorBlocos,
    LeitorConjunto,
    LeitorReal,
    LeitorSlots,
    copiar_fita,
    escrever_bola,
    escrever_natural,
    escrever_passagem,
    programa_ponto_unico,
)
from utils.principios import AoUCUnit, CFin, DominioBom

logger = logging.getLogger(__name__)

REAL_ZERO = codificar_real(Fraction(0))


def subconjunto(indice: int, k: int) -> FrozenSet[int]:
    """Subconjunto de {0..k−1} cujo bit j está ligado em `indice`."""
    return frozenset(j for j in range(k) if indice >> j & 1)


def _fatores(f: Problema) -> List[Problema]:
    fatores = f.fatores if isinstance(f, Produto) else [f]
    for parte in fatores:
        if parte.dominio_bom is None:
            raise ConstructionError(f"{parte} não declara uma sequência densa do domínio")
    return fatores


def _caminhos(f: Problema) -> List[Tuple[int, ...]]:
    """Caminhos das folhas de uma instância (ou resposta) de f dentro da sua tupla."""
    if isinstance(f, Produto):
        return [(c,) for c in range(len(f.fatores))]
    return [()]


def _forma(prefixo: str, f: Problema) -> Any:
    if isinstance(f, Produto):
        return tuple(f"{prefixo}.{c}" for c in range(len(f.fatores)))
    return prefixo


def _real_zero(canal: Any):
    yield Emitir(1, None, canal)


def _completar(dominios: Sequence[DominioBom], escritos: Sequence[List], canais: Sequence[Any]):
    return intercalar([d.completar(e, c) for d, e, c in zip(dominios, escritos, canais)])


def _copiar_guardado(
    canais: Sequence[Any],
    caminhos: Sequence[Tuple[int, ...]],
    dominios: Sequence[DominioBom],
    escritos: Sequence[List],
    vigiar: Callable,
    rotulo: str,
):
    """
    Copia os slots da saída do código (fita "q") para os canais, um slot de
    cada canal por rodada.

    Uma bola só é escrita se o resto de [0,1] continua não vazio; se a bola
    esvaziaria o resto, ou se `vigiar` devolve um motivo, o ramo é
    abandonado e cada canal é completado pela sequência densa.
    """
    leitores = [LeitorSlots(("q",) + caminho) for caminho in caminhos]
    restantes = [DominioBom.resto(e) for e in escritos]
    while True:
        motivo = yield from vigiar()
        slots = []
        if motivo is None:
            for leitor, restante in zip(leitores, restantes):
                slot = yield from leitor.proximo()
                if slot is not None and restante.sem_bola(*slot).vazio:
                    motivo = "a bola não deixaria extensão no domínio"
                slots.append(slot)
        if motivo is not None:
            logger.debug("[CONSTRUTOR] %s abandonado: %s", rotulo, motivo)
            yield from _completar(dominios, escritos, canais)
            return
        for slot, restante, escrito, canal in zip(slots, restantes, escritos, canais):
            if slot is None:
                yield from escrever_passagem(canal)
            else:
                restante.remover(*slot)
                yield from escrever_bola(*slot, canal)
            escrito.append(slot)


def _ligadas(codigo, base: Tuple[Any, ...], deslocamento: int) -> Dict[Tuple[Any, ...], FitaExterna]:
    return {(deslocamento + m,): FitaExterna(base + (m,)) for m in range(codigo.n_ligadas)}


# ------------------------------------------------------------- extração
def _ramo_extracao(
    indice: int,
    conjunto: FrozenSet[int],
    codigo,
    k: int,
    canais: Sequence[Any],
    caminhos: Sequence[Tuple[int, ...]],
    dominios: Sequence[DominioBom],
):
    """
    Ramo I: passagens até todas as componentes de I começarem a colapsar;
    depois copia o código aplicado aos pontos de I e a 0 fora de I.
    """
    rotulo = f"ramo {sorted(conjunto)}"
    escritos: List[List] = [[] for _ in canais]
    leitores = {j: LeitorSlots((0, 0, j)) for j in range(k)}
    colapsados = set()
    while not conjunto <= colapsados:
        for j in range(k):
            if j in colapsados:
                continue
            slot = yield from leitores[j].proximo()
            if slot is None:
                continue
            if j in conjunto:
                colapsados.add(j)
                continue
            logger.debug("[CONSTRUTOR] %s abandonado: componente %d começou a colapsar", rotulo, j)
            yield from _completar(dominios, escritos, canais)
            return
        for escrito, canal in zip(escritos, canais):
            escrito.append(None)
            yield from escrever_passagem(canal)

    fitas_q: Dict[Any, Any] = {}
    for j in range(k):
        if j in conjunto:
            extrator = SubMaquina(programa_ponto_unico((0,)), {0: FitaExterna((0, 0, j))})
            fitas_q[(0, j)] = FitaSaida(extrator, 0)
        else:
            fitas_q[(0, j)] = FitaConstante(REAL_ZERO)
    fitas_q.update(_ligadas(codigo, (0, "ligada"), 1))
    q = SubMaquina(codigo.programa, fitas_q)
    fora = [j for j in range(k) if j not in conjunto]

    def vigiar():
        for j in fora:
            slot = yield from leitores[j].proximo()
            if slot is not None:
                return f"componente {j} começou a colapsar"
        return None

    copia = Programa(
        f"cnextraction.A{indice}",
        lambda: _copiar_guardado(canais, caminhos, dominios, escritos, vigiar, rotulo),
    )
    yield from SubMaquina(copia, {"q": FitaSaida(q, codigo.programa.forma), 0: FitaExterna(0)}).repassar()


def _testar_ramos(k: int, caminhos: Sequence[Tuple[int, ...]]):
    """
    Valores de verdade t_I como observáveis monótonos: t_I dispara quando uma
    componente fora de I exclui 0, ou quando o código aplicado a x'' exclui
    y_I. Cada disparo vira uma exclusão no nome de C_{2^k}.
    """
    ramos = 2 ** k
    escritor = EscritorConjunto(0)
    conjuntos = [subconjunto(i, k) for i in range(ramos)]
    vivos = list(range(ramos))
    leitores_b = [LeitorSlots((1 + j,)) for j in range(k)]
    leitores_q = {(i, c): LeitorSlots(("q", i) + caminho) for i in range(ramos) for c, caminho in enumerate(caminhos)}
    leitores_y = {(i, c): LeitorReal((0, 0, i) + caminho) for i in range(ramos) for c, caminho in enumerate(caminhos)}
    bolas: Dict[Tuple[int, int], List] = {chave: [] for chave in leitores_q}
    for s in count():
        disparados: List[int] = []
        for j, leitor in enumerate(leitores_b):
            slot = yield from leitor.proximo()
            if slot is not None and abs(slot[0]) < slot[1]:
                disparados += [i for i in vivos if j not in conjuntos[i] and i not in disparados]
        folga = Fraction(1, 2 ** s)
        for i in vivos:
            if i in disparados:
                continue
            for c in range(len(caminhos)):
                slot = yield from leitores_q[i, c].proximo()
                if slot is not None:
                    bolas[i, c].append(slot)
                y = yield from leitores_y[i, c].aproximacao(s)
                if any(abs(y - centro) < raio - folga for centro, raio in bolas[i, c]):
                    disparados.append(i)
                    break
        for i in disparados:
            vivos.remove(i)
            logger.debug("[CONSTRUTOR] t_%s disparou no estágio %d", sorted(conjuntos[i]), s)
            yield from escritor.excluir(i)
        if not disparados:
            yield from escritor.preencher()


def _programa_selecao(codigo, k: int, caminhos: Sequence[Tuple[int, ...]]) -> Programa:
    """
    Código anexado à instância de C_{2^k} ⋆ (f^{2^k} × AoUC^k).

    Fitas: 0 a resposta (y_I..., x'_j...), 1..k as cópias B_j, depois os
    nomes ligados ao código original.
    """
    ramos = 2 ** k

    def corpo():
        fitas: Dict[Any, Any] = {0: FitaExterna(0)}
        for j in range(k):
            fitas[1 + j] = FitaExterna(1 + j)
        for i in range(ramos):
            conjunto = subconjunto(i, k)
            fitas_q: Dict[Any, Any] = {
                (0, j): FitaExterna((0, 1, j)) if j in conjunto else FitaConstante(REAL_ZERO)
                for j in range(k)
            }
            fitas_q.update({(m + 1,): FitaExterna((k + 1 + m,)) for m in range(codigo.n_ligadas)})
            fitas[("q", i)] = FitaSaida(SubMaquina(codigo.programa, fitas_q), codigo.programa.forma)
        interno = Programa("cnextraction.R.interno", lambda: _testar_ramos(k, caminhos))
        yield from SubMaquina(interno, fitas).repassar()

    return Programa("cnextraction.R", corpo, 0, {0: f"finito:{ramos - 1}"})


def build_cnextraction(f: Problema, k: int) -> Reduction:
    """
    f ⋆ AoUC^k ≤ C_{2^k} ⋆ (f^{2^k} × AoUC^k) para f com domínio bom.

    H escreve uma instância de f por hipótese I ⊆ {0..k−1} (componentes em I
    colapsam, as demais ficam cheias), copia as componentes de AoUC^k e
    anexa o código de seleção; K lê o I* escolhido por C_{2^k} e devolve
    (x'', y_{I*}), com x''_j = x'_j para j ∈ I* e 0 fora.
    """
    if k < 1:
        raise ValueError("a extração exige k ≥ 1")
    dominios = [p.dominio_bom for p in _fatores(f)]
    caminhos = _caminhos(f)
    ramos = 2 ** k
    g_aouc = potencia(AoUCUnit(f.horizonte, f.orcamento), k)
    cfin = CFin(ramos - 1, f.horizonte, f.orcamento)
    fonte = Composicional(f, g_aouc)
    alvo = Composicional(cfin, Produto([potencia(f, ramos), g_aouc]))

    formas_a = [_forma(f"A{i}", f) for i in range(ramos)]
    formas_b = tuple(f"B{j}" for j in range(k))
    tipos_h = {canal: "fechado" for forma in formas_a for canal in folhas(forma)}
    tipos_h.update({b: "fechado" for b in formas_b})

    def corpo_h():
        codigo = yield LerCodigo((0,))
        ligadas = tuple(("saida", b) for b in formas_b) + tuple((0, "ligada", m) for m in range(codigo.n_ligadas))
        yield DefinirCodigo("raiz", _programa_selecao(codigo, k, caminhos), ligadas)
        corpos = [
            _ramo_extracao(i, subconjunto(i, k), codigo, k, folhas(formas_a[i]), caminhos, dominios)
            for i in range(ramos)
        ]
        corpos += [copiar_fita((0, 0, j), formas_b[j]) for j in range(k)]
        yield from intercalar(corpos)

    forma_y = _forma("y", f)
    canais_y = folhas(forma_y)
    canais_x = tuple(f"x{j}" for j in range(k))

    def corpo_k():
        escolha = yield from LeitorBlocos((1, 1)).proximo()
        conjunto = subconjunto(escolha, k)
        logger.debug("[CONSTRUTOR] C_%d escolheu o ramo %s", ramos, sorted(conjunto))
        corpos = [
            copiar_fita((1, 0, 1, j), canais_x[j]) if j in conjunto else _real_zero(canais_x[j])
            for j in range(k)
        ]
        corpos += [copiar_fita((1, 0, 0, escolha) + caminho, canal) for caminho, canal in zip(caminhos, canais_y)]
        yield from intercalar(corpos)

    return Reduction(
        f"cnextraction({k})",
        Programa(f"cnextraction({k}).H", corpo_h, ((tuple(formas_a), formas_b),), tipos_h, ("raiz",)),
        Programa(
            f"cnextraction({k}).K",
            corpo_k,
            (canais_x, forma_y),
            {canal: "real" for canal in canais_x + tuple(canais_y)},
        ),
        fonte,
        alvo,
        f"{fonte} ≤ {alvo}",
    )


# -------------------------------------------------------------- absorção
def _ramo_absorcao(
    c: int,
    codigo,
    canais: Sequence[Any],
    caminhos: Sequence[Tuple[int, ...]],
    dominios: Sequence[DominioBom],
):
    """Tentativa c: o código aplicado à resposta c, abandonada quando c é excluído."""
    rotulo = f"tentativa {c}"
    leitor = LeitorConjunto((0, 0))
    fitas_q: Dict[Any, Any] = {(0,): FitaConstante(codificar_natural(c))}
    fitas_q.update(_ligadas(codigo, (0, "ligada"), 1))
    q = SubMaquina(codigo.programa, fitas_q)

    def vigiar():
        yield from leitor.avancar()
        if c in leitor.excluidos:
            return f"{c} excluído do conjunto"
        return None

    copia = Programa(
        f"cnabsorbtion.F{c}",
        lambda: _copiar_guardado(canais, caminhos, dominios, [[] for _ in canais], vigiar, rotulo),
    )
    yield from SubMaquina(copia, {"q": FitaSaida(q, codigo.programa.forma), 0: FitaExterna(0)}).repassar()


def build_cnabsorbtion(f: Problema, n: int) -> Reduction:
    """
    f ⋆ C_{1..n} ≤ f^n × C_{1..n} para f com domínio bom.

    As n tentativas correm em paralelo; K lê a resposta c de C e devolve
    (c, resposta da tentativa c).
    """
    if n < 1:
        raise ValueError("a absorção exige n ≥ 1")
    dominios = [p.dominio_bom for p in _fatores(f)]
    caminhos = _caminhos(f)
    cfin = CFin(n - 1, f.horizonte, f.orcamento)
    fonte = Composicional(f, cfin)
    alvo = Produto([potencia(f, n), cfin])

    formas_f = [_forma(f"F{c}", f) for c in range(n)]
    tipos_h = {canal: "fechado" for forma in formas_f for canal in folhas(forma)}
    tipos_h["C"] = f"finito:{n - 1}"

    def corpo_h():
        codigo = yield LerCodigo((0,))
        corpos = [_ramo_absorcao(c, codigo, folhas(formas_f[c]), caminhos, dominios) for c in range(n)]
        corpos.append(copiar_fita((0, 0), "C"))
        yield from intercalar(corpos)

    forma_y = _forma("y", f)
    canais_y = folhas(forma_y)

    def corpo_k():
        c = yield from LeitorBlocos((1, 1)).proximo()
        corpos = [escrever_natural(c, "c")]
        corpos += [copiar_fita((1, 0, c) + caminho, canal) for caminho, canal in zip(caminhos, canais_y)]
        yield from intercalar(corpos)

    tipos_k = {canal: "real" for canal in canais_y}
    tipos_k["c"] = "nat"
    return Reduction(
        f"cnabsorbtion({n})",
        Programa(f"cnabsorbtion({n}).H", corpo_h, (tuple(formas_f), "C"), tipos_h),
        Programa(f"cnabsorbtion({n}).K", corpo_k, ("c", forma_y), tipos_k),
        fonte,
        alvo,
        f"{fonte} ≤ {alvo}",
    )


# ---------------------------------------------------------- composição
def _aouc(expoente: int, horizonte: int, orcamento: int) -> Problema:
    return potencia(AoUCUnit(horizonte, orcamento), expoente)


def build_composite(
    l: int,
    m: int,
    k: int,
    associacao: str = "direita",
    horizonte: int = HORIZONTE_PADRAO,
    orcamento: int = ORCAMENTO_PADRAO,
) -> List[Etapa]:
    """
    Cadeia de graus que limita AoUC^l ⋆ AoUC^m ⋆ AoUC^k.

    "direita" associa AoUC^l ⋆ (AoUC^m ⋆ AoUC^k) e termina em
    AoUC^{(l+1)2^k−1} ⋆ AoUC^{m2^k+k}; "esquerda" associa
    (AoUC^l ⋆ AoUC^m) ⋆ AoUC^k e termina em C_{2^{m+k}} ⋆ AoUC^{(l2^m+m)2^k+k}.
    Os passos que vêm dos construtores trazem a redução executável.
    """
    if min(l, m, k) < 1:
        raise ConstructionError("a cadeia exige l, m, k ≥ 1")
    if associacao == "direita":
        ramos = 2 ** k
        etapas = [
            Etapa(
                f"AoUC^{m} ⋆ AoUC^{k} ≤ C_{ramos} ⋆ AoUC^{m * ramos + k}",
                build_cnextraction(_aouc(m, horizonte, orcamento), k),
            ),
            Etapa(
                f"AoUC^{l} ⋆ C_{ramos} ≤ AoUC^{l * ramos} × C_{ramos}",
                build_cnabsorbtion(_aouc(l, horizonte, orcamento), ramos),
            ),
            Etapa(f"C_{ramos} ≤ LLPO^{ramos - 1} ≤ AoUC^{ramos - 1}"),
            Etapa(f"AoUC^{l} ⋆ AoUC^{m} ⋆ AoUC^{k} ≤ AoUC^{(l + 1) * ramos - 1} ⋆ AoUC^{m * ramos + k}"),
        ]
    elif associacao == "esquerda":
        meio = l * 2 ** m + m
        etapas = [
            Etapa(
                f"AoUC^{l} ⋆ AoUC^{m} ≤ C_{2 ** m} ⋆ AoUC^{meio}",
                build_cnextraction(_aouc(l, horizonte, orcamento), m),
            ),
            Etapa(
                f"AoUC^{meio} ⋆ AoUC^{k} ≤ C_{2 ** k} ⋆ AoUC^{meio * 2 ** k + k}",
                build_cnextraction(_aouc(meio, horizonte, orcamento), k),
            ),
            Etapa(f"C_{2 ** m} ⋆ C_{2 ** k} ≤ C_{2 ** (m + k)}"),
            Etapa(
                f"(AoUC^{l} ⋆ AoUC^{m}) ⋆ AoUC^{k} ≤ C_{2 ** (m + k)} ⋆ AoUC^{meio * 2 ** k + k}"
            ),
        ]
    else:
        raise ValueError(f"associação desconhecida: {associacao!r} (use 'direita' ou 'esquerda')")
    logger.info("[CONSTRUTOR] cadeia %s para (%d, %d, %d): %d passos", associacao, l, m, k, len(etapas))
    return etapas
