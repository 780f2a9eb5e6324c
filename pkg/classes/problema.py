"""
Problemas multivalorados: conjuntos de soluções, veredito e a classe base.

Os oráculos podem consultar a verdade de base dos nomes; sem ela, observam
os bits até o horizonte configurado (semântica limitada por estágio).
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
import logging
import random
from typing import Any, Callable, Dict, List, Optional, Tuple

from .erros import DecodingError, DivergenceError, DomainError
from .name import Continuacao, Name
from .pontos import Sequencia
from .transformador import Execucao
from utils.codificacao import (
    aproximacao_diadica,
    codificar_natural,
    codificar_real,
    codificar_sequencia,
    decodificar_natural,
    decodificar_real,
    index_of,
    inject_coproduct,
    inject_union,
    strip_coproduct,
    strip_union,
    tuple_names,
    untuple,
)

logger = logging.getLogger(__name__)

HORIZONTE_PADRAO = 192


@dataclass(frozen=True)
class Veredito:
    """
    Resultado de uma validação.

    Atributos:
        aceito (bool): Se o candidato pertence ao conjunto de soluções.
        motivo (str): Restrição violada, quando rejeitado.
        testemunha (Any): Valor decodificado que violou a restrição.
    """
    aceito: bool
    motivo: str = ""
    testemunha: Any = None

    def __bool__(self) -> bool:
        return self.aceito


ACEITO = Veredito(True)


def rejeitar(motivo: str, testemunha: Any = None) -> Veredito:
    return Veredito(False, motivo, testemunha)


# ------------------------------------------------------- conjuntos de soluções
class ConjuntoSolucao:
    """Conjunto de respostas válidas para uma instância observada."""

    def contem(self, candidato: Name, profundidade: int) -> Veredito:
        raise NotImplementedError

    def amostras(self, quantidade: int, rng: random.Random) -> List[Name]:
        raise NotImplementedError

    def representante(self) -> Name:
        raise NotImplementedError

    @property
    def discreto(self) -> bool:
        return False


@dataclass
class ConjuntoDiscreto(ConjuntoSolucao):
    """Respostas naturais; a validação é exata."""
    elementos: frozenset

    def __post_init__(self) -> None:
        if not self.elementos:
            raise DomainError("conjunto de soluções vazio")

    @property
    def discreto(self) -> bool:
        return True

    def contem(self, candidato, profundidade):
        try:
            n = decodificar_natural(candidato, profundidade)
        except DecodingError as erro:
            return rejeitar(f"resposta natural malformada: {erro}")
        if n not in self.elementos:
            return rejeitar(f"{n} fora de {sorted(self.elementos)}", n)
        return ACEITO

    def amostras(self, quantidade, rng):
        ordem = sorted(self.elementos)
        if len(ordem) > quantidade:
            ordem = sorted(rng.sample(ordem, quantidade))
        return [codificar_natural(n) for n in ordem]

    def representante(self):
        return codificar_natural(min(self.elementos))


def _variantes_reais(v: Fraction, quantidade: int, rng: random.Random) -> List[Name]:
    """Nomes distintos do mesmo real: grades, vieses e âncoras que trocam tarde."""
    nomes = [codificar_real(v)]
    fixas = [(1, -1, None), (2, 1, None), (0, 0, aproximacao_diadica(v, 6) + Fraction(1, 2 ** 9))]
    for deslocamento, vies, ancora in fixas:
        if len(nomes) >= quantidade:
            break
        nomes.append(codificar_real(v, deslocamento, vies, ancora))
    while len(nomes) < quantidade:
        nomes.append(codificar_real(v, rng.randrange(4), rng.choice((-1, 0, 1))))
    return nomes


@dataclass
class SegmentoSolucao(ConjuntoSolucao):
    """
    Intervalo fechado de reais [lo, hi]; None em um extremo o deixa ilimitado.

    O candidato é aceito se sua aproximação de profundidade d fica a menos de
    2^-d do intervalo.
    """
    lo: Optional[Fraction]
    hi: Optional[Fraction]

    def distancia(self, q: Fraction) -> Fraction:
        if self.lo is not None and q < self.lo:
            return self.lo - q
        if self.hi is not None and q > self.hi:
            return q - self.hi
        return Fraction(0)

    def contem(self, candidato, profundidade):
        try:
            q = decodificar_real(candidato, profundidade)
        except DecodingError as erro:
            return rejeitar(f"nome real malformado: {erro}")
        if self.distancia(q) >= Fraction(1, 2 ** profundidade):
            return rejeitar(f"aproximação {q} fora de [{self.lo}, {self.hi}]", q)
        return ACEITO

    def _pontos(self, quantidade: int, rng: random.Random) -> List[Fraction]:
        lo = self.lo if self.lo is not None else Fraction(-1 if self.hi is None else self.hi - 2)
        hi = self.hi if self.hi is not None else lo + 2
        cantos = [lo, hi, (lo + hi) / 2]
        sorteados = [lo + (hi - lo) * Fraction(rng.randrange(1025), 1024) for _ in range(8)]
        pontos: List[Fraction] = []
        for p in cantos + sorteados:
            if p not in pontos:
                pontos.append(p)
        return pontos[:max(quantidade, 3)]

    def amostras(self, quantidade, rng):
        if self.lo is not None and self.lo == self.hi:
            return _variantes_reais(self.lo, quantidade, rng)
        return [codificar_real(p, rng.randrange(3), rng.choice((-1, 0, 1))) for p in self._pontos(quantidade, rng)]

    def representante(self):
        if self.lo is not None and self.lo == self.hi:
            return codificar_real(self.lo)
        return codificar_real(self.lo if self.lo is not None else Fraction(0))


class PontoPreguicoso(ConjuntoSolucao):
    """
    Um único real conhecido por aproximações: aproximar(i) dista menos de 2^-i do ponto.
    """

    def __init__(self, aproximar: Callable[[int], Fraction], rotulo: str = "") -> None:
        self._aproximar = aproximar
        self._cache: Dict[int, Fraction] = {}
        self.rotulo = rotulo

    def aproximar(self, i: int) -> Fraction:
        if i not in self._cache:
            self._cache[i] = self._aproximar(i)
        return self._cache[i]

    def contem(self, candidato, profundidade):
        try:
            q = decodificar_real(candidato, profundidade)
        except DecodingError as erro:
            return rejeitar(f"nome real malformado: {erro}")
        v = self.aproximar(profundidade + 2)
        if abs(q - v) >= Fraction(1, 2 ** profundidade) + Fraction(1, 2 ** (profundidade + 2)):
            return rejeitar(f"aproximação {q} longe de {self.rotulo or 'ponto'} ≈ {v}", q)
        return ACEITO

    def nome(self, deslocamento: int = 0, vies: int = 0) -> Name:
        def segmento(j: int):
            if j % 2:
                return (1, 1)
            i = j // 2
            return (0, index_of(aproximacao_diadica(self.aproximar(i + 2), i, deslocamento, vies)))

        return Name(segmento, kind="real")

    def amostras(self, quantidade, rng):
        variantes = [(0, 0), (1, -1), (2, 1)]
        while len(variantes) < quantidade:
            variantes.append((rng.randrange(4), rng.choice((-1, 0, 1))))
        return [self.nome(d, v) for d, v in variantes[:max(quantidade, 1)]]

    def representante(self):
        return self.nome()


@dataclass
class ConjuntoCantor(ConjuntoSolucao):
    """Todo o espaço de Cantor (forcado None) ou a única sequência dada."""
    forcado: Optional[Name] = None

    def contem(self, candidato, profundidade):
        if self.forcado is None:
            return ACEITO
        for j in range(profundidade):
            if candidato.bit(j) != self.forcado.bit(j):
                return rejeitar(f"bit {j} difere da sequência forçada", j)
        return ACEITO

    def amostras(self, quantidade, rng):
        if self.forcado is not None:
            return [self.forcado]
        base = [Sequencia("", "0"), Sequencia("", "1"), Sequencia("", "01")]
        while len(base) < quantidade:
            prefixo = "".join(rng.choice("01") for _ in range(8))
            ciclo = "".join(rng.choice("01") for _ in range(rng.randrange(1, 4)))
            base.append(Sequencia(prefixo, ciclo))
        return [codificar_sequencia(s) for s in base[:max(quantidade, 1)]]

    def representante(self):
        return self.forcado if self.forcado is not None else codificar_sequencia(Sequencia("", "0"))


@dataclass
class ProdutoSolucoes(ConjuntoSolucao):
    """Produto: validação componente a componente."""
    partes: List[ConjuntoSolucao]

    @property
    def discreto(self) -> bool:
        return all(p.discreto for p in self.partes)

    def contem(self, candidato, profundidade):
        try:
            componentes = untuple(candidato, len(self.partes))
        except DecodingError as erro:
            return rejeitar(f"tupla malformada: {erro}")
        for i, (parte, componente) in enumerate(zip(self.partes, componentes)):
            veredito = parte.contem(componente, profundidade)
            if not veredito:
                return rejeitar(f"componente {i}: {veredito.motivo}", veredito.testemunha)
        return ACEITO

    def amostras(self, quantidade, rng):
        """Força bruta nas partes discretas, rodízio nas contínuas."""
        listas = [p.amostras(quantidade, rng) for p in self.partes]
        discretas = [i for i, p in enumerate(self.partes) if p.discreto]
        continuas = [i for i in range(len(self.partes)) if i not in discretas]
        rodadas = max([len(listas[i]) for i in continuas], default=1)
        resultado = []
        for escolha in product(*[listas[i] for i in discretas]):
            fixos = dict(zip(discretas, escolha))
            for r in range(rodadas):
                resultado.append(tuple_names([
                    fixos[i] if i in fixos else listas[i][r % len(listas[i])]
                    for i in range(len(self.partes))
                ]))
        return resultado

    def representante(self):
        return tuple_names([p.representante() for p in self.partes])


@dataclass
class MarcadoSolucoes(ConjuntoSolucao):
    """Respostas de ⊔ (tipo "uniao") ou ∐ (tipo "coproduto"): marca seguida da resposta interna."""
    tipo: str
    marca: int
    interno: ConjuntoSolucao

    @property
    def discreto(self) -> bool:
        return self.interno.discreto

    def _marcar(self, nome: Name) -> Name:
        return inject_union(self.marca, nome) if self.tipo == "uniao" else inject_coproduct(self.marca, nome)

    def contem(self, candidato, profundidade):
        try:
            marca, interno = strip_union(candidato) if self.tipo == "uniao" else strip_coproduct(candidato)
        except DecodingError as erro:
            return rejeitar(f"marca malformada: {erro}")
        if marca != self.marca:
            return rejeitar(f"marca {marca} difere da marca da instância {self.marca}", marca)
        return self.interno.contem(interno, profundidade)

    def amostras(self, quantidade, rng):
        return [self._marcar(n) for n in self.interno.amostras(quantidade, rng)]

    def representante(self):
        return self._marcar(self.interno.representante())


class ConjuntoEstrela(ConjuntoSolucao):
    """
    Respostas de f ⋆ g: pares (resposta de g, resposta de f).

    A instância de f é obtida executando o código anexado sobre a resposta
    de g e os nomes ligados.
    """

    def __init__(self, g: ConjuntoSolucao, f: "Problema", continuacao: Continuacao, orcamento: int) -> None:
        self.g = g
        self.f = f
        self.continuacao = continuacao
        self.orcamento = orcamento

    def instancia_f(self, resposta_g: Name) -> Name:
        execucao = Execucao(self.continuacao.programa, [resposta_g, *self.continuacao.ligadas], self.orcamento)
        return execucao.montar()

    def contem(self, candidato, profundidade):
        try:
            resposta_g, resposta_f = untuple(candidato, 2)
        except DecodingError as erro:
            return rejeitar(f"par malformado: {erro}")
        veredito = self.g.contem(resposta_g, profundidade)
        if not veredito:
            return rejeitar(f"primeiro estágio: {veredito.motivo}", veredito.testemunha)
        try:
            conjunto_f = self.f.solucoes(self.instancia_f(resposta_g))
        except (DomainError, DivergenceError) as erro:
            return rejeitar(f"código anexado não produziu instância válida: {erro}")
        veredito = conjunto_f.contem(resposta_f, profundidade)
        if not veredito:
            return rejeitar(f"segundo estágio: {veredito.motivo}", veredito.testemunha)
        return ACEITO

    def amostras(self, quantidade, rng):
        pares = []
        for resposta_g in self.g.amostras(quantidade, rng):
            conjunto_f = self.f.solucoes(self.instancia_f(resposta_g))
            for resposta_f in conjunto_f.amostras(quantidade, rng)[:max(1, quantidade // 2)]:
                pares.append(tuple_names([resposta_g, resposta_f]))
        return pares

    def representante(self):
        resposta_g = self.g.representante()
        return tuple_names([resposta_g, self.f.solucoes(self.instancia_f(resposta_g)).representante()])


# -------------------------------------------------------------- observação
def observar_primeiro_um(nome: Name, horizonte: int) -> Optional[int]:
    """Posição do primeiro 1; None se não há 1 (ou nenhum até o horizonte)."""
    if isinstance(nome.ground_truth, Sequencia):
        return nome.ground_truth.primeiro_um()
    return nome.seek(0, 1, horizonte)


def aproximador_real(nome: Name) -> Callable[[int], Fraction]:
    if isinstance(nome.ground_truth, (Fraction, int)):
        valor = Fraction(nome.ground_truth)
        return lambda i: valor
    return lambda i: decodificar_real(nome, i)


def observar_zero(nome: Name, horizonte: int) -> bool:
    """Real nulo: exato com verdade de base, senão |q_h| < 2^-h."""
    if isinstance(nome.ground_truth, (Fraction, int)):
        return nome.ground_truth == 0
    return abs(decodificar_real(nome, horizonte)) < Fraction(1, 2 ** horizonte)


def refinar_quociente(
    ax: Callable[[int], Fraction],
    ay: Callable[[int], Fraction],
    i: int,
    limitado: bool,
) -> Fraction:
    """
    Aproximação a menos de 2^-i de min(|x|,|y|)/|y| (limitado) ou de x/y.

    Supõe y ≠ 0; aumenta a precisão das entradas até o intervalo do quociente
    ficar estreito.
    """
    p = i + 2
    while p < i + 8192:
        intervalo = intervalo_quociente(ax(p), ay(p), Fraction(1, 2 ** p), limitado)
        if intervalo is not None and intervalo[1] - intervalo[0] < Fraction(1, 2 ** i):
            return (intervalo[0] + intervalo[1]) / 2
        p += 8
    raise DomainError("quociente não estabilizou: divisor indistinguível de zero")


def intervalo_quociente(
    qx: Fraction,
    qy: Fraction,
    e: Fraction,
    limitado: bool,
) -> Optional[Tuple[Fraction, Fraction]]:
    """Intervalo do quociente para x ∈ [qx ± e], y ∈ [qy ± e]; None se o divisor pode ser 0."""
    if abs(qy) - e <= 0:
        return None
    if limitado:
        xlo, xhi = max(Fraction(0), abs(qx) - e), abs(qx) + e
        ylo, yhi = abs(qy) - e, abs(qy) + e
        return min(xlo / yhi, Fraction(1)), min(xhi / ylo, Fraction(1))
    cantos = [a / b for a in (qx - e, qx + e) for b in (qy - e, qy + e)]
    return min(cantos), max(cantos)


# ------------------------------------------------------------------ problema
class Problema:
    """
    Problema multivalorado: domínio de instâncias, oráculo, validador e amostrador.

    Subclasses implementam `solucoes` (o conjunto de respostas válidas para
    uma instância) e `gerar` (instância a partir de um descritor).

    Atributos:
        identificador (str): Nome do problema (LPO, rDiv, ...).
        espaco_instancia (Any): Descritor do espaço das instâncias.
        espaco_resposta (Any): Descritor do espaço das respostas.
        horizonte (int): Bits, blocos, slots ou níveis observados sem verdade de base.
        orcamento (int): Orçamento de passos para códigos anexados.
        dominio_bom (Any): Sequência densa do domínio, quando declarada.
    """

    identificador = "problema"
    espaco_instancia: Any = "cantor"
    espaco_resposta: Any = "cantor"

    def __init__(self, horizonte: int = HORIZONTE_PADRAO, orcamento: int = 10 ** 6) -> None:
        self.horizonte = horizonte
        self.orcamento = orcamento
        self.dominio_bom: Any = None

    def solucoes(self, instancia: Name) -> ConjuntoSolucao:
        raise NotImplementedError

    def solve(self, instancia: Name) -> Name:
        conjunto = self.solucoes(instancia)
        logger.debug("[ORACULO] %s resolve %r", self.identificador, instancia)
        return conjunto.representante()

    def validate(self, instancia: Name, candidato: Name, depth: int = 20) -> Veredito:
        try:
            return self.solucoes(instancia).contem(candidato, depth)
        except DecodingError as erro:
            return rejeitar(f"candidato ilegível: {erro}")

    def sample(self, instancia: Name, count: int, seed: int = 0) -> List[Name]:
        if count < 1:
            raise ValueError("count deve ser ≥ 1")
        return self.solucoes(instancia).amostras(count, random.Random(seed))

    def gerar(self, descritor: Dict[str, Any], rng: random.Random) -> Name:
        raise NotImplementedError

    def descritores(self, tamanho: int, rng: random.Random) -> List[Dict[str, Any]]:
        """Descritores do corpus padrão do problema."""
        raise NotImplementedError

    def __repr__(self) -> str:
        return self.identificador
