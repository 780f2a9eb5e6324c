"""
Os princípios como oráculos: LPO, LLPO (nas duas formas), C_fin(n), AoUC em
[0,1] e em Cantor, rDiv, ubrDiv, DependentCut e a identidade; geração de
instâncias e corpus.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import count
import logging
import random
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from classes.erros import DecodingError, DomainError, GenerationError
from classes.name import Name
from classes.pontos import ArvoreAou, ConjuntoFechado, ConjuntoFinito, Restante, Sequencia
from classes.problema import (
    HORIZONTE_PADRAO,
    ConjuntoCantor,
    ConjuntoDiscreto,
    ConjuntoSolucao,
    PontoPreguicoso,
    Problema,
    SegmentoSolucao,
    aproximador_real,
    observar_primeiro_um,
    observar_zero,
    refinar_quociente,
)
from classes.transformador import Emitir
from utils.codificacao import (
    bola_intervalo,
    codificar_arvore,
    codificar_conjunto_finito,
    codificar_fechado,
    codificar_real,
    codificar_sequencia,
    codigo_bola,
    decodificar_conjunto_finito,
    deslocar,
    ler_slots,
    nivel_da_arvore,
    tuple_names,
    untuple,
)

logger = logging.getLogger(__name__)


# ------------------------------------------------------------ descritores
def _racional(valor: Any, campo: str) -> Fraction:
    try:
        return Fraction(str(valor))
    except (ValueError, ZeroDivisionError) as erro:
        raise GenerationError(f"campo {campo!r}: racional inválido {valor!r}") from erro


def _inteiro(valor: Any, campo: str, rng: random.Random) -> int:
    """Inteiro fixo ou sorteado de uma faixa [lo, hi]."""
    if isinstance(valor, (list, tuple)):
        if len(valor) != 2 or valor[0] > valor[1]:
            raise GenerationError(f"campo {campo!r}: faixa inválida {valor!r}")
        return rng.randint(int(valor[0]), int(valor[1]))
    if not isinstance(valor, int) or valor < 0:
        raise GenerationError(f"campo {campo!r}: esperado natural, recebido {valor!r}")
    return valor


def _sequencia(descritor: Dict[str, Any], rng: random.Random) -> Sequencia:
    """0^n 1 seguido de uma cauda; primeiro_um None dá 0^ω."""
    n = descritor.get("primeiro_um")
    if n is None:
        return Sequencia("", "0")
    n = _inteiro(n, "primeiro_um", rng)
    cauda = descritor.get("cauda")
    if cauda is None:
        cauda = "".join(rng.choice("01") for _ in range(rng.randrange(0, 6)))
    ciclo = descritor.get("ciclo", rng.choice(["0", "1", "01", "10"]))
    return Sequencia("0" * n + "1" + cauda, ciclo)


def _ponto_sorteado(rng: random.Random) -> Fraction:
    if rng.random() < 0.5:
        return Fraction(rng.randrange(0, 2 ** 12 + 1), 2 ** 12)
    q = rng.randrange(1, 60)
    return Fraction(rng.randrange(0, q + 1), q)


# ------------------------------------------------------------- observações
def observar_fechado(nome: Name, horizonte: int) -> ConjuntoSolucao:
    """
    Conjunto de respostas de AoUC_[0,1] para um nome de fechado.

    Sem verdade de base: nenhuma bola em `horizonte` slots significa [0,1];
    caso contrário o ponto é aproximado lendo slots até o casco estreitar.
    """
    verdade = nome.ground_truth
    if isinstance(verdade, ConjuntoFechado):
        if verdade.cheio:
            return SegmentoSolucao(Fraction(0), Fraction(1))
        return SegmentoSolucao(verdade.ponto, verdade.ponto)
    restante = Restante()
    estado = {"posicao": 0, "lidos": 0, "bolas": 0}

    def ler_slot() -> None:
        try:
            (slot,), estado["posicao"] = ler_slots(nome, 1, estado["posicao"])
        except DecodingError as erro:
            raise DomainError(f"nome de fechado malformado: {erro}") from erro
        estado["lidos"] += 1
        if slot is not None:
            estado["bolas"] += 1
            restante.remover(*slot)
            if restante.vazio:
                raise DomainError("as bolas cobrem [0,1]: fechado vazio")

    while estado["lidos"] < horizonte and estado["bolas"] == 0:
        ler_slot()
    if estado["bolas"] == 0:
        return SegmentoSolucao(Fraction(0), Fraction(1))

    def aproximar(i: int) -> Fraction:
        limite = estado["lidos"] + 16 * horizonte
        while restante.largura() >= Fraction(1, 2 ** i):
            if estado["lidos"] >= limite:
                raise DomainError("fechado nem cheio nem unitário no horizonte observado")
            ler_slot()
        lo, hi = restante.casco()
        return (lo + hi) / 2

    return PontoPreguicoso(aproximar, "ponto do fechado")


def observar_arvore(nome: Name, horizonte: int) -> ConjuntoSolucao:
    """Caminhos de uma árvore a.o.u.: todos, ou o único caminho infinito."""
    verdade = nome.ground_truth
    if isinstance(verdade, ArvoreAou):
        if verdade.cheia:
            return ConjuntoCantor(None)
        return ConjuntoCantor(codificar_sequencia(verdade.caminho))
    niveis = min(horizonte, 64)
    colapso: Optional[Tuple[int, str]] = None
    try:
        for n in range(niveis + 1):
            no = nivel_da_arvore(nome, n)
            if no is None and colapso is not None:
                raise DomainError(f"nível {n} cheio depois do colapso no nível {colapso[0]}")
            if no is not None:
                if colapso is not None and not no.startswith(colapso[1]):
                    raise DomainError(f"nível {n} não estende o nó do nível anterior")
                colapso = (n, no)
    except DecodingError as erro:
        raise DomainError(f"árvore inválida: {erro}") from erro
    if colapso is None:
        return ConjuntoCantor(None)
    nivel_colapso, no_colapso = colapso

    def segmento(j: int):
        if j < len(no_colapso):
            return (int(no_colapso[j]), 1)
        try:
            no = nivel_da_arvore(nome, j + 1)
        except DecodingError as erro:
            raise DomainError(f"árvore inválida: {erro}") from erro
        if no is None:
            raise DomainError(f"nível {j + 1} cheio depois do colapso")
        return (int(no[j]), 1)

    logger.debug("[ORACULO] árvore colapsa no nível %d", nivel_colapso)
    return ConjuntoCantor(Name(segmento, kind="cantor"))


# ------------------------------------------------------------------ LPO/LLPO
class LPO(Problema):
    identificador = "LPO"
    espaco_instancia = "cantor"
    espaco_resposta = "nat"

    def solucoes(self, instancia):
        primeiro = observar_primeiro_um(instancia, self.horizonte)
        return ConjuntoDiscreto(frozenset({1 if primeiro is None else 0}))

    def gerar(self, descritor, rng):
        return codificar_sequencia(_sequencia(descritor, rng))

    def descritores(self, tamanho, rng):
        fixos = [{"primeiro_um": None}, {"primeiro_um": 1, "cauda": "", "ciclo": "0"}, {"primeiro_um": 0}]
        return (fixos + [
            {"primeiro_um": None} if rng.random() < 0.25 else {"primeiro_um": [0, 48]}
            for _ in range(tamanho)
        ])[:tamanho]


class LLPO(LPO):
    """Paridade da posição do primeiro 1; em 0^ω as duas respostas valem."""
    identificador = "LLPO"

    def solucoes(self, instancia):
        primeiro = observar_primeiro_um(instancia, self.horizonte)
        if primeiro is None:
            return ConjuntoDiscreto(frozenset({0, 1}))
        return ConjuntoDiscreto(frozenset({primeiro % 2}))


class LLPOR2(Problema):
    """
    LLPO sobre ℝ²: 0 vale se x = 0 ou x ≠ 0 ≠ y; 1 vale se y = 0 ou x ≠ 0 ≠ y.
    """
    identificador = "LLPO_R2"
    espaco_instancia = ("real", "real")
    espaco_resposta = "nat"

    def solucoes(self, instancia):
        try:
            x, y = untuple(instancia, 2)
        except DecodingError as erro:
            raise DomainError(f"instância de LLPO_R2 não é um par: {erro}") from erro
        zx, zy = observar_zero(x, self.horizonte), observar_zero(y, self.horizonte)
        validos = set()
        if zx or not zy:
            validos.add(0)
        if zy or not zx:
            validos.add(1)
        return ConjuntoDiscreto(frozenset(validos))

    def gerar(self, descritor, rng):
        x = _racional(descritor.get("x", 0), "x")
        y = _racional(descritor.get("y", 0), "y")
        return tuple_names([codificar_real(x), codificar_real(y)])

    def descritores(self, tamanho, rng):
        fixos = [{"x": 0, "y": 0}, {"x": "1/3", "y": 0}, {"x": 0, "y": "-2/5"}, {"x": "1/2", "y": "1/4"}]
        sorteados = []
        for _ in range(tamanho):
            x = 0 if rng.random() < 0.4 else _ponto_sorteado(rng) - Fraction(1, 2)
            y = 0 if rng.random() < 0.4 else _ponto_sorteado(rng) - Fraction(1, 2)
            sorteados.append({"x": str(x), "y": str(y)})
        return (fixos + sorteados)[:tamanho]


# ------------------------------------------------------------------- C_fin
class CFin(Problema):
    """Escolha fechada em {0, ..., n}: qualquer elemento do conjunto não vazio A."""

    espaco_resposta = "nat"

    def __init__(self, n: int, horizonte: int = HORIZONTE_PADRAO, orcamento: int = 10 ** 6) -> None:
        super().__init__(horizonte, orcamento)
        if n < 0:
            raise ValueError("C_fin exige n ≥ 0")
        self.n = n
        self.identificador = f"C_fin({n})"
        self.espaco_instancia = f"finito:{n}"

    def solucoes(self, instancia):
        verdade = instancia.ground_truth
        if isinstance(verdade, ConjuntoFinito):
            elementos = verdade.elementos
        else:
            elementos = decodificar_conjunto_finito(instancia, self.n, 64 * self.horizonte).elementos
        if not elementos:
            raise DomainError(f"{self.identificador}: conjunto vazio")
        return ConjuntoDiscreto(frozenset(elementos))

    def gerar(self, descritor, rng):
        elementos = descritor.get("elementos")
        if elementos is None:
            elementos = [k for k in range(self.n + 1) if rng.random() < 0.5] or [rng.randrange(self.n + 1)]
        elementos = frozenset(int(k) for k in elementos)
        if not elementos:
            raise GenerationError("C_fin: conjunto vazio fora do domínio")
        if any(k < 0 or k > self.n for k in elementos):
            raise GenerationError(f"C_fin: elementos fora de {{0..{self.n}}}")
        return codificar_conjunto_finito(ConjuntoFinito(elementos, self.n))

    def descritores(self, tamanho, rng):
        fixos = [{"elementos": list(range(self.n + 1))}] + [{"elementos": [k]} for k in range(self.n + 1)]
        return (fixos + [{} for _ in range(tamanho)])[:tamanho]


# -------------------------------------------------------------------- AoUC
class DominioBom:
    """
    Sequência densa do domínio de AoUC_[0,1], agindo sobre enumerações.

    `elemento(n)` é uma lista finita de slots que deixa resto não vazio;
    `completar` estende qualquer prefixo comprometido a um nome do domínio:
    só passagens se nenhuma bola foi escrita, senão o colapso sobre o
    extremo esquerdo do primeiro intervalo que resta.
    """

    def elemento(self, n: int) -> List[Optional[Tuple[Fraction, Fraction]]]:
        if n == 0:
            return []
        m = n.bit_length()
        a = Fraction(2 * (n - 2 ** (m - 1)) + 1, 2 ** m)
        return [bola_intervalo(Fraction(-1), a - Fraction(1, 2 ** (m + 1)))]

    @staticmethod
    def resto(slots: Sequence[Optional[Tuple[Fraction, Fraction]]]) -> Restante:
        restante = Restante()
        for slot in slots:
            if slot is not None:
                restante.remover(*slot)
        return restante

    def ponto_de_completamento(self, restante: Restante) -> Fraction:
        if restante.vazio:
            raise DomainError("prefixo comprometido já cobre [0,1]")
        return restante.intervalos[0][0]

    def completar(self, slots: Sequence[Optional[Tuple[Fraction, Fraction]]], canal: Any = 0):
        """Corpo de programa que continua o nome depois dos slots já escritos."""
        if all(slot is None for slot in slots):
            yield Emitir(1, None, canal)
            return
        a = self.ponto_de_completamento(self.resto(slots))
        for t in count():
            delta = Fraction(1, 2 ** (t + 1))
            for centro, raio in (bola_intervalo(Fraction(-1), a - delta), bola_intervalo(a + delta, Fraction(2))):
                yield Emitir(0, codigo_bola(centro, raio), canal)
                yield Emitir(1, 1, canal)

    def nome(self, n: int) -> Name:
        """O n-ésimo elemento da sequência densa, já completado."""
        slots = self.elemento(n)
        cabeca = []
        for centro, raio in slots:
            cabeca += [(0, codigo_bola(centro, raio)), (1, 1)]
        if not slots:
            return Name(lambda j: (1, None), kind="fechado", ground_truth=ConjuntoFechado())
        a = self.ponto_de_completamento(self.resto(slots))

        def segmento(j: int):
            if j < len(cabeca):
                return cabeca[j]
            j -= len(cabeca)
            t, resto = divmod(j, 4)
            delta = Fraction(1, 2 ** (t + 1))
            bolas = (bola_intervalo(Fraction(-1), a - delta), bola_intervalo(a + delta, Fraction(2)))
            if resto % 2:
                return (1, 1)
            return (0, codigo_bola(*bolas[resto // 2]))

        return Name(segmento, kind="fechado", ground_truth=ConjuntoFechado(a, 0))


class AoUCUnit(Problema):
    """Escolha tudo-ou-único em [0,1]: o fechado é [0,1] inteiro ou um ponto."""
    identificador = "AoUC_unit"
    espaco_instancia = "fechado"
    espaco_resposta = "real"

    def __init__(self, horizonte: int = HORIZONTE_PADRAO, orcamento: int = 10 ** 6) -> None:
        super().__init__(horizonte, orcamento)
        self.dominio_bom = DominioBom()

    def solucoes(self, instancia):
        return observar_fechado(instancia, self.horizonte)

    def gerar(self, descritor, rng):
        if descritor.get("cheio"):
            if "ponto" in descritor or "colapso" in descritor:
                raise GenerationError("AoUC_unit: instância cheia não tem ponto nem colapso")
            return codificar_fechado(ConjuntoFechado())
        ponto = descritor.get("ponto", "aleatorio")
        z = _ponto_sorteado(rng) if ponto == "aleatorio" else _racional(ponto, "ponto")
        if not 0 <= z <= 1:
            raise GenerationError(f"AoUC_unit: ponto {z} fora de [0,1]")
        estagio = _inteiro(descritor.get("colapso", 0), "colapso", rng)
        return codificar_fechado(ConjuntoFechado(z, estagio))

    def descritores(self, tamanho, rng):
        fixos = [
            {"cheio": True},
            {"colapso": 0, "ponto": "0"},
            {"colapso": 32, "ponto": "1"},
            {"colapso": 12, "ponto": "1/3"},
            {"colapso": 7, "ponto": "5/8"},
        ]
        sorteados = [
            {"cheio": True} if rng.random() < 0.2 else {"colapso": [0, 32], "ponto": "aleatorio"}
            for _ in range(tamanho)
        ]
        return (fixos + sorteados)[:tamanho]


class AoUCCantor(Problema):
    """Escolha tudo-ou-único em Cantor, com instâncias dadas por árvores a.o.u."""
    identificador = "AoUC_cantor"
    espaco_instancia = "arvore"
    espaco_resposta = "cantor"

    def solucoes(self, instancia):
        return observar_arvore(instancia, self.horizonte)

    def gerar(self, descritor, rng):
        if descritor.get("cheia"):
            if "colapso" in descritor:
                raise GenerationError("AoUC_cantor: árvore cheia não colapsa")
            return codificar_arvore(ArvoreAou())
        estagio = _inteiro(descritor.get("colapso", 0), "colapso", rng)
        caminho = descritor.get("caminho")
        if caminho is None:
            caminho = "".join(rng.choice("01") for _ in range(estagio + 4))
        ciclo = descritor.get("ciclo", rng.choice(["0", "1", "01"]))
        return codificar_arvore(ArvoreAou(estagio, Sequencia(caminho, ciclo)))

    def descritores(self, tamanho, rng):
        fixos = [{"cheia": True}, {"colapso": 0, "caminho": "", "ciclo": "0"}, {"colapso": 5, "caminho": "10110"}]
        sorteados = [{"cheia": True} if rng.random() < 0.2 else {"colapso": [0, 24]} for _ in range(tamanho)]
        return (fixos + sorteados)[:tamanho]


# -------------------------------------------------------------------- rDiv
class RDiv(Problema):
    """Divisão robusta: min{|x|,|y|}/|y| se y ≠ 0; qualquer ponto de [0,1] se y = 0."""
    identificador = "rDiv"
    espaco_instancia = ("real", "real")
    espaco_resposta = "real"
    limitado = True

    def _par(self, instancia: Name) -> Tuple[Name, Name]:
        try:
            return tuple(untuple(instancia, 2))
        except DecodingError as erro:
            raise DomainError(f"instância de {self.identificador} não é um par: {erro}") from erro

    def _sem_divisor(self) -> ConjuntoSolucao:
        return SegmentoSolucao(Fraction(0), Fraction(1))

    def _quociente(self, x: Fraction, y: Fraction) -> Fraction:
        return min(abs(x), abs(y)) / abs(y)

    def solucoes(self, instancia):
        x, y = self._par(instancia)
        if isinstance(x.ground_truth, (Fraction, int)) and isinstance(y.ground_truth, (Fraction, int)):
            if y.ground_truth == 0:
                return self._sem_divisor()
            v = self._quociente(Fraction(x.ground_truth), Fraction(y.ground_truth))
            return SegmentoSolucao(v, v)
        if observar_zero(y, self.horizonte):
            return self._sem_divisor()
        ax, ay = aproximador_real(x), aproximador_real(y)
        return PontoPreguicoso(lambda i: refinar_quociente(ax, ay, i, self.limitado), "quociente")

    def gerar(self, descritor, rng):
        x = _racional(descritor.get("x", 0), "x")
        y = _racional(descritor.get("y", 0), "y")
        if not 0 <= x <= y:
            raise GenerationError(f"rDiv normalizado exige 0 ≤ x ≤ y, recebido x={x}, y={y}")
        return tuple_names([codificar_real(x), codificar_real(y)])

    def descritores(self, tamanho, rng):
        fixos = [
            {"x": 0, "y": 0},
            {"x": "1/2", "y": "1"},
            {"x": 1, "y": 2},
            {"x": str(Fraction(1, 2 ** 41)), "y": str(Fraction(1, 2 ** 40))},
            {"x": "999/1000", "y": "1"},
            {"x": 0, "y": "1/7"},
        ]
        sorteados = []
        for _ in range(tamanho):
            if rng.random() < 0.2:
                sorteados.append({"x": 0, "y": 0})
                continue
            y = _ponto_sorteado(rng) or Fraction(1, 2 ** rng.randrange(1, 41))
            sorteados.append({"x": str(y * _ponto_sorteado(rng)), "y": str(y)})
        return (fixos + sorteados)[:tamanho]


class UbrDiv(RDiv):
    """Divisão sem limite: x/y se y ≠ 0; qualquer real se y = 0."""
    identificador = "ubrDiv"
    limitado = False

    def _sem_divisor(self):
        return SegmentoSolucao(None, None)

    def _quociente(self, x, y):
        return x / y

    def gerar(self, descritor, rng):
        x = _racional(descritor.get("x", 0), "x")
        y = _racional(descritor.get("y", 0), "y")
        return tuple_names([codificar_real(x), codificar_real(y)])

    def descritores(self, tamanho, rng):
        fixos = [{"x": 0, "y": 0}, {"x": 3, "y": "1/2"}, {"x": "-5/3", "y": "1/3"}, {"x": "1/3", "y": 0}]
        sorteados = []
        for _ in range(tamanho):
            y = 0 if rng.random() < 0.25 else _ponto_sorteado(rng) - Fraction(1, 2)
            x = (_ponto_sorteado(rng) - Fraction(1, 2)) * 8
            sorteados.append({"x": str(x), "y": str(y)})
        return (fixos + sorteados)[:tamanho]


# ----------------------------------------------------------- DependentCut
class DependentCut(Problema):
    """DependentCut(0^n 1 p) = {p}; DependentCut(0^ω) = todo o espaço de Cantor."""
    identificador = "DependentCut"
    espaco_instancia = "cantor"
    espaco_resposta = "cantor"

    def solucoes(self, instancia):
        primeiro = observar_primeiro_um(instancia, self.horizonte)
        if primeiro is None:
            return ConjuntoCantor(None)
        return ConjuntoCantor(deslocar(instancia, primeiro + 1))

    def gerar(self, descritor, rng):
        return codificar_sequencia(_sequencia(descritor, rng))

    def descritores(self, tamanho, rng):
        fixos = [{"primeiro_um": None}, {"primeiro_um": 0, "cauda": "", "ciclo": "1"}, {"primeiro_um": 3}]
        sorteados = [{"primeiro_um": None} if rng.random() < 0.2 else {"primeiro_um": [0, 32]} for _ in range(tamanho)]
        return (fixos + sorteados)[:tamanho]


class Identidade(Problema):
    """id no espaço de Cantor (f^0)."""
    identificador = "Identidade"
    espaco_instancia = "cantor"
    espaco_resposta = "cantor"

    def solucoes(self, instancia):
        return ConjuntoCantor(instancia)

    def gerar(self, descritor, rng):
        prefixo = descritor.get("prefixo")
        if prefixo is None:
            prefixo = "".join(rng.choice("01") for _ in range(12))
        return codificar_sequencia(Sequencia(prefixo, descritor.get("ciclo", "01")))

    def descritores(self, tamanho, rng):
        return [{} for _ in range(tamanho)]


# ---------------------------------------------------------------- registro
def problema(identificador: str, horizonte: int = HORIZONTE_PADRAO, orcamento: int = 10 ** 6) -> Problema:
    """Problema base pelo nome; C_fin(n) aceita o parâmetro entre parênteses."""
    fabricas = {
        "LPO": LPO,
        "LLPO": LLPO,
        "LLPO_R2": LLPOR2,
        "AoUC_unit": AoUCUnit,
        "AoUC_cantor": AoUCCantor,
        "rDiv": RDiv,
        "ubrDiv": UbrDiv,
        "DependentCut": DependentCut,
        "Identidade": Identidade,
    }
    if identificador.startswith("C_fin(") and identificador.endswith(")"):
        return CFin(int(identificador[6:-1]), horizonte, orcamento)
    if identificador not in fabricas:
        raise KeyError(f"problema desconhecido {identificador!r}")
    return fabricas[identificador](horizonte, orcamento)


def solve(prob: Problema, instancia: Name) -> Name:
    return prob.solve(instancia)


def validate(prob: Problema, instancia: Name, candidato: Name, depth: int = 20):
    return prob.validate(instancia, candidato, depth)


def sample_realizer_outputs(prob: Problema, instancia: Name, count: int, seed: int = 0) -> List[Name]:
    return prob.sample(instancia, count, seed)


def generate_instance(prob: Problema, descritor: Dict[str, Any], seed: int = 0) -> Name:
    """Instância determinística em (descritor, semente), com verdade de base."""
    return prob.gerar(dict(descritor), random.Random(seed))


# ------------------------------------------------------------------- corpus
@dataclass
class EntradaCorpus:
    """
    Instância de um corpus, regenerável a partir de (descritor, semente).

    Atributos:
        problema (str): Identificador do problema.
        descritor (Dict[str, Any]): Descritor de geração.
        semente (int): Semente da geração.
        nome (Name): Instância gerada.
    """
    problema: str
    descritor: Dict[str, Any]
    semente: int
    nome: Name

    def para_json(self) -> Dict[str, Any]:
        return {
            "problem": self.problema,
            "spec": self.descritor,
            "seed": self.semente,
            "ground_truth": descrever_verdade(self.nome.ground_truth),
        }


def descrever_verdade(verdade: Any) -> Any:
    """Forma JSON da verdade de base (cache; o descritor é a fonte normativa)."""
    if isinstance(verdade, Fraction):
        return str(verdade)
    if isinstance(verdade, tuple):
        return [descrever_verdade(v) for v in verdade]
    if isinstance(verdade, Sequencia):
        return {"prefixo": verdade.prefixo, "ciclo": verdade.ciclo}
    if isinstance(verdade, ConjuntoFinito):
        return {"elementos": sorted(verdade.elementos), "n": verdade.n}
    if isinstance(verdade, ConjuntoFechado):
        return {"cheio": True} if verdade.cheio else {"ponto": str(verdade.ponto), "estagio": verdade.estagio}
    if isinstance(verdade, ArvoreAou):
        if verdade.cheia:
            return {"cheia": True}
        return {"colapso": verdade.estagio_colapso, "caminho": descrever_verdade(verdade.caminho)}
    return verdade


def gerar_corpus(
    prob: Problema,
    tamanho: int,
    semente: int = 0,
    descritores: Optional[Callable[[int, random.Random], List[Dict[str, Any]]]] = None,
) -> List[EntradaCorpus]:
    """Corpus semeado; `descritores` substitui o corpus padrão do problema."""
    if tamanho < 1:
        raise ValueError("o corpus precisa de ao menos uma instância")
    rng = random.Random(semente)
    fonte = descritores or prob.descritores
    entradas = []
    for i, descritor in enumerate(fonte(tamanho, rng)):
        semente_i = semente * 1_000_003 + i
        entradas.append(EntradaCorpus(prob.identificador, descritor, semente_i, generate_instance(prob, descritor, semente_i)))
    return entradas
