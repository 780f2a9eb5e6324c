"""
Álgebra dos graus: ×, ⊔, ∐, *, f^n, ⋆ e f^(n), mais a biblioteca de
códigos anexados usados nas instâncias de f ⋆ g.
"""
from fractions import Fraction
from itertools import count
import logging
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from classes.erros import DomainError, GenerationError
from classes.name import Continuacao, Name
from classes.problema import ConjuntoEstrela, MarcadoSolucoes, Problema, ProdutoSolucoes
from classes.transformador import DefinirCodigo, Emitir, Programa, folhas, intercalar
from utils.codificacao import (
    aproximacao_diadica,
    inject_coproduct,
    inject_union,
    strip_coproduct,
    strip_union,
    tuple_names,
    untuple,
)
from utils.leitores import (
    LeitorBlocos,
    LeitorReal,
    copiar_fita,
    escrever_bloco_real,
    escrever_colapso,
    escrever_passagem,
    forma_do_espaco,
)
from utils.principios import LPO, AoUCUnit, Identidade, RDiv, problema

logger = logging.getLogger(__name__)


# ------------------------------------------------------------------ produto
class Produto(Problema):
    """f_0 × ... × f_{n-1}: instâncias e respostas em tupla, validação componente a componente."""

    def __init__(self, fatores: Sequence[Problema], identificador: Optional[str] = None) -> None:
        if not fatores:
            raise ValueError("produto exige ao menos um fator")
        super().__init__(fatores[0].horizonte, fatores[0].orcamento)
        self.fatores = list(fatores)
        self.identificador = identificador or " × ".join(f.identificador for f in self.fatores)
        self.espaco_instancia = tuple(f.espaco_instancia for f in self.fatores)
        self.espaco_resposta = tuple(f.espaco_resposta for f in self.fatores)

    def solucoes(self, instancia):
        try:
            componentes = untuple(instancia, len(self.fatores))
        except Exception as erro:
            raise DomainError(f"{self.identificador}: instância não é tupla: {erro}") from erro
        return ProdutoSolucoes([f.solucoes(c) for f, c in zip(self.fatores, componentes)])

    def gerar(self, descritor, rng):
        partes = descritor.get("fatores")
        if partes is None or len(partes) != len(self.fatores):
            raise GenerationError(f"{self.identificador}: descritor precisa de {len(self.fatores)} fatores")
        return tuple_names([f.gerar(d, rng) for f, d in zip(self.fatores, partes)])

    def descritores(self, tamanho, rng):
        listas = [f.descritores(tamanho, rng) for f in self.fatores]
        return [{"fatores": list(d)} for d in zip(*listas)]


def potencia(f: Problema, n: int) -> Problema:
    """f^0 = id, f^n = f × ... × f."""
    if n < 0:
        raise ValueError("expoente negativo")
    if n == 0:
        return Identidade(f.horizonte, f.orcamento)
    return Produto([f] * n, f"{f.identificador}^{n}")


# ------------------------------------------------------------ ⊔ e ∐
class Uniao(Problema):
    """f_0 ⊔ f_1: a instância começa pela marca; a resposta carrega a mesma marca."""

    def __init__(self, f0: Problema, f1: Problema) -> None:
        super().__init__(f0.horizonte, f0.orcamento)
        self.partes = (f0, f1)
        self.identificador = f"{f0.identificador} ⊔ {f1.identificador}"
        self.espaco_instancia = ("uniao", f0.espaco_instancia, f1.espaco_instancia)

    def solucoes(self, instancia):
        marca, interno = strip_union(instancia)
        return MarcadoSolucoes("uniao", marca, self.partes[marca].solucoes(interno))

    def gerar(self, descritor, rng):
        marca = descritor.get("marca", rng.randrange(2))
        if marca not in (0, 1):
            raise GenerationError(f"marca de união inválida {marca!r}")
        return inject_union(marca, self.partes[marca].gerar(descritor.get("instancia", {}), rng))

    def descritores(self, tamanho, rng):
        listas = [p.descritores(tamanho, rng) for p in self.partes]
        return [{"marca": i % 2, "instancia": listas[i % 2][i]} for i in range(tamanho)]


class Coproduto(Problema):
    """∐_n f_n: a instância começa por 0^n 1."""

    def __init__(self, familia: Callable[[int], Problema], identificador: str, maximo: int = 4) -> None:
        base = familia(0)
        super().__init__(base.horizonte, base.orcamento)
        self.familia = familia
        self.identificador = identificador
        self.maximo = maximo
        self._cache: Dict[int, Problema] = {}

    def membro(self, n: int) -> Problema:
        if n not in self._cache:
            self._cache[n] = self.familia(n)
        return self._cache[n]

    def solucoes(self, instancia):
        n, interno = strip_coproduct(instancia)
        return MarcadoSolucoes("coproduto", n, self.membro(n).solucoes(interno))

    def gerar(self, descritor, rng):
        n = descritor.get("indice", rng.randrange(self.maximo + 1))
        if not isinstance(n, int) or n < 0:
            raise GenerationError(f"índice de coproduto inválido {n!r}")
        return inject_coproduct(n, self.membro(n).gerar(descritor.get("instancia", {}), rng))

    def descritores(self, tamanho, rng):
        resultado = []
        for i in range(tamanho):
            n = i % (self.maximo + 1)
            resultado.append({"indice": n, "instancia": self.membro(n).descritores(1, rng)[0]})
        return resultado


def estrela_finita(f: Problema) -> Problema:
    """f* = ∐_n f^n."""
    return Coproduto(lambda n: potencia(f, n), f"{f.identificador}*")


# --------------------------------------------------------------------- ⋆
def instancia_estrela(instancia_g: Name, programa: Programa, ligadas: Sequence[Name] = ()) -> Name:
    """Instância de f ⋆ g: a instância de g mais o código que leva respostas de g a instâncias de f."""
    return Name(
        components=[instancia_g],
        kind="estrela",
        ground_truth=(instancia_g.ground_truth, programa.nome),
        continuacao=Continuacao(programa, tuple(ligadas)),
    )


def partes_estrela(instancia: Name) -> Tuple[Name, Continuacao]:
    if instancia.components is None or len(instancia.components) != 1 or instancia.continuacao is None:
        raise DomainError("instância de f ⋆ g sem a forma (instância de g, código)")
    return instancia.components[0], instancia.continuacao


class Composicional(Problema):
    """
    f ⋆ g: resolve g, aplica o código anexado à resposta e resolve f.

    A resposta é o par (resposta de g, resposta de f).
    """

    def __init__(self, f: Problema, g: Problema) -> None:
        super().__init__(g.horizonte, g.orcamento)
        self.f = f
        self.g = g
        self.identificador = f"({f.identificador}) ⋆ ({g.identificador})"
        self.espaco_instancia = ("estrela", g.espaco_instancia)
        self.espaco_resposta = (g.espaco_resposta, f.espaco_resposta)

    def solucoes(self, instancia):
        instancia_g, continuacao = partes_estrela(instancia)
        return ConjuntoEstrela(self.g.solucoes(instancia_g), self.f, continuacao, self.orcamento)

    def gerar(self, descritor, rng):
        nome = descritor.get("continuacao")
        if nome is None:
            nome = rng.choice(continuacoes_compativeis(self.f, self.g))
        if nome not in continuacoes_compativeis(self.f, self.g):
            raise GenerationError(f"código {nome!r} não leva respostas de {self.g} a instâncias de {self.f}")
        instancia_g = self.g.gerar(descritor.get("g", {}), rng)
        return instancia_estrela(instancia_g, continuacao(nome, self.f, self.g))

    def descritores(self, tamanho, rng):
        nomes = continuacoes_compativeis(self.f, self.g)
        return [
            {"g": d, "continuacao": nomes[i % len(nomes)]}
            for i, d in enumerate(self.g.descritores(tamanho, rng))
        ]


def iterado(f: Problema, n: int) -> Problema:
    """f^(0) = id, f^(1) = f e f^(n+1) = f^(n) ⋆ f para n ≥ 1."""
    if n < 0:
        raise ValueError("expoente negativo")
    if n == 0:
        return Identidade(f.horizonte, f.orcamento)
    if n == 1:
        return f
    return Composicional(iterado(f, n - 1), f)


OPERADORES = {
    "product": "produto",
    "produto": "produto",
    "union": "uniao",
    "uniao": "uniao",
    "coproduct": "coproduto",
    "coproduto": "coproduto",
    "star_power": "estrela_finita",
    "estrela_finita": "estrela_finita",
    "finite_power": "potencia",
    "potencia": "potencia",
    "star": "composicional",
    "composicional": "composicional",
    "iterated": "iterado",
    "iterado": "iterado",
}


def combine(operador: str, operandos: Sequence[Any], n: Optional[int] = None) -> Problema:
    """
    Combina problemas: produto, união, coproduto (família finita), estrela
    finita (*), potência f^n, composição ⋆ (operandos [f, g] para f ⋆ g) e
    iteração f^(n). Operandos podem ser problemas ou identificadores.
    """
    if operador not in OPERADORES:
        raise KeyError(f"operador desconhecido {operador!r}")
    probs = [problema(o) if isinstance(o, str) else o for o in operandos]
    tipo = OPERADORES[operador]
    if tipo == "produto":
        return Produto(probs)
    if tipo == "uniao":
        if len(probs) != 2:
            raise ValueError("⊔ exige dois operandos")
        return Uniao(*probs)
    if tipo == "coproduto":
        familia = list(probs)
        return Coproduto(lambda i: familia[i], " ∐ ".join(p.identificador for p in familia), len(familia) - 1)
    if len(probs) == 1 and tipo == "estrela_finita":
        return estrela_finita(probs[0])
    if tipo in ("potencia", "iterado"):
        if len(probs) != 1 or n is None:
            raise ValueError(f"{operador} exige um operando e o expoente n")
        return potencia(probs[0], n) if tipo == "potencia" else iterado(probs[0], n)
    if tipo == "composicional" and len(probs) == 2:
        return Composicional(*probs)
    raise ValueError(f"aridade incompatível com {operador}: {len(probs)} operandos")


# ------------------------------------------------- biblioteca de continuações
def _enderecos_da_resposta(g: Problema) -> List[Tuple[Any, ...]]:
    """Endereços (na fita 0) das coordenadas reais ou naturais da resposta de g."""
    if isinstance(g.espaco_resposta, tuple):
        return [(0, i) for i in range(len(g.espaco_resposta))]
    return [(0,)]


def _eh_aouc(f: Problema) -> bool:
    if isinstance(f, Produto):
        return all(isinstance(p, AoUCUnit) for p in f.fatores)
    return isinstance(f, AoUCUnit)


def continuacoes_compativeis(f: Problema, g: Problema) -> List[str]:
    if isinstance(f, Composicional):
        return _continuacoes_para_estrela(f, g)
    reais = [e for e, espaco in zip(_enderecos_da_resposta(g), _espacos_da_resposta(g)) if espaco == "real"]
    naturais = [e for e, espaco in zip(_enderecos_da_resposta(g), _espacos_da_resposta(g)) if espaco == "nat"]
    nomes: List[str] = []
    if _eh_aouc(f):
        nomes.append("cheio")
        if reais:
            nomes += ["ponto_x1", "limiar_x1"]
        if len(reais) >= 2:
            nomes.append("media_x1_x2")
        if naturais:
            nomes.append("ponto_do_indice")
    elif f.identificador == "LLPO" and reais:
        nomes.append("sinal_meio")
    elif isinstance(f, RDiv) and reais:
        nomes.append("razao_sobre_um")
    if isinstance(f, LPO) and naturais:
        nomes.append("um_na_resposta")
    if not nomes:
        raise GenerationError(f"nenhum código da biblioteca leva respostas de {g} a instâncias de {f}")
    return nomes


def _continuacoes_para_estrela(f: Composicional, g: Problema) -> List[str]:
    """
    Códigos para instâncias de A ⋆ B: o nome escolhe o código que produz a
    instância de B; o código anexado a ela (respostas de B → instâncias de A)
    usa o mesmo nome quando possível.
    """
    if isinstance(f.g, Composicional):
        raise GenerationError(f"instâncias de {f} exigiriam código anexado dentro de uma componente")
    continuacoes_compativeis(f.f, f.g)
    return continuacoes_compativeis(f.g, g)


def _espacos_da_resposta(g: Problema) -> List[Any]:
    if isinstance(g.espaco_resposta, tuple):
        return list(g.espaco_resposta)
    return [g.espaco_resposta]


def _colapso_em(aproximar, canal):
    """Corpo: colapso sobre o real z dado por aproximar(i) (gerador), |aprox − z| < 2^-i."""
    for t in count():
        q = yield from aproximar(t + 4)
        yield from escrever_colapso(aproximacao_diadica(q, t + 4), t, canal)


def _corpo_cheio(canal):
    yield Emitir(1, None, canal)


def _corpo_ponto(endereco, canal):
    leitor = LeitorReal(endereco)
    yield from _colapso_em(leitor.aproximacao, canal)


def _corpo_media(e1, e2, canal):
    l1, l2 = LeitorReal(e1), LeitorReal(e2)

    def aproximar(i):
        a = yield from l1.aproximacao(i + 1)
        b = yield from l2.aproximacao(i + 1)
        return (a + b) / 2

    yield from _colapso_em(aproximar, canal)


def _corpo_limiar(endereco, canal):
    """[0,1] enquanto não se vê x > 1/2; depois {1}."""
    leitor = LeitorReal(endereco)
    for i in count():
        q = yield from leitor.aproximacao(i)
        if q - Fraction(1, 2 ** i) > Fraction(1, 2):
            for t in count():
                yield from escrever_colapso(Fraction(1), t, canal)
        yield from escrever_passagem(canal)


def _corpo_indice(endereco, canal):
    """Colapso sobre min(c, 8)/8 para a resposta natural c."""
    c = yield from LeitorBlocos(endereco).proximo()
    z = Fraction(min(c, 8), 8)
    for t in count():
        yield from escrever_colapso(z, t, canal)


def _corpo_sinal(endereco, canal):
    """Instância de LLPO: 1 em posição par se x < 1/2, ímpar se x > 1/2, nunca se x = 1/2."""
    leitor = LeitorReal(endereco)
    posicao = 0
    for i in count():
        q = yield from leitor.aproximacao(i)
        raio = Fraction(1, 2 ** i)
        paridade = 0 if q + raio < Fraction(1, 2) else 1 if q - raio > Fraction(1, 2) else None
        if paridade is None:
            yield Emitir(0, 1, canal)
            posicao += 1
            continue
        if posicao % 2 != paridade:
            yield Emitir(0, 1, canal)
        yield Emitir(1, 1, canal)
        yield Emitir(0, None, canal)
        return


def _corpo_um_na_resposta(endereco, canal):
    """Instância de LPO/LLPO com o único 1 na posição c da resposta natural c."""
    c = yield from LeitorBlocos(endereco).proximo()
    if c:
        yield Emitir(0, c, canal)
    yield Emitir(1, 1, canal)
    yield Emitir(0, None, canal)


def _corpo_constante(q: Fraction, canal):
    while True:
        yield from escrever_bloco_real(q, canal)


def continuacao(nome: str, f: Problema, g: Problema) -> Programa:
    """Código da biblioteca que leva respostas de g a instâncias de f."""
    if isinstance(f, Composicional):
        return _continuacao_estrela(nome, f, g)
    enderecos = _enderecos_da_resposta(g)
    espacos = _espacos_da_resposta(g)
    reais = [e for e, espaco in zip(enderecos, espacos) if espaco == "real"]
    naturais = [e for e, espaco in zip(enderecos, espacos) if espaco == "nat"]
    forma, tipos = forma_do_espaco(f.espaco_instancia)
    canais = folhas(forma)

    def corpo(canal, indice):
        if nome == "cheio":
            return _corpo_cheio(canal)
        if nome == "ponto_x1":
            return _corpo_ponto(reais[indice % len(reais)], canal)
        if nome == "limiar_x1":
            return _corpo_limiar(reais[0], canal)
        if nome == "media_x1_x2":
            return _corpo_media(reais[0], reais[1], canal)
        if nome == "ponto_do_indice":
            return _corpo_indice(naturais[0], canal)
        if nome == "sinal_meio":
            return _corpo_sinal(reais[0], canal)
        if nome == "um_na_resposta":
            return _corpo_um_na_resposta(naturais[0], canal)
        if nome == "razao_sobre_um":
            # (z, 1): o quociente robusto devolve o próprio z ∈ [0,1]
            return copiar_fita(reais[0], canal) if indice == 0 else _corpo_constante(Fraction(1), canal)
        raise GenerationError(f"código desconhecido {nome!r}")

    def fabrica():
        if len(canais) == 1:
            return corpo(canais[0], 0)
        return intercalar([corpo(c, i) for i, c in enumerate(canais)])

    return Programa(
        nome=f"{nome}[{f.identificador}←{g.identificador}]",
        fabrica=fabrica,
        forma=forma,
        tipos=tipos,
    )


def _continuacao_estrela(nome: str, f: Composicional, g: Problema) -> Programa:
    """Anexa à raiz o código B → A e escreve a instância de B a partir da resposta de g."""
    interno = continuacao(nome, f.g, g)
    nomes_anexados = continuacoes_compativeis(f.f, f.g)
    anexado = continuacao(nome if nome in nomes_anexados else nomes_anexados[0], f.f, f.g)

    def fabrica():
        yield DefinirCodigo("raiz", anexado)
        yield from interno.iniciar()

    return Programa(
        nome=f"{nome}[{f.identificador}←{g.identificador}]",
        fabrica=fabrica,
        forma=(interno.forma,),
        tipos=dict(interno.tipos),
        codigos=("raiz",),
    )
