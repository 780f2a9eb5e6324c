"""
Tipos do jogo de separação: árvores parciais do oponente, expressões que
descrevem φ e ψ, o estado da estratégia Pro e o veredito final.

Strings binárias são `str` sobre {"0", "1"}; estágios são inteiros ≥ 0.
"""
from dataclasses import dataclass, field
from itertools import product
import logging
from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Set, Tuple, Union

from .erros import ParseError

logger = logging.getLogger(__name__)

FIM = "end"

Estado = Union[int, str]


# ------------------------------------------------------------- árvores parciais
class PartialTree:
    """
    Árvore parcial t :⊆ {0,1}* → {0,1} avaliada por estágios.

    `avaliar(sigma, s)` devolve 0, 1 ou None (ainda não convergiu); uma vez
    definido, o valor não muda em estágios maiores.
    """

    def avaliar(self, sigma: str, s: int) -> Optional[int]:
        raise NotImplementedError

    def converge_nivel(self, l: int, s: int) -> bool:
        """t(σ)[s] converge para todo σ de comprimento l."""
        return all(self.avaliar("".join(bits), s) is not None for bits in product("01", repeat=l))

    def nos(self, n: int, s: int) -> Iterator[str]:
        """Nós de Tr(t) ∩ {0,1}^n vistos até o estágio s, em ordem lexicográfica."""
        if n == 0:
            if self.avaliar("", s) == 1:
                yield ""
            return
        for pai in self.nos(n - 1, s):
            for bit in "01":
                if self.avaliar(pai + bit, s) == 1:
                    yield pai + bit

    def cardinalidade(self, n: int, s: int) -> int:
        return sum(1 for _ in self.nos(n, s))


class ArvoreRegrada(PartialTree):
    """
    Árvore descrita nível a nível.

    Cada nível é "*" (cheio), uma string (o único nó) ou uma lista de nós.
    Depois do último nível descrito, um nível cheio continua cheio e um nó
    único continua pelo `ciclo` e uma lista encerra a árvore. A avaliação de σ converge no estágio
    |σ| + atraso, salvo os atrasos individuais de `atrasos`; comprimentos
    acima de `limite` nunca convergem.

    Atributos:
        niveis (List[Any]): Descrição dos níveis 0, 1, 2, ...
        ciclo (str): Continuação periódica do nó único.
        atraso (int): Atraso uniforme de convergência.
        atrasos (Dict[str, int]): Estágio de convergência de strings específicas.
        limite (Optional[int]): Maior comprimento que chega a convergir.
    """

    def __init__(
        self,
        niveis: Optional[Sequence[Any]] = None,
        ciclo: str = "0",
        atraso: int = 0,
        atrasos: Optional[Mapping[str, int]] = None,
        limite: Optional[int] = None,
    ) -> None:
        self.niveis: List[Any] = list(niveis) if niveis else ["*"]
        if not ciclo or set(ciclo) - set("01"):
            raise ParseError("ciclo deve ser uma string binária não vazia", campo="ciclo")
        self.ciclo = ciclo
        self.atraso = atraso
        self.atrasos: Dict[str, int] = dict(atrasos or {})
        self.limite = limite

    @classmethod
    def cheia(cls, atraso: int = 0) -> "ArvoreRegrada":
        return cls(["*"], atraso=atraso)

    @classmethod
    def colapsando(cls, altura: int, caminho: str, ciclo: str = "0", atraso: int = 0) -> "ArvoreRegrada":
        """Cheia abaixo de `altura`; daí em diante só o caminho `caminho` seguido de `ciclo`^∞."""
        if len(caminho) < altura:
            caminho = caminho + _periodico(ciclo, altura - len(caminho))
        return cls(["*"] * altura + [caminho[:altura]], ciclo=ciclo, atraso=atraso)

    def _nivel(self, n: int) -> Any:
        if n < len(self.niveis):
            return self.niveis[n]
        ultimo = self.niveis[-1]
        if ultimo == "*":
            return "*"
        if isinstance(ultimo, list):
            return None
        base = len(self.niveis) - 1
        return ultimo + _periodico(self.ciclo, n - base)

    def _estagio(self, sigma: str) -> Optional[int]:
        if self.limite is not None and len(sigma) > self.limite:
            return None
        if sigma in self.atrasos:
            return self.atrasos[sigma]
        return len(sigma) + self.atraso

    def _pertence(self, sigma: str) -> bool:
        nivel = self._nivel(len(sigma))
        if nivel == "*":
            return all(self._pertence(sigma[:n]) for n in range(len(sigma))) if sigma else True
        if nivel is None:
            return False
        if isinstance(nivel, list):
            return sigma in nivel
        return sigma == nivel

    def avaliar(self, sigma: str, s: int) -> Optional[int]:
        estagio = self._estagio(sigma)
        if estagio is None or s < estagio:
            return None
        return int(self._pertence(sigma))

    def converge_nivel(self, l: int, s: int) -> bool:
        if self.limite is not None and l > self.limite:
            return False
        if s < l + self.atraso:
            return False
        return all(s >= estagio for sigma, estagio in self.atrasos.items() if len(sigma) == l)

    def nos(self, n: int, s: int) -> Iterator[str]:
        # o caminho rápido vale só sem atrasos individuais
        if self.atrasos or not self.converge_nivel(n, s):
            yield from super().nos(n, s)
            return
        if all(self._nivel(m) == "*" for m in range(n + 1)):
            for bits in product("01", repeat=n):
                yield "".join(bits)
            return
        yield from super().nos(n, s)

    def cardinalidade(self, n: int, s: int) -> int:
        if not self.atrasos and self.converge_nivel(n, s) and all(self._nivel(m) == "*" for m in range(n + 1)):
            return 2 ** n
        return super().cardinalidade(n, s)


def _periodico(ciclo: str, n: int) -> str:
    return (ciclo * (n // len(ciclo) + 1))[:n]


# ------------------------------------------------------------------ expressões
class Expressao:
    """
    Programa de Type-1 monótono: de uma k-upla de strings a uma string.

    `avaliar(entradas, limite)` devolve no máximo `limite` símbolos; com
    entradas estendidas ou limite maior a saída só se estende.
    """

    def avaliar(self, entradas: Sequence[str], limite: int) -> str:
        raise NotImplementedError


@dataclass
class Constante(Expressao):
    prefixo: str = ""
    ciclo: str = ""

    def avaliar(self, entradas, limite):
        saida = self.prefixo
        if self.ciclo:
            saida += _periodico(self.ciclo, max(0, limite - len(saida)))
        return saida[:limite]


@dataclass
class Projecao(Expressao):
    indice: int = 0

    def avaliar(self, entradas, limite):
        return entradas[self.indice][:limite]


@dataclass
class Prefixar(Expressao):
    prefixo: str
    argumento: Expressao

    def avaliar(self, entradas, limite):
        return (self.prefixo + self.argumento.avaliar(entradas, max(0, limite - len(self.prefixo))))[:limite]


@dataclass
class Inverter(Expressao):
    argumento: Expressao

    def avaliar(self, entradas, limite):
        return "".join("1" if b == "0" else "0" for b in self.argumento.avaliar(entradas, limite))


@dataclass
class Xor(Expressao):
    argumentos: List[Expressao]

    def avaliar(self, entradas, limite):
        saidas = [a.avaliar(entradas, limite) for a in self.argumentos]
        n = min(len(s) for s in saidas)
        return "".join(str(sum(int(s[j]) for s in saidas) % 2) for j in range(n))


@dataclass
class Intercalar(Expressao):
    argumentos: List[Expressao]

    def avaliar(self, entradas, limite):
        saidas = [a.avaliar(entradas, limite) for a in self.argumentos]
        resultado = []
        for j in range(limite):
            fonte = saidas[j % len(saidas)]
            posicao = j // len(saidas)
            if posicao >= len(fonte):
                break
            resultado.append(fonte[posicao])
        return "".join(resultado)


@dataclass
class Bit(Expressao):
    """O símbolo `posicao` do argumento, como saída de um único símbolo."""
    argumento: Expressao
    posicao: int = 0

    def avaliar(self, entradas, limite):
        if limite < 1:
            return ""
        saida = self.argumento.avaliar(entradas, max(limite, self.posicao + 1))
        return saida[self.posicao] if len(saida) > self.posicao else ""


@dataclass
class Se(Expressao):
    teste: Expressao
    entao: Expressao
    senao: Expressao

    def avaliar(self, entradas, limite):
        decisao = self.teste.avaliar(entradas, max(limite, 1))[:1]
        if not decisao:
            return ""
        ramo = self.entao if decisao == "1" else self.senao
        return ramo.avaliar(entradas, limite)


@dataclass
class Atraso(Expressao):
    passos: int
    argumento: Expressao

    def avaliar(self, entradas, limite):
        return self.argumento.avaliar(entradas, max(0, limite - self.passos))


@dataclass
class Nunca(Expressao):
    def avaliar(self, entradas, limite):
        return ""


def _binaria(valor: Any, campo: str) -> str:
    if not isinstance(valor, str) or set(valor) - set("01"):
        raise ParseError(f"esperava string binária, obtive {valor!r}", campo=campo)
    return valor


def expressao_de(dados: Any, k: int, campo: str = "expressao") -> Expressao:
    """Constrói uma expressão a partir do seu dicionário JSON."""
    if not isinstance(dados, dict) or "op" not in dados:
        raise ParseError("expressão precisa ser um objeto com 'op'", campo=campo)
    op = dados["op"]
    filho = lambda chave: expressao_de(dados.get(chave), k, f"{campo}.{chave}")
    filhos = lambda: [expressao_de(d, k, f"{campo}.args") for d in dados.get("args", [])]
    if op == "const":
        return Constante(_binaria(dados.get("valor", ""), campo), _binaria(dados.get("ciclo", ""), campo))
    if op == "proj":
        indice = dados.get("i", 0)
        if not isinstance(indice, int) or not 0 <= indice < k:
            raise ParseError(f"projeção {indice!r} fora de 0..{k - 1}", campo=campo)
        return Projecao(indice)
    if op == "prefixo":
        return Prefixar(_binaria(dados.get("valor", ""), campo), filho("arg"))
    if op == "inverter":
        return Inverter(filho("arg"))
    if op in ("xor", "intercalar"):
        argumentos = filhos()
        if not argumentos:
            raise ParseError(f"'{op}' precisa de argumentos", campo=campo)
        return Xor(argumentos) if op == "xor" else Intercalar(argumentos)
    if op == "bit":
        return Bit(filho("arg"), int(dados.get("pos", 0)))
    if op == "se":
        return Se(filho("teste"), filho("entao"), filho("senao"))
    if op == "atraso":
        return Atraso(int(dados.get("passos", 0)), filho("arg"))
    if op == "nunca":
        return Nunca()
    raise ParseError(f"operação desconhecida {op!r}", campo=campo)


def arvore_de(dados: Any, campo: str = "arvore") -> ArvoreRegrada:
    if not isinstance(dados, dict):
        raise ParseError("árvore precisa ser um objeto", campo=campo)
    tipo = dados.get("tipo", "niveis")
    atraso = int(dados.get("atraso", 0))
    if tipo == "cheia":
        arvore = ArvoreRegrada.cheia(atraso)
    elif tipo == "colapso":
        arvore = ArvoreRegrada.colapsando(
            int(dados["altura"]),
            _binaria(dados.get("caminho", ""), campo),
            _binaria(dados.get("ciclo", "0"), campo),
            atraso,
        )
    elif tipo == "niveis":
        arvore = ArvoreRegrada(dados.get("niveis"), dados.get("ciclo", "0"), atraso)
    else:
        raise ParseError(f"tipo de árvore desconhecido {tipo!r}", campo=campo)
    arvore.atrasos = {str(s): int(e) for s, e in dados.get("atrasos", {}).items()}
    arvore.limite = dados.get("limite")
    return arvore


@dataclass
class OpponentTriple:
    """
    Jogada do oponente: k árvores, φ e ψ.

    Atributos:
        nome (str): Identificador na suíte ou no arquivo.
        arvores (List[PartialTree]): As k árvores parciais.
        phi (Expressao): Programa que deve produzir um caminho de T_e.
        psi (Expressao): Programa cujo primeiro símbolo escolhe em S_e.
        orcamento (int): Passos por avaliação; acima disso a avaliação não converge.
    """
    nome: str
    arvores: List[PartialTree]
    phi: Expressao
    psi: Expressao
    orcamento: int = 10 ** 6

    @property
    def k(self) -> int:
        return len(self.arvores)

    def phi_em(self, sigmas: Sequence[str], s: int) -> str:
        return self.phi.avaliar(sigmas, min(s, self.orcamento))

    def psi_em(self, sigmas: Sequence[str], s: int) -> Optional[int]:
        saida = self.psi.avaliar(sigmas, min(s, self.orcamento))[:1]
        return int(saida) if saida else None

    @classmethod
    def de_json(cls, dados: Mapping[str, Any], nome: str = "oponente") -> "OpponentTriple":
        try:
            k = int(dados["k"])
            arvores = [arvore_de(a, f"trees[{i}]") for i, a in enumerate(dados["trees"])]
        except KeyError as erro:
            raise ParseError("campo obrigatório ausente", campo=str(erro.args[0])) from erro
        if len(arvores) != k:
            raise ParseError(f"k = {k} mas {len(arvores)} árvores", campo="trees")
        return cls(
            dados.get("name", nome),
            arvores,
            expressao_de(dados.get("phi"), k, "phi"),
            expressao_de(dados.get("psi"), k, "psi"),
            int(dados.get("budget", 10 ** 6)),
        )


# ------------------------------------------------------------- estado do jogo
@dataclass
class GameState:
    """
    Dados da estratégia Pro ao fim de cada estágio.

    Atributos:
        estagio (int): Último estágio jogado.
        estado (Estado): state(e, s): 0..k ou "end".
        altura_cheia (int): Níveis de T_e cheios (0..altura_cheia−1).
        tau (Optional[str]): Testemunha τ; após "end", T_e tem o único caminho τ0^∞.
        excecoes (Dict[str, Set[int]]): S_e(0^q1) para os prefixos já restringidos.
        transcricao (List[Dict[str, Any]]): Decisões dos itens por estágio.
        ramos (Set[str]): Ramos dos itens já exercitados ("1a", "3b", ...).
    """
    estagio: int = 0
    estado: Estado = 0
    altura_cheia: int = 1
    tau: Optional[str] = None
    excecoes: Dict[str, Set[int]] = field(default_factory=dict)
    transcricao: List[Dict[str, Any]] = field(default_factory=list)
    ramos: Set[str] = field(default_factory=set)

    @property
    def terminou(self) -> bool:
        return self.estado == FIM

    def nivel(self, n: int) -> Optional[str]:
        """None se o nível n de T_e é cheio, senão o único nó."""
        if self.tau is None or n < self.altura_cheia:
            return None
        return (self.tau + "0" * n)[:n]

    def contem(self, x: str) -> bool:
        """x (finito) é nó de T_e em todos os seus prefixos."""
        for n in range(1, len(x) + 1):
            no = self.nivel(n)
            if no is not None and x[:n] != no:
                return False
        return True

    def S(self, x: str) -> Set[int]:
        """S_e no prefixo x: a entrada da tabela se x estende algum 0^q1."""
        for prefixo, valores in self.excecoes.items():
            if x.startswith(prefixo):
                return valores
        return {0, 1}

    def para_json(self) -> Dict[str, Any]:
        return {
            "stage": self.estagio,
            "state": self.estado,
            "full_height": self.altura_cheia,
            "tau": self.tau,
            "S_e": {p: sorted(v) for p, v in sorted(self.excecoes.items())},
            "transcript": self.transcricao,
            "branches": sorted(self.ramos),
        }


PRO_VENCE = "pro_wins"
OPONENTE_SOBREVIVE = "opponent_survives"
PROFUNDIDADE_INSUFICIENTE = "insufficient_depth"


@dataclass
class VereditoJogo:
    """
    Resultado de verify_defeat.

    Atributos:
        resultado (str): "pro_wins", "opponent_survives" ou "insufficient_depth".
        profundidade (int): Comprimento dos caminhos enumerados.
        testemunha (Optional[Tuple[str, ...]]): k-upla que viola a resposta do oponente.
        motivo (str): Restrição violada, ou por que a profundidade não bastou.
        tuplas (int): k-uplas examinadas.
    """
    resultado: str
    profundidade: int
    testemunha: Optional[Tuple[str, ...]] = None
    motivo: str = ""
    tuplas: int = 0

    @property
    def pro_vence(self) -> bool:
        return self.resultado == PRO_VENCE

    def para_json(self) -> Dict[str, Any]:
        return {
            "verdict": self.resultado,
            "depth": self.profundidade,
            "witness": list(self.testemunha) if self.testemunha is not None else None,
            "reason": self.motivo,
            "tuples": self.tuplas,
        }
