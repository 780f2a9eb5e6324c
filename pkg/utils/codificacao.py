"""
Codificações dos espaços representados: enumeração dos racionais, nomes de
naturais, reais, subconjuntos finitos, fechados de [0,1], árvores a.o.u.,
tuplas, uniões e coprodutos.
"""
from fractions import Fraction
from math import gcd, isqrt
import logging
from typing import Any, List, Optional, Sequence, Tuple, Union

import numpy as np

from classes.erros import DecodingError
from classes.name import Corrida, Name, de_corridas, periodico
from classes.pontos import ArvoreAou, ConjuntoFechado, ConjuntoFinito, Restante, Sequencia

logger = logging.getLogger(__name__)

# Limite de busca por terminador de bloco ao decodificar fora de programas.
LIMITE_BLOCO = 2 ** 4096


# ---------------------------------------------------------------- pareamentos
def par(a: int, b: int) -> int:
    """Pareamento de Cantor ℕ×ℕ → ℕ."""
    return (a + b) * (a + b + 1) // 2 + b


def despar(n: int) -> Tuple[int, int]:
    w = (isqrt(8 * n + 1) - 1) // 2
    b = n - w * (w + 1) // 2
    return w - b, b


def zigue(z: int) -> int:
    return 2 * z if z >= 0 else -2 * z - 1


def dezigue(u: int) -> int:
    return u // 2 if u % 2 == 0 else -(u + 1) // 2


def _eh_potencia_de_dois(r: int) -> bool:
    return r > 0 and r & (r - 1) == 0


class _TabelaAlturas:
    """
    Contagem dos racionais não diádicos por altura |p| + r.

    A função totiente vem de um crivo numpy que dobra de tamanho sob demanda.
    """

    def __init__(self) -> None:
        self._limite = 0
        self._acumulado: List[int] = [0]
        self._crescer(1024)

    def _crescer(self, limite: int) -> None:
        phi = np.arange(limite + 1, dtype=np.int64)
        for p in range(2, limite + 1):
            if phi[p] == p:
                phi[p::p] -= phi[p::p] // p
        contagens = np.zeros(limite + 1, dtype=np.int64)
        for h in range(2, limite + 1):
            potencias = 1 if h % 2 == 0 else (h - 1).bit_length()
            contagens[h] = 2 * (int(phi[h]) - potencias)
        self._vetor = np.cumsum(contagens)
        self._acumulado = [int(v) for v in self._vetor]
        self._limite = limite

    def antes_da_altura(self, d: int) -> int:
        """Quantidade de não diádicos com altura < d."""
        while d - 1 > self._limite:
            self._crescer(self._limite * 2)
        return self._acumulado[d - 1] if d >= 1 else 0

    def altura_do_indice(self, m: int) -> int:
        while self._acumulado[-1] <= m:
            self._crescer(self._limite * 2)
        return int(np.searchsorted(self._vetor, m, side="right"))


_alturas = _TabelaAlturas()


def _numeradores_validos(d: int):
    for a in range(1, d - 2):
        r = d - a
        if gcd(a, d) == 1 and not _eh_potencia_de_dois(r):
            yield a, r


def index_of(q: Union[Fraction, int]) -> int:
    """
    Índice de q na enumeração fixa dos racionais.

    Índices pares 2·c enumeram os diádicos z/2^k por pareamento de Cantor
    (k, zigue-zague da parte ímpar); índices ímpares 2·m + 1 enumeram os
    demais racionais por altura |p| + r.
    """
    q = Fraction(q)
    p, r = q.numerator, q.denominator
    if _eh_potencia_de_dois(r):
        k = r.bit_length() - 1
        u = zigue(p) if k == 0 else zigue((p - 1) // 2)
        return 2 * par(k, u)
    d = abs(p) + r
    indice = _alturas.antes_da_altura(d)
    for a, _ in _numeradores_validos(d):
        if a == abs(p):
            return 2 * (indice + (0 if p > 0 else 1)) + 1
        indice += 2
    raise AssertionError(f"racional {q} não encontrado na altura {d}")


def rational_enumeration(i: int) -> Fraction:
    """Inversa de `index_of`."""
    if i < 0:
        raise ValueError("índice negativo")
    if i % 2 == 0:
        k, u = despar(i // 2)
        z = dezigue(u) if k == 0 else 2 * dezigue(u) + 1
        return Fraction(z, 2 ** k)
    m = (i - 1) // 2
    d = _alturas.altura_do_indice(m)
    resto = m - _alturas.antes_da_altura(d)
    for a, r in _numeradores_validos(d):
        if resto < 2:
            return Fraction(a if resto == 0 else -a, r)
        resto -= 2
    raise AssertionError(f"índice {i} sem racional correspondente")


# ------------------------------------------------------------------- reais
def aproximacao_diadica(x: Fraction, i: int, deslocamento: int = 0, vies: int = 0) -> Fraction:
    """Diádico a distância < 2^-i de x, na grade 2^-(i+2+deslocamento)."""
    escala = 2 ** (i + 2 + deslocamento)
    return Fraction(round(Fraction(x) * escala) + vies, escala)


def codificar_real(
    x: Fraction,
    deslocamento: int = 0,
    vies: int = 0,
    ancora: Optional[Fraction] = None,
) -> Name:
    """
    Nome real de x: o bloco i é 0^n 1 com ν_Q(n) diádico a menos de 2^-i de x.

    Variantes: `deslocamento` refina a grade, `vies` desloca uma casa da
    grade e `ancora` faz os primeiros blocos apontarem para outro racional
    enquanto ele ainda estiver a menos de 2^-i de x.
    """
    if deslocamento < 0 or abs(vies) > 1:
        raise ValueError("variante de nome real fora do contrato (deslocamento ≥ 0, |viés| ≤ 1)")
    x = Fraction(x)

    def segmento(j: int) -> Corrida:
        if j % 2:
            return (1, 1)
        i = j // 2
        if ancora is not None and abs(Fraction(ancora) - x) < Fraction(1, 2 ** i):
            return (0, index_of(Fraction(ancora)))
        return (0, index_of(aproximacao_diadica(x, i, deslocamento, vies)))

    return Name(segmento, kind="real", ground_truth=x)


def ler_blocos(nome: Name, quantidade: int, inicio: int = 0) -> Tuple[List[int], int]:
    """Lê blocos 0^n1 consecutivos; devolve os n e a posição seguinte."""
    posicao = inicio
    blocos = []
    for _ in range(quantidade):
        fim = nome.seek(posicao, 1, LIMITE_BLOCO)
        if fim is None:
            raise DecodingError("bloco sem terminador", posicao)
        blocos.append(fim - posicao)
        posicao = fim + 1
    return blocos, posicao


def decodificar_real(nome: Name, profundidade: int) -> Fraction:
    blocos, _ = ler_blocos(nome, profundidade + 1)
    return rational_enumeration(blocos[-1])


# ------------------------------------------------------------------ naturais
def codificar_natural(n: int) -> Name:
    if n < 0:
        raise ValueError("natural negativo")
    return de_corridas([(0, n), (1, None)], kind="nat", ground_truth=n)


def decodificar_natural(nome: Name, profundidade: int = 20) -> int:
    n = nome.seek(0, 1, LIMITE_BLOCO)
    if n is None:
        raise DecodingError("natural sem terminador", 0)
    zero = nome.seek(n, 0, profundidade + 1)
    if zero is not None:
        raise DecodingError("natural com 0 após o primeiro 1", zero)
    return n


# ------------------------------------------------------------ conjuntos finitos
def codificar_conjunto_finito(conjunto: ConjuntoFinito) -> Name:
    """Exclusões em ordem crescente compartilhando zeros: 0 1^k1 0 1^k2 0 … 1^ω."""
    excluidos = conjunto.excluidos
    if not excluidos:
        return de_corridas([(1, None)], kind=f"finito:{conjunto.n}", ground_truth=conjunto)
    corridas: List[Corrida] = [(0, 1)]
    for k in excluidos:
        corridas += [(1, k), (0, 1)]
    corridas.append((1, None))
    return de_corridas(corridas, kind=f"finito:{conjunto.n}", ground_truth=conjunto)


def excluidos_nas_corridas(corridas: Sequence[Tuple[int, int]]) -> set:
    """
    Elementos k com 0 1^k 0 ocorrendo nas corridas.

    A última corrida pode continuar além do trecho lido e não conta.
    """
    excluidos = set()
    for j, (b, comprimento) in enumerate(corridas):
        if b == 0 and comprimento >= 2:
            excluidos.add(0)
        if b == 1 and 0 < j < len(corridas) - 1:
            excluidos.add(comprimento)
    return excluidos


def decodificar_conjunto_finito(nome: Name, n: int, horizonte: int = 4096) -> ConjuntoFinito:
    corridas = nome.corridas(horizonte)
    excluidos = {k for k in excluidos_nas_corridas(corridas) if k <= n}
    return ConjuntoFinito(frozenset(range(n + 1)) - frozenset(excluidos), n)


# --------------------------------------------------------- fechados de [0,1]
def codigo_bola(centro: Fraction, raio: Fraction) -> int:
    return 1 + par(index_of(centro), index_of(raio))


def bola_do_codigo(n: int) -> Tuple[Fraction, Fraction]:
    a, b = despar(n - 1)
    return rational_enumeration(a), rational_enumeration(b)


def bola_intervalo(a: Fraction, b: Fraction) -> Tuple[Fraction, Fraction]:
    """Bola (centro, raio) do intervalo aberto (a, b)."""
    return (a + b) / 2, (b - a) / 2


def bolas_de_colapso(q: Fraction, t: int) -> List[Tuple[Fraction, Fraction]]:
    """
    Par de bolas do passo t de um colapso sobre z, dado q com |q − z| ≤ 2^-(t+3).

    As bolas (−1, q − 2^-(t+1)) e (q + 2^-(t+1), 2) não tocam z.
    """
    delta = Fraction(1, 2 ** (t + 1))
    return [bola_intervalo(Fraction(-1), q - delta), bola_intervalo(q + delta, Fraction(2))]


def codificar_fechado(conjunto: ConjuntoFechado) -> Name:
    kind = "fechado"
    if conjunto.cheio:
        return de_corridas([(1, None)], kind=kind, ground_truth=conjunto)
    z = conjunto.ponto
    if not 0 <= z <= 1:
        raise ValueError(f"ponto {z} fora de [0,1]")

    def segmento(j: int) -> Corrida:
        if j == 0:
            return (1, conjunto.estagio)
        j -= 1
        slot, parte = divmod(j, 2)
        t, lado = divmod(slot, 2)
        if parte == 1:
            return (1, 1)
        centro, raio = bolas_de_colapso(aproximacao_diadica(z, t + 1), t)[lado]
        return (0, codigo_bola(centro, raio))

    return Name(segmento, kind=kind, ground_truth=conjunto)


def ler_slots(nome: Name, quantidade: int, inicio: int = 0):
    """Slots consecutivos: None para passagem, (centro, raio) para bola."""
    blocos, posicao = ler_blocos(nome, quantidade, inicio)
    return [None if n == 0 else bola_do_codigo(n) for n in blocos], posicao


def decodificar_fechado(nome: Name, profundidade: int, horizonte: int = 192) -> Restante:
    """Restante após os slots lidos, parando quando o casco fica mais estreito que 2^-profundidade."""
    restante = Restante()
    posicao = 0
    alvo = Fraction(1, 2 ** profundidade)
    viu_bola = False
    for _ in range(horizonte):
        (slot,), posicao = ler_slots(nome, 1, posicao)
        if slot is None:
            continue
        viu_bola = True
        restante.remover(*slot)
        if restante.vazio:
            raise DecodingError("bolas cobrem todo o intervalo", posicao)
        if restante.largura() < alvo:
            break
    if not viu_bola:
        return Restante()
    return restante


# ------------------------------------------------------------ árvores a.o.u.
def inicio_do_nivel(n: int) -> int:
    return 2 ** n - 1


def codificar_arvore(arvore: ArvoreAou) -> Name:
    """Função característica da árvore sobre as palavras em ordem comprimento-lexicográfica."""

    def segmento(j: int) -> Corrida:
        n, parte = divmod(j, 3)
        no = arvore.nivel(n)
        if no is None:
            return (1, 2 ** n) if parte == 0 else (1, 0)
        u = int(no, 2) if no else 0
        return [(0, u), (1, 1), (0, 2 ** n - u - 1)][parte]

    return Name(segmento, kind="arvore", ground_truth=arvore)


def nivel_da_arvore(nome: Name, n: int) -> Optional[str]:
    """None para nível cheio, o nó para nível unitário; erro para nível inválido."""
    inicio, tamanho = inicio_do_nivel(n), 2 ** n
    if nome.seek(inicio, 0, tamanho) is None:
        return None
    u = nome.seek(inicio, 1, tamanho)
    if u is None:
        raise DecodingError(f"nível {n} vazio", inicio)
    restante = inicio + tamanho - (u + 1)
    if restante > 0:
        outro = nome.seek(u + 1, 1, restante)
        if outro is not None:
            raise DecodingError(f"nível {n} com mais de um nó e não cheio", outro)
    return format(u - inicio, f"0{n}b") if n else ""


def decodificar_arvore(nome: Name, profundidade: int) -> List[Optional[str]]:
    niveis = [nivel_da_arvore(nome, n) for n in range(profundidade + 1)]
    anterior: Optional[str] = None
    for n, no in enumerate(niveis):
        if no is None and anterior is not None:
            raise DecodingError(f"nível {n} cheio após colapso", inicio_do_nivel(n))
        if no is not None and anterior is not None and not no.startswith(anterior):
            raise DecodingError(f"nó do nível {n} não estende o anterior", inicio_do_nivel(n))
        if no is not None:
            anterior = no
    return niveis


# -------------------------------------------------------------- sequências
def codificar_sequencia(sequencia: Sequencia) -> Name:
    return periodico(sequencia.prefixo, sequencia.ciclo, kind="cantor", ground_truth=sequencia)


# ------------------------------------------------------ tuplas e marcações
def tuple_names(nomes: Sequence[Name]) -> Name:
    if not nomes:
        raise ValueError("tupla exige aridade ≥ 1")
    verdade = tuple(n.ground_truth for n in nomes)
    return Name(components=nomes, kind="tupla", ground_truth=verdade)


def untuple(nome: Name, aridade: int) -> List[Name]:
    if aridade < 1:
        raise ValueError("aridade deve ser ≥ 1")
    if nome.components is not None:
        if len(nome.components) != aridade:
            raise DecodingError(f"tupla de aridade {len(nome.components)}, esperada {aridade}", 0)
        return list(nome.components)
    return [
        Name(lambda j, i=i: (nome.bit(j * aridade + i), 1), kind="cantor")
        for i in range(aridade)
    ]


def _marcado(cabeca: List[Corrida], nome: Name, tipo: str, marca: int) -> Name:
    def segmento(j: int) -> Corrida:
        if j < len(cabeca):
            return cabeca[j]
        return nome.corrida(j - len(cabeca))

    verdade = (tipo, marca, nome.ground_truth)
    return Name(segmento, kind=f"{tipo}:{nome.kind}", ground_truth=verdade, partes=(tipo, marca, nome))


def inject_union(marca: int, nome: Name) -> Name:
    if marca not in (0, 1):
        raise ValueError("marca de união deve ser 0 ou 1")
    return _marcado([(marca, 1)], nome, "uniao", marca)


def inject_coproduct(n: int, nome: Name) -> Name:
    return _marcado([(0, n), (1, 1)], nome, "coproduto", n)


def deslocar(nome: Name, k: int) -> Name:
    """Nome sem os k primeiros bits."""
    return Name(lambda j: (nome.bit(j + k), 1), kind=nome.kind)


def strip_union(nome: Name) -> Tuple[int, Name]:
    if nome.partes is not None and nome.partes[0] == "uniao":
        return nome.partes[1], nome.partes[2]
    return nome.bit(0), deslocar(nome, 1)


def strip_coproduct(nome: Name) -> Tuple[int, Name]:
    if nome.partes is not None and nome.partes[0] == "coproduto":
        return nome.partes[1], nome.partes[2]
    n = nome.seek(0, 1, LIMITE_BLOCO)
    if n is None:
        raise DecodingError("coproduto sem marca", 0)
    return n, deslocar(nome, n + 1)


# ----------------------------------------------------------- ponto genérico
def encode_point(espaco: Any, ponto: Any) -> Name:
    """
    Nome de um ponto no espaço descrito.

    Espaços: "nat", "real", "cantor", "finito:n", "fechado", "arvore" ou
    uma tupla de espaços.
    """
    if isinstance(espaco, tuple):
        return tuple_names([encode_point(e, p) for e, p in zip(espaco, ponto)])
    if espaco == "nat":
        return codificar_natural(int(ponto))
    if espaco == "real":
        return codificar_real(Fraction(ponto))
    if espaco == "cantor":
        return codificar_sequencia(ponto)
    if espaco.startswith("finito:"):
        n = int(espaco.split(":")[1])
        if not isinstance(ponto, ConjuntoFinito):
            ponto = ConjuntoFinito(frozenset(ponto), n)
        return codificar_conjunto_finito(ponto)
    if espaco == "fechado":
        return codificar_fechado(ponto)
    if espaco == "arvore":
        return codificar_arvore(ponto)
    raise ValueError(f"espaço desconhecido {espaco!r}")


def decode_point(espaco: Any, nome: Name, profundidade: int) -> Any:
    if isinstance(espaco, tuple):
        return tuple(
            decode_point(e, c, profundidade)
            for e, c in zip(espaco, untuple(nome, len(espaco)))
        )
    if espaco == "nat":
        return decodificar_natural(nome, profundidade)
    if espaco == "real":
        return decodificar_real(nome, profundidade)
    if espaco == "cantor":
        return nome.prefix(profundidade)
    if espaco.startswith("finito:"):
        return decodificar_conjunto_finito(nome, int(espaco.split(":")[1]))
    if espaco == "fechado":
        return decodificar_fechado(nome, profundidade)
    if espaco == "arvore":
        return decodificar_arvore(nome, profundidade)
    raise ValueError(f"espaço desconhecido {espaco!r}")
