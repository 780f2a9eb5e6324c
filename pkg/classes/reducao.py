from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from .problema import Problema
from .transformador import Programa


@dataclass(frozen=True)
class Reduction:
    """
    Redução de Weihrauch f ≤ g dada por dois programas.

    H leva a instância p de f (fita 0) a uma instância de g; K recebe p na
    fita 0 e a resposta de g na fita 1 e produz a resposta de f.

    Atributos:
        nome (str): Nome na biblioteca.
        H (Programa): Pré-processador.
        K (Programa): Pós-processador.
        f (Problema): Problema reduzido.
        g (Problema): Problema usado como oráculo.
        descricao (str): Resumo da construção.
        descritores (Optional[Callable]): Corpus dedicado (tamanho, rng) → descritores de f.
    """
    nome: str
    H: Programa
    K: Programa
    f: Problema
    g: Problema
    descricao: str = ""
    descritores: Optional[Callable[[int, Any], List[Dict[str, Any]]]] = field(default=None, compare=False)

    def __repr__(self) -> str:
        return f"Reduction({self.nome}: {self.f} ≤ {self.g})"


@dataclass
class ConfigAdversario:
    """
    Amostragem de realizadores de g.

    Atributos:
        amostras (int): Respostas por instância em espaços contínuos.
        semente (int): Semente do amostrador.
        cegueira (bool): Reexecuta cada célula com a verdade de base exposta e compara.
    """
    amostras: int = 8
    semente: int = 0
    cegueira: bool = True


@dataclass
class Falha:
    """
    Célula (instância, resposta adversária) rejeitada.

    Atributos:
        instancia (Dict[str, Any]): Descritor e semente da instância.
        adversario (Any): Índice e verdade de base da resposta de g, quando houver.
        estagio (str): "H", "oraculo", "K", "validacao" ou "cegueira".
        restricao (str): Restrição violada.
        leituras (List[str]): Início dos registros de leitura de H e K.
    """
    instancia: Dict[str, Any]
    adversario: Any
    estagio: str
    restricao: str
    leituras: List[str] = field(default_factory=list)

    def para_json(self) -> Dict[str, Any]:
        return {
            "instance": self.instancia,
            "adversary": self.adversario,
            "stage": self.estagio,
            "violated_constraint": self.restricao,
            "read_logs": self.leituras,
        }


@dataclass
class RelatorioVerificacao:
    """
    Resultado de verify_reduction.

    Atributos:
        reducao (str): Nome da redução.
        corpus_id (str): Problema, tamanho e semente do corpus.
        celulas (int): Pares (instância, resposta) avaliados.
        falhas (List[Falha]): Células rejeitadas, na ordem em que ocorreram.
        profundidade (int): Bits fracionários validados.
        orcamento (int): Orçamento de passos de H, K e dos códigos anexados.
    """
    reducao: str
    corpus_id: str
    celulas: int = 0
    falhas: List[Falha] = field(default_factory=list)
    profundidade: int = 20
    orcamento: int = 10 ** 6

    @property
    def aprovado(self) -> bool:
        return not self.falhas

    @property
    def primeira_falha(self) -> Optional[Falha]:
        return self.falhas[0] if self.falhas else None

    def para_json(self) -> Dict[str, Any]:
        return {
            "reduction": self.reducao,
            "corpus_id": self.corpus_id,
            "cells": self.celulas,
            "failures": [f.para_json() for f in self.falhas],
            "depth": self.profundidade,
            "budget": self.orcamento,
        }

    def resumo(self) -> str:
        estado = "ok" if self.aprovado else f"{len(self.falhas)} falhas"
        return f"{self.reducao} [{self.corpus_id}]: {self.celulas} células, {estado}"


@dataclass
class Etapa:
    """
    Passo de uma cadeia de graus de Weihrauch.

    Atributos:
        descricao (str): A desigualdade do passo.
        reducao (Optional[Reduction]): Redução executável, quando o passo vem de um construtor.
    """
    descricao: str
    reducao: Optional[Reduction] = None

    @property
    def executavel(self) -> bool:
        return self.reducao is not None
