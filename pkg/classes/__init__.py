from .erros import (
    ConstructionError,
    DecodingError,
    DivergenceError,
    DomainError,
    GenerationError,
    ParseError,
    ShapeError,
    UnknownReductionError,
)
from .name import Name
from .pontos import ArvoreAou, ConjuntoFechado, ConjuntoFinito, Sequencia
from .intervalo import IntervalReal
from .robust_lu import RellichMatrix, RobustLU, ValidacaoLU
from .jogo import GameState, OpponentTriple, VereditoJogo
from .configuracao import RunConfig

__all__ = [
    "ConstructionError",
    "DecodingError",
    "DivergenceError",
    "DomainError",
    "GenerationError",
    "ParseError",
    "ShapeError",
    "UnknownReductionError",
    "Name",
    "ArvoreAou",
    "ConjuntoFechado",
    "ConjuntoFinito",
    "Sequencia",
    "IntervalReal",
    "RellichMatrix",
    "RobustLU",
    "ValidacaoLU",
    "GameState",
    "OpponentTriple",
    "VereditoJogo",
    "RunConfig",
]
