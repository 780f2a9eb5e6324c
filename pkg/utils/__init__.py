from .codificacao import decode_point, encode_point, rational_enumeration, index_of
from .divisao import pivot_select, rdiv_eps
from .decomposicao import lu_decomp_pq, lu_decomp_q, validate_lu
from .rellich import recover_x, rellich
from .estrategia import run_game, verify_defeat
from .graficos import plotar_arvore_jogo, plotar_grade_rellich

__all__ = [
    "decode_point",
    "encode_point",
    "rational_enumeration",
    "index_of",
    "pivot_select",
    "rdiv_eps",
    "lu_decomp_pq",
    "lu_decomp_q",
    "validate_lu",
    "recover_x",
    "rellich",
    "run_game",
    "verify_defeat",
    "plotar_arvore_jogo",
    "plotar_grade_rellich",
]
