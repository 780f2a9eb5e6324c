from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

from .erros import ParseError

FORMATOS = ("json", "table")
APELIDOS = {"format": "output_format", "horizonte": "horizon", "semente": "seed", "orcamento": "budget"}


@dataclass
class RunConfig:
    """
    Parâmetros de uma execução da linha de comando.

    Atributos:
        precision_bits (int): Bits usados para mostrar reais nos relatórios.
        tol_bits (int): Tolerância 2^-tol_bits das decomposições LU.
        depth (int): Profundidade de validação (bits) e de verify_defeat.
        corpus_size (int): Instâncias por corpus.
        seed (int): Semente de corpus, adversário e geradores.
        budget (int): Orçamento de passos dos programas e dos oponentes.
        output_format (str): "json" ou "table".
        out (Optional[str]): Arquivo (ou diretório, para gen) de saída.
        horizon (int): Horizonte de observação dos oráculos.
        max_stages (int): Estágios do jogo.
        grafico (Optional[str]): Arquivo PNG para a figura do comando.
    """
    precision_bits: int = 53
    tol_bits: int = 20
    depth: int = 20
    corpus_size: int = 1000
    seed: int = 0
    budget: int = 10 ** 6
    output_format: str = "json"
    out: Optional[str] = None
    horizon: int = 192
    max_stages: int = 64
    grafico: Optional[str] = None

    def validar(self) -> "RunConfig":
        for campo in fields(self):
            valor = getattr(self, campo.name)
            if isinstance(valor, int) and not isinstance(valor, bool):
                minimo = 0 if campo.name == "seed" else 1
                if valor < minimo:
                    raise ParseError(f"valor {valor} inválido; mínimo {minimo}", campo=campo.name)
        if self.output_format not in FORMATOS:
            raise ParseError(f"formato {self.output_format!r} desconhecido; use {' ou '.join(FORMATOS)}", campo="output_format")
        return self

    def para_json(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def montar(cls, arquivo: Optional[str] = None, sobrescritas: Optional[Mapping[str, Any]] = None) -> "RunConfig":
        """Padrões < arquivo chave = valor < sobrescritas (flags); None não sobrescreve."""
        valores: Dict[str, Any] = {}
        if arquivo is not None:
            valores.update(ler_arquivo_config(arquivo))
        valores.update({k: v for k, v in (sobrescritas or {}).items() if v is not None})
        tipos = {campo.name: type(campo.default) for campo in fields(cls)}
        convertidos = {}
        for chave, valor in valores.items():
            if chave not in tipos:
                raise ParseError("chave desconhecida", campo=chave)
            convertidos[chave] = _converter(chave, valor, tipos[chave])
        return cls(**convertidos).validar()


def _converter(chave: str, valor: Any, tipo: type) -> Any:
    if tipo is int:
        try:
            return int(valor)
        except (TypeError, ValueError):
            raise ParseError(f"inteiro esperado, obtido {valor!r}", campo=chave) from None
    return str(valor)


def ler_arquivo_config(caminho: str) -> Dict[str, str]:
    """Linhas `chave = valor`; `#` inicia comentário; `-` e `_` são equivalentes nas chaves."""
    valores: Dict[str, str] = {}
    for numero, linha in enumerate(Path(caminho).read_text(encoding="utf-8").splitlines(), start=1):
        linha = linha.split("#", 1)[0].strip()
        if not linha:
            continue
        if "=" not in linha:
            raise ParseError(f"esperado 'chave = valor' em {caminho}", linha=numero)
        chave, valor = (parte.strip() for parte in linha.split("=", 1))
        chave = chave.replace("-", "_")
        valores[APELIDOS.get(chave, chave)] = valor
    return valores
