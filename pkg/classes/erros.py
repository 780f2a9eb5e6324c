from typing import Iterable, Optional


class ErroAnaliseComputavel(Exception):
    """Base de todas as exceções do projeto."""


class DecodingError(ErroAnaliseComputavel):
    """
    Nome malformado: a estrutura de blocos esperada foi violada.

    Atributos:
        posicao (int): Posição do bit em que a violação foi detectada.
    """

    def __init__(self, mensagem: str, posicao: int) -> None:
        super().__init__(f"{mensagem} (posição {posicao})")
        self.posicao = posicao


class DivergenceError(ErroAnaliseComputavel):
    """
    Programa improdutivo: nenhum bit de saída dentro do orçamento de passos.

    Atributos:
        indice_bit (int): Índice do bit de saída que não foi produzido.
        orcamento (int): Orçamento de passos esgotado.
    """

    def __init__(self, indice_bit: int, orcamento: int, canal: object = 0) -> None:
        super().__init__(
            f"programa divergiu no bit {indice_bit} do canal {canal!r} "
            f"após {orcamento} passos sem saída"
        )
        self.indice_bit = indice_bit
        self.orcamento = orcamento
        self.canal = canal


class DomainError(ErroAnaliseComputavel):
    """Instância fora do domínio do problema (ou inconclusiva no horizonte)."""


class GenerationError(ErroAnaliseComputavel):
    """Descritor de geração contraditório."""


class ConstructionError(ErroAnaliseComputavel):
    """Construtor aplicado a um problema sem sequência densa declarada."""


class UnknownReductionError(ErroAnaliseComputavel, KeyError):
    """Nome de redução fora da biblioteca."""

    def __init__(self, nome: str, disponiveis: Iterable[str]) -> None:
        self.nome = nome
        self.disponiveis = sorted(disponiveis)
        super().__init__(
            f"redução desconhecida {nome!r}; disponíveis: {', '.join(self.disponiveis)}"
        )

    def __str__(self) -> str:
        return self.args[0]


class ParseError(ErroAnaliseComputavel):
    """
    Erro de leitura de arquivo (matriz, oponente ou configuração).

    Atributos:
        linha (Optional[int]): Linha da matriz, quando aplicável.
        coluna (Optional[int]): Coluna da matriz, quando aplicável.
        campo (Optional[str]): Campo do arquivo, quando aplicável.
    """

    def __init__(
        self,
        mensagem: str,
        linha: Optional[int] = None,
        coluna: Optional[int] = None,
        campo: Optional[str] = None,
    ) -> None:
        local = []
        if linha is not None:
            local.append(f"linha {linha}")
        if coluna is not None:
            local.append(f"coluna {coluna}")
        if campo is not None:
            local.append(f"campo {campo!r}")
        sufixo = f" ({', '.join(local)})" if local else ""
        super().__init__(mensagem + sufixo)
        self.linha = linha
        self.coluna = coluna
        self.campo = campo


class ShapeError(ErroAnaliseComputavel):
    """Dimensões incompatíveis em álgebra linear."""
