import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from classes.configuracao import RunConfig
from classes.erros import ErroAnaliseComputavel
from utils.comandos import ERRO_USO, cmd_game, cmd_gen, cmd_lu, cmd_rellich, cmd_verify, formatar
from utils.registro import configurar_logging

logger = logging.getLogger(__name__)

CAMPOS_CONFIG = (
    "precision_bits",
    "tol_bits",
    "depth",
    "corpus_size",
    "seed",
    "budget",
    "output_format",
    "out",
    "horizon",
    "max_stages",
    "grafico",
)


def construir_parser() -> argparse.ArgumentParser:
    """
    Parser com um subcomando por operação; as opções comuns valem em
    qualquer subcomando e sobrescrevem o arquivo de configuração.
    """
    comum = argparse.ArgumentParser(add_help=False)
    comum.add_argument("--config", help="arquivo chave = valor")
    comum.add_argument("--precision-bits", type=int)
    comum.add_argument("--tol-bits", type=int)
    comum.add_argument("--depth", type=int)
    comum.add_argument("--corpus-size", type=int)
    comum.add_argument("--seed", type=int)
    comum.add_argument("--budget", type=int)
    comum.add_argument("--format", dest="output_format", choices=("json", "table"))
    comum.add_argument("--out", help="arquivo do relatório (diretório para gen)")
    comum.add_argument("--horizon", type=int)
    comum.add_argument("--max-stages", type=int)
    comum.add_argument("--grafico", help="arquivo PNG da figura")
    verbosidade = comum.add_mutually_exclusive_group()
    verbosidade.add_argument("-v", "--verbose", action="store_true")
    verbosidade.add_argument("-q", "--quiet", action="store_true")

    parser = argparse.ArgumentParser(
        prog="analise",
        description="Reduções de Weihrauch verificáveis, jogo de separação e LU robusta.",
    )
    sub = parser.add_subparsers(dest="comando", required=True)

    lu = sub.add_parser("lu", parents=[comum], help="decompõe e valida uma matriz")
    lu.add_argument("matriz")
    lu.add_argument("--modo", choices=("pq", "q"), default="pq")
    lu.add_argument("--blocos", nargs=2, type=int, metavar=("R1", "C1"))

    verify = sub.add_parser("verify", parents=[comum], help="verifica reduções da biblioteca")
    verify.add_argument("reducao", help='nome da redução ou "all"')

    game = sub.add_parser("game", parents=[comum], help="joga contra um oponente")
    game.add_argument("oponente", nargs="?", help="arquivo JSON; sem ele joga a suíte embutida")

    gen = sub.add_parser("gen", parents=[comum], help="gera matrizes, corpus ou oponentes")
    gen.add_argument("tipo", choices=("matrices", "corpus", "opponents"))
    gen.add_argument("--problema", default="rDiv")

    rellich = sub.add_parser("rellich", parents=[comum], help="grade de recuperação de Rellich")
    rellich.add_argument("--k-max", type=int, default=3)
    return parser


def despachar(args: argparse.Namespace, config: RunConfig):
    if args.comando == "lu":
        return cmd_lu(args.matriz, config, args.modo, tuple(args.blocos) if args.blocos else None)
    if args.comando == "verify":
        return cmd_verify(args.reducao, config)
    if args.comando == "game":
        return cmd_game(args.oponente, config)
    if args.comando == "gen":
        return cmd_gen(args.tipo, config, args.problema)
    return cmd_rellich(config, args.k_max)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Executa um subcomando e escreve o relatório.

    Retorno:
        0 sucesso, 1 falha de verificação, 2 erro de leitura ou de uso,
        3 profundidade insuficiente no jogo.
    """
    args = construir_parser().parse_args(argv)
    configurar_logging(logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO)
    try:
        config = RunConfig.montar(args.config, {campo: getattr(args, campo) for campo in CAMPOS_CONFIG})
        codigo, relatorio = despachar(args, config)
        texto = formatar(relatorio, config.output_format)
        if config.out and args.comando != "gen":
            Path(config.out).write_text(texto + "\n", encoding="utf-8")
        else:
            print(texto)
    except (ErroAnaliseComputavel, OSError, ValueError) as erro:
        logger.error("[CLI] %s", erro)
        return ERRO_USO
    return codigo


if __name__ == "__main__":
    sys.exit(main())
