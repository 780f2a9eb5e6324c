import logging
import sys

FORMATO = "%(levelname)s %(name)s %(message)s"


def configurar_logging(nivel: int = logging.INFO) -> None:
    """Um único handler em stderr; chamadas repetidas só trocam o nível."""
    raiz = logging.getLogger()
    if not any(getattr(h, "_analise", False) for h in raiz.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(FORMATO))
        handler._analise = True
        raiz.addHandler(handler)
    raiz.setLevel(nivel)
