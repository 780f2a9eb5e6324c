import sys
from pathlib import Path

import pytest

RAIZ = Path(__file__).resolve().parent.parent
if str(RAIZ) not in sys.path:
    sys.path.insert(0, str(RAIZ))

from classes.configuracao import RunConfig  # noqa: E402


@pytest.fixture
def config(tmp_path):
    """Configuração pequena, com saída em diretório temporário."""
    return RunConfig(corpus_size=20, depth=12, budget=20000, out=str(tmp_path / "saida")).validar()
