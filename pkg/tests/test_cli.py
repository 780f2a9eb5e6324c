import json
from dataclasses import replace

import pytest

from classes.configuracao import RunConfig, ler_arquivo_config
from classes.erros import ParseError
from main import main
from utils.comandos import cmd_game, cmd_gen, cmd_lu, cmd_rellich, cmd_verify, formatar, ler_matriz, racional_de


def escrever(caminho, dados):
    caminho.write_text(json.dumps(dados), encoding="utf-8")
    return str(caminho)


# ------------------------------------------------------------ configuração
def test_flags_sobrescrevem_arquivo(tmp_path):
    arquivo = tmp_path / "execucao.cfg"
    arquivo.write_text("# execução curta\nsemente = 4\ncorpus-size = 7\nformat = table\n", encoding="utf-8")
    config = RunConfig.montar(str(arquivo), {"seed": 9, "depth": None})
    assert config.seed == 9
    assert config.corpus_size == 7
    assert config.output_format == "table"
    assert config.depth == RunConfig().depth


def test_arquivo_de_configuracao_malformado(tmp_path):
    arquivo = tmp_path / "ruim.cfg"
    arquivo.write_text("depth = 10\nsem igual\n", encoding="utf-8")
    with pytest.raises(ParseError) as erro:
        ler_arquivo_config(str(arquivo))
    assert erro.value.linha == 2


@pytest.mark.parametrize(
    "sobrescritas, campo",
    [
        ({"corpus_size": 0}, "corpus_size"),
        ({"seed": -1}, "seed"),
        ({"depth": "fundo"}, "depth"),
        ({"output_format": "xml"}, "output_format"),
        ({"cor": "azul"}, "cor"),
    ],
)
def test_configuracao_invalida(sobrescritas, campo):
    with pytest.raises(ParseError) as erro:
        RunConfig.montar(None, sobrescritas)
    assert erro.value.campo == campo


# --------------------------------------------------------------------- lu
def test_lu_da_identidade(tmp_path, config):
    caminho = escrever(tmp_path / "id.json", {"rows": 2, "cols": 2, "entries": [[1, "0"], ["0", {"dyadic": [1, 0]}]]})
    codigo, relatorio = cmd_lu(caminho, config)
    assert codigo == 0
    assert relatorio["schema"] == "lu/1"
    assert relatorio["validation"]["passed"]
    assert "rellich" not in relatorio
    assert "posto" in formatar(relatorio, "table")


def test_racional_malformado_aponta_a_celula(tmp_path):
    caminho = escrever(tmp_path / "ruim.json", {"entries": [["1", "2"], ["3", "1//2"]]})
    with pytest.raises(ParseError) as erro:
        ler_matriz(caminho)
    assert (erro.value.linha, erro.value.coluna) == (1, 1)
    with pytest.raises(ParseError):
        racional_de("1/0")
    assert racional_de(" -3 / 4 ") == -racional_de("3/4")


def test_lu_da_matriz_de_rellich(tmp_path, config):
    celula = lambda a, b: {"rellich": {"eps": "1/2", "cell": [a, b]}}
    caminho = escrever(tmp_path / "b.json", {"entries": [[celula(0, 0), celula(0, 1)], [celula(1, 0), celula(1, 1)]]})
    A, celulas = ler_matriz(caminho)
    assert len(celulas) == 4
    codigo, relatorio = cmd_lu(caminho, config)
    assert codigo == 0
    assert relatorio["rellich"]["eps"] == "1/2"
    assert 0 <= relatorio["rellich"]["x_eps_approx"] <= 1


def test_rellich_com_eps_fora_do_intervalo(tmp_path):
    caminho = escrever(tmp_path / "b.json", {"entries": [[{"rellich": {"eps": "3/2", "cell": [0, 0]}}]]})
    with pytest.raises(ParseError):
        ler_matriz(caminho)


@pytest.mark.parametrize("celula", [5, None, ["a", 0], [1]])
def test_celula_de_rellich_malformada(tmp_path, celula):
    caminho = escrever(tmp_path / "b.json", {"entries": [["1", {"rellich": {"eps": "1/2", "cell": celula}}]]})
    with pytest.raises(ParseError) as erro:
        ler_matriz(caminho)
    assert (erro.value.linha, erro.value.coluna) == (0, 1)
    assert main(["lu", caminho, "-q"]) == 2


# ------------------------------------------------------------ verify e game
def test_verify_relatorio(config):
    codigo, relatorio = cmd_verify("lpo_le_ubrdiv", config)
    assert codigo == 0
    assert relatorio["summary"][0]["reduction"] == "lpo_le_ubrdiv"
    assert relatorio["summary"][0]["passed"]


def test_game_de_arquivo(tmp_path, config):
    dados = {
        "k": 1,
        "trees": [{"tipo": "cheia"}],
        "phi": {"op": "const", "ciclo": "0"},
        "psi": {"op": "const", "valor": "0"},
        "depth": 6,
    }
    codigo, relatorio = cmd_game(escrever(tmp_path / "constante.json", dados), config)
    assert codigo == 0
    assert relatorio["opponent"] == "constante"
    assert relatorio["verdict"] == "pro_wins"
    assert relatorio["T_e"][:2] == ["1", "10"]


# -------------------------------------------------------------------- gen
def test_gen_matrizes_deterministico(tmp_path, config):
    _, primeiro = cmd_gen("matrices", RunConfig(**{**config.para_json(), "seed": 7, "out": str(tmp_path / "a")}))
    _, segundo = cmd_gen("matrices", RunConfig(**{**config.para_json(), "seed": 7, "out": str(tmp_path / "b")}))
    assert len(primeiro["files"]) == config.corpus_size
    conteudos = lambda r: [open(f, encoding="utf-8").read() for f in r["files"]]
    assert conteudos(primeiro) == conteudos(segundo)


def test_gen_oponentes_e_corpus(config):
    _, oponentes = cmd_gen("opponents", config)
    assert len(oponentes["files"]) == 8
    _, corpus = cmd_gen("corpus", config, "rDiv")
    (arquivo,) = corpus["files"]
    with open(arquivo, encoding="utf-8") as f:
        entradas = json.load(f)
    assert len(entradas) == config.corpus_size
    assert {"x": 0, "y": 0} in [e["spec"] for e in entradas]
    with pytest.raises(ValueError):
        cmd_gen("planilhas", config)


# ------------------------------------------------------------------- main
def test_main_codigos_de_saida(tmp_path):
    saida = str(tmp_path / "relatorio.json")
    assert main(["verify", "lpo_le_ubrdiv", "--corpus-size", "0", "-q"]) == 2
    assert main(["verify", "lpo_le_tudo", "-q"]) == 2
    assert main(["game", "--max-stages", "16", "--out", saida, "-q"]) == 0
    with open(saida, encoding="utf-8") as f:
        assert json.load(f)["schema"] == "game-suite/1"


def test_main_opcao_invalida():
    with pytest.raises(SystemExit) as erro:
        main(["lu", "m.json", "--modo", "lr"])
    assert erro.value.code == 2


def test_main_matriz_inexistente(tmp_path):
    assert main(["lu", str(tmp_path / "nada.json"), "-q"]) == 2


# ---------------------------------------------------------------- figuras
def test_rellich_grava_figura(tmp_path, config):
    figura = tmp_path / "rellich.png"
    _, relatorio = cmd_rellich(replace(config, grafico=str(figura)), k_max=1)
    assert len(relatorio["grid"]) == 9
    assert figura.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_game_grava_figura(tmp_path, config):
    dados = {"k": 1, "trees": [{"tipo": "cheia"}], "phi": {"op": "proj", "i": 0}, "psi": {"op": "const", "valor": "0"}, "depth": 4}
    figura = tmp_path / "arvore.png"
    codigo, _ = cmd_game(escrever(tmp_path / "identidade.json", dados), replace(config, grafico=str(figura), max_stages=6))
    assert codigo == 0
    assert figura.stat().st_size > 0
    assert figura.read_bytes()[:4] == b"\x89PNG"
