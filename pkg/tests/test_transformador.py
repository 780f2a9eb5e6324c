import pytest

from classes.erros import DivergenceError
from classes.name import periodico
from classes.transformador import Buscar, Emitir, Leitura, Ler, Passo, Programa, fitas_lidas, run_transformer


def copia():
    i = 0
    while True:
        bit = yield Ler(0, i)
        yield Emitir(bit)
        i += 1


def test_copia_le_so_o_necessario():
    prefixo, registro = run_transformer(Programa("copia", copia), [periodico("", "01")], 6)
    assert prefixo == "010101"
    assert registro == [[Leitura((0,), j, j)] for j in range(6)]
    assert fitas_lidas(registro) == {(0,): 5}


def test_programa_mudo_diverge():
    def mudo():
        while True:
            yield Passo()

    with pytest.raises(DivergenceError) as erro:
        run_transformer(Programa("mudo", mudo), [], 1, orcamento=50)
    assert erro.value.indice_bit == 0
    assert erro.value.orcamento == 50


def test_programa_que_termina_cedo():
    def dois_bits():
        yield Emitir(1)
        yield Emitir(0)

    with pytest.raises(DivergenceError):
        run_transformer(Programa("curto", dois_bits), [], 3)


def test_busca_exige_limite():
    with pytest.raises(ValueError):
        Buscar(0, 0, 1, None)
