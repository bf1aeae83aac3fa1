import pytest

from algebra.catalogo import NOMBRES_LISTADOS, listar_catalogo, obtener_hoop
from algebra.errores import UnknownCatalogNameError
from algebra.hoop_core import check_basic, check_pseudo_hoop, no_basico_con_testigo


def test_listado_con_tamanos():
    listado = dict(listar_catalogo())
    assert listado["trivial"] == 1
    assert listado["godel:2"] == 2
    assert listado["lukasiewicz:6"] == 6
    assert listado["product:godel:2*lukasiewicz:3"] == 6
    assert listado["osum:godel:2+godel:2"] == 3
    assert listado["osum:(product:godel:2*godel:2)+godel:2"] == 5
    assert list(listado) == NOMBRES_LISTADOS


NO_BASICO = "osum:(product:godel:2*godel:2)+godel:2"


@pytest.mark.parametrize("nombre", [n for n in NOMBRES_LISTADOS if n != NO_BASICO])
def test_catalogo_basico(nombre):
    h = obtener_hoop(nombre)
    assert check_pseudo_hoop(h).passed
    assert check_basic(h)


def test_suma_ordinal_sobre_un_producto_no_es_basica():
    h = obtener_hoop(NO_BASICO)
    assert check_pseudo_hoop(h).passed
    assert not check_basic(h)
    assert no_basico_con_testigo(h) == ("basic-i", (1, 2, 3))


def test_nombres_y_etiquetas_de_productos():
    h = obtener_hoop("product:godel:2*godel:2")
    assert h.name == "(G2*G2)"
    assert h.labels == ("e0.e0", "e0.1", "1.e0", "1")
    anidado = obtener_hoop("product:(product:godel:2*godel:2)*godel:2")
    assert anidado.size == 8
    assert "(e0.e0).e0" in anidado.labels


def test_suma_ordinal():
    h = obtener_hoop("osum:godel:2+lukasiewicz:3")
    assert h.name == "(G2+Ł3)"
    assert h.labels == ("e0_0", "e0_1", "e1_1", "1")
    assert h.unit == 3


def test_parentesis_externos():
    assert obtener_hoop("(godel:3)") == obtener_hoop("godel:3")


@pytest.mark.parametrize(
    "nombre",
    ["cantor:3", "godel:0", "godel:x", "product:godel:2", "osum:godel:2*godel:2", "osum:(godel:2+godel:2", ""],
)
def test_nombres_desconocidos(nombre):
    with pytest.raises(UnknownCatalogNameError):
        obtener_hoop(nombre)
