"""Barridos completos sobre hoops pequeños y todas las specs con |I| ≤ 3, |J| ≤ 2."""
import pytest
from hypothesis import given, settings, strategies as st

from algebra.bl_verifier import check_pseudo_bl, find_noncommutative_witness
from algebra.filter_engine import (
    enumerate_filters,
    enumerate_normal_filters,
    is_maximal_filter,
    is_normal,
    is_subdirectly_irreducible,
    lift_hoop_filter,
    upper_block,
)
from algebra.hoop_core import direct_product, godel_chain, is_trivial, lukasiewicz_chain, trivial_hoop
from algebra.isomorfismo import are_isomorphic
from algebra.kite_builder import KiteSpec, build_kite, good_by_spec, is_good, is_pseudo_mv, mv_by_spec
from algebra.structure_analysis import (
    connected_components,
    decompose,
    irreducibility_predicate,
    subdirect_representation,
)
from tests.oracles import componentes_por_orbitas, especificaciones, filtros_por_fuerza_bruta

pytestmark = pytest.mark.lento

HOOPS = [trivial_hoop(), godel_chain(2), godel_chain(3), lukasiewicz_chain(3)]
NO_TRIVIALES = [h for h in HOOPS if not is_trivial(h)]
BARRIDO = list(especificaciones(3, 2))


def _id(spec: KiteSpec) -> str:
    return spec.describir()


def test_el_barrido_tiene_58_specs():
    assert len(BARRIDO) == 58


@pytest.mark.parametrize("h", HOOPS, ids=lambda h: h.name)
@pytest.mark.parametrize("spec", BARRIDO, ids=_id)
def test_axiomas_bl_de_cada_kite(h, spec):
    informe = check_pseudo_bl(build_kite(h, spec))
    esperados = set() if spec.j_size == 0 or is_trivial(h) else {"meet-division", "divisibility"}
    assert set(informe.axiomas_fallidos) == esperados


@pytest.mark.parametrize("h", NO_TRIVIALES, ids=lambda h: h.name)
@pytest.mark.parametrize("spec", BARRIDO, ids=_id)
def test_bondad_y_mv_coinciden_con_lambda_y_rho(h, spec):
    K = build_kite(h, spec)
    assert is_good(K).holds == good_by_spec(spec)
    assert is_pseudo_mv(K).holds == mv_by_spec(spec)


@pytest.mark.parametrize("spec", [s for s in BARRIDO if s.j_size == s.i_size], ids=_id)
def test_specs_biyectivas_dan_pseudo_mv(spec):
    for h in NO_TRIVIALES:
        assert is_pseudo_mv(build_kite(h, spec)).holds


def test_testigo_de_no_bondad(kite6):
    veredicto = is_good(kite6)
    assert not veredicto.holds
    x = kite6.elements[veredicto.witness]
    assert x.part.value == "U" and x.coords == (0, 0)


@pytest.mark.parametrize("spec", [s for s in BARRIDO if s.lambda_ == s.rho], ids=_id)
def test_lambda_igual_a_rho_es_conmutativo(spec):
    for h in NO_TRIVIALES:
        assert find_noncommutative_witness(build_kite(h, spec)) is None


def test_el_kite_de_seis_no_es_conmutativo(kite6):
    assert find_noncommutative_witness(kite6) is not None


def _pares_del_criterio():
    g2 = godel_chain(2)
    for h in (g2, direct_product(g2, g2)):
        for spec in BARRIDO:
            if h.size ** spec.i_size + h.size ** spec.j_size <= 12:
                yield h, spec


@pytest.mark.parametrize("h, spec", list(_pares_del_criterio()), ids=lambda v: getattr(v, "name", None) or _id(v))
def test_criterio_de_irreducibilidad(h, spec):
    assert irreducibility_predicate(h, spec) == is_subdirectly_irreducible(build_kite(h, spec)).holds


@pytest.mark.parametrize("h", NO_TRIVIALES, ids=lambda h: h.name)
@pytest.mark.parametrize("spec", [s for s in BARRIDO if s.i_size > 0], ids=_id)
def test_bloque_superior_y_filtros_levantados(h, spec):
    K = build_kite(h, spec)
    bloque = upper_block(K)
    assert is_normal(K, bloque)
    assert is_maximal_filter(K, bloque)
    for N in enumerate_normal_filters(h):
        if len(N) > 1:
            assert is_normal(K, lift_hoop_filter(K, N))


@pytest.mark.parametrize("h", NO_TRIVIALES, ids=lambda h: h.name)
@pytest.mark.parametrize("spec", BARRIDO, ids=_id)
def test_descomposicion_y_representacion(h, spec):
    factores = decompose(h, spec)
    assert len(factores) == max(1, len(connected_components(spec).components))
    representacion = subdirect_representation(h, spec)
    assert representacion.injective
    for factor in representacion.factors:
        hoop_factor = next(f.hoop for f in representacion.hoop_factors if f.filter == factor.hoop_filter)
        assert irreducibility_predicate(hoop_factor, factor.spec)


@pytest.mark.parametrize("spec", BARRIDO, ids=_id)
def test_kite_sobre_hoop_trivial_es_la_booleana(spec, booleana):
    assert are_isomorphic(build_kite(trivial_hoop(), spec), booleana)


@pytest.mark.parametrize("h", HOOPS, ids=lambda h: h.name)
@pytest.mark.parametrize("spec", BARRIDO, ids=_id)
def test_enumeracion_coincide_con_el_oraculo(h, spec):
    K = build_kite(h, spec)
    if K.size > 12:
        pytest.skip("fuera del alcance del oráculo")
    assert [frozenset(F.members) for F in enumerate_filters(K)] == filtros_por_fuerza_bruta(K)


@st.composite
def specs_grandes(draw):
    i_size = draw(st.integers(0, 6))
    j_size = draw(st.integers(0, i_size))
    lam = draw(st.permutations(range(i_size)))[:j_size]
    rho = draw(st.permutations(range(i_size)))[:j_size]
    return KiteSpec.crear(i_size, lam, rho)


@settings(max_examples=200, deadline=None)
@given(specs_grandes())
def test_componentes_coinciden_con_orbitas(spec):
    assert list(connected_components(spec).components) == componentes_por_orbitas(spec)
