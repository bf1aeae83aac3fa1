import pytest
from pydantic import ValidationError

from algebra.errores import NonInjectiveError, NotBasicError, PreconditionError, StructuralError
from algebra.kite_builder import (
    KiteElement,
    KiteSpec,
    Parte,
    build_kite,
    dimension,
    double_negation_transport,
    element_at,
    element_index,
    good_by_spec,
    is_good,
    is_pseudo_mv,
    kite_ldiv,
    kite_mul,
    kite_rdiv,
    mv_by_spec,
    negations,
    one_element,
    zero_element,
)
from tests.conftest import T, UNO


def L(*coords):
    return KiteElement(part=Parte.LOWER, coords=coords)


def U(*coords):
    return KiteElement(part=Parte.UPPER, coords=coords)


def test_tamano_y_orden_canonico(kite6):
    assert kite6.size == 6
    assert kite6.labels == ("L:e0", "L:1", "U:e0,e0", "U:e0,1", "U:1,e0", "U:1,1")
    assert kite6.elements[kite6.zero] == L(UNO)
    assert kite6.elements[kite6.one] == U(UNO, UNO)
    assert kite6.verified


@pytest.mark.parametrize("spec", [KiteSpec.crear(0, [], []), KiteSpec.crear(2, [0], [1]), KiteSpec.crear(3, [], [])])
def test_kite_sobre_hoop_trivial_es_booleana(trivial, spec):
    K = build_kite(trivial, spec)
    assert K.size == 2
    assert K.zero != K.one


def test_kite_vacio_sobre_g2(g2):
    assert build_kite(g2, KiteSpec.crear(0, [], [])).size == 2


def test_producto(kite6):
    assert kite_mul(kite6, U(T, UNO), L(T)) == L(UNO)
    assert kite_mul(kite6, L(T), U(T, UNO)) == L(T)
    assert kite_mul(kite6, L(T), L(T)) == L(UNO)


def test_division_izquierda(kite6):
    assert kite_ldiv(kite6, U(T, UNO), L(UNO)) == L(T)
    assert kite_ldiv(kite6, L(UNO), L(UNO)) == U(UNO, UNO)
    assert kite_ldiv(kite6, L(T), U(T, T)) == U(UNO, UNO)


def test_division_derecha(kite6):
    assert kite_rdiv(kite6, L(UNO), U(T, T)) == L(T)
    assert kite_rdiv(kite6, L(UNO), L(T)) == U(T, UNO)
    assert kite_rdiv(kite6, U(T, UNO), L(T)) == U(UNO, UNO)


def test_inferior_por_inferior_es_cero_y_division_hacia_arriba_es_uno(kite6):
    for x in kite6.elements:
        for y in kite6.elements:
            if x.part == Parte.LOWER and y.part == Parte.LOWER:
                assert kite_mul(kite6, x, y) == zero_element(kite6)
            if x.part == Parte.LOWER and y.part == Parte.UPPER:
                assert kite_ldiv(kite6, x, y) == one_element(kite6)
                assert kite_rdiv(kite6, y, x) == one_element(kite6)


def test_negaciones(kite6):
    assert negations(kite6, U(T, T)) == (L(T), L(T))
    assert negations(kite6, U(UNO, UNO)) == (L(UNO), L(UNO))
    assert negations(kite6, L(UNO)) == (U(UNO, UNO), U(UNO, UNO))


def test_no_es_bueno_con_testigo(kite6):
    veredicto = is_good(kite6)
    assert not veredicto.holds
    x = kite6.elements[veredicto.witness]
    assert x == U(T, T)
    menos, tilde = negations(kite6, x)
    assert negations(kite6, menos)[1] != negations(kite6, tilde)[0]
    assert not is_pseudo_mv(kite6).holds


def test_bueno_y_mv_cuando_las_imagenes_coinciden(g2):
    identidad = build_kite(g2, KiteSpec.crear(1, [0], [0]))
    assert is_good(identidad).holds
    ciclo = build_kite(g2, KiteSpec.crear(2, [0, 1], [1, 0]))
    assert is_pseudo_mv(ciclo).holds


def test_bueno_pero_no_mv(g2):
    K = build_kite(g2, KiteSpec.crear(2, [0], [0]))
    assert is_good(K).holds
    assert not is_pseudo_mv(K).holds


def test_trivial_es_mv(trivial, spec_cadena):
    K = build_kite(trivial, spec_cadena)
    assert is_good(K).holds and is_pseudo_mv(K).holds


def test_predicados_sobre_lambda_y_rho():
    assert good_by_spec(KiteSpec.crear(3, [0, 2], [2, 0]))
    assert not mv_by_spec(KiteSpec.crear(3, [0, 2], [2, 0]))
    assert mv_by_spec(KiteSpec.crear(2, [1, 0], [0, 1]))
    assert not good_by_spec(KiteSpec.crear(2, [0], [1]))


def test_lambda_no_inyectiva(g2):
    with pytest.raises(NonInjectiveError):
        build_kite(g2, KiteSpec.crear(2, [0, 0], [0, 1]))


def test_spec_fuera_de_rango():
    with pytest.raises(ValidationError):
        KiteSpec.crear(2, [2], [0])
    with pytest.raises(ValidationError):
        KiteSpec(i_size=2, j_size=2, lambda_=(0,), rho=(1,))


def test_spec_acepta_alias_lambda():
    spec = KiteSpec.model_validate({"i_size": 2, "j_size": 1, "lambda": [0], "rho": [1]})
    assert spec.lambda_ == (0,)
    assert spec.model_dump(by_alias=True)["lambda"] == (0,)
    assert spec.lambda_inverse == (0, None)
    assert spec.rho_inverse == (None, 0)


def test_hoop_no_basico_rechazado_salvo_force(no_basico):
    spec = KiteSpec.crear(1, [0], [0])
    with pytest.raises(NotBasicError) as info:
        build_kite(no_basico, spec)
    assert info.value.testigo is not None
    K = build_kite(no_basico, spec, force=True)
    assert not K.verified


def test_elemento_con_forma_incorrecta(kite6):
    with pytest.raises(StructuralError):
        kite_mul(kite6, U(T), L(T))
    with pytest.raises(StructuralError):
        kite_mul(kite6, U(T, 5), L(T))


def test_operaciones_de_kite_exigen_un_kite(kite6):
    from algebra.filter_engine import FilterSet, quotient

    cociente = quotient(kite6, FilterSet.de([kite6.one]))
    with pytest.raises(PreconditionError):
        kite_mul(cociente, L(T), L(T))


def test_indices_canonicos(kite6, g3):
    for idx, x in enumerate(kite6.elements):
        assert element_index(kite6, x) == idx
        assert element_at(kite6, idx) == x
    K = build_kite(g3, KiteSpec.crear(2, [1], [0]))
    assert element_index(K, U(2, 0)) == 3 + 2 * 3 + 0
    with pytest.raises(StructuralError):
        element_at(K, K.size)


def test_dimension(kite6):
    assert dimension(kite6, U(UNO, UNO)) == 0
    assert dimension(kite6, U(T, UNO)) == 1
    assert dimension(kite6, U(T, T)) == 2
    assert dimension(kite6, L(T)) == 1


def test_transporte_por_doble_negacion(kite6):
    # u~~ lleva la coordenada k a ρ(λ⁻¹(k)); sin λ⁻¹(k) da el tope
    assert double_negation_transport(kite6, U(T, UNO), "tilde", 1) == U(UNO, T)
    assert double_negation_transport(kite6, U(UNO, T), "tilde", 1) == U(UNO, UNO)
    assert double_negation_transport(kite6, U(UNO, T), "minus", 1) == U(T, UNO)
    assert double_negation_transport(kite6, U(T, UNO), "tilde", 2) == U(UNO, UNO)
    assert double_negation_transport(kite6, U(T, UNO), "tilde", 0) == U(T, UNO)


def test_transporte_con_parametros_invalidos(kite6):
    with pytest.raises(PreconditionError):
        double_negation_transport(kite6, U(T, UNO), "otra", 1)
    with pytest.raises(PreconditionError):
        double_negation_transport(kite6, U(T, UNO), "tilde", -1)
