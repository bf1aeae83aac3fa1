import os

os.environ.setdefault("KITEBL_DATABASE_URL", "sqlite://")

import pytest

from algebra.hoop_core import FiniteHoop, direct_product, godel_chain, lukasiewicz_chain, trivial_hoop
from algebra.kite_builder import KiteSpec, build_kite

# índices en G2: t = 0, 1 = 1
T, UNO = 0, 1


@pytest.fixture(autouse=True)
def cota_por_defecto(monkeypatch):
    monkeypatch.delenv("KITEBL_ENUM_BOUND", raising=False)


@pytest.fixture
def g2():
    return godel_chain(2)


@pytest.fixture
def g3():
    return godel_chain(3)


@pytest.fixture
def l3():
    return lukasiewicz_chain(3)


@pytest.fixture
def trivial():
    return trivial_hoop()


@pytest.fixture
def g2xg2():
    return direct_product(godel_chain(2), godel_chain(2))


@pytest.fixture
def spec_cadena():
    """I={0,1}, J={0}, λ(0)=0, ρ(0)=1."""
    return KiteSpec.crear(2, [0], [1])


@pytest.fixture
def kite6(g2, spec_cadena):
    """Kite de 6 elementos: 0=L:e0, 1=L:1 (cero), 2=U:e0,e0, 3=U:e0,1, 4=U:1,e0, 5=U:1,1 (uno)."""
    return build_kite(g2, spec_cadena)


@pytest.fixture
def booleana():
    return build_kite(trivial_hoop(), KiteSpec.crear(0, [], []))


def heyting_no_prelineal() -> FiniteHoop:
    """Álgebra de Heyting 0 < a, b < c < 1 con a, b incomparables: hoop no básico."""
    arriba = {0: {0, 1, 2, 3, 4}, 1: {1, 3, 4}, 2: {2, 3, 4}, 3: {3, 4}, 4: {4}}
    leq = [[y in arriba[x] for y in range(5)] for x in range(5)]

    def infimo(x, y):
        cotas = [z for z in range(5) if leq[z][x] and leq[z][y]]
        return next(z for z in cotas if all(leq[w][z] for w in cotas))

    def implica(x, y):
        candidatos = [z for z in range(5) if leq[infimo(z, x)][y]]
        return next(z for z in candidatos if all(leq[w][z] for w in candidatos))

    mul = tuple(tuple(infimo(x, y) for y in range(5)) for x in range(5))
    ldiv = tuple(tuple(implica(x, y) for y in range(5)) for x in range(5))
    rdiv = tuple(tuple(implica(y, x) for y in range(5)) for x in range(5))
    return FiniteHoop(
        name="H5", size=5, unit=4, mul=mul, ldiv=ldiv, rdiv=rdiv, labels=("z", "a", "b", "c", "1")
    )


@pytest.fixture
def no_basico():
    return heyting_no_prelineal()
