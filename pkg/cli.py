"""Línea de comandos de KiteBL.

Códigos de salida: 0 aprobado, 1 fallo semántico, 2 error de formato/uso/configuración,
3 cota de enumeración superada.
"""
import functools
import logging
from pathlib import Path
from typing import Optional, Tuple, Union

import click

from algebra.bl_verifier import check_pseudo_bl, find_noncommutative_witness
from algebra.catalogo import listar_catalogo, obtener_hoop
from algebra.errores import (
    ConfigError,
    EnumerationBoundError,
    FormatError,
    InvalidSizeError,
    KiteBLError,
    StructuralError,
    UnknownCatalogNameError,
)
from algebra.filter_engine import (
    FilterSet,
    enumerate_normal_filters,
    is_subdirectly_irreducible,
    upper_block,
)
from algebra.hoop_core import (
    FiniteHoop,
    check_basic,
    check_commutative,
    check_pseudo_hoop,
    check_wajsberg,
    is_trivial,
)
from algebra.kite_builder import (
    FiniteBL,
    KiteSpec,
    build_kite,
    dimension,
    element_at,
    is_good,
    is_pseudo_mv,
    tablas_negacion,
)
from algebra.structure_analysis import (
    classify_finite,
    connected_components,
    irreducibility_predicate,
    subdirect_representation,
)
from utils.formato_utils import (
    documento_bl,
    documento_hoop,
    documento_informe,
    documento_spec,
    escribir,
    formatear_elemento,
    formatear_informe,
    leer_algebra,
    leer_hoop,
    orden_a_dot,
    parsear_elemento,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_SEMANTICO = 1
EXIT_FORMATO = 2
EXIT_COTA = 3


def codigo_salida(error: KiteBLError) -> int:
    if isinstance(error, EnumerationBoundError):
        return EXIT_COTA
    if isinstance(error, (FormatError, StructuralError, UnknownCatalogNameError, ConfigError, InvalidSizeError)):
        return EXIT_FORMATO
    return EXIT_SEMANTICO


def manejar_errores(funcion):
    @functools.wraps(funcion)
    def envoltura(*args, **kwargs):
        try:
            return funcion(*args, **kwargs)
        except KiteBLError as e:
            codigo = codigo_salida(e)
            logger.error(f"{funcion.__name__}: {type(e).__name__}: {e}")
            click.echo(f"error: {e}", err=True)
            click.get_current_context().exit(codigo)
    return envoltura


def emitir(linea: str = "") -> None:
    contexto = click.get_current_context().find_root()
    if not (contexto.obj or {}).get("quiet"):
        click.echo(linea)


def si_no(valor: bool) -> str:
    return "yes" if valor else "no"


# ------------------ OPCIONES DE SPEC ------------------

def _lista_enteros(ctx, param, valor: str) -> Tuple[int, ...]:
    if valor is None or valor.strip() == "":
        return ()
    try:
        return tuple(int(v) for v in valor.split(","))
    except ValueError:
        raise click.BadParameter(f"se esperaba una lista de enteros separada por comas, se recibió {valor!r}")


def opciones_spec(funcion):
    funcion = click.option("--rho", "rho", default="", callback=_lista_enteros, help="ρ(0),ρ(1),...")(funcion)
    funcion = click.option("--lambda", "lambda_", default="", callback=_lista_enteros, help="λ(0),λ(1),...")(funcion)
    funcion = click.option("--J", "j_size", type=int, default=None, help="|J| (por defecto, largo de --lambda)")(funcion)
    funcion = click.option("--I", "i_size", type=int, required=True, help="|I|")(funcion)
    return funcion


def construir_spec(i_size: int, j_size: Optional[int], lambda_, rho) -> KiteSpec:
    if j_size is None:
        j_size = len(lambda_)
    if len(lambda_) != j_size or len(rho) != j_size:
        raise click.UsageError(f"--lambda y --rho deben tener {j_size} valores")
    if i_size < 0:
        raise click.BadParameter("--I debe ser no negativo")
    for nombre, mapa in (("--lambda", lambda_), ("--rho", rho)):
        if any(not 0 <= v < i_size for v in mapa):
            raise click.BadParameter(f"{nombre} toma valores fuera de 0..{i_size - 1}")
    return KiteSpec(i_size=i_size, j_size=j_size, lambda_=lambda_, rho=rho)


def cargar_hoop(fuente: str) -> FiniteHoop:
    """Archivo de hoop o, si no existe, nombre del catálogo."""
    if Path(fuente).exists():
        return leer_hoop(fuente)
    try:
        return obtener_hoop(fuente)
    except UnknownCatalogNameError:
        raise FormatError(f"{fuente!r} no es un archivo ni un nombre de catálogo", fuente)


def _irreducible(h: FiniteHoop, spec: KiteSpec) -> str:
    if is_trivial(h):
        return "n/a (trivial hoop)"
    return si_no(irreducibility_predicate(h, spec))


# ------------------ COMANDOS ------------------

@click.group()
@click.option("--quiet", is_flag=True, help="No imprime informes; los códigos de salida se mantienen.")
@click.pass_context
def cli(ctx, quiet):
    """KiteBL: kites pseudo BL sobre pseudo hoops básicos finitos."""
    ctx.ensure_object(dict)
    ctx.obj["quiet"] = quiet


@cli.command()
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--kind", type=click.Choice(["hoop", "bl"]), default=None,
              help="Tipo esperado; por defecto el del documento.")
@click.option("--all-witnesses", is_flag=True, help="Lista todos los testigos, no solo el primero.")
@click.option("--report", "ruta_informe", type=click.Path(dir_okay=False), default=None,
              help="Escribe el informe como documento.")
@manejar_errores
def verify(path, kind, all_witnesses, ruta_informe):
    """Verifica los axiomas de un hoop o de una pseudo álgebra BL."""
    algebra = leer_algebra(path)
    es_hoop = isinstance(algebra, FiniteHoop)
    if kind is not None and kind != ("hoop" if es_hoop else "bl"):
        raise FormatError(f"{path}: el documento no es de tipo '{kind}'", "campo kind")

    if es_hoop:
        informe = check_pseudo_hoop(algebra, all_witnesses=all_witnesses)
    else:
        informe = check_pseudo_bl(algebra, all_witnesses=all_witnesses)
    emitir(f"{'hoop' if es_hoop else 'bl'}: {algebra.name or path} (size {algebra.size})")
    for linea in formatear_informe(informe, algebra):
        emitir(linea)
    if es_hoop and informe.passed:
        emitir(f"basic: {si_no(check_basic(algebra))}")
        emitir(f"wajsberg: {si_no(check_wajsberg(algebra))}")
        emitir(f"commutative: {si_no(check_commutative(algebra))}")
    if ruta_informe:
        escribir(ruta_informe, documento_informe(informe, algebra.name))
    click.get_current_context().exit(EXIT_OK if informe.passed else EXIT_SEMANTICO)


@cli.command()
@click.argument("hoop")
@opciones_spec
@click.option("--out", "salida", type=click.Path(dir_okay=False), default=None, help="Archivo del kite.")
@click.option("--force", is_flag=True, help="Construye aunque el hoop no sea básico (resultado sin verificar).")
@manejar_errores
def kite(hoop, i_size, j_size, lambda_, rho, salida, force):
    """Construye el kite de HOOP (archivo o nombre de catálogo) con las inyecciones dadas.

    La línea de axiomas BL es informativa: el código de salida solo refleja la construcción.
    Para fallar ante axiomas incumplidos se usa `verify --kind bl`.
    """
    h = cargar_hoop(hoop)
    spec = construir_spec(i_size, j_size, lambda_, rho)
    K = build_kite(h, spec, force=force)
    informe = check_pseudo_bl(K)
    clase = classify_finite(spec)

    emitir(f"size: {K.size}")
    emitir(f"good: {si_no(is_good(K).holds)}")
    emitir(f"MV: {si_no(is_pseudo_mv(K).holds)}")
    emitir(f"components: {len(connected_components(spec).components)}")
    emitir(f"class: {clase.etiqueta}")
    emitir(f"subdirectly irreducible: {_irreducible(h, spec)}")
    emitir(f"BL axioms: {'passed' if informe.passed else 'FAILED ' + ', '.join(informe.axiomas_fallidos)}")
    if not K.verified:
        emitir("verified: no (built with --force)")
    if salida:
        escribir(salida, documento_bl(K))
        emitir(f"written: {salida}")


def _describir_filtro(B: FiniteBL, F: FilterSet) -> str:
    return "{" + ", ".join(formatear_elemento(B, x) for x in F.members) + "}"


@cli.command()
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--filters", "filtros", is_flag=True, help="Lista los filtros normales.")
@click.option("--monolith", "monolito", is_flag=True, help="Monolito, si el álgebra es s.i.")
@click.option("--witness", "testigo", type=click.Choice(["good", "comm"]), default=None,
              help="Testigo de no bondad o de no conmutatividad.")
@click.option("--dot", "ruta_dot", type=click.Path(dir_okay=False), default=None,
              help="Escribe el diagrama de Hasse en DOT.")
@click.option("--element", "literal", default=None,
              help="Literal de elemento (\"U:e0,1\", \"L#0\", \"#3\"): índice, negaciones y dimensión.")
@manejar_errores
def analyze(path, filtros, monolito, testigo, ruta_dot, literal):
    """Analiza una pseudo álgebra BL guardada."""
    algebra = leer_algebra(path)
    if not isinstance(algebra, FiniteBL):
        raise FormatError(f"{path}: analyze necesita un documento 'bl'", "campo kind")
    B = algebra
    emitir(f"bl: {B.name or path} (size {B.size})")

    if literal is not None:
        x = parsear_elemento(B, literal)
        menos, tilde = tablas_negacion(B)
        emitir(f"element: {formatear_elemento(B, x)} (index {x})")
        emitir(f"x- = {formatear_elemento(B, int(menos[x]))}")
        emitir(f"x~ = {formatear_elemento(B, int(tilde[x]))}")
        if B.es_kite:
            emitir(f"dimension: {dimension(B, element_at(B, x))}")

    if filtros:
        normales = enumerate_normal_filters(B)
        emitir(f"normal filters: {len(normales)}")
        for F in normales:
            emitir(f"  {_describir_filtro(B, F)}")

    if monolito:
        resultado = is_subdirectly_irreducible(B)
        if not resultado.holds:
            emitir("monolith: none (not subdirectly irreducible)")
        elif B.es_kite and resultado.monolith == upper_block(B):
            emitir(f"monolith: A^I ({len(resultado.monolith)} elements)")
        else:
            emitir(f"monolith: {_describir_filtro(B, resultado.monolith)} ({len(resultado.monolith)} elements)")

    if testigo == "comm":
        par = find_noncommutative_witness(B)
        if par is None:
            emitir("non-commutative witness: none")
        else:
            x, y = par
            emitir(f"non-commutative witness: ({formatear_elemento(B, x)}, {formatear_elemento(B, y)})")
    elif testigo == "good":
        veredicto = is_good(B)
        if veredicto.holds:
            emitir("good: yes")
        else:
            x = veredicto.witness
            menos, tilde = tablas_negacion(B)
            emitir(
                f"good: no, witness x = {formatear_elemento(B, x)} "
                f"(x-~ = {formatear_elemento(B, int(tilde[menos[x]]))}, "
                f"x~- = {formatear_elemento(B, int(menos[tilde[x]]))})"
            )

    if ruta_dot:
        escribir(ruta_dot, orden_a_dot(B))
        emitir(f"written: {ruta_dot}")


@cli.command()
@click.argument("hoop")
@opciones_spec
@click.option("--out-dir", "directorio", type=click.Path(file_okay=False), default=".",
              help="Directorio de los archivos de factores.")
@manejar_errores
def decompose(hoop, i_size, j_size, lambda_, rho, directorio):
    """Representación subdirecta del kite por factores s.i."""
    h = cargar_hoop(hoop)
    spec = construir_spec(i_size, j_size, lambda_, rho)
    representacion = subdirect_representation(h, spec)

    emitir(f"hoop factors: {len(representacion.hoop_factors)}")
    for k, factor_hoop in enumerate(representacion.hoop_factors):
        emitir(f"  [{k}] {factor_hoop.hoop.name} (size {factor_hoop.hoop.size}, filter {list(factor_hoop.filter.members)})")

    destino = Path(directorio)
    destino.mkdir(parents=True, exist_ok=True)
    factores = representacion.factors
    emitir(f"factors: {len(factores)}")
    for k, factor in enumerate(factores):
        hoop_factor = next(f.hoop for f in representacion.hoop_factors if f.filter == factor.hoop_filter)
        ruta = destino / f"factor_{k}.json"
        escribir(ruta, documento_spec(factor.spec, hoop_factor))
        emitir(
            f"  [{k}] component {list(factor.component)}: {factor.spec.describir()}, "
            f"class {classify_finite(factor.spec).etiqueta}, size {factor.kite.size}, "
            f"subdirectly irreducible: {_irreducible(hoop_factor, factor.spec)} -> {ruta}"
        )
    emitir(f"joint map injective: {si_no(representacion.injective)}")
    if len(factores) == 1 and not is_trivial(h) and irreducibility_predicate(h, spec):
        emitir("already subdirectly irreducible")


@cli.group()
def catalog():
    """Catálogo de pseudo hoops con nombre."""


@catalog.command("list")
@manejar_errores
def catalog_list():
    for nombre, tamano in listar_catalogo():
        emitir(f"{nombre}\t{tamano}")


@catalog.command("emit")
@click.argument("nombre")
@click.option("--out", "salida", type=click.Path(dir_okay=False), default=None)
@manejar_errores
def catalog_emit(nombre, salida):
    """Emite el documento del hoop NOMBRE (p. ej. godel:3, product:godel:2*godel:2)."""
    documento = documento_hoop(obtener_hoop(nombre))
    if salida:
        escribir(salida, documento)
    else:
        click.echo(documento, nl=False)


@cli.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", default=8000, type=int)
def serve(host, port):
    """Levanta la API HTTP."""
    import uvicorn

    uvicorn.run("app:app", host=host, port=port)


if __name__ == "__main__":
    cli()
