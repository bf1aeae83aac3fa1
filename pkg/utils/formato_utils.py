"""Documentos JSON versionados, literales de elementos y diagramas de orden en DOT."""
import json
import re
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

from pydantic import BaseModel, ValidationError

from algebra.errores import FormatError, KiteBLError
from algebra.filter_engine import CongruencePartition, FilterSet
from algebra.hoop_core import AxiomReport, FiniteHoop
from algebra.kite_builder import FiniteBL, KiteElement, KiteSpec, Parte, element_index
from algebra.orden import aristas_hasse

FORMAT_VERSION = 1
KINDS = ("hoop", "bl", "kite-spec", "report", "filters", "partition")

_LITERAL = re.compile(r"^([LU])([:#])(.*)$")


# ------------------ ESCRITURA ------------------

def _volcar(kind: str, cuerpo: Dict[str, Any]) -> str:
    documento = {"format_version": FORMAT_VERSION, "kind": kind, **cuerpo}
    return json.dumps(documento, indent=2, ensure_ascii=False) + "\n"


def _campos(modelo: BaseModel) -> Dict[str, Any]:
    return modelo.model_dump(mode="json", by_alias=True)


def documento_hoop(h: FiniteHoop) -> str:
    return _volcar("hoop", _campos(h))


def documento_bl(B: FiniteBL) -> str:
    return _volcar("bl", _campos(B))


def documento_spec(spec: KiteSpec, hoop: Union[FiniteHoop, str]) -> str:
    """Spec de kite con el hoop en línea o como ruta relativa al propio documento."""
    hoop_campo = hoop if isinstance(hoop, str) else _campos(hoop)
    return _volcar("kite-spec", {"hoop": hoop_campo, **_campos(spec)})


def documento_informe(informe: AxiomReport, sujeto: Optional[str] = None) -> str:
    return _volcar("report", {"subject": sujeto, **_campos(informe)})


def documento_filtros(filtros: Iterable[FilterSet]) -> str:
    return _volcar("filters", {"filters": [list(F.members) for F in filtros]})


def documento_particion(particion: CongruencePartition) -> str:
    return _volcar("partition", _campos(particion))


def escribir(ruta: Union[str, Path], contenido: str) -> None:
    Path(ruta).write_text(contenido, encoding="utf-8")


# ------------------ LECTURA ------------------

def _posicion(e: ValidationError) -> str:
    error = e.errors()[0]
    return "campo " + ".".join(str(p) for p in error["loc"]) if error["loc"] else "documento"


def leer_documento(texto: str, origen: str = "") -> Tuple[str, Dict[str, Any]]:
    """Devuelve (kind, cuerpo) tras validar la envoltura."""
    prefijo = f"{origen}: " if origen else ""
    try:
        documento = json.loads(texto)
    except json.JSONDecodeError as e:
        raise FormatError(f"{prefijo}JSON inválido: {e.msg}", f"línea {e.lineno}, columna {e.colno}")
    if not isinstance(documento, dict):
        raise FormatError(f"{prefijo}se esperaba un objeto JSON", "raíz")
    version = documento.pop("format_version", None)
    if version != FORMAT_VERSION:
        raise FormatError(f"{prefijo}format_version {version!r} no soportada", "campo format_version")
    kind = documento.pop("kind", None)
    if kind not in KINDS:
        raise FormatError(f"{prefijo}kind {kind!r} desconocido", "campo kind")
    return kind, documento


def _leer_texto(ruta: Union[str, Path]) -> str:
    try:
        return Path(ruta).read_text(encoding="utf-8")
    except OSError as e:
        raise FormatError(f"no se pudo leer {ruta}: {e.strerror}", str(ruta))


def _validar(modelo, cuerpo: Dict[str, Any], origen: str):
    try:
        return modelo.model_validate(cuerpo)
    except ValidationError as e:
        raise FormatError(f"{origen}: {e.errors()[0]['msg']}", _posicion(e))


def _exigir_kind(kind: str, esperado: str, origen: str) -> None:
    if kind != esperado:
        raise FormatError(f"{origen}: se esperaba un documento '{esperado}', es '{kind}'", "campo kind")


def parsear_hoop(texto: str, origen: str = "hoop") -> FiniteHoop:
    kind, cuerpo = leer_documento(texto, origen)
    _exigir_kind(kind, "hoop", origen)
    return _validar(FiniteHoop, cuerpo, origen)


def parsear_bl(texto: str, origen: str = "bl") -> FiniteBL:
    kind, cuerpo = leer_documento(texto, origen)
    _exigir_kind(kind, "bl", origen)
    return _validar(FiniteBL, cuerpo, origen)


def parsear_informe(texto: str, origen: str = "report") -> AxiomReport:
    kind, cuerpo = leer_documento(texto, origen)
    _exigir_kind(kind, "report", origen)
    cuerpo.pop("subject", None)
    return _validar(AxiomReport, cuerpo, origen)


def leer_hoop(ruta: Union[str, Path]) -> FiniteHoop:
    return parsear_hoop(_leer_texto(ruta), str(ruta))


def leer_algebra(ruta: Union[str, Path]) -> Union[FiniteHoop, FiniteBL]:
    origen = str(ruta)
    kind, cuerpo = leer_documento(_leer_texto(ruta), origen)
    if kind == "hoop":
        return _validar(FiniteHoop, cuerpo, origen)
    if kind == "bl":
        return _validar(FiniteBL, cuerpo, origen)
    raise FormatError(f"{origen}: se esperaba 'hoop' o 'bl', es '{kind}'", "campo kind")


def parsear_spec(texto: str, origen: str = "kite-spec", base: Optional[Path] = None) -> Tuple[FiniteHoop, KiteSpec]:
    kind, cuerpo = leer_documento(texto, origen)
    _exigir_kind(kind, "kite-spec", origen)
    if "hoop" not in cuerpo:
        raise FormatError(f"{origen}: falta el hoop", "campo hoop")
    hoop_campo = cuerpo.pop("hoop")
    if isinstance(hoop_campo, str):
        ruta = Path(hoop_campo)
        if base is not None and not ruta.is_absolute():
            ruta = base / ruta
        hoop = leer_hoop(ruta)
    else:
        hoop = _validar(FiniteHoop, hoop_campo, origen)
    return hoop, _validar(KiteSpec, cuerpo, origen)


def leer_spec(ruta: Union[str, Path]) -> Tuple[FiniteHoop, KiteSpec]:
    ruta = Path(ruta)
    return parsear_spec(_leer_texto(ruta), str(ruta), base=ruta.parent)


# ------------------ ELEMENTOS ------------------

def parsear_elemento(B: FiniteBL, texto: str) -> int:
    """Índice de un literal: etiqueta ("L:e0,1", "c0"), "#k", o coordenadas por índice ("L#0,1")."""
    texto = texto.strip()
    if texto in B.etiquetas:
        return B.etiquetas.index(texto)
    if texto.startswith("#") and texto[1:].isdigit():
        idx = int(texto[1:])
        if idx < B.size:
            return idx
        raise FormatError(f"índice {idx} fuera del soporte", texto)
    coincidencia = _LITERAL.match(texto)
    if coincidencia is None or not B.es_kite:
        raise FormatError(f"literal de elemento desconocido {texto!r}", texto)
    parte, modo, cuerpo = coincidencia.groups()
    piezas = [p.strip() for p in cuerpo.split(",")] if cuerpo.strip() else []
    etiquetas_hoop = B.hoop.etiquetas
    try:
        if modo == "#":
            coords = tuple(int(p) for p in piezas)
        else:
            coords = tuple(etiquetas_hoop.index(p) for p in piezas)
    except ValueError:
        raise FormatError(f"coordenada desconocida en {texto!r}", texto)
    try:
        return element_index(B, KiteElement(part=Parte(parte), coords=coords))
    except (KiteBLError, ValidationError) as e:
        raise FormatError(f"literal inválido {texto!r}: {e}", texto)


def formatear_elemento(B: Union[FiniteHoop, FiniteBL], idx: int) -> str:
    return B.etiquetas[idx]


def formatear_informe(informe: AxiomReport, B: Union[FiniteHoop, FiniteBL]) -> List[str]:
    if informe.passed:
        return ["passed: yes"]
    lineas = ["passed: no"]
    for violacion in informe.violations:
        testigo = ", ".join(formatear_elemento(B, x) for x in violacion.witness)
        lineas.append(f"  {violacion.axiom}: ({testigo})")
    return lineas


def orden_a_dot(B: Union[FiniteHoop, FiniteBL]) -> str:
    """Diagrama de Hasse del orden, de abajo hacia arriba."""
    lineas = ["digraph orden {", "  rankdir=BT;"]
    for k, etiqueta in enumerate(B.etiquetas):
        lineas.append(f'  n{k} [label="{etiqueta}"];')
    for a, b in aristas_hasse(B.leq):
        lineas.append(f"  n{a} -> n{b};")
    lineas.append("}")
    return "\n".join(lineas) + "\n"
