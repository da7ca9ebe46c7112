"""
Comprobaciones elementales que componen las identidades.

Cada función comprueba un caso (un índice, un juego de parámetros o un
punto) y devuelve un InformeVerificacion. Las identidades registradas
recorren sus rejillas llamando a estas funciones y combinan los informes.

PATRÓN DE INYECCIÓN:
- Todo el estado numérico llega en ContextoVerificacion; ninguna función
  de este módulo crea motores ni lee la configuración global.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Any, Callable, Dict, List, Optional, Tuple

import mpmath
from mpmath import mpf

from algebra.polinomios import PolinomioT, PolinomioXY, a_mpf, norma
from configuracion import ErrorParametros, formatear_racional
from generatrices.funciones import GeneratricesZeta
from generatrices.parametros import ParametrosGF, Variante
from generatrices.puntuales import ErrorPrecondicion, EvaluadorPuntual, ResultadoPuntual
from generatrices.raices import PuntoR3
from motor.indices import TipoIndice, como_indice, enumerar_indices, formatear_indice
from motor.particiones import particiones_conjunto, polinomio_c
from motor.zeta import ModoT, MotorZeta
from persistencia.cache_zeta import GestorCacheZeta
from series.serie import SerieTruncada
from .informe import (
    EstadoInforme, InformeVerificacion, estado_por_desviacion, formatear_numero,
)

logger = logging.getLogger(__name__)

# Las permutaciones crecen como r!
PROFUNDIDAD_MAXIMA_SIMETRICA = 5


# =============================================================================
# CONTEXTO
# =============================================================================

@dataclass
class ContextoVerificacion:
    """
    Objetos compartidos por todas las comprobaciones de una ejecución.

    Attributes:
        motor: Motor de valores zeta (con eps de verificación).
        generatrices: Constructor de series.
        evaluador: Evaluador puntual.
        config: Configuración del proyecto.
        version: Versión que se escribe en los informes.
    """
    motor: MotorZeta
    generatrices: GeneratricesZeta
    evaluador: EvaluadorPuntual
    config: Dict[str, Any]
    version: str = "1.0.0"

    @classmethod
    def crear(cls, config: Dict[str, Any],
              cache: Optional[GestorCacheZeta] = None,
              motor: Optional[MotorZeta] = None) -> "ContextoVerificacion":
        """
        Construye el contexto con el eps de verificación de la configuración.

        Args:
            config: Configuración del proyecto.
            cache: Caché persistente opcional para el motor.
            motor: Motor ya creado; si se da, se ignora cache.
        """
        if motor is None:
            motor = MotorZeta(
                eps=float(config["precision"]["eps_verificacion"]),
                cache=cache,
                config=config,
            )
        return cls(
            motor=motor,
            generatrices=GeneratricesZeta(motor),
            evaluador=EvaluadorPuntual(motor, config),
            config=config,
            version=str(config.get("version", "1.0.0")),
        )


# =============================================================================
# UTILIDADES
# =============================================================================

def texto_parametro(valor: Any) -> str:
    if isinstance(valor, PolinomioT):
        return valor.variable
    if isinstance(valor, (int, Fraction)):
        return formatear_racional(Fraction(valor))
    return mpmath.nstr(valor, 10)


def desviacion_relativa(a: Any, b: Any) -> float:
    """|a - b| / max(1, |a|, |b|), con a y b números o polinomios."""
    return float(norma(a - b) / max(1, norma(a), norma(b)))


def comparar_series(izquierdo: SerieTruncada,
                    derecho: SerieTruncada) -> Tuple[float, List[Dict[str, str]]]:
    """
    Desviación relativa por monomio.

    Returns:
        (desviación máxima, filas {"at": "i,j,k", "dev": ...}).
    """
    maxima = 0.0
    filas = []
    for (i, j, k), desviacion in izquierdo.desviaciones(derecho):
        desviacion = float(desviacion)
        maxima = max(maxima, desviacion)
        filas.append({"at": f"{i},{j},{k}", "dev": formatear_numero(desviacion)})
    return maxima, filas


def informe_caso(identidad: str, parametros: Dict[str, Any], desviacion: float,
                 tolerancia: float, filas: Optional[List[Dict[str, Any]]] = None,
                 ramas: Optional[List[str]] = None, reintentos: int = 0,
                 nota: str = "", informativo: bool = False) -> InformeVerificacion:
    """Informe de un caso; los casos informativos nunca fallan."""
    estado = (EstadoInforme.INFO if informativo
              else estado_por_desviacion(desviacion, tolerancia))
    if estado == EstadoInforme.FALLA:
        logger.debug("caso_fallido identidad=%s params=%s desviacion=%.3e",
                     identidad, parametros, desviacion)
    return InformeVerificacion(
        identidad=identidad,
        parametros=parametros,
        desviacion_maxima=desviacion,
        tolerancia=tolerancia,
        estado=estado,
        desviaciones=filas or [],
        ramas=ramas or [],
        reintentos=reintentos,
        nota=nota,
    )


def caso_excluido(identidad: str, parametros: Dict[str, Any], tolerancia: float,
                  motivo: str) -> InformeVerificacion:
    logger.warning("caso_excluido identidad=%s params=%s motivo=%s",
                   identidad, parametros, motivo)
    return InformeVerificacion(
        identidad=identidad,
        parametros=parametros,
        tolerancia=tolerancia,
        estado=EstadoInforme.EXCLUIDA,
        nota=f"excluida: {motivo}",
    )


# =============================================================================
# SERIES Y PUNTOS
# =============================================================================

def comprobar_series(identidad: str, parametros: Dict[str, Any],
                     izquierdo: SerieTruncada, derecho: SerieTruncada,
                     tolerancia: float, informativo: bool = False) -> InformeVerificacion:
    """Compara dos series coeficiente a coeficiente."""
    desviacion, filas = comparar_series(izquierdo, derecho)
    return informe_caso(identidad, parametros, desviacion, tolerancia, filas,
                        informativo=informativo)


def comprobar_exacto(identidad: str, parametros: Dict[str, Any],
                     valores: List[Fraction]) -> InformeVerificacion:
    """Valores racionales que deben ser exactamente 0 (tolerancia 0)."""
    maximo = max((abs(Fraction(v)) for v in valores), default=Fraction(0))
    filas = [{"at": str(n), "value": formatear_racional(v)} for n, v in enumerate(valores)]
    return informe_caso(identidad, parametros, float(maximo), 0.0, filas)


def comprobar_puntual(identidad: str, parametros: Dict[str, Any],
                      calculado: ResultadoPuntual, referencia: ResultadoPuntual,
                      tolerancia: float) -> InformeVerificacion:
    """Compara una forma cerrada con su valor de referencia en un punto."""
    desviacion = desviacion_relativa(calculado.valor, referencia.valor)
    fila = {
        "point": parametros.get("point", ""),
        "value": mpmath.nstr(calculado.valor, 15),
        "reference": mpmath.nstr(referencia.valor, 15),
        "dev": formatear_numero(desviacion),
    }
    notas = list(dict.fromkeys(calculado.notas + referencia.notas))
    ramas = [calculado.rama] if calculado.rama else []
    return informe_caso(identidad, parametros, desviacion, tolerancia, [fila],
                        ramas=ramas, nota=", ".join(notas))


def comprobar_en_punto(identidad: str, parametros: Dict[str, Any],
                       calcular: Callable[[], Tuple[ResultadoPuntual, ResultadoPuntual]],
                       tolerancia: float) -> InformeVerificacion:
    """
    Como comprobar_puntual, con (calculado, referencia) obtenidos al llamar
    a calcular().

    Una ErrorPrecondicion en el punto da un caso fallido con el mensaje en
    la nota; el resto de la rejilla sigue evaluándose.
    """
    try:
        calculado, referencia = calcular()
    except ErrorPrecondicion as error:
        logger.warning("precondicion_punto identidad=%s params=%s mensaje=%s",
                       identidad, parametros, error)
        return informe_caso(identidad, parametros, float("inf"), tolerancia, nota=str(error))
    return comprobar_puntual(identidad, parametros, calculado, referencia, tolerancia)


def comprobar_lq(evaluador: EvaluadorPuntual, t: Fraction, punto: PuntoR3,
                 tolerancia: float, peso_maximo: Optional[int] = None) -> InformeVerificacion:
    """
    Forma ₃F₂ frente a Ψ^t por fuerza bruta en un punto.

    Si la rama natural falla se reintenta una vez con las raíces
    intercambiadas. t = 1/2 se excluye.
    """
    t = Fraction(t)
    parametros = {"t": formatear_racional(t), "point": str(punto)}
    if t == Fraction(1, 2):
        return caso_excluido("lq_3f2", parametros, tolerancia,
                             "pregunta abierta (t = 1/2, normalización no determinada)")

    try:
        referencia = evaluador.phi_puntual(punto, t, ponderada=False, peso_maximo=peso_maximo)
    except ErrorPrecondicion as error:
        logger.warning("precondicion_punto identidad=lq_3f2 params=%s mensaje=%s",
                       parametros, error)
        return informe_caso("lq_3f2", parametros, float("inf"), tolerancia, nota=str(error))
    intentos: List[Tuple[float, ResultadoPuntual]] = []
    errores: List[str] = []
    for intercambiar in (False, True):
        if intercambiar:
            logger.warning("reintento_rama identidad=lq_3f2 t=%s punto=%s",
                           parametros["t"], punto)
        try:
            cerrada = evaluador.lq_3f2(t, punto, intercambiar=intercambiar)
        except ErrorPrecondicion as error:
            errores.append(str(error))
            continue
        desviacion = desviacion_relativa(cerrada.valor, referencia.valor)
        intentos.append((desviacion, cerrada))
        if desviacion <= tolerancia:
            break

    reintentos = 1 if len(intentos) + len(errores) > 1 else 0
    if not intentos:
        return informe_caso("lq_3f2", parametros, float("inf"), tolerancia,
                            reintentos=reintentos, nota="; ".join(errores))

    desviacion, cerrada = min(intentos, key=lambda par: par[0])
    fila = {
        "point": parametros["point"],
        "value": mpmath.nstr(cerrada.valor, 15),
        "reference": mpmath.nstr(referencia.valor, 15),
        "dev": formatear_numero(desviacion),
        "branch": cerrada.rama,
        "terms": cerrada.terminos,
    }
    logger.debug("rama_elegida t=%s punto=%s rama=%s", parametros["t"], punto, cerrada.rama)
    return informe_caso("lq_3f2", parametros, desviacion, tolerancia, [fila],
                        ramas=[cerrada.rama], reintentos=reintentos,
                        nota="; ".join(errores))


# =============================================================================
# RELACIONES AUXILIARES
# =============================================================================

def comprobar_lema5(motor: MotorZeta, indice: TipoIndice, tolerancia: float,
                    t: Optional[Fraction] = None,
                    modo: ModoT = ModoT.CONSTANTE) -> InformeVerificacion:
    """
    Σ_{j=0}^{r} (-1)^{r-j}·ζ^t(k_j, ..., k_1)·ζ^{1-t}(k_{j+1}, ..., k_r) = 0.

    Con t = None la suma se calcula como polinomio en t. En modo T
    simbólico el caso es informativo.
    """
    partes = como_indice(indice).partes
    r = len(partes)
    parametro: Any = PolinomioT.generador("t") if t is None else Fraction(t)
    complemento = 1 - parametro

    total: Any = 0
    for j in range(r + 1):
        signo = -1 if (r - j) % 2 else 1
        prefijo = tuple(reversed(partes[:j]))
        sufijo = partes[j:]
        producto = motor.zeta_t(prefijo, parametro, modo) * motor.zeta_t(sufijo, complemento, modo)
        total = total + signo * producto

    parametros = {
        "index": formatear_indice(partes),
        "t": texto_parametro(parametro),
        "T": modo.value,
    }
    desviacion = float(norma(total))
    fila = {"index": parametros["index"], "dev": formatear_numero(desviacion)}
    return informe_caso("lemma5_antipode", parametros, desviacion, tolerancia, [fila],
                        informativo=modo == ModoT.SIMBOLICO)


def suma_simetrica(motor: MotorZeta, partes: Tuple[int, ...], t: Fraction) -> PolinomioXY:
    """Σ_{σ ∈ S_r} ζ^t_{x,y}(k_σ(1), ..., k_σ(r)) como polinomio en (x, y)."""
    total = PolinomioXY()
    conteo = Counter(permutations(partes))
    for permutacion in sorted(conteo):
        total = total + motor.zeta_xy_polinomio(permutacion, t) * conteo[permutacion]
    return total


def suma_particiones(motor: MotorZeta, partes: Tuple[int, ...], t: Fraction) -> PolinomioXY:
    """Σ_Π Π_{P ∈ Π} c_|P|(t)·ζ_{x,y}(Σ_{i ∈ P} k_i) como polinomio en (x, y)."""
    total = PolinomioXY()
    for particion in particiones_conjunto(len(partes)):
        producto = PolinomioXY.monomio(0, 0, mpf(1))
        for bloque in particion.bloques:
            c = polinomio_c(len(bloque)).evaluar(t)
            if c == 0:
                producto = PolinomioXY()
                break
            peso = sum(partes[i - 1] for i in bloque)
            producto = producto * (motor.zeta_xy_polinomio((peso,), 0) * a_mpf(c))
        total = total + producto
    return total


def comprobar_lema7(motor: MotorZeta, indice: TipoIndice, t: Fraction,
                    tolerancia: float) -> InformeVerificacion:
    """
    Suma sobre permutaciones frente a suma sobre particiones de conjuntos.

    Raises:
        ErrorParametros: Si la profundidad supera PROFUNDIDAD_MAXIMA_SIMETRICA.
    """
    partes = como_indice(indice).partes
    if len(partes) > PROFUNDIDAD_MAXIMA_SIMETRICA:
        raise ErrorParametros(
            f"Profundidad {len(partes)} demasiado alta para la suma simétrica "
            f"(máximo {PROFUNDIDAD_MAXIMA_SIMETRICA})"
        )
    t = Fraction(t)
    izquierdo = suma_simetrica(motor, partes, t)
    derecho = suma_particiones(motor, partes, t)
    desviacion = desviacion_relativa(izquierdo, derecho)
    parametros = {"index": formatear_indice(partes), "t": formatear_racional(t)}
    fila = {"index": parametros["index"], "t": parametros["t"],
            "dev": formatear_numero(desviacion)}
    return informe_caso("lemma7_symsum", parametros, desviacion, tolerancia, [fila])


def parametros_serie(t: Any, x: Any, y: Any, orden: int) -> Dict[str, Any]:
    return {"t": texto_parametro(t), "x": texto_parametro(x),
            "y": texto_parametro(y), "N": orden}


def comprobar_lema6(generatrices: GeneratricesZeta, t: Fraction, x: Fraction,
                    y: Fraction, orden: int, tolerancia: float) -> List[InformeVerificacion]:
    """
    Φ sobre todos los índices frente a exp(exponente), más dos formas del exponente.

    Returns:
        Casos "exp", "particiones" y "log".
    """
    params = ParametrosGF.para(Variante.IPMZV, orden, t, x, y)
    izquierdo = generatrices.phi_todos_indices(params)
    exponente = generatrices.exponente_generatriz(t, x, y, orden)
    por_particiones = generatrices.exponente_por_particiones(t, x, y, orden)

    base = parametros_serie(t, x, y, orden)
    return [
        comprobar_series("lemma6_symgene", {**base, "form": "exp"},
                         izquierdo, exponente.exp(), tolerancia),
        comprobar_series("lemma6_symgene", {**base, "form": "partitions"},
                         por_particiones, exponente, tolerancia),
        comprobar_series("lemma6_symgene", {**base, "form": "log"},
                         izquierdo.log(), exponente, tolerancia),
    ]


def comprobar_lema6_simbolico(generatrices: GeneratricesZeta, t: Fraction, x: Fraction,
                              y: Fraction, orden: int,
                              tolerancia: float) -> InformeVerificacion:
    """Sondeo con T simbólico: los coeficientes son polinomios en T."""
    params = ParametrosGF.para(Variante.IPMZV, orden, t, x, y)
    izquierdo = generatrices.phi_todos_indices(params, ModoT.SIMBOLICO)
    derecho = generatrices.exponente_generatriz(t, x, y, orden).exp()
    parametros = {**parametros_serie(t, x, y, orden), "form": "exp", "T": ModoT.SIMBOLICO.value}
    return comprobar_series("lemma6_symgene", parametros, izquierdo, derecho,
                            tolerancia, informativo=True)


def comprobar_lema4_indices(generatrices: GeneratricesZeta, t: Fraction, x: Fraction,
                            y: Fraction, peso_maximo: int,
                            tolerancia: float) -> InformeVerificacion:
    """Forma por índice de lemma4 para los índices admisibles de peso ≤ peso_maximo."""
    maxima = 0.0
    filas = []
    for indice in enumerar_indices(peso_maximo, solo_admisibles=True):
        if indice.es_vacio:
            continue
        izquierdo, derecho = generatrices.lados_lema4_indice(indice, t, x, y)
        desviacion = desviacion_relativa(izquierdo, derecho)
        maxima = max(maxima, desviacion)
        filas.append({"index": formatear_indice(indice), "dev": formatear_numero(desviacion)})
    parametros = {"t": texto_parametro(t), "x": texto_parametro(x),
                  "y": texto_parametro(y), "max_weight": peso_maximo, "form": "per_index"}
    return informe_caso("lemma4", parametros, maxima, tolerancia, filas)


def comprobar_independencia_T(motor: MotorZeta, indice: TipoIndice,
                              tolerancia: float) -> InformeVerificacion:
    """Coeficientes de T^n (n ≥ 1) de ζ_S y ζ_S⋆ con T simbólico."""
    partes = como_indice(indice).partes
    filas = []
    maxima = 0.0
    for nombre, funcion in (("S", motor.zeta_s), ("S_star", motor.zeta_s_estrella)):
        valor = funcion(partes, ModoT.SIMBOLICO)
        desviacion = 0.0
        if isinstance(valor, PolinomioT):
            for n in range(1, valor.grado + 1):
                desviacion = max(desviacion, float(norma(valor.coeficiente(n))))
        maxima = max(maxima, desviacion)
        filas.append({"index": formatear_indice(partes), "variant": nombre,
                      "dev": formatear_numero(desviacion)})
    parametros = {"index": formatear_indice(partes)}
    return informe_caso("t_independence", parametros, maxima, tolerancia, filas)
