#!/usr/bin/env python3
"""
Línea de comandos de valores zeta múltiples y sus funciones generatrices.

Comandos:
    eval    Valor de una variante en un índice
    phi     Coeficientes de la función generatriz truncada
    table   Como phi, siempre en CSV
    verify  Comprueba una identidad o todas
    cache   stats | clear

Uso:
    python src/cli_zeta.py eval --index 1,2 --variant t --t 1/3
    python src/cli_zeta.py phi --variant ipmzv --t 0 --x 1 --y -1 --max-weight 6
    python src/cli_zeta.py verify --identity main --max-weight 7
    python src/cli_zeta.py verify --all --format text

Códigos de salida: 0 correcto, 1 fallo de verificación, 2 error de uso.
Los informes van a stdout y los diagnósticos a stderr.
"""

import argparse
import csv
import io
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional

# Añadir src al path
sys.path.insert(0, str(Path(__file__).parent))

import mpmath

from algebra.polinomios import PolinomioT, a_mpf
from configuracion import (
    ErrorParametros, configurar_registro, formatear_racional, obtener_configuracion,
    parsear_racional, ruta_cache,
)
from generatrices.funciones import GeneratricesZeta
from generatrices.parametros import ParametrosGF, Variante
from motor.indices import formatear_indice, parsear_indice
from motor.zeta import ModoT, MotorZeta, obtener_motor, resetear_motor
from persistencia.cache_zeta import GestorCacheZeta, borrar_cache
from verificador import ContextoVerificacion, FORMATO_INFORME, obtener_registro

logger = logging.getLogger("cli_zeta")

SALIDA_OK = 0
SALIDA_FALLO = 1
SALIDA_USO = 2

VARIANTES_EVAL = ["plain", "star", "t", "ipmzv", "S", "S_star", "reg"]


# ============================================================
# SALIDA
# ============================================================

def emitir_json(datos: Any) -> None:
    """JSON determinista: claves ordenadas, indentación 2, UTF-8."""
    print(json.dumps(datos, indent=2, ensure_ascii=False, sort_keys=True))


def texto_valor(valor: Any, digitos: Optional[int] = None) -> str:
    if isinstance(valor, PolinomioT):
        return str(valor)
    return mpmath.nstr(a_mpf(valor), digitos or mpmath.mp.dps)


def valor_json(valor: Any) -> Any:
    """Número como cadena decimal; polinomio como variable + coeficientes."""
    if isinstance(valor, PolinomioT):
        return {
            "variable": valor.variable,
            "coefficients": [valor_json(c) for c in valor.coefs],
        }
    return mpmath.nstr(a_mpf(valor), mpmath.mp.dps)


def _racional(texto: Optional[str], por_defecto: Optional[Fraction] = None) -> Optional[Fraction]:
    if texto is None:
        return por_defecto
    return parsear_racional(texto)


def _abrir_cache(config: Dict[str, Any], ruta: Optional[str]) -> GestorCacheZeta:
    return GestorCacheZeta(str(ruta_cache(config, ruta)))


# ============================================================
# EVAL
# ============================================================

def evaluar(motor: MotorZeta, args: argparse.Namespace) -> Dict[str, Any]:
    """
    Calcula el valor pedido por 'eval'.

    Returns:
        Diccionario con valor, cota de error (si se conoce) y parámetros.

    Raises:
        ErrorIndice: Índice mal escrito.
        ErrorParametros: Índice no admisible sin --reg u opciones inválidas.
    """
    indice = parsear_indice(args.index)
    partes = indice.partes
    variante = args.variant
    modo = ModoT.SIMBOLICO if args.symbolic_T else ModoT.CONSTANTE
    regularizado = args.reg or variante == "reg"
    t = PolinomioT.generador("t") if args.symbolic_t else _racional(args.t, Fraction(0))
    x = _racional(args.x, Fraction(1))
    y = _racional(args.y, Fraction(0))
    if args.eps is not None and args.eps <= 0:
        raise ErrorParametros(f"eps debe ser > 0, recibido {args.eps}")

    if variante in ("plain", "star", "t") and not regularizado and not indice.es_admisible:
        raise ErrorParametros(
            f"Índice no admisible ({formatear_indice(indice)}); usa --reg para el valor regularizado"
        )

    parametros: Dict[str, Any] = {"T": modo.value}
    error: Any = None
    algoritmo = None
    if variante in ("plain", "reg"):
        if regularizado:
            valor = motor.zeta_reg(partes, modo)
            if modo == ModoT.CONSTANTE:
                valor = valor.coeficiente(0)
                error = motor.cota_reg(partes)
        else:
            calculo = (motor.zeta_directo(partes, args.eps) if args.algo == "direct"
                       else motor.zeta_holder(partes, args.eps))
            valor, error, algoritmo = calculo.valor, calculo.error, calculo.algoritmo
    elif variante == "star":
        valor = motor.zeta_estrella(partes, modo)
        if modo == ModoT.CONSTANTE:
            error = motor.cota_t(partes, 1)
    elif variante == "t":
        valor = motor.zeta_t(partes, t, modo)
        parametros["t"] = "t" if args.symbolic_t else formatear_racional(t)
        if modo == ModoT.CONSTANTE and not args.symbolic_t:
            error = motor.cota_t(partes, t)
    elif variante == "ipmzv":
        valor = motor.zeta_xy(partes, t, x, y, modo)
        parametros.update({
            "t": "t" if args.symbolic_t else formatear_racional(t),
            "x": formatear_racional(x),
            "y": formatear_racional(y),
        })
        if modo == ModoT.CONSTANTE and not args.symbolic_t:
            error = motor.cota_xy(partes, t, x, y)
    elif variante == "S":
        valor = motor.zeta_s(partes, modo)
        if modo == ModoT.CONSTANTE:
            error = motor.cota_xy(partes, 0, 1, -1)
    else:
        valor = motor.zeta_s_estrella(partes, modo)
        if modo == ModoT.CONSTANTE:
            error = motor.cota_xy(partes, 1, 1, -1)

    return {
        "format": FORMATO_INFORME,
        "index": formatear_indice(indice),
        "variant": variante,
        "params": parametros,
        "value": valor_json(valor),
        "error": None if error is None else mpmath.nstr(a_mpf(error), 3),
        "algo": algoritmo,
        "_valor": valor,
    }


def comando_eval(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    motor = obtener_motor(cache=_abrir_cache(config, args.cache))
    resultado = evaluar(motor, args)
    valor = resultado.pop("_valor")
    if args.format == "json":
        emitir_json(resultado)
    else:
        linea = f"{resultado['variant']}({resultado['index']}) = {texto_valor(valor)}"
        if resultado["error"] is not None:
            linea += f" ± {resultado['error']}"
        print(linea)
    motor.volcar_cache()
    return SALIDA_OK


# ============================================================
# PHI / TABLE
# ============================================================

def construir_tabla(motor: MotorZeta, args: argparse.Namespace) -> Dict[str, Any]:
    """Coeficientes de Φ con sus cotas de error."""
    variante = Variante.desde_texto(args.variant)
    params = ParametrosGF.para(
        variante, args.max_weight,
        t=_racional(args.t), x=_racional(args.x), y=_racional(args.y),
    )
    if variante not in (Variante.T, Variante.IPMZV) and any(
            v is not None for v in (args.t, args.x, args.y)):
        logger.warning("parametros_ignorados variante=%s", variante.value)

    generatrices = GeneratricesZeta(motor)
    if args.all_indices:
        serie = generatrices.phi_todos_indices(params)
        cotas: Dict[Any, Any] = {}
    else:
        serie = generatrices.phi_fuerza_bruta(params)
        cotas = generatrices.cotas_error(params)

    filas = []
    for (i, j, k), coeficiente in serie.terminos():
        cota = cotas.get((i, j, k))
        filas.append({
            "i": i, "j": j, "k": k,
            "coefficient": texto_valor(coeficiente),
            "error_bound": "" if cota is None else mpmath.nstr(cota, 3),
        })
    return {
        "format": FORMATO_INFORME,
        "params": params.to_dict(),
        "all_indices": bool(args.all_indices),
        "coefficients": filas,
    }


def emitir_csv(filas: List[Dict[str, Any]]) -> None:
    salida = io.StringIO()
    escritor = csv.DictWriter(salida, fieldnames=["i", "j", "k", "coefficient", "error_bound"],
                              lineterminator="\n")
    escritor.writeheader()
    escritor.writerows(filas)
    sys.stdout.write(salida.getvalue())


def comando_phi(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    motor = obtener_motor(cache=_abrir_cache(config, args.cache))
    tabla = construir_tabla(motor, args)
    formato = "csv" if args.command == "table" else args.format
    if formato == "csv":
        emitir_csv(tabla["coefficients"])
    elif formato == "json":
        emitir_json(tabla)
    else:
        p = tabla["params"]
        print(f"Φ {p['variant']} (t={p['t']}, x={p['x']}, y={p['y']}), grado ≤ {p['N']}")
        for fila in tabla["coefficients"]:
            cota = f" ± {fila['error_bound']}" if fila["error_bound"] else ""
            print(f"  X^{fila['i']} Y^{fila['j']} Z^{fila['k']}: {fila['coefficient']}{cota}")
    motor.volcar_cache()
    return SALIDA_OK


# ============================================================
# VERIFY
# ============================================================

def argumentos_identidad(args: argparse.Namespace) -> Dict[str, Any]:
    argumentos = {
        "orden": args.max_weight,
        "t": args.t,
        "x": args.x,
        "y": args.y,
        "tolerancia": args.tolerance,
        "modo_T": ModoT.SIMBOLICO.value if args.symbolic_T else None,
    }
    return {k: v for k, v in argumentos.items() if v is not None}


def comando_verify(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    registro = obtener_registro()
    if args.list:
        print(registro.generar_documentacion())
        return SALIDA_OK
    if not args.all and not args.identity:
        raise ErrorParametros("Indica --identity NOMBRE o --all")

    argumentos = argumentos_identidad(args)
    if args.all:
        nombres = registro.listar()
    else:
        nombres = [registro.resolver(args.identity).nombre]

    cache = _abrir_cache(config, args.cache)
    contexto = ContextoVerificacion.crear(config, cache)

    informes = []
    for nombre in nombres:
        identidad = registro.resolver(nombre)
        propios = argumentos
        if args.all:
            propios = {k: v for k, v in argumentos.items() if k in identidad.parametros}
            ignorados = sorted(set(argumentos) - set(propios))
            if ignorados:
                logger.debug("argumentos_ignorados identidad=%s args=%s", nombre, ignorados)
        informes.append(registro.ejecutar(nombre, contexto, **propios))
    contexto.motor.volcar_cache()

    if args.format == "text":
        for informe in informes:
            print(informe)
    else:
        datos = [informe.to_dict(incluir_tiempo=args.timings) for informe in informes]
        if args.all:
            emitir_json({
                "format": FORMATO_INFORME,
                "pass": not any(informe.falla for informe in informes),
                "reports": datos,
            })
        else:
            emitir_json(datos[0])

    fallidas = [informe.identidad for informe in informes if informe.falla]
    if fallidas:
        logger.error("verificacion_fallida identidades=%s", ",".join(fallidas))
        return SALIDA_FALLO
    return SALIDA_OK


# ============================================================
# CACHE
# ============================================================

def comando_cache(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    ruta = ruta_cache(config, args.cache)
    if args.accion == "clear":
        borrada = borrar_cache(str(ruta))
        print(f"Caché {'eliminada' if borrada else 'vacía'}: {ruta}")
        return SALIDA_OK
    emitir_json(GestorCacheZeta(str(ruta)).estadisticas())
    return SALIDA_OK


# ============================================================
# MAIN
# ============================================================

def crear_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cli_zeta",
        description="Valores zeta múltiples interpolados y sus funciones generatrices",
    )
    parser.add_argument("--cache", default=None, help="Directorio de la caché de valores")
    parser.add_argument("--verbose", "-v", action="store_true", help="Diagnósticos DEBUG en stderr")

    # Las opciones globales también se aceptan detrás del comando
    comunes = argparse.ArgumentParser(add_help=False)
    comunes.add_argument("--cache", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    comunes.add_argument("--verbose", "-v", action="store_true", default=argparse.SUPPRESS,
                         help=argparse.SUPPRESS)

    comandos = parser.add_subparsers(dest="command", required=True)

    p_eval = comandos.add_parser("eval", parents=[comunes], help="Valor de una variante")
    p_eval.add_argument("--index", required=True, help="Índice k1,k2,... ('-' para el vacío)")
    p_eval.add_argument("--variant", choices=VARIANTES_EVAL, default="plain")
    p_eval.add_argument("--t", default=None, help="Parámetro t racional (ej: 1/3)")
    p_eval.add_argument("--x", default=None, help="Parámetro x racional")
    p_eval.add_argument("--y", default=None, help="Parámetro y racional")
    p_eval.add_argument("--reg", action="store_true", help="Permite índices no admisibles")
    p_eval.add_argument("--symbolic-t", dest="symbolic_t", action="store_true",
                        help="Resultado como polinomio en t")
    p_eval.add_argument("--symbolic-T", dest="symbolic_T", action="store_true",
                        help="Resultado como polinomio en la variable de regularización T")
    p_eval.add_argument("--algo", choices=["holder", "direct"], default="holder")
    p_eval.add_argument("--eps", type=float, default=None, help="Error absoluto objetivo")
    p_eval.add_argument("--format", choices=["text", "json"], default="text")

    for nombre in ("phi", "table"):
        p_phi = comandos.add_parser(nombre, parents=[comunes],
                                    help="Coeficientes de Φ" if nombre == "phi" else "Φ en CSV")
        p_phi.add_argument("--variant", required=True,
                           choices=[v.value for v in Variante])
        p_phi.add_argument("--t", default=None)
        p_phi.add_argument("--x", default=None)
        p_phi.add_argument("--y", default=None)
        p_phi.add_argument("--max-weight", dest="max_weight", type=int, default=6,
                           help="Grado total de truncación N (≤ 12)")
        p_phi.add_argument("--all-indices", dest="all_indices", action="store_true",
                           help="Suma sobre todos los índices (valores regularizados)")
        if nombre == "phi":
            p_phi.add_argument("--format", choices=["text", "csv", "json"], default="text")

    p_verify = comandos.add_parser("verify", parents=[comunes], help="Comprueba identidades")
    grupo = p_verify.add_mutually_exclusive_group()
    grupo.add_argument("--identity", default=None, help="Nombre o prefijo de la identidad")
    grupo.add_argument("--all", action="store_true", help="Todas las identidades")
    p_verify.add_argument("--list", action="store_true", help="Lista las identidades y sale")
    p_verify.add_argument("--max-weight", dest="max_weight", type=int, default=None)
    p_verify.add_argument("--t", default=None)
    p_verify.add_argument("--x", default=None)
    p_verify.add_argument("--y", default=None)
    p_verify.add_argument("--tolerance", type=float, default=None)
    p_verify.add_argument("--symbolic-T", dest="symbolic_T", action="store_true",
                          help="Añade sondeos informativos con T simbólico")
    p_verify.add_argument("--format", choices=["json", "text"], default="json")
    p_verify.add_argument("--timings", action="store_true", help="Incluye elapsed_ms")

    p_cache = comandos.add_parser("cache", parents=[comunes], help="Gestión de la caché")
    p_cache.add_argument("accion", choices=["stats", "clear"])

    return parser


COMANDOS = {
    "eval": comando_eval,
    "phi": comando_phi,
    "table": comando_phi,
    "verify": comando_verify,
    "cache": comando_cache,
}


def run(argv: Optional[List[str]] = None) -> int:
    """
    Ejecuta la CLI y devuelve el código de salida.

    Args:
        argv: Argumentos sin el nombre del programa (por defecto sys.argv[1:]).
    """
    parser = crear_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as salida:
        return SALIDA_OK if salida.code in (0, None) else SALIDA_USO

    config = obtener_configuracion()
    resetear_motor()
    configurar_registro(args.verbose)
    mpmath.mp.dps = int(config["precision"]["dps"])

    try:
        return COMANDOS[args.command](args, config)
    except ValueError as error:
        logger.error("error_uso comando=%s mensaje=%s", args.command, error)
        return SALIDA_USO


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
