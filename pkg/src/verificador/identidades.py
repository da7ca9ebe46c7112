"""
Identidades registradas: una por enunciado.

Cada identidad recorre su rejilla de parámetros (configurable en
config/proyecto.json o sustituible por argumentos) y combina los casos
en un único informe.
"""

from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from algebra.polinomios import a_mpf
from configuracion import (
    ErrorParametros, formatear_racional, orden as orden_configurado,
    parsear_racional, rejilla, tolerancia as tolerancia_configurada,
)
from generatrices.parametros import ORDEN_MAXIMO, ParametrosGF, Variante, ESPECIALIZACIONES
from generatrices.raices import PuntoR3
from motor.indices import enumerar_indices, formatear_indice
from motor.zeta import ModoT
from series.serie import SerieTruncada
from .comprobaciones import (
    ContextoVerificacion, comprobar_exacto, comprobar_independencia_T,
    comprobar_lema4_indices, comprobar_lema5, comprobar_lema6,
    comprobar_lema6_simbolico, comprobar_lema7, comprobar_lq, comprobar_en_punto,
    comprobar_series, desviacion_relativa, informe_caso, parametros_serie,
)
from .identidad_base import Identidad
from .informe import InformeVerificacion, combinar_informes, formatear_numero
from .registro import registrar_identidad


# =============================================================================
# PARÁMETROS COMUNES
# =============================================================================

PARAM_ORDEN = {
    "orden": {
        "tipo": "int",
        "descripcion": "Grado total de truncación (series) o peso máximo (índices)",
        "requerido": False,
    },
}

PARAM_TOLERANCIA = {
    "tolerancia": {
        "tipo": "float",
        "descripcion": "Sustituye la tolerancia configurada",
        "requerido": False,
    },
}

PARAM_T = {
    "t": {
        "tipo": "rational",
        "descripcion": "Un único valor de t en lugar de la rejilla (ej: '1/3')",
        "requerido": False,
    },
}

PARAM_XY = {
    "x": {"tipo": "rational", "descripcion": "Valor de x en lugar de la rejilla", "requerido": False},
    "y": {"tipo": "rational", "descripcion": "Valor de y en lugar de la rejilla", "requerido": False},
}

PARAM_MODO_T = {
    "modo_T": {
        "tipo": "constante|simbolico",
        "descripcion": "Con 'simbolico' se añaden sondeos informativos con T simbólico",
        "requerido": False,
    },
}


def _tolerancia(contexto: ContextoVerificacion, nombre: str, kwargs: Dict[str, Any]) -> float:
    if kwargs.get("tolerancia") is not None:
        valor = float(kwargs["tolerancia"])
        if valor <= 0:
            raise ErrorParametros(f"La tolerancia debe ser > 0, recibido {valor}")
        return valor
    return tolerancia_configurada(nombre, contexto.config)


def _orden(contexto: ContextoVerificacion, nombre: str, kwargs: Dict[str, Any],
           por_defecto: int = 6) -> int:
    valor = kwargs.get("orden")
    if valor is None:
        return orden_configurado(nombre, contexto.config, por_defecto)
    valor = int(valor)
    if valor < 2 or valor > ORDEN_MAXIMO:
        raise ErrorParametros(f"El orden debe estar entre 2 y {ORDEN_MAXIMO}, recibido {valor}")
    return valor


def _peso_puntual(kwargs: Dict[str, Any]) -> Optional[int]:
    """Peso máximo de la fuerza bruta puntual; None usa la configuración."""
    if kwargs.get("orden") is None:
        return None
    valor = int(kwargs["orden"])
    if valor < 2:
        raise ErrorParametros(f"El peso máximo debe ser ≥ 2, recibido {valor}")
    return valor


def _rejilla_t(contexto: ContextoVerificacion, clave: str,
               kwargs: Dict[str, Any]) -> List[Fraction]:
    if kwargs.get("t") is not None:
        return [parsear_racional(kwargs["t"])]
    return [parsear_racional(v) for v in rejilla(clave, contexto.config, ["0"])]


def _rejilla_xy(contexto: ContextoVerificacion, clave: str,
                kwargs: Dict[str, Any]) -> List[Tuple[Fraction, Fraction]]:
    if kwargs.get("x") is not None or kwargs.get("y") is not None:
        x = parsear_racional(kwargs["x"]) if kwargs.get("x") is not None else Fraction(1)
        y = parsear_racional(kwargs["y"]) if kwargs.get("y") is not None else Fraction(0)
        return [(x, y)]
    return [(parsear_racional(x), parsear_racional(y))
            for x, y in rejilla(clave, contexto.config, [["1", "0"]])]


def _puntos(contexto: ContextoVerificacion, clave: str) -> List[PuntoR3]:
    return [PuntoR3.desde(p) for p in rejilla(clave, contexto.config, [])]


def _modo_T(kwargs: Dict[str, Any]) -> ModoT:
    texto = kwargs.get("modo_T") or ModoT.CONSTANTE.value
    try:
        return ModoT(texto)
    except ValueError:
        raise ErrorParametros(
            f"modo_T inválido: '{texto}'. Opciones: constante, simbolico"
        ) from None


def _textos(valores) -> List[str]:
    return [formatear_racional(v) for v in valores]


class IdentidadRejilla(Identidad):
    """Base con la combinación de casos común a todas las identidades."""

    def combinar(self, contexto: ContextoVerificacion, casos: List[InformeVerificacion],
                 tolerancia: float, parametros: Dict[str, Any]) -> InformeVerificacion:
        return combinar_informes(self.nombre, casos, tolerancia, parametros, contexto.version)


# =============================================================================
# TEOREMA DE OHNO-ZAGIER
# =============================================================================

class OhnoZagierExponencial(IdentidadRejilla):
    """Forma exponencial en series, simetría X ↔ Y y acuerdo puntual con la forma Γ."""

    @property
    def nombre(self) -> str:
        return "oz_exp"

    @property
    def descripcion(self) -> str:
        return ("(XY - Z)·Φ = Z·(1 - exp(Σ ζ(k)/k·(X^k + Y^k - α^k - β^k))) "
                "coeficiente a coeficiente")

    @property
    def enunciado(self) -> str:
        return "Ohno-Zagier (forma exponencial)"

    @property
    def parametros(self) -> Dict[str, Dict[str, Any]]:
        return {**PARAM_ORDEN, **PARAM_TOLERANCIA}

    def ejecutar(self, contexto: ContextoVerificacion, **kwargs) -> InformeVerificacion:
        orden = _orden(contexto, self.nombre, kwargs, 8)
        tol = _tolerancia(contexto, self.nombre, kwargs)
        gen = contexto.generatrices

        izquierdo, derecho = gen.lados_oz(orden)
        casos = [comprobar_series(self.nombre, {"N": orden, "form": "cleared"},
                                  izquierdo, derecho, tol)]

        phi = gen.phi_por_variante(Variante.PLAIN, orden)
        simetrica = SerieTruncada(orden, {(j, i, k): c for (i, j, k), c in phi.terminos()})
        casos.append(comprobar_series(self.nombre, {"N": orden, "form": "xy_symmetry"},
                                      phi, simetrica, tol))

        for punto in _puntos(contexto, "puntos_gamma"):
            casos.append(comprobar_en_punto(
                self.nombre, {"point": str(punto), "form": "exp_vs_gamma"},
                lambda: (contexto.evaluador.oz_exp(punto), contexto.evaluador.oz_gamma(punto)),
                tol,
            ))
        return self.combinar(contexto, casos, tol, {"N": orden})


class OhnoZagierGamma(IdentidadRejilla):
    """Forma Γ frente a Φ por fuerza bruta con cola extrapolada."""

    @property
    def nombre(self) -> str:
        return "oz_gamma"

    @property
    def descripcion(self) -> str:
        return "Z/(XY - Z)·(1 - Γ(1-X)Γ(1-Y)/(Γ(1-α)Γ(1-β))) frente a Φ en puntos de muestra"

    @property
    def enunciado(self) -> str:
        return "Ohno-Zagier (forma Γ)"

    @property
    def parametros(self) -> Dict[str, Dict[str, Any]]:
        return {**PARAM_ORDEN, **PARAM_TOLERANCIA}

    def ejecutar(self, contexto: ContextoVerificacion, **kwargs) -> InformeVerificacion:
        tol = _tolerancia(contexto, self.nombre, kwargs)
        peso = _peso_puntual(kwargs)
        evaluador = contexto.evaluador
        casos = []
        for punto in _puntos(contexto, "puntos_gamma"):
            casos.append(comprobar_en_punto(
                self.nombre, {"point": str(punto)},
                lambda: (evaluador.oz_gamma(punto), evaluador.phi_puntual(punto, 0, True, peso)),
                tol,
            ))
        return self.combinar(contexto, casos, tol,
                             {"max_weight": peso or evaluador.peso_maximo})


# =============================================================================
# FORMA HIPERGEOMÉTRICA
# =============================================================================

class FormaHipergeometrica(IdentidadRejilla):
    """₃F₂ frente a Ψ^t, más el reescalado Φ^t(X, Y, Z) = Ψ^t(X, (1-2t)Y, (1-2t)Z)."""

    @property
    def nombre(self) -> str:
        return "lq_3f2"

    @property
    def descripcion(self) -> str:
        return ("Z/((1-Y)(1-β_t))·₃F₂(1+α_{t-1}-β_t, 1+β_{t-1}-β_t, 1; 2-Y, 2-β_t; 1) "
                "frente a Σ ζ^t(k)u_k en puntos de muestra")

    @property
    def enunciado(self) -> str:
        return "Forma hipergeométrica ₃F₂ de Φ^t"

    @property
    def parametros(self) -> Dict[str, Dict[str, Any]]:
        return {**PARAM_ORDEN, **PARAM_T, **PARAM_TOLERANCIA}

    def ejecutar(self, contexto: ContextoVerificacion, **kwargs) -> InformeVerificacion:
        tol = _tolerancia(contexto, self.nombre, kwargs)
        peso = _peso_puntual(kwargs)
        valores_t = _rejilla_t(contexto, "t_lq", kwargs)
        evaluador = contexto.evaluador
        puntos = _puntos(contexto, "puntos_lq")

        casos = []
        for t in valores_t:
            for punto in puntos:
                casos.append(comprobar_lq(evaluador, t, punto, tol, peso))

        for t in valores_t:
            lam = a_mpf(1 - 2 * t)
            for punto in puntos:
                X, Y, Z = punto
                reescalado = PuntoR3(X, lam * Y, lam * Z)
                casos.append(comprobar_en_punto(
                    self.nombre,
                    {"t": formatear_racional(t), "point": str(punto), "form": "reweight"},
                    lambda: (evaluador.phi_puntual(punto, t, True, peso),
                             evaluador.phi_puntual(reescalado, t, False, peso)),
                    tol,
                ))
        return self.combinar(contexto, casos, tol, {"t": _textos(valores_t),
                                                    "max_weight": peso or evaluador.peso_maximo})


# =============================================================================
# GENERATRIZ INTERPOLADA Y RELACIONES AUXILIARES
# =============================================================================

class GeneratrizInterpolada(IdentidadRejilla):
    """Φ^t_{x,y} frente a su expresión con Φ^t, Φ^{1-t} y la exponencial."""

    @property
    def nombre(self) -> str:
        return "main"

    @property
    def descripcion(self) -> str:
        return ("Φ^t_{x,y} = Φ^t(xX,xY,x²Z) - Φ^{1-t}(yX,yY,y²Z)·exp(Σ ζ(k)/k·(x^k+y^k)"
                "·(γ_t^k+δ_t^k-γ_{1-t}^k-δ_{1-t}^k))")

    @property
    def enunciado(self) -> str:
        return "Generatriz de ζ^t_{x,y}"

    @property
    def parametros(self) -> Dict[str, Dict[str, Any]]:
        return {**PARAM_ORDEN, **PARAM_T, **PARAM_XY, **PARAM_TOLERANCIA}

    def ejecutar(self, contexto: ContextoVerificacion, **kwargs) -> InformeVerificacion:
        orden = _orden(contexto, self.nombre, kwargs, 7)
        tol = _tolerancia(contexto, self.nombre, kwargs)
        valores_t = _rejilla_t(contexto, "t", kwargs)
        valores_xy = _rejilla_xy(contexto, "xy", kwargs)
        gen = contexto.generatrices

        casos = []
        for t in valores_t:
            for x, y in valores_xy:
                izquierdo, derecho = gen.lados_principal(t, x, y, orden)
                casos.append(comprobar_series(self.nombre, parametros_serie(t, x, y, orden),
                                              izquierdo, derecho, tol))
        return self.combinar(contexto, casos, tol, {
            "N": orden,
            "t": _textos(valores_t),
            "xy": [_textos(par) for par in valores_xy],
        })


class ReescaladoXY(IdentidadRejilla):
    """Relación entre Φ^t reescalada y Φ^t_{x,y}, en series y por índice."""

    PESO_POR_INDICE = 6

    @property
    def nombre(self) -> str:
        return "lemma4"

    @property
    def descripcion(self) -> str:
        return ("Φ^t(xX,xY,x²Z) - Φ^t_{x,y} = Φ^{1-t}(yX,yY,y²Z)·Σ_k (1-2t)^dep ζ^t_{x,y}(k)u_k, "
                "y su forma por índice")

    @property
    def enunciado(self) -> str:
        return "Descomposición de Φ^t_{x,y} por Φ^{1-t}"

    @property
    def parametros(self) -> Dict[str, Dict[str, Any]]:
        return {**PARAM_ORDEN, **PARAM_T, **PARAM_XY, **PARAM_TOLERANCIA}

    def ejecutar(self, contexto: ContextoVerificacion, **kwargs) -> InformeVerificacion:
        orden = _orden(contexto, self.nombre, kwargs, 5)
        tol = _tolerancia(contexto, self.nombre, kwargs)
        valores_t = _rejilla_t(contexto, "t_lemma4", kwargs)
        valores_xy = _rejilla_xy(contexto, "xy_lemma4", kwargs)
        gen = contexto.generatrices

        casos = []
        for t in valores_t:
            for x, y in valores_xy:
                izquierdo, derecho = gen.lados_lema4(t, x, y, orden)
                casos.append(comprobar_series(self.nombre, parametros_serie(t, x, y, orden),
                                              izquierdo, derecho, tol))
                casos.append(comprobar_lema4_indices(gen, t, x, y, self.PESO_POR_INDICE, tol))
        return self.combinar(contexto, casos, tol, {
            "N": orden,
            "t": _textos(valores_t),
            "xy": [_textos(par) for par in valores_xy],
        })


class Antipoda(IdentidadRejilla):
    """Suma alternada de ζ^t y ζ^{1-t} sobre los cortes de un índice."""

    PESO_SONDEO_SIMBOLICO = 4

    @property
    def nombre(self) -> str:
        return "lemma5_antipode"

    @property
    def descripcion(self) -> str:
        return ("Σ_j (-1)^{r-j} ζ^t(k_j..k_1)·ζ^{1-t}(k_{j+1}..k_r) = 0 como polinomio en t, "
                "para todos los índices")

    @property
    def enunciado(self) -> str:
        return "Antípoda de ζ^t"

    @property
    def parametros(self) -> Dict[str, Dict[str, Any]]:
        return {**PARAM_ORDEN, **PARAM_T, **PARAM_MODO_T, **PARAM_TOLERANCIA}

    def ejecutar(self, contexto: ContextoVerificacion, **kwargs) -> InformeVerificacion:
        peso = _orden(contexto, self.nombre, kwargs, 6)
        tol = _tolerancia(contexto, self.nombre, kwargs)
        t = parsear_racional(kwargs["t"]) if kwargs.get("t") is not None else None
        modo = _modo_T(kwargs)
        motor = contexto.motor

        casos = []
        for indice in enumerar_indices(peso):
            if indice.es_vacio:
                continue
            casos.append(comprobar_lema5(motor, indice, tol, t))
            if modo == ModoT.SIMBOLICO and indice.peso <= self.PESO_SONDEO_SIMBOLICO:
                casos.append(comprobar_lema5(motor, indice, tol, t, ModoT.SIMBOLICO))
        return self.combinar(contexto, casos, tol, {
            "max_weight": peso,
            "t": "t" if t is None else formatear_racional(t),
            "T": modo.value,
        })


class GeneratrizExponencial(IdentidadRejilla):
    """Φ sobre todos los índices como exponencial de sumas de potencias."""

    @property
    def nombre(self) -> str:
        return "lemma6_symgene"

    @property
    def descripcion(self) -> str:
        return ("Σ_k (1-2t)^dep ζ^t_{x,y}(k)u_k = exp(Σ ζ(k)/k·(x^k+y^k)"
                "·(γ_t^k+δ_t^k-γ_{1-t}^k-δ_{1-t}^k)), con el exponente por particiones y el log")

    @property
    def enunciado(self) -> str:
        return "Exponente por particiones de conjuntos"

    @property
    def parametros(self) -> Dict[str, Dict[str, Any]]:
        return {**PARAM_ORDEN, **PARAM_T, **PARAM_XY, **PARAM_MODO_T, **PARAM_TOLERANCIA}

    def ejecutar(self, contexto: ContextoVerificacion, **kwargs) -> InformeVerificacion:
        orden = _orden(contexto, self.nombre, kwargs, 6)
        tol = _tolerancia(contexto, self.nombre, kwargs)
        valores_t = _rejilla_t(contexto, "t_lemma6", kwargs)
        valores_xy = _rejilla_xy(contexto, "xy_lemma6", kwargs)
        modo = _modo_T(kwargs)
        gen = contexto.generatrices

        casos = []
        for t in valores_t:
            for x, y in valores_xy:
                casos.extend(comprobar_lema6(gen, t, x, y, orden, tol))
                if modo == ModoT.SIMBOLICO:
                    casos.append(comprobar_lema6_simbolico(gen, t, x, y, orden, tol))
        return self.combinar(contexto, casos, tol, {
            "N": orden,
            "t": _textos(valores_t),
            "xy": [_textos(par) for par in valores_xy],
            "T": modo.value,
        })


class SumaSimetrica(IdentidadRejilla):
    """Suma sobre permutaciones frente a suma sobre particiones de conjuntos."""

    PROFUNDIDAD_MAXIMA = 4

    @property
    def nombre(self) -> str:
        return "lemma7_symsum"

    @property
    def descripcion(self) -> str:
        return ("Σ_σ ζ^t_{x,y}(k_σ) = Σ_Π Π_P c_|P|(t)·ζ_{x,y}(Σ_{i∈P} k_i) como polinomios "
                "en (x, y)")

    @property
    def enunciado(self) -> str:
        return "Suma simétrica de ζ^t_{x,y}"

    @property
    def parametros(self) -> Dict[str, Dict[str, Any]]:
        return {**PARAM_ORDEN, **PARAM_T, **PARAM_TOLERANCIA}

    def ejecutar(self, contexto: ContextoVerificacion, **kwargs) -> InformeVerificacion:
        peso = _orden(contexto, self.nombre, kwargs, 8)
        tol = _tolerancia(contexto, self.nombre, kwargs)
        valores_t = _rejilla_t(contexto, "t_lemma7", kwargs)

        casos = []
        for t in valores_t:
            for indice in enumerar_indices(peso):
                if indice.es_vacio or indice.profundidad > self.PROFUNDIDAD_MAXIMA:
                    continue
                casos.append(comprobar_lema7(contexto.motor, indice, t, tol))
        return self.combinar(contexto, casos, tol, {
            "max_weight": peso,
            "max_depth": self.PROFUNDIDAD_MAXIMA,
            "t": _textos(valores_t),
        })


# =============================================================================
# VARIANTE SIMÉTRICA
# =============================================================================

class GeneratrizSimetrica(IdentidadRejilla):
    """Φ^t_S en términos de Φ^t y Φ^{1-t}, forma exacta."""

    @property
    def nombre(self) -> str:
        return "cor1"

    @property
    def descripcion(self) -> str:
        return ("Φ^t_S = Φ^t - Φ^{1-t}(-X,-Y,Z)·exp(Σ_{k par} 2ζ(k)/k·(...)); "
                "factores 1 + (-1)^k de k impar exactamente 0")

    @property
    def enunciado(self) -> str:
        return "Generatriz de ζ^t_S"

    @property
    def parametros(self) -> Dict[str, Dict[str, Any]]:
        return {**PARAM_ORDEN, **PARAM_T, **PARAM_TOLERANCIA}

    def ejecutar(self, contexto: ContextoVerificacion, **kwargs) -> InformeVerificacion:
        orden = _orden(contexto, self.nombre, kwargs, 7)
        tol = _tolerancia(contexto, self.nombre, kwargs)
        valores_t = _rejilla_t(contexto, "t_cor1", kwargs)

        casos = []
        for t in valores_t:
            izquierdo, derecho, estructurales = contexto.generatrices.lados_cor1(t, orden)
            base = {"t": formatear_racional(t), "N": orden}
            casos.append(comprobar_series(self.nombre, {**base, "form": "series"},
                                          izquierdo, derecho, tol))
            casos.append(comprobar_exacto(self.nombre, {**base, "form": "odd_factors"},
                                          estructurales))
        return self.combinar(contexto, casos, tol, {"N": orden, "t": _textos(valores_t)})


class DiferenciaEstrella(IdentidadRejilla):
    """Σ (ζ_S⋆ - ζ⋆)(k)u_k: cadena de series y cociente de Γ."""

    NOTA_DENOMINADOR = "se asume ξ en el denominador Γ(1-η)Γ(1-ξ)"

    @property
    def nombre(self) -> str:
        return "cor2"

    @property
    def descripcion(self) -> str:
        return ("Σ (ζ_S⋆ - ζ⋆)(k)u_k = Z/(XY - Z)·(Γ(1+X)Γ(1-Y)/(Γ(1-η)Γ(1-ξ)) - 1), "
                "en series y en puntos de muestra")

    @property
    def enunciado(self) -> str:
        return "Generatriz de ζ_S⋆ - ζ⋆"

    @property
    def parametros(self) -> Dict[str, Dict[str, Any]]:
        return {**PARAM_ORDEN, **PARAM_TOLERANCIA}

    def ejecutar(self, contexto: ContextoVerificacion, **kwargs) -> InformeVerificacion:
        orden = _orden(contexto, self.nombre, kwargs, 7)
        tol = _tolerancia(contexto, self.nombre, kwargs)
        tol_puntual = tolerancia_configurada("cor2_puntual", contexto.config)
        evaluador = contexto.evaluador

        lados = contexto.generatrices.lados_cor2(orden)
        casos = [
            comprobar_series(self.nombre, {"N": orden, "form": "substitution"},
                             lados["suma"], lados["sustitucion"], tol),
            comprobar_series(self.nombre, {"N": orden, "form": "chain"},
                             lados["suma"], lados["cadena"], tol),
        ]
        for punto in _puntos(contexto, "puntos_cor2"):
            caso = comprobar_en_punto(
                self.nombre, {"point": str(punto), "form": "gamma"},
                lambda: (evaluador.cor2_gamma(punto), evaluador.cor2_cadena(punto)),
                tol_puntual,
            )
            caso.nota = ", ".join(n for n in (caso.nota, self.NOTA_DENOMINADOR) if n)
            casos.append(caso)
        return self.combinar(contexto, casos, tol, {"N": orden})


# =============================================================================
# COHERENCIA DE DEFINICIONES
# =============================================================================

class Especializaciones(IdentidadRejilla):
    """Retículo de especializaciones de ζ^t_{x,y} y de Φ^t_{x,y}."""

    @property
    def nombre(self) -> str:
        return "specializations"

    @property
    def descripcion(self) -> str:
        return ("ζ^0 = ζ, ζ^t_{1,0} = ζ^t, ζ^1_{1,0} = ζ⋆, ζ^0_{1,-1} = ζ_S, ζ^1_{1,-1} = ζ_S⋆ "
                "y las mismas igualdades para las generatrices")

    @property
    def enunciado(self) -> str:
        return "Definiciones de ζ^t_{x,y} y Φ^t_{x,y}"

    @property
    def parametros(self) -> Dict[str, Dict[str, Any]]:
        return {**PARAM_ORDEN, **PARAM_T, **PARAM_TOLERANCIA}

    def _pares(self, contexto: ContextoVerificacion,
               valores_t: List[Fraction]) -> List[Tuple[str, Any]]:
        motor = contexto.motor
        pares = [
            ("zeta_t0=zeta", lambda k: (motor.zeta_t(k, 0), motor.zeta_holder(k).valor)),
            ("xy(1,1,0)=star", lambda k: (motor.zeta_xy(k, 1, 1, 0), motor.zeta_estrella(k))),
            ("xy(0,1,-1)=S", lambda k: (motor.zeta_xy(k, 0, 1, -1), motor.zeta_s(k))),
            ("xy(1,1,-1)=S_star", lambda k: (motor.zeta_xy(k, 1, 1, -1), motor.zeta_s_estrella(k))),
        ]
        for t in valores_t:
            pares.append((f"xy({formatear_racional(t)},1,0)=t",
                          lambda k, t=t: (motor.zeta_xy(k, t, 1, 0), motor.zeta_t(k, t))))
        return pares

    def ejecutar(self, contexto: ContextoVerificacion, **kwargs) -> InformeVerificacion:
        orden = _orden(contexto, self.nombre, kwargs, 6)
        tol = _tolerancia(contexto, self.nombre, kwargs)
        valores_t = _rejilla_t(contexto, "t", kwargs)
        indices = [k for k in enumerar_indices(orden, solo_admisibles=True) if not k.es_vacio]

        casos = []
        for nombre, par in self._pares(contexto, valores_t):
            maxima = 0.0
            filas = []
            for indice in indices:
                desviacion = desviacion_relativa(*par(indice))
                maxima = max(maxima, desviacion)
                filas.append({"index": formatear_indice(indice), "dev": formatear_numero(desviacion)})
            casos.append(informe_caso(self.nombre, {"pair": nombre, "max_weight": orden},
                                      maxima, tol, filas))

        gen = contexto.generatrices
        for variante, (t, x, y) in ESPECIALIZACIONES.items():
            general = gen.phi_fuerza_bruta(ParametrosGF.para(Variante.IPMZV, orden, t, x, y))
            casos.append(comprobar_series(
                self.nombre, {"pair": f"phi_{variante.value}", "N": orden},
                gen.phi_por_variante(variante, orden), general, tol,
            ))
        return self.combinar(contexto, casos, tol, {"max_weight": orden, "t": _textos(valores_t)})


class IndependenciaT(IdentidadRejilla):
    """ζ_S y ζ_S⋆ no dependen de la variable de regularización T."""

    @property
    def nombre(self) -> str:
        return "t_independence"

    @property
    def descripcion(self) -> str:
        return "Coeficientes de T^n (n ≥ 1) de ζ_S y ζ_S⋆ nulos para todos los índices"

    @property
    def enunciado(self) -> str:
        return "Definición de ζ_S con regularización armónica"

    @property
    def parametros(self) -> Dict[str, Dict[str, Any]]:
        return {**PARAM_ORDEN, **PARAM_TOLERANCIA}

    def ejecutar(self, contexto: ContextoVerificacion, **kwargs) -> InformeVerificacion:
        peso = _orden(contexto, self.nombre, kwargs, 6)
        tol = _tolerancia(contexto, self.nombre, kwargs)
        casos = [comprobar_independencia_T(contexto.motor, indice, tol)
                 for indice in enumerar_indices(peso) if not indice.es_vacio]
        return self.combinar(contexto, casos, tol, {"max_weight": peso})


# Registrar
registrar_identidad(OhnoZagierExponencial())
registrar_identidad(OhnoZagierGamma())
registrar_identidad(FormaHipergeometrica())
registrar_identidad(GeneratrizInterpolada())
registrar_identidad(ReescaladoXY())
registrar_identidad(Antipoda())
registrar_identidad(GeneratrizExponencial())
registrar_identidad(SumaSimetrica())
registrar_identidad(GeneratrizSimetrica())
registrar_identidad(DiferenciaEstrella())
registrar_identidad(Especializaciones())
registrar_identidad(IndependenciaT())
