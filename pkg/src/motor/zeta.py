"""
Motor de evaluación de valores zeta múltiples.

Convención: ζ(k1, ..., kr) = Σ_{1 ≤ n1 < ... < nr} 1/(n1^k1 ··· nr^kr),
convergente si kr ≥ 2.

ALGORITMOS:
- Hölder (principal): la integral iterada de ζ(k) sobre el alfabeto {0, 1}
  se parte en 1/2. Cada mitad es un polilogaritmo múltiple en 1/2, cuyos
  términos decaen como 2^-n, con cota de cola geométrica explícita.
- Directo (oráculo): sumas anidadas truncadas en M más las colas de las
  variables que superan M (Hurwitz para una variable, desarrollo por
  comparación con integrales para más).

VARIANTES:
- ζ^reg: regularización armónica, T simbólico o T = 0.
- ζ^t: Σ sobre contracciones de t^(fusiones)·ζ^reg.
- ζ⋆ = ζ^1.
- ζ^t_{x,y}: Σ_i ζ^t(k1..ki)·ζ^t(kr..k_{i+1})·x^(k1+..+ki)·y^(k_{i+1}+..+kr).
- ζ_S, ζ_S⋆: la anterior en (x, y) = (1, -1) con t = 0, 1.

El índice vacío vale 1 en todas las variantes.

PATRÓN DE INYECCIÓN:
- MotorZeta recibe la caché persistente por constructor.
- obtener_motor() solo debe usarse en cli_zeta.py.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache, wraps
from typing import Any, Dict, Iterator, List, Optional, Tuple

import mpmath
from mpmath import mpf

from algebra.armonico import Palabra, evaluar_reg, regularizar
from algebra.polinomios import PolinomioT, PolinomioXY, a_mpf, es_cero
from persistencia.cache_zeta import EntradaCacheZeta, GestorCacheZeta
from .indices import (
    ErrorIndice, TipoIndice, como_indice, contracciones, formatear_indice,
)

logger = logging.getLogger(__name__)

# Con estos dígitos de más un valor leído de la caché es idéntico, bit a bit,
# al que se calculó
DIGITOS_GUARDA_CACHE = 5


class ErrorPrecision(ValueError):
    """Tolerancia pedida no positiva."""


class ModoT(Enum):
    """Tratamiento de la variable de regularización T."""
    CONSTANTE = "constante"   # T = 0
    SIMBOLICO = "simbolico"


@dataclass(frozen=True)
class ValorReal:
    """
    Valor real con cota de error absoluta.

    Attributes:
        valor: Aproximación (mpf).
        error: Cota del error absoluto (mpf, ≥ 0).
        algoritmo: Algoritmo que lo produjo.
    """
    valor: Any
    error: Any
    algoritmo: str = "holder"

    def __float__(self) -> float:
        return float(self.valor)

    def decimal(self, digitos: Optional[int] = None) -> str:
        return mpmath.nstr(self.valor, digitos or mpmath.mp.dps)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": self.decimal(),
            "error": mpmath.nstr(self.error, 3),
            "algo": self.algoritmo,
        }

    def __str__(self) -> str:
        return f"{self.decimal()} ± {mpmath.nstr(self.error, 3)}"


# =============================================================================
# PRECISIÓN
# =============================================================================

def con_precision(metodo):
    """
    Ejecuta un método con los dígitos de trabajo de su motor.

    Sirve para MotorZeta (self.dps) y para las clases que lo reciben
    inyectado (self.motor.dps). El mpmath.mp global no se modifica.
    """
    @wraps(metodo)
    def envoltura(self, *args, **kwargs):
        dps = self.dps if isinstance(self, MotorZeta) else self.motor.dps
        with mpmath.workdps(dps):
            return metodo(self, *args, **kwargs)
    return envoltura


# =============================================================================
# CODIFICACIÓN COMO INTEGRAL ITERADA
# =============================================================================

def palabra_binaria(partes: Tuple[int, ...]) -> Tuple[int, ...]:
    """
    Palabra en {0, 1} de la integral iterada de ζ(k).

    Se lee desde la variable más externa: 0^(kr-1) 1 0^(k_{r-1}-1) 1 ... 0^(k1-1) 1.
    """
    letras: List[int] = []
    for k in reversed(partes):
        letras.extend([0] * (k - 1))
        letras.append(1)
    return tuple(letras)


def palabra_dual(palabra: Tuple[int, ...]) -> Tuple[int, ...]:
    """Invierte la palabra e intercambia 0 ↔ 1 (cambio t → 1 - t)."""
    return tuple(1 - letra for letra in reversed(palabra))


def _bloques(palabra: Tuple[int, ...]) -> List[int]:
    """Exponentes de los bloques 0^(a-1) 1, de fuera hacia dentro."""
    if not palabra or palabra[-1] != 1:
        raise ValueError(f"La palabra {palabra} debe terminar en 1")
    bloques = []
    ceros = 0
    for letra in palabra:
        if letra == 0:
            ceros += 1
        else:
            bloques.append(ceros + 1)
            ceros = 0
    return bloques


def cota_cola_mitad(M: int, d_max: int) -> float:
    """
    Cota de Σ_{n>M} 2^-n (1 + ln n)^d / d! para toda profundidad d ≤ d_max.

    La suma armónica múltiple de profundidad d hasta n-1 está acotada por
    (1 + ln n)^d / d!, y el cociente entre términos consecutivos decrece.
    """
    peor = 0.0
    for d in range(d_max + 1):
        primero = 2.0 ** (-(M + 1)) * (1 + math.log(M + 1)) ** d / math.factorial(d)
        razon = 0.5 * ((1 + math.log(M + 2)) / (1 + math.log(M + 1))) ** d
        if razon >= 1:
            return math.inf
        peor = max(peor, primero / (1 - razon))
    return peor


@lru_cache(maxsize=None)
def truncacion_holder(objetivo: float, d_max: int) -> int:
    """Menor M con cota_cola_mitad(M, d_max) ≤ objetivo."""
    M = 8
    while cota_cola_mitad(M, d_max) > objetivo:
        M += 1
    return M


# =============================================================================
# MOTOR
# =============================================================================

class MotorZeta:
    """
    Evalúa las seis variantes zeta con memoria de resultados.

    Uso:
        motor = MotorZeta()
        motor.zeta_holder((1, 2))          # ≈ ζ(3)
        motor.zeta_t((1, 2), Fraction(1, 3))
    """

    PROFUNDIDAD_REFERENCIA = 16

    def __init__(self,
                 dps: Optional[int] = None,
                 eps: Optional[float] = None,
                 cache: Optional[GestorCacheZeta] = None,
                 config: Optional[Dict[str, Any]] = None):
        """
        Args:
            dps: Dígitos decimales de trabajo (por defecto, configuración).
            eps: Tolerancia fija; si es None se usa 1e-12 para profundidad
                ≤ 3 y 1e-10 en otro caso.
            cache: Caché persistente opcional.
            config: Configuración (por defecto, la global).
        """
        if config is None:
            from configuracion import obtener_configuracion
            config = obtener_configuracion()
        precision = config["precision"]
        self.dps = int(dps or precision["dps"])
        self.eps = eps
        self._eps_baja = float(precision["eps_profundidad_baja"])
        self._eps_general = float(precision["eps_general"])
        self.truncacion_directa = int(precision["truncacion_directa"])
        self.cache = cache

        self._memo_li: Dict[Tuple[Palabra, int], Any] = {}
        self._memo_holder: Dict[Palabra, ValorReal] = {}
        self._memo_reg: Dict[Tuple[Palabra, ModoT], Any] = {}
        self._memo_t: Dict[Tuple[Palabra, Any, ModoT], Any] = {}

        if eps is not None and eps <= 0:
            raise ErrorPrecision(f"eps debe ser > 0, recibido {eps}")
        logger.debug("motor_creado dps=%d eps=%s", self.dps, eps)

    # -------------------------------------------------------------------------
    # Validación
    # -------------------------------------------------------------------------

    def eps_por_defecto(self, profundidad: int) -> float:
        if self.eps is not None:
            return self.eps
        return self._eps_baja if profundidad <= 3 else self._eps_general

    def _validar_admisible(self, indice: TipoIndice) -> Tuple[int, ...]:
        k = como_indice(indice)
        if k.es_vacio:
            raise ErrorIndice("Se requiere un índice no vacío")
        if not k.es_admisible:
            raise ErrorIndice(
                f"Índice no admisible ({formatear_indice(k)}): la última componente debe ser ≥ 2"
            )
        return k.partes

    def _validar_eps(self, eps: Optional[float], profundidad: int) -> float:
        if eps is None:
            return self.eps_por_defecto(profundidad)
        if eps <= 0:
            raise ErrorPrecision(f"eps debe ser > 0, recibido {eps}")
        return float(eps)

    # -------------------------------------------------------------------------
    # Hölder
    # -------------------------------------------------------------------------

    def _colas_li(self, palabra: Palabra, M: int) -> List[Any]:
        """
        Polilogaritmos múltiples en 1/2 de todas las colas de una palabra.

        valores[l] = Σ_{n1 > ... > nm} 2^-n1 Π n_i^-a_i para la cola de
        longitud l (bloques a_i), con valores[0] = 1. Una sola pasada sobre
        n = 1..M llena todas las colas.
        """
        w = len(palabra)
        claves = [(palabra[w - l:], M) for l in range(1, w + 1)]
        if all(clave in self._memo_li for clave in claves):
            return [mpf(1)] + [self._memo_li[clave] for clave in claves]

        bloques = _bloques(palabra)
        m = len(bloques)
        sufijo = [0] * (m + 1)
        for i in range(m - 1, -1, -1):
            sufijo[i] = sufijo[i + 1] + bloques[i]
        exponente_max = max(bloques)

        acumulado = [[mpf(0)] * a for a in bloques]
        # H[i] = suma armónica múltiple de los bloques i..m-1 hasta n-1
        H = [mpf(0)] * m + [mpf(1)]
        mitad = mpf(1) / 2
        potencia = mpf(1)

        for n in range(1, M + 1):
            potencia *= mitad
            inverso = mpf(1) / n
            potencias_n = [mpf(1)]
            for _ in range(exponente_max):
                potencias_n.append(potencias_n[-1] * inverso)

            for i in range(m):
                interior = H[i + 1]
                if not interior:
                    continue
                base = potencia * interior
                fila = acumulado[i]
                for c in range(bloques[i]):
                    fila[c] += base * potencias_n[c + 1]

            # de fuera hacia dentro: H[i+1] todavía vale en n-1
            for i in range(m):
                if H[i + 1]:
                    H[i] += potencias_n[bloques[i]] * H[i + 1]

        for i, a in enumerate(bloques):
            for c in range(a):
                longitud = c + 1 + sufijo[i + 1]
                self._memo_li[(palabra[w - longitud:], M)] = acumulado[i][c]

        return [mpf(1)] + [self._memo_li[clave] for clave in claves]

    @con_precision
    def zeta_holder(self, indice: TipoIndice, eps: Optional[float] = None) -> ValorReal:
        """
        ζ(k) por convolución de Hölder en 1/2.

        Args:
            indice: Índice admisible no vacío.
            eps: Error absoluto objetivo (> 0).

        Returns:
            ValorReal con cota de error ≤ eps.

        Raises:
            ErrorIndice: Índice vacío o no admisible.
            ErrorPrecision: eps ≤ 0.
        """
        partes = self._validar_admisible(indice)
        eps = self._validar_eps(eps, len(partes))

        memo = self._memo_holder.get(partes)
        if memo is not None and memo.error <= eps:
            return memo

        guardado = self._buscar_en_cache(partes, eps)
        if guardado is not None:
            self._memo_holder[partes] = guardado
            return guardado

        palabra = palabra_binaria(partes)
        dual = palabra_dual(palabra)
        w = len(palabra)
        objetivo = eps / (3 * (max(w, 32) + 1))
        profundidad_cola = max(len(partes), w - len(partes), self.PROFUNDIDAD_REFERENCIA)
        M = truncacion_holder(objetivo, profundidad_cola)
        delta = mpf(cota_cola_mitad(M, profundidad_cola))

        directas = self._colas_li(palabra, M)
        duales = self._colas_li(dual, M)

        valor = mpf(0)
        error = mpf(0)
        for j in range(w + 1):
            a = duales[j]
            b = directas[w - j]
            valor += a * b
            error += (abs(a) + abs(b)) * delta + delta * delta
        error += (w + 1) * M * abs(valor) * mpf(2) ** (8 - mpmath.mp.prec)

        resultado = ValorReal(valor, error, "holder")
        if error > eps:
            logger.warning("cota_superada indice=%s error=%s eps=%s",
                           formatear_indice(partes), mpmath.nstr(error, 3), eps)
        logger.debug("holder indice=%s M=%d error=%s",
                     formatear_indice(partes), M, mpmath.nstr(error, 3))

        self._memo_holder[partes] = resultado
        self._guardar_en_cache(partes, resultado)
        return resultado

    # -------------------------------------------------------------------------
    # Oráculo directo
    # -------------------------------------------------------------------------

    @staticmethod
    def _cola_asintotica(cola: Tuple[int, ...], M: int) -> Tuple[Any, Any]:
        """
        Σ_{M < n_1 < ... < n_j} Π n_i^-a_i por comparación con integrales.

        Desde la variable más interna: si la cola restante vale
        C·x^-e·(1 + d/x + f/x²), añadir un exponente a da e' = a + e - 1,
        C' = C/e', d' = e'(d/(e'+1) - 1/2), f' = e'(f/(e'+2) - d/2 + (e'+1)/12).
        """
        C, e, d, f = mpf(1), 0, mpf(0), mpf(0)
        for a in reversed(cola):
            e_nuevo = a + e - 1
            C, d, f = (
                C / e_nuevo,
                e_nuevo * (d / (e_nuevo + 1) - mpf(1) / 2),
                e_nuevo * (f / (e_nuevo + 2) - d / 2 + mpf(e_nuevo + 1) / 12),
            )
            e = e_nuevo
        Mm = mpf(M)
        valor = C * Mm ** (-e) * (1 + d / Mm + f / Mm ** 2)
        error = abs(C) * Mm ** (-e - 3) * (1 + abs(d) + abs(f)) * (e + 3) ** 2
        return valor, error

    @con_precision
    def zeta_directo(self, indice: TipoIndice, eps: Optional[float] = None,
                     truncacion: Optional[int] = None) -> ValorReal:
        """
        ζ(k) por suma anidada truncada con colas explícitas.

        Se separan las cadenas n1 < ... < nr según cuántas variables superan
        M: ζ(k) = Σ_j S_{k1..k_{r-j}}(M)·T_{k_{r-j+1}..kr}(M). Las sumas S
        son finitas; T con una variable es la zeta de Hurwitz en M+1.

        Raises:
            ErrorIndice: Índice vacío o no admisible.
            ErrorPrecision: eps ≤ 0.
        """
        partes = self._validar_admisible(indice)
        eps = self._validar_eps(eps, len(partes))
        M = truncacion or self.truncacion_directa
        r = len(partes)

        while True:
            # P[i] = Σ_{n1 < ... < ni ≤ n} Π n_l^-k_l
            P = [mpf(1)] + [mpf(0)] * r
            for n in range(1, M + 1):
                inverso = mpf(1) / n
                for i in range(r, 0, -1):
                    if P[i - 1]:
                        P[i] += P[i - 1] * inverso ** partes[i - 1]

            valor = P[r]
            error = M * r * abs(P[r]) * mpf(2) ** (8 - mpmath.mp.prec)
            for j in range(1, r + 1):
                cola = partes[r - j:]
                if j == 1:
                    cola_valor = mpmath.zeta(cola[0], M + 1)
                    cola_error = abs(cola_valor) * mpf(2) ** (8 - mpmath.mp.prec)
                else:
                    cola_valor, cola_error = self._cola_asintotica(cola, M)
                valor += P[r - j] * cola_valor
                error += abs(P[r - j]) * cola_error

            if error <= eps or M >= 64 * self.truncacion_directa:
                break
            M *= 2

        logger.debug("directo indice=%s M=%d error=%s",
                     formatear_indice(partes), M, mpmath.nstr(error, 3))
        return ValorReal(valor, error, "direct")

    # -------------------------------------------------------------------------
    # Caché persistente
    # -------------------------------------------------------------------------

    def _buscar_en_cache(self, partes: Tuple[int, ...], eps: float) -> Optional[ValorReal]:
        if self.cache is None:
            return None
        entrada = self.cache.obtener(formatear_indice(partes), "plain")
        if entrada is None:
            logger.debug("cache_fallo indice=%s", formatear_indice(partes))
            return None
        error = mpf(entrada.error)
        if error > eps:
            return None
        logger.debug("cache_acierto indice=%s", formatear_indice(partes))
        return ValorReal(mpf(entrada.valor), error, entrada.algoritmo)

    def _guardar_en_cache(self, partes: Tuple[int, ...], valor: ValorReal) -> None:
        if self.cache is None:
            return
        self.cache.guardar_entrada(EntradaCacheZeta(
            indice=formatear_indice(partes),
            variante="plain",
            valor=mpmath.nstr(valor.valor, self.dps + DIGITOS_GUARDA_CACHE),
            error=mpmath.nstr(valor.error, self.dps + DIGITOS_GUARDA_CACHE),
            algoritmo=valor.algoritmo,
            version=self.cache.VERSION_FORMATO,
        ))

    def volcar_cache(self) -> int:
        """Escribe en disco los valores nuevos; devuelve cuántos."""
        if self.cache is None:
            return 0
        return self.cache.volcar()

    # -------------------------------------------------------------------------
    # Regularización
    # -------------------------------------------------------------------------

    def _evaluar_palabra(self, palabra: Palabra) -> Any:
        if not palabra:
            return mpf(1)
        return self.zeta_holder(palabra).valor

    def _valor_reg(self, partes: Tuple[int, ...], modo: ModoT) -> Any:
        """ζ^reg como mpf (T = 0) o PolinomioT en 'T' (simbólico)."""
        clave = (partes, modo)
        if clave in self._memo_reg:
            return self._memo_reg[clave]
        simbolico = modo == ModoT.SIMBOLICO
        if not partes or partes[-1] >= 2:
            valor = self._evaluar_palabra(partes)
            if simbolico:
                valor = PolinomioT([valor], "T")
        else:
            valor = evaluar_reg(regularizar(partes), self._evaluar_palabra, simbolico)
        self._memo_reg[clave] = valor
        return valor

    @con_precision
    def zeta_reg(self, indice: TipoIndice, modo: ModoT = ModoT.CONSTANTE) -> PolinomioT:
        """
        Valor regularizado como polinomio en T.

        En modo CONSTANTE el resultado tiene grado 0 (T = 0).

        Ejemplo:
            zeta_reg((2, 1), SIMBOLICO) → ζ(2)·T - 2ζ(3)
        """
        partes = como_indice(indice).partes
        valor = self._valor_reg(partes, modo)
        if isinstance(valor, PolinomioT):
            return valor
        return PolinomioT([valor], "T")

    # -------------------------------------------------------------------------
    # Interpolación en t
    # -------------------------------------------------------------------------

    @staticmethod
    def _clave_parametro(t: Any) -> Any:
        if isinstance(t, PolinomioT):
            return ("pol", t.variable, tuple(repr(c) for c in t.coefs))
        if isinstance(t, (int, Fraction)):
            return ("q", Fraction(t))
        return ("r", repr(t))

    @con_precision
    def zeta_t(self, indice: TipoIndice, t: Any = 0,
               modo: ModoT = ModoT.CONSTANTE) -> Any:
        """
        ζ^t(k) = Σ_{contracciones} t^(fusiones)·ζ^reg(contraído).

        Args:
            indice: Cualquier índice.
            t: Racional, mpf o PolinomioT en 't' (t simbólico).
            modo: Tratamiento de T.

        Returns:
            Número para t numérico y T = 0; PolinomioT si t o T son
            simbólicos. El grado en t es ≤ profundidad - 1.
        """
        partes = como_indice(indice).partes
        clave = (partes, self._clave_parametro(t), modo)
        if clave in self._memo_t:
            return self._memo_t[clave]

        t_real = a_mpf(t)
        potencias = [1]
        for _ in range(max(len(partes) - 1, 0)):
            potencias.append(potencias[-1] * t_real)

        total: Any = 0
        for contraida, fusiones in contracciones(partes):
            potencia = potencias[fusiones]
            if es_cero(potencia):
                continue
            total = total + potencia * self._valor_reg(contraida.partes, modo)

        self._memo_t[clave] = total
        return total

    @con_precision
    def zeta_estrella(self, indice: TipoIndice, modo: ModoT = ModoT.CONSTANTE) -> Any:
        """ζ⋆(k) = ζ^1(k)."""
        return self.zeta_t(indice, 1, modo)

    # -------------------------------------------------------------------------
    # Polinomiales
    # -------------------------------------------------------------------------

    @con_precision
    def terminos_xy(self, indice: TipoIndice, t: Any = 0,
                    modo: ModoT = ModoT.CONSTANTE,
                    omitir_x: bool = False,
                    omitir_y: bool = False) -> Iterator[Tuple[int, int, Any]]:
        """
        Términos (a, b, ζ^t(k1..ki)·ζ^t(kr..k_{i+1})) de ζ^t_{x,y}(k).

        omitir_x / omitir_y descartan los términos con potencia positiva de
        una variable nula sin evaluarlos.
        """
        partes = como_indice(indice).partes
        peso = sum(partes)
        acumulado = 0
        for i in range(len(partes) + 1):
            a = acumulado
            b = peso - a
            if i < len(partes):
                acumulado += partes[i]
            if (omitir_x and a > 0) or (omitir_y and b > 0):
                continue
            izquierda = self.zeta_t(partes[:i], t, modo)
            derecha = self.zeta_t(tuple(reversed(partes[i:])), t, modo)
            yield a, b, izquierda * derecha

    @con_precision
    def zeta_xy(self, indice: TipoIndice, t: Any = 0, x: Any = 1, y: Any = 0,
                modo: ModoT = ModoT.CONSTANTE) -> Any:
        """
        ζ^t_{x,y}(k) en valores concretos de x, y.

        Ejemplos:
            zeta_xy(∅, ...) = 1
            zeta_xy(k, t=0, x=1, y=0) = ζ(k) para k admisible
        """
        x_real = a_mpf(x)
        y_real = a_mpf(y)
        total: Any = 0
        for a, b, valor in self.terminos_xy(indice, t, modo,
                                            omitir_x=es_cero(x_real),
                                            omitir_y=es_cero(y_real)):
            total = total + (x_real ** a) * (y_real ** b) * valor
        return total

    @con_precision
    def zeta_xy_polinomio(self, indice: TipoIndice, t: Any = 0,
                          modo: ModoT = ModoT.CONSTANTE) -> PolinomioXY:
        """ζ^t_{x,y}(k) como polinomio en (x, y)."""
        total = PolinomioXY()
        for a, b, valor in self.terminos_xy(indice, t, modo):
            total = total + PolinomioXY.monomio(a, b, valor)
        return total

    def _zeta_simetrica(self, indice: TipoIndice, t: int, modo: ModoT) -> Any:
        partes = como_indice(indice).partes
        total: Any = 0
        for i in range(len(partes) + 1):
            signo = -1 if sum(partes[i:]) % 2 else 1
            izquierda = self.zeta_t(partes[:i], t, modo)
            derecha = self.zeta_t(tuple(reversed(partes[i:])), t, modo)
            total = total + signo * izquierda * derecha
        return total

    @con_precision
    def zeta_s(self, indice: TipoIndice, modo: ModoT = ModoT.CONSTANTE) -> Any:
        """ζ_S(k) = Σ_i (-1)^(k_{i+1}+..+kr) ζ(k1..ki) ζ(kr..k_{i+1})."""
        return self._zeta_simetrica(indice, 0, modo)

    @con_precision
    def zeta_s_estrella(self, indice: TipoIndice, modo: ModoT = ModoT.CONSTANTE) -> Any:
        """ζ_S⋆(k), la versión con ζ⋆."""
        return self._zeta_simetrica(indice, 1, modo)

    # -------------------------------------------------------------------------
    # Cotas de error propagadas
    # -------------------------------------------------------------------------

    @con_precision
    def cota_reg(self, partes: Tuple[int, ...]) -> Any:
        """Cota del error de ζ^reg(k) en T = 0."""
        if not partes:
            return mpf(0)
        if partes[-1] >= 2:
            return self.zeta_holder(partes).error
        total = mpf(0)
        for palabra, coef in regularizar(partes).coeficiente(0).terminos():
            if palabra:
                total += abs(a_mpf(coef)) * self.zeta_holder(palabra).error
        return total

    @con_precision
    def cota_t(self, partes: Tuple[int, ...], t: Any) -> Any:
        """Cota del error de ζ^t(k) para t numérico y T = 0."""
        t_abs = abs(a_mpf(t))
        total = mpf(0)
        for contraida, fusiones in contracciones(partes):
            total += t_abs ** fusiones * self.cota_reg(contraida.partes)
        return total

    @con_precision
    def cota_xy(self, indice: TipoIndice, t: Any, x: Any, y: Any) -> Any:
        """Cota del error de ζ^t_{x,y}(k) para parámetros numéricos."""
        partes = como_indice(indice).partes
        x_abs, y_abs = abs(a_mpf(x)), abs(a_mpf(y))
        total = mpf(0)
        acumulado = 0
        peso = sum(partes)
        for i in range(len(partes) + 1):
            a = acumulado
            if i < len(partes):
                acumulado += partes[i]
            factor = x_abs ** a * y_abs ** (peso - a)
            if not factor:
                continue
            izquierda = partes[:i]
            derecha = tuple(reversed(partes[i:]))
            total += factor * (
                abs(self.zeta_t(izquierda, t)) * self.cota_t(derecha, t)
                + abs(self.zeta_t(derecha, t)) * self.cota_t(izquierda, t)
                + self.cota_t(izquierda, t) * self.cota_t(derecha, t)
            )
        return total


# =============================================================================
# INSTANCIA GLOBAL
# =============================================================================

_motor: Optional[MotorZeta] = None


def obtener_motor(cache: Optional[GestorCacheZeta] = None,
                  eps: Optional[float] = None) -> MotorZeta:
    """Obtiene o crea el motor global (solo para la CLI)."""
    global _motor
    if _motor is None:
        _motor = MotorZeta(eps=eps, cache=cache)
    return _motor


def resetear_motor() -> None:
    global _motor
    _motor = None
