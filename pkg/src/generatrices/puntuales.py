"""
Evaluación puntual de las funciones generatrices y de sus formas cerradas.

FUERZA BRUTA:
    Σ_k λ^dep(k)·ζ^t(k)·u_k se agrupa por capas de peso. Como
    ζ^t(k) = Σ_{contracciones c} t^(fusiones)·ζ(c), cada MZV admisible ζ(c)
    recibe Π_i G(c_i) con G(n) la suma sobre composiciones de n:

        G(n)     = λu_n + Σ_{a<n} λu_a·t·G(n-a)
        G_adm(n) = [n ≥ 2]λu_n + Σ_{a<n} λu_a·t·G_adm(n-a)

    (la última componente usa G_adm). La cola tras la última capa se
    extrapola geométricamente.

FORMAS CERRADAS:
    - Γ y exponencial del teorema de Ohno-Zagier
    - forma ₃F₂ de la serie interpolada (sin peso por profundidad)
    - cociente de Γ para ζ_S⋆ - ζ⋆

PATRÓN DE INYECCIÓN:
- EvaluadorPuntual recibe el MotorZeta por constructor.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

import mpmath
from mpmath import mpf

from algebra.polinomios import a_mpf
from motor.indices import enumerar_indices
from motor.zeta import MotorZeta, con_precision
from .raices import (
    ParRaices, PuntoR3, raices_alfa_beta, raices_eta_xi, raices_oz,
)

logger = logging.getLogger(__name__)


class ErrorPrecondicion(ValueError):
    """Una forma cerrada no puede evaluarse en el punto pedido."""


@dataclass
class ResultadoPuntual:
    """
    Valor puntual con información de cómo se obtuvo.

    Attributes:
        valor: Valor numérico (mpf).
        rama: Rama de raíces usada, si aplica.
        terminos: Términos o capas sumados.
        cola: Estimación de la cola añadida.
        notas: Observaciones (límite removible, etc.).
    """
    valor: Any
    rama: Optional[str] = None
    terminos: int = 0
    cola: Any = 0
    notas: List[str] = field(default_factory=list)

    def __float__(self) -> float:
        return float(self.valor)


# Por debajo de este |XY - Z| se toma el límite en vez de dividir
UMBRAL_SINGULAR = mpf("1e-8")
PASO_LIMITE = mpf("1e-5")


class EvaluadorPuntual:
    """
    Evalúa generatrices por fuerza bruta y formas cerradas en puntos de R³.

    Uso:
        evaluador = EvaluadorPuntual(motor)
        punto = PuntoR3.desde(("0.1", "0.2", "0.01"))
        evaluador.oz_gamma(punto).valor
        evaluador.phi_puntual(punto, Fraction(0)).valor
    """

    def __init__(self, motor: MotorZeta, config: Optional[Dict[str, Any]] = None):
        if config is None:
            from configuracion import obtener_configuracion
            config = obtener_configuracion()
        puntual = config["puntual"]
        self.motor = motor
        self.peso_maximo = int(puntual["peso_maximo"])
        self.eps_hipergeometrica = mpf(puntual["eps_hipergeometrica"])
        self.max_terminos = int(puntual["max_terminos"])
        self._indices_por_peso: Dict[int, List[Tuple[int, ...]]] = {}
        self._peso_enumerado = -1

    # =========================================================================
    # FUERZA BRUTA
    # =========================================================================

    def _indices_admisibles(self, peso: int) -> List[Tuple[int, ...]]:
        if peso > self._peso_enumerado:
            self._indices_por_peso = {}
            self._peso_enumerado = max(peso, self.peso_maximo)
            for indice in enumerar_indices(self._peso_enumerado, solo_admisibles=True):
                if not indice.es_vacio:
                    self._indices_por_peso.setdefault(indice.peso, []).append(indice.partes)
        return self._indices_por_peso.get(peso, [])

    @staticmethod
    def _sumas_composiciones(punto: PuntoR3, t: Any, lam: Any,
                             peso_maximo: int) -> Tuple[List[Any], List[Any]]:
        """G(n) y G_adm(n) para n = 0..peso_maximo."""
        X, Y, Z = punto
        u = [mpf(0), Y] + [X ** (a - 2) * Z for a in range(2, peso_maximo + 1)]
        G = [mpf(0)] * (peso_maximo + 1)
        G_adm = [mpf(0)] * (peso_maximo + 1)
        for n in range(1, peso_maximo + 1):
            g = lam * u[n]
            g_adm = lam * u[n] if n >= 2 else mpf(0)
            for a in range(1, n):
                factor = lam * u[a] * t
                g += factor * G[n - a]
                g_adm += factor * G_adm[n - a]
            G[n] = g
            G_adm[n] = g_adm
        return G, G_adm

    @con_precision
    def capas(self, punto: PuntoR3, t: Any, lam: Any,
              peso_maximo: Optional[int] = None) -> List[Any]:
        """Capas por peso w = 2..peso_maximo de Σ_k λ^dep·ζ^t(k)·u_k."""
        peso_maximo = peso_maximo or self.peso_maximo
        t = a_mpf(t)
        lam = a_mpf(lam)
        G, G_adm = self._sumas_composiciones(punto, t, lam, peso_maximo)
        resultado = []
        for peso in range(2, peso_maximo + 1):
            capa = mpf(0)
            for partes in self._indices_admisibles(peso):
                producto = G_adm[partes[-1]]
                for parte in partes[:-1]:
                    producto *= G[parte]
                if producto == 0:
                    continue
                capa += producto * self.motor.zeta_holder(partes).valor
            resultado.append(capa)
        return resultado

    @con_precision
    def suma_capas(self, capas: List[Any]) -> ResultadoPuntual:
        """
        Suma de capas más una cola geométrica.

        Las capas por debajo del epsilon de trabajo (relativo a la mayor)
        cuentan como nulas. Con cuatro capas o más, pares e impares se
        extrapolan por separado con razón c_k/c_{k-2}: si X + Y = 0 una de
        cada dos capas se anula y la razón entre capas vecinas no sirve.
        Con menos capas se usa la razón entre las dos últimas no nulas.

        Raises:
            ErrorPrecondicion: Si alguna razón tiene módulo ≥ 1.
        """
        total = mpf(0)
        for capa in capas:
            total += capa
        if not capas:
            return ResultadoPuntual(total)
        umbral = max(abs(capa) for capa in capas) * mpf(10) ** (3 - mpmath.mp.dps)
        nulas = [abs(capa) <= umbral for capa in capas]

        cola = mpf(0)
        if len(capas) >= 4:
            for j in (len(capas) - 2, len(capas) - 1):
                if nulas[j]:
                    continue
                if nulas[j - 2]:
                    self._sin_decaimiento(mpmath.inf)
                razon = self._razon_valida(capas[j] / capas[j - 2])
                cola += capas[j] * razon / (1 - razon)
        else:
            no_nulas = [capa for capa, nula in zip(capas, nulas) if not nula]
            if len(no_nulas) >= 2:
                razon = self._razon_valida(no_nulas[-1] / no_nulas[-2])
                cola = no_nulas[-1] * razon / (1 - razon)
        return ResultadoPuntual(total + cola, terminos=len(capas), cola=cola)

    @staticmethod
    def _sin_decaimiento(razon: Any) -> None:
        raise ErrorPrecondicion(
            f"Las capas no decrecen geométricamente (razón {mpmath.nstr(razon, 5)}); "
            f"elige un punto más cercano al origen"
        )

    @classmethod
    def _razon_valida(cls, razon: Any) -> Any:
        if abs(razon) >= 1:
            cls._sin_decaimiento(razon)
        return razon

    @con_precision
    def phi_puntual(self, punto: PuntoR3, t: Any = 0, ponderada: bool = True,
                    peso_maximo: Optional[int] = None) -> ResultadoPuntual:
        """
        Φ^t (ponderada, λ = 1 - 2t) o Ψ^t = Σ ζ^t(k)u_k (λ = 1) en un punto.
        """
        t = Fraction(t) if isinstance(t, (int, Fraction)) else t
        lam = 1 - 2 * t if ponderada else 1
        resultado = self.suma_capas(self.capas(punto, t, lam, peso_maximo))
        logger.debug("phi_puntual punto=%s t=%s ponderada=%s valor=%s cola=%s",
                     punto, t, ponderada, mpmath.nstr(resultado.valor, 12),
                     mpmath.nstr(resultado.cola, 3))
        return resultado

    # =========================================================================
    # OHNO-ZAGIER
    # =========================================================================

    @staticmethod
    def _con_limite(funcion: Callable[[PuntoR3], Any], punto: PuntoR3) -> ResultadoPuntual:
        """
        Aplica una forma cerrada con prefactor Z/(XY - Z).

        Si Z = 0 el valor es 0. Sobre XY = Z la singularidad es removible y
        se toma la media de los valores en Z ± h.
        """
        X, Y, Z = punto
        if Z == 0:
            return ResultadoPuntual(mpf(0))
        if abs(X * Y - Z) <= UMBRAL_SINGULAR:
            arriba = funcion(PuntoR3(X, Y, Z + PASO_LIMITE))
            abajo = funcion(PuntoR3(X, Y, Z - PASO_LIMITE))
            return ResultadoPuntual((arriba + abajo) / 2, notas=["limite_removible"])
        return ResultadoPuntual(funcion(punto))

    @staticmethod
    def _log_gamma(argumento: Any, nombre: str) -> Any:
        if isinstance(argumento, mpmath.mpc) or argumento <= 0:
            raise ErrorPrecondicion(
                f"Γ fuera de dominio: {nombre} = {mpmath.nstr(argumento, 8)}"
            )
        return mpmath.loggamma(argumento)

    @staticmethod
    def _raices_reales(raices: ParRaices, nombre: str) -> None:
        if not raices.son_reales:
            raise ErrorPrecondicion(
                f"Raíces {nombre} no reales: discriminante {mpmath.nstr(raices.discriminante, 8)}"
            )

    def _oz_gamma_directo(self, punto: PuntoR3) -> Any:
        X, Y, Z = punto
        raices = raices_oz(punto)
        self._raices_reales(raices, "α, β")
        cociente = mpmath.exp(
            self._log_gamma(1 - X, "1 - X") + self._log_gamma(1 - Y, "1 - Y")
            - self._log_gamma(1 - raices.alfa, "1 - α")
            - self._log_gamma(1 - raices.beta, "1 - β")
        )
        return Z / (X * Y - Z) * (1 - cociente)

    @con_precision
    def oz_gamma(self, punto: PuntoR3) -> ResultadoPuntual:
        """
        Z/(XY - Z)·(1 - Γ(1-X)Γ(1-Y)/(Γ(1-α)Γ(1-β))), α + β = X + Y, αβ = Z.

        Raises:
            ErrorPrecondicion: Discriminante negativo o argumento de Γ ≤ 0.
        """
        return self._con_limite(self._oz_gamma_directo, punto)

    def _oz_exp_directo(self, punto: PuntoR3) -> Any:
        X, Y, Z = punto
        e1, e2 = X + Y, Z
        p_anterior, p_actual = mpf(2), e1
        x_k, y_k = X, Y
        suma = mpf(0)
        for k in range(2, self.max_terminos):
            p_anterior, p_actual = p_actual, e1 * p_actual - e2 * p_anterior
            x_k *= X
            y_k *= Y
            termino = self.motor.zeta_holder((k,)).valor / k * (x_k + y_k - p_actual)
            suma += termino
            if k > 4 and abs(termino) < self.eps_hipergeometrica * mpf("1e-3"):
                break
        else:
            raise ErrorPrecondicion("La serie exponencial no converge en el punto")
        return Z / (X * Y - Z) * (1 - mpmath.exp(suma))

    @con_precision
    def oz_exp(self, punto: PuntoR3) -> ResultadoPuntual:
        """Z/(XY - Z)·(1 - exp(Σ_k ζ(k)/k·(X^k + Y^k - α^k - β^k))) sumada numéricamente."""
        return self._con_limite(self._oz_exp_directo, punto)

    # =========================================================================
    # ₃F₂
    # =========================================================================

    @con_precision
    def hipergeometrica(self, suma_ab: Any, producto_ab: Any, c: Any, d: Any
                        ) -> Tuple[Any, int, Any]:
        """
        ₃F₂(a, b, 1; c, d; 1) = Σ_n (a)_n(b)_n/((c)_n(d)_n).

        Solo intervienen a + b y ab, así que a y b pueden ser conjugadas.
        Tras el último término T_n se añade la cola asintótica
        T_n/(1 + c1/n)·(n/(p-1) - 1/2 + c1/p), p = c + d - a - b.

        Returns:
            (valor, términos sumados, cola).

        Raises:
            ErrorPrecondicion: Si p ≤ 1 o se supera el máximo de términos.
        """
        p = c + d - suma_ab
        if p <= 1:
            raise ErrorPrecondicion(
                f"₃F₂ divergente: c + d - a - b = {mpmath.nstr(p, 8)} ≤ 1"
            )
        cuadrados = suma_ab ** 2 - 2 * producto_ab - c ** 2 - d ** 2
        c1 = p / 2 + cuadrados / 2

        termino = mpf(1)
        total = mpf(0)
        n = 0
        while True:
            total += termino
            siguiente = termino * (n * n + n * suma_ab + producto_ab) / ((n + c) * (n + d))
            if n >= 10 and abs(termino) < self.eps_hipergeometrica:
                break
            n += 1
            termino = siguiente
            if n >= self.max_terminos:
                raise ErrorPrecondicion(
                    f"₃F₂ sin converger tras {self.max_terminos} términos"
                )
        cola = termino / (1 + c1 / n) * (n / (p - 1) - mpf(1) / 2 + c1 / p)
        return total + cola, n + 1, cola

    @con_precision
    def lq_3f2(self, t: Any, punto: PuntoR3, intercambiar: bool = False) -> ResultadoPuntual:
        """
        Z/((1 - Y)(1 - β_t))·₃F₂(1 + α_{t-1} - β_t, 1 + β_{t-1} - β_t, 1; 2 - Y, 2 - β_t; 1).

        Compara con Ψ^t = Σ_{k ∈ I} ζ^t(k)u_k (sin el peso (1 - 2t)^dep).

        Args:
            t: Parámetro de interpolación.
            punto: Punto de evaluación.
            intercambiar: Usa α_t en lugar de β_t.

        Raises:
            ErrorPrecondicion: β_t no real, 1 - Y = 0, 1 - β_t = 0 o divergencia.
        """
        X, Y, Z = punto
        t = a_mpf(t)
        if Z == 0:
            return ResultadoPuntual(mpf(0))
        raices_t = raices_alfa_beta(t, punto)
        self._raices_reales(raices_t, "α_t, β_t")
        if intercambiar:
            raices_t = raices_t.intercambiada()
        beta_t = raices_t.beta
        anteriores = raices_alfa_beta(t - 1, punto)

        if 1 - Y == 0:
            raise ErrorPrecondicion("1 - Y = 0 en el prefactor")
        if 1 - beta_t == 0:
            raise ErrorPrecondicion("1 - β_t = 0 en el prefactor")

        suma_ab = 2 + anteriores.suma - 2 * beta_t
        producto_ab = (1 - beta_t) ** 2 + (1 - beta_t) * anteriores.suma + anteriores.producto
        valor_f, terminos, cola = self.hipergeometrica(suma_ab, producto_ab, 2 - Y, 2 - beta_t)
        valor = Z / ((1 - Y) * (1 - beta_t)) * valor_f
        logger.debug("lq_3f2 t=%s punto=%s rama=%s terminos=%d",
                     mpmath.nstr(t, 6), punto, raices_t.rama, terminos)
        return ResultadoPuntual(valor, rama=raices_t.rama, terminos=terminos, cola=cola)

    # =========================================================================
    # DIFERENCIA ζ_S⋆ - ζ⋆
    # =========================================================================

    def _cor2_gamma_directo(self, punto: PuntoR3) -> Any:
        X, Y, Z = punto
        raices = raices_eta_xi(punto)
        self._raices_reales(raices, "η, ξ")
        cociente = mpmath.exp(
            self._log_gamma(1 + X, "1 + X") + self._log_gamma(1 - Y, "1 - Y")
            - self._log_gamma(1 - raices.alfa, "1 - η")
            - self._log_gamma(1 - raices.beta, "1 - ξ")
        )
        return Z / (X * Y - Z) * (cociente - 1)

    @con_precision
    def cor2_gamma(self, punto: PuntoR3) -> ResultadoPuntual:
        """Z/(XY - Z)·(Γ(1+X)Γ(1-Y)/(Γ(1-η)Γ(1-ξ)) - 1), η + ξ = -X + Y, ηξ = -Z."""
        return self._con_limite(self._cor2_gamma_directo, punto)

    @con_precision
    def cor2_cadena(self, punto: PuntoR3, peso_maximo: Optional[int] = None) -> ResultadoPuntual:
        """-Φ(-X, Y, -Z) por fuerza bruta."""
        X, Y, Z = punto
        resultado = self.phi_puntual(PuntoR3(-X, Y, -Z), 0, True, peso_maximo)
        resultado.valor = -resultado.valor
        resultado.cola = -resultado.cola
        return resultado
