"""
Series de potencias truncadas en X, Y, Z.

Una SerieTruncada guarda los coeficientes de X^i·Y^j·Z^k con
i + j + k ≤ N (truncación por grado total). Los coeficientes pertenecen a
un anillo genérico: Fraction, mpf o PolinomioT. Solo se exigen suma,
producto, producto por entero y división por entero.

OPERACIONES:
- aritmética truncada (suma, producto de Cauchy, escalar)
- exp / log por la recursión graduada d·g_d = Σ_{m=1}^{d} m·f_m·g_{d-m}
- reescalado de peso (X, Y, Z) → (λX, λY, λ²Z)
- sustitución de signos (X, Y, Z) → (±X, ±Y, ±Z)
- sumas de potencias de Newton a partir de e1, e2
"""

from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from algebra.polinomios import dividir, es_cero, norma

Monomio = Tuple[int, int, int]

VARIABLES = {"X": (1, 0, 0), "Y": (0, 1, 0), "Z": (0, 0, 1)}


class ErrorOrdenSerie(ValueError):
    """Operación entre series de distinto orden de truncación."""


class ErrorTerminoConstante(ValueError):
    """exp requiere término constante nulo y log término constante 1."""


def _sumar(a: Any, b: Any) -> Any:
    return b if a is None else a + b


class SerieTruncada:
    """
    Serie en X, Y, Z truncada en grado total N.

    Uso:
        N = 3
        X = SerieTruncada.variable(N, "X")
        f = (1 + X) * (1 - X)      # 1 - X²
    """

    __slots__ = ("orden", "_coefs")

    def __init__(self, orden: int, coefs: Optional[Dict[Monomio, Any]] = None):
        if orden < 0:
            raise ValueError(f"El orden de truncación debe ser ≥ 0, recibido {orden}")
        self.orden = orden
        limpio: Dict[Monomio, Any] = {}
        for monomio, c in (coefs or {}).items():
            i, j, k = monomio
            if min(i, j, k) < 0:
                raise ValueError(f"Monomio con exponente negativo: {monomio}")
            if i + j + k <= orden and not es_cero(c):
                limpio[(i, j, k)] = c
        self._coefs = limpio

    # -------------------------------------------------------------------------
    # Construcción
    # -------------------------------------------------------------------------

    @classmethod
    def cero(cls, orden: int) -> "SerieTruncada":
        return cls(orden)

    @classmethod
    def constante(cls, orden: int, valor: Any = 1) -> "SerieTruncada":
        return cls(orden, {(0, 0, 0): valor})

    @classmethod
    def monomio(cls, orden: int, exponentes: Monomio, valor: Any = 1) -> "SerieTruncada":
        return cls(orden, {tuple(exponentes): valor})

    @classmethod
    def variable(cls, orden: int, nombre: str, valor: Any = 1) -> "SerieTruncada":
        if nombre not in VARIABLES:
            raise ValueError(f"Variable desconocida '{nombre}'. Válidas: X, Y, Z")
        return cls(orden, {VARIABLES[nombre]: valor})

    # -------------------------------------------------------------------------
    # Consulta
    # -------------------------------------------------------------------------

    def coeficiente(self, monomio: Monomio) -> Any:
        return self._coefs.get(tuple(monomio), 0)

    def terminos(self) -> List[Tuple[Monomio, Any]]:
        """Términos no nulos ordenados por grado y exponentes."""
        return sorted(self._coefs.items(), key=lambda par: (sum(par[0]), par[0]))

    def monomios(self) -> List[Monomio]:
        return [m for m, _ in self.terminos()]

    @property
    def termino_constante(self) -> Any:
        return self.coeficiente((0, 0, 0))

    def es_cero(self) -> bool:
        return not self._coefs

    def componentes_homogeneas(self) -> List[Dict[Monomio, Any]]:
        """Lista indexada por grado d de los términos de grado d."""
        componentes: List[Dict[Monomio, Any]] = [{} for _ in range(self.orden + 1)]
        for monomio, c in self._coefs.items():
            componentes[sum(monomio)][monomio] = c
        return componentes

    def __len__(self) -> int:
        return len(self._coefs)

    # -------------------------------------------------------------------------
    # Aritmética
    # -------------------------------------------------------------------------

    def _comprobar_orden(self, otra: "SerieTruncada") -> None:
        if otra.orden != self.orden:
            raise ErrorOrdenSerie(
                f"Órdenes de truncación distintos: {self.orden} y {otra.orden}"
            )

    def _como_serie(self, otro: Any) -> "SerieTruncada":
        if isinstance(otro, SerieTruncada):
            self._comprobar_orden(otro)
            return otro
        return SerieTruncada.constante(self.orden, otro)

    def __add__(self, otro: Any) -> "SerieTruncada":
        otra = self._como_serie(otro)
        suma = dict(self._coefs)
        for monomio, c in otra._coefs.items():
            suma[monomio] = _sumar(suma.get(monomio), c)
        return SerieTruncada(self.orden, suma)

    def __radd__(self, otro: Any) -> "SerieTruncada":
        return self + otro

    def __neg__(self) -> "SerieTruncada":
        return SerieTruncada(self.orden, {m: -c for m, c in self._coefs.items()})

    def __sub__(self, otro: Any) -> "SerieTruncada":
        return self + (-self._como_serie(otro))

    def __rsub__(self, otro: Any) -> "SerieTruncada":
        return (-self) + otro

    def escalar(self, factor: Any) -> "SerieTruncada":
        return SerieTruncada(self.orden, {m: c * factor for m, c in self._coefs.items()})

    def __mul__(self, otro: Any) -> "SerieTruncada":
        if not isinstance(otro, SerieTruncada):
            return self.escalar(otro)
        self._comprobar_orden(otro)
        N = self.orden
        derecha = sorted(otro._coefs.items(), key=lambda par: sum(par[0]))
        producto: Dict[Monomio, Any] = {}
        for (i, j, k), a in self._coefs.items():
            resto = N - (i + j + k)
            for (p, q, r), b in derecha:
                if p + q + r > resto:
                    break
                clave = (i + p, j + q, k + r)
                producto[clave] = _sumar(producto.get(clave), a * b)
        return SerieTruncada(N, producto)

    def __rmul__(self, otro: Any) -> "SerieTruncada":
        return SerieTruncada(self.orden, {m: otro * c for m, c in self._coefs.items()})

    def __truediv__(self, divisor: int) -> "SerieTruncada":
        if not isinstance(divisor, int) or divisor == 0:
            raise ValueError(f"Solo se divide por enteros no nulos, recibido {divisor}")
        return SerieTruncada(self.orden, {m: dividir(c, divisor) for m, c in self._coefs.items()})

    def __pow__(self, exponente: int) -> "SerieTruncada":
        if exponente < 0:
            raise ValueError(f"Exponente negativo: {exponente}")
        resultado = SerieTruncada.constante(self.orden, 1)
        for _ in range(exponente):
            resultado = resultado * self
        return resultado

    def mapear(self, funcion: Callable[[Monomio, Any], Any]) -> "SerieTruncada":
        """Aplica funcion(monomio, coeficiente) a cada término."""
        return SerieTruncada(self.orden, {m: funcion(m, c) for m, c in self._coefs.items()})

    # -------------------------------------------------------------------------
    # exp / log
    # -------------------------------------------------------------------------

    def exp(self) -> "SerieTruncada":
        """
        Exponencial truncada.

        Raises:
            ErrorTerminoConstante: Si el término constante no es nulo.
        """
        if not es_cero(self.termino_constante):
            raise ErrorTerminoConstante(
                f"exp requiere término constante nulo, encontrado {self.termino_constante}"
            )
        N = self.orden
        f = self.componentes_homogeneas()
        g: List[Dict[Monomio, Any]] = [{(0, 0, 0): 1}] + [{} for _ in range(N)]
        for d in range(1, N + 1):
            acumulado: Dict[Monomio, Any] = {}
            for m in range(1, d + 1):
                if f[m] and g[d - m]:
                    _acumular_producto(acumulado, f[m], g[d - m], m)
            g[d] = {mon: dividir(c, d) for mon, c in acumulado.items()}
        return SerieTruncada(N, {mon: c for comp in g for mon, c in comp.items()})

    def log(self) -> "SerieTruncada":
        """
        Logaritmo truncado.

        Raises:
            ErrorTerminoConstante: Si el término constante no es 1.
        """
        if self.termino_constante != 1:
            raise ErrorTerminoConstante(
                f"log requiere término constante 1, encontrado {self.termino_constante}"
            )
        N = self.orden
        g = self.componentes_homogeneas()
        f: List[Dict[Monomio, Any]] = [{} for _ in range(N + 1)]
        for d in range(1, N + 1):
            acumulado: Dict[Monomio, Any] = {}
            for m in range(1, d):
                if f[m] and g[d - m]:
                    _acumular_producto(acumulado, f[m], g[d - m], m)
            componente = dict(g[d])
            for mon, c in acumulado.items():
                componente[mon] = _sumar(componente.get(mon), -dividir(c, d))
            f[d] = componente
        return SerieTruncada(N, {mon: c for comp in f for mon, c in comp.items()})

    # -------------------------------------------------------------------------
    # Sustituciones
    # -------------------------------------------------------------------------

    def reescalar_peso(self, factor: Any) -> "SerieTruncada":
        """(X, Y, Z) → (λX, λY, λ²Z): el coeficiente de X^iY^jZ^k se multiplica por λ^(i+j+2k)."""
        potencias: Dict[int, Any] = {}

        def escalar(monomio: Monomio, c: Any) -> Any:
            peso = monomio[0] + monomio[1] + 2 * monomio[2]
            if peso not in potencias:
                potencias[peso] = factor ** peso
            return c * potencias[peso]

        return self.mapear(escalar)

    def sustituir_signos(self, signo_x: int, signo_y: int, signo_z: int) -> "SerieTruncada":
        """(X, Y, Z) → (sX·X, sY·Y, sZ·Z) con signos ±1."""
        for signo in (signo_x, signo_y, signo_z):
            if signo not in (1, -1):
                raise ValueError(f"Los signos deben ser ±1, recibido {signo}")

        def escalar(monomio: Monomio, c: Any) -> Any:
            i, j, k = monomio
            signo = (signo_x ** i) * (signo_y ** j) * (signo_z ** k)
            return c if signo == 1 else -c

        return self.mapear(escalar)

    # -------------------------------------------------------------------------
    # Comparación
    # -------------------------------------------------------------------------

    def desviaciones(self, otra: "SerieTruncada",
                     relativa: bool = True) -> List[Tuple[Monomio, Any]]:
        """
        Desviación por monomio entre dos series del mismo orden.

        Con relativa=True cada diferencia se divide por max(1, |a|, |b|).
        """
        self._comprobar_orden(otra)
        monomios = sorted(set(self._coefs) | set(otra._coefs), key=lambda m: (sum(m), m))
        resultado = []
        for monomio in monomios:
            a = self.coeficiente(monomio)
            b = otra.coeficiente(monomio)
            desviacion = norma(a - b)
            if relativa:
                desviacion = desviacion / max(1, norma(a), norma(b))
            resultado.append((monomio, desviacion))
        return resultado

    def diferencia_maxima(self, otra: "SerieTruncada", relativa: bool = True) -> Any:
        desviaciones = self.desviaciones(otra, relativa)
        if not desviaciones:
            return 0
        return max(d for _, d in desviaciones)

    def __eq__(self, otra: object) -> bool:
        if not isinstance(otra, SerieTruncada):
            return NotImplemented
        return self.orden == otra.orden and self._coefs == otra._coefs

    __hash__ = None

    def __repr__(self) -> str:
        return f"SerieTruncada(orden={self.orden}, términos={len(self._coefs)})"

    def __str__(self) -> str:
        if not self._coefs:
            return "0"
        partes = []
        for (i, j, k), c in self.terminos():
            factores = [f"{v}^{e}" if e > 1 else v
                        for v, e in (("X", i), ("Y", j), ("Z", k)) if e]
            partes.append(f"({c})" + ("·" + "·".join(factores) if factores else ""))
        return " + ".join(partes)


def _acumular_producto(destino: Dict[Monomio, Any],
                       a: Dict[Monomio, Any],
                       b: Dict[Monomio, Any],
                       factor: int) -> None:
    """destino += factor·a·b para componentes homogéneas."""
    for (i, j, k), ca in a.items():
        termino = ca * factor
        for (p, q, r), cb in b.items():
            clave = (i + p, j + q, k + r)
            destino[clave] = _sumar(destino.get(clave), termino * cb)


def sumas_potencias_newton(e1: Any, e2: Any, K: int) -> List[Any]:
    """
    Sumas de potencias p_1..p_K de dos raíces con α+β = e1 y αβ = e2.

    p_1 = e1, p_2 = e1² - 2e2, p_k = e1·p_{k-1} - e2·p_{k-2}.
    Funciona con series o con escalares.

    Raises:
        ValueError: Si K < 1.
    """
    if K < 1:
        raise ValueError(f"K debe ser ≥ 1, recibido {K}")
    potencias = [e1]
    if K >= 2:
        potencias.append(e1 * e1 - e2 * 2)
    for _ in range(3, K + 1):
        potencias.append(e1 * potencias[-1] - e2 * potencias[-2])
    return potencias


def suma_series(series: Iterable[SerieTruncada], orden: int) -> SerieTruncada:
    total = SerieTruncada.cero(orden)
    for serie in series:
        total = total + serie
    return total
