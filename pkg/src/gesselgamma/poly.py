"""Exact sparse polynomials in three variables, and gamma tables.

Coefficients are Python ints (arbitrary precision); zero coefficients are
never stored.  A polynomial carries its variable signature, normally
``("x", "y", "z")`` or ``("u", "v", "z")``; mixing signatures in
arithmetic is an error.

A gamma table for total size K holds coefficients gamma_{i,j} of the
basis (xy)^j (x+y)^(K+1-i-2j) z^i.  ``gamma_extract`` peels a symmetric
polynomial against that basis slice by slice: within the z^i slice the
minimal x-exponent j can only come from the basis element with that j, so
its coefficient is forced, subtracted, and the slice shrinks.
"""

from __future__ import annotations

import json
from math import comb

from .errors import GammaExtractionError, ParseError
from .multiset import Multiset

XYZ = ("x", "y", "z")
UVZ = ("u", "v", "z")

Exponent = tuple[int, int, int]


class Poly3:
    """A polynomial in three named variables with integer coefficients."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, str, str] = XYZ, terms: dict[Exponent, int] | None = None):
        self.vars = tuple(vars)
        if len(self.vars) != 3:
            raise ParseError(f"expected exactly 3 variables, got {self.vars!r}")
        self.terms: dict[Exponent, int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[(e[0], e[1], e[2])] = c

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars: tuple[str, str, str] = XYZ) -> Poly3:
        return cls(vars)

    @classmethod
    def one(cls, vars: tuple[str, str, str] = XYZ) -> Poly3:
        return cls(vars, {(0, 0, 0): 1})

    @classmethod
    def monomial(cls, e: Exponent, c: int = 1, vars: tuple[str, str, str] = XYZ) -> Poly3:
        return cls(vars, {tuple(e): c})

    @classmethod
    def variable(cls, name: str, vars: tuple[str, str, str] = XYZ) -> Poly3:
        idx = vars.index(name)
        e = [0, 0, 0]
        e[idx] = 1
        return cls(vars, {tuple(e): 1})

    # -- arithmetic --------------------------------------------------------

    def _check_signature(self, other: Poly3) -> None:
        if self.vars != other.vars:
            raise ParseError(f"variable signatures differ: {self.vars} vs {other.vars}")

    def __add__(self, other: Poly3) -> Poly3:
        self._check_signature(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return Poly3(self.vars, out)

    def __neg__(self) -> Poly3:
        return Poly3(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Poly3) -> Poly3:
        return self + (-other)

    def __mul__(self, other: Poly3 | int) -> Poly3:
        if isinstance(other, int):
            return Poly3(self.vars, {e: c * other for e, c in self.terms.items()})
        self._check_signature(other)
        out: dict[Exponent, int] = {}
        for (a1, b1, c1), k1 in self.terms.items():
            for (a2, b2, c2), k2 in other.terms.items():
                e = (a1 + a2, b1 + b2, c1 + c2)
                s = out.get(e, 0) + k1 * k2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return Poly3(self.vars, out)

    def __rmul__(self, other: int) -> Poly3:
        return self * other

    def __pow__(self, exponent: int) -> Poly3:
        if exponent < 0:
            raise ParseError("negative powers are not defined")
        result = Poly3.one(self.vars)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly3):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    __hash__ = None  # mutable dict inside; equality is structural

    def is_zero(self) -> bool:
        return not self.terms

    # -- structure ---------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self.terms.items())

    def coefficient(self, e: Exponent) -> int:
        return self.terms.get(tuple(e), 0)

    def z_slices(self) -> dict[int, dict[tuple[int, int], int]]:
        """Group terms by the exponent of the third variable."""
        slices: dict[int, dict[tuple[int, int], int]] = {}
        for (a, b, i), c in self.terms.items():
            slices.setdefault(i, {})[(a, b)] = c
        return slices

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b, c), k in self.sorted_terms():
            factors = [
                f"{v}^{e}" if e > 1 else v
                for v, e in zip(self.vars, (a, b, c))
                if e
            ]
            body = "*".join(factors) if factors else "1"
            if k == 1 and factors:
                parts.append(body)
            elif k == -1 and factors:
                parts.append(f"-{body}")
            else:
                parts.append(f"{k}*{body}" if factors else str(k))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Poly3({self.vars!r}, {self.terms!r})"

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [
                {"e": list(e), "c": str(c)} for e, c in self.sorted_terms()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> Poly3:
        try:
            vars = tuple(data["vars"])
            terms = {tuple(t["e"]): int(t["c"]) for t in data["terms"]}
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad polynomial JSON: {exc}") from None
        return cls(vars, terms)

    @classmethod
    def from_json(cls, text: str) -> Poly3:
        return cls.from_json_dict(json.loads(text))

    def to_csv(self) -> str:
        header = ",".join(self.vars) + ",coeff"
        rows = [f"{a},{b},{c},{k}" for (a, b, c), k in self.sorted_terms()]
        return "\n".join([header, *rows]) + "\n"


def is_symmetric(p: Poly3, names) -> bool:
    """True when p is invariant under every permutation of the named variables."""
    names = tuple(names)
    try:
        idxs = [p.vars.index(v) for v in names]
    except ValueError as exc:
        raise ParseError(f"{exc}; polynomial variables are {p.vars}") from None
    if len(set(idxs)) != len(idxs):
        raise ParseError(f"repeated variable in {names!r}")

    def swapped(e: Exponent, i: int, j: int) -> Exponent:
        lst = list(e)
        lst[i], lst[j] = lst[j], lst[i]
        return tuple(lst)

    # invariance under adjacent transpositions generates the full group
    for a, b in zip(idxs, idxs[1:]):
        for e, c in p.terms.items():
            if p.terms.get(swapped(e, a, b), 0) != c:
                return False
    return True


class GammaTable:
    """Sparse table of gamma coefficients keyed by (i, j) for a fixed K."""

    __slots__ = ("K", "entries", "multiset")

    def __init__(self, K: int, entries: dict[tuple[int, int], int], multiset: Multiset | None = None):
        self.K = K
        self.entries = {(i, j): g for (i, j), g in entries.items() if g}
        self.multiset = multiset

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GammaTable):
            return NotImplemented
        return self.K == other.K and self.entries == other.entries

    __hash__ = None

    def sorted_entries(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self.entries.items())

    def support_violations(self, n: int) -> list[tuple[int, int]]:
        """Keys outside 0 <= i <= K-n, 1 <= j <= floor((K+1-i)/2)."""
        bad = []
        for (i, j) in self.entries:
            if not (0 <= i <= self.K - n and 1 <= j <= (self.K + 1 - i) // 2):
                bad.append((i, j))
        return sorted(bad)

    def __repr__(self) -> str:
        return f"GammaTable(K={self.K}, entries={dict(self.sorted_entries())!r})"

    def to_json_dict(self) -> dict:
        return {
            "K": self.K,
            "entries": [
                {"i": i, "j": j, "g": g} for (i, j), g in self.sorted_entries()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> GammaTable:
        try:
            K = int(data["K"])
            entries = {(int(e["i"]), int(e["j"])): int(e["g"]) for e in data["entries"]}
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad gamma table JSON: {exc}") from None
        return cls(K, entries)

    @classmethod
    def from_json(cls, text: str) -> GammaTable:
        return cls.from_json_dict(json.loads(text))

    def to_csv(self) -> str:
        rows = [f"{i},{j},{g}" for (i, j), g in self.sorted_entries()]
        return "\n".join(["i,j,g", *rows]) + "\n"


def gamma_extract(p: Poly3, K: int) -> GammaTable:
    """Peel p against the basis (xy)^j (x+y)^(K+1-i-2j) z^i.

    Requires p symmetric in its first two variables with every z-slice
    homogeneous of degree K+1-i.  Raises GammaExtractionError when the
    shape is wrong or a peeled coefficient fails to be positive, citing
    the slice i, the index j and the offending value.
    """
    sym_pair = p.vars[:2]
    if not is_symmetric(p, sym_pair):
        for (a, b, i), c in sorted(p.terms.items()):
            if p.terms.get((b, a, i), 0) != c:
                raise GammaExtractionError(
                    f"polynomial is not symmetric in {sym_pair[0]}, {sym_pair[1]}",
                    i=i, value=(a, b))
    entries: dict[tuple[int, int], int] = {}
    for i, slice_terms in sorted(p.z_slices().items()):
        d = K + 1 - i
        for (a, b), c in sorted(slice_terms.items()):
            if a + b != d:
                raise GammaExtractionError(
                    f"z-slice is not homogeneous of degree K+1-i={d}: "
                    f"term has x,y-degree {a + b}", i=i, value=c)
        work = dict(slice_terms)
        while work:
            j = min(a for (a, _) in work)
            g = work[(j, d - j)]
            if 2 * j > d:
                raise GammaExtractionError(
                    "residue remains beyond j_max=floor((K+1-i)/2)", i=i, j=j, value=g)
            if g <= 0:
                raise GammaExtractionError(
                    "peeled gamma coefficient is not positive", i=i, j=j, value=g)
            entries[(i, j)] = g
            for t in range(d - 2 * j + 1):
                e = (j + t, d - j - t)
                s = work.get(e, 0) - g * comb(d - 2 * j, t)
                if s:
                    work[e] = s
                elif e in work:
                    del work[e]
    return GammaTable(K, entries)


def gamma_reconstruct(table: GammaTable, vars: tuple[str, str, str] = XYZ) -> Poly3:
    """Sum of gamma_{i,j} (xy)^j (x+y)^(K+1-i-2j) z^i."""
    x = Poly3.variable(vars[0], vars)
    y = Poly3.variable(vars[1], vars)
    xy = x * y
    xpy = x + y
    out = Poly3.zero(vars)
    for (i, j), g in table.sorted_entries():
        e = table.K + 1 - i - 2 * j
        if e < 0:
            raise GammaExtractionError(
                "table entry outside the basis range", i=i, j=j, value=g)
        out = out + (xy ** j) * (xpy ** e) * Poly3.monomial((0, 0, i), g, vars)
    return out


def gamma_table_to_uvz(table: GammaTable) -> Poly3:
    """The same data as a polynomial: sum of gamma_{i,j} u^j v^(K+1-i-2j) z^i."""
    terms: dict[Exponent, int] = {}
    for (i, j), g in table.entries.items():
        e = table.K + 1 - i - 2 * j
        if e < 0:
            raise GammaExtractionError(
                "table entry outside the basis range", i=i, j=j, value=g)
        terms[(j, e, i)] = terms.get((j, e, i), 0) + g
    return Poly3(UVZ, terms)


def gamma_table_from_uvz(p: Poly3, K: int) -> GammaTable:
    """Invert :func:`gamma_table_to_uvz`, validating exponent shape and positivity."""
    entries: dict[tuple[int, int], int] = {}
    for (j, e, i), g in p.terms.items():
        if e != K + 1 - i - 2 * j:
            raise GammaExtractionError(
                f"term u^{j} v^{e} z^{i} does not match v-degree K+1-i-2j", i=i, j=j, value=g)
        if g <= 0:
            raise GammaExtractionError(
                "gamma coefficient is not positive", i=i, j=j, value=g)
        entries[(i, j)] = g
    return GammaTable(K, entries)
