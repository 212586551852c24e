"""Context-free grammars and their formal derivatives.

A grammar assigns each variable a substitution polynomial; the formal
derivative D is the derivation determined by v -> rule(v) extended by
linearity and the Leibniz rule.  Two families are provided for each
multiplicity k >= 1:

    xyz rules:  x -> x y z^(k-1),  y -> x y z^(k-1),  z -> x y z^(k-1)
    uvz rules:  u -> u v z^(k-1),  v -> 2 u z^(k-1),  z -> u z^(k-1)

Applying D_{k_1}, ..., D_{k_n} to the seed x builds the ascent/descent/
plateau polynomial of {1^k1, ..., n^kn}; the uvz chain applied to the
seed u z^(k_1 - 1) builds its gamma polynomial directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import DomainError, GammaExtractionError
from .multiset import Multiset
from .poly import UVZ, XYZ, Exponent, Poly3, is_symmetric


@dataclass(frozen=True)
class GrammarRuleSet:
    """Substitution rules v -> polynomial, all over one variable signature."""

    vars: tuple[str, str, str]
    rules: dict[str, Poly3]

    def rule(self, name: str) -> Poly3:
        return self.rules[name]


def xyz_rules(k: int) -> GrammarRuleSet:
    if k < 1:
        raise DomainError(f"multiplicity must be >= 1, got {k}")
    body = Poly3.monomial((1, 1, k - 1), 1, XYZ)
    return GrammarRuleSet(XYZ, {"x": body, "y": body, "z": body})


def uvz_rules(k: int) -> GrammarRuleSet:
    if k < 1:
        raise DomainError(f"multiplicity must be >= 1, got {k}")
    return GrammarRuleSet(UVZ, {
        "u": Poly3.monomial((1, 1, k - 1), 1, UVZ),
        "v": Poly3.monomial((1, 0, k - 1), 2, UVZ),
        "z": Poly3.monomial((1, 0, k - 1), 1, UVZ),
    })


def derive(p: Poly3, rules: GrammarRuleSet) -> Poly3:
    """Apply the formal derivative once: Leibniz across each monomial."""
    if p.vars != rules.vars:
        raise DomainError(
            f"polynomial is over {p.vars} but the rules are over {rules.vars}")
    rule_terms = [
        (idx, rules.rule(name).terms) for idx, name in enumerate(rules.vars)
    ]
    out: dict[Exponent, int] = {}
    for e, c in p.terms.items():
        for idx, rterms in rule_terms:
            mult = e[idx]
            if not mult:
                continue
            base = list(e)
            base[idx] -= 1
            for re, rc in rterms.items():
                key = (base[0] + re[0], base[1] + re[1], base[2] + re[2])
                s = out.get(key, 0) + c * mult * rc
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
    return Poly3(p.vars, out)


def c_polynomial_grammar(m: Multiset) -> Poly3:
    """Build the ascent/descent/plateau polynomial by the derivative chain."""
    p = Poly3.variable("x", XYZ)
    for k in m.mults:
        p = derive(p, xyz_rules(k))
    return p


def gamma_polynomial_grammar(m: Multiset) -> Poly3:
    """Build the gamma polynomial in (u, v, z) by the uvz derivative chain.

    The chain starts from the seed u z^(k_1 - 1), the image of the first
    value's block, and applies D_{k_2}, ..., D_{k_n}.
    """
    if m.n == 0:
        raise DomainError("the gamma polynomial is defined for nonempty multisets")
    p = Poly3.monomial((1, 0, m.mults[0] - 1), 1, UVZ)
    for k in m.mults[1:]:
        p = derive(p, uvz_rules(k))
    return p


def substitute_uv(p: Poly3) -> Poly3:
    """Expand a (u, v, z) polynomial through u -> xy, v -> x + y."""
    if p.vars != UVZ:
        raise DomainError(f"expected a polynomial over {UVZ}, got {p.vars}")
    x = Poly3.variable("x", XYZ)
    y = Poly3.variable("y", XYZ)
    xy = x * y
    xpy = x + y
    out = Poly3.zero(XYZ)
    for (a, b, i), c in p.terms.items():
        out = out + (xy ** a) * (xpy ** b) * Poly3.monomial((0, 0, i), c, XYZ)
    return out


def change_of_variables_check(p: Poly3, signed: bool = False) -> Poly3:
    """Rewrite p(x, y, z), symmetric in x and y, in the variables u = xy, v = x + y.

    Works z-slice by z-slice; each slice must be homogeneous in x, y (its
    own degree d, not tied to any global size).  In the default mode every
    peeled coefficient must be positive, mirroring gamma extraction; with
    ``signed=True`` arbitrary integer coefficients are allowed, e.g.
    x^2 + y^2 -> v^2 - 2u.  The result expands back to p via
    :func:`substitute_uv`.
    """
    if not is_symmetric(p, p.vars[:2]):
        raise GammaExtractionError(
            f"polynomial is not symmetric in {p.vars[0]}, {p.vars[1]}")
    out: dict[Exponent, int] = {}
    for i, slice_terms in sorted(p.z_slices().items()):
        degrees = {a + b for (a, b) in slice_terms}
        if len(degrees) > 1:
            raise GammaExtractionError(
                "z-slice is not homogeneous in the first two variables", i=i)
        if not degrees:
            continue
        d = degrees.pop()
        work = dict(slice_terms)
        while work:
            j = min(a for (a, _) in work)
            g = work[(j, d - j)]
            if not signed and g <= 0:
                raise GammaExtractionError(
                    "peeled coefficient is not positive", i=i, j=j, value=g)
            out[(j, d - 2 * j, i)] = g
            for t in range(d - 2 * j + 1):
                e = (j + t, d - j - t)
                s = work.get(e, 0) - g * comb(d - 2 * j, t)
                if s:
                    work[e] = s
                elif e in work:
                    del work[e]
    return Poly3(UVZ, out)
