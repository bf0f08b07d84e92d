"""Exact truncated graded-ring models of the ambient Chow rings.

A ring is presented by degree-one generators with one reduction rule per
generator: a hyperplane class truncates (``h^(d+1) = 0``) while the extra
generator of a projective bundle reduces through its defining relation.
Products are normalized eagerly, so every class is a coefficient map on
normal-form monomials and equality is coefficient equality.  Coefficients
are exact rationals throughout; floating point never appears.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb
from typing import Iterator

_SCALARS = (int, Fraction)

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an integer or Fraction, got {value!r}")


class ChowClass:
    """A ring element: exact rational coefficients on normal-form monomials."""

    __slots__ = ("ambient", "terms")

    def __init__(self, ambient: "AmbientSpace", terms: dict[tuple[int, ...], Fraction]):
        self.ambient = ambient
        self.terms = {e: c for e, c in terms.items() if c}

    def _coerce(self, other) -> "ChowClass | None":
        if isinstance(other, ChowClass):
            if other.ambient is not self.ambient:
                raise ValueError("classes live on different ambient spaces")
            return other
        if isinstance(other, _SCALARS):
            return self.ambient.scalar(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, _ZERO) + c
        return ChowClass(self.ambient, terms)

    __radd__ = __add__

    def __neg__(self):
        return ChowClass(self.ambient, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            q = _as_fraction(other)
            return ChowClass(self.ambient, {e: c * q for e, c in self.terms.items()})
        if not isinstance(other, ChowClass):
            return NotImplemented
        other = self._coerce(other)
        normal = self.ambient._normal_form
        out: dict[tuple[int, ...], Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                coeff = ca * cb
                raw = tuple(x + y for x, y in zip(ea, eb))
                for en, k in normal(raw).items():
                    out[en] = out.get(en, _ZERO) + coeff * k
        return ChowClass(self.ambient, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = self.ambient.one()
        for _ in range(exponent):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except ValueError:
            return False
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def part(self, degree: int) -> "ChowClass":
        """Homogeneous component of the given degree."""
        return ChowClass(
            self.ambient, {e: c for e, c in self.terms.items() if sum(e) == degree}
        )

    def is_homogeneous(self, degree: int | None = None) -> bool:
        """True when every monomial has the same degree (``degree`` if given)."""
        degrees = {sum(e) for e in self.terms}
        if not degrees:
            return True
        if degree is None:
            return len(degrees) == 1
        return degrees == {degree}

    def constant(self) -> Fraction:
        """Degree-zero coefficient."""
        return self.terms.get(self.ambient._zero_exp, _ZERO)

    def inverse(self) -> "ChowClass":
        """Multiplicative inverse in the truncated ring.

        Requires a nonzero constant term; computed degree by degree.
        """
        c0 = self.constant()
        if c0 == 0:
            raise ValueError("class with zero constant term is not invertible")
        space = self.ambient
        parts = [self.part(k) for k in range(space.dim + 1)]
        inv = [space.scalar(1 / c0)]
        for k in range(1, space.dim + 1):
            acc = space.zero()
            for i in range(1, k + 1):
                acc = acc + parts[i] * inv[k - i]
            inv.append(acc * (-1 / c0))
        total = space.zero()
        for piece in inv:
            total = total + piece
        return total

    def integral(self) -> Fraction:
        return self.ambient.integrate(self)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e)):
            c = self.terms[e]
            mono = self.ambient._monomial_str(e)
            if mono == "1":
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append(f"-{mono}")
            else:
                bits.append(f"{c}*{mono}")
        return " + ".join(bits).replace("+ -", "- ")


class AmbientSpace:
    """A Chow-ring model: generators, reduction rules, dimension, tangent class.

    ``kind`` is one of ``projective_space``, ``product``, ``proj_bundle``.
    Instances are immutable once built by the module constructors and may be
    shared freely across threads.
    """

    def __init__(
        self,
        kind: str,
        dim: int,
        gens: tuple[str, ...],
        caps: tuple[int, ...],
        base: "AmbientSpace | None" = None,
        fiber_rank: int | None = None,
        factor_dims: tuple[int, ...] | None = None,
    ):
        self.kind = kind
        self.dim = dim
        self.gens = gens
        self.caps = caps
        self.base = base
        self.fiber_rank = fiber_rank
        self.factor_dims = factor_dims
        self.tangent_chern: ChowClass | None = None
        self._zero_exp = (0,) * len(gens)
        self._subs: dict[int, dict[tuple[int, ...], Fraction]] = {}
        self._norm_cache: dict[tuple[int, ...], dict[tuple[int, ...], Fraction]] = {}

    # -- normal form -------------------------------------------------------

    def _normal_form(self, exp: tuple[int, ...]) -> dict[tuple[int, ...], Fraction]:
        cached = self._norm_cache.get(exp)
        if cached is not None:
            return cached
        result = None
        for i, cap in enumerate(self.caps):
            if exp[i] > cap:
                sub = self._subs.get(i)
                if sub is None:
                    result = {}
                else:
                    lowered = list(exp)
                    lowered[i] -= cap + 1
                    acc: dict[tuple[int, ...], Fraction] = {}
                    for se, sc in sub.items():
                        raw = tuple(a + b for a, b in zip(lowered, se))
                        for ne, nc in self._normal_form(raw).items():
                            acc[ne] = acc.get(ne, _ZERO) + sc * nc
                    result = {e: c for e, c in acc.items() if c}
                break
        if result is None:
            result = {exp: _ONE}
        self._norm_cache[exp] = result
        return result

    # -- element constructors ------------------------------------------------

    def zero(self) -> ChowClass:
        return ChowClass(self, {})

    def scalar(self, q) -> ChowClass:
        q = _as_fraction(q)
        return ChowClass(self, {self._zero_exp: q} if q else {})

    def one(self) -> ChowClass:
        return self.scalar(1)

    def generator(self, i: int) -> ChowClass:
        """The i-th degree-one generator, already reduced to normal form."""
        i = range(len(self.gens))[i]
        exp = tuple(1 if j == i else 0 for j in range(len(self.gens)))
        return ChowClass(self, dict(self._normal_form(exp)))

    def generators(self) -> tuple[ChowClass, ...]:
        return tuple(self.generator(i) for i in range(len(self.gens)))

    def degree_one(self, coeffs) -> ChowClass:
        """Integer/rational combination of the generators."""
        coeffs = list(coeffs)
        if len(coeffs) != len(self.gens):
            raise ValueError(
                f"expected {len(self.gens)} coefficients, got {len(coeffs)}"
            )
        out = self.zero()
        for c, g in zip(coeffs, self.generators()):
            out = out + g * c
        return out

    def monomials_of_degree(self, degree: int) -> Iterator[tuple[int, ...]]:
        """Exponent tuples of the normal-form monomial basis in one degree."""
        for exp in itertools.product(*(range(cap + 1) for cap in self.caps)):
            if sum(exp) == degree:
                yield exp

    def monomial_basis(self, degree: int) -> list[ChowClass]:
        return [ChowClass(self, {e: _ONE}) for e in self.monomials_of_degree(degree)]

    # -- functionals ---------------------------------------------------------

    def integrate(self, x: ChowClass) -> Fraction:
        """Coefficient of the fundamental top-degree monomial."""
        if x.ambient is not self:
            raise ValueError("class does not live on this space")
        return x.terms.get(self.caps, _ZERO)

    def pullback(self, x: ChowClass) -> ChowClass:
        """Pull a class on the base up to this projective bundle."""
        if self.base is None:
            raise ValueError("pullback is defined on projective bundles only")
        if x.ambient is not self.base:
            raise ValueError("class does not live on the base of this bundle")
        return ChowClass(self, {e + (0,): c for e, c in x.terms.items()})

    def pushforward(self, x: ChowClass) -> ChowClass:
        """Push a class down the bundle map; kills fiber powers below r - 1.

        In normal form the fiber exponent never exceeds r - 1, so only the
        terms carrying exactly that power survive, with the power stripped.
        """
        if self.base is None or self.fiber_rank is None:
            raise ValueError("pushforward is defined on projective bundles only")
        if x.ambient is not self:
            raise ValueError("class does not live on this space")
        top = self.fiber_rank - 1
        return ChowClass(
            self.base, {e[:-1]: c for e, c in x.terms.items() if e[-1] == top}
        )

    def fiber_class(self) -> ChowClass:
        """First Chern class of the tautological quotient line bundle."""
        if self.base is None:
            raise ValueError("fiber_class is defined on projective bundles only")
        return self.generator(len(self.gens) - 1)

    # -- misc ----------------------------------------------------------------

    def _monomial_str(self, exp: tuple[int, ...]) -> str:
        bits = []
        for name, e in zip(self.gens, exp):
            if e == 1:
                bits.append(name)
            elif e > 1:
                bits.append(f"{name}^{e}")
        return "*".join(bits) if bits else "1"

    def __repr__(self):
        if self.kind == "projective_space":
            return f"P^{self.dim}"
        if self.kind == "product":
            return " x ".join(f"P^{d}" for d in self.factor_dims)
        return f"P(rank-{self.fiber_rank} bundle) over {self.base!r}"


# -- space constructors --------------------------------------------------


def projective_space(d: int) -> AmbientSpace:
    """Projective d-space: one hyperplane class h with h^(d+1) = 0."""
    if d < 0:
        raise ValueError("dimension must be nonnegative")
    space = AmbientSpace(
        "projective_space", d, ("h",), (d,), factor_dims=(d,)
    )
    h = space.generator(0)
    space.tangent_chern = (space.one() + h) ** (d + 1)
    return space


def product_of_projective_spaces(dims) -> AmbientSpace:
    """Product of projective spaces: one truncating hyperplane class per factor."""
    dims = tuple(int(d) for d in dims)
    if not dims:
        raise ValueError("at least one factor is required")
    if any(d < 0 for d in dims):
        raise ValueError("dimensions must be nonnegative")
    if len(dims) == 1:
        return projective_space(dims[0])
    gens = tuple(f"h{i + 1}" for i in range(len(dims)))
    space = AmbientSpace(
        "product", sum(dims), gens, dims, factor_dims=dims
    )
    tangent = space.one()
    for i, d in enumerate(dims):
        tangent = tangent * (space.one() + space.generator(i)) ** (d + 1)
    space.tangent_chern = tangent
    return space


def proj_bundle(base: AmbientSpace, fiber) -> AmbientSpace:
    """Bundle of rank-one quotients of ``fiber``, a bundle on ``base``.

    Adjoins a generator ``xi`` (the first Chern class of the tautological
    quotient line bundle) with the relation ``sum_i c_i(fiber dual) *
    xi^(r - i) = 0``.  With this convention the rank-one case collapses to
    the base with ``xi = c1(fiber)``, and pushing forward ``xi^(r-1+m)``
    yields the m-th coefficient of ``1 / c(fiber dual)``.
    """
    rank = fiber.rank
    if rank < 1:
        raise ValueError("fiber bundle must have positive rank")
    if fiber.ambient is not base:
        raise ValueError("fiber bundle does not live on the given base")
    space = AmbientSpace(
        "proj_bundle",
        base.dim + rank - 1,
        base.gens + ("xi",),
        base.caps + (rank - 1,),
        base=base,
        fiber_rank=rank,
    )
    dual_chern = dual_total_chern(fiber.total_chern())
    relation: dict[tuple[int, ...], Fraction] = {}
    for i in range(1, rank + 1):
        for e, c in dual_chern.part(i).terms.items():
            relation[e + (rank - i,)] = relation.get(e + (rank - i,), _ZERO) - c
    space._subs[len(space.gens) - 1] = {e: c for e, c in relation.items() if c}
    xi = space.fiber_class()
    relative = twisted_total_chern(rank, space.pullback(dual_chern), xi)
    space.tangent_chern = space.pullback(base.tangent_chern) * relative
    return space


# -- class-level bundle algebra -------------------------------------------


def dual_total_chern(total: ChowClass) -> ChowClass:
    """Total Chern class of the dual: flip the sign of every odd degree."""
    out = total.ambient.zero()
    for k in range(total.ambient.dim + 1):
        piece = total.part(k)
        out = out + (piece if k % 2 == 0 else -piece)
    return out


def twisted_total_chern(rank: int, total: ChowClass, ell: ChowClass) -> ChowClass:
    """Total Chern class of V tensor L from rank(V), c(V) and c1(L)."""
    space = total.ambient
    ell_pows = [space.one()]
    for _ in range(space.dim):
        ell_pows.append(ell_pows[-1] * ell)
    out = space.zero()
    for k in range(space.dim + 1):
        for i in range(min(k, rank) + 1):
            m = comb(rank - i, k - i)
            if m:
                out = out + m * (total.part(i) * ell_pows[k - i])
    return out
