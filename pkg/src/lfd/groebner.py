"""Ideals, Buchberger's algorithm, and radical membership over Q.

The engine is deliberately plain: normal-strategy pair selection (smallest
lcm degree first, ties by the monomial order), the product and chain
criteria for pruning, full reduction of S-polynomials, and a final
minimalisation + interreduction so every returned basis is reduced (monic
elements, no term of one divisible by the leading term of another).

Radical membership uses the Rabinowitsch trick: f vanishes on V(I) over
the algebraic closure iff 1 lies in the ideal generated by I and 1 - t*f
in one more variable.  Ideal membership is tried first as a cheap
sufficient condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .mpoly import DEGREVLEX, Exponent, MonomialOrder, MPoly, Ring


class BudgetExceededError(RuntimeError):
    """A Groebner computation outgrew its configured budget."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


@dataclass(frozen=True)
class GroebnerBudget:
    """Hard caps keeping desk-scale computations from hanging."""

    max_elements: int = 5000
    max_degree: int = 20


@dataclass(frozen=True)
class Ideal:
    """Finitely generated ideal; zero generators are dropped on entry."""

    ring: Ring
    generators: tuple[MPoly, ...]

    def __init__(self, ring: Ring, generators):
        gens = tuple(g for g in generators if not g.is_zero())
        for g in gens:
            if g.ring != tuple(ring):
                raise ValueError("ideal generators must live in the stated ring")
        object.__setattr__(self, "ring", tuple(ring))
        object.__setattr__(self, "generators", gens)


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    elements: tuple[MPoly, ...]

    @property
    def ring(self) -> Ring:
        return self.elements[0].ring if self.elements else ()

    def contains_one(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.elements)


def _divides(e: Exponent, f: Exponent) -> bool:
    return all(a <= b for a, b in zip(e, f))


def _lcm(e: Exponent, f: Exponent) -> Exponent:
    return tuple(max(a, b) for a, b in zip(e, f))


def _reduce_full(f: MPoly, polys: list[MPoly], order: MonomialOrder) -> MPoly:
    """Remainder of f under full division by the list (every term reduced)."""
    if f.is_zero() or not polys:
        return f
    leads = [g.leading(order) for g in polys]
    work = dict(f.terms)
    rem: dict[Exponent, Fraction] = {}
    while work:
        e = max(work, key=order.key)
        c = work.pop(e)
        for g, (le, lc) in zip(polys, leads):
            if _divides(le, e):
                q = c / lc
                me = tuple(a - b for a, b in zip(e, le))
                # Every monomial below is strictly smaller than e in the
                # order, so it can never collide with terms already in rem.
                for ge, gc in g.terms.items():
                    t = tuple(a + b for a, b in zip(me, ge))
                    if t == e:
                        continue
                    s = work.get(t, Fraction(0)) - q * gc
                    if s:
                        work[t] = s
                    else:
                        work.pop(t, None)
                break
        else:
            rem[e] = c
    return MPoly(f.ring, rem)


def spoly(f: MPoly, g: MPoly, order: MonomialOrder = DEGREVLEX) -> MPoly:
    """S-polynomial of f and g."""
    ef, cf = f.leading(order)
    eg, cg = g.leading(order)
    lcm = _lcm(ef, eg)
    mf = MPoly(f.ring, {tuple(a - b for a, b in zip(lcm, ef)): 1 / cf})
    mg = MPoly(g.ring, {tuple(a - b for a, b in zip(lcm, eg)): 1 / cg})
    return mf * f - mg * g


def buchberger(
    ideal: Ideal,
    order: MonomialOrder = DEGREVLEX,
    budget: GroebnerBudget | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal under the given order.

    Pair selection is the normal strategy (smallest lcm degree, then the
    order key); the product criterion and the chain criterion prune pairs.
    """
    gens = [g.monic(order) for g in ideal.generators]
    if not gens:
        return GroebnerBasis(order, ())
    basis: list[MPoly] = []
    leads: list[Exponent] = []
    pending: set[tuple[int, int]] = set()

    def add(f: MPoly) -> None:
        basis.append(f)
        leads.append(f.leading(order)[0])
        j = len(basis) - 1
        for i in range(j):
            pending.add((i, j))
        if budget and len(basis) > budget.max_elements:
            raise BudgetExceededError(f"basis grew past {budget.max_elements} elements")
        if budget and f.total_degree() > budget.max_degree:
            raise BudgetExceededError(f"element degree passed {budget.max_degree}")

    for g in gens:
        r = _reduce_full(g, basis, order)
        if not r.is_zero():
            add(r.monic(order))

    def pair_key(p: tuple[int, int]):
        lcm = _lcm(leads[p[0]], leads[p[1]])
        return (sum(lcm), order.key(lcm))

    while pending:
        i, j = min(pending, key=pair_key)
        pending.discard((i, j))
        li, lj = leads[i], leads[j]
        lcm = _lcm(li, lj)
        # Product criterion: coprime leading monomials reduce to zero.
        if all(a + b == c for a, b, c in zip(li, lj, lcm)):
            continue
        # Chain criterion: an already-processed mediator makes the pair redundant.
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if (
                _divides(leads[k], lcm)
                and (min(i, k), max(i, k)) not in pending
                and (min(j, k), max(j, k)) not in pending
            ):
                skip = True
                break
        if skip:
            continue
        r = _reduce_full(spoly(basis[i], basis[j], order), basis, order)
        if not r.is_zero():
            add(r.monic(order))

    # Minimalise: drop elements whose lead is divisible by another lead.
    minimal: list[MPoly] = []
    for i in sorted(range(len(basis)), key=lambda i: order.key(leads[i])):
        if not any(_divides(g.leading(order)[0], leads[i]) for g in minimal):
            minimal.append(basis[i])
    # Interreduce: fully reduce each element against the others.
    reduced: list[MPoly] = []
    for i, f in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        r = _reduce_full(f, others, order)
        if not r.is_zero():
            reduced.append(r.monic(order))
    reduced.sort(key=lambda g: order.key(g.leading(order)[0]), reverse=True)
    return GroebnerBasis(order, tuple(reduced))


def normal_form(f: MPoly, gb: GroebnerBasis) -> MPoly:
    """Full reduction of f by the basis; zero iff f lies in the ideal."""
    return _reduce_full(f, list(gb.elements), gb.order)


def _fresh_variable(ring: Ring) -> str:
    name = "t"
    while name in ring:
        name += "_"
    return name


def _lift(f: MPoly, ring: Ring) -> MPoly:
    """Reinterpret f in an extension of its ring by trailing variables."""
    pad = len(ring) - len(f.ring)
    return MPoly(ring, {e + (0,) * pad: c for e, c in f.terms.items()})


def radical_membership(
    f: MPoly,
    ideal: Ideal,
    budget: GroebnerBudget | None = None,
    _gb: GroebnerBasis | None = None,
) -> bool:
    """True iff f vanishes on V(ideal) (over the algebraic closure).

    Ideal membership is checked first (sufficient); otherwise the
    Rabinowitsch trick decides: f in rad(I) iff 1 in I + (1 - t*f).
    """
    if f.is_zero():
        return True
    if not ideal.generators:
        return False
    gb = _gb if _gb is not None else buchberger(ideal, DEGREVLEX, budget)
    if gb.contains_one():
        return True
    if normal_form(f, gb).is_zero():
        return True
    ext = ideal.ring + (_fresh_variable(ideal.ring),)
    t = MPoly.variable(ext, len(ext) - 1)
    gens = [_lift(g, ext) for g in ideal.generators]
    gens.append(MPoly.constant(ext, 1) - t * _lift(f, ext))
    ext_gb = buchberger(Ideal(ext, gens), DEGREVLEX, budget)
    return ext_gb.contains_one()


def ideal_equal_radical(a: Ideal, b: Ideal, budget: GroebnerBudget | None = None) -> bool:
    """True iff rad(a) = rad(b), tested generator by generator both ways."""
    if a.ring != b.ring:
        raise ValueError("ideals must share one ring")
    gb_a = buchberger(a, DEGREVLEX, budget)
    gb_b = buchberger(b, DEGREVLEX, budget)
    for g in a.generators:
        if not radical_membership(g, b, budget, _gb=gb_b):
            return False
    for g in b.generators:
        if not radical_membership(g, a, budget, _gb=gb_a):
            return False
    return True
