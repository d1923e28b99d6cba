"""
Truncated multivariate power series over exact rationals.

Variables are y_1 .. y_n (coordinates on the dual Cartan, one per
fundamental weight) and a final grading variable r, so exponent keys are
integer tuples of length n + 1 with the r-degree in the last slot.  A
series carries an ``order``: coefficients are trusted for total degree <=
order and discarded above it.

Precision bookkeeping is deliberately pessimistic and mechanical:

  add / mul            -> min of the input orders
  div by a linear form -> order - 1 (one degree is consumed)
  exp / inv / Weyl action / r-sign flip -> order preserved
  mul by a single monomial of degree d  -> order + d

The last rule is what keeps the graded commutation rule
t_s phi = s(phi) t_s + 2r * (phi - s(phi))/alpha-dot  order-neutral: the
division loses a degree and the multiplication by the degree-one monomial
2r wins it back.

Division by a linear form is exact division, done degree by degree on
homogeneous components with a pivot variable; a nonzero remainder raises
NotDivisible, which in practice means a formula was transcribed wrongly
upstream.
"""

from fractions import Fraction

from .root_datum import apply


class NonzeroConstantTerm(ValueError):
    """exp requires a series with zero constant term."""


class NonUnit(ValueError):
    """Inversion requires a nonzero constant term."""


class NotDivisible(ArithmeticError):
    """Exact division by a linear form left a remainder."""


class LinearForm:
    """Degree-one form c_1 y_1 + ... + c_n y_n + c_r r."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    @property
    def nvars(self):
        return len(self.coeffs)

    def __add__(self, other):
        return LinearForm([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return LinearForm([-a for a in self.coeffs])

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __repr__(self):
        return "LinearForm(%r)" % (self.coeffs,)


def diff(x):
    """The differential of a weight: y-coefficients = coordinates, no r."""
    x = tuple(x)
    return LinearForm(list(x) + [0])


class FormalSeries:
    """Sparse truncated power series with Fraction coefficients."""

    __slots__ = ("nvars", "order", "coeffs")

    def __init__(self, nvars, order, coeffs=None):
        self.nvars = nvars      # n + 1 including the r slot
        self.order = order
        self.coeffs = {}
        if coeffs:
            for exp, c in coeffs.items():
                c = Fraction(c)
                if c and sum(exp) <= order:
                    self.coeffs[tuple(exp)] = c

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, nvars, order):
        return cls(nvars, order)

    @classmethod
    def const(cls, nvars, order, value):
        return cls(nvars, order, {(0,) * nvars: Fraction(value)})

    @classmethod
    def one(cls, nvars, order):
        return cls.const(nvars, order, 1)

    @classmethod
    def variable(cls, nvars, order, index, coeff=1):
        exp = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, order, {exp: Fraction(coeff)})

    @classmethod
    def r(cls, nvars, order, coeff=1):
        return cls.variable(nvars, order, nvars - 1, coeff)

    @classmethod
    def from_linear(cls, form, order):
        n = form.nvars
        coeffs = {}
        for i, c in enumerate(form.coeffs):
            if c:
                coeffs[tuple(1 if j == i else 0 for j in range(n))] = c
        return cls(n, order, coeffs)

    # -- basic structure -------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def constant_term(self):
        return self.coeffs.get((0,) * self.nvars, Fraction(0))

    def truncate(self, order):
        """Lower (never raise) the trusted order."""
        order = min(order, self.order)
        return FormalSeries(
            self.nvars, order,
            {e: c for e, c in self.coeffs.items() if sum(e) <= order},
        )

    def __add__(self, other):
        order = min(self.order, other.order)
        out = {e: c for e, c in self.coeffs.items() if sum(e) <= order}
        for e, c in other.coeffs.items():
            if sum(e) > order:
                continue
            new = out.get(e, Fraction(0)) + c
            if new:
                out[e] = new
            else:
                out.pop(e, None)
        res = FormalSeries(self.nvars, order)
        res.coeffs = out
        return res

    def __neg__(self):
        res = FormalSeries(self.nvars, self.order)
        res.coeffs = {e: -c for e, c in self.coeffs.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        order = min(self.order, other.order)
        out = {}
        for e1, c1 in self.coeffs.items():
            d1 = sum(e1)
            if d1 > order:
                continue
            for e2, c2 in other.coeffs.items():
                if d1 + sum(e2) > order:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                new = out.get(e, Fraction(0)) + c1 * c2
                if new:
                    out[e] = new
                else:
                    out.pop(e, None)
        res = FormalSeries(self.nvars, order)
        res.coeffs = out
        return res

    def scale(self, value):
        value = Fraction(value)
        if not value:
            return FormalSeries.zero(self.nvars, self.order)
        res = FormalSeries(self.nvars, self.order)
        res.coeffs = {e: c * value for e, c in self.coeffs.items()}
        return res

    def mul_monomial(self, exp, coeff=1):
        """Multiply by a single exact monomial; the order RISES by its degree."""
        d = sum(exp)
        coeff = Fraction(coeff)
        res = FormalSeries(self.nvars, self.order + d)
        if coeff:
            res.coeffs = {
                tuple(a + b for a, b in zip(e, exp)): c * coeff
                for e, c in self.coeffs.items()
            }
        return res

    def eq(self, other, order=None):
        """Equality of all coefficients up to the common trusted order."""
        cap = min(self.order, other.order)
        if order is not None:
            cap = min(cap, order)
        a = {e: c for e, c in self.coeffs.items() if sum(e) <= cap}
        b = {e: c for e, c in other.coeffs.items() if sum(e) <= cap}
        return a == b

    def __eq__(self, other):
        return (
            isinstance(other, FormalSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        if not self.coeffs:
            return "O(%d)" % (self.order + 1)
        names = ["y%d" % (i + 1) for i in range(self.nvars - 1)] + ["r"]
        parts = []
        for e in sorted(self.coeffs, key=lambda t: (sum(t), t)):
            c = self.coeffs[e]
            mono = "*".join(
                n if p == 1 else "%s^%d" % (n, p)
                for n, p in zip(names, e) if p
            )
            parts.append(str(c) if not mono else "%s*%s" % (c, mono))
        return " + ".join(parts) + " + O(%d)" % (self.order + 1)


# -- analytic operations --------------------------------------------------

def fs_exp(f):
    """exp of a series with zero constant term, same order."""
    if f.constant_term():
        raise NonzeroConstantTerm("exp needs zero constant term, got %s" % f.constant_term())
    out = FormalSeries.one(f.nvars, f.order)
    term = FormalSeries.one(f.nvars, f.order)
    for k in range(1, f.order + 1):
        term = (term * f).scale(Fraction(1, k))
        if term.is_zero():
            break
        out = out + term
    return out


def fs_inv(f):
    """Multiplicative inverse of a unit series, same order."""
    c = f.constant_term()
    if not c:
        raise NonUnit("inverse needs nonzero constant term")
    # f = c(1 - u) with u of positive valuation: inv = (1/c) sum u^k
    u = FormalSeries.one(f.nvars, f.order) - f.scale(1 / c)
    out = FormalSeries.one(f.nvars, f.order)
    term = FormalSeries.one(f.nvars, f.order)
    for _ in range(f.order):
        term = term * u
        if term.is_zero():
            break
        out = out + term
    return out.scale(1 / c)


def _homogeneous_div(coeffs, nvars, form, pivot):
    """Divide the homogeneous polynomial ``coeffs`` by a linear form.

    Lex order with the pivot variable first: the leading term of any
    multiple of ``form`` contains the pivot, so repeatedly cancelling
    leading terms either terminates with remainder zero or proves the
    input not divisible.
    """
    lead = form.coeffs[pivot]
    rem = dict(coeffs)
    quo = {}
    while rem:
        e = max(rem, key=lambda t: (t[pivot],) + t)
        c = rem[e]
        if e[pivot] == 0:
            raise NotDivisible("remainder %s * %s" % (c, e))
        qe = tuple(p - (1 if i == pivot else 0) for i, p in enumerate(e))
        qc = c / lead
        quo[qe] = quo.get(qe, Fraction(0)) + qc
        for i, fc in enumerate(form.coeffs):
            if not fc:
                continue
            me = tuple(p + (1 if j == i else 0) for j, p in enumerate(qe))
            new = rem.get(me, Fraction(0)) - qc * fc
            if new:
                rem[me] = new
            else:
                rem.pop(me, None)
    return {e: c for e, c in quo.items() if c}


def fs_div_linear(f, form):
    """Exact division by a nonzero degree-one form; order drops by one."""
    if form.is_zero():
        raise ZeroDivisionError("division by the zero form")
    pivot = next(i for i, c in enumerate(form.coeffs) if c)
    out = {}
    # split into homogeneous components; component d of the quotient comes
    # from component d+1 of the numerator
    by_degree = {}
    for e, c in f.coeffs.items():
        by_degree.setdefault(sum(e), {})[e] = c
    if 0 in by_degree:
        raise NotDivisible("nonzero constant term %s" % by_degree[0])
    for d, comp in by_degree.items():
        for e, c in _homogeneous_div(comp, f.nvars, form, pivot).items():
            out[e] = c
    return FormalSeries(f.nvars, f.order - 1, out)


def fs_weyl(datum, w, f):
    """Algebra map y_i |-> differential of w(fundamental weight i), r fixed."""
    n = datum.rank
    assert f.nvars == n + 1
    # image linear forms, one per y-variable
    images = []
    for i in range(n):
        e_i = tuple(1 if j == i else 0 for j in range(n))
        images.append(FormalSeries.from_linear(diff(apply(w, e_i)), f.order))
    r_series = FormalSeries.r(f.nvars, f.order)
    out = FormalSeries.zero(f.nvars, f.order)
    power_cache = {}

    def power(idx, k):
        # idx == n means the r variable
        if k == 0:
            return FormalSeries.one(f.nvars, f.order)
        got = power_cache.get((idx, k))
        if got is None:
            base = r_series if idx == n else images[idx]
            got = power(idx, k - 1) * base
            power_cache[(idx, k)] = got
        return got

    for e, c in f.coeffs.items():
        term = FormalSeries.const(f.nvars, f.order, c)
        for idx, p in enumerate(e):
            if p:
                term = term * power(idx, p)
        out = out + term
    return out


def fs_negate_r(f):
    """r |-> -r: negate coefficients of odd r-degree."""
    res = FormalSeries(f.nvars, f.order)
    res.coeffs = {e: (-c if e[-1] % 2 else c) for e, c in f.coeffs.items()}
    return res


def fs_set_r_zero(f):
    """Specialize r = 0 (drop every monomial with positive r-degree)."""
    res = FormalSeries(f.nvars, f.order)
    res.coeffs = {e: c for e, c in f.coeffs.items() if e[-1] == 0}
    return res


def exp_of_linear(form, order):
    """exp of a degree-one form, trusted to the requested order."""
    return fs_exp(FormalSeries.from_linear(form, order))
