"""Hopf generators, their coalgebra tables, and the action on normal forms.

Generator words are kept free: no rewriting is performed inside the Hopf
algebra.  Its defining relations are verified through the action instead,
which realizes each generator as a two-sided multiplication sandwich built
from the conjugator ``rho_j`` and the ladder elements ``A_j``, ``B_j``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import coeff, weyl
from .coeff import ONE, ScalarValue, q0_power, q_power
from .errors import DescriptorMismatch, IndexOutOfRange
from .report import SuiteReport
from .weyl import AlgebraElement, cartan_matrix

K, KINV, E, F = "K", "Kinv", "E", "F"
_KINDS = (K, KINV, E, F)


def hopf_gen(n, kind, j):
    if kind not in _KINDS:
        raise ValueError(f"unknown generator kind {kind!r}")
    if not 1 <= j <= n:
        raise IndexOutOfRange(f"generator index {j} outside 1..{n}")
    return (kind, j)


def generators(n, jmax=None):
    jmax = n if jmax is None else jmax
    return [(kind, j) for j in range(1, jmax + 1) for kind in _KINDS]


class HopfElement:
    """Linear combination of free generator words over exact scalars."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms):
        self.n = n
        self.terms = terms

    @staticmethod
    def unit(n):
        return HopfElement(n, {(): ONE})

    @staticmethod
    def zero(n):
        return HopfElement(n, {})

    @staticmethod
    def generator(n, kind, j):
        return HopfElement(n, {(hopf_gen(n, kind, j),): ONE})

    def _match(self, other):
        if self.n != other.n:
            raise DescriptorMismatch(f"rank {self.n} vs {other.n}")

    def _co(self, other):
        if isinstance(other, HopfElement):
            return other
        if isinstance(other, ScalarValue):
            return HopfElement(self.n, {(): other} if not other.is_zero else {})
        if isinstance(other, int):
            return self._co(coeff.integer(other))
        return None

    def __add__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        self._match(o)
        out = dict(self.terms)
        for word, cv in o.terms.items():
            acc = out.get(word)
            acc = cv if acc is None else acc + cv
            if acc.is_zero:
                out.pop(word, None)
            else:
                out[word] = acc
        return HopfElement(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return HopfElement(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __mul__(self, other):
        if isinstance(other, (ScalarValue, int)):
            return self.scaled(other)
        if not isinstance(other, HopfElement):
            return NotImplemented
        self._match(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                word = w1 + w2
                cv = c1 * c2
                acc = out.get(word)
                acc = cv if acc is None else acc + cv
                if acc.is_zero:
                    out.pop(word, None)
                else:
                    out[word] = acc
        return HopfElement(self.n, out)

    def __rmul__(self, other):
        if isinstance(other, (ScalarValue, int)):
            return self.scaled(other)
        return NotImplemented

    def scaled(self, c):
        if isinstance(c, int):
            c = coeff.integer(c)
        if c.is_zero:
            return HopfElement.zero(self.n)
        return HopfElement(self.n, {k: c * v for k, v in self.terms.items()})

    def star(self):
        """Antilinear anti-automorphism; every generator is fixed."""
        return HopfElement(self.n, {tuple(reversed(word)): cv.star()
                                    for word, cv in self.terms.items()})

    @property
    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, HopfElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items()))))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for word in sorted(self.terms, key=lambda w: (len(w), w)):
            cv = self.terms[word]
            body = "*".join(_gen_str(g) for g in word)
            if not body:
                parts.append(f"({cv})")
            elif cv.is_one:
                parts.append(body)
            else:
                parts.append(f"({cv})*{body}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<hopf n={self.n}: {self}>"


def _gen_str(g):
    kind, j = g
    return f"K{j}^-1" if kind == KINV else f"{kind}{j}"


# -- coalgebra tables --------------------------------------------------------


def counit(h):
    """Algebra homomorphism to scalars; kills every ladder generator."""
    total = coeff.ZERO
    for word, cv in h.terms.items():
        if all(kind in (K, KINV) for kind, _ in word):
            total = total + cv
    return total


def coproduct(n, g):
    """Generator-level coproduct as a list of tensor-factor pairs."""
    kind, j = g
    one = HopfElement.unit(n)
    gg = HopfElement.generator(n, kind, j)
    if kind in (K, KINV):
        return [(gg, gg)]
    if kind == E:
        kk = HopfElement.generator(n, K, j)
        return [(gg, one), (kk, gg)]
    ki = HopfElement.generator(n, KINV, j)
    return [(gg, ki), (one, gg)]


def antipode(n, g):
    kind, j = g
    if kind == K:
        return HopfElement.generator(n, KINV, j)
    if kind == KINV:
        return HopfElement.generator(n, K, j)
    if kind == E:
        return -(HopfElement.generator(n, KINV, j)
                 * HopfElement.generator(n, E, j))
    return -(HopfElement.generator(n, F, j) * HopfElement.generator(n, K, j))


def antipode_element(h):
    """Anti-multiplicative extension of the generator antipode."""
    n = h.n
    out = HopfElement.zero(n)
    for word, cv in h.terms.items():
        acc = HopfElement.unit(n).scaled(cv)
        for g in reversed(word):
            acc = acc * antipode(n, g)
        out = out + acc
    return out


# -- the action --------------------------------------------------------------


@lru_cache(maxsize=None)
def _rho(n, j):
    return weyl.rho(n, j)


@lru_cache(maxsize=None)
def _rho_inv(n, j):
    return weyl.rho_inv(n, j)


@lru_cache(maxsize=None)
def _a(n, j):
    return weyl.a_op(n, j)


@lru_cache(maxsize=None)
def _b(n, j):
    return weyl.b_op(n, j)


@lru_cache(maxsize=None)
def _rhoinv_a(n, j):
    return _rho_inv(n, j) * _a(n, j)


@lru_cache(maxsize=None)
def _rho_b(n, j):
    return _rho(n, j) * _b(n, j)


def act(g, f):
    """Apply a single generator to an algebra element."""
    kind, j = g
    n = f.n
    if not 1 <= j <= n:
        raise IndexOutOfRange(f"generator index {j} outside 1..{n}")
    if kind == K:
        return _rho(n, j) * f * _rho_inv(n, j)
    if kind == KINV:
        return _rho_inv(n, j) * f * _rho(n, j)
    if kind == E:
        return _a(n, j) * f - _rho(n, j) * f * _rhoinv_a(n, j)
    if kind == F:
        return _b(n, j) * f * _rho(n, j) - q_power(2) * (f * _rho_b(n, j))
    raise ValueError(f"unknown generator kind {kind!r}")


def act_element(h, f):
    """Extend the action over words (by composition) and linearly."""
    if h.n != f.n:
        raise DescriptorMismatch(f"rank {h.n} vs {f.n}")
    out = AlgebraElement.zero(f.n)
    for word, cv in h.terms.items():
        acc = f
        for g in reversed(word):
            acc = act(g, acc)
        out = out + acc.scaled(cv)
    return out


# -- reference tables and check suites ----------------------------------------


def action_table(n, jmax=None):
    """Expected generator-on-coordinate values as (gen, input, output, name)."""
    jmax = n if jmax is None else jmax
    rows = []
    i_unit = coeff.I
    for j in range(1, jmax + 1):
        for k in range(1, n + 1):
            y = weyl.gen_y(n, k)
            x = weyl.gen_x(n, k)
            if j < n:
                ey = (-i_unit * q0_power(-1)) * weyl.gen_y(n, j) if k == j + 1 \
                    else AlgebraElement.zero(n)
                ex = (i_unit * q0_power(-1)) * weyl.gen_x(n, j + 1) if k == j \
                    else AlgebraElement.zero(n)
                fy = (i_unit * q0_power(1)) * weyl.gen_y(n, j + 1) if k == j \
                    else AlgebraElement.zero(n)
                fx = (-i_unit * q0_power(1)) * weyl.gen_x(n, j) if k == j + 1 \
                    else AlgebraElement.zero(n)
                ky = q_power(1) if k == j else (q_power(-1) if k == j + 1 else ONE)
                kx = q_power(-1) if k == j else (q_power(1) if k == j + 1 else ONE)
            else:
                ey = (i_unit * q_power(1)) * (weyl.gen_y(n, n) * y)
                ex = (-i_unit * q_power(-1)) * AlgebraElement.unit(n) if k == n \
                    else AlgebraElement.zero(n)
                fy = i_unit * AlgebraElement.unit(n) if k == n \
                    else AlgebraElement.zero(n)
                fx = (-i_unit * q_power(2)) * (x * weyl.gen_x(n, n))
                ky = q_power(2) if k == n else q_power(1)
                kx = q_power(-2) if k == n else q_power(-1)
            rows.append(((E, j), y, ey, f"E{j}>y{k}"))
            rows.append(((E, j), x, ex, f"E{j}>x{k}"))
            rows.append(((F, j), y, fy, f"F{j}>y{k}"))
            rows.append(((F, j), x, fx, f"F{j}>x{k}"))
            rows.append(((K, j), y, ky * y, f"K{j}>y{k}"))
            rows.append(((K, j), x, kx * x, f"K{j}>x{k}"))
            rows.append(((KINV, j), y, ky.inv() * y, f"K{j}^-1>y{k}"))
            rows.append(((KINV, j), x, kx.inv() * x, f"K{j}^-1>x{k}"))
    return rows


def check_action_table(n, jmax=None):
    rep = SuiteReport("action-table")
    for g, fin, expected, name in action_table(n, jmax):
        got = act(g, fin)
        ok = got == expected
        rep.record(name, ok,
                   detail="" if ok else f"got {got}, want {expected}")
    return rep


def coordinate_monomials(n, max_degree):
    """Canonical coordinate monomials (no scale part) up to a total degree."""
    out = []
    degrees = range(max_degree + 1)
    for b in itertools.product(degrees, repeat=n):
        room = max_degree - sum(b)
        if room < 0:
            continue
        for c in itertools.product(range(room + 1), repeat=n):
            if sum(c) > room:
                continue
            if any(b[i] and c[i] for i in range(n)):
                continue
            z = (0,) * n
            out.append(AlgebraElement(n, {(z, b, c): ONE}))
    return out


def check_module_algebra(n, degree=3, jmax=None):
    """Leibniz rule, unit rule, star compatibility, antipode cancellation."""
    rep = SuiteReport("module-algebra")
    monomials = coordinate_monomials(n, degree)
    for g in generators(n, jmax):
        gname = _gen_str(g)
        cop = coproduct(n, g)
        eps = counit(HopfElement(n, {(g,): ONE}))
        unit = AlgebraElement.unit(n)

        got = act(g, unit)
        rep.record(f"modeins[{gname}]", got == unit.scaled(eps),
                   detail="" if got == unit.scaled(eps) else str(got))

        failures = 0
        witness = ""
        for f1 in monomials:
            for f2 in monomials:
                lhs = act(g, f1 * f2)
                rhs = AlgebraElement.zero(n)
                for h1, h2 in cop:
                    rhs = rhs + act_element(h1, f1) * act_element(h2, f2)
                if lhs != rhs:
                    failures += 1
                    if not witness:
                        witness = f"f1={f1}, f2={f2}"
        rep.record(f"modalg[{gname}]", failures == 0,
                   detail=witness if failures else "")

        sstar = antipode(n, g).star()
        failures = 0
        witness = ""
        for f in monomials:
            lhs = act(g, f).star()
            rhs = act_element(sstar, f.star())
            if lhs != rhs:
                failures += 1
                if not witness:
                    witness = f"f={f}"
        rep.record(f"modstar[{gname}]", failures == 0,
                   detail=witness if failures else "")

        failures = 0
        for f in monomials:
            total = AlgebraElement.zero(n)
            for h1, h2 in cop:
                total = total + act_element(antipode_element(h1) * h2, f)
            if total != f.scaled(eps):
                failures += 1
        rep.record(f"antipode[{gname}]", failures == 0)
    return rep


def defining_relations(n, jmax=None):
    """Words that must annihilate every element through the action."""
    jmax = n if jmax is None else jmax
    cart = cartan_matrix(n)
    gens = {}
    for j in range(1, jmax + 1):
        for kind in _KINDS:
            gens[(kind, j)] = HopfElement.generator(n, kind, j)
    rels = []
    lam_inv = coeff.LAMBDA_INV
    for i in range(1, jmax + 1):
        rels.append((f"KKinv[{i}]",
                     gens[(K, i)] * gens[(KINV, i)] - HopfElement.unit(n)))
        rels.append((f"KinvK[{i}]",
                     gens[(KINV, i)] * gens[(K, i)] - HopfElement.unit(n)))
        for j in range(i + 1, jmax + 1):
            rels.append((f"KK[{i},{j}]",
                         gens[(K, i)] * gens[(K, j)] - gens[(K, j)] * gens[(K, i)]))
        for j in range(1, jmax + 1):
            a = cart[i - 1][j - 1]
            rels.append((f"KE[{i},{j}]",
                         gens[(K, i)] * gens[(E, j)]
                         - q_power(a) * (gens[(E, j)] * gens[(K, i)])))
            rels.append((f"KF[{i},{j}]",
                         gens[(K, i)] * gens[(F, j)]
                         - q_power(-a) * (gens[(F, j)] * gens[(K, i)])))
    qser = q_power(1) + q_power(-1)
    for kind, tag in ((E, "EE"), (F, "FF")):
        for i in range(1, jmax + 1):
            for j in range(i + 1, jmax + 1):
                if j - i >= 2:
                    rels.append((f"{tag}far[{i},{j}]",
                                 gens[(kind, i)] * gens[(kind, j)]
                                 - gens[(kind, j)] * gens[(kind, i)]))
        for j in range(1, jmax + 1):
            for l in (j - 1, j + 1):
                if not 1 <= l <= jmax:
                    continue
                gj, gl = gens[(kind, j)], gens[(kind, l)]
                rels.append((f"{tag}serre[{j},{l}]",
                             gj * gj * gl - qser * (gj * gl * gj) + gl * (gj * gj)))
    for i in range(1, jmax + 1):
        for j in range(1, jmax + 1):
            if i != j:
                rels.append((f"EFcross[{i},{j}]",
                             gens[(E, i)] * gens[(F, j)]
                             - gens[(F, j)] * gens[(E, i)]))
        rels.append((f"EF[{i}]",
                     gens[(E, i)] * gens[(F, i)] - gens[(F, i)] * gens[(E, i)]
                     - lam_inv * (gens[(K, i)] - gens[(KINV, i)])))
    return rels


def check_defining_relations(n, degree=3, jmax=None):
    rep = SuiteReport("uq-relations")
    monomials = coordinate_monomials(n, degree)
    for name, rel in defining_relations(n, jmax):
        failures = 0
        witness = ""
        for f in monomials:
            got = act_element(rel, f)
            if not got.is_zero:
                failures += 1
                if not witness:
                    witness = f"f={f} -> {got}"
        rep.record(name, failures == 0, detail=witness)
    return rep
