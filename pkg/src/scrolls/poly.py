"""Sparse multivariate polynomials over Q or a prime field.

A polynomial is a dict {exponent tuple: coefficient} wrapped with its ring.
Coefficients are Python ints reduced mod p when the ring has prime
characteristic, Fractions otherwise.  Monomial orders are small objects
exposing a sort key; leading terms are taken with max(key).
"""

import re
from fractions import Fraction


class PolyError(ValueError):
    pass


# --- monomial orders --------------------------------------------------------


class MonomialOrder:
    name = "order"

    def key(self, exp):  # pragma: no cover - interface
        raise NotImplementedError

    def __repr__(self):
        return self.name


class Lex(MonomialOrder):
    name = "lex"

    def key(self, exp):
        return exp


class DegRevLex(MonomialOrder):
    """Graded reverse lexicographic; optional positive weights.

    With weights, 'degree' means the weighted degree; ties break by revlex
    in the given variable order (last variable cheapest).
    """

    def __init__(self, weights=None):
        self.weights = tuple(weights) if weights is not None else None
        self.name = "degrevlex" if weights is None else f"wdegrevlex{self.weights}"

    def key(self, exp):
        if self.weights is None:
            d = sum(exp)
        else:
            d = sum(w * e for w, e in zip(self.weights, exp))
        return (d, tuple(-e for e in reversed(exp)))


class Block(MonomialOrder):
    """Elimination order: compare the first nblock variables by degrevlex,
    then the rest by degrevlex."""

    def __init__(self, nblock):
        self.nblock = nblock
        self.name = f"block({nblock})"

    def key(self, exp):
        head, tail = exp[: self.nblock], exp[self.nblock :]
        return (
            sum(head),
            tuple(-e for e in reversed(head)),
            sum(tail),
            tuple(-e for e in reversed(tail)),
        )


def order_from_name(name):
    if name == "lex":
        return Lex()
    if name in ("drl", "degrevlex", "grevlex"):
        return DegRevLex()
    m = re.match(r"^block\((\d+)\)$", name)
    if m:
        return Block(int(m.group(1)))
    raise PolyError(f"unknown monomial order {name!r}")


# --- rings ------------------------------------------------------------------


class Ring:
    """Polynomial ring descriptor: variable names and characteristic.

    char = 0 means Q (Fraction coefficients), otherwise a prime field F_p
    with int coefficients in [0, p).
    """

    def __init__(self, names, char=0):
        self.names = tuple(names)
        self.char = int(char)
        if self.char and not _is_probable_prime(self.char):
            raise PolyError(f"characteristic {self.char} is not prime")
        self.nvars = len(self.names)
        self._index = {nm: i for i, nm in enumerate(self.names)}

    def __repr__(self):
        field = "QQ" if self.char == 0 else f"GF({self.char})"
        return f"{field}[{','.join(self.names)}]"

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and self.names == other.names
            and self.char == other.char
        )

    def __hash__(self):
        return hash((self.names, self.char))

    def coeff(self, c):
        if self.char:
            return int(c) % self.char
        return Fraction(c)

    def inv(self, c):
        if self.char:
            return pow(c, self.char - 2, self.char)
        return Fraction(1) / c

    def zero_exp(self):
        return (0,) * self.nvars

    def poly(self, terms):
        out = {}
        for e, c in terms.items():
            c = self.coeff(c)
            if c:
                e = tuple(int(x) for x in e)
                out[e] = (out.get(e, 0 if self.char else Fraction(0)) + c)
                if self.char:
                    out[e] %= self.char
                if not out[e]:
                    del out[e]
        return Poly(self, out)

    def zero(self):
        return Poly(self, {})

    def one(self):
        return self.poly({self.zero_exp(): 1})

    def var(self, i):
        if isinstance(i, str):
            i = self._index[i]
        e = [0] * self.nvars
        e[i] = 1
        return self.poly({tuple(e): 1})

    def extend(self, extra_names):
        return Ring(self.names + tuple(extra_names), self.char)


def _is_probable_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def exp_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def exp_div(a, b):
    """a / b or None when not divisible."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def exp_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def exp_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


class Poly:
    """Immutable-by-convention sparse polynomial."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # -- ring ops --

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        p = self.ring.char
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0 if p else Fraction(0)) + c
            if p:
                v %= p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly(self.ring, out)

    def __neg__(self):
        p = self.ring.char
        if p:
            return Poly(self.ring, {e: p - c for e, c in self.terms.items()})
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        p = self.ring.char
        out = {}
        if len(self.terms) > len(other.terms):
            a, b = other, self
        else:
            a, b = self, other
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = exp_mul(e1, e2)
                v = out.get(e, 0 if p else Fraction(0)) + c1 * c2
                if p:
                    v %= p
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def scale(self, c):
        c = self.ring.coeff(c)
        if not c:
            return self.ring.zero()
        p = self.ring.char
        if p:
            return Poly(self.ring, {e: (v * c) % p for e, v in self.terms.items()})
        return Poly(self.ring, {e: v * c for e, v in self.terms.items()})

    def __pow__(self, k):
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- leading data --

    def lead(self, order):
        if not self.terms:
            raise PolyError("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def monic(self, order):
        e, c = self.lead(order)
        if (self.ring.char and c == 1) or (not self.ring.char and c == 1):
            return self
        inv = self.ring.inv(c)
        return self.scale(inv)

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i):
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self, weights=None):
        if not self.terms:
            return True
        if weights is None:
            degs = {sum(e) for e in self.terms}
        else:
            degs = {sum(w * x for w, x in zip(weights, e)) for e in self.terms}
        return len(degs) == 1

    # -- calculus / substitution --

    def partial(self, i):
        out = {}
        p = self.ring.char
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            v = c * e[i]
            if p:
                v %= p
            if not v:
                continue
            e2 = list(e)
            e2[i] -= 1
            out[tuple(e2)] = v
        return Poly(self.ring, out)

    def subs(self, assignment):
        """Substitute variables by polynomials of a target ring.

        assignment: dict {var index or name: Poly in target ring}; variables
        not mentioned must exist (same name) in the target ring.
        """
        items = list(assignment.items())
        target = items[0][1].ring if items else self.ring
        amap = {}
        for k, v in items:
            idx = self.ring._index[k] if isinstance(k, str) else k
            amap[idx] = v
        name_to_target = {}
        for i, nm in enumerate(self.ring.names):
            if i not in amap:
                if nm not in target._index:
                    raise PolyError(f"variable {nm} missing from target ring")
                name_to_target[i] = target._index[nm]
        out = target.zero()
        for e, c in self.terms.items():
            term = target.poly({target.zero_exp(): c})
            base_exp = [0] * target.nvars
            for i, k in enumerate(e):
                if k == 0:
                    continue
                if i in amap:
                    term = term * (amap[i] ** k)
                else:
                    base_exp[name_to_target[i]] += k
            term = term * target.poly({tuple(base_exp): 1})
            out = out + term
        return out

    def eval(self, values):
        """Full evaluation at a point (list of coefficients)."""
        p = self.ring.char
        total = 0 if p else Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(values, e):
                if k:
                    v = v * pow(x, k, p) if p else v * x**k
            total = (total + v) % p if p else total + v
        return total

    # -- io --

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda t: (-sum(t), tuple(-x for x in t))):
            c = self.terms[e]
            mono = "*".join(
                f"{nm}^{k}" if k > 1 else nm
                for nm, k in zip(self.ring.names, e)
                if k
            )
            if mono:
                cs = "" if c == 1 else ("-" if c == -1 and not self.ring.char else f"{c}*")
                parts.append(f"{cs}{mono}")
            else:
                parts.append(str(c))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({self})"


# --- parsing ----------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[\^\*\+\-\(\)]))"
)


def parse_poly(ring, text):
    """Parse `3*t1^2*x3 - 5/7*x4^2` style syntax (supports parentheses-free
    sums of monomial terms)."""
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise PolyError(f"cannot tokenize {text[pos:]!r}")
            break
        pos = m.end()
        if m.group("num"):
            tokens.append(("num", m.group("num")))
        elif m.group("name"):
            tokens.append(("name", m.group("name")))
        else:
            tokens.append(("op", m.group("op")))
    result = ring.zero()
    sign = 1
    cur_coeff = None
    cur_exp = None

    def flush():
        nonlocal cur_coeff, cur_exp, result, sign
        if cur_exp is None and cur_coeff is None:
            return
        c = Fraction(cur_coeff) if cur_coeff is not None else Fraction(1)
        e = cur_exp if cur_exp is not None else ring.zero_exp()
        result = result + ring.poly({e: sign * c})
        cur_coeff, cur_exp = None, None

    i = 0
    while i < len(tokens):
        kind, val = tokens[i]
        if kind == "op" and val in "+-":
            flush()
            sign = 1 if val == "+" else -1
        elif kind == "num":
            cur_coeff = Fraction(val) if cur_coeff is None else Fraction(cur_coeff) * Fraction(val)
        elif kind == "name":
            if val not in ring._index:
                raise PolyError(f"unknown variable {val!r}")
            k = 1
            if i + 2 < len(tokens) and tokens[i + 1] == ("op", "^"):
                k = int(tokens[i + 2][1])
                i += 2
            e = list(cur_exp) if cur_exp is not None else [0] * ring.nvars
            e[ring._index[val]] += k
            cur_exp = tuple(e)
        elif kind == "op" and val == "*":
            pass
        else:
            raise PolyError(f"unexpected token {val!r}")
        i += 1
    flush()
    return result


def format_ideal(gens):
    return "\n".join(str(g) for g in gens) + "\n"


def parse_ideal(ring, text):
    return [
        parse_poly(ring, line)
        for line in text.strip().splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]
