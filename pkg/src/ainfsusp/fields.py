"""Exact coefficient fields: the rationals and prime fields.

Scalars are plain Python objects (``fractions.Fraction`` over Q, ``int``
residues over F_p); a ``Field`` instance carries the arithmetic.  Nothing
here ever rounds.
"""

from fractions import Fraction


class FieldError(ValueError):
    pass


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    """Common interface for Q and F_p.

    ``characteristic`` is 0 for Q, p for F_p.  Scalars belonging to
    different fields must never be mixed; operations on a Field only
    accept scalars it produced (or ints, which are coerced).
    """

    def __eq__(self, other):
        return isinstance(other, Field) and self.characteristic == other.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def coerce(self, x):
        raise NotImplementedError

    def parse(self, s):
        raise NotImplementedError

    def show(self, x):
        raise NotImplementedError


class RationalField(Field):
    characteristic = 0
    one = Fraction(1)
    zero = Fraction(0)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise FieldError(f"cannot coerce {x!r} into Q")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise FieldError("division by zero in Q")
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def sign(self, exponent):
        """(-1)**exponent as a scalar."""
        return Fraction(-1 if exponent % 2 else 1)

    def parse(self, s):
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad rational literal {s!r}") from exc

    def show(self, x):
        return str(x)

    def descriptor(self):
        return "q"

    def __repr__(self):
        return "Q"


class PrimeField(Field):
    def __init__(self, p):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.one = 1 % p
        self.zero = 0

    def __hash__(self):
        return hash(("Field", self.p))

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        raise FieldError(f"cannot coerce {x!r} into F_{self.p}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise FieldError(f"division by zero in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def sign(self, exponent):
        return (self.p - 1) if (exponent % 2 and self.p != 2) else 1 % self.p

    def parse(self, s):
        try:
            return int(s) % self.p
        except ValueError as exc:
            raise FieldError(f"bad residue literal {s!r}") from exc

    def show(self, x):
        return str(x % self.p)

    def descriptor(self):
        return f"fp:{self.p}"

    def __repr__(self):
        return f"F_{self.p}"


QQ = RationalField()

_prime_fields = {}


def GF(p):
    """The prime field with p elements (cached per p)."""
    if p not in _prime_fields:
        _prime_fields[p] = PrimeField(p)
    return _prime_fields[p]


def field_from_descriptor(desc):
    """Parse a field descriptor: "q" or "fp:<p>"."""
    if desc == "q":
        return QQ
    if desc.startswith("fp:"):
        try:
            p = int(desc[3:])
        except ValueError as exc:
            raise FieldError(f"bad field descriptor {desc!r}") from exc
        return GF(p)
    raise FieldError(f"bad field descriptor {desc!r}")
