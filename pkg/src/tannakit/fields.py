"""Exact ground fields: arbitrary-precision rationals and prime fields.

Scalars are canonical Python values (``fractions.Fraction`` in lowest terms
for the rationals, ints in ``[0, p)`` for a prime field), so ``==`` on
scalars and on matrices is exact equality.  The shared text format is
``"p/q"`` / ``"p"`` for rationals and ``"r mod p"`` for prime-field residues.
"""

from fractions import Fraction


class FieldError(ArithmeticError):
    pass


class Field:
    """Abstract exact field.  Elements are canonical immutable values."""

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, n):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == self.zero()

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    def abs_key(self, a):
        """Order key used to pick the max-norm entry of a difference matrix."""
        raise NotImplementedError

    def elements(self):
        """Iterate all field elements (finite fields only)."""
        raise FieldError("field is not finite")


class RationalField(Field):
    """The rationals; Fraction keeps p/q in lowest terms with q > 0."""

    name = "Q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

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
            raise FieldError("division by zero")
        return 1 / a

    def parse(self, text):
        text = text.strip()
        if "/" in text:
            num, den = text.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(text))

    def format(self, a):
        if a.denominator == 1:
            return str(a.numerator)
        return "%d/%d" % (a.numerator, a.denominator)

    def abs_key(self, a):
        return abs(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    """Integers mod p for a prime p; residues canonically in [0, p)."""

    def __init__(self, p: int):
        if p < 2:
            raise FieldError("modulus must be a prime >= 2")
        for d in range(2, int(p**0.5) + 1):
            if p % d == 0:
                raise FieldError("modulus %d is not prime" % p)
        self.p = p
        self.name = "F%d" % p

    def zero(self):
        return 0

    def one(self):
        return 1 % self.p

    def from_int(self, n):
        return n % self.p

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
            raise FieldError("division by zero in F%d" % self.p)
        return pow(a, self.p - 2, self.p)

    def parse(self, text):
        text = text.strip()
        if "mod" in text:
            r, m = text.split("mod")
            if int(m) != self.p:
                raise FieldError("scalar %r has wrong modulus for F%d" % (text, self.p))
            return int(r) % self.p
        return int(text) % self.p

    def format(self, a):
        return "%d mod %d" % (a % self.p, self.p)

    def abs_key(self, a):
        return a % self.p

    def elements(self):
        return range(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_config(cfg) -> Field:
    """Decode the shared JSON field config: "Q" or {"Fp": p}."""
    if cfg == "Q":
        return QQ
    if isinstance(cfg, dict) and set(cfg) == {"Fp"}:
        return GF(int(cfg["Fp"]))
    raise FieldError("unrecognized field config: %r" % (cfg,))


def field_to_config(field: Field):
    if isinstance(field, RationalField):
        return "Q"
    if isinstance(field, PrimeField):
        return {"Fp": field.p}
    raise FieldError("unrecognized field: %r" % (field,))
