"""Prime field arithmetic and roots of unity.

Field elements are plain int residues in [0, p); a PrimeFieldConfig carries
the modulus and the distinguished primitive 6th root of unity.
"""

from .errors import NoRoot, NotPrime


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _factorize(n):
    fs = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            fs.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        fs.append(n)
    return fs


def smallest_generator(p):
    """Smallest multiplicative generator of GF(p)*."""
    assert is_prime(p)
    qs = _factorize(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise AssertionError("no generator found for p=%d" % p)


def primitive_root_of_unity(p, order=6):
    """g^((p-1)/order) for the smallest generator g of GF(p)*."""
    if not is_prime(p):
        raise NotPrime("%d is not prime" % p)
    if (p - 1) % order != 0:
        raise NoRoot("p=%d has no primitive root of unity of order %d" % (p, order))
    return pow(smallest_generator(p), (p - 1) // order, p)


class PrimeFieldConfig:
    """GF(p) with p == 1 (mod 6); rho is a fixed primitive 6th root of unity."""

    __slots__ = ("p", "rho")

    def __init__(self, p):
        self.p = p
        self.rho = primitive_root_of_unity(p, 6)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        assert a % self.p != 0, "zero has no inverse"
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def pow(self, a, e):
        return pow(a, e, self.p)

    def root_of_unity(self, order):
        """A primitive root of unity of the given order, derived from rho when possible."""
        if order == 6:
            return self.rho
        if 6 % order == 0:
            return pow(self.rho, 6 // order, self.p)
        return primitive_root_of_unity(self.p, order)

    def sqrt_minus_one(self):
        return self.root_of_unity(4)

    def eta(self):
        """Primitive cube root of unity rho^2."""
        return self.rho * self.rho % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeFieldConfig) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeFieldConfig", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p
