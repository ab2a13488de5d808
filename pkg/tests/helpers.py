"""Random inputs shared by the test modules."""

from fractions import Fraction


def random_zn_basis(rng, n, max_size=3):
    return tuple(rng.randrange(n) for _ in range(rng.randint(1, max_size)))


def random_z_basis(rng, magnitude=20, max_size=3):
    return tuple(rng.choice((-1, 1)) * rng.randint(1, magnitude) for _ in range(rng.randint(1, max_size)))


def random_q_basis(rng, max_size=3):
    return tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(rng.randint(1, max_size)))


def random_poly(rng, ring, degree=3, max_terms=4, coeffs=3):
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        dx = rng.randint(0, degree)
        dy = rng.randint(0, degree - dx)
        c = rng.randint(-coeffs, coeffs)
        if c:
            terms.append((Fraction(c), (dx, dy)))
    return ring.from_terms(terms)


def random_poly_system(rng, ring, max_gens=3):
    while True:
        system = tuple(p for p in (random_poly(rng, ring) for _ in range(rng.randint(1, max_gens))) if p)
        if system:
            return system
