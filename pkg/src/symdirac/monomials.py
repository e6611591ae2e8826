"""Multi-index enumeration helpers (deterministic lexicographic order)."""

from math import comb


def compositions(total, parts):
    """All tuples of `parts` non-negative ints summing to `total`, lex order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def monomials_upto(degree, parts):
    """All exponent tuples with total degree <= degree, by degree then lex."""
    for d in range(degree + 1):
        yield from compositions(d, parts)


def count_monomials(degree, parts):
    """Number of monomials of exact total degree `degree` in `parts` variables."""
    return comb(degree + parts - 1, degree)
