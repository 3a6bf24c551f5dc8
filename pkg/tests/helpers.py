import random

from src.kernel import IncidenceComplex


def shuffled(X: IncidenceComplex, seed: int) -> IncidenceComplex:
    """Same complex with every rank renumbered at random."""
    rng = random.Random(seed)
    perms = []
    for k in range(X.dim + 1):
        perm = list(range(X.count(k)))
        rng.shuffle(perm)
        perms.append(perm)
    return X.relabel(perms)
