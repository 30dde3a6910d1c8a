import random

from meanderkit import MeanderType


def random_composition(rng: random.Random, n: int) -> tuple[int, ...]:
    """Uniform composition of n via a random gap subset."""
    mask = rng.getrandbits(n - 1) if n > 1 else 0
    parts = []
    run = 1
    for bit in range(n - 1):
        if mask >> bit & 1:
            parts.append(run)
            run = 1
        else:
            run += 1
    parts.append(run)
    return tuple(parts)


def random_meander(rng: random.Random, n_max: int) -> MeanderType:
    n = rng.randint(1, n_max)
    return MeanderType(random_composition(rng, n), random_composition(rng, n))
