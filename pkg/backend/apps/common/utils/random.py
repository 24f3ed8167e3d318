# Standard library imports
import hashlib

# Third-party imports
import numpy as np


# Build a named, seeded generator
def make_generator(seed: int, stream: str = "default") -> np.random.Generator:
    """Return a counter-based generator for one named random stream.

    The generator is a ``Philox`` bit generator keyed by a ``SeedSequence`` built
    from the experiment seed and a stable digest of the stream name. Distinct
    streams of one experiment never share draws, and the same seed and name
    always reproduce the same draws.

    Args:
        seed (int): Experiment seed, 0 <= seed < 2**64.
        stream (str): Name of the consumer, e.g. ``"invert.samples"``.

    Returns:
        np.random.Generator: The seeded generator.
    """

    # Stable 64 bit digest of the stream name
    digest = int.from_bytes(hashlib.sha256(stream.encode("utf-8")).digest()[:8], "little")

    # Combine seed and stream into one seed sequence
    sequence = np.random.SeedSequence([int(seed), digest])

    # Return the counter-based generator
    return np.random.Generator(np.random.Philox(sequence))


# Derive an integer seed for libraries taking plain seeds
def derive_seed(seed: int, stream: str) -> int:
    """Derive a 32 bit integer seed for a named stream.

    Args:
        seed (int): Experiment seed.
        stream (str): Name of the consumer.

    Returns:
        int: A seed usable by scipy's quasi-Monte Carlo engines.
    """

    # Draw one integer from the named stream
    return int(make_generator(seed, stream).integers(0, 2**32 - 1))
