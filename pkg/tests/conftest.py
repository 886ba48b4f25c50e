import numpy as np
import pytest

from amnocr import LabeledPattern, Pattern, build_model

GLYPH_WIDTH, GLYPH_HEIGHT = 31, 39
ALPHABET = [chr(c) for c in range(ord("A"), ord("Z") + 1)] + [
    chr(c) for c in range(ord("a"), ord("z") + 1)
]


@pytest.fixture(scope="session")
def glyph_store_52():
    """Synthetic 52-glyph alphabet at the reference 31x39 geometry."""
    rng = np.random.default_rng(20120901)
    entries = []
    for label in ALPHABET:
        cells = rng.choice(np.array([-1, 1], dtype=np.int8), size=GLYPH_WIDTH * GLYPH_HEIGHT)
        entries.append(LabeledPattern(label, Pattern(GLYPH_WIDTH, GLYPH_HEIGHT, cells)))
    return entries


@pytest.fixture(scope="session")
def glyph_model_52(glyph_store_52):
    return build_model(glyph_store_52)
