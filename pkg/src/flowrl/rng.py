"""Counter-based random stream derivation.

Every random draw in the package flows from one root seed. A stream is
addressed by a path of non-negative integers (e.g. update index, group
index, episode index); the path is fed to numpy's SeedSequence as the
spawn key, which is a counter-based splitting scheme: the derived stream
depends only on (root_seed, path), never on the order in which streams
are created. That makes parallel rollouts reproducible regardless of
worker scheduling.
"""

from __future__ import annotations

import numpy as np

# Fixed labels so independently-derived subsystems never collide.
STREAM_INIT = 0
STREAM_ROLLOUT = 1
STREAM_REWARD = 2
STREAM_DATA = 3
STREAM_EVAL = 4
STREAM_TRAIN = 5


def derive(root_seed: int, *path: int) -> np.random.Generator:
    """Return the generator addressed by ``path`` under ``root_seed``."""
    ss = np.random.SeedSequence(entropy=root_seed, spawn_key=tuple(path))
    return np.random.Generator(np.random.PCG64(ss))


def derive_seed(root_seed: int, *path: int) -> int:
    """Collapse a derived stream to a single 63-bit child seed."""
    ss = np.random.SeedSequence(entropy=root_seed, spawn_key=tuple(path))
    return int(ss.generate_state(1, dtype=np.uint64)[0] >> 1)
