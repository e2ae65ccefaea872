"""Counter-based random streams addressed by lattice position.

Every random quantity in a simulated environment is drawn from a Philox
stream whose 128-bit key encodes (per-sample word, node code).  The node
code packs what the stream feeds (site block, refinement node, bond block),
the recursion depth, and the edge index at that depth.  Streams can
therefore be opened in any order, by any worker, and always produce the
same values: the environment is a pure function of (master seed, sample
index, lattice address) and is never materialized globally.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1

# Stream kinds (4 bits).
KIND_SITE_BLOCK = 1  # bulk per-branch site sums for a whole subtree
KIND_SITE_NODE = 2  # per-branch site sums for a single refinement node
KIND_BOND_BLOCK = 3  # leaf bond values for a whole subtree

_MAX_DEPTH = 1 << 8
_MAX_INDEX = 1 << 52


def splitmix64(x: int) -> int:
    """One round of the splitmix64 mixer (bijective on 64-bit words)."""
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def sample_word(master_seed: int, sample_index: int) -> int:
    """64-bit per-sample key word derived from (master seed, sample index)."""
    return splitmix64(splitmix64(master_seed & _MASK64) ^ splitmix64(sample_index & _MASK64))


def node_code(kind: int, depth: int, index: int) -> int:
    """Pack (kind, depth, edge index) into the low 64 bits of a Philox key."""
    if not 0 <= depth < _MAX_DEPTH:
        raise ValueError(f"depth {depth} out of range")
    if not 0 <= index < _MAX_INDEX:
        raise ValueError(f"edge index {index} too large for stream addressing")
    return (kind << 60) | (depth << 52) | index


def node_stream(word: int, kind: int, depth: int, index: int) -> np.random.Generator:
    """Open the keyed Philox stream for one addressed node."""
    key = (word << 64) | node_code(kind, depth, index)
    return np.random.Generator(np.random.Philox(key=key))
