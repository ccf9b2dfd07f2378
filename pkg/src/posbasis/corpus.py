"""Deterministic corpora of small compact sets for cross-checks and experiments."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .sets import CompactSet, canonicalize, parse_set_expr

# sets whose values are pinned by hand or by the closed forms
PINNED = (
    "[0,1]",
    "[-1,1]",
    "{0} U {1} U {2}",
    "{0} U {1} U {2} U {3}",
    "{0} U [1,2] U {3}",
    "[0,1] U [2,3]",
    "[0,1] U {2} U [3,4]",
    "[0,1] U {2} U {3} U [4,5]",
    "{0} U {1} U [2,3]",
    "[0,1] U {3/2} U [2,3]",
    "{0} U [1,2] U [3,4]",
    "[0,1] U {2}",
)


@dataclass(frozen=True)
class CorpusConfig:
    seed: int = 2024
    count: int = 60
    max_pieces: int = 4
    coord_max: int = 16
    point_prob: float = 0.5
    include_pinned: bool = True


def random_set(rng: random.Random, cfg: CorpusConfig) -> CompactSet:
    k = rng.randint(1, cfg.max_pieces)
    cuts = sorted(rng.sample(range(cfg.coord_max + 1), 2 * k))
    pieces = []
    for i in range(k):
        lo, hi = cuts[2 * i], cuts[2 * i + 1]
        if rng.random() < cfg.point_prob:
            hi = lo
        pieces.append((lo, hi))
    return canonicalize(pieces)


def generate_corpus(cfg: CorpusConfig = CorpusConfig()) -> list[CompactSet]:
    """Pinned sets followed by ``cfg.count`` distinct random ones."""
    rng = random.Random(cfg.seed)
    out = [parse_set_expr(s) for s in PINNED] if cfg.include_pinned else []
    seen = set(out)
    while len(out) < cfg.count + (len(PINNED) if cfg.include_pinned else 0):
        s = random_set(rng, cfg)
        if s not in seen:
            seen.add(s)
            out.append(s)
    return out
