'''Stateless derivation of independent random streams from one master seed
'''

import numpy as np

SEED_MASK = (1 << 64) - 1


def seedSequence(masterSeed, *key):
    """SeedSequence for the stream labelled by key (e.g. (rep, attempt))"""
    return np.random.SeedSequence(int(masterSeed) & SEED_MASK, spawn_key=tuple(int(k) for k in key))


def streamFor(masterSeed, *key):
    return np.random.default_rng(seedSequence(masterSeed, *key))


def modelStream(masterSeed):
    """Stream for building random Gamma and U; the empty key is never used by replications"""
    return streamFor(masterSeed)


def repStream(masterSeed, rep, attempt=0):
    return streamFor(masterSeed, rep, attempt)
