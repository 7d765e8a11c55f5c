"""Shared test utilities: random stochastic arrays built straight from numpy
draws (independent of the package's own model generator) and the stub model
sets used by the predictor fixtures."""

import numpy as np

from ssph import ClassModelSet, Hmm


def random_stochastic(rng, shape):
    u = rng.random(shape) + 1e-3
    return u / u.sum(axis=-1, keepdims=True)


def random_model(rng, num_states, alphabet_size):
    return Hmm(
        initial=random_stochastic(rng, num_states),
        transition=random_stochastic(rng, (num_states, num_states)),
        emission=random_stochastic(rng, (num_states, alphabet_size)),
    )


def small_cases(count, seed, max_states=3, max_symbols=5, max_length=8):
    """Randomized (model, observations) pairs small enough for the
    enumeration oracle."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(1, max_states + 1))
        m = int(rng.integers(2, max_symbols + 1))
        length = int(rng.integers(1, max_length + 1))
        model = random_model(rng, n, m)
        obs = rng.integers(0, m, size=length).tolist()
        yield model, obs


def single_state_profile(group, in_weight=3.0, out_weight=0.25):
    """One-state model whose emission favors the symbol indices in ``group``.
    With a single state the window score is just the product of per-symbol
    emissions, which keeps hand verification honest."""
    weights = np.full(21, out_weight)
    weights[np.asarray(group)] = in_weight
    return Hmm(initial=np.array([1.0]), transition=np.array([[1.0]]),
               emission=(weights / weights.sum())[None, :])


def stub_model_set():
    """Three single-state models over disjoint thirds of the alphabet."""
    return ClassModelSet(helix=single_state_profile(np.arange(0, 7)),
                         strand=single_state_profile(np.arange(7, 14)),
                         coil=single_state_profile(np.arange(14, 21)))
