"""Decoding with a hand-built two-state HMM.

Builds a small model directly from probability tables, decodes an
observation sequence with Viterbi, and compares the best-path probability
with the total probability from the forward and backward recursions.
"""

import numpy as np

from ssph import (Hmm, backward_log_likelihood, forward_log_likelihood,
                  viterbi)

# Two hidden states, three observable symbols. State 0 strongly prefers
# symbol 0, state 1 prefers symbol 2, and both states are sticky.
model = Hmm(
    initial=np.array([0.7, 0.3]),
    transition=np.array([[0.9, 0.1],
                         [0.2, 0.8]]),
    emission=np.array([[0.7, 0.2, 0.1],
                       [0.1, 0.2, 0.7]]),
)

obs = [0, 0, 1, 2, 2, 2, 0]
print(f"observations: {obs}")

result = viterbi(model, obs)
print(f"best path:    {result.path}")
print(f"log P(best path, obs) = {result.log_prob:.6f}")

# The run of 2s pulls the path into state 1, and the trailing 0 pulls it back.
forward = forward_log_likelihood(model, obs)
backward = backward_log_likelihood(model, obs)
print(f"log P(obs) forward    = {forward:.6f}")
print(f"log P(obs) backward   = {backward:.6f}")
print(f"|forward - backward|  = {abs(forward - backward):.2e}")

# Summing over all paths can only add probability, so the forward value
# always dominates the single best path.
assert forward >= result.log_prob
share = np.exp(result.log_prob - forward)
print(f"the best path carries {share:.1%} of the total probability")
