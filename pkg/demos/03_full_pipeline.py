"""The whole pipeline in memory: synthesize labeled chains, train the three
class models, predict held-out chains, and score the predictions."""

import numpy as np

from ssph import (confusion, format_report, planted_dataset,
                  predict_structure, train_models)

HALF_WIDTH = 2

chains = planted_dataset(num_chains=120, length=80, seed=5, stay=0.9)
train, held_out = chains[:100], chains[100:]
print(f"{len(train)} training chains, {len(held_out)} held out, "
      f"length {len(chains[0].sequence)}")

models, traces = train_models(train, num_states=2, half_width=HALF_WIDTH,
                              max_iters=10, seed=0)
for label in "HEC":
    trace = traces[label]
    print(f"class {label}: log-likelihood {trace[0]:.1f} -> {trace[-1]:.1f} "
          f"over {len(trace)} iterations")

total = np.zeros((3, 3), dtype=np.int64)
for rec in held_out:
    pred = predict_structure(models, rec.sequence, half_width=HALF_WIDTH)
    total += confusion(pred, rec.labels)

print()
print(format_report(total), end="")

example = held_out[0]
pred = predict_structure(models, example.sequence, half_width=HALF_WIDTH)
print(f"\nfirst held-out chain ({example.id}):")
print(f"  sequence  {example.sequence}")
print(f"  truth     {example.labels}")
print(f"  predicted {pred}")
