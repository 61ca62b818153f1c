# coding: utf-8

# # Index laws on random witnesses

# Random witnesses come from scaled shifts and the T generators, followed by
# finite perturbations and conjugations.  Every law is checked exactly.

# In[1]:

import random
from collections import Counter

from rcfm.fredholm import index, witness_compose
from rcfm.generators import random_finite, random_hyper, random_invertible, random_witness

rng = random.Random(2024)
tally = Counter()

for _ in range(100):
    a, b = random_witness(rng, depth=2), random_witness(rng, depth=2)
    tally["product"] += index(witness_compose("mul", a, b)) == index(a) + index(b)
    tally["inverse"] += index(witness_compose("invert", a)) == -index(a)
    tally["perturb"] += index(witness_compose("perturb", a, random_finite(rng))) == index(a)
    tally["hyper"] += index(witness_compose("conjugate", a, random_hyper(rng))) == index(a)
    tally["elementary"] += index(witness_compose("conjugate", a, *random_invertible(rng))) == index(a)

print(dict(tally))


# Distribution of the indices seen.

# In[2]:

print(sorted(Counter(index(random_witness(rng)) for _ in range(200)).items()))
