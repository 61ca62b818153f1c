# coding: utf-8

# # Embedding <x, y | xy = 1>

# Words reduce to y^a x^b by deleting "xy".  Three matrix images of x and y:
#   Phi: S(-1), S(1)
#   Psi: T(-1), T(1)
#   Xi:  S(-2), S(2)

# In[1]:

from rcfm.cli.main import render_window
from rcfm.exact import ONE, J
from rcfm.matrix import HyperDiagonal
from rcfm.tj import (PHI, PSI, XI, equivalence_check, index_obstruction,
                     injectivity_check, tj_embed, tj_normalize)

print(tj_normalize("xxyxyy"), "|", tj_normalize("yxxyx"))


# In[2]:

print(render_window(PSI.image_y, 5, 5))


# The idempotent 1 - yx lands on the projection onto e_1 under Phi.

# In[3]:

e = tj_normalize([(1, ""), (-1, "yx")])
print(render_window(tj_embed(PHI, e), 3, 3))


# All three embeddings are injective on monomials of low degree.

# In[4]:

for E, D in ((PHI, 4), (PSI, 3), (XI, 3)):
    print(E.name, injectivity_check(E, D))


# Diag(n!) conjugates Phi into Psi; its ratio u_{j+1}/u_j is j + 1.

# In[5]:

print(equivalence_check(PHI, PSI, HyperDiagonal(1, J + ONE)))


# Xi cannot be conjugate to either: the image of x has index 2, not 1.

# In[6]:

print(index_obstruction(PHI, XI))
print(index_obstruction(PHI, PSI))
