# coding: utf-8

# # The matrix P = I - S(-1)

# P has 1 on the diagonal and -1 just above it.  It is injective and every
# truncation is onto, but no banded inverse modulo finite matrices turns up.
# Whether it is Fredholm in the full algebra is left open; the checks below
# only corroborate.

# In[1]:

from rcfm import fredholm as fh
from rcfm.cli.main import render_window
from rcfm.matrix import identity, shift, toeplitz

P = toeplitz([(0, 1), (-1, -1)])
assert P == identity() - shift(-1)
print(render_window(P, 4, 6))


# In[2]:

print("kernel:", fh.kernel_dim(P).to_json())
print("truncated cokernels:", fh.cokernel_truncation_profile(P, 10, 15))


# The symbol is 1 - 1/x, not a monomial.

# In[3]:

res = fh.toeplitz_fredholm_decide(P)
print(type(res).__name__, fh.format_symbol(res.symbol))


# An exact search for a banded inverse with polynomial diagonals of degree <= 2
# and bandwidth 4 comes back inconsistent.

# In[4]:

cert = fh.banded_inverse_refute(P, 4, 2, 6)
print(cert.to_json())


# The same search finds S(-1) for S(1) straight away.

# In[5]:

found = fh.banded_inverse_refute(shift(1), 2, 1, 0)
print(found.inverse == shift(-1))
