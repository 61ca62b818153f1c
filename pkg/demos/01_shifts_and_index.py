# coding: utf-8

# # Shifts and their index

# The shift S_i has ones on the i-th subdiagonal (superdiagonal for negative i).
# Everything here is exact: entries are Fractions, and infinite matrices are
# stored as a few rational-function diagonals plus a finite patch.

# In[1]:

from rcfm import fredholm as fh
from rcfm.cli.main import render_window
from rcfm.matrix import identity, mul, shift, unit

S = shift
print(render_window(S(1), 4, 4))


# S_{-1} S_1 is the identity, while the other order loses the first coordinate.

# In[2]:

print(mul(S(-1), S(1)) == identity())
print(mul(S(1), S(-1)) == identity() - unit(1, 1))


# A witness packages A with an inverse modulo finite matrices.  The defects
# A A0 - I and A0 A - I are finite and stored explicitly.

# In[3]:

W = fh.witness_verify(S(2), S(-2))
print(W.defect_right.as_dict())
print(W.defect_left.is_zero())


# Kernel and cokernel, each with the certificate that bounds the finite
# computation.

# In[4]:

for i in range(-3, 4):
    W = fh.witness_verify(S(i), S(-i))
    k = fh.kernel_dim(W.a)
    c = fh.cokernel_dim_witnessed(W)
    print(f"S({i:2d})  ker={k.value}  coker={c.value}  index={fh.index(W)}")


# Perturbing by a finite matrix can change kernel and cokernel, never the index.

# In[5]:

W = fh.witness_compose("perturb", fh.witness_verify(S(2), S(-2)), unit(1, 1))
print(fh.kernel_dim(W.a).value, fh.cokernel_dim_witnessed(W).value, fh.index(W))
