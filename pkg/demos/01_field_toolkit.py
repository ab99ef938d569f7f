"""A walk through the exact arithmetic layer.

Prime fields hold plain ints; extensions hold coordinate tuples in the
polynomial basis of a deterministic irreducible modulus.  Run with
`python3 demos/01_field_toolkit.py`.
"""

from udlrc import ExtField, Matrix, PrimeField, base_rank, find_irreducible

# --- prime field -----------------------------------------------------------
f5 = PrimeField(5)
print("GF(5):  3 * 4 =", f5.mul(3, 4), "   inverse of 2 =", f5.inv(2))

# --- choosing a modulus ----------------------------------------------------
# The modulus for each (q, t) is the first irreducible in a fixed scan order,
# so codes built anywhere serialize identically.
for q, t in [(2, 3), (5, 2), (5, 5)]:
    print(f"modulus for GF({q}^{t}):", find_irreducible(q, t))

# --- extension arithmetic ---------------------------------------------------
f8 = ExtField(PrimeField(2), 3)
a = f8.alpha
print("\nGF(8) with modulus x^3 + x + 1")
print("alpha^3       =", f8.pow(a, 3), " (equals alpha + 1)")
print("alpha^(2^1)   =", f8.frobenius(a), " (the q-power map = squaring)")
print("1/alpha       =", f8.inv(a), " check:", f8.mul(a, f8.inv(a)))

# --- rank over the base field ----------------------------------------------
# Coordinates double as vectors over GF(2): 1, alpha, 1 + alpha only span
# a plane, so their rank is 2.
pts = [f8.one, a, f8.add(f8.one, a)]
print("\nbase-field rank of {1, alpha, 1 + alpha}:", base_rank(f8, pts))

# --- exact linear algebra ---------------------------------------------------
m = Matrix(f5, [[2, 0], [0, 3]])
print("\nsolve diag(2, 3) x = (4, 4) over GF(5):", m.solve([4, 4]))
moore = Matrix(f8, [[f8.one, f8.one], [a, f8.frobenius(a)]])
print("rank of a 2x2 power matrix over GF(8):", moore.rank())
