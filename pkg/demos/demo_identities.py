"""The three matrix identities, checked as exact polynomial equalities.

For the monic triangle family this demo evaluates, term by term,

    x_j P_n        = A P_{n+1} + B P_n + C P_{n-1}          (recurrence)
    phi_j dP_n/dx_j = W P_{n+1} + S P_n + T P_{n-1}          (structure)
    P_n            = V dP_{n+1}/dx_j + Y dP_n/dx_j + Z dP_{n-1}/dx_j

and compares the closed-form entry tables against the matrices recovered
from the polynomials themselves.

Run:  python demos/demo_identities.py
"""

from opde import (AppellParams, appell_pde, apply_matrix, build_monic,
                  classify_phi, derivative_representation, general_ttrr,
                  golden_matrices, structure_matrices, X)

params = AppellParams(2, 3)
fam = build_monic(appell_pde(params), 6)
case = classify_phi(fam.pde)[0]
print("weight-shift factors:", case.phi10, "|", case.phi01)

n = 4
t = general_ttrr(fam, n)
lhs = fam.vector(n).scale(X)
rhs = (apply_matrix(t.a1, fam.vector(n + 1)) + apply_matrix(t.b1, fam.vector(n))
       + apply_matrix(t.c1, fam.vector(n - 1)))
print(f"\nrecurrence identity at degree {n} (x axis):", lhs == rhs)
print("recurrence B matches its entry table:",
      t.b1 == golden_matrices(params, n, "B1"))
print("recurrence C matches its entry table:",
      t.c1 == golden_matrices(params, n, "C1"))

st = structure_matrices(fam, case.phi10, case.phi01, n)
lhs = fam.vector(n).diff(2).scale(case.phi01)
rhs = (apply_matrix(st.w2, fam.vector(n + 1)) + apply_matrix(st.s2, fam.vector(n))
       + apply_matrix(st.t2, fam.vector(n - 1)))
print(f"\nstructure identity at degree {n} (y axis):", lhs == rhs)
print("structure W matches its entry table:",
      st.w2 == golden_matrices(params, n, "W2"))
print("structure T matches its entry table:",
      st.t2 == golden_matrices(params, n, "T2"))

dr = derivative_representation(fam, n, 1)
rhs = (apply_matrix(dr.v, fam.vector(n + 1).diff(1))
       + apply_matrix(dr.y, fam.vector(n).diff(1))
       + apply_matrix(dr.z, fam.vector(n - 1).diff(1)))
print(f"\nderivative representation at degree {n} (x axis):",
      rhs == fam.vector(n))
print("compact V is the diagonal of reciprocals:",
      dr.v_compact == golden_matrices(params, n, "V1"))

# perturbing any single recurrence entry breaks the identity: uniqueness
bad = t.b1.tolist()
bad[0][0] += 1
from opde import RationalMatrix
rhs_bad = (apply_matrix(t.a1, fam.vector(n + 1))
           + apply_matrix(RationalMatrix(bad), fam.vector(n))
           + apply_matrix(t.c1, fam.vector(n - 1)))
print("\nperturbed recurrence fails, as it must:",
      fam.vector(n).scale(X) != rhs_bad)
