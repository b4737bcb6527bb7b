"""
Algebra quotients of a pro-system
=================================

Take A = Q[x]/(x^3) and quotient it by V_0 = span(x) at the bottom stage.
M_0 = A / V_0 is a vector space but not an algebra: x^2 survives while x
does not.  The largest algebra quotient compatible with the tower kills the
two-sided ideal generated by x, leaving just Q.
"""

from cartier_kit import catalog
from cartier_kit.exactlin import QQ, SparseMatrix
from cartier_kit.proalg import (ProAlgebraPresentation, presentation_from_filtration,
                                stage_quotient, verify_factorization)

a = catalog.truncated_polynomials(QQ, 3)
zero = SparseMatrix.zeros(QQ, 0, 3)
p = presentation_from_filtration(a, [SparseMatrix.from_dense(QQ, [[0, 1, 0]]), zero, zero])
print("stage ranks:", p.ranks)

q = stage_quotient(p, 0)
print("A_0 has rank", q.quotient_rank)
print("killed in M_0:", [[QQ.format(v) for v in row] for row in q.subspace.to_dense()])
print("product well defined:", q.well_defined)
print("factorization:", verify_factorization(p))

# a tower that is already a tower of algebras loses nothing
ut = catalog.upper_triangular(QQ, 2)
eye = SparseMatrix.identity(QQ, 3)
tower = ProAlgebraPresentation(QQ, [3] * 3, [eye] * 2, [ut.mul] * 2, [ut.unit] * 3)
print("upper triangular quotient rank:", stage_quotient(tower, 0).quotient_rank)
