"""
Watching images shrink
======================

A pro-system F_0 <- F_1 <- ... is Mittag-Leffler when, for each stage, the
images of deeper stages eventually stop shrinking.  Verdicts here only speak
about the stages inside the chosen window.
"""

from cartier_kit.exactlin import QQ_T, ZZ, SparseMatrix
from cartier_kit.modsys import IndSystem, ProSystem, dualize_ind, ml_verdict

t = QQ_T.coerce([0, 1])

# Q[t] <-t- Q[t] <-t- ...: stage 0 sees (t), (t^2), (t^3), ... forever
tail = ProSystem(QQ_T, [1], [], SparseMatrix(QQ_T, 1, 1, {(0, 0): t}))
for st in ml_verdict(tail, 6).stages:
    print(st.alpha, st.status)

# surjective maps stabilize one step up
onto = ProSystem(ZZ, [1, 2, 3], [SparseMatrix.from_dense(ZZ, [[1, 4]]),
                                 SparseMatrix.from_dense(ZZ, [[1, 0, 2], [0, 1, 5]])])
print([st.status for st in ml_verdict(onto, 2).stages])

# a window only sees what it contains: two identities and then a doubling
late = ProSystem(ZZ, [1, 1, 1, 1], [SparseMatrix.identity(ZZ, 1)] * 2 + [SparseMatrix.from_dense(ZZ, [[2]])])
print("window 2:", ml_verdict(late, 2).stage(0).status)
print("window 3:", ml_verdict(late, 3).stage(0).status)

# ind-systems become pro-systems by transposing each map
ind = IndSystem(ZZ, [1, 2], [SparseMatrix.from_dense(ZZ, [[1], [0]])])
print(dualize_ind(ind).transitions[0].to_dense())
