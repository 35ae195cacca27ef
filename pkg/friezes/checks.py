"""
Names of the checks recorded by the desk-scale sweeps.
These constants should be used so that the column naming is standardised across sweeps and tables.
"""

CHECK_COUNT = "Count"
"""
Number of dissections (or p-angulations) emitted by the enumerator for one polygon size.
Record level: sweep
"""

CHECK_EXPECTED_COUNT = "Expected Count"
"""
Closed-form count of the enumerated family: Fuss-Catalan for p-angulations, the dissection count otherwise.
Record level: sweep
"""

CHECK_ROUNDTRIP = "Roundtrip"
"""
Number of dissections D with recover_dissection(phi(D)) == D.
Record level: sweep
"""

CHECK_MATRIX_WORD = "Matrix Word"
"""
Number of friezes whose matrix word X_0 ... X_{N-1} equals minus the identity.
Record level: sweep
"""

CHECK_PTOLEMY = "Ptolemy"
"""
Number of friezes passing the full validation (zeros, edge ones, positivity, Ptolemy on every crossing pair).
Record level: sweep
"""

CHECK_INTEGRAL = "Integral"
"""
Number of friezes whose entries all have integer coordinates in the power basis of λ_L.
Record level: sweep
"""

CHECK_ONES = "Ones Are Diagonals"
"""
Number of friezes Φ(D) whose entries at non-neighbour pairs outside the diagonals of D are greater than 1.
Record level: sweep
"""

CHECK_QUIDDITY_SUM = "Quiddity Sum"
"""
Number of friezes Φ(D) with f(α-1, α+1) equal to the sum of λ_p over the cells of D incident with α.
Record level: sweep
"""

CHECK_RECONSTRUCTION = "Reconstruction"
"""
Number of p-angulations D reconstructed from the integers q_α of the type Λ_p quiddity row of Φ(D).
Only recorded for p-angulation sweeps.
Record level: sweep
"""

CHECK_TYPE = "Type"
"""
Number of friezes of a p-angulation that are of type Λ_p.
Only recorded for p-angulation sweeps.
Record level: sweep
"""

CHECK_CLOSED_PATH = "Closed Path"
"""
Number of integer quiddities whose Farey path closes up (product of the ξ matrices is -I).
Only recorded for p-angulation sweeps.
Record level: sweep
"""

CHECK_TURN_COUNT = "Turn Count"
"""
Number of integer quiddities q with q_α equal to the number of cells incident to α in the recovered p-angulation.
Only recorded for p-angulation sweeps.
Record level: sweep
"""

CHECK_FAILED = "Failed"
"""
Number of dissections for which at least one check failed or an exception was raised.
Record level: sweep
"""

CHECK_SECONDS = "Seconds"
"""
Wall clock duration of the sweep.
Record level: sweep
"""

ROUNDTRIP_CHECKS = [CHECK_ROUNDTRIP, CHECK_MATRIX_WORD, CHECK_PTOLEMY, CHECK_INTEGRAL, CHECK_ONES,
                    CHECK_QUIDDITY_SUM]
P_ANGULATION_CHECKS = ROUNDTRIP_CHECKS + [CHECK_TYPE, CHECK_RECONSTRUCTION, CHECK_CLOSED_PATH, CHECK_TURN_COUNT]
