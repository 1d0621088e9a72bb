"""Flag-transitive point-primitive 2-designs whose automorphism group has socle A_n, 5 <= n <= 10.

Modules: ``perm`` (permutations), ``group`` (permutation groups, coset
actions, primitivity), ``params`` (admissible parameter tuples), ``designs``
(development, verification, isomorphism), ``catalog`` (the reference data),
``classify`` (the elimination pipeline) and ``cli``.
"""

__version__ = "0.1.0"
