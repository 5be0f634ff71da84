"""Asymptotics of Plancherel-type partition sums.

Library layers, bottom up:

* :mod:`plancherel.numerics` — multiprecision scalars, exact rationals,
  special functions, truncated series (Laurent and Taylor), Newton solvers.
* :mod:`plancherel.partitions` — exact partition combinatorics: enumeration,
  Plancherel and q-deformed weights, Casimir invariants.
* :mod:`plancherel.oracle` — exact brute-force evaluation of the partition
  sums; ground truth for everything asymptotic.
* :mod:`plancherel.curve` — spectral-curve solvers for the two one-cut
  families and the loop-equation diagnostic.
* :mod:`plancherel.toprec` — topological recursion: correlators, free
  energies, resolvent corrections.
* :mod:`plancherel.observables` — limit shapes, density corrections,
  Gromov-Witten tables, mirror-curve polynomials.
* :mod:`plancherel.cli` — reproducible command-line runs.

All public values are immutable after construction and all operations are
pure functions of their inputs plus the working precision, so concurrent use
is safe as long as each thread applies the same precision.
"""

__version__ = "0.1.0"
