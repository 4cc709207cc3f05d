"""Instantiate the six headline families at their smallest admissible q.

    python scripts/intro_examples.py

Prints every [[n, n-2k, k+1]]_q code for 1 <= k <= k_max together with the
routing used to solve for the multipliers.
"""

from __future__ import annotations

import sys

from qmds.constructions import ConstructionSpec, build
from qmds.quantum import hermitian_to_quantum, singleton_defect

EXAMPLES = [
    ConstructionSpec("T32", 11, 5, 4, 8),
    ConstructionSpec("T43i", 4, 2, 2, 2),
    ConstructionSpec("T43ii", 13, 3, 5, 11, 2),
    ConstructionSpec("T53i", 3, 2, 3, 2),
    ConstructionSpec("T53ii", 5, 3, 4, 4, 1),
    ConstructionSpec("T63", 7, 4, 7, 5, 3),
]


def main() -> int:
    bad = 0
    for top in EXAMPLES:
        print(f"{top.family} q={top.q}: n={top.n}, k <= {top.k_max}")
        for k in range(1, top.k_max + 1):
            cert = build(top.with_k(k), check=False)
            qp = hermitian_to_quantum(top.n, k, q=top.q, certificate=cert)
            flag = "" if cert.accepted else "  FAILED"
            bad += not cert.accepted
            sampled = " (sampled MDS)" if cert.mds_probabilistic else ""
            print(f"  {qp}  defect {singleton_defect(qp)}  via {cert.routing}{sampled}{flag}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
