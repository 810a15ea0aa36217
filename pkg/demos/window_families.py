"""What changes for window (unit-interval) column families.

Two overlapping windows on a 2x5 matrix: the index set keeps only tuples
contained in a single window.  The fiber machinery still certifies -- the
straightening binomials are a Groebner basis with quadratic squarefree
leads, and the generators form a subalgebra basis -- but two properties
that hold on ladders genuinely fail, each with an explicit witness:

  * the tuple set is not exchange-closed (the bounded checker finds the
    exact position no factor can exchange into), and
  * the minors are not a Groebner basis under order changes (a random
    lex probe finds an S-pair that does not reduce).
"""

from reesdet.cli import _sagbi_inputs
from reesdet.determinantal import MatrixShape, UnitIntervalSpec, instance
from reesdet.relations import plucker_initial
from reesdet.verify import (
    certify_groebner,
    certify_minors_groebner,
    certify_sagbi,
    check_l_exchange,
    fiber_kernel_oracle,
)

spec = UnitIntervalSpec(MatrixShape(2, 5), intervals=[(1, 3), (2, 5)])
inst = instance(spec, r=2)
print(f"instance: {inst.describe()}")
print(f"tuples: {inst.tuples}")
print("(1,4) and (1,5) span both windows, so they are out\n")

fam = plucker_initial(spec, r=2)
cert = certify_groebner(
    fam, kernel_oracle=fiber_kernel_oracle(inst=inst, method="elimination")
)
print(f"fiber basis ({len(fam)} binomials): {cert.verdict.upper()}")
quads = all(p.total_degree() == 2 for p in fam)
sqfree = all(
    all(e <= 1 for e in p.leading_monomial(inst.sigma)) for p in fam
)
print(f"  all quadratic: {quads}; all leading terms squarefree: {sqfree}\n")

gens, toric = _sagbi_inputs(inst, "fiber")
sag = certify_sagbi(gens, toric, inst.tau_prime, degree_bound=4, inst=inst)
print(f"fiber subalgebra basis: {sag.verdict.upper()}\n")

ex = check_l_exchange([list(inst.tuples) for _ in range(2)], gamma_bound=2)
print(f"exchange property: {ex.verdict.upper()}")
print(f"  witness: {ex.witness}\n")

mg = certify_minors_groebner(spec, probes=5)
print(f"minors under random lex probes: {mg.verdict.upper()}")
print(f"  falsifying order: {mg.witness['order']}")
print(f"  irreducible S-pair remainder: {mg.witness['remainder']}")
