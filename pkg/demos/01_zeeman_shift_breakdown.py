"""
Zeeman shift breakdowns across regimes
======================================

Computes the first-order energy shift of the hydrogen 2p (j = 3/2,
m_j = 1/2) level at B = 1 T in all four regimes and prints every addend.
The deformation bracket terms are ~45 orders of magnitude below the
leading shift at the physical Planck-scale deformation, which is exactly
why the breakdown reports them as separate terms instead of letting them
vanish inside a sum.
"""

from rgupzeeman import Branch, QuantumState, Regime, convert_energy, make_params
from rgupzeeman.spectrum import energy_shift_B

state = QuantumState(n=2, l=1, branch=Branch.PLUS, mj=0.5)

# Planck-scale deformation: epsilon = 1, gamma = 1/(M_Pl c)
params = make_params(B=1e4, epsilon=1.0, gamma_mode="planck")
print(f"state: n=2 l=1 j=3/2 mj=+1/2, B = 1 T")
print(f"deformation scale eps*gamma^2*(mc)^2 = {params.correction_scale:.4e}\n")

for regime in Regime:
    breakdown = energy_shift_B(state, params, regime)
    print(f"--- {regime.value.upper()}")
    for term in breakdown.terms:
        ev = convert_energy(term.value_erg, "erg", "eV")
        note = "  (field-independent level shift)" if "non-magnetic" in term.tags else ""
        print(f"  {term.label:<18} {ev:+.6e} eV   {term.expression}{note}")
    print(f"  {'TOTAL':<18} {convert_energy(breakdown.total_erg, 'erg', 'eV'):+.6e} eV\n")

# Switching the deformation off collapses RGUP onto REL term for term.
undeformed = make_params(B=1e4, epsilon=1.0, gamma_mode="explicit", gamma=0.0)
rgup = energy_shift_B(state, undeformed, Regime.RGUP)
rel = energy_shift_B(state, undeformed, Regime.REL)
print("gamma = 0 collapse: RGUP term labels", rgup.labels())
print("                    REL  term labels", rel.labels())
print("identical values:",
      all(a.value_erg == b.value_erg for a, b in zip(rgup.terms, rel.terms)))
