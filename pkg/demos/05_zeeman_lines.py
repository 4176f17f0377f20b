"""
Zeeman lines of the 2p -> 1s manifold
=====================================

Selection rules delta l = +-1 and delta m_j in {-1, 0, +1} allow six
lines between j = 3/2 and j = 1/2.  The deformation never changes the
line count, only the shift values; field-independent deformation level
shifts are kept out of the line shift and reported as a separate offset,
so every line shift vanishes at B = 0.
"""

from rgupzeeman import Branch, Regime, convert_energy, make_params, zeeman_lines
from rgupzeeman.spectrum import level_states

upper = level_states(2, 1, Branch.PLUS)   # 2p, j = 3/2
lower = level_states(1, 0, Branch.PLUS)   # 1s, j = 1/2
params = make_params(B=1e4, epsilon=1.0, gamma_mode="planck")

for regime in (Regime.LANDE, Regime.RGUP):
    lines = zeeman_lines(upper, lower, params, regime)
    print(f"--- {regime.value.upper()}: {len(lines)} lines")
    for line in lines:
        shift_ev = convert_energy(line.shift_erg, "erg", "eV")
        offset_ev = convert_energy(line.level_offset_erg, "erg", "eV")
        print(f"  mj {line.upper.mj:+.1f} -> {line.lower.mj:+.1f}  "
              f"{line.polarization:<6} shift {shift_ev:+.6e} eV  "
              f"offset {offset_ev:+.3e} eV")
    print()

counts = {r.value: len(zeeman_lines(upper, lower, params, r)) for r in Regime}
print("line count per regime:", counts)

quiet = make_params(B=0.0, epsilon=1.0, gamma_mode="planck")
lines0 = zeeman_lines(upper, lower, quiet, Regime.RGUP)
print("all line shifts zero at B = 0:",
      all(line.shift_erg == 0.0 for line in lines0))
