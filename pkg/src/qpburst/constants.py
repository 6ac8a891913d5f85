"""Unit conventions and physical constants.

Energies are handled in frequency units (GHz, i.e. E/h), rates in 1/s and
temperatures in kelvin throughout the package.  A single fixed conversion
constant k_B/h ties temperatures to GHz so no silent factor-of-h can creep in.
"""

# k_B / h in GHz per kelvin
KB_GHZ_PER_K = 20.836619

# 1 GHz in Hz; converts GHz-valued rate expressions to 1/s
GHZ = 1.0e9

# Boltzmann constant (J/K), used only by the SI-unit Debye chip model
KB_J_PER_K = 1.380649e-23

# electron-volt (J), for CLI energy parsing
EV_J = 1.602176634e-19

# Euler-Mascheroni constant (small-argument Bessel series)
EULER_GAMMA = 0.5772156649015329
