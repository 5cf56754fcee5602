"""Exact Walsh spectra of small ternary functions.

Every spectral value lives in Z[w] (w a primitive cube root of unity)
and is computed with integer arithmetic only, so bentness is an exact
equality test: a function on F_3^n is bent when every value has squared
norm 3^n.
"""

from tribent import (
    TernaryFunction,
    bent_profile,
    decode_coefficient,
    is_plateaued,
    walsh_point,
    walsh_spectrum,
)

# The one-variable square x -> x^2 has table (0, 1, 1).
square = TernaryFunction(1, [0, 1, 1])
w0 = walsh_point(square, 0)
print("transform of x^2 at 0:", w0, " squared norm:", w0.squared_norm())

# Its whole spectrum has norm 3 everywhere: bent, and the phase of each
# value is the dual function.
profile = bent_profile(square)
print("type:", profile.type.value, " regularity:", profile.regularity.value)
print("dual table:", profile.dual.table.tolist())

# decode_coefficient splits one value into (sign, dual value); for odd n
# the sign stands for +-i.
print("decoded value at 0:", decode_coefficient(w0, 1))

# A linear function is maximally non-bent: its spectrum is a single
# spike, which the plateau order reports.
linear = TernaryFunction(1, [0, 1, 2])
spectrum = walsh_spectrum(linear)
print("\nlinear spectrum:", [str(spectrum.value(a)) for a in range(3)])
print("plateau order of a constant:", is_plateaued(TernaryFunction.constant(1, 0)))
print("plateau order of x1^2 viewed on F_3^2:",
      is_plateaued(TernaryFunction.from_callable(2, lambda c: c[0] ** 2)))

# Parseval's identity is exact for every function, bent or not.
print("\nsum of squared norms for the linear function:",
      spectrum.parseval_total(), "= 3^(2n) =", 3 ** (2 * linear.n))
assert spectrum.parseval_total() == 3 ** (2 * linear.n)
