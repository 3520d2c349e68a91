"""
Ordinals, infinite families and the classes Lambda_T and Upsilon
================================================================

Cantor-normal-form arithmetic, the closed-form values for infinite
families, and membership tests for CR-ordinal classes.
"""

from copwin.ordinal import OMEGA, add, compare, parse, split
from copwin.symbolic import (
    eta_of_S,
    eta_tomega_vertex,
    in_lambda_T,
    in_upsilon,
    rho_of_S,
    rho_polat_generalized,
    tomega_report,
)

# Addition is not commutative: finite parts on the left are absorbed.
print("1 + w =", add(1, OMEGA), "   w + 1 =", add(OMEGA, 1))
print("w + w =", OMEGA + OMEGA)
print("(w+3) + w =", parse("w+3") + OMEGA)
print("compare(w^2, w*1000):", compare(parse("w^2"), parse("w*1000")).name)
print("split(w*2+7) =", split(parse("w*2+7")))

# The spider with one leg of every finite length.
r = tomega_report()
print("\nT_omega: eta =", r.eta, " rho =", r.rho, " theta:", r.theta_description)
for v in ["root", (5, 1), (5, 3)]:
    print(f"  eta{v} =", eta_tomega_vertex(v))

# The S family indexed by ordinals.
print("\nalpha, eta(S_alpha), rho(S_alpha)")
for text in ["2", "4", "w", "w+1", "w+2", "w*2", "w^2+1"]:
    a = parse(text)
    print(f"  {text:<6} {eta_of_S(a)!s:<8} {rho_of_S(a)}")

print("\nPolat-type graphs: (i, j) -> rho")
for i, j in [(1, 1), (3, 1), (1, 2), (2, 3)]:
    print(f"  ({i}, {j}) -> {rho_polat_generalized(i, j)}")

print("\nordinal     in_lambda_T  in_upsilon")
for text in ["5", "w", "w+1", "w+2", "w*2", "w*2+1", "w*2+3", "w^2", "w^2+w"]:
    a = parse(text)
    print(f"  {text:<9} {in_lambda_T(a)!s:<12} {in_upsilon(a)}")
